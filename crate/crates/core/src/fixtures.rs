//! Standard algebras and modules used throughout the tests and the CLI: the
//! five-dimensional algebra on two vertices with one arrow back and two
//! arrows forth (all length-two paths zero), the Kronecker algebra, the
//! monomial algebras `k<x1,x2>/(x1^m, x2^n, x1 x2)` and truncated
//! polynomial rings.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{BoundAlgebra, Relation};
use crate::exactlin::{Rat, RatMatrix};
use crate::quiver::Quiver;
use crate::repmod::Representation;

/// A module together with a display name.
pub type NamedModule = (String, Representation);

/// Vertices "1", "2"; `alpha: 2 -> 1`, `beta, gamma: 1 -> 2`; every path of
/// length two is zero. Basis: e1, e2, alpha, beta, gamma.
pub fn g2_quiver() -> Quiver {
    let mut q = Quiver::new(["1", "2"]).expect("distinct names");
    q.add_arrow("alpha", "2", "1").expect("valid arrow");
    q.add_arrow("beta", "1", "2").expect("valid arrow");
    q.add_arrow("gamma", "1", "2").expect("valid arrow");
    q
}

pub fn g2_algebra() -> BoundAlgebra {
    let q = g2_quiver();
    let rels = [["beta", "alpha"], ["gamma", "alpha"], ["alpha", "beta"], ["alpha", "gamma"]]
        .iter()
        .map(|w| Relation::monomial(&q, w).expect("known labels"))
        .collect();
    BoundAlgebra::new(q, rels).expect("admissible relations")
}

fn scalar(x: Rat) -> RatMatrix {
    RatMatrix::from_fn(1, 1, |_, _| x.clone())
}

const ALPHA: usize = 0;
const BETA: usize = 1;
const GAMMA: usize = 2;

fn g2_module(a: &Arc<BoundAlgebra>, d1: usize, d2: usize, alpha: RatMatrix, beta: RatMatrix, gamma: RatMatrix) -> Representation {
    let mut maps = vec![RatMatrix::zeros(0, 0); 3];
    maps[ALPHA] = alpha;
    maps[BETA] = beta;
    maps[GAMMA] = gamma;
    Representation::new(a.clone(), vec![d1, d2], maps).expect("relations hold")
}

/// The indecomposable projective at vertex 2: `e2, alpha`.
pub fn g2_p2(a: &Arc<BoundAlgebra>) -> Representation {
    let one = RatMatrix::identity(1);
    g2_module(a, 1, 1, one, RatMatrix::zeros(1, 1), RatMatrix::zeros(1, 1))
}

/// Dimension vector (1,1) with `beta = 1`, `gamma = lambda`; `None` stands
/// for lambda = infinity, i.e. `beta = 0`, `gamma = 1`.
pub fn g2_x1(a: &Arc<BoundAlgebra>, lambda: Option<Rat>) -> Representation {
    let (b, c) = match lambda {
        Some(l) => (Rat::one(), l),
        None => (Rat::zero(), Rat::one()),
    };
    g2_module(a, 1, 1, RatMatrix::zeros(1, 1), scalar(b), scalar(c))
}

fn jordan_block(n: usize, lambda: &Rat) -> RatMatrix {
    RatMatrix::from_fn(n, n, |i, j| {
        if i == j {
            lambda.clone()
        } else if j == i + 1 {
            Rat::one()
        } else {
            Rat::zero()
        }
    })
}

/// Dimension vector (n,n), `beta = I`, `gamma` a Jordan block; `None` swaps
/// the roles (`beta` nilpotent Jordan block, `gamma = I`). Bricks only for
/// `n = 1`.
pub fn g2_xn(a: &Arc<BoundAlgebra>, n: usize, lambda: Option<Rat>) -> Representation {
    let (b, c) = match lambda {
        Some(l) => (RatMatrix::identity(n), jordan_block(n, &l)),
        None => (jordan_block(n, &Rat::zero()), RatMatrix::identity(n)),
    };
    g2_module(a, n, n, RatMatrix::zeros(n, n), b, c)
}

/// `[I_n; 0]` and `[0; I_n]`, both `(n+1) x n`.
fn stacked_pair(n: usize) -> (RatMatrix, RatMatrix) {
    let top = RatMatrix::from_fn(n + 1, n, |i, j| if i == j { Rat::one() } else { Rat::zero() });
    let bottom = RatMatrix::from_fn(n + 1, n, |i, j| if i == j + 1 { Rat::one() } else { Rat::zero() });
    (top, bottom)
}

/// Dimension vector (n, n+1); `n = 0` is the simple at vertex 2.
pub fn g2_s2n(a: &Arc<BoundAlgebra>, n: usize) -> Representation {
    let (b, c) = stacked_pair(n);
    g2_module(a, n, n + 1, RatMatrix::zeros(n, n + 1), b, c)
}

/// Dimension vector (n+1, n); `n = 0` is the simple at vertex 1.
pub fn g2_s1n(a: &Arc<BoundAlgebra>, n: usize) -> Representation {
    let (b, c) = stacked_pair(n);
    g2_module(a, n + 1, n, RatMatrix::zeros(n + 1, n), b.transpose(), c.transpose())
}

/// `0, 1, ..., count-1` followed by infinity.
pub fn lambda_sample(count: usize) -> Vec<Option<Rat>> {
    (0..count).map(|k| Some(Rat::from_integer((k as i64).into()))).chain(core::iter::once(None)).collect()
}

fn lambda_name(l: &Option<Rat>) -> String {
    match l {
        Some(v) => format!("{v}"),
        None => String::from("inf"),
    }
}

/// Bricks of the two-vertex algebra: the one-parameter family sampled at
/// `lambda_count` finite values plus infinity, the projective `P2`, and the
/// modules `S(1,n)`, `S(2,n)` for `n <= max_n`.
pub fn g2_universe(a: &Arc<BoundAlgebra>, lambda_count: usize, max_n: usize) -> Vec<NamedModule> {
    let mut out = Vec::new();
    for l in lambda_sample(lambda_count) {
        out.push((format!("X1({})", lambda_name(&l)), g2_x1(a, l)));
    }
    out.push((String::from("P2"), g2_p2(a)));
    for n in 0..=max_n {
        out.push((format!("S(1,{n})"), g2_s1n(a, n)));
        out.push((format!("S(2,{n})"), g2_s2n(a, n)));
    }
    out
}

/// Two vertices and two parallel arrows `a, b: 1 -> 2`.
pub fn kronecker_quiver() -> Quiver {
    let mut q = Quiver::new(["1", "2"]).expect("distinct names");
    q.add_arrow("a", "1", "2").expect("valid arrow");
    q.add_arrow("b", "1", "2").expect("valid arrow");
    q
}

pub fn kronecker_algebra() -> BoundAlgebra {
    BoundAlgebra::path_algebra(kronecker_quiver()).expect("acyclic")
}

/// Dimension vector (n, n+1): the preprojective indecomposables.
pub fn kronecker_preprojective(a: &Arc<BoundAlgebra>, n: usize) -> Representation {
    let (x, y) = stacked_pair(n);
    Representation::new(a.clone(), vec![n, n + 1], vec![x, y]).expect("no relations")
}

/// Dimension vector (n+1, n): the preinjective indecomposables.
pub fn kronecker_preinjective(a: &Arc<BoundAlgebra>, n: usize) -> Representation {
    let (x, y) = stacked_pair(n);
    Representation::new(a.clone(), vec![n + 1, n], vec![x.transpose(), y.transpose()]).expect("no relations")
}

/// Dimension vector (1,1) with `a = 1, b = lambda` (`None`: `a = 0, b = 1`).
pub fn kronecker_regular(a: &Arc<BoundAlgebra>, lambda: Option<Rat>) -> Representation {
    let (x, y) = match lambda {
        Some(l) => (Rat::one(), l),
        None => (Rat::zero(), Rat::one()),
    };
    let maps = vec![scalar(x), scalar(y)];
    Representation::new(a.clone(), vec![1, 1], maps).expect("no relations")
}

/// All Kronecker bricks of total dimension at most `dim_budget`, with the
/// regular family sampled at `lambda_count` finite values plus infinity.
pub fn kronecker_universe(a: &Arc<BoundAlgebra>, lambda_count: usize, dim_budget: usize) -> Vec<NamedModule> {
    let mut out = Vec::new();
    let mut n = 0;
    while 2 * n < dim_budget {
        out.push((format!("P({n},{})", n + 1), kronecker_preprojective(a, n)));
        out.push((format!("I({},{n})", n + 1), kronecker_preinjective(a, n)));
        n += 1;
    }
    if dim_budget >= 2 {
        for l in lambda_sample(lambda_count) {
            out.push((format!("R({})", lambda_name(&l)), kronecker_regular(a, l)));
        }
    }
    out
}

/// `k<x1,x2>/(x1^m, x2^n, x1 x2)` on one vertex, with `m, n >= 2`.
pub fn a_mn(m: usize, n: usize) -> BoundAlgebra {
    assert!(m >= 2 && n >= 2, "exponents must be at least two");
    let mut q = Quiver::new(["1"]).expect("one vertex");
    q.add_arrow("x1", "1", "1").expect("loop");
    q.add_arrow("x2", "1", "1").expect("loop");
    let rels = vec![
        Relation::monomial(&q, &vec!["x1"; m]).expect("known label"),
        Relation::monomial(&q, &vec!["x2"; n]).expect("known label"),
        Relation::monomial(&q, &["x1", "x2"]).expect("known labels"),
    ];
    BoundAlgebra::new(q, rels).expect("admissible relations")
}

/// `k[x]/(x^k)` as a one-loop quiver, `k >= 2`.
pub fn truncated_polynomial(k: usize) -> BoundAlgebra {
    assert!(k >= 2, "the relation must have length at least two");
    let mut q = Quiver::new(["1"]).expect("one vertex");
    q.add_arrow("x", "1", "1").expect("loop");
    let rel = Relation::monomial(&q, &vec!["x"; k]).expect("known label");
    BoundAlgebra::new(q, vec![rel]).expect("admissible relation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmod::is_brick;

    #[test]
    fn g2_universe_is_all_bricks() {
        let a = Arc::new(g2_algebra());
        let u = g2_universe(&a, 8, 3);
        assert_eq!(u.len(), 18);
        for (name, m) in &u {
            assert!(is_brick(m).unwrap(), "{name}");
        }
    }

    #[test]
    fn g2_higher_bands_are_not_bricks() {
        let a = Arc::new(g2_algebra());
        assert!(!is_brick(&g2_xn(&a, 2, Some(Rat::one()))).unwrap());
        assert!(!is_brick(&g2_xn(&a, 2, None)).unwrap());
    }

    #[test]
    fn kronecker_universe_within_budget() {
        let a = Arc::new(kronecker_algebra());
        let u = kronecker_universe(&a, 8, 6);
        assert_eq!(u.len(), 6 + 9);
        assert!(u.iter().all(|(_, m)| m.total_dim() <= 6 && is_brick(m).unwrap()));
    }

    #[test]
    fn monomial_algebra_dimension() {
        // Normal words are x2^a x1^b with a < n, b < m.
        for (m, n) in [(2, 2), (2, 3), (3, 4), (4, 2)] {
            assert_eq!(a_mn(m, n).dim(), m * n);
        }
    }
}
