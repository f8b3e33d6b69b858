//! Univariate polynomials over the rationals: characteristic polynomials,
//! Sturm chains and isolation of the largest real root.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactlin::{Rat, RatMatrix};

/// Coefficients from the constant term upwards; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    fn lead(&self) -> &Rat {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap_or(0);
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Poly::zero(), self.clone());
        };
        let mut quot = vec![Rat::zero(); nd - dd + 1];
        let lead_inv = d.lead().recip();
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().recip();
        Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The product of the distinct irreducible factors, made monic.
    pub fn squarefree_part(&self) -> Poly {
        let d = self.derivative();
        if d.is_zero() {
            return self.monic();
        }
        let g = self.gcd(&d);
        self.div_rem(&g).0.monic()
    }

    /// Bound on the absolute value of every complex root.
    pub fn root_bound(&self) -> Rat {
        let lead = self.lead().abs();
        let n = self.coeffs.len() - 1;
        let m = self.coeffs[..n].iter().map(|c| c.abs() / &lead).fold(Rat::zero(), |a, b| if b > a { b } else { a });
        m + Rat::one()
    }
}

/// Characteristic polynomial `det(x I - A)` by Faddeev-LeVerrier.
pub fn charpoly(a: &RatMatrix) -> Poly {
    assert!(a.is_square());
    let n = a.rows();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut m = RatMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = a * &m;
        let c = coeffs[n - k + 1].clone();
        for i in 0..n {
            next[(i, i)] += &c;
        }
        let am = a * &next;
        coeffs[n - k] = -am.trace() / Rat::from_integer(BigInt::from(k));
        m = next;
    }
    Poly::new(coeffs)
}

/// Sturm chain of a squarefree polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<Poly>,
}

impl SturmChain {
    pub fn new(p: &Poly) -> Self {
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d);
        }
        loop {
            let k = chain.len();
            if k < 2 {
                break;
            }
            let r = chain[k - 2].div_rem(&chain[k - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(Poly::new(r.coeffs.iter().map(|c| -c).collect()));
        }
        SturmChain { chain }
    }

    fn variations(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut prev: Option<bool> = None;
        for p in &self.chain {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let pos = v.is_positive();
            if prev.is_some_and(|q| q != pos) {
                count += 1;
            }
            prev = Some(pos);
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_roots(&self, lo: &Rat, hi: &Rat) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// An isolating bracket `[lo, hi]` around the largest real root of a
/// polynomial, with the root itself when it is rational.
#[derive(Debug, Clone)]
pub struct RootBracket {
    pub lo: Rat,
    pub hi: Rat,
    pub exact: Option<Rat>,
}

impl RootBracket {
    pub fn midpoint(&self) -> f64 {
        if let Some(x) = &self.exact {
            return x.to_f64().unwrap_or(f64::NAN);
        }
        ((&self.lo + &self.hi) / Rat::from_integer(BigInt::from(2))).to_f64().unwrap_or(f64::NAN)
    }
}

fn half() -> Rat {
    Rat::new(BigInt::one(), BigInt::from(2))
}

/// Relative bracket width at which bisection stops: far below one ulp.
const WIDTH_BITS: u32 = 64;

/// Isolates the largest real root of `p` exactly. `hint` is an optional
/// floating-point estimate used to shrink the starting bracket; it is only
/// trusted after the Sturm count confirms it.
pub fn largest_real_root(p: &Poly, hint: Option<f64>) -> Option<RootBracket> {
    let q = p.squarefree_part();
    match q.degree() {
        None | Some(0) => return None,
        Some(1) => {
            let root = -&q.coeffs[0] / &q.coeffs[1];
            return Some(RootBracket { lo: root.clone(), hi: root.clone(), exact: Some(root) });
        }
        _ => {}
    }
    let sturm = SturmChain::new(&q);
    let bound = q.root_bound();
    let neg_bound = -bound.clone();
    if sturm.count_roots(&neg_bound, &bound) == 0 {
        return None;
    }

    let mut lo = neg_bound;
    let mut hi = bound;
    if let Some(h) = hint.filter(|h| h.is_finite()) {
        let delta = 1e-7 * h.abs().max(1.0);
        if let (Some(a), Some(b)) = (Rat::from_float(h - delta), Rat::from_float(h + delta)) {
            if a > lo && b < hi && sturm.count_roots(&a, &hi) >= 1 && sturm.count_roots(&b, &hi) == 0 {
                lo = a;
                hi = b;
            }
        }
    }

    let scale = if hi.abs() > Rat::one() { hi.abs() } else { Rat::one() };
    let target = scale / Rat::from_integer(BigInt::one() << WIDTH_BITS);
    while &hi - &lo > target {
        let mid = (&lo + &hi) * half();
        if q.eval(&mid).is_zero() && sturm.count_roots(&mid, &hi) == 0 {
            return Some(RootBracket { lo: mid.clone(), hi: mid.clone(), exact: Some(mid) });
        }
        if sturm.count_roots(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let exact = simplest_rational_between(&lo, &hi, 48).filter(|r| q.eval(r).is_zero());
    Some(RootBracket { lo, hi, exact })
}

/// The rational with the smallest denominator in `[lo, hi]`, found by
/// continued-fraction descent (at most `depth` partial quotients).
pub fn simplest_rational_between(lo: &Rat, hi: &Rat, depth: usize) -> Option<Rat> {
    if lo > hi {
        return None;
    }
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Some(Rat::zero());
    }
    if hi.is_negative() {
        return simplest_rational_between(&-hi, &-lo, depth).map(|r| -r);
    }
    let ceil_lo = lo.ceil();
    if ceil_lo <= *hi {
        return Some(ceil_lo);
    }
    if depth == 0 {
        return None;
    }
    let fl = lo.floor();
    let inner = simplest_rational_between(&(hi - &fl).recip(), &(lo - &fl).recip(), depth - 1)?;
    Some(fl + inner.recip())
}

/// Integer square root check used by tests and formatting: `Some(r)` when
/// `n = r^2`.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rat, ratio};

    #[test]
    fn charpoly_two_by_two() {
        let a = RatMatrix::from_i64(&[&[0, 2], &[1, 0]]);
        assert_eq!(charpoly(&a), Poly::new(vec![rat(-2), rat(0), rat(1)]));
    }

    #[test]
    fn charpoly_matches_determinant_at_points() {
        let a = RatMatrix::from_i64(&[&[1, 2, 0], &[3, -1, 4], &[0, 5, 2]]);
        let p = charpoly(&a);
        for x in [-3, 0, 2, 7] {
            let xi = RatMatrix::identity(3).scale(&rat(x));
            assert_eq!(p.eval(&rat(x)), xi.sub(&a).determinant().unwrap());
        }
    }

    #[test]
    fn largest_root_of_x2_minus_2() {
        let p = Poly::new(vec![rat(-2), rat(0), rat(1)]);
        let b = largest_real_root(&p, None).unwrap();
        assert!(b.exact.is_none());
        assert!((b.midpoint() - core::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn repeated_rational_root_is_exact() {
        // (x-1)^2 (x+3)
        let p = Poly::new(vec![rat(3), rat(-5), rat(1), rat(1)]);
        let b = largest_real_root(&p, Some(0.9999)).unwrap();
        assert_eq!(b.exact, Some(rat(1)));
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_rational_between(&ratio(3, 10), &ratio(4, 10), 20), Some(ratio(1, 3)));
        assert_eq!(simplest_rational_between(&ratio(5, 2), &ratio(7, 2), 20), Some(rat(3)));
    }

    #[test]
    fn sturm_counts() {
        // (x-1)(x-2)(x-3)
        let p = Poly::new(vec![rat(-6), rat(11), rat(-6), rat(1)]);
        let s = SturmChain::new(&p);
        assert_eq!(s.count_roots(&rat(0), &rat(10)), 3);
        assert_eq!(s.count_roots(&rat(1), &rat(2)), 1);
        assert_eq!(s.count_roots(&ratio(3, 2), &ratio(5, 2)), 1);
    }
}
