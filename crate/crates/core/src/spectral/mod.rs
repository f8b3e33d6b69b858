//! Spectral radii of nonnegative matrices, including matrices with infinite
//! entries, block lower-triangular assemblies and integer count matrices.
//!
//! Every matrix is first split into the strongly connected components of its
//! support digraph. The spectral radius of a nonnegative matrix is the largest
//! Perron root among its irreducible diagonal blocks. Small irreducible blocks
//! are solved exactly: the characteristic polynomial is computed over the
//! rationals and its largest real root is isolated with a Sturm chain.
//! Larger blocks go through a double-precision QR eigensolver.

pub mod hqr;
pub mod poly;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::digraph::Digraph;
use crate::exactlin::{Rat, RatMatrix};
use poly::{charpoly, largest_real_root, Poly};

/// Absolute error bound declared for values from the floating-point path.
pub const NUMERIC_TOLERANCE: f64 = 1e-9;

/// Irreducible blocks up to this size are solved exactly.
pub const EXACT_BLOCK_LIMIT: usize = 6;

/// Exact description of an algebraic spectral radius: the unique root of
/// `poly` inside `[lo, hi]`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootCertificate {
    pub poly: Poly,
    pub lo: Rat,
    pub hi: Rat,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralValue {
    /// `f64::INFINITY` for an infinite radius.
    pub value: f64,
    /// The radius itself when it is rational.
    pub exact: Option<Rat>,
    /// Isolating interval for irrational certified values.
    pub certificate: Option<RootCertificate>,
    /// True when the value comes from exact arithmetic.
    pub certified: bool,
    /// Absolute error bound; zero when certified.
    pub tolerance: f64,
}

impl SpectralValue {
    pub fn zero() -> Self {
        Self::from_rational(Rat::zero())
    }

    pub fn from_rational(r: Rat) -> Self {
        SpectralValue {
            value: r.to_f64().unwrap_or(f64::NAN),
            exact: Some(r),
            certificate: None,
            certified: true,
            tolerance: 0.0,
        }
    }

    pub fn infinite() -> Self {
        SpectralValue { value: f64::INFINITY, exact: None, certificate: None, certified: true, tolerance: 0.0 }
    }

    pub fn numeric(value: f64, tolerance: f64) -> Self {
        SpectralValue { value, exact: None, certificate: None, certified: false, tolerance }
    }

    pub fn is_infinite(&self) -> bool {
        self.value.is_infinite()
    }

    /// True when the value is certainly zero.
    pub fn is_zero(&self) -> bool {
        self.exact.as_ref().is_some_and(Zero::is_zero)
    }

    /// Larger of two values. Certification survives only if the winner is
    /// certified and clearly separated from any uncertified competitor.
    pub fn max(self, other: SpectralValue) -> SpectralValue {
        let (hi, lo) = if other.value > self.value { (other, self) } else { (self, other) };
        if hi.certified && !lo.certified && lo.value + lo.tolerance >= hi.value {
            return SpectralValue::numeric(hi.value, lo.tolerance);
        }
        hi
    }
}

impl fmt::Display for SpectralValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.exact, self.certified) {
            (_, _) if self.is_infinite() => write!(f, "inf"),
            (Some(r), _) => write!(f, "{r}"),
            (None, true) => write!(f, "{:.12} (certified)", self.value),
            (None, false) => write!(f, "{:.12} (+/- {:e})", self.value, self.tolerance),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectralError {
    NotSquare { rows: usize, cols: usize },
    NegativeEntry { row: usize, col: usize },
    WrongEntryCount { expected: usize, found: usize },
}

impl core::error::Error for SpectralError {}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            SpectralError::NegativeEntry { row, col } => write!(f, "entry ({row}, {col}) is negative"),
            SpectralError::WrongEntryCount { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
        }
    }
}

/// Perron root of an irreducible nonnegative block.
fn perron_root_irreducible(block: &RatMatrix) -> SpectralValue {
    let n = block.rows();
    if n == 1 {
        return SpectralValue::from_rational(block[(0, 0)].clone());
    }
    let floats: Vec<f64> = block.entries().iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
    let numeric = hqr::spectral_radius(n, &floats).or_else(|| power_iteration(n, &floats));
    if n <= EXACT_BLOCK_LIMIT {
        let p = charpoly(block);
        if let Some(b) = largest_real_root(&p, numeric) {
            if let Some(r) = b.exact.clone() {
                return SpectralValue::from_rational(r);
            }
            return SpectralValue {
                value: b.midpoint(),
                exact: None,
                certificate: Some(RootCertificate { poly: p.squarefree_part(), lo: b.lo, hi: b.hi }),
                certified: true,
                tolerance: 0.0,
            };
        }
    }
    SpectralValue::numeric(numeric.unwrap_or(f64::NAN), NUMERIC_TOLERANCE)
}

/// Fallback for the rare case the QR iteration does not converge: power
/// iteration on `A + I`, which is primitive for irreducible `A`.
fn power_iteration(n: usize, a: &[f64]) -> Option<f64> {
    let mut v = vec![1.0; n];
    let mut lambda = 0.0;
    for _ in 0..100_000 {
        let mut next = v.clone();
        for i in 0..n {
            for j in 0..n {
                next[i] += a[i * n + j] * v[j];
            }
        }
        let norm = next.iter().cloned().fold(0.0, f64::max);
        if norm == 0.0 {
            return Some(0.0);
        }
        for x in &mut next {
            *x /= norm;
        }
        let done = (norm - lambda).abs() < 1e-14 * norm;
        lambda = norm;
        v = next;
        if done {
            return Some(lambda - 1.0);
        }
    }
    None
}

/// Spectral radius given the support digraph and a way to extract diagonal
/// blocks of cyclic components.
fn rho_by_components(g: &Digraph, block: impl Fn(&[usize]) -> RatMatrix) -> SpectralValue {
    let mut best = SpectralValue::zero();
    for comp in g.strongly_connected_components() {
        if !g.is_cyclic_component(&comp) {
            continue;
        }
        best = best.max(perron_root_irreducible(&block(&comp)));
    }
    best
}

/// Perron root (spectral radius) of a square nonnegative rational matrix.
pub fn rho(m: &RatMatrix) -> Result<SpectralValue, SpectralError> {
    if !m.is_square() {
        return Err(SpectralError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    for i in 0..n {
        for j in 0..n {
            if m[(i, j)].is_negative() {
                return Err(SpectralError::NegativeEntry { row: i, col: j });
            }
        }
    }
    let g = Digraph::from_fn(n, |i, j| !m[(i, j)].is_zero());
    Ok(rho_by_components(&g, |c| m.submatrix(c, c)))
}

/// Spectral radius of a row-major `n x n` matrix of nonnegative counts.
pub fn rho_counts(n: usize, entries: &[u64]) -> SpectralValue {
    assert_eq!(entries.len(), n * n, "count matrix must be n x n");
    let g = Digraph::from_fn(n, |i, j| entries[i * n + j] != 0);
    rho_by_components(&g, |c| {
        RatMatrix::from_fn(c.len(), c.len(), |i, j| Rat::from_integer(entries[c[i] * n + c[j]].into()))
    })
}

/// Spectral radius of a block lower-triangular matrix from its diagonal
/// blocks; the off-diagonal fill never matters.
pub fn rho_block_lower_triangular(blocks: &[RatMatrix]) -> Result<SpectralValue, SpectralError> {
    let mut best = SpectralValue::zero();
    for b in blocks {
        best = best.max(rho(b)?);
    }
    Ok(best)
}

/// Frobenius-Perron dimension of an object of a Z+-ring from its matrix of
/// left multiplication in the distinguished basis.
pub fn zplus_fpdim(mult: &[Vec<u64>]) -> Result<SpectralValue, SpectralError> {
    let n = mult.len();
    if let Some(row) = mult.iter().find(|r| r.len() != n) {
        return Err(SpectralError::NotSquare { rows: n, cols: row.len() });
    }
    let flat: Vec<u64> = mult.iter().flatten().copied().collect();
    Ok(rho_counts(n, &flat))
}

/// Spectral radius of a general real matrix in double precision.
pub fn rho_numeric(n: usize, entries: &[f64]) -> Option<f64> {
    hqr::spectral_radius(n, entries)
}

/// Entry of a matrix over the rationals extended by two infinities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtEntry {
    Finite(Rat),
    PosInf,
    NegInf,
}

impl ExtEntry {
    fn is_support(&self) -> bool {
        !matches!(self, ExtEntry::Finite(x) if x.is_zero())
    }
}

impl From<Rat> for ExtEntry {
    fn from(r: Rat) -> Self {
        ExtEntry::Finite(r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedMatrix {
    n: usize,
    entries: Vec<ExtEntry>,
}

impl ExtendedMatrix {
    pub fn new(n: usize, entries: Vec<ExtEntry>) -> Result<Self, SpectralError> {
        if entries.len() != n * n {
            return Err(SpectralError::WrongEntryCount { expected: n * n, found: entries.len() });
        }
        Ok(ExtendedMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<ExtEntry>>) -> Result<Self, SpectralError> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(SpectralError::NotSquare { rows: n, cols: r.len() });
        }
        Ok(ExtendedMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_finite(m: &RatMatrix) -> Result<Self, SpectralError> {
        if !m.is_square() {
            return Err(SpectralError::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        Ok(ExtendedMatrix { n: m.rows(), entries: m.entries().iter().cloned().map(ExtEntry::Finite).collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &ExtEntry {
        &self.entries[i * self.n + j]
    }

    /// The finite matrix obtained by putting `+x` and `-x` into the infinite
    /// slots.
    fn substitute(&self, x: f64) -> Vec<f64> {
        self.entries
            .iter()
            .map(|e| match e {
                ExtEntry::Finite(r) => r.to_f64().unwrap_or(f64::NAN),
                ExtEntry::PosInf => x,
                ExtEntry::NegInf => -x,
            })
            .collect()
    }
}

/// Exponents `k` of the substitution grid `x = 2^k` used for mixed signs.
pub const FALLBACK_GRID: core::ops::RangeInclusive<i32> = 0..=20;
/// Number of trailing grid values whose minimum estimates the liminf.
pub const FALLBACK_TAIL: usize = 5;

/// Spectral radius of a matrix with entries in the extended rationals: the
/// liminf of the spectral radius as every infinite slot tends to its sign's
/// infinity.
///
/// When all finite entries are nonnegative and no `-inf` lies inside a
/// strongly connected component, the radius is monotone in every slot and
/// the answer is exact: infinite iff some `+inf` lies inside a component,
/// otherwise the largest Perron root of the finite component blocks.
/// Everything else is estimated on a substitution grid and left uncertified.
pub fn rho_extended(m: &ExtendedMatrix) -> SpectralValue {
    let n = m.n;
    let g = Digraph::from_fn(n, |i, j| m.get(i, j).is_support());
    let (comps, id) = g.component_ids();
    let same = |i: usize, j: usize| id[i] == id[j];

    let mut monotone = true;
    let mut infinite = false;
    for i in 0..n {
        for j in 0..n {
            match m.get(i, j) {
                ExtEntry::Finite(x) if x.is_negative() => monotone = false,
                ExtEntry::NegInf if same(i, j) => monotone = false,
                ExtEntry::PosInf if same(i, j) => infinite = true,
                _ => {}
            }
        }
    }
    if monotone {
        if infinite {
            return SpectralValue::infinite();
        }
        let mut best = SpectralValue::zero();
        for comp in comps.iter().filter(|c| g.is_cyclic_component(c)) {
            let block = RatMatrix::from_fn(comp.len(), comp.len(), |a, b| match m.get(comp[a], comp[b]) {
                ExtEntry::Finite(x) => x.clone(),
                _ => unreachable!("infinite entries inside a component were handled above"),
            });
            best = best.max(perron_root_irreducible(&block));
        }
        return best;
    }

    let values: Vec<f64> = FALLBACK_GRID
        .filter_map(|k| rho_numeric(n, &m.substitute(libm::exp2(k as f64))))
        .collect();
    let tail = &values[values.len().saturating_sub(FALLBACK_TAIL)..];
    if tail.is_empty() {
        return SpectralValue::numeric(f64::NAN, f64::INFINITY);
    }
    let lo = tail.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = tail.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    SpectralValue::numeric(lo, hi - lo)
}
