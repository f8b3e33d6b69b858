//! Closed-form fp functions of small derived categories: the projective
//! line (twists and the Serre functor), the path algebra of `A2`, and
//! polynomial rings in `g` variables.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::fixtures::kronecker_quiver;
use crate::fpcore::FpReport;
use crate::quiver::quiver_fpdim;
use crate::spectral::SpectralValue;

/// `fpdim^n(Sigma^a o (b))` on the derived category of the projective line.
/// Independent of `n >= 1`.
pub fn p1_twist(a: i64, b: i64, _n: usize) -> u64 {
    match a {
        0 if b < 0 => 1,
        0 => (b + 1) as u64,
        1 if b >= -1 => 1,
        1 => (-b - 1) as u64,
        _ => 0,
    }
}

/// `fpdim^n(Sigma^a o S^b)` on the derived category of the projective line,
/// `S` the Serre functor.
pub fn p1_serre(a: i64, b: i64, _n: usize) -> u64 {
    match a + b {
        0 if b > 0 => 1,
        0 => (1 - 2 * b) as u64,
        1 if b <= 0 => 1,
        1 => (2 * b - 1) as u64,
        _ => 0,
    }
}

/// `fpdim^n(Sigma^a o S^b)` on the derived category of `A2`: one exactly
/// when `3a + b` is 0 or 1.
pub fn a2(a: i64, b: i64, _n: usize) -> u64 {
    u64::from(matches!(3 * a + b, 0 | 1))
}

/// `fpdim(Sigma^i)` for the polynomial ring in `g` variables: `C(g, i)`.
pub fn polyring(g: u64, i: i64) -> u64 {
    if i < 0 || i as u64 > g {
        return 0;
    }
    let i = i as u64;
    let k = i.min(g - i);
    (0..k).fold(1u64, |acc, t| acc * (g - t) / (t + 1))
}

/// A named two-parameter surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Surface {
    P1Twist,
    P1Serre,
    A2,
}

impl Surface {
    pub const ALL: [Surface; 3] = [Surface::P1Twist, Surface::P1Serre, Surface::A2];

    pub fn name(self) -> &'static str {
        match self {
            Surface::P1Twist => "p1-twist",
            Surface::P1Serre => "p1-serre",
            Surface::A2 => "a2",
        }
    }

    pub fn eval(self, a: i64, b: i64, n: usize) -> u64 {
        match self {
            Surface::P1Twist => p1_twist(a, b, n),
            Surface::P1Serre => p1_serre(a, b, n),
            Surface::A2 => a2(a, b, n),
        }
    }

    /// Values for `a, b` in `-range..=range`, rows indexed by `a`.
    pub fn grid(self, range: i64, n: usize) -> Vec<Vec<u64>> {
        (-range..=range).map(|a| (-range..=range).map(|b| self.eval(a, b, n)).collect()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownSurface(pub alloc::string::String);

impl core::error::Error for UnknownSurface {}

impl fmt::Display for UnknownSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown surface `{}` (expected p1-twist, p1-serre, a2 or polyring)", self.0)
    }
}

impl FromStr for Surface {
    type Err = UnknownSurface;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Surface::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| UnknownSurface(s.into()))
    }
}

/// Engine values on Kronecker modules against the projective-line formula.
#[derive(Debug, Clone, PartialEq)]
pub struct KroneckerCrossCheck {
    /// `(n, engine fpdim^n(E^1), formula value)`.
    pub rows: Vec<(usize, SpectralValue, u64)>,
    pub quiver_fpdim: SpectralValue,
    /// Every row agrees within `1e-9`.
    pub agree: bool,
    /// The quiver's own fpdim is strictly below the category's.
    pub strict_gap: bool,
}

/// Compare an fp report over Kronecker bricks (power one) with
/// `fpdim(Sigma) = 1` on the projective line.
pub fn cross_check_k2(report: &FpReport) -> KroneckerCrossCheck {
    let rows: Vec<(usize, SpectralValue, u64)> = (1..=report.budgets.max_set_size)
        .filter_map(|n| report.cell(n, 1).map(|c| (n, c.value.clone(), p1_serre(1, 0, n))))
        .collect();
    let agree = rows.iter().all(|(_, v, s)| (v.value - *s as f64).abs() <= 1e-9);
    let quiver_fpdim = quiver_fpdim(&kronecker_quiver());
    let best = rows.iter().map(|(_, v, _)| v.value).fold(0.0, f64::max);
    KroneckerCrossCheck { strict_gap: quiver_fpdim.value < best, rows, quiver_fpdim, agree }
}
