//! The Frobenius-Perron engine. A family of objects is described by its Hom
//! dimensions and by the dimensions `dim(X_i, sigma^m X_j)` of an
//! endofunctor's powers; brick sets are enumerated from the Hom table and
//! every (set size, power) cell records the largest Perron root found.
//!
//! All suprema are over the scanned family only, so reported values are
//! lower bounds for the categorical ones.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{projective, simples, BoundAlgebra};
use crate::exactlin::{Rat, RatMatrix};
use crate::fixtures::NamedModule;
use crate::quiver::{quiver_fpdim, Quiver};
use crate::repmod::{
    bricks_isomorphic, ext_dims_from, hom_dim, is_brick, minimal_resolution, presented_module,
    random_radical_element, Representation,
};
use crate::spectral::{rho_counts, SpectralValue};

/// Objects indexed `0..len()` with Hom dimensions and an endofunctor whose
/// powers are known through `dim(X_i, sigma^power X_j)`.
pub trait ObjectFamily {
    fn len(&self) -> usize;
    fn name(&self, i: usize) -> String;
    fn hom_dim(&self, i: usize, j: usize) -> u64;
    fn sigma_dim(&self, power: i64, i: usize, j: usize) -> u64;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn is_brick(&self, i: usize) -> bool {
        self.hom_dim(i, i) == 1
    }
}

/// Map from an ordered pair of objects to a dimension.
pub trait Assignment {
    fn name(&self) -> String;
    fn evaluate(&self, i: usize, j: usize) -> u64;
}

/// The assignment `(i, j) -> dim(X_i, sigma^power X_j)` of a family.
pub struct Power<'a, F: ObjectFamily + ?Sized> {
    pub family: &'a F,
    pub power: i64,
}

impl<F: ObjectFamily + ?Sized> Assignment for Power<'_, F> {
    fn name(&self) -> String {
        format!("sigma^{}", self.power)
    }

    fn evaluate(&self, i: usize, j: usize) -> u64 {
        self.family.sigma_dim(self.power, i, j)
    }
}

/// The Hom assignment of a family.
pub struct HomOf<'a, F: ObjectFamily + ?Sized>(pub &'a F);

impl<F: ObjectFamily + ?Sized> Assignment for HomOf<'_, F> {
    fn name(&self) -> String {
        String::from("hom")
    }

    fn evaluate(&self, i: usize, j: usize) -> u64 {
        self.0.hom_dim(i, j)
    }
}

/// Family given by explicit tables. Powers outside the table are zero when
/// negative (no negative extensions between modules) and a caller error
/// when positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabulatedFamily {
    names: Vec<String>,
    hom: Vec<u64>,
    powers: BTreeMap<i64, Vec<u64>>,
}

impl TabulatedFamily {
    /// `hom` and every table in `powers` are row-major `n x n`.
    pub fn new(names: Vec<String>, hom: Vec<u64>, powers: BTreeMap<i64, Vec<u64>>) -> Self {
        let n = names.len();
        assert_eq!(hom.len(), n * n, "hom table must be n x n");
        assert!(powers.values().all(|t| t.len() == n * n), "power tables must be n x n");
        TabulatedFamily { names, hom, powers }
    }

    pub fn max_power(&self) -> i64 {
        self.powers.keys().next_back().copied().unwrap_or(0)
    }

    /// The subfamily on the given indices, in that order.
    pub fn restrict(&self, keep: &[usize]) -> TabulatedFamily {
        let n = self.names.len();
        let pick = |t: &Vec<u64>| -> Vec<u64> {
            keep.iter().flat_map(|&i| keep.iter().map(move |&j| t[i * n + j])).collect()
        };
        TabulatedFamily {
            names: keep.iter().map(|&i| self.names[i].clone()).collect(),
            hom: pick(&self.hom),
            powers: self.powers.iter().map(|(&p, t)| (p, pick(t))).collect(),
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl ObjectFamily for TabulatedFamily {
    fn len(&self) -> usize {
        self.names.len()
    }

    fn name(&self, i: usize) -> String {
        self.names[i].clone()
    }

    fn hom_dim(&self, i: usize, j: usize) -> u64 {
        self.hom[i * self.names.len() + j]
    }

    fn sigma_dim(&self, power: i64, i: usize, j: usize) -> u64 {
        if power == 0 {
            return self.hom_dim(i, j);
        }
        match self.powers.get(&power) {
            Some(t) => t[i * self.names.len() + j],
            None if power < 0 => 0,
            None => panic!("power {power} lies outside the tabulated window"),
        }
    }
}

/// Hom and Ext rows of one module against a whole list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleRow {
    pub hom: Vec<u64>,
    /// `ext[m - 1][j] = dim Ext^m(X_i, X_j)`.
    pub ext: Vec<Vec<u64>>,
}

/// Row `i` of the Hom and Ext tables, from one minimal resolution of `X_i`.
pub fn module_row(modules: &[NamedModule], i: usize, max_power: usize) -> ModuleRow {
    let m = &modules[i].1;
    let res = minimal_resolution(m, max_power + 1);
    let cols: Vec<Vec<usize>> = modules.iter().map(|(_, n)| ext_dims_from(&res, n, max_power)).collect();
    let hom = cols.iter().map(|c| c[0] as u64).collect();
    let ext = (1..=max_power).map(|p| cols.iter().map(|c| c[p] as u64).collect()).collect();
    ModuleRow { hom, ext }
}

/// Assemble a family from rows produced by [`module_row`].
pub fn family_from_rows(names: Vec<String>, rows: Vec<ModuleRow>, max_power: usize) -> TabulatedFamily {
    let hom = rows.iter().flat_map(|r| r.hom.iter().copied()).collect();
    let powers = (1..=max_power)
        .map(|p| (p as i64, rows.iter().flat_map(|r| r.ext[p - 1].iter().copied()).collect()))
        .collect();
    TabulatedFamily::new(names, hom, powers)
}

/// Family of modules with `sigma^m = Ext^m` tabulated for `m <= max_power`.
pub fn module_family(modules: &[NamedModule], max_power: usize) -> TabulatedFamily {
    let rows = (0..modules.len()).map(|i| module_row(modules, i, max_power)).collect();
    family_from_rows(modules.iter().map(|(n, _)| n.clone()).collect(), rows, max_power)
}

/// Integer-indexed objects `lo..=hi` whose Hom dimensions depend on the
/// pair of indices; the functor shifts indices by one.
pub struct HomTableCategory {
    lo: i64,
    hi: i64,
    homdim: Box<dyn Fn(i64, i64) -> u64 + Send + Sync>,
}

impl HomTableCategory {
    pub fn new(lo: i64, hi: i64, homdim: impl Fn(i64, i64) -> u64 + Send + Sync + 'static) -> Self {
        assert!(lo <= hi, "empty index window");
        HomTableCategory { lo, hi, homdim: Box::new(homdim) }
    }

    /// Graded shifts `A(i)` of a one-dimensional graded algebra with a
    /// degree-one generator: `Hom(A(i), A(j)) = k` iff `j - i` is 0 or 1.
    pub fn graded_shifts(lo: i64, hi: i64) -> Self {
        HomTableCategory::new(lo, hi, |i, j| u64::from(matches!(j - i, 0 | 1)))
    }

    pub fn index(&self, k: usize) -> i64 {
        self.lo + k as i64
    }

    pub fn homdim(&self, i: i64, j: i64) -> u64 {
        (self.homdim)(i, j)
    }
}

impl fmt::Debug for HomTableCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomTableCategory[{}..={}]", self.lo, self.hi)
    }
}

/// A hom-table category whose endofunctor is the index shift by `shift`.
#[derive(Debug)]
pub struct ShiftFamily<'a> {
    pub table: &'a HomTableCategory,
    pub shift: i64,
}

impl ObjectFamily for ShiftFamily<'_> {
    fn len(&self) -> usize {
        (self.table.hi - self.table.lo + 1) as usize
    }

    fn name(&self, i: usize) -> String {
        format!("A({})", self.table.index(i))
    }

    fn hom_dim(&self, i: usize, j: usize) -> u64 {
        self.table.homdim(self.table.index(i), self.table.index(j))
    }

    fn sigma_dim(&self, power: i64, i: usize, j: usize) -> u64 {
        self.table.homdim(self.table.index(i), self.table.index(j) + self.shift * power)
    }
}

/// A verified brick set: members and their (identity) Hom matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrickSet {
    pub members: Vec<usize>,
    pub certificate: Vec<Vec<u64>>,
}

/// First pair breaking `dim(X_i, X_j) = delta_ij`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrickViolation {
    pub i: usize,
    pub j: usize,
    pub dim: u64,
}

pub fn verify_brick_set(members: &[usize], hom: &impl Assignment) -> Result<BrickSet, BrickViolation> {
    let certificate = adjacency_of(members, hom);
    for (a, row) in certificate.iter().enumerate() {
        for (b, &d) in row.iter().enumerate() {
            if d != u64::from(a == b) {
                return Err(BrickViolation { i: members[a], j: members[b], dim: d });
            }
        }
    }
    Ok(BrickSet { members: members.to_vec(), certificate })
}

/// Brick-set check for concrete modules (indices refer to `modules`).
pub fn verify_module_brick_set(modules: &[Representation]) -> Result<BrickSet, BrickViolation> {
    struct Direct<'a>(&'a [Representation]);
    impl Assignment for Direct<'_> {
        fn name(&self) -> String {
            String::from("hom")
        }
        fn evaluate(&self, i: usize, j: usize) -> u64 {
            hom_dim(&self.0[i], &self.0[j]).expect("modules over one algebra") as u64
        }
    }
    let idx: Vec<usize> = (0..modules.len()).collect();
    verify_brick_set(&idx, &Direct(modules))
}

/// `A(phi, sigma)`: rows are sources `X_i`, columns targets `sigma(X_j)`.
pub fn adjacency_of(members: &[usize], sigma: &impl Assignment) -> Vec<Vec<u64>> {
    members.iter().map(|&i| members.iter().map(|&j| sigma.evaluate(i, j)).collect()).collect()
}

/// Brick sets of a family grouped by size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrickSetIndex {
    /// `by_size[n - 1]` lists the `n`-element sets in lexicographic order.
    pub by_size: Vec<Vec<Vec<usize>>>,
    /// True when enumeration stopped at the set budget.
    pub truncated: bool,
}

impl BrickSetIndex {
    pub fn counts(&self) -> Vec<usize> {
        self.by_size.iter().map(Vec::len).collect()
    }
}

/// All brick sets with at most `max_size` members, stopping once
/// `max_sets` sets have been collected.
pub fn enumerate_brick_sets<F: ObjectFamily + ?Sized>(family: &F, max_size: usize, max_sets: usize) -> BrickSetIndex {
    let bricks: Vec<usize> = (0..family.len()).filter(|&i| family.is_brick(i)).collect();
    let k = bricks.len();
    let orth: Vec<Vec<bool>> = (0..k)
        .map(|a| {
            (0..k)
                .map(|b| a != b && family.hom_dim(bricks[a], bricks[b]) == 0 && family.hom_dim(bricks[b], bricks[a]) == 0)
                .collect()
        })
        .collect();
    let mut by_size = vec![Vec::new(); max_size];
    let mut total = 0usize;
    let mut truncated = false;
    // Depth-first over index stacks; candidates after the last member that
    // are orthogonal to every member.
    let mut stack: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    if max_size > 0 {
        for a in (0..k).rev() {
            stack.push((vec![a], ((a + 1)..k).filter(|&b| orth[a][b]).collect()));
        }
    }
    while let Some((set, cands)) = stack.pop() {
        if total >= max_sets {
            truncated = true;
            break;
        }
        by_size[set.len() - 1].push(set.iter().map(|&a| bricks[a]).collect());
        total += 1;
        if set.len() < max_size {
            for (pos, &b) in cands.iter().enumerate().rev() {
                let mut next = set.clone();
                next.push(b);
                let rest = cands[pos + 1..].iter().copied().filter(|&c| orth[b][c]).collect();
                stack.push((next, rest));
            }
        }
    }
    for sets in &mut by_size {
        sets.sort();
    }
    BrickSetIndex { by_size, truncated }
}

/// Best value in one (set size, power) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct FpCell {
    pub set_size: usize,
    pub power: i64,
    pub value: SpectralValue,
    pub witness: Option<Vec<usize>>,
    pub sets_scanned: usize,
}

impl FpCell {
    pub fn empty(set_size: usize, power: i64) -> Self {
        FpCell { set_size, power, value: SpectralValue::zero(), witness: None, sets_scanned: 0 }
    }

    fn offer(&mut self, value: SpectralValue, set: &[usize]) {
        let better = match &self.witness {
            None => true,
            Some(w) => value.value > self.value.value || (value.value == self.value.value && set < w.as_slice()),
        };
        if better {
            self.value = value;
            self.witness = Some(set.to_vec());
        }
    }

    /// Combine results of disjoint scans of the same cell. The outcome does
    /// not depend on how the sets were split.
    pub fn merge(mut self, other: FpCell) -> FpCell {
        self.sets_scanned += other.sets_scanned;
        if let Some(w) = other.witness {
            self.offer(other.value, &w);
        }
        self
    }
}

/// Scan `sets` (all of size `set_size`) at one power of the functor.
pub fn scan_cell<F: ObjectFamily + ?Sized>(family: &F, sets: &[Vec<usize>], set_size: usize, power: i64) -> FpCell {
    let mut cell = FpCell::empty(set_size, power);
    let mut memo: BTreeMap<Vec<u64>, SpectralValue> = BTreeMap::new();
    for set in sets {
        let entries: Vec<u64> =
            set.iter().flat_map(|&i| set.iter().map(move |&j| family.sigma_dim(power, i, j))).collect();
        let value = match memo.get(&entries) {
            Some(v) => v.clone(),
            None => {
                let v = rho_counts(set.len(), &entries);
                if memo.len() < 1 << 16 {
                    memo.insert(entries, v.clone());
                }
                v
            }
        };
        cell.offer(value, set);
        cell.sets_scanned += 1;
    }
    cell
}

/// Scan limits carried by every report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpBudgets {
    pub max_set_size: usize,
    /// Functor powers evaluated, in increasing order.
    pub powers: Vec<i64>,
    /// Cap on the number of brick sets enumerated.
    pub max_sets: usize,
}

impl FpBudgets {
    /// Powers `0..=max_power`.
    pub fn new(max_set_size: usize, max_power: i64) -> Self {
        FpBudgets { max_set_size, powers: (0..=max_power).collect(), max_sets: 2_000_000 }
    }
}

/// Estimates from the tail of a sequence `a_1, a_2, ...`.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthEstimate {
    /// Largest `log(a_n) / log(n)` over the window (`-inf` if all zero).
    pub fpg: f64,
    /// Largest `a_n^(1/n)` over the window.
    pub fpv: f64,
    /// Largest `sqrt(a_n / a_{n-2})` over the window; insensitive to a
    /// constant prefactor, `None` when no ratio is defined.
    pub fpv_ratio: Option<f64>,
    /// Smallest `a_n / a_{n-2}` over the window exceeds 1.5.
    pub exponential: bool,
    /// First and last index of the window (1-based, inclusive).
    pub window: (usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceTooShort(pub usize);

impl core::error::Error for SequenceTooShort {}

impl fmt::Display for SequenceTooShort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "growth analysis needs at least 4 terms, got {}", self.0)
    }
}

/// Growth of `seq[k] = a_{k+1}` judged on the last half of the terms.
pub fn growth_analyze(seq: &[f64]) -> Result<GrowthEstimate, SequenceTooShort> {
    let len = seq.len();
    if len < 4 {
        return Err(SequenceTooShort(len));
    }
    let start = len / 2 + 1;
    let a = |n: usize| seq[n - 1];
    let mut fpg = f64::NEG_INFINITY;
    let mut fpv = 0.0f64;
    let mut ratio: Option<f64> = None;
    let mut min_ratio = f64::INFINITY;
    for n in start..=len {
        let x = a(n);
        if x > 0.0 && n >= 2 {
            fpg = fpg.max(libm::log(x) / libm::log(n as f64));
        }
        fpv = fpv.max(libm::pow(x, 1.0 / n as f64));
        if n >= 3 {
            let prev = a(n - 2);
            if prev > 0.0 {
                let r = x / prev;
                ratio = Some(ratio.map_or(libm::sqrt(r), |q: f64| q.max(libm::sqrt(r))));
                min_ratio = min_ratio.min(r);
            } else {
                min_ratio = 0.0;
            }
        }
    }
    Ok(GrowthEstimate { fpg, fpv, fpv_ratio: ratio, exponential: min_ratio > 1.5 && min_ratio.is_finite(), window: (start, len) })
}

/// The Frobenius-Perron theory of a family, truncated to the budgets.
#[derive(Debug, Clone, PartialEq)]
pub struct FpReport {
    pub names: Vec<String>,
    pub brick_count: usize,
    pub budgets: FpBudgets,
    pub set_counts: Vec<usize>,
    pub truncated: bool,
    /// `grid[n - 1][k]` is the cell for set size `n` and `budgets.powers[k]`.
    pub grid: Vec<Vec<FpCell>>,
    /// Largest value in the power-one column.
    pub fpdim: Option<SpectralValue>,
    /// Least set size whose power-one value equals `fpdim`.
    pub stabilization_index: Option<usize>,
    /// Least set size from which every power-one value equals `fpdim`.
    pub strict_stabilization_index: Option<usize>,
    /// Growth of `m -> max_phi rho(A(phi, sigma^m))` over powers `1, 2, ...`.
    pub growth: Option<GrowthEstimate>,
    /// Largest power `m >= 0` with a nonzero column.
    pub fpgldim: Option<i64>,
    /// True when `fpgldim` is the top of the power window.
    pub fpgldim_at_window_edge: bool,
}

impl FpReport {
    pub fn cell(&self, set_size: usize, power: i64) -> Option<&FpCell> {
        let k = self.budgets.powers.iter().position(|&p| p == power)?;
        self.grid.get(set_size.checked_sub(1)?)?.get(k)
    }

    /// `m -> max_n fpdim^n(sigma^m)` over the given powers.
    pub fn column_max(&self, power: i64) -> Option<SpectralValue> {
        let k = self.budgets.powers.iter().position(|&p| p == power)?;
        self.grid.iter().map(|row| row[k].value.clone()).reduce(SpectralValue::max)
    }

    /// Coefficients of the truncated series `sum fpdim^n(sigma^m) t^m u^n`,
    /// indexed `[n - 1][k]` like the grid.
    pub fn series_coefficients(&self) -> Vec<Vec<f64>> {
        self.grid.iter().map(|row| row.iter().map(|c| c.value.value).collect()).collect()
    }

    pub fn witness_names(&self, cell: &FpCell) -> Option<Vec<String>> {
        cell.witness.as_ref().map(|w| w.iter().map(|&i| self.names[i].clone()).collect())
    }
}

fn same_value(a: &SpectralValue, b: &SpectralValue) -> bool {
    match (&a.exact, &b.exact, &a.certificate, &b.certificate) {
        (Some(x), Some(y), _, _) => x == y,
        (_, _, Some(x), Some(y)) if x.poly == y.poly && x.lo <= y.hi && y.lo <= x.hi => true,
        _ => (a.value - b.value).abs() <= 1e-9 * a.value.abs().max(1.0),
    }
}

/// Build a report from scanned cells (`cells[n - 1][k]`).
pub fn assemble_report<F: ObjectFamily + ?Sized>(
    family: &F,
    budgets: &FpBudgets,
    index: &BrickSetIndex,
    grid: Vec<Vec<FpCell>>,
) -> FpReport {
    let names = (0..family.len()).map(|i| family.name(i)).collect();
    let brick_count = (0..family.len()).filter(|&i| family.is_brick(i)).count();
    let mut report = FpReport {
        names,
        brick_count,
        budgets: budgets.clone(),
        set_counts: index.counts(),
        truncated: index.truncated,
        grid,
        fpdim: None,
        stabilization_index: None,
        strict_stabilization_index: None,
        growth: None,
        fpgldim: None,
        fpgldim_at_window_edge: false,
    };
    if let Some(k) = budgets.powers.iter().position(|&p| p == 1) {
        let col: Vec<SpectralValue> = report.grid.iter().map(|row| row[k].value.clone()).collect();
        if let Some(best) = col.iter().cloned().reduce(SpectralValue::max) {
            report.stabilization_index = col.iter().position(|v| same_value(v, &best)).map(|i| i + 1);
            let mut strict = col.len();
            while strict > 0 && same_value(&col[strict - 1], &best) {
                strict -= 1;
            }
            report.strict_stabilization_index = (strict < col.len()).then_some(strict + 1);
            report.fpdim = Some(best);
        }
    }
    let positive: Vec<i64> = budgets.powers.iter().copied().filter(|&p| p >= 1).collect();
    if positive.iter().enumerate().all(|(i, &p)| p == i as i64 + 1) {
        let seq: Vec<f64> = positive.iter().map(|&p| report.column_max(p).map_or(0.0, |v| v.value)).collect();
        report.growth = growth_analyze(&seq).ok();
    }
    let nonzero: Vec<i64> = budgets
        .powers
        .iter()
        .copied()
        .filter(|&p| p >= 0 && report.column_max(p).is_some_and(|v| !v.is_zero() && v.value > 0.0))
        .collect();
    report.fpgldim = nonzero.last().copied();
    report.fpgldim_at_window_edge = report.fpgldim.is_some() && report.fpgldim == budgets.powers.last().copied();
    report
}

/// Enumerate brick sets and fill every cell of the grid.
pub fn fp_report<F: ObjectFamily + ?Sized>(family: &F, budgets: &FpBudgets) -> FpReport {
    let index = enumerate_brick_sets(family, budgets.max_set_size, budgets.max_sets);
    let grid = (1..=budgets.max_set_size)
        .map(|n| budgets.powers.iter().map(|&p| scan_cell(family, &index.by_size[n - 1], n, p)).collect())
        .collect();
    assemble_report(family, budgets, &index, grid)
}

/// `fpdim^n(sigma^power)` over the family.
pub fn fpdim_n<F: ObjectFamily + ?Sized>(family: &F, n: usize, power: i64, max_sets: usize) -> SpectralValue {
    assert!(n >= 1, "set size must be positive");
    let index = enumerate_brick_sets(family, n, max_sets);
    scan_cell(family, &index.by_size[n - 1], n, power).value
}

/// Fp theory of a hom-table category with the functor `(shift)`.
pub fn homtable_fp(table: &HomTableCategory, shift: i64, budgets: &FpBudgets) -> FpReport {
    fp_report(&ShiftFamily { table, shift }, budgets)
}

/// Quiver with a vertex per brick of the family and
/// `dim(X, sigma^power Y)` arrows `X -> Y`.
pub fn e1_quiver<F: ObjectFamily + ?Sized>(family: &F, power: i64) -> Quiver {
    let bricks: Vec<usize> = (0..family.len()).filter(|&i| family.is_brick(i)).collect();
    let mut names: Vec<String> = bricks.iter().map(|&i| family.name(i)).collect();
    for k in 0..names.len() {
        if names[..k].contains(&names[k]) {
            names[k] = format!("{}#{k}", names[k]);
        }
    }
    let mut q = Quiver::new(names.iter().map(String::as_str)).expect("distinct names");
    for (a, &i) in bricks.iter().enumerate() {
        for (b, &j) in bricks.iter().enumerate() {
            for k in 0..family.sigma_dim(power, i, j) {
                q.add_arrow_at(&format!("e{a}_{b}_{k}"), a, b).expect("fresh label");
            }
        }
    }
    q
}

/// Both sides of the bound `fpdim(sigma) <= fpdim(quiver of sigma)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuiverBoundCheck {
    pub fpdim: SpectralValue,
    pub quiver_fpdim: SpectralValue,
    pub holds: bool,
}

/// Compare the family's `fpdim(sigma)` (over brick sets up to
/// `max_set_size`) with the Perron root of its sigma-quiver.
pub fn quiver_bound_check<F: ObjectFamily + ?Sized>(family: &F, max_set_size: usize, max_sets: usize) -> QuiverBoundCheck {
    let index = enumerate_brick_sets(family, max_set_size, max_sets);
    let fpdim = (1..=max_set_size)
        .map(|n| scan_cell(family, &index.by_size[n - 1], n, 1).value)
        .reduce(SpectralValue::max)
        .unwrap_or_else(SpectralValue::zero);
    let quiver_fpdim = quiver_fpdim(&e1_quiver(family, 1));
    let holds = fpdim.value <= quiver_fpdim.value + 1e-9 * quiver_fpdim.value.max(1.0);
    QuiverBoundCheck { fpdim, quiver_fpdim, holds }
}

/// `n x n` matrix with `g` on the diagonal and `g - 1` elsewhere.
pub fn genus_matrix(n: usize, g: u64) -> RatMatrix {
    RatMatrix::from_fn(n, n, |i, j| Rat::from_integer((if i == j { g } else { g.saturating_sub(1) }).into()))
}

/// `ext[m][a][b] = dim Ext^m(S_a, S_b)` for `m <= depth`.
pub fn simple_ext_table(alg: &Arc<BoundAlgebra>, depth: usize) -> Vec<Vec<Vec<u64>>> {
    let s = simples(alg);
    let rows: Vec<Vec<Vec<usize>>> = s
        .iter()
        .map(|m| {
            let res = minimal_resolution(m, depth + 1);
            s.iter().map(|n| ext_dims_from(&res, n, depth)).collect()
        })
        .collect();
    (0..=depth).map(|m| rows.iter().map(|r| r.iter().map(|e| e[m] as u64).collect()).collect()).collect()
}

/// Outcome of testing the averaging growth condition on a finite window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgcCheck {
    pub c: u64,
    pub d: usize,
    pub holds: bool,
    /// `(n, i, j)` of the first failing entry.
    pub first_violation: Option<(usize, usize, usize)>,
}

/// Check `dim Ext^n(S_i, S_j) <= c * max(P_{n-d}, ..., P_{n+d})`, where
/// `P_k` is the largest `min(Ext^k(S_i,S_j), Ext^k(S_j,S_i))`, for every
/// `n` whose neighbourhood lies inside the table.
pub fn agc_check(ext: &[Vec<Vec<u64>>], c: u64, d: usize) -> AgcCheck {
    let p: Vec<u64> = ext
        .iter()
        .map(|t| {
            let w = t.len();
            (0..w).flat_map(|i| (i..w).map(move |j| t[i][j].min(t[j][i]))).max().unwrap_or(0)
        })
        .collect();
    let mut first_violation = None;
    'outer: for n in d..ext.len().saturating_sub(d) {
        let bound = c * p[n - d..=n + d].iter().copied().max().unwrap_or(0);
        for (i, row) in ext[n].iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if e > bound {
                    first_violation = Some((n, i, j));
                    break 'outer;
                }
            }
        }
    }
    AgcCheck { c, d, holds: first_violation.is_none(), first_violation }
}

/// Complexity of an algebra estimated from `dim Ext^n(T, T)`, `T` the sum
/// of the simples.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexityEstimate {
    /// `ext[n][a][b] = dim Ext^n(S_a, S_b)`.
    pub ext: Vec<Vec<Vec<u64>>>,
    /// `dim Ext^n(T, T)` for `n = 0..=depth`.
    pub totals: Vec<u64>,
    pub growth: GrowthEstimate,
    /// `fpg + 1` clamped at zero, or infinity when growth is exponential.
    pub cx: f64,
    pub agc: AgcCheck,
}

pub fn complexity_estimate(alg: &Arc<BoundAlgebra>, depth: usize, agc_c: u64, agc_d: usize) -> ComplexityEstimate {
    assert!(depth >= 4, "depth must be at least 4");
    let ext = simple_ext_table(alg, depth);
    let totals: Vec<u64> = ext.iter().map(|t| t.iter().flatten().sum()).collect();
    let seq: Vec<f64> = totals[1..].iter().map(|&x| x as f64).collect();
    let growth = growth_analyze(&seq).expect("depth >= 4");
    let cx = complexity_from_growth(&growth);
    let agc = agc_check(&ext, agc_c, agc_d);
    ComplexityEstimate { ext, totals, growth, cx, agc }
}

fn complexity_from_growth(g: &GrowthEstimate) -> f64 {
    if g.exponential {
        f64::INFINITY
    } else {
        (g.fpg + 1.0).max(0.0)
    }
}

/// Comparison of the fp-complexity `fpg + 1` with the complexity.
#[derive(Debug, Clone, PartialEq)]
pub struct FpcCxCheck {
    pub fpc: f64,
    pub cx: f64,
    pub fp_growth: Option<GrowthEstimate>,
    pub complexity: ComplexityEstimate,
    /// `fpc <= cx` up to `tolerance`.
    pub consistent: bool,
    pub tolerance: f64,
    /// `cx - fpc` when the averaging growth condition held on the window.
    pub gap: Option<f64>,
}

/// `fpc` from the report's growth over Ext powers, `cx` from the simples.
pub fn fpc_vs_cx_check(alg: &Arc<BoundAlgebra>, report: &FpReport, depth: usize, tolerance: f64) -> FpcCxCheck {
    let complexity = complexity_estimate(alg, depth, 2, 1);
    let fpc = report.growth.as_ref().map_or(0.0, complexity_from_growth);
    let cx = complexity.cx;
    let consistent = cx.is_infinite() || fpc <= cx + tolerance;
    let gap = (complexity.agc.holds && cx.is_finite() && fpc.is_finite()).then_some(cx - fpc);
    FpcCxCheck { fpc, cx, fp_growth: report.growth.clone(), complexity, consistent, tolerance, gap }
}

/// Bricks of total dimension at most `dim_budget`: simples, indecomposable
/// projectives, and quotients of small free modules by random submodules,
/// kept up to isomorphism. Deterministic in `seed`.
pub fn brick_universe(alg: &Arc<BoundAlgebra>, dim_budget: usize, tries: usize, seed: u64) -> Vec<NamedModule> {
    use rand::Rng;
    let n = alg.vertex_count();
    let mut out: Vec<NamedModule> = Vec::new();
    let push = |name: String, m: Representation, out: &mut Vec<NamedModule>| {
        if m.is_zero() || m.total_dim() > dim_budget || !is_brick(&m).unwrap_or(false) {
            return;
        }
        let dup = out.iter().any(|(_, x)| x.dimvec() == m.dimvec() && bricks_isomorphic(x, &m).unwrap_or(false));
        if !dup {
            out.push((name, m));
        }
    };
    for (v, s) in simples(alg).into_iter().enumerate() {
        push(format!("S{}", alg.quiver().vertex_name(v)), s, &mut out);
    }
    for v in 0..n {
        push(format!("P{}", alg.quiver().vertex_name(v)), projective(alg, v), &mut out);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let proj_dims: Vec<usize> = (0..n).map(|v| alg.paths_from(v).len()).collect();
    let mut found = 0;
    for _ in 0..tries {
        let gen_count = rng.gen_range(1..=3usize);
        let gens: Vec<usize> = {
            let mut g: Vec<usize> = (0..gen_count).map(|_| rng.gen_range(0..n)).collect();
            g.sort_unstable();
            g
        };
        let free_dim: usize = gens.iter().map(|&v| proj_dims[v]).sum();
        if free_dim > 4 * dim_budget {
            continue;
        }
        let rel_count = rng.gen_range(1..=free_dim.max(1));
        let rels: Vec<(usize, Vec<Rat>)> = (0..rel_count)
            .map(|_| {
                let w = rng.gen_range(0..n);
                (w, random_radical_element(alg, &gens, w, &mut rng))
            })
            .collect();
        let m = presented_module(alg, &gens, &rels);
        let before = out.len();
        push(format!("M{found}"), m, &mut out);
        if out.len() > before {
            found += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn g2_family(max_power: usize) -> TabulatedFamily {
        let a = Arc::new(fixtures::g2_algebra());
        module_family(&fixtures::g2_universe(&a, 8, 3), max_power)
    }

    #[test]
    fn simples_form_a_brick_set() {
        let f = g2_family(1);
        let s1 = f.index_of("S(1,0)").unwrap();
        let s2 = f.index_of("S(2,0)").unwrap();
        let p2 = f.index_of("P2").unwrap();
        assert!(verify_brick_set(&[s1, s2], &HomOf(&f)).is_ok());
        let bad = verify_brick_set(&[s1, p2], &HomOf(&f)).unwrap_err();
        assert_eq!((bad.i, bad.j, bad.dim), (s1, p2, 1));
        assert_eq!(adjacency_of(&[s1, s2], &Power { family: &f, power: 1 }), vec![vec![0, 2], vec![1, 0]]);
        assert_eq!(adjacency_of(&[s1, s2], &Power { family: &f, power: 0 }), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn lambda_family_is_diagonal() {
        let f = g2_family(1);
        let xs: Vec<usize> = (0..4).map(|k| f.index_of(&format!("X1({k})")).unwrap()).collect();
        assert!(verify_brick_set(&xs, &HomOf(&f)).is_ok());
        let a = adjacency_of(&xs, &Power { family: &f, power: 1 });
        for (i, row) in a.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, u64::from(i == j));
            }
        }
    }

    #[test]
    fn g2_fp_dimensions() {
        let f = g2_family(1);
        let r = fp_report(&f, &FpBudgets::new(4, 1));
        let two = r.cell(2, 1).unwrap();
        assert!((two.value.value - 2f64.sqrt()).abs() < 1e-12);
        assert!(two.value.certified);
        for n in [1, 3, 4] {
            assert_eq!(r.cell(n, 1).unwrap().value.exact, Some(Rat::from_integer(1.into())), "n = {n}");
        }
        assert_eq!(r.stabilization_index, Some(2));
        assert_eq!(r.strict_stabilization_index, None);
        let names = r.witness_names(two).unwrap();
        assert_eq!(names, vec![String::from("S(1,0)"), String::from("S(2,0)")]);
    }

    #[test]
    fn growth_examples() {
        let constant = growth_analyze(&[1.0; 10]).unwrap();
        assert_eq!(constant.fpg, 0.0);
        assert_eq!(constant.fpv, 1.0);
        assert!(!constant.exponential);
        let zero = growth_analyze(&[0.0; 6]).unwrap();
        assert_eq!(zero.fpg, f64::NEG_INFINITY);
        assert_eq!(zero.fpv, 0.0);
        assert_eq!(growth_analyze(&[1.0; 3]), Err(SequenceTooShort(3)));
        let poly: Vec<f64> = (1..=200).map(|n| libm::floor(libm::pow(n as f64, 1.5))).collect();
        let g = growth_analyze(&poly).unwrap();
        assert!((g.fpg + 1.0 - 2.5).abs() < 0.25);
        let expo: Vec<f64> = (1..=60).map(|n| libm::floor(libm::pow(1.3, n as f64))).collect();
        let g = growth_analyze(&expo).unwrap();
        assert!((g.fpv - 1.3).abs() < 0.065);
        assert!(g.exponential);
        assert_eq!(g.window, (31, 60));
    }

    #[test]
    fn graded_shift_table() {
        let t = HomTableCategory::graded_shifts(-10, 10);
        for (shift, want) in [(0, 1u64), (1, 1), (2, 0), (-1, 0)] {
            let r = homtable_fp(&t, shift, &FpBudgets { max_set_size: 3, powers: vec![1], max_sets: 1 << 20 });
            for n in 1..=3 {
                assert_eq!(r.cell(n, 1).unwrap().value.exact, Some(Rat::from_integer(want.into())), "shift {shift}");
            }
        }
    }

    #[test]
    fn genus_matrix_root() {
        for (n, g, want) in [(3usize, 2u64, 4i64), (1, 7, 7), (5, 3, 11)] {
            let v = crate::spectral::rho(&genus_matrix(n, g)).unwrap();
            assert!((v.value - want as f64).abs() < 1e-9);
        }
    }

    #[test]
    fn dual_numbers_have_complexity_one() {
        let a = Arc::new(fixtures::truncated_polynomial(2));
        let c = complexity_estimate(&a, 8, 1, 0);
        assert!(c.totals.iter().all(|&x| x == 1));
        assert!((c.cx - 1.0).abs() < 1e-12);
        assert!(c.agc.holds);
    }

    #[test]
    fn single_object_quiver_counts_loops() {
        let f = TabulatedFamily::new(
            vec![String::from("X")],
            vec![1],
            [(1, vec![3])].into_iter().collect(),
        );
        let q = e1_quiver(&f, 1);
        assert_eq!(q.arrows().len(), 3);
        let c = quiver_bound_check(&f, 1, 10);
        assert_eq!(c.fpdim.exact, Some(Rat::from_integer(3.into())));
        assert!(c.holds);
    }

    #[test]
    fn enumeration_respects_budget() {
        let t = HomTableCategory::graded_shifts(0, 9);
        let f = ShiftFamily { table: &t, shift: 1 };
        let all = enumerate_brick_sets(&f, 3, usize::MAX);
        // Subsets of 0..=9 with gaps of at least two: C(10,1), C(9,2), C(8,3).
        assert_eq!(all.counts(), vec![10, 36, 56]);
        assert!(!all.truncated);
        let cut = enumerate_brick_sets(&f, 3, 20);
        assert!(cut.truncated);
        assert_eq!(cut.counts().iter().sum::<usize>(), 20);
    }
}
