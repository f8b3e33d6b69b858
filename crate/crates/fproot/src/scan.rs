//! Parallel fp scans. Cells are split into chunks of brick sets, scanned on
//! the rayon pool and merged; `FpCell::merge` is schedule independent, so
//! the result matches the serial scan exactly.

use fproot_core::fpcore::{
    assemble_report, enumerate_brick_sets, scan_cell, verify_brick_set, FpBudgets, FpCell, FpReport, HomOf,
    ObjectFamily,
};
use rayon::prelude::*;

use crate::error::CliError;

/// Brick sets per parallel task.
const CHUNK: usize = 2048;

/// Same report as `fproot_core::fpcore::fp_report`, computed in parallel.
pub fn parallel_fp_report<F: ObjectFamily + Sync + ?Sized>(family: &F, budgets: &FpBudgets) -> FpReport {
    let index = enumerate_brick_sets(family, budgets.max_set_size, budgets.max_sets);
    let jobs: Vec<(usize, i64)> =
        (1..=budgets.max_set_size).flat_map(|n| budgets.powers.iter().map(move |&p| (n, p))).collect();
    let cells: Vec<FpCell> = jobs
        .par_iter()
        .map(|&(n, p)| {
            let sets = &index.by_size[n - 1];
            sets.par_chunks(CHUNK)
                .map(|chunk| scan_cell(family, chunk, n, p))
                .reduce(|| FpCell::empty(n, p), FpCell::merge)
        })
        .collect();
    let width = budgets.powers.len();
    let mut grid: Vec<Vec<FpCell>> = Vec::with_capacity(budgets.max_set_size);
    let mut it = cells.into_iter();
    for _ in 0..budgets.max_set_size {
        grid.push(it.by_ref().take(width).collect());
    }
    assemble_report(family, budgets, &index, grid)
}

/// Every witness must be a brick set of the right size.
pub fn check_witnesses<F: ObjectFamily + ?Sized>(family: &F, report: &FpReport) -> Result<(), CliError> {
    for cell in report.grid.iter().flatten() {
        let Some(w) = &cell.witness else { continue };
        if w.len() != cell.set_size {
            return Err(CliError::Invariant(format!(
                "witness of cell ({}, {}) has {} members",
                cell.set_size,
                cell.power,
                w.len()
            )));
        }
        if let Err(v) = verify_brick_set(w, &HomOf(family)) {
            return Err(CliError::Invariant(format!(
                "witness of cell ({}, {}) is not a brick set: dim Hom({}, {}) = {}",
                cell.set_size, cell.power, v.i, v.j, v.dim
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use fproot_core::fixtures;
    use fproot_core::fpcore::{fp_report, module_family};

    use super::*;

    #[test]
    fn parallel_matches_serial() {
        let a = Arc::new(fixtures::g2_algebra());
        let family = module_family(&fixtures::g2_universe(&a, 6, 2), 2);
        let budgets = FpBudgets::new(4, 2);
        let par = parallel_fp_report(&family, &budgets);
        assert_eq!(par, fp_report(&family, &budgets));
        check_witnesses(&family, &par).unwrap();
    }
}
