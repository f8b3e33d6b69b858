use std::sync::Arc;

use fproot_core::algebra::BoundAlgebra;
use fproot_core::fixtures;
use fproot_core::fpcore::{
    adjacency_of, brick_universe, complexity_estimate, enumerate_brick_sets, fp_report, fpc_vs_cx_check, fpdim_n,
    homtable_fp, module_family, quiver_bound_check, scan_cell, FpBudgets, FpCell, HomTableCategory, ObjectFamily,
    Power, TabulatedFamily,
};
use fproot_core::quiver::{dynkin_quiver, DynkinType};
use fproot_core::spectral::rho_counts;
use fproot_core::tables::{a2, cross_check_k2};
use proptest::prelude::*;

fn g2_family(max_power: usize) -> TabulatedFamily {
    let a = Arc::new(fixtures::g2_algebra());
    module_family(&fixtures::g2_universe(&a, 4, 2), max_power)
}

fn kronecker_family() -> TabulatedFamily {
    let a = Arc::new(fixtures::kronecker_algebra());
    module_family(&fixtures::kronecker_universe(&a, 4, 4), 1)
}

fn subsets_of(set: &[usize]) -> Vec<Vec<usize>> {
    (1..(1u32 << set.len()))
        .map(|mask| set.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &x)| x).collect())
        .collect()
}

#[test]
fn subsets_of_brick_sets_never_exceed_the_whole() {
    let family = g2_family(2);
    let index = enumerate_brick_sets(&family, 4, usize::MAX);
    for power in 1..=2 {
        let sigma = Power { family: &family, power };
        for set in index.by_size.iter().flatten() {
            let whole = rho_counts(set.len(), &adjacency_of(set, &sigma).concat()).value;
            for sub in subsets_of(set) {
                let part = rho_counts(sub.len(), &adjacency_of(&sub, &sigma).concat()).value;
                assert!(part <= whole + 1e-9, "{sub:?} in {set:?} at power {power}");
            }
        }
    }
}

#[test]
fn larger_budgets_never_lower_a_cell() {
    let family = g2_family(1);
    let mut previous: Option<Vec<f64>> = None;
    for max_sets in [5, 20, 80, usize::MAX] {
        let report = fp_report(&family, &FpBudgets { max_set_size: 3, powers: vec![1], max_sets });
        let values: Vec<f64> = report.grid.iter().map(|row| row[0].value.value).collect();
        if let Some(prev) = &previous {
            for (p, v) in prev.iter().zip(&values) {
                assert!(p <= &(v + 1e-9));
            }
        }
        if max_sets == usize::MAX {
            assert!(!report.truncated);
        } else {
            assert!(report.set_counts.iter().sum::<usize>() <= max_sets);
        }
        previous = Some(values);
    }
}

#[test]
fn subfamilies_give_smaller_values() {
    let family = g2_family(1);
    let lambdas: Vec<usize> = (0..family.len()).filter(|&i| family.name(i).starts_with("X1")).collect();
    assert!(lambdas.len() >= 2);
    let sub = family.restrict(&lambdas);
    let budgets = FpBudgets::new(3, 1);
    let (big, small) = (fp_report(&family, &budgets), fp_report(&sub, &budgets));
    for n in 1..=3 {
        for p in 0..=1 {
            assert!(small.cell(n, p).unwrap().value.value <= big.cell(n, p).unwrap().value.value + 1e-9);
        }
    }
    // The one-parameter family is Ext-orthogonal except for self-extensions.
    assert_eq!(small.cell(3, 1).unwrap().value.value, 1.0);
}

#[test]
fn power_zero_is_the_identity() {
    let family = g2_family(1);
    let report = fp_report(&family, &FpBudgets::new(4, 1));
    for n in 1..=4 {
        let v = &report.cell(n, 0).unwrap().value;
        assert_eq!(v.value, 1.0, "set size {n}");
    }
}

#[test]
fn path_algebras_of_dynkin_type_vanish() {
    for (t, r) in [(DynkinType::A, 3), (DynkinType::D, 4)] {
        let alg = Arc::new(BoundAlgebra::path_algebra(dynkin_quiver(t, r).unwrap()).unwrap());
        let family = module_family(&brick_universe(&alg, 6, 300, 5), 2);
        let report = fp_report(&family, &FpBudgets::new(3, 2));
        for p in 1..=2 {
            assert!(report.column_max(p).unwrap().is_zero(), "{t:?}{r} power {p}");
        }
        let check = quiver_bound_check(&family, 3, usize::MAX);
        assert!(check.holds && check.quiver_fpdim.is_zero());
    }
}

#[test]
fn g2_growth_of_ext_powers() {
    let family = g2_family(10);
    let report = fp_report(&family, &FpBudgets { max_set_size: 2, powers: (0..=10).collect(), max_sets: usize::MAX });
    let growth = report.growth.as_ref().unwrap();
    let r2 = 2f64.sqrt();
    let ratio = growth.fpv_ratio.unwrap();
    assert!((ratio - r2).abs() <= 0.05 * r2, "ratio estimate {ratio}");
    assert!(growth.fpv >= r2 - 1e-9, "root estimate {}", growth.fpv);
    assert!(growth.exponential);
    assert!(report.fpgldim_at_window_edge);
    let check = quiver_bound_check(&family, 3, usize::MAX);
    assert!(check.holds && check.fpdim.value >= r2 - 1e-9 && check.quiver_fpdim.value >= r2 - 1e-9);
}

#[test]
fn complexity_of_small_algebras() {
    let g2 = Arc::new(fixtures::g2_algebra());
    assert!(complexity_estimate(&g2, 10, 2, 1).cx.is_infinite());
    let dual = Arc::new(fixtures::truncated_polynomial(2));
    let c = complexity_estimate(&dual, 10, 2, 1);
    assert!((c.cx - 1.0).abs() < 1e-9 && c.agc.holds);
    let point = Arc::new(BoundAlgebra::path_algebra(dynkin_quiver(DynkinType::A, 1).unwrap()).unwrap());
    assert_eq!(complexity_estimate(&point, 6, 2, 1).cx, 0.0);
}

#[test]
fn fp_complexity_stays_below_complexity() {
    let dual = Arc::new(fixtures::truncated_polynomial(2));
    let family = module_family(&brick_universe(&dual, 4, 50, 1), 8);
    let report = fp_report(&family, &FpBudgets::new(2, 8));
    let check = fpc_vs_cx_check(&dual, &report, 8, 0.25);
    assert!(check.consistent, "fpc {} cx {}", check.fpc, check.cx);

    let a2_alg = Arc::new(BoundAlgebra::path_algebra(dynkin_quiver(DynkinType::A, 2).unwrap()).unwrap());
    let family = module_family(&brick_universe(&a2_alg, 4, 50, 1), 6);
    let report = fp_report(&family, &FpBudgets::new(3, 6));
    let check = fpc_vs_cx_check(&a2_alg, &report, 6, 0.25);
    assert!(check.consistent && check.cx == 0.0 && check.fpc == 0.0);

    let g2 = Arc::new(fixtures::g2_algebra());
    let report = fp_report(&g2_family(6), &FpBudgets::new(2, 6));
    assert!(fpc_vs_cx_check(&g2, &report, 6, 0.25).consistent);
}

#[test]
fn kronecker_matches_projective_line() {
    let report = fp_report(&kronecker_family(), &FpBudgets::new(3, 1));
    let check = cross_check_k2(&report);
    assert_eq!(check.rows.len(), 3);
    assert!(check.agree, "{:?}", check.rows);
    assert!(check.strict_gap);
}

#[test]
fn shift_three_on_graded_hom_table_matches_a2_closed_form() {
    let t = HomTableCategory::graded_shifts(-12, 12);
    let report = homtable_fp(&t, 3, &FpBudgets { max_set_size: 3, powers: vec![1], max_sets: usize::MAX });
    assert_eq!(report.column_max(1).unwrap().value, a2(1, 0, 1) as f64);
}

#[test]
fn fpdim_n_agrees_with_report() {
    let family = g2_family(1);
    let report = fp_report(&family, &FpBudgets::new(3, 1));
    for n in 1..=3 {
        assert_eq!(fpdim_n(&family, n, 1, usize::MAX), report.cell(n, 1).unwrap().value);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn merged_scans_do_not_depend_on_the_split(cuts in proptest::collection::vec(any::<prop::sample::Index>(), 0..4), reverse in any::<bool>()) {
        let family = g2_family(1);
        let index = enumerate_brick_sets(&family, 2, usize::MAX);
        let sets = &index.by_size[1];
        let whole = scan_cell(&family, sets, 2, 1);
        let mut bounds: Vec<usize> = cuts.iter().map(|c| c.index(sets.len() + 1)).collect();
        bounds.push(0);
        bounds.push(sets.len());
        bounds.sort_unstable();
        let mut parts: Vec<FpCell> = bounds.windows(2).map(|w| scan_cell(&family, &sets[w[0]..w[1]], 2, 1)).collect();
        if reverse {
            parts.reverse();
        }
        let merged = parts.into_iter().fold(FpCell::empty(2, 1), FpCell::merge);
        prop_assert_eq!(merged, whole);
    }
}
