use std::sync::Arc;

use fproot::formats::{parse_algebra, parse_module, parse_rational};
use fproot_core::exactlin::{ratio, RatMatrix};
use fproot_core::repmod::{bricks_isomorphic, Representation};
use proptest::prelude::*;
use serde_json::json;

proptest! {
    #[test]
    fn rationals_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
        let r = ratio(p, q);
        prop_assert_eq!(parse_rational(&r.to_string()).unwrap(), r.clone());
        // Decimal spellings of p / 10^k.
        let text = format!("{}e-4", p);
        prop_assert_eq!(parse_rational(&text).unwrap(), ratio(p, 10_000));
    }

    #[test]
    fn kronecker_modules_round_trip(d1 in 0usize..3, d2 in 0usize..3, entries in proptest::collection::vec(-3i64..=3, 8)) {
        let alg = Arc::new(parse_algebra(r#"{"vertices": ["1", "2"], "arrows": [
            {"label": "a", "from": "1", "to": "2"}, {"label": "b", "from": "1", "to": "2"}]}"#).unwrap());
        let mut k = 0;
        let mut next = || { k += 1; entries[k % entries.len()] };
        let a: Vec<Vec<i64>> = (0..d2).map(|_| (0..d1).map(|_| next()).collect()).collect();
        let b: Vec<Vec<i64>> = (0..d2).map(|_| (0..d1).map(|_| next()).collect()).collect();
        let text = json!({
            "dimvec": {"1": d1, "2": d2},
            "maps": {
                "a": a.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "b": b.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
            }
        })
        .to_string();
        let m = parse_module(&text, &alg).unwrap();
        let to_matrix = |rows: &[Vec<i64>]| RatMatrix::from_fn(d2, d1, |i, j| ratio(rows[i][j], 1));
        let direct = Representation::new(alg.clone(), vec![d1, d2], vec![to_matrix(&a), to_matrix(&b)]).unwrap();
        prop_assert_eq!(m.maps(), direct.maps());
        if d1 + d2 > 0 && fproot_core::repmod::is_brick(&m).unwrap() {
            prop_assert!(bricks_isomorphic(&m, &direct).unwrap());
        }
    }
}

#[test]
fn module_shape_errors_name_the_map() {
    let alg = Arc::new(parse_algebra(r#"{"vertices": ["1", "2"], "arrows": [{"label": "a", "from": "1", "to": "2"}]}"#).unwrap());
    let e = parse_module(r#"{"dimvec": {"1": 1, "2": 2}, "maps": {"a": [["1", "0"]]}}"#, &alg).unwrap_err().to_string();
    assert!(e.contains("`a`") && e.contains("2x1"), "{e}");
    assert!(parse_module(r#"{"dimvec": {"3": 1}}"#, &alg).is_err());
    assert!(parse_module(r#"{"dimvec": {"1": 1}, "maps": {"z": []}}"#, &alg).is_err());
}
