use fproot_core::quiver::{
    all_dynkin, all_extended_dynkin, classify_underlying_graph, cycle_number, dynkin_quiver, extended_dynkin_quiver,
    fpdim_trichotomy_check, positive_roots, quiver_fpdim, CycleCount, DynkinType, GraphClass, Quiver,
};
use proptest::prelude::*;

/// Count walks from `v` back to `v` that do not pass through `v` on the
/// way, up to a length bound, stopping at two. Branches that cannot get
/// back to `v` in the remaining steps are cut.
fn first_returns(q: &Quiver, v: usize, max_len: usize) -> usize {
    let n = q.vertex_count();
    // dist[u]: fewest arrows from u to v avoiding v in between.
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for a in q.arrows() {
        if a.target == v && a.source != v && dist[a.source] == usize::MAX {
            dist[a.source] = 1;
            queue.push_back(a.source);
        }
    }
    while let Some(u) = queue.pop_front() {
        for a in q.arrows() {
            if a.target == u && a.source != v && dist[a.source] == usize::MAX {
                dist[a.source] = dist[u] + 1;
                queue.push_back(a.source);
            }
        }
    }
    fn walk(q: &Quiver, v: usize, dist: &[usize], at: usize, len: usize, max_len: usize, found: &mut usize) {
        for a in q.arrows() {
            if *found >= 2 {
                return;
            }
            if a.source != at || len + 1 > max_len {
                continue;
            }
            if a.target == v {
                *found += 1;
            } else if dist[a.target] != usize::MAX && len + 1 + dist[a.target] <= max_len {
                walk(q, v, dist, a.target, len + 1, max_len, found);
            }
        }
    }
    let mut found = 0;
    walk(q, v, &dist, v, 0, max_len, &mut found);
    found
}

fn quiver_strategy() -> impl Strategy<Value = Quiver> {
    (1..=6usize).prop_flat_map(|n| {
        proptest::collection::vec(prop_oneof![6 => Just(0u64), 2 => Just(1u64), 1 => Just(2u64)], n * n)
            .prop_map(move |e| Quiver::from_adjacency(&(0..n).map(|i| e[i * n..(i + 1) * n].to_vec()).collect::<Vec<_>>()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn cycle_numbers_match_walk_count(q in quiver_strategy()) {
        let c = cycle_number(&q);
        let bound = 3 * q.vertex_count() + 1;
        for (v, &got) in c.per_vertex.iter().enumerate() {
            let want = match first_returns(&q, v, bound) {
                0 => CycleCount::Zero,
                1 => CycleCount::One,
                _ => CycleCount::AtLeastTwo,
            };
            prop_assert_eq!(got, want, "vertex {}", v);
        }
    }

    #[test]
    fn trichotomy_holds(q in quiver_strategy()) {
        prop_assert!(fpdim_trichotomy_check(&q).pass);
    }

    #[test]
    fn opposite_quiver_has_same_invariants(q in quiver_strategy()) {
        let op = q.opposite();
        prop_assert!((quiver_fpdim(&q).value - quiver_fpdim(&op).value).abs() < 1e-9);
        prop_assert_eq!(cycle_number(&q).global, cycle_number(&op).global);
    }

    #[test]
    fn adding_arrows_never_lowers_fpdim(q in quiver_strategy(), s in 0usize..6, t in 0usize..6) {
        let n = q.vertex_count();
        let mut bigger = q.clone();
        bigger.add_arrow_at("extra", s % n, t % n).unwrap();
        prop_assert!(quiver_fpdim(&q).value <= quiver_fpdim(&bigger).value + 1e-9);
    }
}

#[test]
fn root_counts() {
    // |Phi+| for A_n, D_n, E_6, E_7, E_8.
    for n in 1..=8 {
        assert_eq!(positive_roots(&dynkin_quiver(DynkinType::A, n).unwrap()).unwrap().len(), n * (n + 1) / 2);
    }
    for n in 4..=8 {
        assert_eq!(positive_roots(&dynkin_quiver(DynkinType::D, n).unwrap()).unwrap().len(), n * (n - 1));
    }
    for (n, c) in [(6, 36), (7, 63), (8, 120)] {
        assert_eq!(positive_roots(&dynkin_quiver(DynkinType::E, n).unwrap()).unwrap().len(), c);
    }
}

#[test]
fn roots_have_unit_tits_form() {
    for q in all_dynkin(7) {
        let adj = q.underlying_adjacency();
        for r in positive_roots(&q).unwrap() {
            let n = r.len();
            let mut form: i64 = r.iter().map(|x| x * x).sum();
            for i in 0..n {
                for j in (i + 1)..n {
                    form -= adj[i][j] as i64 * r[i] * r[j];
                }
            }
            assert_eq!(form, 1, "{r:?}");
        }
    }
}

#[test]
fn classification_round_trips() {
    for t in [DynkinType::A, DynkinType::D, DynkinType::E] {
        for r in 1..=8 {
            if let Some(q) = dynkin_quiver(t, r) {
                assert_eq!(classify_underlying_graph(&q).unwrap(), GraphClass::Dynkin(t, r));
            }
            if let Some(q) = extended_dynkin_quiver(t, r) {
                assert_eq!(classify_underlying_graph(&q).unwrap(), GraphClass::Extended(t, r));
            }
        }
    }
    assert_eq!(all_extended_dynkin(8).len(), 9 + 5 + 3);
    let mut wild = Quiver::with_vertices(2);
    for k in 0..3 {
        wild.add_arrow_at(&format!("a{k}"), 0, 1).unwrap();
    }
    assert_eq!(classify_underlying_graph(&wild).unwrap(), GraphClass::Other);
}

#[test]
fn kronecker_and_loops() {
    let mut k2 = Quiver::with_vertices(2);
    k2.add_arrow_at("a", 0, 1).unwrap();
    k2.add_arrow_at("b", 0, 1).unwrap();
    assert!(quiver_fpdim(&k2).is_zero());
    let one_loop = Quiver::from_adjacency(&[vec![1]]);
    assert_eq!(cycle_number(&one_loop).global, CycleCount::One);
    let two_loops = Quiver::from_adjacency(&[vec![2]]);
    assert_eq!(cycle_number(&two_loops).global, CycleCount::AtLeastTwo);
    assert!((quiver_fpdim(&two_loops).value - 2.0).abs() < 1e-12);
}
