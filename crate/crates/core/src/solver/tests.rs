use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::enumerate;
use crate::family::FamilySpec;
use crate::labeling::is_oidrd;

fn g(s: &str) -> Graph {
    s.parse::<FamilySpec>().unwrap().build().unwrap()
}

fn lab(s: &str) -> Labeling {
    s.parse().unwrap()
}

#[test]
fn oidrd_values() {
    assert_eq!(solve_oidrd(&g("path:3")).unwrap().value, 3);
    assert_eq!(solve_oidrd(&g("kbipartite:4,7")).unwrap().value, 8);
    assert_eq!(solve_oidrd(&g("dstar:2,3")).unwrap().value, 6);
    let e3 = solve_oidrd(&g("empty:3")).unwrap();
    assert_eq!(e3.value, 6);
    assert_eq!(e3.witness, lab("2,2,2"));
}

#[test]
fn brute_force_values() {
    for (spec, value) in [("cycle:5", 6), ("cycle:6", 6), ("complete:4", 5)] {
        let r = brute_force_oidrd(&g(spec)).unwrap();
        assert_eq!(r.value, value, "{spec}");
        assert!(r.optimal_count.unwrap() >= 1);
    }
}

#[test]
fn optimal_enumeration() {
    // A 1 next to a 2 is covered, so the split labelings are optimal too.
    assert_eq!(
        enumerate_optimal_oidrd(&g("path:2")).unwrap(),
        vec![lab("0,3"), lab("1,2"), lab("2,1"), lab("3,0")]
    );
    assert_eq!(
        enumerate_optimal_oidrd(&g("empty:1")).unwrap(),
        vec![lab("2")]
    );
    let p3 = enumerate_optimal_oidrd(&g("path:3")).unwrap();
    assert!(p3.contains(&lab("0,3,0")));
}

#[test]
fn auxiliary_values() {
    assert_eq!(solve_alpha(&g("cycle:5")).unwrap().value, 2);
    assert_eq!(solve_gamma(&g("path:6")).unwrap().value, 2);
    let oir = solve_gamma_oir(&g("empty:4")).unwrap();
    assert_eq!(oir.value, 4);
    assert_eq!(oir.witness, lab("1,1,1,1"));
}

#[test]
fn bundles() {
    let b = bundle(&g("star:5")).unwrap();
    assert_eq!((b.alpha, b.beta, b.gamma, b.gamma_oidr), (5, 1, 1, 3));
    let b = bundle(&g("path:4")).unwrap();
    assert_eq!((b.beta, b.gamma_oidr), (2, 5));
    let b = bundle(&g("cycle:4")).unwrap();
    assert_eq!((b.gamma_oidr, b.gamma_oir), (4, 3));
}

#[test]
fn beta_witness_complements_alpha_witness() {
    for spec in ["cycle:5", "path:4", "kbipartite:2,3", "h1:c1,1,1,1,1"] {
        let graph = g(spec);
        let a = solve_alpha(&graph).unwrap().witness;
        let b = solve_beta(&graph).unwrap().witness;
        assert!(
            a.values().iter().zip(b.values()).all(|(x, y)| x + y == 1),
            "{spec}"
        );
    }
}

#[test]
fn witness_is_lexicographically_smallest() {
    for spec in ["path:4", "cycle:6", "kbipartite:2,3", "g1:2,1", "h3:1,2"] {
        let graph = g(spec);
        let solved = solve_oidrd(&graph).unwrap();
        let all = enumerate_optimal_oidrd(&graph).unwrap();
        assert_eq!(&solved.witness, all.iter().min().unwrap(), "{spec}");
    }
}

#[test]
fn oracle_agreement_small_graphs() {
    for n in 1..=5 {
        for graph in enumerate::all_graphs(n).unwrap() {
            for inv in Invariant::ALL {
                let fast = inv.solve(&graph).unwrap();
                let slow = inv.brute_force(&graph).unwrap();
                assert_eq!(fast.value, slow.value, "{} on {graph:?}", inv.name());
                assert_eq!(fast.witness, slow.witness, "{} on {graph:?}", inv.name());
            }
        }
    }
}

#[test]
fn worker_count_does_not_change_results() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut graphs = vec![
        g("sharpness:2,2,2"),
        g("gadget(cycle:4)"),
        g("kbipartite:6,7"),
    ];
    for _ in 0..4 {
        let edges: Vec<(usize, usize)> = (0..14)
            .flat_map(|u| (u + 1..14).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(0.3))
            .collect();
        graphs.push(Graph::from_edges(14, &edges).unwrap());
    }
    for graph in &graphs {
        let one = solve_with(graph, Problem::Oidrd, &SolveOptions { workers: 1 }).unwrap();
        let four = solve_with(graph, Problem::Oidrd, &SolveOptions { workers: 4 }).unwrap();
        assert_eq!((one.value, &one.witness), (four.value, &four.witness));
    }
}

#[test]
fn caps_are_enforced() {
    if std::env::var(crate::limits::ENV_MAX_N).is_ok() {
        return;
    }
    assert!(matches!(
        solve_oidrd(&Graph::empty(25)),
        Err(SolverError::TooLarge { cap: 24, .. })
    ));
    assert!(matches!(
        brute_force_oidrd(&Graph::empty(13)),
        Err(SolverError::TooLarge { cap: 12, .. })
    ));
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = enumerate::pair_count(n);
        let mask = if bits == 0 {
            0
        } else {
            u64::MAX >> (64 - bits)
        };
        (Just(n), 0..=mask).prop_map(|(n, m)| Graph::from_edge_mask(n, m))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn witnesses_are_valid_and_sandwiched(graph in graph_strategy(9)) {
        let b = bundle(&graph).unwrap();
        prop_assert!(b.violated_relations().is_empty());
        let r = solve_oidrd(&graph).unwrap();
        prop_assert!(is_oidrd(&graph, &r.witness).unwrap());
        prop_assert_eq!(r.witness.weight(), r.value);
        prop_assert!(r.value <= 3 * graph.n() as u32);
        if graph.is_connected() && graph.n() >= 2 {
            prop_assert!(b.gamma_oidr < 2 * b.gamma_oir);
        }
        prop_assert_eq!(b.gamma_oidr == 2 * b.gamma_oir, graph.is_edgeless());
    }

    #[test]
    fn relabeling_preserves_values(graph in graph_strategy(8), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..graph.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let other = graph.permuted(&perm);
        for inv in Invariant::ALL {
            prop_assert_eq!(inv.solve(&graph).unwrap().value, inv.solve(&other).unwrap().value);
        }
    }
}
