use oidrd::family::FamilySpec;
use oidrd::harness::{self, AuditReport, Sweep};
use oidrd::{enumerate, Graph};
use proptest::prelude::*;

fn family_strategy() -> impl Strategy<Value = FamilySpec> {
    let leaf = prop_oneof![
        (1..8usize).prop_map(FamilySpec::Path),
        (3..8usize).prop_map(FamilySpec::Cycle),
        (1..6usize).prop_map(FamilySpec::Complete),
        (1..5usize).prop_map(FamilySpec::Empty),
        (1..6usize).prop_map(FamilySpec::Star),
        (0..4usize, 0..4usize).prop_map(|(a, b)| FamilySpec::DoubleStar(a, b)),
        (1..4usize, 1..4usize).prop_map(|(a, b)| FamilySpec::CompleteBipartite(a, b)),
        prop::collection::vec(1..3usize, 2..4).prop_map(FamilySpec::CompleteMultipartite),
        (1..3usize, 1..3usize).prop_map(|(k, leaves)| FamilySpec::G1 { k, leaves }),
        (1..4usize).prop_map(|k| FamilySpec::G2 { k }),
        (2..4usize).prop_map(|k| FamilySpec::G3 { k }),
        prop::collection::vec(2..3usize, 3..4).prop_map(FamilySpec::SharpnessH),
    ];
    leaf.prop_recursive(2, 6, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| FamilySpec::Corona(Box::new(a), Box::new(b))),
            inner.prop_map(|a| FamilySpec::Gadget(Box::new(a))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn family_text_round_trips(spec in family_strategy()) {
        let text = spec.to_string();
        let back: FamilySpec = text.parse().unwrap();
        prop_assert_eq!(&back, &spec);
        if let Ok(graph) = spec.build() {
            prop_assert_eq!(back.build().unwrap(), graph);
        }
    }

    #[test]
    fn edge_list_round_trips(n in 1..12usize, seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let graph = enumerate::random_graph(n, &mut rng);
        let back = Graph::parse_edge_list(&graph.to_edge_list()).unwrap();
        prop_assert_eq!(back, graph);
    }
}

#[test]
fn generated_families_round_trip_through_edge_lists() {
    for text in [
        "sharpness:2,3,2,2",
        "corona(cycle:4,empty:2)",
        "gadget(kpartite:1,2,2)",
        "h5:b5,2,0",
    ] {
        let graph: Graph = text.parse::<FamilySpec>().unwrap().build().unwrap();
        assert_eq!(
            Graph::parse_edge_list(&graph.to_edge_list()).unwrap(),
            graph,
            "{text}"
        );
    }
}

fn strip_runtime(mut r: AuditReport) -> AuditReport {
    r.runtime_ms = 0;
    r
}

#[test]
fn campaigns_are_deterministic_and_reports_reparse() {
    let sweep = Sweep {
        max_n: 7,
        exhaustive_max: 4,
        samples: 25,
        seed: 99,
    };
    let a = harness::audit_oracle(&sweep).unwrap();
    let b = harness::audit_oracle(&sweep).unwrap();
    assert_eq!(strip_runtime(a.clone()), strip_runtime(b));
    assert_eq!(a.seed, Some(99));
    let back: AuditReport = serde_json::from_str(&a.to_json()).unwrap();
    assert_eq!(back, a);

    let other = harness::audit_characterization(&Sweep { seed: 100, ..sweep }).unwrap();
    assert!(other.passed());
    assert_eq!(other.tallies.values().sum::<u64>(), other.instances_checked);
}

#[test]
fn audit_plan_runs_every_campaign_small() {
    let plan = harness::AuditPlan { max_n: 4, seed: 3 };
    let reports = plan.run_all().unwrap();
    assert_eq!(reports.len(), harness::CAMPAIGNS.len());
    for r in &reports {
        assert!(r.passed(), "{}: {:?}", r.campaign, r.violations);
    }
    assert!(plan.run("nonsense").is_err());
}
