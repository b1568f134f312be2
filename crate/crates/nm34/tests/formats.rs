use nm34::formats::{from_graph6, from_json, to_graph6, to_json};
use nm34_core::Graph;
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (0usize..80).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut g = Graph::new(n);
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            g.add_edge(i, j);
                        }
                        k += 1;
                    }
                }
                g
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(g in arb_graph()) {
        let s = to_graph6(&g).unwrap();
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn json_round_trip(g in arb_graph()) {
        let labels = (0..g.n()).map(|v| format!("v{v}")).collect();
        let g = g.with_labels(labels);
        prop_assert_eq!(from_json(&to_json(&g, "g")).unwrap(), g);
    }
}
