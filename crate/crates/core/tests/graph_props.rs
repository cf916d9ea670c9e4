use proptest::prelude::*;

use vc_lab::graph::{
    generate, parse_dimacs, parse_edge_list, write_dimacs, write_edge_list, GeneratorSpec, Graph,
    ParseMode,
};

/// Random simple graph: vertex count plus a subset of all pairs.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let chosen = pairs
                .iter()
                .zip(&keep)
                .filter(|(_, k)| **k)
                .map(|(p, _)| *p);
            Graph::from_edge_list(n, chosen).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn dimacs_round_trip(g in arb_graph(14)) {
        let text = write_dimacs(&g);
        prop_assert_eq!(parse_dimacs(&text, ParseMode::Strict).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn handshake_and_symmetry(g in arb_graph(16)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
        for u in 0..g.n() {
            for &v in g.neighbors(u) {
                prop_assert!(g.neighbors(v).contains(&u));
                prop_assert_ne!(u, v);
            }
        }
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(14)) {
        let c = g.complement();
        prop_assert_eq!(c.m() + g.m(), g.n() * g.n().saturating_sub(1) / 2);
        for &(u, v) in c.edges() {
            prop_assert!(!g.has_edge(u, v));
        }
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn gnp_is_deterministic(n in 0usize..40, p in 0.0f64..=1.0, seed: u64) {
        let spec = GeneratorSpec::gnp(n, p, seed);
        let a = generate(&spec).unwrap();
        prop_assert_eq!(&a, &generate(&spec).unwrap());
        prop_assert_eq!(a.degrees().iter().sum::<usize>(), 2 * a.m());
    }

    #[test]
    fn pair_order_does_not_matter(g in arb_graph(10), seed: u64) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut pairs: Vec<_> = g.edges().iter().map(|&(u, v)| if seed % 2 == 0 { (u, v) } else { (v, u) }).collect();
        pairs.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(Graph::from_edge_list(g.n(), pairs).unwrap(), g);
    }
}
