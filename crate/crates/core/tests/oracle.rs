//! Exact solvers against exhaustive subset enumeration.

use pairdom::families::Family;
use pairdom::solvers::{enumerate_min_dominating_sets, solve, Parameter, SearchBudget, SolveError};
use pairdom::Graph;
use pairdom_oracle::SmallGraph;
use proptest::prelude::*;

const B: SearchBudget = SearchBudget {
    max_seconds: 30.0,
    max_nodes: 10_000_000,
};

fn check(g: &Graph) {
    let edges: Vec<_> = g.edges().collect();
    let o = SmallGraph::new(g.order(), &edges);
    let value = |p| solve(g, p, B).map(|w| {
        assert!(w.validate(g), "{p} witness {:?} on {edges:?}", w.set);
        w.value
    });
    assert_eq!(value(Parameter::Gamma), Ok(o.domination_number()), "{edges:?}");
    assert_eq!(
        value(Parameter::IndependentDomination),
        Ok(o.independent_domination_number()),
        "{edges:?}"
    );
    for (p, expected) in [
        (Parameter::GammaT, o.total_domination_number()),
        (Parameter::GammaPr, o.paired_domination_number()),
    ] {
        match expected {
            Some(v) => assert_eq!(value(p), Ok(v), "{p} on {edges:?}"),
            None => assert!(matches!(value(p), Err(SolveError::IsolatedVertex(_)))),
        }
    }
    for k in 1..=4 {
        assert_eq!(value(Parameter::Packing(k)), Ok(o.packing_number(k)), "rho{k} on {edges:?}");
    }
}

/// Every graph, connected or not, on up to five labeled vertices.
#[test]
fn all_graphs_up_to_five_vertices() {
    let mut count = 0;
    for n in 1..=5usize {
        let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            check(&Graph::new(n, &edges).unwrap());
            count += 1;
        }
    }
    assert_eq!(count, 1 + 2 + 8 + 64 + 1024);
}

#[test]
fn minimum_dominating_sets_match_enumeration() {
    for n in 1..=5usize {
        let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = Graph::new(n, &edges).unwrap();
            let mut expected = SmallGraph::new(n, &edges).minimum_dominating_sets();
            expected.sort();
            assert_eq!(
                enumerate_min_dominating_sets(&g, B).unwrap(),
                expected,
                "{edges:?}"
            );
        }
    }
}

#[test]
fn named_examples() {
    let c4 = Family::Cycle { n: 4 }.generate().unwrap();
    let o = SmallGraph::new(4, &c4.edges().collect::<Vec<_>>());
    assert_eq!(o.minimum_dominating_sets().len(), 6);
    for p in [4, 6, 8] {
        let g = Family::CoronaComplete { p }.generate().unwrap();
        let o = SmallGraph::new(2 * p, &g.edges().collect::<Vec<_>>());
        assert_eq!(o.paired_domination_number(), Some(p));
        assert_eq!(o.packing_number(3), 1);
        check(&g);
    }
    check(&Family::TrianglePendants.generate().unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn random_connected_graphs(n in 6usize..=12, p in 0.15f64..0.7, seed in any::<u64>()) {
        check(&Family::RandomConnected { n, p, seed }.generate().unwrap());
    }

    #[test]
    fn random_trees(n in 2usize..=14, seed in any::<u64>()) {
        check(&Family::RandomTree { n, seed }.generate().unwrap());
    }
}
