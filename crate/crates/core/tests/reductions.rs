//! The gadget constructions on random small formulas: structure, side
//! predictions and the satisfiability equivalences.

use pairdom::cnf::{CnfFormula, Literal};
use pairdom::reductions::{verify_equivalence, Computed, ConstructionKind, Outcome, Rho4Variant};
use pairdom::solvers::SearchBudget;
use proptest::prelude::*;

const B: SearchBudget = SearchBudget {
    max_seconds: 20.0,
    max_nodes: 20_000_000,
};

fn arb_formula(max_vars: usize, max_clauses: usize) -> impl Strategy<Value = CnfFormula> {
    (3..=max_vars)
        .prop_flat_map(move |n| {
            let clause = (
                proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), 3).prop_shuffle(),
                [any::<bool>(), any::<bool>(), any::<bool>()],
            );
            (Just(n), proptest::collection::vec(clause, 1..=max_clauses))
        })
        .prop_map(|(n, clauses)| {
            let clauses = clauses
                .into_iter()
                .map(|(vars, signs)| [0, 1, 2].map(|i| Literal { var: vars[i], positive: signs[i] }))
                .collect();
            CnfFormula::new(n, clauses).unwrap()
        })
}

/// Runs the verifier; every completed report must be free of failures.
fn verified(kind: ConstructionKind, f: &CnfFormula) -> Result<(), TestCaseError> {
    let r = verify_equivalence(kind, f, B).unwrap();
    let (n, m) = (f.n_vars(), f.n_clauses());
    let expected_order = match kind {
        ConstructionKind::TotalVsPaired => 4 * n + 5 * m,
        ConstructionKind::PairedVs2Gamma => 6 * n + m,
        ConstructionKind::PairedVs2Rho4(_) => 6 * n + 24 * m,
        ConstructionKind::PairedVs2Rho3 => 6 * n + 2 * m,
    };
    prop_assert_eq!(r.graph.vertices, expected_order);
    if !kind.uses_nae() {
        prop_assert!(r.graph.bipartite);
    }
    if kind == ConstructionKind::TotalVsPaired {
        prop_assert!(r.graph.min_support_distance.unwrap() >= 4);
    }
    prop_assert!(r.failures().is_empty(), "{:?} on {}", r.failures(), f.to_dimacs());
    prop_assert!(
        !r.computed.values().any(|c| *c == Computed::BudgetExceeded),
        "budget exceeded on {}",
        f.to_dimacs()
    );
    prop_assert_eq!(r.outcome(), Outcome::Pass);
    prop_assert_eq!(r.equivalence_holds, Some(true));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn total_vs_paired(f in arb_formula(4, 4)) {
        verified(ConstructionKind::TotalVsPaired, &f)?;
    }

    #[test]
    fn paired_vs_2gamma(f in arb_formula(4, 5)) {
        verified(ConstructionKind::PairedVs2Gamma, &f)?;
    }

    #[test]
    fn paired_vs_2rho3(f in arb_formula(4, 5)) {
        verified(ConstructionKind::PairedVs2Rho3, &f)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn paired_vs_2rho4(f in arb_formula(4, 2), mirror in any::<bool>()) {
        let variant = if mirror { Rho4Variant::Mirror } else { Rho4Variant::Tikz };
        verified(ConstructionKind::PairedVs2Rho4(variant), &f)?;
    }
}

#[test]
fn total_vs_paired_supports() {
    let f = CnfFormula::new(
        4,
        vec![
            [Literal::pos(1), Literal::neg(2), Literal::pos(3)],
            [Literal::neg(1), Literal::pos(2), Literal::neg(4)],
        ],
    )
    .unwrap();
    let g = ConstructionKind::TotalVsPaired.build(&f);
    let (supports, _) = g.supports_and_leaves();
    let roles: Vec<&str> = supports.iter().filter_map(|&v| g.label(v)).collect();
    for role in ["b_1", "b_2", "b_3", "b_4", "c_1^2", "c_2^2"] {
        assert!(roles.contains(&role), "{role} in {roles:?}");
    }
}
