use proptest::prelude::*;
use quandle_core::parser::action_word;
use quandle_core::*;

fn relation(g: usize) -> impl Strategy<Value = Relation> {
    (0..g, prop::collection::vec(0..g, 1..6), 0..g)
        .prop_map(|(l, w, r)| Relation::new(l, Word::new(w), r))
}

fn presentation() -> impl Strategy<Value = Presentation> {
    (1usize..4).prop_flat_map(|g| {
        prop::collection::vec(relation(g), g..g + 3).prop_map(move |rels| {
            let names = (0..g)
                .map(|i| ((b'a' + i as u8) as char).to_string())
                .collect();
            Presentation::new(names, rels).unwrap()
        })
    })
}

fn element(g: usize, letters: &[usize]) -> ExprNode {
    if letters.is_empty() {
        ExprNode::leaf(g)
    } else {
        ExprNode::exp(ExprNode::leaf(g), ExprNode::word(letters))
    }
}

fn small_budget() -> EnumerationBudget {
    EnumerationBudget::new(300, 2_000_000)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn finite_tables_are_quandles(p in presentation()) {
        let result = enumerate(&p, small_budget());
        let Some(t) = result.table() else { return Ok(()) };
        prop_assert!(t.check_invariants().passed(), "{}", t.check_invariants());
        for j in 0..t.num_generators() {
            for x in 0..t.size() {
                prop_assert_eq!(quandle_op(t, x, t.seed(j)).unwrap(), t.act(x, j));
            }
        }
        let op = full_op_table(t);
        for x in 0..t.size() {
            for y in 0..t.size() {
                prop_assert_eq!(op.op(x, y), quandle_op(t, x, y).unwrap());
            }
        }
        if t.size() <= 60 {
            let report = check_axioms(&op);
            prop_assert!(report.passed(), "{}", report);
        }
        let report = verify_relations(t, &p.relations().iter().map(|r| family::SuiteItem {
            name: "secondary".into(),
            check: family::SuiteCheck::Everywhere(secondary_of(r)),
        }).collect::<Vec<_>>());
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn enumeration_is_deterministic(p in presentation()) {
        let a = enumerate(&p, small_budget());
        let b = enumerate(&p, small_budget());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn components_partition_the_table(p in presentation()) {
        let Some(t) = enumerate(&p, small_budget()).into_table() else { return Ok(()) };
        let c = components(&t);
        prop_assert_eq!(c.sizes.iter().sum::<usize>(), t.size());
        for v in 0..t.size() {
            for &u in t.row(v) {
                prop_assert_eq!(c.membership[u], c.membership[v]);
            }
        }
    }

    #[test]
    fn reassociation_matches_the_operation(
        u in prop::collection::vec(0usize..3, 0..8),
        v in prop::collection::vec(0usize..3, 0..8),
        a in 0usize..3,
        b in 0usize..3,
        k in 1usize..4,
        p in 1usize..4,
    ) {
        // L(k, p/3) ∪ C is finite, so every word lands somewhere
        prop_assume!(p % 3 != 0);
        let fp = FamilyParams::normalize(k as i64, p as i64, 3).unwrap();
        let t = enumerate(&family::reduced_presentation(&fp), EnumerationBudget::default())
            .into_table()
            .unwrap();
        let e = ExprNode::exp(element(a, &u), element(b, &v));
        let (base, w) = flatten(&e).unwrap();
        prop_assert_eq!(base, a);
        let x = apply_word(&t, t.seed(a), &Word::new(u.clone())).unwrap();
        let y = apply_word(&t, t.seed(b), &Word::new(v.clone())).unwrap();
        let lhs = apply_word(&t, t.seed(a), &w).unwrap();
        prop_assert_eq!(lhs, quandle_op(&t, x, y).unwrap());
        prop_assert_eq!(action_word(&element(b, &v)).unwrap(), Word::new(v.clone()).conjugate_of(b));
    }

    #[test]
    fn larger_budgets_reach_further(p in presentation(), small in 2usize..40) {
        let lo = enumerate(&p, EnumerationBudget::new(small, 2_000_000));
        let hi = enumerate(&p, EnumerationBudget::new(small * 4, 2_000_000));
        if let Some(t) = lo.table() {
            prop_assert_eq!(hi.table().map(CayleyTable::size), Some(t.size()));
        }
    }
}
