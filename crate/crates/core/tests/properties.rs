use proptest::prelude::*;

use sqk_core::evidence::{check_evidence, reduce_step, ReductionOutcome};
use sqk_core::kernel::{check_proof, Sequent};
use sqk_core::oracle::truth_table_valid;
use sqk_core::prover::{enumerate_formulas, g4ip_prove, CorpusSpec};
use sqk_core::syntax::{parse_formula, print_formula, Formula};
use sqk_core::translate::{erase_squash, godel, kolmogorov, kuroda, squash_subformulas, squash_top};

fn prop_formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        Just(Formula::atom("P")),
        Just(Formula::atom("Q")),
        Just(Formula::atom("R")),
        Just(Formula::Falsum),
        Just(Formula::Verum),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
        ]
    })
}

fn any_formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        Just(Formula::atom("A")),
        Just(Formula::pred("P", "x")),
        Just(Formula::pred("P", "y")),
        Just(Formula::pred("Q", "z")),
        Just(Formula::Falsum),
        Just(Formula::Verum),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
            inner.clone().prop_map(Formula::squash),
            (prop_oneof![Just("x"), Just("y")], inner.clone()).prop_map(|(x, a)| Formula::forall(x, a)),
            (prop_oneof![Just("x"), Just("y")], inner).prop_map(|(x, a)| Formula::exists(x, a)),
        ]
    })
}

proptest! {
    #[test]
    fn print_parse_round_trip(f in any_formula()) {
        prop_assert_eq!(parse_formula(&print_formula(&f)).unwrap(), f);
    }

    #[test]
    fn full_parenthesisation_round_trips(f in any_formula()) {
        let full = sqk_core::syntax::print_full(&f);
        prop_assert_eq!(parse_formula(&full).unwrap(), f.clone());
        prop_assert_eq!(sqk_core::syntax::print_full(&f), full);
    }

    #[test]
    fn alpha_eq_is_reflexive_and_symmetric(f in any_formula(), g in any_formula()) {
        prop_assert!(f.alpha_eq(&f));
        prop_assert_eq!(f.alpha_eq(&g), g.alpha_eq(&f));
    }

    #[test]
    fn renaming_a_binder_preserves_alpha_equivalence(f in any_formula()) {
        let renamed = Formula::forall("w", f.subst_var("x", "w"));
        let original = Formula::forall("x", f.clone());
        prop_assert!(original.alpha_eq(&renamed));
    }

    #[test]
    fn erasure_undoes_squash_placement(f in any_formula()) {
        let plain = erase_squash(&f);
        prop_assert_eq!(erase_squash(&squash_top(&f)), plain.clone());
        prop_assert_eq!(erase_squash(&squash_subformulas(&plain).unwrap()), plain.clone());
        prop_assert_eq!(erase_squash(&plain), plain);
    }

    #[test]
    fn kolmogorov_at_most_quintuples_size(f in prop_formula()) {
        prop_assert!(kolmogorov(&f).unwrap().size() <= 5 * f.size());
    }

    #[test]
    fn translations_preserve_validity(f in prop_formula()) {
        let v = truth_table_valid(&f).unwrap();
        prop_assert_eq!(truth_table_valid(&kolmogorov(&f).unwrap()).unwrap(), v);
        prop_assert_eq!(truth_table_valid(&godel(&f).unwrap()).unwrap(), v);
        prop_assert_eq!(truth_table_valid(&kuroda(&f).unwrap()).unwrap(), v);
    }

    #[test]
    fn subject_reduction_on_extracted_realizers(f in prop_formula()) {
        let Some(p) = g4ip_prove(&f).unwrap() else { return Ok(()) };
        let mut t = check_proof(&p).unwrap();
        prop_assert!(truth_table_valid(&f).unwrap());
        prop_assert!(check_evidence(&t, &f, &[]));
        for _ in 0..200 {
            match reduce_step(&t) {
                ReductionOutcome::Reduced(next) => {
                    prop_assert!(check_evidence(&next, &f, &[]), "{} does not check", next);
                    t = next;
                }
                ReductionOutcome::Normal => break,
            }
        }
    }

    #[test]
    fn weakening_and_exchange(f in prop_formula(), extra in prop_formula()) {
        let Some(p) = g4ip_prove(&f).unwrap() else { return Ok(()) };
        let weakened = p.map_sequents(&mut |s: &Sequent| {
            let mut hyps = vec![("unused".to_string(), extra.clone())];
            hyps.extend(s.hyps.iter().cloned());
            Sequent::new(hyps, s.goal.clone())
        });
        prop_assert!(check_proof(&weakened).is_ok());
        let exchanged = weakened.map_sequents(&mut |s: &Sequent| {
            let mut hyps = s.hyps.clone();
            hyps.reverse();
            Sequent::new(hyps, s.goal.clone())
        });
        prop_assert!(check_proof(&exchanged).is_ok());
    }
}

#[test]
fn corpus_round_trips_through_the_printer() {
    for f in enumerate_formulas(&CorpusSpec::full(2, 2).unwrap()) {
        assert_eq!(parse_formula(&print_formula(&f)).unwrap(), f);
    }
}
