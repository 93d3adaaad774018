use sqk_core::kernel::{check_proof, RuleId};
use sqk_core::prover::{bounded_search, explore, run_report, CorpusSpec, Verdict};
use sqk_core::syntax::parse_formula;

#[test]
fn report_two_atoms_depth_two() {
    let r = run_report(&CorpusSpec::full(2, 2).unwrap()).unwrap();
    let a = &r.aggregates;
    // Frozen on first run.
    assert_eq!(a.formulas, 4 + 48 + 1152);
    assert_eq!(a.classical_valid, a.squash_provable);
    assert_eq!(a.classical_valid, a.not_not_provable);
    assert_eq!(a.ipc_provable + a.countermodel_found, a.formulas);
    assert_eq!(a.classical_valid - a.ipc_provable, a.classical_only);
}

#[test]
fn report_rows_follow_corpus_order() {
    let r = run_report(&CorpusSpec::full(1, 1).unwrap()).unwrap();
    let names: Vec<&str> = r.rows.iter().take(4).map(|r| r.formula.as_str()).collect();
    assert_eq!(names, ["P", "False", "True", "P /\\ P"]);
}

#[test]
fn mixed_mode_questions() {
    let cases = [
        ("(P => Q) => {P => Q}", 6),
        ("({P} => {Q}) => {P => Q}", 10),
        ("{P /\\ Q} => {P} /\\ {Q}", 8),
        ("{P} /\\ {Q} => {P /\\ Q}", 8),
    ];
    for (s, depth) in cases {
        let f = parse_formula(s).unwrap();
        match explore(&f, depth).unwrap() {
            Verdict::Proved(p) => {
                check_proof(&p).unwrap();
            }
            v => panic!("{s}: {}", v.label()),
        }
    }
    let p = bounded_search(&parse_formula("({P} => {Q}) => {P => Q}").unwrap(), 10)
        .unwrap()
        .unwrap();
    assert!(p.uses(RuleId::ClassicalIntro));
}
