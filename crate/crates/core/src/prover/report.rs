use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::evidence::{check_evidence, Term};
use crate::kernel::{check_proof, RuleId};
use crate::oracle::{kripke_refutes, truth_table_valid};
use crate::syntax::Formula;
use crate::translate::{godel, is_negative, kolmogorov, kuroda};

use super::{
    classical_pipeline, consistency_check, enumerate_formulas, g4ip, godel_check, kolmogorov_check,
    CorpusSpec, ProverError,
};

/// Worlds allowed in the Kripke search run against every G4ip verdict.
pub const KRIPKE_WORLDS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub formula: String,
    pub classical_valid: bool,
    pub ipc_provable: bool,
    pub not_not_provable: bool,
    pub squash_provable: bool,
    pub countermodel_found: bool,
    /// The intuitionistic proof uses `FalseElim`, i.e. is not minimal.
    pub ex_falso: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Aggregates {
    pub formulas: usize,
    pub classical_valid: usize,
    pub ipc_provable: usize,
    pub not_not_provable: usize,
    pub squash_provable: usize,
    pub countermodel_found: usize,
    /// Tautologies without an intuitionistic proof.
    pub classical_only: usize,
    /// Squash proofs that passed the consistency check.
    pub consistency_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub spec: CorpusSpec,
    pub rows: Vec<Row>,
    pub aggregates: Aggregates,
    pub elapsed_ms: u128,
}

/// Runs every corpus formula through the prover and the oracles, checking
/// on the way that
///
/// * a G4ip proof is accepted by the kernel, its realizer type-checks, and
///   the formula is a tautology;
/// * G4ip fails exactly when a Kripke countermodel exists;
/// * tautologies are exactly the formulas whose double negation G4ip
///   proves, and each gets a consistent proof of its squash;
/// * the Kolmogorov and Gödel translations of tautologies are provable,
///   Gödel output is negative, and all three translations preserve
///   truth-table validity.
///
/// The first violation in corpus order aborts the sweep.
pub fn run_report(spec: &CorpusSpec) -> Result<Report, ProverError> {
    let start = Instant::now();
    let corpus = enumerate_formulas(spec);
    let rows: Vec<Result<Row, ProverError>> = corpus.par_iter().map(row).collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    let mut a = Aggregates {
        formulas: rows.len(),
        ..Aggregates::default()
    };
    for r in &rows {
        a.classical_valid += r.classical_valid as usize;
        a.ipc_provable += r.ipc_provable as usize;
        a.not_not_provable += r.not_not_provable as usize;
        a.squash_provable += r.squash_provable as usize;
        a.countermodel_found += r.countermodel_found as usize;
        a.classical_only += (r.classical_valid && !r.ipc_provable) as usize;
        a.consistency_checked += r.squash_provable as usize;
    }
    Ok(Report {
        spec: spec.clone(),
        rows,
        aggregates: a,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn row(g: &Formula) -> Result<Row, ProverError> {
    let fail = |what: &str| Err(ProverError::violation(g, what));
    let classical_valid = truth_table_valid(g)?;

    let ipc = g4ip::prove(g);
    if let Some(p) = &ipc {
        if !classical_valid {
            return fail("G4ip proved a formula that is not a tautology");
        }
        match check_proof(p) {
            Ok(r) if check_evidence(&r, g, &[]) => {}
            Ok(r) => return fail(&format!("extracted realizer {r} does not check")),
            Err(e) => return fail(&format!("kernel rejected the G4ip proof: {e}")),
        }
    }
    let ipc_provable = ipc.is_some();
    let ex_falso = ipc.as_ref().is_some_and(|p| p.uses(RuleId::FalseElim));

    let countermodel_found = kripke_refutes(g, KRIPKE_WORLDS)?.is_some();
    if countermodel_found == ipc_provable {
        return fail(if ipc_provable {
            "Kripke countermodel for a G4ip theorem"
        } else {
            "no Kripke countermodel for a G4ip failure"
        });
    }

    let not_not_provable = g4ip::provable(&[], &Formula::not_not(g.clone()));
    if not_not_provable != classical_valid {
        return fail("Glivenko: double negation provable iff tautology");
    }

    let squash_provable = if classical_valid {
        let p = classical_pipeline(g)?;
        match check_proof(&p) {
            Ok(Term::Star) => {}
            Ok(r) => return fail(&format!("squash proof extracted {r}, expected star")),
            Err(e) => return fail(&format!("kernel rejected the squash proof: {e}")),
        }
        if !consistency_check(&p)? {
            return fail("squash proof fails the consistency check");
        }
        true
    } else {
        false
    };

    if !kolmogorov_check(g)? {
        return fail("Kolmogorov translation of a tautology is not provable");
    }
    if !godel_check(g)? {
        return fail("Gödel translation of a tautology is not provable");
    }
    let t = |r: Result<Formula, _>| -> Result<Formula, ProverError> {
        r.map_err(|e: crate::translate::TranslateError| ProverError::Contract(e.to_string()))
    };
    let (k, go, ku) = (t(kolmogorov(g))?, t(godel(g))?, t(kuroda(g))?);
    if !is_negative(&go) {
        return fail("Gödel translation contains a disjunction or existential");
    }
    for (name, f) in [("Kolmogorov", &k), ("Gödel", &go), ("Kuroda", &ku)] {
        if truth_table_valid(f)? != classical_valid {
            return fail(&format!("{name} translation changes truth-table validity"));
        }
    }

    Ok(Row {
        formula: g.to_string(),
        classical_valid,
        ipc_provable,
        not_not_provable,
        squash_provable,
        countermodel_found,
        ex_falso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_atom_depth_two() {
        let r = run_report(&CorpusSpec::full(1, 2).unwrap()).unwrap();
        assert_eq!(r.rows.len(), 516);
        let a = &r.aggregates;
        assert_eq!(a.classical_valid, a.squash_provable);
        assert_eq!(a.classical_valid, a.not_not_provable);
        assert_eq!(a.ipc_provable + a.countermodel_found, a.formulas);
    }

    #[test]
    fn excluded_middle_row() {
        use super::super::Connective::*;
        let spec = CorpusSpec::new(1, 2, &[Or, Imp, Falsum]).unwrap();
        let r = run_report(&spec).unwrap();
        let row = r.rows.iter().find(|r| r.formula == "P \\/ ~P").unwrap();
        assert!(row.classical_valid);
        assert!(!row.ipc_provable);
        assert!(row.not_not_provable);
        assert!(row.squash_provable);
        assert!(row.countermodel_found);
    }
}
