//! Proof search and the corpus sweep.
//!
//! [`g4ip_prove`] decides intuitionistic propositional provability and
//! hands back kernel proofs. [`classical_pipeline`] turns every tautology
//! `G` into a proof of `{G}`: search for `~~G` (which exists by Glivenko)
//! and close with `ClassicalIntro`. [`run_report`] sweeps a generated
//! corpus and cross-checks all of this against the oracles.

mod corpus;
mod g4ip;
mod report;
mod search;

use thiserror::Error;

use crate::kernel::{check_proof, ProofNode, RuleId, Sequent};
use crate::oracle::{truth_table_valid, OracleError};
use crate::syntax::Formula;
use crate::translate::{erase_squash, godel, kolmogorov};

pub use corpus::{enumerate_formulas, Connective, CorpusSpec};
pub use report::{run_report, Aggregates, Report, Row};
pub use search::{bounded_search, explore, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProverError {
    #[error("formula must be propositional")]
    Quantified,
    #[error("formula must be squash-free")]
    Squashed,
    #[error("not a tautology: {0}")]
    NotATautology(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("theorem violated for {formula}: {what}")]
    Violation { formula: String, what: String },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

impl ProverError {
    pub(crate) fn violation(f: &Formula, what: impl Into<String>) -> ProverError {
        ProverError::Violation {
            formula: f.to_string(),
            what: what.into(),
        }
    }
}

fn require_ipc_input(f: &Formula) -> Result<(), ProverError> {
    if !f.is_propositional() {
        return Err(ProverError::Quantified);
    }
    if !f.is_squash_free() {
        return Err(ProverError::Squashed);
    }
    Ok(())
}

/// An intuitionistic proof of `f`, or `None` when there is none. The
/// search is a decision procedure: `None` is definitive.
pub fn g4ip_prove(f: &Formula) -> Result<Option<ProofNode>, ProverError> {
    require_ipc_input(f)?;
    Ok(g4ip::prove(f))
}

/// Provability alone, without building the proof object.
pub fn g4ip_provable(f: &Formula) -> Result<bool, ProverError> {
    require_ipc_input(f)?;
    Ok(g4ip::provable(&[], f))
}

/// A kernel proof of `|- {g}` for every tautology `g`.
pub fn classical_pipeline(g: &Formula) -> Result<ProofNode, ProverError> {
    require_ipc_input(g)?;
    if !truth_table_valid(g)? {
        return Err(ProverError::NotATautology(g.to_string()));
    }
    let nn = Formula::not_not(g.clone());
    let inner = g4ip::prove(&nn)
        .ok_or_else(|| ProverError::violation(g, "tautology whose double negation has no intuitionistic proof"))?;
    Ok(ProofNode::new(RuleId::ClassicalIntro, Sequent::goal(Formula::squash(g.clone()))).premise(inner))
}

/// Whether a closed proof of `{G}` is accepted by the kernel and `G`,
/// with squashes erased, is a classical tautology.
pub fn consistency_check(p: &ProofNode) -> Result<bool, ProverError> {
    let g = match &p.goal.goal {
        Formula::Squash(g) if p.goal.hyps.is_empty() && g.is_propositional() => g,
        _ => {
            return Err(ProverError::Contract(format!(
                "expected a proof of `|- {{G}}` with G propositional, found `{}`",
                p.goal
            )))
        }
    };
    Ok(check_proof(p).is_ok() && truth_table_valid(&erase_squash(g))?)
}

/// If `g` is a tautology, its Kolmogorov translation is provable.
pub fn kolmogorov_check(g: &Formula) -> Result<bool, ProverError> {
    require_ipc_input(g)?;
    if !truth_table_valid(g)? {
        return Ok(true);
    }
    let k = kolmogorov(g).map_err(|e| ProverError::Contract(e.to_string()))?;
    Ok(g4ip::provable(&[], &k))
}

/// If `g` is a tautology, its Gödel translation is provable from the
/// stability `~~P => P` of each atom `P` of `g`.
///
/// The translation leaves atoms alone, which is sound only where atomic
/// propositions are stable (decidable, as in arithmetic); without those
/// hypotheses `(~~P => P)°` would be its own unprovable self.
pub fn godel_check(g: &Formula) -> Result<bool, ProverError> {
    require_ipc_input(g)?;
    if !truth_table_valid(g)? {
        return Ok(true);
    }
    let t = godel(g).map_err(|e| ProverError::Contract(e.to_string()))?;
    Ok(g4ip::provable(&atom_stability(g), &t))
}

/// Whether the Gödel translation of `g` is provable with no hypotheses.
pub fn godel_provable_bare(g: &Formula) -> Result<bool, ProverError> {
    require_ipc_input(g)?;
    let t = godel(g).map_err(|e| ProverError::Contract(e.to_string()))?;
    Ok(g4ip::provable(&[], &t))
}

/// `~~P => P` for each atom `P` of `g`.
pub fn atom_stability(g: &Formula) -> Vec<Formula> {
    let mut atoms: Vec<Formula> = g.atomic_leaves().into_iter().filter(|a| matches!(a, Formula::Atom(_))).collect();
    atoms.sort();
    atoms.dedup();
    atoms
        .into_iter()
        .map(|p| Formula::imp(Formula::not_not(p.clone()), p))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evidence::Term;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn g4ip_examples() {
        assert!(g4ip_prove(&f("P => P")).unwrap().is_some());
        assert!(g4ip_prove(&f("~~(P \\/ ~P)")).unwrap().is_some());
        assert!(g4ip_prove(&f("((P => Q) => P) => P")).unwrap().is_none());
        assert_eq!(g4ip_prove(&f("{P}")), Err(ProverError::Squashed));
        assert_eq!(g4ip_prove(&f("forall x. P(x)")), Err(ProverError::Quantified));
    }

    #[test]
    fn pipeline_examples() {
        for s in ["P \\/ ~P", "~~P => P", "((P => Q) => P) => P"] {
            let p = classical_pipeline(&f(s)).unwrap();
            assert_eq!(check_proof(&p).unwrap(), Term::Star, "{s}");
            assert_eq!(p.goal.goal, Formula::squash(f(s)));
            assert!(consistency_check(&p).unwrap());
        }
        assert_eq!(
            classical_pipeline(&f("P /\\ ~P")).unwrap_err(),
            ProverError::NotATautology("P /\\ ~P".into())
        );
    }

    #[test]
    fn consistency_contract() {
        let p = g4ip_prove(&f("P => P")).unwrap().unwrap();
        assert!(matches!(consistency_check(&p), Err(ProverError::Contract(_))));
        let lem = classical_pipeline(&f("P \\/ ~P")).unwrap();
        let plain = lem.premises[0].clone();
        assert!(matches!(consistency_check(&plain), Err(ProverError::Contract(_))));
    }

    #[test]
    fn translation_checks() {
        for s in ["P \\/ ~P", "~~P => P", "P => Q", "((P => Q) => P) => P", "False"] {
            assert!(kolmogorov_check(&f(s)).unwrap(), "{s}");
            assert!(godel_check(&f(s)).unwrap(), "{s}");
        }
        assert!(godel_provable_bare(&f("P \\/ ~P")).unwrap());
        assert!(!godel_provable_bare(&f("~~P => P")).unwrap());
    }
}
