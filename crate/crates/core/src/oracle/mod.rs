//! Brute-force semantic oracles, independent of the kernel and the prover.

mod fol;
mod inhabit;
mod kripke;
mod truth;

use thiserror::Error;

pub use fol::{finite_countermodel, finite_model_valid, FiniteModel};
pub use inhabit::{evidence_formula, inhabitation_search, EvidenceModel, TypeDesc};
pub use kripke::{kripke_refutes, KripkeModel};
pub use truth::{eval_classical, falsifying_valuation, truth_table_valid, Valuation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("formula contains quantifiers; this oracle is propositional")]
    Quantified,
    #[error("formula contains a squash; this oracle expects squash-free input")]
    Squashed,
    #[error("formula has free individual variables: {0}")]
    Open(String),
    #[error("atom `{0}` is not assigned by the model")]
    Unassigned(String),
    #[error("search space too large: {0}")]
    TooLarge(String),
    #[error("malformed model description: {0}")]
    BadModel(String),
}
