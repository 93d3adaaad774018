//! Proof kernel and toolchain for a constructive reading of classical
//! propositional logic through the squash modality `{P}`.
//!
//! * [`syntax`]: formulas, parser, printer.
//! * [`evidence`]: realizer terms, reduction and type checking.
//! * [`translate`]: Kolmogorov, Gödel and Kuroda translations, squash placement.
//! * [`oracle`]: truth tables, finite models, inhabitation, Kripke countermodels.
//! * [`kernel`]: the trusted natural-deduction checker with realizer extraction.
//! * [`prover`]: G4ip, the classical-introduction pipeline and corpus sweeps.

pub mod evidence;
pub mod kernel;
pub mod oracle;
pub mod prover;
pub mod syntax;
pub mod translate;

pub use evidence::{alpha_eq, check_evidence, normalize, parse_term, reduce_step, substitute, Term};
pub use syntax::{free_vars, parse_formula, print_formula, Formula, IdentSpec, ParseError};
pub use kernel::{check_proof, proof_parse, sequent_parse, CheckError, ProofNode, RuleId, Sequent};
