use std::collections::BTreeMap;
use std::fmt;

use super::OracleError;
use crate::syntax::{print_formula, Formula};

/// Truth assignment to atomic leaves, keyed by their printed form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Valuation(pub BTreeMap<String, bool>);

impl Valuation {
    pub fn get(&self, leaf: &Formula) -> Option<bool> {
        self.0.get(&print_formula(leaf)).copied()
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Classical value of a quantifier-free formula; squashes are transparent.
///
/// Panics if a leaf is missing from the valuation.
pub fn eval_classical(f: &Formula, v: &Valuation) -> bool {
    match f {
        Formula::Atom(_) | Formula::Pred(..) => v
            .get(f)
            .unwrap_or_else(|| panic!("valuation does not cover {}", print_formula(f))),
        Formula::Falsum => false,
        Formula::Verum => true,
        Formula::And(a, b) => eval_classical(a, v) && eval_classical(b, v),
        Formula::Or(a, b) => eval_classical(a, v) || eval_classical(b, v),
        Formula::Imp(a, b) => !eval_classical(a, v) || eval_classical(b, v),
        Formula::Squash(a) => eval_classical(a, v),
        Formula::Forall(..) | Formula::Exists(..) => panic!("quantifier in propositional evaluation"),
    }
}

/// All valuations of the leaves of `f`, in binary counting order with the
/// first leaf as the most significant bit.
pub(crate) fn valuations(f: &Formula) -> impl Iterator<Item = Valuation> {
    let leaves: Vec<String> = f.atomic_leaves().iter().map(print_formula).collect();
    let mut names = leaves;
    names.sort();
    let k = names.len();
    (0u64..1 << k).map(move |bits| {
        Valuation(
            names
                .iter()
                .enumerate()
                .map(|(i, n)| (n.clone(), bits >> (k - 1 - i) & 1 == 1))
                .collect(),
        )
    })
}

/// First valuation (in counting order) under which `f` is false.
pub fn falsifying_valuation(f: &Formula) -> Result<Option<Valuation>, OracleError> {
    if !f.is_propositional() {
        return Err(OracleError::Quantified);
    }
    if f.atomic_leaves().len() > 24 {
        return Err(OracleError::TooLarge("more than 24 atoms".into()));
    }
    Ok(valuations(f).find(|v| !eval_classical(f, v)))
}

/// Classical tautology check over all `2^k` valuations.
pub fn truth_table_valid(f: &Formula) -> Result<bool, OracleError> {
    falsifying_valuation(f).map(|v| v.is_none())
}
