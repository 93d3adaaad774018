use std::collections::BTreeMap;
use std::fmt;

use super::OracleError;
use crate::syntax::{free_vars, Formula, IdentSpec};
use crate::translate::erase_squash;

/// Classical first-order structure over the domain `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteModel {
    pub size: usize,
    pub predicates: BTreeMap<String, Vec<bool>>,
    pub atoms: BTreeMap<String, bool>,
}

impl FiniteModel {
    /// Truth of `f` with its free variables bound by `env` (innermost last).
    pub fn holds(&self, f: &Formula, env: &mut Vec<(String, usize)>) -> bool {
        match f {
            Formula::Atom(a) => self.atoms[a],
            Formula::Pred(p, x) => {
                let (_, d) = env
                    .iter()
                    .rev()
                    .find(|(v, _)| v == x)
                    .unwrap_or_else(|| panic!("unbound individual variable {x}"));
                self.predicates[p][*d]
            }
            Formula::Falsum => false,
            Formula::Verum => true,
            Formula::And(a, b) => self.holds(a, env) && self.holds(b, env),
            Formula::Or(a, b) => self.holds(a, env) || self.holds(b, env),
            Formula::Imp(a, b) => !self.holds(a, env) || self.holds(b, env),
            Formula::Squash(a) => self.holds(a, env),
            Formula::Forall(x, a) | Formula::Exists(x, a) => {
                let universal = matches!(f, Formula::Forall(..));
                for d in 0..self.size {
                    env.push((x.clone(), d));
                    let v = self.holds(a, env);
                    env.pop();
                    if v != universal {
                        return v;
                    }
                }
                universal
            }
        }
    }
}

impl fmt::Display for FiniteModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "domain size {}", self.size)?;
        for (p, table) in &self.predicates {
            let ext: Vec<String> = table
                .iter()
                .enumerate()
                .filter(|(_, b)| **b)
                .map(|(d, _)| d.to_string())
                .collect();
            write!(f, "; {p} = {{{}}}", ext.join(", "))?;
        }
        for (a, v) in &self.atoms {
            write!(f, "; {a}={v}")?;
        }
        Ok(())
    }
}

/// First finite model (by domain size, then table order) falsifying the
/// closed formula `f`. Squashes are erased first.
pub fn finite_countermodel(
    f: &Formula,
    max_domain: usize,
) -> Result<Option<FiniteModel>, OracleError> {
    let fv = free_vars(f);
    if !fv.is_empty() {
        return Err(OracleError::Open(fv.into_iter().collect::<Vec<_>>().join(", ")));
    }
    let f = erase_squash(f);
    let spec = IdentSpec::of(&f).map_err(OracleError::BadModel)?;
    let preds: Vec<&String> = spec.predicates.keys().collect();
    let atoms: Vec<&String> = spec.atoms.iter().collect();
    for size in 1..=max_domain {
        let bits = preds.len() * size + atoms.len();
        if bits > 24 {
            return Err(OracleError::TooLarge(format!(
                "{bits} table bits at domain size {size}"
            )));
        }
        for code in 0u64..1 << bits {
            let bit = |i: usize| code >> i & 1 == 1;
            let model = FiniteModel {
                size,
                predicates: preds
                    .iter()
                    .enumerate()
                    .map(|(j, p)| ((*p).clone(), (0..size).map(|d| bit(j * size + d)).collect()))
                    .collect(),
                atoms: atoms
                    .iter()
                    .enumerate()
                    .map(|(j, a)| ((*a).clone(), bit(preds.len() * size + j)))
                    .collect(),
            };
            if !model.holds(&f, &mut Vec::new()) {
                return Ok(Some(model));
            }
        }
    }
    Ok(None)
}

/// True iff the closed formula holds in every model with a domain of size
/// `1..=max_domain`.
pub fn finite_model_valid(f: &Formula, max_domain: usize) -> Result<bool, OracleError> {
    finite_countermodel(f, max_domain).map(|m| m.is_none())
}
