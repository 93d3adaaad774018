//! Double-negation translations and squash placement.

use thiserror::Error;

use crate::syntax::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error("the Kolmogorov translation is defined for propositional formulas only")]
    Quantified,
    #[error("input must be squash-free")]
    Squashed,
}

fn require_squash_free(f: &Formula) -> Result<(), TranslateError> {
    if f.is_squash_free() {
        Ok(())
    } else {
        Err(TranslateError::Squashed)
    }
}

/// Kolmogorov's embedding: every atom and every connective is prefixed with
/// `~~`, except `False` which stays `False`.
pub fn kolmogorov(f: &Formula) -> Result<Formula, TranslateError> {
    require_squash_free(f)?;
    if !f.is_propositional() {
        return Err(TranslateError::Quantified);
    }
    fn go(f: &Formula) -> Formula {
        match f {
            Formula::Atom(_) | Formula::Pred(..) => Formula::not_not(f.clone()),
            Formula::Falsum => Formula::Falsum,
            Formula::Verum => Formula::Verum,
            Formula::And(a, b) => Formula::not_not(Formula::and(go(a), go(b))),
            Formula::Or(a, b) => Formula::not_not(Formula::or(go(a), go(b))),
            Formula::Imp(a, b) => Formula::not_not(Formula::imp(go(a), go(b))),
            Formula::Forall(..) | Formula::Exists(..) | Formula::Squash(_) => {
                unreachable!("rejected above")
            }
        }
    }
    Ok(go(f))
}

/// Gödel's translation: homomorphic except
/// `(A \/ B)° = ~(~A° /\ ~B°)` and `(exists x. A)° = ~forall x. ~A°`.
/// The output contains no disjunction and no existential.
pub fn godel(f: &Formula) -> Result<Formula, TranslateError> {
    require_squash_free(f)?;
    fn go(f: &Formula) -> Formula {
        match f {
            Formula::Atom(_) | Formula::Pred(..) | Formula::Falsum | Formula::Verum => f.clone(),
            Formula::And(a, b) => Formula::and(go(a), go(b)),
            Formula::Imp(a, b) => Formula::imp(go(a), go(b)),
            Formula::Or(a, b) => {
                Formula::not(Formula::and(Formula::not(go(a)), Formula::not(go(b))))
            }
            Formula::Forall(x, a) => Formula::forall(x.clone(), go(a)),
            Formula::Exists(x, a) => Formula::not(Formula::forall(x.clone(), Formula::not(go(a)))),
            Formula::Squash(_) => unreachable!("rejected above"),
        }
    }
    Ok(go(f))
}

/// Kuroda's translation: `~~(f*)` where `*` inserts `~~` right after every
/// universal quantifier and is homomorphic elsewhere.
pub fn kuroda(f: &Formula) -> Result<Formula, TranslateError> {
    require_squash_free(f)?;
    fn star(f: &Formula) -> Formula {
        match f {
            Formula::Atom(_) | Formula::Pred(..) | Formula::Falsum | Formula::Verum => f.clone(),
            Formula::And(a, b) => Formula::and(star(a), star(b)),
            Formula::Or(a, b) => Formula::or(star(a), star(b)),
            Formula::Imp(a, b) => Formula::imp(star(a), star(b)),
            Formula::Forall(x, a) => Formula::forall(x.clone(), Formula::not_not(star(a))),
            Formula::Exists(x, a) => Formula::exists(x.clone(), star(a)),
            Formula::Squash(_) => unreachable!("rejected above"),
        }
    }
    Ok(Formula::not_not(star(f)))
}

pub fn squash_top(f: &Formula) -> Formula {
    Formula::squash(f.clone())
}

/// Pushes the squash under quantifiers: every maximal quantifier-free
/// subformula `B` becomes `{B}`.
pub fn squash_subformulas(f: &Formula) -> Result<Formula, TranslateError> {
    require_squash_free(f)?;
    fn go(f: &Formula) -> Formula {
        if f.is_propositional() {
            return Formula::squash(f.clone());
        }
        match f {
            Formula::Forall(x, a) => Formula::forall(x.clone(), go(a)),
            Formula::Exists(x, a) => Formula::exists(x.clone(), go(a)),
            Formula::And(a, b) => Formula::and(go(a), go(b)),
            Formula::Or(a, b) => Formula::or(go(a), go(b)),
            Formula::Imp(a, b) => Formula::imp(go(a), go(b)),
            _ => unreachable!("leaves are propositional"),
        }
    }
    Ok(go(f))
}

/// Removes every squash node.
pub fn erase_squash(f: &Formula) -> Formula {
    match f {
        Formula::Squash(a) => erase_squash(a),
        Formula::Atom(_) | Formula::Pred(..) | Formula::Falsum | Formula::Verum => f.clone(),
        Formula::And(a, b) => Formula::and(erase_squash(a), erase_squash(b)),
        Formula::Or(a, b) => Formula::or(erase_squash(a), erase_squash(b)),
        Formula::Imp(a, b) => Formula::imp(erase_squash(a), erase_squash(b)),
        Formula::Forall(x, a) => Formula::forall(x.clone(), erase_squash(a)),
        Formula::Exists(x, a) => Formula::exists(x.clone(), erase_squash(a)),
    }
}

/// True when `f` contains no disjunction and no existential.
pub fn is_negative(f: &Formula) -> bool {
    match f {
        Formula::Or(..) | Formula::Exists(..) => false,
        Formula::And(a, b) | Formula::Imp(a, b) => is_negative(a) && is_negative(b),
        Formula::Forall(_, a) | Formula::Squash(a) => is_negative(a),
        _ => true,
    }
}
