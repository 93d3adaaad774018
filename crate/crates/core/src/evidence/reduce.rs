use std::collections::BTreeSet;

use thiserror::Error;

use super::Term;
use crate::syntax::fresh_name;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionOutcome {
    Reduced(Term),
    Normal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no normal form reached within {fuel} reduction steps")]
pub struct FuelExhausted {
    pub fuel: usize,
}

/// Capture-avoiding substitution `body[replacement/var]`.
pub fn substitute(body: &Term, var: &str, replacement: &Term) -> Term {
    let fv = replacement.free_vars();
    subst(body, var, replacement, &fv)
}

fn subst(t: &Term, x: &str, rep: &Term, rep_fv: &BTreeSet<String>) -> Term {
    if !t.occurs_free(x) {
        return t.clone();
    }
    let under = |y: &str, b: &Term| -> (String, Term) {
        if rep_fv.contains(y) {
            let mut avoid = rep_fv.clone();
            avoid.extend(b.free_vars());
            avoid.insert(x.to_string());
            let fresh = fresh_name(y, &avoid);
            let renamed = substitute(b, y, &Term::Var(fresh.clone()));
            let body = subst(&renamed, x, rep, rep_fv);
            (fresh, body)
        } else {
            (y.to_string(), subst(b, x, rep, rep_fv))
        }
    };
    match t {
        Term::Var(_) => rep.clone(),
        Term::Lam(y, b) => {
            let (y, b) = under(y, b);
            Term::lam(y, b)
        }
        Term::Ap(a, b) => Term::ap(subst(a, x, rep, rep_fv), subst(b, x, rep, rep_fv)),
        Term::Pair(a, b) => Term::pair(subst(a, x, rep, rep_fv), subst(b, x, rep, rep_fv)),
        Term::Fst(a) => Term::fst(subst(a, x, rep, rep_fv)),
        Term::Snd(a) => Term::snd(subst(a, x, rep, rep_fv)),
        Term::Inl(a) => Term::inl(subst(a, x, rep, rep_fv)),
        Term::Inr(a) => Term::inr(subst(a, x, rep, rep_fv)),
        Term::Any(a) => Term::any(subst(a, x, rep, rep_fv)),
        Term::Case(s, y, l, z, r) => {
            let s = subst(s, x, rep, rep_fv);
            let (y, l) = if y == x {
                (y.clone(), (**l).clone())
            } else {
                under(y, l)
            };
            let (z, r) = if z == x {
                (z.clone(), (**r).clone())
            } else {
                under(z, r)
            };
            Term::case(s, y, l, z, r)
        }
        Term::Star => Term::Star,
    }
}

/// Contracts the leftmost-outermost redex.
pub fn reduce_step(t: &Term) -> ReductionOutcome {
    match step(t) {
        Some(t) => ReductionOutcome::Reduced(t),
        None => ReductionOutcome::Normal,
    }
}

fn contract(t: &Term) -> Option<Term> {
    match t {
        Term::Ap(f, a) => match &**f {
            Term::Lam(x, b) => Some(substitute(b, x, a)),
            _ => None,
        },
        Term::Fst(p) => match &**p {
            Term::Pair(a, _) => Some((**a).clone()),
            _ => None,
        },
        Term::Snd(p) => match &**p {
            Term::Pair(_, b) => Some((**b).clone()),
            _ => None,
        },
        Term::Case(s, x, l, y, r) => match &**s {
            Term::Inl(a) => Some(substitute(l, x, a)),
            Term::Inr(b) => Some(substitute(r, y, b)),
            _ => None,
        },
        _ => None,
    }
}

fn step(t: &Term) -> Option<Term> {
    if let Some(t) = contract(t) {
        return Some(t);
    }
    match t {
        Term::Var(_) | Term::Star => None,
        Term::Lam(x, b) => step(b).map(|b| Term::lam(x.clone(), b)),
        Term::Ap(f, a) => step(f)
            .map(|f| Term::ap(f, (**a).clone()))
            .or_else(|| step(a).map(|a| Term::ap((**f).clone(), a))),
        Term::Pair(a, b) => step(a)
            .map(|a| Term::pair(a, (**b).clone()))
            .or_else(|| step(b).map(|b| Term::pair((**a).clone(), b))),
        Term::Fst(a) => step(a).map(Term::fst),
        Term::Snd(a) => step(a).map(Term::snd),
        Term::Inl(a) => step(a).map(Term::inl),
        Term::Inr(a) => step(a).map(Term::inr),
        // No contraction rule for any(.) itself; its argument is still a subterm.
        Term::Any(a) => step(a).map(Term::any),
        Term::Case(s, x, l, y, r) => {
            if let Some(s) = step(s) {
                return Some(Term::case(s, x.clone(), (**l).clone(), y.clone(), (**r).clone()));
            }
            if let Some(l) = step(l) {
                return Some(Term::case((**s).clone(), x.clone(), l, y.clone(), (**r).clone()));
            }
            step(r).map(|r| Term::case((**s).clone(), x.clone(), (**l).clone(), y.clone(), r))
        }
    }
}

/// Normal-order normalisation bounded by `fuel` contraction steps.
pub fn normalize(t: &Term, fuel: usize) -> Result<Term, FuelExhausted> {
    let mut cur = t.clone();
    for _ in 0..fuel {
        match step(&cur) {
            Some(next) => cur = next,
            None => return Ok(cur),
        }
    }
    match step(&cur) {
        None => Ok(cur),
        Some(_) => Err(FuelExhausted { fuel }),
    }
}
