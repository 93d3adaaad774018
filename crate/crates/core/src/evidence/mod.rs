//! Realizer language: an untyped lambda calculus with pairs, injections,
//! the unit element `star`, and the stuck ex-falso operator `any(t)`.

mod check;
mod parse;
mod reduce;

use std::collections::BTreeSet;
use std::fmt;

pub use check::{check_evidence, CHECK_FUEL};
pub use parse::parse_term;
pub use reduce::{normalize, reduce_step, substitute, FuelExhausted, ReductionOutcome};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Lam(String, Box<Term>),
    Ap(Box<Term>, Box<Term>),
    Pair(Box<Term>, Box<Term>),
    Fst(Box<Term>),
    Snd(Box<Term>),
    Inl(Box<Term>),
    Inr(Box<Term>),
    /// `case(scrutinee; x.left; y.right)`
    Case(Box<Term>, String, Box<Term>, String, Box<Term>),
    Star,
    Any(Box<Term>),
}

impl Term {
    pub fn var(x: impl Into<String>) -> Term {
        Term::Var(x.into())
    }

    pub fn lam(x: impl Into<String>, body: Term) -> Term {
        Term::Lam(x.into(), Box::new(body))
    }

    pub fn ap(f: Term, a: Term) -> Term {
        Term::Ap(Box::new(f), Box::new(a))
    }

    pub fn pair(a: Term, b: Term) -> Term {
        Term::Pair(Box::new(a), Box::new(b))
    }

    pub fn fst(t: Term) -> Term {
        Term::Fst(Box::new(t))
    }

    pub fn snd(t: Term) -> Term {
        Term::Snd(Box::new(t))
    }

    pub fn inl(t: Term) -> Term {
        Term::Inl(Box::new(t))
    }

    pub fn inr(t: Term) -> Term {
        Term::Inr(Box::new(t))
    }

    pub fn case(
        t: Term,
        x: impl Into<String>,
        l: Term,
        y: impl Into<String>,
        r: Term,
    ) -> Term {
        Term::Case(Box::new(t), x.into(), Box::new(l), y.into(), Box::new(r))
    }

    pub fn any(t: Term) -> Term {
        Term::Any(Box::new(t))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free<'a>(&'a self, bound: &mut Vec<&'a str>, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(x) => {
                if !bound.contains(&x.as_str()) {
                    out.insert(x.clone());
                }
            }
            Term::Lam(x, b) => {
                bound.push(x);
                b.collect_free(bound, out);
                bound.pop();
            }
            Term::Ap(a, b) | Term::Pair(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Term::Fst(t) | Term::Snd(t) | Term::Inl(t) | Term::Inr(t) | Term::Any(t) => {
                t.collect_free(bound, out)
            }
            Term::Case(s, x, l, y, r) => {
                s.collect_free(bound, out);
                bound.push(x);
                l.collect_free(bound, out);
                bound.pop();
                bound.push(y);
                r.collect_free(bound, out);
                bound.pop();
            }
            Term::Star => {}
        }
    }

    pub fn occurs_free(&self, x: &str) -> bool {
        match self {
            Term::Var(y) => x == y,
            Term::Lam(y, b) => y != x && b.occurs_free(x),
            Term::Ap(a, b) | Term::Pair(a, b) => a.occurs_free(x) || b.occurs_free(x),
            Term::Fst(t) | Term::Snd(t) | Term::Inl(t) | Term::Inr(t) | Term::Any(t) => {
                t.occurs_free(x)
            }
            Term::Case(s, y, l, z, r) => {
                s.occurs_free(x) || (y != x && l.occurs_free(x)) || (z != x && r.occurs_free(x))
            }
            Term::Star => false,
        }
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Star => 1,
            Term::Lam(_, b) => 1 + b.size(),
            Term::Ap(a, b) | Term::Pair(a, b) => 1 + a.size() + b.size(),
            Term::Fst(t) | Term::Snd(t) | Term::Inl(t) | Term::Inr(t) | Term::Any(t) => {
                1 + t.size()
            }
            Term::Case(s, _, l, _, r) => 1 + s.size() + l.size() + r.size(),
        }
    }
}

/// Equality up to consistent renaming of bound variables.
pub fn alpha_eq(a: &Term, b: &Term) -> bool {
    fn var_eq(x: &str, y: &str, ea: &[&str], eb: &[&str]) -> bool {
        match (ea.iter().rposition(|v| *v == x), eb.iter().rposition(|v| *v == y)) {
            (Some(i), Some(j)) => i == j,
            (None, None) => x == y,
            _ => false,
        }
    }
    fn go<'a>(a: &'a Term, b: &'a Term, ea: &mut Vec<&'a str>, eb: &mut Vec<&'a str>) -> bool {
        match (a, b) {
            (Term::Var(x), Term::Var(y)) => var_eq(x, y, ea, eb),
            (Term::Lam(x, s), Term::Lam(y, t)) => {
                ea.push(x);
                eb.push(y);
                let r = go(s, t, ea, eb);
                ea.pop();
                eb.pop();
                r
            }
            (Term::Ap(a1, a2), Term::Ap(b1, b2)) | (Term::Pair(a1, a2), Term::Pair(b1, b2)) => {
                go(a1, b1, ea, eb) && go(a2, b2, ea, eb)
            }
            (Term::Fst(s), Term::Fst(t))
            | (Term::Snd(s), Term::Snd(t))
            | (Term::Inl(s), Term::Inl(t))
            | (Term::Inr(s), Term::Inr(t))
            | (Term::Any(s), Term::Any(t)) => go(s, t, ea, eb),
            (Term::Case(s1, x1, l1, y1, r1), Term::Case(s2, x2, l2, y2, r2)) => {
                if !go(s1, s2, ea, eb) {
                    return false;
                }
                ea.push(x1);
                eb.push(x2);
                let left = go(l1, l2, ea, eb);
                ea.pop();
                eb.pop();
                if !left {
                    return false;
                }
                ea.push(y1);
                eb.push(y2);
                let right = go(r1, r2, ea, eb);
                ea.pop();
                eb.pop();
                right
            }
            (Term::Star, Term::Star) => true,
            _ => false,
        }
    }
    go(a, b, &mut Vec::new(), &mut Vec::new())
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(x) => write!(f, "{x}"),
            Term::Lam(x, b) => write!(f, "lam({x}.{b})"),
            Term::Ap(a, b) => write!(f, "ap({a}; {b})"),
            Term::Pair(a, b) => write!(f, "pair({a}; {b})"),
            Term::Fst(t) => write!(f, "fst({t})"),
            Term::Snd(t) => write!(f, "snd({t})"),
            Term::Inl(t) => write!(f, "inl({t})"),
            Term::Inr(t) => write!(f, "inr({t})"),
            Term::Case(s, x, l, y, r) => write!(f, "case({s}; {x}.{l}; {y}.{r})"),
            Term::Star => f.write_str("star"),
            Term::Any(t) => write!(f, "any({t})"),
        }
    }
}
