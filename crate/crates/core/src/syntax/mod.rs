//! Formula AST for propositional and first-order formulas with the squash
//! connective `{F}`.
//!
//! Negation is not a constructor: `~F` is `Imp(F, Falsum)` everywhere.

mod parse;
mod print;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use parse::{parse_formula, ParseError};
pub use print::{print_formula, print_full};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    /// Unary predicate applied to an individual variable.
    Pred(String, String),
    Falsum,
    Verum,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
    Squash(Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    pub fn pred(name: impl Into<String>, var: impl Into<String>) -> Formula {
        Formula::Pred(name.into(), var.into())
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    /// `~a`, i.e. `a => False`.
    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::imp(a, Formula::Falsum)
    }

    pub fn not_not(a: Formula) -> Formula {
        Formula::not(Formula::not(a))
    }

    pub fn forall(var: impl Into<String>, body: Formula) -> Formula {
        Formula::Forall(var.into(), Box::new(body))
    }

    pub fn exists(var: impl Into<String>, body: Formula) -> Formula {
        Formula::Exists(var.into(), Box::new(body))
    }

    pub fn squash(a: Formula) -> Formula {
        Formula::Squash(Box::new(a))
    }

    /// If this is `Imp(a, Falsum)`, the negated formula `a`.
    pub fn as_negation(&self) -> Option<&Formula> {
        match self {
            Formula::Imp(a, b) if **b == Formula::Falsum => Some(a),
            _ => None,
        }
    }

    /// Atoms and predicate applications: the leaves a valuation or Kripke
    /// forcing relation has to assign.
    pub fn is_atomic(&self) -> bool {
        matches!(self, Formula::Atom(_) | Formula::Pred(..))
    }

    /// Quantifier-free.
    pub fn is_propositional(&self) -> bool {
        match self {
            Formula::Forall(..) | Formula::Exists(..) => false,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.is_propositional() && b.is_propositional()
            }
            Formula::Squash(a) => a.is_propositional(),
            _ => true,
        }
    }

    pub fn is_squash_free(&self) -> bool {
        match self {
            Formula::Squash(_) => false,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.is_squash_free() && b.is_squash_free()
            }
            Formula::Forall(_, a) | Formula::Exists(_, a) => a.is_squash_free(),
            _ => true,
        }
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => 1 + a.size() + b.size(),
            Formula::Forall(_, a) | Formula::Exists(_, a) | Formula::Squash(a) => 1 + a.size(),
            _ => 1,
        }
    }

    /// Nesting depth; leaves have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                1 + a.depth().max(b.depth())
            }
            Formula::Forall(_, a) | Formula::Exists(_, a) | Formula::Squash(a) => 1 + a.depth(),
            _ => 0,
        }
    }

    /// Atomic leaves in first-occurrence order, keyed by their printed form
    /// (`P`, `P(x)`).
    pub fn atomic_leaves(&self) -> Vec<Formula> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Formula>) {
        match self {
            Formula::Atom(_) | Formula::Pred(..) => {
                if !out.contains(self) {
                    out.push(self.clone());
                }
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
            Formula::Forall(_, a) | Formula::Exists(_, a) | Formula::Squash(a) => {
                a.collect_leaves(out)
            }
            Formula::Falsum | Formula::Verum => {}
        }
    }

    /// Replace every free occurrence of the individual variable `from` by
    /// `to`, renaming binders that would capture `to`.
    pub fn subst_var(&self, from: &str, to: &str) -> Formula {
        match self {
            Formula::Pred(p, v) if v == from => Formula::Pred(p.clone(), to.to_string()),
            Formula::Atom(_) | Formula::Pred(..) | Formula::Falsum | Formula::Verum => self.clone(),
            Formula::And(a, b) => Formula::and(a.subst_var(from, to), b.subst_var(from, to)),
            Formula::Or(a, b) => Formula::or(a.subst_var(from, to), b.subst_var(from, to)),
            Formula::Imp(a, b) => Formula::imp(a.subst_var(from, to), b.subst_var(from, to)),
            Formula::Squash(a) => Formula::squash(a.subst_var(from, to)),
            Formula::Forall(x, body) | Formula::Exists(x, body) => {
                let rebuild = |x: String, body: Formula| match self {
                    Formula::Forall(..) => Formula::forall(x, body),
                    _ => Formula::exists(x, body),
                };
                if x == from || !free_vars(body).contains(from) {
                    return self.clone();
                }
                if x == to {
                    let mut avoid = free_vars(body);
                    avoid.insert(to.to_string());
                    avoid.insert(from.to_string());
                    let fresh = fresh_name(x, &avoid);
                    let renamed = body.subst_var(x, &fresh);
                    rebuild(fresh, renamed.subst_var(from, to))
                } else {
                    rebuild(x.clone(), body.subst_var(from, to))
                }
            }
        }
    }

    /// Structural equality up to consistent renaming of bound individual
    /// variables.
    pub fn alpha_eq(&self, other: &Formula) -> bool {
        fn go<'a>(
            a: &'a Formula,
            b: &'a Formula,
            env_a: &mut Vec<&'a str>,
            env_b: &mut Vec<&'a str>,
        ) -> bool {
            match (a, b) {
                (Formula::Atom(x), Formula::Atom(y)) => x == y,
                (Formula::Pred(p, x), Formula::Pred(q, y)) => {
                    if p != q {
                        return false;
                    }
                    let ix = env_a.iter().rposition(|v| *v == x);
                    let iy = env_b.iter().rposition(|v| *v == y);
                    match (ix, iy) {
                        (Some(i), Some(j)) => i == j,
                        (None, None) => x == y,
                        _ => false,
                    }
                }
                (Formula::Falsum, Formula::Falsum) | (Formula::Verum, Formula::Verum) => true,
                (Formula::And(a1, a2), Formula::And(b1, b2))
                | (Formula::Or(a1, a2), Formula::Or(b1, b2))
                | (Formula::Imp(a1, a2), Formula::Imp(b1, b2)) => {
                    go(a1, b1, env_a, env_b) && go(a2, b2, env_a, env_b)
                }
                (Formula::Squash(x), Formula::Squash(y)) => go(x, y, env_a, env_b),
                (Formula::Forall(x, a1), Formula::Forall(y, b1))
                | (Formula::Exists(x, a1), Formula::Exists(y, b1)) => {
                    env_a.push(x);
                    env_b.push(y);
                    let r = go(a1, b1, env_a, env_b);
                    env_a.pop();
                    env_b.pop();
                    r
                }
                _ => false,
            }
        }
        go(self, other, &mut Vec::new(), &mut Vec::new())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_formula(self))
    }
}

/// Free individual variables.
pub fn free_vars(f: &Formula) -> BTreeSet<String> {
    fn go(f: &Formula, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match f {
            Formula::Pred(_, v) => {
                if !bound.contains(v) {
                    out.insert(v.clone());
                }
            }
            Formula::Atom(_) | Formula::Falsum | Formula::Verum => {}
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                go(a, bound, out);
                go(b, bound, out);
            }
            Formula::Squash(a) => go(a, bound, out),
            Formula::Forall(x, a) | Formula::Exists(x, a) => {
                bound.push(x.clone());
                go(a, bound, out);
                bound.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    go(f, &mut Vec::new(), &mut out);
    out
}

/// `base`, or `base` with the smallest numeric suffix not in `avoid`.
pub(crate) fn fresh_name(base: &str, avoid: &BTreeSet<String>) -> String {
    let stem = base.trim_end_matches(|c: char| c.is_ascii_digit() || c == '\'');
    let stem = if stem.is_empty() { base } else { stem };
    if !avoid.contains(base) {
        return base.to_string();
    }
    (1..)
        .map(|i| format!("{stem}{i}"))
        .find(|n| !avoid.contains(n))
        .expect("unbounded suffix search")
}

/// The name spaces a formula draws on: propositional atoms, unary
/// predicates, and individual variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentSpec {
    pub atoms: BTreeSet<String>,
    /// Predicate name to arity; always 1.
    pub predicates: BTreeMap<String, usize>,
    pub individuals: BTreeSet<String>,
}

impl IdentSpec {
    /// Collects the identifiers of `f`, failing when one name is used both
    /// as a propositional atom and as a predicate.
    pub fn of(f: &Formula) -> Result<IdentSpec, String> {
        fn go(f: &Formula, spec: &mut IdentSpec) {
            match f {
                Formula::Atom(a) => {
                    spec.atoms.insert(a.clone());
                }
                Formula::Pred(p, v) => {
                    spec.predicates.insert(p.clone(), 1);
                    spec.individuals.insert(v.clone());
                }
                Formula::Falsum | Formula::Verum => {}
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                    go(a, spec);
                    go(b, spec);
                }
                Formula::Squash(a) => go(a, spec),
                Formula::Forall(x, a) | Formula::Exists(x, a) => {
                    spec.individuals.insert(x.clone());
                    go(a, spec);
                }
            }
        }
        let mut spec = IdentSpec::default();
        go(f, &mut spec);
        if let Some(clash) = spec.atoms.iter().find(|a| spec.predicates.contains_key(*a)) {
            return Err(format!("`{clash}` is used both as an atom and as a unary predicate"));
        }
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn free_vars_examples() {
        assert!(free_vars(&p("forall x. P(x)")).is_empty());
        assert_eq!(free_vars(&p("P(x)")), BTreeSet::from(["x".to_string()]));
        assert_eq!(
            free_vars(&p("exists x. P(x) => Q(y)")),
            BTreeSet::from(["y".to_string()])
        );
    }

    #[test]
    fn subst_var_avoids_capture() {
        // (forall y. P(x) /\ Q(y))[y/x] must rename the binder.
        let f = p("forall y. P(x) /\\ Q(y)");
        let g = f.subst_var("x", "y");
        assert!(g.alpha_eq(&p("forall z. P(y) /\\ Q(z)")));
        assert!(!g.alpha_eq(&p("forall y. P(y) /\\ Q(y)")));
    }

    #[test]
    fn alpha_eq_respects_binding() {
        assert!(p("forall x. P(x)").alpha_eq(&p("forall y. P(y)")));
        assert!(!p("forall x. P(x)").alpha_eq(&p("forall y. P(x)")));
        assert!(p("exists x. forall y. R(x) => R(y)").alpha_eq(&p("exists a. forall b. R(a) => R(b)")));
    }

    #[test]
    fn ident_spec_rejects_atom_predicate_clash() {
        let clash = Formula::imp(Formula::atom("P"), Formula::pred("P", "x"));
        assert!(IdentSpec::of(&clash).is_err());
        let spec = IdentSpec::of(&p("forall x. P(x) => Q")).unwrap();
        assert_eq!(spec.predicates.get("P"), Some(&1));
        assert!(spec.atoms.contains("Q"));
    }

    #[test]
    fn size_and_depth() {
        let f = p("~P");
        assert_eq!(f.size(), 3);
        assert_eq!(f.depth(), 1);
        assert_eq!(Formula::Falsum.depth(), 0);
    }
}
