//! The trusted checker.
//!
//! Proofs are natural-deduction trees whose every node carries its full
//! sequent. Checking a tree verifies each node against its rule schema and
//! extracts a realizer for the root. Besides the intuitionistic rules the
//! kernel knows three squash rules: `SquashIntro` (`A` gives `{A}`),
//! `SquashElim` (a hypothesis `{A}` may be opened only while the goal is
//! squash-stable, i.e. `{.}` or `False`) and `ClassicalIntro` (`~~A` gives
//! `{A}`). Every squashed goal is realized by `star`.

mod sexp;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::evidence::{substitute, Term};
use crate::syntax::{free_vars, Formula};

pub use sexp::{print_proof, print_sequent, proof_parse, sequent_parse};

/// Placeholder for unhidden squash evidence. It may survive in an
/// extracted realizer only beneath `any(.)`.
pub const HIDDEN: &str = "_hidden";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequent {
    pub hyps: Vec<(String, Formula)>,
    pub goal: Formula,
}

impl Sequent {
    pub fn new(hyps: Vec<(String, Formula)>, goal: Formula) -> Sequent {
        Sequent { hyps, goal }
    }

    pub fn goal(goal: Formula) -> Sequent {
        Sequent {
            hyps: Vec::new(),
            goal,
        }
    }

    pub fn lookup(&self, label: &str) -> Option<&Formula> {
        self.hyps.iter().find(|(l, _)| l == label).map(|(_, f)| f)
    }

    /// Same hypotheses, different goal.
    pub fn with_goal(&self, goal: Formula) -> Sequent {
        Sequent {
            hyps: self.hyps.clone(),
            goal,
        }
    }

    /// One more hypothesis and a new goal.
    pub fn extend(&self, label: impl Into<String>, f: Formula, goal: Formula) -> Sequent {
        let mut hyps = self.hyps.clone();
        hyps.push((label.into(), f));
        Sequent { hyps, goal }
    }

    fn mentions_individual(&self, x: &str) -> bool {
        free_vars(&self.goal).contains(x) || self.hyps.iter().any(|(_, f)| free_vars(f).contains(x))
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hyps: Vec<String> = self.hyps.iter().map(|(l, h)| format!("{l}: {h}")).collect();
        if hyps.is_empty() {
            write!(f, "|- {}", self.goal)
        } else {
            write!(f, "{} |- {}", hyps.join(", "), self.goal)
        }
    }
}

macro_rules! rules {
    ($($id:ident),* $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum RuleId { $($id),* }

        impl RuleId {
            pub const ALL: &'static [RuleId] = &[$(RuleId::$id),*];

            pub fn name(self) -> &'static str {
                match self { $(RuleId::$id => stringify!($id)),* }
            }
        }

        impl FromStr for RuleId {
            type Err = String;

            fn from_str(s: &str) -> Result<RuleId, String> {
                match s {
                    $(stringify!($id) => Ok(RuleId::$id),)*
                    _ => Err(format!("unknown rule `{s}`")),
                }
            }
        }
    };
}

rules!(
    Hyp,
    ImpIntro,
    ImpElim,
    AndIntro,
    AndElimL,
    AndElimR,
    OrIntroL,
    OrIntroR,
    OrElim,
    FalseElim,
    TrueIntro,
    ForallIntro,
    ForallElim,
    ExistsIntro,
    ExistsElim,
    SquashIntro,
    SquashElim,
    ClassicalIntro,
);

impl RuleId {
    /// Number of premises the schema takes.
    pub fn arity(self) -> usize {
        match self {
            RuleId::Hyp | RuleId::TrueIntro => 0,
            RuleId::ImpElim | RuleId::AndIntro | RuleId::ExistsElim => 2,
            RuleId::OrElim => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Label(String),
    Side(Side),
    Witness(String),
    Eigen(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofNode {
    pub rule: RuleId,
    pub goal: Sequent,
    pub params: Vec<Param>,
    pub premises: Vec<ProofNode>,
}

impl ProofNode {
    pub fn new(rule: RuleId, goal: Sequent) -> ProofNode {
        ProofNode {
            rule,
            goal,
            params: Vec::new(),
            premises: Vec::new(),
        }
    }

    pub fn param(mut self, p: Param) -> ProofNode {
        self.params.push(p);
        self
    }

    pub fn label(self, l: impl Into<String>) -> ProofNode {
        self.param(Param::Label(l.into()))
    }

    pub fn premise(mut self, p: ProofNode) -> ProofNode {
        self.premises.push(p);
        self
    }

    pub fn labels(&self) -> Vec<&str> {
        self.params
            .iter()
            .filter_map(|p| match p {
                Param::Label(l) => Some(l.as_str()),
                _ => None,
            })
            .collect()
    }

    pub fn witness(&self) -> Option<&str> {
        self.params.iter().find_map(|p| match p {
            Param::Witness(w) => Some(w.as_str()),
            _ => None,
        })
    }

    pub fn eigen(&self) -> Option<&str> {
        self.params.iter().find_map(|p| match p {
            Param::Eigen(e) => Some(e.as_str()),
            _ => None,
        })
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(ProofNode::size).sum::<usize>()
    }

    /// Whether any node uses `rule`.
    pub fn uses(&self, rule: RuleId) -> bool {
        self.rule == rule || self.premises.iter().any(|p| p.uses(rule))
    }

    /// Applies `f` to every sequent in the tree.
    pub fn map_sequents(&self, f: &mut impl FnMut(&Sequent) -> Sequent) -> ProofNode {
        ProofNode {
            rule: self.rule,
            goal: f(&self.goal),
            params: self.params.clone(),
            premises: self.premises.iter().map(|p| p.map_sequents(f)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckErrorKind {
    #[error("rule takes {expected} premise(s), found {found}")]
    Arity { expected: usize, found: usize },
    #[error("schema mismatch: {0}")]
    Schema(String),
    #[error("unknown hypothesis label `{0}`")]
    UnknownLabel(String),
    #[error("hypothesis label `{0}` is not fresh")]
    DuplicateLabel(String),
    #[error("missing parameter `{0}`")]
    MissingParam(&'static str),
    #[error("eigenvariable `{0}` is not fresh for the sequent")]
    Eigenvariable(String),
    #[error("premise hypotheses do not match: {0}")]
    Context(String),
    #[error("squash elimination needs a squash-stable goal ({{.}} or False), found {0}")]
    NotSquashStable(String),
    #[error("classical introduction concludes a squashed goal, found {0}")]
    ClassicalIntroGoal(String),
    #[error("hidden squash evidence escapes into the realizer")]
    HiddenEvidenceEscapes,
}

/// A rejected node, located by the premise indices leading to it from the
/// root.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{rule} at {}: {kind}", display_path(.path))]
pub struct CheckError {
    pub path: Vec<usize>,
    pub rule: RuleId,
    pub kind: CheckErrorKind,
}

fn display_path(path: &[usize]) -> String {
    let mut s = "root".to_string();
    for i in path {
        s.push('/');
        s.push_str(&i.to_string());
    }
    s
}

/// Checks every node of `p` and returns the realizer extracted for its
/// root sequent.
pub fn check_proof(p: &ProofNode) -> Result<Term, CheckError> {
    let mut path = Vec::new();
    let r = check_node(p, &mut path)?;
    if hidden_escapes(&r) {
        return Err(CheckError {
            path: Vec::new(),
            rule: p.rule,
            kind: CheckErrorKind::HiddenEvidenceEscapes,
        });
    }
    Ok(r)
}

fn hidden_escapes(t: &Term) -> bool {
    match t {
        Term::Var(x) => x == HIDDEN,
        Term::Any(_) | Term::Star => false,
        Term::Lam(_, b) | Term::Fst(b) | Term::Snd(b) | Term::Inl(b) | Term::Inr(b) => {
            hidden_escapes(b)
        }
        Term::Ap(a, b) | Term::Pair(a, b) => hidden_escapes(a) || hidden_escapes(b),
        Term::Case(s, _, l, _, r) => hidden_escapes(s) || hidden_escapes(l) || hidden_escapes(r),
    }
}

fn hyp_map(s: &Sequent) -> BTreeMap<&str, &Formula> {
    s.hyps.iter().map(|(l, f)| (l.as_str(), f)).collect()
}

fn ctx_eq(a: &BTreeMap<&str, &Formula>, b: &BTreeMap<&str, &Formula>) -> bool {
    a.len() == b.len()
        && a.iter()
            .zip(b.iter())
            .all(|((la, fa), (lb, fb))| la == lb && fa.alpha_eq(fb))
}

struct Node<'a> {
    node: &'a ProofNode,
}

impl<'a> Node<'a> {
    fn fail(&self, path: &[usize], kind: CheckErrorKind) -> CheckError {
        CheckError {
            path: path.to_vec(),
            rule: self.node.rule,
            kind,
        }
    }

    fn goal(&self) -> &'a Formula {
        &self.node.goal.goal
    }

    fn premise(&self, i: usize) -> &'a ProofNode {
        &self.node.premises[i]
    }

    fn label(&self, i: usize, path: &[usize]) -> Result<&'a str, CheckError> {
        self.node
            .labels()
            .get(i)
            .copied()
            .ok_or_else(|| self.fail(path, CheckErrorKind::MissingParam("label")))
    }

    /// Premise `i` has exactly the conclusion's hypotheses plus `extra`.
    fn ctx(&self, i: usize, extra: &[(&'a str, &'a Formula)], path: &[usize]) -> Result<(), CheckError> {
        let mut want = hyp_map(&self.node.goal);
        for (l, f) in extra {
            if want.contains_key(l) || *l == HIDDEN || self.node.goal.mentions_individual(l) {
                return Err(self.fail(path, CheckErrorKind::DuplicateLabel(l.to_string())));
            }
            want.insert(l, f);
        }
        let have = hyp_map(&self.premise(i).goal);
        if ctx_eq(&want, &have) {
            Ok(())
        } else {
            Err(self.fail(
                path,
                CheckErrorKind::Context(format!(
                    "premise {i} has `{}`, expected the conclusion's hypotheses{}",
                    self.premise(i).goal,
                    if extra.is_empty() {
                        String::new()
                    } else {
                        format!(
                            " plus {}",
                            extra
                                .iter()
                                .map(|(l, f)| format!("{l}: {f}"))
                                .collect::<Vec<_>>()
                                .join(", ")
                        )
                    }
                )),
            ))
        }
    }

    /// Premise `i` proves `want`.
    fn proves(&self, i: usize, want: &Formula, path: &[usize]) -> Result<(), CheckError> {
        let got = &self.premise(i).goal.goal;
        if got.alpha_eq(want) {
            Ok(())
        } else {
            Err(self.fail(
                path,
                CheckErrorKind::Schema(format!("premise {i} proves `{got}`, expected `{want}`")),
            ))
        }
    }

    fn schema(&self, path: &[usize], msg: impl Into<String>) -> CheckError {
        self.fail(path, CheckErrorKind::Schema(msg.into()))
    }
}

fn check_node(p: &ProofNode, path: &mut Vec<usize>) -> Result<Term, CheckError> {
    let n = Node { node: p };
    let mut seen = std::collections::BTreeSet::new();
    for (l, _) in &p.goal.hyps {
        if !seen.insert(l.as_str()) || l == HIDDEN {
            return Err(n.fail(path, CheckErrorKind::DuplicateLabel(l.clone())));
        }
    }
    if p.premises.len() != p.rule.arity() {
        return Err(n.fail(
            path,
            CheckErrorKind::Arity {
                expected: p.rule.arity(),
                found: p.premises.len(),
            },
        ));
    }
    let sub = |i: usize, path: &mut Vec<usize>| -> Result<Term, CheckError> {
        path.push(i);
        let r = check_node(&p.premises[i], path);
        path.pop();
        r
    };
    let goal = n.goal();
    let realizer = match p.rule {
        RuleId::Hyp => {
            let l = n.label(0, path)?;
            let f = p
                .goal
                .lookup(l)
                .ok_or_else(|| n.fail(path, CheckErrorKind::UnknownLabel(l.to_string())))?;
            if !f.alpha_eq(goal) {
                return Err(n.schema(path, format!("hypothesis `{l}` is `{f}`, not `{goal}`")));
            }
            Term::var(l)
        }
        RuleId::ImpIntro => {
            let Formula::Imp(a, b) = goal else {
                return Err(n.schema(path, "goal is not an implication"));
            };
            let l = n.label(0, path)?;
            n.ctx(0, &[(l, a)], path)?;
            n.proves(0, b, path)?;
            Term::lam(l, sub(0, path)?)
        }
        RuleId::ImpElim => {
            let Formula::Imp(a, b) = &n.premise(0).goal.goal else {
                return Err(n.schema(path, "major premise is not an implication"));
            };
            if !b.alpha_eq(goal) {
                return Err(n.schema(path, format!("major premise concludes `{b}`, not `{goal}`")));
            }
            n.ctx(0, &[], path)?;
            n.ctx(1, &[], path)?;
            n.proves(1, a, path)?;
            Term::ap(sub(0, path)?, sub(1, path)?)
        }
        RuleId::AndIntro => {
            let Formula::And(a, b) = goal else {
                return Err(n.schema(path, "goal is not a conjunction"));
            };
            n.ctx(0, &[], path)?;
            n.ctx(1, &[], path)?;
            n.proves(0, a, path)?;
            n.proves(1, b, path)?;
            Term::pair(sub(0, path)?, sub(1, path)?)
        }
        RuleId::AndElimL | RuleId::AndElimR => {
            let Formula::And(a, b) = &n.premise(0).goal.goal else {
                return Err(n.schema(path, "premise is not a conjunction"));
            };
            let (part, wrap): (&Formula, fn(Term) -> Term) = if p.rule == RuleId::AndElimL {
                (a, Term::fst)
            } else {
                (b, Term::snd)
            };
            if !part.alpha_eq(goal) {
                return Err(n.schema(path, format!("conjunct is `{part}`, not `{goal}`")));
            }
            n.ctx(0, &[], path)?;
            wrap(sub(0, path)?)
        }
        RuleId::OrIntroL | RuleId::OrIntroR => {
            let Formula::Or(a, b) = goal else {
                return Err(n.schema(path, "goal is not a disjunction"));
            };
            n.ctx(0, &[], path)?;
            if p.rule == RuleId::OrIntroL {
                n.proves(0, a, path)?;
                Term::inl(sub(0, path)?)
            } else {
                n.proves(0, b, path)?;
                Term::inr(sub(0, path)?)
            }
        }
        RuleId::OrElim => {
            let Formula::Or(a, b) = &n.premise(0).goal.goal else {
                return Err(n.schema(path, "major premise is not a disjunction"));
            };
            let x = n.label(0, path)?;
            let y = n.label(1, path)?;
            n.ctx(0, &[], path)?;
            n.ctx(1, &[(x, a)], path)?;
            n.ctx(2, &[(y, b)], path)?;
            n.proves(1, goal, path)?;
            n.proves(2, goal, path)?;
            let s = sub(0, path)?;
            let l = sub(1, path)?;
            let r = sub(2, path)?;
            Term::case(s, x, l, y, r)
        }
        RuleId::FalseElim => {
            n.ctx(0, &[], path)?;
            n.proves(0, &Formula::Falsum, path)?;
            Term::any(sub(0, path)?)
        }
        RuleId::TrueIntro => {
            if *goal != Formula::Verum {
                return Err(n.schema(path, "goal is not True"));
            }
            Term::Star
        }
        RuleId::ForallIntro => {
            let Formula::Forall(x, body) = goal else {
                return Err(n.schema(path, "goal is not a universal"));
            };
            let a = p
                .eigen()
                .ok_or_else(|| n.fail(path, CheckErrorKind::MissingParam("eigen")))?;
            if p.goal.mentions_individual(a) || p.goal.lookup(a).is_some() {
                return Err(n.fail(path, CheckErrorKind::Eigenvariable(a.to_string())));
            }
            n.ctx(0, &[], path)?;
            n.proves(0, &body.subst_var(x, a), path)?;
            Term::lam(a, sub(0, path)?)
        }
        RuleId::ForallElim => {
            let Formula::Forall(x, body) = &n.premise(0).goal.goal else {
                return Err(n.schema(path, "premise is not a universal"));
            };
            let t = p
                .witness()
                .ok_or_else(|| n.fail(path, CheckErrorKind::MissingParam("witness")))?;
            let inst = body.subst_var(x, t);
            if !inst.alpha_eq(goal) {
                return Err(n.schema(path, format!("instance is `{inst}`, not `{goal}`")));
            }
            n.ctx(0, &[], path)?;
            Term::ap(sub(0, path)?, Term::var(t))
        }
        RuleId::ExistsIntro => {
            let Formula::Exists(x, body) = goal else {
                return Err(n.schema(path, "goal is not an existential"));
            };
            let t = p
                .witness()
                .ok_or_else(|| n.fail(path, CheckErrorKind::MissingParam("witness")))?;
            n.ctx(0, &[], path)?;
            n.proves(0, &body.subst_var(x, t), path)?;
            Term::pair(Term::var(t), sub(0, path)?)
        }
        RuleId::ExistsElim => {
            let major = &n.premise(0).goal.goal;
            let Formula::Exists(x, body) = major else {
                return Err(n.schema(path, "major premise is not an existential"));
            };
            let a = p
                .eigen()
                .ok_or_else(|| n.fail(path, CheckErrorKind::MissingParam("eigen")))?;
            if p.goal.mentions_individual(a)
                || free_vars(major).contains(a)
                || p.goal.lookup(a).is_some()
            {
                return Err(n.fail(path, CheckErrorKind::Eigenvariable(a.to_string())));
            }
            let h = n.label(0, path)?;
            let inst = body.subst_var(x, a);
            n.ctx(0, &[], path)?;
            n.ctx(1, &[(h, &inst)], path)?;
            n.proves(1, goal, path)?;
            let w = sub(0, path)?;
            let r = sub(1, path)?;
            Term::ap(
                Term::ap(Term::lam(a, Term::lam(h, r)), Term::fst(w.clone())),
                Term::snd(w),
            )
        }
        RuleId::SquashIntro => {
            let Formula::Squash(a) = goal else {
                return Err(n.schema(path, "goal is not squashed"));
            };
            n.ctx(0, &[], path)?;
            n.proves(0, a, path)?;
            sub(0, path)?;
            Term::Star
        }
        RuleId::SquashElim => {
            let u = n.label(0, path)?;
            let v = n.label(1, path)?;
            let hidden = p
                .goal
                .lookup(u)
                .ok_or_else(|| n.fail(path, CheckErrorKind::UnknownLabel(u.to_string())))?;
            let Formula::Squash(a) = hidden else {
                return Err(n.schema(path, format!("hypothesis `{u}` is not squashed")));
            };
            if !matches!(goal, Formula::Squash(_) | Formula::Falsum) {
                return Err(n.fail(path, CheckErrorKind::NotSquashStable(goal.to_string())));
            }
            n.ctx(0, &[(v, a)], path)?;
            n.proves(0, goal, path)?;
            let r = sub(0, path)?;
            if matches!(goal, Formula::Squash(_)) {
                Term::Star
            } else {
                Term::any(substitute(&r, v, &Term::var(HIDDEN)))
            }
        }
        RuleId::ClassicalIntro => {
            let Formula::Squash(a) = goal else {
                return Err(n.fail(path, CheckErrorKind::ClassicalIntroGoal(goal.to_string())));
            };
            n.ctx(0, &[], path)?;
            n.proves(0, &Formula::not_not((**a).clone()), path)?;
            sub(0, path)?;
            Term::Star
        }
    };
    // The squash type's only element.
    if matches!(goal, Formula::Squash(_)) {
        return Ok(Term::Star);
    }
    Ok(realizer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evidence::alpha_eq;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn seq(hyps: &[(&str, &str)], goal: &str) -> Sequent {
        Sequent::new(
            hyps.iter().map(|(l, h)| (l.to_string(), f(h))).collect(),
            f(goal),
        )
    }

    fn hyp(hyps: &[(&str, &str)], goal: &str, l: &str) -> ProofNode {
        ProofNode::new(RuleId::Hyp, seq(hyps, goal)).label(l)
    }

    #[test]
    fn identity() {
        let p = ProofNode::new(RuleId::ImpIntro, seq(&[], "A => A"))
            .label("x")
            .premise(hyp(&[("x", "A")], "A", "x"));
        assert!(alpha_eq(&check_proof(&p).unwrap(), &Term::lam("y", Term::var("y"))));
    }

    #[test]
    fn weakening_axiom() {
        let p = ProofNode::new(RuleId::ImpIntro, seq(&[], "A => B => A"))
            .label("x")
            .premise(
                ProofNode::new(RuleId::ImpIntro, seq(&[("x", "A")], "B => A"))
                    .label("y")
                    .premise(hyp(&[("x", "A"), ("y", "B")], "A", "x")),
            );
        let r = check_proof(&p).unwrap();
        assert!(alpha_eq(&r, &Term::lam("a", Term::lam("b", Term::var("a")))));
    }

    #[test]
    fn hypotheses_compare_as_maps() {
        let p = ProofNode::new(RuleId::ImpIntro, seq(&[("z", "C")], "A => A"))
            .label("x")
            .premise(hyp(&[("x", "A"), ("z", "C")], "A", "x"));
        assert!(check_proof(&p).is_ok());
    }

    #[test]
    fn wrong_label_is_reported_with_path() {
        let p = ProofNode::new(RuleId::ImpIntro, seq(&[], "A => A"))
            .label("x")
            .premise(hyp(&[("x", "A")], "A", "y"));
        let e = check_proof(&p).unwrap_err();
        assert_eq!(e.path, vec![0]);
        assert_eq!(e.kind, CheckErrorKind::UnknownLabel("y".into()));
        assert_eq!(e.to_string(), "Hyp at root/0: unknown hypothesis label `y`");
    }

    #[test]
    fn arity_is_checked() {
        let p = ProofNode::new(RuleId::AndIntro, seq(&[], "True /\\ True"))
            .premise(ProofNode::new(RuleId::TrueIntro, seq(&[], "True")));
        assert!(matches!(
            check_proof(&p).unwrap_err().kind,
            CheckErrorKind::Arity { expected: 2, found: 1 }
        ));
    }

    #[test]
    fn premise_context_must_match() {
        let p = ProofNode::new(RuleId::OrIntroL, seq(&[("x", "A")], "A \\/ B"))
            .premise(hyp(&[("x", "A"), ("y", "B")], "A", "x"));
        assert!(matches!(check_proof(&p).unwrap_err().kind, CheckErrorKind::Context(_)));
    }

    #[test]
    fn squash_elim_needs_stable_goal() {
        // {P} |- P by opening the squash: rejected.
        let p = ProofNode::new(RuleId::SquashElim, seq(&[("u", "{P}")], "P"))
            .label("u")
            .label("v")
            .premise(hyp(&[("u", "{P}"), ("v", "P")], "P", "v"));
        assert!(matches!(
            check_proof(&p).unwrap_err().kind,
            CheckErrorKind::NotSquashStable(_)
        ));
    }

    #[test]
    fn squash_elim_under_false_keeps_evidence_inside_any() {
        // u: {P}, n: ~P |- False
        let p = ProofNode::new(RuleId::SquashElim, seq(&[("u", "{P}"), ("n", "~P")], "False"))
            .label("u")
            .label("v")
            .premise(
                ProofNode::new(RuleId::ImpElim, seq(&[("u", "{P}"), ("n", "~P"), ("v", "P")], "False"))
                    .premise(hyp(&[("u", "{P}"), ("n", "~P"), ("v", "P")], "~P", "n"))
                    .premise(hyp(&[("u", "{P}"), ("n", "~P"), ("v", "P")], "P", "v")),
            );
        let r = check_proof(&p).unwrap();
        assert_eq!(r.to_string(), "any(ap(n; _hidden))");
    }

    #[test]
    fn classical_intro_needs_squashed_goal() {
        let p = ProofNode::new(RuleId::ClassicalIntro, seq(&[("h", "~~P")], "P"))
            .premise(hyp(&[("h", "~~P")], "~~P", "h"));
        assert!(matches!(
            check_proof(&p).unwrap_err().kind,
            CheckErrorKind::ClassicalIntroGoal(_)
        ));
        let ok = ProofNode::new(RuleId::ClassicalIntro, seq(&[("h", "~~P")], "{P}"))
            .premise(hyp(&[("h", "~~P")], "~~P", "h"));
        assert_eq!(check_proof(&ok).unwrap(), Term::Star);
    }

    #[test]
    fn squashed_goals_extract_star_whatever_the_rule() {
        let p = hyp(&[("u", "{P}")], "{P}", "u");
        assert_eq!(check_proof(&p).unwrap(), Term::Star);
    }

    #[test]
    fn eigenvariable_freshness() {
        // x: P(a) |- forall y. P(y) with eigen a: rejected.
        let p = ProofNode::new(RuleId::ForallIntro, seq(&[("h", "P(a)")], "forall y. P(y)"))
            .param(Param::Eigen("a".into()))
            .premise(hyp(&[("h", "P(a)")], "P(a)", "h"));
        assert!(matches!(
            check_proof(&p).unwrap_err().kind,
            CheckErrorKind::Eigenvariable(_)
        ));
    }

    #[test]
    fn quantifier_rules() {
        // forall x. P(x) |- exists x. P(x)
        let h = [("h", "forall x. P(x)")];
        let p = ProofNode::new(RuleId::ExistsIntro, seq(&h, "exists x. P(x)"))
            .param(Param::Witness("c".into()))
            .premise(
                ProofNode::new(RuleId::ForallElim, seq(&h, "P(c)"))
                    .param(Param::Witness("c".into()))
                    .premise(hyp(&h, "forall x. P(x)", "h")),
            );
        assert_eq!(check_proof(&p).unwrap().to_string(), "pair(c; ap(h; c))");

        // exists x. P(x) /\ Q(x) |- exists y. P(y)
        let h = [("h", "exists x. P(x) /\\ Q(x)")];
        let h2 = [("h", "exists x. P(x) /\\ Q(x)"), ("w", "P(a) /\\ Q(a)")];
        let p = ProofNode::new(RuleId::ExistsElim, seq(&h, "exists y. P(y)"))
            .param(Param::Eigen("a".into()))
            .label("w")
            .premise(hyp(&h, "exists x. P(x) /\\ Q(x)", "h"))
            .premise(
                ProofNode::new(RuleId::ExistsIntro, seq(&h2, "exists y. P(y)"))
                    .param(Param::Witness("a".into()))
                    .premise(
                        ProofNode::new(RuleId::AndElimL, seq(&h2, "P(a)"))
                            .premise(hyp(&h2, "P(a) /\\ Q(a)", "w")),
                    ),
            );
        assert!(check_proof(&p).is_ok());
    }

    #[test]
    fn rule_names_round_trip() {
        for r in RuleId::ALL {
            assert_eq!(r.name().parse::<RuleId>().unwrap(), *r);
        }
    }
}
