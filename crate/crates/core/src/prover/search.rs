//! Iterative-deepening search over the whole kernel rule set, squash rules
//! included. Incomplete by design: a failed search says nothing about
//! provability.

use std::collections::HashMap;

use crate::kernel::{ProofNode, RuleId, Sequent};
use crate::oracle::truth_table_valid;
use crate::syntax::Formula;
use crate::translate::erase_squash;

use super::ProverError;

/// Outcome of exploring a formula that may mix squashed and plain parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Proved(ProofNode),
    /// The squash-erased formula is not a tautology, so no proof exists.
    Refuted,
    Unknown,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Proved(_) => "proved",
            Verdict::Refuted => "refuted",
            Verdict::Unknown => "unknown",
        }
    }
}

/// Looks for a closed proof of `f` of height at most `depth`, trying every
/// height from 1 upwards.
pub fn bounded_search(f: &Formula, depth: usize) -> Result<Option<ProofNode>, ProverError> {
    if !f.is_propositional() {
        return Err(ProverError::Quantified);
    }
    let mut s = Search::default();
    let goal = Sequent::goal(f.clone());
    Ok((1..=depth).find_map(|d| s.go(&goal, d)))
}

/// Three-valued verdict: refuted when the erasure fails the truth-table
/// test (every provable `{G}` has a classically valid `G`), otherwise
/// whatever [`bounded_search`] finds.
pub fn explore(f: &Formula, depth: usize) -> Result<Verdict, ProverError> {
    if !f.is_propositional() {
        return Err(ProverError::Quantified);
    }
    if !truth_table_valid(&erase_squash(f))? {
        return Ok(Verdict::Refuted);
    }
    Ok(match bounded_search(f, depth)? {
        Some(p) => Verdict::Proved(p),
        None => Verdict::Unknown,
    })
}

#[derive(Default)]
struct Search {
    failed: HashMap<(Vec<Formula>, Formula), usize>,
}

fn has(s: &Sequent, f: &Formula) -> bool {
    s.hyps.iter().any(|(_, g)| g == f)
}

fn next_label(s: &Sequent) -> String {
    format!("h{}", s.hyps.len())
}

fn hyp(s: &Sequent, l: &str) -> ProofNode {
    ProofNode::new(RuleId::Hyp, s.clone()).label(l)
}

/// `let l: f = def in rest`.
fn let_in(s: &Sequent, l: &str, f: &Formula, def: ProofNode, rest: ProofNode) -> ProofNode {
    ProofNode::new(RuleId::ImpElim, s.clone())
        .premise(
            ProofNode::new(RuleId::ImpIntro, s.with_goal(Formula::imp(f.clone(), s.goal.clone())))
                .label(l)
                .premise(rest),
        )
        .premise(def)
}

impl Search {
    fn go(&mut self, s: &Sequent, d: usize) -> Option<ProofNode> {
        if d == 0 {
            return None;
        }
        let mut fs: Vec<Formula> = s.hyps.iter().map(|(_, f)| f.clone()).collect();
        fs.sort();
        fs.dedup();
        let key = (fs, s.goal.clone());
        if self.failed.get(&key).is_some_and(|&e| e >= d) {
            return None;
        }
        let r = self.attempt(s, d);
        if r.is_none() {
            self.failed.insert(key, d);
        }
        r
    }

    fn attempt(&mut self, s: &Sequent, d: usize) -> Option<ProofNode> {
        use Formula::*;
        let goal = &s.goal;
        if *goal == Verum {
            return Some(ProofNode::new(RuleId::TrueIntro, s.clone()));
        }
        if let Some((l, _)) = s.hyps.iter().find(|(_, f)| f == goal) {
            return Some(hyp(s, l));
        }
        if let Some((l, _)) = s.hyps.iter().find(|(_, f)| *f == Falsum) {
            return Some(
                ProofNode::new(RuleId::FalseElim, s.clone()).premise(hyp(&s.with_goal(Falsum), l)),
            );
        }
        match goal {
            Imp(a, b) => {
                let l = next_label(s);
                let p = self.go(&s.extend(&l, (**a).clone(), (**b).clone()), d - 1)?;
                return Some(ProofNode::new(RuleId::ImpIntro, s.clone()).label(l).premise(p));
            }
            And(a, b) => {
                let l = self.go(&s.with_goal((**a).clone()), d - 1)?;
                let r = self.go(&s.with_goal((**b).clone()), d - 1)?;
                return Some(ProofNode::new(RuleId::AndIntro, s.clone()).premise(l).premise(r));
            }
            _ => {}
        }
        if let Squash(a) = goal {
            if let Some(p) = self.go(&s.with_goal((**a).clone()), d - 1) {
                return Some(ProofNode::new(RuleId::SquashIntro, s.clone()).premise(p));
            }
        }
        if matches!(goal, Squash(_) | Falsum) {
            for (u, f) in &s.hyps {
                let Squash(a) = f else { continue };
                if has(s, a) {
                    continue;
                }
                let v = next_label(s);
                if let Some(p) = self.go(&s.extend(&v, (**a).clone(), goal.clone()), d - 1) {
                    return Some(
                        ProofNode::new(RuleId::SquashElim, s.clone())
                            .label(u)
                            .label(v)
                            .premise(p),
                    );
                }
            }
        }
        if let Squash(a) = goal {
            let nn = Formula::not_not((**a).clone());
            if let Some(p) = self.go(&s.with_goal(nn), d - 1) {
                return Some(ProofNode::new(RuleId::ClassicalIntro, s.clone()).premise(p));
            }
        }
        for (h, f) in &s.hyps {
            match f {
                And(a, b) if !has(s, a) || !has(s, b) => {
                    let l1 = next_label(s);
                    let s1 = s.extend(&l1, (**a).clone(), goal.clone());
                    let l2 = next_label(&s1);
                    let s2 = s1.extend(&l2, (**b).clone(), goal.clone());
                    if let Some(rest) = self.go(&s2, d - 1) {
                        let fst = ProofNode::new(RuleId::AndElimL, s.with_goal((**a).clone()))
                            .premise(hyp(&s.with_goal(f.clone()), h));
                        let snd = ProofNode::new(RuleId::AndElimR, s1.with_goal((**b).clone()))
                            .premise(hyp(&s1.with_goal(f.clone()), h));
                        return Some(let_in(s, &l1, a, fst, let_in(&s1, &l2, b, snd, rest)));
                    }
                }
                Or(a, b) if !has(s, a) && !has(s, b) => {
                    let l = next_label(s);
                    let Some(left) = self.go(&s.extend(&l, (**a).clone(), goal.clone()), d - 1) else {
                        continue;
                    };
                    let Some(right) = self.go(&s.extend(&l, (**b).clone(), goal.clone()), d - 1) else {
                        continue;
                    };
                    return Some(
                        ProofNode::new(RuleId::OrElim, s.clone())
                            .label(&l)
                            .label(&l)
                            .premise(hyp(&s.with_goal(f.clone()), h))
                            .premise(left)
                            .premise(right),
                    );
                }
                _ => {}
            }
        }
        if let Or(a, b) = goal {
            for (part, rule) in [(a, RuleId::OrIntroL), (b, RuleId::OrIntroR)] {
                if let Some(p) = self.go(&s.with_goal((**part).clone()), d - 1) {
                    return Some(ProofNode::new(rule, s.clone()).premise(p));
                }
            }
        }
        for (h, f) in &s.hyps {
            let Imp(a, b) = f else { continue };
            if has(s, b) {
                continue;
            }
            let Some(arg) = self.go(&s.with_goal((**a).clone()), d - 1) else {
                continue;
            };
            let l = next_label(s);
            let Some(rest) = self.go(&s.extend(&l, (**b).clone(), goal.clone()), d - 1) else {
                continue;
            };
            let def = ProofNode::new(RuleId::ImpElim, s.with_goal((**b).clone()))
                .premise(hyp(&s.with_goal(f.clone()), h))
                .premise(arg);
            return Some(let_in(s, &l, b, def, rest));
        }
        if *goal != Falsum && !s.hyps.is_empty() {
            if let Some(p) = self.go(&s.with_goal(Falsum), d - 1) {
                return Some(ProofNode::new(RuleId::FalseElim, s.clone()).premise(p));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evidence::Term;
    use crate::kernel::check_proof;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn found(s: &str, depth: usize) -> Option<ProofNode> {
        let p = bounded_search(&f(s), depth).unwrap()?;
        check_proof(&p).unwrap_or_else(|e| panic!("{s}: {e}"));
        Some(p)
    }

    #[test]
    fn obvious_squash_introduction() {
        let p = found("(P => Q) => {P => Q}", 6).unwrap();
        assert!(!p.uses(RuleId::ClassicalIntro));
        assert!(alpha(&check_proof(&p).unwrap(), "lam(x.star)"));
    }

    fn alpha(t: &Term, s: &str) -> bool {
        crate::evidence::alpha_eq(t, &crate::evidence::parse_term(s).unwrap())
    }

    #[test]
    fn squash_distributes_over_conjunction() {
        assert!(found("{P /\\ Q} => {P} /\\ {Q}", 8).is_some());
        assert!(found("{P} /\\ {Q} => {P /\\ Q}", 8).is_some());
    }

    #[test]
    fn bare_atomic_squash_is_unknown() {
        assert!(found("{P}", 8).is_none());
        assert_eq!(explore(&f("{P}"), 8).unwrap(), Verdict::Refuted);
    }

    #[test]
    fn classical_introduction_is_used_when_needed() {
        let p = found("{P \\/ ~P}", 8).unwrap();
        assert!(p.uses(RuleId::ClassicalIntro));
    }

    #[test]
    fn unsquashing_is_never_found() {
        assert!(found("{P} => P", 8).is_none());
        assert_eq!(explore(&f("{P} => P"), 8).unwrap(), Verdict::Unknown);
    }

    #[test]
    fn verdicts() {
        assert_eq!(explore(&f("{P} => Q"), 4).unwrap(), Verdict::Refuted);
        assert!(matches!(explore(&f("~~P => {P}"), 6).unwrap(), Verdict::Proved(_)));
    }
}
