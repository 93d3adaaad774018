//! Dyckhoff's contraction-free calculus for intuitionistic propositional
//! logic, elaborated into kernel proofs.
//!
//! Rule order at each sequent, first applicable wins:
//!
//! 1. closing rules: `True` goal, goal among the hypotheses, `False` among
//!    the hypotheses;
//! 2. invertible right rules: `=>`, `/\`;
//! 3. invertible left rules, scanning hypotheses in order: drop `True` and
//!    `False => B`; split `A /\ B`; case on `A \/ B`; `P => B` with `P`
//!    present, `True => B`, `(C /\ D) => B`, `(C \/ D) => B`;
//! 4. non-invertible rules: `\/` right (left disjunct first), then
//!    `(C => D) => B` on each such hypothesis in order.

use std::collections::HashSet;

use crate::kernel::{ProofNode, RuleId, Sequent};
use crate::syntax::Formula;

#[derive(Debug, Clone)]
enum Deriv {
    Hyp(String),
    ExFalso(String),
    TrueR,
    AndR(Box<Deriv>, Box<Deriv>),
    ImpR(String, Box<Deriv>),
    OrR(bool, Box<Deriv>),
    AndL {
        h: String,
        l1: String,
        l2: String,
        rest: Box<Deriv>,
    },
    OrL {
        h: String,
        l: String,
        left: Box<Deriv>,
        right: Box<Deriv>,
    },
    ImpAtom {
        h: String,
        p: String,
        l: String,
        rest: Box<Deriv>,
    },
    ImpTrue {
        h: String,
        l: String,
        rest: Box<Deriv>,
    },
    ImpAnd {
        h: String,
        l: String,
        rest: Box<Deriv>,
    },
    ImpOr {
        h: String,
        l1: String,
        l2: String,
        rest: Box<Deriv>,
    },
    ImpImp {
        h: String,
        l: String,
        left: Box<Deriv>,
        right: Box<Deriv>,
    },
}

type Ctx = Vec<(String, Formula)>;

fn label(n: usize) -> String {
    format!("h{n}")
}

fn without(ctx: &Ctx, i: usize) -> Ctx {
    let mut c = ctx.clone();
    c.remove(i);
    c
}

fn with(mut ctx: Ctx, l: &str, f: Formula) -> Ctx {
    ctx.push((l.to_string(), f));
    ctx
}

#[derive(Default)]
struct Search {
    failed: HashSet<(Vec<Formula>, Formula)>,
}

impl Search {
    fn prove(&mut self, ctx: &Ctx, goal: &Formula, n: usize) -> Option<Deriv> {
        let mut fs: Vec<Formula> = ctx.iter().map(|(_, f)| f.clone()).collect();
        fs.sort();
        let key = (fs, goal.clone());
        if self.failed.contains(&key) {
            return None;
        }
        let d = self.attempt(ctx, goal, n);
        if d.is_none() {
            self.failed.insert(key);
        }
        d
    }

    fn attempt(&mut self, ctx: &Ctx, goal: &Formula, n: usize) -> Option<Deriv> {
        use Formula::*;
        if *goal == Verum {
            return Some(Deriv::TrueR);
        }
        if let Some((l, _)) = ctx.iter().find(|(_, f)| f == goal) {
            return Some(Deriv::Hyp(l.clone()));
        }
        if let Some((l, _)) = ctx.iter().find(|(_, f)| *f == Falsum) {
            return Some(Deriv::ExFalso(l.clone()));
        }
        match goal {
            Imp(a, b) => {
                let l = label(n);
                let d = self.prove(&with(ctx.clone(), &l, (**a).clone()), b, n + 1)?;
                return Some(Deriv::ImpR(l, Box::new(d)));
            }
            And(a, b) => {
                let l = self.prove(ctx, a, n)?;
                let r = self.prove(ctx, b, n)?;
                return Some(Deriv::AndR(Box::new(l), Box::new(r)));
            }
            _ => {}
        }
        for (i, (h, f)) in ctx.iter().enumerate() {
            let h = h.clone();
            match f {
                Verum => return self.prove(&without(ctx, i), goal, n),
                Imp(c, _) if **c == Falsum => return self.prove(&without(ctx, i), goal, n),
                And(a, b) => {
                    let (l1, l2) = (label(n), label(n + 1));
                    let c = with(with(without(ctx, i), &l1, (**a).clone()), &l2, (**b).clone());
                    let rest = Box::new(self.prove(&c, goal, n + 2)?);
                    return Some(Deriv::AndL { h, l1, l2, rest });
                }
                Or(a, b) => {
                    let l = label(n);
                    let left = self.prove(&with(without(ctx, i), &l, (**a).clone()), goal, n + 1)?;
                    let right = self.prove(&with(without(ctx, i), &l, (**b).clone()), goal, n + 1)?;
                    return Some(Deriv::OrL {
                        h,
                        l,
                        left: Box::new(left),
                        right: Box::new(right),
                    });
                }
                Imp(c, b) => {
                    let l = label(n);
                    let next = |f: Formula| with(without(ctx, i), &l, f);
                    match &**c {
                        Atom(_) => {
                            if let Some((p, _)) = ctx.iter().find(|(_, g)| g == &**c) {
                                let p = p.clone();
                                let rest = Box::new(self.prove(&next((**b).clone()), goal, n + 1)?);
                                return Some(Deriv::ImpAtom { h, p, l, rest });
                            }
                        }
                        Verum => {
                            let rest = Box::new(self.prove(&next((**b).clone()), goal, n + 1)?);
                            return Some(Deriv::ImpTrue { h, l, rest });
                        }
                        And(c, d) => {
                            let f = Formula::imp((**c).clone(), Formula::imp((**d).clone(), (**b).clone()));
                            let rest = Box::new(self.prove(&next(f), goal, n + 1)?);
                            return Some(Deriv::ImpAnd { h, l, rest });
                        }
                        Or(c, d) => {
                            let l2 = label(n + 1);
                            let ctx2 = with(
                                next(Formula::imp((**c).clone(), (**b).clone())),
                                &l2,
                                Formula::imp((**d).clone(), (**b).clone()),
                            );
                            let rest = Box::new(self.prove(&ctx2, goal, n + 2)?);
                            return Some(Deriv::ImpOr { h, l1: l, l2, rest });
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
        }
        if let Or(a, b) = goal {
            if let Some(d) = self.prove(ctx, a, n) {
                return Some(Deriv::OrR(true, Box::new(d)));
            }
            if let Some(d) = self.prove(ctx, b, n) {
                return Some(Deriv::OrR(false, Box::new(d)));
            }
        }
        for (i, (h, f)) in ctx.iter().enumerate() {
            let Imp(cd, b) = f else { continue };
            let Imp(_, d) = &**cd else { continue };
            let l = label(n);
            let db = Formula::imp((**d).clone(), (**b).clone());
            let Some(left) = self.prove(&with(without(ctx, i), &l, db), cd, n + 1) else {
                continue;
            };
            let Some(right) = self.prove(&with(without(ctx, i), &l, (**b).clone()), goal, n + 1) else {
                continue;
            };
            return Some(Deriv::ImpImp {
                h: h.clone(),
                l,
                left: Box::new(left),
                right: Box::new(right),
            });
        }
        None
    }
}

/// Whether `goal` follows from `hyps` intuitionistically (labels ignored).
pub(crate) fn provable(hyps: &[Formula], goal: &Formula) -> bool {
    let ctx: Ctx = hyps.iter().enumerate().map(|(i, f)| (format!("g{i}"), f.clone())).collect();
    Search::default().prove(&ctx, goal, 0).is_some()
}

/// Searches for an intuitionistic proof of the closed propositional `f`
/// and elaborates it into the kernel's rule set.
pub(crate) fn prove(f: &Formula) -> Option<ProofNode> {
    let d = Search::default().prove(&Vec::new(), f, 0)?;
    Some(elab(&d, &Sequent::goal(f.clone())))
}

fn fresh(s: &Sequent, base: &str) -> String {
    let mut i = 0;
    loop {
        let name = if i == 0 { base.to_string() } else { format!("{base}{i}") };
        if s.lookup(&name).is_none() {
            return name;
        }
        i += 1;
    }
}

fn hyp(s: &Sequent, l: &str, goal: &Formula) -> ProofNode {
    ProofNode::new(RuleId::Hyp, s.with_goal(goal.clone())).label(l)
}

fn formula_of<'a>(s: &'a Sequent, l: &str) -> &'a Formula {
    s.lookup(l).expect("derivation labels are bound in the elaborated context")
}

/// `let l: f = def in rest`, as an applied implication introduction.
fn let_in(s: &Sequent, l: &str, f: &Formula, def: ProofNode, rest: ProofNode) -> ProofNode {
    ProofNode::new(RuleId::ImpElim, s.clone())
        .premise(
            ProofNode::new(RuleId::ImpIntro, s.with_goal(Formula::imp(f.clone(), s.goal.clone())))
                .label(l)
                .premise(rest),
        )
        .premise(def)
}

fn parts(f: &Formula) -> (&Formula, &Formula) {
    match f {
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => (a, b),
        _ => unreachable!("binary connective expected"),
    }
}

fn elab(d: &Deriv, s: &Sequent) -> ProofNode {
    let goal = &s.goal;
    match d {
        Deriv::Hyp(l) => hyp(s, l, goal),
        Deriv::ExFalso(l) => {
            if *goal == Formula::Falsum {
                hyp(s, l, goal)
            } else {
                ProofNode::new(RuleId::FalseElim, s.clone()).premise(hyp(s, l, &Formula::Falsum))
            }
        }
        Deriv::TrueR => ProofNode::new(RuleId::TrueIntro, s.clone()),
        Deriv::AndR(l, r) => {
            let (a, b) = parts(goal);
            ProofNode::new(RuleId::AndIntro, s.clone())
                .premise(elab(l, &s.with_goal(a.clone())))
                .premise(elab(r, &s.with_goal(b.clone())))
        }
        Deriv::ImpR(l, body) => {
            let (a, b) = parts(goal);
            ProofNode::new(RuleId::ImpIntro, s.clone())
                .label(l)
                .premise(elab(body, &s.extend(l, a.clone(), b.clone())))
        }
        Deriv::OrR(left, body) => {
            let (a, b) = parts(goal);
            let (rule, part) = if *left { (RuleId::OrIntroL, a) } else { (RuleId::OrIntroR, b) };
            ProofNode::new(rule, s.clone()).premise(elab(body, &s.with_goal(part.clone())))
        }
        Deriv::AndL { h, l1, l2, rest } => {
            let hf = formula_of(s, h).clone();
            let (a, b) = parts(&hf);
            let s1 = s.extend(l1, a.clone(), goal.clone());
            let s2 = s1.extend(l2, b.clone(), goal.clone());
            let fst = ProofNode::new(RuleId::AndElimL, s.with_goal(a.clone())).premise(hyp(s, h, &hf));
            let snd = ProofNode::new(RuleId::AndElimR, s1.with_goal(b.clone())).premise(hyp(&s1, h, &hf));
            let_in(s, l1, a, fst, let_in(&s1, l2, b, snd, elab(rest, &s2)))
        }
        Deriv::OrL { h, l, left, right } => {
            let hf = formula_of(s, h).clone();
            let (a, b) = parts(&hf);
            ProofNode::new(RuleId::OrElim, s.clone())
                .label(l)
                .label(l)
                .premise(hyp(s, h, &hf))
                .premise(elab(left, &s.extend(l, a.clone(), goal.clone())))
                .premise(elab(right, &s.extend(l, b.clone(), goal.clone())))
        }
        Deriv::ImpAtom { h, p, l, rest } => {
            let hf = formula_of(s, h).clone();
            let (c, b) = parts(&hf);
            let def = ProofNode::new(RuleId::ImpElim, s.with_goal(b.clone()))
                .premise(hyp(s, h, &hf))
                .premise(hyp(s, p, c));
            let_in(s, l, b, def, elab(rest, &s.extend(l, b.clone(), goal.clone())))
        }
        Deriv::ImpTrue { h, l, rest } => {
            let hf = formula_of(s, h).clone();
            let (_, b) = parts(&hf);
            let def = ProofNode::new(RuleId::ImpElim, s.with_goal(b.clone()))
                .premise(hyp(s, h, &hf))
                .premise(ProofNode::new(RuleId::TrueIntro, s.with_goal(Formula::Verum)));
            let_in(s, l, b, def, elab(rest, &s.extend(l, b.clone(), goal.clone())))
        }
        Deriv::ImpAnd { h, l, rest } => {
            let hf = formula_of(s, h).clone();
            let (cd, b) = parts(&hf);
            let (c, d) = parts(cd);
            let db = Formula::imp(d.clone(), b.clone());
            let f = Formula::imp(c.clone(), db.clone());
            // lam x. lam y. h (x, y)
            let x = fresh(s, "x");
            let sx = s.extend(&x, c.clone(), db.clone());
            let y = fresh(&sx, "y");
            let sxy = sx.extend(&y, d.clone(), b.clone());
            let def = ProofNode::new(RuleId::ImpIntro, s.with_goal(f.clone())).label(&x).premise(
                ProofNode::new(RuleId::ImpIntro, sx).label(&y).premise(
                    ProofNode::new(RuleId::ImpElim, sxy.clone())
                        .premise(hyp(&sxy, h, &hf))
                        .premise(
                            ProofNode::new(RuleId::AndIntro, sxy.with_goal(cd.clone()))
                                .premise(hyp(&sxy, &x, c))
                                .premise(hyp(&sxy, &y, d)),
                        ),
                ),
            );
            let_in(s, l, &f, def, elab(rest, &s.extend(l, f.clone(), goal.clone())))
        }
        Deriv::ImpOr { h, l1, l2, rest } => {
            let hf = formula_of(s, h).clone();
            let (cd, b) = parts(&hf);
            let (c, d) = parts(cd);
            // lam x. h (inl x), lam x. h (inr x)
            let branch = |s: &Sequent, part: &Formula, rule: RuleId| {
                let f = Formula::imp(part.clone(), b.clone());
                let x = fresh(s, "x");
                let sx = s.extend(&x, part.clone(), b.clone());
                let def = ProofNode::new(RuleId::ImpIntro, s.with_goal(f.clone())).label(&x).premise(
                    ProofNode::new(RuleId::ImpElim, sx.clone())
                        .premise(hyp(&sx, h, &hf))
                        .premise(ProofNode::new(rule, sx.with_goal(cd.clone())).premise(hyp(&sx, &x, part))),
                );
                (f, def)
            };
            let (f1, def1) = branch(s, c, RuleId::OrIntroL);
            let s1 = s.extend(l1, f1.clone(), goal.clone());
            let (f2, def2) = branch(&s1, d, RuleId::OrIntroR);
            let s2 = s1.extend(l2, f2.clone(), goal.clone());
            let_in(s, l1, &f1, def1, let_in(&s1, l2, &f2, def2, elab(rest, &s2)))
        }
        Deriv::ImpImp { h, l, left, right } => {
            let hf = formula_of(s, h).clone();
            let (cd, b) = parts(&hf);
            let (c, d) = parts(cd);
            let db = Formula::imp(d.clone(), b.clone());
            // D => B as lam x. h (lam y. x)
            let x = fresh(s, "x");
            let sx = s.extend(&x, d.clone(), b.clone());
            let y = fresh(&sx, "y");
            let sxy = sx.extend(&y, c.clone(), d.clone());
            let def_db = ProofNode::new(RuleId::ImpIntro, s.with_goal(db.clone())).label(&x).premise(
                ProofNode::new(RuleId::ImpElim, sx.clone())
                    .premise(hyp(&sx, h, &hf))
                    .premise(
                        ProofNode::new(RuleId::ImpIntro, sx.with_goal(cd.clone()))
                            .label(&y)
                            .premise(hyp(&sxy, &x, d)),
                    ),
            );
            let s_cd = s.with_goal(cd.clone());
            let lemma = let_in(
                &s_cd,
                l,
                &db,
                def_db,
                elab(left, &s.extend(l, db.clone(), cd.clone())),
            );
            let def_b = ProofNode::new(RuleId::ImpElim, s.with_goal(b.clone()))
                .premise(hyp(s, h, &hf))
                .premise(lemma);
            let_in(s, l, b, def_b, elab(right, &s.extend(l, b.clone(), goal.clone())))
        }
    }
}
