use super::{normalize, Term};
use crate::syntax::Formula;

/// Step budget for normalising a term that is not directly checkable.
pub const CHECK_FUEL: usize = 10_000;

/// Bidirectional check of `t` against `f` under labelled hypotheses, reading
/// formulas as types: implication as functions, conjunction as pairs,
/// disjunction as tagged unions, `True` as the unit type.
///
/// `star` is accepted against any `{G}`: whether the squash is inhabited is
/// a proof-level question, not a term-level one. Later hypotheses shadow
/// earlier ones with the same name.
///
/// Evidence is judged up to computation: a term that does not check as
/// written (typically a beta-redex `ap(lam(x.b); a)`, whose binder type
/// cannot be synthesised) is normalised and its normal form checked.
pub fn check_evidence(t: &Term, f: &Formula, hyps: &[(String, Formula)]) -> bool {
    let mut ctx: Vec<(&str, &Formula)> = hyps.iter().map(|(l, f)| (l.as_str(), f)).collect();
    if check(&mut ctx, t, f) {
        return true;
    }
    match normalize(t, CHECK_FUEL) {
        Ok(nf) if nf != *t => check(&mut ctx, &nf, f),
        _ => false,
    }
}

fn check<'a>(ctx: &mut Vec<(&'a str, &'a Formula)>, t: &'a Term, f: &'a Formula) -> bool {
    match (t, f) {
        (Term::Lam(x, body), Formula::Imp(a, b)) => {
            ctx.push((x, a));
            let ok = check(ctx, body, b);
            ctx.pop();
            ok
        }
        (Term::Pair(l, r), Formula::And(a, b)) => check(ctx, l, a) && check(ctx, r, b),
        (Term::Inl(l), Formula::Or(a, _)) => check(ctx, l, a),
        (Term::Inr(r), Formula::Or(_, b)) => check(ctx, r, b),
        (Term::Star, Formula::Verum | Formula::Squash(_)) => true,
        (Term::Any(inner), _) => check(ctx, inner, &Formula::Falsum),
        (Term::Case(s, x, l, y, r), _) => {
            let Some(Formula::Or(a, b)) = infer(ctx, s) else {
                return false;
            };
            ctx.push((x, a));
            let left = check(ctx, l, f);
            ctx.pop();
            if !left {
                return false;
            }
            ctx.push((y, b));
            let right = check(ctx, r, f);
            ctx.pop();
            right
        }
        (Term::Lam(..) | Term::Pair(..) | Term::Inl(_) | Term::Inr(_) | Term::Star, _) => false,
        _ => infer(ctx, t).is_some_and(|g| g.alpha_eq(f)),
    }
}

fn infer<'a>(ctx: &mut Vec<(&'a str, &'a Formula)>, t: &'a Term) -> Option<&'a Formula> {
    match t {
        Term::Var(x) => ctx.iter().rev().find(|(l, _)| l == x).map(|(_, f)| *f),
        Term::Ap(fun, arg) => match infer(ctx, fun)? {
            Formula::Imp(a, b) if check(ctx, arg, a) => Some(b),
            _ => None,
        },
        Term::Fst(p) => match infer(ctx, p)? {
            Formula::And(a, _) => Some(a),
            _ => None,
        },
        Term::Snd(p) => match infer(ctx, p)? {
            Formula::And(_, b) => Some(b),
            _ => None,
        },
        Term::Case(s, x, l, y, r) => {
            let Formula::Or(a, b) = infer(ctx, s)? else {
                return None;
            };
            ctx.push((x, a));
            let left = infer(ctx, l);
            ctx.pop();
            let left = left?;
            ctx.push((y, b));
            let ok = check(ctx, r, left);
            ctx.pop();
            ok.then_some(left)
        }
        Term::Star => Some(&Formula::Verum),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evidence::parse_term;
    use crate::syntax::parse_formula;

    fn ok(term: &str, formula: &str) -> bool {
        check_evidence(&parse_term(term).unwrap(), &parse_formula(formula).unwrap(), &[])
    }

    #[test]
    fn weakening_realizer() {
        assert!(ok("lam(x.lam(y.x))", "A => (B => A)"));
        assert!(!ok("lam(x.lam(y.y))", "A => (B => A)"));
    }

    #[test]
    fn distribution_realizer() {
        assert!(ok(
            "lam(f.lam(g.lam(x.g(x)(f(x)))))",
            "(A => B) => ((A => (B => C)) => (A => C))"
        ));
    }

    #[test]
    fn excluded_middle_continuation_realizer() {
        assert!(ok(
            "lam(h.ap(h; inr(lam(p.ap(h; inl(p))))))",
            "((P \\/ (P => A)) => A) => A"
        ));
    }

    #[test]
    fn contrapositive_realizer() {
        assert!(ok(
            "lam(pq.lam(nq.lam(p.ap(nq; ap(pq; p)))))",
            "(P => Q) => (~Q => ~P)"
        ));
    }

    #[test]
    fn ex_falso() {
        assert!(ok("lam(x.any(x))", "False => P"));
        assert!(!ok("lam(x.any(x))", "Q => P"));
    }

    #[test]
    fn star_and_squash() {
        assert!(ok("star", "True"));
        assert!(ok("star", "{P \\/ ~P}"));
        assert!(!ok("star", "P"));
        assert!(ok("lam(f.star)", "~~P => {P}"));
    }

    #[test]
    fn case_analysis() {
        assert!(ok("lam(s.case(s; a.inr(a); b.inl(b)))", "A \\/ B => B \\/ A"));
        assert!(!ok("lam(s.case(s; a.inl(a); b.inr(b)))", "A \\/ B => B \\/ A"));
        // A case in inference position: both branches must infer the same type.
        assert!(ok("lam(s.fst(case(s; x.x; y.y)))", "(A /\\ B) \\/ (A /\\ B) => A"));
        assert!(!ok("lam(s.fst(case(s; x.x; y.y)))", "(A /\\ B) \\/ (B /\\ A) => A"));
    }

    #[test]
    fn hypotheses_and_shadowing() {
        let hyps = vec![
            ("x".to_string(), parse_formula("A").unwrap()),
            ("x".to_string(), parse_formula("B").unwrap()),
        ];
        assert!(check_evidence(&Term::var("x"), &parse_formula("B").unwrap(), &hyps));
        assert!(!check_evidence(&Term::var("x"), &parse_formula("A").unwrap(), &hyps));
        assert!(!check_evidence(&Term::var("y"), &parse_formula("A").unwrap(), &hyps));
    }

    #[test]
    fn redexes_are_checked_through_their_normal_form() {
        assert!(ok("lam(x.ap(lam(y.y); x))", "A => A"));
        assert!(ok("lam(p.ap(lam(f.ap(f; p)); lam(q.q)))", "A => A"));
        assert!(!ok("lam(x.ap(lam(y.star); x))", "A => A"));
        // Diverging terms are never accepted.
        assert!(!ok("ap(lam(x.ap(x; x)); lam(x.ap(x; x)))", "A"));
    }

    #[test]
    fn ill_typed_terms_are_rejected() {
        assert!(!ok("pair(star; star)", "True \\/ True"));
        assert!(!ok("fst(star)", "True"));
        assert!(!ok("ap(star; star)", "True"));
    }
}
