use super::Formula;

const IMP: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const UNARY: u8 = 4;

/// Canonical printer with minimal parentheses.
///
/// `Imp(F, Falsum)` prints as `~F`. A quantifier is left unparenthesised
/// only in tail position, where its greedy body cannot swallow anything
/// that follows.
pub fn print_formula(f: &Formula) -> String {
    let mut out = String::new();
    go(f, IMP, true, &mut out);
    out
}

fn go(f: &Formula, prec: u8, tail: bool, out: &mut String) {
    match f {
        Formula::Atom(a) => out.push_str(a),
        Formula::Pred(p, v) => {
            out.push_str(p);
            out.push('(');
            out.push_str(v);
            out.push(')');
        }
        Formula::Falsum => out.push_str("False"),
        Formula::Verum => out.push_str("True"),
        Formula::Squash(a) => {
            out.push('{');
            go(a, IMP, true, out);
            out.push('}');
        }
        Formula::Imp(a, b) if **b == Formula::Falsum => {
            out.push('~');
            go(a, UNARY, tail, out);
        }
        Formula::Imp(a, b) => binary(a, " => ", b, IMP, (OR, IMP), prec, tail, out),
        Formula::Or(a, b) => binary(a, " \\/ ", b, OR, (OR, AND), prec, tail, out),
        Formula::And(a, b) => binary(a, " /\\ ", b, AND, (AND, UNARY), prec, tail, out),
        Formula::Forall(x, body) | Formula::Exists(x, body) => {
            let kw = if matches!(f, Formula::Forall(..)) {
                "forall"
            } else {
                "exists"
            };
            if !tail {
                out.push('(');
            }
            out.push_str(kw);
            out.push(' ');
            out.push_str(x);
            out.push_str(". ");
            go(body, IMP, true, out);
            if !tail {
                out.push(')');
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn binary(
    a: &Formula,
    op: &str,
    b: &Formula,
    own: u8,
    (left, right): (u8, u8),
    prec: u8,
    tail: bool,
    out: &mut String,
) {
    let paren = prec > own;
    if paren {
        out.push('(');
    }
    go(a, left, false, out);
    out.push_str(op);
    go(b, right, paren || tail, out);
    if paren {
        out.push(')');
    }
}

/// Fully parenthesised form: every binary connective and quantifier is
/// wrapped and negation is spelled out as `=> False`.
pub fn print_full(f: &Formula) -> String {
    match f {
        Formula::Atom(_) | Formula::Pred(..) | Formula::Falsum | Formula::Verum => print_formula(f),
        Formula::Squash(a) => format!("{{{}}}", print_full(a)),
        Formula::Imp(a, b) => format!("({} => {})", print_full(a), print_full(b)),
        Formula::Or(a, b) => format!("({} \\/ {})", print_full(a), print_full(b)),
        Formula::And(a, b) => format!("({} /\\ {})", print_full(a), print_full(b)),
        Formula::Forall(x, a) => format!("(forall {x}. {})", print_full(a)),
        Formula::Exists(x, a) => format!("(exists {x}. {})", print_full(a)),
    }
}
