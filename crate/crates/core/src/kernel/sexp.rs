//! S-expression reader and printer for sequents and proofs.
//!
//! ```text
//! sequent := (hyp* |- formula)         hyp := (label formula)
//! proof   := (Rule (goal sequent) param* proof*)
//! param   := (label l) | (side left|right) | (witness x) | (eigen a)
//! formula := "string in the formula syntax" | atom | (=> f f) | (/\ f f)
//!          | (\/ f f) | (~ f) | (squash f) | (forall x f) | (exists x f) | (P x)
//! ```
//!
//! `;` starts a comment running to the end of the line. `OrIntro` and
//! `AndElim` may be written without their suffix when a `side` parameter
//! says which one is meant.

use std::fmt::Write as _;

use super::{Param, ProofNode, RuleId, Sequent, Side};
use crate::syntax::{parse_formula, print_formula, Formula, IdentSpec, ParseError};

#[derive(Debug, Clone, PartialEq)]
enum Sexp {
    Atom(String, usize),
    Str(String, usize),
    List(Vec<Sexp>, usize),
}

impl Sexp {
    fn offset(&self) -> usize {
        match self {
            Sexp::Atom(_, o) | Sexp::Str(_, o) | Sexp::List(_, o) => *o,
        }
    }

    fn head(&self) -> Option<&str> {
        match self {
            Sexp::List(items, _) => match items.first() {
                Some(Sexp::Atom(a, _)) => Some(a),
                _ => None,
            },
            _ => None,
        }
    }
}

struct Reader<'a> {
    text: &'a str,
    pos: usize,
}

impl Reader<'_> {
    fn skip_blank(&mut self) {
        let bytes = self.text.as_bytes();
        while self.pos < bytes.len() {
            match bytes[self.pos] {
                c if c.is_ascii_whitespace() => self.pos += 1,
                b';' => {
                    while self.pos < bytes.len() && bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                _ => break,
            }
        }
    }

    fn read(&mut self) -> Result<Sexp, ParseError> {
        self.skip_blank();
        let bytes = self.text.as_bytes();
        let start = self.pos;
        match bytes.get(self.pos) {
            None => Err(ParseError::new(start, "unexpected end of input")),
            Some(b')') => Err(ParseError::new(start, "unexpected `)`")),
            Some(b'(') => {
                self.pos += 1;
                let mut items = Vec::new();
                loop {
                    self.skip_blank();
                    match bytes.get(self.pos) {
                        None => return Err(ParseError::new(start, "unclosed `(`")),
                        Some(b')') => {
                            self.pos += 1;
                            return Ok(Sexp::List(items, start));
                        }
                        _ => items.push(self.read()?),
                    }
                }
            }
            Some(b'"') => {
                self.pos += 1;
                let body = self.pos;
                while self.pos < bytes.len() && bytes[self.pos] != b'"' {
                    self.pos += 1;
                }
                if self.pos == bytes.len() {
                    return Err(ParseError::new(start, "unterminated string"));
                }
                let s = self.text[body..self.pos].to_string();
                self.pos += 1;
                Ok(Sexp::Str(s, body))
            }
            Some(_) => {
                while self.pos < bytes.len()
                    && !bytes[self.pos].is_ascii_whitespace()
                    && !matches!(bytes[self.pos], b'(' | b')' | b'"' | b';')
                {
                    self.pos += 1;
                }
                Ok(Sexp::Atom(self.text[start..self.pos].to_string(), start))
            }
        }
    }
}

fn read_one(text: &str) -> Result<Sexp, ParseError> {
    let mut r = Reader { text, pos: 0 };
    let s = r.read()?;
    r.skip_blank();
    if r.pos < text.len() {
        return Err(ParseError::new(r.pos, "trailing input after expression"));
    }
    Ok(s)
}

fn shift(e: ParseError, by: usize) -> ParseError {
    ParseError::new(e.offset + by, e.message)
}

fn formula(s: &Sexp) -> Result<Formula, ParseError> {
    let f = formula_raw(s)?;
    IdentSpec::of(&f).map_err(|m| ParseError::new(s.offset(), m))?;
    Ok(f)
}

fn formula_raw(s: &Sexp) -> Result<Formula, ParseError> {
    match s {
        Sexp::Str(text, o) => parse_formula(text).map_err(|e| shift(e, *o)),
        Sexp::Atom(a, o) => parse_formula(a).map_err(|e| shift(e, *o)),
        Sexp::List(items, o) => {
            let bad = |msg: &str| ParseError::new(*o, msg.to_string());
            let Some(Sexp::Atom(op, _)) = items.first() else {
                return Err(bad("expected a connective at the head of the list"));
            };
            let args = &items[1..];
            let binary = |k: fn(Formula, Formula) -> Formula| -> Result<Formula, ParseError> {
                match args {
                    [a, b] => Ok(k(formula_raw(a)?, formula_raw(b)?)),
                    _ => Err(bad("binary connective takes two arguments")),
                }
            };
            match op.as_str() {
                "=>" | "imp" => binary(Formula::imp),
                "/\\" | "and" => binary(Formula::and),
                "\\/" | "or" => binary(Formula::or),
                "~" | "not" | "squash" => match args {
                    [a] if op == "squash" => Ok(Formula::squash(formula_raw(a)?)),
                    [a] => Ok(Formula::not(formula_raw(a)?)),
                    _ => Err(bad("unary connective takes one argument")),
                },
                "forall" | "exists" => match args {
                    [Sexp::Atom(x, _), body] if is_individual(x) => {
                        let body = formula_raw(body)?;
                        Ok(if op == "forall" {
                            Formula::forall(x.clone(), body)
                        } else {
                            Formula::exists(x.clone(), body)
                        })
                    }
                    _ => Err(bad("quantifier takes a variable and a body")),
                },
                p if p.starts_with(|c: char| c.is_ascii_uppercase()) => match args {
                    [Sexp::Atom(x, _)] if is_individual(x) => Ok(Formula::pred(p, x.clone())),
                    _ => Err(bad("predicate takes one individual variable")),
                },
                _ => Err(bad(&format!("unknown connective `{op}`"))),
            }
        }
    }
}

fn is_individual(x: &str) -> bool {
    x.starts_with(|c: char| c.is_ascii_lowercase())
        && x.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

fn is_label(x: &str) -> bool {
    !x.starts_with('_') && x.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

fn sequent(s: &Sexp) -> Result<Sequent, ParseError> {
    let Sexp::List(items, o) = s else {
        return Err(ParseError::new(s.offset(), "expected a sequent `(hyps |- goal)`"));
    };
    let Some(turnstile) = items
        .iter()
        .position(|i| matches!(i, Sexp::Atom(a, _) if a == "|-"))
    else {
        return Err(ParseError::new(*o, "sequent is missing `|-`"));
    };
    let mut hyps = Vec::new();
    for h in &items[..turnstile] {
        match h {
            Sexp::List(pair, _) if pair.len() == 2 => {
                let Sexp::Atom(l, lo) = &pair[0] else {
                    return Err(ParseError::new(h.offset(), "expected a hypothesis label"));
                };
                if !is_label(l) {
                    return Err(ParseError::new(*lo, format!("invalid label `{l}`")));
                }
                hyps.push((l.clone(), formula(&pair[1])?));
            }
            _ => {
                return Err(ParseError::new(h.offset(), "expected a hypothesis `(label formula)`"))
            }
        }
    }
    match &items[turnstile + 1..] {
        [g] => Ok(Sequent::new(hyps, formula(g)?)),
        _ => Err(ParseError::new(*o, "expected exactly one formula after `|-`")),
    }
}

/// Reads `(h1 A1) ... |- G`, e.g. `(|- (=> A A))` or `((x "A") |- "A")`.
pub fn sequent_parse(text: &str) -> Result<Sequent, ParseError> {
    sequent(&read_one(text)?)
}

const PARAM_KEYS: &[&str] = &["label", "side", "witness", "eigen"];

fn param(items: &[Sexp], o: usize) -> Result<Param, ParseError> {
    let (Some(Sexp::Atom(key, _)), Some(Sexp::Atom(v, vo)), 2) = (items.first(), items.get(1), items.len())
    else {
        return Err(ParseError::new(o, "parameter takes one value"));
    };
    match key.as_str() {
        "label" if is_label(v) => Ok(Param::Label(v.clone())),
        "side" if v == "left" => Ok(Param::Side(Side::Left)),
        "side" if v == "right" => Ok(Param::Side(Side::Right)),
        "witness" if is_individual(v) => Ok(Param::Witness(v.clone())),
        "eigen" if is_individual(v) => Ok(Param::Eigen(v.clone())),
        _ => Err(ParseError::new(*vo, format!("invalid value `{v}` for `{key}`"))),
    }
}

fn proof(s: &Sexp) -> Result<ProofNode, ParseError> {
    let Sexp::List(items, o) = s else {
        return Err(ParseError::new(s.offset(), "expected a proof `(Rule (goal ...) ...)`"));
    };
    let Some(Sexp::Atom(name, no)) = items.first() else {
        return Err(ParseError::new(*o, "expected a rule name"));
    };
    let goal = match items.get(1) {
        Some(g @ Sexp::List(gi, _)) if g.head() == Some("goal") && gi.len() == 2 => sequent(&gi[1])?,
        _ => return Err(ParseError::new(*o, "expected `(goal sequent)` after the rule name")),
    };
    let mut params = Vec::new();
    let mut premises = Vec::new();
    for item in &items[2..] {
        match item {
            Sexp::List(pi, po) if item.head().is_some_and(|h| PARAM_KEYS.contains(&h)) => {
                params.push(param(pi, *po)?)
            }
            _ => premises.push(proof(item)?),
        }
    }
    let side = params.iter().find_map(|p| match p {
        Param::Side(s) => Some(*s),
        _ => None,
    });
    let rule = match (name.as_str(), side) {
        ("OrIntro", Some(Side::Left)) => RuleId::OrIntroL,
        ("OrIntro", Some(Side::Right)) => RuleId::OrIntroR,
        ("AndElim", Some(Side::Left)) => RuleId::AndElimL,
        ("AndElim", Some(Side::Right)) => RuleId::AndElimR,
        (n, _) => n.parse().map_err(|m: String| ParseError::new(*no, m))?,
    };
    let implied = match rule {
        RuleId::OrIntroL | RuleId::AndElimL => Some(Side::Left),
        RuleId::OrIntroR | RuleId::AndElimR => Some(Side::Right),
        _ => None,
    };
    if side.is_some() && side != implied {
        return Err(ParseError::new(*no, format!("`side` does not agree with rule {rule}")));
    }
    params.retain(|p| !matches!(p, Param::Side(_)));
    Ok(ProofNode {
        rule,
        goal,
        params,
        premises,
    })
}

/// Reads a proof tree.
pub fn proof_parse(text: &str) -> Result<ProofNode, ParseError> {
    proof(&read_one(text)?)
}

fn quote(f: &Formula) -> String {
    format!("\"{}\"", print_formula(f))
}

pub fn print_sequent(s: &Sequent) -> String {
    let mut out = String::from("(");
    for (l, f) in &s.hyps {
        let _ = write!(out, "({l} {}) ", quote(f));
    }
    let _ = write!(out, "|- {})", quote(&s.goal));
    out
}

/// Pretty-prints a proof, one node per line, premises indented.
pub fn print_proof(p: &ProofNode) -> String {
    let mut out = String::new();
    write_proof(p, 0, &mut out);
    out
}

fn write_proof(p: &ProofNode, indent: usize, out: &mut String) {
    let _ = write!(out, "{:indent$}({} (goal {})", "", p.rule, print_sequent(&p.goal));
    for param in &p.params {
        let _ = match param {
            Param::Label(l) => write!(out, " (label {l})"),
            Param::Witness(w) => write!(out, " (witness {w})"),
            Param::Eigen(e) => write!(out, " (eigen {e})"),
            Param::Side(Side::Left) => write!(out, " (side left)"),
            Param::Side(Side::Right) => write!(out, " (side right)"),
        };
    }
    for q in &p.premises {
        out.push('\n');
        write_proof(q, indent + 2, out);
    }
    out.push(')');
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::check_proof;

    #[test]
    fn sequents() {
        let s = sequent_parse("(|- (=> A A))").unwrap();
        assert_eq!(s, Sequent::goal(parse_formula("A => A").unwrap()));
        let s = sequent_parse("((x \"A\") (y (squash (\\/ P (~ P)))) |- \"A\")").unwrap();
        assert_eq!(s.hyps[1].1, parse_formula("{P \\/ ~P}").unwrap());
        let s = sequent_parse("(|- (forall x (P x)))").unwrap();
        assert_eq!(s.goal, parse_formula("forall x. P(x)").unwrap());
        assert_eq!(print_sequent(&s), "(|- \"forall x. P(x)\")");
    }

    #[test]
    fn sequent_errors() {
        assert!(sequent_parse("(A)").is_err());
        assert!(sequent_parse("(|- A B)").is_err());
        assert!(sequent_parse("((_hidden A) |- A)").is_err());
        // Offsets inside strings are relative to the whole input.
        let e = sequent_parse("(|- \"A => \")").unwrap_err();
        assert_eq!(e.offset, 10);
        assert!(sequent_parse("(|- (=> A))").is_err());
        assert!(sequent_parse("(|- A) x").is_err());
    }

    const IDENTITY: &str = "\
; identity
(ImpIntro (goal (|- \"A => A\")) (label x)
  (Hyp (goal ((x \"A\") |- \"A\")) (label x)))";

    #[test]
    fn proofs_round_trip() {
        let p = proof_parse(IDENTITY).unwrap();
        assert_eq!(p.rule, RuleId::ImpIntro);
        assert_eq!(p.premises.len(), 1);
        let printed = print_proof(&p);
        assert_eq!(proof_parse(&printed).unwrap(), p);
        assert!(check_proof(&p).is_ok());
    }

    #[test]
    fn side_sugar() {
        let p = proof_parse(
            "(OrIntro (goal (|- \"True \\/ False\")) (side left) (TrueIntro (goal (|- \"True\"))))",
        )
        .unwrap();
        assert_eq!(p.rule, RuleId::OrIntroL);
        assert!(p.params.is_empty());
        assert!(proof_parse(
            "(OrIntroR (goal (|- \"True \\/ False\")) (side left) (TrueIntro (goal (|- \"True\"))))"
        )
        .is_err());
        assert!(proof_parse("(OrIntro (goal (|- \"True \\/ False\")))").is_err());
    }

    #[test]
    fn proof_errors() {
        assert!(proof_parse("(Bogus (goal (|- A)))").is_err());
        assert!(proof_parse("(Hyp (|- A))").is_err());
        assert!(proof_parse("(Hyp (goal (|- A)) (label _x))").is_err());
        assert!(proof_parse("(Hyp (goal (|- A)) (witness X))").is_err());
        assert!(proof_parse("(Hyp (goal (|- A))").is_err());
    }
}
