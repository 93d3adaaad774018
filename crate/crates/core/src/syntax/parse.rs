use thiserror::Error;

use super::{Formula, IdentSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(offset: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Imp,
    Or,
    And,
    Tilde,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Dot,
    Forall,
    Exists,
    False,
    True,
    Upper(String),
    Lower(String),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Imp => "`=>`".into(),
            Tok::Or => "`\\/`".into(),
            Tok::And => "`/\\`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Forall => "`forall`".into(),
            Tok::Exists => "`exists`".into(),
            Tok::False => "`False`".into(),
            Tok::True => "`True`".into(),
            Tok::Upper(s) | Tok::Lower(s) => format!("`{s}`"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let two = bytes.get(i..i + 2);
        let tok = match c {
            b'=' if two == Some(b"=>") => {
                i += 2;
                Tok::Imp
            }
            b'\\' if two == Some(b"\\/") => {
                i += 2;
                Tok::Or
            }
            b'/' if two == Some(b"/\\") => {
                i += 2;
                Tok::And
            }
            b'~' => {
                i += 1;
                Tok::Tilde
            }
            b'{' => {
                i += 1;
                Tok::LBrace
            }
            b'}' => {
                i += 1;
                Tok::RBrace
            }
            b'(' => {
                i += 1;
                Tok::LParen
            }
            b')' => {
                i += 1;
                Tok::RParen
            }
            b'.' => {
                i += 1;
                Tok::Dot
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                let word = &text[start..i];
                match word {
                    "forall" => Tok::Forall,
                    "exists" => Tok::Exists,
                    "False" => Tok::False,
                    "True" => Tok::True,
                    w if c.is_ascii_uppercase() => Tok::Upper(w.to_string()),
                    w => Tok::Lower(w.to_string()),
                }
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError::new(i, format!("unexpected character `{ch}`")));
            }
        };
        toks.push((start, tok));
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(t) => ParseError::new(
                self.offset(),
                format!("expected {wanted}, found {}", t.describe()),
            ),
            None => ParseError::new(self.end, format!("expected {wanted}, found end of input")),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        self.imp()
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if self.peek() == Some(&Tok::Imp) {
            self.pos += 1;
            let rhs = self.imp()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            lhs = Formula::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::Tilde) => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Tok::LBrace) => {
                self.pos += 1;
                let f = self.formula()?;
                self.expect(Tok::RBrace)?;
                Ok(Formula::squash(f))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Some(Tok::Forall) | Some(Tok::Exists) => {
                let universal = self.bump() == Some(Tok::Forall);
                let var = match self.bump() {
                    Some(Tok::Lower(v)) => v,
                    _ => {
                        self.pos -= 1;
                        return Err(self.unexpected("an individual variable"));
                    }
                };
                self.expect(Tok::Dot)?;
                let body = self.formula()?;
                Ok(if universal {
                    Formula::forall(var, body)
                } else {
                    Formula::exists(var, body)
                })
            }
            Some(Tok::False) => {
                self.pos += 1;
                Ok(Formula::Falsum)
            }
            Some(Tok::True) => {
                self.pos += 1;
                Ok(Formula::Verum)
            }
            Some(Tok::Upper(_)) => {
                let Some(Tok::Upper(name)) = self.bump() else {
                    unreachable!()
                };
                if self.peek() == Some(&Tok::LParen) {
                    self.pos += 1;
                    let var = match self.bump() {
                        Some(Tok::Lower(v)) => v,
                        _ => {
                            self.pos -= 1;
                            return Err(self.unexpected("an individual variable"));
                        }
                    };
                    self.expect(Tok::RParen)?;
                    Ok(Formula::Pred(name, var))
                } else {
                    Ok(Formula::Atom(name))
                }
            }
            Some(Tok::Lower(v)) => Err(ParseError::new(
                self.offset(),
                format!("individual variable `{v}` cannot stand as a formula"),
            )),
            _ => Err(self.unexpected("a formula")),
        }
    }
}

/// Parses the ASCII concrete syntax.
///
/// `=>` associates to the right, `/\` and `\/` to the left, and `~F` is
/// read as `F => False`. Quantifier bodies extend as far right as possible.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let f = p.formula()?;
    if p.pos < p.toks.len() {
        return Err(p.unexpected("end of input"));
    }
    IdentSpec::of(&f).map_err(|m| ParseError::new(0, m))?;
    Ok(f)
}
