use super::Term;
use crate::syntax::ParseError;

const KEYWORDS: &[&str] = &[
    "lam", "ap", "pair", "fst", "snd", "inl", "inr", "case", "star", "any",
];

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Dot,
    Semi,
}

fn is_ident_char(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_' || c == b'\''
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            c if c.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'.' => Tok::Dot,
            b';' => Tok::Semi,
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && is_ident_char(bytes[i]) {
                    i += 1;
                }
                toks.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError::new(i, format!("unexpected character `{ch}`")));
            }
        };
        i += 1;
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

    fn error(&self, wanted: &str) -> ParseError {
        let found = match self.peek() {
            Some(Tok::Ident(s)) => format!("`{s}`"),
            Some(Tok::LParen) => "`(`".into(),
            Some(Tok::RParen) => "`)`".into(),
            Some(Tok::Dot) => "`.`".into(),
            Some(Tok::Semi) => "`;`".into(),
            None => "end of input".into(),
        };
        ParseError::new(self.offset(), format!("expected {wanted}, found {found}"))
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    fn binder(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(x)) if !KEYWORDS.contains(&x.as_str()) => {
                let x = x.clone();
                self.pos += 1;
                Ok(x)
            }
            _ => Err(self.error("a variable")),
        }
    }

    /// `x.t`
    fn scope(&mut self) -> Result<(String, Term), ParseError> {
        let x = self.binder()?;
        self.expect(Tok::Dot, "`.`")?;
        Ok((x, self.term()?))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut t = self.primary()?;
        // Juxtaposed application: t(a)(b)...
        while self.peek() == Some(&Tok::LParen) {
            self.pos += 1;
            let arg = self.term()?;
            self.expect(Tok::RParen, "`)`")?;
            t = Term::ap(t, arg);
        }
        Ok(t)
    }

    fn primary(&mut self) -> Result<Term, ParseError> {
        let Some(Tok::Ident(word)) = self.peek().cloned() else {
            if self.peek() == Some(&Tok::LParen) {
                self.pos += 1;
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                return Ok(t);
            }
            return Err(self.error("a term"));
        };
        self.pos += 1;
        if word == "star" {
            return Ok(Term::Star);
        }
        if !KEYWORDS.contains(&word.as_str()) {
            return Ok(Term::Var(word));
        }
        self.expect(Tok::LParen, "`(`")?;
        let t = match word.as_str() {
            "lam" => {
                let (x, b) = self.scope()?;
                Term::lam(x, b)
            }
            "ap" | "pair" => {
                let a = self.term()?;
                self.expect(Tok::Semi, "`;`")?;
                let b = self.term()?;
                if word == "ap" {
                    Term::ap(a, b)
                } else {
                    Term::pair(a, b)
                }
            }
            "case" => {
                let s = self.term()?;
                self.expect(Tok::Semi, "`;`")?;
                let (x, l) = self.scope()?;
                self.expect(Tok::Semi, "`;`")?;
                let (y, r) = self.scope()?;
                Term::case(s, x, l, y, r)
            }
            unary => {
                let t = self.term()?;
                match unary {
                    "fst" => Term::fst(t),
                    "snd" => Term::snd(t),
                    "inl" => Term::inl(t),
                    "inr" => Term::inr(t),
                    _ => Term::any(t),
                }
            }
        };
        self.expect(Tok::RParen, "`)`")?;
        Ok(t)
    }
}

/// Parses the term surface syntax: `lam(x.t)`, `ap(t; t)`, `pair(t; t)`,
/// `fst(t)`, `snd(t)`, `inl(t)`, `inr(t)`, `case(t; x.t; y.t)`, `star`,
/// `any(t)`, and juxtaposed application `f(a)`.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        end: text.len(),
    };
    let t = p.term()?;
    if p.pos < p.toks.len() {
        return Err(p.error("end of input"));
    }
    Ok(t)
}
