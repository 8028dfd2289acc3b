//! Generator strings: sums of products of integers and variable powers.
//!
//! ```text
//! poly   := sign? term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := INT | VAR ("^" INT)?
//! ```

use std::collections::BTreeMap;

/// Error position is a character offset into the generator string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrammarError {
    pub offset: usize,
    pub message: String,
}

/// One term `coeff * x_1^{exps[0]} * ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: i64,
    pub exps: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Var(String),
    Caret,
    Star,
    Plus,
    Minus,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, GrammarError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '^' => out.push((start, Tok::Caret)),
            '*' => out.push((start, Tok::Star)),
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            _ if c.is_ascii_digit() => {
                let mut v: u64 = 0;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    let digit = chars[i].to_digit(10).expect("digit") as u64;
                    v = v.checked_mul(10).and_then(|v| v.checked_add(digit)).ok_or_else(|| GrammarError {
                        offset: start,
                        message: "integer literal too large".into(),
                    })?;
                    i += 1;
                }
                out.push((start, Tok::Int(v)));
                continue;
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((start, Tok::Var(chars[start..i].iter().collect())));
                continue;
            }
            _ => return Err(GrammarError { offset: start, message: format!("unexpected character '{c}'") }),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, GrammarError> {
        Err(GrammarError { offset: self.offset(), message: message.into() })
    }

    fn int(&mut self, what: &str) -> Result<u64, GrammarError> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.pos += 1;
                Ok(v)
            }
            _ => self.err(format!("expected {what}")),
        }
    }

    fn term(&mut self) -> Result<Term, GrammarError> {
        let mut coeff: i64 = 1;
        let mut exps = vec![0u32; self.vars.len()];
        loop {
            let at = self.offset();
            match self.peek().cloned() {
                Some(Tok::Int(v)) => {
                    self.pos += 1;
                    coeff = i64::try_from(v).ok().and_then(|v| coeff.checked_mul(v)).ok_or(GrammarError {
                        offset: at,
                        message: "coefficient overflow".into(),
                    })?;
                }
                Some(Tok::Var(name)) => {
                    self.pos += 1;
                    let Some(k) = self.vars.iter().position(|v| *v == name) else {
                        return Err(GrammarError { offset: at, message: format!("unknown variable '{name}'") });
                    };
                    let e = if self.peek() == Some(&Tok::Caret) {
                        self.pos += 1;
                        let e = self.int("an exponent")?;
                        u32::try_from(e).map_err(|_| GrammarError { offset: at, message: "exponent too large".into() })?
                    } else {
                        1
                    };
                    exps[k] = exps[k]
                        .checked_add(e)
                        .ok_or(GrammarError { offset: at, message: "exponent too large".into() })?;
                }
                _ => return self.err("expected an integer or a variable"),
            }
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                return Ok(Term { coeff, exps });
            }
        }
    }
}

/// Parses `src` over the variables `vars`. Like terms are combined and
/// zero terms dropped; the result is sorted by exponent vector.
pub fn parse_polynomial(src: &str, vars: &[String]) -> Result<Vec<Term>, GrammarError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0, end: src.chars().count(), vars };
    if p.peek().is_none() {
        return p.err("empty generator");
    }
    let mut acc: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    let mut sign = 1i64;
    if p.peek() == Some(&Tok::Minus) {
        p.pos += 1;
        sign = -1;
    }
    loop {
        let at = p.offset();
        let t = p.term()?;
        let overflow = || GrammarError { offset: at, message: "coefficient overflow".into() };
        let c = t.coeff.checked_mul(sign).ok_or_else(overflow)?;
        let slot = acc.entry(t.exps).or_insert(0);
        *slot = slot.checked_add(c).ok_or_else(overflow)?;
        match p.peek() {
            None => break,
            Some(Tok::Plus) => sign = 1,
            Some(Tok::Minus) => sign = -1,
            Some(_) => return p.err("expected '+', '-' or '*'"),
        }
        p.pos += 1;
    }
    Ok(acc.into_iter().filter(|(_, c)| *c != 0).map(|(exps, coeff)| Term { coeff, exps }).collect())
}
