//! Recursive-descent parser for the expression grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | power
//! power  := atom ('^' factor)?          -- right-associative
//! atom   := number | 'x' | '(' expr ')' | 'exp' '(' expr ')' | 'log' '(' expr ')'
//! ```
//!
//! `^` requires a constant exponent: the right-hand side must contain no `x`.

use super::Expression;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(f64),
    Var,
    Exp,
    Log,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

fn syntax(pos: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position: pos + 1,
        message: message.into(),
    }
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(Tok, usize)>> {
        let mut lx = Lexer {
            src: src.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        while let Some(t) = lx.next_token()? {
            out.push(t);
        }
        Ok(out)
    }

    fn next_token(&mut self) -> Result<Option<(Tok, usize)>> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' | b'.' => return Ok(Some((self.number()?, start))),
            c if c.is_ascii_alphabetic() => return Ok(Some((self.ident()?, start))),
            other => {
                return Err(syntax(
                    start,
                    format!("unexpected character '{}'", other as char),
                ))
            }
        };
        self.pos += 1;
        Ok(Some((tok, start)))
    }

    fn number(&mut self) -> Result<Tok> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos < self.src.len() && self.src[self.pos] == b'.' {
            self.pos += 1;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
        }
        // optional exponent, only when followed by a digit or a signed digit
        if self.pos < self.src.len() && matches!(self.src[self.pos], b'e' | b'E') {
            let mut probe = self.pos + 1;
            if probe < self.src.len() && matches!(self.src[probe], b'+' | b'-') {
                probe += 1;
            }
            if probe < self.src.len() && self.src[probe].is_ascii_digit() {
                self.pos = probe;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii slice");
        text.parse::<f64>()
            .map(Tok::Num)
            .map_err(|_| syntax(start, format!("invalid number literal '{text}'")))
    }

    fn ident(&mut self) -> Result<Tok> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii slice");
        match text {
            "x" => Ok(Tok::Var),
            "exp" => Ok(Tok::Exp),
            "log" => Ok(Tok::Log),
            other => Err(syntax(
                start,
                format!("unknown identifier '{other}' (only x, exp, log are defined)"),
            )),
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(t, _)| t.clone());
        self.idx += 1;
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.idx += 1;
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Expression> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.idx += 1;
                    lhs = Expression::add(lhs, self.term()?);
                }
                Some(Tok::Minus) => {
                    self.idx += 1;
                    lhs = Expression::sub(lhs, self.term()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expression> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.idx += 1;
                    lhs = Expression::mul(lhs, self.factor()?);
                }
                Some(Tok::Slash) => {
                    self.idx += 1;
                    lhs = Expression::div(lhs, self.factor()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expression> {
        if self.peek() == Some(&Tok::Minus) {
            self.idx += 1;
            return Ok(Expression::neg(self.factor()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expression> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            let caret_pos = self.pos();
            self.idx += 1;
            let exponent = self.factor()?;
            if !exponent.is_constant() {
                return Err(syntax(caret_pos, "exponent must be a real constant"));
            }
            let p = exponent.eval_raw(1.0);
            if !p.is_finite() {
                return Err(syntax(
                    caret_pos,
                    "exponent does not evaluate to a finite number",
                ));
            }
            return Ok(Expression::pow(base, p));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expression> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(v)) => Ok(Expression::constant(v)),
            Some(Tok::Var) => Ok(Expression::var()),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "closing ')'")?;
                Ok(e)
            }
            Some(Tok::Exp) => {
                self.expect(Tok::LParen, "'(' after exp")?;
                let e = self.expr()?;
                self.expect(Tok::RParen, "closing ')'")?;
                Ok(Expression::exp(e))
            }
            Some(Tok::Log) => {
                self.expect(Tok::LParen, "'(' after log")?;
                let e = self.expr()?;
                self.expect(Tok::RParen, "closing ')'")?;
                Ok(Expression::log(e))
            }
            Some(tok) => Err(syntax(pos, format!("unexpected token {tok:?}"))),
            None => Err(syntax(pos, "unexpected end of input")),
        }
    }
}

/// Parse expression text without domain validation.
pub(super) fn parse(source: &str) -> Result<Expression> {
    let toks = Lexer::tokens(source)?;
    if toks.is_empty() {
        return Err(syntax(0, "empty expression"));
    }
    let mut p = Parser {
        toks,
        idx: 0,
        end: source.len(),
    };
    let e = p.expr()?;
    if p.idx < p.toks.len() {
        let (tok, pos) = &p.toks[p.idx];
        return Err(syntax(*pos, format!("unexpected trailing token {tok:?}")));
    }
    Ok(e)
}
