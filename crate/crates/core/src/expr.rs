//! Parser for polynomial expressions: `+`, `-`, `*`, `^`, parentheses,
//! integer and rational literals, variable names. Errors carry line and
//! column positions.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(BigInt, Option<BigInt>),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Spanned {
    token: Token,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, col, message: message.into() }
}

/// Tokenizes one expression. `line`/`col_offset` position errors within a
/// larger document.
fn lex(input: &str, line: usize, col_offset: usize) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col_offset + i + 1;
        match c {
            ' ' | '\t' | '\r' => {
                i += 1;
            }
            '+' => {
                out.push(Spanned { token: Token::Plus, line, col });
                i += 1;
            }
            // accept the unicode minus sign as well; fixtures are hand-edited
            '-' | '\u{2212}' => {
                out.push(Spanned { token: Token::Minus, line, col });
                i += 1;
            }
            '*' => {
                out.push(Spanned { token: Token::Star, line, col });
                i += 1;
            }
            '^' => {
                out.push(Spanned { token: Token::Caret, line, col });
                i += 1;
            }
            '(' => {
                out.push(Spanned { token: Token::LParen, line, col });
                i += 1;
            }
            ')' => {
                out.push(Spanned { token: Token::RParen, line, col });
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let num: BigInt = chars[start..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .expect("digits");
                // rational literal: digits '/' digits, with no spaces
                let mut den = None;
                if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                    i += 1;
                    let dstart = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let d: BigInt = chars[dstart..i]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .expect("digits");
                    den = Some(d);
                }
                out.push(Spanned { token: Token::Number(num, den), line, col });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                out.push(Spanned {
                    token: Token::Ident(chars[start..i].iter().collect()),
                    line,
                    col,
                });
            }
            '/' => {
                return Err(err(line, col, "division is only allowed inside rational literals like 1/2"));
            }
            other => {
                return Err(err(line, col, format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    tokens: Vec<Spanned>,
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        match self.peek() {
            Some(s) => (s.line, s.col),
            None => (self.line, self.end_col),
        }
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(s) = self.peek() {
            match s.token {
                Token::Plus => {
                    self.pos += 1;
                    acc = acc.checked_add(&self.term()?)?;
                }
                Token::Minus => {
                    self.pos += 1;
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := unary ('*' unary)*
    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while let Some(s) = self.peek() {
            if s.token == Token::Star {
                self.pos += 1;
                acc = acc.checked_mul(&self.unary()?)?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    // unary := '-' unary | factor; minus binds looser than '^'
    fn unary(&mut self) -> Result<Polynomial> {
        if let Some(s) = self.peek() {
            if s.token == Token::Minus {
                self.pos += 1;
                return Ok(self.unary()?.neg());
            }
        }
        self.factor()
    }

    // factor := atom ('^' nat)*
    fn factor(&mut self) -> Result<Polynomial> {
        let mut acc = self.atom()?;
        while let Some(s) = self.peek() {
            if s.token == Token::Caret {
                self.pos += 1;
                let (line, col) = self.here();
                match self.next() {
                    Some(Spanned { token: Token::Number(n, None), .. }) => {
                        let e: u32 = n
                            .try_into()
                            .map_err(|_| err(line, col, "exponent out of range"))?;
                        acc = acc.pow(e);
                    }
                    _ => return Err(err(line, col, "expected a natural number exponent")),
                }
            } else {
                break;
            }
        }
        Ok(acc)
    }

    // atom := number | ident | '(' expr ')' | '-' atom
    fn atom(&mut self) -> Result<Polynomial> {
        let (line, col) = self.here();
        match self.next() {
            Some(Spanned { token: Token::Number(n, d), .. }) => {
                let den = d.unwrap_or_else(|| BigInt::from(1));
                let c = self.ring.field().from_ratio(n, den).map_err(|e| {
                    err(line, col, format!("bad literal: {e}"))
                })?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(Spanned { token: Token::Ident(name), .. }) => {
                match self.ring.var_index(&name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(err(line, col, format!("unknown variable `{name}`"))),
                }
            }
            Some(Spanned { token: Token::LParen, .. }) => {
                let inner = self.expr()?;
                let (l2, c2) = self.here();
                match self.next() {
                    Some(Spanned { token: Token::RParen, .. }) => Ok(inner),
                    _ => Err(err(l2, c2, "expected `)`")),
                }
            }
            Some(s) => Err(err(s.line, s.col, "expected a term")),
            None => Err(err(line, col, "unexpected end of expression")),
        }
    }
}

/// Parses one polynomial expression in the given ring. `line` and
/// `col_offset` locate the expression inside a larger document for error
/// reporting.
pub fn parse_polynomial_at(
    ring: &Ring,
    input: &str,
    line: usize,
    col_offset: usize,
) -> Result<Polynomial> {
    let tokens = lex(input, line, col_offset)?;
    if tokens.is_empty() {
        return Err(err(line, col_offset + 1, "empty expression"));
    }
    let end_col = col_offset + input.chars().count() + 1;
    let mut p = Parser { ring, tokens, pos: 0, line, end_col };
    let result = p.expr()?;
    if let Some(s) = p.peek() {
        return Err(err(s.line, s.col, "unexpected trailing input"));
    }
    Ok(result)
}

/// Convenience entry used throughout the tests.
pub fn parse_polynomial(ring: &Ring, input: &str) -> Result<Polynomial> {
    parse_polynomial_at(ring, input, 1, 0)
}
