//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' INT)?
//! atom    := INT ('/' INT)? | IDENT | '(' expr ')'
//! ```
//!
//! `INT '/' INT` is a rational literal; it exists so that formatted output
//! with fractional coefficients parses back. Implicit multiplication is
//! rejected.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Polynomial, Rational, Symbol, SymbolSet};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let token = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '^' => Token::Caret,
            '/' => Token::Slash,
            '(' => Token::LParen,
            ')' => Token::RParen,
            c if c.is_ascii_digit() => {
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                Token::Int(digits.parse().expect("ascii digits"))
            }
            c if c.is_alphabetic() || c == '_' => {
                while i + 1 < chars.len() && (chars[i + 1].is_alphanumeric() || chars[i + 1] == '_')
                {
                    i += 1;
                }
                Token::Ident(chars[start..=i].iter().collect())
            }
            other => return Err(syntax(start, format!("unexpected character `{other}`"))),
        };
        tokens.push((start, token));
        i += 1;
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    allowed: &'a SymbolSet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc += self.term()?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while let Some(Token::Star) = self.peek() {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if let Some(Token::Minus) = self.peek() {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.bump();
            let at = self.offset();
            let exponent = match self.bump() {
                Some(Token::Int(n)) => {
                    u32::try_from(n).map_err(|_| syntax(at, "exponent too large"))?
                }
                _ => return Err(syntax(at, "expected a nonnegative integer exponent")),
            };
            return Ok(base.pow(exponent));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let at = self.offset();
        match self.bump() {
            Some(Token::Int(n)) => {
                if let Some(Token::Slash) = self.peek() {
                    self.bump();
                    let at_den = self.offset();
                    return match self.bump() {
                        Some(Token::Int(d)) if !d.is_zero() => {
                            Ok(Polynomial::constant(Rational::new(n, d)))
                        }
                        Some(Token::Int(_)) => Err(syntax(at_den, "zero denominator")),
                        _ => Err(syntax(
                            at_den,
                            "`/` is only allowed between integer literals",
                        )),
                    };
                }
                Ok(Polynomial::constant(Rational::from_integer(n)))
            }
            Some(Token::Ident(name)) => match Symbol::from_ident(&name) {
                Some(s) if self.allowed.contains(s) => Ok(Polynomial::var(s)),
                _ => Err(Error::UnknownIdentifier(name)),
            },
            Some(Token::LParen) => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(syntax(close, "expected `)`")),
                }
            }
            Some(Token::Slash) => Err(syntax(at, "`/` is only allowed between integer literals")),
            Some(t) => Err(syntax(at, format!("unexpected {}", describe(&t)))),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

fn describe(t: &Token) -> &'static str {
    match t {
        Token::Int(_) => "integer",
        Token::Ident(_) => "identifier",
        Token::Plus => "`+`",
        Token::Minus => "`-`",
        Token::Star => "`*`",
        Token::Caret => "`^`",
        Token::Slash => "`/`",
        Token::LParen => "`(`",
        Token::RParen => "`)`",
    }
}

/// Parses `text` into a canonical polynomial, rejecting identifiers outside
/// `allowed`.
pub fn parse(text: &str, allowed: &SymbolSet) -> Result<Polynomial> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.chars().count(),
        allowed,
    };
    let p = parser.expr()?;
    if let Some(t) = parser.peek() {
        let at = parser.offset();
        let message = match t {
            Token::Ident(_) | Token::Int(_) | Token::LParen => {
                "implicit multiplication is not accepted; write `*`".to_string()
            }
            t => format!("unexpected {}", describe(t)),
        };
        return Err(syntax(at, message));
    }
    Ok(p)
}
