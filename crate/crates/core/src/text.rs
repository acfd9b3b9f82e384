//! Text form of supernatural numbers.
//!
//! ```text
//! expr := term ('*' term)*
//! term := PRIME ['^' exp] | 'rest' '^' exp
//! exp  := NAT | 'inf'
//! ```
//!
//! `rest^d` sets the exponent of every prime not listed (default 0) and may
//! appear at most once. Whitespace is ignored. The single token `1` denotes
//! the empty product, which is also how it is printed.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::error::ArithmeticError;
use crate::factor::TrialDivision;
use crate::supernatural::{Exponent, SupernaturalNumber};

/// Largest exponent literal accepted by the parser.
pub const MAX_EXPONENT_LITERAL: u64 = u32::MAX as u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    SyntaxError { position: usize, message: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} listed twice")]
    DuplicatePrime(u64),
    #[error("'rest' term given twice")]
    DuplicateRest,
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Nat(u64),
    Inf,
    Rest,
    Star,
    Caret,
}

fn syntax(position: usize, message: impl Into<String>) -> ParseError {
    ParseError::SyntaxError {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b if b.is_ascii_whitespace() => i += 1,
            b'*' => {
                tokens.push((i, Token::Star));
                i += 1;
            }
            b'^' => {
                tokens.push((i, Token::Caret));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i]
                    .parse::<u64>()
                    .map_err(|_| syntax(start, "number too large"))?;
                tokens.push((start, Token::Nat(n)));
            }
            b if b.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                match &text[start..i] {
                    "inf" => tokens.push((start, Token::Inf)),
                    "rest" => tokens.push((start, Token::Rest)),
                    word => return Err(syntax(start, format!("unknown word {word:?}"))),
                }
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(syntax(i, format!("unexpected character {ch:?}")));
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.pos).map(|&(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn next(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.pos).copied();
        self.pos += 1;
        t
    }

    fn exponent(&mut self) -> Result<Exponent, ParseError> {
        match self.next() {
            Some((_, Token::Inf)) => Ok(Exponent::Infinite),
            Some((at, Token::Nat(k))) => {
                if k > MAX_EXPONENT_LITERAL {
                    return Err(syntax(
                        at,
                        format!("exponent {k} exceeds {MAX_EXPONENT_LITERAL}"),
                    ));
                }
                Ok(Exponent::Finite(k))
            }
            Some((at, _)) => Err(syntax(at, "expected an exponent (number or 'inf')")),
            None => Err(syntax(self.end, "expected an exponent, found end of input")),
        }
    }

    fn expect_caret(&mut self, what: &str) -> Result<(), ParseError> {
        match self.next() {
            Some((_, Token::Caret)) => Ok(()),
            Some((at, _)) => Err(syntax(at, format!("expected '^' after {what}"))),
            None => Err(syntax(self.end, format!("expected '^' after {what}"))),
        }
    }
}

pub fn parse_steinitz(text: &str) -> Result<SupernaturalNumber, ParseError> {
    parse_steinitz_with(text, &TrialDivision::default())
}

/// Parses with an explicit factorization bound for the primality checks.
pub fn parse_steinitz_with(
    text: &str,
    td: &TrialDivision,
) -> Result<SupernaturalNumber, ParseError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(syntax(0, "empty expression"));
    }
    if let [(_, Token::Nat(1))] = tokens.as_slice() {
        return Ok(SupernaturalNumber::one());
    }

    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        end: text.len(),
    };
    let mut rest: Option<Exponent> = None;
    let mut primes: BTreeMap<u64, Exponent> = BTreeMap::new();
    loop {
        match parser.next() {
            Some((_, Token::Rest)) => {
                parser.expect_caret("'rest'")?;
                let e = parser.exponent()?;
                if rest.replace(e).is_some() {
                    return Err(ParseError::DuplicateRest);
                }
            }
            Some((_, Token::Nat(p))) => {
                if !td.is_prime(p)? {
                    return Err(ParseError::NotPrime(p));
                }
                let e = if parser.peek() == Some(Token::Caret) {
                    parser.next();
                    parser.exponent()?
                } else {
                    Exponent::Finite(1)
                };
                if primes.insert(p, e).is_some() {
                    return Err(ParseError::DuplicatePrime(p));
                }
            }
            Some((at, _)) => return Err(syntax(at, "expected a prime or 'rest'")),
            None => return Err(syntax(parser.end, "expected a term, found end of input")),
        }
        match parser.next() {
            None => break,
            Some((_, Token::Star)) => {}
            Some((at, _)) => return Err(syntax(at, "expected '*' between terms")),
        }
        if parser.peek().is_none() {
            return Err(syntax(parser.offset(), "expected a term after '*'"));
        }
    }
    // Primes were checked above, so this only canonicalizes.
    Ok(SupernaturalNumber::from_parts_with(
        rest.unwrap_or(Exponent::ZERO),
        primes,
        td,
    )?)
}

/// Canonical text: ascending primes, `^1` omitted, `rest^d` last and omitted
/// when `d = 0`, `1` for the empty product.
pub fn format_steinitz(s: &SupernaturalNumber) -> String {
    let mut terms: Vec<String> = s
        .exceptions()
        .iter()
        .map(|&(p, e)| match e {
            Exponent::Finite(1) => p.to_string(),
            e => format!("{p}^{e}"),
        })
        .collect();
    if s.default_exponent() != Exponent::ZERO {
        terms.push(format!("rest^{}", s.default_exponent()));
    }
    if terms.is_empty() {
        "1".to_string()
    } else {
        terms.join("*")
    }
}
