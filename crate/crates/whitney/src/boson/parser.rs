//! Recursive-descent parser for operator expressions.
//!
//! Grammar, loosest binding first (whitespace is insignificant everywhere):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := '-' factor | power
//! power   := primary ('^' NAT)*
//! primary := 'a' | 'ad' | 'N' | 'L' | NUMBER | '(' expr ')'
//!          | 'ffact' '(' expr ',' NAT ')'
//! NUMBER  := DIGITS ('/' DIGITS)?
//! ```
//!
//! `N` desugars to `ad*a` at parse time; `ffact(e, n)` is the degenerate
//! falling factorial `(e)(e-L)...(e-(n-1)L)`. Errors carry the byte offset of
//! the offending token.

use std::error::Error;
use std::fmt;

use crate::exact::Rational;

/// Abstract syntax of an operator expression.
#[derive(Clone, PartialEq, Debug)]
pub enum OperatorExpr {
    /// The annihilator `a`.
    Annihilate,
    /// The creator `ad`.
    Create,
    /// The deformation parameter `L`.
    Lambda,
    Literal(Rational),
    Neg(Box<OperatorExpr>),
    Add(Box<OperatorExpr>, Box<OperatorExpr>),
    Sub(Box<OperatorExpr>, Box<OperatorExpr>),
    Mul(Box<OperatorExpr>, Box<OperatorExpr>),
    Pow(Box<OperatorExpr>, u32),
    /// `ffact(e, n)`: the degenerate falling factorial of the inner
    /// expression; the exponent must be a nonnegative integer literal.
    FallingFactorial(Box<OperatorExpr>, u32),
}

/// Syntax error with the byte offset of the offending token and a
/// description of what was expected there.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub offset: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at offset {}: expected {}, found {}",
            self.offset, self.expected, self.found
        )
    }
}

impl Error for ParseError {}

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Annihilate,
    Create,
    Number(Rational),
    NumberOp,
    LambdaSym,
    FFact,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

impl Tok {
    fn render(&self) -> String {
        match self {
            Tok::Annihilate => "'a'".into(),
            Tok::Create => "'ad'".into(),
            Tok::Number(n) => format!("number '{n}'"),
            Tok::NumberOp => "'N'".into(),
            Tok::LambdaSym => "'L'".into(),
            Tok::FFact => "'ffact'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            b'-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            b'*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            b'^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            b'(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            b')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            b',' => {
                toks.push((Tok::Comma, i));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numerator: num::BigInt =
                    src[start..i].parse().expect("digit run parses as integer");
                if i < bytes.len() && bytes[i] == b'/' {
                    let slash = i;
                    i += 1;
                    let den_start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if den_start == i {
                        return Err(ParseError {
                            offset: slash + 1,
                            expected: "digits after '/'".into(),
                            found: found_at(src, slash + 1),
                        });
                    }
                    let denominator: num::BigInt =
                        src[den_start..i].parse().expect("digit run parses as integer");
                    if num::Zero::is_zero(&denominator) {
                        return Err(ParseError {
                            offset: den_start,
                            expected: "a nonzero denominator".into(),
                            found: "'0'".into(),
                        });
                    }
                    toks.push((Tok::Number(Rational::new(numerator, denominator)), start));
                } else {
                    toks.push((Tok::Number(Rational::from_integer(numerator)), start));
                }
            }
            b if b.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let word = &src[start..i];
                let tok = match word {
                    "a" => Tok::Annihilate,
                    "ad" => Tok::Create,
                    "N" => Tok::NumberOp,
                    "L" => Tok::LambdaSym,
                    "ffact" => Tok::FFact,
                    other => {
                        return Err(ParseError {
                            offset: start,
                            expected: "'a', 'ad', 'N', 'L' or 'ffact'".into(),
                            found: format!("'{other}'"),
                        })
                    }
                };
                toks.push((tok, start));
            }
            other => {
                return Err(ParseError {
                    offset: i,
                    expected: "a token".into(),
                    found: format!("'{}'", other as char),
                })
            }
        }
    }
    toks.push((Tok::End, src.len()));
    Ok(toks)
}

fn found_at(src: &str, offset: usize) -> String {
    match src[offset..].chars().next() {
        Some(c) => format!("'{c}'"),
        None => "end of input".into(),
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

const OPERAND: &str = "an operand ('a', 'ad', 'N', 'L', a number, '-', '(' or 'ffact')";

impl Parser {
    fn peek(&self) -> &(Tok, usize) {
        &self.toks[self.pos]
    }

    fn advance(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        let (tok, offset) = self.peek();
        ParseError {
            offset: *offset,
            expected: expected.into(),
            found: tok.render(),
        }
    }

    fn expect(&mut self, want: Tok, expected: &str) -> Result<(), ParseError> {
        if self.peek().0 == want {
            self.advance();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn expr(&mut self) -> Result<OperatorExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().0 {
                Tok::Plus => {
                    self.advance();
                    let rhs = self.term()?;
                    lhs = OperatorExpr::Add(Box::new(lhs), Box::new(rhs));
                }
                Tok::Minus => {
                    self.advance();
                    let rhs = self.term()?;
                    lhs = OperatorExpr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<OperatorExpr, ParseError> {
        let mut lhs = self.factor()?;
        while self.peek().0 == Tok::Star {
            self.advance();
            let rhs = self.factor()?;
            lhs = OperatorExpr::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<OperatorExpr, ParseError> {
        if self.peek().0 == Tok::Minus {
            self.advance();
            let inner = self.factor()?;
            return Ok(OperatorExpr::Neg(Box::new(inner)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<OperatorExpr, ParseError> {
        let mut base = self.primary()?;
        while self.peek().0 == Tok::Caret {
            self.advance();
            let exp = self.nat("a nonnegative integer exponent")?;
            base = OperatorExpr::Pow(Box::new(base), exp);
        }
        Ok(base)
    }

    /// A nonnegative integer literal (a number token with denominator 1).
    fn nat(&mut self, expected: &str) -> Result<u32, ParseError> {
        if let (Tok::Number(n), _) = self.peek() {
            use num::{One, Signed, ToPrimitive};
            if n.denom().is_one() && !n.is_negative() {
                if let Some(v) = n.numer().to_u32() {
                    self.advance();
                    return Ok(v);
                }
            }
        }
        Err(self.error(expected))
    }

    fn primary(&mut self) -> Result<OperatorExpr, ParseError> {
        let (tok, _) = self.peek().clone();
        match tok {
            Tok::Annihilate => {
                self.advance();
                Ok(OperatorExpr::Annihilate)
            }
            Tok::Create => {
                self.advance();
                Ok(OperatorExpr::Create)
            }
            Tok::NumberOp => {
                self.advance();
                Ok(OperatorExpr::Mul(
                    Box::new(OperatorExpr::Create),
                    Box::new(OperatorExpr::Annihilate),
                ))
            }
            Tok::LambdaSym => {
                self.advance();
                Ok(OperatorExpr::Lambda)
            }
            Tok::Number(n) => {
                self.advance();
                Ok(OperatorExpr::Literal(n))
            }
            Tok::LParen => {
                self.advance();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::FFact => {
                self.advance();
                self.expect(Tok::LParen, "'(' after 'ffact'")?;
                let inner = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let n = self.nat("a nonnegative integer literal")?;
                self.expect(Tok::RParen, "')'")?;
                Ok(OperatorExpr::FallingFactorial(Box::new(inner), n))
            }
            _ => Err(self.error(OPERAND)),
        }
    }
}

/// Parses one operator expression, reporting malformed input with the byte
/// offset of the offending token.
pub fn parse(src: &str) -> Result<OperatorExpr, ParseError> {
    let toks = lex(src)?;
    let mut parser = Parser { toks, pos: 0 };
    let expr = parser.expr()?;
    if parser.peek().0 != Tok::End {
        return Err(parser.error("an operator ('+', '-', '*', '^') or end of input"));
    }
    Ok(expr)
}
