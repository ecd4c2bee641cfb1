//! Minimal polynomial expression grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*      division only by nonzero constants
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' index | '(' expr ')'
//! ```
//!
//! Variables are `x1` … `xℓ`.

use num_bigint::BigInt;
use num_traits::Zero;
use rbar_core::{MultiPoly, Rational};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Token>, CliError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => {
                i += 1;
                continue;
            }
            '+' => out.push(Token::Plus),
            '-' => out.push(Token::Minus),
            '*' => out.push(Token::Star),
            '/' => out.push(Token::Slash),
            '^' => out.push(Token::Caret),
            '(' => out.push(Token::LParen),
            ')' => out.push(Token::RParen),
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Token::Int(digits.parse().expect("ascii digits")));
                continue;
            }
            'x' => {
                let start = i + 1;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let index: usize = digits
                    .parse()
                    .map_err(|_| CliError::Expression(format!("expected a variable index after 'x' at {}", start)))?;
                out.push(Token::Var(index));
                continue;
            }
            other => return Err(CliError::Expression(format!("unexpected character {other:?} at {i}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<MultiPoly, CliError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, CliError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let divisor = self.unary()?;
                    let c = divisor
                        .as_constant()
                        .filter(|c| !c.is_zero())
                        .ok_or_else(|| CliError::Expression("division only by nonzero constants".into()))?;
                    acc = acc.scale(&(Rational::from_integer(1.into()) / c));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly, CliError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.scale(&Rational::from_integer((-1).into())))
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, CliError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Token::Int(e)) => {
                    let e = u32::try_from(&e).map_err(|_| CliError::Expression(format!("exponent {e} too large")))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(CliError::Expression("expected an integer exponent after '^'".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, CliError> {
        match self.next() {
            Some(Token::Int(n)) => Ok(MultiPoly::constant(self.nvars, Rational::from_integer(n))),
            Some(Token::Var(i)) => {
                if i == 0 || i > self.nvars {
                    return Err(CliError::Expression(format!("variable x{i} outside x1..x{}", self.nvars)));
                }
                Ok(MultiPoly::variable(self.nvars, i - 1))
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(CliError::Expression("missing ')'".into())),
                }
            }
            Some(t) => Err(CliError::Expression(format!("unexpected token {t:?}"))),
            None => Err(CliError::Expression("unexpected end of expression".into())),
        }
    }
}

/// Parses a polynomial in `x1..x{nvars}`.
pub fn parse_polynomial(src: &str, nvars: usize) -> Result<MultiPoly, CliError> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(CliError::Expression("empty expression".into()));
    }
    let mut parser = Parser { tokens, pos: 0, nvars };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(CliError::Expression(format!(
            "trailing input at token {}",
            parser.pos + 1
        )));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> String {
        parse_polynomial(s, 3).unwrap().to_string()
    }

    #[test]
    fn parses_the_worked_numerator() {
        assert_eq!(p("x1 + 2*x2 - x3 + 3"), "x1 + 2*x2 - x3 + 3");
    }

    #[test]
    fn products_and_powers() {
        assert_eq!(p("(x1-x3)*(x2-x3)"), "x1*x2 - x1*x3 - x2*x3 + x3^2");
        assert_eq!(p("(x1 - x2)^2"), "x1^2 - 2*x1*x2 + x2^2");
        assert_eq!(p("-(x1)"), "-x1");
        assert_eq!(p("x1/2"), "1/2*x1");
        assert_eq!(p("3/4"), "3/4");
    }

    #[test]
    fn errors() {
        assert!(parse_polynomial("x4", 3).is_err());
        assert!(parse_polynomial("x0", 3).is_err());
        assert!(parse_polynomial("x1/x2", 3).is_err());
        assert!(parse_polynomial("(x1", 3).is_err());
        assert!(parse_polynomial("x1 x2", 3).is_err());
        assert!(parse_polynomial("", 3).is_err());
        assert!(parse_polynomial("1.5", 3).is_err());
        assert!(parse_polynomial("x1^", 3).is_err());
    }
}
