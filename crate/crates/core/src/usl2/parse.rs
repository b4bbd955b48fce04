//! Reader for the textual element format.
//!
//! Accepts the rendered form (`-1 * H + 1/2 * H^2 + 2 * E F`) and, more
//! generally, sums and products of rationals, `E`, `F`, `H`, `L` (the
//! Casimir element), parentheses and nonnegative integer powers. Juxtaposition
//! and `*` both mean multiplication; any factor may be divided by an integer.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{casimir, Usl2Element};
use crate::linalg::Rational;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected character {found:?} at offset {offset}")]
    UnexpectedChar { offset: usize, found: char },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {expected} at offset {offset}")]
    Expected { offset: usize, expected: &'static str },
    #[error("division by zero at offset {offset}")]
    ZeroDenominator { offset: usize },
    #[error("exponent too large at offset {offset}")]
    ExponentTooLarge { offset: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Sym(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(offset, ch)) = chars.peek() {
        let token = match ch {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&(_, d)) = chars.peek().filter(|(_, d)| d.is_ascii_digit()) {
                    digits.push(d);
                    chars.next();
                }
                out.push((offset, Token::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            'E' | 'F' | 'H' | 'L' => Token::Sym(ch),
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::Open,
            ')' => Token::Close,
            other => return Err(ParseError::UnexpectedChar { offset, found: other }),
        };
        chars.next();
        out.push((offset, token));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
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

    fn expr(&mut self) -> Result<Usl2Element, ParseError> {
        let mut acc = self.signed_term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn signed_term(&mut self) -> Result<Usl2Element, ParseError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                Ok(-&self.term()?)
            }
            Some(Token::Plus) => {
                self.bump();
                self.term()
            }
            _ => self.term(),
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Token::Int(_) | Token::Sym(_) | Token::Open))
    }

    fn term(&mut self) -> Result<Usl2Element, ParseError> {
        let mut acc = self.power()?;
        loop {
            if matches!(self.peek(), Some(Token::Star)) {
                self.bump();
                acc = acc.multiply(&self.power()?);
            } else if matches!(self.peek(), Some(Token::Slash)) {
                self.bump();
                let offset = self.offset();
                match self.bump() {
                    Some(Token::Int(d)) if d == BigInt::from(0) => return Err(ParseError::ZeroDenominator { offset }),
                    Some(Token::Int(d)) => acc = acc.scale(&Rational::new(BigInt::from(1), d)),
                    Some(_) => return Err(ParseError::Expected { offset, expected: "integer divisor" }),
                    None => return Err(ParseError::UnexpectedEnd),
                }
            } else if self.starts_factor() {
                acc = acc.multiply(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Usl2Element, ParseError> {
        let base = self.atom()?;
        if !matches!(self.peek(), Some(Token::Caret)) {
            return Ok(base);
        }
        self.bump();
        let offset = self.offset();
        match self.bump() {
            Some(Token::Int(k)) => {
                let k: u32 = k.try_into().map_err(|_| ParseError::ExponentTooLarge { offset })?;
                Ok(base.pow(k))
            }
            Some(_) => Err(ParseError::Expected { offset, expected: "integer exponent" }),
            None => Err(ParseError::UnexpectedEnd),
        }
    }

    fn atom(&mut self) -> Result<Usl2Element, ParseError> {
        let offset = self.offset();
        match self.bump() {
            Some(Token::Int(n)) => {
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.bump();
                    let doff = self.offset();
                    match self.bump() {
                        Some(Token::Int(d)) if d == BigInt::from(0) => Err(ParseError::ZeroDenominator { offset: doff }),
                        Some(Token::Int(d)) => Ok(Usl2Element::constant(Rational::new(n, d))),
                        Some(_) => Err(ParseError::Expected { offset: doff, expected: "denominator" }),
                        None => Err(ParseError::UnexpectedEnd),
                    }
                } else {
                    Ok(Usl2Element::constant(Rational::from_integer(n)))
                }
            }
            Some(Token::Sym('E')) => Ok(Usl2Element::e()),
            Some(Token::Sym('F')) => Ok(Usl2Element::f()),
            Some(Token::Sym('H')) => Ok(Usl2Element::h()),
            Some(Token::Sym(_)) => Ok(casimir()),
            Some(Token::Open) => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Some(Token::Close) => Ok(inner),
                    Some(_) => Err(ParseError::Expected { offset: close, expected: "')'" }),
                    None => Err(ParseError::UnexpectedEnd),
                }
            }
            Some(_) => Err(ParseError::Expected { offset, expected: "number, generator or '('" }),
            None => Err(ParseError::UnexpectedEnd),
        }
    }
}

/// Parses an element of `U(sl2)` and returns its PBW normal form.
pub fn parse_element(input: &str) -> Result<Usl2Element, ParseError> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(ParseError::UnexpectedEnd);
    }
    let mut parser = Parser { tokens, pos: 0, end: input.len() };
    let out = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        let (offset, _) = parser.tokens[parser.pos];
        let found = input[offset..].chars().next().unwrap_or(' ');
        return Err(ParseError::UnexpectedChar { offset, found });
    }
    Ok(out)
}

impl core::str::FromStr for Usl2Element {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_element(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::linalg::{int, rat};
    use crate::usl2::PbwMonomial;

    #[test]
    fn reads_rendered_form() {
        let lam = casimir();
        assert_eq!(parse_element(&lam.to_string()).unwrap(), lam);
        assert_eq!(parse_element("0").unwrap(), Usl2Element::zero());
        assert_eq!(parse_element("-3/4").unwrap(), Usl2Element::constant(rat(-3, 4)));
    }

    #[test]
    fn normalizes_products() {
        assert_eq!(parse_element("F E").unwrap(), parse_element("E F - H").unwrap());
        assert_eq!(parse_element("F*E^2").unwrap(), parse_element("E^2 F - 2 E H - 2E").unwrap());
        assert_eq!(parse_element("L").unwrap(), parse_element("E F + F E + 1/2 H^2").unwrap());
        assert_eq!(
            parse_element("(E + F)^2").unwrap(),
            Usl2Element::from_terms([
                (PbwMonomial::new(2, 0, 0), int(1)),
                (PbwMonomial::new(0, 2, 0), int(1)),
                (PbwMonomial::new(1, 1, 0), int(2)),
                (PbwMonomial::new(0, 0, 1), int(-1)),
            ])
        );
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_element("E + X"), Err(ParseError::UnexpectedChar { offset: 4, found: 'X' })));
        assert_eq!(parse_element(""), Err(ParseError::UnexpectedEnd));
        assert!(matches!(parse_element("(E"), Err(ParseError::UnexpectedEnd)));
        assert!(matches!(parse_element("1/0"), Err(ParseError::ZeroDenominator { .. })));
        assert!(parse_element("E)").is_err());
        assert!(matches!(parse_element("(E + F)/0"), Err(ParseError::ZeroDenominator { .. })));
        assert_eq!(parse_element("(H - 2)/4").unwrap(), parse_element("1/4 H - 1/2").unwrap());
    }
}
