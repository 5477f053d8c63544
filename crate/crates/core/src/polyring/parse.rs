use std::iter::Peekable;
use std::str::{CharIndices, FromStr};

use num_bigint::BigInt;
use thiserror::Error;

use super::{Monomial, MultiPoly, Symbol};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParsePolyError {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected character {found:?} at byte {pos}")]
    Unexpected { pos: usize, found: char },
    #[error("color index must be at least 1 (byte {pos})")]
    ZeroColor { pos: usize },
    #[error("number at byte {pos} is out of range")]
    Overflow { pos: usize },
}

struct Lexer<'a> {
    src: &'a str,
    it: Peekable<CharIndices<'a>>,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, it: src.char_indices().peekable() }
    }

    fn skip_ws(&mut self) {
        while self.it.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    }

    fn peek(&mut self) -> Option<(usize, char)> {
        self.it.peek().copied()
    }

    fn pos(&mut self) -> usize {
        self.peek().map(|(i, _)| i).unwrap_or(self.src.len())
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos();
        while self.it.next_if(|(_, c)| c.is_ascii_digit()).is_some() {}
        let end = self.pos();
        (end > start).then(|| &self.src[start..end])
    }

    fn expect_digits(&mut self) -> Result<&'a str, ParsePolyError> {
        match self.digits() {
            Some(d) => Ok(d),
            None => Err(self.unexpected()),
        }
    }

    fn small(&mut self) -> Result<u32, ParsePolyError> {
        let pos = self.pos();
        self.expect_digits()?.parse().map_err(|_| ParsePolyError::Overflow { pos })
    }

    fn unexpected(&mut self) -> ParsePolyError {
        match self.peek() {
            Some((pos, found)) => ParsePolyError::Unexpected { pos, found },
            None => ParsePolyError::UnexpectedEnd,
        }
    }

    fn factor(&mut self) -> Result<(Symbol, u32), ParsePolyError> {
        let sym = match self.peek() {
            Some((_, 'y')) => {
                self.it.next();
                Symbol::Y
            }
            Some((pos, c @ ('a' | 'z'))) => {
                self.it.next();
                let i = self.small()?;
                if i == 0 {
                    return Err(ParsePolyError::ZeroColor { pos });
                }
                if c == 'a' {
                    Symbol::A(i)
                } else {
                    Symbol::Z(i)
                }
            }
            _ => return Err(self.unexpected()),
        };
        let e = if self.it.next_if(|(_, c)| *c == '^').is_some() { self.small()? } else { 1 };
        Ok((sym, e))
    }

    fn term(&mut self) -> Result<(BigInt, Monomial), ParsePolyError> {
        self.skip_ws();
        let mut coeff = BigInt::from(1);
        let mut pairs = Vec::new();
        if let Some(d) = self.digits() {
            coeff = d.parse().expect("digit run parses as BigInt");
            self.skip_ws();
            if self.it.next_if(|(_, c)| *c == '*').is_none() {
                return Ok((coeff, Monomial::one()));
            }
            self.skip_ws();
        }
        loop {
            pairs.push(self.factor()?);
            self.skip_ws();
            if self.it.next_if(|(_, c)| *c == '*').is_none() {
                break;
            }
            self.skip_ws();
        }
        Ok((coeff, Monomial::from_pairs(pairs)))
    }
}

impl FromStr for MultiPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lx = Lexer::new(s);
        let mut out = Vec::new();
        lx.skip_ws();
        let mut negative = lx.it.next_if(|(_, c)| *c == '-').is_some();
        loop {
            let (c, m) = lx.term()?;
            out.push((if negative { -c } else { c }, m));
            lx.skip_ws();
            match lx.it.next() {
                None => break,
                Some((_, '+')) => negative = false,
                Some((_, '-')) => negative = true,
                Some((pos, found)) => return Err(ParsePolyError::Unexpected { pos, found }),
            }
        }
        Ok(MultiPoly::from_terms(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_canonicalizes() {
        let p: MultiPoly = " 3*a1^2 * z1 - a1 + 7 - 7 ".parse().unwrap();
        assert_eq!(p.to_string(), "-a1 + 3*a1^2*z1");
        assert!("0".parse::<MultiPoly>().unwrap().is_zero());
        assert_eq!("y^3*a2".parse::<MultiPoly>().unwrap().to_string(), "a2*y^3");
    }

    #[test]
    fn big_coefficients() {
        let s = "123456789012345678901234567890*a3";
        assert_eq!(s.parse::<MultiPoly>().unwrap().to_string(), s);
    }

    #[test]
    fn rejects_garbage() {
        assert_eq!("a0".parse::<MultiPoly>(), Err(ParsePolyError::ZeroColor { pos: 0 }));
        assert_eq!("a1 +".parse::<MultiPoly>(), Err(ParsePolyError::UnexpectedEnd));
        assert!(matches!("a1 & b".parse::<MultiPoly>(), Err(ParsePolyError::Unexpected { found: '&', .. })));
        assert!("x1".parse::<MultiPoly>().is_err());
        assert!("2*".parse::<MultiPoly>().is_err());
    }
}
