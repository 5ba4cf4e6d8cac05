//! The ambient ring `F_p[x_1, ..., x_n]` with named variables, and the
//! text grammar for its elements.
//!
//! ```text
//! poly   := term (('+'|'-') term)*
//! term   := coef ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' uint)?
//! coef   := uint
//! ```
//!
//! Whitespace is insignificant and `-` is the additive inverse mod `p`. A
//! leading sign on the first term is also accepted.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
}

impl PolyRing {
    pub fn new(p: u64, vars: &[&str]) -> Result<Self> {
        Self::with_names(p, vars.iter().map(|s| s.to_string()).collect())
    }

    pub fn with_names(p: u64, vars: Vec<String>) -> Result<Self> {
        let field = PrimeField::new(p)?;
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::Setup(format!("`{v}` is not a valid variable name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Setup(format!("variable `{v}` declared twice")));
            }
        }
        Ok(PolyRing { field, vars })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.field, self.nvars())
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.field, self.nvars())
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        Polynomial::constant(self.field, self.nvars(), c)
    }

    pub fn var(&self, name: &str) -> Option<Polynomial> {
        let i = self.vars.iter().position(|v| v == name)?;
        Some(Polynomial::var(self.field, self.nvars(), i))
    }

    /// All variables, in declaration order.
    pub fn variables(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| Polynomial::var(self.field, self.nvars(), i)).collect()
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        Parser { ring: self, src: text.as_bytes(), pos: 0 }.poly()
    }

    /// Canonical printed form: terms in descending grevlex order.
    pub fn display(&self, f: &Polynomial) -> String {
        f.to_string_with(&self.vars, MonomialOrder::Grevlex)
    }

    pub fn display_in(&self, f: &Polynomial, order: MonomialOrder) -> String {
        f.to_string_with(&self.vars, order)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Parser<'a> {
    ring: &'a PolyRing,
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, offset: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn poly(mut self) -> Result<Polynomial> {
        if self.peek().is_none() {
            return self.err(self.pos, "empty input");
        }
        let mut acc = self.ring.zero();
        let mut negate = false;
        if let Some(c @ (b'+' | b'-')) = self.peek() {
            negate = c == b'-';
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            acc = if negate { acc.sub_ref(&t) } else { acc.add_ref(&t) };
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(c) => return self.err(self.pos, format!("unexpected `{}`", c as char)),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let n = self.ring.nvars();
        let field = self.ring.field();
        let mut coef = 1u64;
        let mut mono = vec![0u32; n];
        let mut first = true;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() && first => {
                    coef = self.coefficient()?;
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let (var, exp) = self.factor()?;
                    mono[var] = mono[var].checked_add(exp).ok_or(Error::Parse {
                        offset: self.pos,
                        message: "exponent overflow".into(),
                    })?;
                }
                Some(c) if c.is_ascii_digit() => {
                    return self.err(self.pos, "coefficient must come first in a term");
                }
                Some(c) => return self.err(self.pos, format!("expected a term, found `{}`", c as char)),
                None => return self.err(self.pos, "expected a term, found end of input"),
            }
            first = false;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        let m = Monomial::from_exponents(mono)
            .map_err(|_| Error::Parse { offset: self.pos, message: "exponent overflow".into() })?;
        Ok(Polynomial::monomial(field, m, coef))
    }

    fn uint(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let src: &'a [u8] = self.src;
        let digits = std::str::from_utf8(&src[start..self.pos]).expect("ascii digits");
        Ok((start, digits))
    }

    fn coefficient(&mut self) -> Result<u64> {
        let (start, digits) = self.uint()?;
        let p = self.ring.characteristic();
        // reduce digit by digit so arbitrarily long literals are fine
        let mut v = 0u64;
        for d in digits.bytes() {
            v = (v * 10 + (d - b'0') as u64) % p;
        }
        if digits.is_empty() {
            return self.err(start, "expected a coefficient");
        }
        Ok(v)
    }

    fn factor(&mut self) -> Result<(usize, u32)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        let Some(var) = self.ring.vars.iter().position(|v| v == name) else {
            return self.err(start, format!("unknown variable `{name}`"));
        };
        if self.peek() != Some(b'^') {
            return Ok((var, 1));
        }
        self.pos += 1;
        let (at, digits) = self.uint()?;
        if digits.is_empty() {
            return self.err(at, "malformed exponent");
        }
        let exp = digits.parse::<u32>().map_err(|_| Error::Parse {
            offset: at,
            message: format!("malformed exponent `{digits}`"),
        })?;
        Ok((var, exp))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz(p: u64) -> PolyRing {
        PolyRing::new(p, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parses_cubic() {
        let r = xyz(2);
        let u = r.parse("x^3 + y^3 + z^3 + x*y*z").unwrap();
        assert_eq!(u.num_terms(), 4);
        assert_eq!(r.display(&u), "x^3 + y^3 + x*y*z + z^3");
    }

    #[test]
    fn zero_and_reduction() {
        let r = xyz(2);
        assert!(r.parse("0").unwrap().is_zero());
        assert_eq!(r.parse("2*x + 5").unwrap(), r.one());
        let r7 = xyz(7);
        assert_eq!(r7.display(&r7.parse("x - 3*y").unwrap()), "x + 4*y");
        assert_eq!(r7.parse("-x").unwrap(), r7.parse("6*x").unwrap());
    }

    #[test]
    fn whitespace_and_repeated_factors() {
        let r = xyz(5);
        assert_eq!(r.parse(" x * x*y ^2 ").unwrap(), r.parse("x^2*y^2").unwrap());
        assert_eq!(r.parse("123456789012345678901234567890").unwrap(), r.zero());
    }

    #[test]
    fn errors_carry_offsets() {
        let r = xyz(3);
        assert_eq!(
            r.parse("x + w").unwrap_err(),
            Error::Parse { offset: 4, message: "unknown variable `w`".into() }
        );
        assert!(matches!(r.parse("").unwrap_err(), Error::Parse { offset: 0, .. }));
        assert!(matches!(r.parse("   ").unwrap_err(), Error::Parse { .. }));
        assert!(matches!(r.parse("x^").unwrap_err(), Error::Parse { offset: 2, .. }));
        assert!(matches!(r.parse("x^99999999999").unwrap_err(), Error::Parse { offset: 2, .. }));
        assert!(matches!(r.parse("x + ").unwrap_err(), Error::Parse { .. }));
        assert!(matches!(r.parse("x y").unwrap_err(), Error::Parse { offset: 2, .. }));
        assert!(matches!(r.parse("x*3").unwrap_err(), Error::Parse { offset: 2, .. }));
    }

    #[test]
    fn rejects_bad_declarations() {
        assert!(PolyRing::new(2, &["x", "x"]).is_err());
        assert!(PolyRing::new(2, &["1x"]).is_err());
        assert!(PolyRing::new(6, &["x"]).is_err());
    }
}
