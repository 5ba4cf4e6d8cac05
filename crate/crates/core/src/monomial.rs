//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A power product `x_0^{a_0} ... x_{n-1}^{a_{n-1}}`.
///
/// The total degree is cached and kept in sync by every constructor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    // `degree` first so the derived `Ord` is a degree-then-lex order; the
    // derived order is only used for storage keys, never for leading terms.
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { degree: 0, exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { degree: 1, exps }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Result<Self> {
        let degree = exps
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { degree, exps })
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Product. Panics on exponent overflow; callers that raise to large
    /// powers check the degree bound up front.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow in monomial product")
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::ExponentOverflow)?;
        let degree = self.degree.checked_add(other.degree).ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { degree, exps })
    }

    /// Multiplies every exponent by `k`.
    pub fn scale_exponents(&self, k: u64) -> Result<Monomial> {
        let k32 = u32::try_from(k).map_err(|_| Error::ExponentOverflow)?;
        if self.degree == 0 {
            return Ok(self.clone());
        }
        let degree = self.degree.checked_mul(k32).ok_or(Error::ExponentOverflow)?;
        let exps = self.exps.iter().map(|&e| e * k32).collect();
        Ok(Monomial { degree, exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Some(Monomial { degree: other.degree - self.degree, exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().sum();
        Monomial { degree, exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Splits into `(q, r)` with `self = q^base * r` and every exponent of `r`
    /// below `base`.
    pub fn divmod_exponents(&self, base: u32) -> (Monomial, Monomial) {
        let q: Vec<u32> = self.exps.iter().map(|e| e / base).collect();
        let r: Vec<u32> = self.exps.iter().map(|e| e % base).collect();
        let qd = q.iter().sum();
        let rd = r.iter().sum();
        (Monomial { degree: qd, exps: q }, Monomial { degree: rd, exps: r })
    }

    /// Adds `count` zero exponents in front.
    pub fn prepend_vars(&self, count: usize) -> Monomial {
        let mut exps = vec![0; count];
        exps.extend_from_slice(&self.exps);
        Monomial { degree: self.degree, exps }
    }

    /// Drops the first `count` variables; `None` if any of them occurs.
    pub fn strip_leading_vars(&self, count: usize) -> Option<Monomial> {
        if self.exps[..count].iter().any(|&e| e != 0) {
            return None;
        }
        Some(Monomial { degree: self.degree, exps: self.exps[count..].to_vec() })
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

/// A monomial order over the declared variable sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
    /// Elimination order: the first `elim` variables are compared first
    /// (grevlex within each block).
    Block { elim: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => lex(&a.exps, &b.exps),
            MonomialOrder::Grevlex => grevlex(&a.exps, a.degree, &b.exps, b.degree),
            MonomialOrder::Block { elim } => {
                let (a1, a2) = a.exps.split_at(elim);
                let (b1, b2) = b.exps.split_at(elim);
                let da1: u32 = a1.iter().sum();
                let db1: u32 = b1.iter().sum();
                grevlex(a1, da1, b1, db1)
                    .then_with(|| grevlex(a2, a.degree - da1, b2, b.degree - db1))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Block { elim } => format!("block({elim})"),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" => Ok(MonomialOrder::Grevlex),
            other => Err(format!("unknown monomial order `{other}` (expected lex or grevlex)")),
        }
    }
}

#[inline]
fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

#[inline]
fn grevlex(a: &[u32], da: u32, b: &[u32], db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}
