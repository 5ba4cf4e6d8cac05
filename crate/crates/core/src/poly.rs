//! Sparse multivariate polynomials over `F_p`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{Monomial, MonomialOrder};

/// A polynomial in `nvars` variables over a prime field.
///
/// Terms are kept sorted in strictly descending storage order (degree, then
/// lexicographic) with no zero coefficients, so structural equality is
/// polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: PrimeField,
    nvars: usize,
    terms: Vec<(Monomial, u64)>,
}

impl Polynomial {
    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        Polynomial { field, nvars, terms: Vec::new() }
    }

    pub fn constant(field: PrimeField, nvars: usize, c: i64) -> Self {
        let c = field.reduce(c);
        Self::from_terms(field, nvars, vec![(Monomial::one(nvars), c)])
    }

    pub fn one(field: PrimeField, nvars: usize) -> Self {
        Self::constant(field, nvars, 1)
    }

    pub fn var(field: PrimeField, nvars: usize, index: usize) -> Self {
        Self::from_terms(field, nvars, vec![(Monomial::var(nvars, index), 1)])
    }

    pub fn monomial(field: PrimeField, m: Monomial, c: u64) -> Self {
        let nvars = m.nvars();
        Self::from_terms(field, nvars, vec![(m, c)])
    }

    /// Builds from arbitrary (possibly repeated, unreduced) terms.
    pub fn from_terms(field: PrimeField, nvars: usize, terms: Vec<(Monomial, u64)>) -> Self {
        let mut acc: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            let c = field.reduce_u64(c);
            let slot = acc.entry(m).or_insert(0);
            *slot = field.add(*slot, c);
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| *c != 0).collect();
        Polynomial { field, nvars, terms }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn constant_term(&self) -> u64 {
        // storage order puts the degree-zero monomial last
        match self.terms.last() {
            Some((m, c)) if m.is_one() => *c,
            _ => 0,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map_or(0, |(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.total_degree();
        self.terms.iter().all(|(m, _)| m.degree() == d)
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, u64)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, *c))
    }

    /// Terms sorted descending under `order`.
    pub fn terms_in_order(&self, order: MonomialOrder) -> Vec<(Monomial, u64)> {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        t
    }

    fn same_ring(&self, other: &Polynomial) {
        assert!(
            self.field == other.field && self.nvars == other.nvars,
            "polynomials from different rings"
        );
    }

    pub fn add_ref(&self, other: &Polynomial) -> Polynomial {
        self.same_ring(other);
        let f = self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), *ca));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), *cb));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(*ca, *cb);
                    if c != 0 {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { field: f, nvars: self.nvars, terms: out }
    }

    pub fn neg_ref(&self) -> Polynomial {
        self.scale(self.field.neg(1))
    }

    pub fn sub_ref(&self, other: &Polynomial) -> Polynomial {
        self.add_ref(&other.neg_ref())
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let c = self.field.reduce_u64(c);
        if c == 0 {
            return Polynomial::zero(self.field, self.nvars);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), self.field.mul(*a, c))).collect();
        Polynomial { field: self.field, nvars: self.nvars, terms }
    }

    /// `c * m * self`. Multiplication by a monomial preserves the storage
    /// order, so no re-sorting is needed.
    pub fn mul_term(&self, m: &Monomial, c: u64) -> Polynomial {
        let c = self.field.reduce_u64(c);
        if c == 0 {
            return Polynomial::zero(self.field, self.nvars);
        }
        let terms = self.terms.iter().map(|(n, a)| (n.mul(m), self.field.mul(*a, c))).collect();
        Polynomial { field: self.field, nvars: self.nvars, terms }
    }

    pub fn mul_ref(&self, other: &Polynomial) -> Polynomial {
        self.same_ring(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.field, self.nvars);
        }
        let f = self.field;
        let mut acc: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let slot = acc.entry(ma.mul(mb)).or_insert(0);
                *slot = f.add(*slot, f.mul(*ca, *cb));
            }
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| *c != 0).collect();
        Polynomial { field: f, nvars: self.nvars, terms }
    }

    /// `self^k` by binary exponentiation; `f^0 = 1`.
    pub fn pow(&self, k: u64) -> Result<Polynomial> {
        if k == 0 {
            return Ok(Polynomial::one(self.field, self.nvars));
        }
        let bound = (self.total_degree() as u64).checked_mul(k).ok_or(Error::ExponentOverflow)?;
        if bound > u32::MAX as u64 {
            return Err(Error::ExponentOverflow);
        }
        let mut base = self.clone();
        let mut acc: Option<Polynomial> = None;
        let mut k = k;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul_ref(&base),
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.mul_ref(&base);
        }
        Ok(acc.expect("k > 0"))
    }

    /// `self^q` for `q` a power of the characteristic: every exponent is
    /// multiplied by `q` and coefficients are unchanged (`c^q = c` in `F_p`).
    pub fn frobenius(&self, q: u64) -> Result<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.scale_exponents(q)?, *c)))
            .collect::<Result<Vec<_>>>()?;
        // scaling exponents by a positive constant preserves the storage order
        Ok(Polynomial { field: self.field, nvars: self.nvars, terms })
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field.inv(c)),
        }
    }

    /// Embeds into a ring with `count` new variables placed first.
    pub fn prepend_vars(&self, count: usize) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.prepend_vars(count), *c)).collect();
        // adding leading zero exponents does not change the relative order
        Polynomial { field: self.field, nvars: self.nvars + count, terms }
    }

    /// Inverse of [`prepend_vars`](Self::prepend_vars); `None` if any of the
    /// first `count` variables occurs.
    pub fn strip_leading_vars(&self, count: usize) -> Option<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| m.strip_leading_vars(count).map(|m| (m, *c)))
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial { field: self.field, nvars: self.nvars - count, terms })
    }

    /// Exact quotient `self / divisor`, or `None` if `divisor` does not divide.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        self.same_ring(divisor);
        let order = MonomialOrder::Grevlex;
        let (lm, lc) = divisor.leading_term(order)?;
        let (lm, lc_inv) = (lm.clone(), self.field.inv(lc));
        let mut rem = self.clone();
        let mut quotient = Polynomial::zero(self.field, self.nvars);
        while let Some((m, c)) = rem.leading_term(order) {
            let q = lm.quotient(m)?;
            let qc = self.field.mul(c, lc_inv);
            quotient = quotient.add_ref(&Polynomial::monomial(self.field, q.clone(), qc));
            rem = rem.sub_ref(&divisor.mul_term(&q, qc));
        }
        Some(quotient)
    }

    /// Renders with the given variable names, terms in descending `order`.
    pub fn to_string_with(&self, names: &[String], order: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms_in_order(order).iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let mut factors = Vec::new();
            if *c != 1 || m.is_one() {
                factors.push(c.to_string());
            }
            for v in m.support() {
                let e = m.exponents()[v];
                if e == 1 {
                    factors.push(names[v].clone());
                } else {
                    factors.push(format!("{}^{}", names[v], e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        f.write_str(&self.to_string_with(&names, MonomialOrder::Grevlex))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$inner(rhs)
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}
