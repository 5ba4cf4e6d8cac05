use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::buchberger::{buchberger, normal_form, GbLimits};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::PolyRing;

/// An ideal of `F_p[x_1, ..., x_n]` given by generators.
///
/// Every ideal carries the monomial order and resource limits used for its
/// Gröbner basis. The reduced basis under that order is computed at most
/// once and shared between clones. Ideal-level answers (membership,
/// equality, dimension) do not depend on the order.
#[derive(Clone, Debug)]
pub struct Ideal {
    field: PrimeField,
    nvars: usize,
    gens: Vec<Polynomial>,
    order: MonomialOrder,
    limits: GbLimits,
    gb: OnceLock<Arc<Vec<Polynomial>>>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(field: PrimeField, nvars: usize, gens: Vec<Polynomial>) -> Self {
        for g in &gens {
            assert!(g.field() == field && g.nvars() == nvars, "generator from a different ring");
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            field,
            nvars,
            gens,
            order: MonomialOrder::Grevlex,
            limits: GbLimits::default(),
            gb: OnceLock::new(),
        }
    }

    pub fn in_ring(ring: &PolyRing, gens: Vec<Polynomial>) -> Self {
        Self::new(ring.field(), ring.nvars(), gens)
    }

    /// Parses each generator with the ring's grammar.
    pub fn parse(ring: &PolyRing, gens: &[&str]) -> Result<Self> {
        let gens = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Ok(Self::in_ring(ring, gens))
    }

    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        Self::new(field, nvars, Vec::new())
    }

    pub fn unit(field: PrimeField, nvars: usize) -> Self {
        Self::new(field, nvars, vec![Polynomial::one(field, nvars)])
    }

    pub fn principal(f: Polynomial) -> Self {
        Self::new(f.field(), f.nvars(), vec![f])
    }

    /// The ideal generated by all variables.
    pub fn maximal(field: PrimeField, nvars: usize) -> Self {
        Self::new(field, nvars, (0..nvars).map(|i| Polynomial::var(field, nvars, i)).collect())
    }

    /// Same ideal, different order; the basis cache is dropped.
    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        if order != self.order {
            self.order = order;
            self.gb = OnceLock::new();
        }
        self
    }

    pub fn with_limits(mut self, limits: GbLimits) -> Self {
        self.limits = limits;
        self
    }

    /// A new ideal in the same ring with the same order and limits.
    fn sibling(&self, gens: Vec<Polynomial>) -> Ideal {
        Ideal::new(self.field, self.nvars, gens)
            .with_order(self.order)
            .with_limits(self.limits)
    }

    /// The unit ideal with this ideal's order and limits.
    pub(crate) fn sibling_unit(&self) -> Ideal {
        self.sibling(vec![Polynomial::one(self.field, self.nvars)])
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn limits(&self) -> GbLimits {
        self.limits
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced monic Gröbner basis under the ideal's own order (cached).
    pub fn groebner_basis(&self) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb.clone());
        }
        let gb = Arc::new(buchberger(&self.gens, self.order, self.limits)?);
        // another thread may have won the race; both values are identical
        Ok(self.gb.get_or_init(|| gb).clone())
    }

    /// Reduced Gröbner basis under an arbitrary order. Uses the cache when
    /// the order matches.
    pub fn groebner_basis_in(&self, order: MonomialOrder) -> Result<Vec<Polynomial>> {
        if order == self.order {
            return Ok(self.groebner_basis()?.as_ref().clone());
        }
        buchberger(&self.gens, order, self.limits)
    }

    /// The same ideal with its reduced basis as generators.
    pub fn reduced(&self) -> Result<Ideal> {
        let gb = self.groebner_basis()?;
        let out = self.sibling(gb.as_ref().clone());
        let _ = out.gb.set(gb);
        Ok(out)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        Ok(normal_form(f, &self.groebner_basis()?, self.order))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn is_unit(&self) -> Result<bool> {
        let gb = self.groebner_basis()?;
        Ok(gb.len() == 1 && gb[0].is_unit())
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of reduced Gröbner bases under this ideal's order.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        let a = self.groebner_basis()?;
        let b = other.groebner_basis_in(self.order)?;
        Ok(a.as_ref() == &b)
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.field != other.field || self.nvars != other.nvars {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(self.sibling(gens))
    }

    pub fn add_generator(&self, f: Polynomial) -> Ideal {
        let mut gens = self.gens.clone();
        gens.push(f);
        self.sibling(gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a * b))
            .collect();
        Ok(self.sibling(gens))
    }

    /// `f * I`.
    pub fn scale(&self, f: &Polynomial) -> Ideal {
        self.sibling(self.gens.iter().map(|g| g * f).collect())
    }

    /// `I ∩ J` as `(t I + (1 - t) J) ∩ R`, eliminating a fresh variable `t`
    /// placed at highest priority.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.sibling(Vec::new()));
        }
        let n = self.nvars + 1;
        let t = Polynomial::var(self.field, n, 0);
        let one_minus_t = &Polynomial::one(self.field, n) - &t;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        gens.extend(self.gens.iter().map(|f| &t * &f.prepend_vars(1)));
        gens.extend(other.gens.iter().map(|g| &one_minus_t * &g.prepend_vars(1)));
        let gb = buchberger(&gens, MonomialOrder::Block { elim: 1 }, self.limits)?;
        let out = gb.iter().filter_map(|g| g.strip_leading_vars(1)).collect();
        Ok(self.sibling(out))
    }

    /// `(I : f)`, computed as `(I ∩ (f)) / f`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::ZeroColon);
        }
        if f.is_unit() {
            return Ok(self.clone());
        }
        let meet = self.intersect(&self.sibling(vec![f.clone()]))?;
        let gens = meet
            .gens
            .iter()
            .map(|g| {
                g.div_exact(f).ok_or_else(|| {
                    Error::Consistency("intersection generator not divisible by the colon element".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.sibling(gens))
    }

    /// `(I : J) = ∩_j (I : g_j)` over the generators of `J`.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut acc = self.sibling(vec![Polynomial::one(self.field, self.nvars)]);
        for g in &other.gens {
            acc = acc.intersect(&self.colon(g)?)?;
        }
        Ok(acc)
    }

    /// Krull dimension of `R / I`, with `-1` for the unit ideal.
    ///
    /// Computed from the leading monomials of the reduced basis: the largest
    /// set of variables that supports no leading monomial.
    pub fn krull_dim(&self) -> Result<i64> {
        let gb = self.groebner_basis()?;
        if gb.len() == 1 && gb[0].is_unit() {
            return Ok(-1);
        }
        let n = self.nvars;
        assert!(n < 64, "too many variables for subset enumeration");
        let supports: Vec<u64> = gb
            .iter()
            .map(|g| {
                let (lm, _) = g.leading_term(self.order).expect("nonzero");
                lm.support().fold(0u64, |acc, i| acc | (1 << i))
            })
            .collect();
        let mut best = 0u32;
        for set in 0u64..(1u64 << n) {
            let size = set.count_ones();
            if size > best && supports.iter().all(|&s| s & !set != 0) {
                best = size;
            }
        }
        Ok(best as i64)
    }

    /// Generators rendered with the ring's variable names.
    pub fn display_gens(&self, ring: &PolyRing) -> Vec<String> {
        self.gens.iter().map(|g| ring.display(g)).collect()
    }

    /// The reduced basis rendered with the ring's variable names.
    pub fn display_basis(&self, ring: &PolyRing) -> Result<Vec<String>> {
        Ok(self
            .groebner_basis()?
            .iter()
            .map(|g| ring.display_in(g, self.order))
            .collect())
    }

    /// `(a, b, c)` form of the reduced basis.
    pub fn to_string_with(&self, ring: &PolyRing) -> Result<String> {
        let gb = self.display_basis(ring)?;
        if gb.is_empty() {
            return Ok("(0)".into());
        }
        Ok(format!("({})", gb.join(", ")))
    }
}
