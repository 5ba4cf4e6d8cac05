//! F-stable ideals for complete intersections `A = R / (u_1, ..., u_n)`.
//!
//! An ideal `I ⊇ uR` is F-stable when `u^{p-1} (I + uR) ⊆ I^{[p]} + u^{[p]}R`
//! with `u = u_1 ⋯ u_n`. Because `I` contains `uR`, the right-hand side is
//! just `I^{[p]}` and the condition reads `u^{p-1} I ⊆ I^{[p]}`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::frobenius::{bracket_power, frobenius_exponent, frobenius_root, root_step};
use crate::groebner::Ideal;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use crate::stable::{
    Action, FRationality, Height, Lattice, Member, MembershipVerdict, NilpotencyStatus, Settings,
    TestIdealReport,
};

/// Degree bound under which Frobenius powers of `u` are expanded directly to
/// re-verify chain computations.
const DIRECT_CHECK_DEGREE: u64 = 96;

/// `A = R / uR` with `u` a regular sequence of polynomials vanishing at the
/// origin.
#[derive(Clone, Debug)]
pub struct CISetup {
    ring: PolyRing,
    u_gens: Vec<Polynomial>,
    u_prod: Polynomial,
    action: Action,
}

impl CISetup {
    pub fn new(ring: PolyRing, u_gens: Vec<Polynomial>, settings: Settings) -> Result<Self> {
        if u_gens.is_empty() {
            return Err(Error::Setup("at least one defining polynomial is required".into()));
        }
        for u in &u_gens {
            if u.is_zero() || u.is_constant() {
                return Err(Error::Setup(format!("`{}` must be nonconstant", ring.display(u))));
            }
            if u.constant_term() != 0 {
                return Err(Error::Setup(format!(
                    "`{}` has a nonzero constant term; defining polynomials must vanish at the origin",
                    ring.display(u)
                )));
            }
        }
        let u_ideal = settings.ideal(&ring, u_gens.clone()).reduced()?;
        let n = u_gens.len();
        let dim = u_ideal.krull_dim()?;
        let expected = ring.nvars() as i64 - n as i64;
        if dim != expected {
            return Err(Error::Setup(format!(
                "defining polynomials are not a regular sequence: dim R/uR = {dim}, expected {expected}"
            )));
        }
        let u_prod = u_gens.iter().skip(1).fold(u_gens[0].clone(), |acc, g| &acc * g);
        let p = ring.characteristic();
        let multiplier = u_prod.pow(p - 1)?;
        let action = Action { multiplier, base: u_ideal, dim_a: expected as usize, settings };
        Ok(CISetup { ring, u_gens, u_prod, action })
    }

    /// Parses the defining polynomials; default settings.
    pub fn parse(ring: PolyRing, u_gens: &[&str]) -> Result<Self> {
        let gens = u_gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens, Settings::default())
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn characteristic(&self) -> u64 {
        self.ring.characteristic()
    }

    pub fn u_gens(&self) -> &[Polynomial] {
        &self.u_gens
    }

    /// `u = u_1 ⋯ u_n`.
    pub fn u_prod(&self) -> &Polynomial {
        &self.u_prod
    }

    /// `uR` as a reduced ideal.
    pub fn u_ideal(&self) -> &Ideal {
        &self.action.base
    }

    pub fn dim_a(&self) -> usize {
        self.action.dim_a
    }

    pub fn settings(&self) -> &Settings {
        &self.action.settings
    }

    /// Ideal in this setup's ring with its order and limits.
    pub fn ideal(&self, gens: Vec<Polynomial>) -> Ideal {
        self.action.settings.ideal(&self.ring, gens)
    }

    pub fn parse_ideal(&self, gens: &[&str]) -> Result<Ideal> {
        let gens = gens.iter().map(|s| self.ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Ok(self.ideal(gens))
    }

    pub fn unit_ideal(&self) -> Ideal {
        self.ideal(vec![self.ring.one()])
    }

    pub fn maximal_ideal(&self) -> Ideal {
        self.ideal(self.ring.variables())
    }

    /// Membership of `I + uR` in the F-stable set.
    pub fn check_member(&self, ideal: &Ideal) -> Result<MembershipVerdict> {
        let verdict = self.action.member(ideal)?;
        if self.settings().cross_check {
            let raw = self.raw_definition_holds(&verdict.ideal)?;
            if raw != verdict.member {
                return Err(Error::Consistency(format!(
                    "raw definition ({raw}) disagrees with the simplified test ({})",
                    verdict.member
                )));
            }
        }
        Ok(verdict)
    }

    /// `u^{p-1}(I + uR) ⊆ I^{[p]} + u^{[p]}R`, literally.
    fn raw_definition_holds(&self, ideal: &Ideal) -> Result<bool> {
        let lhs = ideal.sum(self.u_ideal())?.scale(&self.action.multiplier);
        let rhs = bracket_power(ideal, 1)?.sum(&bracket_power(&self.ideal(self.u_gens.clone()), 1)?)?;
        lhs.is_subset_of(&rhs)
    }

    /// Smallest F-stable ideal containing `seed + uR`.
    pub fn closure(&self, seed: &Ideal) -> Result<Ideal> {
        self.action.closure(seed)
    }

    /// Height of `I A` in `A`; `None` for the unit ideal.
    pub fn height(&self, ideal: &Ideal) -> Result<Height> {
        let (normalized, _) = self.action.normalize(ideal)?;
        self.action.height(&normalized)
    }

    /// Decides whether the F-finite quotient attached to the member `L`
    /// vanishes, i.e. whether `u^{p^e - 1} ∈ L^{[p^e]}` for some `e <= emax`.
    ///
    /// The test is `W_e ⊆ L` with `W_e = (u^{p^e-1})^{[1/p^e]}`, computed by
    /// `W_1 = (u^{p-1})^{[1/p]}` and `W_{e+1} = (u^{p-1} W_e)^{[1/p]}`. The
    /// chain is descending, and once `W_{e+1} = W_e` the recurrence keeps it
    /// constant.
    pub fn nilpotency(&self, member: &Ideal, emax: usize) -> Result<NilpotencyVerdict> {
        let verdict = self.check_member(member)?;
        if !verdict.member {
            return Err(Error::NotMember(verdict.ideal.to_string_with(&self.ring)?));
        }
        let l = verdict.ideal;
        let mult = &self.action.multiplier;
        let mut current = root_step(&self.ideal(vec![mult.clone()])).reduced()?;
        let mut chain = Vec::new();
        for e in 1..=emax.max(1) {
            chain.push(current.clone());
            if self.settings().cross_check {
                self.verify_chain_element(&current, e)?;
            }
            if current.is_subset_of(&l)? {
                self.verify_nilpotent(&l, e)?;
                return Ok(NilpotencyVerdict { status: NilpotencyStatus::Nilpotent(e), chain, stabilized: false });
            }
            let next = root_step(&current.scale(mult)).reduced()?;
            if !next.is_subset_of(&current)? {
                return Err(Error::Consistency(format!("nilpotency chain not descending at step {e}")));
            }
            if next.equals(&current)? {
                return Ok(NilpotencyVerdict { status: NilpotencyStatus::NotNilpotent, chain, stabilized: true });
            }
            current = next;
        }
        Ok(NilpotencyVerdict { status: NilpotencyStatus::Inconclusive(emax), chain, stabilized: false })
    }

    fn direct_power(&self, e: usize) -> Result<Option<Polynomial>> {
        let q = frobenius_exponent(self.characteristic(), e as u32)?;
        if (q - 1) * self.u_prod.total_degree() as u64 > DIRECT_CHECK_DEGREE {
            return Ok(None);
        }
        Ok(Some(self.u_prod.pow(q - 1)?))
    }

    fn verify_chain_element(&self, w: &Ideal, e: usize) -> Result<()> {
        if let Some(power) = self.direct_power(e)? {
            let direct = frobenius_root(&self.ideal(vec![power]), e as u32)?;
            if !direct.equals(w)? {
                return Err(Error::Consistency(format!("nilpotency chain recurrence fails at step {e}")));
            }
        }
        Ok(())
    }

    fn verify_nilpotent(&self, l: &Ideal, e: usize) -> Result<()> {
        if let Some(power) = self.direct_power(e)? {
            if !bracket_power(l, e as u32)?.contains(&power)? {
                return Err(Error::Consistency(format!("u^(p^{e}-1) not in L^[p^{e}]")));
            }
        }
        Ok(())
    }

    /// Fixed-pool enumeration of F-stable ideals with heights and
    /// nilpotency.
    pub fn enumerate(&self, pool: &[Polynomial]) -> Result<Lattice> {
        let found = self.action.enumerate(pool)?;
        let emax = self.settings().emax;
        let members = found
            .into_par_iter()
            .map(|(ideal, height)| {
                let status = self.nilpotency(&ideal, emax)?.status;
                Ok(Member { ideal, height, nilpotency: Some(status) })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Lattice { members, pool_size: pool.len() })
    }

    /// Intersection of the enumerated members of positive height. When the
    /// ring is F-pure the unique minimal such member is located and checked
    /// against the intersection.
    pub fn test_ideal(&self, lattice: &Lattice) -> Result<TestIdealReport> {
        let f_pure = crate::frobenius::is_f_pure(self)?;
        self.action.test_ideal(&pairs(lattice), f_pure)
    }

    pub fn f_rationality(&self, lattice: &Lattice) -> Result<FRationality> {
        self.action.f_rationality(&pairs(lattice))
    }
}

pub(crate) fn pairs(lattice: &Lattice) -> Vec<(Ideal, Height)> {
    lattice.members.iter().map(|m| (m.ideal.clone(), m.height)).collect()
}

#[derive(Clone, Debug)]
pub struct NilpotencyVerdict {
    pub status: NilpotencyStatus,
    /// `W_1, W_2, ...` as computed.
    pub chain: Vec<Ideal>,
    /// The last two chain elements coincide.
    pub stabilized: bool,
}

/// The variables of the ring, the default enumeration pool.
pub fn variable_pool(ring: &PolyRing) -> Vec<Polynomial> {
    ring.variables()
}

/// All nonzero linear forms without constant term, up to scalars.
/// Returns `None` when there are more than `10^4` of them.
pub fn linear_pool(ring: &PolyRing) -> Option<Vec<Polynomial>> {
    let p = ring.characteristic();
    let n = ring.nvars() as u32;
    let total = p.checked_pow(n).filter(|t| *t <= 10_000)?;
    let vars = ring.variables();
    let mut out = Vec::new();
    for code in 1..total {
        let mut digits = Vec::with_capacity(n as usize);
        let mut c = code;
        for _ in 0..n {
            digits.push(c % p);
            c /= p;
        }
        // keep one representative per line: first nonzero coefficient is 1
        if digits.iter().find(|d| **d != 0) != Some(&1) {
            continue;
        }
        let mut f = ring.zero();
        for (d, v) in digits.iter().zip(&vars) {
            f = &f + &v.scale(*d);
        }
        out.push(f);
    }
    Some(out)
}
