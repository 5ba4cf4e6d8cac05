//! F-stable ideals when `A = R / uR` is Gorenstein.
//!
//! The generating morphism of the dual of the top local cohomology module is
//! multiplication by a user-supplied `ε(u)`, defined up to a unit. It need
//! not be injective on `R/uR`; the kernel is removed by passing to
//! `K_u = ∪_e (u^{[p^{e+1}]} : ε^{1 + p + ... + p^e})`.

use std::sync::OnceLock;

use crate::ci::{pairs, CISetup};
use crate::error::{Error, Result};
use crate::frobenius::{bracket_power, fedder_colon};
use crate::groebner::Ideal;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use crate::stable::{Action, FRationality, Height, Lattice, Member, MembershipVerdict, Settings, TestIdealReport};

#[derive(Debug)]
pub struct GorSetup {
    ring: PolyRing,
    u_gens: Vec<Polynomial>,
    u_ideal: Ideal,
    epsilon: Polynomial,
    /// `dim R - dim R/uR`.
    delta: usize,
    dim_a: usize,
    settings: Settings,
    k_u: OnceLock<KuChain>,
}

/// The computed colon chain `C_0 ⊆ C_1 ⊆ ...` and its stable value.
#[derive(Clone, Debug)]
pub struct KuChain {
    pub k_u: Ideal,
    pub chain: Vec<Ideal>,
    /// First `e` with `C_{e+1} = C_e`.
    pub stable_at: usize,
}

impl GorSetup {
    pub fn new(ring: PolyRing, u_gens: Vec<Polynomial>, epsilon: Polynomial, settings: Settings) -> Result<Self> {
        if epsilon.is_zero() {
            return Err(Error::Setup("epsilon must be nonzero".into()));
        }
        if u_gens.iter().all(|u| u.is_zero()) {
            return Err(Error::Setup("at least one nonzero defining polynomial is required".into()));
        }
        for u in &u_gens {
            if u.constant_term() != 0 {
                return Err(Error::Setup(format!(
                    "`{}` has a nonzero constant term; defining polynomials must vanish at the origin",
                    ring.display(u)
                )));
            }
        }
        let u_ideal = settings.ideal(&ring, u_gens.clone()).reduced()?;
        let dim = u_ideal.krull_dim()?;
        if dim < 0 {
            return Err(Error::Setup("defining polynomials generate the unit ideal".into()));
        }
        let dim_a = dim as usize;
        let delta = ring.nvars() - dim_a;
        Ok(GorSetup { ring, u_gens, u_ideal, epsilon, delta, dim_a, settings, k_u: OnceLock::new() })
    }

    pub fn parse(ring: PolyRing, u_gens: &[&str], epsilon: &str) -> Result<Self> {
        let gens = u_gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        let eps = ring.parse(epsilon)?;
        Self::new(ring, gens, eps, Settings::default())
    }

    /// The Gorenstein view of a complete intersection: `ε = (u_1 ⋯ u_n)^{p-1}`.
    pub fn from_ci(ci: &CISetup) -> Result<Self> {
        let eps = ci.u_prod().pow(ci.characteristic() - 1)?;
        Self::new(ci.ring().clone(), ci.u_gens().to_vec(), eps, *ci.settings())
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn u_gens(&self) -> &[Polynomial] {
        &self.u_gens
    }

    pub fn u_ideal(&self) -> &Ideal {
        &self.u_ideal
    }

    pub fn epsilon(&self) -> &Polynomial {
        &self.epsilon
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn settings(&self) -> &Settings {
        &self.settings
    }

    pub fn ideal(&self, gens: Vec<Polynomial>) -> Ideal {
        self.settings.ideal(&self.ring, gens)
    }

    pub fn parse_ideal(&self, gens: &[&str]) -> Result<Ideal> {
        let gens = gens.iter().map(|s| self.ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Ok(self.ideal(gens))
    }

    pub fn unit_ideal(&self) -> Ideal {
        self.ideal(vec![self.ring.one()])
    }

    /// Computes `C_e = (u^{[p^{e+1}]} : ε^{1+p+...+p^e})` for `e = 0, 1, ...`
    /// until two consecutive values agree, checking each step ascends.
    pub fn compute_k_u(&self, emax: usize) -> Result<KuChain> {
        let p = self.ring.characteristic();
        let mut chain: Vec<Ideal> = Vec::new();
        let mut exponent = 0u64;
        for e in 0..=emax {
            // 1 + p + ... + p^e
            exponent = exponent * p + 1;
            let numerator = bracket_power(&self.u_ideal, e as u32 + 1)?;
            let c = numerator.colon(&self.epsilon.pow(exponent)?)?.reduced()?;
            if let Some(prev) = chain.last() {
                if !prev.is_subset_of(&c)? {
                    return Err(Error::KuNotAscending { step: e });
                }
                if prev.equals(&c)? {
                    let k_u = c.clone();
                    chain.push(c);
                    return Ok(KuChain { k_u, chain, stable_at: e - 1 });
                }
            }
            chain.push(c);
        }
        let chain = chain.iter().map(|c| c.display_basis(&self.ring)).collect::<Result<Vec<_>>>()?;
        Err(Error::KuInconclusive { emax, chain })
    }

    /// `K_u` with the setup's `emax`, computed once.
    pub fn k_u(&self) -> Result<&KuChain> {
        if let Some(k) = self.k_u.get() {
            return Ok(k);
        }
        let k = self.compute_k_u(self.settings.emax)?;
        Ok(self.k_u.get_or_init(|| k))
    }

    fn action(&self) -> Result<Action> {
        Ok(Action {
            multiplier: self.epsilon.clone(),
            base: self.k_u()?.k_u.clone(),
            dim_a: self.dim_a,
            settings: self.settings,
        })
    }

    /// Membership of `I + K_u`: `ε I ⊆ I^{[p]}`.
    pub fn check_member(&self, ideal: &Ideal) -> Result<MembershipVerdict> {
        self.action()?.member(ideal)
    }

    pub fn closure(&self, seed: &Ideal) -> Result<Ideal> {
        self.action()?.closure(seed)
    }

    /// Height of `I A`, via `dim R/uR - dim R/I`.
    pub fn height(&self, ideal: &Ideal) -> Result<Height> {
        let action = self.action()?;
        let (normalized, _) = action.normalize(ideal)?;
        action.height(&normalized)
    }

    pub fn enumerate(&self, pool: &[Polynomial]) -> Result<Lattice> {
        let members = self
            .action()?
            .enumerate(pool)?
            .into_iter()
            .map(|(ideal, height)| Member { ideal, height, nilpotency: None })
            .collect();
        Ok(Lattice { members, pool_size: pool.len() })
    }

    /// Fedder's criterion applied to `uR`.
    pub fn is_f_pure(&self) -> Result<bool> {
        fedder_colon(&self.u_ideal)
    }

    pub fn test_ideal(&self, lattice: &Lattice) -> Result<TestIdealReport> {
        let f_pure = self.is_f_pure()?;
        self.action()?.test_ideal(&pairs(lattice), f_pure)
    }

    pub fn f_rationality(&self, lattice: &Lattice) -> Result<FRationality> {
        self.action()?.f_rationality(&pairs(lattice))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_u_for_hypersurfaces() {
        let r = PolyRing::new(2, &["x", "y"]).unwrap();
        let g = GorSetup::parse(r.clone(), &["x"], "x").unwrap();
        let k = g.k_u().unwrap();
        assert!(k.k_u.equals(&g.parse_ideal(&["x"]).unwrap()).unwrap());
        assert_eq!(k.stable_at, 0);
        let g = GorSetup::parse(r, &["x*y"], "x*y").unwrap();
        assert!(g.k_u().unwrap().k_u.equals(&g.parse_ideal(&["x*y"]).unwrap()).unwrap());
    }

    #[test]
    fn degenerate_epsilon_fails_loudly() {
        let r = PolyRing::new(2, &["x", "y"]).unwrap();
        let g = GorSetup::parse(r, &["x*y"], "1").unwrap();
        let err = g.compute_k_u(3).unwrap_err();
        assert_eq!(err, Error::KuNotAscending { step: 1 });
        assert!(g.check_member(&g.unit_ideal()).is_err());
    }

    #[test]
    fn inconclusive_chain_reports_partial_values() {
        let r = PolyRing::new(2, &["x", "y"]).unwrap();
        let g = GorSetup::parse(r, &["x*y"], "x*y").unwrap();
        match g.compute_k_u(0).unwrap_err() {
            Error::KuInconclusive { emax: 0, chain } => assert_eq!(chain, vec![vec!["x*y".to_string()]]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn zero_epsilon_rejected() {
        let r = PolyRing::new(2, &["x", "y"]).unwrap();
        assert!(matches!(GorSetup::parse(r, &["x*y"], "0"), Err(Error::Setup(_))));
    }

    #[test]
    fn complete_intersection_recast() {
        let r = PolyRing::new(3, &["x", "y", "z"]).unwrap();
        let ci = CISetup::parse(r, &["x*y", "z"]).unwrap();
        let g = GorSetup::from_ci(&ci).unwrap();
        assert_eq!(g.delta(), 2);
        assert!(g.k_u().unwrap().k_u.equals(ci.u_ideal()).unwrap());
        let i = ci.parse_ideal(&["x", "z"]).unwrap();
        assert_eq!(g.check_member(&i).unwrap().member, ci.check_member(&i).unwrap().member);
        assert!(g.check_member(&g.k_u().unwrap().k_u).unwrap().member);
    }
}
