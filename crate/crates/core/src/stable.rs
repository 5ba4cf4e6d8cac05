//! Machinery shared by the complete-intersection and Gorenstein settings.
//!
//! Both settings are described by a generating morphism
//! `R/B --(·φ)--> R/B^{[p]}`: for a complete intersection `φ = u^{p-1}` and
//! `B = uR`; in the Gorenstein case `φ = ε(u)` and `B = K_u`. An ideal
//! `I ⊇ B` is F-stable when `φ I ⊆ I^{[p]}`, equivalently when
//! `(φ I)^{[1/p]} ⊆ I`.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::frobenius::{bracket_power, root_step};
use crate::groebner::{GbLimits, Ideal};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::PolyRing;

/// Tunables shared by every computation on a setup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    pub order: MonomialOrder,
    pub limits: GbLimits,
    /// Cap on closure iterations.
    pub max_iter: usize,
    /// Largest Frobenius exponent tried by nilpotency tests and the `K_u` chain.
    pub emax: usize,
    /// Cap on the number of enumerated members.
    pub max_members: usize,
    /// Recompute every membership verdict by all available routes and fail
    /// on disagreement.
    pub cross_check: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            order: MonomialOrder::Grevlex,
            limits: GbLimits::default(),
            max_iter: 64,
            emax: 10,
            max_members: 512,
            cross_check: cfg!(debug_assertions),
        }
    }
}

impl Settings {
    pub(crate) fn ideal(&self, ring: &PolyRing, gens: Vec<Polynomial>) -> Ideal {
        Ideal::in_ring(ring, gens).with_order(self.order).with_limits(self.limits)
    }

    pub(crate) fn adopt(&self, ideal: &Ideal) -> Ideal {
        ideal.clone().with_order(self.order).with_limits(self.limits)
    }
}

/// A failed containment `φ g ∉ I^{[p]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub generator: Polynomial,
    /// Nonzero normal form of `φ g` modulo `I^{[p]}`.
    pub normal_form: Polynomial,
}

#[derive(Clone, Debug)]
pub struct MembershipVerdict {
    /// The tested ideal after adding the base ideal, as a reduced basis.
    pub ideal: Ideal,
    /// Whether normalization changed the input ideal.
    pub normalized: bool,
    pub member: bool,
    pub witness: Option<Witness>,
}

/// Height of `I A` inside `A = R / B`; `None` for the unit ideal.
pub type Height = Option<usize>;

/// Nilpotency status of an enumerated member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NilpotencyStatus {
    Nilpotent(usize),
    NotNilpotent,
    Inconclusive(usize),
}

#[derive(Clone, Debug)]
pub struct Member {
    pub ideal: Ideal,
    pub height: Height,
    /// Only computed in the complete-intersection setting.
    pub nilpotency: Option<NilpotencyStatus>,
}

/// Members found from a pool of seeds. Completeness is relative to the pool.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub members: Vec<Member>,
    pub pool_size: usize,
}

impl Lattice {
    pub fn ideals(&self) -> impl Iterator<Item = &Ideal> {
        self.members.iter().map(|m| &m.ideal)
    }
}

#[derive(Clone, Debug)]
pub struct TestIdealReport {
    pub ideal: Ideal,
    /// Members of positive height that were intersected.
    pub positive_height_members: usize,
    /// No proper member of positive height was found; the ideal is `R`.
    pub vacuous: bool,
    /// The unique minimal member of positive height, when F-purity was
    /// established and that member was checked against the intersection.
    pub minimal_member: Option<Ideal>,
    pub caveats: Vec<String>,
}

#[derive(Clone, Debug)]
pub enum FRationality {
    /// A member other than the base ideal and `R` exists.
    NotFRational { witness: Ideal },
    /// Only the base ideal and `R` were found from the pool.
    FRationalRelativeToPool,
}

/// The generating morphism `R/B --(·multiplier)--> R/B^{[p]}`.
#[derive(Clone, Debug)]
pub(crate) struct Action {
    pub multiplier: Polynomial,
    pub base: Ideal,
    /// `dim R/B`.
    pub dim_a: usize,
    pub settings: Settings,
}

impl Action {
    fn unit(&self) -> Ideal {
        self.base.sibling_unit()
    }

    /// `I + B`, reduced.
    pub fn normalize(&self, ideal: &Ideal) -> Result<(Ideal, bool)> {
        let ideal = self.settings.adopt(ideal);
        let normalized = ideal.sum(&self.base)?.reduced()?;
        let changed = !self.base.is_subset_of(&ideal)?;
        Ok((normalized, changed))
    }

    /// `(φ I)^{[1/p]}`.
    pub fn root_image(&self, ideal: &Ideal) -> Ideal {
        root_step(&ideal.scale(&self.multiplier))
    }

    pub fn member(&self, ideal: &Ideal) -> Result<MembershipVerdict> {
        let (ideal, normalized) = self.normalize(ideal)?;
        let frob = bracket_power(&ideal, 1)?;
        let mut witness = None;
        for g in ideal.gens() {
            let nf = frob.normal_form(&(&self.multiplier * g))?;
            if !nf.is_zero() {
                witness = Some(Witness { generator: g.clone(), normal_form: nf });
                break;
            }
        }
        let member = witness.is_none();
        if self.settings.cross_check {
            let by_root = self.root_image(&ideal).is_subset_of(&ideal)?;
            if by_root != member {
                return Err(Error::Consistency(format!(
                    "membership by containment ({member}) and by Frobenius root ({by_root}) disagree"
                )));
            }
        }
        Ok(MembershipVerdict { ideal, normalized, member, witness })
    }

    /// Smallest member containing `seed + B`.
    pub fn closure(&self, seed: &Ideal) -> Result<Ideal> {
        let (mut current, _) = self.normalize(seed)?;
        for _ in 0..self.settings.max_iter {
            let image = self.root_image(&current);
            if image.is_subset_of(&current)? {
                return Ok(current);
            }
            current = current.sum(&image)?.reduced()?;
        }
        Err(Error::IterationCap { what: "closure", cap: self.settings.max_iter })
    }

    /// `dim R/B - dim R/I`, `None` when `I = R`.
    pub fn height(&self, ideal: &Ideal) -> Result<Height> {
        let d = self.settings.adopt(ideal).krull_dim()?;
        if d < 0 {
            return Ok(None);
        }
        Ok(Some(self.dim_a.saturating_sub(d as usize)))
    }

    /// Closes `{B, R} ∪ {closure(B + (f)) : f ∈ pool}` under sums and
    /// intersections (each followed by a closure) until nothing new appears.
    pub fn enumerate(&self, pool: &[Polynomial]) -> Result<Vec<(Ideal, Height)>> {
        if pool.is_empty() {
            return Err(Error::EmptyPool);
        }
        let mut found: Vec<Ideal> = Vec::new();
        let mut keys: HashSet<Vec<Polynomial>> = HashSet::new();
        let cap = self.settings.max_members;
        let mut insert = |ideal: Ideal, found: &mut Vec<Ideal>| -> Result<()> {
            let key = ideal.groebner_basis()?.as_ref().clone();
            if !keys.contains(&key) {
                if found.len() >= cap {
                    return Err(Error::ResourceLimit { what: "enumerated members", limit: cap });
                }
                keys.insert(key);
                found.push(ideal);
            }
            Ok(())
        };

        insert(self.base.reduced()?, &mut found)?;
        insert(self.unit().reduced()?, &mut found)?;
        let seeds: Vec<Ideal> = pool
            .par_iter()
            .map(|f| self.closure(&self.base.add_generator(f.clone())))
            .collect::<Result<_>>()?;
        for s in seeds {
            insert(s, &mut found)?;
        }

        let mut done = 0;
        while done < found.len() {
            let size = found.len();
            // every pair with at least one member new since the last round
            let pairs: Vec<(usize, usize)> = (0..size)
                .flat_map(|j| (0..=j).map(move |i| (i, j)))
                .filter(|&(_, j)| j >= done)
                .filter(|&(i, j)| i != j)
                .collect();
            let snapshot = &found;
            let produced: Vec<Vec<Ideal>> = pairs
                .par_iter()
                .map(|&(i, j)| {
                    let (a, b) = (&snapshot[i], &snapshot[j]);
                    let s = self.closure(&a.sum(b)?)?;
                    let t = self.closure(&a.intersect(b)?)?;
                    Ok(vec![s, t])
                })
                .collect::<Result<_>>()?;
            done = size;
            for ideal in produced.into_iter().flatten() {
                insert(ideal, &mut found)?;
            }
        }

        let mut out = found
            .into_iter()
            .map(|ideal| Ok((self.height(&ideal)?, ideal)))
            .collect::<Result<Vec<_>>>()?;
        // deterministic: by height (unit ideal last), then by basis
        out.sort_by(|(ha, a), (hb, b)| {
            let ka = (ha.is_none(), *ha);
            let kb = (hb.is_none(), *hb);
            ka.cmp(&kb).then_with(|| basis_key(a).cmp(&basis_key(b)))
        });
        Ok(out.into_iter().map(|(h, i)| (i, h)).collect())
    }

    /// Intersection of the proper members of positive height.
    pub fn test_ideal(&self, members: &[(Ideal, Height)], f_pure: bool) -> Result<TestIdealReport> {
        let positive: Vec<&Ideal> = members
            .iter()
            .filter(|(_, h)| matches!(h, Some(h) if *h > 0))
            .map(|(i, _)| i)
            .collect();
        let mut caveats = vec![
            "computed from a pool-relative enumeration; members missed by the pool could shrink the result"
                .to_string(),
        ];
        if positive.is_empty() {
            caveats.push("no proper member of positive height was found: the intersection is vacuous and the result is R".into());
            return Ok(TestIdealReport {
                ideal: self.unit().reduced()?,
                positive_height_members: 0,
                vacuous: true,
                minimal_member: None,
                caveats,
            });
        }
        let mut acc = positive[0].clone();
        for m in &positive[1..] {
            acc = acc.intersect(m)?;
        }
        let acc = acc.reduced()?;
        let mut minimal_member = None;
        if f_pure {
            let mut minimal = None;
            for cand in &positive {
                if positive.iter().all(|o| cand.is_subset_of(o).unwrap_or(false)) {
                    minimal = Some((*cand).clone());
                    break;
                }
            }
            match minimal {
                Some(m) if m.equals(&acc)? => minimal_member = Some(m),
                Some(_) => {
                    return Err(Error::Consistency(
                        "minimal member of positive height differs from the intersection".into(),
                    ))
                }
                None => {
                    return Err(Error::Consistency(
                        "no unique minimal member of positive height although the ring is F-pure".into(),
                    ))
                }
            }
        }
        Ok(TestIdealReport {
            ideal: acc,
            positive_height_members: positive.len(),
            vacuous: false,
            minimal_member,
            caveats,
        })
    }

    pub fn f_rationality(&self, members: &[(Ideal, Height)]) -> Result<FRationality> {
        for (ideal, h) in members {
            if h.is_none() || ideal.equals(&self.base)? {
                continue;
            }
            return Ok(FRationality::NotFRational { witness: ideal.clone() });
        }
        Ok(FRationality::FRationalRelativeToPool)
    }
}

fn basis_key(i: &Ideal) -> String {
    i.groebner_basis()
        .map(|gb| gb.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(","))
        .unwrap_or_default()
}
