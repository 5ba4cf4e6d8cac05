//! Frobenius powers and roots of ideals, and Fedder's F-purity criterion.
//!
//! Over a polynomial ring `R` the Frobenius endomorphism is flat and `R` is
//! free over `R^{p^e}` with basis `{x^a : 0 <= a_i < p^e}`. Roots are computed
//! from that decomposition one Frobenius step at a time.

use std::collections::BTreeMap;

use crate::ci::CISetup;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// `p^e`, or an overflow error.
pub fn frobenius_exponent(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e).filter(|q| *q <= u32::MAX as u64).ok_or(Error::ExponentOverflow)
}

/// `I^{[p^e]}`: the ideal generated by the `p^e`-th powers of the generators.
pub fn bracket_power(ideal: &Ideal, e: u32) -> Result<Ideal> {
    let q = frobenius_exponent(ideal.field().characteristic(), e)?;
    let gens = ideal.gens().iter().map(|g| g.frobenius(q)).collect::<Result<Vec<_>>>()?;
    Ok(same_setting(ideal, gens))
}

/// Coefficients `h_a` of `f = Σ_a h_a^p x^a` over the basis `0 <= a_i < p`.
/// In `F_p` every coefficient is its own `p`-th root.
pub fn root_components(f: &Polynomial) -> Vec<Polynomial> {
    let p = f.field().characteristic() as u32;
    let mut buckets: BTreeMap<Monomial, Vec<(Monomial, u64)>> = BTreeMap::new();
    for (m, c) in f.terms() {
        let (q, r) = m.divmod_exponents(p);
        buckets.entry(r).or_default().push((q, *c));
    }
    buckets
        .into_values()
        .map(|terms| Polynomial::from_terms(f.field(), f.nvars(), terms))
        .collect()
}

/// `I^{[1/p]}`, the smallest ideal `J` with `I ⊆ J^{[p]}`.
pub fn root_step(ideal: &Ideal) -> Ideal {
    let mut gens: Vec<Polynomial> = Vec::new();
    for g in ideal.gens() {
        for h in root_components(g) {
            if !gens.contains(&h) {
                gens.push(h);
            }
        }
    }
    same_setting(ideal, gens)
}

/// `I^{[1/p^e]}`, computed as `e` single roots.
pub fn frobenius_root(ideal: &Ideal, e: u32) -> Result<Ideal> {
    let mut acc = ideal.clone();
    for step in 0..e {
        acc = root_step(&acc);
        // compact intermediate generating sets
        if step + 1 < e {
            acc = acc.reduced()?;
        }
    }
    Ok(acc)
}

fn same_setting(like: &Ideal, gens: Vec<Polynomial>) -> Ideal {
    Ideal::new(like.field(), like.nvars(), gens)
        .with_order(like.order())
        .with_limits(like.limits())
}

/// Fedder's criterion in colon form: `R / J` is F-pure iff
/// `(J^{[p]} : J) ⊄ m^{[p]}`, with `m` the ideal of all variables.
pub fn fedder_colon(defining: &Ideal) -> Result<bool> {
    let pow = bracket_power(defining, 1)?;
    let colon = pow.colon_ideal(defining)?;
    let m_p = bracket_power(&maximal_like(defining), 1)?;
    Ok(!colon.is_subset_of(&m_p)?)
}

/// Fedder's criterion for a hypersurface `R / (u)`: `u^{p-1} ∉ m^{[p]}`.
pub fn fedder_hypersurface(u: &Ideal) -> Result<bool> {
    let [f] = u.gens() else {
        return Err(Error::Setup("hypersurface criterion needs exactly one generator".into()));
    };
    let p = f.field().characteristic();
    let m_p = bracket_power(&maximal_like(u), 1)?;
    Ok(!m_p.contains(&f.pow(p - 1)?)?)
}

/// F-purity of a complete intersection by Fedder's criterion.
///
/// The colon form is always evaluated; for a hypersurface the power form
/// `u^{p-1} ∉ m^{[p]}` is evaluated as well and the two must agree.
pub fn is_f_pure(setup: &CISetup) -> Result<bool> {
    let u = setup.u_ideal();
    let by_colon = fedder_colon(u)?;
    if setup.u_gens().len() == 1 {
        let single = setup.ideal(setup.u_gens().to_vec());
        let by_power = fedder_hypersurface(&single)?;
        if by_power != by_colon {
            return Err(Error::Consistency(format!(
                "Fedder colon form ({by_colon}) and hypersurface form ({by_power}) disagree"
            )));
        }
    }
    Ok(by_colon)
}

fn maximal_like(like: &Ideal) -> Ideal {
    let m = Ideal::maximal(like.field(), like.nvars());
    m.with_order(like.order()).with_limits(like.limits())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolyRing;

    fn id(r: &PolyRing, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    #[test]
    fn bracket_powers() {
        let r = PolyRing::new(2, &["x", "y"]).unwrap();
        assert!(bracket_power(&id(&r, &["x", "y"]), 1).unwrap().equals(&id(&r, &["x^2", "y^2"])).unwrap());
        assert_eq!(bracket_power(&id(&r, &["x + y"]), 1).unwrap().display_gens(&r), vec!["x^2 + y^2"]);
        assert!(bracket_power(&id(&r, &["x"]), 2).unwrap().equals(&id(&r, &["x^4"])).unwrap());
        assert_eq!(bracket_power(&id(&r, &["x"]), 40).unwrap_err(), Error::ExponentOverflow);
    }

    #[test]
    fn monomial_root() {
        let r = PolyRing::new(2, &["x", "y"]).unwrap();
        let root = frobenius_root(&id(&r, &["x^2*y^3"]), 1).unwrap();
        assert!(root.equals(&id(&r, &["x*y"])).unwrap());
    }

    #[test]
    fn cubic_root_is_unit() {
        let r = PolyRing::new(2, &["x", "y", "z"]).unwrap();
        let root = frobenius_root(&id(&r, &["x^3 + y^3 + z^3 + x*y*z"]), 1).unwrap();
        let mut gens = root.display_gens(&r);
        gens.sort();
        assert_eq!(gens, vec!["1", "x", "y", "z"]);
        assert!(root.is_unit().unwrap());
    }

    #[test]
    fn root_of_bracket_power() {
        let r = PolyRing::new(3, &["x", "y", "z"]).unwrap();
        let i = id(&r, &["x^2 + y*z", "x*y + 2*z"]);
        for e in 1..=2 {
            let back = frobenius_root(&bracket_power(&i, e).unwrap(), e).unwrap();
            assert!(back.equals(&i).unwrap());
        }
    }

    #[test]
    fn fedder_examples() {
        let r = PolyRing::new(2, &["x", "y", "z"]).unwrap();
        let u = id(&r, &["x^2*y + x*y*z + z^3"]);
        assert!(fedder_hypersurface(&u).unwrap());
        assert!(fedder_colon(&u).unwrap());
        let r2 = PolyRing::new(2, &["x", "y"]).unwrap();
        for (g, expect) in [("x^2", false), ("x*y", true)] {
            let u = id(&r2, &[g]);
            assert_eq!(fedder_hypersurface(&u).unwrap(), expect, "{g}");
            assert_eq!(fedder_colon(&u).unwrap(), expect, "{g}");
        }
    }
}
