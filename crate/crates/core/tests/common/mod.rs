//! Test-only helpers: random inputs and an independent membership oracle.
#![allow(dead_code)]

use std::collections::HashMap;

use fstable::{Monomial, PolyRing, Polynomial};
use rand::Rng;

/// All monomials of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::from_exponents(prefix.clone()).unwrap());
            prefix.pop();
            return;
        }
        for k in 0..=d {
            prefix.push(k);
            go(n, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    go(n, d, &mut Vec::new(), &mut out);
    out
}

/// A random homogeneous polynomial of degree `d`, possibly zero.
pub fn random_homogeneous<R: Rng>(ring: &PolyRing, rng: &mut R, d: u32, max_terms: usize) -> Polynomial {
    let p = ring.characteristic();
    let basis = monomials_of_degree(ring.nvars(), d);
    let terms = (0..rng.gen_range(1..=max_terms))
        .map(|_| (basis[rng.gen_range(0..basis.len())].clone(), rng.gen_range(1..p)))
        .collect();
    Polynomial::from_terms(ring.field(), ring.nvars(), terms)
}

/// Membership of a homogeneous `f` in the ideal generated by homogeneous
/// `gens`, decided by linear algebra in degree `deg f` alone.
///
/// Uses no Gröbner bases: `f ∈ I` iff `f` lies in the span of
/// `{m g : g ∈ gens, deg m = deg f - deg g}`.
pub fn macaulay_contains(ring: &PolyRing, gens: &[Polynomial], f: &Polynomial) -> bool {
    if f.is_zero() {
        return true;
    }
    assert!(f.is_homogeneous(), "oracle needs homogeneous input");
    let field = ring.field();
    let d = f.total_degree();
    let cols = monomials_of_degree(ring.nvars(), d);
    let index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let dense = |g: &Polynomial| -> Vec<u64> {
        let mut v = vec![0u64; cols.len()];
        for (m, c) in g.terms() {
            v[index[m]] = *c;
        }
        v
    };

    let mut rows: Vec<Vec<u64>> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        assert!(g.is_homogeneous(), "oracle needs homogeneous generators");
        let gd = g.total_degree();
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(ring.nvars(), d - gd) {
            rows.push(dense(&g.mul_term(&m, 1)));
        }
    }

    // row echelon form with pivots recorded
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    let eliminate = |mut v: Vec<u64>, pivots: &[(usize, Vec<u64>)]| -> Vec<u64> {
        for (col, row) in pivots {
            let c = v[*col];
            if c != 0 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a = field.sub(*a, field.mul(c, *b));
                }
            }
        }
        v
    };
    for r in rows {
        let v = eliminate(r, &pivots);
        if let Some(col) = v.iter().position(|c| *c != 0) {
            let inv = field.inv(v[col]);
            let v: Vec<u64> = v.iter().map(|c| field.mul(*c, inv)).collect();
            // keep earlier pivots reduced against the new one
            for (_, row) in pivots.iter_mut() {
                let c = row[col];
                if c != 0 {
                    for (a, b) in row.iter_mut().zip(&v) {
                        *a = field.sub(*a, field.mul(c, *b));
                    }
                }
            }
            pivots.push((col, v));
        }
    }
    eliminate(dense(f), &pivots).iter().all(|c| *c == 0)
}
