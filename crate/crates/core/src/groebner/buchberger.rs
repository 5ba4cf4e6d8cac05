//! Buchberger's algorithm with the normal selection strategy and the
//! Gebauer–Möller installation of both Buchberger criteria.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

/// Bounds on a single Gröbner basis computation. Exceeding either one is an
/// error; the computation is never silently truncated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbLimits {
    pub max_pairs: usize,
    pub max_basis: usize,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits { max_pairs: 100_000, max_basis: 100_000 }
    }
}

type Term = (Monomial, u64);

/// A polynomial with its terms sorted descending under a fixed order.
#[derive(Clone, Debug)]
pub(crate) struct Sorted {
    pub terms: Vec<Term>,
}

impl Sorted {
    pub fn new(f: &Polynomial, order: MonomialOrder) -> Self {
        Sorted { terms: f.terms_in_order(order) }
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> u64 {
        self.terms[0].1
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn into_poly(self, field: PrimeField, nvars: usize) -> Polynomial {
        Polynomial::from_terms(field, nvars, self.terms)
    }

    fn make_monic(&mut self, field: PrimeField) {
        if let Some(&(_, lc)) = self.terms.first() {
            if lc != 1 {
                let inv = field.inv(lc);
                for t in &mut self.terms {
                    t.1 = field.mul(t.1, inv);
                }
            }
        }
    }
}

/// `a[start..] - c * m * g`, merged in `order`.
fn sub_scaled(
    a: &[Term],
    c: u64,
    m: &Monomial,
    g: &[Term],
    order: MonomialOrder,
    field: PrimeField,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map(|(n, b)| (n.mul(m), field.mul(*b, c))).peekable();
    while i < a.len() {
        let Some((gm, _)) = gi.peek() else { break };
        match order.cmp(&a[i].0, gm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (gm, gc) = gi.next().expect("peeked");
                out.push((gm, field.neg(gc)));
            }
            Ordering::Equal => {
                let (gm, gc) = gi.next().expect("peeked");
                let v = field.sub(a[i].1, gc);
                if v != 0 {
                    out.push((gm, v));
                }
                i += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(gi.map(|(gm, gc)| (gm, field.neg(gc))));
    out
}

/// Full reduction of `f` by the monic polynomials `basis`: the first
/// divisor in basis order is used and the leading term is reduced first.
pub(crate) fn reduce(
    f: Sorted,
    basis: &[&Sorted],
    order: MonomialOrder,
    field: PrimeField,
) -> Sorted {
    let mut rem: Vec<Term> = Vec::new();
    let mut p = f.terms;
    let mut start = 0;
    while start < p.len() {
        let (m, c) = &p[start];
        let divisor = basis.iter().find(|g| g.lm().divides(m));
        match divisor {
            Some(g) => {
                let q = g.lm().quotient(m).expect("divides");
                let c = field.mul(*c, field.inv(g.lc()));
                p = sub_scaled(&p[start..], c, &q, &g.terms, order, field);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    Sorted { terms: rem }
}

/// Remainder of `f` on division by `basis` (not necessarily a Gröbner basis).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Polynomial {
    let field = f.field();
    let sorted: Vec<Sorted> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Sorted::new(g, order))
        .collect();
    let refs: Vec<&Sorted> = sorted.iter().collect();
    reduce(Sorted::new(f, order), &refs, order, field).into_poly(field, f.nvars())
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced, monic Gröbner basis sorted by descending leading monomial.
pub fn buchberger(
    gens: &[Polynomial],
    order: MonomialOrder,
    limits: GbLimits,
) -> Result<Vec<Polynomial>> {
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else {
        return Ok(Vec::new());
    };
    let field = first.field();
    let nvars = first.nvars();

    let mut polys: Vec<Sorted> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut processed = 0usize;

    // Inputs are inserted one at a time, each reduced by what is already
    // there, so the initial pair set is built by the same update rule.
    let mut input: Vec<Sorted> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Sorted::new(g, order))
        .collect();
    input.sort_by(|a, b| order.cmp(a.lm(), b.lm()));

    let mut queue = input.into_iter();
    loop {
        let h = if let Some(g) = queue.next() {
            g
        } else {
            // normal selection: smallest lcm first, ties by index
            let Some(idx) = (0..pairs.len()).min_by(|&a, &b| {
                order
                    .cmp(&pairs[a].lcm, &pairs[b].lcm)
                    .then((pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)))
            }) else {
                break;
            };
            let pair = pairs.swap_remove(idx);
            processed += 1;
            if processed > limits.max_pairs {
                return Err(Error::ResourceLimit { what: "critical pairs", limit: limits.max_pairs });
            }
            s_polynomial(&polys[pair.i], &polys[pair.j], &pair.lcm, order, field)
        };
        let basis: Vec<&Sorted> =
            polys.iter().zip(&active).filter(|(_, a)| **a).map(|(g, _)| g).collect();
        let mut h = reduce(h, &basis, order, field);
        if h.is_zero() {
            continue;
        }
        h.make_monic(field);
        if h.lm().is_one() {
            return Ok(vec![Polynomial::one(field, nvars)]);
        }
        update(&mut polys, &mut active, &mut pairs, h);
        if active.iter().filter(|a| **a).count() > limits.max_basis {
            return Err(Error::ResourceLimit { what: "basis size", limit: limits.max_basis });
        }
    }

    // The active set is already minimal; inter-reduce the tails.
    let mut minimal: Vec<Sorted> =
        polys.into_iter().zip(active).filter(|(_, a)| *a).map(|(g, _)| g).collect();
    minimal.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let head = minimal[i].terms[0].clone();
        let tail = Sorted { terms: minimal[i].terms[1..].to_vec() };
        let others: Vec<&Sorted> =
            minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g).collect();
        let mut r = reduce(tail, &others, order, field);
        r.terms.insert(0, head);
        reduced.push(r.into_poly(field, nvars));
    }
    Ok(reduced)
}

fn s_polynomial(
    f: &Sorted,
    g: &Sorted,
    lcm: &Monomial,
    order: MonomialOrder,
    field: PrimeField,
) -> Sorted {
    // both monic
    let mf = f.lm().quotient(lcm).expect("lcm");
    let mg = g.lm().quotient(lcm).expect("lcm");
    let a: Vec<Term> = f.terms[1..].iter().map(|(m, c)| (m.mul(&mf), *c)).collect();
    Sorted { terms: sub_scaled(&a, 1, &mg, &g.terms[1..], order, field) }
}

fn update(polys: &mut Vec<Sorted>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: Sorted) {
    let k = polys.len();
    let hm = h.lm().clone();

    let mut candidates: Vec<(usize, Monomial, bool)> = (0..k)
        .filter(|&i| active[i])
        .map(|i| {
            let lm = polys[i].lm();
            (i, lm.lcm(&hm), lm.is_coprime(&hm))
        })
        .collect();

    // chain criterion among the new pairs
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    while let Some((i, lcm, coprime)) = candidates.pop() {
        let dominated = candidates.iter().any(|(_, l, _)| l.divides(&lcm))
            || kept.iter().any(|(_, l, _)| l.divides(&lcm));
        if coprime || !dominated {
            kept.push((i, lcm, coprime));
        }
    }

    // chain criterion on the old pairs
    pairs.retain(|pair| {
        let li = polys[pair.i].lm().lcm(&hm);
        let lj = polys[pair.j].lm().lcm(&hm);
        !(hm.divides(&pair.lcm) && li != pair.lcm && lj != pair.lcm)
    });

    // product criterion
    for (i, lcm, coprime) in kept {
        if !coprime {
            pairs.push(Pair { i, j: k, lcm });
        }
    }

    for i in 0..k {
        if active[i] && hm.divides(polys[i].lm()) {
            active[i] = false;
        }
    }
    polys.push(h);
    active.push(true);
}
