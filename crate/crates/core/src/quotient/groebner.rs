use num_traits::One;
use serde::Serialize;

use super::order::MonomialOrder;
use crate::ring::{Monomial, Poly, Scalar};

/// Reduced Gröbner basis with cofactors: `basis[k] = Σ_i generators[i]·cofactors[k][i]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    #[serde(skip)]
    pub generators: Vec<Poly>,
    #[serde(skip)]
    pub basis: Vec<Poly>,
    #[serde(skip)]
    pub cofactors: Vec<Vec<Poly>>,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| self.order.leading(g).expect("basis elements are nonzero").0.clone())
            .collect()
    }

    /// True when `p` reduces to zero.
    pub fn contains(&self, p: &Poly) -> bool {
        reduce_with_cofactors(p, self).0.is_zero()
    }
}

struct Entry {
    poly: Poly,
    cof: Vec<Poly>,
    sugar: u32,
    lm: Monomial,
}

/// Buchberger's algorithm with sugar pair selection, tracking cofactors throughout.
pub fn groebner(f: &[Poly], order: MonomialOrder) -> GroebnerBasis {
    let s = f.len();
    let mut basis: Vec<Entry> = Vec::new();
    let mut pairs: Vec<(u32, Monomial, usize, usize)> = Vec::new();
    for (i, p) in f.iter().enumerate() {
        let mut cof = vec![Poly::zero(); s];
        cof[i] = Poly::one();
        let (r, rcof) = reduce_entries(p, &cof, &basis, order);
        if !r.is_zero() {
            push(&mut basis, &mut pairs, r, rcof, p.total_degree(), order);
        }
    }
    while let Some(idx) = next_pair(&pairs, order) {
        let (_, _, i, j) = pairs.swap_remove(idx);
        if basis[i].lm.is_coprime(&basis[j].lm) {
            continue;
        }
        let (sp, scof, sugar) = s_poly(&basis[i], &basis[j]);
        let (r, rcof) = reduce_entries(&sp, &scof, &basis, order);
        if !r.is_zero() {
            push(&mut basis, &mut pairs, r, rcof, sugar, order);
        }
    }
    finish(f, basis, order)
}

fn push(basis: &mut Vec<Entry>, pairs: &mut Vec<(u32, Monomial, usize, usize)>, p: Poly, cof: Vec<Poly>, sugar: u32, order: MonomialOrder) {
    let (lm, lc) = order.leading(&p).map(|(m, c)| (m.clone(), c.clone())).expect("nonzero");
    let inv = Scalar::one() / lc;
    let entry = Entry {
        poly: p.scale(&inv),
        cof: cof.iter().map(|c| c.scale(&inv)).collect(),
        sugar,
        lm,
    };
    let k = basis.len();
    for (i, e) in basis.iter().enumerate() {
        let l = e.lm.lcm(&entry.lm);
        let si = e.sugar + l.degree() - e.lm.degree();
        let sk = entry.sugar + l.degree() - entry.lm.degree();
        pairs.push((si.max(sk), l, i, k));
    }
    basis.push(entry);
}

fn next_pair(pairs: &[(u32, Monomial, usize, usize)], order: MonomialOrder) -> Option<usize> {
    (0..pairs.len()).min_by(|&a, &b| {
        let (pa, pb) = (&pairs[a], &pairs[b]);
        pa.0.cmp(&pb.0)
            .then_with(|| order.cmp(&pa.1, &pb.1))
            .then_with(|| (pa.2, pa.3).cmp(&(pb.2, pb.3)))
    })
}

fn s_poly(a: &Entry, b: &Entry) -> (Poly, Vec<Poly>, u32) {
    let l = a.lm.lcm(&b.lm);
    let ma = l.div(&a.lm).expect("lcm divisible");
    let mb = l.div(&b.lm).expect("lcm divisible");
    let one = Scalar::one();
    let p = &a.poly.mul_monomial(&ma, &one) - &b.poly.mul_monomial(&mb, &one);
    let cof = a
        .cof
        .iter()
        .zip(&b.cof)
        .map(|(ca, cb)| &ca.mul_monomial(&ma, &one) - &cb.mul_monomial(&mb, &one))
        .collect();
    let sugar = (a.sugar + ma.degree()).max(b.sugar + mb.degree());
    (p, cof, sugar)
}

/// Full reduction of `p` (whose cofactors are `cof`) by the entries, carrying cofactors.
fn reduce_entries(p: &Poly, cof: &[Poly], basis: &[Entry], order: MonomialOrder) -> (Poly, Vec<Poly>) {
    let mut rest = p.clone();
    let mut cof = cof.to_vec();
    let mut remainder = Poly::zero();
    while let Some((m, c)) = order.leading(&rest).map(|(m, c)| (m.clone(), c.clone())) {
        match basis.iter().find(|e| e.lm.divides(&m)) {
            Some(e) => {
                let q = m.div(&e.lm).expect("divides");
                rest -= &e.poly.mul_monomial(&q, &c);
                for (acc, ec) in cof.iter_mut().zip(&e.cof) {
                    *acc -= &ec.mul_monomial(&q, &c);
                }
            }
            None => {
                rest.add_term(m.clone(), -c.clone());
                remainder.add_term(m, c);
            }
        }
    }
    // invariant: rest + remainder = Σ_i f_i cof_i
    (remainder, cof)
}

/// Minimizes and inter-reduces the basis, then sorts it by leading monomial.
fn finish(f: &[Poly], mut basis: Vec<Entry>, order: MonomialOrder) -> GroebnerBasis {
    let mut keep: Vec<Entry> = Vec::new();
    basis.sort_by(|a, b| order.cmp(&a.lm, &b.lm));
    for e in basis {
        if !keep.iter().any(|k| k.lm.divides(&e.lm)) {
            keep.push(e);
        }
    }
    let mut reduced: Vec<Entry> = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<&Entry> = keep.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, e)| e).collect();
        let (p, cof) = tail_reduce(&keep[i], &others, order);
        reduced.push(Entry {
            lm: keep[i].lm.clone(),
            sugar: keep[i].sugar,
            poly: p,
            cof,
        });
    }
    reduced.sort_by(|a, b| order.cmp(&a.lm, &b.lm));
    GroebnerBasis {
        order,
        generators: f.to_vec(),
        basis: reduced.iter().map(|e| e.poly.clone()).collect(),
        cofactors: reduced.into_iter().map(|e| e.cof).collect(),
    }
}

/// Reduces every non-leading term of `e` by `others` (whose leading monomials never divide
/// the leading monomial of `e` after minimization).
fn tail_reduce(e: &Entry, others: &[&Entry], order: MonomialOrder) -> (Poly, Vec<Poly>) {
    let lead = Poly::term(e.lm.clone(), Scalar::one());
    let mut tail = &e.poly - &lead;
    let mut cof = e.cof.clone();
    let mut done = Poly::zero();
    while let Some((m, c)) = order.leading(&tail).map(|(m, c)| (m.clone(), c.clone())) {
        match others.iter().find(|o| o.lm.divides(&m)) {
            Some(o) => {
                let q = m.div(&o.lm).expect("divides");
                tail -= &o.poly.mul_monomial(&q, &c);
                for (acc, oc) in cof.iter_mut().zip(&o.cof) {
                    *acc -= &oc.mul_monomial(&q, &c);
                }
            }
            None => {
                tail.add_term(m.clone(), -c.clone());
                done.add_term(m, c);
            }
        }
    }
    (&lead + &done, cof)
}

/// Division by the basis: `p = normal_form + Σ_k basis[k]·quotients[k]`, with the normal
/// form irreducible.
pub fn reduce_with_cofactors(p: &Poly, gb: &GroebnerBasis) -> (Poly, Vec<Poly>) {
    let order = gb.order;
    let lms = gb.leading_monomials();
    let mut rest = p.clone();
    let mut quotients = vec![Poly::zero(); gb.basis.len()];
    let mut remainder = Poly::zero();
    while let Some((m, c)) = order.leading(&rest).map(|(m, c)| (m.clone(), c.clone())) {
        match lms.iter().position(|lm| lm.divides(&m)) {
            Some(k) => {
                let q = m.div(&lms[k]).expect("divides");
                rest -= &gb.basis[k].mul_monomial(&q, &c);
                quotients[k].add_term(q, c);
            }
            None => {
                rest.add_term(m.clone(), -c.clone());
                remainder.add_term(m, c);
            }
        }
    }
    (remainder, quotients)
}

/// Expresses `Σ_k basis[k]·quotients[k]` in terms of the original generators.
pub fn compose_cofactors(gb: &GroebnerBasis, quotients: &[Poly]) -> Vec<Poly> {
    let s = gb.generators.len();
    let mut out = vec![Poly::zero(); s];
    for (q, cof) in quotients.iter().zip(&gb.cofactors) {
        if q.is_zero() {
            continue;
        }
        for (acc, c) in out.iter_mut().zip(cof) {
            *acc += &(q * c);
        }
    }
    out
}

