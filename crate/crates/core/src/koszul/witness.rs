use std::collections::{BTreeMap, BTreeSet};

use super::boundary::{boundary, BoundaryAssignment};
use crate::linsolve::{solve, SparseRow};
use crate::error::{Error, Result};
use crate::grassmann::{Element, Gen, Word};
use crate::ring::{Monomial, Poly, Scalar, Var};

/// Result of a witness search. `NotFound` is an answer, not an error.
#[derive(Debug, Clone, PartialEq)]
pub enum WitnessOutcome {
    Found(Element),
    NotFound,
}

/// Searches for `w` with `∂[w] = lhs − rhs`.
///
/// Candidates are primal words one wedge degree above each component of the difference,
/// with coefficients supported on monomials of total degree at most `degree_bound` in the
/// variables of the difference and of the boundary images. Bounds are tried in increasing
/// order so the reported witness is of smallest available degree.
pub fn homotopy_witness(
    lhs: &Element,
    rhs: &Element,
    ba: &BoundaryAssignment,
    degree_bound: u32,
) -> Result<WitnessOutcome> {
    let diff = lhs - rhs;
    if diff.is_zero() {
        return Ok(WitnessOutcome::Found(Element::zero()));
    }
    if !boundary(ba, &diff)?.is_zero() {
        return Err(Error::ContractViolation(
            "homotopy witness requested for a difference that is not a cocycle".into(),
        ));
    }
    if diff.gens().iter().any(|g| g.is_dual()) {
        return Err(Error::usage("homotopy witness search supports primal-side elements only"));
    }
    let gens: Vec<(Gen, &Poly)> = ba.primal_gens();
    let mut vars: BTreeSet<Var> = diff.vars();
    for (_, p) in &gens {
        vars.extend(p.vars());
    }
    let vars: Vec<Var> = vars.into_iter().collect();

    let mut words: Vec<Word> = Vec::new();
    for k in diff.wedge_degrees() {
        words.extend(subsets(&gens, k + 1));
    }
    if words.is_empty() {
        return Ok(WitnessOutcome::NotFound);
    }
    let word_boundaries: Vec<Element> = words
        .iter()
        .map(|w| boundary(ba, &Element::term(w.clone(), Poly::one())))
        .collect::<Result<_>>()?;

    let start = diff.max_poly_degree().saturating_sub(gens.iter().map(|(_, p)| p.total_degree()).max().unwrap_or(0));
    for bound in start.min(degree_bound)..=degree_bound {
        if let Some(w) = solve_at(&diff, &words, &word_boundaries, &vars, bound) {
            if boundary(ba, &w)? != diff {
                return Err(Error::ContractViolation("witness failed re-verification".into()));
            }
            return Ok(WitnessOutcome::Found(w));
        }
    }
    Ok(WitnessOutcome::NotFound)
}

fn solve_at(diff: &Element, words: &[Word], word_boundaries: &[Element], vars: &[Var], bound: u32) -> Option<Element> {
    let monomials = monomials_up_to(vars, bound);
    let mut row_index: BTreeMap<(Word, Monomial), usize> = BTreeMap::new();
    let mut rows: Vec<SparseRow> = Vec::new();
    let mut index_of = |key: (Word, Monomial), rows: &mut Vec<SparseRow>| -> usize {
        let next = row_index.len();
        *row_index.entry(key).or_insert_with(|| {
            rows.push(SparseRow::new());
            next
        })
    };
    let mut col = 0usize;
    for dw in word_boundaries {
        for m in &monomials {
            for (w2, p) in dw.terms() {
                for (m2, c) in p.terms() {
                    let r = index_of((w2.clone(), m.mul(m2)), &mut rows);
                    rows[r].insert(col, c.clone());
                }
            }
            col += 1;
        }
    }
    let mut rhs = vec![Scalar::default(); rows.len()];
    for (w, p) in diff.terms() {
        for (m, c) in p.terms() {
            let r = index_of((w.clone(), m.clone()), &mut rows);
            if r >= rhs.len() {
                rhs.resize(r + 1, Scalar::default());
            }
            rhs[r] = c.clone();
        }
    }
    rhs.resize(rows.len(), Scalar::default());
    let solution = solve(rows, rhs)?;
    let mut w = Element::zero();
    for (c, v) in solution {
        let (wi, mi) = (c / monomials.len(), c % monomials.len());
        w.add_term(words[wi].clone(), Poly::term(monomials[mi].clone(), v));
    }
    Some(w)
}

/// All canonical words made of `k` distinct generators from `gens`.
fn subsets(gens: &[(Gen, &Poly)], k: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut chosen: Vec<Gen> = Vec::with_capacity(k);
    fn rec(gens: &[(Gen, &Poly)], start: usize, k: usize, chosen: &mut Vec<Gen>, out: &mut Vec<Word>) {
        if chosen.len() == k {
            out.push(Word::from_product(chosen).expect("distinct generators").1);
            return;
        }
        for i in start..gens.len() {
            chosen.push(gens[i].0);
            rec(gens, i + 1, k, chosen, out);
            chosen.pop();
        }
    }
    rec(gens, 0, k, &mut chosen, &mut out);
    out
}

/// Every monomial in `vars` of total degree at most `bound`.
pub(crate) fn monomials_up_to(vars: &[Var], bound: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    for &v in vars {
        let mut next = Vec::new();
        for m in &out {
            for e in 0..=bound - m.degree() {
                next.push(m.mul(&Monomial::var_pow(v, e)));
            }
        }
        out = next;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::OddFamily;

    const F: OddFamily = OddFamily(0);

    fn setup() -> (BoundaryAssignment, Poly) {
        let x = Poly::var(Var(0));
        let ba = BoundaryAssignment::new().primal(F, vec![&x * &x, &x + &Poly::one()]);
        (ba, x)
    }

    #[test]
    fn equal_sides_give_zero_witness() {
        let (ba, x) = setup();
        let e = Element::scalar(x);
        assert_eq!(homotopy_witness(&e, &e, &ba, 2).unwrap(), WitnessOutcome::Found(Element::zero()));
    }

    #[test]
    fn planted_witness_is_recovered() {
        let (ba, x) = setup();
        let planted = (&Element::primal(F, 0) * &Element::primal(F, 1)).scale_poly(&x);
        let lhs = boundary(&ba, &planted).unwrap();
        match homotopy_witness(&lhs, &Element::zero(), &ba, 3).unwrap() {
            WitnessOutcome::Found(w) => assert_eq!(boundary(&ba, &w).unwrap(), lhs),
            WitnessOutcome::NotFound => panic!("no witness"),
        }
    }

    #[test]
    fn non_cocycle_is_contract_violation() {
        let (ba, _) = setup();
        let r = homotopy_witness(&Element::primal(F, 0), &Element::zero(), &ba, 2);
        assert!(matches!(r, Err(Error::ContractViolation(_))));
    }

    #[test]
    fn unit_is_not_a_boundary_below_bound() {
        // (x², x+1) generate the unit ideal, but 1 = ∂[w] needs a witness of degree one.
        let (ba, _) = setup();
        assert_eq!(homotopy_witness(&Element::one(), &Element::zero(), &ba, 0).unwrap(), WitnessOutcome::NotFound);
        assert!(matches!(
            homotopy_witness(&Element::one(), &Element::zero(), &ba, 1).unwrap(),
            WitnessOutcome::Found(_)
        ));
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials_up_to(&[Var(0), Var(1)], 2).len(), 6);
        assert_eq!(monomials_up_to(&[], 3).len(), 1);
    }
}
