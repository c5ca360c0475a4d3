//! Determinant constructors built from wedge products and contractions.

use super::contract::{bot_contract, top_contract};
use super::element::{wedge_all, Element};
use crate::error::{Error, Result};
use crate::ring::{scalar, OddFamily, Poly};

/// Auxiliary family for [`transgression_det`] when the caller does not supply one.
pub const TRANSGRESSION_SCRATCH: OddFamily = OddFamily(u16::MAX - 1);

/// `det‖f̂_*‖ = f̂^s_* ∧ … ∧ f̂^1_*`.
///
/// Orientation is fixed so that `⊤_f̂ det‖f̂_*‖ det‖f̂‖ = +1`.
pub fn dual_full_product(family: OddFamily, arity: usize) -> Element {
    let mut e = Element::one();
    for i in (0..arity).rev() {
        e = &e * &Element::dual(family, i);
    }
    e
}

/// Determinant of a single row of odd entries: their ordered product.
pub fn odd_row_det(entries: &[Element]) -> Element {
    wedge_all(entries)
}

/// `∏_i (1 + a_i ∧ b_i)`, the finite Grassmann exponential of `Σ a_i b_i`.
pub fn grassmann_exp(pairs: &[(Element, Element)]) -> Element {
    pairs.iter().fold(Element::one(), |acc, (a, b)| {
        &acc * &(&Element::one() + &(a * b))
    })
}

/// `exp(Σ_i img_i ∧ f̂^i_*)`: under `⊤_f̂` this substitutes `f̂_i ↦ img_i`.
pub fn exp_substitution(family: OddFamily, images: &[Element]) -> Element {
    let pairs: Vec<(Element, Element)> = images
        .iter()
        .enumerate()
        .map(|(i, img)| (img.clone(), Element::dual(family, i)))
        .collect();
    grassmann_exp(&pairs)
}

/// `det‖[a, f̂_*; oddrow, 0]‖ := ⊥_f̂ det‖f̂_*‖ det‖f̂a + oddrow‖`.
///
/// `a` is `s × m` (rows indexed by the generators of `rowfam`), `oddrow` has `m` entries.
pub fn bordered_det(a: &[Vec<Poly>], oddrow: &[Element], rowfam: OddFamily) -> Result<Element> {
    let s = a.len();
    let m = oddrow.len();
    if let Some(bad) = a.iter().position(|row| row.len() != m) {
        return Err(Error::usage(format!(
            "bordered determinant: row {} has {} entries, expected {}",
            bad,
            a[bad].len(),
            m
        )));
    }
    let columns: Vec<Element> = (0..m)
        .map(|k| {
            let coeffs: Vec<Poly> = a.iter().map(|row| row[k].clone()).collect();
            &Element::linear(rowfam, &coeffs) + &oddrow[k]
        })
        .collect();
    let body = &dual_full_product(rowfam, s) * &odd_row_det(&columns);
    Ok(bot_contract(rowfam, &body))
}

/// One column of a transgression determinant: an odd entry together with the
/// commuting gradient `(∇^1, …, ∇^n)` that the auxiliary generators pick up.
#[derive(Debug, Clone, PartialEq)]
pub struct TransgressionColumn {
    pub odd: Element,
    pub grad: Vec<Poly>,
}

/// `det‖[∇; oddrow]‖ := ⊤_û det‖−û_*‖ ∏_k (oddrow_k − Σ_j û_j ∇^j_k)` with `|û| = n`.
pub fn transgression_det(columns: &[TransgressionColumn], ufam: OddFamily, n: usize) -> Result<Element> {
    if let Some(bad) = columns.iter().position(|c| c.grad.len() != n) {
        return Err(Error::usage(format!(
            "transgression column {} has gradient of length {}, expected {}",
            bad,
            columns[bad].grad.len(),
            n
        )));
    }
    let entries: Vec<Element> = columns
        .iter()
        .map(|c| &c.odd - &Element::linear(ufam, &c.grad))
        .collect();
    let lead = dual_full_product(ufam, n).scale(&scalar::sign(n));
    Ok(top_contract(ufam, &(&lead * &odd_row_det(&entries))))
}
