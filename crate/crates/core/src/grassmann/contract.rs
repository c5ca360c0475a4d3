//! Full (⊤) and partial (⊥) Berezin-style contractions over one odd family.
//!
//! Pairing convention: a dual standing immediately left of its primal cancels to one,
//! `⊤_f̂ [f̂^i_* ∧ f̂_i] = 1`, and pairs are removed innermost-first. With the dual product
//! `det‖f̂_*‖ = f̂^s_* ∧ … ∧ f̂^1_*` this gives `⊤_f̂ det‖f̂_*‖ det‖f̂‖ = 1`, and the exponent
//! kernels `exp(ĝ f̂_*)` act as the substitution `f̂ ↦ ĝ` under `⊤_f̂`.

use super::element::Element;
use super::word::{Gen, Word};
use crate::ring::OddFamily;

/// Scratch family used by [`bot_contract`]; never survives into a result.
pub(crate) const BOT_SCRATCH: OddFamily = OddFamily(u16::MAX);

/// `⊤_family e`: pairs every primal of the family against its dual and drops terms where
/// the primal and dual index sets differ. The result mentions no generator of the family.
pub fn top_contract(family: OddFamily, e: &Element) -> Element {
    let mut out = Element::zero();
    for (w, p) in e.terms() {
        if let Some((negative, rest)) = pair_block(w, family) {
            out.add_term(rest, if negative { -p } else { p.clone() });
        }
    }
    out
}

/// Contraction of one word. The family's generators form a contiguous run in the
/// canonical word, ordered `f̂_i, f̂^i_*` per index, so each matched index costs one swap.
fn pair_block(w: &Word, family: OddFamily) -> Option<(bool, Word)> {
    let (block, rest) = w.split_family(family);
    if block.len() % 2 == 1 {
        return None;
    }
    for pair in block.chunks(2) {
        let (p, d) = (pair[0], pair[1]);
        if p.is_dual() || !d.is_dual() || p.index() != d.index() {
            return None;
        }
    }
    Some(((block.len() / 2) % 2 == 1, rest))
}

/// `⊥_family e = ⊤_{f̂'} e[f̂ → f̂'] ∧ exp(f̂' f̂_*)`.
///
/// Primal generators of the family are contracted against duals inside `e`; unmatched
/// duals survive as duals of the original family.
pub fn bot_contract(family: OddFamily, e: &Element) -> Element {
    debug_assert!(!e.mentions_family(BOT_SCRATCH));
    let renamed = e.rename_family(family, BOT_SCRATCH);
    let mut indices: Vec<usize> = e
        .gens()
        .into_iter()
        .filter(|g| g.family() == family && g.is_dual())
        .map(Gen::index)
        .collect();
    indices.dedup();
    let kernel = indices.iter().fold(Element::one(), |acc, &i| {
        let pair = &Element::primal(BOT_SCRATCH, i) * &Element::dual(family, i);
        &acc * &(&Element::one() + &pair)
    });
    top_contract(BOT_SCRATCH, &(&renamed * &kernel))
}

/// `⊤` over the family after multiplying by the unit functional `(f̂)^0`: keeps the terms
/// free of the family. This is the effect of the zero exponent kernel `1_{f̂}(0)`.
pub fn drop_family(family: OddFamily, e: &Element) -> Element {
    e.filter(|w| !w.families().any(|f| f == family))
}
