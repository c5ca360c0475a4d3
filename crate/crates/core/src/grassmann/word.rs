use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use smallvec::SmallVec;

use crate::ring::{OddFamily, Registry};

/// One anticommuting generator: a primal `f̂_i` or its dual `f̂^i_*`.
///
/// Packed as `family << 16 | index << 1 | dual`, so the integer order is the global
/// generator order: families in registration order, then index, then primal before dual.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Gen(u32);

impl Gen {
    pub const MAX_INDEX: usize = (1 << 15) - 1;

    pub fn primal(family: OddFamily, index: usize) -> Gen {
        Self::new(family, index, false)
    }

    pub fn dual(family: OddFamily, index: usize) -> Gen {
        Self::new(family, index, true)
    }

    pub fn new(family: OddFamily, index: usize, dual: bool) -> Gen {
        assert!(index <= Self::MAX_INDEX, "odd generator index out of range");
        Gen(((family.0 as u32) << 16) | ((index as u32) << 1) | dual as u32)
    }

    pub fn family(self) -> OddFamily {
        OddFamily((self.0 >> 16) as u16)
    }

    /// Zero-based index within the family.
    pub fn index(self) -> usize {
        ((self.0 >> 1) & 0x7fff) as usize
    }

    pub fn is_dual(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn with_family(self, family: OddFamily) -> Gen {
        Gen::new(family, self.index(), self.is_dual())
    }

    pub fn render(self, reg: &Registry) -> String {
        let star = if self.is_dual() { "*" } else { "" };
        format!("{}{}_{}", reg.odd_name(self.family()), star, self.index() + 1)
    }
}

impl fmt::Debug for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let star = if self.is_dual() { "*" } else { "" };
        write!(f, "o{}{}_{}", self.family().0, star, self.index() + 1)
    }
}

/// A canonical wedge product of distinct generators, strictly increasing in global order.
/// The empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[Gen; 8]>);

impl Word {
    pub fn unit() -> Word {
        Word(SmallVec::new())
    }

    pub fn single(g: Gen) -> Word {
        let mut v = SmallVec::new();
        v.push(g);
        Word(v)
    }

    /// Canonicalizes an arbitrary product of generators, returning the reordering sign,
    /// or `None` if a generator repeats.
    pub fn from_product(gens: &[Gen]) -> Option<(bool, Word)> {
        let mut v: SmallVec<[Gen; 8]> = gens.iter().copied().collect();
        let mut negative = false;
        // insertion sort, counting transpositions
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                negative = !negative;
                j -= 1;
            }
            if j > 0 && v[j - 1] == v[j] {
                return None;
            }
        }
        Some((negative, Word(v)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn gens(&self) -> &[Gen] {
        &self.0
    }

    pub fn contains(&self, g: Gen) -> bool {
        self.0.binary_search(&g).is_ok()
    }

    /// Wedge product of two canonical words: `Some((negative, word))` or `None` if they share a generator.
    pub fn wedge(&self, other: &Word) -> Option<(bool, Word)> {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut swaps = 0usize;
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    // b[j] jumps over the remaining a's
                    swaps += a.len() - i;
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => return None,
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Some((swaps % 2 == 1, Word(out)))
    }

    /// The generators of `family`, and the word with them removed.
    pub fn split_family(&self, family: OddFamily) -> (SmallVec<[Gen; 8]>, Word) {
        let (inside, rest): (SmallVec<[Gen; 8]>, SmallVec<[Gen; 8]>) =
            self.0.iter().copied().partition(|g| g.family() == family);
        (inside, Word(rest))
    }

    pub fn families(&self) -> impl Iterator<Item = OddFamily> + '_ {
        self.0.iter().map(|g| g.family())
    }

    pub fn render(&self, reg: &Registry) -> String {
        self.0.iter().map(|g| g.render(reg)).collect::<Vec<_>>().join("∧")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: OddFamily = OddFamily(0);
    const G: OddFamily = OddFamily(1);

    #[test]
    fn packing_orders_globally() {
        let a = Gen::primal(F, 0);
        let b = Gen::dual(F, 0);
        let c = Gen::primal(F, 1);
        let d = Gen::primal(G, 0);
        assert!(a < b && b < c && c < d);
        assert_eq!(b.index(), 0);
        assert!(b.is_dual());
        assert_eq!(d.family(), G);
    }

    #[test]
    fn wedge_signs_match_sorting() {
        let w1 = Word::single(Gen::primal(F, 1));
        let w2 = Word::single(Gen::primal(F, 0));
        let (neg, w) = w1.wedge(&w2).unwrap();
        assert!(neg);
        assert_eq!(w.gens(), &[Gen::primal(F, 0), Gen::primal(F, 1)]);
        assert!(w1.wedge(&w1).is_none());
        let (neg2, w3) = Word::from_product(&[Gen::primal(F, 1), Gen::primal(F, 0)]).unwrap();
        assert!(neg2);
        assert_eq!(w3, w);
        assert!(Word::from_product(&[Gen::primal(F, 1), Gen::primal(G, 0), Gen::primal(F, 1)]).is_none());
    }
}
