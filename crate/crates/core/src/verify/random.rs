use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::grassmann::{Element, Gen, Word};
use crate::koszul::monomials_up_to;
use crate::ring::{scalar, OddFamily, Poly, Scalar, Var};

/// Small nonzero-denominator rational with numerator in `−5..=5` and denominator in `1..=4`.
pub fn rational(rng: &mut ChaCha8Rng) -> Scalar {
    scalar::ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

/// Random polynomial in `vars` of total degree at most `deg`, coefficients in `−2..=2`.
pub fn poly(rng: &mut ChaCha8Rng, vars: &[Var], deg: u32) -> Poly {
    let monos = monomials_up_to(vars, deg);
    let mut p = Poly::zero();
    let terms = rng.gen_range(1..=3usize);
    for _ in 0..terms {
        let m = monos[rng.gen_range(0..monos.len())].clone();
        p.add_term(m, scalar::int(rng.gen_range(-2..=2)));
    }
    p
}

/// Like [`poly`] but never zero.
pub fn nonzero_poly(rng: &mut ChaCha8Rng, vars: &[Var], deg: u32) -> Poly {
    loop {
        let p = poly(rng, vars, deg);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn rational_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Vec<Vec<Poly>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| Poly::constant(rational(rng))).collect())
        .collect()
}

/// Random element over the given generators: up to four terms, wedge degree at most
/// `max_wedge`, coefficients from [`poly`].
pub fn element(rng: &mut ChaCha8Rng, gens: &[Gen], vars: &[Var], deg: u32, max_wedge: usize) -> Element {
    let mut e = Element::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let k = rng.gen_range(0..=max_wedge.min(gens.len()));
        let mut chosen: Vec<Gen> = Vec::new();
        while chosen.len() < k {
            let g = gens[rng.gen_range(0..gens.len())];
            if !chosen.contains(&g) {
                chosen.push(g);
            }
        }
        let (neg, w) = Word::from_product(&chosen).expect("distinct");
        let p = poly(rng, vars, deg);
        e.add_term(w, if neg { -p } else { p });
    }
    e
}

pub fn gens_of(family: OddFamily, arity: usize, dual: bool) -> Vec<Gen> {
    (0..arity).map(|i| Gen::new(family, i, dual)).collect()
}
