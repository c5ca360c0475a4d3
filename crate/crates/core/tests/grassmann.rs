use std::collections::BTreeMap;

use koszulkit::grassmann::{
    bordered_det, bot_contract, dual_full_product, exp_substitution, grassmann_exp, odd_row_det, top_contract,
    transgression_det, Element, Gen, SubstitutionKernel, TransgressionColumn, Word,
};
use koszulkit::ring::{divided_differences, scalar, OddFamily, Poly, Var};
use koszulkit::Context;
use proptest::prelude::*;

const F: OddFamily = OddFamily(0);
const G: OddFamily = OddFamily(1);
const H: OddFamily = OddFamily(2);

/// Sorts a raw generator sequence by counting inversions; `None` on a repeat.
fn canon(seq: &[Gen]) -> Option<(bool, Vec<Gen>)> {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] == seq[j] {
                return None;
            }
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    let mut sorted = seq.to_vec();
    sorted.sort();
    Some((inversions % 2 == 1, sorted))
}

type Raw = Vec<(Vec<Gen>, i64)>;

/// Builds an element from raw products using only the inversion-count oracle for signs.
fn from_raw(raw: &Raw) -> Element {
    let mut out = Element::zero();
    for (seq, c) in raw {
        if let Some((neg, sorted)) = canon(seq) {
            let (reorder, w) = Word::from_product(&sorted).unwrap();
            assert!(!reorder);
            let c = if neg { -c } else { *c };
            out.add_term(w, Poly::int(c));
        }
    }
    out
}

fn raw_product(a: &Raw, b: &Raw) -> Raw {
    let mut out = Vec::new();
    for (sa, ca) in a {
        for (sb, cb) in b {
            let mut s = sa.clone();
            s.extend_from_slice(sb);
            out.push((s, ca * cb));
        }
    }
    out
}

fn gen() -> impl Strategy<Value = Gen> {
    (0u16..3, 0usize..3, any::<bool>()).prop_map(|(f, i, d)| Gen::new(OddFamily(f), i, d))
}

fn raw(len: std::ops::Range<usize>) -> impl Strategy<Value = Raw> {
    prop::collection::vec((prop::collection::vec(gen(), len), -4i64..=4), 0..5)
}

fn raw_homogeneous(deg: usize) -> impl Strategy<Value = Raw> {
    prop::collection::vec((prop::collection::vec(gen(), deg..deg + 1), -4i64..=4), 0..5)
}

fn p(f: OddFamily, i: usize) -> Element {
    Element::primal(f, i)
}

fn d(f: OddFamily, i: usize) -> Element {
    Element::dual(f, i)
}

#[test]
fn square_zero_and_anticommutation() {
    assert!((&p(F, 0) * &p(F, 0)).is_zero());
    assert_eq!(&p(F, 1) * &p(F, 0), -(&p(F, 0) * &p(F, 1)));
}

#[test]
fn pair_product_expansion_matches_oracle() {
    let one = Element::one();
    let lhs = &(&one + &(&p(F, 0) * &d(F, 0))) * &(&one + &(&p(F, 1) * &d(F, 1)));
    let (f1, f1s, f2, f2s) = (Gen::primal(F, 0), Gen::dual(F, 0), Gen::primal(F, 1), Gen::dual(F, 1));
    let expected = from_raw(&vec![
        (vec![], 1),
        (vec![f1, f1s], 1),
        (vec![f2, f2s], 1),
        (vec![f1, f1s, f2, f2s], 1),
    ]);
    assert_eq!(lhs, expected);
}

#[test]
fn odd_row_determinants() {
    assert_eq!(odd_row_det(&[p(F, 0), p(F, 1)]), &p(F, 0) * &p(F, 1));
    assert!(odd_row_det(&[p(F, 0), p(F, 0)]).is_zero());

    // det‖f̂ − ĝb‖ for s = 2, t = 1 with b = (2, 3)
    let rows = [&p(F, 0) - &p(G, 0).scale(&scalar::int(2)), &p(F, 1) - &p(G, 0).scale(&scalar::int(3))];
    let (f1, f2, g1) = (Gen::primal(F, 0), Gen::primal(F, 1), Gen::primal(G, 0));
    let expected = from_raw(&vec![(vec![f1, f2], 1), (vec![f1, g1], -3), (vec![g1, f2], -2), (vec![g1, g1], 6)]);
    assert_eq!(odd_row_det(&rows), expected);
    assert_eq!(expected.len(), 3);
}

#[test]
fn exponentials() {
    assert!(grassmann_exp(&[]).is_one());
    let beta = scalar::ratio(-5, 3);
    let e = grassmann_exp(&[(p(G, 0).scale(&beta), d(F, 0))]);
    assert_eq!(e, &Element::one() + &(&p(G, 0) * &d(F, 0)).scale(&beta));

    // exp(f̂′ f̂_*) with f̂′ = H, s = 2
    let e = exp_substitution(F, &[p(H, 0), p(H, 1)]);
    let (h1, h2, f1s, f2s) = (Gen::primal(H, 0), Gen::primal(H, 1), Gen::dual(F, 0), Gen::dual(F, 1));
    let expected = from_raw(&vec![
        (vec![], 1),
        (vec![h1, f1s], 1),
        (vec![h2, f2s], 1),
        (vec![h1, f1s, h2, f2s], 1),
    ]);
    assert_eq!(e, expected);
}

#[test]
fn top_contraction_examples() {
    let beta = scalar::int(7);
    let e = &d(F, 0) * &(&p(F, 0) - &p(G, 0).scale(&beta));
    assert!(top_contract(F, &e).is_one());
    assert!(top_contract(F, &d(F, 0)).is_zero());
    assert!(top_contract(F, &Element::one()).is_one());
}

#[test]
fn top_contraction_recovers_n1_transgression() {
    let ctx = Context::new(1).unwrap();
    let fx = OddFamily(0);
    let fy = OddFamily(1);
    let u = OddFamily(2);
    let sum = &ctx.xv(0) + &ctx.yv(0);
    let odd = &p(fx, 0) - &p(fy, 0);
    let body = &(-&d(u, 0)) * &(&odd - &Element::linear(u, std::slice::from_ref(&sum)));
    assert_eq!(top_contract(u, &body), Element::scalar(sum.clone()));
    let col = TransgressionColumn { odd, grad: vec![sum.clone()] };
    assert_eq!(transgression_det(&[col], u, 1).unwrap(), Element::scalar(sum));
}

#[test]
fn bot_contraction_examples() {
    let beta = scalar::int(4);
    let e = &d(F, 0) * &(&p(F, 0) - &p(G, 0).scale(&beta));
    assert_eq!(bot_contract(F, &e), &Element::one() + &(&p(G, 0) * &d(F, 0)).scale(&beta));
    let free = &p(G, 0) * &d(H, 1);
    assert_eq!(bot_contract(F, &free), free);
}

#[test]
fn lemma1_smallest_instance() {
    // ⊥_f̂ [f̂¹_* ∧ (f̂₁a + ĝ₁b)] = a − b·ĝ₁f̂¹_*: the b = −β case of the exponential form
    let (a, b) = (scalar::ratio(3, 2), scalar::int(-5));
    let body = &d(F, 0) * &(&p(F, 0).scale(&a) + &p(G, 0).scale(&b));
    let expected = &Element::scalar(Poly::constant(a.clone())) - &(&p(G, 0) * &d(F, 0)).scale(&b);
    assert_eq!(bot_contract(F, &body), expected);
    let bordered = bordered_det(&[vec![Poly::constant(a)]], &[p(G, 0).scale(&b)], F).unwrap();
    assert_eq!(bordered, expected);
}

#[test]
fn bordered_determinants() {
    let ctx = Context::new(1).unwrap();
    let big = &ctx.xv(0).pow(2) + &Poly::int(1);
    let d1 = bordered_det(&[vec![big.clone()]], &[-&p(G, 0)], F).unwrap();
    assert_eq!(d1, &Element::scalar(big) + &(&p(G, 0) * &d(F, 0)));

    let id = vec![
        vec![Poly::one(), Poly::zero(), Poly::zero()],
        vec![Poly::zero(), Poly::one(), Poly::zero()],
        vec![Poly::zero(), Poly::zero(), Poly::one()],
    ];
    let zeros = vec![Element::zero(); 3];
    assert!(bordered_det(&id, &zeros, F).unwrap().is_one());
}

#[test]
fn transgression_examples() {
    let mut ctx = Context::new(2).unwrap();
    let fx = ctx.odd("fx", 2);
    let fy = ctx.odd("fy", 2);
    let t = ctx.transgression(&[(&[ctx.xv(0), ctx.xv(1)], Some(fx), Some(fy))]).unwrap();
    assert!(t.is_one());

    let mut ctx = Context::new(1).unwrap();
    let fx = ctx.odd("fx", 2);
    let fy = ctx.odd("fy", 2);
    let f = [ctx.xv(0), ctx.xv(0).pow(2)];
    let t = ctx.transgression(&[(&f, Some(fx), Some(fy))]).unwrap();
    let diff = |i| &p(fx, i) - &p(fy, i);
    let expected = &diff(1) - &diff(0).scale_poly(&(&ctx.xv(0) + &ctx.yv(0)));
    assert_eq!(t, expected);

    let mut ctx = Context::new(1).unwrap();
    let fx = ctx.odd("fx", 1);
    let fy = ctx.odd("fy", 1);
    let f = [ctx.xv(0).pow(2)];
    let t = ctx.transgression(&[(&f, Some(fx), Some(fy))]).unwrap();
    // the only û-saturated term is the gradient; the odd part has no partner
    assert_eq!(t.coeff(&Word::unit()), &ctx.xv(0) + &ctx.yv(0));
    assert_eq!(t.len(), 1);
}

#[test]
fn transgression_columns_use_divided_differences() {
    let ctx = Context::new(2).unwrap();
    let f = &(&ctx.xv(0) * &ctx.xv(1)) + &ctx.xv(1).pow(3);
    let cols = ctx.columns(std::slice::from_ref(&f), Some(F), None).unwrap();
    assert_eq!(cols[0].grad, divided_differences(&f, &ctx.x, &ctx.y).unwrap());
    assert_eq!(cols[0].odd, p(F, 0));
}

#[test]
fn kernels() {
    let ctx = Context::new(2).unwrap();
    let (x1, x2) = (ctx.xv(0), ctx.xv(1));
    let e = &(&p(F, 0).scale_poly(&x1) + &p(F, 1)) * &(&p(F, 0) + &p(F, 1).scale_poly(&(&x1 * &x2)));
    assert_eq!(SubstitutionKernel::identity().apply(&e), e);

    let killed = SubstitutionKernel::zero_family(F, 2).apply(&(&Element::one() + &(&p(F, 0) * &d(G, 0))));
    assert!(killed.is_one());

    // x ↦ y, f̂ ↦ ĝ against the same expression written directly in y and ĝ
    let mut k = SubstitutionKernel::rename_family(F, G, 2);
    for (&x, &y) in ctx.x.iter().zip(&ctx.y) {
        k = k.map_var(x, Poly::var(y));
    }
    let (y1, y2) = (ctx.yv(0), ctx.yv(1));
    let direct = &(&p(G, 0).scale_poly(&y1) + &p(G, 1)) * &(&p(G, 0) + &p(G, 1).scale_poly(&(&y1 * &y2)));
    assert_eq!(k.apply(&e), direct);

    let bad = SubstitutionKernel::identity().map_odd(Gen::primal(F, 0), Element::one());
    assert!(bad.is_err());
}

#[test]
fn kernel_composition_is_sequential_application() {
    let ctx = Context::new(1).unwrap();
    let x = ctx.x[0];
    let k1 = SubstitutionKernel::identity()
        .map_var(x, &ctx.yv(0) + &Poly::one())
        .map_odd(Gen::primal(F, 0), &p(G, 0) + &p(F, 1))
        .unwrap();
    let k2 = SubstitutionKernel::rename_family(G, H, 1).map_var(ctx.y[0], ctx.xv(0).pow(2));
    let e = &(&p(F, 0).scale_poly(&ctx.xv(0)) + &p(G, 0)) * &p(F, 1);
    assert_eq!(k1.then(&k2).apply(&e), k2.apply(&k1.apply(&e)));
}

#[test]
fn full_dual_product_orientation() {
    for s in 1..=4 {
        let prim = (0..s).fold(Element::one(), |acc, i| &acc * &p(F, i));
        assert!(top_contract(F, &(&dual_full_product(F, s) * &prim)).is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn wedge_matches_sign_oracle(a in raw(0..4), b in raw(0..4)) {
        prop_assert_eq!(&from_raw(&a) * &from_raw(&b), from_raw(&raw_product(&a, &b)));
    }

    #[test]
    fn wedge_is_associative(a in raw(0..3), b in raw(0..3), c in raw(0..3)) {
        let (x, y, z) = (from_raw(&a), from_raw(&b), from_raw(&c));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn wedge_is_graded_commutative(
        (da, db, a, b) in (0usize..4, 0usize..4)
            .prop_flat_map(|(da, db)| (Just(da), Just(db), raw_homogeneous(da), raw_homogeneous(db)))
    ) {
        let (x, y) = (from_raw(&a), from_raw(&b));
        prop_assert_eq!(&x * &y, (&y * &x).scale(&scalar::sign(da * db)));
    }

    #[test]
    fn bot_contraction_fixes_family_free_elements(a in raw(0..4)) {
        let e = from_raw(&a).filter(|w| !w.families().any(|f| f == F));
        prop_assert_eq!(bot_contract(F, &e), e);
    }
}

#[test]
fn rename_vars_moves_coefficients() {
    let ctx = Context::new(1).unwrap();
    let e = p(F, 0).scale_poly(&ctx.xv(0));
    let map: BTreeMap<Var, Var> = ctx.x_to_y();
    assert_eq!(e.rename_vars(&map), p(F, 0).scale_poly(&ctx.yv(0)));
}
