use std::collections::BTreeMap;

use koszulkit::ring::{divided_differences, parse_poly, scalar, Monomial, Poly, Scalar, Var};
use koszulkit::Context;
use num_bigint::BigInt;
use proptest::prelude::*;

fn parse(ctx: &Context, src: &str) -> Poly {
    parse_poly(src, &|name: &str| ctx.registry.lookup(name)).unwrap()
}

/// Dense exponent vectors over the first three variables, as the naive oracle sees them.
type Terms = Vec<([u32; 3], i64, i64)>;

fn build(terms: &Terms) -> Poly {
    Poly::from_terms(terms.iter().map(|(e, n, d)| {
        let m = Monomial::from_pairs((0..3).map(|k| (Var(k as u32), e[k])));
        (m, scalar::ratio(*n, *d))
    }))
}

/// Term-by-term product on dense exponent vectors.
fn naive_mul(a: &Terms, b: &Terms) -> BTreeMap<[u32; 3], Scalar> {
    let mut out: BTreeMap<[u32; 3], Scalar> = BTreeMap::new();
    for (ea, na, da) in a {
        for (eb, nb, db) in b {
            let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
            let c = scalar::ratio(*na, *da) * scalar::ratio(*nb, *db);
            *out.entry(e).or_insert_with(scalar::zero) += c;
        }
    }
    out.retain(|_, c| *c != scalar::zero());
    out
}

fn dense(p: &Poly) -> BTreeMap<[u32; 3], Scalar> {
    p.terms()
        .map(|(m, c)| ([m.exponent(Var(0)), m.exponent(Var(1)), m.exponent(Var(2))], c.clone()))
        .collect()
}

fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec(([0u32..=3, 0u32..=3, 0u32..=3], -6i64..=6, 1i64..=4), 0..6)
}

#[test]
fn additive_inverse_and_difference_of_squares() {
    let ctx = Context::new(2).unwrap();
    let x = parse(&ctx, "x1");
    let y = parse(&ctx, "x2");
    assert!((&parse(&ctx, "x1 + 1") + &parse(&ctx, "-x1 - 1")).is_zero());
    assert_eq!(&(&x - &y) * &(&x + &y), parse(&ctx, "x1^2 - x2^2"));
}

#[test]
fn substitution_examples() {
    let ctx = Context::new(1).unwrap();
    let x = ctx.x[0];
    let y = ctx.y[0];
    let images: BTreeMap<Var, Poly> = [(x, Poly::var(y))].into_iter().collect();
    assert_eq!(Poly::var(x).pow(2).subst(&images), Poly::var(y).pow(2));

    let ctx = Context::new(2).unwrap();
    let zero: BTreeMap<Var, Poly> = ctx.x.iter().map(|&v| (v, Poly::zero())).collect();
    assert!(parse(&ctx, "x1 + x2").subst(&zero).is_zero());
}

#[test]
fn divided_difference_examples() {
    let ctx = Context::new(1).unwrap();
    let d = divided_differences(&parse(&ctx, "x1^2"), &ctx.x, &ctx.y).unwrap();
    assert_eq!(d, vec![&ctx.xv(0) + &ctx.yv(0)]);
    let d = divided_differences(&Poly::int(7), &ctx.x, &ctx.y).unwrap();
    assert!(d.iter().all(Poly::is_zero));

    let ctx = Context::new(2).unwrap();
    let d = divided_differences(&parse(&ctx, "x1*x2"), &ctx.x, &ctx.y).unwrap();
    assert_eq!(d, vec![ctx.xv(1), ctx.yv(0)]);
}

#[test]
fn divided_difference_rejects_foreign_variables() {
    let ctx = Context::new(2).unwrap();
    assert!(divided_differences(&ctx.yv(0), &ctx.x, &ctx.y).is_err());
    assert!(divided_differences(&ctx.xv(0), &ctx.x, &ctx.y[..1]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn multiplication_matches_naive_expansion(a in terms(), b in terms()) {
        prop_assert_eq!(dense(&(&build(&a) * &build(&b))), naive_mul(&a, &b));
    }

    #[test]
    fn ring_axioms(a in terms(), b in terms(), c in terms()) {
        let (p, q, r) = (build(&a), build(&b), build(&c));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &Poly::one(), p.clone());
    }

    #[test]
    fn substitution_is_a_homomorphism(a in terms(), b in terms(), i0 in terms(), i1 in terms()) {
        let images: BTreeMap<Var, Poly> = [(Var(0), build(&i0)), (Var(1), build(&i1))].into_iter().collect();
        let (p, q) = (build(&a), build(&b));
        prop_assert_eq!((&p * &q).subst(&images), &p.subst(&images) * &q.subst(&images));
        prop_assert_eq!((&p + &q).subst(&images), &p.subst(&images) + &q.subst(&images));
    }

    #[test]
    fn divided_differences_telescope(a in terms()) {
        let ctx = Context::new(3).unwrap();
        let f = build(&a);
        let d = divided_differences(&f, &ctx.x, &ctx.y).unwrap();
        let lhs = (0..3).fold(Poly::zero(), |acc, k| &acc + &(&(&ctx.xv(k) - &ctx.yv(k)) * &d[k]));
        prop_assert_eq!(lhs, &f - &ctx.at_y(&f));
    }

    #[test]
    fn parse_round_trips_render(a in terms()) {
        let ctx = Context::new(3).unwrap();
        let p = build(&a);
        prop_assert_eq!(parse(&ctx, &p.render(&ctx.registry)), p);
    }
}

#[test]
fn big_coefficients_stay_exact() {
    let ctx = Context::new(1).unwrap();
    let p = &ctx.xv(0) + &Poly::constant(Scalar::from_integer(BigInt::from(10).pow(30)));
    let q = p.pow(3);
    assert_eq!(q.coeff(&Monomial::one()), Scalar::from_integer(BigInt::from(10).pow(90)));
}
