//! Divided differences `∇^k F(x, y)` with `Σ_k (x_k - y_k) ∇^k F = F(x) - F(y)`.

use std::collections::{BTreeMap, BTreeSet};

use super::poly::{Monomial, Poly};
use super::registry::Var;
use crate::error::{Error, Result};

/// Telescoping divided differences of `f` between the families `xs` and `ys`.
///
/// `∇^k F = (F(y_1..y_{k-1}, x_k..x_n) - F(y_1..y_k, x_{k+1}..x_n)) / (x_k - y_k)`, so the
/// k-th entry depends only on `x_k..x_n, y_1..y_k`.
pub fn divided_differences(f: &Poly, xs: &[Var], ys: &[Var]) -> Result<Vec<Poly>> {
    if xs.len() != ys.len() {
        return Err(Error::usage(format!(
            "divided difference needs equal arities, got {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    let allowed: BTreeSet<Var> = xs.iter().copied().collect();
    if let Some(v) = f.vars().into_iter().find(|v| !allowed.contains(v)) {
        return Err(Error::usage(format!(
            "divided difference input mentions variable {} outside the x family",
            v.0
        )));
    }
    let mut out = Vec::with_capacity(xs.len());
    let mut renamed: BTreeMap<Var, Var> = BTreeMap::new();
    for k in 0..xs.len() {
        // h = F(y_1..y_{k-1}, x_k, ..., x_n)
        let h = f.rename(&renamed);
        let (xk, yk) = (xs[k], ys[k]);
        let mut dk = Poly::zero();
        for (m, c) in h.terms() {
            let e = m.exponent(xk);
            if e == 0 {
                continue;
            }
            let rest = Monomial::from_pairs(m.iter().filter(|&(v, _)| v != xk));
            // (x^e - y^e) / (x - y) = Σ_{i<e} x^i y^{e-1-i}
            for i in 0..e {
                let mono = rest.mul(&Monomial::from_pairs([(xk, i), (yk, e - 1 - i)]));
                dk.add_term(mono, c.clone());
            }
        }
        out.push(dk);
        renamed.insert(xk, yk);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> Poly {
        Poly::var(Var(i))
    }

    #[test]
    fn square_in_one_variable() {
        let d = divided_differences(&v(0).pow(2), &[Var(0)], &[Var(1)]).unwrap();
        assert_eq!(d, vec![&v(0) + &v(1)]);
    }

    #[test]
    fn constant_has_zero_differences() {
        let d = divided_differences(&Poly::int(7), &[Var(0), Var(1)], &[Var(2), Var(3)]).unwrap();
        assert!(d.iter().all(Poly::is_zero));
    }

    #[test]
    fn product_follows_telescoping_order() {
        let f = &v(0) * &v(1);
        let d = divided_differences(&f, &[Var(0), Var(1)], &[Var(2), Var(3)]).unwrap();
        assert_eq!(d, vec![v(1), v(2)]);
        let lhs = &(&(&v(0) - &v(2)) * &d[0]) + &(&(&v(1) - &v(3)) * &d[1]);
        assert_eq!(lhs, &f - &(&v(2) * &v(3)));
    }

    #[test]
    fn arity_mismatch_is_usage_error() {
        assert!(matches!(
            divided_differences(&v(0), &[Var(0)], &[Var(1), Var(2)]),
            Err(Error::Usage(_))
        ));
        assert!(divided_differences(&v(1), &[Var(0)], &[Var(1)]).is_err());
    }
}
