use num_traits::Zero;
use serde::Serialize;

use super::groebner::{compose_cofactors, reduce_with_cofactors, GroebnerBasis};
use super::matrix::{charpoly, Matrix};
use crate::error::{Error, Result};
use crate::koszul::monomials_up_to;
use crate::ring::{Monomial, Poly, Scalar, Var};

/// Standard monomials of a zero-dimensional ideal, ascending in the basis order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientBasis {
    #[serde(skip)]
    pub monomials: Vec<Monomial>,
}

impl QuotientBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Coordinates of a normal form in this basis.
    pub fn coordinates(&self, nf: &Poly) -> Result<Vec<Scalar>> {
        let mut out = vec![Scalar::zero(); self.monomials.len()];
        for (m, c) in nf.terms() {
            let k = self
                .monomials
                .binary_search(m)
                .map_err(|_| Error::ContractViolation("normal form leaves the standard monomials".into()))?;
            out[k] = c.clone();
        }
        Ok(out)
    }
}

/// Standard monomials over `vars`. Errors unless every variable has a pure power among the
/// leading monomials.
pub fn quotient_basis(gb: &GroebnerBasis, vars: &[Var]) -> Result<QuotientBasis> {
    let lms = gb.leading_monomials();
    let mut caps = Vec::with_capacity(vars.len());
    for (k, &v) in vars.iter().enumerate() {
        let cap = lms
            .iter()
            .filter(|m| m.vars().all(|w| w == v))
            .map(|m| m.exponent(v))
            .min()
            .ok_or_else(|| Error::NotZeroDimensional(format!("no leading monomial is a pure power of variable #{}", k + 1)))?;
        caps.push(cap);
    }
    let total: u32 = caps.iter().sum();
    let monomials: Vec<Monomial> = monomials_up_to(vars, total)
        .into_iter()
        .filter(|m| vars.iter().zip(&caps).all(|(&v, &c)| m.exponent(v) < c))
        .filter(|m| !lms.iter().any(|lm| lm.divides(m)))
        .collect();
    Ok(QuotientBasis { monomials })
}

/// Matrix of multiplication by `x_j` on the quotient: column `k` holds the normal form of
/// `x_j · monomials[k]`.
pub fn mul_matrix(gb: &GroebnerBasis, qb: &QuotientBasis, var: Var) -> Result<Matrix> {
    let n = qb.len();
    let mut m = vec![vec![Scalar::zero(); n]; n];
    let xj = Monomial::var(var);
    for (k, b) in qb.monomials.iter().enumerate() {
        let (nf, _) = reduce_with_cofactors(&Poly::term(b.mul(&xj), Scalar::from_integer(1.into())), gb);
        for (r, c) in qb.coordinates(&nf)?.into_iter().enumerate() {
            m[r][k] = c;
        }
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AnnihilatorMode {
    /// Characteristic polynomial of the multiplication matrix.
    #[default]
    Characteristic,
    /// Minimal polynomial of `x_j` in the quotient.
    Minimal,
}

/// A monic univariate `T(x_j)` in the ideal, with `T(x_j) = Σ_i f_i·g[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Annihilator {
    pub var: Var,
    /// `a_0, …, a_{d−1}, 1`.
    pub coeffs: Vec<Scalar>,
    pub poly: Poly,
    pub cofactors: Vec<Poly>,
}

impl Annihilator {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

pub fn charpoly_t(gb: &GroebnerBasis, qb: &QuotientBasis, var: Var, mode: AnnihilatorMode) -> Result<Annihilator> {
    let coeffs = match mode {
        AnnihilatorMode::Characteristic => charpoly(&mul_matrix(gb, qb, var)?),
        AnnihilatorMode::Minimal => minimal_poly(gb, qb, var)?,
    };
    let poly = univariate(var, &coeffs);
    let (nf, quotients) = reduce_with_cofactors(&poly, gb);
    if !nf.is_zero() {
        return Err(Error::ContractViolation("annihilator does not reduce to zero".into()));
    }
    Ok(Annihilator {
        var,
        cofactors: compose_cofactors(gb, &quotients),
        coeffs,
        poly,
    })
}

pub fn univariate(var: Var, coeffs: &[Scalar]) -> Poly {
    Poly::from_terms(
        coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (Monomial::var_pow(var, k as u32), c.clone())),
    )
}

/// Smallest monic `p` with `p(x_j) ≡ 0`: the first linear dependency among the normal forms
/// of `1, x_j, x_j², …`.
fn minimal_poly(gb: &GroebnerBasis, qb: &QuotientBasis, var: Var) -> Result<Vec<Scalar>> {
    let mut powers: Vec<Vec<Scalar>> = Vec::new();
    for d in 0..=qb.len() as u32 {
        let (nf, _) = reduce_with_cofactors(&Poly::term(Monomial::var_pow(var, d), Scalar::from_integer(1.into())), gb);
        let v = qb.coordinates(&nf)?;
        if let Some(comb) = express(&powers, &v) {
            let mut coeffs: Vec<Scalar> = comb.into_iter().map(|c| -c).collect();
            coeffs.push(Scalar::from_integer(1.into()));
            return Ok(coeffs);
        }
        powers.push(v);
    }
    Err(Error::ContractViolation("no dependency among powers within the quotient dimension".into()))
}

/// Coefficients `c` with `Σ c_k vs[k] = target`, if any.
fn express(vs: &[Vec<Scalar>], target: &[Scalar]) -> Option<Vec<Scalar>> {
    crate::linsolve::solve_dense(vs, target)
}
