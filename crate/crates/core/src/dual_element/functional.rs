use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grassmann::{top_contract, Element};
use crate::koszul::{boundary, BoundaryAssignment};
use crate::ring::{Monomial, OddFamily, Poly, Scalar, Var};

/// A linear functional on `Q[x_j]` whose values on `x_j^k` satisfy the recurrence of a monic
/// `T(x_j) = x_j^d + a_{d−1} x_j^{d−1} + … + a_0`, i.e. `l(T·q) = 0` for all `q`.
#[derive(Debug)]
pub struct Functional1D {
    var: Var,
    /// `a_0 … a_{d−1}`
    recurrence: Vec<Scalar>,
    values: Mutex<Vec<Scalar>>,
}

impl Clone for Functional1D {
    fn clone(&self) -> Self {
        Functional1D {
            var: self.var,
            recurrence: self.recurrence.clone(),
            values: Mutex::new(self.values.lock().expect("memo lock").clone()),
        }
    }
}

impl PartialEq for Functional1D {
    fn eq(&self, other: &Self) -> bool {
        self.var == other.var && self.recurrence == other.recurrence && self.initials() == other.initials()
    }
}

impl Functional1D {
    pub fn var(&self) -> Var {
        self.var
    }

    pub fn degree(&self) -> usize {
        self.recurrence.len()
    }

    pub fn recurrence(&self) -> &[Scalar] {
        &self.recurrence
    }

    pub fn initials(&self) -> Vec<Scalar> {
        self.values.lock().expect("memo lock")[..self.degree()].to_vec()
    }

    /// `l(x_j^k)`.
    pub fn eval(&self, k: u32) -> Scalar {
        let k = k as usize;
        let d = self.degree();
        let mut values = self.values.lock().expect("memo lock");
        while values.len() <= k {
            let m = values.len();
            let mut next = Scalar::zero();
            for (i, a) in self.recurrence.iter().enumerate() {
                next -= a * &values[m - d + i];
            }
            values.push(next);
        }
        values[k].clone()
    }

    pub fn with_var(&self, var: Var) -> Functional1D {
        let mut f = self.clone();
        f.var = var;
        f
    }
}

/// Builds the functional with the given values on `1, x_j, …, x_j^{d−1}`.
pub fn recurrent_functional(t: &Poly, var: Var, initials: Vec<Scalar>) -> Result<Functional1D> {
    if t.vars().iter().any(|&v| v != var) {
        return Err(Error::usage("recurrence polynomial must be univariate in the functional's variable"));
    }
    let d = t.degree_in(var);
    if d == 0 {
        return Err(Error::Precondition("recurrence polynomial must have positive degree".into()));
    }
    if !t.coeff(&Monomial::var_pow(var, d)).is_one() {
        return Err(Error::Precondition("recurrence polynomial must be monic".into()));
    }
    if initials.len() != d as usize {
        return Err(Error::usage(format!("expected {} initial values, got {}", d, initials.len())));
    }
    let recurrence = (0..d).map(|k| t.coeff(&Monomial::var_pow(var, k))).collect();
    Ok(Functional1D {
        var,
        recurrence,
        values: Mutex::new(initials),
    })
}

/// The canonical choice: zero on `1, …, x_j^{d−2}` and one on `x_j^{d−1}`.
pub fn canonical_functional(t: &Poly, var: Var) -> Result<Functional1D> {
    let d = t.degree_in(var) as usize;
    let mut initials = vec![Scalar::zero(); d];
    if let Some(last) = initials.last_mut() {
        *last = Scalar::one();
    }
    recurrent_functional(t, var, initials)
}

/// `l(x_*) = ∏_j l_j(x^j_*)`, acting on monomials coordinatewise.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductFunctional {
    factors: Vec<Functional1D>,
}

impl ProductFunctional {
    pub fn new(factors: Vec<Functional1D>) -> Self {
        ProductFunctional { factors }
    }

    pub fn factors(&self) -> &[Functional1D] {
        &self.factors
    }

    pub fn vars(&self) -> Vec<Var> {
        self.factors.iter().map(Functional1D::var).collect()
    }

    /// Pairs the functional's variables; other variables stay as polynomial coefficients.
    pub fn pair(&self, p: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in p.terms() {
            let mut value = c.clone();
            for f in &self.factors {
                value *= f.eval(m.exponent(f.var()));
                if value.is_zero() {
                    break;
                }
            }
            let rest: Vec<(Var, u32)> = m.iter().filter(|(v, _)| self.factors.iter().all(|f| f.var() != *v)).collect();
            if !value.is_zero() {
                out.add_term(Monomial::from_pairs(rest), value);
            }
        }
        out
    }

    pub fn rename(&self, map: &BTreeMap<Var, Var>) -> ProductFunctional {
        ProductFunctional {
            factors: self
                .factors
                .iter()
                .map(|f| f.with_var(map.get(&f.var()).copied().unwrap_or(f.var())))
                .collect(),
        }
    }
}

/// `Σ_T m_T(x)·l(x_*) ⊗ ω_T`: multipliers acting on a shared product functional, tensored
/// with wedge words of dual generators.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionalElement {
    l: Arc<ProductFunctional>,
    terms: Element,
}

impl FunctionalElement {
    pub fn new(l: Arc<ProductFunctional>, terms: Element) -> Self {
        FunctionalElement { l, terms }
    }

    pub fn functional(&self) -> &ProductFunctional {
        &self.l
    }

    pub fn terms(&self) -> &Element {
        &self.terms
    }

    pub fn with_terms(&self, terms: Element) -> Self {
        FunctionalElement {
            l: Arc::clone(&self.l),
            terms,
        }
    }

    /// The functional `q ↦ Σ_T l(m_T·q) ω_T`.
    pub fn evaluate(&self, q: &Poly) -> Element {
        self.terms.map_coeffs(|m| self.l.pair(&(m * q)))
    }

    /// `p` acting by adjoint multiplication: the result evaluates `q` as this evaluates `p·q`.
    pub fn adjoint_mult(&self, p: &Poly) -> Self {
        self.with_terms(self.terms.scale_poly(p))
    }

    /// Dual-side boundary: left multiplication by `−Σ_i f_i f̂^i_*`, the polynomial factors
    /// acting by adjoint multiplication.
    pub fn boundary(&self, ba: &BoundaryAssignment) -> Result<Self> {
        Ok(self.with_terms(boundary(ba, &self.terms)?))
    }

    /// Exact zero test. For each word, `α ↦ l(m·x^α)` satisfies the `T_j` recurrence in
    /// every coordinate once `α_j ≥ deg_j(m)`, so it vanishes iff it vanishes on the box
    /// `α_j < d_j + deg_j(m) + 1`.
    pub fn is_zero(&self) -> bool {
        let vars = self.l.vars();
        self.terms.terms().all(|(_, m)| {
            let extents: Vec<u32> = self
                .l
                .factors()
                .iter()
                .map(|f| f.degree() as u32 + m.degree_in(f.var()) + 1)
                .collect();
            box_points(extents).all(|alpha| {
                let mono = Monomial::from_pairs(vars.iter().copied().zip(alpha));
                self.l.pair(&m.mul_monomial(&mono, &Scalar::one())).is_zero()
            })
        })
    }

    /// Renames commuting variables (functional and multipliers) and one odd family.
    pub fn rename(&self, vars: &BTreeMap<Var, Var>, from: OddFamily, to: OddFamily) -> Self {
        FunctionalElement {
            l: Arc::new(self.l.rename(vars)),
            terms: self.terms.rename_vars(vars).rename_family(from, to),
        }
    }
}

fn box_points(extents: Vec<u32>) -> impl Iterator<Item = Vec<u32>> {
    let total: u64 = extents.iter().map(|&e| e as u64).product();
    (0..total).map(move |mut idx| {
        extents
            .iter()
            .map(|&e| {
                let v = (idx % e as u64) as u32;
                idx /= e as u64;
                v
            })
            .collect()
    })
}

/// `⊤` over `families` of `e ∧ fe`, with the functional pairing the commuting variables it covers.
pub fn functional_eval(fe: &FunctionalElement, e: &Element, families: &[OddFamily]) -> Element {
    let mut prod = e * fe.terms();
    for &f in families {
        prod = top_contract(f, &prod);
    }
    prod.map_coeffs(|p| fe.functional().pair(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::scalar::int;

    fn x() -> Poly {
        Poly::var(Var(0))
    }

    fn values(l: &Functional1D, n: u32) -> Vec<Scalar> {
        (0..n).map(|k| l.eval(k)).collect()
    }

    #[test]
    fn recurrence_examples() {
        let l = canonical_functional(&x(), Var(0)).unwrap();
        assert_eq!(values(&l, 3), vec![int(1), int(0), int(0)]);
        let l = canonical_functional(&x().pow(2), Var(0)).unwrap();
        assert_eq!(values(&l, 4), vec![int(0), int(1), int(0), int(0)]);
        let l = canonical_functional(&(&x().pow(2) - &Poly::one()), Var(0)).unwrap();
        assert_eq!(values(&l, 4), vec![int(0), int(1), int(0), int(1)]);
    }

    #[test]
    fn non_monic_rejected() {
        let t = x().pow(2).scale(&int(2));
        assert!(recurrent_functional(&t, Var(0), vec![int(0), int(1)]).is_err());
    }

    #[test]
    fn annihilator_multiple_is_zero_functional() {
        let t = &x().pow(2) - &Poly::one();
        let l = Arc::new(ProductFunctional::new(vec![canonical_functional(&t, Var(0)).unwrap()]));
        let fe = FunctionalElement::new(l, Element::scalar(&t * &(&x() + &Poly::int(3))));
        assert!(fe.is_zero());
        assert!(!fe.adjoint_mult(&Poly::one()).with_terms(Element::one()).is_zero());
    }
}
