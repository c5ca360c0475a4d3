use std::cmp::Ordering;

use serde::Serialize;

use crate::ring::{Monomial, Poly, Scalar};

/// Term orders on monomials over the global variable order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Grlex,
    Lex,
}

impl MonomialOrder {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "grevlex" => Some(Self::Grevlex),
            "grlex" => Some(Self::Grlex),
            "lex" => Some(Self::Lex),
            _ => None,
        }
    }

    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grlex => a.cmp(b),
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::Grevlex => a.degree().cmp(&b.degree()).then_with(|| revlex(a, b)),
        }
    }

    /// Leading monomial and coefficient of a nonzero polynomial.
    pub fn leading(self, p: &Poly) -> Option<(&Monomial, &Scalar)> {
        if self == MonomialOrder::Grlex {
            return p.leading();
        }
        p.terms().max_by(|x, y| self.cmp(x.0, y.0))
    }
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    let mut ia = a.iter();
    let mut ib = b.iter();
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some((va, ea)), Some((vb, eb))) => {
                if va != vb {
                    return if va < vb { Ordering::Greater } else { Ordering::Less };
                }
                if ea != eb {
                    return ea.cmp(&eb);
                }
            }
        }
    }
}

/// Among equal degrees: the monomial with the smaller exponent in the last differing
/// variable is larger.
fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    let mut ia = a.iter().collect::<Vec<_>>().into_iter().rev().peekable();
    let mut ib = b.iter().collect::<Vec<_>>().into_iter().rev().peekable();
    loop {
        match (ia.peek().copied(), ib.peek().copied()) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (Some((va, ea)), Some((vb, eb))) => {
                if va != vb {
                    // the monomial carrying the later variable has a positive exponent there
                    return if va > vb { Ordering::Less } else { Ordering::Greater };
                }
                if ea != eb {
                    return eb.cmp(&ea);
                }
                ia.next();
                ib.next();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Var;

    fn m(pairs: &[(u32, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().map(|&(v, e)| (Var(v), e)))
    }

    #[test]
    fn grevlex_vs_grlex() {
        // x1 x3 vs x2^2: grlex prefers x1 x3, grevlex prefers x2^2
        let a = m(&[(0, 1), (2, 1)]);
        let b = m(&[(1, 2)]);
        assert_eq!(MonomialOrder::Grlex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&a, &b), Ordering::Less);
    }

    #[test]
    fn lex_ignores_degree() {
        let a = m(&[(0, 1)]);
        let b = m(&[(1, 5)]);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&a, &b), Ordering::Less);
        assert_eq!(MonomialOrder::Grevlex.cmp(&a, &a), Ordering::Equal);
    }
}
