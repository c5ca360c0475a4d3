//! Dense exact matrices and characteristic polynomials.

use num_traits::{One, Zero};

use crate::ring::Scalar;

/// Row-major square matrix.
pub type Matrix = Vec<Vec<Scalar>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![Scalar::zero(); m]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

/// `Σ_k coeffs[k]·M^k` (coefficients in ascending degree).
pub fn eval_poly_at(coeffs: &[Scalar], m: &Matrix) -> Matrix {
    let n = m.len();
    let mut acc = vec![vec![Scalar::zero(); n]; n];
    // Horner
    for c in coeffs.iter().rev() {
        acc = mat_mul(&acc, m);
        for (i, row) in acc.iter_mut().enumerate() {
            row[i] += c;
        }
    }
    acc
}

pub fn is_zero_matrix(m: &Matrix) -> bool {
    m.iter().all(|row| row.iter().all(Zero::is_zero))
}

/// Characteristic polynomial `det(λI − M)` as ascending coefficients (monic, length n+1),
/// via similarity reduction to upper Hessenberg form.
pub fn charpoly(m: &Matrix) -> Vec<Scalar> {
    let n = m.len();
    let mut h = m.clone();
    for col in 0..n.saturating_sub(2) {
        let Some(piv) = (col + 1..n).find(|&r| !h[r][col].is_zero()) else {
            continue;
        };
        if piv != col + 1 {
            h.swap(piv, col + 1);
            for row in h.iter_mut() {
                row.swap(piv, col + 1);
            }
        }
        for r in col + 2..n {
            if h[r][col].is_zero() {
                continue;
            }
            let factor = &h[r][col] / &h[col + 1][col];
            // row_r -= factor·row_{col+1}
            let pivot = h[col + 1].clone();
            for (v, pv) in h[r].iter_mut().zip(&pivot) {
                *v -= &factor * pv;
            }
            // col_{col+1} += factor·col_r keeps the similarity
            for row in h.iter_mut() {
                let delta = &factor * &row[r];
                row[col + 1] += delta;
            }
        }
    }
    // p_k = (λ − h_kk) p_{k−1} − Σ_{i<k} h_{ik} (∏_{j=i+1..k} h_{j,j−1}) p_{i−1}
    let mut p: Vec<Vec<Scalar>> = vec![vec![Scalar::one()]];
    for k in 0..n {
        let mut next = vec![Scalar::zero(); k + 2];
        for (d, c) in p[k].iter().enumerate() {
            next[d + 1] += c;
            next[d] -= &h[k][k] * c;
        }
        let mut prod = Scalar::one();
        for i in (0..k).rev() {
            prod *= &h[i + 1][i];
            if prod.is_zero() {
                break;
            }
            let coef = &h[i][k] * &prod;
            for (d, c) in p[i].iter().enumerate() {
                next[d] -= &coef * c;
            }
        }
        p.push(next);
    }
    p.pop().expect("non-empty")
}
