//! Exact sparse Gaussian elimination over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::ring::Scalar;

pub(crate) type SparseRow = BTreeMap<usize, Scalar>;

/// Finds one solution of `A c = b` (free unknowns set to zero), or `None` if the system is
/// inconsistent. Rows of `A` are sparse maps from column index to coefficient.
pub(crate) fn solve(rows: Vec<SparseRow>, rhs: Vec<Scalar>) -> Option<BTreeMap<usize, Scalar>> {
    debug_assert_eq!(rows.len(), rhs.len());
    // pivot column -> (row normalized to leading coefficient 1, rhs)
    let mut pivots: BTreeMap<usize, (SparseRow, Scalar)> = BTreeMap::new();
    for (mut row, mut b) in rows.into_iter().zip(rhs) {
        loop {
            let Some((&lead, _)) = row.first_key_value() else {
                if !b.is_zero() {
                    return None;
                }
                break;
            };
            match pivots.get(&lead) {
                Some((prow, pb)) => {
                    let factor = row[&lead].clone();
                    for (c, v) in prow {
                        let entry = row.entry(*c).or_insert_with(Scalar::zero);
                        *entry -= &factor * v;
                        if entry.is_zero() {
                            row.remove(c);
                        }
                    }
                    b -= &factor * pb;
                }
                None => {
                    let inv = Scalar::one() / &row[&lead];
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    b *= &inv;
                    pivots.insert(lead, (row, b));
                    break;
                }
            }
        }
    }
    let mut solution: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (&col, (row, b)) in pivots.iter().rev() {
        let mut value = b.clone();
        for (c, v) in row.range(col + 1..) {
            if let Some(x) = solution.get(c) {
                value -= v * x;
            }
        }
        if !value.is_zero() {
            solution.insert(col, value);
        }
    }
    Some(solution)
}

/// Coefficients `c` with `Σ_k c_k·columns[k] = target`, if any.
pub(crate) fn solve_dense(columns: &[Vec<Scalar>], target: &[Scalar]) -> Option<Vec<Scalar>> {
    let rows: Vec<SparseRow> = (0..target.len())
        .map(|r| {
            columns
                .iter()
                .enumerate()
                .filter(|(_, col)| !col[r].is_zero())
                .map(|(k, col)| (k, col[r].clone()))
                .collect()
        })
        .collect();
    let sol = solve(rows, target.to_vec())?;
    Some((0..columns.len()).map(|k| sol.get(&k).cloned().unwrap_or_else(Scalar::zero)).collect())
}
