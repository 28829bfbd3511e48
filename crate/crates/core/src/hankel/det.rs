use std::collections::HashMap;

use super::PolyMatrix;
use crate::error::{Error, Result};
use crate::polyring::IntPoly;

pub const DEFAULT_ORACLE_BOUND: usize = 8;

/// Brute-force determinant by first-row Laplace expansion. Refuses matrices
/// above `bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CofactorOracle {
    pub bound: usize,
}

impl Default for CofactorOracle {
    fn default() -> Self {
        CofactorOracle {
            bound: DEFAULT_ORACLE_BOUND,
        }
    }
}

impl CofactorOracle {
    pub fn new(bound: usize) -> Self {
        CofactorOracle { bound }
    }

    pub fn accepts(&self, m: &PolyMatrix) -> bool {
        m.size() <= self.bound
    }

    pub fn det(&self, m: &PolyMatrix) -> Result<IntPoly> {
        let n = m.size();
        if n > self.bound {
            return Err(Error::OracleSizeExceeded { size: n, bound: self.bound });
        }
        if n > 63 {
            return Err(Error::OracleSizeExceeded { size: n, bound: 63 });
        }
        let mut memo = HashMap::new();
        Ok(expand(m, 0, (1u64 << n) - 1, &mut memo))
    }
}

/// Determinant of the submatrix on rows `row..n` and the columns in `cols`,
/// expanded along its first row. Sub-results are shared across branches by
/// their column set, so the cost is `O(2^n n)` products instead of `O(n!)`.
fn expand(m: &PolyMatrix, row: usize, cols: u64, memo: &mut HashMap<u64, IntPoly>) -> IntPoly {
    if cols == 0 {
        return IntPoly::one();
    }
    if let Some(hit) = memo.get(&cols) {
        return hit.clone();
    }
    let mut acc = IntPoly::zero();
    let mut position = 0usize;
    for col in 0..m.size() {
        if cols & (1 << col) == 0 {
            continue;
        }
        let a = m.get(row, col);
        if !a.is_zero() {
            let term = a * &expand(m, row + 1, cols & !(1 << col), memo);
            if position.is_multiple_of(2) {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        position += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Cofactor determinant with the default oracle bound.
pub fn det_cofactor(m: &PolyMatrix) -> Result<IntPoly> {
    CofactorOracle::default().det(m)
}

/// Bareiss fraction-free elimination. Every division is exact in `Z[q]`.
/// Zero pivots are replaced by the first nonzero entry below them, flipping
/// the sign; a column with no nonzero pivot means a zero determinant.
pub fn det_fraction_free(m: &PolyMatrix) -> IntPoly {
    let n = m.size();
    if n == 0 {
        return IntPoly::one();
    }
    let mut a: Vec<Vec<IntPoly>> = m.rows().map(<[IntPoly]>::to_vec).collect();
    let mut negate = false;
    let mut prev = IntPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return IntPoly::zero();
            };
            a.swap(k, swap);
            negate = !negate;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let mut num = pivot * &row[j];
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    num -= &(&lead * &pivot_row[j]);
                }
                row[j] = if prev.is_one() {
                    num
                } else {
                    num.exact_div(&prev)
                        .expect("Bareiss step divides exactly by the previous pivot")
                };
            }
            row[k] = IntPoly::zero();
        }
        prev = pivot.clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Which exact engine evaluates a determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DetEngine {
    #[default]
    FractionFree,
    Cofactor(CofactorOracle),
    /// Fraction-free elimination, cross-checked against the cofactor oracle
    /// whenever the matrix is within the oracle's bound.
    Checked(CofactorOracle),
}

impl DetEngine {
    pub fn det(&self, m: &PolyMatrix) -> Result<IntPoly> {
        match self {
            DetEngine::FractionFree => Ok(det_fraction_free(m)),
            DetEngine::Cofactor(oracle) => oracle.det(m),
            DetEngine::Checked(oracle) => {
                let det = det_fraction_free(m);
                if oracle.accepts(m) && oracle.det(m)? != det {
                    return Err(Error::EngineMismatch { size: m.size() });
                }
                Ok(det)
            }
        }
    }
}
