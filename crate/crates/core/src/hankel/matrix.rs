use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polyring::IntPoly;
use crate::qcore::{entry_full, entry_trunc};

/// Dense square matrix of polynomials, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<IntPoly>,
}

impl PolyMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> IntPoly) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<IntPoly>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::BadShape(format!("row of length {} in a {n}-row matrix", bad.len())));
        }
        Ok(PolyMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { IntPoly::one() } else { IntPoly::zero() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &IntPoly {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[IntPoly]> {
        // chunks(0) panics, so an empty matrix yields no rows explicitly
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    /// Deletes row `row` and column `col`.
    pub fn minor(&self, row: usize, col: usize) -> Result<PolyMatrix> {
        if row >= self.n || col >= self.n {
            return Err(Error::IndexOutOfRange { row, col, size: self.n });
        }
        Ok(Self::from_fn(self.n - 1, |i, j| {
            let si = if i < row { i } else { i + 1 };
            let sj = if j < col { j } else { j + 1 };
            self.get(si, sj).clone()
        }))
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        Self::from_fn(self.n, |i, j| {
            (0..self.n)
                .filter(|&k| !self.get(i, k).is_zero() && !other.get(k, j).is_zero())
                .map(|k| self.get(i, k) * other.get(k, j))
                .sum()
        })
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    /// Entry `(i, j)` depends only on `i + j`.
    pub fn is_hankel(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i + 1 >= self.n || j == 0 || self.get(i, j) == self.get(i + 1, j - 1)))
    }
}

/// `{"n": .., "entries": [[poly-json, ..], ..]}`
impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[IntPoly]> = self.rows().collect();
        let mut st = serializer.serialize_struct("PolyMatrix", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("entries", &rows)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for PolyMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            entries: Vec<Vec<IntPoly>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.entries.len() != raw.n {
            return Err(serde::de::Error::custom("entries length does not match n"));
        }
        PolyMatrix::from_rows(raw.entries).map_err(serde::de::Error::custom)
    }
}

/// `d_{m,n}`: entries `q^{C(m+i+j,2)}`, `0 <= i, j < n`.
pub fn hankel_full(m: i64, n: usize) -> PolyMatrix {
    PolyMatrix::from_fn(n, |i, j| entry_full(m + (i + j) as i64))
}

/// `D_{m,n}`: entries `q^{C(m+i+j,2)}`, zero wherever `m+i+j < 0`.
pub fn hankel_trunc(m: i64, n: usize) -> PolyMatrix {
    PolyMatrix::from_fn(n, |i, j| entry_trunc(m + (i + j) as i64))
}

/// `V_{k,n}`: entries `a(k-n+i+j)` in the truncated convention; the first
/// row has exactly `k` nonzero entries.
pub fn v_matrix(k: usize, n: usize) -> Result<PolyMatrix> {
    if k < 1 || k > n {
        return Err(Error::BadShape(format!("V_{{k,n}} needs 1 <= k <= n, got k={k}, n={n}")));
    }
    Ok(hankel_trunc(k as i64 - n as i64, n))
}

/// The matrix `(q^{ij})_{i,j<n}`.
pub fn vandermonde_q_matrix(n: usize) -> PolyMatrix {
    PolyMatrix::from_fn(n, |i, j| IntPoly::monomial(1, i * j))
}
