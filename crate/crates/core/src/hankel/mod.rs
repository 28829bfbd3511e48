//! Hankel matrix families over `Z[q]` and exact determinant engines.
//!
//! * `hankel_full(m, n)`: `d_{m,n}`, entries `q^{C(m+i+j,2)}` for all indices.
//! * `hankel_trunc(m, n)`: `D_{m,n}`, the same with negative indices set to 0.
//! * `v_matrix(k, n)`: `V_{k,n} = D_{k-n,n}`, anti-triangular for `k = 1`.

mod det;
mod matrix;

pub use det::{det_cofactor, det_fraction_free, CofactorOracle, DetEngine, DEFAULT_ORACLE_BOUND};
pub use matrix::{hankel_full, hankel_trunc, v_matrix, vandermonde_q_matrix, PolyMatrix};

/// `M * claimed` is the identity, exactly.
pub fn adjugate_inverse_check(m: &PolyMatrix, claimed: &PolyMatrix) -> bool {
    m.size() == claimed.size() && m.mul(claimed).is_identity()
}
