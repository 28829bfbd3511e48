//! Residuals of the Desnanot–Jacobi (Dodgson condensation) identity for the
//! truncated Hankel and `V` families. A zero residual means the identity holds.

use crate::error::Result;
use crate::hankel::{hankel_trunc, DetEngine};
use crate::polyring::IntPoly;

use super::ratio::v_det;

/// `D_{m,n+2} D_{m+2,n} - D_{m+2,n+1} D_{m,n+1} + D_{m+1,n+1}^2`
pub fn condensation_check_d(m: i64, n: usize, engine: &DetEngine) -> Result<IntPoly> {
    let d = |m: i64, n: usize| engine.det(&hankel_trunc(m, n));
    Ok(d(m, n + 2)? * d(m + 2, n)? - d(m + 2, n + 1)? * d(m, n + 1)? + d(m + 1, n + 1)?.pow(2))
}

/// `v_{k,n+k} v_{k,n+k-2} - v_{k-1,n+k-1} v_{k+1,n+k-1} + v_{k,n+k-1}^2`
pub fn condensation_check_v(k: usize, n: usize, engine: &DetEngine) -> Result<IntPoly> {
    assert!(k >= 1 && n >= 1, "condensation_check_v needs k >= 1 and n >= 1");
    let v = |k: usize, size: usize| v_det(k as i64, size, engine);
    Ok(v(k, n + k)? * v(k, n + k - 2)? - v(k - 1, n + k - 1)? * v(k + 1, n + k - 1)?
        + v(k, n + k - 1)?.pow(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hankel::CofactorOracle;

    #[test]
    fn truncated_family_condenses() {
        let oracle = DetEngine::Cofactor(CofactorOracle::default());
        for (m, n) in [(-1, 2), (0, 1), (-2, 3)] {
            assert!(condensation_check_d(m, n, &oracle).unwrap().is_zero(), "m={m} n={n}");
        }
    }

    #[test]
    fn v_family_condenses() {
        let oracle = DetEngine::Cofactor(CofactorOracle::default());
        for (k, n) in [(2, 3), (1, 2), (3, 2)] {
            assert!(condensation_check_v(k, n, &oracle).unwrap().is_zero(), "k={k} n={n}");
        }
    }

    #[test]
    fn broken_identity_leaves_residual() {
        // flipping the last sign must not cancel
        let e = DetEngine::FractionFree;
        let d = |m: i64, n: usize| e.det(&hankel_trunc(m, n)).unwrap();
        let wrong = d(-1, 4) * d(1, 2) - d(1, 3) * d(-1, 3) - d(0, 3).pow(2);
        assert!(!wrong.is_zero());
    }
}
