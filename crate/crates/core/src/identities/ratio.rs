//! `r_{m,n}` as a ratio of truncated Hankel determinants, and the `V`
//! determinants expressed through it.

use crate::error::Result;
use crate::hankel::{hankel_trunc, DetEngine};
use crate::polyring::IntPoly;
use crate::qcore::{binom2, q_factorial};

use super::{q_minus_one, with_sign, RTable, Route, USequence};

/// `r_{m,n} = (-1)^{C(m+1,2)} D_{-m,m+n+1} / (q^{m C(n,2)} D_{0,n+1})`,
/// the reference definition every other route is checked against.
pub fn r_def(m: usize, n: usize) -> Result<IntPoly> {
    r_def_with(m, n, &DetEngine::FractionFree)
}

pub fn r_def_with(m: usize, n: usize, engine: &DetEngine) -> Result<IntPoly> {
    let num = engine.det(&hankel_trunc(-(m as i64), m + n + 1))?;
    let den = engine.det(&hankel_trunc(0, n + 1))?;
    let num = with_sign(num, binom2(m as i64 + 1));
    num.shift_down(m * binom2(n as i64) as usize)?.exact_div(&den)
}

/// `v_{k,size} = det D_{k-size,size}`. For `1 <= k <= size` this is
/// `det V_{k,size}`; other `k` are needed by condensation.
pub fn v_det(k: i64, size: usize, engine: &DetEngine) -> Result<IntPoly> {
    engine.det(&hankel_trunc(k - size as i64, size))
}

/// `v_{k,n+k} = (-1)^{C(n+1,2)} q^{(n+k)C(k-1,2)} r_{n,k-1} (q-1)^{C(k,2)} Π_{j<k} [j]!`
pub fn v_closed(k: usize, n: usize) -> Result<IntPoly> {
    assert!(k >= 1, "v_closed needs k >= 1");
    let r = r_def(n, k - 1)?;
    let shift = (n + k) * binom2(k as i64 - 1) as usize;
    let tail: IntPoly = (0..k).map(q_factorial).product();
    let body = r.shift_up(shift) * q_minus_one().pow(binom2(k as i64) as u32) * tail;
    Ok(with_sign(body, binom2(n as i64 + 1)))
}

/// `r_{m,1} = u(m+2) / (1 - q)`.
pub fn rm1_via_u(m: usize, u: &USequence) -> Result<IntPoly> {
    u.u(m as i64 + 2).exact_div(&IntPoly::from_i64s(&[1, -1]))
}

/// Sign exponent `e(n)` in `v_{2,n} = (-1)^{e(n)} u(n)`. Fixed against the
/// cofactor oracle for `2 <= n <= 9`: `e(n) = C(n+1,2)`, so the sign is
/// `+` for `n ≡ 0, 3` and `-` for `n ≡ 1, 2 (mod 4)`.
pub fn v2_sign_exponent(n: usize) -> i64 {
    binom2(n as i64 + 1)
}

/// `v_{2,n}` from the series-inversion route.
pub fn v2_via_u(n: usize, u: &USequence) -> IntPoly {
    assert!(n >= 2, "v_{{2,n}} needs n >= 2");
    with_sign(u.u(n as i64), v2_sign_exponent(n))
}

/// Overall sign of the condensation step for `r_{m,n}`. Fixed against
/// [`r_def`] for `0 <= m <= 3`, `2 <= n <= 5`.
pub const R_STEP_SIGN: i64 = 1;

/// `r_{m,n} = (r_{m,n-1} r_{m+2,n-1} - r_{m+1,n-1}^2) / ((q^n - 1) q^{m+n+1} r_{m+2,n-2})`
pub fn r_step(m: usize, n: usize, table: &RTable) -> Result<IntPoly> {
    assert!(n >= 2, "r_step needs n >= 2");
    let a = table.require(m, n - 1)?;
    let b = table.require(m + 1, n - 1)?;
    let c = table.require(m + 2, n - 1)?;
    let base = table.require(m + 2, n - 2)?;
    let num = &a * &c - b.pow(2);
    let den = (IntPoly::monomial(1, n) - IntPoly::one()) * base;
    let quot = num.shift_down(m + n + 1)?.exact_div(&den)?;
    Ok(quot.scale(&R_STEP_SIGN.into()))
}

/// `r_{m,n}` without any determinant: `r_{m,0} = 1`, `r_{m,1}` from the
/// series inversion, and the condensation step above that. Intermediate
/// values are recorded in `table`.
pub fn r_condensation(m: usize, n: usize, u: &USequence, table: &RTable) -> Result<IntPoly> {
    if let Some(hit) = table.get(m, n) {
        return Ok(hit);
    }
    let (value, route) = match n {
        0 => (IntPoly::one(), Route::ClosedForm),
        1 => (rm1_via_u(m, u)?, Route::SeriesInversion),
        _ => {
            for (mm, nn) in [(m, n - 1), (m + 1, n - 1), (m + 2, n - 1), (m + 2, n - 2)] {
                r_condensation(mm, nn, u, table)?;
            }
            (r_step(m, n, table)?, Route::Condensation)
        }
    };
    table.insert(m, n, route, value.clone())?;
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hankel::{det_cofactor, v_matrix, CofactorOracle};
    use crate::identities::{r1_closed, r2_rec, u_sequence};

    #[test]
    fn r_def_small_values() {
        for n in 0..6 {
            assert_eq!(r_def(0, n).unwrap(), IntPoly::one());
        }
        assert_eq!(r_def(1, 0).unwrap(), IntPoly::one());
        assert_eq!(r_def(1, 1).unwrap(), IntPoly::from_i64s(&[-1, 1, 1]));
        assert_eq!(r_def(1, 4).unwrap(), r1_closed(4));
        assert_eq!(r_def(2, 1).unwrap(), r2_rec(1));
    }

    #[test]
    fn engines_give_same_r() {
        let oracle = DetEngine::Cofactor(CofactorOracle::default());
        for m in 0..3 {
            for n in 0..3 {
                assert_eq!(r_def_with(m, n, &oracle).unwrap(), r_def(m, n).unwrap());
            }
        }
    }

    #[test]
    fn v_closed_matches_determinant() {
        for k in 1..=3 {
            for n in 0..=4 {
                let direct = det_cofactor(&v_matrix(k, n + k).unwrap()).unwrap();
                assert_eq!(v_closed(k, n).unwrap(), direct, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn v1_sign() {
        // v_{1,n+1} = (-1)^{C(n+1,2)}
        for n in 0..=6usize {
            let expected = with_sign(IntPoly::one(), binom2(n as i64 + 1));
            assert_eq!(v_closed(1, n).unwrap(), expected);
            assert_eq!(det_cofactor(&v_matrix(1, n + 1).unwrap()).unwrap(), expected);
        }
    }

    #[test]
    fn v2_and_v3_special_cases() {
        for m in 0..=4usize {
            let sign = binom2(m as i64 + 1);
            let v2 = with_sign(r_def(m, 1).unwrap() * q_minus_one(), sign);
            assert_eq!(v_closed(2, m).unwrap(), v2);
            let v3 = with_sign(
                r_def(m, 2).unwrap().shift_up(m + 3) * q_minus_one().pow(3) * IntPoly::from_i64s(&[1, 1]),
                sign,
            );
            assert_eq!(v_closed(3, m).unwrap(), v3);
        }
    }

    #[test]
    fn v2_sign_from_oracle() {
        let u = u_sequence(10);
        assert_eq!(det_cofactor(&v_matrix(2, 2).unwrap()).unwrap(), IntPoly::from_i64s(&[-1, 1]));
        let oracle = CofactorOracle::new(9);
        for n in 2..=9 {
            let det = oracle.det(&v_matrix(2, n).unwrap()).unwrap();
            assert_eq!(det.abs_coeffs(), u.u(n as i64).abs_coeffs());
            assert_eq!(det, v2_via_u(n, &u), "n={n}");
        }
    }

    #[test]
    fn rm1_list() {
        let u = u_sequence(10);
        assert_eq!(rm1_via_u(0, &u).unwrap(), IntPoly::one());
        assert_eq!(rm1_via_u(2, &u).unwrap(), IntPoly::from_i64s(&[1, -2, -1, 1, 1, 1]));
        assert_eq!(
            rm1_via_u(3, &u).unwrap(),
            IntPoly::from_i64s(&[-1, 3, 0, -3, -1, -1, 1, 1, 1, 1])
        );
    }

    #[test]
    fn r_step_reproduces_definition() {
        let table = RTable::new();
        for m in 0..=3 {
            for n in 0..=2 {
                table.insert(m, n, Route::DeterminantRatio, r_def(m, n).unwrap()).unwrap();
            }
        }
        for m in 0..=1 {
            let got = r_step(m, 2, &table).unwrap();
            assert_eq!(got, table.get(m, 2).unwrap());
        }
        assert!(r_step(3, 2, &table).is_err());
    }

    #[test]
    fn determinant_free_route() {
        let u = u_sequence(12);
        let table = RTable::new();
        for m in 0..=2 {
            for n in 0..=3 {
                assert_eq!(r_condensation(m, n, &u, &table).unwrap(), r_def(m, n).unwrap(), "m={m} n={n}");
            }
        }
        assert_eq!(table.routes(0, 3), vec![Route::Condensation]);
    }
}
