//! Hankel determinants of a series `s` with `s_0 = 1` against Hankel
//! determinants of its reciprocal `t = 1/s`:
//!
//! `det(s_{i+j-M}) = (-1)^{N + C(M+1,2)} det(t_{i+j+M+2})_{i,j<N}`
//!
//! with `s_n = t_n = 0` for `n < 0`. The left matrix size is selectable; only
//! [`SizeConvention::Inclusive`] (size `N+M+1`) makes the identity hold.

use crate::error::{Error, Result};
use crate::hankel::{det_fraction_free, PolyMatrix};
use crate::polyring::{IntPoly, PolySeries};
use crate::qcore::binom2;

use super::{with_sign, USequence};

/// Side length of the left-hand matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SizeConvention {
    /// Indices `0..=N+M`, size `N+M+1`.
    Inclusive,
    /// Size `N+M`.
    Exclusive,
}

impl SizeConvention {
    pub const ALL: [SizeConvention; 2] = [SizeConvention::Inclusive, SizeConvention::Exclusive];

    pub fn lhs_size(self, m: usize, n: usize) -> usize {
        match self {
            SizeConvention::Inclusive => n + m + 1,
            SizeConvention::Exclusive => n + m,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AndrewsWimp {
    pub lhs: IntPoly,
    pub rhs: IntPoly,
    pub equal: bool,
}

fn coeff_or_zero(s: &PolySeries, idx: i64) -> Result<IntPoly> {
    if idx < 0 {
        Ok(IntPoly::zero())
    } else {
        s.coeff(idx as usize).cloned()
    }
}

fn check_order(s: &PolySeries, max_index: Option<usize>) -> Result<()> {
    match max_index {
        Some(i) if i >= s.order() => Err(Error::InsufficientOrder {
            order: s.order(),
            needed: i,
        }),
        _ => Ok(()),
    }
}

/// Both sides of the identity for shift `m` and right-hand size `n`.
pub fn andrews_wimp_pair(s: &PolySeries, m: usize, n: usize, convention: SizeConvention) -> Result<AndrewsWimp> {
    let s0 = s.coeff(0)?;
    if !s0.is_one() {
        return Err(Error::NonUnitConstantTerm(s0.clone()));
    }
    let lhs_size = convention.lhs_size(m, n);
    check_order(s, (2 * lhs_size).checked_sub(2 + m))?;
    check_order(s, (n > 0).then(|| 2 * n + m))?;
    let t = s.invert()?;

    let lhs_matrix = build(lhs_size, |i, j| coeff_or_zero(s, (i + j) as i64 - m as i64))?;
    let rhs_matrix = build(n, |i, j| coeff_or_zero(&t, (i + j + m + 2) as i64))?;
    let lhs = det_fraction_free(&lhs_matrix);
    let rhs = with_sign(det_fraction_free(&rhs_matrix), n as i64 + binom2(m as i64 + 1));
    let equal = lhs == rhs;
    Ok(AndrewsWimp { lhs, rhs, equal })
}

fn build(size: usize, mut f: impl FnMut(usize, usize) -> Result<IntPoly>) -> Result<PolyMatrix> {
    let mut rows = Vec::with_capacity(size);
    for i in 0..size {
        rows.push((0..size).map(|j| f(i, j)).collect::<Result<Vec<_>>>()?);
    }
    PolyMatrix::from_rows(rows)
}

/// The unique convention under which every `(series, m, n)` case balances,
/// or `None` if neither or both do.
pub fn detect_size_convention<'a>(
    cases: impl IntoIterator<Item = (&'a PolySeries, usize, usize)> + Clone,
) -> Result<Option<SizeConvention>> {
    let mut winners = Vec::new();
    for conv in SizeConvention::ALL {
        let mut all = true;
        for (s, m, n) in cases.clone() {
            if !andrews_wimp_pair(s, m, n, conv)?.equal {
                all = false;
                break;
            }
        }
        if all {
            winners.push(conv);
        }
    }
    Ok(match winners.as_slice() {
        [only] => Some(*only),
        _ => None,
    })
}

/// `v_{k,n+k} = (-1)^{k-1 + C(n+1,2)} det(u(i+j+n+2))_{i,j<k-1}`, the
/// theta-series case of the identity with shift `n` and size `k-1`.
pub fn v_via_u_hankel(k: usize, n: usize, u: &USequence) -> IntPoly {
    assert!(k >= 1, "v_via_u_hankel needs k >= 1");
    u_hankel(k - 1, n, u)
}

/// The same determinant taken with size `k` and sign `(-1)^{k + C(n+1,2)}`.
/// This equals `v_{k+1,n+k+1}`, not `v_{k,n+k}`.
pub fn v_via_u_hankel_as_printed(k: usize, n: usize, u: &USequence) -> IntPoly {
    u_hankel(k, n, u)
}

fn u_hankel(size: usize, n: usize, u: &USequence) -> IntPoly {
    let m = PolyMatrix::from_fn(size, |i, j| u.u((i + j + n + 2) as i64));
    with_sign(det_fraction_free(&m), size as i64 + binom2(n as i64 + 1))
}
