use crate::error::Result;
use crate::hankel::{det_fraction_free, vandermonde_q_matrix};
use crate::polyring::IntPoly;
use crate::qcore::{binom2, binom3, q_factorial};

use super::q_minus_one;

/// `Π_{j<n} [j]!`
fn superfactorial(n: usize) -> IntPoly {
    (0..n).map(q_factorial).product()
}

/// `q^{3C(n,3) + 2mC(n,2) + nC(m,2)} (q-1)^{C(n,2)} Π_{j<n} [j]!`
pub fn d_closed(m: i64, n: usize) -> IntPoly {
    let n_i = n as i64;
    let exp = 3 * binom3(n as u64) as i64 + 2 * m * binom2(n_i) + n_i * binom2(m);
    let exp = usize::try_from(exp).expect("d_{m,n} has a nonnegative q-valuation");
    q_minus_one()
        .pow(binom2(n_i) as u32)
        .shift_up(exp)
        * superfactorial(n)
}

/// `q^{C(n,3)} (q-1)^{C(n,2)} Π_{j<n} [j]!`
pub fn vandermonde_q(n: usize) -> IntPoly {
    q_minus_one()
        .pow(binom2(n as i64) as u32)
        .shift_up(binom3(n as u64) as usize)
        * superfactorial(n)
}

/// `det(q^{ij})` computed by elimination, the matrix side of [`vandermonde_q`].
pub fn vandermonde_q_det(n: usize) -> IntPoly {
    det_fraction_free(&vandermonde_q_matrix(n))
}

/// `(q-1)^k [k]!`
fn scaled_factorial(k: usize) -> IntPoly {
    q_minus_one().pow(k as u32) * q_factorial(k)
}

/// `r_{1,n} = q^{C(n+2,2)} - (q-1)^{n+1} [n+1]!`
pub fn r1_closed(n: usize) -> IntPoly {
    IntPoly::monomial(1, binom2(n as i64 + 2) as usize) - scaled_factorial(n + 1)
}

/// `r_{1,n} = Σ_{k=0}^{n} (q-1)^k [k]! q^{C(n+2,2) - C(k+2,2)}`
pub fn r1_sum(n: usize) -> IntPoly {
    let top = binom2(n as i64 + 2);
    (0..=n)
        .map(|k| scaled_factorial(k).shift_up((top - binom2(k as i64 + 2)) as usize))
        .sum()
}

/// `r_{1,n} = q^{n+1} r_{1,n-1} + (q-1)^n [n]!` from `r_{1,0} = 1`.
pub fn r1_rec(n: usize) -> IntPoly {
    (1..=n).fold(IntPoly::one(), |prev, j| prev.shift_up(j + 1) + scaled_factorial(j))
}

/// `r_{2,n} = r_{1,n}^2 + (q^{n+1} - 1) q^{n+2} r_{2,n-1}`, started from
/// `r_{2,-1} = 0` so that `r_{2,0} = r_{1,0}^2 = 1`.
pub fn r2_rec(n: usize) -> IntPoly {
    let mut r2 = r1_rec(0).pow(2);
    for j in 1..=n {
        let factor = (IntPoly::monomial(1, j + 1) - IntPoly::one()).shift_up(j + 2);
        r2 = r1_rec(j).pow(2) + factor * r2;
    }
    r2
}

/// `f(n,q) = (q-1)^{n+1} [n+1]! q^{(n+1)(n+4)/2}`, the weight in the sum
/// form of `r_{2,n}`.
pub fn r2_weight(n: usize) -> IntPoly {
    scaled_factorial(n + 1).shift_up((n + 1) * (n + 4) / 2)
}

/// `r_{2,n} = f(n) Σ_{j<=n} r_{1,j}^2 / f(j)`, kept inside `Z[q]` by
/// dividing `f(n)` by each `f(j)` exactly before summing.
pub fn r2_sum(n: usize) -> Result<IntPoly> {
    let top = r2_weight(n);
    let mut acc = IntPoly::zero();
    for j in 0..=n {
        let ratio = top.exact_div(&r2_weight(j))?;
        acc += &(r1_closed(j).pow(2) * ratio);
    }
    Ok(acc)
}
