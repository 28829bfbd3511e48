//! q-integers, q-factorials and the two conventions for the Hankel entry
//! sequence `a(n) = q^{C(n,2)}`.

use crate::polyring::IntPoly;

/// `m(m-1)/2` for any integer `m`. Never negative.
pub fn binom2(m: i64) -> i64 {
    m * (m - 1) / 2
}

/// `n(n-1)(n-2)/6`.
pub fn binom3(n: u64) -> u64 {
    if n < 3 {
        return 0;
    }
    n * (n - 1) * (n - 2) / 6
}

/// `[n] = 1 + q + ... + q^{n-1}`.
pub fn q_int(n: usize) -> IntPoly {
    IntPoly::from_i64s(&vec![1; n])
}

/// `[n]! = [1][2]...[n]`, with `[0]! = 1`.
pub fn q_factorial(n: usize) -> IntPoly {
    (1..=n).map(q_int).product()
}

/// `q^{C(n,2)}` for every integer `n`; negative indices stay nonzero.
pub fn entry_full(n: i64) -> IntPoly {
    IntPoly::monomial(1, binom2(n) as usize)
}

/// `q^{C(n,2)}` for `n >= 0` and zero for negative `n`.
pub fn entry_trunc(n: i64) -> IntPoly {
    if n < 0 {
        IntPoly::zero()
    } else {
        entry_full(n)
    }
}
