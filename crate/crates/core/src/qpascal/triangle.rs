use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;
use crate::identities::{theta_series, with_sign};
use crate::polyring::{IntPoly, PolySeries};
use crate::qcore::binom2;

/// Memoised entries `<n k>_q` for `n >= -1`, `k >= 0`, defined by
///
/// `<n k> = Σ_{j=0}^{min(n,k)} q^{C(j+2,2)} <n-1-j, k-j>`
///
/// with `<n 0> = q^{n+1}` and `<-1 k> = 0` for `k > 0`.
#[derive(Debug, Default)]
pub struct QTriangle {
    memo: RwLock<HashMap<(i64, usize), IntPoly>>,
}

impl QTriangle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn entry(&self, n: i64, k: usize) -> IntPoly {
        assert!(n >= -1, "triangle rows start at n = -1");
        if k == 0 {
            return IntPoly::monomial(1, (n + 1) as usize);
        }
        if n == -1 {
            return IntPoly::zero();
        }
        if let Some(hit) = self.memo.read().expect("triangle lock poisoned").get(&(n, k)) {
            return hit.clone();
        }
        let top = (n as usize).min(k);
        let value: IntPoly = (0..=top)
            .map(|j| self.entry(n - 1 - j as i64, k - j).shift_up(binom2(j as i64 + 2) as usize))
            .sum();
        let mut memo = self.memo.write().expect("triangle lock poisoned");
        let stored = memo.entry((n, k)).or_insert_with(|| value.clone());
        assert_eq!(*stored, value, "conflicting fills of <{n} {k}>");
        value
    }

    pub fn cached(&self) -> usize {
        self.memo.read().expect("triangle lock poisoned").len()
    }
}

/// Rows `0..rows`, each with columns `0..rows`.
pub fn triangle_rows(tri: &QTriangle, rows: usize) -> Vec<Vec<IntPoly>> {
    (0..rows)
        .map(|n| (0..rows).map(|k| tri.entry(n as i64, k)).collect())
        .collect()
}

/// Rows rendered in canonical text with columns padded to a common width.
pub fn render_triangle_text(tri: &QTriangle, rows: usize) -> String {
    let cells: Vec<Vec<String>> = triangle_rows(tri, rows)
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    let widths: Vec<usize> = (0..rows)
        .map(|k| cells.iter().map(|r| r[k].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Nonzero coefficients of rows `0..rows`, row by row, entries left to
/// right, each entry in increasing exponent.
pub fn coefficient_sequence(tri: &QTriangle, rows: usize) -> Vec<BigInt> {
    let mut out = Vec::new();
    for n in 0..rows {
        for k in 0..=n {
            out.extend(tri.entry(n as i64, k).coeffs().iter().filter(|c| !c.is_zero()).cloned());
        }
    }
    out
}

/// `x^k f(qx)^k` truncated at `order`, computed with series arithmetic.
pub fn f_power_coefficients(k: usize, order: usize) -> PolySeries {
    let x_f_qx = theta_series(order).subst_qx().shift_x(1).truncate(order);
    x_f_qx.pow(k)
}

/// `q^n [x^n] (x^k f(qx)^k) == <n-1, n-k>` for every `k <= n < order`, and
/// the coefficients below `x^k` vanish.
pub fn power_identity_holds(tri: &QTriangle, k: usize, order: usize) -> bool {
    let series = f_power_coefficients(k, order);
    series.coeffs().iter().enumerate().all(|(n, c)| {
        if n < k {
            c.is_zero()
        } else {
            c.shift_up(n) == tri.entry(n as i64 - 1, n - k)
        }
    })
}

/// `u(n) = q^{-n} Σ_{k<n} (-1)^{n-k} <n-1, k>`, with the division by `q^n`
/// checked to be exact.
pub fn u_via_triangle(n: usize, tri: &QTriangle) -> Result<IntPoly> {
    assert!(n >= 1, "u_via_triangle needs n >= 1");
    let sum: IntPoly = (0..n)
        .map(|k| with_sign(tri.entry(n as i64 - 1, k), (n - k) as i64))
        .sum();
    sum.shift_down(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::u_sequence;

    fn t(terms: &[(i64, usize)]) -> IntPoly {
        terms.iter().map(|&(c, e)| IntPoly::monomial(c, e)).sum()
    }

    fn displayed_table() -> Vec<Vec<IntPoly>> {
        let z = IntPoly::zero();
        vec![
            vec![t(&[(1, 1)]), z.clone(), z.clone(), z.clone(), z.clone(), z.clone()],
            vec![t(&[(1, 2)]), t(&[(1, 3)]), z.clone(), z.clone(), z.clone(), z.clone()],
            vec![t(&[(1, 3)]), t(&[(2, 4)]), t(&[(1, 6)]), z.clone(), z.clone(), z.clone()],
            vec![t(&[(1, 4)]), t(&[(3, 5)]), t(&[(1, 6), (2, 7)]), t(&[(1, 10)]), z.clone(), z.clone()],
            vec![
                t(&[(1, 5)]),
                t(&[(4, 6)]),
                t(&[(3, 7), (3, 8)]),
                t(&[(2, 9), (2, 11)]),
                t(&[(1, 15)]),
                z.clone(),
            ],
            vec![
                t(&[(1, 6)]),
                t(&[(5, 7)]),
                t(&[(6, 8), (4, 9)]),
                t(&[(1, 9), (6, 10), (3, 12)]),
                t(&[(1, 12), (2, 13), (2, 16)]),
                t(&[(1, 21)]),
            ],
        ]
    }

    #[test]
    fn reproduces_six_by_six_table() {
        let tri = QTriangle::new();
        assert_eq!(triangle_rows(&tri, 6), displayed_table());
        assert_eq!(tri.entry(5, 3), t(&[(1, 9), (6, 10), (3, 12)]));
    }

    #[test]
    fn boundary_values() {
        let tri = QTriangle::new();
        for n in -1..10 {
            assert_eq!(tri.entry(n, 0), IntPoly::monomial(1, (n + 1) as usize));
        }
        for k in 1..6 {
            assert!(tri.entry(-1, k).is_zero());
        }
        for n in 0..10i64 {
            for k in (n as usize + 1)..12 {
                assert!(tri.entry(n, k).is_zero());
            }
        }
    }

    #[test]
    fn coefficient_prefix() {
        let tri = QTriangle::new();
        let seq = coefficient_sequence(&tri, 4);
        let expected: Vec<BigInt> = [1, 1, 1, 1, 2, 1, 1, 3, 1, 2, 1].into_iter().map(BigInt::from).collect();
        assert_eq!(seq, expected);
    }

    #[test]
    fn power_series_identity() {
        let tri = QTriangle::new();
        assert_eq!(f_power_coefficients(0, 5), PolySeries::one(5));
        for k in 0..=5 {
            assert!(power_identity_holds(&tri, k, 13), "k={k}");
        }
        let s2 = f_power_coefficients(2, 5);
        assert_eq!(s2.coeff(3).unwrap().shift_up(3), IntPoly::monomial(2, 4));
    }

    #[test]
    fn diagonal_from_k_equals_one() {
        let s1 = f_power_coefficients(1, 7);
        for n in 1..7 {
            assert_eq!(s1.coeff(n).unwrap().shift_up(n), IntPoly::monomial(1, n * (n + 1) / 2));
        }
    }

    #[test]
    fn alternating_sums() {
        let tri = QTriangle::new();
        assert_eq!(u_via_triangle(1, &tri).unwrap(), IntPoly::constant(-1));
        let u = u_sequence(13);
        for n in 1..=12 {
            assert_eq!(u_via_triangle(n, &tri).unwrap(), u.u(n as i64), "n={n}");
        }
        let u6 = t(&[(1, 0), (-5, 1), (6, 2), (3, 3), (-6, 4), (-2, 6), (2, 7), (2, 10), (-1, 15)]);
        assert_eq!(u_via_triangle(6, &tri).unwrap(), u6);
    }

    #[test]
    fn text_rendering_is_aligned() {
        let tri = QTriangle::new();
        let text = render_triangle_text(&tri, 3);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[2].starts_with("q^3  2*q^4  q^6"));
        assert!(lines[0].starts_with("q    0"));
    }

    #[test]
    fn concurrent_lookups_agree() {
        let tri = QTriangle::new();
        let reference = triangle_rows(&QTriangle::new(), 9);
        std::thread::scope(|s| {
            for _ in 0..4 {
                s.spawn(|| assert_eq!(triangle_rows(&tri, 9), reference));
            }
        });
        assert!(tri.cached() > 0);
    }
}
