use crate::polyring::{Degree, IntPoly, PolySeries};
use crate::qcore::{binom2, entry_full};

/// `f(x) = Σ_{n<order} q^{C(n,2)} x^n`.
pub fn theta_series(order: usize) -> PolySeries {
    PolySeries::from_fn(order, |n| entry_full(n as i64))
}

/// The coefficients `u(n, q)` of `1 / f(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct USequence {
    entries: Vec<IntPoly>,
}

impl USequence {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[IntPoly] {
        &self.entries
    }

    /// `u(n, q)`; zero for negative `n`. Panics past the computed range.
    pub fn u(&self, n: i64) -> IntPoly {
        if n < 0 {
            return IntPoly::zero();
        }
        self.entries
            .get(n as usize)
            .cloned()
            .unwrap_or_else(|| panic!("u({n}) requested but only {} terms computed", self.len()))
    }

    pub fn get(&self, n: usize) -> Option<&IntPoly> {
        self.entries.get(n)
    }

    /// `deg u(n) == C(n,2)` for every computed term.
    pub fn degree_law_holds(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(n, u)| u.degree() == Degree::Finite(binom2(n as i64) as usize))
    }

    /// `Σ_{j<=n} u(n-j) q^{C(j,2)} == 0` for every computed `n > 0`.
    pub fn convolution_holds(&self) -> bool {
        (1..self.len()).all(|n| {
            (0..=n)
                .map(|j| self.entries[n - j].shift_up(binom2(j as i64) as usize))
                .sum::<IntPoly>()
                .is_zero()
        })
    }
}

/// `u(0) .. u(count-1)` by inverting the truncated theta series.
pub fn u_sequence(count: usize) -> USequence {
    let entries = theta_series(count)
        .invert()
        .expect("theta series has constant term 1")
        .coeffs()
        .to_vec();
    USequence { entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_terms() {
        let u = u_sequence(7);
        let expected: [&[i64]; 7] = [
            &[1],
            &[-1],
            &[1, -1],
            &[-1, 2, 0, -1],
            &[1, -3, 1, 2, 0, 0, -1],
            &[-1, 4, -3, -3, 2, 0, 2, 0, 0, 0, -1],
            &[1, -5, 6, 3, -6, 0, -2, 2, 0, 0, 2, 0, 0, 0, 0, -1],
        ];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(u.u(n as i64), IntPoly::from_i64s(e), "u({n})");
        }
        assert!(u.u(-1).is_zero());
    }

    #[test]
    fn invariants_through_twelve() {
        let u = u_sequence(13);
        assert!(u.degree_law_holds());
        assert!(u.convolution_holds());
    }
}
