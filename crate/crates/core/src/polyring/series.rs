use num_traits::{One, Signed};

use super::IntPoly;
use crate::error::{Error, Result};

/// Power series in `x` with `IntPoly` coefficients, known only below
/// `order`. Coefficients at `x^n` for `n >= order` are unknown, not zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySeries {
    coeffs: Vec<IntPoly>,
}

impl PolySeries {
    /// Pads with zeros or truncates so exactly `order` coefficients are kept.
    pub fn new(mut coeffs: Vec<IntPoly>, order: usize) -> Self {
        coeffs.resize(order, IntPoly::zero());
        PolySeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> IntPoly) -> Self {
        PolySeries {
            coeffs: (0..order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![IntPoly::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    /// Coefficient of `x^n`.
    pub fn coeff(&self, n: usize) -> Result<&IntPoly> {
        self.coeffs.get(n).ok_or(Error::InsufficientOrder {
            order: self.order(),
            needed: n,
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn add(&self, other: &PolySeries) -> PolySeries {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| &self.coeffs[n] + &other.coeffs[n])
    }

    pub fn sub(&self, other: &PolySeries) -> PolySeries {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| &self.coeffs[n] - &other.coeffs[n])
    }

    pub fn neg(&self) -> PolySeries {
        PolySeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cauchy product, truncated at the smaller of the two orders.
    pub fn mul(&self, other: &PolySeries) -> PolySeries {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| {
            (0..=n)
                .filter(|&i| !self.coeffs[i].is_zero() && !other.coeffs[n - i].is_zero())
                .map(|i| &self.coeffs[i] * &other.coeffs[n - i])
                .sum()
        })
    }

    pub fn pow(&self, k: usize) -> PolySeries {
        (0..k).fold(Self::one(self.order()), |acc, _| acc.mul(self))
    }

    /// Multiplies by `x^k`. The first `k` coefficients become known zeros, so
    /// the order grows by `k`.
    pub fn shift_x(&self, k: usize) -> PolySeries {
        let mut coeffs = vec![IntPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        PolySeries { coeffs }
    }

    /// The substitution `x -> q x`: coefficient `n` is multiplied by `q^n`.
    pub fn subst_qx(&self) -> PolySeries {
        PolySeries {
            coeffs: self.coeffs.iter().enumerate().map(|(n, c)| c.shift_up(n)).collect(),
        }
    }

    /// Multiplicative inverse. The constant term must be a unit of `Z[q]`,
    /// i.e. `+1` or `-1`.
    pub fn invert(&self) -> Result<PolySeries> {
        let order = self.order();
        if order == 0 {
            return Ok(Self::zero(0));
        }
        let c0 = &self.coeffs[0];
        let unit = match c0.coeffs() {
            [c] if c.abs().is_one() => c.clone(),
            _ => return Err(Error::NonUnitConstantTerm(c0.clone())),
        };
        let mut inv: Vec<IntPoly> = Vec::with_capacity(order);
        inv.push(IntPoly::constant(unit.clone()));
        // unit^{-1} == unit, so t_n = -unit * sum_{j>=1} a_j t_{n-j}
        let neg_unit = -unit;
        for n in 1..order {
            let acc: IntPoly = (1..=n)
                .filter(|&j| !self.coeffs[j].is_zero())
                .map(|j| &self.coeffs[j] * &inv[n - j])
                .sum();
            inv.push(acc.scale(&neg_unit));
        }
        Ok(PolySeries { coeffs: inv })
    }
}
