use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::QTriangle;
use crate::error::{Error, Result};
use crate::polyring::IntPoly;

/// Weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The partitioned integer.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn first(&self) -> Option<u32> {
        self.parts.first().copied()
    }
}

/// Parts joined by commas, e.g. `3,2,1`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joined: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        f.write_str(&joined.join(","))
    }
}

/// All partitions of `n` whose largest part is exactly `k`, in decreasing
/// lexicographic order: `(3,3), (3,2,1), (3,1,1,1)` for `n = 6, k = 3`.
pub fn partitions_first_part(n: u32, k: u32) -> Vec<Partition> {
    if k == 0 || k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut stack = vec![k];
    descend(n - k, k, &mut stack, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        stack.push(part);
        descend(remaining - part, part, stack, out);
        stack.pop();
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `w(λ) = Π_i C(λ_i, λ_{i+1}) · q^{Σ_i i λ_i}` with 1-based positions.
pub fn partition_weight(lambda: &Partition) -> IntPoly {
    let coef: BigInt = lambda
        .parts
        .windows(2)
        .map(|w| binomial(w[0], w[1]))
        .product();
    let ex: usize = lambda
        .parts
        .iter()
        .enumerate()
        .map(|(i, &p)| (i + 1) * p as usize)
        .sum();
    IntPoly::monomial(coef, ex)
}

/// `<n k> == Σ_{λ ∈ P(n+1, n+1-k)} w(λ)`.
pub fn conjecture_check(n: u32, k: u32, tri: &QTriangle) -> bool {
    assert!(k <= n, "conjecture_check needs k <= n");
    let sum: IntPoly = partitions_first_part(n + 1, n + 1 - k)
        .iter()
        .map(partition_weight)
        .sum();
    sum == tri.entry(i64::from(n), k as usize)
}
