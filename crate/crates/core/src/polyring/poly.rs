use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which sorts below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense univariate polynomial in `q` with arbitrary-precision integer
/// coefficients. `coeffs[i]` is the coefficient of `q^i`; the last entry is
/// never zero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The polynomial `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            len => Degree::Finite(len - 1),
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplies by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Exact division by `q^k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        match self.valuation() {
            None => Ok(Self::zero()),
            Some(v) if v >= k => Ok(IntPoly {
                coeffs: self.coeffs[k..].to_vec(),
            }),
            Some(_) => {
                let divisor = Self::monomial(1, k);
                let remainder = Self::from_coeffs(self.coeffs[..k].to_vec());
                Err(Error::NonExactDivision {
                    dividend: self.clone(),
                    divisor,
                    remainder,
                })
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_i64(&self, at: i64) -> BigInt {
        self.eval(&BigInt::from(at))
    }

    /// Long division returning `(quotient, remainder)` with the remainder's
    /// degree below the divisor's. Stops early, with a nonzero remainder, as
    /// soon as a leading coefficient fails to divide over the integers.
    pub fn div_rem(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let lead = divisor.leading_coeff().ok_or(Error::DivisionByZero)?;
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dlen + 1];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                // not divisible in Z[q]; hand back what is left
                return Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)));
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &c * d;
            }
            quot[shift] = c;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient `self / divisor`. Any nonzero remainder is an error.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let (quot, rem) = self.div_rem(divisor)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::NonExactDivision {
                dividend: self.clone(),
                divisor: divisor.clone(),
                remainder: rem,
            })
        }
    }

    /// Coefficientwise absolute value.
    pub fn abs_coeffs(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(Signed::abs).collect(),
        }
    }

    /// Canonical JSON form: decimal strings from exponent 0 upward.
    pub fn to_json_coeffs(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_json_coeffs<S: AsRef<str>>(coeffs: &[S]) -> Result<Self> {
        coeffs
            .iter()
            .map(|s| {
                s.as_ref()
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("{:?}: {e}", s.as_ref())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_coeffs)
    }
}

fn add_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::from_coeffs(add_slices(&self.coeffs, &rhs.coeffs))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.coeffs.clone();
        if out.len() < rhs.coeffs.len() {
            out.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (o, r) in out.iter_mut().zip(&rhs.coeffs) {
            *o -= r;
        }
        IntPoly::from_coeffs(out)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(mut self) -> IntPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (o, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *o += r;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * &p)
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        IntPoly::constant(c)
    }
}

impl PartialOrd for IntPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top down. Only used to give
/// reports a stable order.
impl Ord for IntPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

/// Canonical text form, terms in increasing exponent: `-1 + 2*q - q^3`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (exp, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            match (exp, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match exp {
                0 => {}
                1 => f.write_str("q")?,
                e => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Parses the canonical text form. Also tolerates repeated exponents,
/// arbitrary term order and missing spaces.
impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty input".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut acc = IntPoly::zero();
        for term in terms {
            acc += &parse_term(term).ok_or_else(|| Error::Parse(format!("bad term {term:?}")))?;
        }
        Ok(acc)
    }
}

fn parse_term(term: &str) -> Option<IntPoly> {
    let (sign, body) = match term.as_bytes().first()? {
        b'+' => (1, &term[1..]),
        b'-' => (-1, &term[1..]),
        _ => (1, term),
    };
    if body.is_empty() {
        return None;
    }
    let (coeff_part, var_part) = match body.find('q') {
        None => (body, None),
        Some(pos) => {
            let coeff = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
            if pos > 0 && coeff.len() == body[..pos].len() {
                return None;
            }
            (coeff, Some(&body[pos + 1..]))
        }
    };
    let coeff: BigInt = if coeff_part.is_empty() {
        BigInt::one()
    } else {
        if !coeff_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        coeff_part.parse().ok()?
    };
    let exp = match var_part {
        None => 0,
        Some("") => 1,
        Some(rest) => rest.strip_prefix('^')?.parse().ok()?,
    };
    Some(IntPoly::monomial(coeff * sign, exp))
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_coeffs().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        IntPoly::from_json_coeffs(&raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn basic_products() {
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
        assert_eq!(&p(&[1, -1]) * &p(&[1, 1, 1]), p(&[1, 0, 0, -1]));
        assert_eq!(&IntPoly::zero() + &p(&[3, 0, 2]), p(&[3, 0, 2]));
        assert_eq!(p(&[1, 2]) - p(&[1, 2]), IntPoly::zero());
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        let x = p(&[1, 2, 0, 0]);
        assert_eq!(x.coeffs().len(), 2);
        assert_eq!(p(&[0, 0]), IntPoly::zero());
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[-1, 0, 1]).exact_div(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        // u(3) / (1 - q) = r_{1,1}
        let u3 = p(&[-1, 2, 0, -1]);
        assert_eq!(u3.exact_div(&p(&[1, -1])).unwrap(), p(&[-1, 1, 1]));
        let err = p(&[1, 0, 1]).exact_div(&p(&[-1, 1])).unwrap_err();
        match err {
            Error::NonExactDivision { remainder, .. } => assert_eq!(remainder, p(&[2])),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(p(&[1]).exact_div(&IntPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn non_monic_divisor() {
        let b = p(&[1, 2]);
        let c = p(&[3, -1, 4]);
        assert_eq!((&b * &c).exact_div(&b).unwrap(), c);
        assert!(p(&[1, 1]).exact_div(&p(&[0, 2])).is_err());
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[-1, 1, 1]).eval_i64(2), BigInt::from(5));
        assert_eq!(IntPoly::zero().eval_i64(17), BigInt::from(0));
        let u4 = p(&[1, -3, 1, 2, 0, 0, -1]);
        assert_eq!(u4.eval_i64(2), BigInt::from(-49));
    }

    #[test]
    fn degrees() {
        assert_eq!(p(&[-1, 0, 0, 1]).degree(), Degree::Finite(3));
        assert_eq!(IntPoly::zero().degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn monomial_shifts() {
        let x = p(&[0, 0, 3, 1]);
        assert_eq!(x.shift_down(2).unwrap(), p(&[3, 1]));
        assert!(x.shift_down(3).is_err());
        assert_eq!(x.shift_down(2).unwrap().shift_up(2), x);
    }

    #[test]
    fn canonical_text() {
        assert_eq!(p(&[-1, 2, 0, -1]).to_string(), "-1 + 2*q - q^3");
        assert_eq!(p(&[-1, 1, 1]).to_string(), "-1 + q + q^2");
        assert_eq!(p(&[1, -1]).to_string(), "1 - q");
        assert_eq!(p(&[0, 0, 0, 0, 0, 0, -7]).to_string(), "-7*q^6");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn parse_canonical_text() {
        for s in ["-1 + 2*q - q^3", "0", "q", "-q", "5", "1 - 5*q + 6*q^2 - q^15"] {
            assert_eq!(s.parse::<IntPoly>().unwrap().to_string(), s);
        }
        assert_eq!("q^2 + q^2".parse::<IntPoly>().unwrap(), p(&[0, 0, 2]));
        assert!("2q".parse::<IntPoly>().is_err());
        assert!("q^".parse::<IntPoly>().is_err());
        assert!("".parse::<IntPoly>().is_err());
    }

    #[test]
    fn json_form() {
        let x = p(&[-1, 0, 12]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"["-1","0","12"]"#);
        assert_eq!(serde_json::from_str::<IntPoly>(&s).unwrap(), x);
        assert_eq!(serde_json::to_string(&IntPoly::zero()).unwrap(), "[]");
    }

    #[test]
    fn power() {
        let qm1 = p(&[-1, 1]);
        assert_eq!(qm1.pow(0), IntPoly::one());
        assert_eq!(qm1.pow(2), p(&[1, -2, 1]));
        assert_eq!(qm1.pow(5).eval_i64(3), BigInt::from(32));
    }
}
