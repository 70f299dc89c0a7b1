//! Exact arithmetic in the cyclotomic field Q(ζ₇₂).
//!
//! Every value is stored in canonical form: its coordinates over the power
//! basis `1, ζ, …, ζ²³` after reduction modulo the 72nd cyclotomic
//! polynomial. Two values are equal exactly when their coordinate vectors
//! are equal, so `PartialEq` is decidable field equality.
//!
//! The field contains every root of unity of order dividing 72 together
//! with `√2 = ζ₈ − ζ₈³`, which is all the S-matrix data needs.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::linalg;

/// The global conductor N.
pub const CONDUCTOR: u32 = 72;
/// φ(72), the dimension of Q(ζ₇₂) over Q.
pub const DEGREE: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("order {order} does not divide the conductor {CONDUCTOR}")]
    NonDivisorOrder { order: u32 },
    #[error("conductor mismatch: expected {expected}, found {found}")]
    ConductorMismatch { expected: u32, found: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("√{n} is not representable in Q(ζ_{CONDUCTOR})")]
    NotRepresentable { n: u64 },
    #[error("malformed cyclotomic value: {0}")]
    Malformed(String),
}

/// Integer coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n > 0);
    // x^n - 1
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = BigInt::from(-1);
    poly[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        poly = divide_exact(&poly, &cyclotomic_polynomial(d));
    }
    poly
}

/// Exact division of integer polynomials by a monic divisor.
fn divide_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for shift in (0..quot.len()).rev() {
        let lead = rem[shift + dd].clone();
        if lead.is_zero() {
            continue;
        }
        for (k, c) in den.iter().enumerate() {
            rem[shift + k] -= &lead * c;
        }
        quot[shift] = lead;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    quot
}

/// Nonzero low-order terms of Φ₇₂ as `(degree, coefficient)`, so that
/// ζ²⁴ = −Σ coefficient·ζ^degree.
fn reduction_terms() -> &'static [(usize, BigRational)] {
    static TERMS: OnceLock<Vec<(usize, BigRational)>> = OnceLock::new();
    TERMS.get_or_init(|| {
        let phi = cyclotomic_polynomial(CONDUCTOR);
        assert_eq!(phi.len(), DEGREE + 1);
        phi.iter()
            .take(DEGREE)
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| (d, BigRational::from_integer(c.clone())))
            .collect()
    })
}

/// Folds a dense coefficient vector of any length into canonical form.
fn reduce(mut dense: Vec<BigRational>) -> Vec<BigRational> {
    let terms = reduction_terms();
    while dense.len() > DEGREE {
        let top = dense.pop().expect("nonempty");
        if top.is_zero() {
            continue;
        }
        let base = dense.len() - DEGREE;
        for (d, c) in terms {
            dense[base + d] -= &top * c;
        }
    }
    dense.resize(DEGREE, BigRational::zero());
    dense
}

/// An exact element of Q(ζ₇₂) in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { coeffs: vec![BigRational::zero(); DEGREE] }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut z = Self::zero();
        z.coeffs[0] = r;
        z
    }

    /// The rational `num/den`. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Builds a value from power-basis coordinates, reducing if more than
    /// `DEGREE` are given.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        Cyclotomic { coeffs: reduce(coeffs) }
    }

    /// ζ₇₂^k for any integer k.
    pub fn zeta_power(k: i64) -> Self {
        let e = k.rem_euclid(CONDUCTOR as i64) as usize;
        zeta_table()[e].clone()
    }

    /// e^{2πi·power/order}. The order must divide the conductor.
    pub fn root_of_unity(order: u32, power: i64) -> Result<Self, CycloError> {
        if order == 0 || !CONDUCTOR.is_multiple_of(order) {
            return Err(CycloError::NonDivisorOrder { order });
        }
        let step = (CONDUCTOR / order) as i64;
        Ok(Self::zeta_power(power.rem_euclid(order as i64) * step))
    }

    /// The positive square root of `n`, for `n` a perfect square or twice
    /// one. √2 is `ζ₈ − ζ₈³`.
    pub fn sqrt_rational(n: u64) -> Result<Self, CycloError> {
        if n == 0 {
            return Err(CycloError::NotRepresentable { n });
        }
        if let Some(r) = exact_isqrt(n) {
            return Ok(Self::from_integer(r as i64));
        }
        if n.is_multiple_of(2) {
            if let Some(r) = exact_isqrt(n / 2) {
                let sqrt2 = Self::root_of_unity(8, 1)? - Self::root_of_unity(8, 3)?;
                return Ok(sqrt2.scale(&BigRational::from_integer(BigInt::from(r))));
            }
        }
        Err(CycloError::NotRepresentable { n })
    }

    pub fn conductor(&self) -> u32 {
        CONDUCTOR
    }

    /// Power-basis coordinates, length `DEGREE`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value if every non-constant coordinate vanishes.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Image under the automorphism ζ ↦ ζ⁻¹ (complex conjugation).
    pub fn conjugate(&self) -> Self {
        let mut dense = vec![BigRational::zero(); CONDUCTOR as usize];
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let e = (CONDUCTOR as usize - k) % CONDUCTOR as usize;
            dense[e] += c;
        }
        Cyclotomic { coeffs: reduce(dense) }
    }

    /// Multiplicative inverse, found by solving the 24×24 rational system
    /// for multiplication by `self`.
    pub fn inverse(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        // Column j of the multiplication matrix is self·ζ^j.
        let columns: Vec<Cyclotomic> = (0..DEGREE).map(|j| self * &Self::zeta_power(j as i64)).collect();
        let matrix: Vec<Vec<BigRational>> = (0..DEGREE)
            .map(|row| columns.iter().map(|col| col.coeffs[row].clone()).collect())
            .collect();
        let mut rhs = vec![BigRational::zero(); DEGREE];
        rhs[0] = BigRational::one();
        let solution = linalg::solve(matrix, rhs).ok_or(CycloError::DivisionByZero)?;
        Ok(Cyclotomic { coeffs: solution })
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclotomic { coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Floating-point image under ζ ↦ e^{2πi/72}. Display and sanity
    /// checks only.
    pub fn approx(&self) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / CONDUCTOR as f64;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), theta)
            })
            .sum()
    }

    /// Writes `self` as `r·ζ₇₂^m` with `r > 0` rational, if possible.
    /// The exponent is in `0..72`.
    pub fn as_scaled_root(&self) -> Option<(BigRational, u32)> {
        if self.is_zero() {
            return None;
        }
        (0..CONDUCTOR).find_map(|m| {
            let r = (self * &Self::zeta_power(-(m as i64))).as_rational()?;
            r.is_positive().then_some((r, m))
        })
    }
}

fn zeta_table() -> &'static [Cyclotomic] {
    static TABLE: OnceLock<Vec<Cyclotomic>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..CONDUCTOR as usize)
            .map(|e| {
                let mut dense = vec![BigRational::zero(); e + 1];
                dense[e] = BigRational::one();
                Cyclotomic { coeffs: reduce(dense) }
            })
            .collect()
    })
}

fn exact_isqrt(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&c| c * c == n)
}

fn mul_impl(a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
    let lhs: Vec<(usize, &BigRational)> = a.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    let rhs: Vec<(usize, &BigRational)> = b.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    if lhs.is_empty() || rhs.is_empty() {
        return Cyclotomic::zero();
    }
    let mut dense = vec![BigRational::zero(); 2 * DEGREE - 1];
    for &(i, x) in &lhs {
        for &(j, y) in &rhs {
            dense[i + j] += x * y;
        }
    }
    Cyclotomic { coeffs: reduce(dense) }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        mul_impl(self, rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> std::iter::Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

/// Sum of nonzero terms `c·ζ^k`, e.g. `1/2 + ζ^9 - ζ^27`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "ζ^{k}")?,
                (_, false) => write!(f, "{mag}·ζ^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Integer written as a JSON number when it fits in i64, else a string.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Small(i64),
    Big(String),
}

impl JsonInt {
    fn from_big(n: &BigInt) -> Self {
        n.to_i64().map(JsonInt::Small).unwrap_or_else(|| JsonInt::Big(n.to_string()))
    }

    fn to_big(&self) -> Result<BigInt, CycloError> {
        match self {
            JsonInt::Small(n) => Ok(BigInt::from(*n)),
            JsonInt::Big(s) => s.parse().map_err(|_| CycloError::Malformed(format!("bad integer {s:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CycloJson {
    conductor: u32,
    coeffs: Vec<(JsonInt, JsonInt)>,
    #[serde(default)]
    approx: Option<(f64, f64)>,
}

impl Cyclotomic {
    fn to_json_repr(&self) -> CycloJson {
        let z = self.approx();
        CycloJson {
            conductor: CONDUCTOR,
            coeffs: self.coeffs.iter().map(|c| (JsonInt::from_big(c.numer()), JsonInt::from_big(c.denom()))).collect(),
            approx: Some((z.re, z.im)),
        }
    }

    fn from_json_repr(repr: CycloJson) -> Result<Self, CycloError> {
        if repr.conductor != CONDUCTOR {
            return Err(CycloError::ConductorMismatch { expected: CONDUCTOR, found: repr.conductor });
        }
        if repr.coeffs.len() != DEGREE {
            return Err(CycloError::Malformed(format!("expected {DEGREE} coefficients, got {}", repr.coeffs.len())));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|(n, d)| {
                let d = d.to_big()?;
                if d.is_zero() {
                    return Err(CycloError::Malformed("zero denominator".into()));
                }
                Ok(BigRational::new(n.to_big()?, d))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Cyclotomic { coeffs })
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json_repr().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CycloJson::deserialize(deserializer)?;
        Cyclotomic::from_json_repr(repr).map_err(serde::de::Error::custom)
    }
}

/// Reduces `num/den` and returns it as a pair with positive denominator.
pub fn reduced_fraction(num: i64, den: i64) -> (i64, i64) {
    let g = num.gcd(&den).max(1);
    let (n, d) = (num / g, den / g);
    if d < 0 {
        (-n, -d)
    } else {
        (n, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(order: u32, power: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(order, power).unwrap()
    }

    #[test]
    fn phi72_is_sparse() {
        // Φ72(x) = Φ6(x^12) = x^24 - x^12 + 1
        let phi = cyclotomic_polynomial(72);
        let nonzero: Vec<(usize, i64)> =
            phi.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(d, c)| (d, c.to_i64().unwrap())).collect();
        assert_eq!(nonzero, vec![(0, 1), (12, -1), (24, 1)]);
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        let as_i64 = |n| cyclotomic_polynomial(n).iter().map(|c| c.to_i64().unwrap()).collect::<Vec<_>>();
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(as_i64(9), vec![1, 0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn roots_of_unity_basics() {
        assert!(z(72, 0).is_one());
        assert_eq!(z(2, 1), Cyclotomic::from_integer(-1));
        assert_eq!(z(3, 1) + z(3, 2), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn non_divisor_order_rejected() {
        assert_eq!(Cyclotomic::root_of_unity(5, 1), Err(CycloError::NonDivisorOrder { order: 5 }));
        assert_eq!(Cyclotomic::root_of_unity(0, 1), Err(CycloError::NonDivisorOrder { order: 0 }));
    }

    #[test]
    fn sqrt2_squared() {
        // (ζ8 - ζ8^3)^2 = ζ8^2 - 2ζ8^4 + ζ8^6 = i + 2 - i = 2
        let s = z(8, 1) - z(8, 3);
        assert_eq!(&s * &s, Cyclotomic::from_integer(2));
        assert_eq!((&s * &s).as_rational(), Some(BigRational::from_integer(2.into())));
    }

    #[test]
    fn inverse_roots_multiply_to_one() {
        assert!((z(18, 1) * z(18, 17)).is_one());
    }

    #[test]
    fn conjugation() {
        assert_eq!(z(9, 1).conjugate(), z(9, 8));
        let r = Cyclotomic::ratio(3, 2);
        assert_eq!(r.conjugate(), r);
    }

    #[test]
    fn inverses() {
        let s2 = Cyclotomic::sqrt_rational(2).unwrap();
        assert!((s2.inverse().unwrap() * &s2).is_one());
        assert!(Cyclotomic::one().inverse().unwrap().is_one());
        assert_eq!(Cyclotomic::ratio(-1, 4).inverse().unwrap(), Cyclotomic::from_integer(-4));
        assert_eq!(Cyclotomic::zero().inverse(), Err(CycloError::DivisionByZero));
        let x = z(9, 2) + Cyclotomic::from_integer(3) - z(72, 7);
        assert!((x.inverse().unwrap() * x).is_one());
    }

    #[test]
    fn square_roots() {
        let s18 = Cyclotomic::sqrt_rational(18).unwrap();
        assert_eq!(&s18 * &s18, Cyclotomic::from_integer(18));
        assert_eq!(Cyclotomic::sqrt_rational(4).unwrap(), Cyclotomic::from_integer(2));
        let s2 = Cyclotomic::sqrt_rational(2).unwrap().approx();
        assert!((s2.re - std::f64::consts::SQRT_2).abs() < 1e-12 && s2.im.abs() < 1e-12);
        assert_eq!(Cyclotomic::sqrt_rational(3), Err(CycloError::NotRepresentable { n: 3 }));
        assert_eq!(Cyclotomic::sqrt_rational(0), Err(CycloError::NotRepresentable { n: 0 }));
        for n in [8u64, 72, 9, 50] {
            let s = Cyclotomic::sqrt_rational(n).unwrap();
            assert_eq!(&s * &s, Cyclotomic::from_integer(n as i64));
            assert!(s.approx().re > 0.0);
        }
    }

    #[test]
    fn as_rational_cases() {
        assert_eq!((Cyclotomic::one() + z(3, 1) + z(3, 2)).as_rational(), Some(BigRational::zero()));
        assert_eq!(z(9, 1).as_rational(), None);
    }

    #[test]
    fn scaled_root_recognition() {
        let x = z(9, -1).scale(&BigRational::new(3.into(), 2.into()));
        let (r, m) = x.as_scaled_root().unwrap();
        assert_eq!(r, BigRational::new(3.into(), 2.into()));
        assert_eq!(m, 64);
        assert_eq!(Cyclotomic::from_integer(-2).as_scaled_root(), Some((BigRational::from_integer(2.into()), 36)));
        assert_eq!((Cyclotomic::one() + z(3, 1)).as_scaled_root().map(|(_, m)| m), Some(12));
        assert_eq!((Cyclotomic::one() + z(9, 1)).as_scaled_root(), None);
        assert_eq!((Cyclotomic::from_integer(2) + z(9, 1)).as_scaled_root(), None);
    }

    #[test]
    fn json_round_trip() {
        let x = z(9, 4) - Cyclotomic::ratio(1, 3);
        let s = serde_json::to_string(&x).unwrap();
        let back: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn json_rejects_wrong_conductor() {
        let mut v: serde_json::Value = serde_json::to_value(Cyclotomic::one()).unwrap();
        v["conductor"] = 36.into();
        let err = serde_json::from_value::<Cyclotomic>(v).unwrap_err();
        assert!(err.to_string().contains("conductor mismatch"));
    }

    #[test]
    fn display_terms() {
        assert_eq!(Cyclotomic::zero().to_string(), "0");
        assert_eq!((Cyclotomic::ratio(-1, 2) + z(72, 3)).to_string(), "-1/2 + ζ^3");
    }
}
