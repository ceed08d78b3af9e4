//! Character values: exact quadratic surds where possible, decimals otherwise.

mod parse;
mod surd;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use parse::parse_value;
pub use surd::Surd;

/// Comparison tolerances.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub abs_eps: f64,
    pub rel_eps: f64,
    pub integrality_eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs_eps: 1e-9,
            rel_eps: 1e-9,
            integrality_eps: 1e-6,
        }
    }
}

impl Tolerance {
    pub fn new(abs_eps: f64, rel_eps: f64, integrality_eps: f64) -> Result<Self> {
        for (name, v) in [
            ("abs_eps", abs_eps),
            ("rel_eps", rel_eps),
            ("integrality_eps", integrality_eps),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Domain(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(Self {
            abs_eps,
            rel_eps,
            integrality_eps,
        })
    }

    pub fn close(&self, x: f64, y: f64) -> bool {
        (x - y).abs() <= self.abs_eps + self.rel_eps * x.abs().max(y.abs())
    }
}

/// A real number that is either an exact surd or a floating approximation.
#[derive(Debug, Clone, PartialEq)]
pub enum Real {
    Exact(Surd),
    Approx(f64),
}

impl Real {
    pub fn zero() -> Self {
        Real::Exact(Surd::zero())
    }

    pub fn from_integer(n: i64) -> Self {
        Real::Exact(Surd::from_integer(n))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Real::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Exact(s) => s.to_f64(),
            Real::Approx(x) => *x,
        }
    }

    pub fn as_surd(&self) -> Option<&Surd> {
        match self {
            Real::Exact(s) => Some(s),
            Real::Approx(_) => None,
        }
    }

    /// Exactly zero on the exact path; bit-zero on the approximate path.
    pub fn is_zero(&self) -> bool {
        match self {
            Real::Exact(s) => s.is_zero(),
            Real::Approx(x) => *x == 0.0,
        }
    }

    fn combine(
        &self,
        other: &Self,
        exact: impl Fn(&Surd, &Surd) -> Option<Surd>,
        approx: impl Fn(f64, f64) -> f64,
    ) -> Self {
        if let (Real::Exact(a), Real::Exact(b)) = (self, other) {
            if let Some(s) = exact(a, b) {
                return Real::Exact(s);
            }
        }
        Real::Approx(approx(self.to_f64(), other.to_f64()))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, Surd::checked_add, |x, y| x + y)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, Surd::checked_sub, |x, y| x - y)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.combine(other, Surd::checked_mul, |x, y| x * y)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        Ok(self.combine(other, Surd::checked_div, |x, y| x / y))
    }

    pub fn neg(&self) -> Self {
        match self {
            Real::Exact(s) => Real::Exact(s.neg()),
            Real::Approx(x) => Real::Approx(-x),
        }
    }

    pub fn abs(&self) -> Self {
        match self {
            Real::Exact(s) => Real::Exact(s.abs()),
            Real::Approx(x) => Real::Approx(x.abs()),
        }
    }

    /// Exact ordering when both sides share a field, float ordering otherwise.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        if let (Real::Exact(a), Real::Exact(b)) = (self, other) {
            if let Some(o) = a.checked_cmp(b) {
                return o;
            }
        }
        self.to_f64().total_cmp(&other.to_f64())
    }

    fn sqrt(&self) -> Self {
        match self {
            Real::Exact(s) => match s.sqrt_exact() {
                Some(r) => Real::Exact(r),
                None => Real::Approx(s.to_f64().sqrt()),
            },
            Real::Approx(x) => Real::Approx(x.sqrt()),
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Exact(s) => write!(f, "{s}"),
            Real::Approx(x) => write!(f, "{x:?}"),
        }
    }
}

/// A character value `re + im·i`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraicValue {
    re: Real,
    im: Real,
}

impl AlgebraicValue {
    pub fn new(re: Real, im: Real) -> Self {
        Self { re, im }
    }

    pub fn real(re: Real) -> Self {
        Self::new(re, Real::zero())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::real(Real::from_integer(n))
    }

    pub fn from_surd(s: Surd) -> Self {
        Self::real(Real::Exact(s))
    }

    pub fn from_f64(x: f64) -> Self {
        Self::real(Real::Approx(x))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn imaginary_unit() -> Self {
        Self::new(Real::zero(), Real::from_integer(1))
    }

    pub fn re(&self) -> &Real {
        &self.re
    }

    pub fn im(&self) -> &Real {
        &self.im
    }

    pub fn is_exact(&self) -> bool {
        self.re.is_exact() && self.im.is_exact()
    }

    /// True when the imaginary part is (exactly) zero.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn to_complex(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// Modulus as a float.
    pub fn modulus_f64(&self) -> f64 {
        let (x, y) = self.to_complex();
        x.hypot(y)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), self.im.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.re.neg(), self.im.neg())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.re.add(&other.re), self.im.add(&other.im))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.re.sub(&other.re), self.im.sub(&other.im))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_real() && other.is_real() {
            return Self::real(self.re.mul(&other.re));
        }
        let re = self.re.mul(&other.re).sub(&self.im.mul(&other.im));
        let im = self.re.mul(&other.im).add(&self.im.mul(&other.re));
        Self::new(re, im)
    }

    pub fn scale(&self, k: i64) -> Self {
        self.mul(&Self::from_integer(k))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_real() {
            return Ok(Self::new(self.re.div(&other.re)?, self.im.div(&other.re)?));
        }
        let denom = other.norm_sqr();
        let num = self.mul(&other.conj());
        Ok(Self::new(num.re.div(&denom)?, num.im.div(&denom)?))
    }

    /// `re² + im²`.
    pub fn norm_sqr(&self) -> Real {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn approximate(&self) -> Self {
        Self::new(
            Real::Approx(self.re.to_f64()),
            Real::Approx(self.im.to_f64()),
        )
    }
}

impl fmt::Display for AlgebraicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "({})i", self.im);
        }
        write!(f, "{} + ({})i", self.re, self.im)
    }
}

/// Modulus `√(re² + im²)`; exact when the square root stays in a quadratic field.
pub fn abs_value(v: &AlgebraicValue) -> AlgebraicValue {
    if v.is_real() {
        return AlgebraicValue::real(v.re.abs());
    }
    match v.norm_sqr() {
        norm @ Real::Exact(_) => AlgebraicValue::real(norm.sqrt()),
        Real::Approx(_) => AlgebraicValue::from_f64(v.modulus_f64()),
    }
}

/// `x^t` for a nonnegative real `x` and `t >= 0`, with `0^0 = 1` and `0^t = 0` for `t > 0`.
pub fn pow_real(x: &AlgebraicValue, t: f64) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::Domain(format!(
            "exponent must be nonnegative, got {t}"
        )));
    }
    if !x.is_real() && x.im().to_f64() != 0.0 {
        return Err(Error::Domain(format!("{x} is not real")));
    }
    if x.re().cmp_value(&Real::zero()) == Ordering::Less {
        return Err(Error::Domain(format!("negative base {x}")));
    }
    let base = x.re().to_f64();
    Ok(if base == 0.0 {
        if t == 0.0 {
            1.0
        } else {
            0.0
        }
    } else if t == 0.0 {
        1.0
    } else {
        base.powf(t)
    })
}

/// Equality of canonical forms when both sides are exact, tolerance otherwise.
pub fn equal_within(v: &AlgebraicValue, w: &AlgebraicValue, tol: &Tolerance) -> bool {
    if v.is_exact() && w.is_exact() {
        return v == w;
    }
    let (vx, vy) = v.to_complex();
    let (wx, wy) = w.to_complex();
    let dist = (vx - wx).hypot(vy - wy);
    dist <= tol.abs_eps + tol.rel_eps * v.modulus_f64().max(w.modulus_f64())
}
