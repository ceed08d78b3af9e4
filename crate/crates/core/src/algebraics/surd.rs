//! Exact elements of a real quadratic field `Q(√d)`, kept in the canonical
//! form `(a + b√d)/c`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A quadratic surd `(a + b√d)/c`.
///
/// Canonical: `c > 0`, `gcd(a, b, c) = 1`, `d` squarefree and `> 1` when
/// `b != 0`, and `d = 1` whenever `b = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: u64,
}

impl Surd {
    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self {
            a: BigInt::from(n),
            b: BigInt::zero(),
            c: BigInt::one(),
            d: 1,
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_parts(r, BigRational::zero(), 1)
    }

    /// `(a + b√d)/c` from raw integers; `d` need not be squarefree.
    pub fn new(a: i64, b: i64, d: u64, c: i64) -> Option<Self> {
        if c == 0 || (b != 0 && d == 0) {
            return None;
        }
        let (k, m) = squarefree_split(&BigInt::from(d.max(1)));
        let p = BigRational::new(BigInt::from(a), BigInt::from(c));
        let q = BigRational::new(BigInt::from(b) * k, BigInt::from(c));
        Some(Self::from_parts(p, q, m.to_u64()?))
    }

    /// Square root of a positive integer, with square factors pulled out.
    pub fn sqrt_of_uint(n: u64) -> Self {
        let (k, m) = squarefree_split(&BigInt::from(n));
        Self::from_parts(
            BigRational::zero(),
            BigRational::from_integer(k),
            m.to_u64().expect("radicand fits in u64"),
        )
    }

    /// Builds the canonical form of `p + q√d` for squarefree `d`.
    pub(crate) fn from_parts(p: BigRational, q: BigRational, d: u64) -> Self {
        let (p, q, d) = match d {
            0 => (p, BigRational::zero(), 1),
            1 => (p + q, BigRational::zero(), 1),
            _ if q.is_zero() => (p, q, 1),
            _ => (p, q, d),
        };
        let c = p.denom().lcm(q.denom());
        let a = p.numer() * (&c / p.denom());
        let b = q.numer() * (&c / q.denom());
        let g = a.gcd(&b).gcd(&c);
        let (a, b, c) = if g.is_zero() || g.is_one() {
            (a, b, c)
        } else {
            (a / &g, b / &g, c / &g)
        };
        Self { a, b, c, d }
    }

    pub fn rational_part(&self) -> BigRational {
        BigRational::new(self.a.clone(), self.c.clone())
    }

    pub fn surd_part(&self) -> BigRational {
        BigRational::new(self.b.clone(), self.c.clone())
    }

    pub fn numerator_a(&self) -> &BigInt {
        &self.a
    }

    pub fn numerator_b(&self) -> &BigInt {
        &self.b
    }

    pub fn denominator(&self) -> &BigInt {
        &self.c
    }

    /// The radicand; `1` for rational values.
    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        (self.is_rational() && self.c.is_one()).then_some(&self.a)
    }

    /// Common radicand of two surds, if they live in the same field.
    fn common_radicand(&self, other: &Self) -> Option<u64> {
        match (self.d, other.d) {
            (1, d) | (d, 1) => Some(d),
            (d, e) if d == e => Some(d),
            _ => None,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let d = self.common_radicand(other)?;
        Some(Self::from_parts(
            self.rational_part() + other.rational_part(),
            self.surd_part() + other.surd_part(),
            d,
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        let d = self.common_radicand(other)?;
        let (p1, q1) = (self.rational_part(), self.surd_part());
        let (p2, q2) = (other.rational_part(), other.surd_part());
        let dr = BigRational::from_integer(BigInt::from(d));
        Some(Self::from_parts(
            &p1 * &p2 + &q1 * &q2 * dr,
            p1 * q2 + q1 * p2,
            d,
        ))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (p, q) = (self.rational_part(), self.surd_part());
        let dr = BigRational::from_integer(BigInt::from(self.d));
        let norm = &p * &p - &q * &q * dr;
        // d is not a perfect square, so the norm of a nonzero element is nonzero
        Some(Self::from_parts(p / &norm, -q / norm, self.d))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        self.checked_mul(&other.recip()?)
    }

    pub fn neg(&self) -> Self {
        Self {
            a: -&self.a,
            b: -&self.b,
            c: self.c.clone(),
            d: self.d,
        }
    }

    /// Exact sign.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.sign_cmp();
        let sb = self.b.sign_cmp();
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (s, t) if s == t => s,
            (sa, _) => {
                let a2 = &self.a * &self.a;
                let b2d = &self.b * &self.b * BigInt::from(self.d);
                // |a| vs |b|√d decides; the sign of the larger magnitude wins
                match a2.cmp(&b2d) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Exact comparison when both values share a field.
    pub fn checked_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.checked_sub(other)?.signum())
    }

    pub fn to_f64(&self) -> f64 {
        let a = big_to_f64(&self.a);
        let b = big_to_f64(&self.b);
        let c = big_to_f64(&self.c);
        if self.b.is_zero() {
            return a / c;
        }
        let s = (self.d as f64).sqrt();
        // keep the cancelling sum accurate for values like (1 - √5)/2
        let (x, y) = (a, b * s);
        if x.signum() != y.signum() && x != 0.0 {
            let norm = &self.a * &self.a - &self.b * &self.b * BigInt::from(self.d);
            big_to_f64(&norm) / (x - y) / c
        } else {
            (x + y) / c
        }
    }

    /// Exact square root of a nonnegative surd when it is itself a surd.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.signum() == Ordering::Less {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.is_rational() {
            // √(a/c) = √(a c)/c
            let ac = &self.a * &self.c;
            let (k, m) = squarefree_split(&ac);
            return Some(Self::from_parts(
                BigRational::zero(),
                BigRational::new(k, self.c.clone()),
                m.to_u64()?,
            ));
        }
        // (u + v√d)² = x + y√d  ⇒  u² + d v² = x, 2uv = y
        let x = self.rational_part();
        let y = self.surd_part();
        let dr = BigRational::from_integer(BigInt::from(self.d));
        let disc = &x * &x - &y * &y * &dr;
        let r = rational_sqrt(&disc)?;
        let two = BigRational::from_integer(BigInt::from(2));
        for u2 in [(&x + &r) / &two, (&x - &r) / &two] {
            if u2.is_positive() {
                if let Some(u) = rational_sqrt(&u2) {
                    let v = &y / (&two * &u);
                    let cand = Self::from_parts(u, v, self.d);
                    if cand.signum() != Ordering::Less {
                        return Some(cand);
                    }
                    return Some(cand.neg());
                }
            }
        }
        None
    }
}

impl fmt::Display for Surd {
    /// Renders in a form accepted by the value parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return if self.c.is_one() {
                write!(f, "{}", self.a)
            } else {
                write!(f, "{}/{}", self.a, self.c)
            };
        }
        let mut num = String::new();
        if !self.a.is_zero() {
            num.push_str(&self.a.to_string());
            num.push(if self.b.is_negative() { '-' } else { '+' });
        } else if self.b.is_negative() {
            num.push('-');
        }
        let b = self.b.abs();
        if !b.is_one() {
            num.push_str(&format!("{b}*"));
        }
        num.push_str(&format!("sqrt({})", self.d));
        if self.c.is_one() {
            write!(f, "{num}")
        } else if self.a.is_zero() {
            write!(f, "{num}/{}", self.c)
        } else {
            write!(f, "({num})/{}", self.c)
        }
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

fn big_to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Splits `n >= 0` as `k² m` with `m` squarefree. Returns `(k, m)`.
pub(crate) fn squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    let mut m = n.abs();
    let mut k = BigInt::one();
    if m.is_zero() {
        return (BigInt::zero(), BigInt::one());
    }
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        let p2 = &p * &p;
        while (&m % &p2).is_zero() {
            m /= &p2;
            k *= &p;
        }
        p += 1;
    }
    (k, m)
}

/// Square root of a nonnegative rational when it is rational.
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}
