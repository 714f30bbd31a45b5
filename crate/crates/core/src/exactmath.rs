//! Exact arithmetic on numbers of the form `p + q·√3`.
//!
//! Every width, height and area of a class packing lives in the ring
//! `Z[√3]`, so comparisons between candidates can be made without any
//! rounding. Sign tests widen to `i128`; the engine keeps magnitudes far
//! below `2^40`, and every other operation is checked and panics on overflow.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

pub const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Exact value `p + q·√3`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct QuadInt {
    pub p: i64,
    pub q: i64,
}

impl QuadInt {
    pub const ZERO: QuadInt = QuadInt { p: 0, q: 0 };
    pub const ONE: QuadInt = QuadInt { p: 1, q: 0 };
    pub const SQRT3: QuadInt = QuadInt { p: 0, q: 1 };

    pub const fn new(p: i64, q: i64) -> Self {
        QuadInt { p, q }
    }

    pub const fn integer(p: i64) -> Self {
        QuadInt { p, q: 0 }
    }

    pub fn mul_scalar(self, k: i64) -> Self {
        QuadInt {
            p: self.p.checked_mul(k).expect("QuadInt overflow in mul_scalar"),
            q: self.q.checked_mul(k).expect("QuadInt overflow in mul_scalar"),
        }
    }

    /// Sign of the real number `p + q·√3`.
    ///
    /// Mixed signs are resolved by comparing `p²` with `3q²`; the two are
    /// never equal for nonzero integers since √3 is irrational.
    pub fn signum(self) -> i32 {
        let (p, q) = (self.p, self.q);
        if p == 0 && q == 0 {
            return 0;
        }
        if p >= 0 && q >= 0 {
            return 1;
        }
        if p <= 0 && q <= 0 {
            return -1;
        }
        let pp = (p as i128) * (p as i128);
        let qq = 3 * (q as i128) * (q as i128);
        if p > 0 {
            // p > 0, q < 0
            if pp > qq {
                1
            } else {
                -1
            }
        } else if qq > pp {
            1
        } else {
            -1
        }
    }

    pub fn to_f64(self) -> f64 {
        self.p as f64 + self.q as f64 * SQRT_3
    }
}

impl Add for QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: QuadInt) -> QuadInt {
        QuadInt {
            p: self.p.checked_add(rhs.p).expect("QuadInt overflow in add"),
            q: self.q.checked_add(rhs.q).expect("QuadInt overflow in add"),
        }
    }
}

impl Sub for QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: QuadInt) -> QuadInt {
        QuadInt {
            p: self.p.checked_sub(rhs.p).expect("QuadInt overflow in sub"),
            q: self.q.checked_sub(rhs.q).expect("QuadInt overflow in sub"),
        }
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt {
            p: self.p.checked_neg().expect("QuadInt overflow in neg"),
            q: self.q.checked_neg().expect("QuadInt overflow in neg"),
        }
    }
}

impl Mul for QuadInt {
    type Output = QuadInt;
    /// `(p₁ + q₁√3)(p₂ + q₂√3) = (p₁p₂ + 3q₁q₂) + (p₁q₂ + p₂q₁)√3`
    fn mul(self, rhs: QuadInt) -> QuadInt {
        let (a, b, c, d) = (
            self.p as i128,
            self.q as i128,
            rhs.p as i128,
            rhs.q as i128,
        );
        let p = a * c + 3 * b * d;
        let q = a * d + b * c;
        QuadInt {
            p: i64::try_from(p).expect("QuadInt overflow in mul"),
            q: i64::try_from(q).expect("QuadInt overflow in mul"),
        }
    }
}

impl Ord for QuadInt {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        // Widen before subtracting so the difference itself cannot overflow.
        let dp = self.p as i128 - other.p as i128;
        let dq = self.q as i128 - other.q as i128;
        match sign_wide(dp, dq) {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

impl PartialOrd for QuadInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn sign_wide(p: i128, q: i128) -> i32 {
    if p == 0 && q == 0 {
        0
    } else if p >= 0 && q >= 0 {
        1
    } else if p <= 0 && q <= 0 {
        -1
    } else {
        let pp = p.checked_mul(p).expect("QuadInt compare overflow");
        let qq = q
            .checked_mul(q)
            .and_then(|v| v.checked_mul(3))
            .expect("QuadInt compare overflow");
        if (p > 0) == (pp > qq) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p, self.q) {
            (p, 0) => write!(f, "{p}"),
            (0, q) => write!(f, "{q}√3"),
            (p, q) if q < 0 => write!(f, "{p}-{}√3", -q),
            (p, q) => write!(f, "{p}+{q}√3"),
        }
    }
}

impl Serialize for QuadInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("QuadInt", 3)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("float", &self.to_f64())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for QuadInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        // "float" is informational; accepted but not trusted.
        #[derive(Deserialize)]
        struct Raw {
            p: i64,
            q: i64,
            #[serde(default)]
            float: Option<f64>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let value = QuadInt::new(raw.p, raw.q);
        if let Some(f) = raw.float {
            let exact = value.to_f64();
            if (f - exact).abs() > 1e-6 * exact.abs().max(1.0) {
                return Err(de::Error::custom(format!(
                    "float field {f} disagrees with p + q*sqrt(3) = {exact}"
                )));
            }
        }
        Ok(value)
    }
}
