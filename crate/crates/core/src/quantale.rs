//! The Lawvere quantale `([0, ∞], min, +)`.
//!
//! Values are exact nonnegative rationals or `∞`. The derived `Ord` is the
//! numeric order (`∞` largest); the quantale order [`LValue::leq_l`] is its
//! reverse, so `∞` is the bottom element and `0` the top.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LValue {
    Finite(BigRational),
    Infinite,
}

impl LValue {
    pub fn zero() -> Self {
        LValue::Finite(BigRational::zero())
    }

    pub fn infinity() -> Self {
        LValue::Infinite
    }

    /// Fails on negative input.
    pub fn finite(r: BigRational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::InvalidValue(format!("{r} is negative")));
        }
        Ok(LValue::Finite(r))
    }

    pub fn from_integer(n: u64) -> Self {
        LValue::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`; panics if `denom` is zero.
    pub fn ratio(numer: u64, denom: u64) -> Self {
        LValue::Finite(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, LValue::Infinite)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, LValue::Finite(r) if r.is_zero())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            LValue::Finite(r) => Some(r),
            LValue::Infinite => None,
        }
    }

    /// Quantale addition: the minimum.
    pub fn oplus(&self, other: &LValue) -> LValue {
        self.min(other).clone()
    }

    /// Quantale multiplication: ordinary addition, `∞` absorbing.
    pub fn otimes(&self, other: &LValue) -> LValue {
        match (self, other) {
            (LValue::Finite(a), LValue::Finite(b)) => LValue::Finite(a + b),
            _ => LValue::Infinite,
        }
    }

    /// `n`-fold quantale product, i.e. `n · self`; `0 · ∞ = 0`.
    pub fn scale(&self, n: u64) -> LValue {
        if n == 0 {
            return LValue::zero();
        }
        match self {
            LValue::Finite(r) => LValue::Finite(r * BigRational::from_integer(BigInt::from(n))),
            LValue::Infinite => LValue::Infinite,
        }
    }

    /// `self ≤_𝕃 other`, which holds when `other ≤ self` numerically.
    pub fn leq_l(&self, other: &LValue) -> bool {
        other <= self
    }

    /// Truncated subtraction `self ⊖ x = max(self − x, 0)`, the internal hom
    /// of 𝕃. `∞ ⊖ finite = ∞`, `y ⊖ ∞ = 0`.
    pub fn trunc_sub(&self, x: &LValue) -> LValue {
        match (self, x) {
            (_, LValue::Infinite) => LValue::zero(),
            (LValue::Infinite, LValue::Finite(_)) => LValue::Infinite,
            (LValue::Finite(y), LValue::Finite(x)) => {
                if y > x {
                    LValue::Finite(y - x)
                } else {
                    LValue::zero()
                }
            }
        }
    }
}

/// Minimum of an iterator of values; `∞` when empty.
pub fn min_all<'a>(values: impl IntoIterator<Item = &'a LValue>) -> LValue {
    values
        .into_iter()
        .min()
        .cloned()
        .unwrap_or(LValue::Infinite)
}

impl Default for LValue {
    fn default() -> Self {
        LValue::zero()
    }
}

impl fmt::Display for LValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LValue::Infinite => f.write_str("inf"),
            LValue::Finite(r) if r.is_integer() => write!(f, "{}", r.numer()),
            LValue::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for LValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LValue::Infinite => f.write_str("∞"),
            other => write!(f, "{other}"),
        }
    }
}

impl FromStr for LValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "inf" | "infinity" | "∞" | "Infinity") {
            return Ok(LValue::Infinite);
        }
        let bad = || Error::InvalidValue(format!("{s:?} is not a nonnegative rational or \"inf\""));
        let r = match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(s.parse().map_err(|_| bad())?),
        };
        LValue::finite(r)
    }
}

impl Serialize for LValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match serde_json::Value::deserialize(deserializer)? {
            serde_json::Value::String(s) => s.parse().map_err(D::Error::custom),
            serde_json::Value::Number(n) if n.is_u64() => Ok(LValue::from_integer(n.as_u64().unwrap())),
            other => Err(D::Error::custom(format!(
                "expected a nonnegative integer, \"p/q\" or \"inf\", got {other}"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> LValue {
        s.parse().unwrap()
    }

    #[test]
    fn oplus_examples() {
        assert_eq!(v("3").oplus(&v("5")), v("3"));
        assert_eq!(v("7/2").oplus(&LValue::Infinite), v("7/2"));
        assert_eq!(v("0").oplus(&v("0")), v("0"));
    }

    #[test]
    fn otimes_examples() {
        assert_eq!(v("2").otimes(&v("3")), v("5"));
        assert_eq!(v("2/3").otimes(&LValue::Infinite), LValue::Infinite);
        assert_eq!(v("2/3").otimes(&LValue::zero()), v("2/3"));
        assert_eq!(v("1/2").otimes(&v("1/3")), v("5/6"));
    }

    #[test]
    fn order_examples() {
        assert!(v("5").leq_l(&v("2")));
        assert!(!v("2").leq_l(&v("5")));
        assert!(LValue::Infinite.leq_l(&v("0")));
        assert!(LValue::Infinite.leq_l(&LValue::Infinite));
        assert!(v("3").leq_l(&v("3")));
    }

    #[test]
    fn trunc_sub_examples() {
        assert_eq!(v("7").trunc_sub(&v("3")), v("4"));
        assert_eq!(v("3").trunc_sub(&v("7")), v("0"));
        assert_eq!(LValue::Infinite.trunc_sub(&v("3")), LValue::Infinite);
        assert_eq!(v("3").trunc_sub(&LValue::Infinite), v("0"));
        assert_eq!(LValue::Infinite.trunc_sub(&LValue::Infinite), v("0"));
    }

    #[test]
    fn scale_and_min() {
        assert_eq!(v("3/2").scale(4), v("6"));
        assert_eq!(LValue::Infinite.scale(0), v("0"));
        assert_eq!(min_all(&[v("2"), v("1/2")]), v("1/2"));
        assert_eq!(min_all(&[]), LValue::Infinite);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(v("6/4").to_string(), "3/2");
        assert_eq!(v("4/2").to_string(), "2");
        assert_eq!(v("inf"), LValue::Infinite);
        assert!("-1".parse::<LValue>().is_err());
        assert!("-1/2".parse::<LValue>().is_err());
        assert!("1/0".parse::<LValue>().is_err());
        assert!("1.5".parse::<LValue>().is_err());
        assert_eq!(serde_json::to_string(&v("3/2")).unwrap(), r#""3/2""#);
        assert_eq!(serde_json::from_str::<LValue>("3").unwrap(), v("3"));
        assert_eq!(serde_json::from_str::<LValue>(r#""inf""#).unwrap(), LValue::Infinite);
        assert!(serde_json::from_str::<LValue>("-3").is_err());
        assert!(serde_json::from_str::<LValue>("1.5").is_err());
    }
}
