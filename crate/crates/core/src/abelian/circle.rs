//! Exact arithmetic in the circle group `T = R/Z`.
//!
//! Every value this library ever produces on the circle is a root of unity,
//! so an element is stored as a reduced fraction `p/q` with `0 <= p < q`,
//! standing for `exp(2 pi i p/q)`. The group law is addition mod 1.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircleValue {
    num: i64,
    den: i64,
}

impl CircleValue {
    pub const ZERO: CircleValue = CircleValue { num: 0, den: 1 };

    /// `num/den mod 1`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator in circle value");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        num = num.rem_euclid(den);
        let g = num.gcd(&den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        CircleValue {
            num: i64::try_from(num).expect("circle value numerator overflow"),
            den: i64::try_from(den).expect("circle value denominator overflow"),
        }
    }

    /// The primitive `n`-th root of unity `exp(2 pi i / n)`.
    pub fn zeta(n: i64) -> Self {
        Self::new(1, n)
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Order of this element in `T`, which is the reduced denominator.
    pub fn order(&self) -> i64 {
        self.den
    }

    /// `k`-fold sum, i.e. the `k`-th power in multiplicative notation.
    pub fn pow(self, k: i64) -> Self {
        // reduce the exponent first so the product stays small
        let k = k.rem_euclid(self.den) as i128;
        Self::from_i128(self.num as i128 * k, self.den as i128)
    }

    /// Divides by a positive integer, choosing the smallest nonnegative root:
    /// the result `y` satisfies `y * k == self` and `0 <= y < 1/k`.
    pub fn principal_root(self, k: i64) -> Self {
        assert!(k > 0);
        Self::from_i128(self.num as i128, self.den as i128 * k as i128)
    }

    /// `exp(2 pi i x)` as a float pair. Only used for display.
    pub fn to_complex(self) -> (f64, f64) {
        let t = std::f64::consts::TAU * self.num as f64 / self.den as f64;
        (t.cos(), t.sin())
    }

    /// Exponent of this value as a power of `zeta(n)`, if it is an `n`-th root of unity.
    pub fn as_power_of_zeta(self, n: i64) -> Option<i64> {
        if n % self.den != 0 {
            return None;
        }
        Some(self.num * (n / self.den))
    }
}

impl Default for CircleValue {
    fn default() -> Self {
        Self::ZERO
    }
}

impl Add for CircleValue {
    type Output = CircleValue;
    fn add(self, rhs: CircleValue) -> CircleValue {
        if self.den == rhs.den {
            return Self::from_i128(self.num as i128 + rhs.num as i128, self.den as i128);
        }
        let l = self.den.lcm(&rhs.den) as i128;
        let a = self.num as i128 * (l / self.den as i128);
        let b = rhs.num as i128 * (l / rhs.den as i128);
        Self::from_i128(a + b, l)
    }
}

impl AddAssign for CircleValue {
    fn add_assign(&mut self, rhs: CircleValue) {
        *self = *self + rhs;
    }
}

impl Neg for CircleValue {
    type Output = CircleValue;
    fn neg(self) -> CircleValue {
        Self::from_i128(-(self.num as i128), self.den as i128)
    }
}

impl Sub for CircleValue {
    type Output = CircleValue;
    fn sub(self, rhs: CircleValue) -> CircleValue {
        self + (-rhs)
    }
}

impl SubAssign for CircleValue {
    fn sub_assign(&mut self, rhs: CircleValue) {
        *self = *self - rhs;
    }
}

impl Sum for CircleValue {
    fn sum<I: Iterator<Item = CircleValue>>(iter: I) -> Self {
        iter.fold(CircleValue::ZERO, |a, b| a + b)
    }
}

pub fn circle_mul(x: CircleValue, y: CircleValue) -> CircleValue {
    x + y
}

pub fn circle_pow(x: CircleValue, k: i64) -> CircleValue {
    x.pow(k)
}

impl fmt::Display for CircleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for CircleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for CircleValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 1,
            column: 1,
            message: format!("bad circle value {s:?}, expected \"p/q\""),
        };
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: i64 = n.parse().map_err(|_| bad())?;
        let d: i64 = d.parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        Ok(CircleValue::new(n, d))
    }
}

impl Serialize for CircleValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&format!("{}/{}", self.num, self.den))
    }
}

impl<'de> Deserialize<'de> for CircleValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_examples() {
        assert_eq!(circle_pow(CircleValue::new(1, 2), 2), CircleValue::ZERO);
        assert_eq!(
            circle_mul(CircleValue::new(1, 3), CircleValue::new(1, 3)),
            CircleValue::new(2, 3)
        );
        for n in [1, 2, 7, 1000, 999_983, 1_000_000] {
            assert!(circle_pow(CircleValue::zeta(n), n).is_zero());
        }
    }

    #[test]
    fn reduction_and_sign() {
        let x = CircleValue::new(-1, 4);
        assert_eq!((x.numer(), x.denom()), (3, 4));
        assert_eq!(CircleValue::new(6, -8), CircleValue::new(1, 4));
        assert_eq!(CircleValue::new(5, 5), CircleValue::ZERO);
        assert_eq!("2/6".parse::<CircleValue>().unwrap(), CircleValue::new(1, 3));
    }

    #[test]
    fn principal_root_is_minimal() {
        let x = CircleValue::new(1, 2);
        let r = x.principal_root(2);
        assert_eq!(r, CircleValue::new(1, 4));
        assert_eq!(r.pow(2), x);
    }

    fn arb_torsion(k: i64) -> impl Strategy<Value = CircleValue> {
        (0..k).prop_map(move |a| CircleValue::new(a, k))
    }

    proptest! {
        #[test]
        fn group_axioms(a in -50i64..50, b in 1i64..60, c in -50i64..50, d in 1i64..60, e in -9i64..9, f in 1i64..9) {
            let x = CircleValue::new(a, b);
            let y = CircleValue::new(c, d);
            let z = CircleValue::new(e, f);
            prop_assert_eq!((x + y) + z, x + (y + z));
            prop_assert_eq!(x + y, y + x);
            prop_assert!((x + (-x)).is_zero());
            prop_assert!(x.numer() >= 0 && x.numer() < x.denom());
        }

        #[test]
        fn torsion_sums_keep_denominator(k in 1i64..40, xs in proptest::collection::vec(0i64..1000, 1..20)) {
            let s: CircleValue = xs.iter().map(|&a| CircleValue::new(a, k)).sum();
            prop_assert_eq!(k % s.denom(), 0);
        }

        #[test]
        fn torsion_strategy_closed(x in arb_torsion(12), y in arb_torsion(12)) {
            prop_assert_eq!(12 % (x + y).denom(), 0);
        }
    }
}
