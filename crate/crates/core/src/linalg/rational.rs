use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// An exact fraction, always in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RationalScalar(BigRational);

impl RationalScalar {
    /// Panics when `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        RationalScalar(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(v: i64) -> Self {
        RationalScalar(BigRational::from_integer(v.into()))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Self {
        RationalScalar(BigRational::new(num, den))
    }

    pub fn zero() -> Self {
        RationalScalar(BigRational::zero())
    }

    pub fn one() -> Self {
        RationalScalar(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// True iff the reduced denominator is 1.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        RationalScalar(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        RationalScalar(self.0.recip())
    }

    /// `self * 2^k` for any integer `k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        let shift = k.unsigned_abs() as usize;
        if k >= 0 {
            RationalScalar(BigRational::new(self.numer() << shift, self.denom().clone()))
        } else {
            RationalScalar(BigRational::new(self.numer().clone(), self.denom() << shift))
        }
    }

    /// Bits in numerator plus bits in denominator.
    pub fn bit_size(&self) -> u64 {
        self.numer().bits() + self.denom().bits()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            // numerator and denominator both too large for f64
            let shift = self.numer().bits().max(self.denom().bits()).saturating_sub(900) as usize;
            let n = (self.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (self.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        })
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

/// Canonical `p/q` text, used verbatim in reports.
impl fmt::Display for RationalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for RationalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational {0:?}")]
pub struct ParseRationalError(String);

impl FromStr for RationalScalar {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(RationalScalar(BigRational::new(n, d)))
    }
}

impl Serialize for RationalScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl From<i64> for RationalScalar {
    fn from(v: i64) -> Self {
        RationalScalar::from_integer(v)
    }
}

impl From<BigRational> for RationalScalar {
    fn from(v: BigRational) -> Self {
        RationalScalar(v)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident) => {
        impl $tr for RationalScalar {
            type Output = RationalScalar;
            fn $method(self, rhs: RationalScalar) -> RationalScalar {
                RationalScalar((self.0).$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a RationalScalar> for RationalScalar {
            type Output = RationalScalar;
            fn $method(self, rhs: &'a RationalScalar) -> RationalScalar {
                RationalScalar((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $tr<&'a RationalScalar> for &'a RationalScalar {
            type Output = RationalScalar;
            fn $method(self, rhs: &'a RationalScalar) -> RationalScalar {
                RationalScalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl AddAssign<&RationalScalar> for RationalScalar {
    fn add_assign(&mut self, rhs: &RationalScalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&RationalScalar> for RationalScalar {
    fn sub_assign(&mut self, rhs: &RationalScalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&RationalScalar> for RationalScalar {
    fn mul_assign(&mut self, rhs: &RationalScalar) {
        self.0 *= &rhs.0;
    }
}

impl Neg for RationalScalar {
    type Output = RationalScalar;
    fn neg(self) -> RationalScalar {
        RationalScalar(-self.0)
    }
}

impl Neg for &RationalScalar {
    type Output = RationalScalar;
    fn neg(self) -> RationalScalar {
        RationalScalar(-&self.0)
    }
}

impl Sum for RationalScalar {
    fn sum<I: Iterator<Item = RationalScalar>>(iter: I) -> Self {
        iter.fold(RationalScalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a RationalScalar> for RationalScalar {
    fn sum<I: Iterator<Item = &'a RationalScalar>>(iter: I) -> Self {
        iter.fold(RationalScalar::zero(), |acc, x| acc + x)
    }
}

/// Integrality test used by the coefficient filter: true iff `q` reduces to
/// an integer.
pub fn integrality_check(q: &RationalScalar) -> bool {
    q.is_integer()
}
