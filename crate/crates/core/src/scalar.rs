//! Exact rational scalars.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A reduced rational number with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Q(BigRational);

impl Q {
    pub fn zero() -> Self {
        Q(BigRational::zero())
    }

    pub fn one() -> Self {
        Q(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Q(BigRational::from_integer(BigInt::from(n)))
    }

    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Q(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// `(-1)^e` as a scalar.
    pub fn sign(negative: bool) -> Self {
        if negative {
            -Q::one()
        } else {
            Q::one()
        }
    }

    pub fn recip(&self) -> Self {
        Q(self.0.recip())
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error for strings that are not `p`, `-p`, or `p/q` with `q != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseQError {
    pub input: String,
}

impl fmt::Display for ParseQError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed rational {:?}", self.input)
    }
}

impl FromStr for Q {
    type Err = ParseQError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseQError { input: String::from(s) };
        let t = s.trim();
        let parse_int = |p: &str| -> Result<BigInt, ParseQError> {
            let p = p.trim();
            let digits = p.strip_prefix('-').or_else(|| p.strip_prefix('+')).unwrap_or(p);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            BigInt::from_str(p.strip_prefix('+').unwrap_or(p)).map_err(|_| err())
        };
        match t.split_once('/') {
            None => Ok(Q(BigRational::from_integer(parse_int(t)?))),
            Some((n, d)) => {
                let n = parse_int(n)?;
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(err());
                }
                Ok(Q(BigRational::new(n, d)))
            }
        }
    }
}

impl From<i64> for Q {
    fn from(n: i64) -> Self {
        Q::from_int(n)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr for Q {
            type Output = Q;
            fn $m(self, rhs: Q) -> Q {
                Q((self.0).$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a Q> for &'a Q {
            type Output = Q;
            fn $m(self, rhs: &'a Q) -> Q {
                Q((&self.0).$m(&rhs.0))
            }
        }
        impl<'a> $tr<&'a Q> for Q {
            type Output = Q;
            fn $m(self, rhs: &'a Q) -> Q {
                Q((self.0).$m(&rhs.0))
            }
        }
        impl $atr for Q {
            fn $am(&mut self, rhs: Q) {
                (self.0).$am(rhs.0)
            }
        }
        impl<'a> $atr<&'a Q> for Q {
            fn $am(&mut self, rhs: &'a Q) {
                (self.0).$am(&rhs.0)
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);

impl Div for Q {
    type Output = Q;
    fn div(self, rhs: Q) -> Q {
        Q(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Q> for &'a Q {
    type Output = Q;
    fn div(self, rhs: &'a Q) -> Q {
        Q(&self.0 / &rhs.0)
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q(-self.0)
    }
}

impl<'a> Neg for &'a Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!("3".parse::<Q>().unwrap(), Q::from_int(3));
        assert_eq!("-2/4".parse::<Q>().unwrap(), Q::new(-1, 2));
        assert_eq!(" 6/-3 ".parse::<Q>().unwrap(), Q::from_int(-2));
        assert!(Q::new(2, -4).denom() > &BigInt::zero());
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["1/0", "", "a", "1/", "/2", "1.5", "--1", "1/2/3"] {
            assert!(bad.parse::<Q>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_is_reduced() {
        assert_eq!(alloc::format!("{}", Q::new(4, 6)), "2/3");
        assert_eq!(alloc::format!("{}", Q::new(-4, 2)), "-2");
    }
}
