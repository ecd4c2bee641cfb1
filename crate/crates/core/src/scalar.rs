//! Exact scalar fields.
//!
//! Every rank in this crate is a statement about linear dependence, so the
//! scalar type must be an exact field. Floating point types are deliberately
//! not implementors.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// An exact field of characteristic zero.
pub trait Scalar:
    Num + Neg<Output = Self> + Clone + Ord + Hash + Debug + Display + Send + Sync + 'static
{
    /// Embeds a machine integer.
    fn from_i64(value: i64) -> Self;

    /// Embeds an arbitrary-precision integer.
    fn from_bigint(value: &BigInt) -> Self;

    /// Returns the value as an integer when it is one.
    fn to_bigint(&self) -> Option<BigInt>;
}

impl<I> Scalar for Ratio<I>
where
    I: Integer + Signed + Clone + Hash + Debug + Display + Send + Sync + 'static,
    I: From<i64> + TryFrom<BigInt> + Into<BigInt>,
{
    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(I::from(value))
    }

    fn from_bigint(value: &BigInt) -> Self {
        match I::try_from(value.clone()) {
            Ok(v) => Ratio::from_integer(v),
            Err(_) => panic!("integer {value} does not fit the scalar type"),
        }
    }

    fn to_bigint(&self) -> Option<BigInt> {
        if self.is_integer() {
            Some(self.numer().clone().into())
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    type Q = Ratio<BigInt>;

    fn q(n: i64, d: i64) -> Q {
        Q::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn zero_is_canonical() {
        let z = q(0, 7);
        assert!(z.is_zero());
        assert_eq!(z.denom(), &BigInt::one());
    }

    #[test]
    fn machine_ratio_is_a_scalar() {
        let a = <Ratio<i64> as Scalar>::from_i64(3);
        assert_eq!(a.to_bigint(), Some(BigInt::from(3)));
        assert_eq!(Ratio::new(1i64, 2).to_bigint(), None);
    }

    fn brute_gcd(mut a: i64, mut b: i64) -> i64 {
        a = a.abs();
        b = b.abs();
        while b != 0 {
            let r = a % b;
            a = b;
            b = r;
        }
        a
    }

    proptest! {
        #[test]
        fn sums_stay_canonical(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let s = q(a, b) + q(c, d);
            let n: i64 = s.numer().try_into().unwrap();
            let den: i64 = s.denom().try_into().unwrap();
            prop_assert!(den > 0);
            if n == 0 {
                prop_assert_eq!(den, 1);
            } else {
                prop_assert_eq!(brute_gcd(n, den), 1);
            }
            // cross-multiplied equality against the unreduced sum
            prop_assert_eq!(n * b * d, (a * d + c * b) * den);
        }
    }
}
