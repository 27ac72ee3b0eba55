use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde::{Serialize, Serializer};

/// An exact rational upper bound together with its integer floor.
///
/// Counts of cusps and singular points are integers, so a bound of `17/2`
/// means at most 8.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalBound(BigRational);

impl RationalBound {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Self {
        RationalBound(BigRational::new(numerator.into(), denominator.into()))
    }

    pub fn integer(value: impl Into<BigInt>) -> Self {
        RationalBound(BigRational::from_integer(value.into()))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    /// Largest integer not exceeding the bound.
    pub fn floor_value(&self) -> BigInt {
        self.0.numer().div_floor(self.0.denom())
    }

    pub fn is_integer(&self) -> bool {
        self.0.denom().is_one()
    }

    /// `self + k` for an integer `k`.
    pub fn shifted(&self, k: impl Into<BigInt>) -> Self {
        RationalBound(&self.0 + BigRational::from_integer(k.into()))
    }

    /// `num/den` text with the denominator always present.
    pub fn fraction_text(&self) -> String {
        format!("{}/{}", self.numerator(), self.denominator())
    }
}

impl fmt::Display for RationalBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numerator())
        } else {
            write!(
                f,
                "{}/{} (<= {})",
                self.numerator(),
                self.denominator(),
                self.floor_value()
            )
        }
    }
}

impl Serialize for RationalBound {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("RationalBound", 2)?;
        s.serialize_field("rational", &self.fraction_text())?;
        s.serialize_field("floor", &self.floor_value().to_string())?;
        s.end()
    }
}
