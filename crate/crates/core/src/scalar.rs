use std::fmt;
use std::ops::Neg;

use num_traits::{FromPrimitive, NumAssign};

/// Field of scalars every map is defined over.
///
/// Exact arithmetic is assumed: equality tests are exact, so only exact
/// fields such as [`crate::Rational`] give meaningful verdicts.
pub trait Scalar:
    NumAssign + Neg<Output = Self> + FromPrimitive + Clone + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer scalar")
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }
}

impl<T> Scalar for T where
    T: NumAssign
        + Neg<Output = T>
        + FromPrimitive
        + Clone
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static
{
}
