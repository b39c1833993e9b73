//! Which side the algebra (or coalgebra) factor sits on.
//!
//! Formulas are written once for the left layout (A⊗V, C⊗V). The right
//! layout reverses every tensor product while keeping composition order,
//! which is exactly the mirror image of each equation.

use serde::{Deserialize, Serialize};

use crate::linmap::{tensor_all, LinMap};
use crate::scalar::Scalar;

/// Layout of a crossed product: `ALeft` is A⊗V, `ARight` is V⊗A.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    ALeft,
    ARight,
}

/// Layout of a crossed coproduct: `CLeft` is C⊗V, `CRight` is V⊗C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoOrientation {
    CLeft,
    CRight,
}

fn ordered<T: Scalar>(mirrored: bool, factors: &[&LinMap<T>]) -> LinMap<T> {
    if mirrored {
        let rev: Vec<&LinMap<T>> = factors.iter().rev().copied().collect();
        tensor_all(&rev)
    } else {
        tensor_all(factors)
    }
}

impl Orientation {
    pub fn opposite(self) -> Self {
        match self {
            Orientation::ALeft => Orientation::ARight,
            Orientation::ARight => Orientation::ALeft,
        }
    }

    /// Tensor product of factors listed in left-layout order.
    pub fn t<T: Scalar>(self, factors: &[&LinMap<T>]) -> LinMap<T> {
        ordered(self == Orientation::ARight, factors)
    }
}

impl CoOrientation {
    pub fn opposite(self) -> Self {
        match self {
            CoOrientation::CLeft => CoOrientation::CRight,
            CoOrientation::CRight => CoOrientation::CLeft,
        }
    }

    pub fn t<T: Scalar>(self, factors: &[&LinMap<T>]) -> LinMap<T> {
        ordered(self == CoOrientation::CRight, factors)
    }
}

/// `ot!(o; a, b, c)` is a⊗b⊗c in orientation `o`.
macro_rules! ot {
    ($o:expr; $($m:expr),+ $(,)?) => {
        $o.t(&[$(::std::convert::AsRef::<$crate::linmap::LinMap<_>>::as_ref(&$m)),+])
    };
}
pub(crate) use ot;
