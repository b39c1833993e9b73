//! Exact verification of weak crossed products, weak crossed coproducts and
//! weak crossed biproducts of finite-dimensional weak bialgebras, with
//! groupoid algebras as the worked family of examples.
//!
//! Every morphism is a [`LinMap`] over an exact scalar field; every law is
//! checked as an equality of maps, recorded in a [`Report`].

/// Composite of maps, leftmost applied last: `comp![f, g, h]` is f∘g∘h.
macro_rules! comp {
    ($($m:expr),+ $(,)?) => {
        $crate::linmap::chain(&[$(::std::convert::AsRef::<$crate::linmap::LinMap<_>>::as_ref(&$m)),+])
    };
}

/// Tensor product of maps, left to right.
macro_rules! tens {
    ($($m:expr),+ $(,)?) => {
        $crate::linmap::tensor_all(&[$(::std::convert::AsRef::<$crate::linmap::LinMap<_>>::as_ref(&$m)),+])
    };
}

pub mod biproduct;
pub mod crossed_coproduct;
pub mod crossed_product;
pub mod dump;
pub mod duality;
pub mod error;
pub mod fixture;
pub mod groupoid;
pub mod hom;
pub mod linmap;
pub mod orientation;
pub mod projection;
pub mod report;
pub mod scalar;
pub mod split;
pub mod weak_hopf;

pub use error::{Error, Result};
pub use linmap::LinMap;
pub use orientation::{CoOrientation, Orientation};
pub use report::{Check, Report, Status, Witness};
pub use scalar::Scalar;
pub use split::Splitting;

impl<T> AsRef<LinMap<T>> for LinMap<T> {
    fn as_ref(&self) -> &LinMap<T> {
        self
    }
}

pub type Rational = num_rational::BigRational;
pub type Mat = LinMap<Rational>;
pub type Algebra = hom::AlgebraData<Rational>;
pub type Coalgebra = hom::CoalgebraData<Rational>;
pub type WeakBialgebra = weak_hopf::WeakBialgebra<Rational>;
pub type Crossed = crossed_product::CrossedData<Rational>;
pub type CoCrossed = crossed_coproduct::CoCrossedData<Rational>;
pub type Biproduct = biproduct::BiproductData<Rational>;
pub type Projection = projection::WeakProjection<Rational>;

pub(crate) fn id<T: Scalar>(n: usize) -> LinMap<T> {
    LinMap::identity(n)
}
