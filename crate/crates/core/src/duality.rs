//! Transposition as a functor: an algebra on a finite-dimensional space
//! becomes a coalgebra on the same space (η ↦ ε = ηᵀ, μ ↦ δ = μᵀ), and a
//! crossed-product quadruple becomes a crossed-coproduct quadruple with
//! χ = ψᵀ, τ = σᵀ, υ = νᵀ. Layouts correspond as A⊗V ↔ C⊗V.

use crate::crossed_coproduct::{build_cocrossed_coproduct, check_cocrossed_data, CoCrossedData};
use crate::crossed_product::{build_crossed_product, check_crossed_data, CrossedData};
use crate::error::Result;
use crate::hom::{AlgebraData, CoalgebraData};
use crate::orientation::{CoOrientation, Orientation};
use crate::report::{Check, Report, Witness};
use crate::scalar::Scalar;

pub fn dual_algebra<T: Scalar>(a: &AlgebraData<T>) -> CoalgebraData<T> {
    CoalgebraData::new(a.unit().transpose(), a.mult().transpose()).expect("transposed shapes")
}

pub fn dual_coalgebra<T: Scalar>(c: &CoalgebraData<T>) -> AlgebraData<T> {
    AlgebraData::new(c.counit().transpose(), c.comult().transpose()).expect("transposed shapes")
}

pub fn dual_orientation(o: Orientation) -> CoOrientation {
    match o {
        Orientation::ALeft => CoOrientation::CLeft,
        Orientation::ARight => CoOrientation::CRight,
    }
}

pub fn codual_orientation(o: CoOrientation) -> Orientation {
    match o {
        CoOrientation::CLeft => Orientation::ALeft,
        CoOrientation::CRight => Orientation::ARight,
    }
}

pub fn dualize<T: Scalar>(d: &CrossedData<T>) -> CoCrossedData<T> {
    CoCrossedData::new(
        dual_algebra(d.algebra()),
        d.vdim(),
        d.psi().transpose(),
        d.sigma().transpose(),
        d.preunit().map(|nu| nu.transpose()),
        dual_orientation(d.orientation()),
    )
    .expect("transposed shapes")
}

pub fn codualize<T: Scalar>(d: &CoCrossedData<T>) -> CrossedData<T> {
    CrossedData::new(
        dual_coalgebra(d.coalgebra()),
        d.vdim(),
        d.chi().transpose(),
        d.tau().transpose(),
        d.precounit().map(|u| u.transpose()),
        codual_orientation(d.orientation()),
    )
    .expect("transposed shapes")
}

/// Runs the product pipeline on `d` and the coproduct pipeline on its dual
/// and compares them: verdicts must agree and every structure map of the
/// coproduct side must be the transpose of its product counterpart.
pub fn check_duality<T: Scalar>(d: &CrossedData<T>) -> Result<Report> {
    let co = dualize(d);
    let mut r = Report::new("duality transport");
    r.ensure("round trip", codualize(&co) == *d, || Witness::values("changed", "unchanged"));
    let (pc, cc) = (check_crossed_data(d), check_cocrossed_data(&co));
    r.eq("Gamma = nablaᵀ", &cc.gamma, &pc.nabla.transpose());
    r.ensure("data verdicts agree", pc.report.passed() == cc.report.passed(), || {
        Witness::values(pc.report.passed(), cc.report.passed())
    });
    match (build_crossed_product(d), build_cocrossed_coproduct(&co)) {
        (Ok(p), Ok(c)) => {
            r.eq("coproduct = productᵀ", &c.coproduct, &p.product.transpose());
            if let (Some(beta), Some(g)) = (&p.beta, &c.gamma_upsilon) {
                r.eq("gamma_υ = β_νᵀ", g, &beta.transpose());
            }
            r.ensure("image dimensions agree", p.splitting.image_dim == c.splitting.image_dim, || {
                Witness::values(p.splitting.image_dim, c.splitting.image_dim)
            });
        }
        (Err(_), Err(_)) => {
            r.push(Check::skipped("coproduct = productᵀ", "both sides refused"));
        }
        (p, c) => {
            r.push(Check::fail(
                "both pipelines agree",
                Witness::values(p.is_ok(), c.is_ok()),
            ));
        }
    }
    Ok(r)
}
