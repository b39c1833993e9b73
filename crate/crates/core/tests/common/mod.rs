#![allow(dead_code)]

use weakcross::biproduct::{factor_maps, FactorMaps};
use weakcross::groupoid::{groupoid_algebra, projection_morphisms, Factorization, Groupoid};
use weakcross::linmap::{chain, tensor_all};
use weakcross::projection::{biproduct_from_projection, ProjectionBiproduct};
use weakcross::{Algebra, Crossed, Mat, Orientation, Projection, Rational, Scalar};

pub fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

pub fn c(maps: &[&Mat]) -> Mat {
    chain(maps)
}

pub fn t(maps: &[&Mat]) -> Mat {
    tensor_all(maps)
}

pub fn id(n: usize) -> Mat {
    Mat::identity(n)
}

pub fn group_algebra(n: usize) -> Algebra {
    groupoid_algebra::<Rational>(&Groupoid::cyclic(n)).unwrap().algebra().clone()
}

/// Everything the groupoid pipeline produces for one factorization.
pub struct Pipeline {
    pub fz: Factorization,
    pub p: Projection,
    pub out: ProjectionBiproduct<Rational>,
    pub maps: FactorMaps<Rational>,
}

pub fn pipeline(fz: Factorization) -> Pipeline {
    let p = projection_morphisms::<Rational>(&fz).unwrap();
    let out = biproduct_from_projection(&p).unwrap();
    let (maps, _) = factor_maps(&out.biproduct).unwrap();
    Pipeline { fz, p, out, maps }
}

impl Pipeline {
    pub fn c_dim(&self) -> usize {
        self.fz.h.len()
    }

    pub fn a_dim(&self) -> usize {
        self.fz.v.len()
    }

    /// The side switch of the product on C⊗A: ω⊗σ ↦ σ'⊗ω' where
    /// ω∘σ = σ'∘ω' is the reverse factorization, zero off composable pairs.
    pub fn reverse_swap(&self) -> Mat {
        let (g, nh, nv) = (&self.fz.groupoid, self.c_dim(), self.a_dim());
        Mat::from_basis_fn(nv * nh, nh * nv, |k| {
            let (w, s) = (self.fz.h[k / nv], self.fz.v[k % nv]);
            g.compose(w, s).map(|ws| {
                let (v2, h2) = self.fz.reverse_parts(ws);
                (self.fz.v_pos(v2).unwrap() * nh + self.fz.h_pos(h2).unwrap(), q(1))
            })
        })
    }
}

/// The permutation matrix of a bijection of basis vectors.
pub fn permutation(images: &[usize]) -> Mat {
    Mat::from_basis_fn(images.len(), images.len(), |j| Some((images[j], q(1))))
}

/// Q[Z2] ⊗ Q[Z3] as a crossed product with ψ the flip and σ = η⊗μ.
pub fn flip_data() -> (Crossed, Algebra, Algebra) {
    let a = group_algebra(2);
    let w = group_algebra(3);
    let sigma = t(&[a.unit(), w.mult()]);
    let nu = t(&[a.unit(), w.unit()]);
    let d = Crossed::new(a.clone(), 3, Mat::flip(3, 2), sigma, Some(nu), Orientation::ALeft).unwrap();
    (d, a, w)
}

/// Product of the tensor algebra X⊗Y.
pub fn tensor_algebra_product(x: &Algebra, y: &Algebra) -> Mat {
    let (m, n) = (x.dim(), y.dim());
    c(&[&t(&[x.mult(), y.mult()]), &t(&[&id(m), &Mat::flip(n, m), &id(n)])])
}

/// The error of a result expected to be refused, without dumping the value.
pub fn refused<T>(r: weakcross::Result<T>) -> weakcross::Error {
    match r {
        Ok(_) => panic!("expected a refusal"),
        Err(e) => e,
    }
}
