//! Weak bialgebras with the flip symmetry, their four canonical idempotents
//! and antipodes.

use crate::error::{Error, Result};
use crate::hom::{check_algebra, check_coalgebra, convolution, AlgebraData, CoalgebraData};
use crate::id;
use crate::linmap::LinMap;
use crate::report::Report;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct WeakBialgebra<T> {
    algebra: AlgebraData<T>,
    coalgebra: CoalgebraData<T>,
    antipode: Option<LinMap<T>>,
}

impl<T: Scalar> WeakBialgebra<T> {
    pub fn new(algebra: AlgebraData<T>, coalgebra: CoalgebraData<T>, antipode: Option<LinMap<T>>) -> Result<Self> {
        let n = algebra.dim();
        if coalgebra.dim() != n {
            return Err(Error::shape("weak bialgebra", (n, n), (coalgebra.dim(), coalgebra.dim())));
        }
        if let Some(l) = &antipode {
            if l.shape() != (n, n) {
                return Err(Error::shape("antipode", l.shape(), (n, n)));
            }
        }
        Ok(WeakBialgebra {
            algebra,
            coalgebra,
            antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &AlgebraData<T> {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &CoalgebraData<T> {
        &self.coalgebra
    }

    pub fn antipode(&self) -> Option<&LinMap<T>> {
        self.antipode.as_ref()
    }

    pub fn unit(&self) -> &LinMap<T> {
        self.algebra.unit()
    }

    pub fn mult(&self) -> &LinMap<T> {
        self.algebra.mult()
    }

    pub fn counit(&self) -> &LinMap<T> {
        self.coalgebra.counit()
    }

    pub fn comult(&self) -> &LinMap<T> {
        self.coalgebra.comult()
    }

    pub fn with_antipode(&self, antipode: Option<LinMap<T>>) -> Result<Self> {
        Self::new(self.algebra.clone(), self.coalgebra.clone(), antipode)
    }

    fn flip(&self) -> LinMap<T> {
        LinMap::flip(self.dim(), self.dim())
    }

    /// `ε∘μ: D⊗D → 1`.
    fn eps_mu(&self) -> LinMap<T> {
        comp![self.counit(), self.mult()]
    }

    /// `δ∘η: 1 → D⊗D`.
    fn delta_eta(&self) -> LinMap<T> {
        comp![self.comult(), self.unit()]
    }

    pub fn convolve(&self, f: &LinMap<T>, g: &LinMap<T>) -> Result<LinMap<T>> {
        convolution(f, g, &self.coalgebra, &self.algebra)
    }

    /// The four idempotents Π^L, Π^R, Π̄^L, Π̄^R, without any checks.
    pub fn pi_maps_unchecked(&self) -> PiMaps<T> {
        let n = self.dim();
        let c = self.flip();
        let em = self.eps_mu();
        let de = self.delta_eta();
        PiMaps {
            pi_l: comp![tens![em, id(n)], tens![id(n), c], tens![de, id(n)]],
            pi_r: comp![tens![id(n), em], tens![c, id(n)], tens![id(n), de]],
            pi_l_bar: comp![tens![id(n), em], tens![de, id(n)]],
            pi_r_bar: comp![tens![em, id(n)], tens![id(n), de]],
        }
    }

    /// Transposes every structure map, giving the dual weak bialgebra.
    pub fn dual(&self) -> Self {
        let algebra = AlgebraData::new(self.counit().transpose(), self.comult().transpose()).expect("dual algebra");
        let coalgebra = CoalgebraData::new(self.unit().transpose(), self.mult().transpose()).expect("dual coalgebra");
        WeakBialgebra::new(algebra, coalgebra, self.antipode.as_ref().map(LinMap::transpose)).expect("dual shapes")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PiMaps<T> {
    pub pi_l: LinMap<T>,
    pub pi_r: LinMap<T>,
    pub pi_l_bar: LinMap<T>,
    pub pi_r_bar: LinMap<T>,
}

/// Algebra and coalgebra axioms plus the three weak compatibility axioms.
///
/// The braiding is the flip, so its inverse is the flip as well; both forms
/// of the second and third axioms are evaluated.
pub fn check_weak_bialgebra<T: Scalar>(d: &WeakBialgebra<T>) -> Report {
    let n = d.dim();
    let c = d.flip();
    let (mu, delta) = (d.mult(), d.comult());
    let em = d.eps_mu();
    let de = d.delta_eta();
    let mut r = Report::new("weak bialgebra");
    r.nest(check_algebra(&d.algebra));
    r.nest(check_coalgebra(&d.coalgebra));
    r.eq(
        "wba-i",
        &comp![delta, mu],
        &comp![tens![mu, mu], tens![id(n), c, id(n)], tens![delta, delta]],
    );
    let lhs2 = comp![em, tens![mu, id(n)]];
    r.eq("wba-ii-a", &lhs2, &comp![tens![em, em], tens![id(n), delta, id(n)]]);
    r.eq(
        "wba-ii-b",
        &lhs2,
        &comp![tens![em, em], tens![id(n), comp![c, delta], id(n)]],
    );
    let lhs3 = comp![tens![delta, id(n)], de];
    r.eq("wba-iii-a", &lhs3, &comp![tens![id(n), mu, id(n)], tens![de, de]]);
    r.eq(
        "wba-iii-b",
        &lhs3,
        &comp![tens![id(n), comp![mu, c], id(n)], tens![de, de]],
    );
    r.note("braiding specialized to the flip, whose inverse is itself");
    r
}

/// Idempotency of the four maps and the eight composition identities.
pub fn check_pi_identities<T: Scalar>(pi: &PiMaps<T>) -> Report {
    let PiMaps {
        pi_l,
        pi_r,
        pi_l_bar,
        pi_r_bar,
    } = pi;
    let mut r = Report::new("target and source idempotents");
    r.eq("PiL idempotent", &comp![pi_l, pi_l], pi_l);
    r.eq("PiR idempotent", &comp![pi_r, pi_r], pi_r);
    r.eq("PiLbar idempotent", &comp![pi_l_bar, pi_l_bar], pi_l_bar);
    r.eq("PiRbar idempotent", &comp![pi_r_bar, pi_r_bar], pi_r_bar);
    r.eq("pi1-1 PiL∘PiLbar = PiL", &comp![pi_l, pi_l_bar], pi_l);
    r.eq("pi1-2 PiL∘PiRbar = PiRbar", &comp![pi_l, pi_r_bar], pi_r_bar);
    r.eq("pi1-3 PiLbar∘PiL = PiLbar", &comp![pi_l_bar, pi_l], pi_l_bar);
    r.eq("pi1-4 PiRbar∘PiL = PiL", &comp![pi_r_bar, pi_l], pi_l);
    r.eq("pi1-5 PiR∘PiLbar = PiLbar", &comp![pi_r, pi_l_bar], pi_l_bar);
    r.eq("pi1-6 PiR∘PiRbar = PiR", &comp![pi_r, pi_r_bar], pi_r);
    r.eq("pi1-7 PiLbar∘PiR = PiR", &comp![pi_l_bar, pi_r], pi_r);
    r.eq("pi1-8 PiRbar∘PiR = PiRbar", &comp![pi_r_bar, pi_r], pi_r_bar);
    r
}

/// The four idempotents, refusing inputs that fail the axioms.
pub fn compute_pi<T: Scalar>(d: &WeakBialgebra<T>) -> Result<PiMaps<T>> {
    let r = check_weak_bialgebra(d);
    if !r.passed() {
        return Err(Error::failed("weak bialgebra axioms", r));
    }
    let pi = d.pi_maps_unchecked();
    let r = check_pi_identities(&pi);
    if !r.passed() {
        return Err(Error::failed("target and source idempotents", r));
    }
    Ok(pi)
}

/// The antipode axioms and the standard consequences.
pub fn check_antipode<T: Scalar>(d: &WeakBialgebra<T>) -> Result<Report> {
    let l = d.antipode().ok_or(Error::MissingAntipode)?;
    let n = d.dim();
    let c = d.flip();
    let pi = d.pi_maps_unchecked();
    let PiMaps {
        pi_l,
        pi_r,
        pi_l_bar,
        pi_r_bar,
    } = &pi;
    let idn = id(n);
    let mut r = Report::new("antipode");
    r.eq("iv-1 id∧λ = PiL", &d.convolve(&idn, l)?, pi_l);
    let l_id = d.convolve(l, &idn)?;
    r.eq("iv-2 λ∧id = PiR", &l_id, pi_r);
    r.eq("iv-3 λ∧id∧λ = λ", &d.convolve(&l_id, l)?, l);

    r.eq("pi2-1 PiL∘λ = PiL∘PiR", &comp![pi_l, l], &comp![pi_l, pi_r]);
    r.eq("pi2-2 PiL∘PiR = λ∘PiR", &comp![pi_l, pi_r], &comp![l, pi_r]);
    r.eq("pi2-3 PiR∘λ = PiR∘PiL", &comp![pi_r, l], &comp![pi_r, pi_l]);
    r.eq("pi2-4 PiR∘PiL = λ∘PiL", &comp![pi_r, pi_l], &comp![l, pi_l]);
    r.eq("pi2-5 PiL = PiRbar∘λ", pi_l, &comp![pi_r_bar, l]);
    r.eq("pi2-6 PiL = λ∘PiLbar", pi_l, &comp![l, pi_l_bar]);
    r.eq("pi2-7 PiR = PiLbar∘λ", pi_r, &comp![pi_l_bar, l]);
    r.eq("pi2-8 PiR = λ∘PiRbar", pi_r, &comp![l, pi_r_bar]);

    r.eq("ant-1 antimultiplicative", &comp![l, d.mult()], &comp![d.mult(), c, tens![l, l]]);
    r.eq(
        "ant-2 anticomultiplicative",
        &comp![d.comult(), l],
        &comp![tens![l, l], c, d.comult()],
    );
    r.eq("ant-3 λ∘η = η", &comp![l, d.unit()], d.unit());
    r.eq("ant-3 ε∘λ = ε", &comp![d.counit(), l], d.counit());
    Ok(r)
}

/// Whether the antipode squares to the identity.
pub fn check_involutive<T: Scalar>(d: &WeakBialgebra<T>) -> Result<Report> {
    let l = d.antipode().ok_or(Error::MissingAntipode)?;
    let mut r = Report::new("involutive antipode");
    r.eq("λ∘λ = id", &comp![l, l], &id(d.dim()));
    Ok(r)
}

/// Every check a weak Hopf algebra is expected to pass.
pub fn full_report<T: Scalar>(d: &WeakBialgebra<T>) -> Report {
    let mut r = Report::new("weak Hopf algebra");
    r.nest(check_weak_bialgebra(d));
    r.nest(check_pi_identities(&d.pi_maps_unchecked()));
    match (check_antipode(d), check_involutive(d)) {
        (Ok(a), Ok(i)) => {
            r.nest(a);
            r.nest(i);
        }
        _ => {
            r.push(crate::report::Check::skipped("antipode", "no antipode given"));
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    /// Group algebra of ℤ_n.
    fn cyclic(n: usize) -> WeakBialgebra<Rational> {
        let mult = LinMap::from_basis_fn(n, n * n, |c| [(((c / n) + (c % n)) % n, q(1))]);
        let a = AlgebraData::new(LinMap::from_basis_fn(n, 1, |_| [(0, q(1))]), mult).unwrap();
        let comult = LinMap::from_basis_fn(n * n, n, |c| [(c * n + c, q(1))]);
        let co = CoalgebraData::new(LinMap::from_basis_fn(1, n, |_| [(0, q(1))]), comult).unwrap();
        let inv = LinMap::from_basis_fn(n, n, |c| [((n - c) % n, q(1))]);
        WeakBialgebra::new(a, co, Some(inv)).unwrap()
    }

    #[test]
    fn group_algebra_is_weak_hopf() {
        let d = cyclic(2);
        assert!(check_weak_bialgebra(&d).passed());
        assert!(check_antipode(&d).unwrap().passed());
        assert!(check_involutive(&d).unwrap().passed());
    }

    #[test]
    fn group_algebra_pi_maps_collapse_to_unit_counit() {
        let d = cyclic(3);
        let pi = compute_pi(&d).unwrap();
        let ee = comp![d.unit(), d.counit()];
        assert_eq!(pi.pi_l, ee);
        assert_eq!(pi.pi_r, ee);
        assert_eq!(pi.pi_l_bar, ee);
        assert_eq!(pi.pi_r_bar, ee);
    }

    #[test]
    fn missing_antipode_is_an_error() {
        let d = cyclic(2).with_antipode(None).unwrap();
        assert!(matches!(check_antipode(&d), Err(Error::MissingAntipode)));
    }

    #[test]
    fn dual_of_group_algebra_is_weak_hopf() {
        let d = cyclic(3).dual();
        assert!(full_report(&d).passed());
    }
}
