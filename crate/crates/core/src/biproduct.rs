//! Weak crossed biproducts on C⊗A: a weak crossed product with preunit and
//! a weak crossed coproduct with precounit sharing one idempotent, together
//! with the correspondence to pairs of idempotents (π, θ) on a weak
//! bialgebra D.
//!
//! The product side is stored with [`Orientation::ARight`] (V = C sits on
//! the left) and the coproduct side with [`CoOrientation::CLeft`] (V = A on
//! the right), so both live on the same space C⊗A.

use crate::crossed_coproduct::{build_cocrossed_coproduct_with, decompose_coalgebra, CoCrossedData, CoCrossedResult};
use crate::crossed_product::{build_crossed_product_with, decompose_algebra, CrossedData, CrossedProductResult};
use crate::error::{Error, Result};
use crate::hom::{
    check_algebra, check_algebra_morphism, check_coalgebra, check_coalgebra_morphism, check_linearity, ActionData,
    AlgebraData, CoalgebraData,
};
use crate::id;
use crate::linmap::LinMap;
use crate::orientation::{CoOrientation, Orientation};
use crate::report::{Check, Report, Witness};
use crate::scalar::Scalar;
use crate::split::{inverse, split_idempotent, Splitting};
use crate::weak_hopf::WeakBialgebra;

#[derive(Clone, Debug, PartialEq)]
pub struct BiproductData<T> {
    product: CrossedData<T>,
    coproduct: CoCrossedData<T>,
    splitting: Splitting<T>,
    /// α: C×A → D.
    alpha: LinMap<T>,
    target: WeakBialgebra<T>,
}

impl<T: Scalar> BiproductData<T> {
    pub fn new(
        product: CrossedData<T>,
        coproduct: CoCrossedData<T>,
        splitting: Splitting<T>,
        alpha: LinMap<T>,
        target: WeakBialgebra<T>,
    ) -> Result<Self> {
        if product.orientation() != Orientation::ARight || coproduct.orientation() != CoOrientation::CLeft {
            return Err(Error::IncompatibleActions(
                "biproduct sides must be laid out as C⊗A".to_string(),
            ));
        }
        let (a, c) = (product.algebra().dim(), coproduct.coalgebra().dim());
        if product.vdim() != c || coproduct.vdim() != a {
            return Err(Error::shape("biproduct factors", (c, a), (product.vdim(), coproduct.vdim())));
        }
        let n = a * c;
        if splitting.injection.cod() != n || splitting.projection.dom() != n {
            return Err(Error::shape("biproduct splitting", splitting.injection.shape(), (n, splitting.image_dim)));
        }
        let want = (target.dim(), splitting.image_dim);
        if alpha.shape() != want {
            return Err(Error::shape("alpha", alpha.shape(), want));
        }
        Ok(BiproductData {
            product,
            coproduct,
            splitting,
            alpha,
            target,
        })
    }

    pub fn product_side(&self) -> &CrossedData<T> {
        &self.product
    }

    pub fn coproduct_side(&self) -> &CoCrossedData<T> {
        &self.coproduct
    }

    pub fn splitting(&self) -> &Splitting<T> {
        &self.splitting
    }

    pub fn alpha(&self) -> &LinMap<T> {
        &self.alpha
    }

    pub fn target(&self) -> &WeakBialgebra<T> {
        &self.target
    }

    pub fn a_dim(&self) -> usize {
        self.product.algebra().dim()
    }

    pub fn c_dim(&self) -> usize {
        self.coproduct.coalgebra().dim()
    }

    pub fn with_coproduct(&self, coproduct: CoCrossedData<T>) -> Result<Self> {
        Self::new(
            self.product.clone(),
            coproduct,
            self.splitting.clone(),
            self.alpha.clone(),
            self.target.clone(),
        )
    }

    pub fn with_product(&self, product: CrossedData<T>) -> Result<Self> {
        Self::new(
            product,
            self.coproduct.clone(),
            self.splitting.clone(),
            self.alpha.clone(),
            self.target.clone(),
        )
    }
}

fn named(mut r: Report, title: &str) -> Report {
    r.title = title.to_string();
    r
}

/// A failed stage as a report entry under `title`, keeping the sub-report
/// when there is one.
fn stage_failure(title: &str, e: &Error) -> Report {
    match e.report() {
        Some(sub) => {
            let mut r = Report::new(title);
            r.nest(sub.clone());
            r
        }
        None => {
            let mut r = Report::new(title);
            r.push(Check::fail(title, Witness::values(e.to_string(), "ok")));
            r
        }
    }
}

/// Everything verified about a biproduct.
#[derive(Clone, Debug)]
pub struct BiproductCheck<T> {
    pub report: Report,
    pub product: Option<CrossedProductResult<T>>,
    pub coproduct: Option<CoCrossedResult<T>>,
    pub alpha_inv: Option<LinMap<T>>,
}

/// Evaluates every clause of the biproduct definition without stopping at
/// the first failure.
pub fn evaluate_biproduct<T: Scalar>(b: &BiproductData<T>) -> BiproductCheck<T> {
    let mut r = Report::new("weak crossed biproduct");
    r.note("right A-action on C⊗A taken as C⊗μ_A");
    let (a, c) = (b.a_dim(), b.c_dim());
    let prod = if b.product.preunit().is_none() {
        r.push(Check::fail("bp-i preunit", Witness::values("absent", "present")));
        None
    } else {
        match build_crossed_product_with(&b.product, Some(b.splitting.clone())) {
            Ok(res) => {
                r.nest(named(res.report.clone(), "bp-i weak crossed product with preunit"));
                Some(res)
            }
            Err(e) => {
                r.nest(stage_failure("bp-i weak crossed product with preunit", &e));
                None
            }
        }
    };
    let gamma = b.coproduct.gamma();
    let nabla = b.product.nabla();
    let shared = if gamma == nabla { Some(b.splitting.clone()) } else { None };
    let coprod = if b.coproduct.precounit().is_none() {
        r.push(Check::fail("bp-ii precounit", Witness::values("absent", "present")));
        None
    } else {
        match build_cocrossed_coproduct_with(&b.coproduct, shared) {
            Ok(res) => {
                r.nest(named(res.report.clone(), "bp-ii weak crossed coproduct with precounit"));
                Some(res)
            }
            Err(e) => {
                r.nest(stage_failure("bp-ii weak crossed coproduct with precounit", &e));
                None
            }
        }
    };
    r.eq("bp-iii nabla = Gamma", &nabla, &gamma);

    let mut iv = Report::new("bp-iv alpha");
    let alpha_inv = match inverse(&b.alpha) {
        Ok(inv) => {
            iv.push(Check::pass("alpha bijective"));
            Some(inv)
        }
        Err(e) => {
            iv.push(Check::fail("alpha bijective", Witness::values(e.to_string(), "invertible")));
            None
        }
    };
    match prod.as_ref().and_then(|p| p.algebra.as_ref()) {
        Some(alg) => {
            let rep = check_algebra_morphism(&b.alpha, alg, b.target.algebra()).expect("alpha shapes");
            iv.nest(named(rep, "alpha algebra morphism"));
        }
        None => {
            iv.push(Check::skipped("alpha algebra morphism", "no product algebra"));
        }
    }
    match coprod.as_ref().and_then(|p| p.coalgebra.as_ref()) {
        Some(co) if gamma == nabla => {
            let rep = check_coalgebra_morphism(&b.alpha, co, b.target.coalgebra()).expect("alpha shapes");
            iv.nest(named(rep, "alpha coalgebra morphism"));
        }
        _ => {
            iv.push(Check::skipped("alpha coalgebra morphism", "no coproduct coalgebra on the same image"));
        }
    }
    r.nest(iv);

    let mut v = Report::new("bp-v unit conditions");
    if let Some(nu) = b.product.preunit() {
        let eps_c = b.coproduct.coalgebra().counit();
        v.eq(
            "(ε_C⊗A)∘ν = η_A",
            &comp![tens![eps_c, id(a)], nu],
            b.product.algebra().unit(),
        );
    }
    if let Some(u) = b.coproduct.precounit() {
        let eta_a = b.product.algebra().unit();
        v.eq("υ∘(C⊗η_A) = ε_C", &comp![u, tens![id(c), eta_a]], b.coproduct.coalgebra().counit());
    }
    r.nest(v);
    BiproductCheck {
        report: r,
        product: prod,
        coproduct: coprod,
        alpha_inv,
    }
}

/// As [`evaluate_biproduct`], refusing data that fails any clause.
pub fn check_biproduct<T: Scalar>(b: &BiproductData<T>) -> Result<BiproductCheck<T>> {
    let out = evaluate_biproduct(b);
    if !out.report.passed() {
        return Err(Error::failed("weak crossed biproduct", out.report));
    }
    Ok(out)
}

/// π = iA∘pA and θ = iC∘pC on D.
#[derive(Clone, Debug, PartialEq)]
pub struct IdempotentPair<T> {
    pub pi: LinMap<T>,
    pub theta: LinMap<T>,
}

/// The four maps relating D to A and C.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorMaps<T> {
    pub i_a: LinMap<T>,
    pub p_a: LinMap<T>,
    pub i_c: LinMap<T>,
    pub p_c: LinMap<T>,
}

impl<T: Scalar> FactorMaps<T> {
    pub fn pair(&self) -> IdempotentPair<T> {
        IdempotentPair {
            pi: comp![self.i_a, self.p_a],
            theta: comp![self.i_c, self.p_c],
        }
    }
}

/// iA, pA, iC, pC read off a verified biproduct.
pub fn factor_maps<T: Scalar>(b: &BiproductData<T>) -> Result<(FactorMaps<T>, BiproductCheck<T>)> {
    let chk = check_biproduct(b)?;
    let (a, c) = (b.a_dim(), b.c_dim());
    let (i, p) = (&b.splitting.injection, &b.splitting.projection);
    let alpha_inv = chk.alpha_inv.clone().expect("alpha checked");
    let prod = chk.product.as_ref().expect("product checked");
    let coprod = chk.coproduct.as_ref().expect("coproduct checked");
    let beta = prod.beta.as_ref().expect("preunit present");
    let gamma = coprod.gamma_upsilon.as_ref().expect("precounit present");
    let eta_a = b.product.algebra().unit();
    let eps_c = b.coproduct.coalgebra().counit();
    let maps = FactorMaps {
        i_a: comp![b.alpha, p, beta],
        p_a: comp![tens![eps_c, id(a)], i, alpha_inv],
        i_c: comp![b.alpha, p, tens![id(c), eta_a]],
        p_c: comp![gamma, i, alpha_inv],
    };
    Ok((maps, chk))
}

/// The pair of idempotents induced by a biproduct.
pub fn pair_from_biproduct<T: Scalar>(b: &BiproductData<T>) -> Result<IdempotentPair<T>> {
    Ok(factor_maps(b)?.0.pair())
}

/// ∇_DD = (θ⊗π)∘δ∘μ∘(θ⊗π).
pub fn nabla_dd<T: Scalar>(d: &WeakBialgebra<T>, pair: &IdempotentPair<T>) -> LinMap<T> {
    let tp = tens![pair.theta, pair.pi];
    comp![tp, d.comult(), d.mult(), tp]
}

/// The conditions on (π, θ) under which D is a weak crossed biproduct.
pub fn check_pair<T: Scalar>(d: &WeakBialgebra<T>, pair: &IdempotentPair<T>) -> Report {
    let n = d.dim();
    let (mu, delta, eta, eps) = (d.mult(), d.comult(), d.unit(), d.counit());
    let (pi, th) = (&pair.pi, &pair.theta);
    let dn = id(n);
    let mut r = Report::new("idempotent pair");
    r.eq("pi idempotent", &comp![pi, pi], pi);
    r.eq("theta idempotent", &comp![th, th], th);
    r.eq("ii-1 π∘η = η", &comp![pi, eta], eta);
    r.eq(
        "ii-2 μ∘(π⊗π) = π∘μ∘(π⊗π)",
        &comp![mu, tens![pi, pi]],
        &comp![pi, mu, tens![pi, pi]],
    );
    r.eq("ii-3 ε∘θ = ε", &comp![eps, th], eps);
    r.eq(
        "ii-4 (θ⊗θ)∘δ = (θ⊗θ)∘δ∘θ",
        &comp![tens![th, th], delta],
        &comp![tens![th, th], delta, th],
    );
    let tp_delta = comp![tens![th, pi], delta];
    r.eq(
        "ii-5 A-linearity of (θ⊗π)∘δ",
        &comp![tp_delta, mu, tens![dn, pi]],
        &comp![tens![dn, mu], tens![tp_delta, pi]],
    );
    let mu_tp = comp![mu, tens![th, pi]];
    r.eq(
        "ii-6 C-colinearity of μ∘(θ⊗π)",
        &comp![tens![th, dn], delta, mu_tp],
        &comp![tens![th, mu_tp], tens![delta, dn]],
    );
    r.eq("ii-7 θ∧π = id", &d.convolve(th, pi).expect("square maps"), &dn);

    let ndd = nabla_dd(d, pair);
    r.eq("nabla-DD idempotent", &comp![ndd, ndd], &ndd);
    r.eq("nabla-DD = ((θ⊗π)∘δ)∘(μ∘(θ⊗π))", &ndd, &comp![tp_delta, mu_tp]);
    r.eq("nabla-DD splitting μ∘(θ⊗π)∘(θ⊗π)∘δ = id", &comp![mu_tp, tp_delta], &dn);
    let mpp = comp![mu, tens![pi, pi]];
    r.eq(
        "nabla-prin",
        &comp![ndd, tens![dn, mpp]],
        &comp![tens![dn, mu], tens![comp![ndd, tens![dn, pi]], pi]],
    );
    match (split_idempotent(th), split_idempotent(pi)) {
        (Ok(sc), Ok(sa)) => {
            let inner = comp![
                tens![sc.projection, sa.projection],
                ndd,
                tens![sc.injection, sa.injection]
            ];
            let k = sc.image_dim * sa.image_dim;
            if inner == id(k) {
                r.eq("bespalov-drabant nabla-DD = θ⊗π", &ndd, &tens![th, pi]);
            } else {
                r.push(Check::skipped("bespalov-drabant nabla-DD = θ⊗π", "nabla on C⊗A is not the identity"));
            }
        }
        _ => {
            r.push(Check::skipped("bespalov-drabant nabla-DD = θ⊗π", "π or θ is not idempotent"));
        }
    }
    r
}

/// A and C with their maps into and out of D, given the splittings of π
/// and θ; the algebra and coalgebra structures are transported along them.
pub fn factors_from_pair<T: Scalar>(
    d: &WeakBialgebra<T>,
    pair: &IdempotentPair<T>,
) -> Result<(AlgebraData<T>, CoalgebraData<T>, FactorMaps<T>)> {
    let sa = split_idempotent(&pair.pi)?;
    let sc = split_idempotent(&pair.theta)?;
    let (i_a, p_a) = (sa.injection, sa.projection);
    let (i_c, p_c) = (sc.injection, sc.projection);
    let a = AlgebraData::new(comp![p_a, d.unit()], comp![p_a, d.mult(), tens![i_a, i_a]])?;
    let c = CoalgebraData::new(comp![d.counit(), i_c], comp![tens![p_c, p_c], d.comult(), i_c])?;
    Ok((a, c, FactorMaps { i_a, p_a, i_c, p_c }))
}

/// A biproduct on C⊗A recovered from D and the four factor maps.
#[derive(Clone, Debug)]
pub struct PairDecomposition<T> {
    pub biproduct: BiproductData<T>,
    pub a: AlgebraData<T>,
    pub c: CoalgebraData<T>,
    pub maps: FactorMaps<T>,
    pub report: Report,
}

/// The pair (iA∘pA, iC∘pC) of a decomposition of D through A and C, after
/// checking the decomposition hypotheses and the seven pair conditions.
pub fn pair_from_decomposition<T: Scalar>(
    d: &WeakBialgebra<T>,
    a: &AlgebraData<T>,
    c: &CoalgebraData<T>,
    maps: &FactorMaps<T>,
) -> Result<(IdempotentPair<T>, Report)> {
    let (ka, kc, n) = (a.dim(), c.dim(), d.dim());
    let FactorMaps { i_a, p_a, i_c, p_c } = maps;
    for (name, m, shape) in [
        ("iA", i_a, (n, ka)),
        ("pA", p_a, (ka, n)),
        ("iC", i_c, (n, kc)),
        ("pC", p_c, (kc, n)),
    ] {
        if m.shape() != shape {
            return Err(Error::shape(name, m.shape(), shape));
        }
    }
    let mut r = Report::new("pair from decomposition");
    let mut h1 = Report::new("iii-1");
    h1.nest(named(check_algebra_morphism(i_a, a, d.algebra())?, "iA algebra morphism"));
    h1.eq("pA∘iA = id", &comp![p_a, i_a], &id(ka));
    r.nest(h1);
    let mut h2 = Report::new("iii-2");
    h2.nest(named(check_coalgebra_morphism(p_c, d.coalgebra(), c)?, "pC coalgebra morphism"));
    h2.eq("pC∘iC = id", &comp![p_c, i_c], &id(kc));
    r.nest(h2);
    let mut h3 = Report::new("iii-3");
    let nabla_ca = comp![tens![p_c, p_a], d.comult(), d.mult(), tens![i_c, i_a]];
    h3.eq("nabla idempotent", &comp![nabla_ca, nabla_ca], &nabla_ca);
    let right = ActionData::right_module(a, kc * ka, tens![id(kc), a.mult()])?;
    let left = ActionData::left_comodule(c, kc * ka, tens![c.comult(), id(ka)])?;
    h3.nest(named(check_linearity(&nabla_ca, &right, &right)?, "nabla right A-linear"));
    h3.nest(named(check_linearity(&nabla_ca, &left, &left)?, "nabla left C-colinear"));
    r.nest(h3);
    r.nest(named(check_algebra(a), "A algebra"));
    r.nest(named(check_coalgebra(c), "C coalgebra"));
    let pair = maps.pair();
    r.nest(check_pair(d, &pair));
    if !r.passed() {
        return Err(Error::failed("decomposition hypotheses", r));
    }
    Ok((pair, r))
}

/// The biproduct structure on C⊗A induced by algebra maps iA, pA and
/// coalgebra maps iC, pC satisfying the decomposition hypotheses.
pub fn decomposition_from_maps<T: Scalar>(
    d: &WeakBialgebra<T>,
    a: &AlgebraData<T>,
    c: &CoalgebraData<T>,
    maps: &FactorMaps<T>,
) -> Result<PairDecomposition<T>> {
    let (ka, kc, n) = (a.dim(), c.dim(), d.dim());
    let (_, hyp) = pair_from_decomposition(d, a, c, maps)?;
    let FactorMaps { i_a, p_a, i_c, p_c } = maps;
    let mut r = Report::new("biproduct from decomposition");
    r.nest(hyp);
    let nabla_ca = comp![tens![p_c, p_a], d.comult(), d.mult(), tens![i_c, i_a]];

    // D itself is the image: ∇ = ŵ∘(μ∘(iC⊗iA)).
    let section = comp![tens![p_c, p_a], d.comult()];
    let retraction = comp![d.mult(), tens![i_c, i_a]];
    let split = Splitting::new(&nabla_ca, section.clone(), retraction.clone())?;
    let dec = decompose_algebra(d.algebra(), a, kc, i_a, i_c, &section, Orientation::ARight, Some(split.clone()))?;
    r.nest(named(dec.report.clone(), "product side"));
    let codec = decompose_coalgebra(
        d.coalgebra(),
        c,
        ka,
        p_c,
        p_a,
        &retraction,
        CoOrientation::CLeft,
        Some(split.clone()),
    )?;
    r.nest(named(codec.report.clone(), "coproduct side"));
    r.eq("omega = id", &dec.omega, &id(n));
    r.eq("varpi = id", &codec.varpi, &id(n));
    let biproduct = BiproductData::new(
        dec.result.data.clone(),
        codec.result.data.clone(),
        split,
        dec.omega.clone(),
        d.clone(),
    )?;
    match factor_maps(&biproduct) {
        Ok((back, chk)) => {
            r.nest(chk.report);
            r.eq("round trip iA", &back.i_a, i_a);
            r.eq("round trip pA", &back.p_a, p_a);
            r.eq("round trip iC", &back.i_c, i_c);
            r.eq("round trip pC", &back.p_c, p_c);
        }
        Err(e) => {
            r.nest(stage_failure("weak crossed biproduct", &e));
        }
    }
    if !r.passed() {
        return Err(Error::failed("biproduct from decomposition", r));
    }
    Ok(PairDecomposition {
        biproduct,
        a: a.clone(),
        c: c.clone(),
        maps: maps.clone(),
        report: r,
    })
}

/// As [`decomposition_from_maps`], splitting π and θ first.
pub fn decomposition_from_pair<T: Scalar>(
    d: &WeakBialgebra<T>,
    pair: &IdempotentPair<T>,
) -> Result<PairDecomposition<T>> {
    let r = check_pair(d, pair);
    if !r.passed() {
        return Err(Error::failed("idempotent pair", r));
    }
    let (a, c, maps) = factors_from_pair(d, pair)?;
    decomposition_from_maps(d, &a, &c, &maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::Groupoid;
    use crate::groupoid::groupoid_algebra;
    use crate::Rational;

    fn rg(g: &Groupoid) -> WeakBialgebra<Rational> {
        groupoid_algebra(g).unwrap()
    }

    fn eta_eps(d: &WeakBialgebra<Rational>) -> LinMap<Rational> {
        comp![d.unit(), d.counit()]
    }

    #[test]
    fn trivial_pairs_decompose() {
        for g in [Groupoid::cyclic(3), Groupoid::s3()] {
            let d = rg(&g);
            let n = d.dim();
            for pair in [
                IdempotentPair {
                    pi: id(n),
                    theta: eta_eps(&d),
                },
                IdempotentPair {
                    pi: eta_eps(&d),
                    theta: id(n),
                },
            ] {
                let dec = decomposition_from_pair(&d, &pair).unwrap();
                assert!(dec.report.passed(), "{}", dec.report.render_text());
                assert_eq!(pair_from_biproduct(&dec.biproduct).unwrap(), pair);
            }
        }
    }

    #[test]
    fn non_idempotent_pair_is_refused() {
        let d = rg(&Groupoid::cyclic(2));
        let pair = IdempotentPair {
            pi: id(2).scale(&Rational::from_integer(2.into())),
            theta: eta_eps(&d),
        };
        let err = decomposition_from_pair(&d, &pair).unwrap_err();
        assert!(err.report().unwrap().fails("pi idempotent"));
    }

    #[test]
    fn perturbed_tau_is_rejected() {
        let d = rg(&Groupoid::cyclic(2));
        let pair = IdempotentPair {
            pi: id(2),
            theta: eta_eps(&d),
        };
        let dec = decomposition_from_pair(&d, &pair).unwrap();
        let b = dec.biproduct;
        let co = b.coproduct_side();
        let tau = co.tau().with_entry(0, 0, Rational::from_integer(5.into()));
        let bad = b.with_coproduct(co.with_tau(tau).unwrap()).unwrap();
        let out = evaluate_biproduct(&bad);
        assert!(!out.report.passed());
        assert!(check_biproduct(&bad).is_err());
    }
}
