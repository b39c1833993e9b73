//! Weak projections `f: B → D`, `g: D → B` of weak Hopf algebras, the
//! entwining structure they induce, the base D^B and the weak crossed
//! biproduct D ≅ D^B⊗B.

use crate::biproduct::{evaluate_biproduct, factor_maps, BiproductCheck, BiproductData, IdempotentPair};
use crate::crossed_coproduct::CoCrossedData;
use crate::crossed_product::CrossedData;
use crate::error::{Error, Result};
use crate::hom::{
    check_action, check_algebra_morphism, check_coalgebra, check_coalgebra_morphism, check_linearity, convolution,
    ActionData, AlgebraData, CoalgebraData,
};
use crate::id;
use crate::linmap::LinMap;
use crate::orientation::{CoOrientation, Orientation};
use crate::report::{Check, Report, Witness};
use crate::scalar::Scalar;
use crate::split::{split_idempotent, Splitting};
use crate::weak_hopf::{check_weak_bialgebra, compute_pi, full_report, WeakBialgebra};

#[derive(Clone, Debug, PartialEq)]
pub struct WeakProjection<T> {
    d: WeakBialgebra<T>,
    b: WeakBialgebra<T>,
    f: LinMap<T>,
    g: LinMap<T>,
}

impl<T: Scalar> WeakProjection<T> {
    pub fn new(d: WeakBialgebra<T>, b: WeakBialgebra<T>, f: LinMap<T>, g: LinMap<T>) -> Result<Self> {
        let (n, m) = (d.dim(), b.dim());
        if f.shape() != (n, m) {
            return Err(Error::shape("f", f.shape(), (n, m)));
        }
        if g.shape() != (m, n) {
            return Err(Error::shape("g", g.shape(), (m, n)));
        }
        Ok(WeakProjection { d, b, f, g })
    }

    pub fn d(&self) -> &WeakBialgebra<T> {
        &self.d
    }

    pub fn b(&self) -> &WeakBialgebra<T> {
        &self.b
    }

    pub fn f(&self) -> &LinMap<T> {
        &self.f
    }

    pub fn g(&self) -> &LinMap<T> {
        &self.g
    }

    /// φ_D = μ_D∘(D⊗f): D⊗B → D.
    pub fn phi_d(&self) -> LinMap<T> {
        comp![self.d.mult(), tens![id(self.d.dim()), self.f]]
    }

    pub fn with_g(&self, g: LinMap<T>) -> Result<Self> {
        Self::new(self.d.clone(), self.b.clone(), self.f.clone(), g)
    }

    pub fn with_f(&self, f: LinMap<T>) -> Result<Self> {
        Self::new(self.d.clone(), self.b.clone(), f, self.g.clone())
    }

    /// D as a right B-module through f.
    pub fn module(&self) -> ActionData<T> {
        ActionData::right_module(self.b.algebra(), self.d.dim(), self.phi_d()).expect("module shapes")
    }

    /// A basis pair (i, j) with g(e_i e_j) ≠ g(e_i) g(e_j), if g is not
    /// multiplicative.
    pub fn g_multiplicativity_witness(&self) -> Option<(usize, usize)> {
        let n = self.d.dim();
        let lhs = comp![self.g, self.d.mult()];
        let rhs = comp![self.b.mult(), tens![self.g, self.g]];
        lhs.first_difference(&rhs).map(|w| (w.col / n, w.col % n))
    }
}

fn named(mut r: Report, title: &str) -> Report {
    r.title = title.to_string();
    r
}

/// The axioms of a weak projection. Whether g is multiplicative is only
/// recorded as a note: it is not required.
pub fn check_weak_projection<T: Scalar>(p: &WeakProjection<T>) -> Report {
    let (d, b) = (&p.d, &p.b);
    let (f, g) = (&p.f, &p.g);
    let mut r = Report::new("weak projection");
    r.nest(named(check_weak_bialgebra(d), "D weak bialgebra"));
    r.nest(named(full_report(b), "B weak Hopf algebra"));
    if b.antipode().is_none() {
        r.push(Check::fail("B antipode", Witness::values("absent", "present")));
    }
    r.nest(named(
        check_algebra_morphism(f, b.algebra(), d.algebra()).expect("shapes"),
        "f algebra morphism",
    ));
    r.nest(named(
        check_coalgebra_morphism(f, b.coalgebra(), d.coalgebra()).expect("shapes"),
        "f coalgebra morphism",
    ));
    r.nest(named(
        check_coalgebra_morphism(g, d.coalgebra(), b.coalgebra()).expect("shapes"),
        "g coalgebra morphism",
    ));
    r.eq("g∘f = id", &comp![g, f], &id(b.dim()));
    r.eq("bmodule g∘φ_D = μ_B∘(g⊗B)", &comp![g, p.phi_d()], &comp![b.mult(), tens![g, id(b.dim())]]);
    r.eq("g∘η_D = η_B", &comp![g, d.unit()], b.unit());
    match p.g_multiplicativity_witness() {
        Some((i, j)) => r.note(format!(
            "g is not multiplicative: g(e{i}·e{j}) ≠ g(e{i})·g(e{j})"
        )),
        None => r.note("g is multiplicative"),
    }
    r
}

/// A weak entwining ψ: D⊗B → B⊗D with its idempotent e: D → B.
#[derive(Clone, Debug, PartialEq)]
pub struct EntwiningData<T> {
    pub algebra: AlgebraData<T>,
    pub coalgebra: CoalgebraData<T>,
    pub psi: LinMap<T>,
    pub e: LinMap<T>,
}

impl<T: Scalar> EntwiningData<T> {
    /// e = (B⊗ε_D)∘ψ∘(D⊗η_B).
    pub fn new(algebra: AlgebraData<T>, coalgebra: CoalgebraData<T>, psi: LinMap<T>) -> Result<Self> {
        let (m, n) = (algebra.dim(), coalgebra.dim());
        if psi.shape() != (m * n, n * m) {
            return Err(Error::shape("entwining", psi.shape(), (m * n, n * m)));
        }
        let e = comp![tens![id(m), coalgebra.counit()], psi, tens![id(n), algebra.unit()]];
        Ok(EntwiningData {
            algebra,
            coalgebra,
            psi,
            e,
        })
    }
}

/// The four weak entwining axioms.
pub fn check_entwining<T: Scalar>(ent: &EntwiningData<T>) -> Report {
    let (a, c) = (&ent.algebra, &ent.coalgebra);
    let (m, n) = (a.dim(), c.dim());
    let (psi, e) = (&ent.psi, &ent.e);
    let (bm, dn) = (id(m), id(n));
    let mut r = Report::new("weak entwining");
    r.eq(
        "entwining-a multiplicative",
        &comp![psi, tens![dn, a.mult()]],
        &comp![tens![a.mult(), dn], tens![bm, psi], tens![psi, bm]],
    );
    r.eq(
        "entwining-b comultiplicative",
        &comp![tens![bm, c.comult()], psi],
        &comp![tens![psi, dn], tens![dn, psi], tens![c.comult(), bm]],
    );
    r.eq(
        "entwining-c unit",
        &comp![psi, tens![dn, a.unit()]],
        &comp![tens![e, dn], c.comult()],
    );
    r.eq(
        "entwining-d counit",
        &comp![tens![bm, c.counit()], psi],
        &comp![a.mult(), tens![e, bm]],
    );
    r
}

/// ψ_RR = (B⊗μ_D)∘(c_{D,B}⊗f)∘(D⊗δ_B), the entwining of a weak projection,
/// with e_RR checked against Π^R_B∘g when g is given, and the report of its axioms.
pub fn build_entwining<T: Scalar>(
    b: &WeakBialgebra<T>,
    d: &WeakBialgebra<T>,
    f: &LinMap<T>,
    g: Option<&LinMap<T>>,
) -> Result<(EntwiningData<T>, Report)> {
    let (m, n) = (b.dim(), d.dim());
    if f.shape() != (n, m) {
        return Err(Error::shape("f", f.shape(), (n, m)));
    }
    let psi = comp![
        tens![id(m), d.mult()],
        tens![LinMap::flip(n, m), f],
        tens![id(n), b.comult()]
    ];
    let ent = EntwiningData::new(b.algebra().clone(), d.coalgebra().clone(), psi)?;
    let mut r = check_entwining(&ent);
    if let Some(g) = g {
        let pi = compute_pi(b)?;
        r.eq("err-pi e = PiR_B∘g", &ent.e, &comp![pi.pi_r, g]);
    }
    if !r.passed() {
        return Err(Error::failed("weak entwining", r));
    }
    Ok((ent, r))
}

/// A right B-module, right D-comodule M compatible with ψ:
/// ρ∘φ = (φ⊗D)∘(M⊗ψ)∘(ρ⊗B).
pub fn check_entwined_module<T: Scalar>(
    ent: &EntwiningData<T>,
    carrier: usize,
    phi: &LinMap<T>,
    rho: &LinMap<T>,
) -> Result<Report> {
    let (m, n) = (ent.algebra.dim(), ent.coalgebra.dim());
    let act = ActionData::right_module(&ent.algebra, carrier, phi.clone())?;
    let coact = ActionData::right_comodule(&ent.coalgebra, carrier, rho.clone())?;
    let mut r = Report::new("entwined module");
    r.nest(named(check_action(&act), "right module"));
    r.nest(named(check_action(&coact), "right comodule"));
    r.eq(
        "m compatibility",
        &comp![rho, phi],
        &comp![tens![phi, id(n)], tens![id(carrier), ent.psi], tens![rho, id(m)]],
    );
    Ok(r)
}

/// The conditions making D, acted on by B through φ, a right B-module
/// coalgebra. The braiding is the flip, so c = c⁻¹.
pub fn check_module_coalgebra<T: Scalar>(
    d: &CoalgebraData<T>,
    phi: &LinMap<T>,
    b: &WeakBialgebra<T>,
) -> Result<Report> {
    let (n, m) = (d.dim(), b.dim());
    let act = ActionData::right_module(b.algebra(), n, phi.clone())?;
    let pi = compute_pi(b)?;
    let (dn, bm) = (id(n), id(m));
    let eps_phi = comp![d.counit(), phi];
    let mut r = Report::new("module coalgebra");
    r.nest(named(check_action(&act), "right module"));
    r.eq(
        "comp δ_D∘φ",
        &comp![tens![phi, phi], tens![dn, LinMap::flip(n, m), bm], tens![d.comult(), b.comult()]],
        &comp![d.comult(), phi],
    );
    let mu_b = b.mult();
    let eps2 = tens![d.counit(), b.counit()];
    r.eq(
        "mc-i",
        &comp![eps_phi, tens![dn, mu_b]],
        &comp![eps2, tens![phi, mu_b], tens![dn, comp![LinMap::flip(m, m), b.comult()], bm]],
    );
    r.eq(
        "mc-ii",
        &comp![eps_phi, tens![dn, mu_b]],
        &comp![eps2, tens![phi, mu_b], tens![dn, b.comult(), bm]],
    );
    r.eq(
        "mc-iii",
        &comp![phi, tens![dn, pi.pi_l]],
        &comp![tens![dn, eps_phi], tens![comp![LinMap::flip(n, n), d.comult()], bm]],
    );
    r.eq(
        "mc-iv",
        &comp![phi, tens![dn, pi.pi_l_bar]],
        &comp![tens![dn, eps_phi], tens![d.comult(), bm]],
    );
    r.eq("mc-v", &comp![eps_phi, tens![dn, pi.pi_l]], &eps_phi);
    r.eq("mc-vi", &comp![eps_phi, tens![dn, pi.pi_l_bar]], &eps_phi);
    Ok(r)
}

/// The coinvariant coalgebra D^B as the image of t.
#[derive(Clone, Debug)]
pub struct BaseSplit<T> {
    /// t = φ_D∘(D⊗(λ_B∘g))∘δ_D.
    pub t: LinMap<T>,
    pub splitting: Splitting<T>,
    pub coalgebra: CoalgebraData<T>,
    /// β_D = (D⊗(ε∘φ_D))∘(δ⊗B).
    pub beta_d: LinMap<T>,
    pub report: Report,
}

pub fn build_base<T: Scalar>(p: &WeakProjection<T>) -> Result<BaseSplit<T>> {
    let wp = check_weak_projection(p);
    if !wp.passed() {
        return Err(Error::failed("weak projection", wp));
    }
    let (d, b) = (&p.d, &p.b);
    let (n, m) = (d.dim(), b.dim());
    let dn = id(n);
    let lambda = b.antipode().ok_or(Error::MissingAntipode)?;
    let phi = p.phi_d();
    let delta = d.comult();
    let eps = d.counit();
    let t = comp![phi, tens![dn, comp![lambda, p.g]], delta];
    let mut r = Report::new("coinvariants");
    r.eq("t idempotent", &comp![t, t], &t);
    if !r.passed() {
        return Err(Error::failed("coinvariants", r));
    }
    let splitting = split_idempotent(&t)?;
    let (i, pr) = (&splitting.injection, &splitting.projection);
    let pi = compute_pi(b)?;
    let beta_d = comp![tens![dn, comp![eps, phi]], tens![delta, id(m)]];
    r.eq("betaD = φ_D∘(D⊗PibarL_B)", &beta_d, &comp![phi, tens![dn, pi.pi_l_bar]]);
    r.eq("coequalizer p∘φ_D = p∘betaD", &comp![pr, phi], &comp![pr, beta_d]);
    r.eq("ε∘φ_D = ε∘betaD", &comp![eps, phi], &comp![eps, beta_d]);
    r.eq("p∘t = p", &comp![pr, t], pr);
    r.eq("ε∘t = ε", &comp![eps, t], eps);
    r.eq("delta1 (D⊗t)∘δ∘i = δ∘i", &comp![tens![dn, t], delta, i], &comp![delta, i]);
    r.eq("delta2 (D⊗t)∘δ∘t = δ∘t", &comp![tens![dn, t], delta, t], &comp![delta, t]);
    let co = CoalgebraData::new(comp![eps, i], comp![tens![pr, pr], delta, i])?;
    r.nest(named(check_coalgebra(&co), "D^B coalgebra"));
    r.eq("counit factors ε_D = ε_B∘p", eps, &comp![co.counit(), pr]);
    r.eq("comultiplication factors", &comp![tens![pr, pr], delta], &comp![co.comult(), pr]);
    r.nest(named(check_coalgebra_morphism(pr, d.coalgebra(), &co)?, "p coalgebra morphism"));
    r.eq(
        "second-equ",
        &comp![tens![pr, dn], delta, phi, tens![i, id(m)]],
        &comp![tens![pr, phi], tens![comp![delta, i], id(m)]],
    );
    if !r.passed() {
        return Err(Error::failed("coinvariants", r));
    }
    Ok(BaseSplit {
        t,
        splitting,
        coalgebra: co,
        beta_d,
        report: r,
    })
}

/// Cocleftness of D with h = g and h⁻¹ = λ_B∘g.
pub fn check_cocleft<T: Scalar>(p: &WeakProjection<T>, ent: &EntwiningData<T>) -> Result<Report> {
    let lambda = p.b.antipode().ok_or(Error::MissingAntipode)?;
    let h_inv = comp![lambda, p.g];
    check_cocleft_with(p, ent, &p.g, &h_inv)
}

pub fn check_cocleft_with<T: Scalar>(
    p: &WeakProjection<T>,
    ent: &EntwiningData<T>,
    h: &LinMap<T>,
    h_inv: &LinMap<T>,
) -> Result<Report> {
    let (d, b) = (&p.d, &p.b);
    let (n, m) = (d.dim(), b.dim());
    for (name, map) in [("h", h), ("h⁻¹", h_inv)] {
        if map.shape() != (m, n) {
            return Err(Error::shape(name, map.shape(), (m, n)));
        }
    }
    let phi = p.phi_d();
    let beta_d = comp![tens![id(n), comp![d.counit(), phi]], tens![d.comult(), id(m)]];
    let mut r = Report::new("cocleft");
    r.nest(check_entwined_module(ent, n, &phi, d.comult())?);
    let regular = ActionData::right_module(b.algebra(), m, b.mult().clone())?;
    r.nest(named(check_linearity(h, &p.module(), &regular)?, "cocleft-i h right B-linear"));
    r.eq(
        "cocleft-ii h⁻¹∧h = e",
        &convolution(h_inv, h, d.coalgebra(), b.algebra())?,
        &ent.e,
    );
    r.eq(
        "cocleft-iii",
        &comp![b.mult(), tens![id(m), h_inv], ent.psi],
        &comp![h_inv, beta_d],
    );
    Ok(r)
}

/// D ≅ D^B⊗B as a weak crossed biproduct.
#[derive(Clone, Debug)]
pub struct ProjectionBiproduct<T> {
    pub biproduct: BiproductData<T>,
    pub base: BaseSplit<T>,
    pub entwining: EntwiningData<T>,
    /// (p⊗g)∘δ_D: D → D^B⊗B.
    pub i_db: LinMap<T>,
    /// μ_D∘(i⊗f): D^B⊗B → D.
    pub p_db: LinMap<T>,
    pub check: BiproductCheck<T>,
    pub report: Report,
}

pub fn biproduct_from_projection<T: Scalar>(p: &WeakProjection<T>) -> Result<ProjectionBiproduct<T>> {
    let base = build_base(p)?;
    let (d, b) = (&p.d, &p.b);
    let (f, g) = (&p.f, &p.g);
    let (n, m) = (d.dim(), b.dim());
    let k = base.splitting.image_dim;
    let (i, pr) = (&base.splitting.injection, &base.splitting.projection);
    let (mu, delta) = (d.mult(), d.comult());
    let mut r = Report::new("biproduct from weak projection");
    r.nest(base.report.clone());
    let (entwining, ent_report) = build_entwining(b, d, f, Some(g))?;
    r.nest(ent_report);
    r.nest(check_module_coalgebra(d.coalgebra(), &p.phi_d(), b)?);
    r.nest(check_cocleft(p, &entwining)?);

    let i_db = comp![tens![pr, g], delta];
    let p_db = comp![mu, tens![i, f]];
    r.eq("p_db∘i_db = id", &comp![p_db, i_db], &id(n));
    let nabla = comp![i_db, p_db];
    let psi = comp![tens![pr, g], delta, mu, tens![f, i]];
    let sigma = comp![tens![pr, g], delta, mu, tens![i, i]];
    let chi = comp![tens![g, pr], delta, mu, tens![i, f]];
    let tau = comp![tens![g, g], delta, mu, tens![i, f]];
    let nu = comp![i_db, d.unit()];
    let upsilon = comp![d.counit(), p_db];
    let product = CrossedData::new(b.algebra().clone(), k, psi.clone(), sigma.clone(), Some(nu), Orientation::ARight)?;
    let coproduct = CoCrossedData::new(base.coalgebra.clone(), m, chi, tau.clone(), Some(upsilon.clone()), CoOrientation::CLeft)?;
    let split = Splitting::new(&nabla, i_db.clone(), p_db.clone())?;
    let biproduct = BiproductData::new(product, coproduct, split, id(n), d.clone())?;
    let (maps, check) = match factor_maps(&biproduct) {
        Ok(x) => x,
        Err(e) => {
            if let Some(sub) = e.report() {
                r.nest(sub.clone());
            }
            return Err(Error::failed("biproduct from weak projection", r));
        }
    };
    r.nest(check.report.clone());
    let mu_cb = biproduct.product_side().product();
    let delta_cb = biproduct.coproduct_side().coproduct();
    r.eq("proc1 μ = i_db∘μ_D∘(p_db⊗p_db)", &mu_cb, &comp![i_db, mu, tens![p_db, p_db]]);
    r.eq(
        "coproc1 δ = (i_db⊗i_db)∘δ_D∘p_db",
        &delta_cb,
        &comp![tens![i_db, i_db], delta, p_db],
    );
    let beta = biproduct.product_side().beta().expect("preunit present");
    let eta_b = b.unit();
    r.eq(
        "psidb ψ = μ∘(β_ν⊗C⊗η_B)",
        &psi,
        &comp![mu_cb, tens![beta, id(k), eta_b]],
    );
    r.eq(
        "sigmadb σ = μ∘(C⊗η_B⊗C⊗η_B)",
        &sigma,
        &comp![mu_cb, tens![id(k), eta_b, id(k), eta_b]],
    );
    let pi = compute_pi(b)?;
    let pi_d = compute_pi(d)?;
    r.eq(
        "exp-betanu",
        &beta,
        &comp![tens![comp![pr, f, pi.pi_l_bar], id(m)], b.comult()],
    );
    r.eq("newbetanu β_ν = i_db∘f", &beta, &comp![i_db, f]);
    r.eq("tf t∘f = f∘PiL_B", &comp![base.t, f], &comp![f, pi.pi_l]);
    r.eq("fpibarl f∘PibarL_B = PibarL_D∘f", &comp![f, pi.pi_l_bar], &comp![pi_d.pi_l_bar, f]);
    r.eq("betacomul", &comp![delta_cb, beta], &comp![tens![beta, beta], b.comult()]);
    let eps_c = base.coalgebra.counit();
    r.eq("tau-nabla τ = (ε_C⊗δ_B)∘nabla", &tau, &comp![tens![eps_c, b.comult()], nabla]);
    r.eq("nu-nabla υ = (ε_C⊗ε_B)∘nabla", &upsilon, &comp![tens![eps_c, b.counit()], nabla]);
    let pair = maps.pair();
    r.eq("pi = f∘g", &pair.pi, &comp![f, g]);
    r.eq("theta = t", &pair.theta, &base.t);
    if !r.passed() {
        return Err(Error::failed("biproduct from weak projection", r));
    }
    Ok(ProjectionBiproduct {
        biproduct,
        base,
        entwining,
        i_db,
        p_db,
        check,
        report: r,
    })
}

/// The idempotent pair (f∘g, t) of a weak projection.
pub fn pair_from_projection<T: Scalar>(p: &WeakProjection<T>) -> Result<IdempotentPair<T>> {
    let base = build_base(p)?;
    Ok(IdempotentPair {
        pi: comp![p.f, p.g],
        theta: base.t,
    })
}

/// f = α∘p∘β_ν and g = (ε_C⊗B)∘i∘α⁻¹, for a biproduct whose algebra factor
/// is the algebra of the weak Hopf algebra `bb`.
///
/// The three extra conditions are evaluated even when a biproduct clause
/// fails, so a refusal names every broken condition.
pub fn projection_from_biproduct<T: Scalar>(
    bp: &BiproductData<T>,
    bb: &WeakBialgebra<T>,
) -> Result<(WeakProjection<T>, Report)> {
    if bp.product_side().algebra() != bb.algebra() {
        return Err(Error::IncompatibleActions(
            "algebra factor differs from the given weak Hopf algebra".to_string(),
        ));
    }
    let check = evaluate_biproduct(bp);
    let mut r = Report::new("weak projection from biproduct");
    r.nest(check.report.clone());
    let (c, a) = (bp.c_dim(), bp.a_dim());
    let co = bp.coproduct_side();
    let eps_c = co.coalgebra().counit();
    let nabla = bp.product_side().nabla();
    debug_assert_eq!(nabla.dom(), c * a);
    match check.product.as_ref().and_then(|p| p.beta.as_ref()) {
        Some(beta) => {
            r.eq("betacomu2", &comp![co.coproduct(), beta], &comp![tens![beta, beta], bb.comult()]);
        }
        None => {
            r.push(Check::skipped("betacomu2", "no crossed product with preunit"));
        }
    }
    r.eq(
        "tau-nabla2 τ = (ε_C⊗δ_A)∘nabla",
        co.tau(),
        &comp![tens![eps_c, bb.comult()], nabla],
    );
    match co.precounit() {
        Some(u) => {
            r.eq(
                "nu-nabla2 υ = (ε_C⊗ε_A)∘nabla",
                u,
                &comp![tens![eps_c, bb.counit()], nabla],
            );
        }
        None => {
            r.push(Check::fail("nu-nabla2 υ = (ε_C⊗ε_A)∘nabla", Witness::values("absent", "present")));
        }
    }
    if !r.passed() {
        return Err(Error::failed("weak projection from biproduct", r));
    }
    let (maps, _) = factor_maps(bp)?;
    let proj = WeakProjection::new(bp.target().clone(), bb.clone(), maps.i_a, maps.p_a)?;
    r.nest(check_weak_projection(&proj));
    if !r.passed() {
        return Err(Error::failed("weak projection from biproduct", r));
    }
    Ok((proj, r))
}
