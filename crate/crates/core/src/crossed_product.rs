//! Weak crossed products: an algebra A, an object V, a twisting
//! `ψ: V⊗A → A⊗V` and a cocycle `σ: V⊗V → A⊗V`, together with the
//! idempotent ∇ they induce and the algebra living on its image.
//!
//! All formulas are stated for the A⊗V layout; [`Orientation::ARight`]
//! mirrors them onto V⊗A.

use crate::error::{Error, Result};
use crate::hom::{check_algebra, check_algebra_morphism, check_linearity, ActionData, AlgebraData};
use crate::id;
use crate::linmap::LinMap;
use crate::orientation::{ot, Orientation};
use crate::report::{Check, Report};
use crate::scalar::Scalar;
use crate::split::{split_idempotent, Splitting};

#[derive(Clone, Debug, PartialEq)]
pub struct CrossedData<T> {
    algebra: AlgebraData<T>,
    vdim: usize,
    psi: LinMap<T>,
    sigma: LinMap<T>,
    preunit: Option<LinMap<T>>,
    orientation: Orientation,
}

impl<T: Scalar> CrossedData<T> {
    pub fn new(
        algebra: AlgebraData<T>,
        vdim: usize,
        psi: LinMap<T>,
        sigma: LinMap<T>,
        preunit: Option<LinMap<T>>,
        orientation: Orientation,
    ) -> Result<Self> {
        let av = algebra.dim() * vdim;
        if psi.shape() != (av, av) {
            return Err(Error::shape("twisting", psi.shape(), (av, av)));
        }
        if sigma.shape() != (av, vdim * vdim) {
            return Err(Error::shape("cocycle", sigma.shape(), (av, vdim * vdim)));
        }
        if let Some(nu) = &preunit {
            if nu.shape() != (av, 1) {
                return Err(Error::shape("preunit", nu.shape(), (av, 1)));
            }
        }
        Ok(CrossedData {
            algebra,
            vdim,
            psi,
            sigma,
            preunit,
            orientation,
        })
    }

    pub fn algebra(&self) -> &AlgebraData<T> {
        &self.algebra
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn psi(&self) -> &LinMap<T> {
        &self.psi
    }

    pub fn sigma(&self) -> &LinMap<T> {
        &self.sigma
    }

    pub fn preunit(&self) -> Option<&LinMap<T>> {
        self.preunit.as_ref()
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Dimension of A⊗V.
    pub fn total_dim(&self) -> usize {
        self.algebra.dim() * self.vdim
    }

    pub fn with_sigma(&self, sigma: LinMap<T>) -> Result<Self> {
        Self::new(
            self.algebra.clone(),
            self.vdim,
            self.psi.clone(),
            sigma,
            self.preunit.clone(),
            self.orientation,
        )
    }

    pub fn with_psi(&self, psi: LinMap<T>) -> Result<Self> {
        Self::new(
            self.algebra.clone(),
            self.vdim,
            psi,
            self.sigma.clone(),
            self.preunit.clone(),
            self.orientation,
        )
    }

    pub fn with_preunit(&self, preunit: Option<LinMap<T>>) -> Result<Self> {
        Self::new(
            self.algebra.clone(),
            self.vdim,
            self.psi.clone(),
            self.sigma.clone(),
            preunit,
            self.orientation,
        )
    }

    /// The action of A on A⊗V by multiplication in the first factor.
    pub fn algebra_action(&self) -> ActionData<T> {
        algebra_action(&self.algebra, self.vdim, self.orientation)
    }

    /// ∇ = (μ⊗V)∘(A⊗ψ)∘(A⊗V⊗η).
    pub fn nabla(&self) -> LinMap<T> {
        nabla_of(&self.algebra, self.vdim, &self.psi, self.orientation)
    }

    /// μ_{A⊗V} = (μ⊗V)∘(μ⊗σ)∘(A⊗ψ⊗V).
    pub fn product(&self) -> LinMap<T> {
        let o = self.orientation;
        let (a, v) = (self.algebra.dim(), self.vdim);
        let mu = self.algebra.mult();
        comp![
            ot!(o; mu, id(v)),
            ot!(o; mu, self.sigma),
            ot!(o; id(a), self.psi, id(v))
        ]
    }

    /// β_ν = (μ⊗V)∘(A⊗ν), when a preunit is present.
    pub fn beta(&self) -> Option<LinMap<T>> {
        self.preunit
            .as_ref()
            .map(|nu| beta_of(&self.algebra, self.vdim, nu, self.orientation))
    }
}

pub(crate) fn algebra_action<T: Scalar>(a: &AlgebraData<T>, vdim: usize, o: Orientation) -> ActionData<T> {
    let structure = ot!(o; a.mult(), id(vdim));
    match o {
        Orientation::ALeft => ActionData::left_module(a, a.dim() * vdim, structure),
        Orientation::ARight => ActionData::right_module(a, a.dim() * vdim, structure),
    }
    .expect("action shapes")
}

fn nabla_of<T: Scalar>(a: &AlgebraData<T>, v: usize, psi: &LinMap<T>, o: Orientation) -> LinMap<T> {
    let n = a.dim();
    comp![
        ot!(o; a.mult(), id(v)),
        ot!(o; id(n), psi),
        ot!(o; id(n), id(v), a.unit())
    ]
}

fn beta_of<T: Scalar>(a: &AlgebraData<T>, v: usize, nu: &LinMap<T>, o: Orientation) -> LinMap<T> {
    comp![ot!(o; a.mult(), id(v)), ot!(o; id(a.dim()), nu)]
}

/// ∇ from a twisting, refused unless it is an A-linear idempotent.
pub fn build_nabla<T: Scalar>(a: &AlgebraData<T>, vdim: usize, psi: &LinMap<T>, o: Orientation) -> Result<LinMap<T>> {
    let av = a.dim() * vdim;
    if psi.shape() != (av, av) {
        return Err(Error::shape("twisting", psi.shape(), (av, av)));
    }
    let nabla = nabla_of(a, vdim, psi, o);
    let mut r = Report::new("nabla");
    r.eq("nabla idempotent", &comp![nabla, nabla], &nabla);
    let act = algebra_action(a, vdim, o);
    r.nest(named(check_linearity(&nabla, &act, &act)?, "nabla A-linear"));
    if !r.passed() {
        return Err(Error::failed("nabla", r));
    }
    Ok(nabla)
}

fn named(mut r: Report, title: &str) -> Report {
    r.title = title.to_string();
    r
}

/// Outcome of [`check_crossed_data`]: the verdicts, the data with σ
/// normalized, and ∇.
#[derive(Clone, Debug)]
pub struct CrossedCheck<T> {
    pub report: Report,
    pub data: CrossedData<T>,
    pub nabla: LinMap<T>,
}

/// Compatibility of ψ with μ, the twisted and cocycle conditions, with σ
/// replaced by ∇∘σ when those differ.
pub fn check_crossed_data<T: Scalar>(d: &CrossedData<T>) -> CrossedCheck<T> {
    let o = d.orientation;
    let (a, v) = (d.algebra.dim(), d.vdim);
    let mu = d.algebra.mult();
    let psi = &d.psi;
    let mut r = Report::new("crossed data");
    r.eq(
        "wmeas",
        &comp![ot!(o; mu, id(v)), ot!(o; id(a), psi), ot!(o; psi, id(a))],
        &comp![psi, ot!(o; id(v), mu)],
    );
    let nabla = d.nabla();
    r.eq("nabla idempotent", &comp![nabla, nabla], &nabla);
    let act = d.algebra_action();
    r.nest(named(
        check_linearity(&nabla, &act, &act).expect("action shapes"),
        "nabla A-linear",
    ));
    let normalized = comp![nabla, d.sigma];
    let data = if normalized != d.sigma {
        r.note("cocycle replaced by its composite with nabla");
        r.push(Check::pass("idemp-sigma").with_detail("normalized"));
        d.with_sigma(normalized).expect("same shape")
    } else {
        r.push(Check::pass("idemp-sigma"));
        d.clone()
    };
    let sigma = &data.sigma;
    r.eq(
        "twisted",
        &comp![ot!(o; mu, id(v)), ot!(o; id(a), psi), ot!(o; sigma, id(a))],
        &comp![
            ot!(o; mu, id(v)),
            ot!(o; id(a), sigma),
            ot!(o; psi, id(v)),
            ot!(o; id(v), psi)
        ],
    );
    r.eq(
        "cocycle",
        &comp![ot!(o; mu, id(v)), ot!(o; id(a), sigma), ot!(o; sigma, id(v))],
        &comp![
            ot!(o; mu, id(v)),
            ot!(o; id(a), sigma),
            ot!(o; psi, id(v)),
            ot!(o; id(v), sigma)
        ],
    );
    CrossedCheck { report: r, data, nabla }
}

#[derive(Clone, Debug)]
pub struct CrossedProductResult<T> {
    /// The data actually used, with σ normalized.
    pub data: CrossedData<T>,
    pub nabla: LinMap<T>,
    pub product: LinMap<T>,
    pub splitting: Splitting<T>,
    /// The unital algebra on the image of ∇, when a preunit is given.
    pub algebra: Option<AlgebraData<T>>,
    pub beta: Option<LinMap<T>>,
    pub report: Report,
}

pub fn build_crossed_product<T: Scalar>(d: &CrossedData<T>) -> Result<CrossedProductResult<T>> {
    build_crossed_product_with(d, None)
}

/// As [`build_crossed_product`], splitting ∇ through the given factorization
/// instead of the default one.
pub fn build_crossed_product_with<T: Scalar>(
    d: &CrossedData<T>,
    splitting: Option<Splitting<T>>,
) -> Result<CrossedProductResult<T>> {
    let CrossedCheck { report, data, nabla } = check_crossed_data(d);
    if !report.passed() {
        return Err(Error::failed("crossed data", report));
    }
    let mut r = Report::new("weak crossed product");
    r.nest(report);
    let o = data.orientation;
    let (a, v) = (data.algebra.dim(), data.vdim);
    let n = a * v;
    let mu_a = data.algebra.mult();
    let eta = data.algebra.unit();
    let mu = data.product();
    r.eq(
        "product associative",
        &comp![mu, ot!(o; mu, id(n))],
        &comp![mu, ot!(o; id(n), mu)],
    );
    r.eq("product normalized nabla∘μ = μ", &comp![nabla, mu], &mu);
    r.eq("product normalized μ∘(nabla⊗nabla) = μ", &comp![mu, tens![nabla, nabla]], &mu);
    let splitting = match splitting {
        Some(s) => Splitting::new(&nabla, s.injection, s.projection)?,
        None => split_idempotent(&nabla)?,
    };
    let (i, p) = (&splitting.injection, &splitting.projection);
    let restricted = comp![p, mu, tens![i, i]];
    let (mut algebra, mut beta) = (None, None);
    match &data.preunit {
        None => {
            let k = splitting.image_dim;
            r.eq(
                "image product associative",
                &comp![restricted, tens![restricted, id(k)]],
                &comp![restricted, tens![id(k), restricted]],
            );
            r.push(Check::skipped("preunit", "no preunit given"));
        }
        Some(nu) => {
            let sigma = &data.sigma;
            let psi = &data.psi;
            let b = data.beta().expect("preunit present");
            let target = comp![nabla, ot!(o; eta, id(v))];
            let mut pre = Report::new("preunit conditions");
            pre.eq(
                "pre1",
                &comp![
                    ot!(o; mu_a, id(v)),
                    ot!(o; id(a), sigma),
                    ot!(o; psi, id(v)),
                    ot!(o; id(v), nu)
                ],
                &target,
            );
            pre.eq(
                "pre2",
                &comp![ot!(o; mu_a, id(v)), ot!(o; id(a), sigma), ot!(o; nu, id(v))],
                &target,
            );
            pre.eq(
                "pre3",
                &comp![ot!(o; mu_a, id(v)), ot!(o; id(a), psi), ot!(o; nu, id(a))],
                &b,
            );
            if !pre.passed() {
                r.nest(pre);
                return Err(Error::failed("preunit conditions", r));
            }
            r.nest(pre);
            let right = comp![mu, ot!(o; id(n), nu)];
            let left = comp![mu, ot!(o; nu, id(n))];
            r.eq("preunit two-sided", &right, &left);
            r.eq(
                "preunit absorbs",
                &right,
                &comp![mu, ot!(o; id(n), comp![mu, tens![nu, nu]])],
            );
            r.eq("idempot-preunit", &nabla, &right);
            r.eq("beta-unit β∘η = ν", &comp![b, eta], nu);
            r.eq("beta-multiplicative", &comp![mu, tens![b, b]], &comp![b, mu_a]);
            let left_a = ActionData::left_module(&data.algebra, a, mu_a.clone()).expect("regular action");
            let src = match o {
                Orientation::ALeft => left_a,
                Orientation::ARight => ActionData::right_module(&data.algebra, a, mu_a.clone()).expect("regular action"),
            };
            r.nest(named(
                check_linearity(&b, &src, &data.algebra_action()).expect("action shapes"),
                "beta-A-linear",
            ));
            let alg = AlgebraData::new(comp![p, nu], restricted.clone()).expect("image algebra shapes");
            r.nest(named(check_algebra(&alg), "crossed-algebra"));
            r.nest(named(
                check_algebra_morphism(&comp![p, b], &data.algebra, &alg).expect("shapes"),
                "beta-bar-algebra-morphism",
            ));
            algebra = Some(alg);
            beta = Some(b);
        }
    }
    if !r.passed() {
        return Err(Error::failed("weak crossed product", r));
    }
    Ok(CrossedProductResult {
        data,
        nabla,
        product: mu,
        splitting,
        algebra,
        beta,
        report: r,
    })
}

/// ψ and σ read off an associative product with preunit:
/// ψ = μ∘(η⊗V⊗β_ν), σ = μ∘(η⊗V⊗η⊗V).
pub fn recover_psi_sigma<T: Scalar>(
    product: &LinMap<T>,
    a: &AlgebraData<T>,
    vdim: usize,
    preunit: &LinMap<T>,
    o: Orientation,
) -> Result<(LinMap<T>, LinMap<T>, Report)> {
    let (k, v) = (a.dim(), vdim);
    let n = k * v;
    if product.shape() != (n, n * n) {
        return Err(Error::shape("product", product.shape(), (n, n * n)));
    }
    if preunit.shape() != (n, 1) {
        return Err(Error::shape("preunit", preunit.shape(), (n, 1)));
    }
    let mu = product;
    let nu = preunit;
    let eta = a.unit();
    let mut r = Report::new("product with preunit");
    r.eq(
        "associative",
        &comp![mu, ot!(o; mu, id(n))],
        &comp![mu, ot!(o; id(n), mu)],
    );
    r.eq(
        "A-linear",
        &comp![mu, ot!(o; a.mult(), id(v), id(n))],
        &comp![ot!(o; a.mult(), id(v)), ot!(o; id(k), mu)],
    );
    let right = comp![mu, ot!(o; id(n), nu)];
    r.eq("preunit two-sided", &right, &comp![mu, ot!(o; nu, id(n))]);
    let nu2 = comp![mu, tens![nu, nu]];
    r.eq("preunit absorbs", &right, &comp![mu, ot!(o; id(n), nu2)]);
    r.eq("preunit idempotent", &nu2, nu);
    r.eq("normalized nabla∘μ = μ", &comp![right, mu], mu);
    r.eq("normalized μ∘(nabla⊗nabla) = μ", &comp![mu, tens![right, right]], mu);
    if !r.passed() {
        return Err(Error::failed("product with preunit", r));
    }
    let b = beta_of(a, v, nu, o);
    let psi = comp![mu, ot!(o; eta, id(v), b)];
    let sigma = comp![mu, ot!(o; eta, id(v), eta, id(v))];
    Ok((psi, sigma, r))
}

#[derive(Clone, Debug)]
pub struct Decomposition<T> {
    pub result: CrossedProductResult<T>,
    /// ω: A×V → B.
    pub omega: LinMap<T>,
    pub omega_inv: LinMap<T>,
    pub report: Report,
}

/// A weak crossed product structure on A⊗V from an algebra B with maps
/// `iA: A → B`, `iV: V → B` and a section `ŵ: B → A⊗V` of μ_B∘(iA⊗iV).
#[allow(clippy::too_many_arguments)]
pub fn decompose_algebra<T: Scalar>(
    b: &AlgebraData<T>,
    a: &AlgebraData<T>,
    vdim: usize,
    i_a: &LinMap<T>,
    i_v: &LinMap<T>,
    what: &LinMap<T>,
    o: Orientation,
    splitting: Option<Splitting<T>>,
) -> Result<Decomposition<T>> {
    let (k, v, m) = (a.dim(), vdim, b.dim());
    let n = k * v;
    for (name, map, shape) in [("iA", i_a, (m, k)), ("iV", i_v, (m, v)), ("section", what, (n, m))] {
        if map.shape() != shape {
            return Err(Error::shape(name, map.shape(), shape));
        }
    }
    let mut r = Report::new("algebra decomposition");
    r.nest(named(check_algebra_morphism(i_a, a, b)?, "uni-iii-1"));
    let phi_b = comp![b.mult(), ot!(o; i_a, id(m))];
    let act_b = match o {
        Orientation::ALeft => ActionData::left_module(a, m, phi_b)?,
        Orientation::ARight => ActionData::right_module(a, m, phi_b)?,
    };
    let act_av = algebra_action(a, v, o);
    r.nest(named(check_linearity(what, &act_b, &act_av)?, "uni-iii-2"));
    let omega_bar = comp![b.mult(), ot!(o; i_a, i_v)];
    r.eq("uni-iii-3", &comp![omega_bar, what], &id(m));
    if !r.passed() {
        return Err(Error::failed("decomposition hypotheses", r));
    }
    let big_omega = comp![what, omega_bar];
    r.eq("Omega idempotent", &comp![big_omega, big_omega], &big_omega);
    r.nest(named(check_linearity(&big_omega, &act_av, &act_av)?, "Omega A-linear"));
    let product = comp![what, b.mult(), tens![omega_bar, omega_bar]];
    let nu = comp![what, b.unit()];
    let (psi, sigma, rec) = recover_psi_sigma(&product, a, v, &nu, o)?;
    r.nest(rec);
    let data = CrossedData::new(a.clone(), v, psi, sigma, Some(nu), o)?;
    let result = build_crossed_product_with(&data, splitting)?;
    r.eq("nabla = Omega", &result.nabla, &big_omega);
    r.eq("product from section", &result.product, &product);
    let (i, p) = (&result.splitting.injection, &result.splitting.projection);
    let omega = comp![omega_bar, i];
    let omega_inv = comp![p, what];
    r.eq("omega∘omega⁻¹ = id", &comp![omega, omega_inv], &id(m));
    r.eq(
        "omega⁻¹∘omega = id",
        &comp![omega_inv, omega],
        &id(result.splitting.image_dim),
    );
    r.eq("omega∘p = μ_B∘(iA⊗iV)", &comp![omega, p], &omega_bar);
    let alg = result.algebra.as_ref().expect("preunit present");
    r.nest(named(check_algebra_morphism(&omega, alg, b)?, "omega algebra morphism"));
    if !r.passed() {
        return Err(Error::failed("algebra decomposition", r));
    }
    Ok(Decomposition {
        result,
        omega,
        omega_inv,
        report: r,
    })
}

#[derive(Clone, Debug)]
pub struct Universal<T> {
    pub omega: LinMap<T>,
    pub result: CrossedProductResult<T>,
    pub report: Report,
}

/// The algebra morphism A×V → B induced by `iA`, `iV` when they satisfy the
/// three compatibility conditions.
pub fn check_universal<T: Scalar>(
    d: &CrossedData<T>,
    b: &AlgebraData<T>,
    i_a: &LinMap<T>,
    i_v: &LinMap<T>,
) -> Result<Universal<T>> {
    let o = d.orientation;
    let (v, m) = (d.vdim, b.dim());
    if i_v.shape() != (m, v) {
        return Err(Error::shape("iV", i_v.shape(), (m, v)));
    }
    let gate = check_algebra_morphism(i_a, &d.algebra, b)?;
    if !gate.passed() {
        return Err(Error::failed("iA algebra morphism", gate));
    }
    let result = build_crossed_product(d)?;
    let data = &result.data;
    let nu = data.preunit.as_ref().ok_or_else(|| {
        let mut r = Report::new("universal property");
        r.push(Check::fail("preunit", crate::report::Witness::values("absent", "required")));
        Error::failed("universal property", r)
    })?;
    let omega_bar = comp![b.mult(), ot!(o; i_a, i_v)];
    let mut r = Report::new("universal property");
    r.eq("unidad-uni", &comp![omega_bar, nu], b.unit());
    r.eq("psi-uni", &comp![omega_bar, data.psi], &comp![b.mult(), ot!(o; i_v, i_a)]);
    r.eq("sigma-uni", &comp![omega_bar, data.sigma], &comp![b.mult(), tens![i_v, i_v]]);
    if !r.passed() {
        return Err(Error::failed("universal property", r));
    }
    let (i, p) = (&result.splitting.injection, &result.splitting.projection);
    let omega = comp![omega_bar, i];
    let alg = result.algebra.as_ref().expect("preunit present");
    r.nest(named(check_algebra_morphism(&omega, alg, b)?, "omega algebra morphism"));
    let beta = result.beta.as_ref().expect("preunit present");
    r.eq("universal-diagram-A", &comp![omega, p, beta], i_a);
    r.eq(
        "universal-diagram-V",
        &comp![omega, p, ot!(o; d.algebra.unit(), id(v))],
        i_v,
    );
    if !r.passed() {
        return Err(Error::failed("universal property", r));
    }
    Ok(Universal {
        omega,
        result,
        report: r,
    })
}

#[derive(Clone, Debug)]
pub struct Switched<T> {
    pub data: CrossedData<T>,
    pub source: CrossedProductResult<T>,
    pub target: CrossedProductResult<T>,
    pub report: Report,
}

/// Moves a weak crossed product to the other side along
/// `ψ̄: A⊗V → V⊗A` (read in the input layout).
pub fn switch_sides<T: Scalar>(d: &CrossedData<T>, psi_bar: &LinMap<T>) -> Result<Switched<T>> {
    let source = build_crossed_product(d)?;
    let src = &source.data;
    let sigma_bar = comp![psi_bar, src.sigma];
    let nu_bar = src.preunit.as_ref().map(|nu| comp![psi_bar, nu]);
    let out = CrossedData::new(
        src.algebra.clone(),
        src.vdim,
        psi_bar.clone(),
        sigma_bar,
        nu_bar,
        src.orientation.opposite(),
    )?;
    let mut r = Report::new("side switch");
    let mut hyp = Report::new("side switch hypotheses");
    let probe = check_crossed_data(&out);
    match probe.report.find("wmeas") {
        Some(c) => {
            let mut c = c.clone();
            c.name = "idem-sim".into();
            hyp.push(c);
        }
        None => unreachable!("wmeas always evaluated"),
    }
    hyp.eq("idem-psiAV", &comp![src.psi, psi_bar], &source.nabla);
    hyp.eq("idem-psiVA", &comp![psi_bar, src.psi], &out.nabla());
    let ok = hyp.passed();
    r.nest(hyp);
    if !ok {
        return Err(Error::failed("side switch hypotheses", r));
    }
    let target = build_crossed_product(&out)?;
    r.nest(named(target.report.clone(), "switched crossed product"));
    r.eq(
        "idem-pro",
        &target.product,
        &comp![psi_bar, source.product, tens![src.psi, src.psi]],
    );
    if !r.passed() {
        return Err(Error::failed("side switch", r));
    }
    Ok(Switched {
        data: target.data.clone(),
        source,
        target,
        report: r,
    })
}
