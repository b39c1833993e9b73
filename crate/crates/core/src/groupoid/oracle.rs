//! The biproduct of an exact factorization written down directly from the
//! factorization table, without any linear algebra. Used to cross-check the
//! generic construction.
//!
//! C = RH and B = RV, both with their arrows in ascending order; the basis
//! vector ω⊗σ of C⊗B has index `pos(ω) * |V| + pos(σ)`.

use crate::error::Result;
use crate::linmap::LinMap;
use crate::projection::{biproduct_from_projection, ProjectionBiproduct};
use crate::report::Report;
use crate::scalar::Scalar;

use super::factor::{projection_morphisms, Factorization};

/// The thirteen structure maps of the biproduct on RH⊗RV.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleMaps<T> {
    pub injection: LinMap<T>,
    pub projection: LinMap<T>,
    pub nabla: LinMap<T>,
    pub preunit: LinMap<T>,
    pub beta: LinMap<T>,
    pub precounit: LinMap<T>,
    pub gamma: LinMap<T>,
    pub psi: LinMap<T>,
    pub sigma: LinMap<T>,
    pub chi: LinMap<T>,
    pub tau: LinMap<T>,
    pub product: LinMap<T>,
    pub coproduct: LinMap<T>,
}

pub const ORACLE_NAMES: [&str; 13] = [
    "injection",
    "projection",
    "nabla",
    "preunit",
    "beta",
    "precounit",
    "gamma",
    "psi",
    "sigma",
    "chi",
    "tau",
    "product",
    "coproduct",
];

impl<T: Scalar> OracleMaps<T> {
    pub fn get(&self, name: &str) -> Option<&LinMap<T>> {
        Some(match name {
            "injection" => &self.injection,
            "projection" => &self.projection,
            "nabla" => &self.nabla,
            "preunit" => &self.preunit,
            "beta" => &self.beta,
            "precounit" => &self.precounit,
            "gamma" => &self.gamma,
            "psi" => &self.psi,
            "sigma" => &self.sigma,
            "chi" => &self.chi,
            "tau" => &self.tau,
            "product" => &self.product,
            "coproduct" => &self.coproduct,
            _ => return None,
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &LinMap<T>)> {
        ORACLE_NAMES.iter().map(move |&n| (n, self.get(n).expect("known name")))
    }
}

pub fn oracle_biproduct<T: Scalar>(fz: &Factorization) -> OracleMaps<T> {
    let g = &fz.groupoid;
    let (n, nh, nv) = (g.len(), fz.h.len(), fz.v.len());
    let k = nh * nv;
    let hp = |a: usize| fz.h_pos(a).expect("arrow of H");
    let vp = |a: usize| fz.v_pos(a).expect("arrow of V");
    let cb = |h: usize, v: usize| hp(h) * nv + vp(v);
    let one = T::one;
    // composable pair ω⊗σ of C⊗B, as arrows of G
    let pair = |c: usize| {
        let (w, s) = (fz.h[c / nv], fz.v[c % nv]);
        g.compose(w, s).map(|ws| (w, s, ws))
    };
    let id_of = |x: usize| g.identity(x).expect("identity");

    let injection = LinMap::from_basis_fn(k, n, |a| Some((cb(fz.h_part(a), fz.v_part(a)), one())));
    let projection = LinMap::from_basis_fn(n, k, |c| pair(c).map(|(_, _, ws)| (ws, one())));
    let nabla = LinMap::from_basis_fn(k, k, |c| pair(c).map(|_| (c, one())));
    let preunit = LinMap::from_columns(
        k,
        1,
        vec![{
            let mut col: Vec<(usize, T)> = (0..g.objects().len())
                .map(|x| (cb(id_of(x), id_of(x)), one()))
                .collect();
            col.sort_by_key(|e| e.0);
            col
        }],
    )
    .expect("preunit column");
    let beta = LinMap::from_basis_fn(k, nv, |j| {
        let s = fz.v[j];
        Some((cb(id_of(g.tgt(s)), s), one()))
    });
    let precounit = LinMap::from_basis_fn(1, k, |c| pair(c).map(|_| (0, one())));
    let gamma = LinMap::from_basis_fn(nh, k, |c| pair(c).map(|(w, _, _)| (hp(w), one())));
    // B⊗C → C⊗B
    let psi = LinMap::from_basis_fn(k, nv * nh, |c| {
        let (s, w) = (fz.v[c / nh], fz.h[c % nh]);
        g.compose(s, w).map(|sw| (cb(fz.h_part(sw), fz.v_part(sw)), one()))
    });
    let sigma = LinMap::from_basis_fn(k, nh * nh, |c| {
        let (w1, w2) = (fz.h[c / nh], fz.h[c % nh]);
        g.compose(w1, w2).map(|w| (cb(w, id_of(g.src(w2))), one()))
    });
    // C⊗B → B⊗C
    let chi = LinMap::from_basis_fn(nv * nh, k, |c| pair(c).map(|(w, s, _)| (vp(s) * nh + hp(w), one())));
    let tau = LinMap::from_basis_fn(nv * nv, k, |c| pair(c).map(|(_, s, _)| (vp(s) * nv + vp(s), one())));
    let product = LinMap::from_basis_fn(k, k * k, |c| {
        let (w1, s1) = (fz.h[(c / k) / nv], fz.v[(c / k) % nv]);
        let (w2, s2) = (fz.h[(c % k) / nv], fz.v[(c % k) % nv]);
        g.compose(w1, s1)?;
        g.compose(w2, s2)?;
        let mid = g.compose(s1, w2)?;
        let h = g.compose(w1, fz.h_part(mid)).expect("H composable");
        let v = g.compose(fz.v_part(mid), s2).expect("V composable");
        Some((cb(h, v), one()))
    });
    let coproduct = LinMap::from_basis_fn(k * k, k, |c| pair(c).map(|_| (c * k + c, one())));
    OracleMaps {
        injection,
        projection,
        nabla,
        preunit,
        beta,
        precounit,
        gamma,
        psi,
        sigma,
        chi,
        tau,
        product,
        coproduct,
    }
}

/// The same thirteen maps read off the generic construction of the
/// biproduct through the weak projection of the factorization.
pub fn generic_maps<T: Scalar>(out: &ProjectionBiproduct<T>) -> OracleMaps<T> {
    let prod = out.biproduct.product_side();
    let co = out.biproduct.coproduct_side();
    OracleMaps {
        injection: out.i_db.clone(),
        projection: out.p_db.clone(),
        nabla: prod.nabla(),
        preunit: prod.preunit().expect("preunit").clone(),
        beta: prod.beta().expect("preunit"),
        precounit: co.precounit().expect("precounit").clone(),
        gamma: co.gamma_upsilon().expect("precounit"),
        psi: prod.psi().clone(),
        sigma: prod.sigma().clone(),
        chi: co.chi().clone(),
        tau: co.tau().clone(),
        product: prod.product(),
        coproduct: co.coproduct(),
    }
}

/// Map-by-map comparison of a generic construction with the closed form.
pub fn compare_with_oracle<T: Scalar>(fz: &Factorization, out: &ProjectionBiproduct<T>) -> Report {
    let oracle = oracle_biproduct::<T>(fz);
    let generic = generic_maps(out);
    let mut r = Report::new("closed form against generic construction");
    let n = fz.groupoid.len();
    let h_incl = LinMap::from_basis_fn(n, fz.h.len(), |j| Some((fz.h[j], T::one())));
    r.eq("base basis is H", &out.base.splitting.injection, &h_incl);
    for (name, m) in generic.iter() {
        r.eq(name, m, oracle.get(name).expect("known name"));
    }
    r.eq("Gamma = nabla", &out.biproduct.coproduct_side().gamma(), &oracle.nabla);
    r
}

/// Builds the biproduct through the weak projection of the factorization
/// and compares it map by map with the closed form.
pub fn compare_oracle_generic<T: Scalar>(fz: &Factorization) -> Result<Report> {
    let p = projection_morphisms::<T>(fz)?;
    let out = biproduct_from_projection(&p)?;
    Ok(compare_with_oracle(fz, &out))
}
