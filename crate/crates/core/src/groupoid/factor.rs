use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::projection::WeakProjection;
use crate::scalar::Scalar;

use super::{groupoid_algebra, Groupoid};

/// An exact factorization G = H⋈V: each arrow is uniquely σ_H∘σ_V.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub groupoid: Groupoid,
    /// Arrows of H, ascending.
    pub h: Vec<usize>,
    /// Arrows of V, ascending.
    pub v: Vec<usize>,
    /// `table[σ] = (σ_H, σ_V)` as arrow indices of G.
    pub table: Vec<(usize, usize)>,
}

impl Factorization {
    pub fn h_part(&self, a: usize) -> usize {
        self.table[a].0
    }

    pub fn v_part(&self, a: usize) -> usize {
        self.table[a].1
    }

    /// Position of a G-arrow in the H basis.
    pub fn h_pos(&self, a: usize) -> Option<usize> {
        self.h.binary_search(&a).ok()
    }

    pub fn v_pos(&self, a: usize) -> Option<usize> {
        self.v.binary_search(&a).ok()
    }

    /// The reverse factorization σ = σ^V∘σ^H, which also exists and is
    /// unique because inversion swaps the two orders.
    pub fn reverse_parts(&self, a: usize) -> (usize, usize) {
        let g = &self.groupoid;
        let inv = |x: usize| g.inverse(x).expect("groupoid");
        let (h, v) = self.table[inv(a)];
        (inv(v), inv(h))
    }

    pub fn is_trivial_v(&self) -> bool {
        self.v.len() == self.groupoid.objects().len()
    }
}

fn check_wide(g: &Groupoid, which: &str, subset: &BTreeSet<usize>) -> Result<()> {
    let not_wide = |reason: String| Error::NotWide {
        which: which.to_string(),
        reason,
    };
    for (x, e) in g.identities().into_iter().enumerate() {
        match e {
            Some(e) if subset.contains(&e) => {}
            _ => return Err(not_wide(format!("missing identity of {}", g.objects()[x]))),
        }
    }
    for &a in subset {
        if !g.inverse(a).is_some_and(|b| subset.contains(&b)) {
            return Err(not_wide(format!("not closed under inverse at {}", g.name(a))));
        }
        for &b in subset {
            if let Some(c) = g.compose(a, b) {
                if !subset.contains(&c) {
                    return Err(not_wide(format!("{}.{} = {} escapes", g.name(a), g.name(b), g.name(c))));
                }
            }
        }
    }
    Ok(())
}

/// Brute-force decomposition table of every arrow as h∘v.
pub fn exact_factorize(g: &Groupoid, h: &[usize], v: &[usize]) -> Result<Factorization> {
    if let Some(&a) = h.iter().chain(v).find(|&&a| a >= g.len()) {
        return Err(Error::NotWide {
            which: "H/V".into(),
            reason: format!("arrow index {a} out of range"),
        });
    }
    let hs: BTreeSet<usize> = h.iter().copied().collect();
    let vs: BTreeSet<usize> = v.iter().copied().collect();
    check_wide(g, "H", &hs)?;
    check_wide(g, "V", &vs)?;
    let mut decomps = vec![Vec::new(); g.len()];
    for &x in &hs {
        for &y in &vs {
            if let Some(c) = g.compose(x, y) {
                decomps[c].push((x, y));
            }
        }
    }
    // a missing decomposition is reported before a repeated one
    let bad = decomps
        .iter()
        .position(Vec::is_empty)
        .or_else(|| decomps.iter().position(|d| d.len() > 1));
    if let Some(a) = bad {
        return Err(Error::NotExact {
            arrow: g.name(a).to_string(),
            count: decomps[a].len(),
        });
    }
    let table = decomps.into_iter().map(|d| d[0]).collect();
    Ok(Factorization {
        groupoid: g.clone(),
        h: hs.into_iter().collect(),
        v: vs.into_iter().collect(),
        table,
    })
}

/// D = RG, B = RV, f the inclusion and g(τ) = τ_V.
pub fn projection_morphisms<T: Scalar>(fz: &Factorization) -> Result<WeakProjection<T>> {
    let g = &fz.groupoid;
    let d = groupoid_algebra(g)?;
    let b = groupoid_algebra(&g.restrict(&fz.v))?;
    let (n, m) = (g.len(), fz.v.len());
    let f = LinMap::from_basis_fn(n, m, |j| Some((fz.v[j], T::one())));
    let gm = LinMap::from_basis_fn(m, n, |a| fz.v_pos(fz.v_part(a)).map(|p| (p, T::one())));
    WeakProjection::new(d, b, f, gm)
}
