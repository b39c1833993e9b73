//! Finite groupoids given by composition tables, their algebras, exact
//! factorizations and the closed-form biproduct they induce.

mod factor;
mod oracle;
pub mod random;

pub use factor::{exact_factorize, projection_morphisms, Factorization};
pub use oracle::{compare_oracle_generic, compare_with_oracle, generic_maps, oracle_biproduct, OracleMaps, ORACLE_NAMES};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hom::{AlgebraData, CoalgebraData};
use crate::linmap::LinMap;
use crate::report::{Report, Witness};
use crate::scalar::Scalar;
use crate::weak_hopf::WeakBialgebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// Arrows are indexed in declaration order; that order is the basis order
/// of the groupoid algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Groupoid {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    /// `compose[t * n + s]` is t∘s.
    compose: Vec<Option<usize>>,
    inverse: Vec<Option<usize>>,
}

impl Groupoid {
    /// A groupoid from explicit tables. Nothing is validated here; see
    /// [`check_groupoid`].
    pub fn from_tables(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        compose: Vec<Option<usize>>,
        inverse: Vec<Option<usize>>,
    ) -> Result<Self> {
        let n = arrows.len();
        if compose.len() != n * n || inverse.len() != n {
            return Err(Error::shape("groupoid tables", (compose.len(), inverse.len()), (n * n, n)));
        }
        if let Some(a) = arrows.iter().find(|a| a.src >= objects.len() || a.tgt >= objects.len()) {
            return Err(Error::Parse {
                line: 0,
                message: format!("arrow {} has an unknown endpoint", a.name),
            });
        }
        Ok(Groupoid {
            objects,
            arrows,
            compose,
            inverse,
        })
    }

    /// Builds the composition table from a function on arrow indices and
    /// finds inverses by search.
    pub fn from_fn(objects: Vec<String>, arrows: Vec<Arrow>, mut compose: impl FnMut(usize, usize) -> Option<usize>) -> Self {
        let n = arrows.len();
        let mut table = vec![None; n * n];
        for t in 0..n {
            for s in 0..n {
                if arrows[t].src == arrows[s].tgt {
                    table[t * n + s] = compose(t, s);
                }
            }
        }
        let mut g = Groupoid {
            objects,
            arrows,
            compose: table,
            inverse: vec![None; n],
        };
        g.inverse = (0..n).map(|a| g.find_inverse(a)).collect();
        g
    }

    fn find_inverse(&self, a: usize) -> Option<usize> {
        let arrow = &self.arrows[a];
        let (ids, idt) = (self.identity(arrow.src)?, self.identity(arrow.tgt)?);
        (0..self.arrows.len()).find(|&b| self.compose(b, a) == Some(ids) && self.compose(a, b) == Some(idt))
    }

    /// A group as a one-object groupoid.
    pub fn from_group(names: Vec<String>, mut mult: impl FnMut(usize, usize) -> usize) -> Self {
        let arrows = names
            .into_iter()
            .map(|name| Arrow { name, src: 0, tgt: 0 })
            .collect();
        Groupoid::from_fn(vec!["o".into()], arrows, |t, s| Some(mult(t, s)))
    }

    /// ℤ/n with generator powers `g^k`, `g^0` being the identity.
    pub fn cyclic(n: usize) -> Self {
        Groupoid::from_group((0..n).map(|k| format!("g^{k}")).collect(), |a, b| (a + b) % n)
    }

    /// The symmetric group on three letters, composing as functions.
    pub fn s3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let names = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];
        Groupoid::from_group(names.iter().map(|s| s.to_string()).collect(), |t, s| {
            let c = [perms[t][perms[s][0]], perms[t][perms[s][1]], perms[t][perms[s][2]]];
            perms.iter().position(|p| *p == c).expect("closed")
        })
    }

    /// The dihedral group of order 2n: `r^k` rotations then `s r^k` reflections.
    pub fn dihedral(n: usize) -> Self {
        // element (f, k) acts as x ↦ (-1)^f x + k
        let el = |i: usize| (i / n, i % n);
        let names = (0..2 * n)
            .map(|i| match el(i) {
                (0, k) => format!("r^{k}"),
                (_, k) => format!("sr^{k}"),
            })
            .collect();
        Groupoid::from_group(names, |t, s| {
            let ((ft, kt), (fs, ks)) = (el(t), el(s));
            let k = if ft == 0 { (kt + ks) % n } else { (kt + n - ks) % n };
            ((ft + fs) % 2) * n + k
        })
    }

    /// The pair groupoid on `k` objects times a cyclic group ℤ/m: arrows
    /// `(t, s, g)` from s to t.
    pub fn pair_cyclic(k: usize, m: usize) -> Self {
        let objects = (0..k).map(|i| format!("x{i}")).collect();
        let idx = |t: usize, s: usize, g: usize| (t * k + s) * m + g;
        let mut arrows = Vec::new();
        for t in 0..k {
            for s in 0..k {
                for g in 0..m {
                    let name = if m == 1 { format!("x{t}<-x{s}") } else { format!("x{t}<-x{s}:{g}") };
                    arrows.push(Arrow { name, src: s, tgt: t });
                }
            }
        }
        // identities must be the zero-labelled loops
        let decode = |a: usize| (a / (k * m), (a / m) % k, a % m);
        Groupoid::from_fn(objects, arrows, |a, b| {
            let ((t, _, g), (_, s, h)) = (decode(a), decode(b));
            Some(idx(t, s, (g + h) % m))
        })
    }

    /// Disjoint union; objects and arrows of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Groupoid) -> Groupoid {
        let (k, n) = (self.objects.len(), self.arrows.len());
        let mut objects = self.objects.clone();
        objects.extend(other.objects.iter().map(|o| format!("{o}'")));
        let mut arrows = self.arrows.clone();
        arrows.extend(other.arrows.iter().map(|a| Arrow {
            name: format!("{}'", a.name),
            src: a.src + k,
            tgt: a.tgt + k,
        }));
        Groupoid::from_fn(objects, arrows, |t, s| match (t < n, s < n) {
            (true, true) => self.compose(t, s),
            (false, false) => other.compose(t - n, s - n).map(|c| c + n),
            _ => None,
        })
    }

    /// Product groupoid; arrow `(a, b)` has index `a * |other| + b`.
    pub fn product(&self, other: &Groupoid) -> Groupoid {
        let (ko, no) = (other.objects.len(), other.arrows.len());
        let mut objects = Vec::new();
        for x in &self.objects {
            for y in &other.objects {
                objects.push(format!("({x},{y})"));
            }
        }
        let mut arrows = Vec::new();
        for a in &self.arrows {
            for b in &other.arrows {
                arrows.push(Arrow {
                    name: format!("({},{})", a.name, b.name),
                    src: a.src * ko + b.src,
                    tgt: a.tgt * ko + b.tgt,
                });
            }
        }
        Groupoid::from_fn(objects, arrows, |t, s| {
            let a = self.compose(t / no, s / no)?;
            let b = other.compose(t % no, s % no)?;
            Some(a * no + b)
        })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn src(&self, a: usize) -> usize {
        self.arrows[a].src
    }

    pub fn tgt(&self, a: usize) -> usize {
        self.arrows[a].tgt
    }

    pub fn name(&self, a: usize) -> &str {
        &self.arrows[a].name
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// t∘s, when s(t) = t(s) and the table has an entry.
    pub fn compose(&self, t: usize, s: usize) -> Option<usize> {
        self.compose[t * self.arrows.len() + s]
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        self.inverse[a]
    }

    /// The first loop at `x` acting as a two-sided unit on its composites.
    pub fn identity(&self, x: usize) -> Option<usize> {
        let n = self.arrows.len();
        (0..n).find(|&e| {
            self.arrows[e].src == x
                && self.arrows[e].tgt == x
                && (0..n).all(|a| {
                    (self.arrows[a].tgt != x || self.compose(e, a) == Some(a))
                        && (self.arrows[a].src != x || self.compose(a, e) == Some(a))
                })
        })
    }

    pub fn identities(&self) -> Vec<Option<usize>> {
        (0..self.objects.len()).map(|x| self.identity(x)).collect()
    }

    /// The subgroupoid on the given arrows (kept in ascending order), same
    /// objects.
    pub fn restrict(&self, subset: &[usize]) -> Groupoid {
        let mut keep = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let arrows = keep.iter().map(|&a| self.arrows[a].clone()).collect();
        Groupoid::from_fn(self.objects.clone(), arrows, |t, s| {
            self.compose(keep[t], keep[s]).and_then(|c| pos.get(&c).copied())
        })
    }
}

/// Every groupoid axiom checked over all arrows, with the offending arrows
/// named on failure.
pub fn check_groupoid(g: &Groupoid) -> Report {
    let n = g.len();
    let mut r = Report::new("groupoid");
    let name = |a: usize| g.name(a).to_string();
    let mut bad = None;
    'domain: for t in 0..n {
        for s in 0..n {
            let composable = g.src(t) == g.tgt(s);
            if composable != g.compose(t, s).is_some() {
                bad = Some((t, s));
                break 'domain;
            }
        }
    }
    r.ensure("composition defined exactly on composable pairs", bad.is_none(), || {
        let (t, s) = bad.unwrap();
        Witness::values(format!("{}.{}", name(t), name(s)), if g.compose(t, s).is_some() { "defined" } else { "undefined" })
    });
    let mut bad = None;
    'ends: for t in 0..n {
        for s in 0..n {
            if let Some(c) = g.compose(t, s) {
                if g.src(c) != g.src(s) || g.tgt(c) != g.tgt(t) {
                    bad = Some((t, s, c));
                    break 'ends;
                }
            }
        }
    }
    r.ensure("composite endpoints", bad.is_none(), || {
        let (t, s, c) = bad.unwrap();
        Witness::values(format!("{}.{} = {}", name(t), name(s), name(c)), "wrong source or target")
    });
    let ids = g.identities();
    let missing = ids.iter().position(Option::is_none);
    r.ensure("identities", missing.is_none(), || {
        Witness::values(format!("object {}", g.objects()[missing.unwrap()]), "no identity")
    });
    let mut bad = None;
    'assoc: for a in 0..n {
        for b in 0..n {
            let Some(ab) = g.compose(a, b) else { continue };
            for c in 0..n {
                let Some(bc) = g.compose(b, c) else { continue };
                let (l, rr) = (g.compose(ab, c), g.compose(a, bc));
                if l != rr {
                    bad = Some((a, b, c));
                    break 'assoc;
                }
            }
        }
    }
    r.ensure("associativity", bad.is_none(), || {
        let (a, b, c) = bad.unwrap();
        Witness::values(format!("({}.{}).{}", name(a), name(b), name(c)), format!("{}.({}.{})", name(a), name(b), name(c)))
    });
    let mut bad = None;
    for a in 0..n {
        let ok = match (g.inverse(a), ids[g.src(a)], ids[g.tgt(a)]) {
            (Some(b), Some(is), Some(it)) => g.compose(b, a) == Some(is) && g.compose(a, b) == Some(it),
            _ => false,
        };
        if !ok {
            bad = Some(a);
            break;
        }
    }
    r.ensure("inverse laws", bad.is_none(), || {
        Witness::values(format!("{}^-1", name(bad.unwrap())), "no two-sided inverse")
    });
    r
}

/// The groupoid algebra: composition-or-zero product, unit the sum of
/// identities, every arrow grouplike, antipode the inverse.
pub fn groupoid_algebra<T: Scalar>(g: &Groupoid) -> Result<WeakBialgebra<T>> {
    let r = check_groupoid(g);
    if !r.passed() {
        return Err(Error::failed("groupoid", r));
    }
    let n = g.len();
    let one = || T::one();
    let unit = LinMap::from_basis_fn(n, 1, |_| g.identities().into_iter().flatten().map(|e| (e, one())).collect::<Vec<_>>());
    let mult = LinMap::from_basis_fn(n, n * n, |c| g.compose(c / n, c % n).map(|x| (x, one())));
    let counit = LinMap::from_basis_fn(1, n, |_| Some((0, one())));
    let comult = LinMap::from_basis_fn(n * n, n, |a| Some((a * n + a, one())));
    let antipode = LinMap::from_basis_fn(n, n, |a| g.inverse(a).map(|b| (b, one())));
    WeakBialgebra::new(AlgebraData::new(unit, mult)?, CoalgebraData::new(counit, comult)?, Some(antipode))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weak_hopf::full_report;
    use crate::Rational;

    fn iso2() -> Groupoid {
        Groupoid::pair_cyclic(2, 1)
    }

    #[test]
    fn s3_is_a_group() {
        let g = Groupoid::s3();
        assert!(check_groupoid(&g).passed());
        let c = |a: &str, b: &str| g.name(g.compose(g.arrow_index(a).unwrap(), g.arrow_index(b).unwrap()).unwrap()).to_string();
        // right to left: (23) first
        assert_eq!(c("(12)", "(23)"), "(123)");
        assert_eq!(c("(123)", "(123)"), "(132)");
        assert_eq!(g.identity(0), Some(0));
    }

    #[test]
    fn pair_groupoid_has_identities_first_on_the_diagonal() {
        let g = iso2();
        assert!(check_groupoid(&g).passed());
        assert_eq!(g.identities(), vec![Some(0), Some(3)]);
        assert_eq!(g.inverse(1), Some(2));
    }

    #[test]
    fn dropping_an_inverse_is_caught() {
        let g = iso2();
        let keep = [0, 1, 3];
        let broken = g.restrict(&keep);
        let r = check_groupoid(&broken);
        assert!(r.fails("inverse laws"));
        assert!(r.holds("associativity"));
    }

    #[test]
    fn groupoid_algebras_are_weak_hopf() {
        for g in [Groupoid::s3(), iso2(), Groupoid::cyclic(6), Groupoid::pair_cyclic(2, 2), Groupoid::dihedral(4)] {
            let d = groupoid_algebra::<Rational>(&g).unwrap();
            let r = full_report(&d);
            assert!(r.passed(), "{}", r.render_text());
        }
    }

    #[test]
    fn unit_of_two_object_groupoid_has_counit_two() {
        let d = groupoid_algebra::<Rational>(&iso2()).unwrap();
        assert_eq!(crate::linmap::chain(&[d.counit(), d.unit()]).get(0, 0), Rational::from_int(2));
    }

    #[test]
    fn products_and_unions_are_groupoids() {
        let g = Groupoid::cyclic(2).product(&iso2());
        assert_eq!(g.len(), 8);
        assert!(check_groupoid(&g).passed());
        let u = Groupoid::cyclic(2).disjoint_union(&Groupoid::cyclic(3));
        assert_eq!(u.objects().len(), 2);
        assert!(check_groupoid(&u).passed());
    }
}
