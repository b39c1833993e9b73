//! Seeded generators of small groupoids and exact factorizations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::factor::{exact_factorize, Factorization};
use super::Groupoid;

pub const MAX_OBJECTS: usize = 3;
pub const MAX_ARROWS: usize = 10;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// How one pair-cyclic component P_k×ℤ/m is split.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Split {
    /// H = P_k×{0}, V = loops
    PairsLoops,
    LoopsPairs,
    AllIds,
    IdsAll,
}

/// Component shapes (k, m) of pair_cyclic that fit the size limits.
fn shapes() -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (1..=5).map(|m| (1, m)).collect();
    out.extend([(2, 1), (2, 2), (3, 1)]);
    out
}

fn components(rng: &mut impl Rng) -> Vec<(usize, usize)> {
    let mut comps = Vec::new();
    let (mut objs, mut arrows) = (0, 0);
    loop {
        let fits: Vec<(usize, usize)> = shapes()
            .into_iter()
            .filter(|&(k, m)| objs + k <= MAX_OBJECTS && arrows + k * k * m <= MAX_ARROWS)
            .collect();
        let Some(&(k, m)) = fits.choose(rng) else { break };
        comps.push((k, m));
        objs += k;
        arrows += k * k * m;
        if !rng.gen_bool(0.4) {
            break;
        }
    }
    comps
}

fn union_of(comps: &[(usize, usize)]) -> Groupoid {
    let mut it = comps.iter().map(|&(k, m)| Groupoid::pair_cyclic(k, m));
    let first = it.next().expect("at least one component");
    it.fold(first, |acc, c| acc.disjoint_union(&c))
}

/// A disjoint union of pair groupoids times cyclic groups, with at most
/// three objects and ten arrows.
pub fn random_groupoid(rng: &mut impl Rng) -> Groupoid {
    union_of(&components(rng))
}

fn component_split(k: usize, m: usize, split: Split, offset: usize) -> (Vec<usize>, Vec<usize>) {
    let idx = |t: usize, s: usize, g: usize| offset + (t * k + s) * m + g;
    let (mut h, mut v) = (Vec::new(), Vec::new());
    for t in 0..k {
        for s in 0..k {
            for g in 0..m {
                let a = idx(t, s, g);
                let pairs = g == 0;
                let loops = t == s;
                let ident = pairs && loops;
                let (in_h, in_v) = match split {
                    Split::PairsLoops => (pairs, loops),
                    Split::LoopsPairs => (loops, pairs),
                    Split::AllIds => (true, ident),
                    Split::IdsAll => (ident, true),
                };
                if in_h {
                    h.push(a);
                }
                if in_v {
                    v.push(a);
                }
            }
        }
    }
    (h, v)
}

/// An exact factorization of a random union, each component split
/// independently.
pub fn random_union_factorization(rng: &mut impl Rng) -> Factorization {
    let comps = components(rng);
    let g = union_of(&comps);
    let (mut h, mut v) = (Vec::new(), Vec::new());
    let mut offset = 0;
    for &(k, m) in &comps {
        let split = *[Split::PairsLoops, Split::LoopsPairs, Split::AllIds, Split::IdsAll]
            .choose(rng)
            .expect("nonempty");
        let (ch, cv) = component_split(k, m, split, offset);
        h.extend(ch);
        v.extend(cv);
        offset += k * k * m;
    }
    exact_factorize(&g, &h, &v).expect("component splits are exact")
}

/// G with V the identities.
pub fn trivial_v(g: &Groupoid) -> Factorization {
    let ids: Vec<usize> = g.identities().into_iter().flatten().collect();
    let all: Vec<usize> = (0..g.len()).collect();
    exact_factorize(g, &all, &ids).expect("trivial V is exact")
}

/// G1×G2 with H = G1×identities and V = identities×G2.
pub fn direct_product(g1: &Groupoid, g2: &Groupoid) -> Factorization {
    let g = g1.product(g2);
    let n2 = g2.len();
    let ids1: Vec<usize> = g1.identities().into_iter().flatten().collect();
    let ids2: Vec<usize> = g2.identities().into_iter().flatten().collect();
    let h = (0..g1.len()).flat_map(|a| ids2.iter().map(move |&b| a * n2 + b)).collect::<Vec<_>>();
    let v = ids1.iter().flat_map(|&a| (0..n2).map(move |b| a * n2 + b)).collect::<Vec<_>>();
    exact_factorize(&g, &h, &v).expect("direct products are exact")
}

/// The dihedral group of order 2n as {e, s}⋈rotations.
pub fn dihedral(n: usize) -> Factorization {
    let g = Groupoid::dihedral(n);
    exact_factorize(&g, &[0, n], &(0..n).collect::<Vec<_>>()).expect("dihedral is exact")
}

/// S3 = ⟨(12)⟩⋈⟨(123)⟩.
pub fn s3() -> Factorization {
    let g = Groupoid::s3();
    let ix = |names: &[&str]| {
        names
            .iter()
            .map(|n| g.arrow_index(n).expect("S3 arrow"))
            .collect::<Vec<_>>()
    };
    exact_factorize(&g, &ix(&["e", "(12)"]), &ix(&["e", "(123)", "(132)"])).expect("S3 is exact")
}

/// The pair groupoid on two objects times ℤ/2, with H twisted by the
/// labelling c(x0) = 0, c(x1) = 1 and V the untwisted pairs.
pub fn twisted_pairs() -> Factorization {
    let g = Groupoid::pair_cyclic(2, 2);
    exact_factorize(&g, &[0, 3, 5, 6], &[0, 2, 4, 6]).expect("twisted pairs are exact")
}

/// One of the families above, chosen by `rng`.
pub fn random_factorization(rng: &mut impl Rng) -> Factorization {
    match rng.gen_range(0..6) {
        0 => s3(),
        1 => dihedral(rng.gen_range(3..=5)),
        2 => twisted_pairs(),
        3 => {
            let a = rng.gen_range(1..=3);
            let b = rng.gen_range(1..=3);
            direct_product(&Groupoid::cyclic(a), &Groupoid::cyclic(b))
        }
        4 => trivial_v(&random_groupoid(rng)),
        _ => random_union_factorization(rng),
    }
}
