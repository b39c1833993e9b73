mod common;

use common::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use weakcross::dump::{parse_dump, render_dump};
use weakcross::duality::check_duality;
use weakcross::groupoid::{groupoid_algebra, random};
use weakcross::hom::{check_algebra, check_coalgebra, check_linearity, convolution, ActionData};
use weakcross::split::split_idempotent;
use weakcross::{Mat, Rational, Scalar};

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x5eed),
        failure_persistence: None,
        ..Config::default()
    }
}

fn matrix(cod: usize, dom: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(-3i64..=3, cod * dom).prop_map(move |v| Mat::from_fn(cod, dom, |i, j| q(v[i * dom + j])))
}

fn fraction_matrix(cod: usize, dom: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec((-9i64..=9, 1i64..=7), cod * dom)
        .prop_map(move |v| Mat::from_fn(cod, dom, |i, j| Rational::from_ratio(v[i * dom + j].0, v[i * dom + j].1)))
}

fn dims(k: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=3, k)
}

type Grid = Vec<Vec<Rational>>;

fn grid(m: &Mat) -> Grid {
    m.to_rows()
}

/// Inverse of a unitriangular matrix by substitution, lower or upper.
fn unitriangular_inverse(t: &Grid, lower: bool) -> Grid {
    let n = t.len();
    let mut x = vec![vec![q(0); n]; n];
    let order: Vec<usize> = if lower { (0..n).collect() } else { (0..n).rev().collect() };
    for &i in &order {
        for j in 0..n {
            let mut s = if i == j { q(1) } else { q(0) };
            for k in 0..n {
                let before = if lower { k < i } else { k > i };
                if before {
                    s -= t[i][k].clone() * x[k][j].clone();
                }
            }
            x[i][j] = s;
        }
    }
    x
}

/// A random idempotent of rank r on n dimensions, built as i∘p from the
/// first r columns of M = L·U and the first r rows of M⁻¹.
fn idempotent() -> impl Strategy<Value = (Mat, Mat, usize)> {
    (1usize..=8)
        .prop_flat_map(|n| (Just(n), 0..=n, prop::collection::vec(-2i64..=2, n * n), prop::collection::vec(-2i64..=2, n * n)))
        .prop_map(|(n, r, lo, up)| {
            let l = Mat::from_fn(n, n, |i, j| if i == j { q(1) } else if i > j { q(lo[i * n + j]) } else { q(0) });
            let u = Mat::from_fn(n, n, |i, j| if i == j { q(1) } else if i < j { q(up[i * n + j]) } else { q(0) });
            let m = c(&[&l, &u]);
            let m_inv = Mat::from_rows(
                grid(&c(&[
                    &Mat::from_rows(unitriangular_inverse(&grid(&u), false)).unwrap(),
                    &Mat::from_rows(unitriangular_inverse(&grid(&l), true)).unwrap(),
                ])),
            )
            .unwrap();
            let inj = Mat::from_fn(n, r, |i, j| m.get(i, j));
            let proj = Mat::from_fn(r, n, |i, j| m_inv.get(i, j));
            (inj, proj, r)
        })
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn compose_matches_the_sum_formula(f in matrix(3, 4), g in matrix(4, 2)) {
        let fg = f.compose(&g).unwrap();
        for i in 0..3 {
            for j in 0..2 {
                let mut s = q(0);
                for k in 0..4 {
                    s += f.get(i, k) * g.get(k, j);
                }
                prop_assert_eq!(fg.get(i, j), s);
            }
        }
    }

    #[test]
    fn tensor_is_functorial(
        (f, f2, g, g2) in dims(6).prop_flat_map(|d| (matrix(d[1], d[0]), matrix(d[0], d[2]), matrix(d[4], d[3]), matrix(d[3], d[5])))
    ) {
        let lhs = c(&[&t(&[&f, &g]), &t(&[&f2, &g2])]);
        let rhs = t(&[&c(&[&f, &f2]), &c(&[&g, &g2])]);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn flip_is_natural((f, g) in dims(4).prop_flat_map(|d| (matrix(d[1], d[0]), matrix(d[3], d[2])))) {
        let (m, m2, n, n2) = (f.dom(), f.cod(), g.dom(), g.cod());
        let lhs = c(&[&Mat::flip(m2, n2), &t(&[&f, &g])]);
        let rhs = c(&[&t(&[&g, &f]), &Mat::flip(m, n)]);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn split_idempotent_recovers_random_rank_factorizations((inj, proj, r) in idempotent()) {
        prop_assert_eq!(c(&[&proj, &inj]), id(r));
        let e = c(&[&inj, &proj]);
        prop_assert!(e.is_idempotent());
        let s = split_idempotent(&e).unwrap();
        prop_assert_eq!(s.image_dim, r);
        prop_assert_eq!(c(&[&s.injection, &s.projection]), e);
        prop_assert_eq!(c(&[&s.projection, &s.injection]), id(r));
    }

    #[test]
    fn dump_round_trips(m in (0usize..=4, 0usize..=4).prop_flat_map(|(a, b)| fraction_matrix(a, b))) {
        let text = render_dump([("m", &m)]);
        let back = parse_dump::<Rational>(&text).unwrap();
        prop_assert_eq!(back, vec![("m".to_string(), m)]);
    }
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn convolution_is_associative(seed in any::<u64>(), raw in prop::collection::vec(-2i64..=2, 300)) {
        let g = random::random_groupoid(&mut random::rng(seed));
        let d = groupoid_algebra::<Rational>(&g).unwrap();
        let n = d.dim();
        let pick = |k: usize| Mat::from_fn(n, n, |i, j| q(raw[(k * 100 + i * n + j) % raw.len()]));
        let (f, g2, h) = (pick(0), pick(1), pick(2));
        let (co, al) = (d.coalgebra(), d.algebra());
        let fg = convolution(&f, &g2, co, al).unwrap();
        let gh = convolution(&g2, &h, co, al).unwrap();
        prop_assert_eq!(convolution(&fg, &h, co, al).unwrap(), convolution(&f, &gh, co, al).unwrap());
    }

    #[test]
    fn structures_and_identity_linearity_on_random_groupoids(seed in any::<u64>()) {
        let g = random::random_groupoid(&mut random::rng(seed));
        let d = groupoid_algebra::<Rational>(&g).unwrap();
        prop_assert!(check_algebra(d.algebra()).passed());
        prop_assert!(check_coalgebra(d.coalgebra()).passed());
        let n = d.dim();
        let left = ActionData::left_module(d.algebra(), n, d.mult().clone()).unwrap();
        prop_assert!(check_linearity(&id(n), &left, &left).unwrap().passed());
        let right = ActionData::right_comodule(d.coalgebra(), n, d.comult().clone()).unwrap();
        prop_assert!(check_linearity(&id(n), &right, &right).unwrap().passed());
    }
}

#[test]
fn flip_is_an_involution_up_to_four() {
    for m in 0..=4 {
        for n in 0..=4 {
            assert_eq!(c(&[&Mat::flip(n, m), &Mat::flip(m, n)]), id(m * n));
        }
    }
    assert_eq!(Mat::flip(1, 5), id(5));
}

#[test]
fn duality_transport_on_twenty_fixtures() {
    for seed in 0..20 {
        let pl = pipeline(random::random_factorization(&mut random::rng(seed)));
        let d = pl.out.biproduct.product_side();
        let r = check_duality(d).unwrap();
        assert!(r.passed(), "seed {seed}\n{}", r.render_text());
        assert!(r.all_checks().iter().all(|c| c.status != weakcross::Status::Skipped), "seed {seed}");
    }
    let (d, _, _) = flip_data();
    assert!(check_duality(&d).unwrap().passed());
}
