//! The `verify` and `biproduct` commands behind the `weakcross` binary.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 when the
//! input cannot be read or parsed.

use std::path::{Path, PathBuf};

use weakcross::biproduct::{decomposition_from_pair, IdempotentPair};
use weakcross::dump::render_dump;
use weakcross::fixture::{read_gpd, render_gpd, GroupoidFile};
use weakcross::groupoid::{check_groupoid, compare_with_oracle, generic_maps, groupoid_algebra, projection_morphisms, random};
use weakcross::projection::{biproduct_from_projection, check_weak_projection, projection_from_biproduct};
use weakcross::split::rank;
use weakcross::weak_hopf::full_report;
use weakcross::{Check, Error, Rational, Report, Witness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

pub const DEFAULT_SEED: u64 = 2024;

#[derive(Clone, Debug, Default)]
pub struct Flags {
    /// Where to write the report as JSON.
    pub report: Option<PathBuf>,
    /// Where to write the thirteen biproduct maps.
    pub dump: Option<PathBuf>,
}

#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: Option<Report>,
    /// What went wrong, for stderr.
    pub message: Option<String>,
}

impl Outcome {
    fn input(e: impl ToString) -> Self {
        Outcome {
            code: EXIT_INPUT,
            report: None,
            message: Some(e.to_string()),
        }
    }

    fn from_report(report: Report, flags: &Flags) -> Self {
        let code = if report.passed() { EXIT_OK } else { EXIT_FAILED };
        let message = report.first_failure_name().map(|n| format!("failed at: {n}"));
        let mut out = Outcome {
            code,
            report: Some(report),
            message,
        };
        if let (Some(path), Some(r)) = (&flags.report, &out.report) {
            if let Err(e) = std::fs::write(path, r.to_json()) {
                out.code = EXIT_INPUT;
                out.message = Some(format!("cannot write report: {e}"));
            }
        }
        out
    }
}

fn load(path: &Path) -> Result<GroupoidFile, Outcome> {
    read_gpd(path).map_err(|e| Outcome::input(format!("{}: {e}", path.display())))
}

/// Groupoid axioms and every weak Hopf algebra law of its algebra.
pub fn cmd_verify(path: &Path, flags: &Flags) -> Outcome {
    let file = match load(path) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let mut r = Report::new(format!("verify {}", file_label(path)));
    let g = &file.groupoid;
    r.note(format!("{} objects, {} arrows", g.objects().len(), g.len()));
    if r.nest(check_groupoid(g)) {
        let d = groupoid_algebra::<Rational>(g).expect("groupoid checked");
        r.nest(full_report(&d));
    }
    Outcome::from_report(r, flags)
}

fn file_label(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn stage_failed(r: &mut Report, stage: &str, e: &Error) {
    match e.report() {
        Some(sub) => {
            r.nest(sub.clone());
        }
        None => {
            r.push(Check::fail(stage, Witness::values(e.to_string(), "ok")));
        }
    }
}

/// The full pipeline: factorization, weak projection, biproduct, closed-form
/// comparison and both round trips.
pub fn cmd_biproduct(path: &Path, flags: &Flags) -> Outcome {
    let file = match load(path) {
        Ok(f) => f,
        Err(o) => return o,
    };
    if file.h.is_none() || file.v.is_none() {
        return Outcome::input(format!("{}: needs `subgroupoid H:` and `subgroupoid V:`", path.display()));
    }
    let mut r = Report::new(format!("biproduct {}", file_label(path)));
    if !r.nest(check_groupoid(&file.groupoid)) {
        return Outcome::from_report(r, flags);
    }
    let fz = match file.factorization() {
        Ok(fz) => {
            r.push(Check::pass("exact factorization"));
            fz
        }
        Err(e) => {
            r.push(Check::fail("exact factorization", Witness::values(e.to_string(), "unique decompositions")));
            return Outcome::from_report(r, flags);
        }
    };
    let p = match projection_morphisms::<Rational>(&fz) {
        Ok(p) => p,
        Err(e) => {
            stage_failed(&mut r, "weak projection", &e);
            return Outcome::from_report(r, flags);
        }
    };
    r.nest(check_weak_projection(&p));
    let out = match biproduct_from_projection(&p) {
        Ok(out) => out,
        Err(e) => {
            stage_failed(&mut r, "biproduct from weak projection", &e);
            return Outcome::from_report(r, flags);
        }
    };
    r.nest(out.report.clone());
    let nabla = out.biproduct.product_side().nabla();
    let k = nabla.dom();
    let rk = rank(&nabla);
    if nabla == weakcross::LinMap::identity(k) {
        r.note(format!("nabla = id on C⊗A (dimension {k})"));
    } else {
        r.note(format!("rank nabla = {rk} on C⊗A of dimension {k}"));
    }
    r.ensure("rank nabla = number of arrows", rk == fz.groupoid.len(), || {
        Witness::values(rk, fz.groupoid.len())
    });
    r.nest(compare_with_oracle(&fz, &out));

    let mut trip = Report::new("round trips");
    match projection_from_biproduct(&out.biproduct, p.b()) {
        Ok((q, _)) => {
            trip.eq("projection round trip f", q.f(), p.f());
            trip.eq("projection round trip g", q.g(), p.g());
        }
        Err(e) => stage_failed(&mut trip, "weak projection from biproduct", &e),
    }
    let pair = IdempotentPair {
        pi: weakcross::linmap::chain(&[p.f(), p.g()]),
        theta: out.base.t.clone(),
    };
    match decomposition_from_pair(p.d(), &pair) {
        Ok(dec) => match weakcross::biproduct::pair_from_biproduct(&dec.biproduct) {
            Ok(back) => {
                trip.eq("pair round trip pi", &back.pi, &pair.pi);
                trip.eq("pair round trip theta", &back.theta, &pair.theta);
            }
            Err(e) => stage_failed(&mut trip, "pair from biproduct", &e),
        },
        Err(e) => stage_failed(&mut trip, "decomposition from pair", &e),
    }
    r.nest(trip);

    if let Some(dump) = &flags.dump {
        let maps = generic_maps(&out);
        if let Err(e) = std::fs::write(dump, render_dump(maps.iter())) {
            return Outcome::input(format!("cannot write dump: {e}"));
        }
    }
    Outcome::from_report(r, flags)
}

/// A seeded random factorization in `.gpd` form.
pub fn cmd_generate(seed: u64) -> String {
    let fz = random::random_factorization(&mut random::rng(seed));
    render_gpd(&fz.groupoid, Some(&fz.h), Some(&fz.v))
}
