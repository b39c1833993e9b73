use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::linmap::LinMap;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Where an equation fails: an entry of both sides, or two values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub row: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub col: Option<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn entry(row: usize, col: usize, lhs: impl ToString, rhs: impl ToString) -> Self {
        Witness {
            row: Some(row),
            col: Some(col),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn values(lhs: impl ToString, rhs: impl ToString) -> Self {
        Witness {
            row: None,
            col: None,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub children: Vec<Check>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Pass,
            witness: None,
            detail: None,
            children: Vec::new(),
        }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        Check {
            name: name.into(),
            status: Status::Fail,
            witness: Some(witness),
            detail: None,
            children: Vec::new(),
        }
    }

    pub fn skipped(name: impl Into<String>, why: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Skipped,
            witness: None,
            detail: Some(why.into()),
            children: Vec::new(),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    fn walk<'a>(&'a self, out: &mut Vec<&'a Check>) {
        out.push(self);
        for c in &self.children {
            c.walk(out);
        }
    }
}

/// A named list of checks, possibly nested, plus free-form notes.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) -> bool {
        let ok = check.passed();
        self.checks.push(check);
        ok
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Records whether two maps are equal, with the first differing entry.
    pub fn eq<T: Scalar>(&mut self, name: impl Into<String>, lhs: &LinMap<T>, rhs: &LinMap<T>) -> bool {
        self.push(compare(name, lhs, rhs))
    }

    /// Records a boolean condition; `witness` explains a failure.
    pub fn ensure(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> Witness) -> bool {
        if ok {
            self.push(Check::pass(name))
        } else {
            self.push(Check::fail(name, witness()))
        }
    }

    /// Nests another report as a single check whose children are its checks.
    pub fn nest(&mut self, sub: Report) -> bool {
        let ok = sub.passed();
        let mut check = Check {
            name: sub.title,
            status: if ok { Status::Pass } else { Status::Fail },
            witness: None,
            detail: None,
            children: sub.checks,
        };
        if !sub.notes.is_empty() {
            check.detail = Some(sub.notes.join("; "));
        }
        self.checks.push(check);
        ok
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// Every check in the tree, parents before children.
    pub fn all_checks(&self) -> Vec<&Check> {
        let mut out = Vec::new();
        for c in &self.checks {
            c.walk(&mut out);
        }
        out
    }

    /// Failing leaf checks, in evaluation order.
    pub fn failures(&self) -> Vec<&Check> {
        self.all_checks()
            .into_iter()
            .filter(|c| c.status == Status::Fail && c.children.is_empty())
            .collect()
    }

    pub fn first_failure_name(&self) -> Option<&str> {
        self.failures().first().map(|c| c.name.as_str())
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.all_checks().into_iter().find(|c| c.name == name)
    }

    /// True when some check with this exact name exists and none failed.
    pub fn holds(&self, name: &str) -> bool {
        let hits: Vec<_> = self.all_checks().into_iter().filter(|c| c.name == name).collect();
        !hits.is_empty() && hits.iter().all(|c| c.status == Status::Pass)
    }

    pub fn fails(&self, name: &str) -> bool {
        self.all_checks()
            .into_iter()
            .any(|c| c.name == name && c.status == Status::Fail)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.title);
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        for c in &self.checks {
            render_check(&mut out, c, 1);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn render_check(out: &mut String, c: &Check, depth: usize) {
    let tag = match c.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIP",
    };
    let pad = "  ".repeat(depth);
    let _ = write!(out, "{pad}[{tag}] {}", c.name);
    if let Some(w) = &c.witness {
        match (w.row, w.col) {
            (Some(r), Some(col)) => {
                let _ = write!(out, " at ({r}, {col}): {} vs {}", w.lhs, w.rhs);
            }
            _ => {
                let _ = write!(out, ": {} vs {}", w.lhs, w.rhs);
            }
        }
    }
    if let Some(d) = &c.detail {
        let _ = write!(out, " ({d})");
    }
    out.push('\n');
    for child in &c.children {
        render_check(out, child, depth + 1);
    }
}

pub fn compare<T: Scalar>(name: impl Into<String>, lhs: &LinMap<T>, rhs: &LinMap<T>) -> Check {
    let name = name.into();
    if lhs.shape() != rhs.shape() {
        return Check::fail(
            name,
            Witness::values(
                format!("shape {}x{}", lhs.cod(), lhs.dom()),
                format!("shape {}x{}", rhs.cod(), rhs.dom()),
            ),
        );
    }
    match lhs.first_difference(rhs) {
        None => Check::pass(name),
        Some(d) => Check::fail(name, Witness::entry(d.row, d.col, d.lhs, d.rhs)),
    }
}
