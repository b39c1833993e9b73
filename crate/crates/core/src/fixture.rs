//! The `.gpd` groupoid file format.
//!
//! ```text
//! objects: x y
//! arrows:
//!   a : x -> y
//!   b : y -> x
//! compose:
//!   b . a = id_x
//!   a . b = id_y
//! inverse:
//!   a^-1 = b
//! subgroupoid H: a b
//! subgroupoid V:
//! ```
//!
//! Every object gets an identity `id_<object>`; identities come first in
//! the basis, in object order, followed by the declared arrows. Composites
//! and inverses involving identities are filled in automatically, as is the
//! other half of each declared inverse pair. Subgroupoid lists always
//! include the identities. `#` starts a comment.

use std::collections::HashMap;
use std::path::Path;

use crate::error::{Error, Result};
use crate::groupoid::{exact_factorize, Arrow, Factorization, Groupoid};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidFile {
    pub groupoid: Groupoid,
    pub h: Option<Vec<usize>>,
    pub v: Option<Vec<usize>>,
}

impl GroupoidFile {
    /// The factorization named by the H and V sections.
    pub fn factorization(&self) -> Result<Factorization> {
        let missing = |which: &str| Error::Parse {
            line: 0,
            message: format!("no `subgroupoid {which}:` section"),
        };
        let h = self.h.as_ref().ok_or_else(|| missing("H"))?;
        let v = self.v.as_ref().ok_or_else(|| missing("V"))?;
        exact_factorize(&self.groupoid, h, v)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Objects,
    Arrows,
    Compose,
    Inverse,
    Sub(usize),
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

struct Builder {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    /// explicitly declared arrows are frozen once the first one appears
    ids_done: bool,
    index: HashMap<String, usize>,
    compose: HashMap<(usize, usize), (usize, usize)>,
    inverse: HashMap<usize, (usize, usize)>,
    subs: [Option<Vec<usize>>; 2],
}

impl Builder {
    fn add_object(&mut self, no: usize, name: &str) -> Result<()> {
        if self.ids_done {
            return Err(err(no, format!("object {name} declared after arrows")));
        }
        if self.objects.iter().any(|o| o == name) {
            return Err(err(no, format!("object {name} declared twice")));
        }
        self.objects.push(name.to_string());
        Ok(())
    }

    fn finish_ids(&mut self) {
        if self.ids_done {
            return;
        }
        self.ids_done = true;
        for (x, o) in self.objects.iter().enumerate() {
            let name = format!("id_{o}");
            self.index.insert(name.clone(), self.arrows.len());
            self.arrows.push(Arrow { name, src: x, tgt: x });
        }
    }

    fn object(&self, no: usize, name: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| err(no, format!("unknown object {name}")))
    }

    fn arrow(&self, no: usize, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| err(no, format!("undefined arrow {name}")))
    }

    fn add_arrow(&mut self, no: usize, name: &str, src: &str, tgt: &str) -> Result<()> {
        self.finish_ids();
        let (s, t) = (self.object(no, src)?, self.object(no, tgt)?);
        if let Some(&a) = self.index.get(name) {
            let existing = &self.arrows[a];
            // restating an automatic identity is harmless
            if a < self.objects.len() && existing.src == s && existing.tgt == t {
                return Ok(());
            }
            return Err(err(no, format!("arrow {name} declared twice")));
        }
        self.index.insert(name.to_string(), self.arrows.len());
        self.arrows.push(Arrow {
            name: name.to_string(),
            src: s,
            tgt: t,
        });
        Ok(())
    }

    fn add_compose(&mut self, no: usize, a: &str, b: &str, c: &str) -> Result<()> {
        self.finish_ids();
        let (a, b, c) = (self.arrow(no, a)?, self.arrow(no, b)?, self.arrow(no, c)?);
        let ar = &self.arrows;
        if ar[a].src != ar[b].tgt {
            return Err(err(
                no,
                format!("{} . {}: source of {} is not the target of {}", ar[a].name, ar[b].name, ar[a].name, ar[b].name),
            ));
        }
        if ar[c].src != ar[b].src || ar[c].tgt != ar[a].tgt {
            return Err(err(no, format!("{} has the wrong endpoints for {} . {}", ar[c].name, ar[a].name, ar[b].name)));
        }
        match self.compose.get(&(a, b)) {
            Some(&(prev, line)) if prev != c => Err(err(
                no,
                format!("{} . {} already set to {} on line {line}", ar[a].name, ar[b].name, ar[prev].name),
            )),
            _ => {
                self.compose.insert((a, b), (c, no));
                Ok(())
            }
        }
    }

    fn set_inverse(&mut self, no: usize, a: usize, b: usize) -> Result<()> {
        match self.inverse.get(&a) {
            Some(&(prev, line)) if prev != b => Err(err(
                no,
                format!(
                    "inverse of {} already set to {} on line {line}",
                    self.arrows[a].name, self.arrows[prev].name
                ),
            )),
            _ => {
                self.inverse.insert(a, (b, no));
                Ok(())
            }
        }
    }

    fn add_inverse(&mut self, no: usize, a: &str, b: &str) -> Result<()> {
        self.finish_ids();
        let (a, b) = (self.arrow(no, a)?, self.arrow(no, b)?);
        let ar = &self.arrows;
        if ar[a].src != ar[b].tgt || ar[a].tgt != ar[b].src {
            return Err(err(no, format!("{} cannot be inverse to {}", ar[b].name, ar[a].name)));
        }
        self.set_inverse(no, a, b)?;
        self.set_inverse(no, b, a)
    }

    fn build(mut self) -> Result<GroupoidFile> {
        self.finish_ids();
        let n = self.arrows.len();
        let k = self.objects.len();
        let mut compose = vec![None; n * n];
        for (&(a, b), &(c, _)) in &self.compose {
            compose[a * n + b] = Some(c);
        }
        for a in 0..n {
            let (s, t) = (self.arrows[a].src, self.arrows[a].tgt);
            compose[t * n + a].get_or_insert(a);
            compose[a * n + s].get_or_insert(a);
        }
        let mut inverse: Vec<Option<usize>> = (0..n).map(|a| self.inverse.get(&a).map(|e| e.0)).collect();
        for (x, inv) in inverse.iter_mut().enumerate().take(k) {
            inv.get_or_insert(x);
        }
        let groupoid = Groupoid::from_tables(self.objects, self.arrows, compose, inverse)?;
        let [h, v] = self.subs.map(|s| {
            s.map(|mut list| {
                list.extend(0..k);
                list.sort_unstable();
                list.dedup();
                list
            })
        });
        Ok(GroupoidFile { groupoid, h, v })
    }
}

pub fn parse_gpd(text: &str) -> Result<GroupoidFile> {
    let mut b = Builder {
        objects: Vec::new(),
        arrows: Vec::new(),
        ids_done: false,
        index: HashMap::new(),
        compose: HashMap::new(),
        inverse: HashMap::new(),
        subs: [None, None],
    };
    let mut section = Section::None;
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut body = line;
        let header = [
            ("objects:", Section::Objects),
            ("arrows:", Section::Arrows),
            ("compose:", Section::Compose),
            ("inverse:", Section::Inverse),
            ("subgroupoid H:", Section::Sub(0)),
            ("subgroupoid V:", Section::Sub(1)),
        ]
        .into_iter()
        .find(|(h, _)| line.starts_with(h));
        if let Some((h, s)) = header {
            section = s;
            body = line[h.len()..].trim();
            if let Section::Sub(j) = s {
                if b.subs[j].is_some() {
                    return Err(err(no, format!("{} given twice", h.trim_end_matches(':'))));
                }
                b.finish_ids();
                b.subs[j] = Some(Vec::new());
            }
            if body.is_empty() {
                continue;
            }
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        match section {
            Section::None => return Err(err(no, "content before the first section")),
            Section::Objects => {
                for t in toks {
                    b.add_object(no, t)?;
                }
            }
            Section::Arrows => match toks.as_slice() {
                [name, ":", src, "->", tgt] => b.add_arrow(no, name, src, tgt)?,
                _ => return Err(err(no, "expected `name : src -> tgt`")),
            },
            Section::Compose => match toks.as_slice() {
                [a, ".", bb, "=", c] => b.add_compose(no, a, bb, c)?,
                _ => return Err(err(no, "expected `a . b = c`")),
            },
            Section::Inverse => match toks.as_slice() {
                [a, "=", c] if a.ends_with("^-1") => b.add_inverse(no, &a[..a.len() - 3], c)?,
                _ => return Err(err(no, "expected `a^-1 = b`")),
            },
            Section::Sub(j) => {
                for t in toks {
                    let a = b.arrow(no, t)?;
                    b.subs[j].as_mut().expect("section opened").push(a);
                }
            }
        }
    }
    b.build()
}

pub fn read_gpd(path: impl AsRef<Path>) -> Result<GroupoidFile> {
    parse_gpd(&std::fs::read_to_string(path)?)
}

/// Writes a groupoid in `.gpd` form. Its identities are renamed
/// `id_<object>` and moved to the front, so parsing the output gives the
/// same groupoid up to that reordering. Identity names are stable only if
/// objects carry names usable in arrow labels.
pub fn render_gpd(g: &Groupoid, h: Option<&[usize]>, v: Option<&[usize]>) -> String {
    let ids = g.identities();
    let is_id = |a: usize| ids[g.src(a)] == Some(a);
    let name = |a: usize| {
        if is_id(a) {
            format!("id_{}", g.objects()[g.src(a)])
        } else {
            g.name(a).to_string()
        }
    };
    let mut out = format!("objects: {}\n", g.objects().join(" "));
    out.push_str("arrows:\n");
    for a in (0..g.len()).filter(|&a| !is_id(a)) {
        out.push_str(&format!(
            "  {} : {} -> {}\n",
            name(a),
            g.objects()[g.src(a)],
            g.objects()[g.tgt(a)]
        ));
    }
    out.push_str("compose:\n");
    for t in (0..g.len()).filter(|&a| !is_id(a)) {
        for s in (0..g.len()).filter(|&a| !is_id(a)) {
            if let Some(c) = g.compose(t, s) {
                out.push_str(&format!("  {} . {} = {}\n", name(t), name(s), name(c)));
            }
        }
    }
    out.push_str("inverse:\n");
    for a in (0..g.len()).filter(|&a| !is_id(a)) {
        if let Some(b) = g.inverse(a).filter(|&b| b >= a) {
            out.push_str(&format!("  {}^-1 = {}\n", name(a), name(b)));
        }
    }
    for (label, sub) in [("H", h), ("V", v)] {
        if let Some(sub) = sub {
            let names: Vec<String> = sub.iter().filter(|&&a| !is_id(a)).map(|&a| name(a)).collect();
            out.push_str(&format!("subgroupoid {label}: {}\n", names.join(" ")).replace(": \n", ":\n"));
        }
    }
    out
}
