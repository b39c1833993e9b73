use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A linear map between finite-dimensional spaces with chosen bases.
///
/// Stored column by column; each column keeps its nonzero entries sorted by
/// row, so structural equality is equality of maps.
#[derive(Clone, PartialEq)]
pub struct LinMap<T> {
    cod: usize,
    dom: usize,
    cols: Vec<Vec<(usize, T)>>,
}

/// First entry where two maps of equal shape disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct Difference<T> {
    pub row: usize,
    pub col: usize,
    pub lhs: T,
    pub rhs: T,
}

fn normalize<T: Scalar>(mut entries: Vec<(usize, T)>) -> Vec<(usize, T)> {
    entries.sort_by_key(|e| e.0);
    let mut out: Vec<(usize, T)> = Vec::with_capacity(entries.len());
    for (r, v) in entries {
        match out.last_mut() {
            Some(last) if last.0 == r => last.1 += v,
            _ => out.push((r, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

impl<T: Scalar> LinMap<T> {
    pub fn zero(cod: usize, dom: usize) -> Self {
        LinMap {
            cod,
            dom,
            cols: vec![Vec::new(); dom],
        }
    }

    pub fn identity(n: usize) -> Self {
        LinMap {
            cod: n,
            dom: n,
            cols: (0..n).map(|j| vec![(j, T::one())]).collect(),
        }
    }

    /// The 1×1 map given by a scalar.
    pub fn scalar(x: T) -> Self {
        Self::from_columns(1, 1, vec![vec![(0, x)]]).expect("1x1")
    }

    /// Builds a map from its columns given as (row, value) lists; rows may
    /// repeat (values are summed) and zeros are dropped.
    pub fn from_columns(cod: usize, dom: usize, cols: Vec<Vec<(usize, T)>>) -> Result<Self> {
        if cols.len() != dom {
            return Err(Error::shape("from_columns", (cod, dom), (cod, cols.len())));
        }
        let mut out = Vec::with_capacity(dom);
        for col in cols {
            if let Some(&(r, _)) = col.iter().find(|e| e.0 >= cod) {
                return Err(Error::shape("from_columns", (cod, dom), (r + 1, dom)));
            }
            out.push(normalize(col));
        }
        Ok(LinMap { cod, dom, cols: out })
    }

    /// Builds a map column by column from a function of the column index.
    pub fn from_basis_fn<I>(cod: usize, dom: usize, mut f: impl FnMut(usize) -> I) -> Self
    where
        I: IntoIterator<Item = (usize, T)>,
    {
        let cols = (0..dom)
            .map(|j| {
                let col: Vec<(usize, T)> = f(j).into_iter().collect();
                assert!(col.iter().all(|e| e.0 < cod), "row index out of range");
                normalize(col)
            })
            .collect();
        LinMap { cod, dom, cols }
    }

    pub fn from_fn(cod: usize, dom: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        Self::from_basis_fn(cod, dom, |c| (0..cod).map(|r| (r, f(r, c))).collect::<Vec<_>>())
    }

    /// Builds a map from its rows; an empty list of rows needs the domain
    /// dimension supplied separately, see [`LinMap::from_rows_with_dom`].
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let dom = rows.first().map_or(0, |r| r.len());
        Self::from_rows_with_dom(rows, dom)
    }

    pub fn from_rows_with_dom(rows: Vec<Vec<T>>, dom: usize) -> Result<Self> {
        let cod = rows.len();
        let mut cols = vec![Vec::new(); dom];
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != dom {
                return Err(Error::shape("from_rows", (cod, dom), (cod, row.len())));
            }
            for (c, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    cols[c].push((r, v));
                }
            }
        }
        Ok(LinMap { cod, dom, cols })
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.cod, self.dom)
    }

    pub fn is_square(&self) -> bool {
        self.cod == self.dom
    }

    pub fn get(&self, row: usize, col: usize) -> T {
        let c = &self.cols[col];
        match c.binary_search_by_key(&row, |e| e.0) {
            Ok(k) => c[k].1.clone(),
            Err(_) => T::zero(),
        }
    }

    /// Nonzero entries of a column, sorted by row.
    pub fn column(&self, col: usize) -> &[(usize, T)] {
        &self.cols[col]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        let mut rows = vec![vec![T::zero(); self.dom]; self.cod];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                rows[*r][c] = v.clone();
            }
        }
        rows
    }

    /// The composite `self ∘ g`.
    pub fn compose(&self, g: &LinMap<T>) -> Result<LinMap<T>> {
        if self.dom != g.cod {
            return Err(Error::shape("compose", self.shape(), g.shape()));
        }
        Ok(self.compose_unchecked(g))
    }

    fn compose_unchecked(&self, g: &LinMap<T>) -> LinMap<T> {
        let mut acc = vec![T::zero(); self.cod];
        let mut mark = vec![false; self.cod];
        let mut touched = Vec::new();
        let cols = g
            .cols
            .iter()
            .map(|gcol| {
                for (k, gv) in gcol {
                    for (r, fv) in &self.cols[*k] {
                        if !mark[*r] {
                            mark[*r] = true;
                            touched.push(*r);
                        }
                        acc[*r] += fv.clone() * gv.clone();
                    }
                }
                touched.sort_unstable();
                let mut out = Vec::with_capacity(touched.len());
                for &r in &touched {
                    mark[r] = false;
                    let v = std::mem::replace(&mut acc[r], T::zero());
                    if !v.is_zero() {
                        out.push((r, v));
                    }
                }
                touched.clear();
                out
            })
            .collect();
        LinMap {
            cod: self.cod,
            dom: g.dom,
            cols,
        }
    }

    /// Kronecker product; basis pair (i, j) sits at index `i * n + j`.
    pub fn tensor(&self, g: &LinMap<T>) -> LinMap<T> {
        let mut cols = Vec::with_capacity(self.dom * g.dom);
        for a in &self.cols {
            for b in &g.cols {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (r1, v1) in a {
                    for (r2, v2) in b {
                        col.push((r1 * g.cod + r2, v1.clone() * v2.clone()));
                    }
                }
                cols.push(col);
            }
        }
        LinMap {
            cod: self.cod * g.cod,
            dom: self.dom * g.dom,
            cols,
        }
    }

    /// The symmetry `m ⊗ n → n ⊗ m`.
    pub fn flip(m: usize, n: usize) -> Self {
        Self::from_basis_fn(n * m, m * n, |c| [((c % n) * m + c / n, T::one())])
    }

    pub fn transpose(&self) -> LinMap<T> {
        let mut cols = vec![Vec::new(); self.cod];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                cols[*r].push((c, v.clone()));
            }
        }
        LinMap {
            cod: self.dom,
            dom: self.cod,
            cols,
        }
    }

    pub fn add(&self, other: &LinMap<T>) -> Result<LinMap<T>> {
        if self.shape() != other.shape() {
            return Err(Error::shape("add", self.shape(), other.shape()));
        }
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| normalize(a.iter().chain(b.iter()).cloned().collect()))
            .collect();
        Ok(LinMap {
            cod: self.cod,
            dom: self.dom,
            cols,
        })
    }

    pub fn sub(&self, other: &LinMap<T>) -> Result<LinMap<T>> {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, x: &T) -> LinMap<T> {
        let cols = self
            .cols
            .iter()
            .map(|c| normalize(c.iter().map(|(r, v)| (*r, v.clone() * x.clone())).collect()))
            .collect();
        LinMap {
            cod: self.cod,
            dom: self.dom,
            cols,
        }
    }

    /// Returns a copy with one entry replaced.
    pub fn with_entry(&self, row: usize, col: usize, value: T) -> LinMap<T> {
        let mut out = self.clone();
        let c = &mut out.cols[col];
        match c.binary_search_by_key(&row, |e| e.0) {
            Ok(k) => {
                if value.is_zero() {
                    c.remove(k);
                } else {
                    c[k].1 = value;
                }
            }
            Err(k) => {
                if !value.is_zero() {
                    c.insert(k, (row, value));
                }
            }
        }
        out
    }

    /// The first entry, in column-major order, where the maps differ.
    /// Maps of different shapes have no such entry; compare shapes first.
    pub fn first_difference(&self, other: &LinMap<T>) -> Option<Difference<T>> {
        for (c, (a, b)) in self.cols.iter().zip(&other.cols).enumerate() {
            if a == b {
                continue;
            }
            let (mut i, mut j) = (0, 0);
            loop {
                let ra = a.get(i).map(|e| e.0);
                let rb = b.get(j).map(|e| e.0);
                match (ra, rb) {
                    (Some(x), Some(y)) if x == y => {
                        if a[i].1 != b[j].1 {
                            return Some(Difference {
                                row: x,
                                col: c,
                                lhs: a[i].1.clone(),
                                rhs: b[j].1.clone(),
                            });
                        }
                        i += 1;
                        j += 1;
                    }
                    (Some(x), y) if y.map_or(true, |y| x < y) => {
                        return Some(Difference {
                            row: x,
                            col: c,
                            lhs: a[i].1.clone(),
                            rhs: T::zero(),
                        })
                    }
                    (_, Some(y)) => {
                        return Some(Difference {
                            row: y,
                            col: c,
                            lhs: T::zero(),
                            rhs: b[j].1.clone(),
                        })
                    }
                    _ => break,
                }
            }
        }
        None
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && self.compose_unchecked(self) == *self
    }

    /// Maps each entry through `f`, e.g. to change scalars.
    pub fn map_entries<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> LinMap<U> {
        let cols = self
            .cols
            .iter()
            .map(|c| normalize(c.iter().map(|(r, v)| (*r, f(v))).collect()))
            .collect();
        LinMap {
            cod: self.cod,
            dom: self.dom,
            cols,
        }
    }
}

/// `maps[0] ∘ maps[1] ∘ … ∘ maps[n-1]`.
///
/// Panics on a shape mismatch; callers validate shapes when data is built.
pub fn chain<T: Scalar>(maps: &[&LinMap<T>]) -> LinMap<T> {
    let (last, rest) = maps.split_last().expect("nonempty composite");
    let mut acc = (*last).clone();
    for (k, m) in rest.iter().enumerate().rev() {
        assert_eq!(
            m.dom, acc.cod,
            "composite factor {k} has shape {:?}, next factor codomain {}",
            m.shape(),
            acc.cod
        );
        acc = m.compose_unchecked(&acc);
    }
    acc
}

/// `maps[0] ⊗ maps[1] ⊗ … ⊗ maps[n-1]`.
pub fn tensor_all<T: Scalar>(maps: &[&LinMap<T>]) -> LinMap<T> {
    let (first, rest) = maps.split_first().expect("nonempty tensor");
    rest.iter().fold((*first).clone(), |acc, m| acc.tensor(m))
}

impl<T: fmt::Debug> fmt::Debug for LinMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinMap {}x{}", self.cod, self.dom)?;
        let nnz: usize = self.cols.iter().map(Vec::len).sum();
        if nnz <= 32 {
            let entries: Vec<_> = self
                .cols
                .iter()
                .enumerate()
                .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
                .collect();
            write!(f, " {:?}", entries)
        } else {
            write!(f, " ({} nonzero)", nnz)
        }
    }
}

impl<T: Scalar> fmt::Display for LinMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
