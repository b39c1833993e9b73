use serde::Serialize;

use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::scalar::Scalar;

/// A factorization `e = injection ∘ projection` with
/// `projection ∘ injection = id` on the image.
#[derive(Clone, Debug, PartialEq)]
pub struct Splitting<T> {
    pub image_dim: usize,
    pub injection: LinMap<T>,
    pub projection: LinMap<T>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Echelon {
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form in place, pivoting on the first nonzero entry
/// of each column. Returns the pivot columns.
pub fn rref<T: Scalar>(rows: &mut [Vec<T>], ncols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = T::one() / rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v *= inv.clone();
        }
        for k in 0..rows.len() {
            if k != r && !rows[k][c].is_zero() {
                let factor = rows[k][c].clone();
                for j in c..ncols {
                    let sub = factor.clone() * rows[r][j].clone();
                    rows[k][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { rank: r, pivots }
}

pub fn rank<T: Scalar>(m: &LinMap<T>) -> usize {
    let mut rows = m.to_rows();
    rref(&mut rows, m.dom()).rank
}

/// Inverse of a square map.
pub fn inverse<T: Scalar>(m: &LinMap<T>) -> Result<LinMap<T>> {
    if !m.is_square() {
        return Err(Error::shape("inverse", m.shape(), (m.dom(), m.cod())));
    }
    let n = m.dom();
    let mut rows: Vec<Vec<T>> = m
        .to_rows()
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            row
        })
        .collect();
    let ech = rref(&mut rows, 2 * n);
    if ech.pivots.iter().take(n).filter(|&&p| p < n).count() < n {
        return Err(Error::Singular);
    }
    let inv_rows = rows.into_iter().map(|row| row[n..].to_vec()).collect();
    LinMap::from_rows_with_dom(inv_rows, n)
}

fn check_idempotent<T: Scalar>(e: &LinMap<T>) -> Result<()> {
    if !e.is_square() {
        return Err(Error::shape("split_idempotent", e.shape(), (e.dom(), e.dom())));
    }
    let ee = e.compose(e)?;
    if let Some(d) = ee.first_difference(e) {
        return Err(Error::NotIdempotent {
            row: d.row,
            col: d.col,
            lhs: d.lhs.to_string(),
            rhs: d.rhs.to_string(),
        });
    }
    Ok(())
}

/// Splits an idempotent through its image.
///
/// The image basis is the lowest-index maximal independent set of rows of
/// `e`: the projection consists of those rows and the injection holds the
/// coordinates of every row of `e` in terms of them. When `e` fixes some
/// standard basis vectors and kills the rest, the injection is the
/// inclusion of the fixed vectors in increasing order.
pub fn split_idempotent<T: Scalar>(e: &LinMap<T>) -> Result<Splitting<T>> {
    check_idempotent(e)?;
    let n = e.dom();
    let mut rows = e.transpose().to_rows();
    let ech = rref(&mut rows, n);
    let r = ech.rank;
    let injection = LinMap::from_rows_with_dom(rows.into_iter().take(r).collect(), n)?.transpose();
    let projection = LinMap::from_basis_fn(r, n, |c| {
        ech.pivots
            .iter()
            .enumerate()
            .map(|(k, &row)| (k, e.get(row, c)))
            .collect::<Vec<_>>()
    });
    let s = Splitting {
        image_dim: r,
        injection,
        projection,
    };
    debug_assert!(s.verify(e).is_ok());
    Ok(s)
}

impl<T: Scalar> Splitting<T> {
    /// Checks a supplied factorization of `e`.
    pub fn new(e: &LinMap<T>, injection: LinMap<T>, projection: LinMap<T>) -> Result<Self> {
        check_idempotent(e)?;
        let s = Splitting {
            image_dim: projection.cod(),
            injection,
            projection,
        };
        s.verify(e)?;
        Ok(s)
    }

    fn verify(&self, e: &LinMap<T>) -> Result<()> {
        let ip = self.injection.compose(&self.projection)?;
        if let Some(d) = ip.first_difference(e) {
            return Err(Error::NotIdempotent {
                row: d.row,
                col: d.col,
                lhs: d.lhs.to_string(),
                rhs: d.rhs.to_string(),
            });
        }
        let pi = self.projection.compose(&self.injection)?;
        if let Some(d) = pi.first_difference(&LinMap::identity(self.image_dim)) {
            return Err(Error::NotIdempotent {
                row: d.row,
                col: d.col,
                lhs: d.lhs.to_string(),
                rhs: d.rhs.to_string(),
            });
        }
        Ok(())
    }

    pub fn idempotent(&self) -> LinMap<T> {
        self.injection.compose(&self.projection).expect("splitting shapes")
    }
}
