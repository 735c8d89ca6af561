use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::Coeff;
use crate::exec::Execution;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("map is not parity-homogeneous")]
    Inhomogeneous,
}

/// Sparse matrix with a Z2 grading on rows and columns.
///
/// Rows are stored as column-sorted lists of nonzero entries.
#[derive(Clone, Debug)]
pub struct GradedMatrix<T> {
    rows: Vec<Vec<(usize, T)>>,
    ncols: usize,
    row_parity: Vec<u8>,
    col_parity: Vec<u8>,
}

impl<T: Coeff> GradedMatrix<T> {
    pub fn zeros(row_parity: Vec<u8>, col_parity: Vec<u8>) -> Self {
        GradedMatrix {
            rows: vec![Vec::new(); row_parity.len()],
            ncols: col_parity.len(),
            row_parity,
            col_parity,
        }
    }

    pub fn identity(parity: Vec<u8>) -> Self {
        let rows = (0..parity.len()).map(|i| vec![(i, T::one())]).collect();
        GradedMatrix {
            rows,
            ncols: parity.len(),
            row_parity: parity.clone(),
            col_parity: parity,
        }
    }

    pub fn diagonal(parity: Vec<u8>, diag: Vec<T>) -> Self {
        assert_eq!(parity.len(), diag.len());
        let rows = diag
            .into_iter()
            .enumerate()
            .map(|(i, d)| if d.is_zero() { vec![] } else { vec![(i, d)] })
            .collect();
        GradedMatrix {
            rows,
            ncols: parity.len(),
            row_parity: parity.clone(),
            col_parity: parity,
        }
    }

    /// Builds from `(row, col, value)` triplets, summing repeated positions.
    pub fn from_triplets<I>(row_parity: Vec<u8>, col_parity: Vec<u8>, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, T)>,
    {
        let mut acc: Vec<BTreeMap<usize, T>> = vec![BTreeMap::new(); row_parity.len()];
        for (i, j, v) in entries {
            assert!(j < col_parity.len(), "column {j} out of range");
            let slot = acc[i].entry(j).or_insert_with(T::zero);
            *slot = slot.add(&v);
        }
        let rows = acc
            .into_iter()
            .map(|r| r.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        GradedMatrix {
            rows,
            ncols: col_parity.len(),
            row_parity,
            col_parity,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row_parity(&self) -> &[u8] {
        &self.row_parity
    }

    pub fn col_parity(&self) -> &[u8] {
        &self.col_parity
    }

    pub fn row(&self, i: usize) -> &[(usize, T)] {
        &self.rows[i]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        match self.rows[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.rows[i][k].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Columns as sparse lists `(row, value)`.
    pub fn columns(&self) -> Vec<Vec<(usize, T)>> {
        let mut cols = vec![Vec::new(); self.ncols];
        for (i, j, v) in self.iter() {
            cols[j].push((i, v.clone()));
        }
        cols
    }

    /// Parity `p` with `parity(row) = parity(col) + p` for every entry, if any.
    pub fn homogeneous_parity(&self) -> Option<u8> {
        let mut found: Option<u8> = None;
        for (i, j, _) in self.iter() {
            let p = self.row_parity[i] ^ self.col_parity[j];
            match found {
                None => found = Some(p),
                Some(f) if f != p => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(0))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_with(other, Execution::default())
    }

    pub fn mul_with(&self, other: &Self, exec: Execution) -> Self {
        assert_eq!(self.ncols, other.nrows(), "matrix product dimension mismatch");
        let rows = exec.map_range(self.rows.len(), |i| {
            let mut acc: BTreeMap<usize, T> = BTreeMap::new();
            for (k, a) in &self.rows[i] {
                for (j, b) in &other.rows[*k] {
                    let p = a.mul(b);
                    match acc.get_mut(j) {
                        Some(slot) => *slot = slot.add(&p),
                        None => {
                            acc.insert(*j, p);
                        }
                    }
                }
            }
            acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
        });
        GradedMatrix {
            rows,
            ncols: other.ncols,
            row_parity: self.row_parity.clone(),
            col_parity: other.col_parity.clone(),
        }
    }

    fn zip_rows<F>(&self, other: &Self, f: F) -> Self
    where
        F: Fn(Option<&T>, Option<&T>) -> T,
    {
        assert_eq!(self.nrows(), other.nrows(), "row count mismatch");
        assert_eq!(self.ncols, other.ncols, "column count mismatch");
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len().max(b.len()));
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let (col, v) = match (a.get(i), b.get(j)) {
                        (Some(x), Some(y)) if x.0 == y.0 => {
                            i += 1;
                            j += 1;
                            (x.0, f(Some(&x.1), Some(&y.1)))
                        }
                        (Some(x), Some(y)) if x.0 < y.0 => {
                            i += 1;
                            (x.0, f(Some(&x.1), None))
                        }
                        (Some(x), None) => {
                            i += 1;
                            (x.0, f(Some(&x.1), None))
                        }
                        (_, Some(y)) => {
                            j += 1;
                            (y.0, f(None, Some(&y.1)))
                        }
                        (None, None) => unreachable!(),
                    };
                    if !v.is_zero() {
                        out.push((col, v));
                    }
                }
                out
            })
            .collect();
        GradedMatrix {
            rows,
            ncols: self.ncols,
            row_parity: self.row_parity.clone(),
            col_parity: self.col_parity.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_rows(other, |a, b| match (a, b) {
            (Some(a), Some(b)) => a.add(b),
            (Some(a), None) => a.clone(),
            (None, Some(b)) => b.clone(),
            (None, None) => T::zero(),
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_rows(other, |a, b| match (a, b) {
            (Some(a), Some(b)) => a.sub(b),
            (Some(a), None) => a.clone(),
            (None, Some(b)) => b.neg(),
            (None, None) => T::zero(),
        })
    }

    pub fn neg(&self) -> Self {
        self.map(|v| v.neg())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return GradedMatrix::zeros(self.row_parity.clone(), self.col_parity.clone());
        }
        self.map(|v| v.mul(c))
    }

    pub fn map<U: Coeff, F: Fn(&T) -> U>(&self, f: F) -> GradedMatrix<U> {
        GradedMatrix {
            rows: self
                .rows
                .iter()
                .map(|r| {
                    r.iter()
                        .filter_map(|(j, v)| {
                            let u = f(v);
                            (!u.is_zero()).then_some((*j, u))
                        })
                        .collect()
                })
                .collect(),
            ncols: self.ncols,
            row_parity: self.row_parity.clone(),
            col_parity: self.col_parity.clone(),
        }
    }

    /// Fallible entrywise map, e.g. evaluation at a point.
    pub fn try_map<U: Coeff, E, F: Fn(&T) -> Result<U, E>>(
        &self,
        f: F,
    ) -> Result<GradedMatrix<U>, E> {
        let mut rows = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            let mut out = Vec::with_capacity(r.len());
            for (j, v) in r {
                let u = f(v)?;
                if !u.is_zero() {
                    out.push((*j, u));
                }
            }
            rows.push(out);
        }
        Ok(GradedMatrix {
            rows,
            ncols: self.ncols,
            row_parity: self.row_parity.clone(),
            col_parity: self.col_parity.clone(),
        })
    }

    pub fn transpose(&self) -> Self {
        let cols = self.columns();
        GradedMatrix {
            rows: cols,
            ncols: self.rows.len(),
            row_parity: self.col_parity.clone(),
            col_parity: self.row_parity.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = GradedMatrix::identity(self.row_parity.clone());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Koszul tensor product: entry `((i1,i2),(j1,j2))` is
    /// `(-1)^(p(B) p(j1)) A[i1,j1] B[i2,j2]`.
    pub fn kron(&self, b: &Self) -> Result<Self, MatrixError> {
        let pb = b.homogeneous_parity().ok_or(MatrixError::Inhomogeneous)?;
        let (bn, bm) = (b.nrows(), b.ncols);
        let mut rows = Vec::with_capacity(self.nrows() * bn);
        for ra in &self.rows {
            for rb in &b.rows {
                let mut out = Vec::with_capacity(ra.len() * rb.len());
                for (j1, a) in ra {
                    let negate = pb == 1 && self.col_parity[*j1] == 1;
                    for (j2, v) in rb {
                        let p = a.mul(v);
                        out.push((j1 * bm + j2, if negate { p.neg() } else { p }));
                    }
                }
                rows.push(out);
            }
        }
        Ok(GradedMatrix {
            rows,
            ncols: self.ncols * bm,
            row_parity: tensor_parity(&self.row_parity, &b.row_parity),
            col_parity: tensor_parity(&self.col_parity, &b.col_parity),
        })
    }

    /// Entrywise equality using the coefficient type's equality.
    pub fn equals(&self, other: &Self) -> bool {
        if self.nrows() != other.nrows() || self.ncols != other.ncols {
            return false;
        }
        self.first_difference(other).is_none()
    }

    /// First position where the two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        for (i, (a, b)) in self.rows.iter().zip(&other.rows).enumerate() {
            let cols: std::collections::BTreeSet<usize> =
                a.iter().chain(b.iter()).map(|e| e.0).collect();
            for j in cols {
                if self.get(i, j) != other.get(i, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// One line per nonzero entry: `(<row>,<col>) = <value>`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (i, j, v) in self.iter() {
            let _ = writeln!(s, "({i},{j}) = {v}");
        }
        s
    }
}

/// Parity vector of a tensor product in row-major order.
pub(crate) fn tensor_parity(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter()
        .flat_map(|&pa| b.iter().map(move |&pb| pa ^ pb))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Scalar;

    fn m(par: Vec<u8>, entries: &[(usize, usize, i64)]) -> GradedMatrix<Scalar> {
        GradedMatrix::from_triplets(
            par.clone(),
            par,
            entries.iter().map(|&(i, j, v)| (i, j, Scalar::from_i64(v))),
        )
    }

    #[test]
    fn kron_identity() {
        let i2 = GradedMatrix::<Scalar>::identity(vec![0, 1]);
        let i3 = GradedMatrix::<Scalar>::identity(vec![0, 1, 1]);
        let k = i2.kron(&i3).unwrap();
        assert!(k.equals(&GradedMatrix::identity(tensor_parity(&[0, 1], &[0, 1, 1]))));
    }

    #[test]
    fn kron_koszul_sign() {
        // odd B: sign flips on columns whose first factor is odd
        let a = m(vec![0, 1], &[(0, 0, 2), (1, 1, 3)]);
        let b = m(vec![0, 1], &[(1, 0, 5)]);
        let k = a.kron(&b).unwrap();
        assert_eq!(k.get(1, 0), Scalar::from_i64(10));
        assert_eq!(k.get(3, 2), Scalar::from_i64(-15));
        let inhom = m(vec![0, 1], &[(0, 0, 1), (1, 0, 1)]);
        assert_eq!(a.kron(&inhom).unwrap_err(), MatrixError::Inhomogeneous);
    }

    #[test]
    fn product_and_sum() {
        let a = m(vec![0, 0], &[(0, 1, 1)]);
        assert!(a.mul(&a).is_zero());
        let b = a.transpose();
        let ab = a.mul(&b);
        assert_eq!(ab.get(0, 0), Scalar::one());
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.add(&b).nnz(), 2);
        assert_eq!(a.dump(), "(0,1) = 1 ; 1\n");
    }
}
