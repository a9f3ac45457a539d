//! Dense linear algebra over a [`Scalar`] field: RREF, spans, annihilators.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Mat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    /// Builds a matrix from rows of length `cols`.
    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension { expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(Mat { rows: n, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn scale(&self, s: &F) -> Self {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.clone() * s.clone()).collect() }
    }

    pub fn mul(&self, other: &Mat<F>) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_negligible() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_negligible() {
                        let v = out.get(i, j).clone() + a.clone() * b.clone();
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if a.is_negligible() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let b = self.get(k, j);
                if !b.is_negligible() {
                    *o = o.clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_negligible())
    }

    /// Entrywise comparison, tolerant for floating scalars.
    pub fn approx_eq(&self, other: &Mat<F>) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| (a.clone() - b.clone()).is_negligible())
    }

    pub fn rank(&self) -> usize {
        rref(self).1
    }
}

impl<F: fmt::Debug> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (c, x) in self.data[r * self.cols..(r + 1) * self.cols].iter().enumerate() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x:?}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Reduced row echelon form with zero rows dropped, and the rank.
pub fn rref<F: Scalar>(m: &Mat<F>) -> (Mat<F>, usize) {
    let (rows, _) = rref_rows(m.row_vecs(), m.cols);
    let rank = rows.len();
    let cols = m.cols;
    (Mat::from_rows(rows, cols).expect("row lengths preserved"), rank)
}

fn rref_rows<F: Scalar>(mut rows: Vec<Vec<F>>, cols: usize) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_negligible()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = F::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        rows[r][c] = F::one();
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_negligible() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_negligible() {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
            row[c] = F::zero();
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// A linear subspace of `F^ambient`, stored as an RREF basis.
#[derive(Clone, PartialEq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Scalar> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        span(&Mat::<F>::identity(ambient).row_vecs(), ambient).expect("square identity")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Mat<F> {
        Mat::from_rows(self.basis.clone(), self.ambient).expect("basis rows have ambient length")
    }

    /// Remainder of `v` after reduction against the basis.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_negligible() {
                continue;
            }
            let f = w[p].clone();
            for (x, b) in w.iter_mut().zip(row) {
                if !b.is_negligible() {
                    *x = x.clone() - f.clone() * b.clone();
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> Result<bool> {
        check_len(v, self.ambient)?;
        Ok(self.reduce(v).iter().all(|x| x.is_negligible()))
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> Result<bool> {
        check_ambient(self, other)?;
        for v in &other.basis {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Sum of two subspaces.
    pub fn join(&self, other: &Subspace<F>) -> Result<Self> {
        check_ambient(self, other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        span(&rows, self.ambient)
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient
    }
}

impl<F: fmt::Debug> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(rank {} of {}, [", self.basis.len(), self.ambient)?;
        for (k, row) in self.basis.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            let cells: Vec<String> = row.iter().map(|x| format!("{x:?}")).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        f.write_str("])")
    }
}

fn check_len<F>(v: &[F], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::Dimension { expected: n, found: v.len() });
    }
    Ok(())
}

fn check_ambient<F>(a: &Subspace<F>, b: &Subspace<F>) -> Result<()> {
    if a.ambient != b.ambient {
        return Err(Error::Dimension { expected: a.ambient, found: b.ambient });
    }
    Ok(())
}

/// Row space of `vectors` inside `F^ambient`.
pub fn span<F: Scalar>(vectors: &[Vec<F>], ambient: usize) -> Result<Subspace<F>> {
    for v in vectors {
        check_len(v, ambient)?;
    }
    let (basis, pivots) = rref_rows(vectors.to_vec(), ambient);
    Ok(Subspace { ambient, basis, pivots })
}

pub fn subspace_equal<F: Scalar>(a: &Subspace<F>, b: &Subspace<F>) -> Result<bool> {
    check_ambient(a, b)?;
    if F::EXACT {
        return Ok(a.basis == b.basis);
    }
    Ok(a.rank() == b.rank() && a.contains_subspace(b)?)
}

/// Null space of `m` (vectors `v` with `m · v = 0`).
pub fn kernel<F: Scalar>(m: &Mat<F>) -> Subspace<F> {
    let n = m.cols;
    let (rows, pivots) = rref_rows(m.row_vecs(), n);
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); n];
        v[free] = F::one();
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = F::zero() - row[free].clone();
        }
        out.push(v);
    }
    span(&out, n).expect("kernel vectors have column length")
}

/// `{v : v · pairing · wᵀ = 0 for all w ∈ s}`.
pub fn annihilator<F: Scalar>(s: &Subspace<F>, pairing: &Mat<F>) -> Result<Subspace<F>> {
    let n = s.ambient;
    if pairing.rows != n || pairing.cols != n {
        return Err(Error::Dimension { expected: n, found: pairing.rows.max(pairing.cols) });
    }
    if pairing.rank() != n {
        return Err(Error::DegeneratePairing);
    }
    let pt = pairing.transpose();
    let conditions: Vec<Vec<F>> = s.basis.iter().map(|w| pt.vec_mul(w)).collect();
    let c = Mat::from_rows(conditions, n)?;
    Ok(kernel(&c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(v: i64) -> Q {
        Q::from_integer(v.into())
    }

    fn m(rows: &[&[i64]]) -> Mat<Q> {
        let cols = rows[0].len();
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(), cols).unwrap()
    }

    fn sp(rows: &[&[i64]], n: usize) -> Subspace<Q> {
        let v: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        span(&v, n).unwrap()
    }

    #[test]
    fn rref_examples() {
        let (r, k) = rref(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!((r, k), (m(&[&[1, 2]]), 1));
        let (r, k) = rref(&Mat::<Q>::identity(3));
        assert_eq!((r, k), (Mat::identity(3), 3));
        let (r, k) = rref(&m(&[&[1, 1, 1]]));
        assert_eq!((r, k), (m(&[&[1, 1, 1]]), 1));
    }

    #[test]
    fn span_examples() {
        assert_eq!(sp(&[], 3).rank(), 0);
        assert_eq!(sp(&[&[1, 1, 1]], 3).rank(), 1);
        assert_eq!(sp(&[&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]], 3).rank(), 2);
        assert!(span(&[vec![q(1)]], 3).is_err());
    }

    #[test]
    fn equality_examples() {
        assert!(subspace_equal(&sp(&[&[1, 0], &[0, 1]], 2), &sp(&[&[1, 1], &[1, -1]], 2)).unwrap());
        assert!(!subspace_equal(&sp(&[&[1, 1, 1]], 3), &sp(&[&[1, -1, 0], &[0, 1, -1]], 3)).unwrap());
        assert!(subspace_equal(&sp(&[], 2), &sp(&[], 2)).unwrap());
        assert!(subspace_equal(&sp(&[], 2), &sp(&[], 3)).is_err());
    }

    #[test]
    fn annihilator_examples() {
        let id = Mat::<Q>::identity(3);
        let a = annihilator(&sp(&[&[1, 1, 1]], 3), &id).unwrap();
        assert!(subspace_equal(&a, &sp(&[&[1, -1, 0], &[0, 1, -1]], 3)).unwrap());
        assert!(annihilator(&Subspace::zero(3), &id).unwrap().is_full());
        assert_eq!(annihilator(&Subspace::<Q>::full(3), &id).unwrap().rank(), 0);
        let degenerate = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
        assert!(matches!(annihilator(&sp(&[&[1, 1, 1]], 3), &degenerate), Err(Error::DegeneratePairing)));
    }

    #[test]
    fn nonsymmetric_pairing() {
        // ⟨v,w⟩ = v₀w₁ + v₁w₀
        let p = m(&[&[0, 1], &[1, 0]]);
        let a = annihilator(&sp(&[&[0, 1]], 2), &p).unwrap();
        assert!(subspace_equal(&a, &sp(&[&[0, 1]], 2)).unwrap());
    }

    #[test]
    fn floating_scalars_work() {
        let v = vec![vec![1.0f64, 2.0], vec![2.0, 4.0 + 1e-12]];
        assert_eq!(span(&v, 2).unwrap().rank(), 1);
        let k = kernel(&Mat::from_rows(vec![vec![1.0f64, 1.0, 1.0]], 3).unwrap());
        assert_eq!(k.rank(), 2);
    }
}
