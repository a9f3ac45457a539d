//! Maps between generator spaces and what they induce in weight 3.

use super::basis::Weight3Basis;
use super::Presentation;
use crate::error::{Error, Result};
use crate::exactlin::{span, subspace_equal, Mat, Subspace};
use crate::scalar::Scalar;
use crate::trees::{GenSpace, Mode};

/// Linear map on generators; row `i` is the image of source generator `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenMap<F> {
    matrix: Mat<F>,
}

impl<F: Scalar> GenMap<F> {
    pub fn new(matrix: Mat<F>) -> Self {
        GenMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        GenMap { matrix: Mat::identity(n) }
    }

    pub fn matrix(&self) -> &Mat<F> {
        &self.matrix
    }

    /// Builds a map from named images, deriving missing images through the involutions.
    ///
    /// Each assignment is `(source generator, [(coefficient, target generator)])`; an empty
    /// image list sends the generator to zero.
    pub fn from_assignments(
        src: &GenSpace<F>,
        tgt: &GenSpace<F>,
        assignments: &[(String, Vec<(F, String)>)],
    ) -> Result<Self> {
        let (n, m) = (src.len(), tgt.len());
        let mut images: Vec<Option<Vec<F>>> = vec![None; n];
        for (name, terms) in assignments {
            let i = src.index_of(name).ok_or_else(|| Error::Map(format!("`{name}` is not a source generator")))?;
            let mut row = vec![F::zero(); m];
            for (c, t) in terms {
                let k = tgt.index_of(t).ok_or_else(|| Error::Map(format!("`{t}` is not a target generator")))?;
                row[k] = row[k].clone() + c.clone();
            }
            if images[i].as_ref().is_some_and(|old| *old != row) {
                return Err(Error::Map(format!("`{name}` is assigned twice")));
            }
            images[i] = Some(row);
        }
        if let (Some(a), Some(b)) = (src.action(), tgt.action()) {
            complete(&mut images, a, b);
        }
        let rows = images
            .into_iter()
            .enumerate()
            .map(|(i, r)| r.ok_or_else(|| Error::Map(format!("no image for `{}`", src.name(i)))))
            .collect::<Result<Vec<_>>>()?;
        Ok(GenMap { matrix: Mat::from_rows(rows, m)? })
    }

    pub fn check_shape(&self, src: &GenSpace<F>, tgt: &GenSpace<F>) -> Result<()> {
        if self.matrix.rows() != src.len() {
            return Err(Error::Dimension { expected: src.len(), found: self.matrix.rows() });
        }
        if self.matrix.cols() != tgt.len() {
            return Err(Error::Dimension { expected: tgt.len(), found: self.matrix.cols() });
        }
        if src.mode() != tgt.mode() {
            return Err(Error::Map("source and target modes differ".into()));
        }
        Ok(())
    }

    /// `A_src · M = M · A_tgt`; always true in nonsymmetric mode.
    pub fn is_equivariant(&self, src: &GenSpace<F>, tgt: &GenSpace<F>) -> Result<bool> {
        self.check_shape(src, tgt)?;
        match (src.action(), tgt.action()) {
            (Some(a), Some(b)) => Ok(a.mul(&self.matrix)?.approx_eq(&self.matrix.mul(b)?)),
            _ => Ok(true),
        }
    }

    /// The induced map on weight-3 coordinates, `e_i ∘_u e_j ↦ f(e_i) ∘_u f(e_j)`.
    pub fn weight3(&self, mode: Mode) -> Mat<F> {
        let (n, m) = (self.matrix.rows(), self.matrix.cols());
        let src = Weight3Basis::new(n, mode);
        let tgt = Weight3Basis::new(m, mode);
        let mut w = Mat::zeros(src.dim(), tgt.dim());
        for idx in 0..src.dim() {
            let (u, i, j) = src.decode(idx);
            for k in 0..m {
                let a = self.matrix.get(i, k);
                if a.is_negligible() {
                    continue;
                }
                for l in 0..m {
                    let b = self.matrix.get(j, l);
                    if !b.is_negligible() {
                        w.set(idx, tgt.index(u, k, l), a.clone() * b.clone());
                    }
                }
            }
        }
        w
    }

    /// Image of a subspace of the source weight-3 component.
    pub fn transport(&self, s: &Subspace<F>, mode: Mode) -> Result<Subspace<F>> {
        let w = self.weight3(mode);
        let rows: Vec<Vec<F>> = s.basis().iter().map(|v| w.vec_mul(v)).collect();
        span(&rows, w.cols())
    }
}

fn complete<F: Scalar>(images: &mut [Option<Vec<F>>], a: &Mat<F>, b: &Mat<F>) {
    let n = images.len();
    loop {
        let mut changed = false;
        for g in 0..n {
            if images[g].is_some() {
                continue;
            }
            // g^(12) = Σ a[g][h] h, so g = Σ a[g][h] h^(12) and f(g) = Σ a[g][h] f(h)^(12).
            let support: Vec<usize> = (0..n).filter(|&h| !a.get(g, h).is_negligible()).collect();
            if support.is_empty() || support.iter().any(|&h| images[h].is_none()) {
                continue;
            }
            let mut row = vec![F::zero(); b.cols()];
            for &h in &support {
                let twisted = b.vec_mul(images[h].as_ref().expect("checked above"));
                for (r, t) in row.iter_mut().zip(twisted) {
                    *r = r.clone() + a.get(g, h).clone() * t;
                }
            }
            images[g] = Some(row);
            changed = true;
        }
        if !changed {
            break;
        }
    }
}

fn check_modes<F: Scalar>(a: &Presentation<F>, b: &Presentation<F>, f: &GenMap<F>) -> Result<()> {
    f.check_shape(a.gens(), b.gens())?;
    if !f.is_equivariant(a.gens(), b.gens())? {
        return Err(Error::NotEquivariant);
    }
    Ok(())
}

/// Whether `iso` carries the relation closure of `a` exactly onto that of `b`.
pub fn equal_presentations<F: Scalar>(a: &Presentation<F>, b: &Presentation<F>, iso: &GenMap<F>) -> Result<bool> {
    check_modes(a, b, iso)?;
    if iso.matrix.rows() != iso.matrix.cols() || iso.matrix.rank() != iso.matrix.rows() {
        return Err(Error::Singular);
    }
    let image = iso.transport(a.closure(), a.mode())?;
    subspace_equal(&image, b.closure())
}

/// Whether `f` induces an operad morphism: relations of `src` land in those of `tgt`.
pub fn verify_morphism<F: Scalar>(src: &Presentation<F>, tgt: &Presentation<F>, f: &GenMap<F>) -> Result<bool> {
    check_modes(src, tgt, f)?;
    let image = f.transport(src.closure(), src.mode())?;
    tgt.closure().contains_subspace(&image)
}
