//! Finite-dimensional algebras given by structure constants, and the checks run on them.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::Mat;
use crate::quad::{Presentation, Slot};
use crate::scalar::Scalar;

/// Generator name → operation name.
pub type Binding = BTreeMap<String, String>;

/// `e_i ∘ e_j = Σ_k c[i][j][k] e_k`, stored flat at `(i·d + j)·d + k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<F> {
    dim: usize,
    data: Vec<F>,
}

impl<F: Scalar> Tensor<F> {
    pub fn zeros(dim: usize) -> Self {
        Tensor { dim, data: vec![F::zero(); dim * dim * dim] }
    }

    pub fn from_nested(c: Vec<Vec<Vec<F>>>) -> Result<Self> {
        let d = c.len();
        let mut data = Vec::with_capacity(d * d * d);
        for plane in c {
            if plane.len() != d {
                return Err(Error::Dimension { expected: d, found: plane.len() });
            }
            for row in plane {
                if row.len() != d {
                    return Err(Error::Dimension { expected: d, found: row.len() });
                }
                data.extend(row);
            }
        }
        Ok(Tensor { dim: d, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &F {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: F) {
        self.data[(i * self.dim + j) * self.dim + k] = v;
    }

    /// Bilinear product of coordinate vectors.
    pub fn apply(&self, x: &[F], y: &[F]) -> Vec<F> {
        let d = self.dim;
        let mut out = vec![F::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_negligible() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_negligible() {
                    continue;
                }
                let s = xi.clone() * yj.clone();
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.get(i, j, k);
                    if !c.is_negligible() {
                        *o = o.clone() + s.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    /// Tensor of `(x, y) ↦ f(x, y)` for any bilinear `f` on coordinate vectors.
    pub fn from_fn(dim: usize, f: impl Fn(&[F], &[F]) -> Vec<F>) -> Self {
        let mut t = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(&unit(dim, i), &unit(dim, j));
                for (k, c) in v.into_iter().enumerate() {
                    t.set(i, j, k, c);
                }
            }
        }
        t
    }

    pub fn swapped(&self) -> Self {
        Self::from_fn(self.dim, |x, y| self.apply(y, x))
    }

    fn axpy(&mut self, c: &F, other: &Tensor<F>) {
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a = a.clone() + c.clone() * b.clone();
        }
    }

    fn approx_eq(&self, other: &Tensor<F>) -> bool {
        self.data.iter().zip(&other.data).all(|(a, b)| (a.clone() - b.clone()).is_negligible())
    }
}

fn unit<F: Scalar>(d: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); d];
    v[i] = F::one();
    v
}

fn vec_eq<F: Scalar>(a: &[F], b: &[F]) -> bool {
    a.iter().zip(b).all(|(x, y)| (x.clone() - y.clone()).is_negligible())
}

/// A finite-dimensional space with named bilinear operations.
#[derive(Clone, Debug, PartialEq)]
pub struct FinAlgebra<F> {
    name: String,
    dim: usize,
    ops: BTreeMap<String, Tensor<F>>,
}

impl<F: Scalar> FinAlgebra<F> {
    pub fn new(name: impl Into<String>, dim: usize) -> Self {
        FinAlgebra { name: name.into(), dim, ops: BTreeMap::new() }
    }

    pub fn with_op(mut self, name: impl Into<String>, t: Tensor<F>) -> Result<Self> {
        self.insert_op(name, t)?;
        Ok(self)
    }

    pub fn insert_op(&mut self, name: impl Into<String>, t: Tensor<F>) -> Result<()> {
        if t.dim != self.dim {
            return Err(Error::Dimension { expected: self.dim, found: t.dim });
        }
        self.ops.insert(name.into(), t);
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ops(&self) -> &BTreeMap<String, Tensor<F>> {
        &self.ops
    }

    pub fn op(&self, name: &str) -> Result<&Tensor<F>> {
        self.ops.get(name).ok_or_else(|| Error::UnknownOp(name.to_string()))
    }

    fn check_operator(&self, p: &Mat<F>) -> Result<()> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::Dimension { expected: self.dim, found: p.rows().max(p.cols()) });
        }
        Ok(())
    }
}

/// `P(x)` for a coordinate column vector: `P(e_j) = Σ_i P[i][j] e_i`.
pub fn apply_operator<F: Scalar>(p: &Mat<F>, x: &[F]) -> Vec<F> {
    p.transpose().vec_mul(x)
}

/// Where a relation first fails: relation index and basis triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub relation: usize,
    pub triple: [usize; 3],
}

/// One tensor per generator, derived through the involution where the binding is silent.
fn generator_tensors<F: Scalar>(a: &FinAlgebra<F>, p: &Presentation<F>, binding: &Binding) -> Result<Vec<Tensor<F>>> {
    let gens = p.gens();
    let n = gens.len();
    let mut ts: Vec<Option<Tensor<F>>> = vec![None; n];
    for (g, op) in binding {
        let i = gens.index_of(g).ok_or_else(|| Error::Binding(format!("`{g}` is not a generator of {}", p.name())))?;
        ts[i] = Some(a.op(op)?.clone());
    }
    if let Some(act) = gens.action() {
        loop {
            let mut changed = false;
            for g in 0..n {
                if ts[g].is_some() {
                    continue;
                }
                let support: Vec<usize> = (0..n).filter(|&h| !act.get(g, h).is_negligible()).collect();
                if support.iter().any(|&h| ts[h].is_none()) {
                    continue;
                }
                let mut t = Tensor::zeros(a.dim);
                for &h in &support {
                    t.axpy(act.get(g, h), &ts[h].as_ref().expect("checked above").swapped());
                }
                ts[g] = Some(t);
                changed = true;
            }
            if !changed {
                break;
            }
        }
    }
    let ts = ts
        .into_iter()
        .enumerate()
        .map(|(i, t)| t.ok_or_else(|| Error::Binding(format!("no operation bound to `{}`", gens.name(i)))))
        .collect::<Result<Vec<_>>>()?;
    if let Some(act) = gens.action() {
        for g in 0..n {
            let mut lhs = Tensor::zeros(a.dim);
            for (h, t) in ts.iter().enumerate() {
                if !act.get(g, h).is_negligible() {
                    lhs.axpy(act.get(g, h), t);
                }
            }
            if !lhs.approx_eq(&ts[g].swapped()) {
                return Err(Error::Binding(format!(
                    "operations bound to {} do not respect the (12)-action of `{}`",
                    p.name(),
                    gens.name(g)
                )));
            }
        }
    }
    Ok(ts)
}

fn monomial<F: Scalar>(ts: &[Tensor<F>], u: Slot, i: usize, j: usize, x: &[F], y: &[F], z: &[F]) -> Vec<F> {
    match u {
        Slot::I | Slot::Left => ts[i].apply(&ts[j].apply(x, y), z),
        Slot::II => ts[i].apply(&ts[j].apply(y, z), x),
        Slot::III => ts[i].apply(&ts[j].apply(z, x), y),
        Slot::Right => ts[i].apply(x, &ts[j].apply(y, z)),
    }
}

/// First relation/basis triple on which `a` violates `p`, if any.
pub fn find_violation<F: Scalar>(
    a: &FinAlgebra<F>,
    p: &Presentation<F>,
    binding: &Binding,
) -> Result<Option<Violation>> {
    let ts = generator_tensors(a, p, binding)?;
    let basis = p.basis();
    let d = a.dim;
    for (r, rel) in p.relations().iter().enumerate() {
        let terms: Vec<(usize, &F)> = rel.iter().enumerate().filter(|(_, c)| !c.is_negligible()).collect();
        for t in 0..d * d * d {
            let triple = [t / (d * d), (t / d) % d, t % d];
            let (x, y, z) = (unit::<F>(d, triple[0]), unit::<F>(d, triple[1]), unit::<F>(d, triple[2]));
            let mut acc = vec![F::zero(); d];
            for &(idx, c) in &terms {
                let (u, i, j) = basis.decode(idx);
                for (o, v) in acc.iter_mut().zip(monomial(&ts, u, i, j, &x, &y, &z)) {
                    *o = o.clone() + c.clone() * v;
                }
            }
            if acc.iter().any(|v| !v.is_negligible()) {
                return Ok(Some(Violation { relation: r, triple }));
            }
        }
    }
    Ok(None)
}

/// Whether every relation of `p` vanishes on all basis triples of `a`.
pub fn check_algebra<F: Scalar>(a: &FinAlgebra<F>, p: &Presentation<F>, binding: &Binding) -> Result<bool> {
    Ok(find_violation(a, p, binding)?.is_none())
}

/// `P(x·P(y)) = P(x)·P(y) = P(P(x)·y)` on all basis pairs.
pub fn is_di_average<F: Scalar>(a: &FinAlgebra<F>, op: &str, p: &Mat<F>) -> Result<bool> {
    a.check_operator(p)?;
    let t = a.op(op)?;
    let d = a.dim;
    for i in 0..d {
        for j in 0..d {
            let (x, y) = (unit::<F>(d, i), unit::<F>(d, j));
            let (px, py) = (apply_operator(p, &x), apply_operator(p, &y));
            let mid = t.apply(&px, &py);
            if !vec_eq(&apply_operator(p, &t.apply(&x, &py)), &mid)
                || !vec_eq(&apply_operator(p, &t.apply(&px, &y)), &mid)
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The di-average identities plus `P(x)·P(y) = λ P(x·y)`.
pub fn is_tri_average<F: Scalar>(a: &FinAlgebra<F>, op: &str, p: &Mat<F>, weight: &F) -> Result<bool> {
    if !is_di_average(a, op, p)? {
        return Ok(false);
    }
    let t = a.op(op)?;
    let d = a.dim;
    for i in 0..d {
        for j in 0..d {
            let (x, y) = (unit::<F>(d, i), unit::<F>(d, j));
            let lhs = t.apply(&apply_operator(p, &x), &apply_operator(p, &y));
            let rhs: Vec<F> = apply_operator(p, &t.apply(&x, &y)).into_iter().map(|v| v * weight.clone()).collect();
            if !vec_eq(&lhs, &rhs) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn bound_ops(binding: &Binding) -> Vec<&String> {
    let mut ops: Vec<&String> = binding.values().collect();
    ops.sort();
    ops.dedup();
    ops
}

fn replicate<F: Scalar>(
    a: &FinAlgebra<F>,
    p: &Presentation<F>,
    binding: &Binding,
    op_p: &Mat<F>,
    tri: bool,
) -> Result<(FinAlgebra<F>, Binding)> {
    a.check_operator(op_p)?;
    let suffix = if tri { "Tri" } else { "Du" };
    let mut out = FinAlgebra::new(format!("{suffix}({})", a.name), a.dim);
    for op in bound_ops(binding) {
        let ok = if tri { is_tri_average(a, op, op_p, &F::one())? } else { is_di_average(a, op, op_p)? };
        if !ok {
            let kind = if tri { "tri-average of weight 1" } else { "di-average" };
            return Err(Error::Precondition(format!("operator is not {kind} for `{op}`")));
        }
        let t = a.op(op)?;
        out.insert_op(format!("{op}_dashv"), Tensor::from_fn(a.dim, |x, y| t.apply(x, &apply_operator(op_p, y))))?;
        out.insert_op(format!("{op}_vdash"), Tensor::from_fn(a.dim, |x, y| t.apply(&apply_operator(op_p, x), y)))?;
        if tri {
            out.insert_op(format!("{op}_perp"), t.clone())?;
        }
    }
    let tags: &[&str] = if tri { &["dashv", "vdash", "perp"] } else { &["dashv", "vdash"] };
    let mut new_binding = Binding::new();
    for (g, op) in binding {
        if p.gens().index_of(g).is_none() {
            return Err(Error::Binding(format!("`{g}` is not a generator of {}", p.name())));
        }
        for tag in tags {
            new_binding.insert(format!("{g}_{tag}"), format!("{op}_{tag}"));
        }
    }
    Ok((out, new_binding))
}

/// `x ⊣ y = x∘P(y)`, `x ⊢ y = P(x)∘y` for every bound operation; returns the binding for `Du(p)`.
pub fn replicate_di<F: Scalar>(
    a: &FinAlgebra<F>,
    p: &Presentation<F>,
    binding: &Binding,
    op_p: &Mat<F>,
) -> Result<(FinAlgebra<F>, Binding)> {
    replicate(a, p, binding, op_p, false)
}

/// Adds `x ⊥ y = x∘y` to the di-replicated operations; the operator must be tri-average of weight 1.
pub fn replicate_tri<F: Scalar>(
    a: &FinAlgebra<F>,
    p: &Presentation<F>,
    binding: &Binding,
    op_p: &Mat<F>,
) -> Result<(FinAlgebra<F>, Binding)> {
    replicate(a, p, binding, op_p, true)
}

/// A linear combination term: coefficient, operation, and whether the arguments are swapped.
pub type OpTerm<F> = (F, String, bool);

/// Adds operations defined as linear combinations of existing (possibly swapped) ones.
pub fn derived_ops<F: Scalar>(a: &FinAlgebra<F>, defs: &[(String, Vec<OpTerm<F>>)]) -> Result<FinAlgebra<F>> {
    let mut out = a.clone();
    for (name, terms) in defs {
        let mut t = Tensor::zeros(a.dim);
        for (c, op, swap) in terms {
            let src = a.op(op)?;
            let src = if *swap { src.swapped() } else { src.clone() };
            t.axpy(c, &src);
        }
        out.insert_op(name.clone(), t)?;
    }
    Ok(out)
}
