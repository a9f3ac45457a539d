//! Weight-3 coordinates, normalization of 3-leaf trees and the S₃ action.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{span, Mat, Subspace};
use crate::scalar::Scalar;
use crate::trees::{DecoratedTree, GenSpace, Mode, TreeSum, Vertex};

/// Composition slot of a weight-3 monomial `e_i ∘_u e_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    /// `(x e_j y) e_i z`
    I,
    /// `(y e_j z) e_i x`
    II,
    /// `(z e_j x) e_i y`
    III,
    /// `(x e_j y) e_i z`, nonsymmetric
    Left,
    /// `x e_i (y e_j z)`, nonsymmetric
    Right,
}

impl Slot {
    pub fn label(self) -> &'static str {
        match self {
            Slot::I => "I",
            Slot::II => "II",
            Slot::III => "III",
            Slot::Left => "left",
            Slot::Right => "right",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        [Slot::I, Slot::II, Slot::III, Slot::Left, Slot::Right].into_iter().find(|u| u.label() == s)
    }

    pub fn slots(mode: Mode) -> &'static [Slot] {
        match mode {
            Mode::Symmetric => &[Slot::I, Slot::II, Slot::III],
            Mode::Nonsymmetric => &[Slot::Left, Slot::Right],
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Index set of the weight-3 component: u-major, then root generator i, then inner generator j.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Weight3Basis {
    n: usize,
    mode: Mode,
}

impl Weight3Basis {
    pub fn new(n: usize, mode: Mode) -> Self {
        Weight3Basis { n, mode }
    }

    pub fn of<F: Scalar>(gens: &GenSpace<F>) -> Self {
        Self::new(gens.len(), gens.mode())
    }

    pub fn generators(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn dim(&self) -> usize {
        Slot::slots(self.mode).len() * self.n * self.n
    }

    pub fn index(&self, u: Slot, i: usize, j: usize) -> usize {
        let pos = Slot::slots(self.mode).iter().position(|&s| s == u).expect("slot matches mode");
        pos * self.n * self.n + i * self.n + j
    }

    pub fn decode(&self, idx: usize) -> (Slot, usize, usize) {
        let nn = self.n * self.n;
        (Slot::slots(self.mode)[idx / nn], (idx % nn) / self.n, idx % self.n)
    }

    /// The tree `e_i ∘_u e_j` with leaves 1, 2, 3 standing for x, y, z.
    pub fn representative(&self, idx: usize) -> DecoratedTree {
        let (u, i, j) = self.decode(idx);
        let leaf = DecoratedTree::leaf;
        let node = |g: usize, l: DecoratedTree, r: DecoratedTree| {
            DecoratedTree::Node(Vertex::new(g), Box::new(l), Box::new(r))
        };
        match u {
            Slot::I | Slot::Left => node(i, node(j, leaf(1), leaf(2)), leaf(3)),
            Slot::II => node(i, node(j, leaf(2), leaf(3)), leaf(1)),
            Slot::III => node(i, node(j, leaf(3), leaf(1)), leaf(2)),
            Slot::Right => node(i, leaf(1), node(j, leaf(2), leaf(3))),
        }
    }
}

fn unit<F: Scalar>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// Coordinates of a 3-leaf tree whose vertices resolve in `gens`.
pub fn normalize_weight3<F: Scalar>(gens: &GenSpace<F>, t: &DecoratedTree) -> Result<Vec<F>> {
    let mut labels = t.leaves();
    labels.sort_unstable();
    if labels != [1, 2, 3] {
        return Err(Error::Normalize(format!("expected leaves 1, 2, 3 in {t}")));
    }
    let n = gens.len();
    let basis = Weight3Basis::of(gens);
    let resolve =
        |v: &Vertex| gens.resolve(v).ok_or_else(|| Error::Normalize(format!("vertex {v:?} is not a generator")));
    let leaf_of = |t: &DecoratedTree| match t {
        DecoratedTree::Leaf(l) => Some(*l),
        _ => None,
    };
    let DecoratedTree::Node(root, l, r) = t else { unreachable!("three leaves") };
    let root = resolve(root)?;

    if gens.mode() == Mode::Nonsymmetric {
        let mut out = vec![F::zero(); basis.dim()];
        let idx = match (&**l, &**r) {
            (DecoratedTree::Node(v, a, b), c)
                if (leaf_of(a), leaf_of(b), leaf_of(c)) == (Some(1), Some(2), Some(3)) =>
            {
                basis.index(Slot::Left, root, resolve(v)?)
            }
            (a, DecoratedTree::Node(v, b, c))
                if (leaf_of(a), leaf_of(b), leaf_of(c)) == (Some(1), Some(2), Some(3)) =>
            {
                basis.index(Slot::Right, root, resolve(v)?)
            }
            _ => return Err(Error::Normalize(format!("{t} permutes the inputs in nonsymmetric mode"))),
        };
        out[idx] = F::one();
        return Ok(out);
    }

    let action = gens.action().expect("symmetric mode has an action");
    // Root as a vector in V, the bottom vertex, and the leaves in planar order.
    let (root_vec, bottom, a, b, c) = match (&**l, &**r) {
        (DecoratedTree::Node(v, a, b), c) => (unit::<F>(n, root), resolve(v)?, a, b, c),
        (a, DecoratedTree::Node(v, b, c)) => (action.row(root).to_vec(), resolve(v)?, b, c, a),
        _ => unreachable!("three leaves"),
    };
    let (a, c) = match (leaf_of(a), leaf_of(b), leaf_of(c)) {
        (Some(a), Some(_), Some(c)) => (a, c),
        _ => unreachable!("three leaves"),
    };
    let (u, first) = match c {
        3 => (Slot::I, 1),
        1 => (Slot::II, 2),
        _ => (Slot::III, 3),
    };
    let bottom_vec = if a == first { unit::<F>(n, bottom) } else { action.row(bottom).to_vec() };
    let mut out = vec![F::zero(); basis.dim()];
    for (k, rk) in root_vec.iter().enumerate() {
        if rk.is_negligible() {
            continue;
        }
        for (m, sm) in bottom_vec.iter().enumerate() {
            if !sm.is_negligible() {
                out[basis.index(u, k, m)] = rk.clone() * sm.clone();
            }
        }
    }
    Ok(out)
}

/// Coordinates of a formal sum of 3-leaf trees.
pub fn sum_to_vector<F: Scalar>(gens: &GenSpace<F>, s: &TreeSum<F>) -> Result<Vec<F>> {
    let mut out = vec![F::zero(); Weight3Basis::of(gens).dim()];
    for (t, c) in s.terms() {
        for (o, x) in out.iter_mut().zip(normalize_weight3(gens, t)?) {
            if !x.is_negligible() {
                *o = o.clone() + c.clone() * x;
            }
        }
    }
    Ok(out)
}

/// The sum of representative trees with the given coordinates.
pub fn vector_to_sum<F: Scalar>(basis: &Weight3Basis, v: &[F]) -> TreeSum<F> {
    let mut s = TreeSum::new();
    for (idx, c) in v.iter().enumerate() {
        if !c.is_negligible() {
            s.add(basis.representative(idx), c.clone());
        }
    }
    s
}

/// A permutation of the leaves {1, 2, 3}: `images[k - 1] = σ(k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Perm(pub [u32; 3]);

impl Perm {
    pub const ID: Perm = Perm([1, 2, 3]);
    pub const T12: Perm = Perm([2, 1, 3]);
    pub const T13: Perm = Perm([3, 2, 1]);
    pub const T23: Perm = Perm([1, 3, 2]);
    pub const C123: Perm = Perm([2, 3, 1]);
    pub const C132: Perm = Perm([3, 1, 2]);

    pub const ALL: [Perm; 6] = [Perm::ID, Perm::T12, Perm::T13, Perm::T23, Perm::C123, Perm::C132];

    pub fn apply(self, k: u32) -> u32 {
        self.0[(k - 1) as usize]
    }

    /// `(self ∘ other)(k) = self(other(k))`.
    pub fn compose(self, other: Perm) -> Perm {
        Perm([self.apply(other.apply(1)), self.apply(other.apply(2)), self.apply(other.apply(3))])
    }

    pub fn inverse(self) -> Perm {
        let mut out = [0; 3];
        for k in 1..=3 {
            out[(self.apply(k) - 1) as usize] = k;
        }
        Perm(out)
    }

    pub fn sign(self) -> i64 {
        match self {
            Perm::T12 | Perm::T13 | Perm::T23 => -1,
            _ => 1,
        }
    }
}

/// Matrix of σ acting on row vectors: `σ·v = v · M_σ`.
pub fn s3_matrix<F: Scalar>(gens: &GenSpace<F>, sigma: Perm) -> Result<Mat<F>> {
    if gens.mode() == Mode::Nonsymmetric {
        return Err(Error::NonsymmetricUnsupported("the S₃ action"));
    }
    let basis = Weight3Basis::of(gens);
    let rows = (0..basis.dim())
        .map(|b| normalize_weight3(gens, &basis.representative(b).relabel_leaves(&|k| sigma.apply(k))))
        .collect::<Result<Vec<_>>>()?;
    Mat::from_rows(rows, basis.dim())
}

pub fn s3_act<F: Scalar>(gens: &GenSpace<F>, sigma: Perm, v: &[F]) -> Result<Vec<F>> {
    let m = s3_matrix(gens, sigma)?;
    if v.len() != m.rows() {
        return Err(Error::Dimension { expected: m.rows(), found: v.len() });
    }
    Ok(m.vec_mul(v))
}

/// The S₃-module generated by `rels`, or their plain span in nonsymmetric mode.
pub fn closure<F: Scalar>(gens: &GenSpace<F>, rels: &[Vec<F>]) -> Result<Subspace<F>> {
    let dim = Weight3Basis::of(gens).dim();
    if gens.mode() == Mode::Nonsymmetric || rels.is_empty() {
        return span(rels, dim);
    }
    let mut all = Vec::with_capacity(6 * rels.len());
    for sigma in Perm::ALL {
        let m = s3_matrix(gens, sigma)?;
        for r in rels {
            if r.len() != dim {
                return Err(Error::Dimension { expected: dim, found: r.len() });
            }
            all.push(m.vec_mul(r));
        }
    }
    span(&all, dim)
}

/// Whether every permutation maps `s` into itself.
pub fn is_s3_stable<F: Scalar>(gens: &GenSpace<F>, s: &Subspace<F>) -> Result<bool> {
    if gens.mode() == Mode::Nonsymmetric {
        return Ok(true);
    }
    for sigma in [Perm::T12, Perm::C123] {
        let m = s3_matrix(gens, sigma)?;
        for b in s.basis() {
            if !s.contains(&m.vec_mul(b))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::DecoratedTree::{Leaf, Node};
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(v: i64) -> Q {
        Q::from_integer(v.into())
    }

    /// `{μ, μ′}` swapped by (12).
    fn pair() -> GenSpace<Q> {
        let a = Mat::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]], 2).unwrap();
        GenSpace::symmetric(vec!["m".into(), "mp".into()], a).unwrap()
    }

    fn single(sign: i64) -> GenSpace<Q> {
        GenSpace::symmetric(vec!["b".into()], Mat::from_rows(vec![vec![q(sign)]], 1).unwrap()).unwrap()
    }

    fn node(g: usize, l: DecoratedTree, r: DecoratedTree) -> DecoratedTree {
        Node(Vertex::new(g), Box::new(l), Box::new(r))
    }

    fn unit_at(g: &GenSpace<Q>, u: Slot, i: usize, j: usize) -> Vec<Q> {
        let b = Weight3Basis::of(g);
        unit(b.dim(), b.index(u, i, j))
    }

    /// The twelve monomials `v₁ … v₁₂` of the regular representation, as (tree, slot, root, inner).
    fn v_table() -> Vec<(DecoratedTree, Slot, usize, usize)> {
        let (m, mp) = (0, 1);
        let l = |a, b, c| node(m, node(m, Leaf(a), Leaf(b)), Leaf(c));
        let r = |a, b, c| node(m, Leaf(a), node(m, Leaf(b), Leaf(c)));
        vec![
            (l(1, 2, 3), Slot::I, m, m),
            (r(1, 2, 3), Slot::II, mp, m),
            (r(2, 3, 1), Slot::III, mp, m),
            (l(2, 3, 1), Slot::II, m, m),
            (l(3, 1, 2), Slot::III, m, m),
            (r(3, 1, 2), Slot::I, mp, m),
            (r(1, 3, 2), Slot::II, mp, mp),
            (l(3, 2, 1), Slot::II, m, mp),
            (l(1, 3, 2), Slot::III, m, mp),
            (r(2, 1, 3), Slot::III, mp, mp),
            (r(3, 2, 1), Slot::I, mp, mp),
            (l(2, 1, 3), Slot::I, m, mp),
        ]
    }

    #[test]
    fn regular_representation_table() {
        let g = pair();
        for (t, u, i, j) in v_table() {
            assert_eq!(normalize_weight3(&g, &t).unwrap(), unit_at(&g, u, i, j), "{t}");
        }
    }

    #[test]
    fn twisted_inner_vertex() {
        let g = pair();
        let t = node(0, Leaf(2), node(0, Leaf(1), Leaf(3)));
        assert_eq!(normalize_weight3(&g, &t).unwrap(), unit_at(&g, Slot::III, 1, 1));
        let lie = single(-1);
        let t = node(0, Leaf(2), node(0, Leaf(1), Leaf(3)));
        let v = normalize_weight3(&lie, &t).unwrap();
        assert_eq!(v, vec![q(0), q(0), q(1)]);
    }

    #[test]
    fn bad_leaves_rejected() {
        let g = pair();
        assert!(normalize_weight3(&g, &node(0, Leaf(1), Leaf(2))).is_err());
        assert!(normalize_weight3(&g, &node(0, node(0, Leaf(1), Leaf(1)), Leaf(3))).is_err());
        let ns = GenSpace::<Q>::nonsymmetric(vec!["m".into()]).unwrap();
        assert!(normalize_weight3(&ns, &node(0, node(0, Leaf(2), Leaf(1)), Leaf(3))).is_err());
        let right = normalize_weight3(&ns, &node(0, Leaf(1), node(0, Leaf(2), Leaf(3)))).unwrap();
        assert_eq!(right, vec![q(0), q(1)]);
    }

    #[test]
    fn s3_group_laws() {
        for g in [pair(), single(1), single(-1)] {
            let dim = Weight3Basis::of(&g).dim();
            let m = |s| s3_matrix(&g, s).unwrap();
            assert_eq!(m(Perm::ID), Mat::identity(dim));
            for s in Perm::ALL {
                for t in Perm::ALL {
                    // σ·(τ·v) = v M_τ M_σ
                    assert_eq!(m(t).mul(&m(s)).unwrap(), m(s.compose(t)));
                }
            }
            assert_eq!(m(Perm::T12).mul(&m(Perm::T12)).unwrap(), Mat::identity(dim));
            let c = m(Perm::C123);
            assert_eq!(c.mul(&c).unwrap().mul(&c).unwrap(), Mat::identity(dim));
            let t = m(Perm::T12);
            assert_eq!(t.mul(&c).unwrap().mul(&t).unwrap(), m(Perm::C123.inverse()));
        }
    }

    #[test]
    fn cycle_moves_slots() {
        let g = pair();
        let v = unit_at(&g, Slot::I, 0, 1);
        let w = s3_act(&g, Perm::C123, &v).unwrap();
        let b = Weight3Basis::of(&g);
        let support: Vec<_> = (0..b.dim()).filter(|&k| !w[k].is_negligible()).map(|k| b.decode(k).0).collect();
        assert_eq!(support, vec![Slot::II]);
        let v1 = unit_at(&g, Slot::I, 0, 0);
        assert_eq!(s3_act(&g, Perm::T12, &v1).unwrap(), unit_at(&g, Slot::I, 0, 1));
        assert!(s3_act(&GenSpace::<Q>::nonsymmetric(vec!["m".into()]).unwrap(), Perm::T12, &[q(1), q(0)]).is_err());
    }

    #[test]
    fn closure_examples() {
        let lie = single(-1);
        assert_eq!(closure(&lie, &[vec![q(1), q(1), q(1)]]).unwrap().rank(), 1);
        let g = pair();
        let assoc: Vec<Q> = {
            let mut v = unit_at(&g, Slot::I, 0, 0);
            v[Weight3Basis::of(&g).index(Slot::II, 1, 0)] = q(-1);
            v
        };
        let c = closure(&g, &[assoc]).unwrap();
        assert_eq!(c.rank(), 6);
        assert!(is_s3_stable(&g, &c).unwrap());
        assert_eq!(closure(&g, &[]).unwrap().rank(), 0);
    }
}
