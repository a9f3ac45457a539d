#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use opdcalc_core::algcheck::{Binding, Tensor};
use opdcalc_core::catalog::Catalog;
use opdcalc_core::quad::{make_replicated, normalize_weight3, sum_to_vector, Flavor, Slot, Weight3Basis};
use opdcalc_core::trees::{bsu_leaf, du_leaf};
use opdcalc_core::{FinAlgebra, Mat, Presentation, Rat};

pub fn q(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn qq(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| Catalog::builtin().expect("builtin catalog parses"))
}

pub fn eval(expr: &str) -> Presentation {
    catalog().eval(expr).unwrap_or_else(|e| panic!("{expr}: {e}"))
}

pub fn mat(rows: &[&[i64]]) -> Mat {
    let cols = rows.first().map_or(0, |r| r.len());
    Mat::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect(), cols).unwrap()
}

pub fn bind(pairs: &[(&str, &str)]) -> Binding {
    pairs.iter().map(|(g, o)| (g.to_string(), o.to_string())).collect()
}

/// `e_i ∘ e_j = Σ c e_k` as `(i, j, [(k, c)])`.
pub type Product<'a> = (usize, usize, &'a [(usize, i64)]);

/// Tensor from a list of nonzero products.
pub fn tensor(d: usize, products: &[Product]) -> Tensor<Rat> {
    let mut t = Tensor::zeros(d);
    for &(i, j, terms) in products {
        for &(k, c) in terms {
            t.set(i, j, k, q(c));
        }
    }
    t
}

/// k² with the coordinatewise product `mul`.
pub fn pointwise() -> FinAlgebra {
    FinAlgebra::new("K2", 2).with_op("mul", tensor(2, &[(0, 0, &[(0, 1)]), (1, 1, &[(1, 1)])])).unwrap()
}

/// The 2-dimensional nonabelian Lie algebra `[e1,e2] = e2`.
pub fn lie2() -> FinAlgebra {
    FinAlgebra::new("L2", 2).with_op("br", tensor(2, &[(0, 1, &[(1, 1)]), (1, 0, &[(1, -1)])])).unwrap()
}

/// `e1 e1 = e2`, all other products zero.
pub fn nilpotent2() -> FinAlgebra {
    FinAlgebra::new("N2", 2).with_op("mul", tensor(2, &[(0, 0, &[(1, 1)])])).unwrap()
}

/// Upper triangular 2×2 matrices, basis e11, e12, e22.
pub fn upper3() -> FinAlgebra {
    let t = tensor(3, &[(0, 0, &[(0, 1)]), (0, 1, &[(1, 1)]), (1, 2, &[(1, 1)]), (2, 2, &[(2, 1)])]);
    FinAlgebra::new("T2", 3).with_op("mul", t).unwrap()
}

/// The projection `(a, b) ↦ (a, a)`.
pub fn proj() -> Mat {
    mat(&[&[1, 0], &[1, 0]])
}

#[derive(Clone, Copy)]
enum Tag {
    L,
    R,
    /// Both tags: a set for Du, the sum ≺ + ≻ for BSu.
    Both,
}

use Tag::*;

/// `(slot, leaf) ↦ (tag of e_i, tag of e_j)`; leaf 1, 2, 3 is x, y, z.
const TABLE: [(Slot, u32, Tag, Tag); 9] = [
    (Slot::I, 1, L, L),
    (Slot::II, 1, R, Both),
    (Slot::III, 1, L, R),
    (Slot::I, 2, L, R),
    (Slot::II, 2, L, L),
    (Slot::III, 2, R, Both),
    (Slot::I, 3, R, Both),
    (Slot::II, 3, L, R),
    (Slot::III, 3, L, L),
];

fn tag_pos(t: Tag) -> Vec<usize> {
    match t {
        L => vec![0],
        R => vec![1],
        Both => vec![0, 1],
    }
}

/// Entries of the Du weight-3 table that the engine does not reproduce.
pub fn du_table_mismatches(p: &Presentation) -> Vec<String> {
    let n = p.gens().len();
    let rep = make_replicated(p.gens(), Flavor::Du).unwrap();
    let rb = Weight3Basis::of(&rep);
    let mut bad = Vec::new();
    for (u, leaf, a, b) in TABLE {
        for i in 0..n {
            for j in 0..n {
                let t = p.basis().representative(p.basis().index(u, i, j));
                let got: BTreeSet<Vec<Rat>> =
                    du_leaf(&t, leaf).unwrap().iter().map(|t| normalize_weight3(&rep, t).unwrap()).collect();
                let mut want = BTreeSet::new();
                for ta in tag_pos(a) {
                    for tb in tag_pos(b) {
                        let mut v = vec![q(0); rb.dim()];
                        v[rb.index(u, ta * n + i, tb * n + j)] = q(1);
                        want.insert(v);
                    }
                }
                if got != want {
                    bad.push(format!("Du_{leaf}(e{i} o_{} e{j})", u.label()));
                }
            }
        }
    }
    bad
}

/// Entries of the BSu weight-3 table that the engine does not reproduce.
pub fn bsu_table_mismatches(p: &Presentation) -> Vec<String> {
    let n = p.gens().len();
    let rep = make_replicated(p.gens(), Flavor::Bsu).unwrap();
    let rb = Weight3Basis::of(&rep);
    let mut bad = Vec::new();
    for (u, leaf, a, b) in TABLE {
        for i in 0..n {
            for j in 0..n {
                let t = p.basis().representative(p.basis().index(u, i, j));
                let got = sum_to_vector(&rep, &bsu_leaf(&t, leaf).unwrap()).unwrap();
                let mut want = vec![q(0); rb.dim()];
                for ta in tag_pos(a) {
                    for tb in tag_pos(b) {
                        want[rb.index(u, ta * n + i, tb * n + j)] += q(1);
                    }
                }
                if got != want {
                    bad.push(format!("BSu_{leaf}(e{i} o_{} e{j})", u.label()));
                }
            }
        }
    }
    bad
}
