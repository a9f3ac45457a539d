//! Duplicator, triplicator and bisuccessor presentations.

use std::collections::BTreeSet;

use super::basis::{sum_to_vector, vector_to_sum};
use super::Presentation;
use crate::error::Result;
use crate::exactlin::Mat;
use crate::scalar::Scalar;
use crate::trees::{bsu_relation, du_relation_spanning, tri_relation_spanning, GenSpace, ReplicaTag, TreeSum};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Du,
    Tri,
    Bsu,
    Tsu,
}

impl Flavor {
    pub fn tags(self) -> &'static [ReplicaTag] {
        use ReplicaTag::*;
        match self {
            Flavor::Du => &[Dashv, Vdash],
            Flavor::Tri => &[Dashv, Vdash, Perp],
            Flavor::Bsu => &[Prec, Succ],
            Flavor::Tsu => &[Prec, Succ, Dot],
        }
    }
}

fn partner(t: ReplicaTag) -> ReplicaTag {
    use ReplicaTag::*;
    match t {
        Dashv => Vdash,
        Vdash => Dashv,
        Prec => Succ,
        Succ => Prec,
        other => other,
    }
}

/// Tagged copies `(e, tag)` of the generators, tag-major, with the swapped involution.
pub fn make_replicated<F: Scalar>(gens: &GenSpace<F>, flavor: Flavor) -> Result<GenSpace<F>> {
    let n = gens.len();
    let tags = flavor.tags();
    let mut names = Vec::with_capacity(n * tags.len());
    let mut origin = Vec::with_capacity(n * tags.len());
    for &t in tags {
        for e in 0..n {
            names.push(format!("{}_{}", gens.name(e), t.ascii()));
            origin.push(Some((e, t)));
        }
    }
    let action = gens.action().map(|a| {
        let mut m = Mat::zeros(n * tags.len(), n * tags.len());
        for (p, &t) in tags.iter().enumerate() {
            let q = tags.iter().position(|&s| s == partner(t)).expect("tag alphabet is closed");
            for e in 0..n {
                for j in 0..n {
                    m.set(p * n + e, q * n + j, a.get(e, j).clone());
                }
            }
        }
        m
    });
    GenSpace::build(names, gens.mode(), action, origin)
}

fn dedup<F: Scalar>(mut v: Vec<Vec<F>>) -> Vec<Vec<F>> {
    let mut out: Vec<Vec<F>> = Vec::new();
    for r in v.drain(..) {
        if r.iter().any(|x| !x.is_negligible()) && !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

fn replicate<F: Scalar>(
    p: &Presentation<F>,
    flavor: Flavor,
    prefix: &str,
    rule: impl Fn(&TreeSum<F>) -> Result<Vec<TreeSum<F>>>,
) -> Result<Presentation<F>> {
    let rep = make_replicated(p.gens(), flavor)?;
    let basis = p.basis();
    let mut rels = Vec::new();
    for r in p.closure().basis() {
        for s in rule(&vector_to_sum(&basis, r))? {
            rels.push(sum_to_vector(&rep, &s)?);
        }
    }
    Presentation::new(format!("{prefix}({})", p.name()), rep, dedup(rels))
}

/// `Du(P)`: every `Du_x(r)` for `r` in a basis of the relation closure and x ∈ {x, y, z}.
pub fn duplicator<F: Scalar>(p: &Presentation<F>) -> Result<Presentation<F>> {
    replicate(p, Flavor::Du, "Du", |s| {
        let mut out = Vec::new();
        for x in 1..=3 {
            out.extend(du_relation_spanning(s, x)?);
        }
        Ok(out)
    })
}

/// `Tri(P)`: every `Tri_J(r)` for nonempty J ⊆ {x, y, z}.
pub fn triplicator<F: Scalar>(p: &Presentation<F>) -> Result<Presentation<F>> {
    replicate(p, Flavor::Tri, "Tri", |s| {
        let mut out = Vec::new();
        for mask in 1u32..8 {
            let j: BTreeSet<u32> = (1..=3).filter(|k| mask & (1 << (k - 1)) != 0).collect();
            out.extend(tri_relation_spanning(s, &j)?);
        }
        Ok(out)
    })
}

/// `BSu(P)`: the single sums `BSu_x(r)`.
pub fn bisuccessor<F: Scalar>(p: &Presentation<F>) -> Result<Presentation<F>> {
    p.require_symmetric("the bisuccessor")?;
    replicate(p, Flavor::Bsu, "BSu", |s| (1..=3).map(|x| bsu_relation(s, x)).collect())
}
