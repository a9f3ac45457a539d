//! Generator spaces, decorated planar binary trees and the leaf-path relabeling rules.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::Mat;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Symmetric,
    Nonsymmetric,
}

/// Tag attached to a replicated generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ReplicaTag {
    Dashv,
    Vdash,
    Perp,
    Prec,
    Succ,
    Dot,
}

impl ReplicaTag {
    pub const ALL: [ReplicaTag; 6] =
        [ReplicaTag::Dashv, ReplicaTag::Vdash, ReplicaTag::Perp, ReplicaTag::Prec, ReplicaTag::Succ, ReplicaTag::Dot];

    /// ASCII name used in generator names (`m_dashv`) and in map syntax (`(m,dashv)`).
    pub fn ascii(self) -> &'static str {
        match self {
            ReplicaTag::Dashv => "dashv",
            ReplicaTag::Vdash => "vdash",
            ReplicaTag::Perp => "perp",
            ReplicaTag::Prec => "prec",
            ReplicaTag::Succ => "succ",
            ReplicaTag::Dot => "dot",
        }
    }

    pub fn glyph(self) -> &'static str {
        match self {
            ReplicaTag::Dashv => "⊣",
            ReplicaTag::Vdash => "⊢",
            ReplicaTag::Perp => "⊥",
            ReplicaTag::Prec => "≺",
            ReplicaTag::Succ => "≻",
            ReplicaTag::Dot => "·",
        }
    }

    pub fn from_ascii(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.ascii() == s)
    }
}

/// A basis of the arity-2 generators, with the (12)-involution in symmetric mode.
///
/// The action is stored row-wise: `e_i^(12) = Σ_j action[i][j] e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenSpace<F> {
    names: Vec<String>,
    mode: Mode,
    action: Option<Mat<F>>,
    origin: Vec<Option<(usize, ReplicaTag)>>,
}

impl<F: Scalar> GenSpace<F> {
    pub fn symmetric(names: Vec<String>, action: Mat<F>) -> Result<Self> {
        let origin = vec![None; names.len()];
        Self::build(names, Mode::Symmetric, Some(action), origin)
    }

    pub fn nonsymmetric(names: Vec<String>) -> Result<Self> {
        let origin = vec![None; names.len()];
        Self::build(names, Mode::Nonsymmetric, None, origin)
    }

    pub(crate) fn build(
        names: Vec<String>,
        mode: Mode,
        action: Option<Mat<F>>,
        origin: Vec<Option<(usize, ReplicaTag)>>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::GenSpace("no generators".into()));
        }
        let unique: BTreeSet<&String> = names.iter().collect();
        if unique.len() != n {
            return Err(Error::GenSpace("duplicate generator name".into()));
        }
        match (&mode, &action) {
            (Mode::Symmetric, Some(a)) => {
                if a.rows() != n || a.cols() != n {
                    return Err(Error::GenSpace(format!("action must be {n}×{n}")));
                }
                if !a.mul(a)?.approx_eq(&Mat::identity(n)) {
                    return Err(Error::GenSpace("action is not an involution".into()));
                }
            }
            (Mode::Symmetric, None) => return Err(Error::GenSpace("symmetric mode needs an action".into())),
            (Mode::Nonsymmetric, Some(_)) => return Err(Error::GenSpace("nonsymmetric mode has no action".into())),
            (Mode::Nonsymmetric, None) => {}
        }
        Ok(GenSpace { names, mode, action, origin })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn action(&self) -> Option<&Mat<F>> {
        self.action.as_ref()
    }

    /// Replication origin of generator `i`: (index in the base space, tag).
    pub fn origin(&self, i: usize) -> Option<(usize, ReplicaTag)> {
        self.origin[i]
    }

    pub fn with_names(&self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.len() {
            return Err(Error::Dimension { expected: self.len(), found: names.len() });
        }
        Self::build(names, self.mode, self.action.clone(), self.origin.clone())
    }

    /// Generator index carried by a tree vertex.
    pub fn resolve(&self, v: &Vertex) -> Option<usize> {
        match v.tag {
            None => (v.gen < self.len()).then_some(v.gen),
            Some(t) => self.origin.iter().position(|o| *o == Some((v.gen, t))),
        }
    }
}

/// Vertex decoration: a generator index and, after relabeling, a tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub gen: usize,
    pub tag: Option<ReplicaTag>,
}

impl Vertex {
    pub fn new(gen: usize) -> Self {
        Vertex { gen, tag: None }
    }

    pub fn tagged(gen: usize, tag: ReplicaTag) -> Self {
        Vertex { gen, tag: Some(tag) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DecoratedTree {
    Leaf(u32),
    Node(Vertex, Box<DecoratedTree>, Box<DecoratedTree>),
}

use DecoratedTree::{Leaf, Node};

impl DecoratedTree {
    pub fn leaf(label: u32) -> Self {
        Leaf(label)
    }

    /// Leaf labels in planar order.
    pub fn leaves(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u32>) {
        match self {
            Leaf(l) => out.push(*l),
            Node(_, l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn leaf_set(&self) -> BTreeSet<u32> {
        self.leaves().into_iter().collect()
    }

    pub fn has_leaf(&self, x: u32) -> bool {
        match self {
            Leaf(l) => *l == x,
            Node(_, l, r) => l.has_leaf(x) || r.has_leaf(x),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Leaf(_) => 0,
            Node(_, l, r) => 1 + l.vertex_count() + r.vertex_count(),
        }
    }

    /// Vertices in preorder.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        self.collect_vertices(&mut out);
        out
    }

    fn collect_vertices(&self, out: &mut Vec<Vertex>) {
        if let Node(v, l, r) = self {
            out.push(*v);
            l.collect_vertices(out);
            r.collect_vertices(out);
        }
    }

    /// Same tree with all tags removed.
    pub fn untagged(&self) -> Self {
        match self {
            Leaf(l) => Leaf(*l),
            Node(v, l, r) => Node(Vertex::new(v.gen), Box::new(l.untagged()), Box::new(r.untagged())),
        }
    }

    pub fn relabel_leaves(&self, f: &impl Fn(u32) -> u32) -> Self {
        match self {
            Leaf(l) => Leaf(f(*l)),
            Node(v, l, r) => Node(*v, Box::new(l.relabel_leaves(f)), Box::new(r.relabel_leaves(f))),
        }
    }

    pub fn map_vertices(&self, f: &impl Fn(Vertex) -> Vertex) -> Self {
        match self {
            Leaf(l) => Leaf(*l),
            Node(v, l, r) => Node(f(*v), Box::new(l.map_vertices(f)), Box::new(r.map_vertices(f))),
        }
    }
}

impl fmt::Display for DecoratedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf(l) => write!(f, "{l}"),
            Node(v, l, r) => {
                write!(f, "(")?;
                for (side, t) in [(0, l), (1, r)] {
                    if side == 1 {
                        match v.tag {
                            Some(tag) => write!(f, " (g{},{}) ", v.gen, tag.glyph())?,
                            None => write!(f, " g{} ", v.gen)?,
                        }
                    }
                    write!(f, "{t}")?;
                }
                write!(f, ")")
            }
        }
    }
}

pub fn graft(left: DecoratedTree, vertex: Vertex, right: DecoratedTree) -> Result<DecoratedTree> {
    let ls = left.leaf_set();
    if let Some(x) = right.leaves().into_iter().find(|x| ls.contains(x)) {
        return Err(Error::Tree(format!("leaf {x} occurs on both sides of the graft")));
    }
    Ok(Node(vertex, Box::new(left), Box::new(right)))
}

fn check_untagged(t: &DecoratedTree) -> Result<()> {
    if t.vertices().iter().any(|v| v.tag.is_some()) {
        return Err(Error::Tree("relabeling expects an untagged tree".into()));
    }
    Ok(())
}

fn product(v: Vertex, tag: ReplicaTag, lefts: &[DecoratedTree], rights: &[DecoratedTree]) -> Vec<DecoratedTree> {
    let mut out = Vec::with_capacity(lefts.len() * rights.len());
    for l in lefts {
        for r in rights {
            out.push(Node(Vertex::tagged(v.gen, tag), Box::new(l.clone()), Box::new(r.clone())));
        }
    }
    out
}

/// Every tagging of `t` with tags from `alphabet`, in lexicographic order.
pub fn all_taggings(t: &DecoratedTree, alphabet: &[ReplicaTag]) -> Vec<DecoratedTree> {
    match t {
        Leaf(l) => vec![Leaf(*l)],
        Node(v, l, r) => {
            let ls = all_taggings(l, alphabet);
            let rs = all_taggings(r, alphabet);
            alphabet.iter().flat_map(|&tag| product(*v, tag, &ls, &rs)).collect()
        }
    }
}

const DU: [ReplicaTag; 2] = [ReplicaTag::Dashv, ReplicaTag::Vdash];
const TRI: [ReplicaTag; 3] = [ReplicaTag::Dashv, ReplicaTag::Vdash, ReplicaTag::Perp];
const BSU: [ReplicaTag; 2] = [ReplicaTag::Prec, ReplicaTag::Succ];

/// Tags each vertex ⊣/⊢ by the turn of the root-to-`x` path, expanding off-path vertices.
pub fn du_leaf(t: &DecoratedTree, x: u32) -> Result<Vec<DecoratedTree>> {
    check_untagged(t)?;
    if !t.has_leaf(x) {
        return Err(Error::Tree(format!("{x} is not a leaf of {t}")));
    }
    Ok(du_rec(t, x))
}

fn du_rec(t: &DecoratedTree, x: u32) -> Vec<DecoratedTree> {
    match t {
        Leaf(l) => vec![Leaf(*l)],
        Node(v, l, r) if l.has_leaf(x) => product(*v, ReplicaTag::Dashv, &du_rec(l, x), &all_taggings(r, &DU)),
        Node(v, l, r) => product(*v, ReplicaTag::Vdash, &all_taggings(l, &DU), &du_rec(r, x)),
    }
}

/// Triplicator relabeling with respect to a set of leaves.
pub fn tri_subset(t: &DecoratedTree, j: &BTreeSet<u32>) -> Result<Vec<DecoratedTree>> {
    check_untagged(t)?;
    if let Some(x) = j.iter().find(|&&x| !t.has_leaf(x)) {
        return Err(Error::Tree(format!("{x} is not a leaf of {t}")));
    }
    Ok(tri_rec(t, j))
}

fn tri_rec(t: &DecoratedTree, j: &BTreeSet<u32>) -> Vec<DecoratedTree> {
    match t {
        Leaf(l) => vec![Leaf(*l)],
        _ if j.is_empty() => all_taggings(t, &TRI),
        Node(v, l, r) => {
            let jl: BTreeSet<u32> = j.iter().copied().filter(|&x| l.has_leaf(x)).collect();
            let jr: BTreeSet<u32> = j.iter().copied().filter(|&x| r.has_leaf(x)).collect();
            if jr.is_empty() {
                product(*v, ReplicaTag::Dashv, &tri_rec(l, &jl), &all_taggings(r, &TRI))
            } else if jl.is_empty() {
                product(*v, ReplicaTag::Vdash, &all_taggings(l, &TRI), &tri_rec(r, &jr))
            } else {
                product(*v, ReplicaTag::Perp, &tri_rec(l, &jl), &tri_rec(r, &jr))
            }
        }
    }
}

/// Bisuccessor relabeling: ≺/≻ along the path, ≺ + ≻ at every other vertex.
pub fn bsu_leaf<F: Scalar>(t: &DecoratedTree, x: u32) -> Result<TreeSum<F>> {
    check_untagged(t)?;
    if !t.has_leaf(x) {
        return Err(Error::Tree(format!("{x} is not a leaf of {t}")));
    }
    let mut sum = TreeSum::new();
    for tree in bsu_rec(t, x) {
        sum.add(tree, F::one());
    }
    Ok(sum)
}

fn bsu_rec(t: &DecoratedTree, x: u32) -> Vec<DecoratedTree> {
    match t {
        Leaf(l) => vec![Leaf(*l)],
        Node(v, l, r) if l.has_leaf(x) => product(*v, ReplicaTag::Prec, &bsu_rec(l, x), &all_taggings(r, &BSU)),
        Node(v, l, r) => product(*v, ReplicaTag::Succ, &all_taggings(l, &BSU), &bsu_rec(r, x)),
    }
}

/// A formal linear combination of trees sharing one leaf set.
#[derive(Clone, Debug, PartialEq)]
pub struct TreeSum<F> {
    terms: BTreeMap<DecoratedTree, F>,
}

impl<F: Scalar> Default for TreeSum<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Scalar> TreeSum<F> {
    pub fn new() -> Self {
        TreeSum { terms: BTreeMap::new() }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (DecoratedTree, F)>) -> Result<Self> {
        let mut s = Self::new();
        for (t, c) in terms {
            s.add(t, c);
        }
        s.check_homogeneous()?;
        Ok(s)
    }

    pub fn add(&mut self, t: DecoratedTree, c: F) {
        let v = match self.terms.remove(&t) {
            Some(old) => old + c,
            None => c,
        };
        if !v.is_negligible() {
            self.terms.insert(t, v);
        }
    }

    pub fn add_scaled(&mut self, other: &TreeSum<F>, c: &F) {
        for (t, v) in &other.terms {
            self.add(t.clone(), v.clone() * c.clone());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DecoratedTree, &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leaf_set(&self) -> Option<BTreeSet<u32>> {
        self.terms.keys().next().map(|t| t.leaf_set())
    }

    pub fn check_homogeneous(&self) -> Result<()> {
        let mut sets = self.terms.keys().map(|t| t.leaf_set());
        if let Some(first) = sets.next() {
            if sets.any(|s| s != first) {
                return Err(Error::Tree("inhomogeneous sum: terms have different leaves".into()));
            }
        }
        Ok(())
    }
}

fn homogeneous_leaf(r: &TreeSum<impl Scalar>, x: u32) -> Result<()> {
    r.check_homogeneous()?;
    match r.leaf_set() {
        Some(s) if !s.contains(&x) => Err(Error::Tree(format!("{x} is not a leaf of the relation"))),
        _ => Ok(()),
    }
}

/// All sums `Σ cᵢ wᵢ` with `wᵢ ∈ du_leaf(τᵢ, x)`, choices made independently per term.
pub fn du_relation<F: Scalar>(r: &TreeSum<F>, x: u32) -> Result<Vec<TreeSum<F>>> {
    homogeneous_leaf(r, x)?;
    let mut acc = vec![TreeSum::new()];
    for (t, c) in r.terms() {
        let choices = du_leaf(t, x)?;
        let mut next = Vec::with_capacity(acc.len() * choices.len());
        for partial in &acc {
            for w in &choices {
                let mut s = partial.clone();
                s.add(w.clone(), c.clone());
                next.push(s);
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// A subset of [`du_relation`] with the same linear span, linear in the number of choices.
pub fn du_relation_spanning<F: Scalar>(r: &TreeSum<F>, x: u32) -> Result<Vec<TreeSum<F>>> {
    homogeneous_leaf(r, x)?;
    let choices: Vec<(F, Vec<DecoratedTree>)> =
        r.terms().map(|(t, c)| Ok((c.clone(), du_leaf(t, x)?))).collect::<Result<_>>()?;
    Ok(one_deviation(&choices))
}

/// Spanning subset of `{Σ cᵢ wᵢ : wᵢ ∈ tri_subset(τᵢ, J)}`.
pub fn tri_relation_spanning<F: Scalar>(r: &TreeSum<F>, j: &BTreeSet<u32>) -> Result<Vec<TreeSum<F>>> {
    r.check_homogeneous()?;
    let choices: Vec<(F, Vec<DecoratedTree>)> =
        r.terms().map(|(t, c)| Ok((c.clone(), tri_subset(t, j)?))).collect::<Result<_>>()?;
    Ok(one_deviation(&choices))
}

/// All sums for the triplicator rule, choices made independently per term.
pub fn tri_relation<F: Scalar>(r: &TreeSum<F>, j: &BTreeSet<u32>) -> Result<Vec<TreeSum<F>>> {
    r.check_homogeneous()?;
    let mut acc = vec![TreeSum::new()];
    for (t, c) in r.terms() {
        let choices = tri_subset(t, j)?;
        acc = acc
            .iter()
            .flat_map(|p| {
                choices.iter().map(move |w| {
                    let mut s = p.clone();
                    s.add(w.clone(), c.clone());
                    s
                })
            })
            .collect();
    }
    Ok(acc)
}

/// The single bisuccessor image `Σ cᵢ bsu_leaf(τᵢ, x)`.
pub fn bsu_relation<F: Scalar>(r: &TreeSum<F>, x: u32) -> Result<TreeSum<F>> {
    homogeneous_leaf(r, x)?;
    let mut out = TreeSum::new();
    for (t, c) in r.terms() {
        out.add_scaled(&bsu_leaf::<F>(t, x)?, c);
    }
    Ok(out)
}

fn one_deviation<F: Scalar>(choices: &[(F, Vec<DecoratedTree>)]) -> Vec<TreeSum<F>> {
    let mut base = TreeSum::new();
    for (c, ws) in choices {
        base.add(ws[0].clone(), c.clone());
    }
    let mut out = vec![base.clone()];
    for (c, ws) in choices {
        for w in &ws[1..] {
            let mut s = base.clone();
            s.add(ws[0].clone(), F::zero() - c.clone());
            s.add(w.clone(), c.clone());
            out.push(s);
        }
    }
    out
}
