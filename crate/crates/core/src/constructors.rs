//! Stock digraphs and the composite operations the product deciders work on.
//!
//! Canonical labelings: a path `P_n` is `x_0..x_{n-1}` with arcs
//! `(x_i, x_{i-1})`, so `x_0` is the sink; cycles are the same modulo `n`;
//! star centers are vertex 0 with leaves `1..=k`; in `K_{m,n}` the first `m`
//! indices are the m-side. Product vertices are numbered row-major over the
//! factor orders.

use std::collections::BTreeSet;
use std::ops::Range;

use crate::digraph::{Color, ColoredDigraph, Vertex};
use crate::error::{Error, Result};

pub fn directed_path(n: usize) -> Result<ColoredDigraph> {
    if n == 0 {
        return Err(Error::Size("a path needs at least one vertex".into()));
    }
    ColoredDigraph::uncolored(n, (1..n).map(|i| (i, i - 1)))
}

/// Length 2 is a digon.
pub fn directed_cycle(n: usize) -> Result<ColoredDigraph> {
    if n < 2 {
        return Err(Error::Size("a directed cycle needs at least two vertices".into()));
    }
    ColoredDigraph::uncolored(n, (0..n).map(|i| (i, (i + n - 1) % n)))
}

/// `S_k^-`: every leaf points at the center.
pub fn in_star(k: usize) -> Result<ColoredDigraph> {
    if k == 0 {
        return Err(Error::Size("a star needs at least one leaf".into()));
    }
    ColoredDigraph::uncolored(k + 1, (1..=k).map(|i| (i, 0)))
}

/// `S_k^+`: the center points at every leaf.
pub fn out_star(k: usize) -> Result<ColoredDigraph> {
    if k == 0 {
        return Err(Error::Size("a star needs at least one leaf".into()));
    }
    ColoredDigraph::uncolored(k + 1, (1..=k).map(|i| (0, i)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BipartiteDirection {
    /// Arcs from the m-side (indices `0..m`) to the n-side.
    MToN,
    /// Arcs from the n-side into the m-side.
    NToM,
}

pub fn oriented_complete_bipartite(m: usize, n: usize, dir: BipartiteDirection) -> Result<ColoredDigraph> {
    if m == 0 || n == 0 {
        return Err(Error::Size("both sides of K_{m,n} must be nonempty".into()));
    }
    let arcs = (0..m).flat_map(|x| (m..m + n).map(move |y| match dir {
        BipartiteDirection::MToN => (x, y),
        BipartiteDirection::NToM => (y, x),
    }));
    ColoredDigraph::uncolored(m + n, arcs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spoke {
    ToHub,
    FromHub,
    Both,
}

/// Rim `x_0..x_{n-1}` is a directed cycle, the hub is vertex `n`.
pub fn wheel(spokes: &[Spoke]) -> Result<ColoredDigraph> {
    let n = spokes.len();
    if n < 3 {
        return Err(Error::Size("a wheel rim needs at least three vertices".into()));
    }
    let mut arcs: Vec<(Vertex, Vertex)> = (0..n).map(|i| (i, (i + n - 1) % n)).collect();
    for (i, s) in spokes.iter().enumerate() {
        if matches!(s, Spoke::ToHub | Spoke::Both) {
            arcs.push((i, n));
        }
        if matches!(s, Spoke::FromHub | Spoke::Both) {
            arcs.push((n, i));
        }
    }
    ColoredDigraph::uncolored(n + 1, arcs)
}

/// Row-major coordinates over a list of factor orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductIndex {
    dims: Vec<usize>,
}

impl ProductIndex {
    pub fn new(dims: Vec<usize>) -> Self {
        Self { dims }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn coords(&self, mut v: Vertex) -> Vec<usize> {
        let mut c = vec![0; self.dims.len()];
        for (slot, &d) in c.iter_mut().zip(&self.dims).rev() {
            *slot = v % d;
            v /= d;
        }
        c
    }

    pub fn index(&self, coords: &[usize]) -> Vertex {
        coords.iter().zip(&self.dims).fold(0, |acc, (&c, &d)| acc * d + c)
    }
}

fn binary_product(a: &ColoredDigraph, b: &ColoredDigraph, diagonal: bool) -> ColoredDigraph {
    let (na, nb) = (a.order(), b.order());
    let idx = |x: Vertex, y: Vertex| x * nb + y;
    let mut arcs = BTreeSet::new();
    for x in a.vertices() {
        for &(y, w) in b.arcs() {
            arcs.insert((idx(x, y), idx(x, w)));
        }
    }
    for &(x, z) in a.arcs() {
        for y in b.vertices() {
            arcs.insert((idx(x, y), idx(z, y)));
        }
        if diagonal {
            for &(y, w) in b.arcs() {
                arcs.insert((idx(x, y), idx(z, w)));
            }
        }
    }
    ColoredDigraph::from_sorted_arcs(vec![0; na * nb], arcs.into_iter().collect())
}

/// `D1 □ D2`, uncolored; vertex `(a, b)` is `a * |V2| + b`.
pub fn cartesian(a: &ColoredDigraph, b: &ColoredDigraph) -> ColoredDigraph {
    binary_product(a, b, false)
}

/// `D1 ⊠ D2`: the Cartesian arcs plus `((x,y),(z,w))` for every pair of
/// factor arcs `(x,z)`, `(y,w)`.
pub fn strong(a: &ColoredDigraph, b: &ColoredDigraph) -> ColoredDigraph {
    binary_product(a, b, true)
}

fn fold_product(factors: &[ColoredDigraph], diagonal: bool) -> Result<ColoredDigraph> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::Size("a product needs at least one factor".into()))?;
    let start = ColoredDigraph::uncolored(first.order(), first.arcs().iter().copied())?;
    Ok(rest.iter().fold(start, |acc, f| binary_product(&acc, f, diagonal)))
}

/// Iterated Cartesian product, row-major over the factor list.
pub fn cartesian_all(factors: &[ColoredDigraph]) -> Result<ColoredDigraph> {
    fold_product(factors, false)
}

pub fn strong_all(factors: &[ColoredDigraph]) -> Result<ColoredDigraph> {
    fold_product(factors, true)
}

/// Vertex blocks of a composite digraph, in construction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blocks(pub Vec<Range<Vertex>>);

impl Blocks {
    fn of(sizes: impl IntoIterator<Item = usize>) -> Self {
        let mut start = 0;
        Self(
            sizes
                .into_iter()
                .map(|s| {
                    let r = start..start + s;
                    start += s;
                    r
                })
                .collect(),
        )
    }

    pub fn block_of(&self, v: Vertex) -> Option<usize> {
        self.0.iter().position(|r| r.contains(&v))
    }
}

/// `G[H]`: every vertex `v` of the base replaced by `family[v]`, with all
/// arcs from `H_u` to `H_v` whenever `(u, v)` is a base arc. Colors come from
/// the members. Block `v` holds the vertices of `family[v]`.
pub fn zykov(base: &ColoredDigraph, family: &[ColoredDigraph]) -> Result<(ColoredDigraph, Blocks)> {
    if family.len() != base.order() {
        return Err(Error::FamilySize { expected: base.order(), found: family.len() });
    }
    if let Some(i) = family.iter().position(|h| h.order() == 0) {
        return Err(Error::Size(format!("family member {i} has no vertices")));
    }
    let blocks = Blocks::of(family.iter().map(ColoredDigraph::order));
    let mut sum = ColoredDigraph::empty();
    for h in family {
        sum = sum.disjoint_union(h);
    }
    let mut bundle = Vec::new();
    for &(u, v) in base.arcs() {
        for a in blocks.0[u].clone() {
            for b in blocks.0[v].clone() {
                bundle.push((a, b));
            }
        }
    }
    Ok((sum.with_extra_arcs(bundle)?, blocks))
}

/// Crown arcs between family member `member` and base vertex `base`: one arc
/// per listed member vertex (indices local to the member).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attachment {
    pub member: usize,
    pub base: Vertex,
    pub vertices: Vec<Vertex>,
}

impl Attachment {
    /// All of `family[member]` attached to `base`.
    pub fn whole(member: usize, base: Vertex, member_order: usize) -> Self {
        Self { member, base, vertices: (0..member_order).collect() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrownKind {
    /// Arcs from the family into the base.
    In,
    /// Arcs from the base out to the family.
    Ex,
}

/// Layout: block 0 is `d`, block `i + 1` is `family[i]`.
pub fn crown(
    kind: CrownKind,
    d: &ColoredDigraph,
    family: &[ColoredDigraph],
    attachments: &[Attachment],
) -> Result<(ColoredDigraph, Blocks)> {
    if let Some(i) = family.iter().position(|h| h.order() < 2) {
        return Err(Error::Attachment(format!("family member {i} has fewer than two vertices")));
    }
    let blocks = Blocks::of(std::iter::once(d.order()).chain(family.iter().map(ColoredDigraph::order)));
    let mut union = d.clone();
    for h in family {
        union = union.disjoint_union(h);
    }
    let mut extra = BTreeSet::new();
    for a in attachments {
        let Some(h) = family.get(a.member) else {
            return Err(Error::Attachment(format!("no family member {}", a.member)));
        };
        if a.base >= d.order() {
            return Err(Error::Attachment(format!("base vertex {} not in D", a.base)));
        }
        for &y in &a.vertices {
            if y >= h.order() {
                return Err(Error::Attachment(format!("member {} has no vertex {y}", a.member)));
            }
            let y = blocks.0[a.member + 1].start + y;
            let arc = match kind {
                CrownKind::In => (y, a.base),
                CrownKind::Ex => (a.base, y),
            };
            if !extra.insert(arc) {
                return Err(Error::Attachment(format!("crown arc {arc:?} listed twice")));
            }
        }
    }
    Ok((union.with_extra_arcs(extra)?, blocks))
}

pub fn in_crown(d: &ColoredDigraph, family: &[ColoredDigraph], att: &[Attachment]) -> Result<(ColoredDigraph, Blocks)> {
    crown(CrownKind::In, d, family, att)
}

pub fn ex_crown(d: &ColoredDigraph, family: &[ColoredDigraph], att: &[Attachment]) -> Result<(ColoredDigraph, Blocks)> {
    crown(CrownKind::Ex, d, family, att)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coloration {
    /// An arc takes the color of its head.
    Outer,
    /// An arc takes the color of its tail.
    Inner,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineDigraph {
    pub digraph: ColoredDigraph,
    /// `origin[h]` is the arc of `D` that vertex `h` stands for.
    pub origin: Vec<(Vertex, Vertex)>,
}

impl LineDigraph {
    pub fn vertex_of(&self, arc: (Vertex, Vertex)) -> Option<Vertex> {
        self.origin.binary_search(&arc).ok()
    }
}

/// `L(D)`: one vertex per arc of `D` (in `D.arcs()` order), and `(h, k)`
/// whenever the head of `h` is the tail of `k`.
pub fn line_digraph(d: &ColoredDigraph, coloration: Coloration) -> LineDigraph {
    let origin = d.arcs().to_vec();
    let colors: Vec<Color> = origin
        .iter()
        .map(|&(u, v)| match coloration {
            Coloration::Outer => d.color(v),
            Coloration::Inner => d.color(u),
        })
        .collect();
    let mut arcs = Vec::new();
    for (h, &(_, head)) in origin.iter().enumerate() {
        // arcs leaving `head` are contiguous in the sorted arc list
        let start = origin.partition_point(|&(t, _)| t < head);
        for (k, &(t, _)) in origin.iter().enumerate().skip(start) {
            if t != head {
                break;
            }
            arcs.push((h, k));
        }
    }
    arcs.sort_unstable();
    LineDigraph { digraph: ColoredDigraph::from_sorted_arcs(colors, arcs), origin }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operation {
    Cartesian,
    Strong,
    Zykov,
    InCrown,
    ExCrown,
    LineOuter,
    LineInner,
}

impl Operation {
    pub fn name(self) -> &'static str {
        match self {
            Operation::Cartesian => "cartesian",
            Operation::Strong => "strong",
            Operation::Zykov => "zykov",
            Operation::InCrown => "in-crown",
            Operation::ExCrown => "ex-crown",
            Operation::LineOuter => "line-outer",
            Operation::LineInner => "line-inner",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            Operation::Cartesian,
            Operation::Strong,
            Operation::Zykov,
            Operation::InCrown,
            Operation::ExCrown,
            Operation::LineOuter,
            Operation::LineInner,
        ]
        .into_iter()
        .find(|op| op.name() == s)
    }
}

/// Declarative description of a composite digraph.
///
/// `factors` are the product factors, or the single base digraph for zykov,
/// crowns and line digraphs. `family` is the Zykov or crown family.
/// `coloring`, when present, replaces the constructed colors (row-major for
/// products, which otherwise come out all zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductRecipe {
    pub operation: Operation,
    pub factors: Vec<ColoredDigraph>,
    pub family: Vec<ColoredDigraph>,
    pub attachments: Vec<Attachment>,
    pub coloring: Option<Vec<Color>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Layout {
    Product(ProductIndex),
    Blocks(Blocks),
    Line(Vec<(Vertex, Vertex)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Built {
    pub digraph: ColoredDigraph,
    pub layout: Layout,
}

impl ProductRecipe {
    pub fn new(operation: Operation, factors: Vec<ColoredDigraph>) -> Self {
        Self { operation, factors, family: Vec::new(), attachments: Vec::new(), coloring: None }
    }

    fn single_base(&self) -> Result<&ColoredDigraph> {
        match self.factors.as_slice() {
            [base] => Ok(base),
            other => Err(Error::Size(format!(
                "{} takes exactly one base digraph, got {}",
                self.operation.name(),
                other.len()
            ))),
        }
    }

    pub fn build(&self) -> Result<Built> {
        let (digraph, layout) = match self.operation {
            Operation::Cartesian | Operation::Strong => {
                let d = if self.operation == Operation::Cartesian {
                    cartesian_all(&self.factors)?
                } else {
                    strong_all(&self.factors)?
                };
                let index = ProductIndex::new(self.factors.iter().map(ColoredDigraph::order).collect());
                (d, Layout::Product(index))
            }
            Operation::Zykov => {
                let (d, b) = zykov(self.single_base()?, &self.family)?;
                (d, Layout::Blocks(b))
            }
            Operation::InCrown | Operation::ExCrown => {
                let kind = if self.operation == Operation::InCrown { CrownKind::In } else { CrownKind::Ex };
                let (d, b) = crown(kind, self.single_base()?, &self.family, &self.attachments)?;
                (d, Layout::Blocks(b))
            }
            Operation::LineOuter | Operation::LineInner => {
                let c = if self.operation == Operation::LineOuter { Coloration::Outer } else { Coloration::Inner };
                let l = line_digraph(self.single_base()?, c);
                (l.digraph, Layout::Line(l.origin))
            }
        };
        let digraph = match &self.coloring {
            Some(colors) => digraph.with_colors(colors.clone())?,
            None => digraph,
        };
        Ok(Built { digraph, layout })
    }
}
