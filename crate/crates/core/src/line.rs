//! Transfer between vertex sets of `D` and vertex sets of its line digraph.
//!
//! `f(Z)` is the set of arcs whose head lies in `Z`. `g(H)` is the head-set
//! of `H` together with the sources of `D` that have no arc to or from that
//! head-set. When every source has a smaller color than each of its
//! out-neighbors and no source has color 0, `f` and `g` are inverse
//! bijections between the up-color kernels of `D` and those of `L(D)` under
//! the outer coloration. A color-0 source breaks this: an isolated vertex of
//! color 0 leaves `D` without an up-color kernel but is invisible in `L(D)`.

use std::collections::BTreeSet;

use crate::constructors::{line_digraph, Coloration, LineDigraph};
use crate::digraph::{ColoredDigraph, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::predicates::is_independent;

/// A set of arcs of `D`, i.e. a set of vertices of `L(D)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct ArcSubset(pub BTreeSet<(Vertex, Vertex)>);

impl ArcSubset {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, arc: (Vertex, Vertex)) -> bool {
        self.0.contains(&arc)
    }

    pub fn heads(&self) -> VertexSet {
        self.0.iter().map(|&(_, v)| v).collect()
    }

    /// The matching vertex set of `L(D)`; arcs missing from `D` are an error.
    pub fn to_line_vertices(&self, line: &LineDigraph) -> Result<VertexSet> {
        self.0
            .iter()
            .map(|&arc| {
                line.vertex_of(arc).ok_or(Error::UnknownArcEndpoint { tail: arc.0, head: arc.1, order: line.digraph.order() })
            })
            .collect()
    }

    pub fn from_line_vertices(line: &LineDigraph, set: &VertexSet) -> Self {
        Self(set.iter().map(|h| line.origin[h]).collect())
    }
}

impl FromIterator<(Vertex, Vertex)> for ArcSubset {
    fn from_iter<I: IntoIterator<Item = (Vertex, Vertex)>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

pub fn map_f(d: &ColoredDigraph, z: &VertexSet) -> Result<ArcSubset> {
    if let Some(vertex) = z.iter().find(|&v| v >= d.order()) {
        return Err(Error::InvalidSet { vertex, order: d.order() });
    }
    Ok(d.arcs().iter().copied().filter(|&(_, v)| z.contains(v)).collect())
}

/// `(Z independent in D, f(Z) independent in L(D))`. They agree unless `Z`
/// contains an arc whose tail is a source: such an arc is an isolated vertex
/// of `f(Z)`, so `f(Z)` can be independent while `Z` is not.
pub fn independence_transfer_check(d: &ColoredDigraph, z: &VertexSet) -> Result<(bool, bool)> {
    let line = line_digraph(d, Coloration::Outer);
    let image = map_f(d, z)?.to_line_vertices(&line)?;
    Ok((is_independent(d, z)?, is_independent(&line.digraph, &image)?))
}

/// Head-set of `h` plus the sources with no arc to or from it.
pub fn map_g(d: &ColoredDigraph, h: &ArcSubset) -> VertexSet {
    let heads = h.heads();
    let linked = |s: Vertex| heads.iter().any(|x| d.adjacent(s, x));
    let free_sources: VertexSet = d.sources().filter(|&s| !heads.contains(s) && !linked(s)).collect();
    heads.union(&free_sources)
}

/// Every vertex of in-degree 0 has a smaller color than each out-neighbor.
pub fn source_hypothesis_holds(d: &ColoredDigraph) -> bool {
    d.sources().all(|u| d.out_neighbors(u).iter().all(|&v| d.color(u) < d.color(v)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountReport {
    pub count_d: usize,
    /// Up-color kernels of `L(D)` under the outer coloration.
    pub count_l: usize,
    pub hypothesis: bool,
    /// No vertex of in-degree 0 has color 0.
    pub nonzero_sources: bool,
    /// `false` only if the hypothesis holds and the counts differ.
    pub consistent: bool,
}

pub fn verify_count_theorem(d: &ColoredDigraph) -> Result<CountReport> {
    verify_count_theorem_with(&Oracle::default(), d)
}

pub fn verify_count_theorem_with(oracle: &Oracle, d: &ColoredDigraph) -> Result<CountReport> {
    let line = line_digraph(d, Coloration::Outer);
    let count_d = oracle.count_up_color_kernels(d)?;
    let count_l = oracle.count_up_color_kernels(&line.digraph)?;
    let hypothesis = source_hypothesis_holds(d);
    let nonzero_sources = d.sources().all(|s| d.color(s) > 0);
    Ok(CountReport { count_d, count_l, hypothesis, nonzero_sources, consistent: !hypothesis || count_d == count_l })
}
