//! Vertex-colored digraphs over dense `0..n` vertex indices.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Color = u64;

/// A simple digraph (no loops, no parallel arcs, digons allowed) with a
/// non-negative integer color on every vertex.
///
/// Out- and in-neighbor lists are kept sorted, so adjacency queries are a
/// binary search.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColoredDigraph {
    colors: Vec<Color>,
    arcs: Vec<(Vertex, Vertex)>,
    out: Vec<Vec<Vertex>>,
    inn: Vec<Vec<Vertex>>,
}

impl ColoredDigraph {
    /// Builds a digraph on `colors.len()` vertices.
    pub fn new<I>(colors: Vec<Color>, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let n = colors.len();
        let mut seen = BTreeSet::new();
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::UnknownArcEndpoint { tail: u, head: v, order: n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateArc(u, v));
            }
        }
        Ok(Self::from_sorted_arcs(colors, seen.into_iter().collect()))
    }

    /// Builds a digraph whose colors are all zero; colors are attached later
    /// with [`ColoredDigraph::with_colors`].
    pub fn uncolored<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::new(vec![0; n], arcs)
    }

    /// The digraph on zero vertices.
    pub fn empty() -> Self {
        Self::from_sorted_arcs(Vec::new(), Vec::new())
    }

    // `arcs` must be sorted, unique, loop-free and in range.
    pub(crate) fn from_sorted_arcs(colors: Vec<Color>, arcs: Vec<(Vertex, Vertex)>) -> Self {
        let n = colors.len();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            out[u].push(v);
            inn[v].push(u);
        }
        for list in &mut inn {
            list.sort_unstable();
        }
        Self { colors, arcs, out, inn }
    }

    /// Same arcs, new coloring.
    pub fn with_colors(&self, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != self.order() {
            return Err(Error::ColorCount { expected: self.order(), found: colors.len() });
        }
        Ok(Self { colors, ..self.clone() })
    }

    pub fn order(&self) -> usize {
        self.colors.len()
    }

    pub fn size(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.inn[v].len()
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.out[u].binary_search(&v).is_ok()
    }

    /// An arc in at least one direction.
    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// `v` is up-color absorbed by `w`: `(v, w)` is an arc and `c(v) < c(w)`.
    pub fn up_absorbed_by(&self, v: Vertex, w: Vertex) -> bool {
        self.has_arc(v, w) && self.colors[v] < self.colors[w]
    }

    pub fn sinks(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices().filter(|&v| self.out[v].is_empty())
    }

    pub fn sources(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices().filter(|&v| self.inn[v].is_empty())
    }

    /// Out-neighbors as a bitmask. Only meaningful when `order() <= 64`.
    pub(crate) fn out_mask(&self, v: Vertex) -> u64 {
        self.out[v].iter().fold(0, |m, &w| m | 1 << w)
    }

    pub(crate) fn in_mask(&self, v: Vertex) -> u64 {
        self.inn[v].iter().fold(0, |m, &w| m | 1 << w)
    }

    /// Subdigraph induced by `keep`, relabeled densely in increasing order.
    /// Returns the subdigraph and the map from new to old indices.
    pub fn induced(&self, keep: &VertexSet) -> (ColoredDigraph, Vec<Vertex>) {
        let old: Vec<Vertex> = keep.iter().filter(|&v| v < self.order()).collect();
        let mut new_of = vec![usize::MAX; self.order()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(u, v)| new_of[u] != usize::MAX && new_of[v] != usize::MAX)
            .map(|&(u, v)| (new_of[u], new_of[v]))
            .collect::<BTreeSet<_>>();
        let colors = old.iter().map(|&v| self.colors[v]).collect();
        (Self::from_sorted_arcs(colors, arcs.into_iter().collect()), old)
    }

    /// Removes `drop` and relabels what remains.
    pub fn without(&self, drop: &VertexSet) -> (ColoredDigraph, Vec<Vertex>) {
        let keep = VertexSet::from_iter(self.vertices().filter(|v| !drop.contains(*v)));
        self.induced(&keep)
    }

    /// Every arc reversed, colors kept.
    pub fn reverse(&self) -> ColoredDigraph {
        let mut arcs: Vec<_> = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        arcs.sort_unstable();
        Self::from_sorted_arcs(self.colors.clone(), arcs)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &ColoredDigraph) -> ColoredDigraph {
        let shift = self.order();
        let mut colors = self.colors.clone();
        colors.extend_from_slice(&other.colors);
        let mut arcs = self.arcs.clone();
        arcs.extend(other.arcs.iter().map(|&(u, v)| (u + shift, v + shift)));
        Self::from_sorted_arcs(colors, arcs)
    }

    /// Adds arcs, rejecting loops, unknown endpoints and arcs already present.
    pub fn with_extra_arcs<I>(&self, extra: I) -> Result<ColoredDigraph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::new(self.colors.clone(), self.arcs.iter().copied().chain(extra))
    }

    /// Underlying undirected graph is acyclic (digons count as 2-cycles).
    pub fn is_oriented_forest(&self) -> bool {
        let mut parent: Vec<usize> = self.vertices().collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(u, v) in &self.arcs {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }
}

impl fmt::Debug for ColoredDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ColoredDigraph")
            .field("colors", &self.colors)
            .field("arcs", &self.arcs)
            .finish()
    }
}

/// A set of vertices, stored sorted. The derived ordering compares the
/// sorted member lists lexicographically.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn singleton(v: Vertex) -> Self {
        Self(vec![v])
    }

    pub fn from_mask(mask: u64) -> Self {
        Self((0..64).filter(|i| mask >> i & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(at) => {
                self.0.insert(at, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(at) => {
                self.0.remove(at);
                true
            }
            Err(_) => false,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    /// Applies `map` to every member (e.g. a subdigraph-to-parent index map).
    pub fn mapped(&self, map: &[Vertex]) -> VertexSet {
        self.iter().map(|v| map[v]).collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(a: [Vertex; N]) -> Self {
        a.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_duplicates_and_unknown_endpoints() {
        assert_eq!(ColoredDigraph::uncolored(2, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(ColoredDigraph::uncolored(2, [(0, 1), (0, 1)]), Err(Error::DuplicateArc(0, 1)));
        assert!(matches!(
            ColoredDigraph::uncolored(2, [(0, 2)]),
            Err(Error::UnknownArcEndpoint { .. })
        ));
    }

    #[test]
    fn digons_are_allowed() {
        let d = ColoredDigraph::uncolored(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(d.size(), 2);
        assert!(!d.is_oriented_forest());
    }

    #[test]
    fn induced_relabels_densely() {
        let d = ColoredDigraph::new(vec![5, 6, 7, 8], [(3, 2), (2, 1), (1, 0)]).unwrap();
        let (sub, map) = d.induced(&VertexSet::from([1, 3, 2]));
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(sub.colors(), &[6, 7, 8]);
        assert_eq!(sub.arcs(), &[(1, 0), (2, 1)]);
    }

    #[test]
    fn reverse_is_an_involution() {
        let d = ColoredDigraph::new(vec![1, 2, 3], [(0, 1), (1, 2), (2, 1)]).unwrap();
        assert_eq!(d.reverse().reverse(), d);
        assert!(d.reverse().has_arc(1, 0));
    }

    #[test]
    fn vertex_set_orders_by_sorted_members() {
        let a = VertexSet::from([2, 0]);
        let b = VertexSet::from([0, 3]);
        let c = VertexSet::from([1]);
        let mut all = vec![c.clone(), b.clone(), a.clone(), VertexSet::new()];
        all.sort();
        assert_eq!(all, vec![VertexSet::new(), a, b, c]);
    }
}
