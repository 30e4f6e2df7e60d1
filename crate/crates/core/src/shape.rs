//! Structural recognizers used by the deciders.

use crate::digraph::{ColoredDigraph, Vertex, VertexSet};

/// Vertices of a directed path listed from the sink: `seq[0]` is the sink
/// and `seq[i]` is the unique in-neighbor of `seq[i - 1]`.
pub fn path_order(d: &ColoredDigraph) -> Option<Vec<Vertex>> {
    let n = d.order();
    if n == 0 || d.size() != n - 1 {
        return None;
    }
    let mut sinks = d.sinks();
    let sink = sinks.next()?;
    if sinks.next().is_some() {
        return None;
    }
    let mut seq = vec![sink];
    let mut cur = sink;
    loop {
        match d.in_neighbors(cur) {
            [] => break,
            [prev] if d.out_degree(*prev) == 1 && seq.len() < n => {
                cur = *prev;
                seq.push(cur);
            }
            _ => return None,
        }
    }
    (seq.len() == n).then_some(seq)
}

/// Vertices of a directed cycle: `seq[0]` is vertex 0 and `seq[i]` is the
/// unique in-neighbor of `seq[i - 1]`, so arcs run `seq[i] -> seq[i - 1]`.
pub fn cycle_order(d: &ColoredDigraph) -> Option<Vec<Vertex>> {
    let n = d.order();
    if n < 2 || d.size() != n || d.vertices().any(|v| d.out_degree(v) != 1 || d.in_degree(v) != 1) {
        return None;
    }
    let mut seq = vec![0];
    let mut cur = d.in_neighbors(0)[0];
    while cur != 0 {
        if seq.len() == n {
            return None;
        }
        seq.push(cur);
        cur = d.in_neighbors(cur)[0];
    }
    (seq.len() == n).then_some(seq)
}

/// Weakly connected components, each sorted, ordered by smallest member.
pub fn components(d: &ColoredDigraph) -> Vec<VertexSet> {
    let mut seen = vec![false; d.order()];
    let mut out = Vec::new();
    for start in d.vertices() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in d.out_neighbors(v).iter().chain(d.in_neighbors(v)) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.push(comp.into_iter().collect());
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Completeness {
    /// Every ordered pair is an arc.
    Complete,
    /// Every unordered pair carries exactly one arc.
    Tournament,
}

/// On one vertex both readings hold; `Complete` is reported.
pub fn completeness(d: &ColoredDigraph) -> Option<Completeness> {
    let n = d.order();
    if n == 0 {
        return None;
    }
    let pairs_ok = |exactly_one: bool| {
        (0..n).all(|u| {
            (u + 1..n).all(|v| {
                let (a, b) = (d.has_arc(u, v), d.has_arc(v, u));
                if exactly_one { a != b } else { a && b }
            })
        })
    };
    if pairs_ok(false) {
        Some(Completeness::Complete)
    } else if pairs_ok(true) {
        Some(Completeness::Tournament)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{directed_cycle, directed_path};

    #[test]
    fn path_order_from_sink() {
        assert_eq!(path_order(&directed_path(4).unwrap()), Some(vec![0, 1, 2, 3]));
        let d = ColoredDigraph::uncolored(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(path_order(&d), Some(vec![2, 1, 0]));
        assert_eq!(path_order(&ColoredDigraph::uncolored(1, []).unwrap()), Some(vec![0]));
        // two sinks
        assert_eq!(path_order(&ColoredDigraph::uncolored(3, [(1, 0), (1, 2)]).unwrap()), None);
        // cycle plus isolated vertex has n - 1 arcs but no single sink path
        assert_eq!(path_order(&ColoredDigraph::uncolored(3, [(0, 1), (1, 0)]).unwrap()), None);
        assert_eq!(path_order(&directed_cycle(3).unwrap()), None);
    }

    #[test]
    fn cycle_order_follows_in_neighbors() {
        assert_eq!(cycle_order(&directed_cycle(5).unwrap()), Some(vec![0, 1, 2, 3, 4]));
        let two_triangles = ColoredDigraph::uncolored(6, [(1, 0), (2, 1), (0, 2), (4, 3), (5, 4), (3, 5)]).unwrap();
        assert_eq!(cycle_order(&two_triangles), None);
        assert_eq!(cycle_order(&directed_path(3).unwrap()), None);
    }

    #[test]
    fn completeness_kinds() {
        let k3 = ColoredDigraph::uncolored(3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]).unwrap();
        assert_eq!(completeness(&k3), Some(Completeness::Complete));
        let t3 = ColoredDigraph::uncolored(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(completeness(&t3), Some(Completeness::Tournament));
        assert_eq!(completeness(&directed_path(3).unwrap()), None);
    }

    #[test]
    fn components_split() {
        let d = ColoredDigraph::uncolored(5, [(1, 0), (4, 3)]).unwrap();
        assert_eq!(
            components(&d),
            vec![VertexSet::from([0, 1]), VertexSet::from([2]), VertexSet::from([3, 4])]
        );
    }
}
