//! Independence, up-color absorbency and up-color kernels.
//!
//! A set `N` is up-color absorbent when every vertex outside `N` has an arc
//! into `N` toward a strictly greater color, and no member of `N` has color
//! zero. An up-color kernel is an independent up-color absorbent set.

use crate::digraph::{ColoredDigraph, VertexSet};
use crate::error::{Error, Result};

fn check_members(d: &ColoredDigraph, set: &VertexSet) -> Result<()> {
    match set.iter().find(|&v| v >= d.order()) {
        Some(vertex) => Err(Error::InvalidSet { vertex, order: d.order() }),
        None => Ok(()),
    }
}

/// No arc in either direction between two members.
pub fn is_independent(d: &ColoredDigraph, set: &VertexSet) -> Result<bool> {
    check_members(d, set)?;
    Ok(set.iter().all(|v| d.out_neighbors(v).iter().all(|&w| !set.contains(w))))
}

/// Classic absorbency: every outside vertex has an arc into the set.
pub fn is_absorbent(d: &ColoredDigraph, set: &VertexSet) -> Result<bool> {
    check_members(d, set)?;
    Ok(d.vertices()
        .filter(|&v| !set.contains(v))
        .all(|v| d.out_neighbors(v).iter().any(|&w| set.contains(w))))
}

pub fn is_up_color_absorbent(d: &ColoredDigraph, set: &VertexSet) -> Result<bool> {
    check_members(d, set)?;
    if set.iter().any(|v| d.color(v) == 0) {
        return Ok(false);
    }
    Ok(d.vertices()
        .filter(|&v| !set.contains(v))
        .all(|v| is_up_absorbed(d, set, v)))
}

pub fn is_up_color_kernel(d: &ColoredDigraph, set: &VertexSet) -> Result<bool> {
    Ok(is_independent(d, set)? && is_up_color_absorbent(d, set)?)
}

/// Von Neumann-Morgenstern kernel, colors ignored.
pub fn is_classic_kernel(d: &ColoredDigraph, set: &VertexSet) -> Result<bool> {
    Ok(is_independent(d, set)? && is_absorbent(d, set)?)
}

/// `v` has an out-neighbor in `set` with strictly greater color.
pub fn is_up_absorbed(d: &ColoredDigraph, set: &VertexSet, v: usize) -> bool {
    d.out_neighbors(v).iter().any(|&w| set.contains(w) && d.color(v) < d.color(w))
}
