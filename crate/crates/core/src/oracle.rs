//! Exhaustive kernel enumeration, the ground truth for every decider.
//!
//! The sweep is a depth-first walk over vertices in index order that decides
//! membership one vertex at a time. Two prunings keep it exact: a vertex is
//! only added when it is not adjacent to an earlier member (and, for up-color
//! kernels, has nonzero color), and a vertex is rejected as soon as every
//! vertex that could absorb it has been decided without absorbing it. Every
//! subset that survives to the leaves is a kernel, and every kernel survives.

use std::collections::BTreeMap;
use std::fmt;

use crate::digraph::{ColoredDigraph, Vertex, VertexSet};
use crate::error::{Error, Result};

pub const DEFAULT_ORACLE_LIMIT: usize = 22;
/// Subsets are bitmasks.
pub const MAX_ORACLE_LIMIT: usize = 64;

/// Why a vertex defeats the reported failure candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FailureReason {
    /// Outside the candidate and not (up-color) absorbed by it.
    NotAbsorbed,
    /// Nothing can absorb it, so it would have to be a member, but it has color 0.
    ZeroColorForced,
    /// Nothing can absorb it, and it is adjacent to another such vertex.
    IndependenceConflict,
}

impl FailureReason {
    pub fn tag(self) -> &'static str {
        match self {
            FailureReason::NotAbsorbed => "not-absorbed",
            FailureReason::ZeroColorForced => "zero-color-forced",
            FailureReason::IndependenceConflict => "independence-conflict",
        }
    }
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub exists: bool,
    /// Sorted lexicographically by member list.
    pub kernels: Vec<VertexSet>,
    pub count: usize,
    /// Empty when `exists`.
    pub diagnostics: BTreeMap<Vertex, FailureReason>,
}

/// Extra conditions for a kernel search inside a larger digraph: some
/// vertices may not be chosen, and some are already absorbed from outside.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Restriction {
    pub excluded: VertexSet,
    pub pre_absorbed: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self { limit: DEFAULT_ORACLE_LIMIT }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    UpColor,
    Classic,
}

impl Oracle {
    /// Limits above [`MAX_ORACLE_LIMIT`] are clamped.
    pub fn new(limit: usize) -> Self {
        Self { limit: limit.min(MAX_ORACLE_LIMIT) }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn admit(&self, d: &ColoredDigraph) -> Result<()> {
        if d.order() > self.limit {
            Err(Error::OracleLimit { order: d.order(), limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn up_color_kernels(&self, d: &ColoredDigraph) -> Result<KernelReport> {
        self.report(d, Mode::UpColor)
    }

    pub fn classic_kernels(&self, d: &ColoredDigraph) -> Result<KernelReport> {
        self.report(d, Mode::Classic)
    }

    pub fn count_up_color_kernels(&self, d: &ColoredDigraph) -> Result<usize> {
        self.admit(d)?;
        let mut count = 0;
        Sweep::new(d, Mode::UpColor, &Restriction::default()).run(&mut |_| {
            count += 1;
            true
        });
        Ok(count)
    }

    /// First kernel found; stops the sweep early.
    pub fn find_up_color_kernel(&self, d: &ColoredDigraph) -> Result<Option<VertexSet>> {
        self.find_restricted(d, &Restriction::default())
    }

    /// Some independent set avoiding `r.excluded`, with no color-0 member,
    /// that up-color absorbs every outside vertex not listed in
    /// `r.pre_absorbed`. Stops at the first one the sweep meets.
    pub fn find_restricted(&self, d: &ColoredDigraph, r: &Restriction) -> Result<Option<VertexSet>> {
        self.admit(d)?;
        let mut found = None;
        Sweep::new(d, Mode::UpColor, r).run(&mut |mask| {
            found = Some(VertexSet::from_mask(mask));
            false
        });
        Ok(found)
    }

    /// Every set satisfying the restricted conditions, sorted.
    pub fn restricted_kernels(&self, d: &ColoredDigraph, r: &Restriction) -> Result<Vec<VertexSet>> {
        self.admit(d)?;
        let mut found = Vec::new();
        Sweep::new(d, Mode::UpColor, r).run(&mut |mask| {
            found.push(VertexSet::from_mask(mask));
            true
        });
        found.sort();
        Ok(found)
    }

    fn report(&self, d: &ColoredDigraph, mode: Mode) -> Result<KernelReport> {
        self.admit(d)?;
        let mut kernels = Vec::new();
        Sweep::new(d, mode, &Restriction::default()).run(&mut |mask| {
            kernels.push(VertexSet::from_mask(mask));
            true
        });
        kernels.sort();
        let diagnostics = if kernels.is_empty() { diagnose(d, mode) } else { BTreeMap::new() };
        Ok(KernelReport { exists: !kernels.is_empty(), count: kernels.len(), kernels, diagnostics })
    }
}

pub fn enumerate_up_color_kernels(d: &ColoredDigraph) -> Result<KernelReport> {
    Oracle::default().up_color_kernels(d)
}

pub fn enumerate_classic_kernels(d: &ColoredDigraph) -> Result<KernelReport> {
    Oracle::default().classic_kernels(d)
}

pub fn count_up_color_kernels(d: &ColoredDigraph) -> Result<usize> {
    Oracle::default().count_up_color_kernels(d)
}

struct Sweep {
    n: usize,
    adjacent: Vec<u64>,
    absorbers: Vec<u64>,
    allowed: u64,
    needs: u64,
    // settle[i]: vertices whose absorption is decided once vertex i is
    settle: Vec<Vec<Vertex>>,
}

impl Sweep {
    fn new(d: &ColoredDigraph, mode: Mode, r: &Restriction) -> Self {
        let n = d.order();
        let adjacent: Vec<u64> = d.vertices().map(|v| d.out_mask(v) | d.in_mask(v)).collect();
        let absorbers: Vec<u64> = d
            .vertices()
            .map(|v| match mode {
                Mode::Classic => d.out_mask(v),
                Mode::UpColor => d
                    .out_neighbors(v)
                    .iter()
                    .filter(|&&w| d.color(v) < d.color(w))
                    .fold(0, |m, &w| m | 1 << w),
            })
            .collect();
        let mut allowed = 0u64;
        for v in d.vertices() {
            let colorable = mode == Mode::Classic || d.color(v) != 0;
            if colorable && !r.excluded.contains(v) {
                allowed |= 1 << v;
            }
        }
        let needs = d.vertices().filter(|&v| !r.pre_absorbed.contains(v)).fold(0, |m, v| m | 1 << v);
        let mut settle = vec![Vec::new(); n];
        for v in d.vertices() {
            let last = if absorbers[v] == 0 { v } else { v.max(63 - absorbers[v].leading_zeros() as usize) };
            settle[last].push(v);
        }
        Self { n, adjacent, absorbers, allowed, needs, settle }
    }

    fn run(&self, visit: &mut dyn FnMut(u64) -> bool) {
        self.step(0, 0, visit);
    }

    // Returns false when the visitor asked to stop.
    fn step(&self, i: usize, set: u64, visit: &mut dyn FnMut(u64) -> bool) -> bool {
        if i == self.n {
            return visit(set);
        }
        let bit = 1u64 << i;
        if self.allowed & bit != 0 && self.adjacent[i] & set == 0 {
            let with = set | bit;
            if self.settled(i, with) && !self.step(i + 1, with, visit) {
                return false;
            }
        }
        if self.settled(i, set) && !self.step(i + 1, set, visit) {
            return false;
        }
        true
    }

    fn settled(&self, i: usize, set: u64) -> bool {
        self.settle[i].iter().all(|&v| {
            set >> v & 1 == 1 || self.needs >> v & 1 == 0 || self.absorbers[v] & set != 0
        })
    }
}

// One failure certificate: vertices nothing can absorb must all be members;
// if that is already impossible, say why, otherwise extend them greedily to a
// maximal independent set and list what it leaves unabsorbed.
fn diagnose(d: &ColoredDigraph, mode: Mode) -> BTreeMap<Vertex, FailureReason> {
    let absorbable = |v: Vertex| match mode {
        Mode::Classic => d.out_degree(v) > 0,
        Mode::UpColor => d.out_neighbors(v).iter().any(|&w| d.color(v) < d.color(w)),
    };
    let forced: Vec<Vertex> = d.vertices().filter(|&v| !absorbable(v)).collect();
    let mut tags = BTreeMap::new();
    for &v in &forced {
        if mode == Mode::UpColor && d.color(v) == 0 {
            tags.insert(v, FailureReason::ZeroColorForced);
        }
    }
    for &u in &forced {
        for &v in &forced {
            if u != v && d.adjacent(u, v) {
                tags.entry(u).or_insert(FailureReason::IndependenceConflict);
            }
        }
    }
    if !tags.is_empty() {
        return tags;
    }
    let mut candidate: VertexSet = forced.into_iter().collect();
    for v in d.vertices() {
        let colorable = mode == Mode::Classic || d.color(v) != 0;
        if colorable && !candidate.contains(v) && candidate.iter().all(|u| !d.adjacent(u, v)) {
            candidate.insert(v);
        }
    }
    for v in d.vertices().filter(|&v| !candidate.contains(v)) {
        let absorbed = d.out_neighbors(v).iter().any(|&w| {
            candidate.contains(w) && (mode == Mode::Classic || d.color(v) < d.color(w))
        });
        if !absorbed {
            tags.insert(v, FailureReason::NotAbsorbed);
        }
    }
    tags
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::{is_classic_kernel, is_up_color_kernel};

    // Canonical Fig. 1: x3 -> x2 -> x1 -> x0, c = [0, 1, 3, 2].
    fn fig1() -> ColoredDigraph {
        ColoredDigraph::new(vec![0, 1, 3, 2], [(1, 0), (2, 1), (3, 2)]).unwrap()
    }

    fn brute_force(d: &ColoredDigraph, up: bool) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = (0u64..1 << d.order())
            .map(VertexSet::from_mask)
            .filter(|s| {
                if up {
                    is_up_color_kernel(d, s).unwrap()
                } else {
                    is_classic_kernel(d, s).unwrap()
                }
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn fig1_has_no_up_color_kernel() {
        let r = enumerate_up_color_kernels(&fig1()).unwrap();
        assert!(!r.exists);
        assert_eq!(r.count, 0);
        assert_eq!(r.diagnostics.get(&0), Some(&FailureReason::ZeroColorForced));
    }

    #[test]
    fn empty_digraph_has_the_empty_kernel() {
        let r = enumerate_up_color_kernels(&ColoredDigraph::empty()).unwrap();
        assert!(r.exists);
        assert_eq!(r.kernels, vec![VertexSet::new()]);
    }

    #[test]
    fn four_cycle_matches_full_sweep() {
        // x_i -> x_{i-1}, colors [1, 2, 1, 2]
        let d = ColoredDigraph::new(vec![1, 2, 1, 2], [(1, 0), (2, 1), (3, 2), (0, 3)]).unwrap();
        let r = enumerate_up_color_kernels(&d).unwrap();
        assert_eq!(r.kernels, brute_force(&d, true));
        // x0, x2 (color 1) point at x3, x1 (color 2)
        assert_eq!(r.kernels, vec![VertexSet::from([1, 3])]);
    }

    #[test]
    fn classic_kernels() {
        let left_to_right = ColoredDigraph::new(vec![2, 3, 1, 0], [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(enumerate_classic_kernels(&left_to_right).unwrap().kernels, vec![VertexSet::from([1, 3])]);
        let c3 = ColoredDigraph::uncolored(3, [(1, 0), (2, 1), (0, 2)]).unwrap();
        let r = enumerate_classic_kernels(&c3).unwrap();
        assert!(!r.exists);
        assert!(!r.diagnostics.is_empty());
        let two = ColoredDigraph::uncolored(2, []).unwrap();
        assert_eq!(enumerate_classic_kernels(&two).unwrap().kernels, vec![VertexSet::from([0, 1])]);
    }

    #[test]
    fn counts() {
        // Fig. 8 top path 3 -> 2 -> 1 -> 4 (colors left to right)
        let fig8 = ColoredDigraph::new(vec![3, 2, 1, 4], [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(count_up_color_kernels(&fig8).unwrap(), 0);
        assert_eq!(count_up_color_kernels(&ColoredDigraph::new(vec![5], []).unwrap()).unwrap(), 1);
        let fig9 = ColoredDigraph::new(vec![2, 3, 1, 4], [(0, 1), (1, 2), (2, 3)]).unwrap();
        let expected = brute_force(&fig9, true).len();
        assert_eq!(count_up_color_kernels(&fig9).unwrap(), expected);
        assert_eq!(expected, 1);
    }

    #[test]
    fn oracle_limit_is_enforced() {
        let big = ColoredDigraph::uncolored(23, []).unwrap();
        assert_eq!(
            enumerate_up_color_kernels(&big),
            Err(Error::OracleLimit { order: 23, limit: 22 })
        );
        assert!(Oracle::new(23).count_up_color_kernels(&big).is_ok());
        assert_eq!(Oracle::new(1000).limit(), MAX_ORACLE_LIMIT);
    }

    #[test]
    fn restricted_search() {
        // h (3) -> v (1): v is a sink and must be chosen unless pre-absorbed
        let d = ColoredDigraph::new(vec![3, 1], [(0, 1)]).unwrap();
        let o = Oracle::default();
        assert_eq!(o.find_restricted(&d, &Restriction::default()).unwrap(), None);
        let r = Restriction { excluded: VertexSet::new(), pre_absorbed: VertexSet::from([0]) };
        assert_eq!(o.find_restricted(&d, &r).unwrap(), Some(VertexSet::from([1])));
        let r = Restriction { excluded: VertexSet::from([1]), pre_absorbed: VertexSet::from([1]) };
        assert_eq!(o.find_restricted(&d, &r).unwrap(), Some(VertexSet::from([0])));
    }
}
