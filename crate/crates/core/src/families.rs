//! Deciders for paths, cycles, forests, wheels, pendant arcs, odd cycles
//! with a chord, tournaments and complete digraphs.
//!
//! Each decider recognizes its family strictly (an out-of-family input is a
//! [`Error::Shape`]), evaluates the structural condition for the family and
//! returns a [`FamilyDecision`]. A `true` verdict always carries a witness
//! that has been re-checked with [`is_up_color_kernel`].

use crate::digraph::{ColoredDigraph, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::oracle::{Oracle, Restriction};
use crate::predicates::is_up_color_kernel;
use crate::shape::{completeness, components, cycle_order, path_order, Completeness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Short machine-readable tag, e.g. `path-parity`.
    pub tag: &'static str,
    pub vertices: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyDecision {
    pub verdict: bool,
    /// An up-color kernel when `verdict` is true.
    pub witness: Option<VertexSet>,
    pub violated: Option<Violation>,
    /// The clause that settled the verdict, in words.
    pub clause: String,
}

impl FamilyDecision {
    pub(crate) fn accept(
        decider: &'static str,
        d: &ColoredDigraph,
        witness: VertexSet,
        clause: impl Into<String>,
    ) -> Result<Self> {
        if !is_up_color_kernel(d, &witness)? {
            return Err(Error::Inconsistency { decider, witness: witness.as_slice().to_vec() });
        }
        Ok(Self { verdict: true, witness: Some(witness), violated: None, clause: clause.into() })
    }

    pub(crate) fn reject(tag: &'static str, vertices: Vec<Vertex>, clause: impl Into<String>) -> Self {
        Self { verdict: false, witness: None, violated: Some(Violation { tag, vertices }), clause: clause.into() }
    }
}

/// Directed path `x_{n-1} -> ... -> x_0` (positions counted from the sink,
/// whatever the vertex labels). An up-color kernel exists iff
/// `c(x_{2i}) > c(x_{2i+1})` for every pair and, when the last position is
/// even, that vertex is not colored 0.
pub fn decide_path(d: &ColoredDigraph) -> Result<FamilyDecision> {
    let seq = path_order(d).ok_or_else(|| Error::shape("directed path", "need one sink and in/out-degrees at most 1"))?;
    check("decide_path", d, decide_path_order(d, &seq))
}

pub(crate) fn decide_path_order(d: &ColoredDigraph, seq: &[Vertex]) -> FamilyDecision {
    for i in (0..seq.len().saturating_sub(1)).step_by(2) {
        let (a, b) = (d.color(seq[i]), d.color(seq[i + 1]));
        if a <= b {
            return FamilyDecision::reject(
                "path-parity",
                vec![seq[i], seq[i + 1]],
                format!("c(x{i})>c(x{}) violated ({a} ≤ {b})", i + 1),
            );
        }
    }
    let last = seq.len() - 1;
    if last % 2 == 0 && d.color(seq[last]) == 0 {
        return FamilyDecision::reject("zero-color", vec![seq[last]], format!("c(x{last}) = 0 but x{last} must be in the kernel"));
    }
    let witness = seq.iter().step_by(2).copied().collect();
    FamilyDecision {
        verdict: true,
        witness: Some(witness),
        violated: None,
        clause: "c(x_2i) > c(x_2i+1) for every i".into(),
    }
}

fn check(decider: &'static str, d: &ColoredDigraph, fd: FamilyDecision) -> Result<FamilyDecision> {
    match fd.witness {
        Some(w) if fd.verdict => FamilyDecision::accept(decider, d, w, fd.clause),
        _ => Ok(fd),
    }
}

/// Directed cycle. Odd cycles never have a kernel. An even cycle has an
/// up-color kernel iff one parity class strictly out-colors the other along
/// every arc; that class is the witness.
pub fn decide_even_cycle(d: &ColoredDigraph) -> Result<FamilyDecision> {
    let seq = cycle_order(d).ok_or_else(|| Error::shape("directed cycle", "need in- and out-degree 1 and one cycle"))?;
    let n = seq.len();
    if n % 2 == 1 {
        return Ok(FamilyDecision::reject("odd-cycle", seq, format!("directed cycle of odd length {n} has no kernel")));
    }
    match cycle_parity_kernel(d, &seq) {
        Ok((class, p)) => FamilyDecision::accept(
            "decide_even_cycle",
            d,
            class,
            format!("every vertex at odd distance from parity class {p} points to a greater color"),
        ),
        Err(vertices) => Ok(FamilyDecision::reject(
            "parity-alternation",
            vertices,
            "neither parity class strictly out-colors its in-neighbors",
        )),
    }
}

/// First parity class (0, then 1) of an even cycle whose vertices all beat
/// their in-neighbor on the cycle. On failure returns one blocking arc per class.
fn cycle_parity_kernel(d: &ColoredDigraph, seq: &[Vertex]) -> std::result::Result<(VertexSet, usize), Vec<Vertex>> {
    let n = seq.len();
    let mut blockers = Vec::new();
    for p in 0..2 {
        // members at positions p, p+2, ...; position q = member + 1 points at q - 1
        let bad = (0..n)
            .filter(|q| q % 2 != p)
            .find(|&q| d.color(seq[q]) >= d.color(seq[(q + n - 1) % n]));
        match bad {
            None => return Ok(((p..n).step_by(2).map(|i| seq[i]).collect(), p)),
            Some(q) => blockers.extend([seq[q], seq[(q + n - 1) % n]]),
        }
    }
    Err(blockers)
}

/// The two parity classes of an even directed cycle that satisfy the
/// up-color condition (zero, one or two of them).
pub(crate) fn even_cycle_kernels(d: &ColoredDigraph, seq: &[Vertex]) -> Vec<VertexSet> {
    let n = seq.len();
    (0..2)
        .filter(|&p| (0..n).filter(|q| q % 2 != p).all(|q| d.color(seq[q]) < d.color(seq[(q + n - 1) % n])))
        .map(|p| (p..n).step_by(2).map(|i| seq[i]).collect())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Result of the recursive sink-first leveling of a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestLeveling {
    pub parity: Vec<Parity>,
    /// `(depth, level)` pairs per vertex, one per round it took part in.
    pub trace: Vec<Vec<(usize, usize)>>,
}

impl ForestLeveling {
    pub fn even_leveled(&self) -> VertexSet {
        self.parity.iter().enumerate().filter(|(_, p)| **p == Parity::Even).map(|(v, _)| v).collect()
    }
}

fn require_forest(d: &ColoredDigraph) -> Result<()> {
    if d.is_oriented_forest() {
        Ok(())
    } else {
        Err(Error::shape("forest", "underlying graph has a cycle (digons count)"))
    }
}

/// Levels the vertices of `active`: sinks of the induced subforest get level
/// 0, their unleveled in-neighbors level 1, and so on.
fn levels_within(d: &ColoredDigraph, active: &[bool]) -> Vec<Option<usize>> {
    let mut level = vec![None; d.order()];
    let mut frontier: Vec<Vertex> = d
        .vertices()
        .filter(|&v| active[v] && d.out_neighbors(v).iter().all(|&w| !active[w]))
        .collect();
    for &v in &frontier {
        level[v] = Some(0);
    }
    let mut k = 0;
    while !frontier.is_empty() {
        k += 1;
        let mut next = Vec::new();
        for &w in &frontier {
            for &u in d.in_neighbors(w) {
                if active[u] && level[u].is_none() {
                    level[u] = Some(k);
                    next.push(u);
                }
            }
        }
        frontier = next;
    }
    level
}

/// Recursive leveling: level the forest from its sinks, then re-level the
/// subforest induced by all even-level vertices, until that subforest has
/// no arcs. A vertex is even-leveled iff it was even at every depth.
///
/// The even-leveled set is always independent. It is not always the
/// forest's kernel (e.g. `6->2, 2->1, 2->3, 3->4, 1->0, 0->5` leaves vertex 6
/// odd-leveled and unabsorbed); [`forest_kernel`] computes the kernel.
pub fn level_forest(d: &ColoredDigraph) -> Result<ForestLeveling> {
    require_forest(d)?;
    let n = d.order();
    let mut active = vec![true; n];
    let mut trace = vec![Vec::new(); n];
    for depth in 0.. {
        let level = levels_within(d, &active);
        for v in d.vertices().filter(|&v| active[v]) {
            // every vertex of a finite acyclic digraph reaches a sink
            trace[v].push((depth, level[v].expect("forest vertex reaches a sink")));
        }
        let even: Vec<bool> = (0..n).map(|v| active[v] && level[v].is_some_and(|l| l % 2 == 0)).collect();
        let has_arc = d.arcs().iter().any(|&(u, v)| even[u] && even[v]);
        active = even;
        if !has_arc {
            break;
        }
    }
    let parity = active.iter().map(|&e| if e { Parity::Even } else { Parity::Odd }).collect();
    Ok(ForestLeveling { parity, trace })
}

/// The unique kernel of an oriented forest, by peeling: sinks join the
/// kernel, vertices pointing at them leave, repeat on what remains.
pub fn forest_kernel(d: &ColoredDigraph) -> Result<VertexSet> {
    require_forest(d)?;
    Ok(acyclic_kernel(d))
}

// Unique kernel of an acyclic digraph.
pub(crate) fn acyclic_kernel(d: &ColoredDigraph) -> VertexSet {
    #[derive(Clone, Copy, PartialEq)]
    enum S {
        Open,
        In,
        Out,
    }
    let mut state = vec![S::Open; d.order()];
    let mut pending: Vec<usize> = d.vertices().map(|v| d.out_degree(v)).collect();
    let mut ready: Vec<Vertex> = d.sinks().collect();
    while let Some(v) = ready.pop() {
        if state[v] != S::Open {
            continue;
        }
        let absorbed = d.out_neighbors(v).iter().any(|&w| state[w] == S::In);
        state[v] = if absorbed { S::Out } else { S::In };
        for &u in d.in_neighbors(v) {
            pending[u] -= 1;
            if pending[u] == 0 {
                ready.push(u);
            }
        }
    }
    d.vertices().filter(|&v| state[v] == S::In).collect()
}

/// Oriented forest: the up-color kernel, if any, is the forest's unique
/// kernel, so it exists iff every vertex outside that kernel points to a
/// kernel vertex of greater color and no kernel vertex has color 0.
pub fn decide_forest(d: &ColoredDigraph) -> Result<FamilyDecision> {
    let kernel = forest_kernel(d)?;
    if let Some(z) = kernel.iter().find(|&v| d.color(v) == 0) {
        return Ok(FamilyDecision::reject("zero-color", vec![z], format!("vertex {z} is in the forest's kernel but has color 0")));
    }
    for v in d.vertices().filter(|&v| !kernel.contains(v)) {
        if !d.out_neighbors(v).iter().any(|&w| kernel.contains(w) && d.color(v) < d.color(w)) {
            return Ok(FamilyDecision::reject(
                "odd-unabsorbed",
                vec![v],
                format!("odd-leveled vertex {v} has no even-leveled out-neighbor of greater color"),
            ));
        }
    }
    FamilyDecision::accept(
        "decide_forest",
        d,
        kernel,
        "every odd-leveled vertex has an even-leveled out-neighbor of greater color",
    )
}

/// Oriented wheel: a hub plus a rim that is a directed cycle. Returns the hub
/// and the rim in cycle order.
pub fn wheel_parts(d: &ColoredDigraph) -> Option<(Vertex, Vec<Vertex>)> {
    if d.order() < 4 {
        return None;
    }
    d.vertices().find_map(|hub| {
        if (0..d.order()).any(|v| v != hub && !d.adjacent(v, hub)) {
            return None;
        }
        let (rim, map) = d.without(&VertexSet::singleton(hub));
        let seq = cycle_order(&rim)?;
        Some((hub, seq.into_iter().map(|v| map[v]).collect()))
    })
}

/// Wheel `W_n`: an up-color kernel exists iff (a) the hub up-color absorbs
/// every rim vertex, or (b) the rim is even, has an up-color kernel, and the
/// hub is up-color absorbed by a member of it.
pub fn decide_wheel(d: &ColoredDigraph) -> Result<FamilyDecision> {
    let (hub, rim) = wheel_parts(d).ok_or_else(|| Error::shape("wheel", "need a hub adjacent to every vertex of a directed rim cycle"))?;
    if rim.iter().all(|&r| d.up_absorbed_by(r, hub)) {
        return FamilyDecision::accept("decide_wheel", d, VertexSet::singleton(hub), "(a) hub absorbs every rim vertex and has the greatest color");
    }
    if rim.len() % 2 == 1 {
        return Ok(FamilyDecision::reject("wheel", vec![hub], "(a) fails and the rim is odd, so (b) is impossible"));
    }
    for class in even_cycle_kernels(d, &rim) {
        if class.iter().any(|w| d.up_absorbed_by(hub, w)) {
            return FamilyDecision::accept("decide_wheel", d, class, "(b) hub is up-color absorbed by a member of a rim kernel");
        }
    }
    Ok(FamilyDecision::reject("wheel", vec![hub], "(a) fails and no rim kernel up-color absorbs the hub"))
}

/// `D` is `H` (occupying vertices `0..|H|`) plus pendant sinks: each
/// `(w, v)` adds vertex `v >= |H|` and the single arc `(w, v)`.
///
/// Every pendant sink is in every kernel, so the pendant colors must be
/// nonzero. Let `A` be the attachment vertices some pendant absorbs upward
/// (`c(v) > c(w)`) and `J` the remaining attachment vertices. An up-color
/// kernel exists iff `H - A` has an up-color kernel avoiding `J`. With
/// `J` empty this is "c(v_i) > c(w_i) and `H - {w_i}` has an up-color
/// kernel"; otherwise the `J` vertices (`0 < c(v_j) <= c(w_j)`) must be
/// absorbed inside `H`.
pub fn decide_pendant(d: &ColoredDigraph, h: &ColoredDigraph, pendants: &[(Vertex, Vertex)]) -> Result<FamilyDecision> {
    decide_pendant_with(&Oracle::default(), d, h, pendants)
}

/// [`decide_pendant`] with an explicit oracle for the residual question on `H`.
pub fn decide_pendant_with(
    oracle: &Oracle,
    d: &ColoredDigraph,
    h: &ColoredDigraph,
    pendants: &[(Vertex, Vertex)],
) -> Result<FamilyDecision> {
    let shape = |reason: String| Error::shape("pendant extension", reason);
    let nh = h.order();
    if d.order() != nh + pendants.len() {
        return Err(shape(format!("D has {} vertices, expected |H| + pendants = {}", d.order(), nh + pendants.len())));
    }
    let (base, _) = d.induced(&(0..nh).collect());
    if &base != h {
        return Err(shape("D restricted to 0..|H| differs from H".into()));
    }
    let mut seen = VertexSet::new();
    for &(w, v) in pendants {
        if w >= nh || v < nh || v >= d.order() || !seen.insert(v) {
            return Err(shape(format!("({w}, {v}) is not a pendant arc from H to a new vertex")));
        }
        if d.out_degree(v) != 0 || d.in_neighbors(v) != [w] {
            return Err(shape(format!("pendant vertex {v} has arcs other than ({w}, {v})")));
        }
    }
    if let Some(&(_, v)) = pendants.iter().find(|&&(_, v)| d.color(v) == 0) {
        return Ok(FamilyDecision::reject("zero-color-pendant", vec![v], format!("pendant sink {v} must be in the kernel but has color 0")));
    }
    let absorbed: VertexSet = pendants.iter().filter(|&&(w, v)| d.color(v) > d.color(w)).map(|&(w, _)| w).collect();
    let blocked: VertexSet = pendants.iter().map(|&(w, _)| w).filter(|&w| !absorbed.contains(w)).collect();
    let (rest, map) = h.without(&absorbed);
    let mut back = vec![usize::MAX; nh];
    for (i, &v) in map.iter().enumerate() {
        back[v] = i;
    }
    let restriction = Restriction { excluded: blocked.iter().map(|w| back[w]).collect(), pre_absorbed: VertexSet::new() };
    let clause = if blocked.is_empty() {
        "c(v_i) > c(w_i) for all i and H - {w_i} has an up-color kernel"
    } else {
        "H minus the pendant-absorbed w_i has an up-color kernel avoiding every w_j with 0 < c(v_j) <= c(w_j)"
    };
    match oracle.find_restricted(&rest, &restriction)? {
        Some(k) => {
            let witness = k.mapped(&map).union(&pendants.iter().map(|&(_, v)| v).collect());
            FamilyDecision::accept("decide_pendant", d, witness, clause)
        }
        None => Ok(FamilyDecision::reject("pendant", blocked.as_slice().to_vec(), format!("violated: {clause}"))),
    }
}

/// Odd directed cycle plus one chord (a single arc or a digon) between two
/// non-consecutive rim vertices. Returns the rim in cycle order (arcs
/// `rim[i] -> rim[i-1]`) and the chord arcs.
pub fn chord_parts(d: &ColoredDigraph) -> Option<(Vec<Vertex>, Vec<(Vertex, Vertex)>)> {
    let n = d.order();
    if n < 5 || n % 2 == 0 {
        return None;
    }
    let candidates: Vec<Vec<(Vertex, Vertex)>> = match d.size() - n {
        1 => d.arcs().iter().map(|&a| vec![a]).collect(),
        2 => d.arcs().iter().filter(|&&(u, v)| u < v && d.has_arc(v, u)).map(|&(u, v)| vec![(u, v), (v, u)]).collect(),
        _ => return None,
    };
    candidates.into_iter().find_map(|chord| {
        let rest = ColoredDigraph::from_sorted_arcs(
            d.colors().to_vec(),
            d.arcs().iter().copied().filter(|a| !chord.contains(a)).collect(),
        );
        let seq = cycle_order(&rest)?;
        let pos = |v: Vertex| seq.iter().position(|&x| x == v).unwrap();
        let (a, b) = (pos(chord[0].0), pos(chord[0].1));
        let gap = (a + n - b) % n;
        (gap != 1 && gap != n - 1).then_some((seq, chord))
    })
}

/// Odd cycle with one chord. Any up-color kernel contains the head `h` of a
/// chord arc `(t, h)`. It exists iff for some chord arc, with `w` the rim
/// in-neighbor of `h`:
/// `c(w) < c(h)`; the rest `D - {t, h, w}` (one or two directed paths) has an
/// up-color kernel `K` that avoids the rim out-neighbor of `h`; and `t` is
/// up-color absorbed by `h` or by its rim out-neighbor in `K`.
pub fn decide_odd_cycle_chord(d: &ColoredDigraph) -> Result<FamilyDecision> {
    let (rim, chord) = chord_parts(d).ok_or_else(|| Error::shape("odd cycle with one chord", "need an odd directed cycle plus one chord (single arc or digon) between non-consecutive vertices"))?;
    let n = rim.len();
    let pos = |v: Vertex| rim.iter().position(|&x| x == v).unwrap();
    let mut last_failure = None;
    for &(t, h) in &chord {
        let w = rim[(pos(h) + 1) % n];
        let h_next = rim[(pos(h) + n - 1) % n];
        let t_next = rim[(pos(t) + n - 1) % n];
        if d.color(w) >= d.color(h) {
            last_failure = Some(("chord-head", vec![h, w], format!("vertex {h} does not up-color absorb its rim in-neighbor {w}")));
            continue;
        }
        let removed = VertexSet::from([t, h, w]);
        let (rest, map) = d.without(&removed);
        let mut kernel = VertexSet::new();
        let mut failed = None;
        for comp in components(&rest) {
            let (path, pmap) = rest.induced(&comp);
            let seq = path_order(&path).expect("rim minus three vertices splits into paths");
            let fd = decide_path_order(&path, &seq);
            match fd.witness {
                Some(k) => kernel = kernel.union(&k.mapped(&pmap).mapped(&map)),
                None => failed = Some(fd.violated.map(|v| v.vertices).unwrap_or_default()),
            }
        }
        if let Some(vs) = failed {
            let vs = vs.into_iter().map(|v| map[v]).collect();
            last_failure = Some(("remainder", vs, format!("D - {{{t}, {h}, {w}}} has no up-color kernel")));
            continue;
        }
        if kernel.contains(h_next) {
            last_failure = Some(("chord-parity", vec![h, h_next], format!("the remainder kernel contains {h_next}, an out-neighbor of {h}")));
            continue;
        }
        let t_absorbed = d.up_absorbed_by(t, h) || (kernel.contains(t_next) && d.up_absorbed_by(t, t_next));
        if !t_absorbed {
            last_failure = Some(("chord-tail", vec![t], format!("chord tail {t} is not up-color absorbed")));
            continue;
        }
        kernel.insert(h);
        return FamilyDecision::accept(
            "decide_odd_cycle_chord",
            d,
            kernel,
            format!("{h} up-color absorbs its in-neighbors and D - {{{t}, {h}, {w}}} has a compatible up-color kernel"),
        );
    }
    let (tag, vs, clause) = last_failure.expect("at least one chord arc");
    Ok(FamilyDecision::reject(tag, vs, clause))
}

/// Complete digraph or tournament: a kernel has exactly one vertex, which
/// must be a sink (automatic in a complete digraph) whose color strictly
/// exceeds every other color and is nonzero.
pub fn decide_tournament(d: &ColoredDigraph) -> Result<FamilyDecision> {
    let kind = completeness(d).ok_or_else(|| Error::shape("tournament or complete digraph", "some pair has the wrong number of arcs"))?;
    let max = *d.colors().iter().max().expect("nonempty");
    let top: Vec<Vertex> = d.vertices().filter(|&v| d.color(v) == max).collect();
    if max == 0 {
        return Ok(FamilyDecision::reject("zero-color", top, "every color is 0"));
    }
    if top.len() > 1 {
        return Ok(FamilyDecision::reject("max-color-tie", top, "the greatest color is shared, so it cannot absorb its peers upward"));
    }
    let v = top[0];
    match kind {
        Completeness::Complete => FamilyDecision::accept("decide_tournament", d, VertexSet::singleton(v), "complete digraph: the vertex of greatest color"),
        Completeness::Tournament if d.out_degree(v) == 0 => {
            FamilyDecision::accept("decide_tournament", d, VertexSet::singleton(v), "the vertex with greatest color has out-degree zero")
        }
        Completeness::Tournament => Ok(FamilyDecision::reject(
            "max-not-sink",
            vec![v],
            format!("the vertex with greatest color ({v}) has out-degree {}", d.out_degree(v)),
        )),
    }
}
