//! Deciders for products of paths, stars, cycles and bipartite digraphs,
//! Zykov sums over paths and cycles, and in/ex-crowns.
//!
//! Product deciders take the factors (colors ignored) and a row-major
//! coloring of the product; witnesses are product vertex indices. Factor
//! vertices may be labeled arbitrarily: positions are recovered from the
//! factor's shape.

use crate::constructors::{cartesian_all, crown, strong_all, zykov, Attachment, Blocks, CrownKind, ProductIndex};
use crate::digraph::{Color, ColoredDigraph, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::families::{acyclic_kernel, FamilyDecision};
use crate::oracle::{Oracle, Restriction};
use crate::predicates::is_up_absorbed;
use crate::shape::{cycle_order, path_order};

/// Vertices grouped by distance to the sink of a grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelDecomposition {
    pub d0: VertexSet,
    pub levels: Vec<VertexSet>,
}

impl LevelDecomposition {
    fn from_levels(level: &[usize]) -> Self {
        let top = level.iter().copied().max().unwrap_or(0);
        let mut levels = vec![VertexSet::new(); top + 1];
        for (v, &l) in level.iter().enumerate() {
            levels[l].insert(v);
        }
        Self { d0: levels[0].clone(), levels }
    }

    pub fn level_of(&self, v: Vertex) -> Option<usize> {
        self.levels.iter().position(|l| l.contains(v))
    }

    /// Union of the levels with even index.
    pub fn even(&self) -> VertexSet {
        self.levels.iter().step_by(2).fold(VertexSet::new(), |acc, l| acc.union(l))
    }
}

fn positions(factors: &[ColoredDigraph], order: impl Fn(&ColoredDigraph) -> Option<Vec<Vertex>>, family: &'static str) -> Result<Vec<Vec<usize>>> {
    factors
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let seq = order(f).ok_or_else(|| Error::shape(family, format!("factor {i} has the wrong shape")))?;
            let mut pos = vec![0; f.order()];
            for (p, &v) in seq.iter().enumerate() {
                pos[v] = p;
            }
            Ok(pos)
        })
        .collect()
}

fn index_of(factors: &[ColoredDigraph]) -> ProductIndex {
    ProductIndex::new(factors.iter().map(ColoredDigraph::order).collect())
}

fn colored(d: ColoredDigraph, colors: &[Color]) -> Result<ColoredDigraph> {
    d.with_colors(colors.to_vec())
}

// Path positions of each product vertex, one entry per factor.
fn path_coords(factors: &[ColoredDigraph], family: &'static str) -> Result<Vec<Vec<usize>>> {
    if factors.is_empty() {
        return Err(Error::shape(family, "need at least one factor"));
    }
    let pos = positions(factors, path_order, family)?;
    let index = index_of(factors);
    Ok((0..index.len()).map(|v| index.coords(v).iter().zip(&pos).map(|(&c, p)| p[c]).collect()).collect())
}

/// Levels of a Cartesian product of directed paths: coordinate sums.
pub fn grid_levels(factors: &[ColoredDigraph]) -> Result<LevelDecomposition> {
    let coords = path_coords(factors, "grid")?;
    Ok(LevelDecomposition::from_levels(&coords.iter().map(|c| c.iter().sum()).collect::<Vec<_>>()))
}

/// Levels of a strong product of directed paths: largest coordinate.
pub fn strong_grid_levels(factors: &[ColoredDigraph]) -> Result<LevelDecomposition> {
    let coords = path_coords(factors, "strong grid")?;
    Ok(LevelDecomposition::from_levels(&coords.iter().map(|c| *c.iter().max().unwrap()).collect::<Vec<_>>()))
}

// Checks `witness` against every vertex; the first failure becomes the
// violation, tagged by `tag_of` for unabsorbed outsiders.
fn settle(
    decider: &'static str,
    d: &ColoredDigraph,
    witness: VertexSet,
    clause: String,
    tag_of: impl Fn(Vertex) -> &'static str,
) -> Result<FamilyDecision> {
    if let Some(z) = witness.iter().find(|&v| d.color(v) == 0) {
        return Ok(FamilyDecision::reject("zero-color", vec![z], format!("witness vertex {z} has color 0")));
    }
    for v in d.vertices().filter(|&v| !witness.contains(v)) {
        if !is_up_absorbed(d, &witness, v) {
            return Ok(FamilyDecision::reject(
                tag_of(v),
                vec![v],
                format!("vertex {v} has no witness out-neighbor of greater color"),
            ));
        }
    }
    FamilyDecision::accept(decider, d, witness, clause)
}

/// Cartesian product of directed paths. Levels are coordinate sums; an
/// up-color kernel exists iff every odd-level vertex has an out-neighbor on
/// the level below with greater color (and the even levels avoid color 0).
pub fn decide_grid(factors: &[ColoredDigraph], colors: &[Color]) -> Result<FamilyDecision> {
    let levels = grid_levels(factors)?;
    let d = colored(cartesian_all(factors)?, colors)?;
    settle("decide_grid", &d, levels.even(), "every D_{2i+1} vertex has a greater-colored out-neighbor in D_{2i}".into(), |_| "odd-level-unabsorbed")
}

/// The witness candidate of a strong grid: on each even level a maximal
/// independent set picked greedily by vertex index. If that choice does not
/// absorb its own level it is replaced by the grid's unique kernel (the
/// all-even-coordinate vertices), and the returned flag is `false`.
pub fn strong_grid_witness(factors: &[ColoredDigraph]) -> Result<(VertexSet, LevelDecomposition, bool)> {
    let levels = strong_grid_levels(factors)?;
    let d = strong_all(factors)?;
    let mut witness = VertexSet::new();
    for level in levels.levels.iter().step_by(2) {
        for v in level.iter() {
            if witness.iter().all(|u| !d.adjacent(u, v)) {
                witness.insert(v);
            }
        }
    }
    let kernel = acyclic_kernel(&d);
    let greedy = witness == kernel;
    Ok((if greedy { witness } else { kernel }, levels, greedy))
}

/// Strong product of directed paths: every odd-level vertex, and every
/// even-level vertex outside the chosen maximal independent sets `B_{2i}`,
/// needs a greater-colored out-neighbor in the union of the `B_{2i}`.
pub fn decide_strong_grid(factors: &[ColoredDigraph], colors: &[Color]) -> Result<FamilyDecision> {
    let (witness, levels, _) = strong_grid_witness(factors)?;
    let d = colored(strong_all(factors)?, colors)?;
    settle(
        "decide_strong_grid",
        &d,
        witness,
        "every vertex outside B_0 ∪ B_2 ∪ … has a greater-colored out-neighbor in it".into(),
        |v| if levels.level_of(v).unwrap() % 2 == 1 { "odd-level-unabsorbed" } else { "even-level-unabsorbed" },
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarKind {
    /// Leaves point at the center.
    In,
    /// The center points at the leaves.
    Out,
}

/// Recognizes a star and returns its orientation and center. A single arc
/// reads as an in-star centered at its head.
pub fn star_shape(d: &ColoredDigraph) -> Option<(StarKind, Vertex)> {
    let n = d.order();
    if n < 2 || d.size() != n - 1 {
        return None;
    }
    let center = if n == 2 { d.arcs()[0].1 } else { d.vertices().find(|&v| d.in_degree(v) + d.out_degree(v) == n - 1)? };
    let leaves = || d.vertices().filter(move |&v| v != center);
    if leaves().all(|v| d.has_arc(v, center)) {
        Some((StarKind::In, center))
    } else if leaves().all(|v| d.has_arc(center, v)) {
        Some((StarKind::Out, center))
    } else {
        None
    }
}

fn stars(factors: &[ColoredDigraph], family: &'static str) -> Result<Vec<(StarKind, Vertex)>> {
    if factors.is_empty() {
        return Err(Error::shape(family, "need at least one factor"));
    }
    factors
        .iter()
        .enumerate()
        .map(|(i, f)| star_shape(f).ok_or_else(|| Error::shape(family, format!("factor {i} is not an oriented star"))))
        .collect()
}

/// For a product of stars, `(y, x)` per vertex: `y` counts in-star
/// coordinates at a leaf, `x` counts out-star coordinates at the center.
pub fn star_signature(factors: &[ColoredDigraph]) -> Result<Vec<(usize, usize)>> {
    let shapes = stars(factors, "star product")?;
    let index = index_of(factors);
    Ok((0..index.len())
        .map(|v| {
            let coords = index.coords(v);
            let y = coords.iter().zip(&shapes).filter(|(&c, s)| s.0 == StarKind::In && c != s.1).count();
            let x = coords.iter().zip(&shapes).filter(|(&c, s)| s.0 == StarKind::Out && c == s.1).count();
            (y, x)
        })
        .collect())
}

/// The vertices of a star Cartesian product with `x + y` even.
pub fn star_cartesian_witness(factors: &[ColoredDigraph]) -> Result<VertexSet> {
    Ok(star_signature(factors)?.iter().enumerate().filter(|(_, (y, x))| (x + y) % 2 == 0).map(|(v, _)| v).collect())
}

/// Cartesian product of in- and out-stars: an up-color kernel exists iff
/// `I = {x + y even}` is up-color absorbent.
pub fn decide_star_cartesian(factors: &[ColoredDigraph], colors: &[Color]) -> Result<FamilyDecision> {
    let witness = star_cartesian_witness(factors)?;
    let d = colored(cartesian_all(factors)?, colors)?;
    settle("decide_star_cartesian", &d, witness, "I = {v : x + y even} is up-color absorbent".into(), |_| "odd-signature-unabsorbed")
}

/// In-star coordinates at the center, out-star coordinates at a leaf:
/// the sinks of a strong product of stars.
pub fn star_strong_witness(factors: &[ColoredDigraph]) -> Result<VertexSet> {
    let shapes = stars(factors, "strong star product")?;
    let index = index_of(factors);
    Ok((0..index.len())
        .filter(|&v| {
            index.coords(v).iter().zip(&shapes).all(|(&c, s)| match s.0 {
                StarKind::In => c == s.1,
                StarKind::Out => c != s.1,
            })
        })
        .collect())
}

/// Strong product of stars: the sink set is a kernel, so an up-color kernel
/// exists iff the sinks are up-color absorbent.
pub fn decide_star_strong(factors: &[ColoredDigraph], colors: &[Color]) -> Result<FamilyDecision> {
    let witness = star_strong_witness(factors)?;
    let d = colored(strong_all(factors)?, colors)?;
    settle("decide_star_strong", &d, witness, "the sink set is up-color absorbent".into(), |_| "non-sink-unabsorbed")
}

/// Checks that `k` is `K_{m,n}` with every arc from the n-side (indices
/// `m..`) into the m-side.
fn require_bipartite_into_m(k: &ColoredDigraph, m: usize) -> Result<()> {
    let n = k.order().saturating_sub(m);
    let ok = m > 0
        && n > 0
        && k.size() == m * n
        && (0..m).all(|x| (m..m + n).all(|y| k.has_arc(y, x)));
    if ok {
        Ok(())
    } else {
        Err(Error::shape("path × bipartite", format!("second factor is not K_{{{m},{n}}} oriented from the n-side into the m-side")))
    }
}

/// `{(odd row, x)} ∪ {(even row, y)}` with rows counted from 1 at the sink
/// row of the path.
pub fn path_bipartite_witness(path: &ColoredDigraph, k: &ColoredDigraph, m: usize) -> Result<VertexSet> {
    require_bipartite_into_m(k, m)?;
    let pos = &positions(std::slice::from_ref(path), path_order, "path × bipartite")?[0];
    let w = k.order();
    Ok((0..path.order() * w)
        .filter(|&v| {
            let row = pos[v / w] + 1;
            (row % 2 == 1) == (v % w < m)
        })
        .collect())
}

/// `P_k □ K_{m,n}` with the bipartite arcs running from the n-side `Y` into
/// the m-side `X` (so `(1, x)` is a sink). Clauses, rows from 1:
/// `c(j+1, x) < c(j, x)` for odd `j`; each `(j, y)` with `j` odd has
/// `c(j, y) < c(j-1, y)` or `c(j, y) < c(j, x)` for some `x`.
pub fn decide_path_bipartite(path: &ColoredDigraph, k: &ColoredDigraph, m: usize, colors: &[Color]) -> Result<FamilyDecision> {
    let witness = path_bipartite_witness(path, k, m)?;
    let d = colored(cartesian_all(&[path.clone(), k.clone()])?, colors)?;
    let w = k.order();
    settle(
        "decide_path_bipartite",
        &d,
        witness,
        "every (even row, x) and (odd row, y) vertex has a greater-colored witness out-neighbor".into(),
        |v| if v % w < m { "x-column-unabsorbed" } else { "y-column-unabsorbed" },
    )
}

/// The two diagonal classes `(i + j) mod 2` of `C_{2k} □ C_{2m}`, class 0
/// first.
pub fn torus_classes(factors: &[ColoredDigraph]) -> Result<[VertexSet; 2]> {
    if factors.len() != 2 {
        return Err(Error::shape("torus", "need exactly two cycle factors"));
    }
    let pos = positions(factors, cycle_order, "torus")?;
    if factors.iter().any(|f| f.order() % 2 == 1) {
        return Err(Error::shape("torus", "both cycles must have even length"));
    }
    let index = index_of(factors);
    let mut classes = [VertexSet::new(), VertexSet::new()];
    for v in 0..index.len() {
        let c = index.coords(v);
        classes[(pos[0][c[0]] + pos[1][c[1]]) % 2].insert(v);
    }
    Ok(classes)
}

/// `C_{2k} □ C_{2m}`: its only kernels are the two diagonal classes, so an
/// up-color kernel exists iff every vertex of one class has a greater-colored
/// out-neighbor in the other.
pub fn decide_torus(factors: &[ColoredDigraph], colors: &[Color]) -> Result<FamilyDecision> {
    let classes = torus_classes(factors)?;
    let d = colored(cartesian_all(factors)?, colors)?;
    let mut first = None;
    for (i, class) in classes.into_iter().enumerate() {
        let fd = settle("decide_torus", &d, class, format!("diagonal class {i} up-color absorbs the other class"), |_| "class-unabsorbed")?;
        if fd.verdict {
            return Ok(fd);
        }
        first.get_or_insert(fd);
    }
    Ok(first.unwrap())
}

/// Up-color kernel of `h` whose largest color is greatest, if any.
fn best_kernel(oracle: &Oracle, h: &ColoredDigraph) -> Result<Option<VertexSet>> {
    Ok(oracle
        .up_color_kernels(h)?
        .kernels
        .into_iter()
        .max_by_key(|k| k.iter().map(|v| h.color(v)).max().unwrap_or(0)))
}

fn max_color(h: &ColoredDigraph) -> Color {
    h.colors().iter().copied().max().unwrap_or(0)
}

/// Zykov sum along a base ordered from its sink: `seq[0]` is the sink-side
/// component. Components at positions of parity `p` hold the kernel; each
/// needs an up-color kernel whose largest color beats every color of the
/// next component (which points into it).
fn zykov_chain(
    oracle: &Oracle,
    family: &[ColoredDigraph],
    blocks: &Blocks,
    seq: &[Vertex],
    p: usize,
    cyclic: bool,
) -> Result<std::result::Result<VertexSet, (Vec<Vertex>, String)>> {
    let n = seq.len();
    let mut witness = VertexSet::new();
    for i in (p..n).step_by(2) {
        let g = seq[i];
        let Some(k) = best_kernel(oracle, &family[g])? else {
            return Ok(Err((blocks.0[g].clone().collect(), format!("component {g} has no up-color kernel"))));
        };
        let next = if i + 1 < n { Some(seq[i + 1]) } else if cyclic { Some(seq[(i + 1) % n]) } else { None };
        if let Some(h) = next {
            let top = k.iter().map(|v| family[g].color(v)).max().unwrap();
            if top <= max_color(&family[h]) {
                return Ok(Err((
                    blocks.0[h].clone().collect(),
                    format!("component {h} has a color ≥ {top}, the best kernel color of component {g}"),
                )));
            }
        }
        witness = witness.union(&k.iter().map(|v| blocks.0[g].start + v).collect());
    }
    Ok(Ok(witness))
}

/// Zykov sum over a directed path: every other component, starting at the
/// sink, needs an up-color kernel that up-color absorbs the whole component
/// pointing into it.
pub fn decide_zykov_path(oracle: &Oracle, base: &ColoredDigraph, family: &[ColoredDigraph]) -> Result<FamilyDecision> {
    let seq = path_order(base).ok_or_else(|| Error::shape("zykov path", "base is not a directed path"))?;
    let (d, blocks) = zykov(base, family)?;
    match zykov_chain(oracle, family, &blocks, &seq, 0, false)? {
        Ok(w) => FamilyDecision::accept("decide_zykov_path", &d, w, "each G_{2i-1} has an up-color kernel absorbing G_{2i}"),
        Err((vs, why)) => Ok(FamilyDecision::reject("zykov-component", vs, why)),
    }
}

/// Zykov sum over a directed cycle: never for odd cycles; for even ones iff
/// the path condition holds around the cycle for one of the two parities.
pub fn decide_zykov_cycle(oracle: &Oracle, base: &ColoredDigraph, family: &[ColoredDigraph]) -> Result<FamilyDecision> {
    let seq = cycle_order(base).ok_or_else(|| Error::shape("zykov cycle", "base is not a directed cycle"))?;
    let (d, blocks) = zykov(base, family)?;
    if seq.len() % 2 == 1 {
        return Ok(FamilyDecision::reject("odd-cycle", (0..d.order()).collect(), "a Zykov sum over an odd cycle has no up-color kernel"));
    }
    let mut failure = None;
    for p in 0..2 {
        match zykov_chain(oracle, family, &blocks, &seq, p, true)? {
            Ok(w) => return FamilyDecision::accept("decide_zykov_cycle", &d, w, format!("rotation {p}: every other component absorbs its predecessor")),
            Err(e) => {
                failure.get_or_insert(e);
            }
        }
    }
    let (vs, why) = failure.unwrap();
    Ok(FamilyDecision::reject("zykov-component", vs, why))
}

fn up_absorbed_set(d: &ColoredDigraph, by: &VertexSet, range: std::ops::Range<Vertex>) -> (VertexSet, VertexSet) {
    let mut pointing = VertexSet::new();
    let mut absorbed = VertexSet::new();
    for v in range.clone() {
        if d.out_neighbors(v).iter().any(|&w| by.contains(w)) {
            pointing.insert(v - range.start);
        }
        if is_up_absorbed(d, by, v) {
            absorbed.insert(v - range.start);
        }
    }
    (pointing, absorbed)
}

/// In-crown: arcs run from the family into `d`. An up-color kernel exists
/// iff some up-color kernel `K` of `d` extends into every `H_i`: `H_i` needs
/// an independent set avoiding the vertices with arcs into `K`, free of
/// color 0, that up-color absorbs whatever `K` does not.
pub fn decide_in_crown(oracle: &Oracle, d: &ColoredDigraph, family: &[ColoredDigraph], attachments: &[Attachment]) -> Result<FamilyDecision> {
    let (g, blocks) = crown(CrownKind::In, d, family, attachments)?;
    let kernels = oracle.up_color_kernels(d)?.kernels;
    if kernels.is_empty() {
        return Ok(FamilyDecision::reject("base-no-kernel", (0..d.order()).collect(), "D has no up-color kernel"));
    }
    let mut blocked = None;
    'next: for k in kernels {
        let mut witness = k.clone();
        for (i, h) in family.iter().enumerate() {
            let range = blocks.0[i + 1].clone();
            let (excluded, pre_absorbed) = up_absorbed_set(&g, &k, range.clone());
            match oracle.find_restricted(h, &Restriction { excluded, pre_absorbed })? {
                Some(n) => witness = witness.union(&n.iter().map(|v| range.start + v).collect()),
                None => {
                    blocked.get_or_insert(range.collect::<Vec<_>>());
                    continue 'next;
                }
            }
        }
        return FamilyDecision::accept("decide_in_crown", &g, witness, "an up-color kernel K of D extends into every H_i");
    }
    Ok(FamilyDecision::reject(
        "crown-member",
        blocked.unwrap_or_default(),
        "no up-color kernel of D extends into every H_i",
    ))
}

/// Ex-crown: arcs run from `d` out to the family. Every `H_i` must have an
/// up-color kernel `N_i`; for some choice of them, `d` needs an independent
/// set avoiding the vertices with arcs into `∪ N_i`, free of color 0, that
/// up-color absorbs whatever `∪ N_i` does not.
pub fn decide_ex_crown(oracle: &Oracle, d: &ColoredDigraph, family: &[ColoredDigraph], attachments: &[Attachment]) -> Result<FamilyDecision> {
    let (g, blocks) = crown(CrownKind::Ex, d, family, attachments)?;
    let mut choices = Vec::with_capacity(family.len());
    for (i, h) in family.iter().enumerate() {
        let ks = oracle.up_color_kernels(h)?.kernels;
        if ks.is_empty() {
            return Ok(FamilyDecision::reject("member-no-kernel", blocks.0[i + 1].clone().collect(), format!("H_{} has no up-color kernel", i + 1)));
        }
        let start = blocks.0[i + 1].start;
        choices.push(ks.into_iter().map(|k| k.iter().map(|v| start + v).collect::<VertexSet>()).collect::<Vec<_>>());
    }
    // odometer over one kernel per member
    let mut pick = vec![0; family.len()];
    loop {
        let outer = pick.iter().zip(&choices).fold(VertexSet::new(), |acc, (&j, ks)| acc.union(&ks[j]));
        let (excluded, pre_absorbed) = up_absorbed_set(&g, &outer, 0..d.order());
        if let Some(k) = oracle.find_restricted(d, &Restriction { excluded, pre_absorbed })? {
            return FamilyDecision::accept("decide_ex_crown", &g, k.union(&outer), "every H_i has an up-color kernel N_i and D completes their union");
        }
        let Some(i) = (0..pick.len()).find(|&i| pick[i] + 1 < choices[i].len()) else { break };
        pick[i] += 1;
        pick[..i].iter_mut().for_each(|p| *p = 0);
    }
    Ok(FamilyDecision::reject("base-completion", (0..d.order()).collect(), "no choice of member kernels can be completed inside D"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{directed_cycle, directed_path, in_star, oriented_complete_bipartite, out_star, BipartiteDirection};
    use crate::families::decide_path;

    fn paths(lens: &[usize]) -> Vec<ColoredDigraph> {
        lens.iter().map(|&n| directed_path(n).unwrap()).collect()
    }

    #[test]
    fn grid_examples() {
        let f = paths(&[3, 3]);
        let levels = grid_levels(&f).unwrap();
        assert_eq!(levels.d0, VertexSet::from([0]));
        let colors: Vec<Color> = (0..9).map(|v| if (v / 3 + v % 3) % 2 == 0 { 1 } else { 0 }).collect();
        let fd = decide_grid(&f, &colors).unwrap();
        assert_eq!(fd.witness, Some(VertexSet::from([0, 2, 4, 6, 8])));

        let mut zero_sink = vec![1; 4];
        zero_sink[0] = 0;
        assert_eq!(decide_grid(&paths(&[2, 2]), &zero_sink).unwrap().violated.unwrap().tag, "zero-color");

        let c = vec![3, 1, 2, 0];
        let p = directed_path(4).unwrap().with_colors(c.clone()).unwrap();
        assert_eq!(decide_grid(&paths(&[4]), &c).unwrap().witness, decide_path(&p).unwrap().witness);
    }

    #[test]
    fn strong_grid_examples() {
        let (w, _, greedy) = strong_grid_witness(&paths(&[3, 3])).unwrap();
        assert!(greedy);
        assert_eq!(w, VertexSet::from([0, 2, 6, 8]));
        let colors: Vec<Color> = (0..9).map(|v| if w.contains(v) { 5 } else { 1 }).collect();
        assert!(decide_strong_grid(&paths(&[3, 3]), &colors).unwrap().verdict);
        let mut bad = colors.clone();
        bad[4] = 9;
        assert!(!decide_strong_grid(&paths(&[3, 3]), &bad).unwrap().verdict);
        let c = vec![3, 1, 2];
        let p = directed_path(3).unwrap().with_colors(c.clone()).unwrap();
        assert_eq!(decide_strong_grid(&paths(&[3]), &c).unwrap().verdict, decide_path(&p).unwrap().verdict);
    }

    #[test]
    fn star_examples() {
        let f = vec![out_star(2).unwrap(), in_star(2).unwrap()];
        let i = star_cartesian_witness(&f).unwrap();
        let colors: Vec<Color> = (0..9).map(|v| if i.contains(v) { 2 } else { 1 }).collect();
        assert!(decide_star_cartesian(&f, &colors).unwrap().verdict);
        let mut zero = colors.clone();
        zero[i.as_slice()[0]] = 0;
        assert!(!decide_star_cartesian(&f, &zero).unwrap().verdict);

        let only_in = vec![in_star(2).unwrap(), in_star(1).unwrap()];
        assert_eq!(star_strong_witness(&only_in).unwrap(), VertexSet::from([0]));
        let sinks = star_strong_witness(&f).unwrap();
        let colors: Vec<Color> = (0..9).map(|v| if sinks.contains(v) { 4 } else { 1 }).collect();
        assert!(decide_star_strong(&f, &colors).unwrap().verdict);
    }

    #[test]
    fn path_bipartite_examples() {
        let p = directed_path(1).unwrap();
        let k = oriented_complete_bipartite(2, 2, BipartiteDirection::NToM).unwrap();
        assert_eq!(path_bipartite_witness(&p, &k, 2).unwrap(), VertexSet::from([0, 1]));
        let wrong = oriented_complete_bipartite(2, 2, BipartiteDirection::MToN).unwrap();
        assert!(path_bipartite_witness(&p, &wrong, 2).is_err());
    }

    #[test]
    fn torus_examples() {
        let f = vec![directed_cycle(4).unwrap(), directed_cycle(6).unwrap()];
        assert!(!decide_torus(&f, &[3; 24]).unwrap().verdict);
        let [c0, c1] = torus_classes(&f).unwrap();
        assert_eq!((c0.len(), c1.len()), (12, 12));
        let colors: Vec<Color> = (0..24).map(|v| if c0.contains(v) { 2 } else { 1 }).collect();
        assert_eq!(decide_torus(&f, &colors).unwrap().witness, Some(c0));
    }

    #[test]
    fn zykov_examples() {
        let oracle = Oracle::default();
        let singletons = |cs: &[Color]| cs.iter().map(|&c| ColoredDigraph::new(vec![c], []).unwrap()).collect::<Vec<_>>();
        let base = directed_path(4).unwrap();
        for cs in [[3, 1, 2, 0], [0, 1, 3, 2], [2, 1, 2, 1]] {
            let p = base.with_colors(cs.to_vec()).unwrap();
            assert_eq!(decide_zykov_path(&oracle, &base, &singletons(&cs)).unwrap().verdict, decide_path(&p).unwrap().verdict);
        }
        let c3 = directed_cycle(3).unwrap();
        assert_eq!(decide_zykov_cycle(&oracle, &c3, &singletons(&[5, 6, 7])).unwrap().violated.unwrap().tag, "odd-cycle");
        let c4 = directed_cycle(4).unwrap();
        assert!(decide_zykov_cycle(&oracle, &c4, &singletons(&[1, 2, 1, 2])).unwrap().verdict);
    }

    #[test]
    fn crown_examples() {
        let oracle = Oracle::default();
        let d = ColoredDigraph::new(vec![3, 1], [(1, 0)]).unwrap();
        let fd = decide_in_crown(&oracle, &d, &[], &[]).unwrap();
        assert_eq!(fd.witness, Some(VertexSet::from([0])));

        // H_1 is a digon colored [1, 1]: no up-color kernel
        let flat = ColoredDigraph::new(vec![1, 1], [(0, 1), (1, 0)]).unwrap();
        let att = [Attachment::whole(0, 0, 2)];
        assert_eq!(decide_ex_crown(&oracle, &d, &[flat], &att).unwrap().violated.unwrap().tag, "member-no-kernel");

        // every D vertex points into H_1's kernel {1}: K inside D is empty
        let h = ColoredDigraph::new(vec![1, 5], [(0, 1)]).unwrap();
        let d = ColoredDigraph::new(vec![2, 1], [(1, 0)]).unwrap();
        let att = [Attachment { member: 0, base: 0, vertices: vec![1] }, Attachment { member: 0, base: 1, vertices: vec![1] }];
        let fd = decide_ex_crown(&oracle, &d, &[h], &att).unwrap();
        assert_eq!(fd.witness, Some(VertexSet::from([3])));
    }
}
