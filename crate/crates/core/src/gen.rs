//! Seeded random instances for the verification campaigns and tests.
//!
//! Every generator takes an `&mut impl Rng`; pair with [`rng`] for a
//! reproducible ChaCha stream.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::constructors::{directed_cycle, wheel, Attachment, Spoke};
use crate::digraph::{Color, ColoredDigraph, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn colors(rng: &mut impl Rng, n: usize, max: Color) -> Vec<Color> {
    (0..n).map(|_| rng.gen_range(0..=max)).collect()
}

/// Each ordered pair becomes an arc with probability `p`.
pub fn digraph(rng: &mut impl Rng, n: usize, p: f64, max_color: Color) -> ColoredDigraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    let c = colors(rng, n, max_color);
    ColoredDigraph::new(c, arcs).expect("generated arcs are valid")
}

/// Renumbers `d` so that old vertex `v` becomes `perm[v]`.
pub fn relabel(d: &ColoredDigraph, perm: &[Vertex]) -> ColoredDigraph {
    let mut c = vec![0; d.order()];
    for v in d.vertices() {
        c[perm[v]] = d.color(v);
    }
    ColoredDigraph::new(c, d.arcs().iter().map(|&(u, v)| (perm[u], perm[v]))).expect("a permutation keeps arcs valid")
}

pub fn permutation(rng: &mut impl Rng, n: usize) -> Vec<Vertex> {
    let mut p: Vec<Vertex> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Random digraph whose sources all have smaller colors than each of their
/// out-neighbors (isolated vertices are unconstrained).
pub fn digraph_with_source_hypothesis(rng: &mut impl Rng, n: usize, p: f64, max_color: Color) -> ColoredDigraph {
    let d = digraph(rng, n, p, max_color);
    let mut c = d.colors().to_vec();
    for v in d.sources().filter(|&v| d.out_degree(v) > 0) {
        let floor = d.out_neighbors(v).iter().map(|&w| c[w]).min().unwrap();
        if floor == 0 {
            for &w in d.out_neighbors(v) {
                if c[w] == 0 {
                    c[w] = rng.gen_range(1..=max_color.max(1));
                }
            }
        }
    }
    // a second pass: lifting colors above never breaks an earlier source
    for v in d.sources().filter(|&v| d.out_degree(v) > 0) {
        let floor = d.out_neighbors(v).iter().map(|&w| c[w]).min().unwrap();
        c[v] = rng.gen_range(0..floor);
    }
    d.with_colors(c).expect("same order")
}

/// Random orientation of a random forest; each tree edge is kept with
/// probability `keep`.
pub fn forest(rng: &mut impl Rng, n: usize, keep: f64, max_color: Color) -> ColoredDigraph {
    let mut arcs = Vec::new();
    for v in 1..n {
        if rng.gen_bool(keep) {
            let u = rng.gen_range(0..v);
            arcs.push(if rng.gen() { (u, v) } else { (v, u) });
        }
    }
    let perm = permutation(rng, n);
    let d = ColoredDigraph::new(colors(rng, n, max_color), arcs).expect("tree arcs are valid");
    relabel(&d, &perm)
}

/// Mixed spokes; half the time the hub gets color `max_color + 1`.
pub fn wheel_instance(rng: &mut impl Rng, rim: usize, max_color: Color) -> ColoredDigraph {
    let spokes: Vec<Spoke> = (0..rim)
        .map(|_| match rng.gen_range(0..3) {
            0 => Spoke::ToHub,
            1 => Spoke::FromHub,
            _ => Spoke::Both,
        })
        .collect();
    let w = wheel(&spokes).expect("rim of at least three");
    let mut c = colors(rng, rim + 1, max_color);
    // a dominant hub half of the time keeps both verdicts common
    if rng.gen() {
        c[rim] = max_color + 1;
    }
    let w = w.with_colors(c).expect("same order");
    let perm = permutation(rng, rim + 1);
    relabel(&w, &perm)
}

/// A pendant extension: `(D, H, pendants)` with `H` on vertices `0..|H|`.
pub fn pendant_instance(
    rng: &mut impl Rng,
    h_order: usize,
    pendants: usize,
    max_color: Color,
) -> (ColoredDigraph, ColoredDigraph, Vec<(Vertex, Vertex)>) {
    let h = digraph(rng, h_order, 0.35, max_color);
    let pend: Vec<(Vertex, Vertex)> = (0..pendants).map(|i| (rng.gen_range(0..h_order), h_order + i)).collect();
    let mut c = h.colors().to_vec();
    c.extend(colors(rng, pendants, max_color));
    let d = ColoredDigraph::new(c, h.arcs().iter().copied().chain(pend.iter().copied())).expect("pendant arcs are valid");
    (d, h, pend)
}

/// Odd cycle of order `n` plus a chord between non-consecutive rim
/// vertices, a digon with probability `p_digon`, then relabeled. Half the
/// time the chord head gets color `max_color + 1`.
pub fn chord_instance(rng: &mut impl Rng, n: usize, p_digon: f64, max_color: Color) -> ColoredDigraph {
    assert!(n >= 5 && n % 2 == 1, "chord instances need an odd rim of at least 5");
    let a = rng.gen_range(0..n);
    let gap = rng.gen_range(2..=n - 2);
    let b = (a + gap) % n;
    let mut arcs: Vec<(Vertex, Vertex)> = directed_cycle(n).expect("n >= 5").arcs().to_vec();
    arcs.push((a, b));
    if rng.gen_bool(p_digon) {
        arcs.push((b, a));
    }
    let mut c = colors(rng, n, max_color);
    if rng.gen() {
        c[b] = max_color + 1;
    }
    let d = ColoredDigraph::new(c, arcs).expect("chord arcs are valid");
    relabel(&d, &permutation(rng, n))
}

/// Random tournament, or with probability `p_complete` a complete digraph.
pub fn tournament_instance(rng: &mut impl Rng, n: usize, p_complete: f64, max_color: Color) -> ColoredDigraph {
    let complete = rng.gen_bool(p_complete);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if complete {
                arcs.extend([(u, v), (v, u)]);
            } else if rng.gen() {
                arcs.push((u, v));
            } else {
                arcs.push((v, u));
            }
        }
    }
    ColoredDigraph::new(colors(rng, n, max_color), arcs).expect("pairs are distinct")
}

/// A random base, family and attachment list for a crown whose total order
/// is at most `max_total`. Members have at least two vertices.
pub fn crown_parts(
    rng: &mut impl Rng,
    max_total: usize,
    max_color: Color,
) -> (ColoredDigraph, Vec<ColoredDigraph>, Vec<Attachment>) {
    let base_order = rng.gen_range(1..=4.min(max_total - 2));
    let d = digraph(rng, base_order, 0.4, max_color);
    let mut budget = max_total - base_order;
    let mut family = Vec::new();
    while budget >= 2 && family.len() < 3 && (family.is_empty() || rng.gen_bool(0.6)) {
        let k = rng.gen_range(2..=budget.min(4));
        family.push(digraph(rng, k, 0.4, max_color));
        budget -= k;
    }
    let mut attachments = Vec::new();
    for (i, h) in family.iter().enumerate() {
        let mut bases: Vec<Vertex> = (0..base_order).collect();
        bases.shuffle(rng);
        let used = rng.gen_range(1..=base_order);
        for &x in &bases[..used] {
            let vs: Vec<Vertex> = (0..h.order()).filter(|_| rng.gen_bool(0.6)).collect();
            let vs = if vs.is_empty() { vec![rng.gen_range(0..h.order())] } else { vs };
            attachments.push(Attachment { member: i, base: x, vertices: vs });
        }
    }
    (d, family, attachments)
}
