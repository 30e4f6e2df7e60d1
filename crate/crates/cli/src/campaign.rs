//! Seeded verification campaigns behind `upkernel verify`.
//!
//! Each property is checked on a deterministic stream of instances and
//! reported as `passed/total`, keeping the first failing instance.

use std::fmt;

use rand::Rng;
use upkernel::constructors::{
    cartesian_all, crown, directed_cycle, directed_path, in_star, oriented_complete_bipartite, out_star, strong_all,
    zykov, BipartiteDirection, CrownKind,
};
use upkernel::families::{
    decide_even_cycle, decide_forest, decide_odd_cycle_chord, decide_path, decide_pendant_with, decide_tournament,
    decide_wheel,
};
use upkernel::line::{independence_transfer_check, verify_count_theorem_with};
use upkernel::products::{
    decide_ex_crown, decide_grid, decide_in_crown, decide_path_bipartite, decide_star_cartesian, decide_star_strong,
    decide_strong_grid, decide_torus, decide_zykov_cycle, decide_zykov_path, grid_levels, path_bipartite_witness,
    star_cartesian_witness, star_strong_witness, strong_grid_witness, torus_classes,
};
use upkernel::{gen, is_up_color_kernel, Color, ColoredDigraph, FamilyDecision, Oracle, VertexSet};

/// The campaign oracle: instances here are generated small enough for it.
pub fn campaign_oracle() -> Oracle {
    Oracle::new(upkernel::oracle::MAX_ORACLE_LIMIT)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Zind,
    CountTheorem,
    FamilyOracle,
    ProductOracle,
    ZykovOdd,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Zind => "zind",
            Suite::CountTheorem => "count-theorem",
            Suite::FamilyOracle => "family-oracle",
            Suite::ProductOracle => "product-oracle",
            Suite::ZykovOdd => "zykov-odd",
        }
    }

    pub fn default_samples(self) -> usize {
        match self {
            Suite::Zind => 500,
            Suite::CountTheorem => 200,
            Suite::FamilyOracle => 1000,
            Suite::ProductOracle => 300,
            Suite::ZykovOdd => 100,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub digraph: ColoredDigraph,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyLine {
    pub property: String,
    pub passed: usize,
    pub total: usize,
    /// `agree`, `consistent`, ...
    pub unit: &'static str,
    pub first_failure: Option<Counterexample>,
}

impl PropertyLine {
    fn new(property: impl Into<String>, unit: &'static str) -> Self {
        Self { property: property.into(), passed: 0, total: 0, unit, first_failure: None }
    }

    fn record(&mut self, ok: bool, failure: impl FnOnce() -> Counterexample) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.first_failure.is_none() {
            self.first_failure = Some(failure());
        }
    }

    pub fn holds(&self) -> bool {
        self.passed == self.total
    }
}

impl fmt::Display for PropertyLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.holds() { "pass" } else { "FAIL" };
        write!(f, "{status} {}: {}/{} {}", self.property, self.passed, self.total, self.unit)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub lines: Vec<PropertyLine>,
}

impl SuiteReport {
    pub fn holds(&self) -> bool {
        self.lines.iter().all(PropertyLine::holds)
    }

    pub fn first_failure(&self) -> Option<&Counterexample> {
        self.lines.iter().find_map(|l| l.first_failure.as_ref())
    }
}

pub fn run(suite: Suite, seed: u64, samples: usize, max_order: Option<usize>) -> SuiteReport {
    let lines = match suite {
        Suite::Zind => zind(seed, samples, max_order.unwrap_or(7)),
        Suite::CountTheorem => count_theorem(seed, samples, max_order.unwrap_or(7)),
        Suite::FamilyOracle => family_oracle(seed, samples, max_order.unwrap_or(9)),
        Suite::ProductOracle => product_oracle(seed, samples),
        Suite::ZykovOdd => vec![zykov_odd(seed, samples)],
    };
    SuiteReport { suite, lines }
}

fn note_set(z: &VertexSet) -> String {
    format!("{:?}", z.as_slice())
}

/// Independence of `Z` against independence of `f(Z)`, on every subset.
/// The second line excludes subsets holding an arc whose tail is a source.
pub fn zind(seed: u64, samples: usize, max_order: usize) -> Vec<PropertyLine> {
    let max_order = max_order.clamp(1, 12);
    let mut rng = gen::rng(seed);
    let mut stated = PropertyLine::new(format!("Z independent iff f(Z) independent, {samples} digraphs, n <= {max_order}"), "subsets agree");
    let mut refined = PropertyLine::new("Z independent iff f(Z) independent and no arc of Z leaves a source", "subsets agree");
    for i in 0..samples {
        let n = 1 + i % max_order;
        let p = [0.2, 0.35, 0.5][i % 3];
        let d = gen::digraph(&mut rng, n, p, 3);
        for mask in 0u64..1 << n {
            let z = VertexSet::from_mask(mask);
            let (a, b) = independence_transfer_check(&d, &z).expect("subset within order");
            let source_arc = d.arcs().iter().any(|&(u, v)| z.contains(u) && z.contains(v) && d.in_degree(u) == 0);
            let fail = |what: &str| {
                let (d, z) = (d.clone(), z.clone());
                let what = what.to_string();
                move || Counterexample { digraph: d, note: format!("{what}: Z = {}, independent = {a}, f(Z) independent = {b}", note_set(&z)) }
            };
            stated.record(a == b, fail("zind"));
            refined.record(a == (b && !source_arc), fail("zind-refined"));
        }
    }
    vec![stated, refined]
}

/// `count(D) = count(L(D))` on digraphs meeting the source hypothesis, then
/// on those that in addition color every source nonzero.
pub fn count_theorem(seed: u64, samples: usize, max_order: usize) -> Vec<PropertyLine> {
    let max_order = max_order.clamp(1, 8);
    let oracle = campaign_oracle();
    let mut rng = gen::rng(seed);
    let mut stated = PropertyLine::new(format!("count(D) = count(L(D)) under the source hypothesis, n <= {max_order}"), "consistent");
    let mut explained = PropertyLine::new("inconsistent samples that have a 0-colored source", "explained");
    let mut refined = PropertyLine::new("count(D) = count(L(D)) with the hypothesis and nonzero source colors", "consistent");
    let mut i = 0;
    while stated.total < samples || refined.total < samples {
        let d = gen::digraph_with_source_hypothesis(&mut rng, 1 + i % max_order, 0.3, 4);
        i += 1;
        let r = verify_count_theorem_with(&oracle, &d).expect("campaign instances fit the oracle");
        let cx = |tag: &str| {
            let (d, tag) = (d.clone(), tag.to_string());
            move || Counterexample { digraph: d, note: format!("{tag}: count(D) = {}, count(L(D)) = {}", r.count_d, r.count_l) }
        };
        if stated.total < samples {
            stated.record(r.consistent, cx("count-theorem"));
            if !r.consistent {
                explained.record(!r.nonzero_sources, cx("unexplained count mismatch"));
            }
        }
        if r.nonzero_sources && refined.total < samples {
            refined.record(r.consistent, cx("count-theorem-refined"));
        }
    }
    vec![stated, explained, refined]
}

/// Verdict against the oracle count; a `true` verdict also needs a valid witness.
fn agrees(oracle: &Oracle, d: &ColoredDigraph, fd: upkernel::Result<FamilyDecision>) -> Result<bool, String> {
    let fd = fd.map_err(|e| format!("decider error: {e}"))?;
    let count = oracle.count_up_color_kernels(d).map_err(|e| e.to_string())?;
    if fd.verdict != (count > 0) {
        return Err(format!("verdict {} but oracle count {count}", fd.verdict));
    }
    if let Some(w) = &fd.witness {
        if !is_up_color_kernel(d, w).unwrap_or(false) {
            return Err(format!("witness {} is not an up-color kernel", note_set(w)));
        }
    }
    Ok(fd.verdict)
}

fn check(line: &mut PropertyLine, oracle: &Oracle, d: &ColoredDigraph, fd: upkernel::Result<FamilyDecision>) {
    let outcome = agrees(oracle, d, fd);
    let name = line.property.clone();
    line.record(outcome.is_ok(), || Counterexample { digraph: d.clone(), note: format!("{name}: {}", outcome.unwrap_err()) });
}

fn all_colorings(n: usize, max: Color) -> impl Iterator<Item = Vec<Color>> {
    let base = max + 1;
    (0..base.pow(n as u32)).map(move |mut code| {
        (0..n)
            .map(|_| {
                let c = code % base;
                code /= base;
                c
            })
            .collect()
    })
}

/// Paths and cycles exhaustively over colors `0..=3` for `n <= 5`; every
/// other family on `samples` random instances with `n <= max_order`.
pub fn family_oracle(seed: u64, samples: usize, max_order: usize) -> Vec<PropertyLine> {
    let max_order = max_order.clamp(5, 12);
    let oracle = campaign_oracle();
    let mut lines = Vec::new();

    let mut path = PropertyLine::new("decide_path, all colorings in 0..=3, n <= 5", "agree");
    let mut cycle = PropertyLine::new("decide_even_cycle, all colorings in 0..=3, n <= 5", "agree");
    for n in 1..=5 {
        let p = directed_path(n).expect("n >= 1");
        for c in all_colorings(n, 3) {
            let d = p.with_colors(c).expect("same order");
            check(&mut path, &oracle, &d, decide_path(&d));
        }
        if n >= 2 {
            let cyc = directed_cycle(n).expect("n >= 2");
            for c in all_colorings(n, 3) {
                let d = cyc.with_colors(c).expect("same order");
                check(&mut cycle, &oracle, &d, decide_even_cycle(&d));
            }
        }
    }
    lines.extend([path, cycle]);

    let mut rng = gen::rng(seed);
    let mut line = PropertyLine::new(format!("decide_forest, n <= {max_order}"), "agree");
    for i in 0..samples {
        let n = 1 + i % max_order;
        let d = gen::forest(&mut rng, n, 0.85, n as Color);
        check(&mut line, &oracle, &d, decide_forest(&d));
    }
    lines.push(line);

    let mut line = PropertyLine::new(format!("decide_wheel, n <= {max_order}"), "agree");
    for i in 0..samples {
        let d = gen::wheel_instance(&mut rng, 3 + i % (max_order - 3), 4);
        check(&mut line, &oracle, &d, decide_wheel(&d));
    }
    lines.push(line);

    let mut line = PropertyLine::new(format!("decide_pendant, n <= {max_order}"), "agree");
    for i in 0..samples {
        let pendants = 1 + i % 3;
        let nh = 1 + i % (max_order - pendants);
        let (d, h, p) = gen::pendant_instance(&mut rng, nh, pendants, 4);
        check(&mut line, &oracle, &d, decide_pendant_with(&oracle, &d, &h, &p));
    }
    lines.push(line);

    let odd: Vec<usize> = (5..=max_order).step_by(2).collect();
    let mut line = PropertyLine::new(format!("decide_odd_cycle_chord, n in {odd:?}"), "agree");
    for i in 0..samples {
        let d = gen::chord_instance(&mut rng, odd[i % odd.len()], 0.3, 5);
        check(&mut line, &oracle, &d, decide_odd_cycle_chord(&d));
    }
    lines.push(line);

    let mut line = PropertyLine::new(format!("decide_tournament, n <= {max_order}"), "agree");
    for i in 0..samples {
        let d = gen::tournament_instance(&mut rng, 1 + i % max_order, 0.25, 4);
        check(&mut line, &oracle, &d, decide_tournament(&d));
    }
    lines.push(line);
    lines
}

/// Random colors, half the time lifted on a candidate set so that positive
/// verdicts are common.
fn coloring(rng: &mut impl Rng, n: usize, favored: &VertexSet) -> Vec<Color> {
    let mut c = gen::colors(rng, n, 3);
    if rng.gen() {
        for v in favored.iter() {
            if rng.gen_bool(0.9) {
                c[v] += 3;
            }
        }
    }
    c
}

fn coloring_campaign(
    name: String,
    seed: u64,
    samples: usize,
    product: &ColoredDigraph,
    favored: &VertexSet,
    decide: impl Fn(&[Color]) -> upkernel::Result<FamilyDecision>,
) -> PropertyLine {
    let oracle = campaign_oracle();
    let mut rng = gen::rng(seed);
    let mut line = PropertyLine::new(name, "agree");
    for _ in 0..samples {
        let c = coloring(&mut rng, product.order(), favored);
        let d = product.with_colors(c.clone()).expect("same order");
        check(&mut line, &oracle, &d, decide(&c));
    }
    line
}

fn paths(lens: &[usize]) -> Vec<ColoredDigraph> {
    lens.iter().map(|&n| directed_path(n).expect("n >= 1")).collect()
}

fn dims(lens: &[usize]) -> String {
    lens.iter().map(usize::to_string).collect::<Vec<_>>().join("x")
}

pub fn grid_campaigns(seed: u64, samples: usize) -> Vec<PropertyLine> {
    let mut lines = Vec::new();
    for (i, lens) in [&[2, 2][..], &[2, 3], &[3, 3], &[2, 2, 2]].into_iter().enumerate() {
        let f = paths(lens);
        let g = cartesian_all(&f).expect("paths");
        let favored = grid_levels(&f).expect("paths").even();
        lines.push(coloring_campaign(format!("decide_grid {}", dims(lens)), seed + i as u64, samples, &g, &favored, |c| decide_grid(&f, c)));
    }
    for (i, lens) in [&[2, 2][..], &[3, 3], &[2, 3, 2]].into_iter().enumerate() {
        let f = paths(lens);
        let g = strong_all(&f).expect("paths");
        let favored = strong_grid_witness(&f).expect("paths").0;
        lines.push(coloring_campaign(format!("decide_strong_grid {}", dims(lens)), seed + 10 + i as u64, samples, &g, &favored, |c| decide_strong_grid(&f, c)));
    }
    lines
}

pub fn star_campaigns(seed: u64, samples: usize) -> Vec<PropertyLine> {
    let shapes = [
        ("S+2 S-2", vec![out_star(2), in_star(2)]),
        ("S+3 S-2", vec![out_star(3), in_star(2)]),
        ("S-1 S+2", vec![in_star(1), out_star(2)]),
        ("S-2 S-1 S+1", vec![in_star(2), in_star(1), out_star(1)]),
    ];
    let mut lines = Vec::new();
    for (i, (label, f)) in shapes.into_iter().enumerate() {
        let f: Vec<ColoredDigraph> = f.into_iter().map(|s| s.expect("k >= 1")).collect();
        let g = cartesian_all(&f).expect("stars");
        let favored = star_cartesian_witness(&f).expect("stars");
        lines.push(coloring_campaign(format!("decide_star_cartesian {label}"), seed + i as u64, samples, &g, &favored, |c| decide_star_cartesian(&f, c)));
        let g = strong_all(&f).expect("stars");
        let favored = star_strong_witness(&f).expect("stars");
        lines.push(coloring_campaign(format!("decide_star_strong {label}"), seed + 10 + i as u64, samples, &g, &favored, |c| decide_star_strong(&f, c)));
    }
    lines
}

pub fn path_bipartite_campaigns(seed: u64, samples: usize) -> Vec<PropertyLine> {
    [(3, 1, 2), (2, 2, 2), (4, 2, 1), (1, 2, 3)]
        .into_iter()
        .enumerate()
        .map(|(i, (k, m, n))| {
            let p = directed_path(k).expect("k >= 1");
            let kb = oriented_complete_bipartite(m, n, BipartiteDirection::NToM).expect("nonempty sides");
            let g = cartesian_all(&[p.clone(), kb.clone()]).expect("two factors");
            let favored = path_bipartite_witness(&p, &kb, m).expect("canonical shape");
            coloring_campaign(format!("decide_path_bipartite P{k} K{m},{n}"), seed + i as u64, samples, &g, &favored, |c| decide_path_bipartite(&p, &kb, m, c))
        })
        .collect()
}

pub fn torus_campaigns(seed: u64, samples: usize) -> Vec<PropertyLine> {
    [(4, 4), (2, 4), (2, 6)]
        .into_iter()
        .enumerate()
        .map(|(i, (a, b))| {
            let f = vec![directed_cycle(a).expect("a >= 2"), directed_cycle(b).expect("b >= 2")];
            let g = cartesian_all(&f).expect("cycles");
            let [c0, _] = torus_classes(&f).expect("even cycles");
            coloring_campaign(format!("decide_torus C{a} C{b}"), seed + i as u64, samples, &g, &c0, |c| decide_torus(&f, c))
        })
        .collect()
}

/// Members of order at most `max_order`, a third of them with one lifted color.
fn zykov_family(rng: &mut impl Rng, len: usize, max_order: usize) -> Vec<ColoredDigraph> {
    (0..len)
        .map(|_| {
            let k = rng.gen_range(1..=max_order);
            let h = gen::digraph(rng, k, 0.4, 4);
            if rng.gen_bool(0.3) {
                let mut c = h.colors().to_vec();
                c[0] += 4;
                h.with_colors(c).expect("same order")
            } else {
                h
            }
        })
        .collect()
}

pub fn zykov_campaign(seed: u64, samples: usize) -> PropertyLine {
    let oracle = campaign_oracle();
    let mut rng = gen::rng(seed);
    let mut line = PropertyLine::new("decide_zykov_path / decide_zykov_cycle, bases of order <= 5", "agree");
    for i in 0..samples {
        let len = 1 + i % 5;
        let fam = zykov_family(&mut rng, len, 3);
        let cyclic = i % 2 == 1 && len >= 2;
        let base = if cyclic { directed_cycle(len) } else { directed_path(len) }.expect("len >= 1");
        let (d, _) = zykov(&base, &fam).expect("family matches base");
        let fd = if cyclic { decide_zykov_cycle(&oracle, &base, &fam) } else { decide_zykov_path(&oracle, &base, &fam) };
        check(&mut line, &oracle, &d, fd);
    }
    line
}

/// Zykov sums over `C3` and `C5` with random families: never a kernel.
pub fn zykov_odd(seed: u64, samples: usize) -> PropertyLine {
    let oracle = campaign_oracle();
    let mut rng = gen::rng(seed);
    let mut line = PropertyLine::new("zykov sum over C3 / C5 has no up-color kernel", "instances with 0 kernels");
    for i in 0..samples {
        let n = if i % 2 == 0 { 3 } else { 5 };
        let fam = zykov_family(&mut rng, n, 3);
        let (d, _) = zykov(&directed_cycle(n).expect("n >= 2"), &fam).expect("family matches base");
        let count = oracle.count_up_color_kernels(&d).expect("at most 15 vertices");
        line.record(count == 0, || Counterexample { digraph: d.clone(), note: format!("zykov-odd: {count} kernels") });
    }
    line
}

pub fn crown_campaigns(seed: u64, samples: usize, max_total: usize) -> Vec<PropertyLine> {
    let oracle = campaign_oracle();
    let mut rng = gen::rng(seed);
    let mut inner = PropertyLine::new(format!("decide_in_crown, total order <= {max_total}"), "agree");
    let mut outer = PropertyLine::new(format!("decide_ex_crown, total order <= {max_total}"), "agree");
    for _ in 0..samples {
        let (d, fam, att) = gen::crown_parts(&mut rng, max_total, 4);
        let (g, _) = crown(CrownKind::In, &d, &fam, &att).expect("generated attachments are valid");
        check(&mut inner, &oracle, &g, decide_in_crown(&oracle, &d, &fam, &att));
        let (g, _) = crown(CrownKind::Ex, &d, &fam, &att).expect("generated attachments are valid");
        check(&mut outer, &oracle, &g, decide_ex_crown(&oracle, &d, &fam, &att));
    }
    vec![inner, outer]
}

pub fn product_oracle(seed: u64, samples: usize) -> Vec<PropertyLine> {
    let mut lines = grid_campaigns(seed, samples);
    lines.extend(star_campaigns(seed + 100, samples));
    lines.extend(path_bipartite_campaigns(seed + 200, samples));
    lines.extend(torus_campaigns(seed + 300, samples));
    lines.push(zykov_campaign(seed + 400, samples));
    lines.extend(crown_campaigns(seed + 500, samples, 14));
    lines
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_are_deterministic() {
        assert_eq!(run(Suite::ZykovOdd, 3, 10, None), run(Suite::ZykovOdd, 3, 10, None));
        assert_eq!(zind(4, 20, 4), zind(4, 20, 4));
    }

    #[test]
    fn zind_as_stated_has_counterexamples() {
        let lines = zind(1, 60, 4);
        assert!(!lines[0].holds());
        assert!(lines[1].holds(), "{}", lines[1]);
        assert!(lines[0].first_failure.as_ref().unwrap().note.starts_with("zind:"));
    }

    #[test]
    fn line_format() {
        let mut l = PropertyLine::new("p", "agree");
        l.record(true, || unreachable!());
        assert_eq!(l.to_string(), "pass p: 1/1 agree");
        l.record(false, || Counterexample { digraph: ColoredDigraph::empty(), note: "x".into() });
        assert_eq!(l.to_string(), "FAIL p: 1/2 agree");
    }
}
