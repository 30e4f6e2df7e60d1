//! The subcommands, as functions from inputs to printed lines and a verdict.

use std::path::Path;

use upkernel::constructors::Operation;
use upkernel::families::{
    decide_even_cycle, decide_forest, decide_odd_cycle_chord, decide_path, decide_pendant_with, decide_tournament,
    decide_wheel,
};
use upkernel::predicates::is_up_absorbed;
use upkernel::products::{
    decide_ex_crown, decide_grid, decide_in_crown, decide_path_bipartite, decide_star_cartesian, decide_star_strong,
    decide_strong_grid, decide_torus, decide_zykov_cycle, decide_zykov_path,
};
use upkernel::{gen, is_independent, is_up_color_absorbent, FamilyDecision, Oracle, Vertex, VertexSet};

use crate::campaign::{self, Suite};
use crate::document::{write_text, GraphDocument, NamedDigraph};
use crate::error::{CliError, CliResult};
use crate::recipe::{load, Loaded, Resolved};

/// Printed lines plus whether the answer was affirmative (exit 0) or not (exit 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub lines: Vec<String>,
    pub affirmative: bool,
}

pub fn check(path: &Path, set: &str) -> CliResult<Outcome> {
    let g = load(path)?.graph;
    let z = g.parse_set(set)?;
    let d = &g.digraph;
    let independent = is_independent(d, &z)?;
    let absorbent = is_up_color_absorbent(d, &z)?;
    let zero: Vec<Vertex> = z.iter().filter(|&v| d.color(v) == 0).collect();
    let unabsorbed: Vec<Vertex> = d.vertices().filter(|&v| !z.contains(v) && !is_up_absorbed(d, &z, v)).collect();
    let kernel = independent && absorbent;
    let mut why = vec![
        if zero.is_empty() { "zero-color vertex in set? no".to_string() } else { format!("zero-color vertex in set? yes {}", g.render_vertices(&zero)) },
        format!("independent? {}", if independent { "yes" } else { "no" }),
    ];
    why.push(if unabsorbed.is_empty() {
        "absorbency: every outside vertex absorbed".to_string()
    } else {
        let ids: Vec<&str> = unabsorbed.iter().map(|&v| g.ids[v].as_str()).collect();
        format!("absorbency: {} not absorbed", ids.join(", "))
    });
    Ok(Outcome {
        lines: vec![
            format!("independent: {independent}"),
            format!("absorbent: {absorbent}"),
            format!("kernel: {kernel} ({})", why.join("; ")),
        ],
        affirmative: kernel,
    })
}

pub fn enumerate(oracle: &Oracle, path: &Path, count_only: bool) -> CliResult<Outcome> {
    let g = load(path)?.graph;
    let report = oracle.up_color_kernels(&g.digraph)?;
    let mut lines = Vec::new();
    if !count_only {
        lines.extend(report.kernels.iter().map(|k| g.render_set(k)));
    }
    lines.push(format!("count: {}", report.count));
    if !count_only {
        lines.extend(report.diagnostics.iter().map(|(&v, why)| format!("diagnostic: {} {why}", g.ids[v])));
    }
    Ok(Outcome { lines, affirmative: report.exists })
}

/// Builds a recipe; writes to `out` when given, otherwise returns the document text as the only line.
pub fn build(path: &Path, out: Option<&Path>) -> CliResult<Outcome> {
    let loaded = load(path)?;
    if loaded.recipe.is_none() {
        return Err(CliError::Invalid(format!("{} is a graph document, not a recipe", path.display())));
    }
    let text = loaded.graph.document().to_text();
    let lines = match out {
        Some(out) => {
            write_text(out, &text)?;
            vec![format!("wrote {} ({} vertices, {} arcs)", out.display(), loaded.graph.digraph.order(), loaded.graph.digraph.size())]
        }
        None => vec![text.trim_end().to_string()],
    };
    Ok(Outcome { lines, affirmative: true })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Path,
    #[value(alias = "cycle")]
    EvenCycle,
    Forest,
    Wheel,
    Pendant,
    #[value(alias = "chord")]
    OddCycleChord,
    #[value(alias = "complete")]
    Tournament,
    Grid,
    StrongGrid,
    StarCartesian,
    StarStrong,
    PathBipartite,
    Torus,
    ZykovPath,
    ZykovCycle,
    InCrown,
    ExCrown,
}

impl Family {
    pub fn name(self) -> String {
        clap::ValueEnum::to_possible_value(&self).expect("no skipped variants").get_name().to_string()
    }
}

fn needs(recipe: Option<&Resolved>, family: Family, ops: &[Operation]) -> CliResult<Resolved> {
    let want = || ops.iter().map(|o| o.name()).collect::<Vec<_>>().join(" or ");
    match recipe {
        Some(r) if ops.contains(&r.operation) => Ok(r.clone()),
        Some(r) => Err(CliError::Invalid(format!("family {} needs a {} recipe, got {}", family.name(), want(), r.operation.name()))),
        None => Err(CliError::Invalid(format!("family {} needs a {} recipe, got a plain graph document", family.name(), want()))),
    }
}

/// Runs the decider for `family` on a loaded file.
pub fn decide_loaded(oracle: &Oracle, loaded: &Loaded, family: Family, pendants: Option<&str>) -> CliResult<FamilyDecision> {
    let d = &loaded.graph.digraph;
    let colors = d.colors();
    let recipe = loaded.recipe.as_ref();
    use Operation::*;
    let fd = match family {
        Family::Path => decide_path(d)?,
        Family::EvenCycle => decide_even_cycle(d)?,
        Family::Forest => decide_forest(d)?,
        Family::Wheel => decide_wheel(d)?,
        Family::OddCycleChord => decide_odd_cycle_chord(d)?,
        Family::Tournament => decide_tournament(d)?,
        Family::Pendant => {
            let list = pendants.ok_or_else(|| CliError::Invalid("family pendant needs --pendants with the pendant vertex ids".into()))?;
            decide_pendant_ids(oracle, &loaded.graph, &loaded.graph.parse_set(list)?)?
        }
        Family::Grid => decide_grid(&needs(recipe, family, &[Cartesian])?.factor_digraphs(), colors)?,
        Family::StrongGrid => decide_strong_grid(&needs(recipe, family, &[Strong])?.factor_digraphs(), colors)?,
        Family::StarCartesian => decide_star_cartesian(&needs(recipe, family, &[Cartesian])?.factor_digraphs(), colors)?,
        Family::StarStrong => decide_star_strong(&needs(recipe, family, &[Strong])?.factor_digraphs(), colors)?,
        Family::Torus => decide_torus(&needs(recipe, family, &[Cartesian])?.factor_digraphs(), colors)?,
        Family::PathBipartite => {
            let f = needs(recipe, family, &[Cartesian])?.factor_digraphs();
            let [p, k] = f.as_slice() else {
                return Err(CliError::Invalid("family path-bipartite needs exactly two factors: a path and K_{m,n}".into()));
            };
            // the m-side is the sink side and must come first
            let m = k.sinks().count();
            decide_path_bipartite(p, k, m, colors)?
        }
        Family::ZykovPath | Family::ZykovCycle => {
            let r = needs(recipe, family, &[Zykov])?;
            let (base, fam) = (&r.factors[0].digraph, r.family_digraphs());
            if family == Family::ZykovPath { decide_zykov_path(oracle, base, &fam)? } else { decide_zykov_cycle(oracle, base, &fam)? }
        }
        Family::InCrown | Family::ExCrown => {
            let op = if family == Family::InCrown { InCrown } else { ExCrown };
            let r = needs(recipe, family, &[op])?;
            let (base, fam) = (&r.factors[0].digraph, r.family_digraphs());
            if family == Family::InCrown {
                decide_in_crown(oracle, base, &fam, &r.attachments)?
            } else {
                decide_ex_crown(oracle, base, &fam, &r.attachments)?
            }
        }
    };
    Ok(fd)
}

/// Moves the pendant vertices after the rest, decides, and maps the answer back.
fn decide_pendant_ids(oracle: &Oracle, g: &NamedDigraph, pendant_set: &VertexSet) -> CliResult<FamilyDecision> {
    let d = &g.digraph;
    let order: Vec<Vertex> = d.vertices().filter(|&v| !pendant_set.contains(v)).chain(pendant_set.iter()).collect();
    let mut perm = vec![0; d.order()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    let moved = gen::relabel(d, &perm);
    let nh = d.order() - pendant_set.len();
    let (h, _) = moved.induced(&(0..nh).collect());
    let mut pairs = Vec::new();
    for v in nh..moved.order() {
        match moved.in_neighbors(v) {
            [w] if *w < nh && moved.out_degree(v) == 0 => pairs.push((*w, v)),
            _ => return Err(CliError::Invalid(format!("{} is not a pendant sink with a single arc from the rest", g.ids[order[v]]))),
        }
    }
    let mut fd = decide_pendant_with(oracle, &moved, &h, &pairs)?;
    fd.witness = fd.witness.map(|w| w.mapped(&order));
    if let Some(v) = fd.violated.as_mut() {
        v.vertices = v.vertices.iter().map(|&x| order[x]).collect();
    }
    Ok(fd)
}

pub fn render_decision(g: &NamedDigraph, fd: &FamilyDecision) -> Vec<String> {
    let mut lines = vec![format!("{}: {}", fd.verdict, fd.clause)];
    if let Some(w) = &fd.witness {
        lines.push(format!("witness: {}", g.render_set(w)));
    }
    if let Some(v) = &fd.violated {
        lines.push(format!("violated: {} at {}", v.tag, g.render_vertices(&v.vertices)));
    }
    lines
}

pub fn decide(oracle: &Oracle, path: &Path, family: Family, pendants: Option<&str>) -> CliResult<Outcome> {
    let loaded = load(path)?;
    let fd = decide_loaded(oracle, &loaded, family, pendants)?;
    Ok(Outcome { lines: render_decision(&loaded.graph, &fd), affirmative: fd.verdict })
}

/// Runs a suite; on failure the first counterexample is written to `counterexample`.
pub fn verify(suite: Suite, seed: u64, samples: Option<usize>, max_order: Option<usize>, counterexample: &Path) -> CliResult<Outcome> {
    let samples = samples.unwrap_or(suite.default_samples());
    let report = campaign::run(suite, seed, samples, max_order);
    let mut lines = vec![format!("suite {} seed {seed} samples {samples}", suite.name())];
    lines.extend(report.lines.iter().map(ToString::to_string));
    if let Some(cx) = report.first_failure() {
        let ids: Vec<String> = cx.digraph.vertices().map(|v| format!("v{v}")).collect();
        let doc = GraphDocument::from_digraph(cx.note.clone(), &ids, &cx.digraph);
        write_text(counterexample, &doc.to_text())?;
        lines.push(format!("first counterexample written to {}", counterexample.display()));
    }
    Ok(Outcome { lines, affirmative: report.holds() })
}
