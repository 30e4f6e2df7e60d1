//! Recipe files: a composite digraph described by operation and parts.
//!
//! ```json
//! {
//!   "name": "fig6",
//!   "operation": "cartesian",
//!   "factors": [{"kind": "cycle", "n": 4}, {"kind": "cycle", "n": 6}],
//!   "coloring": {"fill": 1, "overrides": {"(x0,x0)": 2}}
//! }
//! ```
//!
//! Generated parts get canonical ids: `x0..` for paths and cycles (arcs
//! `x_i -> x_{i-1}`), `s0` for a star center and `s1..` for its leaves,
//! `x0..` / `y0..` for the two sides of a complete bipartite digraph, and
//! `x0..` plus hub `h` for a wheel. Built digraphs name their vertices
//! `(a,b)` for products and Zykov sums, `(u,v)` for line digraphs, and
//! `H<i>.<id>` for the vertices of the `i`-th crown member (from 1).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use upkernel::constructors::{
    directed_cycle, directed_path, in_star, oriented_complete_bipartite, out_star, wheel, Attachment, BipartiteDirection,
    Built, Layout, Operation, ProductRecipe, Spoke,
};
use upkernel::{Color, ColoredDigraph};

use crate::document::{read_text, GraphDocument, NamedDigraph};
use crate::error::{CliError, CliResult};

const MAX_NESTING: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecipeDocument {
    pub name: String,
    pub operation: String,
    pub factors: Vec<Part>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub family: Vec<Part>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub attachments: Vec<AttachmentDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<ColoringDoc>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    M,
    N,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpokeDoc {
    ToHub,
    FromHub,
    Both,
}

/// A factor, base or family member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Part {
    Path {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        colors: Option<Vec<Color>>,
    },
    Cycle {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        colors: Option<Vec<Color>>,
    },
    InStar {
        leaves: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        colors: Option<Vec<Color>>,
    },
    OutStar {
        leaves: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        colors: Option<Vec<Color>>,
    },
    /// `K_{m,n}` with every arc pointing toward the named side.
    Bipartite {
        m: usize,
        n: usize,
        toward: Side,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        colors: Option<Vec<Color>>,
    },
    Wheel {
        spokes: Vec<SpokeDoc>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        colors: Option<Vec<Color>>,
    },
    /// A graph or recipe file, relative to the recipe's directory.
    File { path: String },
    Inline { graph: GraphDocument },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AttachmentDoc {
    /// Index into `family`, from 0.
    pub member: usize,
    pub base: String,
    /// Member vertex ids; all of the member when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ColoringDoc {
    /// One color per built vertex, in build order.
    List(Vec<Color>),
    Fill {
        fill: Color,
        #[serde(default)]
        overrides: BTreeMap<String, Color>,
    },
}

/// A recipe with every part loaded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolved {
    pub operation: Operation,
    pub factors: Vec<NamedDigraph>,
    pub family: Vec<NamedDigraph>,
    pub attachments: Vec<Attachment>,
    pub built: NamedDigraph,
}

impl Resolved {
    pub fn factor_digraphs(&self) -> Vec<ColoredDigraph> {
        self.factors.iter().map(|f| f.digraph.clone()).collect()
    }

    pub fn family_digraphs(&self) -> Vec<ColoredDigraph> {
        self.family.iter().map(|f| f.digraph.clone()).collect()
    }
}

/// What a file on disk turned out to be.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loaded {
    pub graph: NamedDigraph,
    pub recipe: Option<Resolved>,
}

pub fn load(path: &Path) -> CliResult<Loaded> {
    load_nested(path, 0)
}

fn load_nested(path: &Path, depth: usize) -> CliResult<Loaded> {
    if depth > MAX_NESTING {
        return Err(CliError::Invalid(format!("{}: recipes nested more than {MAX_NESTING} deep", path.display())));
    }
    let text = read_text(path)?;
    let origin = path.display().to_string();
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| CliError::parse(&origin, &e))?;
    if value.get("operation").is_some() {
        let doc: RecipeDocument = serde_json::from_str(&text).map_err(|e| CliError::parse(&origin, &e))?;
        let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
        let resolved = doc.resolve(&dir, depth)?;
        Ok(Loaded { graph: resolved.built.clone(), recipe: Some(resolved) })
    } else {
        let graph = GraphDocument::parse(&text, &origin)?.validate()?;
        Ok(Loaded { graph, recipe: None })
    }
}

fn xs(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

fn generated(name: String, ids: Vec<String>, d: ColoredDigraph, colors: &Option<Vec<Color>>) -> CliResult<NamedDigraph> {
    let digraph = match colors {
        Some(c) => d.with_colors(c.clone())?,
        None => d,
    };
    Ok(NamedDigraph { name, ids, digraph })
}

impl Part {
    fn load(&self, dir: &Path, depth: usize) -> CliResult<NamedDigraph> {
        match self {
            Part::Path { n, colors } => generated(format!("P{n}"), xs(*n), directed_path(*n)?, colors),
            Part::Cycle { n, colors } => generated(format!("C{n}"), xs(*n), directed_cycle(*n)?, colors),
            Part::InStar { leaves, colors } | Part::OutStar { leaves, colors } => {
                let (d, sign) = if matches!(self, Part::InStar { .. }) { (in_star(*leaves)?, '-') } else { (out_star(*leaves)?, '+') };
                let ids = (0..=*leaves).map(|i| format!("s{i}")).collect();
                generated(format!("S{sign}{leaves}"), ids, d, colors)
            }
            Part::Bipartite { m, n, toward, colors } => {
                let dir = match toward {
                    Side::N => BipartiteDirection::MToN,
                    Side::M => BipartiteDirection::NToM,
                };
                let ids = xs(*m).into_iter().chain((0..*n).map(|j| format!("y{j}"))).collect();
                generated(format!("K{m},{n}"), ids, oriented_complete_bipartite(*m, *n, dir)?, colors)
            }
            Part::Wheel { spokes, colors } => {
                let s: Vec<Spoke> = spokes
                    .iter()
                    .map(|s| match s {
                        SpokeDoc::ToHub => Spoke::ToHub,
                        SpokeDoc::FromHub => Spoke::FromHub,
                        SpokeDoc::Both => Spoke::Both,
                    })
                    .collect();
                let mut ids = xs(s.len());
                ids.push("h".into());
                generated(format!("W{}", s.len()), ids, wheel(&s)?, colors)
            }
            Part::File { path } => {
                let full: PathBuf = dir.join(path);
                Ok(load_nested(&full, depth + 1)?.graph)
            }
            Part::Inline { graph } => graph.validate(),
        }
    }
}

impl RecipeDocument {
    pub fn parse(text: &str, origin: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::parse(origin, &e))
    }

    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("recipes always serialize");
        s.push('\n');
        s
    }

    /// Loads every part relative to `dir` and builds the digraph.
    pub fn resolve(&self, dir: &Path, depth: usize) -> CliResult<Resolved> {
        let operation = Operation::parse(&self.operation).ok_or_else(|| {
            CliError::Invalid(format!(
                "unknown operation {:?}; expected cartesian, strong, zykov, in-crown, ex-crown, line-outer or line-inner",
                self.operation
            ))
        })?;
        let mut factors = self.factors.iter().map(|p| p.load(dir, depth)).collect::<CliResult<Vec<_>>>()?;
        let mut family = self.family.iter().map(|p| p.load(dir, depth)).collect::<CliResult<Vec<_>>>()?;
        let mut attachments = Vec::with_capacity(self.attachments.len());
        for a in &self.attachments {
            let base = factors.first().ok_or_else(|| CliError::Invalid("attachments need a base factor".into()))?;
            let member = family.get(a.member).ok_or_else(|| CliError::Invalid(format!("attachment names missing family member {}", a.member)))?;
            let vertices = match &a.vertices {
                Some(ids) => ids.iter().map(|id| member.vertex(id)).collect::<CliResult<Vec<_>>>()?,
                None => member.digraph.vertices().collect(),
            };
            attachments.push(Attachment { member: a.member, base: base.vertex(&a.base)?, vertices });
        }
        let mut recipe = ProductRecipe::new(operation, factors.iter().map(|f| f.digraph.clone()).collect());
        recipe.family = family.iter().map(|f| f.digraph.clone()).collect();
        recipe.attachments = attachments.clone();
        let built = recipe.build()?;
        let ids = built_ids(operation, &built, &factors, &family);
        let digraph = match &self.coloring {
            None => built.digraph,
            Some(ColoringDoc::List(c)) => built.digraph.with_colors(c.clone())?,
            Some(ColoringDoc::Fill { fill, overrides }) => {
                let mut c = vec![*fill; built.digraph.order()];
                for (id, &color) in overrides {
                    let v = ids.iter().position(|x| x == id).ok_or_else(|| CliError::Invalid(format!("coloring override for unknown vertex {id:?}")))?;
                    c[v] = color;
                }
                built.digraph.with_colors(c)?
            }
        };
        // the crown and Zykov deciders read colors from the parts
        if let (Some(_), Layout::Blocks(blocks)) = (&self.coloring, &built.layout) {
            let c = digraph.colors();
            let parts = if operation == Operation::Zykov { family.iter_mut().collect::<Vec<_>>() } else { factors.iter_mut().take(1).chain(family.iter_mut()).collect() };
            for (part, range) in parts.into_iter().zip(&blocks.0) {
                part.digraph = part.digraph.with_colors(c[range.clone()].to_vec())?;
            }
        }
        // a round trip through the document catches id collisions
        let built = GraphDocument::from_digraph(self.name.clone(), &ids, &digraph).validate()?;
        Ok(Resolved { operation, factors, family, attachments, built })
    }
}

fn built_ids(operation: Operation, built: &Built, factors: &[NamedDigraph], family: &[NamedDigraph]) -> Vec<String> {
    match &built.layout {
        Layout::Product(index) => (0..index.len())
            .map(|v| {
                let parts: Vec<&str> = index.coords(v).iter().zip(factors).map(|(&c, f)| f.ids[c].as_str()).collect();
                format!("({})", parts.join(","))
            })
            .collect(),
        Layout::Blocks(_) if operation == Operation::Zykov => {
            let base = &factors[0];
            family.iter().enumerate().flat_map(|(v, h)| h.ids.iter().map(move |id| format!("({},{id})", base.ids[v]))).collect()
        }
        Layout::Blocks(_) => {
            let base = &factors[0];
            base.ids
                .iter()
                .cloned()
                .chain(family.iter().enumerate().flat_map(|(i, h)| h.ids.iter().map(move |id| format!("H{}.{id}", i + 1))))
                .collect()
        }
        Layout::Line(origin) => {
            let base = &factors[0];
            origin.iter().map(|&(u, v)| format!("({},{})", base.ids[u], base.ids[v])).collect()
        }
    }
}
