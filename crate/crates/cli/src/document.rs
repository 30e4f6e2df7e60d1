//! The on-disk graph format.
//!
//! ```json
//! {
//!   "name": "fig1",
//!   "vertices": [
//!     {"id": "x0", "color": 0},
//!     {"id": "x1", "color": 1}
//!   ],
//!   "arcs": [
//!     ["x1", "x0"]
//!   ]
//! }
//! ```
//!
//! Vertex order in the file is the index order of the loaded digraph.

use std::collections::{BTreeSet, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};
use upkernel::{Color, ColoredDigraph, Vertex, VertexSet};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexEntry {
    pub id: String,
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub name: String,
    pub vertices: Vec<VertexEntry>,
    pub arcs: Vec<(String, String)>,
}

/// A validated document: the digraph plus the id of each vertex index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedDigraph {
    pub name: String,
    pub ids: Vec<String>,
    pub digraph: ColoredDigraph,
}

impl GraphDocument {
    pub fn from_digraph(name: impl Into<String>, ids: &[String], d: &ColoredDigraph) -> Self {
        Self {
            name: name.into(),
            vertices: d.vertices().map(|v| VertexEntry { id: ids[v].clone(), color: d.color(v) }).collect(),
            arcs: d.arcs().iter().map(|&(u, v)| (ids[u].clone(), ids[v].clone())).collect(),
        }
    }

    /// Checks the document invariants and builds the digraph.
    pub fn validate(&self) -> CliResult<NamedDigraph> {
        let mut index = HashMap::with_capacity(self.vertices.len());
        for (i, v) in self.vertices.iter().enumerate() {
            if index.insert(v.id.as_str(), i).is_some() {
                return Err(CliError::Invalid(format!("duplicate vertex id {:?}", v.id)));
            }
        }
        let lookup = |id: &str| index.get(id).copied().ok_or_else(|| CliError::Invalid(format!("arc references undeclared vertex {id:?}")));
        let mut seen = BTreeSet::new();
        let mut arcs = Vec::with_capacity(self.arcs.len());
        for (t, h) in &self.arcs {
            let arc = (lookup(t)?, lookup(h)?);
            if arc.0 == arc.1 {
                return Err(CliError::Invalid(format!("self-loop at {t:?}")));
            }
            if !seen.insert(arc) {
                return Err(CliError::Invalid(format!("duplicate arc [{t:?}, {h:?}]")));
            }
            arcs.push(arc);
        }
        let colors = self.vertices.iter().map(|v| v.color).collect();
        Ok(NamedDigraph {
            name: self.name.clone(),
            ids: self.vertices.iter().map(|v| v.id.clone()).collect(),
            digraph: ColoredDigraph::new(colors, arcs)?,
        })
    }

    /// One vertex and one arc per line, fields in declaration order.
    pub fn to_text(&self) -> String {
        let item = |s: String, last: bool| format!("    {s}{}\n", if last { "" } else { "," });
        let mut out = String::from("{\n");
        out.push_str(&format!("  \"name\": {},\n", json(&self.name)));
        out.push_str("  \"vertices\": [\n");
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&item(format!("{{\"id\": {}, \"color\": {}}}", json(&v.id), v.color), i + 1 == self.vertices.len()));
        }
        out.push_str("  ],\n  \"arcs\": [\n");
        for (i, (t, h)) in self.arcs.iter().enumerate() {
            out.push_str(&item(format!("[{}, {}]", json(t), json(h)), i + 1 == self.arcs.len()));
        }
        out.push_str("  ]\n}\n");
        out
    }

    pub fn parse(text: &str, origin: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::parse(origin, &e))
    }
}

fn json(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

impl NamedDigraph {
    pub fn document(&self) -> GraphDocument {
        GraphDocument::from_digraph(self.name.clone(), &self.ids, &self.digraph)
    }

    pub fn vertex(&self, id: &str) -> CliResult<Vertex> {
        self.ids.iter().position(|x| x == id).ok_or_else(|| CliError::Invalid(format!("no vertex with id {id:?}")))
    }

    /// Parses `"a,b,c"`; blanks around ids are ignored, an empty list is the empty set.
    pub fn parse_set(&self, list: &str) -> CliResult<VertexSet> {
        list.split(',').map(str::trim).filter(|s| !s.is_empty()).map(|id| self.vertex(id)).collect()
    }

    /// `{a, b}` in index order.
    pub fn render_set(&self, set: &VertexSet) -> String {
        render_ids(set.iter().map(|v| self.ids[v].as_str()))
    }

    pub fn render_vertices(&self, vs: &[Vertex]) -> String {
        render_ids(vs.iter().map(|&v| self.ids[v].as_str()))
    }
}

pub fn render_ids<'a>(ids: impl Iterator<Item = &'a str>) -> String {
    format!("{{{}}}", ids.collect::<Vec<_>>().join(", "))
}

pub fn read_text(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub fn write_text(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> GraphDocument {
        GraphDocument {
            name: "p".into(),
            vertices: vec![VertexEntry { id: "a".into(), color: 2 }, VertexEntry { id: "b\"q".into(), color: 0 }],
            arcs: vec![("a".into(), "b\"q".into())],
        }
    }

    #[test]
    fn text_round_trip() {
        let doc = sample();
        assert_eq!(GraphDocument::parse(&doc.to_text(), "t").unwrap(), doc);
    }

    #[test]
    fn empty_lists_render() {
        let doc = GraphDocument { name: "e".into(), vertices: vec![], arcs: vec![] };
        assert_eq!(GraphDocument::parse(&doc.to_text(), "t").unwrap(), doc);
    }

    #[test]
    fn invariants() {
        let mut doc = sample();
        doc.arcs.push(("a".into(), "b\"q".into()));
        assert!(doc.validate().unwrap_err().to_string().contains("duplicate arc"));
        let mut doc = sample();
        doc.arcs = vec![("a".into(), "a".into())];
        assert!(doc.validate().unwrap_err().to_string().contains("self-loop"));
        let mut doc = sample();
        doc.arcs = vec![("a".into(), "z".into())];
        assert!(doc.validate().unwrap_err().to_string().contains("\"z\""));
        let mut doc = sample();
        doc.vertices[1].id = "a".into();
        assert!(doc.validate().is_err());
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = GraphDocument::parse("{\n  \"name\": \"x\",\n  \"vertices\": [oops]\n}", "bad.json").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("bad.json:3:"), "{msg}");
    }

    #[test]
    fn sets() {
        let g = sample().validate().unwrap();
        assert_eq!(g.parse_set(" a ").unwrap(), VertexSet::from([0]));
        assert!(g.parse_set("").unwrap().is_empty());
        assert!(g.parse_set("a,zz").is_err());
        assert_eq!(g.render_set(&VertexSet::from([0, 1])), "{a, b\"q}");
    }
}
