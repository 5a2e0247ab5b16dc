use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Ball, Distance, ImplicitGraph, MetricSample};
use crate::Result;

/// Serialisable snapshot of an explored piece of a graph.
///
/// Vertices are stored as codec strings in vertex order; `edges` and
/// `distances` refer to them by index and are sorted, so the output is
/// byte-stable across runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub graph: String,
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    pub distances: Vec<(usize, usize, u32)>,
}

impl GraphDocument {
    pub fn empty(graph: impl Into<String>) -> GraphDocument {
        GraphDocument { graph: graph.into(), vertices: vec![], edges: vec![], distances: vec![] }
    }

    /// The ball with every oracle edge between its members and the distance
    /// of each member from the center.
    pub fn from_ball<G: ImplicitGraph>(g: &G, ball: &Ball<G::Vertex>) -> GraphDocument {
        let mut verts: Vec<&G::Vertex> = ball.members.iter().map(|(v, _)| v).collect();
        verts.sort();
        let index: HashMap<&G::Vertex, usize> = verts.iter().enumerate().map(|(i, v)| (*v, i)).collect();

        let mut edges = BTreeSet::new();
        for (i, v) in verts.iter().enumerate() {
            for w in g.neighbors(v) {
                if let Some(&j) = index.get(&w) {
                    if i < j {
                        edges.insert((i, j));
                    }
                }
            }
        }
        let mut distances: Vec<(usize, usize, u32)> = match index.get(&ball.center) {
            Some(&c) => ball.members.iter().map(|(v, d)| (c, index[v], *d)).collect(),
            None => vec![],
        };
        distances.sort();
        GraphDocument {
            graph: g.name(),
            vertices: verts.iter().map(|v| g.encode(v)).collect(),
            edges: edges.into_iter().collect(),
            distances,
        }
    }

    /// Endpoints and witness paths of a sample; edges are the path steps.
    pub fn from_sample<G: ImplicitGraph>(g: &G, sample: &MetricSample<G::Vertex>) -> GraphDocument {
        let mut verts = BTreeSet::new();
        for e in &sample.entries {
            verts.insert(&e.from);
            verts.insert(&e.to);
            verts.extend(e.path.iter().flatten());
        }
        let verts: Vec<&G::Vertex> = verts.into_iter().collect();
        let index: HashMap<&G::Vertex, usize> = verts.iter().enumerate().map(|(i, v)| (*v, i)).collect();

        let mut edges = BTreeSet::new();
        let mut distances = BTreeSet::new();
        for e in &sample.entries {
            if let Some(path) = &e.path {
                for w in path.windows(2) {
                    let (a, b) = (index[&w[0]], index[&w[1]]);
                    edges.insert((a.min(b), a.max(b)));
                }
            }
            if let Distance::Exact(d) = e.distance {
                distances.insert((index[&e.from], index[&e.to], d));
            }
        }
        GraphDocument {
            graph: g.name(),
            vertices: verts.iter().map(|v| g.encode(v)).collect(),
            edges: edges.into_iter().collect(),
            distances: distances.into_iter().collect(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut out = serde_json::to_string_pretty(self)?;
        out.push('\n');
        Ok(out)
    }

    pub fn from_json(text: &str) -> Result<GraphDocument> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph {:?} {{", self.graph).unwrap();
        for (i, v) in self.vertices.iter().enumerate() {
            writeln!(out, "  {i} [label={v:?}];").unwrap();
        }
        for (a, b) in &self.edges {
            writeln!(out, "  {a} -- {b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::{farey_neighbors, Slope};
    use crate::graph::{ball, FareyGraph, SearchLimits};

    #[test]
    fn empty_document() {
        let doc = GraphDocument::empty("farey");
        let json = doc.to_json().unwrap();
        assert_eq!(GraphDocument::from_json(&json).unwrap(), doc);
        assert_eq!(doc.to_dot(), "graph \"farey\" {\n}\n");
    }

    #[test]
    fn radius_one_ball_dot() {
        let g = FareyGraph::new(4);
        let b = ball(&g, &Slope::ZERO, 1, SearchLimits::default()).unwrap();
        let doc = GraphDocument::from_ball(&g, &b);
        let deg = farey_neighbors(Slope::ZERO, 4).len();
        assert_eq!(doc.vertices.len(), 1 + deg);
        let dot = doc.to_dot();
        assert_eq!(dot.matches("[label=").count(), 1 + deg);
        assert!(dot.contains("0 [label=\"0/1\"];"));
        assert_eq!(GraphDocument::from_json(&doc.to_json().unwrap()).unwrap(), doc);
    }

    #[test]
    fn json_shape() {
        let g = FareyGraph::new(1);
        let b = ball(&g, &Slope::INFINITY, 1, SearchLimits::default()).unwrap();
        let json = GraphDocument::from_ball(&g, &b).to_json().unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["graph"], "farey");
        assert_eq!(v["vertices"], serde_json::json!(["0/1", "inf", "1/1", "-1/1"]));
        assert_eq!(v["edges"], serde_json::json!([[0, 1], [0, 2], [0, 3], [1, 2], [1, 3]]));
        assert_eq!(v["distances"], serde_json::json!([[1, 0, 1], [1, 1, 0], [1, 2, 1], [1, 3, 1]]));
    }
}
