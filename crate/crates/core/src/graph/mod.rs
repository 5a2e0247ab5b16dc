//! Exact metric queries on graphs given by a vertex codec and an adjacency
//! oracle.
//!
//! Nothing is materialised up front: every query explores the graph lazily
//! from its endpoints, bounded by a distance cap and a visited-vertex
//! budget. Distances beyond the cap come back as lower bounds.

mod export;
mod farey;
mod search;

use std::fmt;
use std::fmt::Debug;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::Result;

pub use export::GraphDocument;
pub use farey::FareyGraph;
pub use search::{
    ball, bfs_tree, distance, distance_unidirectional, geodesic, sample, Ball, BfsTree,
    MetricSample, SampleEntry,
};

/// A graph known only through its vertex codec and adjacency oracle.
///
/// Implementations must be deterministic and symmetric: if `v` lists `w`
/// then `w` lists `v`, and repeated calls return the same list in the same
/// order. The vertex ordering is the tie-break order for geodesics and the
/// sort order of exports.
pub trait ImplicitGraph: Sync {
    type Vertex: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn name(&self) -> String;

    /// Canonical text form of a vertex.
    fn encode(&self, v: &Self::Vertex) -> String;

    fn decode(&self, text: &str) -> Result<Self::Vertex>;

    /// Whether `v` is a vertex under the graph's caps.
    fn contains(&self, v: &Self::Vertex) -> bool;

    fn neighbors(&self, v: &Self::Vertex) -> Vec<Self::Vertex>;
}

/// Exact distance, or a lower bound when the search stopped at its cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Distance {
    Exact(u32),
    AtLeast(u32),
}

impl Distance {
    pub fn exact(self) -> Option<u32> {
        match self {
            Distance::Exact(d) => Some(d),
            Distance::AtLeast(_) => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Exact(d) => write!(f, "{d}"),
            Distance::AtLeast(d) => write!(f, ">={d}"),
        }
    }
}

/// Resource budget for a single query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    pub max_visited: usize,
}

impl SearchLimits {
    pub const DEFAULT_MAX_VISITED: usize = 4_000_000;
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_visited: Self::DEFAULT_MAX_VISITED }
    }
}

/// Work done by a query.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub visited: usize,
    pub edges_scanned: usize,
}

impl std::ops::AddAssign for SearchStats {
    fn add_assign(&mut self, rhs: Self) {
        self.visited += rhs.visited;
        self.edges_scanned += rhs.edges_scanned;
    }
}
