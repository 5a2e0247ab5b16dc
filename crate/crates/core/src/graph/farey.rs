use super::ImplicitGraph;
use crate::arc::{farey_neighbors, Slope};
use crate::Result;

/// The Farey graph restricted to slopes of height at most `height_cap`.
///
/// Geodesics between two slopes only pass through the ladder of Farey
/// triangles separating them, whose vertices are no higher than the
/// endpoints, so distances between vertices under the cap are the true
/// Farey distances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FareyGraph {
    pub height_cap: u64,
}

impl FareyGraph {
    pub fn new(height_cap: u64) -> FareyGraph {
        FareyGraph { height_cap }
    }
}

impl ImplicitGraph for FareyGraph {
    type Vertex = Slope;

    fn name(&self) -> String {
        "farey".to_owned()
    }

    fn encode(&self, v: &Slope) -> String {
        v.to_string()
    }

    fn decode(&self, text: &str) -> Result<Slope> {
        text.parse()
    }

    fn contains(&self, v: &Slope) -> bool {
        v.height() <= self.height_cap
    }

    fn neighbors(&self, v: &Slope) -> Vec<Slope> {
        farey_neighbors(*v, self.height_cap)
    }
}
