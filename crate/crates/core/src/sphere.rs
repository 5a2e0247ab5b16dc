//! The doubled model: spheres in the once-spotted doubled handlebody that
//! are doubles of interval bundles over spotted arcs.
//!
//! A spotted arc on `F` (one marked point on the boundary) is a slope
//! together with a count `h` of half twists across the marked point. Doubling
//! sends it to a sphere, and forgetting the marked point on either side
//! commutes with doubling.

use std::fmt;
use std::str::FromStr;

use crate::arc::{half_twist, spot_forget, Slope, SpottedArc, TwistUnit};
use crate::graph::ImplicitGraph;
use crate::product::twisted_neighbors;
use crate::{Error, Result};

/// Registered name of [`SphereGraph`].
pub const SPHERE_GRAPH_NAME: &str = "sphere(g=2)";
/// Registered name of [`SpottedArcGraph`].
pub const SPOTTED_ARC_GRAPH_NAME: &str = "arc(g=2,spotted)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpottedSphere {
    pub arc: Slope,
    pub h: i64,
}

impl SpottedSphere {
    pub fn new(arc: Slope, h: i64) -> SpottedSphere {
        SpottedSphere { arc, h }
    }
}

impl fmt::Display for SpottedSphere {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}:sph", self.arc, self.h)
    }
}

impl FromStr for SpottedSphere {
    type Err = Error;

    fn from_str(s: &str) -> Result<SpottedSphere> {
        let err = || Error::Parse { kind: "spotted sphere", input: s.to_owned() };
        let body = s.trim().strip_suffix(":sph").ok_or_else(err)?;
        let (arc, h) = body.split_once('@').ok_or_else(err)?;
        Ok(SpottedSphere { arc: arc.parse().map_err(|_| err())?, h: h.parse().map_err(|_| err())? })
    }
}

/// Doubles the interval bundle over a half-twist spotted arc.
pub fn upsilon(x: SpottedArc) -> Result<SpottedSphere> {
    x.expect_unit(TwistUnit::Half)?;
    Ok(SpottedSphere { arc: x.base, h: x.twist })
}

/// Doubling for the unspotted surface. Spheres over unspotted arcs are
/// indexed by the arc itself.
pub fn upsilon0(arc: Slope) -> Slope {
    arc
}

pub fn sphere_spot_forget(s: SpottedSphere) -> Slope {
    s.arc
}

/// Essential intersection circles between the spheres over the same arc
/// with `h` and `h2` half twists.
pub fn intersection_circles(h: i64, h2: i64) -> u64 {
    h.abs_diff(h2).saturating_sub(1)
}

/// Retraction back to spotted arcs; a left inverse of [`upsilon`].
pub fn theta_sphere(s: SpottedSphere) -> SpottedArc {
    SpottedArc::half(s.arc, s.h)
}

/// Half twist applied on the sphere side.
pub fn twist_sphere(s: SpottedSphere) -> SpottedSphere {
    let x = half_twist(theta_sphere(s)).expect("theta_sphere yields half-twist arcs");
    SpottedSphere { arc: spot_forget(x), h: x.twist }
}

/// Spheres over spotted arcs: distinct spheres are adjacent when their arcs
/// are disjoint and their half-twist counts differ by at most one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SphereGraph {
    pub height_cap: u64,
}

impl SphereGraph {
    pub fn new(height_cap: u64) -> SphereGraph {
        SphereGraph { height_cap }
    }
}

impl ImplicitGraph for SphereGraph {
    type Vertex = SpottedSphere;

    fn name(&self) -> String {
        SPHERE_GRAPH_NAME.to_owned()
    }

    fn encode(&self, v: &SpottedSphere) -> String {
        v.to_string()
    }

    fn decode(&self, text: &str) -> Result<SpottedSphere> {
        text.parse()
    }

    fn contains(&self, v: &SpottedSphere) -> bool {
        v.arc.height() <= self.height_cap
    }

    fn neighbors(&self, v: &SpottedSphere) -> Vec<SpottedSphere> {
        twisted_neighbors(v.arc, v.h, self.height_cap, 1)
            .into_iter()
            .map(|(arc, h)| SpottedSphere { arc, h })
            .collect()
    }
}

/// Arc graph of the surface with a marked boundary point, on half-twist
/// spotted arcs. Adjacency is realizability of disjoint representatives:
/// disjoint underlying arcs and half-twist counts at most one apart.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpottedArcGraph {
    pub height_cap: u64,
}

impl ImplicitGraph for SpottedArcGraph {
    type Vertex = SpottedArc;

    fn name(&self) -> String {
        SPOTTED_ARC_GRAPH_NAME.to_owned()
    }

    fn encode(&self, v: &SpottedArc) -> String {
        v.to_string()
    }

    fn decode(&self, text: &str) -> Result<SpottedArc> {
        let x: SpottedArc = text.parse()?;
        x.expect_unit(TwistUnit::Half)?;
        Ok(x)
    }

    fn contains(&self, v: &SpottedArc) -> bool {
        v.unit == TwistUnit::Half && v.base.height() <= self.height_cap
    }

    fn neighbors(&self, v: &SpottedArc) -> Vec<SpottedArc> {
        twisted_neighbors(v.base, v.twist, self.height_cap, 1)
            .into_iter()
            .map(|(base, h)| SpottedArc::half(base, h))
            .collect()
    }
}
