//! The spotted disk model.
//!
//! For the genus-two handlebody viewed as the trivial interval bundle over a
//! one-holed torus `F`, disks meeting the bundle generator twice are interval
//! bundles over arcs of `F`, so they are indexed by slopes. Adding a spot on
//! the generator and pushing it around the annulus between the two lifts of
//! the generator yields the family `Ω` of spotted disks indexed by
//! `(slope, k)`, where `k` counts full pushes.
//!
//! Maps provided here:
//!
//! | map | function |
//! |-----|----------|
//! | arc to disk over it | [`ibundle_over_arc`] |
//! | retraction of arc systems | [`theta0`] |
//! | spot removal | [`spot_removal`] |
//! | inclusion of unspotted disks | [`inject`] |
//! | point push | [`push_disk`] |
//! | retraction to arcs | [`theta`] |
//! | twist coordinate | [`xi`] |
//! | product coordinates and inverse | [`psi`], [`psi_inv`] |

use std::fmt;
use std::str::FromStr;

use crate::arc::{ArcSystem, Slope};
use crate::graph::{distance, Distance, FareyGraph, ImplicitGraph, SearchLimits};
use crate::product::twisted_neighbors;
use crate::{Error, Result};

/// Registered name of [`OmegaGraph`].
pub const OMEGA_GRAPH_NAME: &str = "omega(g=2)";

/// A disk in the unspotted handlebody meeting the generator twice: the
/// interval bundle over `arc`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Disk0 {
    pub arc: Slope,
}

/// The disk obtained from the one over `arc` by pushing the spot `k` full
/// turns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpottedDisk {
    pub arc: Slope,
    pub k: i64,
}

impl SpottedDisk {
    pub fn new(arc: Slope, k: i64) -> SpottedDisk {
        SpottedDisk { arc, k }
    }
}

impl fmt::Display for SpottedDisk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.arc, self.k)
    }
}

impl FromStr for SpottedDisk {
    type Err = Error;

    fn from_str(s: &str) -> Result<SpottedDisk> {
        let err = || Error::Parse { kind: "spotted disk", input: s.to_owned() };
        let (arc, k) = s.trim().split_once('@').ok_or_else(err)?;
        Ok(SpottedDisk { arc: arc.parse().map_err(|_| err())?, k: k.parse().map_err(|_| err())? })
    }
}

pub fn ibundle_over_arc(arc: Slope) -> Disk0 {
    Disk0 { arc }
}

/// Picks one component of the arc system cut out by a disk: the
/// Stern–Brocot least one.
pub fn theta0(system: &ArcSystem) -> Slope {
    system.least()
}

/// Removes the spot. The image is the disk over the same arc, recorded as
/// the arc system it cuts from `F`.
pub fn spot_removal(x: SpottedDisk) -> ArcSystem {
    ArcSystem::singleton(x.arc)
}

pub fn inject(d: Disk0) -> SpottedDisk {
    SpottedDisk { arc: d.arc, k: 0 }
}

pub fn push_disk(x: SpottedDisk, n: i64) -> SpottedDisk {
    SpottedDisk { k: x.k + n, ..x }
}

pub fn theta(x: SpottedDisk) -> Slope {
    theta0(&spot_removal(x))
}

/// Twist coordinate. Exact in this model: the number of pushes.
pub fn xi(x: SpottedDisk) -> i64 {
    x.k
}

pub fn psi(x: SpottedDisk) -> (Slope, i64) {
    (theta(x), xi(x))
}

pub fn psi_inv(arc: Slope, k: i64) -> SpottedDisk {
    push_disk(inject(ibundle_over_arc(arc)), k)
}

/// Essential intersections between the disks pushed `k` and `l` times.
pub fn annular_intersection(k: i64, l: i64) -> u64 {
    (2 * k.abs_diff(l)).saturating_sub(2)
}

/// Product distance `d_A(α, β) + |a − b|`, with the arc distance measured in
/// `farey` up to `cap`.
pub fn d0(
    farey: &FareyGraph,
    x: SpottedDisk,
    y: SpottedDisk,
    cap: u32,
    limits: SearchLimits,
) -> Result<Distance> {
    let dk = x.k.abs_diff(y.k) as u32;
    Ok(match distance(farey, &x.arc, &y.arc, cap, limits)? {
        Distance::Exact(d) => Distance::Exact(d + dk),
        Distance::AtLeast(d) => Distance::AtLeast(d + dk),
    })
}

pub fn omega_distance(
    g: &OmegaGraph,
    x: SpottedDisk,
    y: SpottedDisk,
    cap: u32,
    limits: SearchLimits,
) -> Result<Distance> {
    distance(g, &x, &y, cap, limits)
}

/// The union of all pushes of the injected unspotted disks. Two spotted
/// disks are adjacent when they are distinct, their arcs are disjoint and
/// their push counts differ by at most one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OmegaGraph {
    pub height_cap: u64,
    twist_gap: i64,
}

impl OmegaGraph {
    pub fn new(height_cap: u64) -> OmegaGraph {
        OmegaGraph { height_cap, twist_gap: 1 }
    }

    /// Variant with a widened push-count gap, used only as a negative control.
    pub(crate) fn with_twist_gap(height_cap: u64, twist_gap: i64) -> OmegaGraph {
        OmegaGraph { height_cap, twist_gap }
    }

    pub fn farey(&self) -> FareyGraph {
        FareyGraph::new(self.height_cap)
    }
}

impl ImplicitGraph for OmegaGraph {
    type Vertex = SpottedDisk;

    fn name(&self) -> String {
        OMEGA_GRAPH_NAME.to_owned()
    }

    fn encode(&self, v: &SpottedDisk) -> String {
        v.to_string()
    }

    fn decode(&self, text: &str) -> Result<SpottedDisk> {
        text.parse()
    }

    fn contains(&self, v: &SpottedDisk) -> bool {
        v.arc.height() <= self.height_cap
    }

    fn neighbors(&self, v: &SpottedDisk) -> Vec<SpottedDisk> {
        twisted_neighbors(v.arc, v.k, self.height_cap, self.twist_gap)
            .into_iter()
            .map(|(arc, k)| SpottedDisk { arc, k })
            .collect()
    }
}
