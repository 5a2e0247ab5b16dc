//! Exact arithmetic of essential arcs on the one-holed torus.
//!
//! An arc is recorded by its slope, and two distinct arcs can be realized
//! disjointly exactly when their slopes are Farey neighbours. Spotted arcs
//! add an integer twist around the boundary, counted in full or half turns.

mod slope;
mod spotted;
mod system;

pub use slope::{canonicalize, disjoint, farey_neighbors, pairing, Slope};
pub use spotted::{half_twist, point_push, spot_forget, SpottedArc, TwistUnit};
pub use system::ArcSystem;
