//! Combinatorial model of arcs on the one-holed torus, the spotted disk
//! graph construction built from them, and the matching sphere-graph model.
//!
//! The crate is organised bottom-up:
//!
//! * [`arc`] holds exact slope arithmetic (the Farey model of the arc graph)
//!   and the twisting actions on spotted arcs.
//! * [`graph`] is a small exact-metric engine over implicitly defined graphs.
//! * [`handlebody`] builds the spotted disk model `Ω` together with the maps
//!   between it and the product of the arc graph with the integers.
//! * [`sphere`] is the doubled counterpart over spotted spheres.
//! * [`certify`] assembles flat certificates and [`suite`] runs the property
//!   suites, both used by the command-line tool.

pub mod arc;
pub mod certify;
mod error;
pub mod graph;
pub mod handlebody;
mod product;
pub mod sphere;
pub mod suite;

pub use error::{Error, Result};
