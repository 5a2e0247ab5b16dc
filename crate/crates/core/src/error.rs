use thiserror::Error;

use crate::arc::TwistUnit;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("(0, 0) does not define a slope")]
    ZeroSlope,

    #[error("cannot parse {kind} from {input:?}")]
    Parse { kind: &'static str, input: String },

    #[error("expected a {expected} twist unit, found {found}")]
    WrongUnit { expected: TwistUnit, found: TwistUnit },

    #[error("arc system must be nonempty")]
    EmptyArcSystem,

    #[error("arcs {0} and {1} intersect and cannot lie in one arc system")]
    NotDisjoint(String, String),

    #[error("distance cap must be positive")]
    ZeroCap,

    #[error("vertex {vertex} is not in graph {graph}")]
    InvalidVertex { graph: String, vertex: String },

    #[error("distance between {from} and {to} exceeds cap {cap}")]
    BeyondCap { from: String, to: String, cap: u32 },

    #[error(
        "search budget exceeded: visited {visited} vertices (limit {limit}), \
         last complete radius {radius}"
    )]
    BudgetExceeded { visited: usize, limit: usize, radius: u32 },

    #[error("distances up to {needed} are needed but the distance cap is {cap}")]
    DistanceCap { needed: u32, cap: u32 },

    #[error("seed slopes {0} and {1} are not adjacent")]
    SeedNotAdjacent(String, String),

    #[error("geodesic ray stopped after {} steps: [{}]", .longest.len().saturating_sub(1), .longest.join(", "))]
    RayExtension { longest: Vec<String> },

    #[error("unknown graph {0:?}")]
    UnknownGraph(String),

    #[error("unknown suite {0:?} (expected arc, engine, omega, sphere or all)")]
    UnknownSuite(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
