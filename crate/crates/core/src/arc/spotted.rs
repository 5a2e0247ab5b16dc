use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Slope;
use crate::{Error, Result};

/// Unit in which the twist of a spotted arc is counted.
///
/// Disk-model arcs twist by full turns of the spot around the boundary
/// annulus; sphere-model arcs twist by half turns, sliding one endpoint
/// across the marked boundary point. Two half twists make one full push.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TwistUnit {
    Full,
    Half,
}

impl fmt::Display for TwistUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwistUnit::Full => "full",
            TwistUnit::Half => "half",
        })
    }
}

/// An arc in the spotted surface: the arc `base` after the spot has been
/// carried `twist` units around the boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpottedArc {
    pub base: Slope,
    pub twist: i64,
    pub unit: TwistUnit,
}

impl SpottedArc {
    pub fn full(base: Slope, twist: i64) -> SpottedArc {
        SpottedArc { base, twist, unit: TwistUnit::Full }
    }

    pub fn half(base: Slope, twist: i64) -> SpottedArc {
        SpottedArc { base, twist, unit: TwistUnit::Half }
    }

    pub(crate) fn expect_unit(&self, expected: TwistUnit) -> Result<()> {
        if self.unit == expected {
            Ok(())
        } else {
            Err(Error::WrongUnit { expected, found: self.unit })
        }
    }
}

/// Slides the larger endpoint of the arc across the marked point.
pub fn half_twist(x: SpottedArc) -> Result<SpottedArc> {
    x.expect_unit(TwistUnit::Half)?;
    Ok(SpottedArc { twist: x.twist + 1, ..x })
}

/// Pushes the spot `n` full turns around the boundary loop.
pub fn point_push(x: SpottedArc, n: i64) -> SpottedArc {
    let step = match x.unit {
        TwistUnit::Full => n,
        TwistUnit::Half => 2 * n,
    };
    SpottedArc { twist: x.twist + step, ..x }
}

/// Forgets the spot, returning the underlying arc.
pub fn spot_forget(x: SpottedArc) -> Slope {
    x.base
}

impl fmt::Display for SpottedArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}:{}", self.base, self.twist, self.unit)
    }
}

impl FromStr for SpottedArc {
    type Err = Error;

    fn from_str(s: &str) -> Result<SpottedArc> {
        let err = || Error::Parse { kind: "spotted arc", input: s.to_owned() };
        let (base, rest) = s.trim().split_once('@').ok_or_else(err)?;
        let (twist, unit) = rest.split_once(':').ok_or_else(err)?;
        let unit = match unit {
            "full" => TwistUnit::Full,
            "half" => TwistUnit::Half,
            _ => return Err(err()),
        };
        Ok(SpottedArc {
            base: base.parse().map_err(|_| err())?,
            twist: twist.parse().map_err(|_| err())?,
            unit,
        })
    }
}
