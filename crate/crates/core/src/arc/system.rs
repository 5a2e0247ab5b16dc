use super::{disjoint, Slope};
use crate::{Error, Result};

/// A nonempty set of pairwise disjoint arcs, as cut out of the base surface
/// by the boundary of a disk. Stored sorted in Stern–Brocot order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArcSystem {
    arcs: Vec<Slope>,
}

impl ArcSystem {
    pub fn new(arcs: impl IntoIterator<Item = Slope>) -> Result<ArcSystem> {
        let mut arcs: Vec<Slope> = arcs.into_iter().collect();
        arcs.sort();
        arcs.dedup();
        if arcs.is_empty() {
            return Err(Error::EmptyArcSystem);
        }
        for (i, &a) in arcs.iter().enumerate() {
            if let Some(&b) = arcs[i + 1..].iter().find(|&&b| !disjoint(a, b)) {
                return Err(Error::NotDisjoint(a.to_string(), b.to_string()));
            }
        }
        Ok(ArcSystem { arcs })
    }

    pub fn singleton(arc: Slope) -> ArcSystem {
        ArcSystem { arcs: vec![arc] }
    }

    pub fn arcs(&self) -> &[Slope] {
        &self.arcs
    }

    /// Stern–Brocot least arc.
    pub fn least(&self) -> Slope {
        self.arcs[0]
    }
}
