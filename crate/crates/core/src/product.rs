use crate::arc::{farey_neighbors, Slope};

/// Neighbours of `(arc, twist)` in the product of the capped Farey graph with
/// the integers: distinct pairs whose arcs are disjoint (or equal) and whose
/// twists differ by at most `gap`. Sorted by arc, then twist.
pub(crate) fn twisted_neighbors(arc: Slope, twist: i64, height_cap: u64, gap: i64) -> Vec<(Slope, i64)> {
    let mut arcs = farey_neighbors(arc, height_cap);
    arcs.push(arc);
    arcs.sort();
    let mut out = Vec::with_capacity(arcs.len() * (2 * gap as usize + 1));
    for a in arcs {
        for t in twist - gap..=twist + gap {
            if a != arc || t != twist {
                out.push((a, t));
            }
        }
    }
    out
}
