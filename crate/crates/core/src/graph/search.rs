use std::collections::HashMap;

use serde::Serialize;

use super::{Distance, ImplicitGraph, SearchLimits, SearchStats};
use crate::{Error, Result};

fn check_vertex<G: ImplicitGraph>(g: &G, v: &G::Vertex) -> Result<()> {
    if g.contains(v) {
        Ok(())
    } else {
        Err(Error::InvalidVertex { graph: g.name(), vertex: g.encode(v) })
    }
}

fn check_budget(stats: &SearchStats, limits: SearchLimits, radius: u32) -> Result<()> {
    if stats.visited > limits.max_visited {
        Err(Error::BudgetExceeded { visited: stats.visited, limit: limits.max_visited, radius })
    } else {
        Ok(())
    }
}

/// Breadth-first search tree rooted at `source`, explored to `depth`.
#[derive(Clone, Debug)]
pub struct BfsTree<V> {
    pub source: V,
    pub depth: u32,
    dist: HashMap<V, u32>,
    parent: HashMap<V, V>,
    pub stats: SearchStats,
}

impl<V: Clone + Eq + std::hash::Hash> BfsTree<V> {
    pub fn distance_to(&self, v: &V) -> Option<u32> {
        self.dist.get(v).copied()
    }

    /// Tree path from the source to `v`.
    pub fn path_to(&self, v: &V) -> Option<Vec<V>> {
        self.dist.get(v)?;
        let mut path = vec![v.clone()];
        let mut cur = v;
        while let Some(p) = self.parent.get(cur) {
            path.push(p.clone());
            cur = p;
        }
        path.reverse();
        Some(path)
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&V, u32)> {
        self.dist.iter().map(|(v, &d)| (v, d))
    }
}

/// Explores every vertex within `depth` of `source`. Parents are the first
/// discoverers in oracle order, so the tree is deterministic.
pub fn bfs_tree<G: ImplicitGraph>(
    g: &G,
    source: &G::Vertex,
    depth: u32,
    limits: SearchLimits,
) -> Result<BfsTree<G::Vertex>> {
    check_vertex(g, source)?;
    let mut dist = HashMap::from([(source.clone(), 0)]);
    let mut parent = HashMap::new();
    let mut stats = SearchStats { visited: 1, edges_scanned: 0 };
    let mut frontier = vec![source.clone()];
    for d in 0..depth {
        if frontier.is_empty() {
            break;
        }
        let mut next = Vec::new();
        for x in &frontier {
            for y in g.neighbors(x) {
                stats.edges_scanned += 1;
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d + 1);
                    parent.insert(y.clone(), x.clone());
                    next.push(y);
                }
            }
        }
        stats.visited = dist.len();
        check_budget(&stats, limits, d)?;
        frontier = next;
    }
    Ok(BfsTree { source: source.clone(), depth, dist, parent, stats })
}

/// Single-sided breadth-first distance, stopping as soon as `v` is reached.
pub fn distance_unidirectional<G: ImplicitGraph>(
    g: &G,
    u: &G::Vertex,
    v: &G::Vertex,
    cap: u32,
    limits: SearchLimits,
) -> Result<Distance> {
    if cap == 0 {
        return Err(Error::ZeroCap);
    }
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Ok(Distance::Exact(0));
    }
    let mut seen = std::collections::HashSet::from([u.clone()]);
    let mut frontier = vec![u.clone()];
    for d in 1..=cap {
        let mut next = Vec::new();
        for x in &frontier {
            for y in g.neighbors(x) {
                if &y == v {
                    return Ok(Distance::Exact(d));
                }
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        let stats = SearchStats { visited: seen.len(), edges_scanned: 0 };
        check_budget(&stats, limits, d - 1)?;
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(Distance::AtLeast(cap + 1))
}

/// Bidirectional breadth-first distance. Always expands a complete layer of
/// the smaller frontier, so the first meeting yields the exact distance.
pub fn distance<G: ImplicitGraph>(
    g: &G,
    u: &G::Vertex,
    v: &G::Vertex,
    cap: u32,
    limits: SearchLimits,
) -> Result<Distance> {
    if cap == 0 {
        return Err(Error::ZeroCap);
    }
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Ok(Distance::Exact(0));
    }

    struct Side<V> {
        dist: HashMap<V, u32>,
        frontier: Vec<V>,
        depth: u32,
    }
    let mut fwd = Side { dist: HashMap::from([(u.clone(), 0)]), frontier: vec![u.clone()], depth: 0 };
    let mut bwd = Side { dist: HashMap::from([(v.clone(), 0)]), frontier: vec![v.clone()], depth: 0 };

    loop {
        // No meeting so far means the distance exceeds fwd.depth + bwd.depth.
        if fwd.depth + bwd.depth >= cap {
            return Ok(Distance::AtLeast(cap + 1));
        }
        let (this, other) = if fwd.frontier.len() <= bwd.frontier.len() {
            (&mut fwd, &bwd)
        } else {
            (&mut bwd, &fwd)
        };
        if this.frontier.is_empty() {
            return Ok(Distance::AtLeast(cap + 1));
        }
        let d = this.depth + 1;
        let mut next = Vec::new();
        let mut best: Option<u32> = None;
        for x in &this.frontier {
            for y in g.neighbors(x) {
                if this.dist.contains_key(&y) {
                    continue;
                }
                if let Some(&od) = other.dist.get(&y) {
                    best = Some(best.map_or(d + od, |b| b.min(d + od)));
                }
                this.dist.insert(y.clone(), d);
                next.push(y);
            }
        }
        this.frontier = next;
        this.depth = d;
        if let Some(b) = best {
            return Ok(if b <= cap { Distance::Exact(b) } else { Distance::AtLeast(cap + 1) });
        }
        let stats = SearchStats { visited: fwd.dist.len() + bwd.dist.len(), edges_scanned: 0 };
        check_budget(&stats, limits, fwd.depth + bwd.depth)?;
    }
}

/// Vertices within distance `radius` of a center, with their distances.
#[derive(Clone, Debug, Serialize)]
pub struct Ball<V> {
    pub center: V,
    pub radius: u32,
    /// Sorted by distance, then by vertex order.
    pub members: Vec<(V, u32)>,
    pub stats: SearchStats,
}

impl<V> Ball<V> {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn ball<G: ImplicitGraph>(
    g: &G,
    center: &G::Vertex,
    radius: u32,
    limits: SearchLimits,
) -> Result<Ball<G::Vertex>> {
    let tree = bfs_tree(g, center, radius, limits)?;
    let mut members: Vec<(G::Vertex, u32)> = tree.iter().map(|(v, d)| (v.clone(), d)).collect();
    members.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(Ball { center: center.clone(), radius, members, stats: tree.stats })
}

/// The geodesic from `u` to `v` that is lexicographically least in vertex
/// order.
pub fn geodesic<G: ImplicitGraph>(
    g: &G,
    u: &G::Vertex,
    v: &G::Vertex,
    cap: u32,
    limits: SearchLimits,
) -> Result<Vec<G::Vertex>> {
    let d = distance(g, u, v, cap, limits)?.exact().ok_or_else(|| Error::BeyondCap {
        from: g.encode(u),
        to: g.encode(v),
        cap,
    })?;
    // Distances to v, then walk greedily from u.
    let to_v = bfs_tree(g, v, d, limits)?;
    let mut path = vec![u.clone()];
    let mut cur = u.clone();
    for remaining in (0..d).rev() {
        cur = g
            .neighbors(&cur)
            .into_iter()
            .filter(|w| to_v.distance_to(w) == Some(remaining))
            .min()
            .expect("a vertex at distance r + 1 has a neighbour at distance r");
        path.push(cur.clone());
    }
    Ok(path)
}

/// A recorded distance, with a witness path when it is exact.
#[derive(Clone, Debug, Serialize)]
pub struct SampleEntry<V> {
    pub from: V,
    pub to: V,
    pub distance: Distance,
    pub path: Option<Vec<V>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MetricSample<V> {
    pub graph: String,
    pub cap: u32,
    pub entries: Vec<SampleEntry<V>>,
    pub stats: SearchStats,
}

impl<V: Clone + Eq> MetricSample<V> {
    /// Every exact entry carries a path of matching length whose consecutive
    /// vertices are oracle-adjacent.
    pub fn paths_verify<G: ImplicitGraph<Vertex = V>>(&self, g: &G) -> bool {
        self.entries.iter().all(|e| match (e.distance, &e.path) {
            (Distance::Exact(d), Some(path)) => {
                path.len() == d as usize + 1
                    && path.first() == Some(&e.from)
                    && path.last() == Some(&e.to)
                    && path.windows(2).all(|w| g.neighbors(&w[0]).contains(&w[1]))
            }
            (Distance::AtLeast(_), None) => true,
            _ => false,
        })
    }
}

/// Distances with witness paths for the given pairs.
pub fn sample<G: ImplicitGraph>(
    g: &G,
    pairs: &[(G::Vertex, G::Vertex)],
    cap: u32,
    limits: SearchLimits,
) -> Result<MetricSample<G::Vertex>> {
    let mut entries = Vec::with_capacity(pairs.len());
    let mut stats = SearchStats::default();
    for (u, v) in pairs {
        let tree = bfs_tree(g, u, cap, limits)?;
        stats += tree.stats;
        let (distance, path) = match tree.distance_to(v) {
            Some(d) => (Distance::Exact(d), tree.path_to(v)),
            None => (Distance::AtLeast(cap + 1), None),
        };
        entries.push(SampleEntry { from: u.clone(), to: v.clone(), distance, path });
    }
    Ok(MetricSample { graph: g.name(), cap, entries, stats })
}
