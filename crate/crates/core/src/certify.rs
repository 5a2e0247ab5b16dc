//! Quasi-flat certificates.
//!
//! A certificate takes a Farey geodesic segment `γ_0 … γ_N`, extended from a
//! pair of adjacent seed slopes one BFS-verified step at a time, and
//! measures every distance between the grid points `(γ_i, j)`,
//! `0 <= i, j <= N`, in a model graph. The grid is an exact flat when each
//! distance equals `max(|Δi|, |Δj|)`.
//!
//! Each entry carries a witness path (upper bound) and the two projection
//! lower bounds: the arc coordinate moves along Farey edges and the twist
//! coordinate by at most one per model edge, so the model distance is at
//! least `max(d_A, |Δtwist|)`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arc::{pairing, Slope};
use crate::graph::{bfs_tree, FareyGraph, ImplicitGraph, SearchLimits, SearchStats};
use crate::handlebody::{OmegaGraph, SpottedDisk};
use crate::sphere::{SphereGraph, SpottedSphere};
use crate::{Error, Result};

pub const SCHEMA: &str = "flatcert/1";

const PREAMBLE: &str = "Exact grid certificate in a combinatorial model graph. The grid is the \
product of a BFS-certified Farey geodesic segment with an interval of twist values, and every \
listed distance is a model-graph distance with a witness path and matching projection lower \
bounds. It establishes an exact l-infinity flat (equivalently a (2, 0) quasi-isometric embedding \
for the l1 product metric) inside the model only; it says nothing directly about distances in \
the full spotted disk or sphere graph, whose relation to the model rests on the retraction \
identities checked by the property suites.";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FlatModel {
    Omega,
    Sphere,
}

impl fmt::Display for FlatModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FlatModel::Omega => "omega",
            FlatModel::Sphere => "sphere",
        })
    }
}

impl FromStr for FlatModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<FlatModel> {
        match s {
            "omega" => Ok(FlatModel::Omega),
            "sphere" => Ok(FlatModel::Sphere),
            _ => Err(Error::Parse { kind: "model", input: s.to_owned() }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyConfig {
    pub model: FlatModel,
    pub n: usize,
    pub seed: (Slope, Slope),
    /// Largest distance any query may certify.
    pub distance_cap: u32,
    /// Height cap of the underlying Farey graph.
    pub height_cap: u64,
    pub max_visited: usize,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig {
            model: FlatModel::Omega,
            n: 6,
            seed: (Slope::ZERO, Slope::INFINITY),
            distance_cap: 16,
            height_cap: 128,
            max_visited: SearchLimits::DEFAULT_MAX_VISITED,
        }
    }
}

impl CertifyConfig {
    fn limits(&self) -> SearchLimits {
        SearchLimits { max_visited: self.max_visited }
    }
}

/// Multiplicative and additive distortion: `g / l - c <= m <= l * g + c`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QiConstants {
    pub l: f64,
    pub c: f64,
}

impl QiConstants {
    /// Smallest multiplicative constant over pairs where both distances are
    /// positive, then the additive slack that constant still needs.
    pub fn fit(pairs: impl IntoIterator<Item = (u32, u32)> + Clone) -> QiConstants {
        let l = pairs
            .clone()
            .into_iter()
            .filter(|&(g, m)| g > 0 && m > 0)
            .map(|(g, m)| (g as f64 / m as f64).max(m as f64 / g as f64))
            .fold(1.0, f64::max);
        let c = pairs
            .into_iter()
            .map(|(g, m)| {
                let (g, m) = (g as f64, m as f64);
                (m - l * g).max(g / l - m).max(0.0)
            })
            .fold(0.0, f64::max);
        QiConstants { l, c }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FittedConstants {
    /// Against `max(|Δi|, |Δj|)`.
    pub linf: QiConstants,
    /// Against `|Δi| + |Δj|`, the product metric `d_0`.
    pub l1: QiConstants,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub a: usize,
    pub b: usize,
    pub distance: u32,
    pub arc_lower: u32,
    pub twist_lower: u32,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlatCertificate {
    pub schema: String,
    pub preamble: String,
    pub config: CertifyConfig,
    pub graph: String,
    pub ray: Vec<Slope>,
    /// Grid point `(γ_i, j)` has index `i * (n + 1) + j`.
    pub grid: Vec<String>,
    pub distances: Vec<Vec<u32>>,
    pub witnesses: Vec<Witness>,
    pub constants: FittedConstants,
    pub success: bool,
    pub stats: SearchStats,
}

impl FlatCertificate {
    pub fn to_json(&self) -> Result<String> {
        let mut out = serde_json::to_string_pretty(self)?;
        out.push('\n');
        Ok(out)
    }

    pub fn from_json(text: &str) -> Result<FlatCertificate> {
        Ok(serde_json::from_str(text)?)
    }

    fn side(&self) -> usize {
        self.config.n + 1
    }

    /// Re-checks the certificate against the model graph it names: the ray
    /// is a Farey geodesic, every witness path is an oracle path of the
    /// claimed length between the right grid points, the claimed distance
    /// equals the projection lower bound, and the matrix agrees.
    pub fn verify(&self) -> std::result::Result<(), String> {
        if self.schema != SCHEMA {
            return Err(format!("unknown schema {:?}", self.schema));
        }
        let farey = FareyGraph::new(self.config.height_cap);
        let tree = bfs_tree(&farey, &self.ray[0], self.config.n as u32, self.config.limits())
            .map_err(|e| e.to_string())?;
        for (i, g) in self.ray.iter().enumerate() {
            if tree.distance_to(g) != Some(i as u32) {
                return Err(format!("ray slope {g} is not at distance {i} from {}", self.ray[0]));
            }
        }
        match self.config.model {
            FlatModel::Omega => self.verify_paths(&OmegaGraph::new(self.config.height_cap)),
            FlatModel::Sphere => self.verify_paths(&SphereGraph::new(self.config.height_cap)),
        }
    }

    fn verify_paths<G: ImplicitGraph>(&self, g: &G) -> std::result::Result<(), String> {
        let side = self.side();
        let expected = side * side * (side * side - 1) / 2;
        if self.witnesses.len() != expected {
            return Err(format!("expected {expected} witnesses, found {}", self.witnesses.len()));
        }
        for w in &self.witnesses {
            let path: Vec<G::Vertex> =
                w.path.iter().map(|t| g.decode(t)).collect::<Result<_>>().map_err(|e| e.to_string())?;
            let (ia, ja) = (w.a / side, w.a % side);
            let (ib, jb) = (w.b / side, w.b % side);
            let ok = path.len() == w.distance as usize + 1
                && path.first().map(|v| g.encode(v)).as_ref() == Some(&self.grid[w.a])
                && path.last().map(|v| g.encode(v)).as_ref() == Some(&self.grid[w.b])
                && path.windows(2).all(|p| g.neighbors(&p[0]).contains(&p[1]))
                && w.arc_lower == ia.abs_diff(ib) as u32
                && w.twist_lower == ja.abs_diff(jb) as u32
                && w.distance == w.arc_lower.max(w.twist_lower)
                && self.distances[w.a][w.b] == w.distance
                && self.distances[w.b][w.a] == w.distance;
            if !ok {
                return Err(format!("witness {} -> {} does not verify", self.grid[w.a], self.grid[w.b]));
            }
        }
        Ok(())
    }
}

/// Extends an adjacent seed pair to a Farey geodesic `γ_0 … γ_n`, taking
/// the Stern–Brocot least admissible slope at each step.
pub fn geodesic_ray(
    seed: (Slope, Slope),
    n: usize,
    height_cap: u64,
    limits: SearchLimits,
) -> Result<Vec<Slope>> {
    let farey = FareyGraph::new(height_cap);
    for s in [seed.0, seed.1] {
        if !farey.contains(&s) {
            return Err(Error::InvalidVertex { graph: farey.name(), vertex: s.to_string() });
        }
    }
    if pairing(seed.0, seed.1) != 1 {
        return Err(Error::SeedNotAdjacent(seed.0.to_string(), seed.1.to_string()));
    }
    let mut ray = vec![seed.0];
    if n == 0 {
        return Ok(ray);
    }
    ray.push(seed.1);
    let tree = bfs_tree(&farey, &seed.0, n as u32, limits)?;
    while ray.len() <= n {
        let i = ray.len() as u32;
        let last = *ray.last().unwrap();
        match farey.neighbors(&last).into_iter().find(|s| tree.distance_to(s) == Some(i)) {
            Some(next) => ray.push(next),
            None => return Err(Error::RayExtension { longest: ray.iter().map(|s| s.to_string()).collect() }),
        }
    }
    Ok(ray)
}

pub fn certify_flat(config: &CertifyConfig) -> Result<FlatCertificate> {
    if config.n as u64 > config.distance_cap as u64 {
        return Err(Error::DistanceCap { needed: config.n as u32, cap: config.distance_cap });
    }
    let ray = geodesic_ray(config.seed, config.n, config.height_cap, config.limits())?;
    match config.model {
        FlatModel::Omega => {
            let g = OmegaGraph::new(config.height_cap);
            assemble(config, &g, ray, |a, j| SpottedDisk::new(a, j))
        }
        FlatModel::Sphere => {
            let g = SphereGraph::new(config.height_cap);
            assemble(config, &g, ray, |a, j| SpottedSphere::new(a, j))
        }
    }
}

fn assemble<G: ImplicitGraph>(
    config: &CertifyConfig,
    g: &G,
    ray: Vec<Slope>,
    point: impl Fn(Slope, i64) -> G::Vertex,
) -> Result<FlatCertificate> {
    let side = config.n + 1;
    let points: Vec<G::Vertex> =
        (0..side * side).map(|p| point(ray[p / side], (p % side) as i64)).collect();
    let depth = config.n as u32;

    // One BFS tree per source; rows come back in source order.
    let rows: Vec<(Vec<u32>, Vec<Witness>, SearchStats)> = (0..points.len())
        .into_par_iter()
        .map(|a| -> Result<_> {
            let tree = bfs_tree(g, &points[a], depth, config.limits())?;
            let mut row = Vec::with_capacity(points.len());
            let mut witnesses = Vec::new();
            for (b, target) in points.iter().enumerate() {
                let d = tree.distance_to(target).ok_or_else(|| Error::BeyondCap {
                    from: g.encode(&points[a]),
                    to: g.encode(target),
                    cap: depth,
                })?;
                row.push(d);
                if a < b {
                    let path = tree.path_to(target).expect("reached vertices have tree paths");
                    witnesses.push(Witness {
                        a,
                        b,
                        distance: d,
                        arc_lower: (a / side).abs_diff(b / side) as u32,
                        twist_lower: (a % side).abs_diff(b % side) as u32,
                        path: path.iter().map(|v| g.encode(v)).collect(),
                    });
                }
            }
            Ok((row, witnesses, tree.stats))
        })
        .collect::<Result<_>>()?;

    let mut distances = Vec::with_capacity(points.len());
    let mut witnesses = Vec::new();
    let mut stats = SearchStats::default();
    for (row, w, s) in rows {
        distances.push(row);
        witnesses.extend(w);
        stats += s;
    }

    let success = witnesses.iter().all(|w| w.distance == w.arc_lower.max(w.twist_lower));
    let linf = QiConstants::fit(witnesses.iter().map(|w| (w.arc_lower.max(w.twist_lower), w.distance)));
    let l1 = QiConstants::fit(witnesses.iter().map(|w| (w.arc_lower + w.twist_lower, w.distance)));

    Ok(FlatCertificate {
        schema: SCHEMA.to_owned(),
        preamble: PREAMBLE.to_owned(),
        config: config.clone(),
        graph: g.name(),
        ray,
        grid: points.iter().map(|v| g.encode(v)).collect(),
        distances,
        witnesses,
        constants: FittedConstants { linf, l1 },
        success,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fit_constants() {
        assert_eq!(QiConstants::fit([(1, 1), (2, 2), (0, 0)]), QiConstants { l: 1.0, c: 0.0 });
        assert_eq!(QiConstants::fit([(2, 1), (1, 1), (0, 0)]), QiConstants { l: 2.0, c: 0.0 });
        assert_eq!(QiConstants::fit([(0, 1), (1, 1)]), QiConstants { l: 1.0, c: 1.0 });
    }

    #[test]
    fn smallest_certificate() {
        let cfg = CertifyConfig { n: 1, ..CertifyConfig::default() };
        let cert = certify_flat(&cfg).unwrap();
        assert!(cert.success);
        assert_eq!(cert.grid.len(), 4);
        assert!(cert.distances.iter().flatten().all(|&d| d <= 1));
        assert_eq!(cert.constants.linf, QiConstants { l: 1.0, c: 0.0 });
        assert_eq!(cert.constants.l1, QiConstants { l: 2.0, c: 0.0 });
        cert.verify().unwrap();
    }

    #[test]
    fn rejects_bad_seeds_and_caps() {
        let two_fifths: Slope = "2/5".parse().unwrap();
        let cfg = CertifyConfig { seed: (Slope::ZERO, two_fifths), ..CertifyConfig::default() };
        assert!(matches!(certify_flat(&cfg), Err(Error::SeedNotAdjacent(..))));
        let cfg = CertifyConfig { n: 20, distance_cap: 8, ..CertifyConfig::default() };
        assert!(matches!(certify_flat(&cfg), Err(Error::DistanceCap { .. })));
        let cfg = CertifyConfig { n: 6, height_cap: 8, ..CertifyConfig::default() };
        assert!(matches!(certify_flat(&cfg), Err(Error::RayExtension { .. })));
    }

    #[test]
    fn tampered_certificate_fails_verification() {
        let cfg = CertifyConfig { n: 2, ..CertifyConfig::default() };
        let mut cert = certify_flat(&cfg).unwrap();
        cert.verify().unwrap();
        cert.witnesses[3].path.pop();
        assert!(cert.verify().is_err());
    }
}
