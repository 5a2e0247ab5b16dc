//! Named property suites with fixed seeds, plus failure injection for
//! negative controls.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arc::{
    canonicalize, disjoint, farey_neighbors, half_twist, pairing, point_push, spot_forget, Slope,
    SpottedArc,
};
use crate::graph::{
    ball, bfs_tree, distance, distance_unidirectional, geodesic, Distance, FareyGraph,
    ImplicitGraph, SearchLimits,
};
use crate::handlebody::{
    annular_intersection, ibundle_over_arc, inject, psi, psi_inv, push_disk, theta, theta0, xi,
    OmegaGraph, SpottedDisk,
};
use crate::sphere::{
    intersection_circles, sphere_spot_forget, theta_sphere, upsilon, upsilon0, SphereGraph,
    SpottedArcGraph, SpottedSphere,
};
use crate::{Error, Result};

/// Seed shared by every randomized check.
pub const SUITE_SEED: u64 = 0x5107_f1a7;

/// Height cap for the exhaustive ball checks on the product graphs.
pub const BALL_HEIGHT_CAP: u64 = 10;

/// A deliberate defect, used to confirm that the checks can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// Spotted disks whose push counts differ by two become adjacent.
    OmegaTwistGap,
    /// Intersection counts lose their `-2` offset.
    AnnularOffset,
}

impl FromStr for Fault {
    type Err = Error;

    fn from_str(s: &str) -> Result<Fault> {
        match s {
            "omega-twist-gap" => Ok(Fault::OmegaTwistGap),
            "annular-offset" => Ok(Fault::AnnularOffset),
            _ => Err(Error::Parse { kind: "fault", input: s.to_owned() }),
        }
    }
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Fault::OmegaTwistGap => "omega-twist-gap",
            Fault::AnnularOffset => "annular-offset",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: &'static str,
    /// The statement the check supports.
    pub anchor: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub fault: Option<Fault>,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(fault) = self.fault {
            writeln!(f, "injected fault: {fault}")?;
        }
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{mark} {}/{} [{}] {}", c.suite, c.name, c.anchor, c.detail)?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(f, "suite {}: {} checks, {} failed", self.name, self.checks.len(), failed)
    }
}

pub const SUITES: [&str; 5] = ["arc", "engine", "omega", "sphere", "all"];

pub fn run_suite(name: &str, fault: Option<Fault>) -> Result<SuiteReport> {
    let checks = match name {
        "arc" => arc_suite(),
        "engine" => engine_suite()?,
        "omega" => omega_suite(fault)?,
        "sphere" => sphere_suite()?,
        "all" => {
            let mut all = arc_suite();
            all.extend(engine_suite()?);
            all.extend(omega_suite(fault)?);
            all.extend(sphere_suite()?);
            all
        }
        _ => return Err(Error::UnknownSuite(name.to_owned())),
    };
    Ok(SuiteReport { name: name.to_owned(), fault, checks })
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SUITE_SEED)
}

/// Random canonical slope with numerator and denominator bounded by `bound`.
pub fn random_slope(rng: &mut impl Rng, bound: i64) -> Slope {
    loop {
        if let Ok(s) = canonicalize(rng.gen_range(-bound..=bound), rng.gen_range(0..=bound)) {
            return s;
        }
    }
}

/// Failure count plus the first failing case.
#[derive(Default)]
struct Failures {
    count: usize,
    first: Option<String>,
}

impl Failures {
    fn push(&mut self, case: String) {
        self.count += 1;
        self.first.get_or_insert(case);
    }

    fn merge(&mut self, other: Failures) {
        self.count += other.count;
        if self.first.is_none() {
            self.first = other.first;
        }
    }
}

struct Check {
    suite: &'static str,
    name: &'static str,
    anchor: &'static str,
}

impl Check {
    fn result(self, failures: Failures, checked: usize) -> CheckResult {
        let passed = failures.count == 0;
        let detail = match failures.first {
            None => format!("{checked} cases"),
            Some(first) => format!("{} of {checked} cases failed, first: {first}", failures.count),
        };
        CheckResult { suite: self.suite, name: self.name, anchor: self.anchor, passed, detail }
    }
}

fn arc_suite() -> Vec<CheckResult> {
    let mut rng = rng();
    let slopes: Vec<Slope> = (0..1000).map(|_| random_slope(&mut rng, 60)).collect();
    let mut out = Vec::new();

    let c = Check { suite: "arc", name: "canonical-form", anchor: "slopes have a unique reduced form" };
    let mut fails = Failures::default();
    for &a in &slopes {
        let again = canonicalize(a.numer(), a.denom()).unwrap();
        let scaled = canonicalize(-3 * a.numer(), -3 * a.denom()).unwrap();
        if again != a || scaled != a || a.to_string().parse::<Slope>().ok() != Some(a) {
            fails.push(a.to_string());
        }
    }
    out.push(c.result(fails, slopes.len()));

    let c = Check { suite: "arc", name: "pairing-symmetry", anchor: "intersection pairing is symmetric" };
    let mut fails = Failures::default();
    for w in slopes.windows(2) {
        let (a, b) = (w[0], w[1]);
        if pairing(a, b) != pairing(b, a) || pairing(a, a) != 0 || disjoint(a, b) != disjoint(b, a) {
            fails.push(format!("{a}, {b}"));
        }
    }
    out.push(c.result(fails, slopes.len() - 1));

    let c = Check { suite: "arc", name: "farey-triangles", anchor: "arcs of a Farey triangle are pairwise disjoint" };
    let mut fails = Failures::default();
    let mut checked = 0;
    for &a in slopes.iter().take(200) {
        for b in farey_neighbors(a, 80).into_iter().take(5) {
            for sign in [1, -1] {
                let c3 = canonicalize(a.numer() + sign * b.numer(), a.denom() + sign * b.denom()).unwrap();
                checked += 1;
                if !(disjoint(a, b) && disjoint(a, c3) && disjoint(b, c3)) || c3 == a || c3 == b {
                    fails.push(format!("{a}, {b}, {c3}"));
                }
            }
        }
    }
    out.push(c.result(fails, checked));

    let c = Check { suite: "arc", name: "neighbor-oracle", anchor: "edges of the arc graph are Farey edges" };
    let cap = 7;
    let universe: Vec<Slope> = (-cap..=cap)
        .flat_map(|p| (0..=cap).filter_map(move |q| canonicalize(p, q).ok()))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut fails = Failures::default();
    for &a in &universe {
        let brute: Vec<Slope> = universe.iter().copied().filter(|&b| pairing(a, b) == 1).collect();
        let oracle = farey_neighbors(a, cap as u64);
        let symmetric = oracle.iter().all(|&b| farey_neighbors(b, cap as u64).contains(&a));
        if brute != oracle || !symmetric {
            fails.push(a.to_string());
        }
    }
    out.push(c.result(fails, universe.len()));

    let c = Check { suite: "arc", name: "twist-composition", anchor: "two half twists make one point push" };
    let mut fails = Failures::default();
    for (i, &a) in slopes.iter().enumerate().take(300) {
        let (m, n) = (rng.gen_range(-20..=20), rng.gen_range(-20..=20));
        let full = SpottedArc::full(a, i as i64 - 150);
        let half = SpottedArc::half(a, 150 - i as i64);
        let ok = point_push(point_push(full, m), n) == point_push(full, m + n)
            && point_push(point_push(half, m), n) == point_push(half, m + n)
            && half_twist(half_twist(half).unwrap()).unwrap() == point_push(half, 1)
            && half_twist(half).unwrap() != half;
        if !ok {
            fails.push(format!("{full} / {half} with m={m}, n={n}"));
        }
    }
    out.push(c.result(fails, 300));

    let c = Check { suite: "arc", name: "spot-forget", anchor: "pushing the spot stays in one fibre of spot removal" };
    let mut fails = Failures::default();
    for &a in slopes.iter().take(300) {
        let x = SpottedArc::half(a, rng.gen_range(-30..=30));
        let n = rng.gen_range(-30..=30);
        if spot_forget(point_push(x, n)) != a || spot_forget(half_twist(x).unwrap()) != a {
            fails.push(x.to_string());
        }
    }
    out.push(c.result(fails, 300));
    out
}

fn engine_suite() -> Result<Vec<CheckResult>> {
    let mut rng = rng();
    let lim = SearchLimits::default();
    let farey = FareyGraph::new(32);
    let pairs: Vec<(Slope, Slope)> =
        (0..100).map(|_| (random_slope(&mut rng, 32), random_slope(&mut rng, 32))).collect();
    let mut out = Vec::new();

    let c = Check { suite: "engine", name: "bidirectional-agreement", anchor: "bidirectional and single-sided search agree" };
    let mut fails = Failures::default();
    for (a, b) in &pairs {
        let bi = distance(&farey, a, b, 8, lim)?;
        let uni = distance_unidirectional(&farey, a, b, 8, lim)?;
        if bi != uni {
            fails.push(format!("{a}, {b}: {bi} vs {uni}"));
        }
    }
    out.push(c.result(fails, pairs.len()));

    let c = Check { suite: "engine", name: "geodesic-length", anchor: "geodesics realize distances" };
    let mut fails = Failures::default();
    for (a, b) in &pairs {
        let d = distance(&farey, a, b, 8, lim)?.exact().expect("capped Farey graph has small diameter");
        let path = geodesic(&farey, a, b, 8, lim)?;
        let valid = path.windows(2).all(|w| farey.neighbors(&w[0]).contains(&w[1]));
        if path.len() != d as usize + 1 || !valid {
            fails.push(format!("{a}, {b}"));
        }
    }
    out.push(c.result(fails, pairs.len()));

    let c = Check { suite: "engine", name: "metric-axioms", anchor: "graph distance is a metric" };
    let mut fails = Failures::default();
    let triples: Vec<[Slope; 3]> = (0..60).map(|_| [0; 3].map(|_| random_slope(&mut rng, 32))).collect();
    for [a, b, c3] in &triples {
        let d = |x: &Slope, y: &Slope| distance(&farey, x, y, 12, lim).map(|d| d.exact().unwrap());
        let (ab, ba, bc, ac) = (d(a, b)?, d(b, a)?, d(b, c3)?, d(a, c3)?);
        if ab != ba || ac > ab + bc {
            fails.push(format!("{a}, {b}, {c3}"));
        }
    }
    out.push(c.result(fails, triples.len()));

    let c = Check { suite: "engine", name: "ball-structure", anchor: "balls grow monotonically along BFS layers" };
    let omega = OmegaGraph::new(6);
    let center = SpottedDisk::new(Slope::ZERO, 0);
    let mut fails = Failures::default();
    let mut prev = 0;
    for r in 0..=3 {
        let b = ball(&omega, &center, r, lim)?;
        let dist: HashMap<&SpottedDisk, u32> = b.members.iter().map(|(v, d)| (v, *d)).collect();
        let layered = b.members.iter().all(|(v, d)| {
            *d == 0 || omega.neighbors(v).iter().any(|w| dist.get(w) == Some(&(d - 1)))
        });
        if b.len() < prev || !layered {
            fails.push(format!("radius {r}"));
        }
        prev = b.len();
    }
    out.push(c.result(fails, 4));

    let c = Check { suite: "engine", name: "oracle-symmetry", anchor: "adjacency oracles are symmetric and deterministic" };
    let mut fails = Failures::default();
    let sphere = SphereGraph::new(12);
    let omega = OmegaGraph::new(12);
    for (a, _) in pairs.iter().take(40) {
        let a = canonicalize(a.numer() % 12, a.denom() % 12).unwrap_or(Slope::ZERO);
        let f = FareyGraph::new(12);
        if !symmetric_at(&f, &a) {
            fails.push(format!("farey at {a}"));
        }
        let k = rng.gen_range(-5..=5);
        if !symmetric_at(&omega, &SpottedDisk::new(a, k)) {
            fails.push(format!("omega at {a}@{k}"));
        }
        if !symmetric_at(&sphere, &SpottedSphere::new(a, k)) {
            fails.push(format!("sphere at {a}@{k}"));
        }
    }
    out.push(c.result(fails, 120));

    let c = Check { suite: "engine", name: "frozen-distance", anchor: "distance from 0/1 to 34/55 is 5" };
    let target: Slope = "34/55".parse().unwrap();
    let d = distance(&FareyGraph::new(110), &Slope::ZERO, &target, 12, lim)?;
    let mut fails = Failures::default();
    if d != Distance::Exact(5) {
        fails.push(format!("got {d}"));
    }
    out.push(c.result(fails, 1));
    Ok(out)
}

fn symmetric_at<G: ImplicitGraph>(g: &G, v: &G::Vertex) -> bool {
    let ns = g.neighbors(v);
    ns == g.neighbors(v) && ns.iter().all(|w| g.neighbors(w).contains(v))
}

/// All-pairs check over a ball of a twisted product graph: the graph
/// distance should be `max(d_A, |Δtwist|)`. Returns failures and the number
/// of pairs compared. `sum_bounds` switches to `d_0 / 2 <= d <= d_0` with
/// `d_0 = d_A + |Δtwist|`.
fn product_check<G, F>(
    g: &G,
    center: &G::Vertex,
    radius: u32,
    coords: F,
    sum_bounds: bool,
) -> Result<(Failures, usize)>
where
    G: ImplicitGraph,
    F: Fn(&G::Vertex) -> (Slope, i64) + Sync,
{
    let lim = SearchLimits::default();
    let members: Vec<G::Vertex> = ball(g, center, radius, lim)?.members.into_iter().map(|(v, _)| v).collect();
    let farey = FareyGraph::new(BALL_HEIGHT_CAP);
    let mut arcs: Vec<Slope> = members.iter().map(|v| coords(v).0).collect();
    arcs.sort();
    arcs.dedup();
    let arc_trees: HashMap<Slope, _> = arcs
        .par_iter()
        .map(|a| bfs_tree(&farey, a, 2 * radius, lim).map(|t| (*a, t)))
        .collect::<Result<_>>()?;

    let rows: Vec<Failures> = members
        .par_iter()
        .enumerate()
        .map(|(i, x)| -> Result<Failures> {
            let tree = bfs_tree(g, x, 2 * radius, lim)?;
            let (xa, xt) = coords(x);
            let mut fails = Failures::default();
            for y in &members[i + 1..] {
                let (ya, yt) = coords(y);
                let da = arc_trees[&xa].distance_to(&ya).expect("within twice the radius");
                let dt = xt.abs_diff(yt) as u32;
                let d = tree.distance_to(y).expect("within twice the radius");
                let ok = if sum_bounds {
                    let d0 = da + dt;
                    d0 <= 2 * d && d <= d0
                } else {
                    d == da.max(dt)
                };
                if !ok {
                    fails.push(format!("{} to {}: d={d}, d_A={da}, twist gap {dt}", g.encode(x), g.encode(y)));
                }
            }
            Ok(fails)
        })
        .collect::<Result<_>>()?;
    let n = members.len();
    let mut fails = Failures::default();
    rows.into_iter().for_each(|r| fails.merge(r));
    Ok((fails, n * (n - 1) / 2))
}

fn omega_suite(fault: Option<Fault>) -> Result<Vec<CheckResult>> {
    let mut rng = rng();
    let lim = SearchLimits::default();
    let mut out = Vec::new();
    let annular: fn(i64, i64) -> u64 = match fault {
        Some(Fault::AnnularOffset) => |k, l| 2 * k.abs_diff(l),
        _ => annular_intersection,
    };
    let twist_gap = if fault == Some(Fault::OmegaTwistGap) { 2 } else { 1 };
    let omega = OmegaGraph::with_twist_gap(BALL_HEIGHT_CAP, twist_gap);
    let origin = SpottedDisk::new(Slope::ZERO, 0);

    let c = Check { suite: "omega", name: "intersection-table", anchor: "twist recovered from intersections with the three central pushes" };
    let mut fails = Failures::default();
    for k in (2..=10).chain(-10..=-2) {
        let got = [-1, 0, 1].map(|l| annular(k, l));
        let expected = if k >= 2 { [2 * k, 2 * k - 2, 2 * k - 4] } else { [-2 * k - 4, -2 * k - 2, -2 * k] };
        if got != expected.map(|e| e as u64) {
            fails.push(format!("k={k}: {got:?} vs {expected:?}"));
        }
    }
    out.push(c.result(fails, 18));

    let c = Check { suite: "omega", name: "intersection-adjacency", anchor: "pushes are disjoint exactly when one apart" };
    let mut fails = Failures::default();
    for k in -8..=8i64 {
        for l in -8..=8i64 {
            let x = SpottedDisk::new(Slope::ZERO, k);
            let y = SpottedDisk::new(Slope::ZERO, l);
            let adjacent = k == l || omega.neighbors(&x).contains(&y);
            if (annular(k, l) == 0) != adjacent {
                fails.push(format!("k={k}, l={l}"));
            }
        }
    }
    out.push(c.result(fails, 17 * 17));

    let c = Check { suite: "omega", name: "product-metric", anchor: "omega is the product of the arc graph with the integers" };
    let (fails, n) = product_check(&omega, &origin, 5, |v| (v.arc, v.k), false)?;
    out.push(c.result(fails, n));

    let c = Check { suite: "omega", name: "psi-quasi-isometry", anchor: "psi is a bijective quasi-isometry for d_0" };
    let (fails, n) = product_check(&omega, &origin, 5, |v| psi(*v), true)?;
    out.push(c.result(fails, n));

    let c = Check { suite: "omega", name: "retraction-identities", anchor: "theta and xi retract onto omega" };
    let mut fails = Failures::default();
    for _ in 0..1000 {
        let a = random_slope(&mut rng, 200);
        let (n, k) = (rng.gen_range(-10..=10), rng.gen_range(-10..=10));
        let x = psi_inv(a, rng.gen_range(-50..=50));
        let d = ibundle_over_arc(a);
        let ok = theta(inject(d)) == a
            && theta(push_disk(x, n)) == theta(x)
            && (-2..=2).contains(&xi(inject(d)))
            && (xi(push_disk(x, k)) - (xi(x) + k)).abs() <= 2
            && theta0(&crate::arc::ArcSystem::singleton(a)) == a;
        if !ok {
            fails.push(format!("{x} with n={n}, k={k}"));
        }
    }
    out.push(c.result(fails, 1000));

    let c = Check { suite: "omega", name: "psi-bijective", anchor: "psi is a bijection; edges map to d_0 at most 2" };
    let b = ball(&omega, &origin, 4, lim)?;
    let mut fails = Failures::default();
    let mut images = std::collections::HashSet::new();
    let mut cases = b.len();
    for (x, _) in &b.members {
        let (a, k) = psi(*x);
        if psi_inv(a, k) != *x || !images.insert((a, k)) {
            fails.push(x.to_string());
        }
        for y in omega.neighbors(x) {
            cases += 1;
            let (ya, yk) = psi(y);
            if pairing(a, ya) > 1 || k.abs_diff(yk) > 1 {
                fails.push(format!("edge {x} - {y}"));
            }
        }
    }
    out.push(c.result(fails, cases));

    let c = Check { suite: "omega", name: "push-automorphism", anchor: "point pushing acts by isometries" };
    let mut fails = Failures::default();
    let g = OmegaGraph::with_twist_gap(16, twist_gap);
    for _ in 0..40 {
        let x = SpottedDisk::new(random_slope(&mut rng, 16), rng.gen_range(-4..=4));
        let y = SpottedDisk::new(random_slope(&mut rng, 16), rng.gen_range(-4..=4));
        let n = rng.gen_range(-5..=5);
        let before = distance(&g, &x, &y, 12, lim)?;
        let after = distance(&g, &push_disk(x, n), &push_disk(y, n), 12, lim)?;
        if before != after {
            fails.push(format!("{x}, {y}, n={n}"));
        }
    }
    out.push(c.result(fails, 40));

    let c = Check { suite: "omega", name: "pushes-leave-injected-disks", anchor: "a nontrivial push of an injected disk is not injected" };
    let mut fails = Failures::default();
    for _ in 0..500 {
        let a = random_slope(&mut rng, 100);
        let k = rng.gen_range(-20..=20);
        let pushed = push_disk(inject(ibundle_over_arc(a)), k);
        let injected = inject(ibundle_over_arc(theta(pushed)));
        if (k != 0) == (pushed == injected) {
            fails.push(format!("{a} pushed {k}"));
        }
    }
    out.push(c.result(fails, 500));

    let c = Check { suite: "omega", name: "xi-lipschitz", anchor: "xi is coarsely Lipschitz" };
    let b = ball(&omega, &origin, 3, lim)?;
    let mut fails = Failures::default();
    let mut edges = 0;
    for (x, _) in &b.members {
        for y in omega.neighbors(x) {
            edges += 1;
            if xi(*x).abs_diff(xi(y)) > 1 {
                fails.push(format!("{x} - {y}"));
            }
        }
    }
    out.push(c.result(fails, edges));
    Ok(out)
}

fn sphere_suite() -> Result<Vec<CheckResult>> {
    let mut rng = rng();
    let lim = SearchLimits::default();
    let sphere = SphereGraph::new(BALL_HEIGHT_CAP);
    let origin = SpottedSphere::new(Slope::ZERO, 0);
    let mut out = Vec::new();

    let c = Check { suite: "sphere", name: "circle-counts", anchor: "k half twists give k - 1 intersection circles" };
    let mut fails = Failures::default();
    for k in (1..=10i64).filter(|&k| intersection_circles(0, k) != (k - 1) as u64) {
        fails.push(format!("k={k}"));
    }
    out.push(c.result(fails, 10));

    let c = Check { suite: "sphere", name: "circles-adjacency", anchor: "spheres one half twist apart are disjoint" };
    let mut fails = Failures::default();
    for h in -8..=8i64 {
        for h2 in -8..=8i64 {
            let x = SpottedSphere::new(Slope::ZERO, h);
            let y = SpottedSphere::new(Slope::ZERO, h2);
            if (intersection_circles(h, h2) == 0) != (h == h2 || sphere.neighbors(&x).contains(&y)) {
                fails.push(format!("h={h}, h'={h2}"));
            }
        }
    }
    out.push(c.result(fails, 17 * 17));

    let c = Check { suite: "sphere", name: "diagram-commutes", anchor: "spot removal commutes with doubling" };
    let mut fails = Failures::default();
    for _ in 0..1000 {
        let x = SpottedArc::half(random_slope(&mut rng, 200), rng.gen_range(-100..=100));
        let s = upsilon(x)?;
        if sphere_spot_forget(s) != upsilon0(spot_forget(x))
            || sphere_spot_forget(upsilon(half_twist(x)?)?) != sphere_spot_forget(s)
        {
            fails.push(x.to_string());
        }
    }
    out.push(c.result(fails, 1000));

    let c = Check { suite: "sphere", name: "product-metric", anchor: "the spotted arc graph is the product of the arc graph with the integers" };
    let (fails, n) = product_check(&sphere, &origin, 4, |s| (s.arc, s.h), false)?;
    out.push(c.result(fails, n));

    let c = Check { suite: "sphere", name: "upsilon-isomorphism", anchor: "doubling is a simplicial embedding" };
    let arcs = SpottedArcGraph { height_cap: BALL_HEIGHT_CAP };
    let b = ball(&arcs, &SpottedArc::half(Slope::ZERO, 0), 3, lim)?;
    let mut fails = Failures::default();
    let mut images = std::collections::HashSet::new();
    for (x, _) in &b.members {
        let s = upsilon(*x)?;
        let mapped: Result<Vec<SpottedSphere>> = arcs.neighbors(x).into_iter().map(upsilon).collect();
        if !images.insert(s) || mapped? != sphere.neighbors(&s) {
            fails.push(x.to_string());
        }
    }
    out.push(c.result(fails, b.len()));

    let c = Check { suite: "sphere", name: "theta-retraction", anchor: "theta undoes doubling and is Lipschitz" };
    let b = ball(&sphere, &origin, 3, lim)?;
    let mut fails = Failures::default();
    for (s, _) in &b.members {
        let x = theta_sphere(*s);
        if upsilon(x)? != *s || theta_sphere(upsilon(x)?) != x {
            fails.push(s.to_string());
        }
        for t in sphere.neighbors(s) {
            if !arcs.neighbors(&x).contains(&theta_sphere(t)) {
                fails.push(format!("{s} - {t}"));
            }
        }
    }
    out.push(c.result(fails, b.len()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_suite_passes() {
        let report = run_suite("arc", None).unwrap();
        assert!(report.checks.len() >= 4);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("torus", None), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn fault_names() {
        assert_eq!("omega-twist-gap".parse::<Fault>().unwrap(), Fault::OmegaTwistGap);
        assert_eq!(Fault::AnnularOffset.to_string(), "annular-offset");
        assert!("nothing".parse::<Fault>().is_err());
    }
}
