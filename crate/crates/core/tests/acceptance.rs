//! Acceptance criteria. Runs without the libtest harness so every criterion
//! prints one PASS/FAIL line, in order, and timings are not skewed by
//! criteria running concurrently.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spotflat_core::arc::{canonicalize, spot_forget, Slope, SpottedArc};
use spotflat_core::certify::{certify_flat, CertifyConfig, FlatModel, QiConstants};
use spotflat_core::graph::{
    ball, bfs_tree, distance, distance_unidirectional, geodesic, FareyGraph, ImplicitGraph,
    SearchLimits,
};
use spotflat_core::handlebody::{
    annular_intersection, ibundle_over_arc, inject, psi_inv, push_disk, theta, xi, OmegaGraph,
    SpottedDisk,
};
use spotflat_core::sphere::{
    intersection_circles, sphere_spot_forget, upsilon, upsilon0, SphereGraph, SpottedSphere,
};
use spotflat_core::suite::{run_suite, Fault};

/// Height cap of the Farey graph under the exhaustively enumerated balls.
const BALL_HEIGHT_CAP: u64 = 10;

fn report(id: u32, title: &str, failures: &[String], elapsed: Duration, limit: Duration) {
    let ok = failures.is_empty() && elapsed < limit;
    println!(
        "criterion {id:>2} {}: {title} ({:.2}s, limit {}s){}",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs(),
        failures.first().map(|f| format!(" first failure: {f}")).unwrap_or_default()
    );
    assert!(failures.is_empty(), "criterion {id}: {} failures, first {}", failures.len(), failures[0]);
    assert!(elapsed < limit, "criterion {id}: took {elapsed:?}, limit {limit:?}");
}

fn random_slope(rng: &mut ChaCha8Rng, bound: i64) -> Slope {
    loop {
        if let Ok(s) = canonicalize(rng.gen_range(-bound..=bound), rng.gen_range(0..=bound)) {
            return s;
        }
    }
}

/// Graph distance, arc distance and twist gap for every pair of the ball of
/// `radius` around `center`. Arc distances come from separate searches in
/// the Farey graph.
fn ball_pair_distances<G: ImplicitGraph>(
    g: &G,
    center: &G::Vertex,
    radius: u32,
    coords: impl Fn(&G::Vertex) -> (Slope, i64),
) -> Vec<(String, u32, u32, u32)> {
    let lim = SearchLimits::default();
    let members: Vec<G::Vertex> = ball(g, center, radius, lim).unwrap().members.into_iter().map(|(v, _)| v).collect();
    let farey = FareyGraph::new(BALL_HEIGHT_CAP);
    let mut farey_trees = HashMap::new();
    let mut out = Vec::new();
    for (i, x) in members.iter().enumerate() {
        let tree = bfs_tree(g, x, 2 * radius, lim).unwrap();
        let (xa, xt) = coords(x);
        let arc_tree = farey_trees
            .entry(xa)
            .or_insert_with(|| bfs_tree(&farey, &xa, 2 * radius, lim).unwrap());
        for y in &members[i + 1..] {
            let (ya, yt) = coords(y);
            out.push((
                format!("{} to {}", g.encode(x), g.encode(y)),
                tree.distance_to(y).unwrap(),
                arc_tree.distance_to(&ya).unwrap(),
                xt.abs_diff(yt) as u32,
            ));
        }
    }
    out
}

fn criterion_01_intersection_table() {
    let t = Instant::now();
    let mut failures = vec![];
    for k in 2..=10i64 {
        let got = [-1, 0, 1].map(|l| annular_intersection(k, l));
        let want = [2 * k, 2 * k - 2, 2 * k - 4].map(|v| v as u64);
        if got != want {
            failures.push(format!("k={k}: {got:?} != {want:?}"));
        }
    }
    for k in -10..=-2i64 {
        let got = [-1, 0, 1].map(|l| annular_intersection(k, l));
        let want = [-2 * k - 4, -2 * k - 2, -2 * k].map(|v| v as u64);
        if got != want {
            failures.push(format!("k={k}: {got:?} != {want:?}"));
        }
    }
    report(1, "intersection numbers against the three central pushes", &failures, t.elapsed(), Duration::from_secs(1));
}

fn criterion_02_sphere_circle_counts() {
    let t = Instant::now();
    let failures: Vec<String> = (1..=10i64)
        .filter(|&k| intersection_circles(0, k) != (k - 1) as u64)
        .map(|k| format!("k={k}: {}", intersection_circles(0, k)))
        .collect();
    report(2, "k half twists give k - 1 intersection circles", &failures, t.elapsed(), Duration::from_secs(1));
}

fn criterion_03_product_metric_identity() {
    let t = Instant::now();
    let g = OmegaGraph::new(BALL_HEIGHT_CAP);
    let pairs = ball_pair_distances(&g, &SpottedDisk::new(Slope::ZERO, 0), 5, |v| (v.arc, v.k));
    assert!(pairs.len() > 100_000);
    let failures: Vec<String> = pairs
        .iter()
        .filter(|(_, d, da, dk)| *d != (*da).max(*dk))
        .map(|(p, d, da, dk)| format!("{p}: d={d}, d_A={da}, dk={dk}"))
        .collect();
    report(3, "omega distance equals max(d_A, |dk|) on the radius-5 ball", &failures, t.elapsed(), Duration::from_secs(60));
}

fn criterion_04_psi_quasi_isometry_bounds() {
    let t = Instant::now();
    let g = OmegaGraph::new(BALL_HEIGHT_CAP);
    let pairs = ball_pair_distances(&g, &SpottedDisk::new(Slope::ZERO, 0), 5, |v| (theta(*v), xi(*v)));
    let failures: Vec<String> = pairs
        .iter()
        .filter(|(_, d, da, dk)| {
            let d0 = da + dk;
            !(d0 <= 2 * d && *d <= d0)
        })
        .map(|(p, d, da, dk)| format!("{p}: d={d}, d0={}", da + dk))
        .collect();
    report(4, "d0 / 2 <= omega distance <= d0 on the radius-5 ball", &failures, t.elapsed(), Duration::from_secs(60));
}

fn criterion_05_retraction_identities() {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut failures = vec![];
    for _ in 0..1000 {
        let a = random_slope(&mut rng, 500);
        let x = psi_inv(a, rng.gen_range(-100..=100));
        let n = rng.gen_range(-10..=10);
        let k = rng.gen_range(-10..=10);
        let d = ibundle_over_arc(a);
        if theta(inject(d)) != a {
            failures.push(format!("theta(inject({a})) != {a}"));
        }
        if theta(push_disk(x, n)) != theta(x) {
            failures.push(format!("theta moves under pushing {x} by {n}"));
        }
        if !(-2..=2).contains(&xi(inject(d))) {
            failures.push(format!("xi(inject({a})) = {}", xi(inject(d))));
        }
        if (xi(push_disk(x, k)) - (xi(x) + k)).abs() > 2 {
            failures.push(format!("xi drifts pushing {x} by {k}"));
        }
    }
    report(5, "retraction identities on 1000 random inputs", &failures, t.elapsed(), Duration::from_secs(5));
}

fn criterion_06_flat_certificate() {
    let t = Instant::now();
    let config = CertifyConfig::default();
    assert_eq!((config.n, config.model), (6, FlatModel::Omega));
    let cert = certify_flat(&config).unwrap();
    let elapsed = t.elapsed();
    let side = config.n + 1;
    let mut failures = vec![];
    for a in 0..side * side {
        for b in 0..side * side {
            let expected = (a / side).abs_diff(b / side).max((a % side).abs_diff(b % side)) as u32;
            if cert.distances[a][b] != expected {
                failures.push(format!("{} to {}: {} != {expected}", cert.grid[a], cert.grid[b], cert.distances[a][b]));
            }
        }
    }
    if !cert.success {
        failures.push("certificate reports failure".into());
    }
    if cert.constants.l1 != (QiConstants { l: 2.0, c: 0.0 }) || cert.constants.linf != (QiConstants { l: 1.0, c: 0.0 }) {
        failures.push(format!("constants {:?}", cert.constants));
    }
    if let Err(e) = cert.verify() {
        failures.push(e);
    }
    let again = certify_flat(&config).unwrap();
    if again.to_json().unwrap() != cert.to_json().unwrap() {
        failures.push("JSON differs between runs".into());
    }
    report(6, "7x7 grid is an exact flat, (L, C) = (2, 0) against d0", &failures, elapsed, Duration::from_secs(120));
}

fn criterion_07_diagram_commutes() {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut failures = vec![];
    for _ in 0..1000 {
        let x = SpottedArc::half(random_slope(&mut rng, 500), rng.gen_range(-200..=200));
        if sphere_spot_forget(upsilon(x).unwrap()) != upsilon0(spot_forget(x)) {
            failures.push(x.to_string());
        }
    }
    report(7, "spot removal commutes with doubling on 1000 random arcs", &failures, t.elapsed(), Duration::from_secs(5));
}

fn criterion_08_sphere_product_structure() {
    let t = Instant::now();
    let g = SphereGraph::new(BALL_HEIGHT_CAP);
    let pairs = ball_pair_distances(&g, &SpottedSphere::new(Slope::ZERO, 0), 4, |s| (s.arc, s.h));
    let failures: Vec<String> = pairs
        .iter()
        .filter(|(_, d, da, dh)| *d != (*da).max(*dh))
        .map(|(p, d, da, dh)| format!("{p}: d={d}, d_A={da}, dh={dh}"))
        .collect();
    report(8, "sphere model distance equals max(d_A, |dh|) on the radius-4 ball", &failures, t.elapsed(), Duration::from_secs(60));
}

fn criterion_09_engine_self_consistency() {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let g = FareyGraph::new(32);
    let lim = SearchLimits::default();
    let mut failures = vec![];
    for _ in 0..100 {
        let (a, b) = (random_slope(&mut rng, 32), random_slope(&mut rng, 32));
        let bi = distance(&g, &a, &b, 8, lim).unwrap();
        let uni = distance_unidirectional(&g, &a, &b, 8, lim).unwrap();
        if bi != uni {
            failures.push(format!("{a}, {b}: {bi} vs {uni}"));
        }
        if let Some(d) = bi.exact() {
            let path = geodesic(&g, &a, &b, 8, lim).unwrap();
            if path.len() != d as usize + 1 {
                failures.push(format!("geodesic {a} to {b} has {} steps, distance {d}", path.len() - 1));
            }
        }
    }
    report(9, "bidirectional and single-sided BFS agree; geodesics realize distances", &failures, t.elapsed(), Duration::from_secs(30));
}

fn criterion_10_negative_controls() {
    let t = Instant::now();
    let mut failures = vec![];
    let clean = run_suite("omega", None).unwrap();
    for name in ["product-metric", "intersection-table"] {
        if !clean.check(name).unwrap().passed {
            failures.push(format!("{name} fails without injection"));
        }
    }
    let widened = run_suite("omega", Some(Fault::OmegaTwistGap)).unwrap();
    if widened.check("product-metric").unwrap().passed || widened.passed() {
        failures.push("allowing twist gap 2 did not break the product identity".into());
    }
    let offset = run_suite("omega", Some(Fault::AnnularOffset)).unwrap();
    if offset.check("intersection-table").unwrap().passed || offset.passed() {
        failures.push("dropping the -2 did not break the intersection table".into());
    }
    report(10, "injected faults are detected", &failures, t.elapsed(), Duration::from_secs(180));
}

fn main() {
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let criteria: [fn(); 10] = [
        criterion_01_intersection_table,
        criterion_02_sphere_circle_counts,
        criterion_03_product_metric_identity,
        criterion_04_psi_quasi_isometry_bounds,
        criterion_05_retraction_identities,
        criterion_06_flat_certificate,
        criterion_07_diagram_commutes,
        criterion_08_sphere_product_structure,
        criterion_09_engine_self_consistency,
        criterion_10_negative_controls,
    ];
    let failed = criteria.into_iter().filter(|c| std::panic::catch_unwind(c).is_err()).count();
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
