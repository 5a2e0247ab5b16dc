use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A reduced slope `p/q` with `q >= 0`, or `∞ = 1/0`.
///
/// The ordering is the Stern–Brocot order used for every deterministic
/// enumeration and tie-break: first by generation in the mediant tree
/// (`0/1` and `∞` are generation 0, `±1/1` generation 1, and so on), then by
/// absolute value, then positive before negative.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub const ZERO: Slope = Slope { p: 0, q: 1 };
    pub const INFINITY: Slope = Slope { p: 1, q: 0 };

    pub fn new(p: i64, q: i64) -> Result<Slope> {
        canonicalize(p, q)
    }

    /// Integer slope `n/1`.
    pub fn integer(n: i64) -> Slope {
        Slope { p: n, q: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.p
    }

    pub fn denom(&self) -> i64 {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }

    /// `max(|p|, q)`, the quantity bounded by neighbour caps.
    pub fn height(&self) -> u64 {
        self.p.unsigned_abs().max(self.q as u64)
    }

    /// Depth in the mediant tree: the sum of the continued fraction partial
    /// quotients of `|p|/q`.
    pub fn generation(&self) -> u64 {
        let (mut a, mut b) = (self.p.unsigned_abs(), self.q as u64);
        if a == 0 || b == 0 {
            return 0;
        }
        let mut sum = 0;
        while b != 0 {
            sum += a / b;
            (a, b) = (b, a % b);
        }
        sum
    }
}

/// Reduces `(p, q)` to the unique representative with `q >= 0`.
pub fn canonicalize(p: i64, q: i64) -> Result<Slope> {
    if p == 0 && q == 0 {
        return Err(Error::ZeroSlope);
    }
    if q == 0 {
        return Ok(Slope::INFINITY);
    }
    let g = p.gcd(&q);
    let (mut p, mut q) = (p / g, q / g);
    if q < 0 {
        p = -p;
        q = -q;
    }
    Ok(Slope { p, q })
}

/// Algebraic intersection `|a.p * b.q - a.q * b.p|` of the two slopes.
pub fn pairing(a: Slope, b: Slope) -> u64 {
    let det = a.p as i128 * b.q as i128 - a.q as i128 * b.p as i128;
    det.unsigned_abs() as u64
}

/// Whether the arcs can be realized disjointly. Equal slopes count as
/// disjoint; graph adjacency additionally asks for distinct vertices.
pub fn disjoint(a: Slope, b: Slope) -> bool {
    pairing(a, b) <= 1
}

/// All Farey neighbours of `a` of height at most `height_cap`, in
/// Stern–Brocot order.
///
/// If `(r, s)` is one neighbour then every neighbour is `±(r + t·p, s + t·q)`
/// for some integer `t`, so the enumeration walks `t` over the window allowed
/// by the cap.
pub fn farey_neighbors(a: Slope, height_cap: u64) -> Vec<Slope> {
    let cap = height_cap as i64;
    // Solve a.p * s - a.q * r = 1.
    let (r0, s0) = if a.q == 0 {
        (0, 1)
    } else {
        let e = a.p.extended_gcd(&a.q);
        // e.x * p + e.y * q = ±1, so (r, s) = ±(-e.y, e.x).
        let sign = e.gcd.signum();
        (-e.y * sign, e.x * sign)
    };
    debug_assert_eq!(a.p * s0 - a.q * r0, 1);

    // Range of t keeping the coordinate that moves with a.q (or a.p when
    // a = ∞) inside [-cap, cap].
    let (base, step) = if a.q == 0 { (r0, a.p) } else { (s0, a.q) };
    let lo = Integer::div_ceil(&(-cap - base), &step);
    let hi = Integer::div_floor(&(cap - base), &step);

    let mut out: Vec<Slope> = (lo..=hi)
        .filter_map(|t| canonicalize(r0 + t * a.p, s0 + t * a.q).ok())
        .filter(|b| b.height() <= height_cap)
        .collect();
    out.sort();
    out.dedup();
    out
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        self.generation()
            .cmp(&other.generation())
            .then_with(|| {
                // |p|/q against |r|/s, with ∞ largest.
                let lhs = self.p.unsigned_abs() as u128 * other.q as u128;
                let rhs = other.p.unsigned_abs() as u128 * self.q as u128;
                match (self.q, other.q) {
                    (0, 0) => Ordering::Equal,
                    (0, _) => Ordering::Greater,
                    (_, 0) => Ordering::Less,
                    _ => lhs.cmp(&rhs),
                }
            })
            .then_with(|| other.p.signum().cmp(&self.p.signum()))
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 0 {
            f.write_str("inf")
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Slope> {
        let err = || Error::Parse {
            kind: "slope",
            input: s.to_owned(),
        };
        let t = s.trim();
        if t == "inf" || t == "∞" {
            return Ok(Slope::INFINITY);
        }
        let (p, q) = match t.split_once('/') {
            Some((p, q)) => (p.parse().map_err(|_| err())?, q.parse().map_err(|_| err())?),
            None => (t.parse().map_err(|_| err())?, 1),
        };
        canonicalize(p, q).map_err(|_| err())
    }
}

impl TryFrom<String> for Slope {
    type Error = Error;

    fn try_from(s: String) -> Result<Slope> {
        s.parse()
    }
}

impl From<Slope> for String {
    fn from(s: Slope) -> String {
        s.to_string()
    }
}
