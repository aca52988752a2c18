//! Total transformation graphs `G^xyz` for the eight sign patterns.
//!
//! `G^xyz` has one vertex per vertex of `G` ("originals", indices `0..n`)
//! and one per edge of `G` ("edge-vertices", indices `n..n+m` in
//! lexicographic edge order). Adjacency is governed by three signs:
//!
//! - `x`: two originals are adjacent iff they are adjacent in `G` (`+`) or
//!   iff they are not (`-`);
//! - `y`: two edge-vertices are adjacent iff the edges share an endpoint
//!   (`+`) or iff they do not (`-`);
//! - `z`: an original and an edge-vertex are adjacent iff the vertex is an
//!   endpoint of the edge (`+`) or iff it is not (`-`).
//!
//! `G^{+++}` is the total graph of `G`; flipping all three signs yields the
//! complement of the transform (see [`complement_partner`]).
//!
//! Each pattern has a bound family `T1..T8` attached to it (see
//! [`crate::bounds`]); [`SignPattern::family`] gives the mapping.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;

/// One adjacency sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The opposite sign.
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A triple of signs `xyz` selecting one of the eight transformations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignPattern {
    pub x: Sign,
    pub y: Sign,
    pub z: Sign,
}

/// Rejected sign-pattern text.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("pattern must be three signs from '+'/'-', got {0:?}")]
pub struct PatternError(pub String);

impl SignPattern {
    /// All eight patterns in report order.
    pub const ALL: [SignPattern; 8] = [
        SignPattern::of(Sign::Plus, Sign::Plus, Sign::Plus),
        SignPattern::of(Sign::Plus, Sign::Plus, Sign::Minus),
        SignPattern::of(Sign::Plus, Sign::Minus, Sign::Plus),
        SignPattern::of(Sign::Plus, Sign::Minus, Sign::Minus),
        SignPattern::of(Sign::Minus, Sign::Plus, Sign::Plus),
        SignPattern::of(Sign::Minus, Sign::Plus, Sign::Minus),
        SignPattern::of(Sign::Minus, Sign::Minus, Sign::Plus),
        SignPattern::of(Sign::Minus, Sign::Minus, Sign::Minus),
    ];

    const fn of(x: Sign, y: Sign, z: Sign) -> SignPattern {
        SignPattern { x, y, z }
    }

    /// The pattern with every sign flipped; `apply(g, p.partner())` is the
    /// complement of `apply(g, p)`.
    pub fn partner(self) -> SignPattern {
        SignPattern::of(self.x.flip(), self.y.flip(), self.z.flip())
    }

    /// Index of the bound family attached to this pattern (`1..=8`):
    /// `+++`→1, `---`→2, `++-`→3, `--+`→4, `+-+`→5, `-+-`→6, `-++`→7,
    /// `+--`→8.
    pub fn family(self) -> u8 {
        use Sign::*;
        match (self.x, self.y, self.z) {
            (Plus, Plus, Plus) => 1,
            (Minus, Minus, Minus) => 2,
            (Plus, Plus, Minus) => 3,
            (Minus, Minus, Plus) => 4,
            (Plus, Minus, Plus) => 5,
            (Minus, Plus, Minus) => 6,
            (Minus, Plus, Plus) => 7,
            (Plus, Minus, Minus) => 8,
        }
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in [self.x, self.y, self.z] {
            f.write_str(if s == Sign::Plus { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl FromStr for SignPattern {
    type Err = PatternError;

    /// Accepts ASCII `+`/`-` and the typographic minus `−`.
    fn from_str(s: &str) -> Result<SignPattern, PatternError> {
        let signs: Vec<Sign> = s
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '−' => Ok(Sign::Minus),
                _ => Err(PatternError(s.to_string())),
            })
            .collect::<Result<_, _>>()?;
        match signs[..] {
            [x, y, z] => Ok(SignPattern::of(x, y, z)),
            _ => Err(PatternError(s.to_string())),
        }
    }
}

impl Serialize for SignPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// What a transform vertex came from: `Original(v)` for a vertex of `G`,
/// `EdgeV(u, v)` for an edge (`u < v`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Original(u32),
    EdgeV(u32, u32),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Original(v) => write!(f, "v{v}"),
            Provenance::EdgeV(u, v) => write!(f, "e{u}-{v}"),
        }
    }
}

impl Serialize for Provenance {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A transformation graph together with the meaning of each vertex index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformedGraph {
    pub graph: Graph,
    /// `provenance[k]` describes transform vertex `k`: originals `0..n`
    /// first, then edges of `G` in lexicographic order.
    pub provenance: Vec<Provenance>,
}

/// Builds `G^p`.
///
/// ```
/// use eccaudit::{graph::Graph, transform::apply};
/// let k2 = Graph::new(2, &[(0, 1)]).unwrap();
/// let total = apply(&k2, "+++".parse().unwrap());
/// assert_eq!(total.graph.edges(), &[(0, 1), (0, 2), (1, 2)]); // K3
/// ```
pub fn apply(g: &Graph, p: SignPattern) -> TransformedGraph {
    let n = g.n();
    let m = g.m();
    let ge = g.edges();
    let total = n + m;
    let incident = |v: usize, e: usize| {
        let (a, b) = ge[e];
        v as u32 == a || v as u32 == b
    };
    let share = |e: usize, f: usize| {
        let (a, b) = ge[e];
        let (c, d) = ge[f];
        a == c || a == d || b == c || b == d
    };
    let mut edges = Vec::new();
    for i in 0..total {
        for j in (i + 1)..total {
            let adjacent = if j < n {
                (p.x == Sign::Plus) == g.has_edge(i, j)
            } else if i < n {
                (p.z == Sign::Plus) == incident(i, j - n)
            } else {
                (p.y == Sign::Plus) == share(i - n, j - n)
            };
            if adjacent {
                edges.push((i as u32, j as u32));
            }
        }
    }
    let provenance = (0..n as u32)
        .map(Provenance::Original)
        .chain(ge.iter().map(|&(u, v)| Provenance::EdgeV(u, v)))
        .collect();
    TransformedGraph {
        graph: Graph::new(total, &edges).expect("transform edges are valid"),
        provenance,
    }
}

/// Degrees that the bound families' derivations claim for `G^p`, in
/// provenance order, returned verbatim (the `--+` family's claim for
/// originals, `n + 1 - deg`, disagrees with the constructed graphs whenever
/// `deg != 2`; the audit reports those mismatches rather than hiding them).
pub fn predicted_degrees(g: &Graph, p: SignPattern) -> Vec<i64> {
    let n = g.n() as i64;
    let m = g.m() as i64;
    let deg: Vec<i64> = g.degrees().iter().map(|&d| d as i64).collect();
    use Sign::*;
    let vertex = |d: i64| match (p.x, p.y, p.z) {
        (Plus, Plus, Plus) | (Plus, Minus, Plus) => 2 * d,
        (Plus, Plus, Minus) | (Plus, Minus, Minus) => m,
        (Minus, Plus, Plus) => n - 1,
        (Minus, Plus, Minus) | (Minus, Minus, Minus) => m + n - 1 - 2 * d,
        (Minus, Minus, Plus) => n + 1 - d,
    };
    let edge = |du: i64, dv: i64| match (p.y, p.z) {
        (Plus, Plus) => du + dv,
        (Plus, Minus) => n - 4 + du + dv,
        (Minus, Plus) => m + 3 - (du + dv),
        (Minus, Minus) => m + n - 1 - (du + dv),
    };
    deg.iter()
        .map(|&d| vertex(d))
        .chain(
            g.edges()
                .iter()
                .map(|&(u, v)| edge(deg[u as usize], deg[v as usize])),
        )
        .collect()
}

/// Per-vertex eccentricity caps for `G^p`, in provenance order.
///
/// For `+++` the caps need `G` connected (`None` otherwise): `e_G(v) + 1`
/// for an original and `min(e_G(u), e_G(v)) + 1` for an edge-vertex. For
/// `++-` and `+--` the cap is the constant 4; for the remaining five
/// patterns it is 3.
pub fn ecc_caps(g: &Graph, p: SignPattern) -> Vec<Option<u32>> {
    use Sign::*;
    let total = g.n() + g.m();
    match (p.x, p.y, p.z) {
        (Plus, Plus, Plus) => {
            let ecc: Vec<Option<u32>> = g.eccentricities().iter().map(|e| e.finite()).collect();
            let vertex_caps = ecc.iter().map(|e| e.map(|e| e + 1));
            let edge_caps = g.edges().iter().map(|&(u, v)| {
                match (ecc[u as usize], ecc[v as usize]) {
                    (Some(a), Some(b)) => Some(a.min(b) + 1),
                    _ => None,
                }
            });
            vertex_caps.chain(edge_caps).collect()
        }
        (Plus, Plus, Minus) | (Plus, Minus, Minus) => vec![Some(4); total],
        _ => vec![Some(3); total],
    }
}

/// Cap for a single provenance index (see [`ecc_caps`]).
pub fn ecc_cap(g: &Graph, p: SignPattern, index: usize) -> Option<u32> {
    ecc_caps(g, p)[index]
}

/// The pattern whose transform is the complement of `p`'s (all three signs
/// flipped).
pub fn complement_partner(p: SignPattern) -> SignPattern {
    p.partner()
}
