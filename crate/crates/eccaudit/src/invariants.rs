//! Exact invariant bundles of a graph.
//!
//! Three bundles, split by what they need:
//!
//! - [`DegreeInvariants`]: functions of the degree sequence only, defined
//!   for every graph;
//! - [`EccInvariants`]: the four eccentric-connectivity indices, needing
//!   vertex eccentricities — undefined (as a whole) on disconnected graphs;
//! - [`EdgeEccInvariants`]: edge sums weighted by the edge eccentricity
//!   `ê(uv) = min(e(u), e(v))` — likewise undefined on disconnected graphs.
//!
//! Integer-valued sums accumulate in checked `i128`; rational ones are
//! `BigRational`. Empty sums are 0 (so `m = 0` gives zero bundles, not
//! errors; formulas that cannot tolerate that guard for it themselves).

use num_rational::BigRational;
use num_traits::Zero;

use crate::graph::Graph;
use crate::ratio::{add, mul, rat};

/// Degree-sequence invariants. `m1` is the sum of squared degrees, `m2` the
/// sum of `deg(u)·deg(v)` over edges, `f` the sum of cubed degrees, `id` the
/// sum of reciprocal degrees (undefined when a vertex is isolated), and
/// `m1_inv` the sum of `1/(deg(u)+deg(v))` over edges.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeInvariants {
    pub n: u64,
    pub m: u64,
    pub m1: i128,
    pub m2: i128,
    pub f: i128,
    pub id: Option<BigRational>,
    pub m1_inv: BigRational,
}

/// Eccentric-connectivity indices: `eci = Σ e(v)·deg(v)`, `i_eci` its
/// reciprocal-term variant `Σ 1/(e(v)·deg(v))` (undefined when some
/// `e(v)·deg(v)` is zero, i.e. on the one-vertex graph), `m1_eci =
/// Σ e(v)·deg(v)²`, `eci1 = Σ e(v)²·deg(v)`, `m1_eci1 = Σ e(v)²·deg(v)²`.
#[derive(Debug, Clone, PartialEq)]
pub struct EccInvariants {
    pub eci: i128,
    pub i_eci: Option<BigRational>,
    pub m1_eci: i128,
    pub eci1: i128,
    pub m1_eci1: i128,
}

/// Edge sums weighted by `ê(uv) = min(e(u), e(v))`:
/// `xi_inv = Σ 1/(ê(uv)·(deg(u)+deg(v)))`,
/// `f_eci = Σ ê(uv)·(deg(u)²+deg(v)²)`, `m2_eci = Σ ê(uv)·deg(u)·deg(v)`,
/// `f_eci1` and `m2_eci1` the same with `ê(uv)²`, and
/// `s1 = Σ ê(uv)·(deg(u)+deg(v))`, `s2 = Σ ê(uv)²·(deg(u)+deg(v))`.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeEccInvariants {
    pub xi_inv: BigRational,
    pub f_eci: i128,
    pub m2_eci: i128,
    pub f_eci1: i128,
    pub m2_eci1: i128,
    pub s1: i128,
    pub s2: i128,
}

/// Computes the degree bundle (defined for every graph).
pub fn degree_invariants(g: &Graph) -> DegreeInvariants {
    let deg: Vec<i128> = g.degrees().iter().map(|&d| d as i128).collect();
    let mut m1 = 0;
    let mut f = 0;
    let mut id = Some(BigRational::zero());
    for &d in &deg {
        m1 = add(m1, mul(d, d));
        f = add(f, mul(d, mul(d, d)));
        id = match (id, d) {
            (Some(_), 0) => None,
            (acc, d) => acc.map(|acc| acc + rat(1, d)),
        };
    }
    let mut m2 = 0;
    let mut m1_inv = BigRational::zero();
    for &(u, v) in g.edges() {
        let (du, dv) = (deg[u as usize], deg[v as usize]);
        m2 = add(m2, mul(du, dv));
        m1_inv += rat(1, du + dv);
    }
    DegreeInvariants {
        n: g.n() as u64,
        m: g.m() as u64,
        m1,
        m2,
        f,
        id,
        m1_inv,
    }
}

/// The first Zagreb sum computed over edges, `Σ_E (deg(u)+deg(v))`; equal to
/// [`DegreeInvariants::m1`] on every graph (the identity the audit checks).
pub fn m1_edge_form(g: &Graph) -> i128 {
    let deg = g.degrees();
    g.edges()
        .iter()
        .map(|&(u, v)| (deg[u as usize] + deg[v as usize]) as i128)
        .fold(0, add)
}

/// Computes the eccentricity bundle; `None` iff `g` is disconnected.
pub fn ecc_invariants(g: &Graph) -> Option<EccInvariants> {
    let ecc = finite_eccentricities(g)?;
    let mut inv = EccInvariants {
        eci: 0,
        i_eci: Some(BigRational::zero()),
        m1_eci: 0,
        eci1: 0,
        m1_eci1: 0,
    };
    for (v, &e) in ecc.iter().enumerate() {
        let d = g.degree(v) as i128;
        inv.eci = add(inv.eci, mul(e, d));
        inv.m1_eci = add(inv.m1_eci, mul(e, mul(d, d)));
        inv.eci1 = add(inv.eci1, mul(mul(e, e), d));
        inv.m1_eci1 = add(inv.m1_eci1, mul(mul(e, e), mul(d, d)));
        inv.i_eci = match (inv.i_eci, mul(e, d)) {
            (Some(_), 0) => None,
            (acc, ed) => acc.map(|acc| acc + rat(1, ed)),
        };
    }
    Some(inv)
}

/// Computes the edge-eccentricity bundle; `None` iff `g` is disconnected.
pub fn edge_ecc_invariants(g: &Graph) -> Option<EdgeEccInvariants> {
    let ecc = finite_eccentricities(g)?;
    let deg = g.degrees();
    let mut inv = EdgeEccInvariants {
        xi_inv: BigRational::zero(),
        f_eci: 0,
        m2_eci: 0,
        f_eci1: 0,
        m2_eci1: 0,
        s1: 0,
        s2: 0,
    };
    for &(u, v) in g.edges() {
        let (du, dv) = (deg[u as usize] as i128, deg[v as usize] as i128);
        let e = ecc[u as usize].min(ecc[v as usize]);
        let e2 = mul(e, e);
        let sq_sum = add(mul(du, du), mul(dv, dv));
        inv.xi_inv += rat(1, mul(e, du + dv));
        inv.f_eci = add(inv.f_eci, mul(e, sq_sum));
        inv.m2_eci = add(inv.m2_eci, mul(e, mul(du, dv)));
        inv.f_eci1 = add(inv.f_eci1, mul(e2, sq_sum));
        inv.m2_eci1 = add(inv.m2_eci1, mul(e2, mul(du, dv)));
        inv.s1 = add(inv.s1, mul(e, du + dv));
        inv.s2 = add(inv.s2, mul(e2, du + dv));
    }
    Some(inv)
}

/// Eccentricities as `i128`, or `None` when any is infinite.
fn finite_eccentricities(g: &Graph) -> Option<Vec<i128>> {
    g.eccentricities()
        .into_iter()
        .map(|e| e.finite().map(i128::from))
        .collect()
}
