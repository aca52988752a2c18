//! Shared naive oracle for the integration suites.
//!
//! Everything here is computed the slow, obvious way — adjacency matrix,
//! Floyd–Warshall distances, direct double-loop sums in `BigRational` from
//! the first operation — and deliberately shares no code paths with the
//! library (which uses bitset BFS and checked `i128` accumulators). The two
//! implementations must agree exactly.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use eccaudit::bounds::BoundKind;
use eccaudit::graph::Graph;
use eccaudit::graph6::encode_graph6;
use eccaudit::invariants::{
    degree_invariants, ecc_invariants, edge_ecc_invariants, m1_edge_form,
};

pub fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn recip(x: i64) -> BigRational {
    assert!(x != 0, "oracle reciprocal of zero");
    int(x).recip()
}

/// Degrees, all-pairs distances, and eccentricities, the naive way.
pub struct NaiveOracle {
    pub n: usize,
    pub deg: Vec<i64>,
    pub dist: Vec<Vec<Option<u32>>>,
    pub connected: bool,
    /// `None` when the graph is disconnected.
    pub ecc: Option<Vec<i64>>,
}

pub fn naive_oracle(g: &Graph) -> NaiveOracle {
    let n = g.n();
    let mut deg = vec![0i64; n];
    let mut dist: Vec<Vec<Option<u32>>> = vec![vec![None; n]; n];
    for (i, row) in dist.iter_mut().enumerate() {
        row[i] = Some(0);
    }
    for &(u, v) in g.edges() {
        let (u, v) = (u as usize, v as usize);
        deg[u] += 1;
        deg[v] += 1;
        dist[u][v] = Some(1);
        dist[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (dist[i][k], dist[k][j]) {
                    if dist[i][j].is_none_or(|d| a + b < d) {
                        dist[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    let connected = dist.iter().all(|row| row.iter().all(Option::is_some));
    let ecc = connected.then(|| {
        dist.iter()
            .map(|row| row.iter().map(|d| d.unwrap() as i64).max().unwrap_or(0))
            .collect()
    });
    NaiveOracle {
        n,
        deg,
        dist,
        connected,
        ecc,
    }
}

impl NaiveOracle {
    /// `Σ 1/(e(v)·deg(v))`; `None` when disconnected or any term divides by
    /// zero.
    pub fn i_eci(&self) -> Option<BigRational> {
        let ecc = self.ecc.as_ref()?;
        let mut sum = BigRational::zero();
        for (&e, &d) in ecc.iter().zip(&self.deg) {
            if e * d == 0 {
                return None;
            }
            sum += recip(e * d);
        }
        Some(sum)
    }

    fn vertex_sum(&self, term: impl Fn(i64, i64) -> i64) -> Option<i64> {
        let ecc = self.ecc.as_ref()?;
        Some((0..self.n).map(|v| term(ecc[v], self.deg[v])).sum())
    }

    pub fn eci(&self) -> Option<i64> {
        self.vertex_sum(|e, d| e * d)
    }

    pub fn m1_eci(&self) -> Option<i64> {
        self.vertex_sum(|e, d| e * d * d)
    }

    pub fn eci1(&self) -> Option<i64> {
        self.vertex_sum(|e, d| e * e * d)
    }

    pub fn m1_eci1(&self) -> Option<i64> {
        self.vertex_sum(|e, d| e * e * d * d)
    }

    /// The audited exact value of `kind` for this graph.
    pub fn kind_value(&self, kind: BoundKind) -> Option<BigRational> {
        match kind {
            BoundKind::IEci => self.i_eci(),
            BoundKind::M1Eci => self.m1_eci().map(int),
            BoundKind::Eci1 => self.eci1().map(int),
            BoundKind::M1Eci1 => self.m1_eci1().map(int),
        }
    }
}

/// Compares every invariant the library computes for `g` against this
/// module's naive recomputation; panics with the graph6 string on any
/// disagreement.
pub fn assert_graph_matches_oracle(g: &Graph) {
    let tag = encode_graph6(g);
    let o = naive_oracle(g);

    assert_eq!(g.is_connected(), o.connected, "connectivity of {tag}");
    let lib_deg: Vec<i64> = g.degrees().iter().map(|&d| d as i64).collect();
    assert_eq!(lib_deg, o.deg, "degrees of {tag}");
    let lib_ecc: Vec<Option<i64>> = g
        .eccentricities()
        .iter()
        .map(|e| e.finite().map(|k| k as i64))
        .collect();
    match &o.ecc {
        Some(ecc) => {
            let want: Vec<Option<i64>> = ecc.iter().map(|&e| Some(e)).collect();
            assert_eq!(lib_ecc, want, "eccentricities of {tag}");
        }
        None => assert!(
            lib_ecc.iter().all(Option::is_none),
            "disconnected {tag} must have all-infinite eccentricities"
        ),
    }

    // Degree bundle.
    let d = degree_invariants(g);
    assert_eq!(d.n as usize, o.n, "n of {tag}");
    assert_eq!(d.m as usize, g.edges().len(), "m of {tag}");
    let m1: i64 = o.deg.iter().map(|&x| x * x).sum();
    let m1_edges: i64 = g
        .edges()
        .iter()
        .map(|&(u, v)| o.deg[u as usize] + o.deg[v as usize])
        .sum();
    assert_eq!(m1, m1_edges, "the two M1 forms disagree on {tag}");
    assert_eq!(int(d.m1 as i64), int(m1), "M1 of {tag}");
    assert_eq!(int(m1_edge_form(g) as i64), int(m1_edges), "M1 edge form of {tag}");
    let m2: i64 = g
        .edges()
        .iter()
        .map(|&(u, v)| o.deg[u as usize] * o.deg[v as usize])
        .sum();
    assert_eq!(d.m2 as i64, m2, "M2 of {tag}");
    let f: i64 = o.deg.iter().map(|&x| x * x * x).sum();
    assert_eq!(d.f as i64, f, "F of {tag}");
    let id = if o.deg.contains(&0) {
        None
    } else {
        Some(o.deg.iter().map(|&x| recip(x)).sum::<BigRational>())
    };
    assert_eq!(d.id, id, "ID of {tag}");
    let m1_inv: BigRational = g
        .edges()
        .iter()
        .map(|&(u, v)| recip(o.deg[u as usize] + o.deg[v as usize]))
        .sum();
    assert_eq!(d.m1_inv, m1_inv, "M1_inv of {tag}");

    // Eccentricity bundle: defined exactly when connected.
    let e = ecc_invariants(g);
    assert_eq!(e.is_some(), o.connected, "ecc bundle presence for {tag}");
    if let Some(e) = &e {
        assert_eq!(Some(e.eci as i64), o.eci(), "ECI of {tag}");
        assert_eq!(e.i_eci, o.i_eci(), "I_ECI of {tag}");
        assert_eq!(Some(e.m1_eci as i64), o.m1_eci(), "M1_ECI of {tag}");
        assert_eq!(Some(e.eci1 as i64), o.eci1(), "ECI1 of {tag}");
        assert_eq!(Some(e.m1_eci1 as i64), o.m1_eci1(), "M1_ECI1 of {tag}");
    }

    // Edge-eccentricity bundle, with ê(uv) = min(e(u), e(v)).
    let ee = edge_ecc_invariants(g);
    assert_eq!(ee.is_some(), o.connected, "edge-ecc bundle presence for {tag}");
    if let (Some(ee), Some(ecc)) = (&ee, &o.ecc) {
        let mut xi_inv = BigRational::zero();
        let (mut f_eci, mut m2_eci, mut f_eci1, mut m2_eci1) = (0i64, 0i64, 0i64, 0i64);
        let (mut s1, mut s2) = (0i64, 0i64);
        for &(u, v) in g.edges() {
            let (u, v) = (u as usize, v as usize);
            let edge_ecc = ecc[u].min(ecc[v]);
            let (du, dv) = (o.deg[u], o.deg[v]);
            xi_inv += recip(edge_ecc * (du + dv));
            f_eci += edge_ecc * (du * du + dv * dv);
            m2_eci += edge_ecc * du * dv;
            f_eci1 += edge_ecc * edge_ecc * (du * du + dv * dv);
            m2_eci1 += edge_ecc * edge_ecc * du * dv;
            s1 += edge_ecc * (du + dv);
            s2 += edge_ecc * edge_ecc * (du + dv);
        }
        assert_eq!(ee.xi_inv, xi_inv, "xi_inv of {tag}");
        assert_eq!(ee.f_eci as i64, f_eci, "F_ECI of {tag}");
        assert_eq!(ee.m2_eci as i64, m2_eci, "M2_ECI of {tag}");
        assert_eq!(ee.f_eci1 as i64, f_eci1, "F_ECI1 of {tag}");
        assert_eq!(ee.m2_eci1 as i64, m2_eci1, "M2_ECI1 of {tag}");
        assert_eq!(ee.s1 as i64, s1, "S1 of {tag}");
        assert_eq!(ee.s2 as i64, s2, "S2 of {tag}");
    }
}
