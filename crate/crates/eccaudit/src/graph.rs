//! Simple undirected graphs on labeled vertices `0..n`.
//!
//! Adjacency is stored as fixed-width bit rows (one `u64` slice per vertex),
//! which keeps complementation and breadth-first search word-parallel; the
//! sorted edge list is kept alongside because most invariants in this crate
//! are sums over edges. No self-loops, no multi-edges.

use thiserror::Error;

/// Rejected inputs to [`Graph::new`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for order {1}")]
    VertexOutOfRange(u32, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge ({0},{1})")]
    DuplicateEdge(u32, u32),
}

/// Vertex eccentricity in a graph that may be disconnected.
///
/// `Finite(d) < Infinite` for every `d`, so `max()` over eccentricities gives
/// the diameter in the extended sense.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtendedEcc {
    Finite(u32),
    Infinite,
}

impl ExtendedEcc {
    /// The finite value, if any.
    pub fn finite(self) -> Option<u32> {
        match self {
            ExtendedEcc::Finite(d) => Some(d),
            ExtendedEcc::Infinite => None,
        }
    }
}

/// An immutable simple graph.
///
/// Equality is labeled equality: same order and same edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    /// Builds a graph on vertices `0..n` from an edge list.
    ///
    /// Edge endpoints may come in either order; the stored edge list is
    /// normalized to `u < v` and sorted lexicographically. Out-of-range
    /// endpoints, self-loops, and duplicates (including `(v,u)` after
    /// `(u,v)`) are rejected.
    ///
    /// ```
    /// use eccaudit::graph::Graph;
    /// let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
    /// assert_eq!(p3.degrees(), vec![1, 2, 1]);
    /// ```
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        let words = n.div_ceil(64);
        let mut g = Graph {
            n,
            words,
            bits: vec![0u64; n * words],
            edges: Vec::with_capacity(edges.len()),
        };
        for &(a, b) in edges {
            for v in [a, b] {
                if v as usize >= n {
                    return Err(GraphError::VertexOutOfRange(v, n));
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if g.has_edge(u as usize, v as usize) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            g.set_edge(u as usize, v as usize);
            g.edges.push((u, v));
        }
        g.edges.sort_unstable();
        Ok(g)
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1u64 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1u64 << (u % 64);
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Whether `{u, v}` is an edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// All degrees, indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.row(v))
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<u32>> {
        assert!(src < self.n, "bfs source out of range");
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut visited = vec![0u64; self.words];
        let mut frontier = vec![0u64; self.words];
        visited[src / 64] |= 1u64 << (src % 64);
        frontier[src / 64] |= 1u64 << (src % 64);
        let mut next = vec![0u64; self.words];
        let mut d = 0u32;
        loop {
            next.iter_mut().for_each(|w| *w = 0);
            for v in BitIter::new(&frontier) {
                for (acc, w) in next.iter_mut().zip(self.row(v)) {
                    *acc |= w;
                }
            }
            for (acc, seen) in next.iter_mut().zip(&visited) {
                *acc &= !seen;
            }
            if next.iter().all(|&w| w == 0) {
                return dist;
            }
            d += 1;
            for v in BitIter::new(&next) {
                dist[v] = Some(d);
            }
            for (seen, w) in visited.iter_mut().zip(&next) {
                *seen |= w;
            }
            std::mem::swap(&mut frontier, &mut next);
        }
    }

    /// Whether the graph is connected. Graphs on 0 or 1 vertices count as
    /// connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    /// Eccentricity of every vertex.
    ///
    /// All-or-nothing: on a disconnected graph every entry is
    /// [`ExtendedEcc::Infinite`], even for vertices whose own component is
    /// small — eccentricity is a max over *all* vertices.
    ///
    /// ```
    /// use eccaudit::graph::{ExtendedEcc, Graph};
    /// let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
    /// assert_eq!(
    ///     p3.eccentricities(),
    ///     vec![ExtendedEcc::Finite(2), ExtendedEcc::Finite(1), ExtendedEcc::Finite(2)]
    /// );
    /// ```
    pub fn eccentricities(&self) -> Vec<ExtendedEcc> {
        if !self.is_connected() {
            return vec![ExtendedEcc::Infinite; self.n];
        }
        (0..self.n)
            .map(|v| {
                let e = self
                    .bfs_distances(v)
                    .into_iter()
                    .map(|d| d.expect("connected graph"))
                    .max()
                    .unwrap_or(0);
                ExtendedEcc::Finite(e)
            })
            .collect()
    }

    /// Largest eccentricity ([`ExtendedEcc::Infinite`] when disconnected,
    /// `Finite(0)` for the empty and one-vertex graphs).
    pub fn diameter(&self) -> ExtendedEcc {
        self.eccentricities()
            .into_iter()
            .max()
            .unwrap_or(ExtendedEcc::Finite(0))
    }

    /// The complement graph: same vertices, `{u,v}` an edge iff it is not
    /// one here.
    ///
    /// ```
    /// use eccaudit::graph::Graph;
    /// let k3 = Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
    /// assert_eq!(k3.complement().m(), 0);
    /// ```
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u as u32, v as u32));
                }
            }
        }
        Graph::new(self.n, &edges).expect("complement edges are valid")
    }
}

/// Iterator over set-bit positions of a word slice.
struct BitIter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> BitIter<'a> {
    fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.cur == 0 {
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
        let b = self.cur.trailing_zeros() as usize;
        self.cur &= self.cur - 1;
        Some(self.idx * 64 + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                e.push((u, v));
            }
        }
        Graph::new(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn builds_p3() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert_eq!(g.degrees(), vec![1, 2, 1]);
        assert!(g.has_edge(1, 0) && !g.has_edge(0, 2));
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn normalizes_and_sorts_edges() {
        let g = Graph::new(4, &[(3, 2), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (2, 3)]);
        assert_eq!(g.neighbors(2).collect::<Vec<_>>(), vec![3]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange(2, 2))
        );
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn bfs_and_connectivity() {
        let g = Graph::new(4, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.bfs_distances(0), vec![Some(0), Some(1), Some(2), None]);
        assert!(!g.is_connected());
        assert!(cycle(5).is_connected());
        assert!(Graph::new(1, &[]).unwrap().is_connected());
        assert!(Graph::new(0, &[]).unwrap().is_connected());
    }

    #[test]
    fn eccentricities_match_known_graphs() {
        use ExtendedEcc::*;
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.eccentricities(), vec![Finite(2), Finite(1), Finite(2)]);
        assert_eq!(k(2).eccentricities(), vec![Finite(1), Finite(1)]);
        assert_eq!(Graph::new(1, &[]).unwrap().eccentricities(), vec![Finite(0)]);
        let e2 = Graph::new(2, &[]).unwrap();
        assert_eq!(e2.eccentricities(), vec![Infinite, Infinite]);
        assert_eq!(e2.diameter(), Infinite);
        assert_eq!(cycle(6).diameter(), Finite(3));
    }

    #[test]
    fn complement_of_known_graphs() {
        assert_eq!(k(3).complement().m(), 0);
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.complement().edges(), &[(0, 2)]);
        assert_eq!(
            cycle(5).complement().edges(),
            &[(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
        );
    }

    #[test]
    fn complement_is_an_involution_on_samples() {
        for g in [cycle(7), k(5), Graph::new(6, &[(0, 3), (2, 5), (4, 5)]).unwrap()] {
            assert_eq!(g.complement().complement(), g);
        }
    }

    #[test]
    fn handshake_on_samples() {
        for g in [cycle(9), k(6), Graph::new(5, &[(0, 1), (0, 2), (0, 3)]).unwrap()] {
            let sum: usize = g.degrees().iter().sum();
            assert_eq!(sum, 2 * g.m());
        }
    }

    #[test]
    fn bit_rows_span_multiple_words() {
        // 70 vertices forces two words per row.
        let e: Vec<_> = (1..70).map(|v| (0u32, v as u32)).collect();
        let star = Graph::new(70, &e).unwrap();
        assert_eq!(star.degree(0), 69);
        assert!(star.has_edge(0, 69) && star.has_edge(69, 0));
        assert_eq!(star.bfs_distances(69)[1], Some(2));
        assert!(star.is_connected());
        assert_eq!(star.complement().degree(0), 0);
        assert_eq!(star.neighbors(0).count(), 69);
    }
}
