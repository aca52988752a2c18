//! Deterministic graph sources for audits.
//!
//! Four sources, all reproducible byte-for-byte:
//!
//! - exhaustive enumeration of labeled graphs on `n` vertices, optionally
//!   filtered to connected graphs and/or deduplicated up to isomorphism;
//! - `G(n,p)` with an exact rational `p` (no floating point anywhere) driven
//!   by ChaCha8 with top-of-range rejection — named in report headers as
//!   `chacha8/rejection-v1`;
//! - uniform random labeled trees via Prüfer sequences, same generator;
//! - graph6 files, one graph per line, with line numbers in errors.
//!
//! Random streams of `count` graphs derive graph `i` from
//! `seed.wrapping_add(i)`, so the single-graph functions stay the
//! reproducibility contract.

use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::PathBuf;

use num_integer::Integer;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::{parse_graph6, Graph6Error, HEADER};

/// Name of the random-bit recipe, recorded in report headers.
pub const GENERATOR: &str = "chacha8/rejection-v1";

/// Rejected corpus parameters or a failed source.
#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("invalid corpus parameter: {0}")]
    InvalidParam(String),
    #[error("line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Pairs `(i, j)`, `i < j`, in mask-bit order (same column-major order the
/// graph6 codec uses: `(0,1), (0,2), (1,2), (0,3), ...`).
fn pairs(n: usize) -> Vec<(u32, u32)> {
    (1..n as u32).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Mask-bit index of pair `(i, j)`, `i < j`.
fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

fn graph_from_mask(n: usize, pairs: &[(u32, u32)], mask: u64) -> Graph {
    let edges: Vec<(u32, u32)> = (0..pairs.len())
        .filter(|t| mask >> t & 1 == 1)
        .map(|t| pairs[t])
        .collect();
    Graph::new(n, &edges).expect("mask edges are valid")
}

fn graph_mask(g: &Graph) -> u64 {
    g.edges()
        .iter()
        .fold(0u64, |mask, &(i, j)| mask | 1 << pair_index(i as usize, j as usize))
}

/// Heap's algorithm; `f` returning `true` stops the walk early.
fn any_permutation(n: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut a: Vec<usize> = (0..n).collect();
    if f(&a) {
        return true;
    }
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            if f(&a) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

fn remap_mask(mask: u64, perm: &[usize], pairs: &[(u32, u32)]) -> u64 {
    let mut out = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let t = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (i, j) = pairs[t];
        let (a, b) = (perm[i as usize], perm[j as usize]);
        out |= 1 << pair_index(a.min(b), a.max(b));
    }
    out
}

/// The minimum edge mask over all vertex relabelings — so two graphs are
/// isomorphic iff their canonical forms are equal. Exhaustive over `n!`
/// permutations; requires `n <= 8`.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    assert!(n <= 8, "canonical_form is exhaustive and limited to n <= 8");
    let pairs = pairs(n);
    let mask = graph_mask(g);
    let mut best = mask;
    any_permutation(n, |perm| {
        best = best.min(remap_mask(mask, perm, &pairs));
        false
    });
    graph_from_mask(n, &pairs, best)
}

/// `true` iff no relabeling has a smaller edge mask (early-exit form used by
/// the dedup filter).
fn is_canonical(n: usize, mask: u64, pairs: &[(u32, u32)]) -> bool {
    !any_permutation(n, |perm| remap_mask(mask, perm, pairs) < mask)
}

/// Enumerates the labeled graphs on `n` vertices in ascending edge-mask
/// order (bit `t` of the mask is pair `t` in the codec's column-major pair
/// order, so the empty graph comes first and the complete graph last).
/// `connected_only` keeps connected graphs; `dedup` keeps exactly one
/// representative per isomorphism class (the one whose mask equals its
/// [`canonical_form`]). Requires `1 <= n <= 8`, and `n <= 7` with `dedup`.
pub fn enumerate_labeled(
    n: usize,
    connected_only: bool,
    dedup: bool,
) -> impl Iterator<Item = Graph> {
    assert!((1..=8).contains(&n), "enumeration requires 1 <= n <= 8");
    assert!(!dedup || n <= 7, "dedup enumeration requires n <= 7");
    let pairs = pairs(n);
    let nbits = pairs.len();
    (0u64..1 << nbits).filter_map(move |mask| {
        if dedup && !is_canonical(n, mask, &pairs) {
            return None;
        }
        let g = graph_from_mask(n, &pairs, mask);
        if connected_only && !g.is_connected() {
            return None;
        }
        Some(g)
    })
}

/// Uniform draw from `0..bound` by top-of-range rejection on `next_u64`.
fn uniform_below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    // 2^64 mod bound, computed without overflow.
    let rem = (u64::MAX % bound + 1) % bound;
    loop {
        let x = rng.next_u64();
        if rem == 0 || x <= u64::MAX - rem {
            return x % bound;
        }
    }
}

/// One `G(n,p)` draw with exact `p = p_num/p_den` (reduced before sampling,
/// so `2/4` and `1/2` give identical graphs). Same `(n, p, seed)` → same
/// graph. Pairs are decided in mask-bit order, one draw each.
pub fn gnp(n: usize, p_num: u64, p_den: u64, seed: u64) -> Result<Graph, CorpusError> {
    if p_den == 0 || p_num > p_den {
        return Err(CorpusError::InvalidParam(format!(
            "edge probability {p_num}/{p_den} is not in [0, 1]"
        )));
    }
    let g = p_num.gcd(&p_den);
    let (num, den) = (p_num / g.max(1), p_den / g.max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(u32, u32)> = pairs(n)
        .into_iter()
        .filter(|_| uniform_below(&mut rng, den) < num)
        .collect();
    Ok(Graph::new(n, &edges).expect("gnp edges are valid"))
}

/// Uniform random labeled tree on `n >= 1` vertices (Prüfer decode). Same
/// `(n, seed)` → same tree.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "trees need at least one vertex");
    if n == 1 {
        return Graph::new(1, &[]).expect("one vertex");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2)
        .map(|_| uniform_below(&mut rng, n as u64) as usize)
        .collect();
    let mut degree = vec![1u32; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut leaves = std::collections::BinaryHeap::new();
    for (v, &d) in degree.iter().enumerate() {
        if d == 1 {
            leaves.push(std::cmp::Reverse(v));
        }
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf as u32, s as u32));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(std::cmp::Reverse(s));
        }
    }
    let std::cmp::Reverse(u) = leaves.pop().expect("two vertices remain");
    let std::cmp::Reverse(v) = leaves.pop().expect("two vertices remain");
    edges.push((u as u32, v as u32));
    Graph::new(n, &edges).expect("Prüfer decode yields a simple graph")
}

/// Streams graphs from a graph6 reader, one per line. Blank lines and a
/// bare `>>graph6<<` header line are skipped; any other malformed line is
/// an error carrying its 1-based line number.
pub fn read_graph6_lines<R: BufRead>(
    reader: R,
) -> impl Iterator<Item = Result<Graph, CorpusError>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(idx, line)| match line {
            Err(e) => Some(Err(CorpusError::Io(e))),
            Ok(text) => {
                let text = text.trim_end_matches('\r');
                if text.is_empty() || text == HEADER {
                    return None;
                }
                Some(parse_graph6(text).map_err(|source| CorpusError::Graph6 {
                    line: idx + 1,
                    source,
                }))
            }
        })
}

/// A corpus description: what to audit and how to reproduce it.
#[derive(Debug, Clone)]
pub enum CorpusSpec {
    Enumerate {
        n_min: usize,
        n_max: usize,
        connected_only: bool,
        dedup: bool,
    },
    Gnp {
        n: usize,
        p_num: u64,
        p_den: u64,
        count: u64,
        seed: u64,
    },
    Tree {
        n: usize,
        count: u64,
        seed: u64,
    },
    File {
        path: PathBuf,
    },
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSpec::Enumerate {
                n_min,
                n_max,
                connected_only,
                dedup,
            } => {
                write!(f, "enumerate n={n_min}..{n_max}")?;
                write!(f, " {}", if *connected_only { "connected" } else { "all-labeled" })?;
                if *dedup {
                    write!(f, " dedup")?;
                }
                Ok(())
            }
            CorpusSpec::Gnp {
                n,
                p_num,
                p_den,
                count,
                seed,
            } => {
                let g = p_num.gcd(p_den).max(1);
                write!(
                    f,
                    "gnp n={n} p={}/{} count={count} seed={seed}",
                    p_num / g,
                    p_den / g
                )
            }
            CorpusSpec::Tree { n, count, seed } => {
                write!(f, "tree n={n} count={count} seed={seed}")
            }
            CorpusSpec::File { path } => write!(f, "file {}", path.display()),
        }
    }
}

impl CorpusSpec {
    /// Opens the source and returns its graph stream, in corpus order.
    /// Parameter problems surface here; per-line file problems surface as
    /// `Err` items.
    pub fn stream(
        &self,
    ) -> Result<Box<dyn Iterator<Item = Result<Graph, CorpusError>> + Send>, CorpusError> {
        match self {
            CorpusSpec::Enumerate {
                n_min,
                n_max,
                connected_only,
                dedup,
            } => {
                if *n_min < 1 || n_min > n_max || *n_max > 8 || (*dedup && *n_max > 7) {
                    return Err(CorpusError::InvalidParam(format!(
                        "enumeration range {n_min}..{n_max} not within 1..8{}",
                        if *dedup { " (7 with dedup)" } else { "" }
                    )));
                }
                let (lo, hi, conn, dd) = (*n_min, *n_max, *connected_only, *dedup);
                Ok(Box::new(
                    (lo..=hi).flat_map(move |n| enumerate_labeled(n, conn, dd).map(Ok)),
                ))
            }
            CorpusSpec::Gnp {
                n,
                p_num,
                p_den,
                count,
                seed,
            } => {
                gnp(*n, *p_num, *p_den, *seed)?; // validate parameters once
                let (n, p_num, p_den, seed) = (*n, *p_num, *p_den, *seed);
                Ok(Box::new((0..*count).map(move |i| {
                    gnp(n, p_num, p_den, seed.wrapping_add(i))
                })))
            }
            CorpusSpec::Tree { n, count, seed } => {
                if *n < 1 {
                    return Err(CorpusError::InvalidParam(
                        "trees need at least one vertex".into(),
                    ));
                }
                let (n, seed) = (*n, *seed);
                Ok(Box::new(
                    (0..*count).map(move |i| Ok(random_tree(n, seed.wrapping_add(i)))),
                ))
            }
            CorpusSpec::File { path } => {
                let file = File::open(path)?;
                Ok(Box::new(read_graph6_lines(BufReader::new(file))))
            }
        }
    }
}
