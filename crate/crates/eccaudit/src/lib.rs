//! Exact-arithmetic graph library and audit engine for eccentricity-based
//! connectivity indices on total transformation graphs.
//!
//! Given a simple graph `G` and a sign pattern `xyz` over `{+,-}`, the total
//! transformation graph `G^xyz` has vertex set `V(G) ∪ E(G)`, with adjacency
//! between originals, between edge-vertices, and between an original and an
//! edge-vertex switched by the three signs (`+` keeps the underlying relation
//! — adjacency / sharing an endpoint / incidence — and `-` complements it).
//!
//! The crate computes degree- and eccentricity-based invariants of `G` and
//! `G^xyz` in exact rational arithmetic, evaluates the published upper-bound
//! families T1..T8 (one per pattern) for four eccentric-connectivity indices,
//! and audits them over exhaustive, random, or file-based corpora, reporting
//! a verdict per (graph, pattern, index, formula variant).
//!
//! Modules:
//! - [`graph`]: bit-row simple graphs, BFS, eccentricities, complement
//! - [`graph6`]: strict graph6 codec
//! - [`transform`]: the eight `G^xyz` constructions plus predicted degrees
//!   and eccentricity caps
//! - [`invariants`]: exact invariant bundles of a graph
//! - [`bounds`]: the 32 statement bounds and 3 proof variants, evaluated by
//!   two independent routes
//! - [`corpus`]: deterministic graph sources (enumeration, G(n,p), trees,
//!   graph6 files)
//! - [`audit`]: verdict engine, crosschecks, CSV/JSON report writers

#![forbid(unsafe_code)]

pub mod audit;
pub mod bounds;
pub mod corpus;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod ratio;
pub mod transform;
