//! Exact spectral analysis of mixed graphs over the Gaussian integers.
//!
//! A *mixed graph* is a simple graph in which some edges carry an
//! orientation.  Its Hermitian adjacency matrix has entry `1` for an
//! undirected edge, `i` / `-i` for an arc in the two directions, and `0`
//! otherwise.  This crate computes, with exact arithmetic throughout:
//!
//! * Gaussian-integer number theory: quadrant normalization, gcd/lcm,
//!   factorization into Gaussian primes, square-freeness, residue fields
//!   ([`gaussint`]);
//! * exact linear algebra over `Z[i]` and `Q(i)`: determinants,
//!   characteristic polynomials, inverses, ranks over residue fields, and
//!   the Smith normal form ([`exactla`]);
//! * mixed graphs, their converses, isomorphism testing, and canonical
//!   codes ([`mixedgraph`]);
//! * walk matrices, generalized spectra, cospectrality, transfer
//!   unitaries and their levels, and the level-`(1+i)` normal form
//!   ([`genspec`]);
//! * an exhaustive census of self-converse mixed graphs on up to six
//!   vertices, with spectrum buckets and verification reports ([`census`]).
//!
//! The `examples/` directory is the best starting point; each example is a
//! small runnable tour of one capability:
//!
//! ```text
//! cargo run --example gaussian_arithmetic   # Z[i] number theory
//! cargo run --example smith_normal_form     # SNF with transform matrices
//! cargo run --example analyze_graph         # walk-matrix report for one graph
//! cargo run --example compare_graphs        # cospectrality + transfer unitary
//! cargo run --example census_table          # census rows for n = 2..5
//! cargo run --example find_cospectral_mates # non-singleton spectrum buckets
//! cargo run --example level_decomposition   # level-(1+i) normal form
//! cargo run --example example_pair_search   # a cospectral pair on 5 vertices
//! ```
//!
//! A thin command-line wrapper over the same library entry points is built
//! as the `hermspec` binary (see [`cli`]).

pub mod census;
pub mod cli;
pub mod exactla;
pub mod gaussint;
pub mod genspec;
pub mod mixedgraph;

pub use census::{Census, CensusOptions, CensusRow, ConjectureReport, SpectrumBucket, TheoremReport};
pub use exactla::{GMatrix, IntPolynomial, QMatrix, SnfResult};
pub use gaussint::{GammaFactorization, GaussInt, GaussRat};
pub use genspec::{GenSpectrum, TransferUnitary, WalkReport};
pub use mixedgraph::{parse_graph, serialize_graph, EdgeKind, MixedGraph, Permutation};
