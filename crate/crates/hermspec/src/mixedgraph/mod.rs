//! Mixed graphs and their Hermitian adjacency matrices.
//!
//! A mixed graph on vertices `1..=n` has at most one edge per vertex pair,
//! either undirected or an arc in one of the two directions.  Its Hermitian
//! adjacency matrix stores `1` for an undirected edge between `u` and `v`,
//! `i` in entry `(u, v)` for an arc from `u` to `v`, and `-i` in the mirror
//! entry.  The converse graph reverses every arc; a graph is self-converse
//! when it is isomorphic to its converse.
//!
//! Invariants:
//! - edges are keyed by their endpoints with the smaller vertex first, so a
//!   pair can hold at most one edge;
//! - `herm_adjacency` always returns a Hermitian matrix with zero diagonal;
//! - the adjacency matrix of the converse is the transpose (equivalently the
//!   conjugate) of the original adjacency matrix;
//! - isomorphism search and canonical codes are exact but restricted to
//!   `n <= 9` vertices.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactla::GMatrix;
use crate::gaussint::GaussInt;

pub(crate) mod packed;

/// Largest vertex count accepted by the exhaustive isomorphism machinery.
pub const MAX_SEARCH_N: usize = packed::MAX_N;

/// Errors from graph construction, parsing, and isomorphism search.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Graphs need at least one vertex.
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    /// A vertex label outside `1..=n`.
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    /// Both endpoints of an edge are the same vertex.
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    /// The vertex pair already holds an edge.
    #[error("vertices {u} and {v} already joined by an edge")]
    DuplicateEdge { u: usize, v: usize },
    /// Exhaustive search is limited to small graphs.
    #[error("{n} vertices exceed the exhaustive search bound of {MAX_SEARCH_N}")]
    TooLarge { n: usize },
    /// Two graphs passed to a pairwise operation differ in vertex count.
    #[error("vertex counts differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    /// A malformed line in the text format, with its 1-based line number.
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    /// A vertex image that is not a bijection on `1..=n`.
    #[error("permutation image is not a bijection on 1..={0}")]
    BadPermutation(usize),
}

// --- edges -------------------------------------------------------------------

/// The three edge states a vertex pair `(u, v)` with `u < v` can hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    /// An undirected edge between the endpoints.
    Undirected,
    /// An arc from the smaller to the larger endpoint.
    Forward,
    /// An arc from the larger to the smaller endpoint.
    Backward,
}

impl EdgeKind {
    /// The edge with every arc reversed.
    pub fn reversed(self) -> EdgeKind {
        match self {
            EdgeKind::Undirected => EdgeKind::Undirected,
            EdgeKind::Forward => EdgeKind::Backward,
            EdgeKind::Backward => EdgeKind::Forward,
        }
    }

    /// Two-bit slot value used by the packed code representation.
    fn slot_value(self) -> u8 {
        match self {
            EdgeKind::Undirected => 1,
            EdgeKind::Forward => 2,
            EdgeKind::Backward => 3,
        }
    }

    fn from_slot_value(v: u8) -> Option<EdgeKind> {
        match v {
            1 => Some(EdgeKind::Undirected),
            2 => Some(EdgeKind::Forward),
            3 => Some(EdgeKind::Backward),
            _ => None,
        }
    }
}

// --- permutations ------------------------------------------------------------

/// A bijection of the vertex set `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// The identity on `1..=n`.
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its image list: `image[k-1]` is where `k` goes.
    pub fn from_image(image: Vec<usize>) -> Result<Permutation, Error> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::BadPermutation(n));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { image })
    }

    /// Number of points the permutation acts on.
    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// Image of the vertex `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.image[k - 1]
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (k, &v) in self.image.iter().enumerate() {
            image[v - 1] = k + 1;
        }
        Permutation { image }
    }

    /// The permutation matrix `P` with `P e_k = e_{sigma(k)}`.
    ///
    /// With this convention `(P^* A P)` has entry `(j, k)` equal to the
    /// original entry `(sigma(j), sigma(k))`.
    pub fn matrix(&self) -> GMatrix {
        let n = self.image.len();
        GMatrix::from_fn(n, n, |r, c| {
            if r + 1 == self.image[c] {
                GaussInt::one()
            } else {
                GaussInt::zero()
            }
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.image.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

// --- the graph type ----------------------------------------------------------

/// A mixed graph: undirected edges and arcs on the vertex set `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedGraph {
    n: usize,
    edges: BTreeMap<(usize, usize), EdgeKind>,
}

impl MixedGraph {
    /// An edgeless graph on `n >= 1` vertices.
    pub fn new(n: usize) -> Result<MixedGraph, Error> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(MixedGraph {
            n,
            edges: BTreeMap::new(),
        })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges, undirected and arcs together.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Iterates over edges as `(u, v, kind)` with `u < v` in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, EdgeKind)> + '_ {
        self.edges.iter().map(|(&(u, v), &k)| (u, v, k))
    }

    /// Whether every edge is undirected.
    pub fn is_undirected(&self) -> bool {
        self.edges.values().all(|&k| k == EdgeKind::Undirected)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(usize, usize), Error> {
        for w in [u, v] {
            if w < 1 || w > self.n {
                return Err(Error::VertexOutOfRange { v: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let key = (u.min(v), u.max(v));
        if self.edges.contains_key(&key) {
            return Err(Error::DuplicateEdge { u: key.0, v: key.1 });
        }
        Ok(key)
    }

    /// Adds an undirected edge between `u` and `v`.
    pub fn add_undirected(&mut self, u: usize, v: usize) -> Result<(), Error> {
        let key = self.check_pair(u, v)?;
        self.edges.insert(key, EdgeKind::Undirected);
        Ok(())
    }

    /// Adds an arc from `from` to `to`.
    pub fn add_arc(&mut self, from: usize, to: usize) -> Result<(), Error> {
        let key = self.check_pair(from, to)?;
        let kind = if from < to {
            EdgeKind::Forward
        } else {
            EdgeKind::Backward
        };
        self.edges.insert(key, kind);
        Ok(())
    }

    /// Edge state of the ordered pair `(u, v)`: `0` none, `1` undirected,
    /// `2` arc `u -> v`, `3` arc `v -> u`.
    fn arc_code(&self, u: usize, v: usize) -> u8 {
        let key = (u.min(v), u.max(v));
        match self.edges.get(&key) {
            None => 0,
            Some(EdgeKind::Undirected) => 1,
            Some(kind) => {
                let forward_from_u = (*kind == EdgeKind::Forward) == (u < v);
                if forward_from_u {
                    2
                } else {
                    3
                }
            }
        }
    }

    /// The Hermitian adjacency matrix.
    pub fn herm_adjacency(&self) -> GMatrix {
        let mut a = GMatrix::zeros(self.n, self.n);
        for (&(u, v), &kind) in &self.edges {
            let (x, y) = match kind {
                EdgeKind::Undirected => (GaussInt::one(), GaussInt::one()),
                EdgeKind::Forward => (GaussInt::i(), -&GaussInt::i()),
                EdgeKind::Backward => (-&GaussInt::i(), GaussInt::i()),
            };
            a.set(u - 1, v - 1, x);
            a.set(v - 1, u - 1, y);
        }
        a
    }

    /// The matrix `J - I - A`: all-ones minus identity minus the adjacency.
    ///
    /// Pairing the characteristic polynomials of `A` and `J - I - A` is what
    /// makes spectral comparisons sensitive to generalized cospectrality.
    pub fn complement_like_matrix(&self) -> GMatrix {
        let a = self.herm_adjacency();
        GMatrix::from_fn(self.n, self.n, |r, c| {
            if r == c {
                GaussInt::zero()
            } else {
                &GaussInt::one() - a.get(r, c)
            }
        })
    }

    /// The converse graph: every arc reversed, undirected edges kept.
    pub fn converse(&self) -> MixedGraph {
        MixedGraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|(&key, &kind)| (key, kind.reversed()))
                .collect(),
        }
    }

    /// The graph with vertex `k` renamed to `sigma(k)`.
    ///
    /// In matrix terms `A(relabel(g, sigma)) = P A(g) P^*` for
    /// `P = sigma.matrix()`.
    pub fn relabel(&self, sigma: &Permutation) -> Result<MixedGraph, Error> {
        if sigma.n() != self.n {
            return Err(Error::SizeMismatch(self.n, sigma.n()));
        }
        let mut edges = BTreeMap::new();
        for (&(u, v), &kind) in &self.edges {
            let (a, b) = (sigma.apply(u), sigma.apply(v));
            let (key, new_kind) = if a < b {
                ((a, b), kind)
            } else {
                ((b, a), kind.reversed())
            };
            edges.insert(key, new_kind);
        }
        Ok(MixedGraph { n: self.n, edges })
    }

    // --- packed codes --------------------------------------------------------

    fn require_small(&self) -> Result<(), Error> {
        if self.n > MAX_SEARCH_N {
            return Err(Error::TooLarge { n: self.n });
        }
        Ok(())
    }

    /// Packs the graph into its `u128` edge code.
    pub(crate) fn pack(&self) -> u128 {
        debug_assert!(self.n <= MAX_SEARCH_N);
        let slots = packed::slot_count(self.n);
        let mut code = 0u128;
        for (&(u, v), &kind) in &self.edges {
            let s = packed::slot_index(u - 1, v - 1, self.n);
            code = packed::put_slot(code, s, slots, kind.slot_value());
        }
        code
    }

    /// Rebuilds a graph from a packed edge code.
    pub(crate) fn from_packed(n: usize, code: u128) -> MixedGraph {
        debug_assert!(n >= 1 && n <= MAX_SEARCH_N);
        let slots = packed::slot_count(n);
        let mut edges = BTreeMap::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                let s = packed::slot_index(u - 1, v - 1, n);
                if let Some(kind) = EdgeKind::from_slot_value(packed::get_slot(code, s, slots)) {
                    edges.insert((u, v), kind);
                }
            }
        }
        MixedGraph { n, edges }
    }

    /// Canonical byte string identifying the isomorphism class (`n <= 9`).
    ///
    /// The smallest packed code over all relabelings, written big-endian with
    /// two bits per vertex pair, zero-padded at the end to a whole byte.
    pub fn canonical_code(&self) -> Result<Vec<u8>, Error> {
        self.require_small()?;
        let slots = packed::slot_count(self.n);
        let tables = packed::slot_tables(self.n);
        let best = packed::canonical_code(self.pack(), &tables, slots);
        Ok(code_to_bytes(best, slots))
    }

    // --- isomorphism ---------------------------------------------------------

    /// Per-vertex invariant preserved by isomorphism.
    fn vertex_profile(&self, v: usize) -> (usize, usize, usize) {
        let (mut und, mut out, mut inn) = (0, 0, 0);
        for w in 1..=self.n {
            if w == v {
                continue;
            }
            match self.arc_code(v, w) {
                1 => und += 1,
                2 => out += 1,
                3 => inn += 1,
                _ => {}
            }
        }
        (und, out, inn)
    }

    /// Searches for an isomorphism from `self` onto `other`.
    ///
    /// The returned permutation satisfies `P^* A(self) P = A(other)` for
    /// `P = sigma.matrix()`; equivalently `relabel(self, sigma.inverse())`
    /// equals `other`.  Backtracking over vertex images, pruned by the
    /// (undirected degree, out-degree, in-degree) profile, keeps the search
    /// fast for the supported sizes.  Returns `None` when no isomorphism
    /// exists.
    pub fn isomorphic(&self, other: &MixedGraph) -> Result<Option<Permutation>, Error> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        self.require_small()?;
        if self.edge_count() != other.edge_count() {
            return Ok(None);
        }
        let n = self.n;
        let mine: Vec<_> = (1..=n).map(|v| self.vertex_profile(v)).collect();
        let theirs: Vec<_> = (1..=n).map(|v| other.vertex_profile(v)).collect();
        {
            let mut a = mine.clone();
            let mut b = theirs.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return Ok(None);
            }
        }
        // tau[k-1] = image in `other` of my vertex k; built one vertex at a time.
        let mut tau = vec![0usize; n];
        let mut used = vec![false; n];
        if search_isomorphism(self, other, &mine, &theirs, &mut tau, &mut used, 0) {
            let witness = Permutation { image: tau };
            debug_assert_eq!(&self.relabel(&witness).unwrap(), other);
            Ok(Some(witness.inverse()))
        } else {
            Ok(None)
        }
    }

    /// Finds a permutation carrying the graph onto its converse, if any.
    ///
    /// A graph with such a permutation is self-converse, which forces its
    /// walk matrix and characteristic polynomials to stay in the integers.
    pub fn is_self_converse(&self) -> Result<Option<Permutation>, Error> {
        self.isomorphic(&self.converse())
    }
}

/// Backtracking core of `isomorphic`: extends `tau` on vertex `depth + 1`.
fn search_isomorphism(
    g: &MixedGraph,
    h: &MixedGraph,
    g_profiles: &[(usize, usize, usize)],
    h_profiles: &[(usize, usize, usize)],
    tau: &mut [usize],
    used: &mut [bool],
    depth: usize,
) -> bool {
    let n = g.n();
    if depth == n {
        return true;
    }
    let v = depth + 1;
    for w in 1..=n {
        if used[w - 1] || g_profiles[v - 1] != h_profiles[w - 1] {
            continue;
        }
        let consistent = (1..v).all(|u| g.arc_code(u, v) == h.arc_code(tau[u - 1], w));
        if !consistent {
            continue;
        }
        tau[v - 1] = w;
        used[w - 1] = true;
        if search_isomorphism(g, h, g_profiles, h_profiles, tau, used, depth + 1) {
            return true;
        }
        used[w - 1] = false;
    }
    false
}

/// Big-endian bytes of a packed code occupying `slots` two-bit slots.
pub(crate) fn code_to_bytes(code: u128, slots: usize) -> Vec<u8> {
    let bits = 2 * slots;
    let nbytes = bits.div_ceil(8);
    let shifted = code << (8 * nbytes - bits);
    (0..nbytes)
        .map(|b| (shifted >> (8 * (nbytes - 1 - b))) as u8)
        .collect()
}

// --- text format ---------------------------------------------------------------

/// Parses the line-oriented graph format.
///
/// The first significant line is `n=<count>`; each following line is one
/// edge: `u - v` (undirected), `u > v` (arc `u -> v`), or `u < v` (arc
/// `v -> u`).  Blank lines are skipped and `#` starts a comment.  Errors
/// carry 1-based line numbers.
pub fn parse_graph(text: &str) -> Result<MixedGraph, Error> {
    let mut graph: Option<MixedGraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fail = |reason: String| Error::Parse { line, reason };
        match &mut graph {
            None => {
                let compact: String = content.chars().filter(|c| !c.is_whitespace()).collect();
                let count = compact
                    .strip_prefix("n=")
                    .ok_or_else(|| fail(format!("expected `n=<count>`, found `{content}`")))?;
                let n: usize = count
                    .parse()
                    .map_err(|_| fail(format!("invalid vertex count `{count}`")))?;
                if n == 0 {
                    return Err(fail("vertex count must be at least 1".into()));
                }
                graph = Some(MixedGraph::new(n).expect("n >= 1"));
            }
            Some(g) => {
                let tokens: Vec<&str> = content.split_whitespace().collect();
                let [u, op, v] = tokens[..] else {
                    return Err(fail(format!(
                        "expected `u - v`, `u > v`, or `u < v`, found `{content}`"
                    )));
                };
                let parse_vertex = |s: &str| -> Result<usize, Error> {
                    s.parse().map_err(|_| Error::Parse {
                        line,
                        reason: format!("invalid vertex `{s}`"),
                    })
                };
                let u = parse_vertex(u)?;
                let v = parse_vertex(v)?;
                let result = match op {
                    "-" => g.add_undirected(u, v),
                    ">" => g.add_arc(u, v),
                    "<" => g.add_arc(v, u),
                    other => return Err(fail(format!("unknown edge operator `{other}`"))),
                };
                result.map_err(|e| fail(e.to_string()))?;
            }
        }
    }
    graph.ok_or(Error::Parse {
        line: 0,
        reason: "no `n=<count>` header found".into(),
    })
}

/// Writes a graph in the format accepted by `parse_graph`.
pub fn serialize_graph(g: &MixedGraph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (u, v, kind) in g.edges() {
        let op = match kind {
            EdgeKind::Undirected => "-",
            EdgeKind::Forward => ">",
            EdgeKind::Backward => "<",
        };
        out.push_str(&format!("{u} {op} {v}\n"));
    }
    out
}

// -----------------------------------------------------------------------------
