//! Walk matrices, generalized spectra, transfer unitaries, and levels.
//!
//! The generalized spectrum of a mixed graph pairs the characteristic
//! polynomial of its Hermitian adjacency matrix `A` with that of `J - I - A`.
//! Two graphs sharing the pair are called R-cospectral here.  When the walk
//! matrices `W = [e, Ae, ..., A^{n-1}e]` of an R-cospectral pair are
//! nonsingular, `U = W(G) W(H)^{-1}` is the unique Gaussian-rational unitary
//! with `U e = e` carrying one adjacency matrix to the other, and its level
//! (the minimal-norm Gaussian integer clearing all denominators) measures how
//! far the pair is from being isomorphic: level 1 means `U` is a permutation.
//!
//! Invariants:
//! - `2^{floor(n/2)}` divides every walk determinant, so the reduced
//!   determinant in a [`WalkReport`] is a Gaussian integer;
//! - transfer unitaries satisfy `U^* U = I`, `U e = e`, and
//!   `U^* A(G) U = A(H)` exactly, and these identities are asserted rather
//!   than trusted;
//! - levels are first-quadrant representatives, and minimality is
//!   self-verified by checking that no proper prime divisor also clears the
//!   denominators;
//! - a level-`1+1i` unitary with `U e = e` decomposes as
//!   `P U Q = blockdiag(U_0, ..., U_0, I)`, recovered constructively by
//!   [`decompose_level_two`].

use num_traits::ToPrimitive;

use crate::exactla::{
    char_poly_hermitian, det, inverse, rank_mod_prime, snf, GMatrix, IntPolynomial, QMatrix,
};
use crate::gaussint::{factor, gauss_lcm, is_square_free, GaussInt, GaussRat};
use crate::mixedgraph::{MixedGraph, Permutation};
use crate::{exactla, gaussint};

/// Which graph of a pair an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// The first graph of the pair.
    First,
    /// The second graph of the pair.
    Second,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::First => "first",
            Side::Second => "second",
        })
    }
}

/// Errors from spectral comparisons and unitary decompositions.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Pairwise operations need graphs on the same vertex count.
    #[error("vertex counts differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    /// The two graphs do not share a generalized spectrum.
    #[error("graphs are not cospectral with respect to the generalized spectrum")]
    NotCospectral,
    /// A walk matrix with determinant zero blocks the transfer unitary.
    #[error("walk matrix of the {0} graph is singular")]
    SingularWalk(Side),
    /// The matrix is not square or `U^* U != I`.
    #[error("matrix is not unitary")]
    NotUnitary,
    /// The matrix does not fix the all-ones vector.
    #[error("matrix does not fix the all-ones vector")]
    NotRowStochastic,
    /// Decomposition needs level exactly `1+1i`.
    #[error("level is {found}, not 1+1i")]
    LevelNotOnePlusI { found: GaussInt },
    /// A matrix argument has the wrong size for the requested block shape.
    #[error("matrix has {found} rows, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    /// Arithmetic failure bubbled up from the Gaussian integer layer.
    #[error(transparent)]
    Gauss(#[from] gaussint::Error),
    /// Failure bubbled up from exact linear algebra.
    #[error(transparent)]
    Linalg(#[from] exactla::Error),
}

// --- domain types --------------------------------------------------------------

/// The pair of characteristic polynomials defining the generalized spectrum.
///
/// Equality of two values is exactly the R-cospectrality predicate: agreeing
/// for the two matrices `A` and `J - I - A` forces agreement for every
/// `A + yJ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpectrum {
    /// Characteristic polynomial of the Hermitian adjacency matrix.
    pub p_a: IntPolynomial,
    /// Characteristic polynomial of `J - I - A`.
    pub p_c: IntPolynomial,
}

/// Everything the main arithmetic condition needs to know about one graph.
#[derive(Debug, Clone)]
pub struct WalkReport {
    /// The walk matrix `[e, Ae, ..., A^{n-1}e]`.
    pub w: GMatrix,
    /// Its determinant.
    pub det_w: GaussInt,
    /// `det_w / 2^{floor(n/2)}`, always a Gaussian integer.
    pub reduced: GaussInt,
    /// Rank of the walk matrix over the residue field at `1+1i`.
    pub rank_1pi: usize,
    /// Elementary divisors of the walk matrix over the Gaussian integers.
    pub snf_d: Vec<GaussInt>,
    /// Whether `det_w != 0` and the reduced determinant is square-free.
    pub condition_holds: bool,
}

/// The unique unitary carrying one walk matrix onto another.
#[derive(Debug, Clone)]
pub struct TransferUnitary {
    /// The matrix `W(G) W(H)^{-1}`.
    pub u: QMatrix,
    /// Its level: the minimal-norm denominator-clearing Gaussian integer.
    pub level: GaussInt,
}

// --- walk matrices -------------------------------------------------------------

/// The walk matrix `W = [e, Ae, A^2 e, ..., A^{n-1} e]`.
pub fn walk_matrix(g: &MixedGraph) -> GMatrix {
    let n = g.n();
    let a = g.herm_adjacency();
    let mut w = GMatrix::zeros(n, n);
    let mut col = vec![GaussInt::one(); n];
    for k in 0..n {
        for (i, z) in col.iter().enumerate() {
            w.set(i, k, z.clone());
        }
        if k + 1 < n {
            col = a.mul_vec(&col);
        }
    }
    w
}

/// Computes the walk matrix together with its arithmetic invariants.
///
/// Panics only if the reduced determinant's norm exceeds the factoring bound
/// of `u128`, which cannot happen for the vertex counts the rest of the crate
/// accepts.
pub fn walk_report(g: &MixedGraph) -> WalkReport {
    let n = g.n();
    let w = walk_matrix(g);
    let det_w = det(&w).expect("walk matrices are square");
    let reduced = det_w
        .checked_div(&GaussInt::two_pow(n / 2))
        .expect("walk determinants are divisible by 2^floor(n/2)");
    let rank_1pi =
        rank_mod_prime(&w, &GaussInt::new(1, 1)).expect("1+1i is a Gaussian prime");
    let snf_d = snf(&w).expect("walk matrices are square").d;
    let condition_holds = !det_w.is_zero()
        && is_square_free(&reduced).expect("reduced determinant fits the factoring bound");
    WalkReport {
        w,
        det_w,
        reduced,
        rank_1pi,
        snf_d,
        condition_holds,
    }
}

/// Whether the walk determinant is nonzero with square-free reduced part.
///
/// Graphs passing this test can only be R-cospectral to self-converse mates
/// through unitaries of level `1` or `1+1i`.
pub fn satisfies_main_condition(g: &MixedGraph) -> bool {
    walk_report(g).condition_holds
}

// --- spectra ---------------------------------------------------------------------

/// The generalized spectrum: characteristic polynomials of `A` and `J - I - A`.
pub fn generalized_spectrum(g: &MixedGraph) -> GenSpectrum {
    GenSpectrum {
        p_a: char_poly_hermitian(&g.herm_adjacency()).expect("adjacency matrices are Hermitian"),
        p_c: char_poly_hermitian(&g.complement_like_matrix()).expect("J - I - A is Hermitian"),
    }
}

/// Whether two graphs share the generalized spectrum.
pub fn r_cospectral(g: &MixedGraph, h: &MixedGraph) -> Result<bool, Error> {
    if g.n() != h.n() {
        return Err(Error::SizeMismatch(g.n(), h.n()));
    }
    Ok(generalized_spectrum(g) == generalized_spectrum(h))
}

// --- transfer unitaries ------------------------------------------------------------

/// Computes `U = W(G) W(H)^{-1}` for an R-cospectral pair and verifies it.
///
/// Asserts `U^* U = I`, `U e = e`, and `U^* A(G) U = A(H)` exactly; any
/// failure would contradict cospectrality with nonsingular walk matrices, so
/// a panic here means the caller found an arithmetic bug.
pub fn transfer_unitary(g: &MixedGraph, h: &MixedGraph) -> Result<TransferUnitary, Error> {
    if !r_cospectral(g, h)? {
        return Err(Error::NotCospectral);
    }
    let wg = walk_matrix(g);
    let wh = walk_matrix(h);
    let det_g = det(&wg).expect("walk matrices are square");
    if det_g.is_zero() {
        return Err(Error::SingularWalk(Side::First));
    }
    let det_h = det(&wh).expect("walk matrices are square");
    if det_h.is_zero() {
        return Err(Error::SingularWalk(Side::Second));
    }
    assert_eq!(
        det_g.norm(),
        det_h.norm(),
        "cospectral walk determinants must share their norm"
    );
    let u = wg.to_qmatrix().mul(&inverse(&wh).expect("determinant checked nonzero"));
    assert!(
        u.conj_transpose().mul(&u).is_identity(),
        "transfer matrix of a cospectral pair must be unitary"
    );
    let ones = vec![GaussRat::one(); g.n()];
    assert_eq!(u.mul_vec(&ones), ones, "transfer unitary must fix the all-ones vector");
    let conjugated = u.conj_transpose().mul(&g.herm_adjacency().to_qmatrix()).mul(&u);
    assert_eq!(
        conjugated,
        h.herm_adjacency().to_qmatrix(),
        "transfer unitary must carry the first adjacency matrix to the second"
    );
    let level = level(&u)?;
    Ok(TransferUnitary { u, level })
}

/// The level of a Gaussian-rational unitary: the first-quadrant Gaussian
/// integer of minimal norm whose multiple of `U` is Gaussian-integral.
///
/// Computed as the Gaussian lcm of the entries' reduced denominators;
/// minimality is then re-verified by checking that dividing out any prime
/// factor leaves some entry non-integral.
pub fn level(u: &QMatrix) -> Result<GaussInt, Error> {
    if !u.is_square() || !u.conj_transpose().mul(u).is_identity() {
        return Err(Error::NotUnitary);
    }
    let mut ell = GaussInt::one();
    for entry in u.entries() {
        ell = gauss_lcm(&ell, &entry.gauss_denominator())?;
    }
    for (p, _) in &factor(&ell)?.factors {
        let smaller = GaussRat::from_int(ell.checked_div(p).expect("factors divide the level"));
        assert!(
            !u.entries().all(|e| (e * &smaller).is_integral()),
            "level must have minimal norm, yet a proper divisor clears all denominators"
        );
    }
    Ok(ell)
}

// --- the level-(1+1i) normal form ---------------------------------------------------

/// The 2x2 seed block `(1/(1+1i)) [[1, i], [i, 1]]` of the normal form.
pub fn u0() -> QMatrix {
    normal_form_unitary(1, 0)
}

/// The block unitary with `k` copies of [`u0`] followed by an `s`-by-`s`
/// identity block.
pub fn normal_form_unitary(k: usize, s: usize) -> QMatrix {
    let n = 2 * k + s;
    let half = |re: i64, im: i64| {
        GaussRat::new(GaussInt::new(re, im), 2).expect("denominator 2 is nonzero")
    };
    QMatrix::from_fn(n, n, |r, c| {
        if r < 2 * k && c < 2 * k && r / 2 == c / 2 {
            if r == c {
                half(1, -1)
            } else {
                half(1, 1)
            }
        } else if r == c {
            GaussRat::one()
        } else {
            GaussRat::zero()
        }
    })
}

/// Decomposes a level-`1+1i` unitary with `U e = e` into permutations `P`, `Q`
/// and a block count `k >= 1` such that `P U Q` is the block normal form.
///
/// Follows the constructive argument: each row of `(1+1i) U` carries either a
/// single entry `1+1i` or the pattern `{1, i}`; paired rows and columns are
/// matched greedily from the smallest row index, which makes the output
/// deterministic.  The block identity `P U Q = blockdiag(U_0, .., U_0, I)` is
/// asserted before returning.
pub fn decompose_level_two(u: &QMatrix) -> Result<(Permutation, Permutation, usize), Error> {
    let n = u.rows();
    let ell = level(u)?;
    let one_plus_i = GaussInt::new(1, 1);
    if ell != one_plus_i {
        return Err(Error::LevelNotOnePlusI { found: ell });
    }
    let ones = vec![GaussRat::one(); n];
    if u.mul_vec(&ones) != ones {
        return Err(Error::NotRowStochastic);
    }
    let scale = GaussRat::from_int(one_plus_i.clone());
    let v = GMatrix::from_fn(n, n, |r, c| {
        (u.get(r, c) * &scale)
            .as_gauss_int()
            .expect("the level clears every denominator")
    });

    // Each row of V has squared length 2 and sums to 1+1i, so it is either a
    // solo 1+1i or a {1, i} pair sharing its support with exactly one partner
    // row in the transposed pattern.
    let one = GaussInt::one();
    let i_unit = GaussInt::i();
    let mut row_target = vec![0usize; n];
    let mut col_target = vec![0usize; n];
    let mut row_done = vec![false; n];
    let mut col_done = vec![false; n];
    let mut solos: Vec<(usize, usize)> = Vec::new();
    let mut k = 0usize;
    for r in 0..n {
        if row_done[r] {
            continue;
        }
        let support: Vec<usize> = (0..n).filter(|&c| !v.get(r, c).is_zero()).collect();
        match support.as_slice() {
            [c] => {
                assert_eq!(v.get(r, *c), &one_plus_i, "a solo row entry must be 1+1i");
                row_done[r] = true;
                col_done[*c] = true;
                solos.push((r, *c));
            }
            [a, b] => {
                let (c1, c2) = if v.get(r, *a) == &one { (*a, *b) } else { (*b, *a) };
                assert_eq!(v.get(r, c1), &one, "a paired row holds the unit 1");
                assert_eq!(v.get(r, c2), &i_unit, "a paired row holds the unit i");
                let partner = (0..n)
                    .find(|&s| s != r && !v.get(s, c1).is_zero())
                    .expect("column length forces a partner row");
                assert!(!row_done[partner], "a partner row cannot be claimed twice");
                assert_eq!(v.get(partner, c1), &i_unit, "the partner mirrors i under 1");
                assert_eq!(v.get(partner, c2), &one, "the partner mirrors 1 under i");
                for c in 0..n {
                    assert!(
                        c == c1 || c == c2 || v.get(partner, c).is_zero(),
                        "partner rows share their support"
                    );
                }
                row_target[r] = 2 * k + 1;
                row_target[partner] = 2 * k + 2;
                col_target[c1] = 2 * k + 1;
                col_target[c2] = 2 * k + 2;
                row_done[r] = true;
                row_done[partner] = true;
                col_done[c1] = true;
                col_done[c2] = true;
                k += 1;
            }
            _ => unreachable!("rows of (1+1i)U have one or two nonzero entries"),
        }
    }
    assert!(k >= 1, "level 1+1i rules out a pure permutation");
    assert!(col_done.iter().all(|&b| b), "every column is claimed exactly once");
    for (j, &(r, c)) in solos.iter().enumerate() {
        row_target[r] = 2 * k + j + 1;
        col_target[c] = 2 * k + j + 1;
    }

    let p = Permutation::from_image(row_target).expect("row targets form a bijection");
    let q = Permutation::from_image(col_target)
        .expect("column targets form a bijection")
        .inverse();
    let product = p.matrix().to_qmatrix().mul(u).mul(&q.matrix().to_qmatrix());
    assert_eq!(
        product,
        normal_form_unitary(k, n - 2 * k),
        "P U Q must equal the block normal form"
    );
    Ok((p, q, k))
}

/// Conjugates a 0/1 symmetric zero-diagonal matrix by the block normal form
/// and reports whether every entry of the result lies in `{0, 1, i, -i}`.
///
/// When the membership holds the result is asserted to equal the input: an
/// undirected adjacency matrix cannot move to a different mixed graph through
/// a level-`1+1i` normal form.
pub fn undirected_rigidity_check(a: &GMatrix, k: usize, s: usize) -> Result<bool, Error> {
    let n = 2 * k + s;
    if !a.is_square() || a.rows() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: a.rows(),
        });
    }
    for r in 0..n {
        for c in 0..n {
            let z = a.get(r, c);
            let ok = if r == c {
                z.is_zero()
            } else {
                (z.is_zero() || z.is_one()) && a.get(c, r) == z
            };
            assert!(ok, "input must be 0/1 symmetric with zero diagonal");
        }
    }
    let nf = normal_form_unitary(k, s);
    let b = nf.conj_transpose().mul(&a.to_qmatrix()).mul(&nf);
    let quartet = [
        GaussRat::zero(),
        GaussRat::one(),
        GaussRat::from_int(GaussInt::i()),
        GaussRat::from_int(-&GaussInt::i()),
    ];
    let member = b.entries().all(|e| quartet.contains(e));
    if member {
        assert_eq!(
            b,
            a.to_qmatrix(),
            "a quartet-valued conjugate of an undirected adjacency is the adjacency itself"
        );
    }
    Ok(member)
}

// --- JSON reports ---------------------------------------------------------------

/// Analysis report for one graph as a JSON object.
///
/// Keys: `det_w`, `reduced` (Gaussian literals), `rank_1pi` (integer), `snf`
/// (array of Gaussian literals), `condition` (bool), and `charpoly_a` /
/// `charpoly_c` (integer coefficient arrays, degree-ascending).
pub fn report_json(g: &MixedGraph) -> serde_json::Value {
    let report = walk_report(g);
    let spectrum = generalized_spectrum(g);
    serde_json::json!({
        "det_w": report.det_w.to_string(),
        "reduced": report.reduced.to_string(),
        "rank_1pi": report.rank_1pi,
        "snf": report.snf_d.iter().map(GaussInt::to_string).collect::<Vec<_>>(),
        "condition": report.condition_holds,
        "charpoly_a": poly_coeffs(&spectrum.p_a),
        "charpoly_c": poly_coeffs(&spectrum.p_c),
    })
}

/// Degree-ascending coefficients as plain integers.
pub(crate) fn poly_coeffs(p: &IntPolynomial) -> Vec<i64> {
    p.coeffs()
        .iter()
        .map(|c| c.to_i64().expect("coefficient fits in 64 bits"))
        .collect()
}

// -----------------------------------------------------------------------------
