//! Smith normal form over `Z[i]`.

use super::{Error, GMatrix};
use crate::gaussint::{euclidean_divmod, gamma_normalize, is_gaussian_prime, GaussInt};

/// A Smith normal form `M = V₁ · diag(d) · V₂`.
///
/// The divisors satisfy `d₁ | d₂ | …`, each nonzero `dᵢ` is the canonical
/// first-quadrant representative, zeros trail, and both transforms are
/// unimodular (their determinants are units).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub d: Vec<GaussInt>,
    pub v1: GMatrix,
    pub v2: GMatrix,
}

impl SnfResult {
    pub fn diag_matrix(&self) -> GMatrix {
        let n = self.d.len();
        let mut m = GMatrix::zeros(n, n);
        for (i, di) in self.d.iter().enumerate() {
            m.set(i, i, di.clone());
        }
        m
    }

    /// `V₁ · diag(d) · V₂`, which must equal the original input exactly.
    pub fn reconstruct(&self) -> GMatrix {
        self.v1.mul(&self.diag_matrix()).mul(&self.v2)
    }
}

/// Working state: the invariant `input = v1 · a · v2` holds after every
/// elementary operation.  A row operation `A ← R·A` is compensated by
/// `V₁ ← V₁·R⁻¹`; a column operation `A ← A·C` by `V₂ ← C⁻¹·V₂`.
struct Work {
    a: GMatrix,
    v1: GMatrix,
    v2: GMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.v1.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v2.swap_rows(i, j);
    }

    /// `row_dst += μ·row_src` on `a`.
    fn add_row(&mut self, dst: usize, src: usize, mu: &GaussInt) {
        self.a.add_row_multiple(dst, src, mu);
        self.v1.add_col_multiple(src, dst, &-mu);
    }

    /// `col_dst += μ·col_src` on `a`.
    fn add_col(&mut self, dst: usize, src: usize, mu: &GaussInt) {
        self.a.add_col_multiple(dst, src, mu);
        self.v2.add_row_multiple(src, dst, &-mu);
    }

    /// Multiplies row `i` by a unit.
    fn scale_row(&mut self, i: usize, u: &GaussInt) {
        debug_assert!(u.is_unit());
        self.a.scale_row(i, u);
        self.v1.scale_col(i, &u.conj());
    }
}

/// Clears row `k` and column `k` beyond the pivot by Euclidean division;
/// a nonzero remainder has strictly smaller norm and is swapped into the
/// pivot position, so the pivot norm only ever decreases.
fn reduce_cross(w: &mut Work, k: usize, n: usize) {
    'outer: loop {
        for i in k + 1..n {
            if w.a.get(i, k).is_zero() {
                continue;
            }
            let (q, _) = euclidean_divmod(w.a.get(i, k), w.a.get(k, k))
                .expect("pivot is nonzero");
            w.add_row(i, k, &-&q);
            if !w.a.get(i, k).is_zero() {
                w.swap_rows(k, i);
            }
            continue 'outer;
        }
        for j in k + 1..n {
            if w.a.get(k, j).is_zero() {
                continue;
            }
            let (q, _) = euclidean_divmod(w.a.get(k, j), w.a.get(k, k))
                .expect("pivot is nonzero");
            w.add_col(j, k, &-&q);
            if !w.a.get(k, j).is_zero() {
                w.swap_cols(k, j);
            }
            continue 'outer;
        }
        return;
    }
}

/// Minimal-norm nonzero entry of the trailing submatrix `a[k.., k..]`,
/// ties broken by `(row, col)`.
fn min_norm_pivot(a: &GMatrix, k: usize) -> Option<(usize, usize)> {
    let n = a.rows();
    let mut best: Option<(num_bigint::BigUint, usize, usize)> = None;
    for i in k..n {
        for j in k..n {
            let z = a.get(i, j);
            if z.is_zero() {
                continue;
            }
            let norm = z.norm();
            if best.as_ref().is_none_or(|(b, _, _)| norm < *b) {
                best = Some((norm, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Smith normal form of a square Gaussian-integer matrix.  Rank-deficient
/// inputs are fine; the divisor chain then ends in zeros.
pub fn snf(m: &GMatrix) -> Result<SnfResult, Error> {
    if !m.is_square() {
        return Err(Error::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut w = Work {
        a: m.clone(),
        v1: GMatrix::identity(n),
        v2: GMatrix::identity(n),
    };
    for k in 0..n {
        let Some((pi, pj)) = min_norm_pivot(&w.a, k) else {
            break; // trailing block is zero
        };
        if pi != k {
            w.swap_rows(k, pi);
        }
        if pj != k {
            w.swap_cols(k, pj);
        }
        loop {
            reduce_cross(&mut w, k, n);
            // The pivot must divide the whole trailing block; folding an
            // offending row into row k lets the Euclidean reduction shrink
            // the pivot, so this loop terminates.
            let offender = (k + 1..n).find(|&i| {
                (k + 1..n).any(|j| !w.a.get(k, k).divides(w.a.get(i, j)))
            });
            match offender {
                Some(i) => w.add_row(k, i, &GaussInt::one()),
                None => break,
            }
        }
        let (unit, _) = gamma_normalize(w.a.get(k, k)).expect("pivot is nonzero");
        if !unit.is_one() {
            w.scale_row(k, &unit.conj());
        }
        debug_assert!(w.a.get(k, k).in_first_quadrant());
    }
    let d = (0..n).map(|i| w.a.get(i, i).clone()).collect();
    Ok(SnfResult { d, v1: w.v1, v2: w.v2 })
}

/// Searches for `z ≢ 0 (mod p)` with `Mz ≡ 0 (mod p²)`.
///
/// Such a vector exists iff `p²` divides the last Smith divisor `d_n`;
/// when it does, the last column of `V₂⁻¹` works: `M·V₂⁻¹·e_n = V₁·d_n·e_n
/// ≡ 0 (mod p²)`, and the column of a unimodular matrix cannot vanish
/// mod `p`.  Both properties are asserted on the returned vector.
pub fn solve_mod_p2_nontrivial(
    m: &GMatrix,
    p: &GaussInt,
) -> Result<Option<Vec<GaussInt>>, Error> {
    if !is_gaussian_prime(p) {
        return Err(crate::gaussint::Error::NotGaussianPrime(p.clone()).into());
    }
    let res = snf(m)?;
    let n = res.d.len();
    if n == 0 {
        return Ok(None);
    }
    let p2 = p * p;
    if !p2.divides(&res.d[n - 1]) {
        return Ok(None);
    }
    let v2_inv = res
        .v2
        .to_qmatrix()
        .inverse()
        .expect("V₂ is unimodular")
        .to_gmatrix()
        .expect("the inverse of a unimodular matrix is integral");
    let z = v2_inv.col(n - 1);
    assert!(
        z.iter().any(|c| !p.divides(c)),
        "solution must be nonzero mod p"
    );
    assert!(
        m.mul_vec(&z).iter().all(|c| p2.divides(c)),
        "solution must be annihilated mod p²"
    );
    Ok(Some(z))
}
