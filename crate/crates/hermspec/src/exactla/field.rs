//! Arithmetic in the residue fields `Z[i]/(p)` and ranks over them.

use super::{Error, GMatrix};
use crate::gaussint::{residue, GaussInt, Residue};

/// A field element, uniform across the two residue-field shapes:
/// `(value, 0)` in `GF(N(p))`, or `(re, im)` in `GF(q²)` with `i² = -1`.
pub(crate) type Elem = (u64, u64);

/// Context for computing in `Z[i]/(p)` for a fixed Gaussian prime `p`.
pub(crate) struct FieldCtx {
    p: GaussInt,
    /// Modulus for coordinates; the field is `GF(m)` or `GF(m²)`.
    m: u64,
    /// True for inert primes: elements are genuine pairs with `i² = -1`.
    quadratic: bool,
}

impl FieldCtx {
    pub fn new(p: &GaussInt) -> Result<Self, Error> {
        // Classifying the zero element exercises the same validation as
        // every later embedding.
        match residue(&GaussInt::zero(), p)? {
            Residue::Int { modulus, .. } => {
                Ok(FieldCtx { p: p.clone(), m: modulus, quadratic: false })
            }
            Residue::Pair { modulus, .. } => {
                Ok(FieldCtx { p: p.clone(), m: modulus, quadratic: true })
            }
        }
    }

    pub fn embed(&self, z: &GaussInt) -> Elem {
        match residue(z, &self.p).expect("prime was validated at construction") {
            Residue::Int { value, .. } => (value, 0),
            Residue::Pair { re, im, .. } => (re, im),
        }
    }

    pub fn is_zero(&self, a: Elem) -> bool {
        a == (0, 0)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        let m = self.m;
        ((a.0 + m - b.0) % m, (a.1 + m - b.1) % m)
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let m = self.m as u128;
        if self.quadratic {
            let (a0, a1, b0, b1) = (a.0 as u128, a.1 as u128, b.0 as u128, b.1 as u128);
            let re = (a0 * b0 + (m - 1) * ((a1 * b1) % m)) % m;
            let im = (a0 * b1 + a1 * b0) % m;
            (re as u64, im as u64)
        } else {
            (((a.0 as u128 * b.0 as u128) % m) as u64, 0)
        }
    }

    pub fn inv(&self, a: Elem) -> Elem {
        assert!(!self.is_zero(a), "no inverse of zero");
        if self.quadratic {
            // 1/(a0 + a1·i) = (a0 - a1·i) / (a0² + a1²); the norm is a
            // nonzero square mod an inert prime, hence invertible.
            let m = self.m;
            let n = ((a.0 as u128 * a.0 as u128 + a.1 as u128 * a.1 as u128) % m as u128) as u64;
            let ninv = mod_pow(n, m - 2, m);
            (
                ((a.0 as u128 * ninv as u128) % m as u128) as u64,
                (((m - a.1) as u128 * ninv as u128) % m as u128) as u64,
            )
        } else {
            (mod_pow(a.0, self.m - 2, self.m), 0)
        }
    }
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Rank of a Gaussian-integer matrix over the residue field `Z[i]/(p)`.
pub fn rank_mod_prime(m: &GMatrix, p: &GaussInt) -> Result<usize, Error> {
    let ctx = FieldCtx::new(p)?;
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<Elem>> = (0..rows)
        .map(|i| (0..cols).map(|j| ctx.embed(m.get(i, j))).collect())
        .collect();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&i| !ctx.is_zero(a[i][col])) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = ctx.inv(a[rank][col]);
        for i in rank + 1..rows {
            if ctx.is_zero(a[i][col]) {
                continue;
            }
            let factor = ctx.mul(a[i][col], inv);
            for j in col..cols {
                let delta = ctx.mul(factor, a[rank][j]);
                a[i][j] = ctx.sub(a[i][j], delta);
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussint;

    fn gi(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re, im)
    }

    #[test]
    fn rank_of_walk_matrix_mod_one_plus_i() {
        // [[1, i], [1, -i]] reduces to [[1, 1], [1, 1]] mod (1+i): rank 1.
        let w = GMatrix::from_rows(vec![
            vec![gi(1, 0), gi(0, 1)],
            vec![gi(1, 0), gi(0, -1)],
        ])
        .unwrap();
        assert_eq!(rank_mod_prime(&w, &gi(1, 1)).unwrap(), 1);
        // Same rank modulo the conjugate associate.
        assert_eq!(rank_mod_prime(&w, &gi(1, -1)).unwrap(), 1);
        // Over Q(i) itself the matrix is nonsingular; mod 3 (inert) it
        // stays rank 2 since det = -2i is a unit mod 3.
        assert_eq!(rank_mod_prime(&w, &gi(3, 0)).unwrap(), 2);
        assert_eq!(rank_mod_prime(&w, &gi(2, 1)).unwrap(), 2);
    }

    #[test]
    fn rank_counts_pivots_mod_inert_prime() {
        // Row 2 = (1+i) · row 1, and 1+i is invertible mod 3: rank 1.
        let m = GMatrix::from_rows(vec![
            vec![gi(1, 0), gi(2, 1)],
            vec![gi(1, 1), gi(1, 3)],
        ])
        .unwrap();
        assert_eq!(rank_mod_prime(&m, &gi(3, 0)).unwrap(), 1);
    }

    #[test]
    fn rank_rejects_non_prime_modulus() {
        let m = GMatrix::identity(2);
        assert!(matches!(
            rank_mod_prime(&m, &gi(2, 0)),
            Err(Error::Gauss(gaussint::Error::NotGaussianPrime(_)))
        ));
    }

    #[test]
    fn field_ops_satisfy_inverse_law() {
        for p in [gi(1, 1), gi(2, 1), gi(3, 0), gi(7, 0), gi(4, 1)] {
            let ctx = FieldCtx::new(&p).unwrap();
            for re in -6..=6i64 {
                for im in -6..=6i64 {
                    let e = ctx.embed(&gi(re, im));
                    if ctx.is_zero(e) {
                        continue;
                    }
                    let one = ctx.embed(&GaussInt::one());
                    assert_eq!(ctx.mul(e, ctx.inv(e)), one, "inverse law mod {}", p);
                }
            }
        }
    }

    #[test]
    fn embedding_is_multiplicative() {
        for p in [gi(1, 1), gi(2, 1), gi(3, 0)] {
            let ctx = FieldCtx::new(&p).unwrap();
            for (a, b) in [(gi(2, 3), gi(-1, 4)), (gi(0, 1), gi(5, -2)), (gi(7, 7), gi(3, 0))] {
                let lhs = ctx.embed(&(&a * &b));
                let rhs = ctx.mul(ctx.embed(&a), ctx.embed(&b));
                assert_eq!(lhs, rhs, "φ(ab) = φ(a)φ(b) mod {}", p);
            }
        }
    }
}
