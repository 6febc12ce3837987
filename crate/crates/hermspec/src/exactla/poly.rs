//! Integer polynomials and exact characteristic polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Error, GMatrix};
use crate::gaussint::GaussInt;

/// A polynomial with arbitrary-precision integer coefficients, stored in
/// ascending degree order with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients in ascending degree order.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Evaluates the polynomial at a square Gaussian-integer matrix
    /// (Horner scheme).
    pub fn eval_matrix(&self, m: &GMatrix) -> GMatrix {
        assert!(m.is_square(), "polynomial evaluation needs a square matrix");
        let n = m.rows();
        let mut acc = GMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = m.mul(&acc).add(&GMatrix::scaled_identity(
                n,
                GaussInt::new(c.clone(), 0),
            ));
        }
        acc
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_mag = !mag.is_one() || k == 0;
            if show_mag {
                write!(f, "{}", mag)?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{}", k)?,
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(xI − M)` of a Hermitian Gaussian-integer
/// matrix, via the Faddeev–LeVerrier recurrence.
///
/// All arithmetic is exact; the recurrence divides each trace by its step
/// index, and hermiticity makes every coefficient a real integer — both
/// facts are asserted, and a non-Hermitian input is rejected up front.
pub fn char_poly_hermitian(m: &GMatrix) -> Result<IntPolynomial, Error> {
    if !m.is_square() {
        return Err(Error::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    if !m.is_hermitian() {
        return Err(Error::NonHermitian);
    }
    let n = m.rows();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut aux = m.clone();
    for k in 1..=n {
        let tr = aux.trace();
        assert!(
            tr.im.is_zero(),
            "trace of a Faddeev–LeVerrier auxiliary matrix must be real"
        );
        let (q, r) = (-tr.re).div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "Faddeev–LeVerrier trace division is exact");
        coeffs[n - k] = q.clone();
        if k < n {
            let shifted = aux.add(&GMatrix::scaled_identity(n, GaussInt::new(q, 0)));
            aux = m.mul(&shifted);
        }
    }
    Ok(IntPolynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re, im)
    }

    #[test]
    fn char_poly_of_a_single_arc() {
        // Hermitian adjacency of 1 → 2: [[0, i], [-i, 0]] has x² - 1.
        let a = GMatrix::from_rows(vec![
            vec![gi(0, 0), gi(0, 1)],
            vec![gi(0, -1), gi(0, 0)],
        ])
        .unwrap();
        assert_eq!(char_poly_hermitian(&a).unwrap(), IntPolynomial::from_i64(&[-1, 0, 1]));

        // Complement-side matrix [[0, 1-i], [1+i, 0]] has x² - 2.
        let c = GMatrix::from_rows(vec![
            vec![gi(0, 0), gi(1, -1)],
            vec![gi(1, 1), gi(0, 0)],
        ])
        .unwrap();
        assert_eq!(char_poly_hermitian(&c).unwrap(), IntPolynomial::from_i64(&[-2, 0, 1]));
    }

    #[test]
    fn char_poly_rejects_non_hermitian() {
        let m = GMatrix::from_rows(vec![
            vec![gi(0, 0), gi(0, 1)],
            vec![gi(0, 1), gi(0, 0)],
        ])
        .unwrap();
        assert!(matches!(char_poly_hermitian(&m), Err(Error::NonHermitian)));
    }

    #[test]
    fn cayley_hamilton_on_fixed_matrices() {
        let mats = [
            GMatrix::from_rows(vec![
                vec![gi(1, 0), gi(2, 3), gi(0, -1)],
                vec![gi(2, -3), gi(0, 0), gi(1, 1)],
                vec![gi(0, 1), gi(1, -1), gi(-2, 0)],
            ])
            .unwrap(),
            GMatrix::from_rows(vec![
                vec![gi(0, 0), gi(0, 1)],
                vec![gi(0, -1), gi(0, 0)],
            ])
            .unwrap(),
        ];
        for m in mats {
            let p = char_poly_hermitian(&m).unwrap();
            assert!(p.is_monic());
            assert!(p.eval_matrix(&m).is_zero(), "p(M) must vanish");
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(
            IntPolynomial::from_i64(&[4, 7, -4, -7, 0, 1]).to_string(),
            "x^5 - 7x^3 - 4x^2 + 7x + 4"
        );
        assert_eq!(IntPolynomial::from_i64(&[0]).to_string(), "0");
        assert_eq!(IntPolynomial::from_i64(&[-1, 1]).to_string(), "x - 1");
        assert_eq!(IntPolynomial::from_i64(&[0, -1]).to_string(), "-x");
    }
}
