//! Gaussian integers `Z[i]`, Gaussian rationals, and their number theory.
//!
//! Conventions used throughout the crate:
//!
//! * The *norm* of `a+bi` is `a² + b²` (never negative).
//! * The four units are `1, i, -1, -i`.
//! * Every nonzero `z` has exactly one associate in the first quadrant
//!   `{re > 0, im ≥ 0}`; that associate is the canonical representative
//!   produced by [`gamma_normalize`], and gcds, lcms, and prime
//!   factorizations always report canonical representatives.
//! * `z` is *even* iff `1+i` divides `z` iff `re − im` is even.
//! * `2 = -i·(1+i)²` is not square-free in `Z[i]`.
//!
//! Literals are written `3`, `-2i`, `1+2i`, `-1-1i`, `i`; see
//! [`parse_gauss_literal`].

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Errors raised by Gaussian-integer arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero has no first-quadrant representative")]
    ZeroHasNoQuadrantRep,
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("lcm with a zero argument is undefined")]
    LcmWithZero,
    #[error("cannot factor zero")]
    FactorZero,
    #[error("{0} is not a Gaussian prime")]
    NotGaussianPrime(GaussInt),
    #[error("norm of {0} is too large for exact factorization")]
    NormTooLarge(GaussInt),
    #[error("norm of {0} is too large for residue arithmetic")]
    PrimeTooLarge(GaussInt),
    #[error("invalid Gaussian literal {input:?}: {reason}")]
    Literal { input: String, reason: &'static str },
    #[error("zero denominator")]
    ZeroDenominator,
}

// ---------------------------------------------------------------- GaussInt

/// A Gaussian integer `re + im·i` with arbitrary-precision coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

/// Parity of a Gaussian integer: even iff divisible by `1+i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        GaussInt::new(0, 0)
    }

    pub fn one() -> Self {
        GaussInt::new(1, 0)
    }

    /// The unit `i`.
    pub fn i() -> Self {
        GaussInt::new(0, 1)
    }

    /// `i^k` for any `k` (taken mod 4).
    pub fn i_pow(k: u32) -> Self {
        match k % 4 {
            0 => GaussInt::one(),
            1 => GaussInt::i(),
            2 => GaussInt::new(-1, 0),
            _ => GaussInt::new(0, -1),
        }
    }

    /// The real integer `2^k`.
    pub fn two_pow(k: usize) -> Self {
        GaussInt { re: BigInt::one() << k, im: BigInt::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True iff the norm is 1, i.e. `z ∈ {1, i, -1, -i}`.
    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn conj(&self) -> Self {
        GaussInt { re: self.re.clone(), im: -&self.im }
    }

    /// Multiplication by `i`: `(re, im) → (-im, re)`.
    pub fn mul_i(&self) -> Self {
        GaussInt { re: -&self.im, im: self.re.clone() }
    }

    /// `re² + im²` as a nonnegative integer.
    pub fn norm(&self) -> BigUint {
        (&self.re * &self.re + &self.im * &self.im)
            .to_biguint()
            .expect("norm is nonnegative")
    }

    fn norm_bigint(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Even iff `1+i` divides `self` iff `re − im ≡ 0 (mod 2)`.
    pub fn parity(&self) -> Parity {
        if (&self.re - &self.im).is_even() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// True for the canonical associate: `re > 0` and `im ≥ 0`.
    pub fn in_first_quadrant(&self) -> bool {
        self.re.is_positive() && !self.im.is_negative()
    }

    /// Exact division: `Some(self / d)` when `d` divides `self`, else `None`.
    pub fn checked_div(&self, d: &GaussInt) -> Option<GaussInt> {
        if d.is_zero() {
            return None;
        }
        let nd = d.norm_bigint();
        let num = self * &d.conj();
        if num.re.is_multiple_of(&nd) && num.im.is_multiple_of(&nd) {
            Some(GaussInt { re: num.re / &nd, im: num.im / nd })
        } else {
            None
        }
    }

    /// True iff `self` divides `z` (with `0 | z` only for `z = 0`).
    pub fn divides(&self, z: &GaussInt) -> bool {
        if self.is_zero() {
            z.is_zero()
        } else {
            z.checked_div(self).is_some()
        }
    }
}

impl From<i64> for GaussInt {
    fn from(v: i64) -> Self {
        GaussInt::new(v, 0)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait<&GaussInt> for &GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: &GaussInt) -> GaussInt {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $trait for GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: GaussInt) -> GaussInt {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&GaussInt> for GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: &GaussInt) -> GaussInt {
                $trait::$method(&self, rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| GaussInt { re: &a.re + &b.re, im: &a.im + &b.im });
binop!(Sub, sub, |a, b| GaussInt { re: &a.re - &b.re, im: &a.im - &b.im });
binop!(Mul, mul, |a, b| GaussInt {
    re: &a.re * &b.re - &a.im * &b.im,
    im: &a.re * &b.im + &a.im * &b.re,
});

impl Neg for &GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt { re: -&self.re, im: -&self.im }
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        -&self
    }
}

impl AddAssign<&GaussInt> for GaussInt {
    fn add_assign(&mut self, rhs: &GaussInt) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussInt> for GaussInt {
    fn sub_assign(&mut self, rhs: &GaussInt) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            if self.im.is_one() {
                write!(f, "i")
            } else if self.im == BigInt::from(-1) {
                write!(f, "-i")
            } else {
                write!(f, "{}i", self.im)
            }
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "{}{}{}i", self.re, sign, self.im.magnitude())
        }
    }
}

impl FromStr for GaussInt {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        parse_gauss_literal(s)
    }
}

/// Parses a Gaussian literal: `3`, `-2i`, `1+2i`, `-1-1i`, `i`, `1+i`, ...
///
/// An optional sign precedes each term; a bare `i` has coefficient 1; at
/// most one real and one imaginary term may appear.
pub fn parse_gauss_literal(s: &str) -> Result<GaussInt, Error> {
    let err = |reason| Error::Literal { input: s.to_string(), reason };
    let t = s.trim();
    if t.is_empty() {
        return Err(err("empty literal"));
    }
    let mut re: Option<BigInt> = None;
    let mut im: Option<BigInt> = None;
    let mut rest = t;
    let mut first = true;
    while !rest.is_empty() {
        let (negative, after_sign) = if let Some(r) = rest.strip_prefix('+') {
            (false, r)
        } else if let Some(r) = rest.strip_prefix('-') {
            (true, r)
        } else if first {
            (false, rest)
        } else {
            return Err(err("expected '+' or '-' between terms"));
        };
        first = false;
        let digits_end = after_sign
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(after_sign.len());
        let (digits, tail) = after_sign.split_at(digits_end);
        if let Some(tail) = tail.strip_prefix('i') {
            let mag = if digits.is_empty() {
                BigInt::one()
            } else {
                digits.parse::<BigInt>().map_err(|_| err("bad digits"))?
            };
            if im.replace(if negative { -mag } else { mag }).is_some() {
                return Err(err("more than one imaginary term"));
            }
            rest = tail;
        } else {
            if digits.is_empty() {
                return Err(err("expected digits or 'i'"));
            }
            let mag = digits.parse::<BigInt>().map_err(|_| err("bad digits"))?;
            if re.replace(if negative { -mag } else { mag }).is_some() {
                return Err(err("more than one real term"));
            }
            rest = tail;
        }
    }
    Ok(GaussInt {
        re: re.unwrap_or_else(BigInt::zero),
        im: im.unwrap_or_else(BigInt::zero),
    })
}

// ------------------------------------------------- Euclidean structure

/// Canonical associate: returns `(unit, rep)` with `unit · rep = z` and
/// `rep` in the first quadrant `{re > 0, im ≥ 0}`.  Errors on zero.
pub fn gamma_normalize(z: &GaussInt) -> Result<(GaussInt, GaussInt), Error> {
    if z.is_zero() {
        return Err(Error::ZeroHasNoQuadrantRep);
    }
    let mut w = z.clone();
    for k in 0..4u32 {
        if w.in_first_quadrant() {
            // w = i^k · z, so z = i^(4-k) · w.
            return Ok((GaussInt::i_pow(4 - k), w));
        }
        w = w.mul_i();
    }
    unreachable!("every nonzero Gaussian integer has a first-quadrant associate")
}

/// The first-quadrant representative alone.
pub fn quadrant_rep(z: &GaussInt) -> Result<GaussInt, Error> {
    gamma_normalize(z).map(|(_, rep)| rep)
}

/// Floor of `x / d + 1/2` for `d > 0`: rounds to nearest, ties toward `+∞`.
fn round_div_half_up(x: &BigInt, d: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (x * &two + d).div_floor(&(d * two))
}

/// Euclidean division: `a = q·b + r` with `norm(r) ≤ norm(b)/2`.
///
/// The quotient rounds each coordinate of `a·conj(b)/norm(b)` to the
/// nearest integer, ties toward `+∞`.
pub fn euclidean_divmod(a: &GaussInt, b: &GaussInt) -> Result<(GaussInt, GaussInt), Error> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let nb = b.norm_bigint();
    let num = a * &b.conj();
    let q = GaussInt {
        re: round_div_half_up(&num.re, &nb),
        im: round_div_half_up(&num.im, &nb),
    };
    let r = a - &(&q * b);
    debug_assert!(
        r.norm_bigint() * 2 <= nb,
        "euclidean remainder bound violated"
    );
    Ok((q, r))
}

/// Greatest common divisor via the Euclidean algorithm, reported as the
/// canonical first-quadrant representative.  Errors on `gcd(0, 0)`.
pub fn gauss_gcd(a: &GaussInt, b: &GaussInt) -> Result<GaussInt, Error> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = euclidean_divmod(&x, &y)?;
        x = y;
        y = r;
    }
    quadrant_rep(&x)
}

/// Least common multiple, canonical representative.  Errors if either
/// argument is zero.
pub fn gauss_lcm(a: &GaussInt, b: &GaussInt) -> Result<GaussInt, Error> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::LcmWithZero);
    }
    let g = gauss_gcd(a, b)?;
    let prod = a * b;
    let q = prod
        .checked_div(&g)
        .expect("gcd divides the product of its arguments");
    quadrant_rep(&q)
}

// ------------------------------------------------------------ primality

fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u128, 3] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = 5u128;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

fn is_prime_uint(n: &BigUint) -> bool {
    match n.to_u128() {
        Some(m) => is_prime_u128(m),
        None => {
            // Exact trial division; huge norms are out of scope and merely slow.
            let two = BigUint::from(2u32);
            let three = BigUint::from(3u32);
            if n.is_multiple_of(&two) {
                return *n == two;
            }
            if n.is_multiple_of(&three) {
                return *n == three;
            }
            let mut d = BigUint::from(5u32);
            while &d * &d <= *n {
                if n.is_multiple_of(&d) || n.is_multiple_of(&(&d + 2u32)) {
                    return false;
                }
                d += 6u32;
            }
            true
        }
    }
}

/// True iff `z` is a Gaussian prime: its norm is an ordinary prime, or `z`
/// is an associate of an ordinary prime `p ≡ 3 (mod 4)`.
pub fn is_gaussian_prime(z: &GaussInt) -> bool {
    if z.is_zero() {
        return false;
    }
    if z.re.is_zero() || z.im.is_zero() {
        let coord = if z.re.is_zero() { &z.im } else { &z.re };
        let p = coord.magnitude();
        is_prime_uint(p) && (p % 4u32) == BigUint::from(3u32)
    } else {
        is_prime_uint(&z.norm())
    }
}

// -------------------------------------------------------- factorization

/// A factorization `z = unit · Π pᵢ^{mᵢ}` into canonical Gaussian primes,
/// ordered by `(norm, re)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaFactorization {
    pub unit: GaussInt,
    pub factors: Vec<(GaussInt, u32)>,
}

impl GammaFactorization {
    /// Recomposes `unit · Π pᵢ^{mᵢ}`.
    pub fn product(&self) -> GaussInt {
        let mut acc = self.unit.clone();
        for (p, m) in &self.factors {
            for _ in 0..*m {
                acc = &acc * p;
            }
        }
        acc
    }
}

impl fmt::Display for GammaFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unit)?;
        for (p, m) in &self.factors {
            write!(f, " · ({})^{}", p, m)?;
        }
        Ok(())
    }
}

/// Distinct ordinary prime divisors of `m`, ascending.
fn ordinary_prime_divisors(mut m: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let push = |out: &mut Vec<u128>, p: u128, m: &mut u128| {
        out.push(p);
        while *m % p == 0 {
            *m /= p;
        }
    };
    if m % 2 == 0 {
        push(&mut out, 2, &mut m);
    }
    let mut d = 3u128;
    while d * d <= m {
        if m % d == 0 {
            push(&mut out, d, &mut m);
        }
        d += 2;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn modpow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // m is prime in every call site.
    modpow(a, m - 2, m)
}

/// For an ordinary prime `p ≡ 1 (mod 4)`, one Gaussian prime above `p`
/// (canonical representative).
fn split_prime(p: u64) -> GaussInt {
    // Find t with t² ≡ -1 (mod p) via a quadratic non-residue.
    let mut a = 2u64;
    let t = loop {
        if modpow(a, (p - 1) / 2, p) == p - 1 {
            break modpow(a, (p - 1) / 4, p);
        }
        a += 1;
    };
    gauss_gcd(&GaussInt::new(p as i128, 0), &GaussInt::new(t as i128, 1))
        .expect("gcd of nonzero arguments")
}

/// Factors a nonzero Gaussian integer into canonical Gaussian primes.
///
/// Strategy: trial-divide the norm over the ordinary integers; `2` lifts
/// to `1+i`, primes `p ≡ 3 (mod 4)` stay prime, and primes `p ≡ 1 (mod 4)`
/// split into a conjugate pair found via a square root of `-1` mod `p`.
pub fn factor(z: &GaussInt) -> Result<GammaFactorization, Error> {
    if z.is_zero() {
        return Err(Error::FactorZero);
    }
    let norm = z
        .norm()
        .to_u128()
        .ok_or_else(|| Error::NormTooLarge(z.clone()))?;
    let mut rest = z.clone();
    let mut factors: Vec<(GaussInt, u32)> = Vec::new();
    for p in ordinary_prime_divisors(norm) {
        let candidates: Vec<GaussInt> = if p == 2 {
            vec![GaussInt::new(1, 1)]
        } else if p % 4 == 3 {
            vec![GaussInt::new(p as i128, 0)]
        } else {
            let p64 = u64::try_from(p).map_err(|_| Error::NormTooLarge(z.clone()))?;
            let pi = split_prime(p64);
            let pi_bar = quadrant_rep(&pi.conj()).expect("conjugate of a prime is nonzero");
            vec![pi, pi_bar]
        };
        for q in candidates {
            let mut mult = 0u32;
            while let Some(t) = rest.checked_div(&q) {
                rest = t;
                mult += 1;
            }
            if mult > 0 {
                factors.push((q, mult));
            }
        }
    }
    assert!(
        rest.is_unit(),
        "all prime divisors of the norm were exhausted"
    );
    factors.sort_by(|(a, _), (b, _)| a.norm().cmp(&b.norm()).then(a.re.cmp(&b.re)));
    Ok(GammaFactorization { unit: rest, factors })
}

/// True iff no Gaussian prime divides `z` twice.  Note `2 = -i(1+i)²` is
/// *not* square-free.  Errors on zero.
pub fn is_square_free(z: &GaussInt) -> Result<bool, Error> {
    Ok(factor(z)?.factors.iter().all(|(_, m)| *m <= 1))
}

// ------------------------------------------------------- residue fields

/// The image of a Gaussian integer in the residue field `Z[i]/(p)`.
///
/// For `p = 1+i` and split primes the field is `GF(norm(p))`, reported as
/// a canonical integer residue; for inert primes `q ≡ 3 (mod 4)` it is
/// `GF(q²)`, reported as a pair `re + im·i` with both coordinates mod `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Residue {
    Int { value: u64, modulus: u64 },
    Pair { re: u64, im: u64, modulus: u64 },
}

impl Residue {
    pub fn is_zero(&self) -> bool {
        match self {
            Residue::Int { value, .. } => *value == 0,
            Residue::Pair { re, im, .. } => *re == 0 && *im == 0,
        }
    }
}

fn mod_u64(x: &BigInt, m: u64) -> u64 {
    x.mod_floor(&BigInt::from(m))
        .to_u64()
        .expect("reduced residue fits in u64")
}

/// Reduces `z` in the residue field `Z[i]/(p)` for a Gaussian prime `p`.
///
/// * `p = 1+i` (norm 2): `a+bi ↦ (a+b) mod 2` in `GF(2)`.
/// * split `p = a+bi` (norm an ordinary prime `≡ 1 mod 4`): `GF(norm)`,
///   with `i ↦ -a·b⁻¹ mod norm`.
/// * inert `p` (associate of `q ≡ 3 mod 4`): pairs mod `q` with `i² = -1`.
pub fn residue(z: &GaussInt, p: &GaussInt) -> Result<Residue, Error> {
    if !is_gaussian_prime(p) {
        return Err(Error::NotGaussianPrime(p.clone()));
    }
    let np = p.norm();
    if np == BigUint::from(2u32) {
        let value = mod_u64(&(&z.re + &z.im), 2);
        return Ok(Residue::Int { value, modulus: 2 });
    }
    if p.re.is_zero() || p.im.is_zero() {
        let coord = if p.re.is_zero() { &p.im } else { &p.re };
        let q = coord
            .magnitude()
            .to_u64()
            .ok_or_else(|| Error::PrimeTooLarge(p.clone()))?;
        return Ok(Residue::Pair {
            re: mod_u64(&z.re, q),
            im: mod_u64(&z.im, q),
            modulus: q,
        });
    }
    let m = np.to_u64().ok_or_else(|| Error::PrimeTooLarge(p.clone()))?;
    let a = mod_u64(&p.re, m);
    let b = mod_u64(&p.im, m);
    // a + bi ≡ 0 (mod p) forces i ≡ -a·b⁻¹ in GF(m).
    let t = mulmod(m - a, mod_inverse(b, m), m);
    let value = (mod_u64(&z.re, m) + mulmod(mod_u64(&z.im, m), t, m)) % m;
    Ok(Residue::Int { value, modulus: m })
}

// ---------------------------------------------------------------- GaussRat

/// A Gaussian rational in lowest terms: `num / den` with `den` a positive
/// ordinary integer and `gcd(num.re, num.im, den) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    num: GaussInt,
    den: BigUint,
}

impl GaussRat {
    /// Builds `num / den`, normalizing sign and reducing to lowest terms.
    pub fn new(num: GaussInt, den: impl Into<BigInt>) -> Result<Self, Error> {
        let den: BigInt = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let (num, den) = if den.is_negative() {
            (-num, den.magnitude().clone())
        } else {
            (num, den.magnitude().clone())
        };
        if num.is_zero() {
            return Ok(GaussRat { num, den: BigUint::one() });
        }
        let g = num.re.magnitude().gcd(num.im.magnitude()).gcd(&den);
        let gi = BigInt::from(g.clone());
        Ok(GaussRat {
            num: GaussInt { re: num.re / &gi, im: num.im / gi },
            den: den / g,
        })
    }

    pub fn from_int(z: GaussInt) -> Self {
        GaussRat { num: z, den: BigUint::one() }
    }

    pub fn zero() -> Self {
        GaussRat::from_int(GaussInt::zero())
    }

    pub fn one() -> Self {
        GaussRat::from_int(GaussInt::one())
    }

    pub fn num(&self) -> &GaussInt {
        &self.num
    }

    pub fn den(&self) -> &BigUint {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_gauss_int(&self) -> Option<GaussInt> {
        self.is_integral().then(|| self.num.clone())
    }

    pub fn conj(&self) -> Self {
        GaussRat { num: self.num.conj(), den: self.den.clone() }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self.num.conj() * GaussInt::new(BigInt::from(self.den.clone()), 0);
        GaussRat::new(num, self.num.norm_bigint())
    }

    /// The denominator of `self` in lowest terms *over `Z[i]`*: the
    /// canonical representative of `den / gcd_{Z[i]}(num, den)`.
    ///
    /// This differs from `den()` when `num` and `den` share a non-real
    /// Gaussian divisor: `(1-1i)/2` has ordinary denominator 2 but
    /// Gaussian denominator `1+i`.
    pub fn gauss_denominator(&self) -> GaussInt {
        if self.num.is_zero() {
            return GaussInt::one();
        }
        let den = GaussInt::new(BigInt::from(self.den.clone()), 0);
        let g = gauss_gcd(&self.num, &den).expect("nonzero arguments");
        let q = den
            .checked_div(&g)
            .expect("gcd divides the denominator");
        quadrant_rep(&q).expect("quotient of nonzero values is nonzero")
    }
}

impl Add<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        let d1 = BigInt::from(self.den.clone());
        let d2 = BigInt::from(rhs.den.clone());
        let num = &self.num * &GaussInt::new(d2.clone(), 0) + &rhs.num * &GaussInt::new(d1.clone(), 0);
        GaussRat::new(num, d1 * d2).expect("nonzero denominator")
    }
}

impl Sub<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        self + &(-rhs)
    }
}

impl Mul<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(
            &self.num * &rhs.num,
            BigInt::from(&self.den * &rhs.den),
        )
        .expect("nonzero denominator")
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.re.is_zero() || self.num.im.is_zero() {
            write!(f, "{}/{}", self.num, self.den)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re, im)
    }

    fn lit(s: &str) -> GaussInt {
        parse_gauss_literal(s).unwrap()
    }

    #[test]
    fn norm_examples() {
        assert_eq!(gi(3, -2).norm(), BigUint::from(13u32));
        assert_eq!(gi(0, 0).norm(), BigUint::from(0u32));
        assert_eq!(gi(1, 1).norm(), BigUint::from(2u32));
    }

    #[test]
    fn literal_round_trip_and_forms() {
        for s in ["3", "-2i", "1+2i", "-1-1i", "i", "0", "-i", "17-1i"] {
            let z = lit(s);
            assert_eq!(z.to_string(), s, "canonical form survives a round trip");
        }
        // Liberal inputs normalize to canonical output.
        assert_eq!(lit("1+i").to_string(), "1+1i");
        assert_eq!(lit("+3").to_string(), "3");
        assert_eq!(lit("2i+3").to_string(), "3+2i");
        assert_eq!(lit(" 4-3i ").to_string(), "4-3i");
    }

    #[test]
    fn literal_rejects_malformed_input() {
        for s in ["", "x", "1+", "i+i", "3+4", "1++2i", "2 i", "12x"] {
            assert!(parse_gauss_literal(s).is_err(), "{:?} should not parse", s);
        }
    }

    #[test]
    fn gamma_normalize_examples() {
        // Frozen values, each checked against the defining property below.
        let cases = [
            (gi(2, -1), gi(0, -1), gi(1, 2)),
            (gi(0, -2), gi(0, -1), gi(2, 0)),
            (gi(-3, 0), gi(-1, 0), gi(3, 0)),
            (gi(1, 1), gi(1, 0), gi(1, 1)),
            (gi(-1, 1), gi(0, 1), gi(1, 1)),
        ];
        for (z, unit, rep) in cases {
            let (u, r) = gamma_normalize(&z).unwrap();
            assert!(r.in_first_quadrant());
            assert_eq!(&u * &r, z, "unit · rep reconstructs the input");
            assert_eq!((u, r), (unit, rep));
        }
        assert_eq!(
            gamma_normalize(&GaussInt::zero()),
            Err(Error::ZeroHasNoQuadrantRep)
        );
    }

    #[test]
    fn first_quadrant_contains_one_associate_of_each_nonzero() {
        for re in -5..=5i64 {
            for im in -5..=5i64 {
                let z = gi(re, im);
                if z.is_zero() {
                    continue;
                }
                let hits = (0..4)
                    .filter(|&k| (&z * &GaussInt::i_pow(k)).in_first_quadrant())
                    .count();
                assert_eq!(hits, 1, "exactly one associate of {} is canonical", z);
            }
        }
    }

    #[test]
    fn euclidean_divmod_examples_and_bound() {
        let (q, r) = euclidean_divmod(&gi(3, 2), &gi(2, 0)).unwrap();
        assert_eq!((q.clone(), r.clone()), (gi(2, 1), gi(-1, 0)));
        assert_eq!(&q * &gi(2, 0) + &r, gi(3, 2));

        let (q, r) = euclidean_divmod(&gi(5, 0), &gi(1, 2)).unwrap();
        assert_eq!((q, r), (gi(1, -2), gi(0, 0)));

        assert_eq!(
            euclidean_divmod(&gi(1, 0), &GaussInt::zero()),
            Err(Error::DivisionByZero)
        );

        // Remainder bound norm(r) ≤ norm(b)/2 on a small exhaustive grid.
        for are in -6..=6i64 {
            for aim in -6..=6i64 {
                for bre in -4..=4i64 {
                    for bim in -4..=4i64 {
                        let (a, b) = (gi(are, aim), gi(bre, bim));
                        if b.is_zero() {
                            continue;
                        }
                        let (q, r) = euclidean_divmod(&a, &b).unwrap();
                        assert_eq!(&q * &b + &r, a);
                        assert!(r.norm() * 2u32 <= b.norm());
                    }
                }
            }
        }
    }

    #[test]
    fn gcd_and_lcm_examples() {
        assert_eq!(gauss_gcd(&gi(1, 1), &gi(1, -1)).unwrap(), gi(1, 1));
        assert_eq!(gauss_gcd(&gi(5, 0), &gi(0, 5)).unwrap(), gi(5, 0));
        assert_eq!(gauss_gcd(&gi(0, 0), &gi(3, 1)).unwrap(), gi(3, 1));
        assert_eq!(gauss_gcd(&gi(0, 0), &gi(0, 0)), Err(Error::GcdOfZeros));

        assert_eq!(gauss_lcm(&gi(1, 2), &gi(2, 1)).unwrap(), gi(5, 0));
        assert_eq!(gauss_lcm(&gi(1, 1), &gi(2, 0)).unwrap(), gi(2, 0));
        assert_eq!(gauss_lcm(&gi(0, 0), &gi(1, 0)), Err(Error::LcmWithZero));
    }

    #[test]
    fn gcd_divides_both_and_lcm_is_divided_by_both() {
        let vals: Vec<GaussInt> = (-4..=4)
            .flat_map(|re| (-4..=4).map(move |im| gi(re, im)))
            .filter(|z| !z.is_zero())
            .collect();
        for a in &vals {
            for b in &vals {
                let g = gauss_gcd(a, b).unwrap();
                assert!(g.divides(a) && g.divides(b));
                assert!(g.in_first_quadrant());
                let l = gauss_lcm(a, b).unwrap();
                assert!(a.divides(&l) && b.divides(&l));
                assert!(l.in_first_quadrant());
                // N(g)·N(l) = N(a)·N(b)
                assert_eq!(g.norm() * l.norm(), a.norm() * b.norm());
            }
        }
    }

    #[test]
    fn parity_examples() {
        assert_eq!(gi(1, 1).parity(), Parity::Even);
        assert_eq!(gi(2, 0).parity(), Parity::Even);
        assert_eq!(gi(1, 0).parity(), Parity::Odd);
        assert_eq!(gi(1, 2).parity(), Parity::Odd);
        assert_eq!(gi(0, 0).parity(), Parity::Even);
        // Even iff divisible by 1+i.
        for re in -5..=5i64 {
            for im in -5..=5i64 {
                let z = gi(re, im);
                let even = z.parity() == Parity::Even;
                assert_eq!(even, gi(1, 1).divides(&z), "parity of {}", z);
            }
        }
    }

    #[test]
    fn gaussian_prime_examples() {
        assert!(is_gaussian_prime(&gi(1, 1)));
        assert!(is_gaussian_prime(&gi(3, 0)));
        assert!(is_gaussian_prime(&gi(0, -3)));
        assert!(is_gaussian_prime(&gi(2, 1)));
        assert!(is_gaussian_prime(&gi(1, 2)));
        assert!(is_gaussian_prime(&gi(4, 1)));
        assert!(!is_gaussian_prime(&gi(2, 0))); // 2 = -i(1+i)²
        assert!(!is_gaussian_prime(&gi(5, 0))); // 5 = (2+i)(2-i)
        assert!(!is_gaussian_prime(&gi(1, 0)));
        assert!(!is_gaussian_prime(&gi(0, 1)));
        assert!(!is_gaussian_prime(&GaussInt::zero()));
        assert!(!is_gaussian_prime(&gi(3, 3)));
    }

    #[test]
    fn factor_examples() {
        // 5 = -i · (1+2i)(2+i)
        let f = factor(&gi(5, 0)).unwrap();
        assert_eq!(f.unit, gi(0, -1));
        assert_eq!(f.factors, vec![(gi(1, 2), 1), (gi(2, 1), 1)]);
        assert_eq!(f.product(), gi(5, 0));

        // 2 = -i · (1+i)²
        let f = factor(&gi(2, 0)).unwrap();
        assert_eq!(f.unit, gi(0, -1));
        assert_eq!(f.factors, vec![(gi(1, 1), 2)]);
        assert_eq!(f.product(), gi(2, 0));

        // Units factor as themselves with no primes.
        let f = factor(&gi(0, -1)).unwrap();
        assert_eq!(f.unit, gi(0, -1));
        assert!(f.factors.is_empty());

        assert_eq!(factor(&GaussInt::zero()), Err(Error::FactorZero));
    }

    #[test]
    fn factor_recomposes_on_a_grid() {
        for re in -9..=9i64 {
            for im in -9..=9i64 {
                let z = gi(re, im);
                if z.is_zero() {
                    continue;
                }
                let f = factor(&z).unwrap();
                assert_eq!(f.product(), z, "recomposition of {}", z);
                assert!(f.unit.is_unit());
                for (p, _) in &f.factors {
                    assert!(is_gaussian_prime(p), "{} must be prime", p);
                    assert!(p.in_first_quadrant());
                }
                for w in f.factors.windows(2) {
                    let key = |z: &GaussInt| (z.norm(), z.re.clone());
                    assert!(key(&w[0].0) < key(&w[1].0), "factors strictly ordered");
                }
            }
        }
    }

    #[test]
    fn square_free_examples() {
        assert!(is_square_free(&gi(-17, 0)).unwrap());
        assert!(!is_square_free(&gi(2, 0)).unwrap());
        assert!(!is_square_free(&gi(-68, 0)).unwrap()); // -68 = -4·17
        assert!(is_square_free(&gi(1, 1)).unwrap());
        assert!(is_square_free(&gi(0, -1)).unwrap()); // units are square-free
        assert!(!is_square_free(&gi(0, 9)).unwrap());
        assert!(is_square_free(&gi(5, 0)).unwrap());
        assert!(is_square_free(&GaussInt::zero()).is_err());
    }

    #[test]
    fn residue_examples() {
        assert_eq!(
            residue(&gi(3, 2), &gi(1, 1)).unwrap(),
            Residue::Int { value: 1, modulus: 2 }
        );
        assert_eq!(
            residue(&gi(1, 2), &gi(1, 2)).unwrap(),
            Residue::Int { value: 0, modulus: 5 }
        );
        assert_eq!(
            residue(&gi(0, 1), &gi(2, 1)).unwrap(),
            Residue::Int { value: 3, modulus: 5 }
        );
        assert_eq!(
            residue(&gi(4, 7), &gi(3, 0)).unwrap(),
            Residue::Pair { re: 1, im: 1, modulus: 3 }
        );
        assert!(residue(&gi(1, 0), &gi(5, 0)).is_err());
    }

    #[test]
    fn residue_is_a_ring_homomorphism_mod_split_prime() {
        // z ≡ residue(z) (mod p) must hold: p | z - residue(z).
        let p = gi(2, 1);
        for re in -6..=6i64 {
            for im in -6..=6i64 {
                let z = gi(re, im);
                let Residue::Int { value, .. } = residue(&z, &p).unwrap() else {
                    panic!("split prime gives integer residues");
                };
                let diff = &z - &gi(value as i64, 0);
                assert!(p.divides(&diff), "p must divide {} - {}", z, value);
            }
        }
    }

    #[test]
    fn gauss_rat_arithmetic_and_lowest_terms() {
        let half = GaussRat::new(gi(1, 1), 2).unwrap();
        assert_eq!(half.to_string(), "(1+1i)/2");
        let sum = &half + &half;
        assert_eq!(sum, GaussRat::from_int(gi(1, 1)));
        assert!(sum.is_integral());

        let r = GaussRat::new(gi(2, -2), -4).unwrap();
        assert_eq!(r.to_string(), "(-1+1i)/2");

        let inv = half.inv().unwrap();
        assert_eq!(&inv * &half, GaussRat::one());
        assert_eq!(inv.to_string(), "1-1i");

        assert!(GaussRat::new(gi(1, 0), 0).is_err());
        assert!(GaussRat::zero().inv().is_err());
    }

    #[test]
    fn gauss_denominator_reduces_over_the_gaussian_integers() {
        // (1-1i)/2 = 1/(1+i): the Gaussian denominator is 1+i, not 2.
        let r = GaussRat::new(gi(1, -1), 2).unwrap();
        assert_eq!(r.gauss_denominator(), gi(1, 1));
        let r = GaussRat::new(gi(1, 1), 2).unwrap();
        assert_eq!(r.gauss_denominator(), gi(1, 1));
        let r = GaussRat::new(gi(1, 2), 5).unwrap();
        assert_eq!(r.gauss_denominator(), gi(2, 1)); // (1+2i)/5 = 1/(1-2i), and 1-2i ~ 2+i
        let r = GaussRat::new(gi(3, 0), 4).unwrap();
        assert_eq!(r.gauss_denominator(), gi(4, 0));
        assert_eq!(GaussRat::zero().gauss_denominator(), gi(1, 0));
        // Defining property: den/gcd divides den, and num/(den/gcd)… the
        // reduced fraction num·(den/q)⁻¹ is checked by clearing: q·r ∈ Z[i]
        // and no proper divisor of q clears r.
        for (num, den) in [
            (gi(1, -1), 2i64),
            (gi(2, 2), 4),
            (gi(3, 1), 5),
            (gi(0, 2), 6),
            (gi(7, 0), 1),
        ] {
            let r = GaussRat::new(num, den).unwrap();
            let q = r.gauss_denominator();
            let cleared = &r * &GaussRat::from_int(q.clone());
            assert!(cleared.is_integral(), "q clears the denominator");
            for (p, _) in factor(&q).unwrap().factors {
                let smaller = q.checked_div(&p).unwrap();
                let partial = &r * &GaussRat::from_int(smaller);
                assert!(!partial.is_integral(), "q is minimal");
            }
        }
    }
}
