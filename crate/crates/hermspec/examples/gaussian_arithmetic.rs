//! Tour of the Gaussian-integer number theory layer: literals, the
//! Euclidean division contract, gcd/lcm up to units, factorization into
//! first-quadrant primes, square-freeness, and residue fields.
//!
//! Run with `cargo run --example gaussian_arithmetic`.

use hermspec::gaussint::{
    euclidean_divmod, factor, gauss_gcd, gauss_lcm, is_gaussian_prime, is_square_free,
    parse_gauss_literal, residue, GaussInt, Residue,
};

fn main() {
    // Literals cover integers, pure-imaginary values, and mixed forms.
    let a = parse_gauss_literal("7+3i").unwrap();
    let b = parse_gauss_literal("2-1i").unwrap();
    println!("a = {a}, b = {b}, N(a) = {}, N(b) = {}", a.norm(), b.norm());

    // Euclidean division leaves a remainder of smaller norm.
    let (q, r) = euclidean_divmod(&a, &b).unwrap();
    println!("a = ({b})·({q}) + {r},  N(r) = {} < {} = N(b)", r.norm(), b.norm());
    assert_eq!(&b * &q + &r, a);
    assert!(r.norm() < b.norm());

    // gcd and lcm return the canonical first-quadrant representative.
    let g = gauss_gcd(&GaussInt::new(1, 1), &GaussInt::new(1, -1)).unwrap();
    println!("gcd(1+1i, 1-1i) = {g}   (1-1i is an associate of 1+1i)");
    let l = gauss_lcm(&GaussInt::new(2, 0), &GaussInt::new(1, 1)).unwrap();
    println!("lcm(2, 1+1i)    = {l}");

    // 2 ramifies: it is a unit times the square of the prime 1+1i.
    let f = factor(&GaussInt::new(2, 0)).unwrap();
    println!("2 = ({}) · Π {:?}", f.unit, f.factors.iter().map(|(p, m)| format!("({p})^{m}")).collect::<Vec<_>>());
    assert_eq!(f.product(), GaussInt::new(2, 0));
    assert!(is_gaussian_prime(&GaussInt::new(1, 1)));
    assert!(!is_square_free(&GaussInt::new(2, 0)).unwrap());

    // 5 splits into two conjugate primes, so it is square-free.
    let f5 = factor(&GaussInt::new(5, 0)).unwrap();
    println!("5 factors into {} distinct primes; square-free: {}", f5.factors.len(), is_square_free(&GaussInt::new(5, 0)).unwrap());

    // Residue fields: modulo 1+1i every Gaussian integer is a bit.
    match residue(&GaussInt::new(3, 2), &GaussInt::new(1, 1)).unwrap() {
        Residue::Int { value, modulus } => println!("3+2i ≡ {value} (mod 1+1i), field GF({modulus})"),
        Residue::Pair { .. } => unreachable!("1+1i has a prime field"),
    }
}
