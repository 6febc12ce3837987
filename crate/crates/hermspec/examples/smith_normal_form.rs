//! Smith normal form over the Gaussian integers: elementary divisors,
//! unimodular transforms, and exact reconstruction of the input.
//!
//! Run with `cargo run --example smith_normal_form`.

use hermspec::exactla::{det, parse_matrix, snf};

fn main() {
    // The matrix file format: one row per line, comma-separated literals.
    let text = "1,i\n1,-i\n";
    let m = parse_matrix(text).unwrap();
    let result = snf(&m).unwrap();

    let divisors: Vec<String> = result.d.iter().map(|d| d.to_string()).collect();
    println!("input rows : {text:?}");
    println!("divisors   : {}", divisors.join(", "));

    // Each divisor divides the next.
    for pair in result.d.windows(2) {
        assert!(pair[0].divides(&pair[1]));
    }

    // The transforms are unimodular: their determinants are units.
    let d1 = det(&result.v1).unwrap();
    let d2 = det(&result.v2).unwrap();
    println!("det V1 = {d1}, det V2 = {d2}");
    assert!(d1.is_unit() && d2.is_unit());

    // V1 · diag(d) · V2 reproduces the input exactly.
    assert_eq!(result.reconstruct(), m);
    println!("reconstruction check: V1·diag(d)·V2 equals the input");

    // A diagonal matrix with associate entries still normalizes: both
    // divisors become the first-quadrant representative 1+1i.
    let diag = parse_matrix("1+1i,0\n0,1-1i\n").unwrap();
    let result = snf(&diag).unwrap();
    println!(
        "diag(1+1i, 1-1i) has divisors {}",
        result.d.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ")
    );
}
