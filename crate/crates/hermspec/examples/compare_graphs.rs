//! Comparing two mixed graphs: cospectrality, isomorphism testing, and the
//! transfer unitary W(G)·W(H)⁻¹ with its level.
//!
//! Two contrasting pairs.  The four-vertex mates share their generalized
//! spectrum but have singular walk matrices, so no transfer unitary
//! certifies them.  The five-vertex pair has nonsingular walk matrices and
//! a genuine non-permutation unitary between them.
//!
//! Run with `cargo run --example compare_graphs`.

use hermspec::genspec::{self, generalized_spectrum, r_cospectral, transfer_unitary, walk_report};
use hermspec::parse_graph;

fn main() {
    // --- four vertices: cospectral mates, singular walk matrices ---
    let g = parse_graph("n=4\n1 > 3\n4 > 1\n2 > 3\n4 > 2\n3 > 4\n").unwrap();
    let h = parse_graph("n=4\n1 > 3\n4 > 1\n3 > 2\n2 > 4\n3 > 4\n").unwrap();

    assert!(r_cospectral(&g, &h).unwrap());
    assert!(g.isomorphic(&h).unwrap().is_none());
    let spectrum = generalized_spectrum(&g);
    println!("4-vertex pair: R-cospectral, not isomorphic");
    println!("  shared char poly of A     : {}", spectrum.p_a);
    println!("  shared char poly of J-I-A : {}", spectrum.p_c);
    println!("  det W(G) = {}", walk_report(&g).det_w);
    match transfer_unitary(&g, &h) {
        Err(genspec::Error::SingularWalk(side)) => {
            println!("  transfer unitary: undetermined ({side} walk matrix is singular)");
        }
        other => panic!("expected a singular walk matrix, got {other:?}"),
    }

    // --- five vertices: a genuine transfer unitary ---
    let g = parse_graph("n=5\n1 - 4\n1 > 5\n2 > 3\n2 > 4\n2 > 5\n3 - 4\n4 > 5\n").unwrap();
    let h = parse_graph("n=5\n1 - 4\n1 > 5\n2 - 3\n2 > 5\n3 > 4\n3 > 5\n4 > 5\n").unwrap();

    assert!(r_cospectral(&g, &h).unwrap());
    assert!(g.isomorphic(&h).unwrap().is_none());
    println!();
    println!("5-vertex pair: R-cospectral, not isomorphic, nonsingular walk matrices");
    let transfer = transfer_unitary(&g, &h).unwrap();
    println!("  level of W(G)·W(H)⁻¹ : {}", transfer.level);
    println!("  transfer unitary:");
    for r in 0..5 {
        let row: Vec<String> = (0..5).map(|c| transfer.u.get(r, c).to_string()).collect();
        println!("    [{}]", row.join(", "));
    }
    assert!(!transfer.level.is_one(), "a non-isomorphic pair cannot have level 1");
}
