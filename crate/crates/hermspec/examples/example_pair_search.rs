//! Exhaustive search for the classic five-vertex pair: a self-converse
//! mixed graph and a non-self-converse one sharing both characteristic
//! polynomials.  The pair shows why the census restricts spectral
//! determination to self-converse graphs — outside that class, mates with
//! the same generalized spectrum always exist.
//!
//! Run with `cargo run --example example_pair_search`.

use hermspec::census::find_example_pair;
use hermspec::genspec::{generalized_spectrum, transfer_unitary, walk_report};
use hermspec::serialize_graph;

fn main() {
    let (g, h) = find_example_pair().unwrap();

    println!("self-converse side G:");
    print!("{}", serialize_graph(&g));
    println!();
    println!("non-self-converse side H:");
    print!("{}", serialize_graph(&h));
    println!();

    let spectrum = generalized_spectrum(&g);
    println!("shared char poly of A     : {}", spectrum.p_a);
    println!("shared char poly of J-I-A : {}", spectrum.p_c);
    assert_eq!(spectrum, generalized_spectrum(&h));

    let report = walk_report(&g);
    println!("det W(G) = {}   (absolute value 68)", report.det_w);
    println!("square-free condition on G: {}", report.condition_holds);

    assert!(g.isomorphic(&h).unwrap().is_none());
    let transfer = transfer_unitary(&g, &h).unwrap();
    println!("transfer unitary level: {}", transfer.level);
}
