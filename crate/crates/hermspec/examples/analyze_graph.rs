//! Walk-matrix analysis of a single mixed graph: the Hermitian adjacency
//! matrix, the walk matrix and its determinant, the reduced determinant,
//! the rank over Z[i]/(1+1i), elementary divisors, and the square-free
//! condition.
//!
//! Run with `cargo run --example analyze_graph`.

use hermspec::genspec::{generalized_spectrum, report_json, walk_report};
use hermspec::parse_graph;

fn main() {
    // A 4-vertex mixed graph: a triangle of arcs plus one undirected edge.
    let text = "n=4\n1 > 2\n2 > 3\n3 > 1\n3 - 4\n";
    let g = parse_graph(text).unwrap();
    println!("graph: {} vertices, {} edges", g.n(), g.edge_count());

    let report = walk_report(&g);
    println!("det W        = {}", report.det_w);
    println!("reduced part = {}   (det W divided by 2^⌊n/2⌋)", report.reduced);
    println!("rank mod 1+1i = {}", report.rank_1pi);
    println!(
        "divisors of W = {}",
        report.snf_d.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ")
    );
    println!("square-free condition: {}", report.condition_holds);

    // The generalized spectrum is the pair of characteristic polynomials
    // of A and of J - I - A.
    let spectrum = generalized_spectrum(&g);
    println!("char poly A       : {}", spectrum.p_a);
    println!("char poly J-I-A   : {}", spectrum.p_c);

    // The same data is available as one JSON object, plus the
    // self-converse verdict — this is what `hermspec analyze` prints.
    let mut json = report_json(&g);
    json["self_converse"] = g.is_self_converse().unwrap().is_some().into();
    println!("{}", serde_json::to_string_pretty(&json).unwrap());
}
