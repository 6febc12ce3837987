//! Finding cospectral mates: the spectrum buckets of the four-vertex
//! census that hold more than one isomorphism class.
//!
//! A class is determined by its generalized spectrum exactly when it is
//! alone in its bucket, so the buckets below are the complete list of
//! four-vertex failures of spectral determination.
//!
//! Run with `cargo run --example find_cospectral_mates`.

use std::collections::BTreeMap;

use hermspec::census::{Census, CensusOptions};
use hermspec::{EdgeKind, MixedGraph};

fn main() {
    let census = Census::compute(4, &CensusOptions::default()).unwrap();

    // Canonical code -> representative graph, for decoding bucket members.
    let by_code: BTreeMap<Vec<u8>, MixedGraph> = census
        .representatives()
        .into_iter()
        .map(|g| (g.canonical_code().unwrap(), g))
        .collect();

    let mates: Vec<_> = census
        .buckets()
        .iter()
        .filter(|bucket| bucket.members.len() > 1)
        .collect();
    println!(
        "{} of {} classes are not determined by their spectrum, in {} buckets:",
        census.class_count() - census.dgs_count(),
        census.class_count(),
        mates.len()
    );

    for bucket in mates {
        println!();
        println!("shared char poly of A     : {}", bucket.spectrum.p_a);
        println!("shared char poly of J-I-A : {}", bucket.spectrum.p_c);
        for code in &bucket.members {
            let g = &by_code[code];
            let edges: Vec<String> = g
                .edges()
                .map(|(u, v, kind)| {
                    let op = match kind {
                        EdgeKind::Undirected => "-",
                        EdgeKind::Forward => ">",
                        EdgeKind::Backward => "<",
                    };
                    format!("{u} {op} {v}")
                })
                .collect();
            println!("  member: {}", edges.join(", "));
        }
    }
}
