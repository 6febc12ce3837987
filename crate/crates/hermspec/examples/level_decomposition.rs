//! The level-(1+1i) normal form: every row-stochastic Gaussian rational
//! unitary of level 1+1i is, up to row and column permutations, a block
//! matrix of 2×2 kernels followed by an identity block — and that block
//! shape rigidly pins down undirected graphs.
//!
//! Run with `cargo run --example level_decomposition`.

use hermspec::genspec::{
    decompose_level_two, level, normal_form_unitary, u0, undirected_rigidity_check,
};
use hermspec::mixedgraph::Permutation;
use hermspec::MixedGraph;

fn main() {
    // The 2×2 kernel: entries (1-1i)/2 on the diagonal, (1+1i)/2 off it.
    let kernel = u0();
    println!("kernel U0, level {}:", level(&kernel).unwrap());
    for r in 0..2 {
        let row: Vec<String> = (0..2).map(|c| kernel.get(r, c).to_string()).collect();
        println!("  [{}]", row.join(", "));
    }

    // A 5×5 normal form: two kernel blocks, then a 1×1 identity block.
    let nf = normal_form_unitary(2, 1);
    println!("normal form with k=2 kernels, s=1 identity: level {}", level(&nf).unwrap());

    // Scramble it by row and column permutations; the decomposition
    // recovers the block count exactly.
    let p = Permutation::from_image(vec![3, 5, 1, 4, 2]).unwrap().matrix().to_qmatrix();
    let scrambled = p.mul(&nf).mul(&p.conj_transpose());
    let (rows, cols, k) = decompose_level_two(&scrambled).unwrap();
    println!("scrambled copy decomposes with k = {k} kernel blocks");
    println!("  row permutation    : {rows}");
    println!("  column permutation : {cols}");
    assert_eq!(k, 2);

    // Rigidity: conjugating the adjacency matrix of an undirected graph by
    // the normal form either leaves the {0,1,i,-i} world — or stays inside
    // it, in which case it must fix the matrix entirely.
    let mut twin_edges = MixedGraph::new(4).unwrap();
    twin_edges.add_undirected(1, 2).unwrap();
    twin_edges.add_undirected(3, 4).unwrap();
    let stays = undirected_rigidity_check(&twin_edges.herm_adjacency(), 2, 0).unwrap();
    println!("two disjoint edges: conjugate stays in {{0,1,i,-i}} (and is fixed): {stays}");

    let mut path = MixedGraph::new(4).unwrap();
    path.add_undirected(1, 2).unwrap();
    path.add_undirected(2, 3).unwrap();
    path.add_undirected(3, 4).unwrap();
    let stays = undirected_rigidity_check(&path.herm_adjacency(), 2, 0).unwrap();
    println!("4-path: conjugate stays in {{0,1,i,-i}}: {stays}");
}
