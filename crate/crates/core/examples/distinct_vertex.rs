//! Rewriting an Eil graph with a homogeneous edge as distinct-vertex graphs.

use letterlink::eil::{distinct_reduce, enumerate_distinct_vertex_graphs};
use letterlink::lie::{extended_pairing, lyndon_trees_of_multidegree, LieElement};
use letterlink::worked;

fn main() {
    let g = worked::reduction_input();
    let h = distinct_reduce(&g).unwrap();
    println!("input  {g}");
    println!("output {h}");
    println!("given  {}", worked::reduction_output());
    for t in lyndon_trees_of_multidegree(&g.multidegree()) {
        let e = LieElement::single(t.clone());
        println!(
            "  against {t}: {} and {}",
            extended_pairing(&h, &e).unwrap(),
            extended_pairing(&worked::reduction_output(), &e).unwrap()
        );
    }
    let basis = enumerate_distinct_vertex_graphs(&g.multidegree()).unwrap();
    println!("{} distinct-vertex graphs in this multidegree", basis.len());
}
