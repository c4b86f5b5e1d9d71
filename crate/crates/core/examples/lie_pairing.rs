//! Lyndon bases, the graph-tree pairing and the weight-five matrices.

use letterlink::lie::{lyndon_basis, pair_graph_tree, parse_tree};
use letterlink::words::{Alphabet, Generator};
use letterlink::worked;

fn main() {
    let ab = Alphabet::from_names(&["a", "b"]);
    for k in 1..=5 {
        println!("weight {k}: {} Lyndon trees", lyndon_basis(k, &ab).len());
    }

    let star = worked::four_star();
    let t = parse_tree("[a,[a,[a,[a,b]]]]").unwrap();
    println!("⟨{star}, {t}⟩ = {}", pair_graph_tree(&star, &t).unwrap());

    for (na, nb) in [(3, 2), (2, 3)] {
        let md = [(Generator::new("a"), na), (Generator::new("b"), nb)].into_iter().collect();
        let (_, cols, m) = worked::pairing_block(&md).unwrap();
        let cols: Vec<String> = cols.iter().map(ToString::to_string).collect();
        println!("({na},{nb}) {m}, det {}, columns {cols:?}", m.determinant().unwrap());
    }
}
