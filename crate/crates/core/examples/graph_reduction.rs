//! Reducing symbol graphs to symbols, canonical forms and evaluation.

use letterlink::eil::{canonicalize, default_order, eval_graph, graph_of_symbol, parse_graph, reduce_at, reduce_full};
use letterlink::symbols::parse_symbol;
use letterlink::words::parse_word_expr;

fn main() {
    let g = parse_graph("{v1:a, v2:b, v3:c ; v1->v2, v2->v3}").unwrap();
    for (sign, h) in reduce_at(&g, "v2").unwrap() {
        println!("ρ_v2 term {sign:+}: {h}");
    }
    println!("ρ_v2,v1 = {}", reduce_full(&g, &["v2", "v1"]).unwrap());
    println!("ρ_v1,v2 = {}", reduce_full(&g, &["v1", "v2"]).unwrap());
    println!("default order {:?}", default_order(&g));

    let c = canonicalize(&parse_graph("{x:a, y:b ; x->y}").unwrap());
    println!("canonical a->b: {} with sign {}", c.graph, c.sign);

    let (tree, order) = graph_of_symbol(&parse_symbol("((a)b)a").unwrap());
    println!("graph of ((a)b)a: {tree}, order {order:?}");

    let w = parse_word_expr("[[a,b],c]").unwrap().to_word();
    println!("Φ_G on {} = {}", w.compact(), eval_graph(&g, &w).unwrap());
}
