//! Symbol syntax, the Leibniz relation and maps of generating sets.

use letterlink::linking::eval_symbol_sum;
use letterlink::symbols::{leibniz_terms, parse_symbol};
use letterlink::words::{parse_word_expr, GeneratorMap};

fn main() {
    for text in ["a(b)", "b(a)((c)a)", "((a)b)a"] {
        let s = parse_symbol(text).unwrap();
        println!("{text} -> {s}: depth {}, letters {:?}", s.depth(), s.multidegree());
    }
    assert!(parse_symbol("(a)a").unwrap_err().to_string().contains("invalid"));

    let parts = ["a", "(b)c", "d"].map(|t| parse_symbol(t).unwrap());
    let sum = leibniz_terms(&parts).unwrap();
    let w = parse_word_expr("[[a,[b,c]],d]").unwrap().to_word();
    println!("Leibniz terms {sum}");
    println!("their sum on {}: {}", w.compact(), eval_symbol_sum(&sum, &w).unwrap());

    let f = GeneratorMap::from_pairs(&[("x", "a"), ("y", "a"), ("z", "b")]);
    let s = parse_symbol("(a)b").unwrap();
    let lifts: Vec<String> = s.preimages(&f).iter().map(ToString::to_string).collect();
    println!("lifts of {s} along x,y->a, z->b: {lifts:?}");
}
