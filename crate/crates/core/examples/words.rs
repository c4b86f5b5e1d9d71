//! Parsing, reduction and lower-central-series sampling of free-group words.

use letterlink::words::{parse_word_expr, random_gamma_element, Alphabet, Word};

fn main() {
    let expr = parse_word_expr("[a a,[b,a c]]").unwrap();
    let literal = expr.to_word();
    let reduced = literal.free_reduce();
    println!("literal ({} letters): {literal}", literal.len());
    println!("reduced ({} letters): {}", reduced.len(), reduced.compact());

    let u = parse_word_expr("a b^2").unwrap().to_word();
    let v = parse_word_expr("b^-1 c").unwrap().to_word();
    println!("[u, v] = {}", Word::commutator(&u, &v).free_reduce().compact());
    println!("u^-1 = {}", u.invert().compact());

    let abc = Alphabet::from_names(&["a", "b", "c"]);
    for depth in 0..4 {
        let w = random_gamma_element(depth, &abc, 60, 7);
        println!("γ_{depth} sample: {}", w.free_reduce().compact());
    }
}
