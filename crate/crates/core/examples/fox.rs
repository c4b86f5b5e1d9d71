//! Fox free derivatives and their agreement with letter-linking numbers.

use letterlink::fox::{fox_eval, iterated_fox};
use letterlink::linking::eval_symbol;
use letterlink::symbols::parse_symbol;
use letterlink::words::{parse_word_expr, Generator};

fn main() {
    let w = parse_word_expr("[a a,[b,a c]]").unwrap().to_word();
    let seq: Vec<Generator> = ["a", "b", "a"].map(Generator::new).to_vec();
    for k in (0..3).rev() {
        let names: Vec<&str> = seq[k..].iter().map(Generator::name).collect();
        println!("∂_{} w = {}", names.join(","), iterated_fox(&w, &seq[k..]));
    }
    println!("(∂_a∂_b∂_a)° w = {}", fox_eval(&w, &seq));
    println!("Φ_((a)b)a(w) = {}", eval_symbol(&parse_symbol("((a)b)a").unwrap(), &w).unwrap());

    let c = parse_word_expr("[a,b]^3 [b,c]").unwrap().to_word();
    let ab: Vec<Generator> = ["a", "b"].map(Generator::new).to_vec();
    println!("∂°_ab = {}, Φ_(a)b = {}", fox_eval(&c, &ab), eval_symbol(&parse_symbol("(a)b").unwrap(), &c).unwrap());
}
