//! Lists, prefix potentials, coboundings and letter-linking numbers.

use letterlink::linking::{enumerate_coboundings, eval_symbol, stack_cobounding, List, DEFAULT_MAX_TOKENS};
use letterlink::symbols::parse_symbol;
use letterlink::words::{parse_word_expr, Generator};

fn main() {
    let w = parse_word_expr("[a a,[b,a c]]").unwrap().to_word().free_reduce();
    let (a, b) = (Generator::new("a"), Generator::new("b"));
    let la = List::standard(&w, &a);
    let lb = List::standard(&w, &b);
    println!("Λ_a potential: {:?}", la.prefix_potential().unwrap().values());

    let linked = la.link(&lb).unwrap();
    println!("d⁻¹Λ_a ∧ Λ_b: {:?}, count {}", linked.support(), linked.count());

    let all = enumerate_coboundings(&la, DEFAULT_MAX_TOKENS).unwrap();
    println!("Λ_a has {} coboundings; the stack one is", all.len());
    for iv in stack_cobounding(&la).unwrap().intervals {
        println!("  [{}, {}] orientation {}", iv.start, iv.end, iv.orientation);
    }

    for s in ["(a)b", "((a)b)a", "(a)c", "((a)b)c"] {
        match eval_symbol(&parse_symbol(s).unwrap(), &w) {
            Ok(v) => println!("Φ_{s} = {v}"),
            Err(u) => println!("Φ_{s}: {u}"),
        }
    }
}
