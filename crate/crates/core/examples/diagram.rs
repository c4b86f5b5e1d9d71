use letterlink::diagram::diagram;
use letterlink::symbols::parse_symbol;
use letterlink::words::parse_word_expr;

fn main() {
    let word = parse_word_expr("[a a,[b,a c]]").unwrap().to_word().free_reduce();
    for s in ["(a)b", "((a)b)a"] {
        println!("{}\n", diagram(&parse_symbol(s).unwrap(), &word));
    }
}
