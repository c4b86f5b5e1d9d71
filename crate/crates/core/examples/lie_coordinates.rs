//! The Lie image of a word, from its bracket form and from Fox functionals.

use letterlink::lie::{lie_coordinates, lie_image_of_bracket_word, lyndon_coordinates};
use letterlink::words::{parse_word_expr, Alphabet};

fn main() {
    let abc = Alphabet::from_names(&["a", "b", "c"]);
    for text in ["[[a,b],c]", "[a,[b,c]]", "[a,b][b,a]", "[[a,b],c] [[b,c],a]"] {
        let expr = parse_word_expr(text).unwrap();
        let from_brackets = lyndon_coordinates(&lie_image_of_bracket_word(&expr).unwrap()).unwrap();
        let weight = if text.contains("][") { 2 } else { 3 };
        let from_fox = lie_coordinates(&expr.to_word(), weight, &abc).unwrap();
        println!("{text}: {from_brackets}  |  {from_fox}");
    }
    let err = lie_coordinates(&parse_word_expr("[a,b]").unwrap().to_word(), 3, &abc).unwrap_err();
    println!("[a,b] at weight 3: {err}");
}
