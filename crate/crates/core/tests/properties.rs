use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use letterlink::eil::{
    arnold_triple, canonicalize, graph_of_symbol, parse_graph, parse_graph_sum, reduce_full, GraphSum,
};
use letterlink::fox::{fox_eval, parse_group_ring, GroupRingElement};
use letterlink::lie::{pair_graph_tree, parse_tree};
use letterlink::linalg::Matrix;
use letterlink::linking::eval_symbol;
use letterlink::sample::{random_bracketing, random_gamma, random_symbol, random_symbol_graph, random_word};
use letterlink::symbols::{parse_symbol, SymbolSum};
use letterlink::words::{parse_word_expr, Alphabet, Generator, GeneratorMap, Letter, Word};

fn abc() -> Alphabet {
    Alphabet::from_names(&["a", "b", "c"])
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..3usize, any::<bool>()), 0..=max_len).prop_map(|v| {
        let gens = abc();
        Word::from_letters(v.into_iter().map(|(i, inv)| Letter::new(gens.gens()[i].clone(), inv)).collect())
    })
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #[test]
    fn free_reduction_is_a_homomorphism(u in word_strategy(12), v in word_strategy(12)) {
        let r = u.free_reduce();
        prop_assert!(r.is_reduced());
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert!(u.multiply(&u.invert()).free_reduce().is_empty());
        prop_assert_eq!(u.multiply(&v).free_reduce(), r.multiply(&v.free_reduce()).free_reduce());
    }

    #[test]
    fn words_round_trip_through_text(w in word_strategy(12)) {
        prop_assume!(!w.is_empty());
        prop_assert_eq!(parse_word_expr(&w.to_string()).unwrap().to_word(), w);
    }

    #[test]
    fn cancelling_pairs_do_not_change_values(seed in any::<u64>(), at in 0usize..20) {
        let mut r = rng(seed);
        let depth = r.gen_range(0..=2);
        let sigma = random_symbol(&mut r, &abc(), depth);
        let w = random_gamma(&mut r, &abc(), depth, 80);
        let letter = Letter::new(abc().gens().choose(&mut r).unwrap().clone(), r.gen_bool(0.5));
        let padded = w.insert_cancelling_pair(at.min(w.len()), &letter);
        prop_assert_eq!(eval_symbol(&sigma, &padded), eval_symbol(&sigma, &w));
    }

    #[test]
    fn symbols_round_trip_and_relabel(seed in any::<u64>()) {
        let mut r = rng(seed);
        let depth = r.gen_range(0..=4);
        let s = random_symbol(&mut r, &abc(), depth);
        prop_assert_eq!(parse_symbol(&s.to_string()).unwrap(), s.clone());
        prop_assert_eq!(s.relabel(&GeneratorMap::identity(abc().gens())).unwrap(), s.clone());
        prop_assert_eq!(s.node_count(), depth + 1);
    }

    #[test]
    fn symbol_graphs_reduce_back_to_their_symbol(seed in any::<u64>()) {
        let mut r = rng(seed);
        let depth = r.gen_range(1..=4);
        let s = random_symbol(&mut r, &abc(), depth);
        let (g, order) = graph_of_symbol(&s);
        let refs: Vec<&str> = order.iter().map(String::as_str).collect();
        prop_assert_eq!(reduce_full(&g, &refs).unwrap(), SymbolSum::single(s));
    }

    #[test]
    fn trees_round_trip_and_sit_in_the_right_term(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = r.gen_range(1..=5);
        let leaves: Vec<Generator> = (0..k).map(|_| abc().gens().choose(&mut r).unwrap().clone()).collect();
        let t = random_bracketing(&mut r, &leaves);
        prop_assert_eq!(parse_tree(&t.to_string()).unwrap(), t.clone());
        let w = t.to_word();
        for j in 1..k {
            let seq: Vec<Generator> = (0..j).map(|_| abc().gens().choose(&mut r).unwrap().clone()).collect();
            prop_assert_eq!(fox_eval(&w, &seq), 0);
        }
    }

    #[test]
    fn flipping_an_edge_negates_everything(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=5);
        let g = random_symbol_graph(&mut r, &abc(), n, 0.0);
        let e = r.gen_range(0..g.edge_count());
        let h = g.flip_edge(e);
        let (cg, ch) = (canonicalize(&g), canonicalize(&h));
        prop_assert_eq!(&cg.encoding, &ch.encoding);
        prop_assert_eq!(cg.sign, -ch.sign);
        let leaves: Vec<Generator> = g.vertices().iter().map(|v| v.label().free_letter().clone()).collect();
        let mut shuffled = leaves.clone();
        shuffled.shuffle(&mut r);
        let t = random_bracketing(&mut r, &shuffled);
        prop_assert_eq!(pair_graph_tree(&g, &t).unwrap(), -pair_graph_tree(&h, &t).unwrap());
    }

    #[test]
    fn arnold_triples_pair_to_zero(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(3..=5);
        let g = random_symbol_graph(&mut r, &abc(), n, 0.0);
        let pairs: Vec<(usize, usize)> = (0..g.edge_count())
            .flat_map(|i| (0..g.edge_count()).map(move |j| (i, j)))
            .filter(|&(i, j)| i < j)
            .collect();
        let Some((sign, triple)) = pairs.iter().find_map(|&(i, j)| arnold_triple(&g, i, j)) else {
            return Ok(());
        };
        let leaves: Vec<Generator> = g.vertices().iter().map(|v| v.label().free_letter().clone()).collect();
        for _ in 0..5 {
            let mut shuffled = leaves.clone();
            shuffled.shuffle(&mut r);
            let t = random_bracketing(&mut r, &shuffled);
            let values: Vec<i64> = triple.iter().map(|h| pair_graph_tree(h, &t).unwrap()).collect();
            prop_assert_eq!(values.iter().sum::<i64>(), 0);
            prop_assert_eq!(pair_graph_tree(&g, &t).unwrap(), sign * values[0]);
        }
    }

    #[test]
    fn graph_sums_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut sum = GraphSum::zero();
        for _ in 0..r.gen_range(0..4) {
            let n = r.gen_range(1..=4);
            let g = random_symbol_graph(&mut r, &abc(), n, 0.0);
            let c = BigRational::new(BigInt::from(r.gen_range(-5..=5)), BigInt::from(r.gen_range(1..=3)));
            sum.add_graph(&g, c);
        }
        prop_assert_eq!(parse_graph_sum(&sum.to_string()).unwrap(), sum);
    }

    #[test]
    fn group_ring_text_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut x = GroupRingElement::zero();
        for _ in 0..r.gen_range(0..5) {
            let len = r.gen_range(0..6);
            let w = random_word(&mut r, &abc(), len);
            x.add_term(&w, r.gen_range(-4..=4));
        }
        prop_assert_eq!(parse_group_ring(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn solutions_solve(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..=4),
                       x in prop::collection::vec(-3i64..=3, 4)) {
        let m = Matrix::from_integers(&rows);
        let x: Vec<BigRational> = x.into_iter().map(|v| BigRational::from_integer(v.into())).collect();
        let b = m.mul_vec(&x);
        let y = m.solve(&b).unwrap();
        prop_assert_eq!(m.mul_vec(&y), b);
        prop_assert!(m.rank() <= 4);
    }
}

#[test]
fn zero_graph_sum_prints_zero() {
    assert_eq!(GraphSum::zero().to_string(), "0");
    assert!(parse_graph_sum("0").unwrap().is_zero());
    let g = parse_graph("{v1:a, v2:b ; v1->v2}").unwrap();
    let mut s = GraphSum::single(&g);
    s.add_graph(&g, -BigRational::from_integer(1.into()));
    assert!(s.is_zero());
}
