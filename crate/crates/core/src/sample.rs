//! Random and exhaustive instance generators for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::eil::{labelled_trees, SymbolGraph};
use crate::lie::{bracketings, BracketTree};
use crate::symbols::Symbol;
use crate::words::{Alphabet, GammaSampler, Generator, Letter, Word};

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, alphabet: &Alphabet, len: usize) -> Word {
    Word::from_letters(
        (0..len)
            .map(|_| {
                let g = alphabet.gens().choose(rng).expect("nonempty alphabet").clone();
                Letter::new(g, rng.gen_bool(0.5))
            })
            .collect(),
    )
}

/// A word with every exponent sum zero: a random half followed by a shuffle of its inverse letters.
pub fn random_balanced_word<R: Rng + ?Sized>(rng: &mut R, alphabet: &Alphabet, max_len: usize) -> Word {
    let half = rng.gen_range(0..=max_len / 2);
    let first = random_word(rng, alphabet, half);
    let mut tail: Vec<Letter> = first.letters().iter().map(Letter::inverted).collect();
    tail.shuffle(rng);
    first.multiply(&Word::from_letters(tail))
}

pub fn random_gamma<R: Rng + ?Sized>(rng: &mut R, alphabet: &Alphabet, depth: usize, budget: usize) -> Word {
    GammaSampler::new(alphabet.clone(), budget).sample(depth, rng)
}

/// A valid symbol with `depth + 1` nodes: each new node hangs under a random
/// earlier node and avoids its parent's letter.
pub fn random_symbol<R: Rng + ?Sized>(rng: &mut R, alphabet: &Alphabet, depth: usize) -> Symbol {
    assert!(alphabet.len() >= 2 || depth == 0, "need two letters for a nested symbol");
    let gens = alphabet.gens();
    let mut labels = vec![gens.choose(rng).unwrap().clone()];
    let mut parent = vec![usize::MAX];
    for i in 1..=depth {
        let p = rng.gen_range(0..i);
        let choices: Vec<&Generator> = gens.iter().filter(|g| **g != labels[p]).collect();
        labels.push((*choices.choose(rng).unwrap()).clone());
        parent.push(p);
    }
    build_symbol(0, &labels, &parent)
}

fn build_symbol(v: usize, labels: &[Generator], parent: &[usize]) -> Symbol {
    let children = (0..labels.len())
        .filter(|&u| parent[u] == v)
        .map(|u| build_symbol(u, labels, parent))
        .collect();
    Symbol::new(labels[v].clone(), children).expect("labels differ from parents")
}

/// A uniformly random labelled tree on `0..n`, with random orientations.
pub fn random_oriented_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let p = order[rng.gen_range(0..i)];
        let c = order[i];
        edges.push(if rng.gen_bool(0.5) { (c, p) } else { (p, c) });
    }
    edges
}

/// A symbol graph on `n` vertices: letter labels, or with probability
/// `symbol_labels` a small symbol, never repeating a neighbour's free letter.
pub fn random_symbol_graph<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &Alphabet,
    n: usize,
    symbol_labels: f64,
) -> SymbolGraph {
    loop {
        let edges = random_oriented_tree(rng, n);
        let labels: Vec<Symbol> = (0..n)
            .map(|_| {
                if rng.gen_bool(symbol_labels) {
                    random_symbol(rng, alphabet, 1)
                } else {
                    Symbol::letter(alphabet.gens().choose(rng).unwrap().clone())
                }
            })
            .collect();
        let g = SymbolGraph::from_indexed(labels, edges).expect("random tree");
        if g.is_distinct_vertex() {
            return g;
        }
    }
}

/// An Eil graph on `n ≥ 2` letter-labelled vertices with at least one homogeneous edge.
pub fn random_ambient_eil_graph<R: Rng + ?Sized>(rng: &mut R, alphabet: &Alphabet, n: usize) -> SymbolGraph {
    assert!(n >= 2);
    loop {
        let edges = random_oriented_tree(rng, n);
        let labels: Vec<Generator> = (0..n)
            .map(|_| alphabet.gens().choose(rng).unwrap().clone())
            .collect();
        let g = SymbolGraph::from_letters(&labels, edges).expect("random tree");
        if !g.is_distinct_vertex() {
            return g;
        }
    }
}

/// A random planar bracketing of `leaves`.
pub fn random_bracketing<R: Rng + ?Sized>(rng: &mut R, leaves: &[Generator]) -> BracketTree {
    if leaves.len() == 1 {
        return BracketTree::leaf(leaves[0].clone());
    }
    let split = rng.gen_range(1..leaves.len());
    BracketTree::bracket(
        random_bracketing(rng, &leaves[..split]),
        random_bracketing(rng, &leaves[split..]),
    )
}

/// A random bracket tree of the given weight over `alphabet`.
pub fn random_bracket_tree<R: Rng + ?Sized>(rng: &mut R, alphabet: &Alphabet, weight: usize) -> BracketTree {
    let leaves: Vec<Generator> = (0..weight)
        .map(|_| alphabet.gens().choose(rng).unwrap().clone())
        .collect();
    random_bracketing(rng, &leaves)
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

/// Bracket trees using each of `gens` exactly once: every bracketing of every ordering.
pub fn uc_trees(gens: &[Generator]) -> Vec<BracketTree> {
    permutations(gens)
        .iter()
        .flat_map(|p| bracketings(p))
        .collect()
}

/// Every oriented tree with vertex labels `gens`, each used once.
pub fn all_eil_graphs(gens: &[Generator]) -> Vec<SymbolGraph> {
    let n = gens.len();
    let mut out = Vec::new();
    for edges in labelled_trees(n) {
        for mask in 0..(1u32 << edges.len()) {
            let oriented = edges
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| if mask >> i & 1 == 1 { (b, a) } else { (a, b) })
                .collect();
            out.push(SymbolGraph::from_letters(gens, oriented).expect("labelled tree"));
        }
    }
    out
}

/// Every permutation of `items`.
pub fn all_permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    permutations(items)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_respect_their_contracts() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let abc = Alphabet::from_names(&["a", "b", "c"]);
        for depth in 0..5 {
            let s = random_symbol(&mut rng, &abc, depth);
            assert_eq!(s.depth(), depth);
            assert!(s.is_valid());
        }
        for n in 1..6 {
            let g = random_symbol_graph(&mut rng, &abc, n, 0.3);
            assert_eq!(g.vertex_count(), n);
            assert!(g.is_distinct_vertex());
        }
        let g = random_ambient_eil_graph(&mut rng, &abc, 4);
        assert!(!g.is_distinct_vertex());
        let w = random_balanced_word(&mut rng, &abc, 12);
        assert!(w.len() <= 12);
        assert!(abc.gens().iter().all(|g| w.exponent_sum(g) == 0));
        let gens = [Generator::new("a"), Generator::new("b"), Generator::new("c")];
        assert_eq!(uc_trees(&gens).len(), 12);
        assert_eq!(all_eil_graphs(&gens).len(), 12);
    }
}
