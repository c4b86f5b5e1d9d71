//! The worked examples: the running word, the weight-five pairing blocks and
//! the reduction of an Eil graph with a homogeneous edge.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::eil::{enumerate_distinct_vertex_graphs, parse_eil_graph, EilError, GraphSum, SymbolGraph};
use crate::lie::{lyndon_trees_of_multidegree, pair_graph_tree, parse_tree, BracketTree};
use crate::linalg::Matrix;
use crate::words::{parse_word_expr, Generator, Word};

/// `[aa, [b, ac]]`, freely reduced: `a a b a c b⁻¹ c⁻¹ a⁻¹ a⁻¹ c b c⁻¹ a⁻¹ b⁻¹`.
pub fn running_word() -> Word {
    parse_word_expr("[a a, [b, a c]]")
        .expect("fixed input")
        .to_word()
        .free_reduce()
}

fn graph(text: &str) -> SymbolGraph {
    parse_eil_graph(text).expect("fixed input")
}

fn tree(text: &str) -> BracketTree {
    parse_tree(text).expect("fixed input")
}

/// Four `a` vertices pointing at one `b`.
pub fn four_star() -> SymbolGraph {
    graph("{a1:a, a2:a, a3:a, a4:a, b1:b ; a1->b1, a2->b1, a3->b1, a4->b1}")
}

/// Four `b` vertices pointing at one `a`.
pub fn mirrored_four_star() -> SymbolGraph {
    graph("{a1:a, b1:b, b2:b, b3:b, b4:b ; b1->a1, b2->a1, b3->a1, b4->a1}")
}

/// Dual graphs (rows) and Hall trees (columns) for a weight-five multidegree
/// `(#a, #b)` of the free group on `a, b`.
pub fn weight_five_block(a: usize, b: usize) -> Option<(Vec<SymbolGraph>, Vec<BracketTree>)> {
    let (rows, cols): (Vec<&str>, Vec<&str>) = match (a, b) {
        (4, 1) => (vec![], vec!["[a,[a,[a,[a,b]]]]"]),
        (1, 4) => (vec![], vec!["[[[[a,b],b],b],b]"]),
        (3, 2) => (
            vec![
                "{b1:b, a1:a, b2:b, a2:a, a3:a ; b1->a1, a1->b2, b2->a2, a3->b2}",
                "{a1:a, b1:b, a2:a, b2:b, a3:a ; a1->b1, b1->a2, a2->b2, b2->a3}",
            ],
            vec!["[a,[a,[[a,b],b]]]", "[[a,[a,b]],[a,b]]"],
        ),
        (2, 3) => (
            vec![
                "{a1:a, b1:b, a2:a, b2:b, b3:b ; a1->b1, b1->a2, a2->b2, b3->a2}",
                "{b1:b, a1:a, b2:b, a2:a, b3:b ; b1->a1, a1->b2, b2->a2, a2->b3}",
            ],
            vec!["[a,[[[a,b],b],b]]", "[[a,b],[[a,b],b]]"],
        ),
        _ => return None,
    };
    let rows = match (a, b) {
        (4, 1) => vec![four_star()],
        (1, 4) => vec![mirrored_four_star()],
        _ => rows.into_iter().map(graph).collect(),
    };
    Some((rows, cols.into_iter().map(tree).collect()))
}

/// `b → a → a` with the second `a` pointing at `c` and `d`.
pub fn reduction_input() -> SymbolGraph {
    graph("{b1:b, a1:a, a2:a, c1:c, d1:d ; b1->a1, a1->a2, a2->c1, a2->d1}")
}

/// `½(G′ − G″ − G‴)`, the distinct-vertex rewriting of [`reduction_input`].
pub fn reduction_output() -> GraphSum {
    let half = BigRational::new(1.into(), 2.into());
    let mut sum = GraphSum::zero();
    sum.add_graph(
        &graph("{b1:b, a1:a, a2:a, c1:c, d1:d ; b1->a1, a1->c1, c1->a2, d1->a1}"),
        half.clone(),
    );
    sum.add_graph(
        &graph("{b1:b, a1:a, a2:a, c1:c, d1:d ; b1->a1, d1->a2, a2->c1, a1->d1}"),
        -half.clone(),
    );
    sum.add_graph(
        &graph("{a1:a, b1:b, a2:a, c1:c, d1:d ; a1->b1, b1->a2, c1->a2, d1->a2}"),
        -half,
    );
    sum
}

/// `⟨row, column⟩` matrix.
pub fn pairing_matrix(rows: &[SymbolGraph], cols: &[BracketTree]) -> Result<Matrix, EilError> {
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (r, g) in rows.iter().enumerate() {
        for (c, t) in cols.iter().enumerate() {
            m.set(r, c, BigRational::from_integer(BigInt::from(pair_graph_tree(g, t)?)));
        }
    }
    Ok(m)
}

/// Dual graphs, trees and their pairing matrix for one multidegree. The
/// weight-five blocks on `a, b` use [`weight_five_block`]; otherwise columns
/// are the Lyndon trees and rows are distinct-vertex graphs taken greedily
/// while they raise the rank.
pub fn pairing_block(
    md: &BTreeMap<Generator, usize>,
) -> Result<(Vec<SymbolGraph>, Vec<BracketTree>, Matrix), EilError> {
    let count = |name: &str| md.get(&Generator::new(name)).copied().unwrap_or(0);
    let only_ab = md.keys().all(|g| g.name() == "a" || g.name() == "b");
    if only_ab {
        if let Some((rows, cols)) = weight_five_block(count("a"), count("b")) {
            let m = pairing_matrix(&rows, &cols)?;
            return Ok((rows, cols, m));
        }
    }
    let cols = lyndon_trees_of_multidegree(md);
    let mut rows: Vec<SymbolGraph> = Vec::new();
    let mut rank = 0;
    for g in enumerate_distinct_vertex_graphs(md)? {
        if rank == cols.len() {
            break;
        }
        let mut trial = rows.clone();
        trial.push(g);
        let r = pairing_matrix(&trial, &cols)?.rank();
        if r > rank {
            rank = r;
            rows = trial;
        }
    }
    let m = pairing_matrix(&rows, &cols)?;
    Ok((rows, cols, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(pairs: &[(&str, usize)]) -> BTreeMap<Generator, usize> {
        pairs.iter().map(|&(g, n)| (Generator::new(g), n)).collect()
    }

    #[test]
    fn blocks_are_square_and_invertible() {
        for d in [md(&[("a", 3), ("b", 2)]), md(&[("a", 2), ("b", 3)]), md(&[("a", 2), ("b", 1), ("c", 1)])] {
            let (rows, cols, m) = pairing_block(&d).unwrap();
            assert_eq!(rows.len(), cols.len());
            assert_ne!(m.determinant(), Some(BigRational::from_integer(0.into())));
        }
        let (_, _, m) = pairing_block(&md(&[("a", 3), ("b", 2)])).unwrap();
        assert_eq!(m.to_string(), "[[4,-2],[4,4]]");
        let (_, _, m) = pairing_block(&md(&[("a", 1), ("b", 4)])).unwrap();
        assert_eq!(m.rows(), 1);
    }
}
