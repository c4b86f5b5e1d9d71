//! Free Lie algebra side: bracket trees, the Lyndon basis, the configuration
//! pairing with Eil graphs, and the Lie image of commutator words.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::eil::{GraphSum, SymbolGraph};
use crate::fox;
use crate::linalg::{format_rational, Matrix};
use crate::parse::{Cursor, ParseError};
use crate::words::{Alphabet, Generator, Word, WordExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("mixed grading: weight {found} among terms of weight {expected}")]
    MixedGrading { expected: usize, found: usize },
    #[error("graph labels and tree leaves differ")]
    LabelMismatch,
    #[error("vertex `{0}` is not labelled by a single letter")]
    NotEil(String),
    #[error("word is not in the expected term of the lower central series: functional {sequence} is {value}")]
    NotInGamma { sequence: String, value: i64 },
    #[error("pairing matrix is singular")]
    SingularMatrix,
}

/// A planar binary tree with generator leaves; `[x, y]` is `Node(x, y)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BracketTree {
    Leaf(Generator),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn leaf(g: Generator) -> Self {
        BracketTree::Leaf(g)
    }

    pub fn bracket(left: BracketTree, right: BracketTree) -> Self {
        BracketTree::Node(Box::new(left), Box::new(right))
    }

    pub fn weight(&self) -> usize {
        match self {
            BracketTree::Leaf(_) => 1,
            BracketTree::Node(l, r) => l.weight() + r.weight(),
        }
    }

    /// Leaf labels, left to right.
    pub fn leaves(&self) -> Vec<Generator> {
        self.leaf_paths().into_iter().map(|(g, _)| g).collect()
    }

    /// Each leaf with its path from the root (`0` left, `1` right).
    pub fn leaf_paths(&self) -> Vec<(Generator, Vec<u8>)> {
        fn walk(t: &BracketTree, path: &mut Vec<u8>, out: &mut Vec<(Generator, Vec<u8>)>) {
            match t {
                BracketTree::Leaf(g) => out.push((g.clone(), path.clone())),
                BracketTree::Node(l, r) => {
                    path.push(0);
                    walk(l, path, out);
                    path.pop();
                    path.push(1);
                    walk(r, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn multidegree(&self) -> BTreeMap<Generator, usize> {
        let mut m = BTreeMap::new();
        for g in self.leaves() {
            *m.entry(g).or_insert(0) += 1;
        }
        m
    }

    /// The group commutator with the same bracketing, unreduced.
    pub fn to_word(&self) -> Word {
        match self {
            BracketTree::Leaf(g) => Word::generator(g),
            BracketTree::Node(l, r) => Word::commutator(&l.to_word(), &r.to_word()),
        }
    }
}

impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTree::Leaf(g) => write!(f, "{g}"),
            BracketTree::Node(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

impl fmt::Debug for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn parse_tree(text: &str) -> Result<BracketTree, ParseError> {
    let mut cur = Cursor::new(text);
    let t = tree(&mut cur)?;
    cur.expect_end()?;
    Ok(t)
}

fn tree(cur: &mut Cursor<'_>) -> Result<BracketTree, ParseError> {
    if cur.eat('[') {
        let l = tree(cur)?;
        cur.expect(',')?;
        let r = tree(cur)?;
        cur.expect(']')?;
        Ok(BracketTree::bracket(l, r))
    } else {
        let name = cur.ident().map_err(|e| ParseError {
            expected: "identifier or '['".into(),
            ..e
        })?;
        Ok(BracketTree::Leaf(Generator::new(name)))
    }
}

/// `int ('/' int)?`
pub(crate) fn rational(cur: &mut Cursor<'_>) -> Result<BigRational, ParseError> {
    let n = cur.int()?;
    let d = if cur.eat('/') {
        let at = cur.pos();
        let d = cur.int()?;
        if d <= 0 {
            return Err(ParseError {
                position: at,
                expected: "positive denominator".into(),
            });
        }
        d
    } else {
        1
    };
    Ok(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

/// Rational combination of bracket trees of one weight. Antisymmetry and
/// Jacobi are not quotiented; compare elements through the pairing or
/// through [`lyndon_coordinates`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieElement {
    terms: BTreeMap<BracketTree, BigRational>,
    weight: Option<usize>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(t: BracketTree) -> Self {
        let mut e = Self::zero();
        e.weight = Some(t.weight());
        e.terms.insert(t, BigRational::one());
        e
    }

    /// `None` for the empty element.
    pub fn weight(&self) -> Option<usize> {
        self.weight
    }

    fn check_weight(&self, w: usize) -> Result<(), LieError> {
        match self.weight {
            Some(expected) if expected != w => Err(LieError::MixedGrading { expected, found: w }),
            _ => Ok(()),
        }
    }

    pub fn add_term(&mut self, t: BracketTree, c: BigRational) -> Result<(), LieError> {
        self.check_weight(t.weight())?;
        if c.is_zero() {
            return Ok(());
        }
        self.weight = Some(t.weight());
        let entry = self.terms.entry(t.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&t);
        }
        Ok(())
    }

    pub fn add(&mut self, other: &LieElement, scale: &BigRational) -> Result<(), LieError> {
        if let Some(w) = other.weight {
            self.check_weight(w)?;
        }
        for (t, c) in &other.terms {
            self.add_term(t.clone(), c * scale)?;
        }
        if self.terms.is_empty() {
            self.weight = self.weight.or(other.weight);
        }
        Ok(())
    }

    /// Bilinear bracket of planar trees.
    pub fn bracket(&self, other: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        if let (Some(a), Some(b)) = (self.weight, other.weight) {
            out.weight = Some(a + b);
        }
        for (x, c) in &self.terms {
            for (y, d) in &other.terms {
                out.add_term(BracketTree::bracket(x.clone(), y.clone()), c * d)
                    .expect("weights add");
            }
        }
        out
    }

    pub fn scale(&self, s: &BigRational) -> LieElement {
        let mut out = LieElement {
            terms: BTreeMap::new(),
            weight: self.weight,
        };
        for (t, c) in &self.terms {
            out.add_term(t.clone(), c * s).expect("same weight");
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BracketTree, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, t: &BracketTree) -> BigRational {
        self.terms.get(t).cloned().unwrap_or_else(BigRational::zero)
    }
}

/// `c*tree` terms joined by ` + `; `0` when empty.
impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}*{}", format_rational(c), t)?;
        }
        Ok(())
    }
}

/// `lie := ('+'|'-')? term (('+'|'-') term)*`, `term := (rational '*')? tree`.
pub fn parse_lie(text: &str) -> Result<LieElement, LieError> {
    let mut cur = Cursor::new(text);
    let mut out = LieElement::zero();
    let mut sign = if cur.eat('-') {
        -1
    } else {
        cur.eat('+');
        1
    };
    loop {
        let c = if cur.peek_is_digit_or_sign() {
            let c = rational(&mut cur)?;
            cur.expect('*')?;
            c
        } else {
            BigRational::one()
        };
        let t = tree(&mut cur)?;
        out.add_term(t, c * BigRational::from_integer(sign.into()))?;
        if cur.eat('+') {
            sign = 1;
        } else if cur.eat('-') {
            sign = -1;
        } else {
            break;
        }
    }
    cur.expect_end()?;
    Ok(out)
}

/// Lyndon words of length exactly `k` over `alphabet`, in lexicographic order.
pub fn lyndon_words(k: usize, alphabet: &Alphabet) -> Vec<Vec<Generator>> {
    let n = alphabet.len();
    if k == 0 || n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut w: Vec<usize> = vec![0];
    loop {
        if w.len() == k {
            out.push(w.iter().map(|&i| alphabet.gens()[i].clone()).collect());
        }
        let m = w.len();
        while w.len() < k {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&(n - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(x) => *x += 1,
            None => break,
        }
    }
    out
}

fn is_lyndon(w: &[usize]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Bracketing by the longest proper Lyndon suffix: `[std(u), std(v)]`.
pub fn standard_bracketing(word: &[Generator], alphabet: &Alphabet) -> BracketTree {
    let idx: Vec<usize> = word
        .iter()
        .map(|g| alphabet.index_of(g).expect("letter in alphabet"))
        .collect();
    fn go(w: &[usize], alphabet: &Alphabet) -> BracketTree {
        if w.len() == 1 {
            return BracketTree::Leaf(alphabet.gens()[w[0]].clone());
        }
        let split = (1..w.len())
            .find(|&i| is_lyndon(&w[i..]))
            .expect("a single letter is Lyndon");
        BracketTree::bracket(go(&w[..split], alphabet), go(&w[split..], alphabet))
    }
    go(&idx, alphabet)
}

/// Standard bracketings of the Lyndon words of length `k`.
pub fn lyndon_basis(k: usize, alphabet: &Alphabet) -> Vec<BracketTree> {
    lyndon_words(k, alphabet)
        .iter()
        .map(|w| standard_bracketing(w, alphabet))
        .collect()
}

fn alphabet_of(md: &BTreeMap<Generator, usize>) -> Alphabet {
    Alphabet::new(md.keys().cloned())
}

fn word_multidegree(w: &[Generator]) -> BTreeMap<Generator, usize> {
    let mut m = BTreeMap::new();
    for g in w {
        *m.entry(g.clone()).or_insert(0) += 1;
    }
    m
}

/// Lyndon words of the given multidegree, letters ordered by name.
pub fn lyndon_words_of_multidegree(md: &BTreeMap<Generator, usize>) -> Vec<Vec<Generator>> {
    let md: BTreeMap<Generator, usize> = md.iter().filter(|(_, &n)| n > 0).map(|(g, &n)| (g.clone(), n)).collect();
    let k = md.values().sum();
    lyndon_words(k, &alphabet_of(&md))
        .into_iter()
        .filter(|w| word_multidegree(w) == md)
        .collect()
}

pub fn lyndon_trees_of_multidegree(md: &BTreeMap<Generator, usize>) -> Vec<BracketTree> {
    let alphabet = alphabet_of(md);
    lyndon_words_of_multidegree(md)
        .iter()
        .map(|w| standard_bracketing(w, &alphabet))
        .collect()
}

/// Every planar bracketing of the leaves in the given order.
pub fn bracketings(leaves: &[Generator]) -> Vec<BracketTree> {
    if leaves.len() == 1 {
        return vec![BracketTree::Leaf(leaves[0].clone())];
    }
    let mut out = Vec::new();
    for split in 1..leaves.len() {
        for l in bracketings(&leaves[..split]) {
            for r in bracketings(&leaves[split..]) {
                out.push(BracketTree::bracket(l.clone(), r.clone()));
            }
        }
    }
    out
}

fn gcv_sign(p: &[u8], q: &[u8]) -> (usize, i64) {
    let k = p.iter().zip(q).take_while(|(a, b)| a == b).count();
    (k, if p[k] == 0 { 1 } else { -1 })
}

/// `Π_e sgn β(e)` for a fixed vertex-to-leaf assignment, or 0 when `β` is not injective.
fn pairing_through(g: &SymbolGraph, paths: &[(Generator, Vec<u8>)], assign: &[usize]) -> i64 {
    let mut used: Vec<&[u8]> = Vec::with_capacity(g.edge_count());
    let mut sign = 1;
    for &(t, h) in g.edges() {
        let p = &paths[assign[t]].1;
        let q = &paths[assign[h]].1;
        let (k, s) = gcv_sign(p, q);
        let gcv = &p[..k];
        if used.contains(&gcv) {
            return 0;
        }
        used.push(gcv);
        sign *= s;
    }
    sign
}

fn graph_letters(g: &SymbolGraph) -> Result<Vec<Generator>, LieError> {
    g.vertices()
        .iter()
        .map(|v| {
            if v.label().depth() == 0 {
                Ok(v.label().free_letter().clone())
            } else {
                Err(LieError::NotEil(v.id().to_string()))
            }
        })
        .collect()
}

/// `⟨G, T⟩` when every label occurs exactly once in both.
pub fn configuration_pairing(g: &SymbolGraph, t: &BracketTree) -> Result<i64, LieError> {
    let labels = graph_letters(g)?;
    let paths = t.leaf_paths();
    let mut sorted = labels.clone();
    sorted.sort();
    let mut leaves: Vec<Generator> = paths.iter().map(|(l, _)| l.clone()).collect();
    leaves.sort();
    if sorted != leaves || sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(LieError::LabelMismatch);
    }
    let assign: Vec<usize> = labels
        .iter()
        .map(|l| paths.iter().position(|(x, _)| x == l).expect("same labels"))
        .collect();
    Ok(pairing_through(g, &paths, &assign))
}

/// `⟨G, T⟩` summed over every label-preserving bijection of vertices with
/// leaves; 0 when the multidegrees differ.
pub fn pair_graph_tree(g: &SymbolGraph, t: &BracketTree) -> Result<i64, LieError> {
    let labels = graph_letters(g)?;
    let paths = t.leaf_paths();
    if labels.len() != paths.len() {
        return Ok(0);
    }
    let mut a = labels.clone();
    a.sort();
    let mut b: Vec<Generator> = paths.iter().map(|(l, _)| l.clone()).collect();
    b.sort();
    if a != b {
        return Ok(0);
    }
    let mut total = 0;
    let mut assign = vec![usize::MAX; labels.len()];
    let mut taken = vec![false; paths.len()];
    fn go(
        i: usize,
        g: &SymbolGraph,
        labels: &[Generator],
        paths: &[(Generator, Vec<u8>)],
        assign: &mut [usize],
        taken: &mut [bool],
        total: &mut i64,
    ) {
        if i == labels.len() {
            *total += pairing_through(g, paths, assign);
            return;
        }
        for j in 0..paths.len() {
            if taken[j] || paths[j].0 != labels[i] {
                continue;
            }
            taken[j] = true;
            assign[i] = j;
            go(i + 1, g, labels, paths, assign, taken, total);
            taken[j] = false;
        }
    }
    go(0, g, &labels, &paths, &mut assign, &mut taken, &mut total);
    Ok(total)
}

/// Bilinear extension of [`pair_graph_tree`].
pub fn extended_pairing(s: &GraphSum, e: &LieElement) -> Result<BigRational, LieError> {
    let mut total = BigRational::zero();
    for (g, c) in s.iter() {
        for (t, d) in e.iter() {
            let p = pair_graph_tree(g, t)?;
            if p != 0 {
                total += c * d * BigRational::from_integer(p.into());
            }
        }
    }
    Ok(total)
}

/// `λ`: commutators become brackets, products become sums, powers become multiples.
pub fn lie_image_of_bracket_word(expr: &WordExpr) -> Result<LieElement, LieError> {
    Ok(match expr {
        WordExpr::Gen(g) => LieElement::single(BracketTree::Leaf(g.clone())),
        WordExpr::Commutator(u, v) => {
            let (u, v) = (lie_image_of_bracket_word(u)?, lie_image_of_bracket_word(v)?);
            u.bracket(&v)
        }
        WordExpr::Product(factors) => {
            let mut out = LieElement::zero();
            for f in factors {
                out.add(&lie_image_of_bracket_word(f)?, &BigRational::one())?;
            }
            out
        }
        WordExpr::Power(base, n) => {
            lie_image_of_bracket_word(base)?.scale(&BigRational::from_integer((*n).into()))
        }
    })
}

/// `a₁ → a₂ → ⋯ → aₖ`, the graph dual to `∂°_{a₁…aₖ}`.
pub fn chain_graph(c: &[Generator]) -> SymbolGraph {
    SymbolGraph::from_letters(c, (1..c.len()).map(|i| (i - 1, i)).collect()).expect("a path is a tree")
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Solve for Lyndon-tree coefficients from the chain functionals, one multidegree at a time.
fn solve_block(
    md: &BTreeMap<Generator, usize>,
    functional: impl Fn(&[Generator]) -> Result<BigRational, LieError>,
    out: &mut LieElement,
) -> Result<(), LieError> {
    let words = lyndon_words_of_multidegree(md);
    let alphabet = alphabet_of(md);
    let trees: Vec<BracketTree> = words.iter().map(|w| standard_bracketing(w, &alphabet)).collect();
    let mut m = Matrix::zeros(words.len(), trees.len());
    let mut rhs = Vec::with_capacity(words.len());
    for (r, c) in words.iter().enumerate() {
        let chain = chain_graph(c);
        for (j, t) in trees.iter().enumerate() {
            m.set(r, j, int(pair_graph_tree(&chain, t)?));
        }
        rhs.push(functional(c)?);
    }
    if m.rank() != trees.len() {
        return Err(LieError::SingularMatrix);
    }
    let x = m.solve(&rhs).ok_or(LieError::SingularMatrix)?;
    for (t, c) in trees.into_iter().zip(x) {
        out.add_term(t, c)?;
    }
    Ok(())
}

/// Rewrite `e` in the Lyndon basis (letters ordered by name within each multidegree).
pub fn lyndon_coordinates(e: &LieElement) -> Result<LieElement, LieError> {
    let mut blocks: BTreeMap<BTreeMap<Generator, usize>, LieElement> = BTreeMap::new();
    for (t, c) in e.iter() {
        blocks
            .entry(t.multidegree())
            .or_default()
            .add_term(t.clone(), c.clone())?;
    }
    let mut out = LieElement::zero();
    for (md, part) in &blocks {
        solve_block(
            md,
            |c| extended_pairing(&GraphSum::single(&chain_graph(c)), &part.clone()),
            &mut out,
        )?;
    }
    Ok(out)
}

fn sequence_name(c: &[Generator]) -> String {
    c.iter().map(Generator::name).collect::<Vec<_>>().join(",")
}

/// All multidegrees of total weight `k` over `alphabet`.
pub fn multidegrees(k: usize, alphabet: &Alphabet) -> Vec<BTreeMap<Generator, usize>> {
    fn go(
        i: usize,
        left: usize,
        gens: &[Generator],
        cur: &mut Vec<usize>,
        out: &mut Vec<BTreeMap<Generator, usize>>,
    ) {
        if i + 1 == gens.len() {
            cur.push(left);
            out.push(
                gens.iter()
                    .zip(cur.iter())
                    .filter(|(_, &n)| n > 0)
                    .map(|(g, &n)| (g.clone(), n))
                    .collect(),
            );
            cur.pop();
            return;
        }
        for n in (0..=left).rev() {
            cur.push(n);
            go(i + 1, left - n, gens, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if !alphabet.is_empty() {
        go(0, k, alphabet.gens(), &mut Vec::new(), &mut out);
    }
    out
}

/// `λ(w)` in the Lyndon basis of weight `k`, from Fox functionals.
/// Fails with `NotInGamma` when a lower-weight Lyndon functional is nonzero.
pub fn lie_coordinates(w: &Word, k: usize, alphabet: &Alphabet) -> Result<LieElement, LieError> {
    for j in 1..k {
        for c in lyndon_words(j, alphabet) {
            let value = fox::fox_eval(w, &c);
            if value != 0 {
                return Err(LieError::NotInGamma {
                    sequence: sequence_name(&c),
                    value,
                });
            }
        }
    }
    let mut out = LieElement::zero();
    for md in multidegrees(k, alphabet) {
        solve_block(&md, |c| Ok(int(fox::fox_eval(w, c))), &mut out)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eil::parse_eil_graph;

    fn t(s: &str) -> BracketTree {
        parse_tree(s).unwrap()
    }

    fn g(s: &str) -> SymbolGraph {
        parse_eil_graph(s).unwrap()
    }

    #[test]
    fn lie_parsing() {
        assert_eq!(parse_lie("[a,[a,b]]").unwrap().weight(), Some(3));
        let e = parse_lie("2*[a,b] - [b,a]").unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.coefficient(&t("[b,a]")), int(-1));
        assert!(matches!(
            parse_lie("[a,b] + [a,[a,b]]"),
            Err(LieError::MixedGrading { .. })
        ));
        let printed = e.to_string();
        assert_eq!(parse_lie(&printed).unwrap(), e);
        assert_eq!(parse_lie("1/2*[a,b]").unwrap().coefficient(&t("[a,b]")), BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn lyndon_examples() {
        let ab = Alphabet::from_names(&["a", "b"]);
        let five = lyndon_basis(5, &ab);
        assert_eq!(five.len(), 6);
        let md32: Vec<String> = five
            .iter()
            .filter(|x| x.leaves().iter().filter(|l| l.name() == "a").count() == 3)
            .map(|x| x.to_string())
            .collect();
        assert_eq!(md32, vec!["[a,[a,[[a,b],b]]]", "[[a,[a,b]],[a,b]]"]);
        assert_eq!(lyndon_basis(1, &ab), vec![t("a"), t("b")]);
        assert_eq!(lyndon_basis(2, &ab), vec![t("[a,b]")]);
        let abc = Alphabet::from_names(&["a", "b", "c"]);
        assert_eq!(lyndon_basis(3, &abc).len(), 8);
        assert_eq!(lyndon_basis(4, &abc).len(), 18);
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(configuration_pairing(&g("{v1:a, v2:b ; v1->v2}"), &t("[a,b]")), Ok(1));
        assert_eq!(configuration_pairing(&g("{v1:a, v2:b ; v1->v2}"), &t("[b,a]")), Ok(-1));
        assert_eq!(
            configuration_pairing(&g("{v1:a, v2:b, v3:c ; v1->v2, v1->v3}"), &t("[a,[b,c]]")),
            Ok(0)
        );
        assert_eq!(
            configuration_pairing(&g("{v1:a, v2:b ; v1->v2}"), &t("[a,c]")),
            Err(LieError::LabelMismatch)
        );
        let star = g("{v1:a, v2:a, v3:a, v4:a, v5:b ; v1->v5, v2->v5, v3->v5, v4->v5}");
        assert_eq!(pair_graph_tree(&star, &t("[a,[a,[a,[a,b]]]]")), Ok(24));
        assert_eq!(pair_graph_tree(&star, &t("[a,b]")), Ok(0));
    }

    #[test]
    fn lie_images() {
        let img = |s: &str| lie_image_of_bracket_word(&crate::words::parse_word_expr(s).unwrap()).unwrap();
        assert_eq!(img("[a,[a,b]]"), LieElement::single(t("[a,[a,b]]")));
        assert_eq!(img("[a,b][a,b]").coefficient(&t("[a,b]")), int(2));
        let cancel = img("[a,b][b,a]");
        assert!(lyndon_coordinates(&cancel).unwrap().is_empty());
        assert!(matches!(
            lie_image_of_bracket_word(&crate::words::parse_word_expr("[a,b] a").unwrap()),
            Err(LieError::MixedGrading { .. })
        ));
    }

    #[test]
    fn coordinates() {
        let ab = Alphabet::from_names(&["a", "b"]);
        let w = crate::words::parse_word_expr("a b a^-1 b^-1").unwrap().to_word();
        assert_eq!(lie_coordinates(&w, 2, &ab).unwrap(), LieElement::single(t("[a,b]")));
        assert!(lie_coordinates(&Word::empty(), 3, &ab).unwrap().is_empty());
        assert!(matches!(
            lie_coordinates(&w, 3, &ab),
            Err(LieError::NotInGamma { .. })
        ));
        let e = parse_lie("[b,a]").unwrap();
        assert_eq!(lyndon_coordinates(&e).unwrap(), parse_lie("-1*[a,b]").unwrap());
    }
}
