//! Symbols: rooted trees of generators written as parenthesized expressions.
//!
//! `(σ₁)…(σₖ)ℓ` has free letter `ℓ` and children `σ₁ … σₖ`. A symbol is valid
//! when no child shares its parent's free letter. Children are unordered; a
//! [`Symbol`] is stored in canonical form, so `==` is equivalence.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::parse::{Cursor, ParseError};
use crate::words::{Generator, GeneratorMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid symbol {0}: a child repeats its parent's free letter")]
    Invalid(String),
    #[error("generator `{0}` is not in the map's source")]
    Unmapped(String),
    #[error("the Leibniz relation needs at least two symbols")]
    TooFewTerms,
}

#[derive(Clone)]
pub struct Symbol {
    free: Generator,
    children: Vec<Symbol>,
    key: Arc<str>,
}

impl PartialEq for Symbol {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for Symbol {}

impl std::hash::Hash for Symbol {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key.hash(state)
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key.cmp(&other.key)
    }
}

impl Symbol {
    pub fn letter(g: Generator) -> Self {
        let key = Arc::from(g.name());
        Symbol {
            free: g,
            children: Vec::new(),
            key,
        }
    }

    pub fn new(free: Generator, children: Vec<Symbol>) -> Result<Self, SymbolError> {
        if let Some(bad) = children.iter().find(|c| c.free == free) {
            return Err(SymbolError::Invalid(format!("({bad}){free}")));
        }
        Ok(Self::assemble(free, children))
    }

    /// Build without the validity check (pre-symbols).
    fn assemble(free: Generator, mut children: Vec<Symbol>) -> Self {
        children.sort();
        let key = render(&free, &children);
        Symbol {
            free,
            children,
            key: Arc::from(key),
        }
    }

    /// `(child)self`: attach `child` at the top level.
    pub fn with_child(&self, child: Symbol) -> Result<Self, SymbolError> {
        let mut children = self.children.clone();
        children.push(child);
        Symbol::new(self.free.clone(), children)
    }

    pub fn free_letter(&self) -> &Generator {
        &self.free
    }

    pub fn children(&self) -> &[Symbol] {
        &self.children
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(Symbol::node_count).sum::<usize>()
    }

    /// Number of parenthesis pairs; one less than the number of letters.
    pub fn depth(&self) -> usize {
        self.node_count() - 1
    }

    /// All node labels, with multiplicity, in pre-order.
    pub fn letters(&self) -> Vec<Generator> {
        let mut out = vec![self.free.clone()];
        for c in &self.children {
            out.extend(c.letters());
        }
        out
    }

    pub fn multidegree(&self) -> BTreeMap<Generator, usize> {
        let mut m = BTreeMap::new();
        for g in self.letters() {
            *m.entry(g).or_insert(0) += 1;
        }
        m
    }

    pub fn is_valid(&self) -> bool {
        self.children
            .iter()
            .all(|c| c.free != self.free && c.is_valid())
    }

    pub fn equivalent(&self, other: &Symbol) -> bool {
        self == other
    }

    pub fn as_str(&self) -> &str {
        &self.key
    }

    /// Relabel every node; fails when the image is not a valid symbol.
    pub fn relabel(&self, map: &GeneratorMap) -> Result<Symbol, SymbolError> {
        let free = map
            .image(&self.free)
            .ok_or_else(|| SymbolError::Unmapped(self.free.name().to_string()))?
            .clone();
        let children = self
            .children
            .iter()
            .map(|c| c.relabel(map))
            .collect::<Result<Vec<_>, _>>()?;
        Symbol::new(free, children)
    }

    /// Every labelling of this tree by source generators of `map` lying over the
    /// current labels, keeping the valid ones. Labellings are listed per tree
    /// position, so two may coincide as symbols.
    pub fn preimages(&self, map: &GeneratorMap) -> Vec<Symbol> {
        let frees = map.fiber(&self.free);
        let mut partial: Vec<Vec<Symbol>> = vec![Vec::new()];
        for child in &self.children {
            let options = child.preimages(map);
            partial = partial
                .into_iter()
                .flat_map(|acc| {
                    options.iter().map(move |o| {
                        let mut next = acc.clone();
                        next.push(o.clone());
                        next
                    })
                })
                .collect();
        }
        let mut out = Vec::new();
        for f in &frees {
            for kids in &partial {
                if let Ok(s) = Symbol::new(f.clone(), kids.clone()) {
                    out.push(s);
                }
            }
        }
        out
    }
}

/// Sort the top-level items by their rendering without outer parentheses;
/// the free letter takes its place in that order. Gives `((a)b)a`, `a(b)`, `(a(b))c`.
fn render(free: &Generator, children: &[Symbol]) -> String {
    let mut items: Vec<(&str, bool)> = children.iter().map(|c| (c.as_str(), true)).collect();
    items.push((free.name(), false));
    items.sort();
    let mut s = String::new();
    for (text, paren) in items {
        if paren {
            s.push('(');
            s.push_str(text);
            s.push(')');
        } else {
            s.push_str(text);
        }
    }
    s
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Symbol({})", self.key)
    }
}

impl std::str::FromStr for Symbol {
    type Err = SymbolError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_symbol(s)
    }
}

/// `symbol := item+` with exactly one bare identifier among the items;
/// every other item is `'(' symbol ')'`.
pub fn parse_symbol(text: &str) -> Result<Symbol, SymbolError> {
    let mut cur = Cursor::new(text);
    let pre = pre_symbol(&mut cur)?;
    cur.expect_end()?;
    pre.validate()
}

pub(crate) struct PreSymbol {
    free: Generator,
    children: Vec<PreSymbol>,
}

impl PreSymbol {
    pub(crate) fn validate(self) -> Result<Symbol, SymbolError> {
        let children = self
            .children
            .into_iter()
            .map(PreSymbol::validate)
            .collect::<Result<Vec<_>, _>>()?;
        Symbol::new(self.free, children)
    }
}

pub(crate) fn pre_symbol(cur: &mut Cursor<'_>) -> Result<PreSymbol, ParseError> {
    let start = cur.pos();
    let mut free = None;
    let mut children = Vec::new();
    loop {
        match cur.peek() {
            Some('(') => {
                cur.eat('(');
                children.push(pre_symbol(cur)?);
                cur.expect(')')?;
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let at = cur.pos();
                let name = cur.ident()?;
                if free.is_some() {
                    return Err(ParseError {
                        position: at,
                        expected: "'(' (only one free letter per level)".into(),
                    });
                }
                free = Some(Generator::new(name));
            }
            _ => break,
        }
    }
    match free {
        Some(free) => Ok(PreSymbol { free, children }),
        None => Err(ParseError {
            position: start,
            expected: "a free letter".into(),
        }),
    }
}

/// The `k` terms `σ₁(σ₂)…(σₖ) + (σ₁)σ₂…(σₖ) + … + (σ₁)…σₖ`, each with coefficient 1.
pub fn leibniz_terms(symbols: &[Symbol]) -> Result<SymbolSum, SymbolError> {
    if symbols.len() < 2 {
        return Err(SymbolError::TooFewTerms);
    }
    let mut sum = SymbolSum::zero();
    for (i, head) in symbols.iter().enumerate() {
        let mut children = head.children.clone();
        children.extend(
            symbols
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, s)| s.clone()),
        );
        let term = Symbol::new(head.free.clone(), children)?;
        sum.add_term(term, BigRational::one());
    }
    Ok(sum)
}

/// Exact rational combination of symbols. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymbolSum {
    terms: BTreeMap<Symbol, BigRational>,
}

impl SymbolSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(s: Symbol) -> Self {
        let mut out = Self::zero();
        out.add_term(s, BigRational::one());
        out
    }

    pub fn add_term(&mut self, s: Symbol, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(s.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn add_sum(&mut self, other: &SymbolSum, scale: &BigRational) {
        for (s, c) in &other.terms {
            self.add_term(s.clone(), c * scale);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, s: &Symbol) -> BigRational {
        self.terms.get(s).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Symbol, &BigRational)> {
        self.terms.iter()
    }
}

/// `c*"symbol"` terms joined by ` + `, in canonical symbol order; `0` when empty.
impl fmt::Display for SymbolSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*\"{s}\"")?;
        }
        Ok(())
    }
}
