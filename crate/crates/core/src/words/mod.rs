//! Free-group words over named generators.
//!
//! Words are kept exactly as written: multiplication is concatenation and no
//! cancellation happens unless [`Word::free_reduce`] is called. Every invariant
//! computed elsewhere in the crate is independent of the representative.
//! Positions are 1-based throughout the public API.

mod gamma;
mod parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use gamma::{random_gamma_element, GammaSampler};
pub use parse::{parse_word, parse_word_expr, WordExpr};

use crate::parse::ParseError;

/// A named free generator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(Arc<str>);

impl Generator {
    /// Panics when `name` is not an identifier; use [`Generator::try_new`] for untrusted input.
    pub fn new(name: &str) -> Self {
        Self::try_new(name).unwrap_or_else(|| panic!("invalid generator name {name:?}"))
    }

    pub fn try_new(name: &str) -> Option<Self> {
        let mut chars = name.chars();
        let head_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic());
        if head_ok && chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
            Some(Generator(Arc::from(name)))
        } else {
            None
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A generator or its inverse.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Generator,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: Generator, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub fn pos(gen: Generator) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn neg(gen: Generator) -> Self {
        Letter { gen, inverse: true }
    }

    /// Intrinsic sign: +1 for a generator, -1 for an inverse.
    pub fn sign(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    /// `sign^a(x)`: the intrinsic sign if this letter is `a^{±1}`, else 0.
    pub fn sign_wrt(&self, a: &Generator) -> i64 {
        if &self.gen == a {
            self.sign()
        } else {
            0
        }
    }

    pub fn inverted(&self) -> Self {
        Letter {
            gen: self.gen.clone(),
            inverse: !self.inverse,
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.gen)
        } else {
            write!(f, "{}", self.gen)
        }
    }
}

/// A finite sequence of letters. The empty word is the identity.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn single(letter: Letter) -> Self {
        Word(vec![letter])
    }

    pub fn generator(gen: &Generator) -> Self {
        Word(vec![Letter::pos(gen.clone())])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// The letter at 1-based position `pos`.
    pub fn letter(&self, pos: usize) -> Option<&Letter> {
        pos.checked_sub(1).and_then(|i| self.0.get(i))
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Reversed sequence with every intrinsic sign flipped.
    pub fn invert(&self) -> Word {
        Word(self.0.iter().rev().map(Letter::inverted).collect())
    }

    /// `[u, v] = u v u^-1 v^-1`, unreduced.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.multiply(v).multiply(&u.invert()).multiply(&v.invert())
    }

    pub fn conjugate_by(&self, c: &Word) -> Word {
        c.multiply(self).multiply(&c.invert())
    }

    /// `self^n` for any integer `n`.
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.0);
        }
        Word(letters)
    }

    /// The unique freely reduced representative.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.len());
        for l in &self.0 {
            match stack.last() {
                Some(top) if top.gen == l.gen && top.inverse != l.inverse => {
                    stack.pop();
                }
                _ => stack.push(l.clone()),
            }
        }
        Word(stack)
    }

    pub fn is_reduced(&self) -> bool {
        self.0
            .windows(2)
            .all(|w| !(w[0].gen == w[1].gen && w[0].inverse != w[1].inverse))
    }

    /// Replace each generator by its image under `map`.
    pub fn relabel(&self, map: &GeneratorMap) -> Result<Word, WordError> {
        self.0
            .iter()
            .map(|l| {
                map.image(&l.gen)
                    .map(|g| Letter::new(g.clone(), l.inverse))
                    .ok_or_else(|| WordError::UnknownGenerator(l.gen.name().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    /// Insert `x x^-1` (or `x^-1 x`) before 0-based index `at`.
    pub fn insert_cancelling_pair(&self, at: usize, letter: &Letter) -> Word {
        let mut letters = self.0.clone();
        let at = at.min(letters.len());
        letters.insert(at, letter.inverted());
        letters.insert(at, letter.clone());
        Word(letters)
    }

    /// Generators that occur, in order of first appearance.
    pub fn generators(&self) -> Vec<Generator> {
        let mut seen = BTreeSet::new();
        self.0
            .iter()
            .filter(|l| seen.insert(l.gen.clone()))
            .map(|l| l.gen.clone())
            .collect()
    }

    /// Exponent sum of `gen` (its image in the abelianization).
    pub fn exponent_sum(&self, gen: &Generator) -> i64 {
        self.0.iter().map(|l| l.sign_wrt(gen)).sum()
    }

    /// Letters written without separators (`aab^-1`), as in hand calculations.
    /// Falls back to space separation when a generator name is longer than one character.
    pub fn compact(&self) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        let sep = if self.0.iter().any(|l| l.gen.name().len() > 1) {
            " "
        } else {
            ""
        };
        self.0
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Space separated; re-parses with [`parse_word`]. The empty word prints as the empty string.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// An ordered generating set. The order matters for Lyndon words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet(Vec<Generator>);

impl Alphabet {
    /// Duplicates are dropped, keeping the first occurrence.
    pub fn new(gens: impl IntoIterator<Item = Generator>) -> Self {
        let mut seen = BTreeSet::new();
        Alphabet(gens.into_iter().filter(|g| seen.insert(g.clone())).collect())
    }

    pub fn from_names(names: &[&str]) -> Self {
        Self::new(names.iter().map(|n| Generator::new(n)))
    }

    pub fn gens(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, g: &Generator) -> bool {
        self.0.contains(g)
    }

    pub fn index_of(&self, g: &Generator) -> Option<usize> {
        self.0.iter().position(|x| x == g)
    }
}

/// A map of generating sets `f : S -> T`, inducing homomorphisms on words and symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneratorMap(BTreeMap<Generator, Generator>);

impl GeneratorMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(&str, &str)]) -> Self {
        GeneratorMap(
            pairs
                .iter()
                .map(|(s, t)| (Generator::new(s), Generator::new(t)))
                .collect(),
        )
    }

    pub fn identity(gens: &[Generator]) -> Self {
        GeneratorMap(gens.iter().map(|g| (g.clone(), g.clone())).collect())
    }

    pub fn insert(&mut self, from: Generator, to: Generator) {
        self.0.insert(from, to);
    }

    pub fn image(&self, g: &Generator) -> Option<&Generator> {
        self.0.get(g)
    }

    pub fn source(&self) -> impl Iterator<Item = &Generator> {
        self.0.keys()
    }

    /// Source generators sent to `t`.
    pub fn fiber(&self, t: &Generator) -> Vec<Generator> {
        self.0
            .iter()
            .filter(|(_, v)| *v == t)
            .map(|(k, _)| k.clone())
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Generator, &Generator)> {
        self.0.iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}
