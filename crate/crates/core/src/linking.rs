//! Lists, coboundings and the letter-linking evaluator `Φ_σ`.
//!
//! A [`List`] is stored as its associated function: one integer multiplicity per
//! position, supported on occurrences of a single generator. Simply equivalent
//! lists are therefore equal.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::symbols::{Symbol, SymbolSum};
use crate::words::{Generator, Word};

/// Token bound for [`enumerate_coboundings`] when none is given.
pub const DEFAULT_MAX_TOKENS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkError {
    #[error("list does not cobound: its count is {0}")]
    NonzeroCount(i64),
    #[error("cobounded and target lists share the generator `{0}`")]
    SameGenerator(String),
    #[error("lists are drawn from different words")]
    DifferentWords,
    #[error("position {position} does not carry the list's generator")]
    NotHomogeneous { position: usize },
    #[error("{tokens} signed occurrences exceed the enumeration bound {bound}")]
    TooLarge { tokens: usize, bound: usize },
}

/// `Φ_σ` is not defined: the list of sub-symbol `at` has nonzero count.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("undefined at {at} (count={count})")]
pub struct Undefined {
    pub at: Symbol,
    pub count: i64,
}

#[derive(Clone, PartialEq, Eq)]
pub struct List<'w> {
    word: &'w Word,
    gen: Generator,
    assoc: Vec<i64>,
}

impl<'w> List<'w> {
    /// `Λ_a`: every occurrence of `a^{±1}` once, with extrinsic sign +1.
    pub fn standard(word: &'w Word, gen: &Generator) -> Self {
        let assoc = word
            .letters()
            .iter()
            .map(|l| i64::from(l.gen == *gen))
            .collect();
        List {
            word,
            gen: gen.clone(),
            assoc,
        }
    }

    /// Build from 1-based position multiplicities.
    pub fn from_assoc(
        word: &'w Word,
        gen: &Generator,
        assoc: &BTreeMap<usize, i64>,
    ) -> Result<Self, LinkError> {
        let mut values = vec![0; word.len()];
        for (&pos, &m) in assoc {
            if m == 0 {
                continue;
            }
            match word.letter(pos) {
                Some(l) if l.gen == *gen => values[pos - 1] = m,
                _ => return Err(LinkError::NotHomogeneous { position: pos }),
            }
        }
        Ok(List {
            word,
            gen: gen.clone(),
            assoc: values,
        })
    }

    /// `Λ_σ(w)`, built recursively from the child lists.
    pub fn from_symbol(sigma: &Symbol, word: &'w Word) -> Result<Self, Undefined> {
        let mut potentials = Vec::with_capacity(sigma.children().len());
        for child in sigma.children() {
            let list = List::from_symbol(child, word)?;
            let pot = list.prefix_potential().map_err(|_| Undefined {
                at: child.clone(),
                count: list.count(),
            })?;
            potentials.push(pot);
        }
        let free = sigma.free_letter();
        let assoc = word
            .letters()
            .iter()
            .enumerate()
            .map(|(i, l)| {
                if l.gen == *free {
                    potentials.iter().map(|p| p.0[i]).product()
                } else {
                    0
                }
            })
            .collect();
        Ok(List {
            word,
            gen: free.clone(),
            assoc,
        })
    }

    pub fn word(&self) -> &'w Word {
        self.word
    }

    pub fn generator(&self) -> &Generator {
        &self.gen
    }

    /// Multiplicity at 1-based `pos`; 0 off the support or past the end.
    pub fn assoc(&self, pos: usize) -> i64 {
        pos.checked_sub(1)
            .and_then(|i| self.assoc.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// Nonzero multiplicities as `(position, value)`.
    pub fn support(&self) -> BTreeMap<usize, i64> {
        self.assoc
            .iter()
            .enumerate()
            .filter(|(_, &m)| m != 0)
            .map(|(i, &m)| (i + 1, m))
            .collect()
    }

    /// Multiplicity times the intrinsic sign at `pos`.
    pub fn total_sign(&self, pos: usize) -> i64 {
        self.word
            .letter(pos)
            .map_or(0, |l| self.assoc(pos) * l.sign_wrt(&self.gen))
    }

    pub fn count(&self) -> i64 {
        (1..=self.assoc.len()).map(|j| self.total_sign(j)).sum()
    }

    /// `g(j) = Σ_{p<j} assoc(p)·sign(x_p)` for `j = 1..=k+1`.
    pub fn prefix_potential(&self) -> Result<Potential, LinkError> {
        let count = self.count();
        if count != 0 {
            return Err(LinkError::NonzeroCount(count));
        }
        let mut acc = 0;
        let mut values = Vec::with_capacity(self.assoc.len() + 1);
        for j in 1..=self.assoc.len() {
            values.push(acc);
            acc += self.total_sign(j);
        }
        values.push(acc);
        Ok(Potential(values))
    }

    /// `d⁻¹(self) ∧ target`.
    pub fn link(&self, target: &List<'w>) -> Result<List<'w>, LinkError> {
        link_many(&[self], target)
    }
}

/// `target ∧ d⁻¹L₁ ∧ … ∧ d⁻¹Lₘ`: intersections with several coboundings at once.
pub fn link_many<'w>(cobounded: &[&List<'w>], target: &List<'w>) -> Result<List<'w>, LinkError> {
    let mut assoc = target.assoc.clone();
    for list in cobounded {
        if list.word != target.word {
            return Err(LinkError::DifferentWords);
        }
        if list.gen == target.gen {
            return Err(LinkError::SameGenerator(list.gen.name().to_string()));
        }
        let pot = list.prefix_potential()?;
        for (a, g) in assoc.iter_mut().zip(&pot.0) {
            *a *= g;
        }
    }
    Ok(List {
        word: target.word,
        gen: target.gen.clone(),
        assoc,
    })
}

impl fmt::Debug for List<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "List({}: {:?})", self.gen, self.support())
    }
}

/// Values of the prefix potential; `at(j)` for `j = 1..=len+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Potential(Vec<i64>);

impl Potential {
    pub fn at(&self, pos: usize) -> i64 {
        self.0[pos - 1]
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }
}

/// A closed range of positions with an orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub start: usize,
    pub end: usize,
    pub orientation: i64,
}

impl Interval {
    pub fn contains(&self, pos: usize) -> bool {
        self.start <= pos && pos <= self.end
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cobounding {
    pub gen: Generator,
    pub intervals: Vec<Interval>,
}

impl Cobounding {
    /// Signed coverage `Σ_{I ∋ pos} orientation(I)`.
    pub fn coverage(&self, pos: usize) -> i64 {
        self.intervals
            .iter()
            .filter(|i| i.contains(pos))
            .map(|i| i.orientation)
            .sum()
    }

    /// Intervals sorted, so coboundings with the same multiset compare equal.
    pub fn interval_multiset(&self) -> Vec<Interval> {
        let mut v = self.intervals.clone();
        v.sort();
        v
    }
}

/// Signed tokens: `|assoc(j)|` copies of the total sign at `j`.
fn tokens(list: &List<'_>) -> (Vec<usize>, Vec<usize>) {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for j in 1..=list.word.len() {
        let t = list.total_sign(j);
        let bucket = if t > 0 { &mut pos } else { &mut neg };
        bucket.extend(std::iter::repeat_n(j, t.unsigned_abs() as usize));
    }
    (pos, neg)
}

fn interval(list: &List<'_>, p: usize, q: usize) -> Interval {
    let (start, end) = (p.min(q), p.max(q));
    Interval {
        start,
        end,
        orientation: list.total_sign(start).signum(),
    }
}

/// Every matching of positive with negative tokens, one cobounding per matching.
/// Tokens at the same position are distinct, so matchings are counted with multiplicity.
pub fn enumerate_coboundings(
    list: &List<'_>,
    max_tokens: usize,
) -> Result<Vec<Cobounding>, LinkError> {
    let count = list.count();
    if count != 0 {
        return Err(LinkError::NonzeroCount(count));
    }
    let (pos, neg) = tokens(list);
    let total = pos.len() + neg.len();
    if total > max_tokens {
        return Err(LinkError::TooLarge {
            tokens: total,
            bound: max_tokens,
        });
    }
    let mut out = Vec::new();
    let mut used = vec![false; neg.len()];
    let mut current = Vec::with_capacity(pos.len());
    matchings(list, &pos, &neg, &mut used, &mut current, &mut out);
    Ok(out)
}

fn matchings(
    list: &List<'_>,
    pos: &[usize],
    neg: &[usize],
    used: &mut [bool],
    current: &mut Vec<Interval>,
    out: &mut Vec<Cobounding>,
) {
    let i = current.len();
    if i == pos.len() {
        out.push(Cobounding {
            gen: list.gen.clone(),
            intervals: current.clone(),
        });
        return;
    }
    for j in 0..neg.len() {
        if used[j] {
            continue;
        }
        used[j] = true;
        current.push(interval(list, pos[i], neg[j]));
        matchings(list, pos, neg, used, current, out);
        current.pop();
        used[j] = false;
    }
}

/// Match tokens left to right like balanced delimiters; the one used in diagrams.
pub fn stack_cobounding(list: &List<'_>) -> Result<Cobounding, LinkError> {
    let count = list.count();
    if count != 0 {
        return Err(LinkError::NonzeroCount(count));
    }
    let mut stack: Vec<(usize, i64)> = Vec::new();
    let mut intervals = Vec::new();
    for j in 1..=list.word.len() {
        let t = list.total_sign(j);
        for _ in 0..t.unsigned_abs() {
            match stack.last() {
                Some(&(p, s)) if s == -t.signum() => {
                    stack.pop();
                    intervals.push(interval(list, p, j));
                }
                _ => stack.push((j, t.signum())),
            }
        }
    }
    Ok(Cobounding {
        gen: list.gen.clone(),
        intervals,
    })
}

/// The literal interval-intersection form of `d⁻¹L ∧ target`.
pub fn link_via_cobounding<'w>(c: &Cobounding, target: &List<'w>) -> Result<List<'w>, LinkError> {
    if c.gen == target.gen {
        return Err(LinkError::SameGenerator(c.gen.name().to_string()));
    }
    let assoc = target
        .assoc
        .iter()
        .enumerate()
        .map(|(i, &m)| if m == 0 { 0 } else { m * c.coverage(i + 1) })
        .collect();
    Ok(List {
        word: target.word,
        gen: target.gen.clone(),
        assoc,
    })
}

pub fn eval_symbol(sigma: &Symbol, word: &Word) -> Result<i64, Undefined> {
    List::from_symbol(sigma, word).map(|l| l.count())
}

/// `Σ cᵢ Φ_{σᵢ}(w)`; undefined as soon as one term is.
pub fn eval_symbol_sum(sum: &SymbolSum, word: &Word) -> Result<BigRational, Undefined> {
    let mut total = BigRational::zero();
    for (s, c) in sum.iter() {
        total += c * BigRational::from_integer(BigInt::from(eval_symbol(s, word)?));
    }
    Ok(total)
}
