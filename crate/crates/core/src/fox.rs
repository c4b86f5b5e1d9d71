//! The integral group ring `ℤ[F]` and Fox free derivatives.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use crate::parse::{Cursor, ParseError};
use crate::words::{Generator, Letter, Word};

/// Integer combination of freely reduced words; zero coefficients are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(&Word::empty())
    }

    pub fn word(w: &Word) -> Self {
        let mut x = Self::zero();
        x.add_term(w, 1);
        x
    }

    pub fn add_term(&mut self, w: &Word, c: i64) {
        if c == 0 {
            return;
        }
        let key = w.free_reduce();
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn coefficient(&self, w: &Word) -> i64 {
        self.terms.get(&w.free_reduce()).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `α`: the sum of the coefficients.
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;

    fn add(self, other: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add_term(w, c);
        }
        out
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;

    fn mul(self, other: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (u, c) in self.iter() {
            for (v, d) in other.iter() {
                out.add_term(&u.multiply(v), c * d);
            }
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;

    fn neg(self) -> GroupRingElement {
        GroupRingElement {
            terms: self.terms.iter().map(|(w, &c)| (w.clone(), -c)).collect(),
        }
    }
}

/// Terms in shortlex order: `1 + a - 2*ab^-1`; a unit coefficient is omitted.
impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Word, i64)> = self.iter().collect();
        terms.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
        for (i, (w, c)) in terms.into_iter().enumerate() {
            let magnitude = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            if magnitude != 1 {
                write!(f, "{magnitude}*")?;
            }
            f.write_str(&w.compact())?;
        }
        Ok(())
    }
}

/// Parse the compact notation printed by [`GroupRingElement`]'s `Display`:
/// single-letter generators written without separators, `^-1` for inverses,
/// `1` for the empty word, an optional integer coefficient (with or without `*`).
pub fn parse_group_ring(text: &str) -> Result<GroupRingElement, ParseError> {
    let mut cur = Cursor::new(text);
    let mut out = GroupRingElement::zero();
    let mut sign = if cur.eat('-') {
        -1
    } else {
        cur.eat('+');
        1
    };
    loop {
        let mut coefficient = 1;
        if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
            let start = cur.pos();
            let n = cur.int()?;
            if n < 0 {
                return Err(ParseError { position: start, expected: "unsigned coefficient".into() });
            }
            coefficient = n;
            let starred = cur.eat('*');
            let letter_follows = matches!(cur.peek(), Some(c) if c.is_ascii_alphabetic());
            if !starred && !letter_follows {
                out.add_term(&Word::empty(), sign * n);
                if !next_sign(&mut cur, &mut sign) {
                    break;
                }
                continue;
            }
        }
        cur.skip_ws();
        let w = if cur.peek_char() == Some('1') {
            cur.advance(1);
            Word::empty()
        } else {
            let mut letters = Vec::new();
            while let Some(c) = cur.peek_char() {
                if !c.is_ascii_alphabetic() {
                    break;
                }
                cur.advance(c.len_utf8());
                let inverse = cur.eat_str("^-1");
                letters.push(Letter::new(Generator::new(&c.to_string()), inverse));
            }
            if letters.is_empty() {
                return Err(cur.error("a word or 1"));
            }
            Word::from_letters(letters)
        };
        out.add_term(&w, sign * coefficient);
        if !next_sign(&mut cur, &mut sign) {
            break;
        }
    }
    cur.expect_end()?;
    Ok(out)
}

fn next_sign(cur: &mut Cursor<'_>, sign: &mut i64) -> bool {
    if cur.eat('+') {
        *sign = 1;
        true
    } else if cur.eat('-') {
        *sign = -1;
        true
    } else {
        false
    }
}

/// `∂_g`, extended additively: on a word, `Σ_j x₁…x_{j−1}·∂(x_j)` with
/// `∂(g) = 1` and `∂(g⁻¹) = −g⁻¹`.
pub fn fox_derivative(x: &GroupRingElement, g: &Generator) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    for (w, c) in x.iter() {
        let letters = w.letters();
        for (j, l) in letters.iter().enumerate() {
            if l.gen != *g {
                continue;
            }
            if l.inverse {
                out.add_term(&Word::from_letters(letters[..=j].to_vec()), -c);
            } else {
                out.add_term(&Word::from_letters(letters[..j].to_vec()), c);
            }
        }
    }
    out
}

/// `∂_{a₁,…,aₖ}(w) = ∂_{a₁}(∂_{a₂,…,aₖ}(w))`.
pub fn iterated_fox(w: &Word, c: &[Generator]) -> GroupRingElement {
    let mut x = GroupRingElement::word(w);
    for g in c.iter().rev() {
        x = fox_derivative(&x, g);
    }
    x
}

/// `∂°_c(w) = α(∂_c(w))`.
pub fn fox_eval(w: &Word, c: &[Generator]) -> i64 {
    iterated_fox(w, c).augmentation()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word_expr;

    fn w(s: &str) -> Word {
        parse_word_expr(s).unwrap().to_word()
    }

    fn gens(s: &str) -> Vec<Generator> {
        s.split(',').map(Generator::new).collect()
    }

    #[test]
    fn augmentation_examples() {
        let mut x = GroupRingElement::zero();
        x.add_term(&w("a a b"), 2);
        x.add_term(&w("c"), 1);
        assert_eq!(x.augmentation(), 3);
        assert_eq!(GroupRingElement::zero().augmentation(), 0);
        let mut y = GroupRingElement::one();
        y.add_term(&w("a"), -1);
        assert_eq!(y.augmentation(), 0);
    }

    #[test]
    fn basic_derivatives() {
        assert_eq!(iterated_fox(&w("a"), &gens("a")), GroupRingElement::one());
        let mut minus_inv = GroupRingElement::zero();
        minus_inv.add_term(&w("a^-1"), -1);
        assert_eq!(iterated_fox(&w("a^-1"), &gens("a")), minus_inv);
        assert!(iterated_fox(&Word::empty(), &gens("a,b,a")).is_zero());
        assert_eq!(fox_eval(&w("b"), &gens("a")), 0);
        assert_eq!(fox_eval(&w("a b a^-1 b^-1"), &gens("a,b")), 1);
    }

    #[test]
    fn worked_derivatives() {
        let word = w("[a a, [b, a c]]");
        assert_eq!(
            iterated_fox(&word, &gens("a")).to_string(),
            "1 + a + aab - aabacb^-1c^-1a^-1 - aabacb^-1c^-1a^-1a^-1 - aabacb^-1c^-1a^-1a^-1cbc^-1a^-1"
        );
        assert_eq!(
            iterated_fox(&word, &gens("b,a")).to_string(),
            "-2*aa + 3*aabacb^-1 - aabacb^-1c^-1a^-1a^-1c"
        );
        assert_eq!(
            iterated_fox(&word, &gens("a,b,a")).to_string(),
            "2*aab + aabacb^-1c^-1a^-1 + aabacb^-1c^-1a^-1a^-1"
        );
        assert_eq!(fox_eval(&word, &gens("a,b,a")), 4);
    }

    #[test]
    fn compact_parsing() {
        let x = parse_group_ring("-2aa+3aabacb^-1-aabacb^-1c^-1a^-1a^-1c").unwrap();
        assert_eq!(x.coefficient(&w("a a")), -2);
        assert_eq!(x.coefficient(&w("a a b a c b^-1")), 3);
        assert_eq!(x.len(), 3);
        let y = parse_group_ring("1 + a - 2*ab^-1").unwrap();
        assert_eq!(y.coefficient(&Word::empty()), 1);
        assert_eq!(parse_group_ring(&y.to_string()).unwrap(), y);
        assert!(parse_group_ring("2*").is_err());
    }
}
