//! Grammar:
//!
//! ```text
//! word := term*
//! term := atom ('^' int)?
//! atom := ident | '[' word ',' word ']' | '(' word ')'
//! ```

use super::{Alphabet, Generator, Letter, Word, WordError};
use crate::parse::{Cursor, ParseError};

/// Parsed word expression, keeping commutator structure (needed for Lie images).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordExpr {
    Gen(Generator),
    Commutator(Box<WordExpr>, Box<WordExpr>),
    Product(Vec<WordExpr>),
    Power(Box<WordExpr>, i64),
}

impl WordExpr {
    /// Expand commutators and exponents. No free reduction.
    pub fn to_word(&self) -> Word {
        match self {
            WordExpr::Gen(g) => Word::single(Letter::pos(g.clone())),
            WordExpr::Commutator(u, v) => Word::commutator(&u.to_word(), &v.to_word()),
            WordExpr::Product(factors) => {
                let mut letters = Vec::new();
                for f in factors {
                    letters.extend_from_slice(f.to_word().letters());
                }
                Word::from_letters(letters)
            }
            WordExpr::Power(base, n) => base.to_word().pow(*n),
        }
    }

    pub fn generators(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        self.collect_generators(&mut out);
        out
    }

    fn collect_generators(&self, out: &mut Vec<Generator>) {
        match self {
            WordExpr::Gen(g) => {
                if !out.contains(g) {
                    out.push(g.clone())
                }
            }
            WordExpr::Commutator(u, v) => {
                u.collect_generators(out);
                v.collect_generators(out);
            }
            WordExpr::Product(fs) => fs.iter().for_each(|f| f.collect_generators(out)),
            WordExpr::Power(b, _) => b.collect_generators(out),
        }
    }
}

pub fn parse_word_expr(text: &str) -> Result<WordExpr, ParseError> {
    let mut cur = Cursor::new(text);
    let expr = word(&mut cur)?;
    cur.expect_end()?;
    Ok(expr)
}

/// Parse and expand a word, rejecting generators outside `alphabet`.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word, WordError> {
    let expr = parse_word_expr(text)?;
    if let Some(g) = expr.generators().into_iter().find(|g| !alphabet.contains(g)) {
        return Err(WordError::UnknownGenerator(g.name().to_string()));
    }
    Ok(expr.to_word())
}

fn word(cur: &mut Cursor<'_>) -> Result<WordExpr, ParseError> {
    let mut terms = Vec::new();
    while let Some(c) = cur.peek() {
        if c.is_ascii_alphabetic() || c == '[' || c == '(' {
            terms.push(term(cur)?);
        } else {
            break;
        }
    }
    Ok(if terms.len() == 1 {
        terms.pop().unwrap()
    } else {
        WordExpr::Product(terms)
    })
}

fn term(cur: &mut Cursor<'_>) -> Result<WordExpr, ParseError> {
    let base = atom(cur)?;
    if cur.eat('^') {
        let n = cur.int()?;
        Ok(WordExpr::Power(Box::new(base), n))
    } else {
        Ok(base)
    }
}

fn atom(cur: &mut Cursor<'_>) -> Result<WordExpr, ParseError> {
    if cur.eat('[') {
        let u = word(cur)?;
        cur.expect(',')?;
        let v = word(cur)?;
        cur.expect(']')?;
        Ok(WordExpr::Commutator(Box::new(u), Box::new(v)))
    } else if cur.eat('(') {
        let inner = word(cur)?;
        cur.expect(')')?;
        Ok(inner)
    } else {
        let name = cur.ident().map_err(|e| ParseError {
            expected: "identifier, '[' or '('".into(),
            ..e
        })?;
        Ok(WordExpr::Gen(Generator::new(name)))
    }
}
