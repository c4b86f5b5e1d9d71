//! ASCII pictures of the recursive evaluation: one block per sub-symbol, with
//! multiplicities over the letters and cobounding arrows under them.

use std::fmt;

use crate::linking::{stack_cobounding, Interval, List, Undefined};
use crate::symbols::Symbol;
use crate::words::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub symbol: Symbol,
    /// `(position, multiplicity)` for every occurrence of the free letter.
    pub multiplicities: Vec<(usize, i64)>,
    pub count: i64,
    /// Balanced-delimiter cobounding; empty for the root or a nonzero count.
    pub intervals: Vec<Interval>,
}

#[derive(Clone, Debug)]
pub struct Diagram {
    pub word: Word,
    /// Sub-symbols in evaluation order, children before parents.
    pub levels: Vec<Level>,
    pub value: Result<i64, Undefined>,
}

pub fn diagram(sigma: &Symbol, word: &Word) -> Diagram {
    let mut levels = Vec::new();
    let value = walk(sigma, word, true, &mut levels).map(|l| l.count());
    Diagram {
        word: word.clone(),
        levels,
        value,
    }
}

fn walk<'w>(
    sigma: &Symbol,
    word: &'w Word,
    root: bool,
    levels: &mut Vec<Level>,
) -> Result<List<'w>, Undefined> {
    for child in sigma.children() {
        walk(child, word, false, levels)?;
    }
    let list = List::from_symbol(sigma, word)?;
    let count = list.count();
    let multiplicities = word
        .letters()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.gen == *sigma.free_letter())
        .map(|(i, _)| (i + 1, list.assoc(i + 1)))
        .collect();
    let intervals = if root || count != 0 {
        Vec::new()
    } else {
        stack_cobounding(&list).map(|c| c.intervals).unwrap_or_default()
    };
    levels.push(Level {
        symbol: sigma.clone(),
        multiplicities,
        count,
        intervals,
    });
    if count != 0 && !root {
        return Err(Undefined {
            at: sigma.clone(),
            count,
        });
    }
    Ok(list)
}

/// Greedy rows of pairwise disjoint intervals.
fn arrow_rows(intervals: &[Interval]) -> Vec<Vec<Interval>> {
    let mut sorted = intervals.to_vec();
    sorted.sort_by_key(|i| (i.start, i.end));
    let mut rows: Vec<Vec<Interval>> = Vec::new();
    for iv in sorted {
        match rows
            .iter_mut()
            .find(|r| r.last().is_none_or(|last| last.end < iv.start))
        {
            Some(r) => r.push(iv),
            None => rows.push(vec![iv]),
        }
    }
    rows
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self.word.letters().iter().map(ToString::to_string).collect();
        let mut widths: Vec<usize> = tokens.iter().map(|t| t.chars().count()).collect();
        for level in &self.levels {
            for &(p, m) in &level.multiplicities {
                widths[p - 1] = widths[p - 1].max(m.to_string().len());
            }
        }
        let starts: Vec<usize> = widths
            .iter()
            .scan(0, |acc, w| {
                let s = *acc;
                *acc += w + 1;
                Some(s)
            })
            .collect();
        let total: usize = widths.iter().map(|w| w + 1).sum();
        let cell_line = |cells: &dyn Fn(usize) -> Option<String>| {
            let mut line = String::new();
            for (i, w) in widths.iter().enumerate() {
                let text = cells(i).unwrap_or_default();
                line.push_str(&format!("{text:<w$} "));
            }
            line.trim_end().to_string()
        };
        for level in &self.levels {
            writeln!(f, "{}:", level.symbol)?;
            let indent = |line: String| if line.is_empty() { line } else { format!("  {line}") };
            writeln!(
                f,
                "{}",
                indent(cell_line(&|i| {
                    level
                        .multiplicities
                        .iter()
                        .find(|(p, _)| *p == i + 1)
                        .map(|(_, m)| m.to_string())
                }))
            )?;
            writeln!(f, "{}", indent(cell_line(&|i| Some(tokens[i].clone()))))?;
            for row in arrow_rows(&level.intervals) {
                let mut chars = vec![' '; total];
                for iv in row {
                    let (a, b) = (starts[iv.start - 1], starts[iv.end - 1]);
                    let tip = if iv.orientation >= 0 { '>' } else { '<' };
                    for c in chars.iter_mut().take(b + 1).skip(a) {
                        *c = '-';
                    }
                    chars[a] = tip;
                    chars[b] = tip;
                }
                let line: String = chars.into_iter().collect();
                writeln!(f, "  {}", line.trim_end())?;
            }
            writeln!(f, "  count = {}", level.count)?;
        }
        match &self.value {
            Ok(v) => write!(f, "value = {v}"),
            Err(u) => write!(f, "{u}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::parse_symbol;
    use crate::words::parse_word_expr;

    fn w(s: &str) -> Word {
        parse_word_expr(s).unwrap().to_word()
    }

    #[test]
    fn running_example_multiplicities() {
        let d = diagram(&parse_symbol("(a)b").unwrap(), &w("[a a,[b,a c]]").free_reduce());
        let top = d.levels.last().unwrap();
        let m: Vec<i64> = top.multiplicities.iter().map(|&(_, m)| m).collect();
        assert_eq!(m, [2, 3, 1, 0]);
        assert_eq!(d.value, Ok(0));
        let text = d.to_string();
        assert!(text.contains(">--"));
        assert!(text.ends_with("value = 0"));
    }

    #[test]
    fn empty_and_letterless_words() {
        let d = diagram(&parse_symbol("(a)b").unwrap(), &Word::empty());
        assert_eq!(d.value, Ok(0));
        let d = diagram(&parse_symbol("(a)b").unwrap(), &w("c d c^-1"));
        assert_eq!(d.value, Ok(0));
        assert!(d.levels.iter().all(|l| l.multiplicities.iter().all(|&(_, m)| m == 0)));
    }

    #[test]
    fn stops_at_the_undefined_level() {
        let d = diagram(&parse_symbol("(a)b").unwrap(), &w("a b"));
        assert_eq!(d.levels.len(), 1);
        assert_eq!(d.value.as_ref().unwrap_err().count, 1);
        assert!(d.to_string().ends_with("undefined at a (count=1)"));
    }
}
