//! Words, relations and presentations of involutory quandles.
//!
//! Every generator acts as an involution, so a word never needs inverse
//! letters: the inverse of a word is its reversal, and two equal adjacent
//! letters cancel.

use std::fmt;

use crate::error::{Error, Result};

/// A generator of a presentation: a dense index plus its display name.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorId {
    pub index: usize,
    pub name: String,
}

/// A word in the generators, acting on the right.
///
/// Words are kept in normal form: no two adjacent letters are equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from raw letters, cancelling adjacent duplicates.
    pub fn new(letters: impl IntoIterator<Item = usize>) -> Self {
        let mut out: Vec<usize> = Vec::new();
        for g in letters {
            if out.last() == Some(&g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        Word(out)
    }

    pub fn letter(g: usize) -> Self {
        Word(vec![g])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        // reversal of a normalized word is normalized
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        Word::new(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Integer power; a negative exponent repeats the reversed word.
    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.reversed() } else { self.clone() };
        let reps = n.unsigned_abs() as usize;
        Word::new(std::iter::repeat_n(base.0.iter().copied(), reps).flatten())
    }

    /// The action word of the element `g^self`: `reverse(self) g self`.
    pub fn conjugate_of(&self, g: usize) -> Self {
        Word::new(
            self.0
                .iter()
                .rev()
                .copied()
                .chain(std::iter::once(g))
                .chain(self.0.iter().copied()),
        )
    }

    /// Renders the word with the given generator names. Names are joined
    /// directly when all are single characters, otherwise with `.`.
    pub fn render(&self, names: &[String]) -> String {
        let sep = if names.iter().all(|n| n.chars().count() == 1) {
            ""
        } else {
            "."
        };
        self.0
            .iter()
            .map(|&g| names[g].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }
}

/// Removes adjacent equal letters until none remain.
pub fn normalize_word(letters: &[usize]) -> Word {
    Word::new(letters.iter().copied())
}

/// `g_lhs ^ word = g_rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: usize,
    pub word: Word,
    pub rhs: usize,
}

impl Relation {
    pub fn new(lhs: usize, word: Word, rhs: usize) -> Self {
        Relation { lhs, word, rhs }
    }
}

/// Generators plus defining relations in `base^word = base` form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relations: Vec<Relation>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for (i, name) in generators.iter().enumerate() {
            if generators[..i].contains(name) {
                return Err(Error::DuplicateGenerator(name.clone()));
            }
        }
        let g = generators.len();
        for r in &relations {
            let bad = std::iter::once(r.lhs)
                .chain(std::iter::once(r.rhs))
                .chain(r.word.letters().iter().copied())
                .find(|&x| x >= g);
            if let Some(x) = bad {
                return Err(Error::GeneratorOutOfRange { index: x, count: g });
            }
        }
        Ok(Presentation {
            generators,
            relations,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_ids(&self) -> Vec<GeneratorId> {
        self.generators
            .iter()
            .enumerate()
            .map(|(index, name)| GeneratorId {
                index,
                name: name.clone(),
            })
            .collect()
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|n| n == name)
    }

    /// Writes the presentation in the text format read by
    /// [`crate::parser::parse_presentation`].
    pub fn serialize(&self) -> String {
        let mut out = String::from("gens:");
        for g in &self.generators {
            out.push(' ');
            out.push_str(g);
        }
        out.push_str(";\nrels:\n");
        for r in &self.relations {
            out.push_str("  ");
            out.push_str(&self.generators[r.lhs]);
            if !r.word.is_empty() {
                out.push_str("^(");
                let parts: Vec<&str> = r
                    .word
                    .letters()
                    .iter()
                    .map(|&l| self.generators[l].as_str())
                    .collect();
                out.push_str(&parts.join(" "));
                out.push(')');
            }
            out.push_str(" = ");
            out.push_str(&self.generators[r.rhs]);
            out.push_str(";\n");
        }
        out
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Vec<usize> {
        s.bytes().map(|b| (b - b'a') as usize).collect()
    }

    #[test]
    fn normalize_examples() {
        assert!(normalize_word(&w("abba")).is_empty());
        assert_eq!(normalize_word(&w("abab")).letters(), &w("abab")[..]);
        assert_eq!(normalize_word(&w("accab")).letters(), &w("b")[..]);
    }

    #[test]
    fn negative_power_reverses() {
        let ba = Word::new(w("ba"));
        assert_eq!(ba.pow(-1).letters(), &w("ab")[..]);
        assert_eq!(ba.pow(-2).letters(), &w("abab")[..]);
        assert!(ba.pow(0).is_empty());
    }

    #[test]
    fn conjugate_word() {
        // c^(ab) acts as b a c a b
        let ab = Word::new(w("ab"));
        assert_eq!(ab.conjugate_of(2).letters(), &w("bacab")[..]);
    }

    #[test]
    fn render_separators() {
        let names: Vec<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
        assert_eq!(Word::new(w("ab")).render(&names), "ab");
        let long: Vec<String> = ["x1", "x2"].iter().map(|s| s.to_string()).collect();
        assert_eq!(Word::new(w("ab")).render(&long), "x1.x2");
    }

    #[test]
    fn presentation_validation() {
        assert!(matches!(
            Presentation::new(vec![], vec![]),
            Err(Error::EmptyGenerators)
        ));
        assert!(
            Presentation::new(vec!["a".into()], vec![Relation::new(0, Word::letter(1), 0)])
                .is_err()
        );
        assert!(Presentation::new(vec!["a".into(), "a".into()], vec![]).is_err());
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        fn letters() -> impl Strategy<Value = Vec<usize>> {
            prop::collection::vec(0usize..3, 0..24)
        }

        proptest! {
            #[test]
            fn normalize_is_idempotent(v in letters()) {
                let once = normalize_word(&v);
                prop_assert_eq!(normalize_word(once.letters()), once.clone());
                prop_assert!(once.letters().windows(2).all(|p| p[0] != p[1]));
            }

            #[test]
            fn word_times_reverse_is_empty(v in letters()) {
                let w = Word::new(v);
                prop_assert!(w.concat(&w.reversed()).is_empty());
            }

            #[test]
            fn reverse_is_an_anti_homomorphism(u in letters(), v in letters()) {
                let (u, v) = (Word::new(u), Word::new(v));
                prop_assert_eq!(u.concat(&v).reversed(), v.reversed().concat(&u.reversed()));
            }
        }
    }
}
