//! Convolution words.
//!
//! The convolution of a tuple of words `(w₁,…,w_k)` is the word whose j-th
//! column holds the j-th symbol of each track, with tracks shorter than the
//! longest one padded by `⋄`. Padding is therefore terminal on every track,
//! the all-padding column never occurs, and the length is the maximum track
//! length. [`ConvWord`] enforces exactly these invariants.

use crate::alphabet::{Column, ConvAlphabet, Symbol};
use crate::error::{Error, Result};

/// A valid convolution word over a [`ConvAlphabet`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConvWord {
    alphabet: ConvAlphabet,
    columns: Vec<Symbol>,
}

impl ConvWord {
    /// The empty convolution word (the convolution of all-empty tracks).
    pub fn empty(alphabet: ConvAlphabet) -> Self {
        ConvWord {
            alphabet,
            columns: Vec::new(),
        }
    }

    /// Builds a word from raw columns, checking the convolution invariants:
    /// no all-padding column and no track resuming after padding.
    pub fn from_columns(alphabet: ConvAlphabet, columns: Vec<Symbol>) -> Result<Self> {
        let k = alphabet.num_tracks();
        let mut padded = vec![false; k];
        for (j, &sym) in columns.iter().enumerate() {
            if sym as usize >= alphabet.len() {
                return Err(Error::InvalidWord(format!("column {j}: symbol id out of range")));
            }
            for (i, p) in padded.iter_mut().enumerate() {
                match alphabet.track_digit(sym, i) {
                    None => *p = true,
                    Some(_) if *p => {
                        return Err(Error::InvalidWord(format!(
                            "track {i} resumes after padding at column {j}"
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(ConvWord { alphabet, columns })
    }

    pub fn alphabet(&self) -> &ConvAlphabet {
        &self.alphabet
    }

    pub fn columns(&self) -> &[Symbol] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Extracts track `i` as a sequence of base-symbol indices.
    pub fn track_word(&self, i: usize) -> Vec<u16> {
        self.columns
            .iter()
            .map_while(|&sym| self.alphabet.track_digit(sym, i))
            .collect()
    }

    /// All tracks at once; inverse of [`convolve`].
    pub fn tracks(&self) -> Vec<Vec<u16>> {
        (0..self.alphabet.num_tracks())
            .map(|i| self.track_word(i))
            .collect()
    }

    /// The prefix of the first `len` columns (always a valid convolution word).
    pub fn prefix(&self, len: usize) -> ConvWord {
        ConvWord {
            alphabet: self.alphabet.clone(),
            columns: self.columns[..len].to_vec(),
        }
    }

    /// Renders the word as space-separated columns, `x,y,_` style.
    pub fn render(&self) -> String {
        self.columns
            .iter()
            .map(|&s| self.alphabet.render(s))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the `render` form.
    pub fn parse(alphabet: ConvAlphabet, text: &str) -> Result<Self> {
        let mut columns = Vec::new();
        for tok in text.split_whitespace() {
            columns.push(alphabet.parse_symbol(tok)?);
        }
        ConvWord::from_columns(alphabet, columns)
    }
}

/// Interleaves a tuple of per-track words into their convolution.
///
/// `words[i]` is a sequence of base-symbol indices for track `i`; shorter
/// tracks are padded. The result has length `max |wᵢ|`.
pub fn convolve(alphabet: &ConvAlphabet, words: &[Vec<u16>]) -> Result<ConvWord> {
    if words.len() != alphabet.num_tracks() {
        return Err(Error::DimensionMismatch(format!(
            "{} words for {} tracks",
            words.len(),
            alphabet.num_tracks()
        )));
    }
    for (i, w) in words.iter().enumerate() {
        for &s in w {
            if s as usize >= alphabet.track(i).len() {
                return Err(Error::InvalidWord(format!("symbol index {s} out of range on track {i}")));
            }
        }
    }
    let len = words.iter().map(Vec::len).max().unwrap_or(0);
    let mut columns = Vec::with_capacity(len);
    for j in 0..len {
        let col: Column = words.iter().map(|w| w.get(j).copied()).collect();
        // j < len means some track is still live, so pack cannot fail
        columns.push(alphabet.pack(&col).expect("live column"));
    }
    Ok(ConvWord { alphabet: alphabet.clone(), columns })
}

/// Splits a convolution word back into its per-track words.
///
/// Inverse of [`convolve`] on valid words; malformed column sequences are
/// rejected by [`ConvWord::from_columns`] before this is reachable.
pub fn deconvolve(word: &ConvWord) -> Vec<Vec<u16>> {
    word.tracks()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn ab3() -> ConvAlphabet {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        ConvAlphabet::new(vec![ab.clone(), ab.clone(), ab]).unwrap()
    }

    fn word_of(alpha: &ConvAlphabet, track: usize, text: &str) -> Vec<u16> {
        text.chars()
            .map(|c| alpha.track(track).index_of(&c.to_string()).unwrap())
            .collect()
    }

    #[test]
    fn convolve_pads_shorter_tracks() {
        let alpha = ab3();
        let w = convolve(
            &alpha,
            &[word_of(&alpha, 0, "aaa"), word_of(&alpha, 1, "babaa"), vec![]],
        )
        .unwrap();
        assert_eq!(w.len(), 5);
        assert_eq!(w.render(), "a,b,_ a,a,_ a,b,_ _,a,_ _,a,_");
    }

    #[test]
    fn convolve_of_empty_tracks_is_empty() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let alpha = ConvAlphabet::new(vec![ab.clone(), ab]).unwrap();
        let w = convolve(&alpha, &[vec![], vec![]]).unwrap();
        assert!(w.is_empty());
        assert_eq!(deconvolve(&w), vec![Vec::<u16>::new(), Vec::new()]);
    }

    #[test]
    fn two_track_example() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let alpha = ConvAlphabet::new(vec![ab.clone(), ab]).unwrap();
        let w = convolve(&alpha, &[word_of(&alpha, 0, "ab"), word_of(&alpha, 1, "b")]).unwrap();
        assert_eq!(w.render(), "a,b b,_");
        assert_eq!(
            deconvolve(&w),
            vec![word_of(&alpha, 0, "ab"), word_of(&alpha, 1, "b")]
        );
    }

    #[test]
    fn rejects_resumed_track() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let alpha = ConvAlphabet::new(vec![ab.clone(), ab]).unwrap();
        let a_pad = alpha.pack(&vec![Some(0), None]).unwrap();
        let a_a = alpha.pack(&vec![Some(0), Some(0)]).unwrap();
        assert!(ConvWord::from_columns(alpha.clone(), vec![a_pad, a_a]).is_err());
        assert!(ConvWord::from_columns(alpha, vec![a_a, a_pad]).is_ok());
    }

    #[test]
    fn exhaustive_roundtrip_and_injectivity() {
        // all pairs of words of length <= 8 over {a,b}: deconvolve inverts
        // convolve and distinct tuples give distinct convolutions
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let alpha = ConvAlphabet::new(vec![ab.clone(), ab]).unwrap();
        let mut all_words: Vec<Vec<u16>> = vec![vec![]];
        let mut frontier: Vec<Vec<u16>> = vec![vec![]];
        for _ in 0..8 {
            let mut next = Vec::new();
            for w in &frontier {
                for s in 0..2u16 {
                    let mut v = w.clone();
                    v.push(s);
                    next.push(v);
                }
            }
            all_words.extend(next.iter().cloned());
            frontier = next;
        }
        let mut seen = std::collections::HashSet::new();
        for w1 in &all_words {
            for w2 in &all_words {
                let conv = convolve(&alpha, &[w1.clone(), w2.clone()]).unwrap();
                assert_eq!(deconvolve(&conv), vec![w1.clone(), w2.clone()]);
                assert!(seen.insert(conv.columns().to_vec()), "convolution not injective");
            }
        }
    }
}
