//! Alphabets for synchronous multi-track automata.
//!
//! A base [`Alphabet`] is a finite ordered set of atomic symbols. The padding
//! symbol `⋄` is never a member; it is written `_` in all text forms. A
//! [`ConvAlphabet`] is the alphabet of k-track convolution words: its symbols
//! are the k-tuples over the padded per-track alphabets, minus the all-padding
//! tuple. Tuples are packed into dense `u32` ids by mixed-radix encoding so
//! that transition tables can key on a single integer.

use crate::error::{Error, Result};

/// Dense id of one column of a convolution word.
pub type Symbol = u32;

/// A finite ordered set of atomic symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    /// Builds an alphabet from distinct symbol names.
    ///
    /// Names must be non-empty, must not contain whitespace, `,` or `\t`
    /// (they appear in serialized transition lines), and must not be `_`,
    /// which is reserved for the padding symbol.
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("no symbols".into()));
        }
        for s in &symbols {
            if s.is_empty() || s == "_" || s.chars().any(|c| c.is_whitespace() || c == ',') {
                return Err(Error::InvalidAlphabet(format!("bad symbol {s:?}")));
            }
        }
        let mut sorted: Vec<&String> = symbols.iter().collect();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != symbols.len() {
            return Err(Error::InvalidAlphabet("duplicate symbol".into()));
        }
        Ok(Alphabet { symbols })
    }

    /// Two-symbol binary digit alphabet `0`, `1`.
    pub fn binary() -> Self {
        Alphabet::new(["0", "1"]).unwrap()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        self.symbols.iter().map(String::as_str)
    }

    pub fn name(&self, idx: u16) -> &str {
        &self.symbols[idx as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<u16> {
        self.symbols.iter().position(|s| s == name).map(|i| i as u16)
    }
}

/// One column of a k-track convolution word: per track, a base-symbol index
/// or `None` for padding.
pub type Column = Vec<Option<u16>>;

/// The alphabet `(Σ₁,⋄) × … × (Σ_k,⋄)` minus the all-padding column.
///
/// Column ids are mixed-radix numbers with the padding symbol as the highest
/// digit on each track, so the excluded all-padding column is exactly the
/// largest representable value and valid ids form the dense range
/// `0..len()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConvAlphabet {
    tracks: Vec<Alphabet>,
    /// weights[i] = product of (len+1) over tracks after i
    weights: Vec<u64>,
    total: u64,
}

impl ConvAlphabet {
    pub fn new(tracks: Vec<Alphabet>) -> Result<Self> {
        if tracks.is_empty() {
            return Err(Error::InvalidAlphabet("no tracks".into()));
        }
        let mut weights = vec![0u64; tracks.len()];
        let mut total: u64 = 1;
        for (i, t) in tracks.iter().enumerate().rev() {
            weights[i] = total;
            total = total
                .checked_mul(t.len() as u64 + 1)
                .ok_or_else(|| Error::InvalidAlphabet("alphabet too large".into()))?;
        }
        if total - 1 > u32::MAX as u64 {
            return Err(Error::InvalidAlphabet("alphabet too large".into()));
        }
        Ok(ConvAlphabet {
            tracks,
            weights,
            total,
        })
    }

    /// Single-track alphabet: plain words over `base`.
    pub fn single(base: Alphabet) -> Self {
        ConvAlphabet::new(vec![base]).unwrap()
    }

    pub fn num_tracks(&self) -> usize {
        self.tracks.len()
    }

    pub fn track(&self, i: usize) -> &Alphabet {
        &self.tracks[i]
    }

    pub fn tracks(&self) -> &[Alphabet] {
        &self.tracks
    }

    /// Number of symbols (the all-padding tuple is not one).
    pub fn len(&self) -> usize {
        (self.total - 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Packs a column into its id. Returns `None` for the all-padding column.
    pub fn pack(&self, col: &[Option<u16>]) -> Option<Symbol> {
        debug_assert_eq!(col.len(), self.tracks.len());
        let mut id: u64 = 0;
        let mut all_pad = true;
        for (i, c) in col.iter().enumerate() {
            let digit = match c {
                Some(s) => {
                    debug_assert!((*s as usize) < self.tracks[i].len());
                    all_pad = false;
                    *s as u64
                }
                None => self.tracks[i].len() as u64,
            };
            id += digit * self.weights[i];
        }
        if all_pad {
            None
        } else {
            Some(id as Symbol)
        }
    }

    /// Unpacks an id into its column.
    pub fn unpack(&self, sym: Symbol) -> Column {
        let mut rem = sym as u64;
        debug_assert!(rem < self.total - 1);
        let mut col = Vec::with_capacity(self.tracks.len());
        for (i, t) in self.tracks.iter().enumerate() {
            let digit = rem / self.weights[i];
            rem %= self.weights[i];
            col.push(if digit == t.len() as u64 {
                None
            } else {
                Some(digit as u16)
            });
        }
        col
    }

    /// Per-track digit of a symbol without unpacking the whole column.
    pub fn track_digit(&self, sym: Symbol, track: usize) -> Option<u16> {
        let digit = (sym as u64 / self.weights[track]) % (self.tracks[track].len() as u64 + 1);
        if digit == self.tracks[track].len() as u64 {
            None
        } else {
            Some(digit as u16)
        }
    }

    /// The sub-alphabet on a selection of tracks.
    pub fn select(&self, sel: &[usize]) -> Result<ConvAlphabet> {
        ConvAlphabet::new(sel.iter().map(|&i| self.tracks[i].clone()).collect())
    }

    /// Projects a symbol onto selected tracks; `None` if the sub-column is
    /// all padding (not a symbol of the sub-alphabet).
    pub fn project(&self, sym: Symbol, sel: &[usize], sub: &ConvAlphabet) -> Option<Symbol> {
        let col: Column = sel.iter().map(|&i| self.track_digit(sym, i)).collect();
        sub.pack(&col)
    }

    /// Renders a symbol as `x,y,_` (padding as `_`).
    pub fn render(&self, sym: Symbol) -> String {
        let col = self.unpack(sym);
        let parts: Vec<&str> = col
            .iter()
            .enumerate()
            .map(|(i, c)| match c {
                Some(s) => self.tracks[i].name(*s),
                None => "_",
            })
            .collect();
        parts.join(",")
    }

    /// Parses the `render` form back into a symbol id.
    pub fn parse_symbol(&self, text: &str) -> Result<Symbol> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != self.tracks.len() {
            return Err(Error::InvalidWord(format!(
                "column {text:?} has {} tracks, alphabet has {}",
                parts.len(),
                self.tracks.len()
            )));
        }
        let mut col = Vec::with_capacity(parts.len());
        for (i, p) in parts.iter().enumerate() {
            if *p == "_" {
                col.push(None);
            } else {
                let idx = self.tracks[i]
                    .index_of(p)
                    .ok_or_else(|| Error::InvalidWord(format!("unknown symbol {p:?} on track {i}")))?;
                col.push(Some(idx));
            }
        }
        self.pack(&col)
            .ok_or_else(|| Error::InvalidWord("all-padding column".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_reserved_names() {
        assert!(Alphabet::new(["_"]).is_err());
        assert!(Alphabet::new(["a b"]).is_err());
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
    }

    #[test]
    fn pack_unpack_roundtrip() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let conv = ConvAlphabet::new(vec![ab.clone(), ab.clone(), ab]).unwrap();
        assert_eq!(conv.len(), 26); // 3^3 - 1
        for sym in 0..conv.len() as Symbol {
            let col = conv.unpack(sym);
            assert_eq!(conv.pack(&col), Some(sym));
            for (i, d) in col.iter().enumerate() {
                assert_eq!(conv.track_digit(sym, i), *d);
            }
        }
    }

    #[test]
    fn all_padding_is_excluded() {
        let conv = ConvAlphabet::new(vec![Alphabet::binary(), Alphabet::binary()]).unwrap();
        assert_eq!(conv.pack(&vec![None, None]), None);
        assert_eq!(conv.len(), 8);
    }

    #[test]
    fn render_parse_roundtrip() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let conv = ConvAlphabet::new(vec![ab, Alphabet::binary()]).unwrap();
        for sym in 0..conv.len() as Symbol {
            let text = conv.render(sym);
            assert_eq!(conv.parse_symbol(&text).unwrap(), sym);
        }
        assert!(conv.parse_symbol("_,_").is_err());
        assert!(conv.parse_symbol("a").is_err());
        assert!(conv.parse_symbol("q,0").is_err());
    }

    #[test]
    fn projection_drops_padded_subcolumns() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let conv = ConvAlphabet::new(vec![ab.clone(), Alphabet::binary()]).unwrap();
        let sub = conv.select(&[0]).unwrap();
        let sym = conv.pack(&vec![None, Some(1)]).unwrap();
        assert_eq!(conv.project(sym, &[0], &sub), None);
        let sym = conv.pack(&vec![Some(1), Some(0)]).unwrap();
        let p = conv.project(sym, &[0], &sub).unwrap();
        assert_eq!(sub.render(p), "b");
    }
}
