//! Cayley automatic structures for groups of the form `Z^d ⋊ F_n`.
//!
//! The crate builds explicit synchronous-automaton presentations of
//! free-abelian-by-free groups, verifies them exactly and against brute-force
//! oracles, solves the word problem by stepping through the automata, and
//! assembles the classical reduction chain (Mikhailova subgroup generators,
//! `F₂ × F₂` matrix embeddings, block-diagonal injectivization) that turns
//! word-problem instances into orbit and conjugacy instances. A sampling
//! probe reports Myhill–Nerode lower bounds for the left-multiplication
//! relations that automatic structures do not provide.
//!
//! Module map:
//!
//! - [`alphabet`], [`word`]: convolution alphabets and padded multi-track words
//! - [`fsa`]: automata with exact boolean algebra, determinization, canonical
//!   minimization
//! - [`relation`]: n-ary regular relations given by recognizers over
//!   convolution alphabets
//! - [`product`]: coupling of component relations on disjoint track groups
//! - [`serial`]: text and DOT serialization
//! - [`zint`]: canonical two's-complement integer encodings and affine-map
//!   automata over `Z^d`
//! - [`freegroup`]: reduced words and single-generator multiplication
//!   relations of `F_n`
//! - [`semidirect`]: the automatic structure of `Z^d ⋊ F_n`, the exact
//!   algebraic oracle, the word-problem solver and the structure verifier
//! - [`undecid`]: Mikhailova generators, matrix embeddings, injectivization,
//!   orbit/conjugacy semi-decision searches
//! - [`nerode`]: sample-based DFA state lower bounds

pub mod alphabet;
pub mod error;
pub mod fsa;
pub mod word;

pub use error::{Error, Result};
