//! Exact tools for classical and semigroup Markov numbers.
//!
//! The library counts perfect matchings of weighted snake graphs
//! (wug-snakes) by brute force, by permanents and by continuant
//! determinants, and connects them to Markov triples, Cohn matrices,
//! periodic continued fractions and Markov-Davenport forms.

pub mod classic;
pub mod contfrac;
pub mod error;
pub mod exact;
pub mod json;
pub mod lattice;
pub mod render;
pub mod semigroup;
pub mod subtractive;
pub mod wugsnake;

pub use error::{Error, Result};
