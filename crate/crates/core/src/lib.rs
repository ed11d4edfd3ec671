//! Pattern-avoiding inversion sequences and permutations: statistics,
//! explicit bijections, generating trees, and exact power-series checks of
//! the generating-function identities that count them.
//!
//! The guide in `book/` walks through each module; its examples are
//! compiled as doc-tests of this crate.

pub mod bijections;
pub mod checks;
pub mod enumerate;
pub mod error;
pub mod series;
pub mod stats;
pub mod words;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/words.md")]
    mod words {}
    #[doc = include_str!("../../../book/src/statistics.md")]
    mod statistics {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/generating-trees.md")]
    mod generating_trees {}
    #[doc = include_str!("../../../book/src/bijections.md")]
    mod bijections {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/checks.md")]
    mod checks {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
