//! Exact arithmetic and geodesic combinatorics for the central extension of
//! the Klein bottle group
//!
//! ```text
//! cK = < a, b | [a b a^-1 b, a] = [b, a b a^-1 b] = 1 >
//! ```
//!
//! Elements are kept in the normal form `(k, m, n)`. On top of that the crate
//! provides closed-form word length and standard geodesic representatives,
//! continuation sets, the three basic moves on geodesic words, Young-diagram
//! decompositions of geodesic paths, and a brute-force Cayley-ball oracle that
//! certifies all of it.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod element;
pub mod geodesic;
pub mod model;
pub mod moves;
pub mod oracle;
pub mod word;
pub mod young;

pub use crate::element::{evaluate, lattice_path, Element, IsometryKind, KleinElement, Overflow};
pub use crate::geodesic::{continuations, is_geodesic, length, std_rep, LetterSet, RegionCase};
pub use crate::model::{CkModel, GroupModel, KleinModel, Z2Model};
pub use crate::oracle::BallIndex;
pub use crate::word::{format_word, parse_word, Letter, LetterMap, Word};
