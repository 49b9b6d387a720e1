//! Toolkit for simple permutations.
//!
//! Permutations are handled in one-line notation with 1-based positions and
//! values. The crate covers interval detection and the simplicity test,
//! parallel alternations and the separation predicates, inessential entries
//! (entries whose removal keeps a simple permutation simple), exhaustive
//! generation of simple permutations by brute force and by one-point
//! extension, and seeded Monte Carlo statistics on random permutations.
//!
//! ```
//! use simperm::{intervals, Permutation};
//!
//! let p: Permutation = "2 4 1 3".parse().unwrap();
//! assert!(intervals::is_simple(&p).simple);
//! ```

pub mod classify;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod essential;
pub mod intervals;
pub mod perm;
pub mod plot;
pub mod stats;

pub use error::{Error, Result};
pub use perm::{EntryRef, Permutation, RectHull, Slot, Symmetry};
