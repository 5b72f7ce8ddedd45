//! Combinatorics of symplectic PBW degenerate flag varieties.
//!
//! Entries of the alphabet `1 < … < n < n̄ < … < 1̄` are encoded as `1..=2n`
//! with `ī = 2n + 1 - i` throughout the crate.

pub mod correspondence;
pub mod error;
pub mod fflv;
pub mod liealg;
pub mod matrix;
pub mod pluecker;
pub mod relations;
pub mod straighten;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};

/// Encoded value of `ī` in rank `n`.
#[inline]
pub fn bar(n: usize, i: usize) -> usize {
    2 * n + 1 - i
}

/// Human-readable form of an encoded entry.
pub fn letter(n: usize, e: usize, ascii: bool) -> String {
    if e <= n {
        e.to_string()
    } else if ascii {
        format!("{}'", bar(n, e))
    } else {
        format!("{}\u{305}", bar(n, e))
    }
}
