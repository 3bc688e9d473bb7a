//! Exact braid-group representations for Ising anyons.
//!
//! Everything in this crate is computed in the cyclotomic field Q(ω),
//! ω = exp(iπ/4), with dyadic-rational coefficients, so every identity is
//! checked by structural equality rather than floating-point tolerance.
//!
//! The crate builds the two inequivalent families of braid generators for
//! 2n+2 anyons — the SO(2n+2) spinor form obtained by projecting rotation
//! generators onto a fermion-parity eigenspace, and the wave-function form
//! assembled recursively from the 4-anyon base matrices — verifies the
//! Clifford, braid and equivalence identities relating them, and compiles
//! target quantum gates into braid words by breadth-first search.
//!
//! The crate is `no_std` (alloc only); IO and file formats live in the
//! companion `braidrep` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod braid;
pub mod cyclo;
pub mod error;
pub mod matrix;
pub mod pfaffian;
pub mod spinor;
pub mod synth;

pub use braid::{BraidLetter, BraidWord, RepFamily, RepHandle, RepSpec};
pub use cyclo::{CycloNum, Dyadic};
pub use error::Error;
pub use matrix::ExactMatrix;

pub type Result<T> = core::result::Result<T, Error>;

/// Fermion parity label distinguishing the two irreducible representations.
///
/// The same two-valued sign is used for the fusion-channel labels c_i of the
/// computational basis states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    pub fn flip(self) -> Self {
        match self {
            Parity::Plus => Parity::Minus,
            Parity::Minus => Parity::Plus,
        }
    }

    /// +1 or -1.
    pub fn sign(self) -> i8 {
        match self {
            Parity::Plus => 1,
            Parity::Minus => -1,
        }
    }

    pub fn from_sign(sign: i8) -> Self {
        if sign >= 0 {
            Parity::Plus
        } else {
            Parity::Minus
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Parity::Plus => '+',
            Parity::Minus => '-',
        }
    }
}

impl core::fmt::Display for Parity {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.symbol())
    }
}
