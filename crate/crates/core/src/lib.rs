//! Exact computation of Nakaoka spectra of Tambara functors over finite groups.
//!
//! A Tambara functor over a finite group `G` assigns a commutative ring to
//! every transitive `G`-set `G/H` together with restriction, additive transfer,
//! multiplicative norm, and conjugation maps.  This crate models such functors
//! with explicit finite data (Cayley tables, ring operation tables, structure
//! maps as index vectors) and computes their prime spectra — the Nakaoka
//! spectrum — along with the stratification of the spectrum by subgroups.
//!
//! Everything is exact: integer lattices are handled by Hermite normal form,
//! ring levels by full operation tables, and all spectral claims are either
//! enumerated outright or certified against independent brute-force oracles.

// Cayley tables, mark matrices, and lattice bases are addressed `m[i][j]`
// throughout; index-driven loops keep that arithmetic legible.
#![allow(clippy::needless_range_loop)]

pub mod intmat;

pub mod groups;

pub mod rings;

pub mod grings;

pub mod burnside;

pub mod tambara;

pub mod ideals;

pub mod spectra;

pub mod io;

pub mod acceptance;

/// Default exact integer scalar used by the concrete type aliases.
///
/// All lattice arithmetic is generic over [`intmat::IntScalar`]; `i64` is wide
/// enough for every group within the supported order bound (marks are bounded
/// by `|G| ≤ 64` and lattice reduction on such inputs stays far below `2^63`).
pub type Int = i64;

/// Integer lattice over the default scalar.
pub type Lattice = intmat::Lattice<Int>;

/// Burnside Tambara functor over the default integer scalar.
pub type BurnsideFunctor = burnside::BurnsideFunctor<Int>;
/// Burnside prime ideal over the default integer scalar.
pub type BurnsidePrime = burnside::BurnsidePrime<Int>;
