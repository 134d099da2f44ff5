//! Certificates of non-levelness for Artinian O-sequences, mostly in
//! codimension 3.
//!
//! The pieces: Macaulay expansions and O-sequence checks ([`binomial`]), lex
//! segment ideals ([`monomial`]), their Betti tables ([`resolution`]), type
//! vectors of k-configurations ([`typevector`]), the verdict engine
//! ([`levelness`]) and an independent brute-force oracle ([`oracle`]).

pub mod binomial;
pub mod error;
pub mod levelness;
pub mod monomial;
pub mod oracle;
pub mod resolution;
pub mod sweep;
pub mod typevector;

pub use binomial::{is_o_sequence, macaulay_expand, macaulay_growth, OSequence};
pub use error::{Error, Result};
pub use levelness::{level_check, Criterion, Finding, LevelVerdict};
pub use monomial::{Monomial, MonomialIdeal};
pub use resolution::{cancellation_bounds, closed_betti_codim3, ek_betti, BettiTable};
pub use typevector::{hf_from_typevector, typevector_from_hf, TypeVector};
