//! Finite multiplicative lattices — complete lattices carrying a
//! commutative, associative, join-distributive multiplication with the top
//! element as identity — together with the element theory built on them:
//! residuals, annihilators, radicals, Baer elements, Baer closures, the
//! frame of Baer elements, nucleus classification, and homomorphisms.
//!
//! The crate also ships generators and an exhaustive small-structure
//! enumerator, an interchange file format, and a theorem-check suite
//! (T1..T23) with counterexample search; see [`suite`].

// table math reads better with explicit indices
#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]

pub mod baer;
pub mod corpus;
pub mod elements;
pub mod enumerate;
pub mod io;
pub mod lattice;
pub mod morphisms;
pub mod quantale;
pub mod suite;

pub use lattice::{Elt, FiniteLattice, LatticeError};
pub use quantale::{validate_quantale, MultLattice, QuantaleError};
