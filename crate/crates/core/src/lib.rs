//! Exact engine for h-deformed Littlewood–Richardson numbers.
//!
//! Structure constants of the basis of Chern–Schwartz–MacPherson classes
//! (cohomology) and motivic Chern classes (K-theory, via Chern characters)
//! of Schubert cells, computed three independent ways:
//!
//! * the toric pipeline ([`fan`] + [`cohomology`]) for projective spaces and
//!   smooth toric surfaces,
//! * closed formulas and one-variable residue realizations ([`closedform`]),
//! * weight-function localization on `Gr(d, n)` ([`weightfn`]) followed by a
//!   nonequivariant limit ([`limits`]).
//!
//! Everything is exact; there is no floating point anywhere in the crate.
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod closedform;
pub mod cohomology;
pub mod error;
pub mod exact;
pub mod fan;
pub mod limits;
pub mod table;
pub mod weightfn;

pub use error::{Error, Result};
