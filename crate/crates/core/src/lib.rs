//! Exact computer algebra for finitely presented super-commutative superalgebras
//! `K[X1..Xm | Y1..Yn]/J` over the rationals or a prime field.
//!
//! The crate computes Krull super-dimensions with odd-parameter witnesses,
//! analyses one-relation superalgebras (exponent sets, basements, extremal
//! sets, exact odd dimensions), decides regularity through three independent
//! routes, and presents modules of Kähler superdifferentials.  All arithmetic
//! is exact; no floating point anywhere.
//!
//! The crate is `no_std` (with `alloc`); IO, parsing and report formatting
//! live in the companion `superkrull` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod polyarith;
pub mod superpoly;
mod elim;
pub mod oracle;
pub mod groebner;
pub mod ksdim;
pub mod onerel;
pub mod regular;
pub mod kaehler;
mod error;

pub use error::Error;
pub use polyarith::{EvenMonomial, FieldSpec, MonomialOrder, OrderKind, Polynomial, Scalar};
pub use superpoly::{ModuleVector, OddMonomial, Parity, SuperPolynomial};
pub use groebner::{IdealBasis, IdealDim, ModuleBasis};
pub use ksdim::{SuperDim, SuperPresentation};
