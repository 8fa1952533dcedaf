//! Exact combinatorics of root polytopes.
//!
//! The root polytope of a finite crystallographic irreducible root system is
//! the convex hull of its roots. This crate builds the root system from its
//! Cartan data, describes the standard parabolic faces through the extended
//! Dynkin diagram, assembles the f-polynomial and a minimal half-space
//! representation, and provides an independent brute-force convex hull to
//! check all of it against.
//!
//! Everything is exact: vectors are expressed in the basis of simple roots
//! with integer or rational coordinates, and the geometry enters only through
//! the Gram matrix.
//!
//! Simple roots are numbered `1..=n` following Bourbaki; node `0` of the
//! extended diagram is the affine node.

#![no_std]

extern crate alloc;

pub mod affine;
pub mod enumeration;
mod error;
pub mod faces;
pub mod hull;
pub mod linalg;
pub mod root_system;
pub mod weyl;

pub use affine::{ExtendedDiagram, IndexSet, NodeSet};
pub use error::{Error, Result};
pub use root_system::{Family, LengthClass, Root, RootSystem};

/// Exact rational scalar used throughout the crate.
pub type Rational = num_rational::Ratio<i128>;
