//! Exact computational spectral graph theory.
//!
//! Everything here runs in exact arithmetic: characteristic polynomials come
//! from a division-free expansion over big integers, eigenvalues are kept as
//! (square-free polynomial, isolating rational interval) pairs, and all
//! domination and star-set searches are exhaustive. No floating point is
//! consulted for any result.
//!
//! The crate is `no_std` (with `alloc`); file formats, parallelism, and the
//! command-line front end live in the companion `stardom-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebraic;
pub mod domination;
pub mod graph;
pub mod graph6;
pub mod matrix;
pub mod poly;
pub mod quadratic;
pub mod spectra;
pub mod star_sets;
pub mod verify;

use alloc::string::String;


pub use algebraic::{AlgebraicNumber, Interval};
pub use domination::{domination_number, DominationCertificate, DominationVariant};
pub use graph::{enumerate_connected, Graph, GraphFamily};
pub use matrix::IntMatrix;
pub use poly::IntPolynomial;
pub use spectra::{multiplicity, spectrum, MatrixKind, SpectrumSummary};
pub use star_sets::StarPartition;
pub use verify::{CheckKind, Status, TheoremReport};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed graph6 record; `offset` is the byte position in the record.
    Graph6 { offset: usize, reason: &'static str },
    /// Malformed edge-list text; `line` is 1-based.
    EdgeList { line: usize, reason: &'static str },
    /// Graph order outside 1..=64.
    OrderOutOfRange(usize),
    /// Operation requires a connected graph.
    Disconnected,
    /// An argument violated a documented precondition.
    InvalidArgument(&'static str),
    /// A polynomial argument must be square-free and is not.
    NotSquareFree,
    /// The given value is not an eigenvalue of the given matrix.
    NotAnEigenvalue,
    /// Exact field arithmetic is only implemented for eigenvalues of
    /// degree at most 2 over the rationals.
    UnsupportedDegree(usize),
}

impl core::fmt::Display for Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Error::Graph6 { offset, reason } => {
                write!(f, "malformed graph6 record at byte {offset}: {reason}")
            }
            Error::EdgeList { line, reason } => {
                write!(f, "malformed edge list at line {line}: {reason}")
            }
            Error::OrderOutOfRange(n) => {
                write!(f, "graph order {n} outside supported range 1..=64")
            }
            Error::Disconnected => write!(f, "graph must be connected"),
            Error::InvalidArgument(what) => write!(f, "invalid argument: {what}"),
            Error::NotSquareFree => write!(f, "polynomial must be square-free"),
            Error::NotAnEigenvalue => write!(f, "value is not an eigenvalue of the matrix"),
            Error::UnsupportedDegree(d) => {
                write!(f, "eigenvalue has degree {d}; exact field arithmetic supports degree <= 2")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

/// Iterate the set bits of a vertex mask in ascending order.
pub fn bits(mask: u64) -> impl Iterator<Item = usize> {
    BitIter(mask)
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Render a vertex mask as a sorted list, e.g. `{0, 2, 5}`.
pub fn mask_to_string(mask: u64) -> String {
    use core::fmt::Write;
    let mut s = String::from("{");
    let mut first = true;
    for v in bits(mask) {
        if !first {
            s.push_str(", ");
        }
        let _ = write!(s, "{v}");
        first = false;
    }
    s.push('}');
    s
}
