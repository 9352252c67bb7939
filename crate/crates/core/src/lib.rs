//! Finite partial algebras: constellations, categories, groupoids, ordered
//! groupoids, and (inverse/involuted) semigroups, together with the
//! conversions between them.
//!
//! Everything operates on small finite carriers. Elements are addressed by
//! index; labels exist only at the text boundary. Structures are bundled in
//! [`AlgebraBundle`], a loose container holding a partial product table plus
//! whichever unary maps, idempotent subsets, and order relations the
//! structure kind calls for. Axiom checkers never panic on bad structures:
//! they return a [`CheckReport`] listing every violated law with concrete
//! witness elements.
//!
//! The crate is `no_std` (with `alloc`); file IO and the command-line front
//! end live in the companion `constel-cli` crate.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod bundle;
pub mod constellation;
pub mod convert;
pub mod correspond;
pub mod enumerate;
pub mod ordered;
pub mod pre;
pub mod radiant;
pub mod report;
pub mod repr;
pub mod semigroup;
pub mod serial;
pub mod tables;

mod iso;

pub use bundle::{AlgebraBundle, Kind};
pub use iso::{canonical_form, canonical_key, find_isomorphism, MAX_CANONICAL_ORDER};
pub use report::{CheckReport, Violation};
pub use tables::{BinRelation, Carrier, El, PartialOpTable, UnaryMap};

use alloc::string::String;

/// Errors reported by parsing, conversions, and resource-capped builders.
///
/// Axiom failures are not errors; they are [`CheckReport`] entries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The input text is not syntactically well-formed.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// The input text parsed but names an unknown element or is otherwise
    /// not interpretable as a bundle.
    #[error("parse error: {0}")]
    Malformed(String),
    /// A precondition on an operation's input was violated.
    #[error("input error: {0}")]
    Input(String),
    /// A size cap was exceeded.
    #[error("resource limit: {0}")]
    Resource(String),
}

impl Error {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Malformed(_) | Error::Input(_) => 2,
            Error::Resource(_) => 3,
        }
    }
}
