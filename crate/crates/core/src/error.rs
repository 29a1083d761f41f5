// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised by graph construction, metric queries, spectra and the
/// isomorphism machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    EmptyGraph,

    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph is not connected ({components} components)")]
    NotConnected { components: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },

    #[error("matrix data has length {len}, expected {expected}")]
    BadMatrixShape { len: usize, expected: usize },

    #[error("{what} requires an odd n >= 3, got {n}")]
    RequiresOddCycle { what: &'static str, n: usize },

    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),

    #[error("orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("not a permutation of 0..{n}")]
    NotPermutation { n: usize },

    #[error("no closed-form adjacency spectrum for the {0} product")]
    NoClosedForm(&'static str),

    #[error("{which} factor is not transmission regular")]
    NotTransmissionRegular { which: &'static str },

    #[error("the two product kinds must differ")]
    SameKind,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
