// SPDX-License-Identifier: Apache-2.0

//! Graph products (Cartesian, Kronecker, strong, lexicographic), their
//! adjacency and distance spectra, isomorphism search, distance-regularity
//! checks and a decision engine for when two products of the same factors
//! are isomorphic.

pub mod characterize;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod io;
pub mod iso;
pub mod oracle;
pub mod products;
pub mod reproduce;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, GraphBuilder};
pub use products::{product, ProductGraph, ProductKind};
pub use spectra::Spectrum;
