//! Spectral analysis of threshold graphs organized around their anti-regular
//! induced subgraphs and supergraphs.
//!
//! A connected threshold graph is identified with its creation string
//! `0^{s_1} 1^{t_1} ... 0^{s_k} 1^{t_k}`: vertices are added one at a time,
//! isolated for a `0` and dominating for a `1`. The crate provides
//!
//! - [`graph`]: creation strings, adjacency matrices, degree partitions and
//!   anti-regular embeddings,
//! - [`eigen`]: a dense symmetric eigensolver and spectrum classification,
//! - [`analysis`]: inertia and multiplicity formulas, eigenvalue-free
//!   intervals, interlacing checks and closed-form extremal bounds,
//! - [`enumeration`]: exhaustive scans over all connected threshold graphs of
//!   a given order,
//! - [`report`]: text, JSON and CSV rendering used by the command line tool.
//!
//! ```
//! use threshold_spectra::{analysis, eigen, graph::ThresholdGraph};
//!
//! let g: ThresholdGraph = "0^3 1^2 0^4 1^6 0^5 1^3".parse().unwrap();
//! let spectrum = eigen::eigenvalues(&g.adjacency()).unwrap();
//! assert_eq!(spectrum.inertia(), analysis::inertia_formula(&g));
//! ```

#![allow(clippy::needless_range_loop)]

pub mod analysis;
pub mod eigen;
pub mod enumeration;
mod error;
pub mod graph;
pub mod report;

pub use error::{Error, Result};
pub use graph::{DegreePartition, Embedding, SymmetricMatrix, ThresholdGraph};

/// Largest matrix order accepted by the dense eigensolver and the parser.
pub const MAX_ORDER: usize = 4096;
