//! Detection and verification of *full indubitable partitions* of regular
//! graphs through the two-valued structure of spectral idempotents.
//!
//! A partition of the vertex set of a connected graph is *indubitable* with
//! parameters `(a, b)` if every vertex has exactly `a` neighbors in its own
//! cell and exactly `b` in every other cell. Such a partition is *full* when
//! it has `m + 1` cells, where `m` is the multiplicity of the associated
//! eigenvalue `λ = a − b`. Full indubitable partitions are exactly the
//! partitions that can be read off a spectral idempotent `E_λ` with only two
//! distinct entries, and this crate implements both directions of that
//! correspondence, together with the classification machinery built on it:
//!
//! - [`graph`]: dense 01 graphs, graph6 and edge-list I/O, the example
//!   families (complete, cycle, complete multipartite, crown, grid, cycle ×
//!   complete products) and the transforms (Cartesian product, bipartite
//!   double, complement, distance matrices).
//! - [`spectral`]: symmetric eigendecomposition with eigenvalue clustering,
//!   spectral idempotents, entry-value classes, the Hadamard (entrywise)
//!   algebra dimension and its brute-force span oracle, and the two-valued
//!   decomposition `E = θ₀K + θ₁(J − K)`.
//! - [`partitions`]: equitable/indubitable verification with exact integer
//!   arithmetic, parameter prediction, extraction of full partitions from
//!   idempotents and reconstruction of idempotents from partitions, and the
//!   per-graph census over all eigenvalue classes.
//! - [`schemes`]: Bose–Mesner closure and structure constants, intersection
//!   arrays, co-edge-regularity, the simultaneous block structure of two full
//!   partitions, and the classifiers (distance-regular graphs, four
//!   eigenvalues, bipartite with five eigenvalues, generated 3-class
//!   schemes).
//! - [`report`]: JSON analysis reports, the streaming graph6 census, and the
//!   claim-verification entry points used by the CLI.

pub mod error;
pub mod graph;
pub mod partitions;
pub mod report;
pub mod schemes;
pub mod spectral;

pub use error::{Error, ErrorKind, Result};
pub use graph::{BasicProfile, FamilySpec, Graph};
pub use partitions::{IndubitableReport, Partition};
pub use spectral::{Idempotent, Spectrum, DEFAULT_TOL};
