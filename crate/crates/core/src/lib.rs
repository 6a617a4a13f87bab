//! Topological invariants of semistable Lefschetz fibrations described by
//! combinatorial data, and certification of that data against Szpiro-type
//! inequalities and commutator-length bounds.
//!
//! The pipeline is:
//!
//! 1. [`surface_config`]: each singular fiber is the generic genus-`h` fiber
//!    cut along its vanishing cycles; pieces are the irreducible components
//!    and curves are the nodes.
//! 2. [`invariants`]: a [`FibrationDescription`] bundles the fibers with the
//!    base genus and optional homological data and yields an
//!    [`InvariantReport`].
//! 3. [`certifier`]: every applicable inequality is evaluated with exact
//!    rational slack and collected into a [`CertificateReport`].
//!
//! [`constructions`] builds new descriptions from old ones (parallel twist
//! fibers, fiber sums with trivial bundles, pullbacks to covers of the base),
//! and [`document`] is the versioned JSON interchange format.

pub mod certifier;
pub mod constructions;
pub mod document;
pub mod homology;
pub mod invariants;
pub mod surface_config;
pub mod verdict;

pub use certifier::{certify, CertificateReport, CertifyError, Overall};
pub use homology::{HomologySummary, IntegerMatrix, ShadowVerdict};
pub use invariants::{B1State, FibrationBuilder, FibrationDescription, InvariantReport, TopologyAssertion};
pub use constructions::{catalog, CatalogEntry, CurveKind};
pub use document::{parse_fibration, serialize_fibration, DocumentError, InputDocument};
pub use surface_config::{FiberConfiguration, Piece, ValidatedFiber};
pub use verdict::{InequalityId, InequalityVerdict, Status};
