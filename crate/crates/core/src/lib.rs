//! Exact homology-cobordism invariants of plumbed and Seifert fibered
//! integral homology 3-spheres.
//!
//! * [`graph`]: plumbing graphs, intersection forms, exact determinant and
//!   inertia, blow-ups.
//! * [`wu`]: the integral Wu class, `mubar`, the Rochlin invariant and the
//!   negative-definite obstruction.
//! * [`seifert`]: Seifert data, resolution plumbings, splicing and the
//!   surgery families.
//! * [`gauge`]: the `R`-invariant, the Casson invariant of Brieskorn spheres,
//!   canonical classes, even forms and combined obstruction reports.
//! * [`floer`]: Floer rank vectors, the Casson invariant as half an Euler
//!   characteristic, and `ν`.
//! * [`input`], [`report`], [`checks`]: text formats, machine-readable
//!   reports and the property suites behind the command-line tool.

pub mod checks;
pub mod error;
pub mod floer;
pub mod gauge;
pub mod gf2;
pub mod graph;
pub mod input;
pub mod linalg;
pub mod report;
pub mod seifert;
pub mod wu;

pub use error::{Error, Result};
pub use floer::FloerRanks;
pub use graph::{IntersectionMatrix, PlumbingGraph};
pub use seifert::{SeifertData, SpliceTree};
