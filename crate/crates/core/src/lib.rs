//! Certified comparison of the first geometric-arithmetic (GA) index and the
//! atom-bond connectivity (ABC) index of simple graphs.
//!
//! The crate is organized bottom-up:
//!
//! * [`graph`]: immutable graphs, degree statistics, edge-degree census,
//!   canonical forms, graph6 and edge-list I/O.
//! * [`interval`]: dyadic interval arithmetic with outward rounding.
//! * [`indices`]: GA/ABC enclosures and the certified sign of `GA - ABC`.
//! * [`line_graph`]: line graphs and line-graph recognition.
//! * [`families`]: generators for named families and boundary examples.
//! * [`theorems`]: hypothesis checkers and conclusion verifiers.
//! * [`search`]: exhaustive enumeration, conjecture scans, family sweeps.
//!
//! Batch operations run on rayon when the `parallel` feature is enabled and
//! fall back to sequential iteration otherwise; see [`par`].

pub mod error;
pub mod families;
pub mod graph;
pub mod indices;
pub mod interval;
pub mod line_graph;
pub mod par;
pub mod search;
pub mod theorems;

pub use error::Error;
pub use graph::Graph;
pub use indices::{CertifiedValue, ComparisonVerdict, Sign};
