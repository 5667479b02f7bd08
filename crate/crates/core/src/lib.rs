//! Exact weighted independence and domination parameters of graphs and
//! partitioned graphs, certificate-producing duality constructions, and a
//! deterministic randomized search for weighted duality counterexamples.
//!
//! All arithmetic is exact: rationals are arbitrary-precision and every LP is
//! solved by a Bland-rule simplex that returns a primal/dual pair.
//!
//! ```
//! use inddom_core::duality::{build_domination_certificate, verify_certificate};
//! use inddom_core::{graph::path, Partition, WeightVector, DEFAULT_COLUMN_CAP};
//!
//! # fn main() -> Result<(), inddom_core::Error> {
//! let g = path(4);
//! let parts = Partition::full(4, vec![vec![0, 3], vec![1, 2]])?;
//! let w = WeightVector::ones(4);
//! let cert = build_domination_certificate(&g, &parts, &w, DEFAULT_COLUMN_CAP)?;
//! assert_eq!(cert.g, vec![1, 1]);
//! assert!(verify_certificate(&g, &parts, &w, &cert, &cert.bound).is_empty());
//! # Ok(())
//! # }
//! ```

pub mod cover;
pub mod duality;
pub mod error;
pub mod graph;
pub mod indep;
pub mod instance;
pub mod lp;
pub mod params;
pub mod rational;
pub mod search;

pub use error::{Error, ModelError, Result};
pub use graph::{build_graph, Graph, Partition, VertexSet, WeightVector};
pub use indep::DEFAULT_COLUMN_CAP;
pub use instance::Instance;
pub use rational::Rational;
