//! Relative graphs, their inclusion morphisms and pushouts, and the
//! gauge-invariant ideal structure of relative Toeplitz graph algebras.
//!
//! Graphs are finite, with optional countably-infinite edge bundles. All
//! decisions are made on vertex sets; a matrix model covers finite acyclic
//! graphs for numerical cross-checks.
//!
//! ```
//! use relgraph::{fixtures, pullback::admissibility};
//!
//! let report = admissibility(&fixtures::double_bundle_span()).unwrap();
//! assert!(!report.admissible);
//! assert_eq!(report.witness.unwrap().as_str(), "u");
//! ```

pub mod error;
pub mod fixtures;
pub mod fock;
pub mod format;
pub mod generate;
pub mod graph;
pub mod ideal;
pub mod pullback;
pub mod pushout;
pub mod relative;

pub use error::{Error, Violation};
pub use graph::{vset, Cardinality, EdgeDecl, EdgeRef, Graph, Lasso, Path, VertexId, VertexSet};
pub use ideal::IdealCode;
pub use pushout::{PushoutDiagram, PushoutResult};
pub use relative::{InclusionMorphism, RelativeGraph};
