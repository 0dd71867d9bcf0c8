//! Exact computation of the U-polynomial, its extended and weighted forms,
//! the polychromate, and the paired Tutte symmetric function, together with
//! the conversions between them.
//!
//! ```
//! use gpoly_core::{invariants, Limits, Multigraph};
//!
//! let triangle = Multigraph::parse_edge_list("3 3\n1 2\n2 3\n3 1\n").unwrap();
//! let ubar = invariants::ubar(&triangle, &Limits::default()).unwrap();
//! assert_eq!(ubar.to_string(), "z[1,0]^3 + 3*z[1,0]*z[2,0] + 3*z[3,0] + z[3,1]");
//! ```

pub mod enumerate;
pub mod equivalence;
pub mod error;
pub mod graph6;
pub mod invariants;
pub mod multigraph;
pub mod partitions;
pub mod polyring;
pub mod search;
pub mod verify;

pub use equivalence::{PairedBasis, PairedCoefficientMap};
pub use error::{Error, Result};
pub use invariants::{ComputeOptions, Invariant, InvariantResult, InvariantValue, Limits, Route};
pub use multigraph::Multigraph;
pub use partitions::{IntegerPartition, PairPartition, VertexPartition};
pub use polyring::{Family, Monomial, Poly, Var};
