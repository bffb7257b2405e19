//! Mutual-visibility sets of graphs: the four visibility variants, exact
//! counting polynomials and dual spectra, witness constructions, and the
//! coefficient bounds that constrain them.
//!
//! Vertices are `0..n`. A [`VertexSet`] is a bitset over that range.

pub mod catalog;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod io;
pub mod poly;
pub mod verify;
pub mod vertex_set;
pub mod visibility;

pub use constructions::{construct, Construction, Family};
pub use enumeration::{EnumerationLimits, Provenance};
pub use error::{ConstructionError, EnumerationError, GraphError, ParseError, PolyError, VisibilityError};
pub use graph::{build_graph, Graph};
pub use poly::CountPolynomial;
pub use vertex_set::VertexSet;
pub use visibility::Variant;
