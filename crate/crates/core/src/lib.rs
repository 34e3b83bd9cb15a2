//! Directed triangle and wedge censuses for digraphs with reciprocal edges.
//!
//! Mutual edge pairs are merged into single reciprocal edges, which splits
//! wedges into six directed types and triangles into seven. From exact
//! counts (or uniform wedge samples) the crate derives the 15 directed
//! closures `kappa_{psi,tau}`, the fraction of `psi` wedges that sit inside a
//! `tau` triangle, and compares triangle-type fractions with a
//! random-direction null model.
//!
//! ```
//! use triadic::census::{CensusReport, TriangleType, WedgeType};
//! use triadic::graph::Digraph;
//!
//! // 1 -> 2 -> 3 and 1 -> 3: one transitive triangle
//! let g = Digraph::from_pairs([(1, 2), (2, 3), (1, 3)]);
//! let report = CensusReport::exact(&g);
//! assert_eq!(report.triangle_counts[TriangleType::Trans], 1);
//! assert_eq!(report.closures.get(WedgeType::Path, TriangleType::Trans), 1.0);
//! assert_eq!(report.transitivity, Some(1.0));
//! ```

pub mod census;
pub mod chart;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod null;
pub mod sampling;

pub use error::{Error, Result};
