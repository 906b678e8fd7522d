//! Construction, verification and classification of generalized pentagonal
//! geometries PENT(k, r, w).

pub mod construct;
pub mod coverage;
pub mod designs;
pub mod error;
pub mod format;
pub mod geometry;
pub mod graphs;
pub mod hillclimb;
pub mod params;
pub mod pent;

/// Point identifier; geometries always use labels `0..v`.
pub type Point = u32;

pub use coverage::{pair_coverage, PairCoverage};
pub use error::{Error, Result};
pub use format::{parse_pent_file, write_pent_file, BaseBlockFile};
pub use geometry::{develop, Geometry, GeometryJson, Line};
pub use graphs::{Girth, Graph, GraphReport};
pub use params::{derive_params, is_admissible, PentParams};
