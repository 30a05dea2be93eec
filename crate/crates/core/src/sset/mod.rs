//! Compact and truncated simplicial sets, maps between them, and homotopy classes.

pub mod build;
pub mod enumerate;
pub mod filler;
pub mod group;
pub mod io;
pub mod map;
pub mod product;
pub mod set;
pub mod word;

pub use build::{boundary, disjoint_union, e_nerve, nerve, polygon, standard_simplex};
pub use enumerate::{classes_of, count_maps, enumerate_maps, find_isomorphism, homotopy_classes, HomotopyClasses};
pub use filler::kan_filler;
pub use group::FiniteGroup;
pub use io::{assignment_to_map, named_set, parse_simplex, MapJson, SetJson, WordRef};
pub use map::{cylinder_end, nerve_quotient, pairing, projections, union_with_inclusions, SimplicialMap, SimplicialSubset};
pub use product::{product, product_truncated};
pub use set::{Model, Simplex, SimplexIndex, SimplicialSet};
pub use word::DegeneracyWord;
