//! Chain complexes, chain-homotopy classes and the Dold–Kan comparison.

pub mod basechange;
pub mod classes;
pub mod complex;
pub mod doldkan;
pub mod uct;

pub use basechange::{base_change_classes, BaseChange};
pub use classes::{class_group, main_invariant, HomotopyClassGroup};
pub use complex::{homology, induced_chain_map, normalized_chains, ChainComplex, ChainMap, ComplexSummary, Homology};
pub use doldkan::{dold_kan_maps, DoldKan, MapSpace};
pub use uct::{uct_sequence, UctReport, UctSequence};
