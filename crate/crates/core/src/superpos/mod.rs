//! Superposition, the section `K`, the cocartesian square, realization points and
//! factoring invariants through the main invariant.

pub mod cocartesian;
pub mod extension;
pub mod factor;
pub mod qlattice;
pub mod realization;
pub mod section;
pub mod superposition;

pub use cocartesian::{cocartesian_check, cocartesian_union_check, square, CocartesianReport, Square};
pub use extension::{extend, extend_assignment, restrict, Assignment};
pub use factor::{factor_through_main, FactorDecision};
pub use qlattice::{is_embedded, q_lattice, QLattice};
pub use realization::{map_point, realization_eval, PointCombination, RealizationPoint};
pub use section::{section_k, verify_lemma_9_1, Lemma91Report, SectionK};
pub use superposition::{superposition, superposition_matrix, MapIndex};
