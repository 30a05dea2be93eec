//! Free abelian groups on finite sets, `L(X, Y)`, `L_K(X, Y)` and straight invariants.

pub mod lgroup;
pub mod sets;
pub mod table;

pub use lgroup::{base_change, inverse_decomposition, Coefficients, KLGroup, LElement, LGroup, TensorElement};
pub use sets::{canonical_hom, hadamard, partial_hom, FiniteMap, FreeOnSet, PartialMap};
pub use table::{
    induced_invariant, is_k_straight, is_module_over, is_straight, k_straight_equiv, transfer_matrix, InvariantTable,
    Straightness,
};
