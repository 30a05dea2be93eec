//! Exact arithmetic of finitely generated abelian groups and integer matrices.

pub mod extend;
pub mod group;
pub mod hom;
pub mod lattice;
pub mod matrix;
pub mod modp;
pub mod serial;
pub mod snf;
pub mod subgroup;

pub use extend::{extend_hom, Extension, Witness};
pub use group::{solve_in_group, AbHom, Element, FGAbGroup};
pub use hom::{ext_group, hom_group, ExtGroup, HomGroup};
pub use lattice::{column_basis, hermite_rows, kernel, LinearSolver};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithForm};
pub use subgroup::Subgroup;
