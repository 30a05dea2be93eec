//! The section `K = k⁺(I)` of the superposition.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::extension::extend;
use super::qlattice::{q_lattice, QLattice};
use super::superposition::{superposition_matrix, MapIndex};
use crate::ab::lattice::rank;
use crate::ab::{IntMatrix, LinearSolver};
use crate::dk::MapSpace;
use crate::error::{Error, Result};
use crate::sset::{enumerate_maps, SimplicialMap, SimplicialSet};

/// `K: Si(U, ⟨W⟩₀) → ⟨Si(U, W)⟩₀` on a lattice basis of the source.
#[derive(Clone, Debug)]
pub struct SectionK {
    pub space: MapSpace,
    pub lattice: QLattice,
    /// `Si(U, W)` in enumeration order.
    pub maps: Vec<SimplicialMap>,
    /// Columns: a basis of `Si(U, ⟨W⟩₀)` in full coordinates.
    pub zero_basis: IntMatrix,
    /// Column `j`: `K` of basis vector `j`, over `maps`.
    pub matrix: IntMatrix,
    /// `(c_#^U)⁺` over `maps`.
    pub z_matrix: IntMatrix,
}

pub fn section_k(u: &Arc<SimplicialSet>, w: &Arc<SimplicialSet>) -> Result<SectionK> {
    if !w.is_enerve() {
        return Err(Error::NotENerve);
    }
    let lattice = q_lattice(u)?;
    let space = MapSpace::new(u, w)?;
    let maps = enumerate_maps(u, w)?;
    let index = MapIndex::new(&maps);
    let zero_basis = space.zero_sum_basis();
    let mut matrix = IntMatrix::zeros(maps.len(), zero_basis.cols());
    for (i, a) in lattice.members().iter().enumerate() {
        let coeff = &lattice.identity()[i];
        // ⟨Si(∅, W)⟩₀ = 0
        if coeff.is_zero() || a.is_empty() {
            continue;
        }
        let (aset, j) = a.as_set();
        let space_a = MapSpace::new(&aset, w)?;
        let maps_a = enumerate_maps(&aset, w)?;
        let z_a = superposition_matrix(&space_a, &maps_a);
        if rank(&z_a) != maps_a.len() {
            return Err(Error::SingularPiece(format!("superposition on {} is not injective", lattice.name(i))));
        }
        let solver = LinearSolver::new(&z_a);
        let extended = maps_a
            .iter()
            .map(|x| {
                let t = extend(a, x, w)?;
                index.get(&t).ok_or_else(|| Error::InvalidSimplicialMap("extension missing from Si(U, W)".into()))
            })
            .collect::<Result<Vec<usize>>>()?;
        for col in 0..zero_basis.cols() {
            let s_a = space.restrict(&zero_basis.column(col), &j, &space_a)?;
            let y = solver
                .solve(&s_a)
                .ok_or_else(|| Error::SingularPiece(format!("superposition on {} is not surjective", lattice.name(i))))?;
            for (x, c) in y.iter().enumerate() {
                if !c.is_zero() {
                    matrix[(extended[x], col)] += coeff * c;
                }
            }
        }
    }
    let z_matrix = superposition_matrix(&space, &maps);
    Ok(SectionK { space, lattice, maps, zero_basis, matrix, z_matrix })
}

impl SectionK {
    /// `Z ∘ K` on the basis, in full coordinates.
    pub fn z_after_k(&self) -> Result<IntMatrix> {
        self.z_matrix.checked_mul(&self.matrix)
    }

    /// `K` of an arbitrary element of `Si(U, ⟨W⟩₀)` in full coordinates.
    pub fn apply(&self, t: &[BigInt]) -> Result<Vec<BigInt>> {
        let c = LinearSolver::new(&self.zero_basis)
            .solve(t)
            .ok_or_else(|| Error::InvalidArgument("element outside Si(U, ⟨W⟩₀)".into()))?;
        Ok(self.matrix.mul_vec(&c))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma91Report {
    pub holds: bool,
    pub z_after_k_is_identity: bool,
    pub lands_in_zero_sum: bool,
    pub rank: usize,
    pub maps: usize,
    pub members: usize,
    pub identity: Vec<String>,
}

pub fn verify_lemma_9_1(u: &Arc<SimplicialSet>, w: &Arc<SimplicialSet>) -> Result<Lemma91Report> {
    let k = section_k(u, w)?;
    let z_after_k_is_identity = k.z_after_k()? == k.zero_basis;
    let lands_in_zero_sum = (0..k.matrix.cols()).all(|j| k.matrix.column(j).iter().sum::<BigInt>().is_zero());
    Ok(Lemma91Report {
        holds: z_after_k_is_identity && lands_in_zero_sum,
        z_after_k_is_identity,
        lands_in_zero_sum,
        rank: k.zero_basis.cols(),
        maps: k.maps.len(),
        members: k.lattice.len(),
        identity: k.lattice.identity().iter().map(|c| c.to_string()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{boundary, e_nerve, nerve, standard_simplex, FiniteGroup};

    #[test]
    fn point_and_interval() {
        let w = Arc::new(e_nerve(&FiniteGroup::cyclic(2), 2).unwrap());
        let r = verify_lemma_9_1(&Arc::new(standard_simplex(0)), &w).unwrap();
        assert!(r.holds);
        assert_eq!(r.rank, 1);
        assert!(verify_lemma_9_1(&Arc::new(standard_simplex(1)), &w).unwrap().holds);
    }

    #[test]
    fn triangle_boundary_into_ez3() {
        let w = Arc::new(e_nerve(&FiniteGroup::cyclic(3), 2).unwrap());
        let r = verify_lemma_9_1(&Arc::new(boundary(2)), &w).unwrap();
        assert!(r.holds);
        assert_eq!(r.maps, 27);
        assert_eq!(r.identity[0], "1");
    }

    #[test]
    fn plain_nerves_are_refused() {
        let v = Arc::new(nerve(&FiniteGroup::cyclic(2), 2).unwrap());
        assert_eq!(section_k(&Arc::new(standard_simplex(1)), &v).unwrap_err(), Error::NotENerve);
    }
}
