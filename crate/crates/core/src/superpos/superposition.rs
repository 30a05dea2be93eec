//! The superposition `Z: ⟨Si(U, V)⟩₀ → Si(U, ⟨V⟩₀)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::ab::IntMatrix;
use crate::dk::MapSpace;
use crate::error::{Error, Result};
use crate::sset::{Simplex, SimplicialMap};

/// Positions of maps in a listing, keyed by their images.
#[derive(Clone, Debug, Default)]
pub struct MapIndex {
    position: HashMap<Vec<Vec<Simplex>>, usize>,
}

impl MapIndex {
    pub fn new(maps: &[SimplicialMap]) -> Self {
        MapIndex { position: maps.iter().enumerate().map(|(i, m)| (m.images().to_vec(), i)).collect() }
    }

    pub fn get(&self, m: &SimplicialMap) -> Option<usize> {
        self.position.get(m.images()).copied()
    }
}

/// `Σ nᵢ⟨sᵢ⟩ ↦ Σ nᵢ (c ∘ sᵢ)`, for coefficients summing to 0.
pub fn superposition(space: &MapSpace, w: &[(BigInt, SimplicialMap)]) -> Result<Vec<BigInt>> {
    let total: BigInt = w.iter().map(|(n, _)| n).sum();
    if !total.is_zero() {
        return Err(Error::InvalidArgument(format!("coefficients sum to {total}, not 0")));
    }
    let mut out = vec![BigInt::zero(); space.total()];
    for (n, s) in w {
        if **s.source() != **space.source() || **s.target() != **space.target() {
            return Err(Error::InvalidSimplicialMap("map outside Si(U, V)".into()));
        }
        for (o, c) in out.iter_mut().zip(space.of_map(s)) {
            *o += n * c;
        }
    }
    debug_assert!(space.augmentation(&out).iter().all(Zero::is_zero));
    Ok(out)
}

/// Columns `c ∘ sᵢ` in full coordinates: the matrix of `(c_#^U)⁺`.
pub fn superposition_matrix(space: &MapSpace, maps: &[SimplicialMap]) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = maps.iter().map(|s| space.of_map(s)).collect();
    IntMatrix::from_columns(space.total(), &cols)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::ab::lattice::rank;
    use crate::sset::{e_nerve, enumerate_maps, nerve, polygon, standard_simplex, FiniteGroup};

    fn differences(maps: &[SimplicialMap]) -> Vec<Vec<(BigInt, SimplicialMap)>> {
        (1..maps.len())
            .map(|i| vec![(BigInt::from(1), maps[i].clone()), (BigInt::from(-1), maps[0].clone())])
            .collect()
    }

    #[test]
    fn cancelling_terms_give_zero() {
        let u = Arc::new(polygon(3).unwrap());
        let v = Arc::new(nerve(&FiniteGroup::cyclic(2), 2).unwrap());
        let space = MapSpace::new(&u, &v).unwrap();
        let s = enumerate_maps(&u, &v).unwrap().remove(3);
        let z = superposition(&space, &[(BigInt::from(1), s.clone()), (BigInt::from(-1), s.clone())]).unwrap();
        assert!(z.iter().all(Zero::is_zero));
        assert!(superposition(&space, &[(BigInt::from(1), s)]).is_err());
    }

    #[test]
    fn triangle_into_bz2_hits_the_zero_sum_part() {
        let u = Arc::new(polygon(3).unwrap());
        let v = Arc::new(nerve(&FiniteGroup::cyclic(2), 2).unwrap());
        let space = MapSpace::new(&u, &v).unwrap();
        let maps = enumerate_maps(&u, &v).unwrap();
        assert_eq!(maps.len(), 8);
        let cols: Vec<Vec<BigInt>> = differences(&maps).iter().map(|w| superposition(&space, w).unwrap()).collect();
        let image = IntMatrix::from_columns(space.total(), &cols);
        // ⟨Si⟩₀ has rank 7 but each edge is sent independently, so Z has a kernel of rank 4
        assert_eq!(rank(&image), 3);
        assert!(crate::ab::lattice::same_column_lattice(&image, &space.zero_sum_basis()));
    }

    #[test]
    fn simplices_give_isomorphisms() {
        for g in [2, 3] {
            let w = Arc::new(e_nerve(&FiniteGroup::cyclic(g), 3).unwrap());
            for n in 0..=2 {
                let u = Arc::new(standard_simplex(n));
                let space = MapSpace::new(&u, &w).unwrap();
                let maps = enumerate_maps(&u, &w).unwrap();
                let cols: Vec<Vec<BigInt>> = differences(&maps).iter().map(|x| superposition(&space, x).unwrap()).collect();
                let image = IntMatrix::from_columns(space.total(), &cols);
                assert_eq!(rank(&image), maps.len() - 1);
                assert!(crate::ab::lattice::same_column_lattice(&image, &space.zero_sum_basis()));
            }
        }
    }
}
