use num_bigint::BigInt;

use super::group::{solve_in_group, AbHom, Element, FGAbGroup};
use super::lattice::{column_basis, kernel};
use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Subgroup of a presented group, given by generating elements.
#[derive(Clone, Debug)]
pub struct Subgroup {
    ambient: FGAbGroup,
    generators: Vec<Element>,
}

impl Subgroup {
    pub fn span(ambient: FGAbGroup, generators: Vec<Element>) -> Result<Self> {
        if generators.iter().any(|g| g.len() != ambient.ngens()) {
            return Err(Error::Dimension("subgroup generator has the wrong length".into()));
        }
        Ok(Subgroup { ambient, generators })
    }

    pub fn zero(ambient: FGAbGroup) -> Self {
        Subgroup { ambient, generators: vec![] }
    }

    pub fn full(ambient: FGAbGroup) -> Self {
        let generators = (0..ambient.ngens()).map(|i| ambient.generator(i)).collect();
        Subgroup { ambient, generators }
    }

    pub fn kernel(hom: &AbHom) -> Self {
        let a = hom.source().ngens();
        let system = hom
            .matrix()
            .hstack(hom.target().relations())
            .expect("hom matrix rows match target generators");
        let k = kernel(&system);
        let generators = (0..k.cols()).map(|j| k.column(j)[..a].to_vec()).collect();
        Subgroup { ambient: hom.source().clone(), generators }
    }

    pub fn image(hom: &AbHom) -> Self {
        Subgroup { ambient: hom.target().clone(), generators: hom.matrix().columns() }
    }

    pub fn ambient(&self) -> &FGAbGroup {
        &self.ambient
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn generator_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.ambient.ngens(), &self.generators)
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        solve_in_group(&self.ambient, &self.generator_matrix(), x).is_some()
    }

    /// Coefficients expressing `x` through the generators, if `x` lies in the subgroup.
    pub fn coefficients(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        solve_in_group(&self.ambient, &self.generator_matrix(), x)
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(|g| self.ambient.is_zero(g))
    }

    fn saturated_basis(&self) -> IntMatrix {
        let all = self
            .generator_matrix()
            .hstack(self.ambient.relations())
            .expect("generator matrix rows match ambient");
        column_basis(&all)
    }

    fn check_ambient(&self, other: &Subgroup) -> Result<()> {
        if self.ambient.same_presentation(&other.ambient) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn equals(&self, other: &Subgroup) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.saturated_basis() == other.saturated_basis())
    }

    pub fn contains_subgroup(&self, other: &Subgroup) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.generators.iter().all(|g| self.contains(g)))
    }

    pub fn sum(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_ambient(other)?;
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        Ok(Subgroup { ambient: self.ambient.clone(), generators })
    }

    /// The subgroup as a presented group, with its inclusion into the ambient group.
    pub fn as_group(&self) -> (FGAbGroup, AbHom) {
        let k = self.generators.len();
        let system = self
            .generator_matrix()
            .hstack(self.ambient.relations())
            .expect("generator matrix rows match ambient");
        let ker = kernel(&system);
        let rel = ker.select_rows(0..k);
        let group = FGAbGroup::new(k, rel).expect("relation rows equal generator count");
        let inclusion = AbHom::new(group.clone(), self.ambient.clone(), self.generator_matrix())
            .expect("inclusion is well defined");
        (group, inclusion)
    }

    /// `ambient / self` on the same generators, with the projection.
    pub fn quotient(&self) -> (FGAbGroup, AbHom) {
        let rel = self
            .ambient
            .relations()
            .hstack(&self.generator_matrix())
            .expect("generator matrix rows match ambient");
        let q = FGAbGroup::new(self.ambient.ngens(), rel).expect("quotient presentation");
        let proj = AbHom::new(self.ambient.clone(), q.clone(), IntMatrix::identity(self.ambient.ngens()))
            .expect("projection is well defined");
        (q, proj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ab::matrix::vec_of;

    #[test]
    fn empty_span_is_zero() {
        let s = Subgroup::span(FGAbGroup::free(2), vec![]).unwrap();
        assert!(s.is_trivial());
        assert!(s.equals(&Subgroup::zero(FGAbGroup::free(2))).unwrap());
    }

    #[test]
    fn kernel_of_doubling_on_z_is_zero() {
        let z = FGAbGroup::free(1);
        let twice = AbHom::new(z.clone(), z, IntMatrix::from_rows(&[vec![2]])).unwrap();
        assert!(Subgroup::kernel(&twice).is_trivial());
    }

    #[test]
    fn plane_lattices_differ() {
        let z2 = FGAbGroup::free(2);
        let a = Subgroup::span(z2.clone(), vec![vec_of(&[2, 0]), vec_of(&[0, 3])]).unwrap();
        let b = Subgroup::span(z2, vec![vec_of(&[1, 0]), vec_of(&[0, 3])]).unwrap();
        assert!(!a.equals(&b).unwrap());
        assert!(b.contains_subgroup(&a).unwrap());
    }

    #[test]
    fn mismatched_ambients_are_errors() {
        let a = Subgroup::zero(FGAbGroup::free(2));
        let b = Subgroup::zero(FGAbGroup::cyclic(2));
        assert_eq!(a.equals(&b), Err(Error::AmbientMismatch));
    }

    #[test]
    fn torsion_kernel() {
        // Z -> Z/4, 1 -> 2 has kernel 2Z
        let hom = AbHom::new(FGAbGroup::free(1), FGAbGroup::cyclic(4), IntMatrix::from_rows(&[vec![2]])).unwrap();
        let k = Subgroup::kernel(&hom);
        let expected = Subgroup::span(FGAbGroup::free(1), vec![vec_of(&[2])]).unwrap();
        assert!(k.equals(&expected).unwrap());
        let (g, _) = Subgroup::image(&hom).as_group();
        assert_eq!(g.describe(), "Z/2");
    }
}
