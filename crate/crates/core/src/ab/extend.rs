//! Deciding whether prescribed values on finitely many elements extend to a homomorphism.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::group::{AbHom, Element, FGAbGroup};
use super::matrix::{vec_add, vec_scale, zero_vec, IntMatrix};
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// Certificate that no extension exists: in the source group
/// `sum_k coefficients[k] * a_k = divisor * quotient`, while
/// `image = sum_k coefficients[k] * m_k` is not divisible by `divisor` in the target
/// (for `divisor = 0`: `image` is nonzero).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(with = "super::serial::decimal_vec")]
    pub coefficients: Vec<BigInt>,
    #[serde(with = "super::serial::decimal")]
    pub divisor: BigInt,
    #[serde(with = "super::serial::decimal_vec")]
    pub quotient: Element,
    #[serde(with = "super::serial::decimal_vec")]
    pub image: Element,
}

impl Witness {
    /// Re-derives the certificate from scratch against the original problem.
    pub fn verify(&self, source: &FGAbGroup, constraints: &[(Element, Element)], target: &FGAbGroup) -> bool {
        if self.coefficients.len() != constraints.len() {
            return false;
        }
        let mut lhs = zero_vec(source.ngens());
        let mut img = zero_vec(target.ngens());
        for (n, (a, m)) in self.coefficients.iter().zip(constraints) {
            lhs = vec_add(&lhs, &vec_scale(a, n));
            img = vec_add(&img, &vec_scale(m, n));
        }
        let rhs = vec_scale(&self.quotient, &self.divisor);
        source.elem_eq(&lhs, &rhs) && target.elem_eq(&img, &self.image) && target.divide(&self.divisor, &img).is_none()
    }
}

#[derive(Clone, Debug)]
pub enum Extension {
    Found(AbHom),
    Refused(Witness),
}

impl Extension {
    pub fn hom(&self) -> Option<&AbHom> {
        match self {
            Extension::Found(h) => Some(h),
            Extension::Refused(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Extension::Found(_) => None,
            Extension::Refused(w) => Some(w),
        }
    }

    pub fn exists(&self) -> bool {
        matches!(self, Extension::Found(_))
    }
}

/// Finds `F: source -> target` with `F(a_k) = m_k` for every constraint `(a_k, m_k)`,
/// or a witness that none exists.
///
/// The constraint elements and the source relations are stacked as rows of one
/// matrix; in its Smith basis the problem splits into independent conditions
/// `d_i x_i = (U mu)_i` in the target, each decided by divisibility.
pub fn extend_hom(source: &FGAbGroup, constraints: &[(Element, Element)], target: &FGAbGroup) -> Result<Extension> {
    let n = source.ngens();
    for (a, m) in constraints {
        if a.len() != n || m.len() != target.ngens() {
            return Err(Error::Dimension("constraint has the wrong number of coordinates".into()));
        }
    }
    let c = constraints.len();
    let rel = source.relations();
    let rows: Vec<Vec<BigInt>> = constraints
        .iter()
        .map(|(a, _)| a.clone())
        .chain((0..rel.cols()).map(|j| rel.column(j)))
        .collect();
    let t = IntMatrix::try_from_big_rows(rows, n)?;
    let f = smith_normal_form(&t);

    let zero_m = zero_vec(target.ngens());
    let values: Vec<&Element> =
        constraints.iter().map(|(_, m)| m).chain(std::iter::repeat_n(&zero_m, rel.cols())).collect();

    let mut psi: Vec<Element> = vec![zero_m.clone(); n];
    for i in 0..t.rows() {
        let mut rhs = zero_m.clone();
        for (k, v) in values.iter().enumerate() {
            let coeff = &f.u[(i, k)];
            if !coeff.is_zero() {
                rhs = vec_add(&rhs, &vec_scale(v, coeff));
            }
        }
        let d = if i < f.rank { f.s[(i, i)].clone() } else { BigInt::zero() };
        match target.divide(&d, &rhs) {
            Some(x) => {
                if i < n {
                    psi[i] = x;
                }
            }
            None => {
                let quotient = if i < n { f.v_inv.row(i).to_vec() } else { zero_vec(n) };
                let witness = Witness {
                    coefficients: (0..c).map(|k| f.u[(i, k)].clone()).collect(),
                    divisor: d,
                    quotient,
                    image: target.reduce(&rhs),
                };
                debug_assert!(witness.verify(source, constraints, target));
                return Ok(Extension::Refused(witness));
            }
        }
    }
    let mut columns = vec![zero_m.clone(); n];
    for (j, col) in columns.iter_mut().enumerate() {
        for (i, p) in psi.iter().enumerate() {
            let v = &f.v[(j, i)];
            if !v.is_zero() {
                *col = vec_add(col, &vec_scale(p, v));
            }
        }
        *col = target.reduce(col);
    }
    let hom = AbHom::new(source.clone(), target.clone(), IntMatrix::from_columns(target.ngens(), &columns))?;
    debug_assert!(constraints.iter().all(|(a, m)| target.elem_eq(&hom.apply(a), m)));
    Ok(Extension::Found(hom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ab::matrix::vec_of;

    #[test]
    fn no_constraints_gives_zero() {
        let a = FGAbGroup::from_orders(&[0, 3]);
        let ext = extend_hom(&a, &[], &FGAbGroup::cyclic(2)).unwrap();
        assert!(ext.hom().unwrap().is_zero());
    }

    #[test]
    fn two_cannot_go_to_one_mod_two() {
        let z = FGAbGroup::free(1);
        let z2 = FGAbGroup::cyclic(2);
        let cons = vec![(vec_of(&[2]), vec_of(&[1]))];
        let ext = extend_hom(&z, &cons, &z2).unwrap();
        let w = ext.witness().expect("refused");
        assert!(w.verify(&z, &cons, &z2));
    }

    #[test]
    fn projection_onto_torsion_summand() {
        let a = FGAbGroup::from_orders(&[0, 2]);
        let z2 = FGAbGroup::cyclic(2);
        let cons = vec![(vec_of(&[1, 0]), vec_of(&[0])), (vec_of(&[1, 1]), vec_of(&[1]))];
        let ext = extend_hom(&a, &cons, &z2).unwrap();
        let h = ext.hom().expect("exists");
        assert!(z2.elem_eq(&h.apply(&vec_of(&[0, 1])), &vec_of(&[1])));
        assert!(z2.elem_eq(&h.apply(&vec_of(&[1, 0])), &vec_of(&[0])));
    }

    #[test]
    fn contradictory_values_on_one_element() {
        let z = FGAbGroup::free(1);
        let cons = vec![(vec_of(&[1]), vec_of(&[1])), (vec_of(&[1]), vec_of(&[2]))];
        let ext = extend_hom(&z, &cons, &z).unwrap();
        assert!(ext.witness().unwrap().verify(&z, &cons, &z));
    }

    #[test]
    fn torsion_source_into_free_target() {
        let z2 = FGAbGroup::cyclic(2);
        let z = FGAbGroup::free(1);
        let cons = vec![(vec_of(&[1]), vec_of(&[1]))];
        let ext = extend_hom(&z2, &cons, &z).unwrap();
        let w = ext.witness().unwrap();
        assert!(w.verify(&z2, &cons, &z));
    }
}
