//! Base change of chain-homotopy classes to the field `ℤ/p`.

use num_bigint::BigInt;

use super::classes::{class_group, HomotopyClassGroup};
use super::complex::ChainComplex;
use crate::ab::modp::{is_prime, FpMatrix};
use crate::ab::{AbHom, FGAbGroup, IntMatrix};
use crate::error::{Error, Result};

/// `[C⊗ℤ/p, D⊗ℤ/p]` with the map `I: [C, D] → [C⊗ℤ/p, D⊗ℤ/p]`.
#[derive(Clone, Debug)]
pub struct BaseChange {
    pub p: u64,
    pub classes: HomotopyClassGroup,
    /// `(ℤ/p)^dimension`.
    pub target: FGAbGroup,
    pub dimension: usize,
    pub map: AbHom,
    /// Dimension of `ℤ/p ⊗ [C, D]`.
    pub source_dimension: usize,
    /// `I^(K)` on `ℤ/p ⊗ [C, D]` is injective.
    pub injective: bool,
    pub surjective: bool,
    /// A left inverse of `I^(K)` onto generator coordinates, when injective.
    pub left_inverse: Option<FpMatrix>,
}

fn independent_extension(p: u64, start: &[Vec<u64>], candidates: &[Vec<u64>], rows: usize) -> Vec<Vec<u64>> {
    let mut current: Vec<Vec<u64>> = start.to_vec();
    let mut out = Vec::new();
    let mut r = FpMatrix::from_columns(p, rows, &current).rank();
    for c in candidates {
        current.push(c.clone());
        let r2 = FpMatrix::from_columns(p, rows, &current).rank();
        if r2 > r {
            r = r2;
            out.push(c.clone());
        } else {
            current.pop();
        }
    }
    out
}

fn in_span(p: u64, rows: usize, span: &[Vec<u64>], v: &[u64]) -> bool {
    let m = FpMatrix::from_columns(p, rows, span);
    m.solve(v).is_some()
}

pub fn base_change_classes(c: &ChainComplex, d: &ChainComplex, p: u64) -> Result<BaseChange> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let classes = class_group(c, d)?;
    let n = classes.flat_len();
    let phi = FpMatrix::from_int(classes.chain_condition(), p);
    let psi = FpMatrix::from_int(classes.null_homotopic(), p);
    let cycles_p = phi.kernel();
    let (_, pivots) = psi.rref();
    let bounds: Vec<Vec<u64>> = pivots.iter().map(|&j| psi.column(j)).collect();
    let complement = independent_extension(p, &bounds, &cycles_p, n);
    let dimension = complement.len();
    let mut adapted = bounds.clone();
    adapted.extend(complement.iter().cloned());
    let adapted = FpMatrix::from_columns(p, n, &adapted);

    let g = classes.group().ngens();
    let mut cols = Vec::with_capacity(g);
    for j in 0..g {
        let z = FpMatrix::from_int(&IntMatrix::from_columns(n, &[classes.cycle_basis().column(j)]), p).column(0);
        let x = adapted.solve(&z).ok_or_else(|| Error::InvalidChainMap("reduced chain map is not a cycle".into()))?;
        cols.push(x[bounds.len()..].to_vec());
    }
    let image = FpMatrix::from_columns(p, dimension, &cols);
    let target = FGAbGroup::from_orders(&vec![p; dimension]);
    let map = AbHom::new(classes.group().clone(), target.clone(), image.to_int())?;

    let rel_p = FpMatrix::from_int(classes.group().relations(), p);
    let source_dimension = g - rel_p.rank();
    let image_rank = image.rank();
    let injective = image_rank == source_dimension;
    let surjective = image_rank == dimension;

    let left_inverse = if injective {
        let rels: Vec<Vec<u64>> = (0..rel_p.cols()).map(|j| rel_p.column(j)).collect();
        let units: Vec<Vec<u64>> = (0..g).map(|i| (0..g).map(|k| u64::from(i == k)).collect()).collect();
        let q = independent_extension(p, &rels, &units, g);
        let qm = FpMatrix::from_columns(p, g, &q);
        let a = image.mul(&qm);
        // rows l_i with l_i · a = e_i
        let at = transpose(&a);
        let mut rows = Vec::new();
        for i in 0..q.len() {
            let e: Vec<u64> = (0..q.len()).map(|k| u64::from(i == k)).collect();
            rows.push(at.solve(&e).ok_or_else(|| Error::InvalidChainMap("no left inverse".into()))?);
        }
        let l = transpose(&FpMatrix::from_columns(p, dimension, &rows));
        let r = qm.mul(&l);
        let ok = (0..g).all(|j| {
            let back = r.mul_vec(&image.column(j));
            let diff: Vec<u64> = back.iter().enumerate().map(|(k, &b)| (b + p - u64::from(k == j)) % p).collect();
            in_span(p, g, &rels, &diff)
        });
        if !ok {
            return Err(Error::InvalidChainMap("left inverse check failed".into()));
        }
        Some(r)
    } else {
        None
    };
    Ok(BaseChange { p, classes, target, dimension, map, source_dimension, injective, surjective, left_inverse })
}

fn transpose(m: &FpMatrix) -> FpMatrix {
    let mut t = FpMatrix::zeros(m.prime(), m.cols(), m.rows());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            t.set(c, r, m.get(r, c));
        }
    }
    t
}

impl BaseChange {
    /// `I` applied to a class, in coordinates of `(ℤ/p)^dimension`.
    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.map.apply(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dk::normalized_chains;
    use crate::sset::{nerve, polygon, standard_simplex, FiniteGroup};

    #[test]
    fn point() {
        let c = normalized_chains(&standard_simplex(0));
        let b = base_change_classes(&c, &c, 2).unwrap();
        assert_eq!(b.dimension, 1);
        assert!(b.surjective && b.injective);
    }

    #[test]
    fn triangle_mod_three() {
        let c = normalized_chains(&polygon(3).unwrap());
        let b = base_change_classes(&c, &c, 3).unwrap();
        assert_eq!(b.dimension, 2);
        assert!(b.injective);
        assert!(b.left_inverse.is_some());
    }

    #[test]
    fn triangle_into_nerve_mod_two() {
        let c = normalized_chains(&polygon(3).unwrap());
        let d = normalized_chains(&nerve(&FiniteGroup::cyclic(2), 3).unwrap());
        let b = base_change_classes(&c, &d, 2).unwrap();
        assert_eq!(b.source_dimension, 2);
        assert!(b.injective);
    }

    #[test]
    fn composite_modulus() {
        let c = normalized_chains(&standard_simplex(0));
        assert!(matches!(base_change_classes(&c, &c, 4), Err(Error::NotPrime(4))));
    }
}
