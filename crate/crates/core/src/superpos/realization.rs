//! Points of geometric realizations in exact barycentric coordinates.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::dk::MapSpace;
use crate::error::{Error, Result};
use crate::sset::{Simplex, SimplicialMap, SimplicialSet};

/// `(z, u)` with `u` nondegenerate of degree `n` and `z` in the open simplex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RealizationPoint {
    pub dim: usize,
    pub simplex: usize,
    pub coords: Vec<BigRational>,
}

impl RealizationPoint {
    pub fn new(set: &SimplicialSet, dim: usize, simplex: usize, coords: Vec<BigRational>) -> Result<Self> {
        if simplex >= set.count(dim) {
            return Err(Error::InvalidArgument(format!("no nondegenerate {dim}-simplex {simplex}")));
        }
        if coords.len() != dim + 1 || coords.iter().any(|c| !c.is_positive()) || coords.iter().sum::<BigRational>() != BigRational::one() {
            return Err(Error::InvalidArgument("coordinates must be positive and sum to 1".into()));
        }
        Ok(RealizationPoint { dim, simplex, coords })
    }

    /// The point `z` of the simplex `s` (any simplex, any closed-simplex coordinates),
    /// moved to the open nondegenerate simplex that carries it.
    pub fn normal_form(set: &SimplicialSet, s: &Simplex, coords: &[BigRational]) -> Result<Self> {
        if coords.len() != s.dim() + 1 || coords.iter().any(Signed::is_negative) || coords.iter().sum::<BigRational>() != BigRational::one() {
            return Err(Error::InvalidArgument("coordinates must be nonnegative and sum to 1".into()));
        }
        let support: Vec<usize> = (0..coords.len()).filter(|&i| !coords[i].is_zero()).collect();
        let face = set.apply(s, &support);
        let z: Vec<&BigRational> = support.iter().map(|&i| &coords[i]).collect();
        let m = face.base_dim();
        let mut pushed = vec![BigRational::zero(); m + 1];
        for (i, &j) in face.surj.iter().enumerate() {
            pushed[j] += z[i];
        }
        Ok(RealizationPoint { dim: m, simplex: face.base, coords: pushed })
    }

    pub fn describe(&self, set: &SimplicialSet) -> String {
        let z: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        format!("({}; {})", set.label(self.dim, self.simplex), z.join(", "))
    }
}

impl fmt::Display for RealizationPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}:{}]({})", self.dim, self.simplex, z.join(", "))
    }
}

/// A formal integer combination of points, sorted and without zero terms.
pub type PointCombination = Vec<(BigInt, RealizationPoint)>;

/// `P̃(t)(⟨x⟩)`: apply `t` to the carrier of `x` and push each simplex of the result through `z`.
pub fn realization_eval(space: &MapSpace, t: &[BigInt], x: &RealizationPoint) -> Result<PointCombination> {
    if x.dim > space.source().top() || x.simplex >= space.source().count(x.dim) {
        return Err(Error::InvalidArgument("point outside the source".into()));
    }
    let target = space.target();
    let mut sum: BTreeMap<RealizationPoint, BigInt> = BTreeMap::new();
    for (k, c) in space.block(x.dim, x.simplex).zip(&t[space.block(x.dim, x.simplex)]) {
        if c.is_zero() {
            continue;
        }
        let v = &space.target_index(x.dim).simplices[k - space.block(x.dim, x.simplex).start];
        *sum.entry(RealizationPoint::normal_form(target, v, &x.coords)?).or_insert_with(BigInt::zero) += c;
    }
    Ok(sum.into_iter().filter(|(_, c)| !c.is_zero()).map(|(p, c)| (c, p)).collect())
}

/// `|s|(x)`.
pub fn map_point(s: &SimplicialMap, x: &RealizationPoint) -> Result<RealizationPoint> {
    RealizationPoint::normal_form(s.target(), s.image(x.dim, x.simplex), &x.coords)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::sset::{enumerate_maps, polygon, standard_simplex};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn midpoint_replay() {
        let u = Arc::new(standard_simplex(1));
        let v = Arc::new(polygon(3).unwrap());
        let space = MapSpace::new(&u, &v).unwrap();
        let mid = RealizationPoint::new(&u, 1, 0, vec![q(1, 2), q(1, 2)]).unwrap();
        for s in enumerate_maps(&u, &v).unwrap() {
            let r = realization_eval(&space, &space.of_map(&s), &mid).unwrap();
            assert_eq!(r, vec![(BigInt::one(), map_point(&s, &mid).unwrap())]);
            if !s.image(1, 0).is_nondegenerate() {
                assert_eq!(r[0].1.dim, 0);
                assert_eq!(r[0].1.coords, vec![BigRational::one()]);
            }
        }
    }

    #[test]
    fn vertices_and_additivity() {
        let u = Arc::new(standard_simplex(1));
        let v = Arc::new(polygon(3).unwrap());
        let space = MapSpace::new(&u, &v).unwrap();
        let maps = enumerate_maps(&u, &v).unwrap();
        let p = RealizationPoint::new(&u, 0, 1, vec![BigRational::one()]).unwrap();
        let r = realization_eval(&space, &space.of_map(&maps[2]), &p).unwrap();
        assert_eq!(r[0].1.simplex, maps[2].image(0, 1).base);
        let x = RealizationPoint::new(&u, 1, 0, vec![q(1, 3), q(2, 3)]).unwrap();
        let (a, b) = (space.of_map(&maps[0]), space.of_map(&maps[4]));
        let sum: Vec<BigInt> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let mut both = realization_eval(&space, &a, &x).unwrap();
        both.extend(realization_eval(&space, &b, &x).unwrap());
        let mut merged: BTreeMap<RealizationPoint, BigInt> = BTreeMap::new();
        for (c, p) in both {
            *merged.entry(p).or_insert_with(BigInt::zero) += c;
        }
        let merged: PointCombination = merged.into_iter().filter(|(_, c)| !c.is_zero()).map(|(p, c)| (c, p)).collect();
        assert_eq!(realization_eval(&space, &sum, &x).unwrap(), merged);
    }

    #[test]
    fn boundary_points_move_to_faces() {
        let d = standard_simplex(2);
        let s = Simplex::nondegenerate(2, 0);
        let p = RealizationPoint::normal_form(&d, &s, &[q(1, 2), BigRational::zero(), q(1, 2)]).unwrap();
        assert_eq!((p.dim, d.label(1, p.simplex)), (1, "02"));
        assert!(RealizationPoint::new(&d, 1, 0, vec![q(1, 2), q(1, 3)]).is_err());
    }
}
