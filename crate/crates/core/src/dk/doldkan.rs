//! Simplicial maps into free simplicial abelian groups, and the Dold–Kan comparison
//! with chain maps of normalized complexes.

use std::ops::Range;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::classes::{class_group, HomotopyClassGroup};
use super::complex::{normalized_chains, ChainMap};
use crate::ab::lattice::{kernel, rank, same_column_lattice, LinearSolver};
use crate::ab::{Element, IntMatrix};
use crate::error::{Error, Result};
use crate::sset::{SimplexIndex, SimplicialMap, SimplicialSet};

/// `Si(U, ⟨V⟩)`: a value in `ℤ[V_n]` (all simplices, degenerate included) for each
/// nondegenerate `n`-simplex of `U`, subject to the face relations.
#[derive(Clone, Debug)]
pub struct MapSpace {
    source: Arc<SimplicialSet>,
    target: Arc<SimplicialSet>,
    index: Vec<SimplexIndex>,
    offsets: Vec<Vec<usize>>,
    total: usize,
    relations: IntMatrix,
    basis: IntMatrix,
    solver: LinearSolver,
}

impl MapSpace {
    pub fn new(u: &Arc<SimplicialSet>, v: &Arc<SimplicialSet>) -> Result<Self> {
        if !u.is_compact() {
            return Err(Error::NotCompact);
        }
        let top = u.top();
        v.require_degree(top)?;
        let index: Vec<SimplexIndex> = (0..=top).map(|n| SimplexIndex::new(v, n)).collect::<Result<_>>()?;
        let mut offsets = Vec::new();
        let mut total = 0;
        for n in 0..=top {
            let mut lv = Vec::new();
            for _ in 0..u.count(n) {
                lv.push(total);
                total += index[n].len();
            }
            offsets.push(lv);
        }
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for n in 1..=top {
            for x in 0..u.count(n) {
                for (i, f) in u.nondeg_faces(n, x).iter().enumerate() {
                    // d_i t(u) = t(w) ∘ σ for d_i u = w ∘ σ
                    let mut eq = vec![vec![BigInt::zero(); total]; index[n - 1].len()];
                    for (k, s) in index[n].simplices.iter().enumerate() {
                        let r = index[n - 1].get(&v.face(s, i));
                        eq[r][offsets[n][x] + k] += BigInt::one();
                    }
                    let m = f.base_dim();
                    for (k, s) in index[m].simplices.iter().enumerate() {
                        let r = index[n - 1].get(&v.apply(s, &f.surj));
                        eq[r][offsets[m][f.base] + k] -= BigInt::one();
                    }
                    rows.extend(eq);
                }
            }
        }
        let relations = IntMatrix::try_from_big_rows(rows, total)?;
        let basis = kernel(&relations);
        let solver = LinearSolver::new(&basis);
        Ok(MapSpace { source: u.clone(), target: v.clone(), index, offsets, total, relations, basis, solver })
    }

    pub fn source(&self) -> &Arc<SimplicialSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SimplicialSet> {
        &self.target
    }

    /// Length of the coordinate vectors.
    pub fn total(&self) -> usize {
        self.total
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Columns: a lattice basis.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn block(&self, n: usize, x: usize) -> Range<usize> {
        let start = self.offsets[n][x];
        start..start + self.index[n].len()
    }

    pub fn target_index(&self, n: usize) -> &SimplexIndex {
        &self.index[n]
    }

    /// `c ∘ s`.
    pub fn of_map(&self, s: &SimplicialMap) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.total];
        for (n, lv) in s.images().iter().enumerate() {
            for (x, img) in lv.iter().enumerate() {
                out[self.offsets[n][x] + self.index[n].get(img)] = BigInt::one();
            }
        }
        out
    }

    pub fn coords(&self, t: &[BigInt]) -> Option<Vec<BigInt>> {
        self.solver.solve(t)
    }

    pub fn contains(&self, t: &[BigInt]) -> bool {
        t.len() == self.total && self.relations.mul_vec(t).iter().all(|x| x.is_zero())
    }

    /// Coefficient sum of `t(v)` for each vertex `v` of `U`.
    pub fn augmentation(&self, t: &[BigInt]) -> Vec<BigInt> {
        (0..self.source.count(0)).map(|x| t[self.block(0, x)].iter().sum()).collect()
    }

    /// Lattice basis of `Si(U, ⟨V⟩₀)`.
    pub fn zero_sum_basis(&self) -> IntMatrix {
        let mut rows = self.relations.to_rows();
        for x in 0..self.source.count(0) {
            let mut r = vec![BigInt::zero(); self.total];
            for k in self.block(0, x) {
                r[k] = BigInt::one();
            }
            rows.push(r);
        }
        kernel(&IntMatrix::try_from_big_rows(rows, self.total).expect("rows of the same length"))
    }

    /// The chain map `N U -> N V` keeping nondegenerate coordinates.
    pub fn to_chain_map(&self, t: &[BigInt]) -> Result<ChainMap> {
        let c = normalized_chains(&self.source);
        let d = normalized_chains(&self.target);
        let ms = (0..=self.source.top())
            .map(|n| {
                let mut m = IntMatrix::zeros(d.rank(n), c.rank(n));
                for x in 0..self.source.count(n) {
                    for (k, s) in self.index[n].simplices.iter().enumerate() {
                        let e = &t[self.offsets[n][x] + k];
                        if s.is_nondegenerate() && !e.is_zero() {
                            m[(s.base, x)] += e;
                        }
                    }
                }
                m
            })
            .collect();
        ChainMap::new(c, d, ms)
    }

    /// Restriction along `j: A -> U` into the map space `other` of `A`.
    pub fn restrict(&self, t: &[BigInt], j: &SimplicialMap, other: &MapSpace) -> Result<Vec<BigInt>> {
        if **j.target() != *self.source || **j.source() != *other.source || *other.target != *self.target {
            return Err(Error::InvalidSimplicialMap("restriction along a map with other ends".into()));
        }
        let mut out = vec![BigInt::zero(); other.total];
        for (n, lv) in j.images().iter().enumerate() {
            for (x, img) in lv.iter().enumerate() {
                if !img.is_nondegenerate() {
                    return Err(Error::InvalidSimplicialMap("restriction needs an inclusion".into()));
                }
                let src = self.block(n, img.base);
                let dst = other.block(n, x);
                out[dst].clone_from_slice(&t[src]);
            }
        }
        Ok(out)
    }

    /// Pushforward along `g: V -> V'` into the map space `other` of the same source.
    pub fn push_forward(&self, t: &[BigInt], g: &SimplicialMap, other: &MapSpace) -> Result<Vec<BigInt>> {
        if **g.source() != *self.target || **g.target() != *other.target || *other.source != *self.source {
            return Err(Error::InvalidSimplicialMap("pushforward along a map with other ends".into()));
        }
        let mut out = vec![BigInt::zero(); other.total];
        for n in 0..=self.source.top() {
            for x in 0..self.source.count(n) {
                for (k, s) in self.index[n].simplices.iter().enumerate() {
                    let e = &t[self.offsets[n][x] + k];
                    if !e.is_zero() {
                        out[other.offsets[n][x] + other.index[n].get(&g.apply(s))] += e;
                    }
                }
            }
        }
        Ok(out)
    }
}

/// `Si(U, ⟨V⟩)` together with its comparison `d` to chain maps and the class group `[N U, N V]`.
#[derive(Clone, Debug)]
pub struct DoldKan {
    pub space: MapSpace,
    pub classes: HomotopyClassGroup,
    /// Flattened chain maps `d(b)` of the basis vectors `b`.
    pub chain_images: IntMatrix,
    pub bijective: bool,
}

pub fn dold_kan_maps(u: &Arc<SimplicialSet>, v: &Arc<SimplicialSet>) -> Result<DoldKan> {
    let space = MapSpace::new(u, v)?;
    let classes = class_group(&normalized_chains(u), &normalized_chains(v))?;
    let cols = (0..space.rank())
        .map(|j| Ok(classes.flatten(&space.to_chain_map(&space.basis.column(j))?)))
        .collect::<Result<Vec<_>>>()?;
    let chain_images = IntMatrix::from_columns(classes.flat_len(), &cols);
    let bijective = rank(&chain_images) == space.rank()
        && space.rank() == classes.cycle_basis().cols()
        && same_column_lattice(&chain_images, classes.cycle_basis());
    Ok(DoldKan { space, classes, chain_images, bijective })
}

impl DoldKan {
    pub fn d(&self, t: &[BigInt]) -> Result<ChainMap> {
        self.space.to_chain_map(t)
    }

    /// `q(t)`: the class of `d(t)` in `[N U, N V]`.
    pub fn class_of(&self, t: &[BigInt]) -> Result<Element> {
        self.classes.project(&self.d(t)?)
    }

    /// Basis of `Ker q ⊆ Si(U, ⟨V⟩)` in coordinate vectors.
    pub fn null_homotopic(&self) -> Result<Vec<Vec<BigInt>>> {
        let solver = LinearSolver::new(&self.chain_images);
        let null = self.classes.null_homotopic();
        (0..null.cols())
            .map(|j| {
                let x = solver
                    .solve(&null.column(j))
                    .ok_or_else(|| Error::InvalidChainMap("null-homotopic map outside the image of d".into()))?;
                Ok(self.space.basis.mul_vec(&x))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dk::{induced_chain_map, main_invariant};
    use crate::sset::{enumerate_maps, nerve, polygon, standard_simplex, FiniteGroup};

    #[test]
    fn point_source_gives_vertices() {
        let pt = Arc::new(standard_simplex(0));
        let p = Arc::new(polygon(4).unwrap());
        let s = MapSpace::new(&pt, &p).unwrap();
        assert_eq!(s.rank(), 4);
    }

    #[test]
    fn superposed_maps_satisfy_the_face_relations() {
        let tri = Arc::new(polygon(3).unwrap());
        let v = Arc::new(nerve(&FiniteGroup::cyclic(2), 3).unwrap());
        let dk = dold_kan_maps(&tri, &v).unwrap();
        assert!(dk.bijective);
        for s in enumerate_maps(&tri, &v).unwrap() {
            let t = dk.space.of_map(&s);
            assert!(dk.space.contains(&t));
            assert_eq!(dk.d(&t).unwrap(), induced_chain_map(&s));
            let (_, h) = main_invariant(&s).unwrap();
            assert!(dk.classes.group().elem_eq(&dk.class_of(&t).unwrap(), &h));
        }
    }

    #[test]
    fn triangle_self_maps() {
        let tri = Arc::new(polygon(3).unwrap());
        let dk = dold_kan_maps(&tri, &tri).unwrap();
        assert!(dk.bijective);
        // chain maps N(tri) -> N(tri): f0 arbitrary (9), f1 with ∂f1 = f0∂ (9 unknowns, rank-2 constraint image)
        assert_eq!(dk.space.rank(), dk.classes.cycle_basis().cols());
    }
}
