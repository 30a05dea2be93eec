//! Simplicial maps and simplicial subsets.

use std::sync::Arc;

use super::set::{Simplex, SimplicialSet};
use crate::error::{Error, Result};

/// A simplicial map given by the images of the nondegenerate source simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: Arc<SimplicialSet>,
    target: Arc<SimplicialSet>,
    images: Vec<Vec<Simplex>>,
}

impl SimplicialMap {
    /// Checks degrees and `d_i f(x) = f(d_i x)` on every stored nondegenerate simplex.
    pub fn new(source: Arc<SimplicialSet>, target: Arc<SimplicialSet>, images: Vec<Vec<Simplex>>) -> Result<Self> {
        let bad = |m: String| Error::InvalidSimplicialMap(m);
        target.require_degree(source.top())?;
        if images.len() != source.top() + 1 || (0..=source.top()).any(|n| images[n].len() != source.count(n)) {
            return Err(bad("assignment does not cover the nondegenerate simplices".into()));
        }
        for (n, level) in images.iter().enumerate() {
            for s in level {
                if s.dim() != n || s.base >= target.count(s.base_dim()) {
                    return Err(bad(format!("image in degree {n} is not a target simplex")));
                }
            }
        }
        let map = SimplicialMap { source, target, images };
        for n in 1..map.images.len() {
            for x in 0..map.source.count(n) {
                for (i, f) in map.source.nondeg_faces(n, x).iter().enumerate() {
                    if map.target.face(&map.images[n][x], i) != map.apply(f) {
                        return Err(bad(format!("d{i} does not commute on {}", map.source.label(n, x))));
                    }
                }
            }
        }
        Ok(map)
    }

    pub(crate) fn unchecked(source: Arc<SimplicialSet>, target: Arc<SimplicialSet>, images: Vec<Vec<Simplex>>) -> Self {
        SimplicialMap { source, target, images }
    }

    pub fn identity(set: Arc<SimplicialSet>) -> Self {
        let images = (0..=set.top()).map(|n| (0..set.count(n)).map(|x| Simplex::nondegenerate(n, x)).collect()).collect();
        SimplicialMap { source: set.clone(), target: set, images }
    }

    /// The map out of a standard simplex sending the top simplex to `top`.
    pub fn from_top(simplex: Arc<SimplicialSet>, target: Arc<SimplicialSet>, top: &Simplex) -> Result<Self> {
        let n = simplex.top();
        if top.dim() != n || simplex.count(n) != 1 {
            return Err(Error::Dimension("top simplex does not match the standard simplex".into()));
        }
        let images = (0..=n)
            .map(|k| {
                (0..simplex.count(k))
                    .map(|x| {
                        let s = Simplex::nondegenerate(k, x);
                        let verts: Vec<usize> = (0..=k).map(|j| simplex.vertex(&s, j)).collect();
                        target.apply(top, &verts)
                    })
                    .collect()
            })
            .collect();
        Self::new(simplex, target, images)
    }

    pub fn source(&self) -> &Arc<SimplicialSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SimplicialSet> {
        &self.target
    }

    pub fn images(&self) -> &[Vec<Simplex>] {
        &self.images
    }

    pub fn image(&self, n: usize, x: usize) -> &Simplex {
        &self.images[n][x]
    }

    /// Image of an arbitrary source simplex.
    pub fn apply(&self, s: &Simplex) -> Simplex {
        self.target.apply(&self.images[s.base_dim()][s.base], &s.surj)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if !Arc::ptr_eq(&self.target, &other.source) && *self.target != *other.source {
            return Err(Error::InvalidSimplicialMap("composition of maps with mismatched ends".into()));
        }
        let images = self.images.iter().map(|lv| lv.iter().map(|s| other.apply(s)).collect()).collect();
        Ok(SimplicialMap { source: self.source.clone(), target: other.target.clone(), images })
    }

    /// Sends nondegenerate simplices bijectively onto nondegenerate simplices.
    pub fn is_isomorphism(&self) -> bool {
        if self.source.counts() != self.target.counts() || !self.source.is_compact() || !self.target.is_compact() {
            return false;
        }
        self.images.iter().enumerate().all(|(n, lv)| {
            let mut hit = vec![false; self.target.count(n)];
            lv.iter().all(|s| s.is_nondegenerate() && !std::mem::replace(&mut hit[s.base], true))
        })
    }

    /// Human-readable assignment `label -> image label` in canonical order.
    pub fn describe(&self) -> Vec<(String, String)> {
        self.images
            .iter()
            .enumerate()
            .flat_map(|(n, lv)| {
                lv.iter()
                    .enumerate()
                    .map(move |(x, s)| (self.source.label(n, x).to_string(), self.target.simplex_label(s)))
            })
            .collect()
    }
}

/// Projections of a product onto its factors.
pub fn projections(product: &Arc<SimplicialSet>) -> Result<(SimplicialMap, SimplicialMap)> {
    let (left, right) = product
        .factors()
        .ok_or_else(|| Error::InvalidArgument(format!("{} is not a product", product.name())))?;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for n in 0..=product.top() {
        let (la, lb): (Vec<_>, Vec<_>) =
            (0..product.count(n)).map(|x| product.pair_components(&Simplex::nondegenerate(n, x)).expect("product")).unzip();
        a.push(la);
        b.push(lb);
    }
    Ok((
        SimplicialMap::unchecked(product.clone(), left.clone(), a),
        SimplicialMap::unchecked(product.clone(), right.clone(), b),
    ))
}

/// The map `t -> (f(t), g(t))` into a product.
pub fn pairing(f: &SimplicialMap, g: &SimplicialMap, product: &Arc<SimplicialSet>) -> Result<SimplicialMap> {
    let (left, right) = product
        .factors()
        .ok_or_else(|| Error::InvalidArgument(format!("{} is not a product", product.name())))?;
    if f.source != g.source || *f.target != **left || *g.target != **right {
        return Err(Error::InvalidSimplicialMap("pairing of incompatible maps".into()));
    }
    let images = f
        .images
        .iter()
        .zip(&g.images)
        .map(|(la, lb)| la.iter().zip(lb).map(|(a, b)| product.pair_simplex(a, b)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    SimplicialMap::new(f.source.clone(), product.clone(), images)
}

/// The end `u -> (u, ε)` of a cylinder `U × Δ¹`, for `ε ∈ {0, 1}`.
pub fn cylinder_end(u: &Arc<SimplicialSet>, cylinder: &Arc<SimplicialSet>, end: usize) -> Result<SimplicialMap> {
    let images = (0..=u.top())
        .map(|n| {
            (0..u.count(n))
                .map(|x| cylinder.pair_simplex(&Simplex::nondegenerate(n, x), &Simplex { surj: vec![0; n + 1], base: end }))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SimplicialMap::unchecked(u.clone(), cylinder.clone(), images))
}

/// The quotient `EG -> BG`, `(x_0, …, x_n) -> (x_0⁻¹x_1, …, x_{n-1}⁻¹x_n)`.
pub fn nerve_quotient(enerve: &Arc<SimplicialSet>, nerve: &Arc<SimplicialSet>) -> Result<SimplicialMap> {
    let (Some(g), Some(h)) = (enerve.group(), nerve.group()) else {
        return Err(Error::NotENerve);
    };
    if g != h || !enerve.is_enerve() || nerve.is_enerve() {
        return Err(Error::InvalidArgument("quotient needs the two nerves of one group".into()));
    }
    let images = (0..=enerve.top())
        .map(|n| {
            (0..enerve.count(n))
                .map(|x| {
                    let t = enerve.simplex_tuple(&Simplex::nondegenerate(n, x))?;
                    let q: Vec<usize> = t.windows(2).map(|w| g.mul(g.inv(w[0]), w[1])).collect();
                    nerve.tuple_simplex(&q)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SimplicialMap::new(enerve.clone(), nerve.clone(), images)
}

/// Disjoint union with the inclusions of its parts.
pub fn union_with_inclusions(parts: &[Arc<SimplicialSet>]) -> (Arc<SimplicialSet>, Vec<SimplicialMap>) {
    let refs: Vec<&SimplicialSet> = parts.iter().map(|p| p.as_ref()).collect();
    let union = Arc::new(super::build::disjoint_union(&refs));
    let mut offsets = vec![0usize; union.top() + 1];
    let mut incs = Vec::new();
    for p in parts {
        let images = (0..=p.top().min(union.top()))
            .map(|n| (0..p.count(n)).map(|x| Simplex::nondegenerate(n, offsets[n] + x)).collect())
            .collect();
        for (n, o) in offsets.iter_mut().enumerate() {
            *o += p.count(n);
        }
        let src = if p.top() > union.top() { Arc::new(truncate(p, union.top())) } else { p.clone() };
        incs.push(SimplicialMap::unchecked(src, union.clone(), images));
    }
    (union, incs)
}

fn truncate(set: &SimplicialSet, top: usize) -> SimplicialSet {
    let members = (0..=set.top()).map(|n| vec![n <= top; set.count(n)]).collect();
    let sub = SimplicialSubset { parent: Arc::new(set.clone()), members };
    let (s, _) = sub.as_set();
    (*s).clone()
}

/// A face-closed family of nondegenerate simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSubset {
    parent: Arc<SimplicialSet>,
    members: Vec<Vec<bool>>,
}

impl SimplicialSubset {
    pub fn new(parent: Arc<SimplicialSet>, members: Vec<Vec<bool>>) -> Result<Self> {
        if members.len() != parent.top() + 1 || (0..members.len()).any(|n| members[n].len() != parent.count(n)) {
            return Err(Error::Dimension("membership flags do not match the parent".into()));
        }
        let sub = SimplicialSubset { parent, members };
        for n in 1..sub.members.len() {
            for x in 0..sub.members[n].len() {
                if sub.members[n][x] && sub.parent.nondeg_faces(n, x).iter().any(|f| !sub.members[f.base_dim()][f.base]) {
                    return Err(Error::InvalidArgument(format!(
                        "subset is not closed under faces at {}",
                        sub.parent.label(n, x)
                    )));
                }
            }
        }
        Ok(sub)
    }

    pub fn empty(parent: Arc<SimplicialSet>) -> Self {
        let members = (0..=parent.top()).map(|n| vec![false; parent.count(n)]).collect();
        SimplicialSubset { parent, members }
    }

    pub fn full(parent: Arc<SimplicialSet>) -> Self {
        let members = (0..=parent.top()).map(|n| vec![true; parent.count(n)]).collect();
        SimplicialSubset { parent, members }
    }

    /// Smallest subset containing the nondegenerate simplex `x` of degree `n`.
    pub fn closure(parent: Arc<SimplicialSet>, n: usize, x: usize) -> Self {
        let mut sub = Self::empty(parent);
        let mut stack = vec![(n, x)];
        while let Some((k, y)) = stack.pop() {
            if std::mem::replace(&mut sub.members[k][y], true) {
                continue;
            }
            if k > 0 {
                for f in sub.parent.nondeg_faces(k, y) {
                    stack.push((f.base_dim(), f.base));
                }
            }
        }
        sub
    }

    pub fn parent(&self) -> &Arc<SimplicialSet> {
        &self.parent
    }

    pub fn contains(&self, n: usize, x: usize) -> bool {
        self.members.get(n).and_then(|l| l.get(x)).copied().unwrap_or(false)
    }

    pub fn members(&self) -> &[Vec<bool>] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.iter().map(|l| l.iter().filter(|&&b| b).count()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn intersection(&self, other: &SimplicialSubset) -> SimplicialSubset {
        let members = self
            .members
            .iter()
            .zip(&other.members)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| *x && *y).collect())
            .collect();
        SimplicialSubset { parent: self.parent.clone(), members }
    }

    pub fn is_subset_of(&self, other: &SimplicialSubset) -> bool {
        self.members.iter().zip(&other.members).all(|(a, b)| a.iter().zip(b).all(|(x, y)| !*x || *y))
    }

    /// Labels of the members that are not faces of other members.
    pub fn describe(&self) -> String {
        let mut tops = Vec::new();
        for n in (0..self.members.len()).rev() {
            for x in 0..self.members[n].len() {
                if !self.members[n][x] {
                    continue;
                }
                let covered = (n + 1..self.members.len()).any(|k| {
                    (0..self.members[k].len()).any(|y| {
                        self.members[k][y] && SimplicialSubset::closure(self.parent.clone(), k, y).contains(n, x)
                    })
                });
                if !covered {
                    tops.push(self.parent.label(n, x).to_string());
                }
            }
        }
        tops.reverse();
        format!("{{{}}}", tops.join(","))
    }

    /// The subset as a simplicial set, with its inclusion into the parent.
    pub fn as_set(&self) -> (Arc<SimplicialSet>, SimplicialMap) {
        let mut new_index: Vec<Vec<Option<usize>>> = Vec::new();
        let mut old: Vec<Vec<usize>> = Vec::new();
        for lv in &self.members {
            let ids: Vec<usize> = (0..lv.len()).filter(|&x| lv[x]).collect();
            let mut idx = vec![None; lv.len()];
            for (i, &x) in ids.iter().enumerate() {
                idx[x] = Some(i);
            }
            new_index.push(idx);
            old.push(ids);
        }
        let labels = old
            .iter()
            .enumerate()
            .map(|(n, ids)| ids.iter().map(|&x| self.parent.label(n, x).to_string()).collect())
            .collect();
        let faces = old
            .iter()
            .enumerate()
            .map(|(n, ids)| {
                ids.iter()
                    .map(|&x| {
                        if n == 0 {
                            return Vec::new();
                        }
                        self.parent
                            .nondeg_faces(n, x)
                            .iter()
                            .map(|f| Simplex {
                                surj: f.surj.clone(),
                                base: new_index[f.base_dim()][f.base].expect("closed under faces"),
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let name = format!("{}|{}", self.parent.name(), self.describe());
        let set = Arc::new(SimplicialSet::unchecked(
            name,
            labels,
            faces,
            !self.parent.is_compact(),
            false,
            super::set::Model::Plain,
        ));
        let images = (0..=set.top())
            .map(|n| old.get(n).map_or(Vec::new(), |ids| ids.iter().map(|&x| Simplex::nondegenerate(n, x)).collect()))
            .collect();
        let inc = SimplicialMap::unchecked(set.clone(), self.parent.clone(), images);
        (set, inc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::build::{boundary, e_nerve, nerve, polygon, standard_simplex};
    use crate::sset::group::FiniteGroup;
    use crate::sset::product::product;

    #[test]
    fn checked_construction_rejects_bad_faces() {
        let d1 = Arc::new(standard_simplex(1));
        let p = Arc::new(polygon(3).unwrap());
        // edge 01 to e0 needs v0 -> v0, v1 -> v1
        let ok = vec![vec![Simplex::nondegenerate(0, 0), Simplex::nondegenerate(0, 1)], vec![Simplex::nondegenerate(1, 0)]];
        SimplicialMap::new(d1.clone(), p.clone(), ok).unwrap();
        let bad = vec![vec![Simplex::nondegenerate(0, 1), Simplex::nondegenerate(0, 1)], vec![Simplex::nondegenerate(1, 0)]];
        assert!(SimplicialMap::new(d1, p, bad).is_err());
    }

    #[test]
    fn quotient_is_degreewise_surjective() {
        let g = FiniteGroup::cyclic(3);
        let e = Arc::new(e_nerve(&g, 3).unwrap());
        let b = Arc::new(nerve(&g, 3).unwrap());
        let q = nerve_quotient(&e, &b).unwrap();
        for n in 0..=3 {
            let hit: std::collections::HashSet<Simplex> = e.all_simplices(n).unwrap().iter().map(|s| q.apply(s)).collect();
            assert_eq!(hit.len(), b.all_simplices(n).unwrap().len());
        }
    }

    #[test]
    fn subsets_and_closures() {
        let b = Arc::new(boundary(2));
        let edge = SimplicialSubset::closure(b.clone(), 1, 0);
        assert_eq!(edge.size(), 3);
        let other = SimplicialSubset::closure(b.clone(), 1, 2);
        assert_eq!(edge.intersection(&other).size(), 1);
        let (set, inc) = edge.as_set();
        set.validate().unwrap();
        assert_eq!(set.counts(), vec![2, 1]);
        SimplicialMap::new(set, b.clone(), inc.images().to_vec()).unwrap();
        assert!(SimplicialSubset::new(b, vec![vec![false; 3], vec![true, false, false]]).is_err());
    }

    #[test]
    fn projections_and_pairing() {
        let d1 = Arc::new(standard_simplex(1));
        let sq = Arc::new(product(&d1, &d1).unwrap());
        let (p, q) = projections(&sq).unwrap();
        SimplicialMap::new(sq.clone(), d1.clone(), p.images().to_vec()).unwrap();
        let id = pairing(&p, &q, &sq).unwrap();
        assert_eq!(id, SimplicialMap::identity(sq));
    }
}
