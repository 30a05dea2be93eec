//! Enumeration of simplicial maps and of their homotopy classes.

use std::collections::HashMap;
use std::sync::Arc;

use super::build::standard_simplex;
use super::map::{cylinder_end, SimplicialMap};
use super::product::product;
use super::set::{Simplex, SimplexIndex, SimplicialSet};
use super::word::combinations;
use crate::error::{Error, Result};

/// Map data as indices into the target's degreewise simplex lists.
type Key = Vec<Vec<usize>>;

/// Face relation `u ∘ theta = w ∘ surj` recorded for propagation.
struct Propagation {
    theta: Vec<usize>,
    surj: Vec<usize>,
    section: Vec<usize>,
    dim: usize,
    base: usize,
}

struct Enumerator<'a> {
    source: &'a SimplicialSet,
    target: &'a SimplicialSet,
    index: Vec<SimplexIndex>,
    /// Nondegenerate source simplices, highest degree first.
    order: Vec<(usize, usize)>,
    faces: Vec<Vec<Vec<Propagation>>>,
}

impl<'a> Enumerator<'a> {
    fn new(source: &'a SimplicialSet, target: &'a SimplicialSet) -> Result<Self> {
        if !source.is_compact() {
            return Err(Error::NotCompact);
        }
        let top = source.dim().unwrap_or(0);
        target.require_degree(top)?;
        let index: Vec<SimplexIndex> = (0..=top).map(|n| SimplexIndex::new(target, n)).collect::<Result<_>>()?;
        let mut order = Vec::new();
        let mut faces = Vec::new();
        for n in 0..=source.top() {
            let mut lv = Vec::new();
            for x in 0..source.count(n) {
                let u = Simplex::nondegenerate(n, x);
                let mut props = Vec::new();
                for k in 0..n {
                    for theta in combinations(n + 1, k + 1) {
                        let f = source.apply(&u, &theta);
                        let section = (0..=f.base_dim()).map(|j| f.surj.iter().position(|&v| v == j).expect("surjective")).collect();
                        props.push(Propagation { theta, section, dim: f.base_dim(), base: f.base, surj: f.surj });
                    }
                }
                lv.push(props);
            }
            faces.push(lv);
        }
        for n in (0..=source.top()).rev() {
            order.extend((0..source.count(n)).map(|x| (n, x)));
        }
        Ok(Enumerator { source, target, index, order, faces })
    }

    fn image_index(&self, key: &Key, s: &Simplex) -> usize {
        let m = s.base_dim();
        let img = self.target.apply(&self.index[m].simplices[key[m][s.base]], &s.surj);
        self.index[s.dim()].get(&img)
    }

    /// Visits every map exactly once.
    fn for_each(&self, mut visit: impl FnMut(&Key)) {
        let mut key: Key = (0..=self.source.top()).map(|n| vec![usize::MAX; self.source.count(n)]).collect();
        let mut trail = Vec::new();
        self.descend(0, &mut key, &mut trail, &mut visit);
    }

    fn descend(&self, pos: usize, key: &mut Key, trail: &mut Vec<(usize, usize)>, visit: &mut impl FnMut(&Key)) {
        let Some(&(n, x)) = self.order.get(pos) else {
            visit(key);
            return;
        };
        if key[n][x] != usize::MAX {
            self.descend(pos + 1, key, trail, visit);
            return;
        }
        for c in 0..self.index[n].len() {
            let mark = trail.len();
            key[n][x] = c;
            trail.push((n, x));
            if self.propagate(n, x, c, key, trail) {
                self.descend(pos + 1, key, trail, visit);
            }
            for (m, y) in trail.drain(mark..) {
                key[m][y] = usize::MAX;
            }
        }
    }

    /// Assigns the faces forced by `t(u) = v`; false on a conflict.
    fn propagate(&self, n: usize, x: usize, c: usize, key: &mut Key, trail: &mut Vec<(usize, usize)>) -> bool {
        let v = &self.index[n].simplices[c];
        for p in &self.faces[n][x] {
            let along = self.target.apply(v, &p.theta);
            let forced = self.target.apply(&along, &p.section);
            if self.target.apply(&forced, &p.surj) != along {
                return false;
            }
            let k = self.index[p.dim].get(&forced);
            match key[p.dim][p.base] {
                usize::MAX => {
                    key[p.dim][p.base] = k;
                    trail.push((p.dim, p.base));
                }
                old if old != k => return false,
                _ => {}
            }
        }
        true
    }

    fn to_map(&self, key: &Key, source: &Arc<SimplicialSet>, target: &Arc<SimplicialSet>) -> SimplicialMap {
        let images = key
            .iter()
            .enumerate()
            .map(|(n, lv)| lv.iter().map(|&k| self.index[n].simplices[k].clone()).collect())
            .collect();
        SimplicialMap::unchecked(source.clone(), target.clone(), images)
    }
}

/// All simplicial maps `U -> V`, in canonical order.
pub fn enumerate_maps(u: &Arc<SimplicialSet>, v: &Arc<SimplicialSet>) -> Result<Vec<SimplicialMap>> {
    let e = Enumerator::new(u, v)?;
    let mut keys = Vec::new();
    e.for_each(|k| keys.push(k.clone()));
    keys.sort();
    Ok(keys.iter().map(|k| e.to_map(k, u, v)).collect())
}

pub fn count_maps(u: &SimplicialSet, v: &SimplicialSet) -> Result<usize> {
    let e = Enumerator::new(u, v)?;
    let mut n = 0;
    e.for_each(|_| n += 1);
    Ok(n)
}

/// Partition of `Si(U, V)` into classes of the equivalence generated by one-step
/// homotopies `U × Δ¹ -> V`.
#[derive(Clone, Debug)]
pub struct HomotopyClasses {
    maps: Vec<SimplicialMap>,
    class_of: Vec<usize>,
    representatives: Vec<usize>,
    homotopies: usize,
}

impl HomotopyClasses {
    pub fn maps(&self) -> &[SimplicialMap] {
        &self.maps
    }

    pub fn class_of(&self, map: usize) -> usize {
        self.class_of[map]
    }

    pub fn class_labels(&self) -> &[usize] {
        &self.class_of
    }

    /// Index of the first map in each class; classes are numbered by their representatives.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn homotopy_count(&self) -> usize {
        self.homotopies
    }

    pub fn members(&self, class: usize) -> Vec<usize> {
        (0..self.maps.len()).filter(|&i| self.class_of[i] == class).collect()
    }

    /// Classes as sets of maps, independent of numbering.
    pub fn partition(&self) -> Vec<Vec<SimplicialMap>> {
        let mut parts: Vec<Vec<SimplicialMap>> = (0..self.count())
            .map(|c| self.members(c).into_iter().map(|i| self.maps[i].clone()).collect())
            .collect();
        for p in &mut parts {
            p.sort_by_key(|m| format!("{:?}", m.images()));
        }
        parts.sort_by_key(|p| format!("{:?}", p[0].images()));
        parts
    }

    /// Position of a map in the enumeration.
    pub fn position(&self, map: &SimplicialMap) -> Option<usize> {
        self.maps.iter().position(|m| m == map)
    }
}

pub fn homotopy_classes(u: &Arc<SimplicialSet>, v: &Arc<SimplicialSet>) -> Result<HomotopyClasses> {
    let maps = enumerate_maps(u, v)?;
    classes_of(u, v, maps)
}

/// Homotopy classes over a given listing of `Si(U, V)`.
pub fn classes_of(u: &Arc<SimplicialSet>, v: &Arc<SimplicialSet>, maps: Vec<SimplicialMap>) -> Result<HomotopyClasses> {
    let top = u.dim().unwrap_or(0);
    v.require_degree(top + 1)?;
    let cyl = Arc::new(product(u, &standard_simplex(1))?);
    let ends = [cylinder_end(u, &cyl, 0)?, cylinder_end(u, &cyl, 1)?];
    let position: HashMap<&[Vec<Simplex>], usize> = maps.iter().enumerate().map(|(i, m)| (m.images(), i)).collect();
    let mut parent: Vec<usize> = (0..maps.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let e = Enumerator::new(&cyl, v)?;
    let mut homotopies = 0;
    let mut missing = false;
    e.for_each(|key| {
        homotopies += 1;
        let ends: Vec<Option<usize>> = ends
            .iter()
            .map(|inc| {
                let images: Vec<Vec<Simplex>> = inc
                    .images()
                    .iter()
                    .map(|lv| {
                        lv.iter()
                            .map(|s| e.index[s.dim()].simplices[e.image_index(key, s)].clone())
                            .collect()
                    })
                    .collect();
                position.get(images.as_slice()).copied()
            })
            .collect();
        match (ends[0], ends[1]) {
            (Some(a), Some(b)) => {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra.max(rb)] = ra.min(rb);
            }
            _ => missing = true,
        }
    });
    if missing {
        return Err(Error::InvalidArgument("map listing is not all of Si(U, V)".into()));
    }
    let roots: Vec<usize> = (0..maps.len()).map(|i| find(&mut parent, i)).collect();
    let mut representatives = Vec::new();
    let mut number = HashMap::new();
    let mut class_of = Vec::with_capacity(maps.len());
    for (i, r) in roots.iter().enumerate() {
        let c = *number.entry(*r).or_insert_with(|| {
            representatives.push(i);
            representatives.len() - 1
        });
        class_of.push(c);
    }
    Ok(HomotopyClasses { maps, class_of, representatives, homotopies })
}

/// Some isomorphism between two compact sets, found by exhaustive search.
pub fn find_isomorphism(a: &Arc<SimplicialSet>, b: &Arc<SimplicialSet>) -> Result<Option<SimplicialMap>> {
    if !a.is_compact() || !b.is_compact() {
        return Err(Error::NotCompact);
    }
    if a.counts() != b.counts() {
        return Ok(None);
    }
    Ok(enumerate_maps(a, b)?.into_iter().find(|m| m.is_isomorphism()))
}
