//! Extensions `E_A: Si(A, W) → Si(U, W)` built from fillers.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sset::word::combinations;
use crate::sset::{boundary, kan_filler, Simplex, SimplicialMap, SimplicialSet, SimplicialSubset};

/// Images prescribed on some nondegenerate simplices of `U`.
pub type Assignment = Vec<Vec<Option<Simplex>>>;

/// Fills every unassigned nondegenerate simplex of `U`, in increasing degree and
/// canonical order, with the filler of its already assigned boundary.
pub fn extend_assignment(u: &Arc<SimplicialSet>, w: &Arc<SimplicialSet>, known: &Assignment) -> Result<SimplicialMap> {
    if !u.is_compact() {
        return Err(Error::NotCompact);
    }
    w.require_degree(u.top())?;
    let mut t: Vec<Vec<Simplex>> = Vec::with_capacity(u.top() + 1);
    for n in 0..=u.top() {
        let mut level = Vec::with_capacity(u.count(n));
        for x in 0..u.count(n) {
            if let Some(s) = known.get(n).and_then(|l| l.get(x)).cloned().flatten() {
                level.push(s);
                continue;
            }
            let bd = Arc::new(boundary(n));
            let images: Vec<Vec<Simplex>> = (0..=bd.top())
                .map(|k| {
                    let thetas = combinations(n + 1, k + 1);
                    (0..bd.count(k))
                        .map(|i| {
                            let f = u.pull(n, x, &thetas[i]);
                            w.apply(&t[f.base_dim()][f.base], &f.surj)
                        })
                        .collect()
                })
                .collect();
            let q = SimplicialMap::new(bd, w.clone(), images)?;
            let filler = kan_filler(w, &q)?;
            level.push(filler.image(n, 0).clone());
        }
        t.push(level);
    }
    SimplicialMap::new(u.clone(), w.clone(), t)
}

/// The assignment on `A` given by a map out of `A` viewed as a set.
pub fn assignment_of(a: &SimplicialSubset, x: &SimplicialMap) -> Result<Assignment> {
    let (set, j) = a.as_set();
    if **x.source() != *set {
        return Err(Error::InvalidSimplicialMap("map is not defined on the subset".into()));
    }
    let u = a.parent();
    let mut known: Assignment = (0..=u.top()).map(|n| vec![None; u.count(n)]).collect();
    for (n, lv) in j.images().iter().enumerate() {
        for (i, s) in lv.iter().enumerate() {
            known[n][s.base] = Some(x.image(n, i).clone());
        }
    }
    Ok(known)
}

/// The assignment of `t` restricted to `B`.
pub fn restrict_assignment(t: &SimplicialMap, b: &SimplicialSubset) -> Assignment {
    b.members()
        .iter()
        .enumerate()
        .map(|(n, lv)| lv.iter().enumerate().map(|(x, &m)| m.then(|| t.image(n, x).clone())).collect())
        .collect()
}

/// `E_A(x)`.
pub fn extend(a: &SimplicialSubset, x: &SimplicialMap, w: &Arc<SimplicialSet>) -> Result<SimplicialMap> {
    extend_assignment(a.parent(), w, &assignment_of(a, x)?)
}

/// `t|_B` as a map out of `B` viewed as a set.
pub fn restrict(t: &SimplicialMap, b: &SimplicialSubset) -> Result<SimplicialMap> {
    let (_, j) = b.as_set();
    j.then(t)
}
