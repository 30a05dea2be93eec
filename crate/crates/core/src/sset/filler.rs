//! Unique horn-free fillers in contractible group nerves.

use std::sync::Arc;

use super::build::{boundary, standard_simplex};
use super::map::SimplicialMap;
use super::set::SimplicialSet;
use crate::error::{Error, Result};

/// Extends `q: ∂Δⁿ -> W` over `Δⁿ` for a contractible nerve `W`. The extension is the
/// simplex whose tuple lists the vertex images, and the identity vertex when `n = 0`.
pub fn kan_filler(w: &Arc<SimplicialSet>, q: &SimplicialMap) -> Result<SimplicialMap> {
    if !w.is_enerve() {
        return Err(Error::NotENerve);
    }
    let src = q.source();
    let n = src.count(0).saturating_sub(1);
    if **src != boundary(n) || **q.target() != **w {
        return Err(Error::InvalidArgument("filler input must be a map from a simplex boundary into W".into()));
    }
    w.require_degree(n)?;
    let tuple: Vec<usize> = if n == 0 {
        vec![0]
    } else {
        (0..=n).map(|j| w.simplex_tuple(q.image(0, j)).map(|t| t[0])).collect::<Result<_>>()?
    };
    let top = w.tuple_simplex(&tuple)?;
    let filler = SimplicialMap::from_top(Arc::new(standard_simplex(n)), w.clone(), &top)?;
    for k in 0..n {
        for x in 0..src.count(k) {
            if filler.image(k, x) != q.image(k, x) {
                return Err(Error::InvalidSimplicialMap("boundary data admits no filler".into()));
            }
        }
    }
    Ok(filler)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::build::e_nerve;
    use crate::sset::enumerate::enumerate_maps;
    use crate::sset::group::FiniteGroup;

    #[test]
    fn fillers_restrict_to_their_input() {
        let w = Arc::new(e_nerve(&FiniteGroup::cyclic(2), 3).unwrap());
        for n in 0..=3 {
            let b = Arc::new(boundary(n));
            let d = Arc::new(standard_simplex(n));
            let fills = enumerate_maps(&d, &w).unwrap();
            for q in enumerate_maps(&b, &w).unwrap() {
                let f = kan_filler(&w, &q).unwrap();
                if n == 0 {
                    assert_eq!(w.simplex_tuple(f.image(0, 0)).unwrap(), vec![0]);
                    continue;
                }
                // the filler is the only extension
                let count = fills.iter().filter(|g| (0..n).all(|k| (0..b.count(k)).all(|x| g.image(k, x) == q.image(k, x)))).count();
                assert_eq!(count, 1);
            }
        }
    }

    #[test]
    fn plain_targets_are_refused() {
        let p = Arc::new(crate::sset::build::polygon(3).unwrap());
        let q = enumerate_maps(&Arc::new(boundary(1)), &p).unwrap().remove(0);
        assert_eq!(kan_filler(&p, &q).unwrap_err(), Error::NotENerve);
    }
}
