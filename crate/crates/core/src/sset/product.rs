//! Binary products. Nondegenerate `n`-simplices are pairs of degenerate-or-not simplices
//! whose collapsed positions are disjoint.

use std::collections::HashMap;
use std::sync::Arc;

use super::set::{Model, ProductModel, Simplex, SimplicialSet};
use super::word::{collapse, combinations, merged_positions};
use crate::error::{Error, Result};

/// Product of two compact sets.
pub fn product(u: &SimplicialSet, v: &SimplicialSet) -> Result<SimplicialSet> {
    if !u.is_compact() || !v.is_compact() {
        return Err(Error::NotCompact);
    }
    let top = u.dim().unwrap_or(0) + v.dim().unwrap_or(0);
    build(u, v, top, false)
}

/// Product stored through degree `cutoff`; each factor must describe that degree.
pub fn product_truncated(u: &SimplicialSet, v: &SimplicialSet, cutoff: usize) -> Result<SimplicialSet> {
    u.require_degree(cutoff)?;
    v.require_degree(cutoff)?;
    let full = u.is_compact() && v.is_compact() && cutoff >= u.dim().unwrap_or(0) + v.dim().unwrap_or(0);
    build(u, v, cutoff, !full)
}

fn build(u: &SimplicialSet, v: &SimplicialSet, top: usize, truncated: bool) -> Result<SimplicialSet> {
    let mut pairs: Vec<Vec<(Simplex, Simplex)>> = vec![Vec::new(); top + 1];
    for (n, level) in pairs.iter_mut().enumerate() {
        for p in 0..=n.min(u.top()) {
            for q in 0..=n.min(v.top()) {
                if (n - p) + (n - q) > n {
                    continue;
                }
                for ja in combinations(n, n - p) {
                    let rest: Vec<usize> = (0..n).filter(|t| !ja.contains(t)).collect();
                    for jb_pos in combinations(rest.len(), n - q) {
                        let jb: Vec<usize> = jb_pos.iter().map(|&k| rest[k]).collect();
                        for x in 0..u.count(p) {
                            for y in 0..v.count(q) {
                                level.push((
                                    Simplex { surj: collapse(n, &ja), base: x },
                                    Simplex { surj: collapse(n, &jb), base: y },
                                ));
                            }
                        }
                    }
                }
            }
        }
        level.sort();
    }
    let index: Vec<HashMap<(Simplex, Simplex), usize>> =
        pairs.iter().map(|lv| lv.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect()).collect();
    let model = ProductModel { left: Arc::new(u.clone()), right: Arc::new(v.clone()), pairs, index };
    let mut faces = vec![vec![Vec::new(); model.pairs[0].len()]];
    for n in 1..=top {
        let level = model.pairs[n]
            .iter()
            .map(|(a, b)| (0..=n).map(|i| normalize_pair(&model, u.face(a, i), v.face(b, i))).collect())
            .collect();
        faces.push(level);
    }
    let labels = model
        .pairs
        .iter()
        .map(|lv| lv.iter().map(|(a, b)| format!("({},{})", u.simplex_label(a), v.simplex_label(b))).collect())
        .collect();
    let name = format!("{}*{}", u.name(), v.name());
    let fibrant = u.is_fibrant() && v.is_fibrant();
    Ok(SimplicialSet::unchecked(name, labels, faces, truncated, fibrant, Model::Product(model)))
}

/// The simplex of the product with components `a` and `b`.
fn normalize_pair(model: &ProductModel, a: Simplex, b: Simplex) -> Simplex {
    let ja = merged_positions(&a.surj);
    let jb = merged_positions(&b.surj);
    let common: Vec<usize> = ja.iter().copied().filter(|t| jb.contains(t)).collect();
    let n = a.dim();
    let rho = collapse(n, &common);
    let k = n - common.len();
    let shrink = |s: &Simplex| {
        let mut out = vec![0; k + 1];
        for t in 0..=n {
            out[rho[t]] = s.surj[t];
        }
        Simplex { surj: out, base: s.base }
    };
    let key = (shrink(&a), shrink(&b));
    Simplex { surj: rho, base: model.index[k][&key] }
}

impl SimplicialSet {
    /// For a product, the simplex with the given components.
    pub fn pair_simplex(&self, a: &Simplex, b: &Simplex) -> Result<Simplex> {
        match self.model() {
            Model::Product(m) if a.dim() == b.dim() => {
                self.require_degree(a.dim())?;
                Ok(normalize_pair(m, a.clone(), b.clone()))
            }
            Model::Product(_) => Err(Error::Dimension("components of different degrees".into())),
            _ => Err(Error::InvalidArgument(format!("{} is not a product", self.name()))),
        }
    }

    /// For a product, the components of a simplex.
    pub fn pair_components(&self, s: &Simplex) -> Result<(Simplex, Simplex)> {
        match self.model() {
            Model::Product(m) => {
                let (a, b) = &m.pairs[s.base_dim()][s.base];
                Ok((m.left.apply(a, &s.surj), m.right.apply(b, &s.surj)))
            }
            _ => Err(Error::InvalidArgument(format!("{} is not a product", self.name()))),
        }
    }

    pub fn factors(&self) -> Option<(&Arc<SimplicialSet>, &Arc<SimplicialSet>)> {
        match self.model() {
            Model::Product(m) => Some((&m.left, &m.right)),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::build::{boundary, polygon, standard_simplex};

    #[test]
    fn square_and_prism_counts() {
        let d1 = standard_simplex(1);
        let sq = product(&d1, &d1).unwrap();
        sq.validate().unwrap();
        assert_eq!(sq.counts(), vec![4, 5, 2]);
        let cyl = product(&polygon(3).unwrap(), &d1).unwrap();
        cyl.validate().unwrap();
        assert_eq!(cyl.counts(), vec![6, 12, 6]);
        let prism = product(&standard_simplex(2), &d1).unwrap();
        prism.validate().unwrap();
        assert_eq!(prism.count(3), 3);
    }

    #[test]
    fn product_with_point() {
        let b = boundary(2);
        let p = product(&b, &standard_simplex(0)).unwrap();
        assert_eq!(p.counts(), b.counts());
    }

    #[test]
    fn components_round_trip() {
        let d1 = standard_simplex(1);
        let d2 = standard_simplex(2);
        let p = product(&d2, &d1).unwrap();
        for n in 0..=4 {
            for s in p.all_simplices(n).unwrap() {
                let (a, b) = p.pair_components(&s).unwrap();
                assert_eq!(p.pair_simplex(&a, &b).unwrap(), s);
            }
        }
    }

    #[test]
    fn truncated_factors_need_the_degree() {
        let z2 = crate::sset::group::FiniteGroup::cyclic(2);
        let b = crate::sset::build::nerve(&z2, 2).unwrap();
        assert_eq!(
            product_truncated(&b, &standard_simplex(1), 3).unwrap_err(),
            Error::CutoffTooSmall { needed: 3, cutoff: 2 }
        );
        let t = product_truncated(&b, &standard_simplex(1), 2).unwrap();
        t.validate().unwrap();
        assert_eq!(t.cutoff(), Some(2));
    }
}
