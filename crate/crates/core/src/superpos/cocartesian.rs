//! The square relating `⟨Si(U, V)⟩`, `Si(U, ⟨V⟩)`, `⟨[U, V]⟩` and `[U, ⟨V⟩]`.

use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use super::qlattice::q_lattice;
use crate::ab::matrix::vec_sub;
use crate::ab::{FGAbGroup, Subgroup};
use crate::dk::{dold_kan_maps, DoldKan};
use crate::error::{Error, Result};
use crate::sset::{homotopy_classes, union_with_inclusions, HomotopyClasses, SimplicialSet};

/// `Ker q` and `(c_#^U)⁺(Ker⟨p⟩)` inside `Si(U, ⟨V⟩)`.
#[derive(Clone, Debug)]
pub struct Square {
    pub maps: HomotopyClasses,
    pub dold_kan: DoldKan,
    pub kernel_q: Subgroup,
    pub kernel_p_image: Subgroup,
}

#[derive(Clone, Debug, Serialize)]
pub struct CocartesianReport {
    pub holds: bool,
    pub maps: usize,
    pub classes: usize,
    pub kernel_p_rank: usize,
    pub kernel_q_rank: usize,
    pub image_rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposes: Option<bool>,
}

fn span_rank(s: &Subgroup) -> usize {
    crate::ab::lattice::rank(&s.generator_matrix())
}

fn check_inputs(u: &Arc<SimplicialSet>, v: &Arc<SimplicialSet>) -> Result<()> {
    if !v.is_fibrant() {
        return Err(Error::NotFibrant);
    }
    q_lattice(u)?;
    Ok(())
}

pub fn square(u: &Arc<SimplicialSet>, v: &Arc<SimplicialSet>) -> Result<Square> {
    check_inputs(u, v)?;
    let maps = homotopy_classes(u, v)?;
    let dold_kan = dold_kan_maps(u, v)?;
    let ambient = FGAbGroup::free(dold_kan.space.total());
    let kernel_q = Subgroup::span(ambient.clone(), dold_kan.null_homotopic()?)?;
    let images: Vec<Vec<BigInt>> = maps.maps().iter().map(|s| dold_kan.space.of_map(s)).collect();
    let diffs = (0..images.len())
        .map(|i| vec_sub(&images[i], &images[maps.representatives()[maps.class_of(i)]]))
        .collect();
    let kernel_p_image = Subgroup::span(ambient, diffs)?;
    Ok(Square { maps, dold_kan, kernel_q, kernel_p_image })
}

impl Square {
    pub fn holds(&self) -> Result<bool> {
        self.kernel_q.equals(&self.kernel_p_image)
    }

    pub fn report(&self) -> Result<CocartesianReport> {
        Ok(CocartesianReport {
            holds: self.holds()?,
            maps: self.maps.maps().len(),
            classes: self.maps.count(),
            kernel_p_rank: self.maps.maps().len() - self.maps.count(),
            kernel_q_rank: span_rank(&self.kernel_q),
            image_rank: span_rank(&self.kernel_p_image),
            decomposes: None,
        })
    }
}

pub fn cocartesian_check(u: &Arc<SimplicialSet>, v: &Arc<SimplicialSet>) -> Result<CocartesianReport> {
    square(u, v)?.report()
}

/// The check for `V = V₁ ⊔ … ⊔ V_k`, directly and as the sum of the pushed-forward component checks.
pub fn cocartesian_union_check(u: &Arc<SimplicialSet>, parts: &[Arc<SimplicialSet>]) -> Result<CocartesianReport> {
    if !u.is_connected() {
        return Err(Error::InvalidArgument("the decomposition needs a connected source".into()));
    }
    let (union, incs) = union_with_inclusions(parts);
    let direct = square(u, &union)?;
    let ambient = direct.kernel_q.ambient().clone();
    let mut kq = Vec::new();
    let mut kp = Vec::new();
    let mut each = true;
    for (part, inc) in parts.iter().zip(&incs) {
        let part = if inc.source().top() < part.top() { inc.source().clone() } else { part.clone() };
        let sq = square(u, &part)?;
        each &= sq.holds()?;
        for g in sq.kernel_q.generators() {
            kq.push(sq.dold_kan.space.push_forward(g, inc, &direct.dold_kan.space)?);
        }
        for g in sq.kernel_p_image.generators() {
            kp.push(sq.dold_kan.space.push_forward(g, inc, &direct.dold_kan.space)?);
        }
    }
    let sum_q = Subgroup::span(ambient.clone(), kq)?;
    let sum_p = Subgroup::span(ambient, kp)?;
    let decomposes = each && sum_q.equals(&direct.kernel_q)? && sum_p.equals(&direct.kernel_p_image)?;
    let mut report = direct.report()?;
    report.decomposes = Some(decomposes);
    report.holds &= decomposes;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{nerve, polygon, standard_simplex, FiniteGroup};

    fn bg(n: usize) -> Arc<SimplicialSet> {
        Arc::new(nerve(&FiniteGroup::cyclic(n), 3).unwrap())
    }

    #[test]
    fn point_source() {
        let r = cocartesian_check(&Arc::new(standard_simplex(0)), &bg(3)).unwrap();
        assert!(r.holds);
        assert_eq!(r.kernel_p_rank, 0);
    }

    #[test]
    fn triangle_into_bz2() {
        let r = cocartesian_check(&Arc::new(polygon(3).unwrap()), &bg(2)).unwrap();
        assert!(r.holds);
        assert_eq!(r.kernel_q_rank, 3);
        assert_eq!((r.maps, r.classes, r.kernel_p_rank, r.image_rank), (8, 2, 6, 3));
    }

    #[test]
    fn union_decomposes() {
        let r = cocartesian_union_check(&Arc::new(polygon(3).unwrap()), &[bg(2), bg(3)]).unwrap();
        assert_eq!(r.decomposes, Some(true));
        assert!(r.holds);
        assert_eq!(r.maps, 35);
    }

    #[test]
    fn non_fibrant_targets_are_refused() {
        let p = Arc::new(polygon(3).unwrap());
        assert_eq!(cocartesian_check(&p, &p).unwrap_err(), Error::NotFibrant);
    }
}
