//! Straightness at the simplicial level versus factoring through the main invariant.

use std::sync::Arc;

use serde::Serialize;

use crate::ab::{extend_hom, Element, FGAbGroup};
use crate::dk::{class_group, induced_chain_map, normalized_chains, HomotopyClassGroup, MapSpace};
use crate::error::{Error, Result};
use crate::sset::{homotopy_classes, SimplicialMap, SimplicialSet};
use crate::straight::{InvariantTable, Straightness};

#[derive(Clone, Debug, Serialize)]
pub struct FactorDecision {
    /// Over the span of the `c ∘ s` in `Si(U, ⟨V⟩)`.
    pub straight: Straightness,
    /// Over the span of the `h([s])` in `[N U, N V]`.
    pub factored: Straightness,
    pub agree: bool,
    #[serde(skip)]
    pub classes: Option<HomotopyClassGroup>,
}

/// Checks the table against the computed homotopy classes when `V` is fibrant;
/// otherwise the supplied class labels are taken as given.
fn check_table(u: &Arc<SimplicialSet>, v: &Arc<SimplicialSet>, table: &InvariantTable<SimplicialMap>) -> Result<()> {
    for s in &table.maps {
        if **s.source() != **u || **s.target() != **v {
            return Err(Error::InconsistentTable("table map outside Si(U, V)".into()));
        }
    }
    if v.is_fibrant() {
        let classes = homotopy_classes(u, v)?;
        let mut seen: Vec<Option<Element>> = vec![None; classes.count()];
        for (s, value) in table.maps.iter().zip(&table.values) {
            let i = classes.position(s).ok_or_else(|| Error::InconsistentTable("map missing from Si(U, V)".into()))?;
            let c = classes.class_of(i);
            match &seen[c] {
                Some(w) if w != value => return Err(Error::InconsistentTable(format!("values differ on class {c}"))),
                _ => seen[c] = Some(value.clone()),
            }
        }
    }
    Ok(())
}

pub fn factor_through_main(
    u: &Arc<SimplicialSet>,
    v: &Arc<SimplicialSet>,
    table: &InvariantTable<SimplicialMap>,
) -> Result<FactorDecision> {
    check_table(u, v, table)?;
    let space = MapSpace::new(u, v)?;
    let ambient = FGAbGroup::free(space.rank());
    let constraints = table
        .maps
        .iter()
        .zip(&table.values)
        .map(|(s, value)| {
            let c = space.coords(&space.of_map(s)).ok_or_else(|| Error::InvalidSimplicialMap("c ∘ s outside the map space".into()))?;
            Ok((c, value.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    let straight = Straightness::from_extension(extend_hom(&ambient, &constraints, &table.group)?, ambient);

    let classes = class_group(&normalized_chains(u), &normalized_chains(v))?;
    let constraints = table
        .maps
        .iter()
        .zip(&table.values)
        .map(|(s, value)| Ok((classes.project(&induced_chain_map(s))?, value.clone())))
        .collect::<Result<Vec<_>>>()?;
    let factored = Straightness::from_extension(extend_hom(classes.group(), &constraints, &table.group)?, classes.group().clone());
    let agree = straight.straight == factored.straight;
    Ok(FactorDecision { straight, factored, agree, classes: Some(classes) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ab::matrix::vec_of;
    use crate::sset::{nerve, polygon, FiniteGroup};

    fn setup() -> (Arc<SimplicialSet>, Arc<SimplicialSet>, Vec<SimplicialMap>, Vec<usize>) {
        let u = Arc::new(polygon(3).unwrap());
        let v = Arc::new(nerve(&FiniteGroup::cyclic(2), 3).unwrap());
        let h = homotopy_classes(&u, &v).unwrap();
        (u, v, h.maps().to_vec(), h.class_labels().to_vec())
    }

    fn table(maps: &[SimplicialMap], classes: &[usize], per_class: &[i64], group: FGAbGroup) -> InvariantTable<SimplicialMap> {
        let values = classes.iter().map(|&c| vec_of(&[per_class[c]])).collect();
        InvariantTable::new(maps.to_vec(), classes.to_vec(), values, group).unwrap()
    }

    #[test]
    fn zero_table() {
        let (u, v, maps, classes) = setup();
        let d = factor_through_main(&u, &v, &table(&maps, &classes, &[0, 0], FGAbGroup::free(1))).unwrap();
        assert!(d.straight.straight && d.factored.straight);
    }

    #[test]
    fn winding_mod_two() {
        let (u, v, maps, classes) = setup();
        let d = factor_through_main(&u, &v, &table(&maps, &classes, &[0, 1], FGAbGroup::cyclic(2))).unwrap();
        assert!(d.straight.straight && d.factored.straight);
        let d = factor_through_main(&u, &v, &table(&maps, &classes, &[0, 1], FGAbGroup::free(1))).unwrap();
        assert!(!d.straight.straight && !d.factored.straight);
        let w = d.factored.witness.unwrap();
        assert_eq!(w.divisor, 0.into());
    }

    #[test]
    fn class_constancy_is_checked() {
        let (u, v, maps, _) = setup();
        let labels: Vec<usize> = (0..maps.len()).collect();
        let values = (0..maps.len()).map(|i| vec_of(&[i as i64])).collect();
        let t = InvariantTable::new(maps, labels, values, FGAbGroup::free(1)).unwrap();
        assert!(matches!(factor_through_main(&u, &v, &t), Err(Error::InconsistentTable(_))));
    }
}
