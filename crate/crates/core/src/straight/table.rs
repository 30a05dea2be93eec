//! Invariant tables and the straightness decision.

use num_bigint::BigInt;
use serde::Serialize;

use super::lgroup::{base_change, Coefficients, LGroup};
use super::sets::{canonical_hom, FiniteMap};
use crate::ab::{extend_hom, AbHom, Element, Extension, FGAbGroup, IntMatrix, Witness};
use crate::error::{Error, Result};

/// Values `f([aᵢ]) ∈ M` on a list of maps with class labels.
#[derive(Clone, Debug)]
pub struct InvariantTable<T> {
    pub maps: Vec<T>,
    pub classes: Vec<usize>,
    pub values: Vec<Element>,
    pub group: FGAbGroup,
}

impl<T> InvariantTable<T> {
    /// Checks lengths, reduces values in `M`, and checks constancy on classes.
    pub fn new(maps: Vec<T>, classes: Vec<usize>, values: Vec<Element>, group: FGAbGroup) -> Result<Self> {
        if classes.len() != maps.len() || values.len() != maps.len() {
            return Err(Error::InconsistentTable("maps, classes and values differ in length".into()));
        }
        if values.iter().any(|v| v.len() != group.ngens()) {
            return Err(Error::InconsistentTable("value with the wrong number of coordinates".into()));
        }
        let values: Vec<Element> = values.iter().map(|v| group.reduce(v)).collect();
        for i in 0..maps.len() {
            for j in 0..i {
                if classes[i] == classes[j] && values[i] != values[j] {
                    return Err(Error::InconsistentTable(format!("entries {j} and {i} share a class but not a value")));
                }
            }
        }
        Ok(InvariantTable { maps, classes, values, group })
    }

    /// Each map in its own class.
    pub fn discrete(maps: Vec<T>, values: Vec<Element>, group: FGAbGroup) -> Result<Self> {
        let classes = (0..maps.len()).collect();
        Self::new(maps, classes, values, group)
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// One entry per class, the first listed.
    pub fn class_representatives(&self) -> Vec<usize> {
        let mut seen: Vec<usize> = Vec::new();
        let mut out = Vec::new();
        for (i, c) in self.classes.iter().enumerate() {
            if !seen.contains(c) {
                seen.push(*c);
                out.push(i);
            }
        }
        out
    }
}

/// Outcome of a straightness decision.
#[derive(Clone, Debug, Serialize)]
pub struct Straightness {
    pub straight: bool,
    /// `F` on the row-major `E_yx` coordinates.
    #[serde(rename = "F", skip_serializing_if = "Option::is_none")]
    pub hom: Option<IntMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip)]
    pub source: Option<FGAbGroup>,
}

impl Straightness {
    pub(crate) fn from_extension(e: Extension, source: FGAbGroup) -> Self {
        match e {
            Extension::Found(h) => Straightness { straight: true, hom: Some(h.matrix().clone()), witness: None, source: Some(source) },
            Extension::Refused(w) => Straightness { straight: false, hom: None, witness: Some(w), source: Some(source) },
        }
    }

    /// `F` as a homomorphism into `M`.
    pub fn as_hom(&self, target: &FGAbGroup) -> Option<AbHom> {
        AbHom::new(self.source.clone()?, target.clone(), self.hom.clone()?).ok()
    }
}

fn shape(table: &InvariantTable<FiniteMap>) -> Result<LGroup> {
    let nx = table.maps.first().map_or(0, FiniteMap::source);
    let ny = table.maps.first().map_or(0, |a| a.target);
    if table.maps.iter().any(|a| a.source() != nx || a.target != ny) {
        return Err(Error::InconsistentTable("maps between different sets".into()));
    }
    Ok(LGroup::new(nx, ny))
}

/// Decides whether `f([aᵢ]) = F(⟨aᵢ⟩)` for one homomorphism `F: L(X, Y) → M`.
pub fn is_straight(table: &InvariantTable<FiniteMap>) -> Result<Straightness> {
    let g = shape(table)?;
    let source = FGAbGroup::free(g.rank());
    let constraints: Vec<(Element, Element)> =
        table.maps.iter().zip(&table.values).map(|(a, v)| (g.flatten(&canonical_hom(a)), v.clone())).collect();
    Ok(Straightness::from_extension(extend_hom(&source, &constraints, &table.group)?, source))
}

/// `m · M = 0`.
pub fn is_module_over(group: &FGAbGroup, m: u64) -> bool {
    (0..group.ngens()).all(|i| {
        let g = group.generator(i);
        group.is_zero(&g.iter().map(|x| x * BigInt::from(m)).collect::<Vec<_>>())
    })
}

/// Decides `K`-straightness: `f([aᵢ]) = F̃(⟨aᵢ⟩_K)` for a `K`-homomorphism `F̃: L_K(X, Y) → M`.
pub fn is_k_straight(table: &InvariantTable<FiniteMap>, ring: Coefficients) -> Result<Straightness> {
    if let Coefficients::Modulo(m) = ring {
        if !is_module_over(&table.group, m) {
            return Err(Error::NotAModule(m));
        }
    }
    let g = shape(table)?;
    let source = ring.free_module(g.rank());
    let constraints: Vec<(Element, Element)> = table
        .maps
        .iter()
        .zip(&table.values)
        .map(|(a, v)| (g.flatten(&base_change(&canonical_hom(a), ring)), v.clone()))
        .collect();
    Ok(Straightness::from_extension(extend_hom(&source, &constraints, &table.group)?, source))
}

/// `(K-straight, straight)`.
pub fn k_straight_equiv(table: &InvariantTable<FiniteMap>, ring: Coefficients) -> Result<(bool, bool)> {
    Ok((is_k_straight(table, ring)?.straight, is_straight(table)?.straight))
}

/// `f̃([ã]) = f([s ∘ ã ∘ r])` for `r: X → X̃`, `s: Ỹ → Y`.
pub fn induced_invariant(
    table: &InvariantTable<FiniteMap>,
    tilde: &[FiniteMap],
    r: &FiniteMap,
    s: &FiniteMap,
) -> Result<InvariantTable<FiniteMap>> {
    let mut classes = Vec::with_capacity(tilde.len());
    let mut values = Vec::with_capacity(tilde.len());
    for a in tilde {
        let composite = s.after(&a.after(r)?)?;
        let i = table
            .maps
            .iter()
            .position(|b| *b == composite)
            .ok_or_else(|| Error::InvalidArgument("composite map missing from the table".into()))?;
        classes.push(table.classes[i]);
        values.push(table.values[i].clone());
    }
    InvariantTable::new(tilde.to_vec(), classes, values, table.group.clone())
}

/// The matrix of `T(ũ) = ⟨s⟩ ∘ ũ ∘ ⟨r⟩` on row-major coordinates.
pub fn transfer_matrix(r: &FiniteMap, s: &FiniteMap) -> Result<IntMatrix> {
    let (nx, nxt) = (r.source(), r.target);
    let (nyt, ny) = (s.source(), s.target);
    let small = LGroup::new(nxt, nyt);
    let big = LGroup::new(nx, ny);
    let (sm, rm) = (canonical_hom(s), canonical_hom(r));
    let cols = (0..small.rank())
        .map(|k| {
            let mut e = vec![BigInt::from(0); small.rank()];
            e[k] = BigInt::from(1);
            let u = small.unflatten(&e);
            Ok(big.flatten(&sm.checked_mul(&u)?.checked_mul(&rm)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntMatrix::from_columns(big.rank(), &cols))
}
