//! Finite sets, the free abelian group `⟨X⟩`, and the maps between finite sets.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::ab::IntMatrix;
use crate::error::{Error, Result};

/// `⟨X⟩` for a finite ordered set `X`; elements are coordinate vectors over `X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeOnSet {
    pub elements: Vec<String>,
}

impl FreeOnSet {
    pub fn new(elements: Vec<String>) -> Result<Self> {
        let mut sorted = elements.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != elements.len() {
            return Err(Error::InvalidArgument("repeated element in a finite set".into()));
        }
        Ok(FreeOnSet { elements })
    }

    /// `{1, …, n}`.
    pub fn numbered(n: usize) -> Self {
        FreeOnSet { elements: (1..=n).map(|i| i.to_string()).collect() }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, x: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == x)
    }

    /// `⟨x⟩`.
    pub fn basis(&self, x: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.len()];
        v[x] = BigInt::one();
        v
    }

    /// `v/x`.
    pub fn coefficient<'a>(&self, v: &'a [BigInt], x: usize) -> &'a BigInt {
        &v[x]
    }

    pub fn augmentation(&self, v: &[BigInt]) -> BigInt {
        v.iter().sum()
    }

    /// Basis of `⟨X⟩₀`: `⟨x_i⟩ − ⟨x_0⟩` for `i ≥ 1`.
    pub fn zero_sum_basis(&self) -> Vec<Vec<BigInt>> {
        (1..self.len())
            .map(|i| {
                let mut v = self.basis(i);
                v[0] = -BigInt::one();
                v
            })
            .collect()
    }
}

/// A map `X → Y` between `{0, …, n−1}` and `{0, …, target−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteMap {
    pub target: usize,
    pub values: Vec<usize>,
}

impl FiniteMap {
    pub fn new(target: usize, values: Vec<usize>) -> Result<Self> {
        if values.iter().any(|&v| v >= target) {
            return Err(Error::InvalidArgument(format!("map value outside a target of size {target}")));
        }
        Ok(FiniteMap { target, values })
    }

    pub fn identity(n: usize) -> Self {
        FiniteMap { target: n, values: (0..n).collect() }
    }

    pub fn constant(source: usize, target: usize, y: usize) -> Self {
        FiniteMap { target, values: vec![y; source] }
    }

    pub fn source(&self) -> usize {
        self.values.len()
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &FiniteMap) -> Result<FiniteMap> {
        if first.target != self.source() {
            return Err(Error::Dimension("maps are not composable".into()));
        }
        Ok(FiniteMap { target: self.target, values: first.values.iter().map(|&x| self.values[x]).collect() })
    }

    /// All maps in lexicographic order of their value lists.
    pub fn all(source: usize, target: usize) -> Vec<FiniteMap> {
        let mut out = Vec::new();
        if target == 0 && source > 0 {
            return out;
        }
        let mut values = vec![0; source];
        loop {
            out.push(FiniteMap { target, values: values.clone() });
            let mut i = source;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                values[i] += 1;
                if values[i] < target {
                    break;
                }
                values[i] = 0;
            }
        }
    }
}

/// A partially defined map `D → Y`, `D ⊆ X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialMap {
    pub target: usize,
    pub values: Vec<Option<usize>>,
}

impl PartialMap {
    pub fn new(target: usize, values: Vec<Option<usize>>) -> Result<Self> {
        if values.iter().flatten().any(|&v| v >= target) {
            return Err(Error::InvalidArgument(format!("map value outside a target of size {target}")));
        }
        Ok(PartialMap { target, values })
    }

    /// Restriction of `a` to the indicator set `domain`.
    pub fn restrict(a: &FiniteMap, domain: &[bool]) -> Self {
        PartialMap { target: a.target, values: a.values.iter().zip(domain).map(|(&v, &d)| d.then_some(v)).collect() }
    }

    pub fn domain(&self) -> Vec<bool> {
        self.values.iter().map(Option::is_some).collect()
    }

    /// `(D₁ ∩ D₂ ∩ {a₁ = a₂}, a₁)`.
    pub fn meet(&self, other: &PartialMap) -> PartialMap {
        PartialMap {
            target: self.target,
            values: self.values.iter().zip(&other.values).map(|(a, b)| if a == b { *a } else { None }).collect(),
        }
    }
}

/// `⟨a⟩`: the `Y×X` matrix with a single 1 in each column.
pub fn canonical_hom(a: &FiniteMap) -> IntMatrix {
    let mut m = IntMatrix::zeros(a.target, a.source());
    for (x, &y) in a.values.iter().enumerate() {
        m[(y, x)] = BigInt::one();
    }
    m
}

/// `e(D, a)`: sends `⟨x⟩` to `⟨a(x)⟩` on `D` and to 0 elsewhere.
pub fn partial_hom(a: &PartialMap) -> IntMatrix {
    let mut m = IntMatrix::zeros(a.target, a.values.len());
    for (x, v) in a.values.iter().enumerate() {
        if let Some(y) = v {
            m[(*y, x)] = BigInt::one();
        }
    }
    m
}

/// Entrywise product.
pub fn hadamard(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::Dimension("entrywise product of differently shaped matrices".into()));
    }
    Ok(IntMatrix::from_fn(a.rows(), a.cols(), |r, c| &a[(r, c)] * &b[(r, c)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ab::matrix::vec_of;

    #[test]
    fn canonical_homs() {
        assert_eq!(canonical_hom(&FiniteMap::identity(2)), IntMatrix::identity(2));
        assert_eq!(canonical_hom(&FiniteMap::constant(3, 2, 1)), IntMatrix::from_rows(&[vec![0, 0, 0], vec![1, 1, 1]]));
        assert_eq!(canonical_hom(&FiniteMap::new(2, vec![1, 0]).unwrap()), IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]));
    }

    #[test]
    fn partial_homs() {
        for a in FiniteMap::all(3, 2) {
            assert_eq!(partial_hom(&PartialMap::restrict(&a, &[true; 3])), canonical_hom(&a));
            assert!(partial_hom(&PartialMap::restrict(&a, &[false; 3])).is_zero());
        }
    }

    #[test]
    fn product_law_is_exhaustive_on_small_sets() {
        let domains: Vec<Vec<bool>> = (0..8u8).map(|m| (0..3).map(|i| m >> i & 1 == 1).collect()).collect();
        for a1 in FiniteMap::all(3, 2) {
            for a2 in FiniteMap::all(3, 2) {
                for d1 in &domains {
                    for d2 in &domains {
                        let p1 = PartialMap::restrict(&a1, d1);
                        let p2 = PartialMap::restrict(&a2, d2);
                        let lhs = hadamard(&partial_hom(&p1), &partial_hom(&p2)).unwrap();
                        assert_eq!(lhs, partial_hom(&p1.meet(&p2)));
                    }
                }
            }
        }
    }

    #[test]
    fn free_group_coordinates() {
        let x = FreeOnSet::numbered(3);
        assert_eq!(x.basis(1), vec_of(&[0, 1, 0]));
        assert!(x.zero_sum_basis().iter().all(|v| x.augmentation(v).is_zero()));
        assert!(FreeOnSet::new(vec!["a".into(), "a".into()]).is_err());
        assert_eq!(FiniteMap::all(2, 3).len(), 9);
        assert_eq!(FiniteMap::all(0, 0).len(), 1);
    }
}
