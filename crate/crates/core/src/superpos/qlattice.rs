//! The system `Q` of standard-simplex subsets and its ring `⟨Q⟩`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ab::{IntMatrix, LinearSolver};
use crate::error::{Error, Result};
use crate::sset::word::combinations;
use crate::sset::{SimplicialSet, SimplicialSubset};

/// Whether the characteristic map of the nondegenerate simplex `(n, x)` is injective.
pub fn is_embedded(u: &SimplicialSet, n: usize, x: usize) -> bool {
    let mut seen = std::collections::HashSet::new();
    for k in 0..=n {
        for theta in combinations(n + 1, k + 1) {
            let s = u.pull(n, x, &theta);
            if !s.is_nondegenerate() || !seen.insert((k, s.base)) {
                return false;
            }
        }
    }
    true
}

/// `Q` for a compact polyhedral host, with `e` and the identity `I = e⁻¹(1)`.
#[derive(Clone, Debug)]
pub struct QLattice {
    host: Arc<SimplicialSet>,
    members: Vec<SimplicialSubset>,
    generators: Vec<Option<(usize, usize)>>,
    meet: Vec<Vec<usize>>,
    e_matrix: IntMatrix,
    identity: Vec<BigInt>,
}

pub fn q_lattice(u: &Arc<SimplicialSet>) -> Result<QLattice> {
    if !u.is_compact() {
        return Err(Error::NotCompact);
    }
    let mut members = vec![SimplicialSubset::empty(u.clone())];
    let mut generators = vec![None];
    for n in 0..=u.top() {
        for x in 0..u.count(n) {
            if !is_embedded(u, n, x) {
                let l = u.label(n, x).to_string();
                return Err(Error::NotPolyhedral { first: l.clone(), second: l });
            }
            members.push(SimplicialSubset::closure(u.clone(), n, x));
            generators.push(Some((n, x)));
        }
    }
    let name = |i: usize| generators[i].map_or("∅".to_string(), |(n, x)| u.label(n, x).to_string());
    let size = members.len();
    let mut meet = vec![vec![0; size]; size];
    for i in 0..size {
        for j in 0..=i {
            let c = members[i].intersection(&members[j]);
            let k = members
                .iter()
                .position(|m| *m == c)
                .ok_or_else(|| Error::NotPolyhedral { first: name(j), second: name(i) })?;
            meet[i][j] = k;
            meet[j][i] = k;
        }
    }
    // column A is e(⟨A⟩): 1 at each B ⊆ A
    let e_matrix = IntMatrix::from_fn(size, size, |b, a| {
        if members[b].is_subset_of(&members[a]) {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    });
    let ones = vec![BigInt::one(); size];
    let identity = LinearSolver::new(&e_matrix)
        .solve(&ones)
        .ok_or_else(|| Error::SingularPiece("e is not invertible".into()))?;
    Ok(QLattice { host: u.clone(), members, generators, meet, e_matrix, identity })
}

impl QLattice {
    pub fn host(&self) -> &Arc<SimplicialSet> {
        &self.host
    }

    /// `∅` first, then the closures of the nondegenerate simplices in canonical order.
    pub fn members(&self) -> &[SimplicialSubset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The simplex generating member `i`; `None` for `∅`.
    pub fn generator(&self, i: usize) -> Option<(usize, usize)> {
        self.generators[i]
    }

    pub fn name(&self, i: usize) -> String {
        self.generators[i].map_or("∅".to_string(), |(n, x)| self.host.label(n, x).to_string())
    }

    /// Index of `A_i ∩ A_j`.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i][j]
    }

    pub fn e_matrix(&self) -> &IntMatrix {
        &self.e_matrix
    }

    /// Coordinates of `I` over the members.
    pub fn identity(&self) -> &[BigInt] {
        &self.identity
    }

    pub fn basis(&self, i: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.len()];
        v[i] = BigInt::one();
        v
    }

    /// Product in `⟨Q⟩`.
    pub fn multiply(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.len()];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                out[self.meet[i][j]] += x * y;
            }
        }
        out
    }

    pub fn e(&self, a: &[BigInt]) -> Vec<BigInt> {
        self.e_matrix.mul_vec(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ab::matrix::vec_of;
    use crate::sset::{boundary, nerve, polygon, standard_simplex, FiniteGroup};

    #[test]
    fn identities_of_small_hosts() {
        let q = q_lattice(&Arc::new(standard_simplex(0))).unwrap();
        assert_eq!(q.identity(), vec_of(&[0, 1]).as_slice());
        let q = q_lattice(&Arc::new(standard_simplex(1))).unwrap();
        assert_eq!(q.identity(), vec_of(&[0, 0, 0, 1]).as_slice());
        let q = q_lattice(&Arc::new(boundary(2))).unwrap();
        assert_eq!(q.identity(), vec_of(&[1, -1, -1, -1, 1, 1, 1]).as_slice());
    }

    #[test]
    fn identity_is_multiplicative() {
        for u in [standard_simplex(2), boundary(2), polygon(4).unwrap(), boundary(3)] {
            let q = q_lattice(&Arc::new(u)).unwrap();
            assert!(q.e_matrix().is_unimodular());
            assert_eq!(q.e(q.identity()), vec![BigInt::one(); q.len()]);
            for i in 0..q.len() {
                assert_eq!(q.multiply(q.identity(), &q.basis(i)), q.basis(i));
                assert_eq!(q.multiply(&q.basis(i), q.identity()), q.basis(i));
            }
        }
    }

    #[test]
    fn nerves_are_not_polyhedral() {
        let v = Arc::new(nerve(&FiniteGroup::cyclic(2), 2).unwrap());
        assert!(matches!(q_lattice(&v), Err(Error::NotCompact) | Err(Error::NotPolyhedral { .. })));
    }

    #[test]
    fn two_edges_sharing_both_ends() {
        // a bigon: two edges with the same pair of vertices meet in two points
        let labels = vec![vec!["a".to_string(), "b".to_string()], vec!["p".to_string(), "q".to_string()]];
        let f = |b| crate::sset::Simplex::nondegenerate(0, b);
        let faces = vec![vec![Vec::new(), Vec::new()], vec![vec![f(1), f(0)], vec![f(1), f(0)]]];
        let u = Arc::new(SimplicialSet::new("bigon", labels, faces, false).unwrap());
        assert_eq!(q_lattice(&u).unwrap_err(), Error::NotPolyhedral { first: "p".into(), second: "q".into() });
    }
}
