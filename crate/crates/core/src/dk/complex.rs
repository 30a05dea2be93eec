//! Bounded, degreewise free chain complexes and chain maps.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::ab::lattice::{kernel, LinearSolver};
use crate::ab::{Element, FGAbGroup, IntMatrix};
use crate::error::{Error, Result};
use crate::sset::{SimplicialMap, SimplicialSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    labels: Vec<Vec<String>>,
    /// `boundaries[n]` is `∂_n: C_n -> C_{n-1}`; entry 0 is the empty map to degree −1.
    boundaries: Vec<IntMatrix>,
    truncated: bool,
}

impl ChainComplex {
    /// `boundaries[k]` is `∂_{k+1}`. Checks shapes and `∂∂ = 0`.
    pub fn new(labels: Vec<Vec<String>>, boundaries: Vec<IntMatrix>, truncated: bool) -> Result<Self> {
        let mut labels = labels;
        if labels.is_empty() {
            labels.push(Vec::new());
        }
        if boundaries.len() + 1 != labels.len() {
            return Err(Error::InvalidComplex("one boundary matrix per positive degree".into()));
        }
        let mut all = vec![IntMatrix::zeros(0, labels[0].len())];
        all.extend(boundaries);
        for n in 1..all.len() {
            if all[n].rows() != labels[n - 1].len() || all[n].cols() != labels[n].len() {
                return Err(Error::InvalidComplex(format!("boundary in degree {n} has the wrong shape")));
            }
            if n >= 2 && !all[n - 1].checked_mul(&all[n])?.is_zero() {
                return Err(Error::InvalidComplex(format!("boundary squares to a nonzero map in degree {n}")));
            }
        }
        Ok(ChainComplex { labels, boundaries: all, truncated })
    }

    pub fn zero() -> Self {
        ChainComplex { labels: vec![Vec::new()], boundaries: vec![IntMatrix::zeros(0, 0)], truncated: false }
    }

    pub fn top(&self) -> usize {
        self.labels.len() - 1
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn rank(&self, n: usize) -> usize {
        self.labels.get(n).map_or(0, |l| l.len())
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.labels.iter().map(|l| l.len()).collect()
    }

    pub fn labels(&self, n: usize) -> &[String] {
        self.labels.get(n).map_or(&[], |l| l.as_slice())
    }

    /// `∂_n`, zero outside the stored range.
    pub fn boundary(&self, n: usize) -> IntMatrix {
        if n == 0 {
            return IntMatrix::zeros(0, self.rank(0));
        }
        match self.boundaries.get(n) {
            Some(b) => b.clone(),
            None => IntMatrix::zeros(self.rank(n - 1), self.rank(n)),
        }
    }

    /// Errors unless degree `n` and its boundary are known.
    pub fn require_degree(&self, n: usize) -> Result<()> {
        if self.truncated && n > self.top() {
            return Err(Error::CutoffTooSmall { needed: n, cutoff: self.top() });
        }
        Ok(())
    }

    /// The same complex forgotten above degree `top`.
    pub fn truncate(&self, top: usize) -> ChainComplex {
        if top >= self.top() {
            return self.clone();
        }
        ChainComplex {
            labels: self.labels[..=top].to_vec(),
            boundaries: self.boundaries[..=top].to_vec(),
            truncated: true,
        }
    }

    /// Tensor with `Z/p` is taken degreewise; this returns the same matrices for reduction.
    pub fn boundaries(&self) -> &[IntMatrix] {
        &self.boundaries
    }
}

/// Normalized chains: basis in degree `n` is the nondegenerate `n`-simplices,
/// degenerate faces are dropped from the boundary.
pub fn normalized_chains(u: &SimplicialSet) -> ChainComplex {
    let top = u.top();
    let labels: Vec<Vec<String>> = (0..=top).map(|n| u.labels(n).to_vec()).collect();
    let boundaries = (1..=top)
        .map(|n| {
            let mut m = IntMatrix::zeros(u.count(n - 1), u.count(n));
            for x in 0..u.count(n) {
                for (i, f) in u.nondeg_faces(n, x).iter().enumerate() {
                    if f.is_nondegenerate() {
                        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                        m[(f.base, x)] += sign;
                    }
                }
            }
            m
        })
        .collect();
    ChainComplex::new(labels, boundaries, !u.is_compact()).expect("normalized chains of a simplicial set")
}

/// `H_i` presented on a basis of cycles.
#[derive(Clone, Debug)]
pub struct Homology {
    degree: usize,
    group: FGAbGroup,
    cycles: IntMatrix,
    solver: LinearSolver,
}

impl Homology {
    /// Homology of the complex as stored, treating it as zero above its top degree.
    pub fn of_bounded(c: &ChainComplex, i: usize) -> Self {
        let cycles = kernel(&c.boundary(i));
        let solver = LinearSolver::new(&cycles);
        let next = c.boundary(i + 1);
        let rel: Vec<Vec<BigInt>> = (0..next.cols())
            .map(|j| solver.solve(&next.column(j)).expect("boundaries are cycles"))
            .collect();
        let group = FGAbGroup::new(cycles.cols(), IntMatrix::from_columns(cycles.cols(), &rel)).expect("homology");
        Homology { degree: i, group, cycles, solver }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn group(&self) -> &FGAbGroup {
        &self.group
    }

    /// Columns are the cycles representing the generators.
    pub fn cycles(&self) -> &IntMatrix {
        &self.cycles
    }

    /// Exact coordinates of a cycle on the cycle basis.
    pub fn cycle_coords(&self, cycle: &[BigInt]) -> Option<Vec<BigInt>> {
        self.solver.solve(cycle)
    }

    /// Class of a cycle.
    pub fn class_of(&self, cycle: &[BigInt]) -> Result<Element> {
        let c = self.solver.solve(cycle).ok_or_else(|| Error::InvalidArgument("chain is not a cycle".into()))?;
        Ok(self.group.reduce(&c))
    }
}

pub fn homology(c: &ChainComplex, i: usize) -> Result<FGAbGroup> {
    c.require_degree(i + 1)?;
    Ok(Homology::of_bounded(c, i).group().clone())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    matrices: Vec<IntMatrix>,
}

impl ChainMap {
    /// One matrix per source degree; checks `∂f = f∂`.
    pub fn new(source: ChainComplex, target: ChainComplex, matrices: Vec<IntMatrix>) -> Result<Self> {
        target.require_degree(source.top())?;
        if matrices.len() != source.top() + 1 {
            return Err(Error::InvalidChainMap("one matrix per source degree".into()));
        }
        for (n, m) in matrices.iter().enumerate() {
            if m.rows() != target.rank(n) || m.cols() != source.rank(n) {
                return Err(Error::InvalidChainMap(format!("degree {n} matrix has the wrong shape")));
            }
        }
        for n in 1..matrices.len() {
            let lhs = target.boundary(n).checked_mul(&matrices[n])?;
            let rhs = matrices[n - 1].checked_mul(&source.boundary(n))?;
            if lhs != rhs {
                return Err(Error::InvalidChainMap(format!("does not commute with the boundary in degree {n}")));
            }
        }
        Ok(ChainMap { source, target, matrices })
    }

    pub fn zero(source: ChainComplex, target: ChainComplex) -> Self {
        let matrices = (0..=source.top()).map(|n| IntMatrix::zeros(target.rank(n), source.rank(n))).collect();
        ChainMap { source, target, matrices }
    }

    pub fn identity(c: ChainComplex) -> Self {
        let matrices = (0..=c.top()).map(|n| IntMatrix::identity(c.rank(n))).collect();
        ChainMap { source: c.clone(), target: c, matrices }
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn matrices(&self) -> &[IntMatrix] {
        &self.matrices
    }

    pub fn matrix(&self, n: usize) -> &IntMatrix {
        &self.matrices[n]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ChainMap) -> Result<ChainMap> {
        if self.target != other.source {
            return Err(Error::InvalidChainMap("composition of incompatible chain maps".into()));
        }
        let matrices = (0..=self.source.top())
            .map(|n| match other.matrices.get(n) {
                Some(m) => m.checked_mul(&self.matrices[n]),
                None => Ok(IntMatrix::zeros(other.target.rank(n), self.source.rank(n))),
            })
            .collect::<Result<Vec<_>>>()?;
        ChainMap::new(self.source.clone(), other.target.clone(), matrices)
    }

    pub fn add(&self, other: &ChainMap) -> Result<ChainMap> {
        let matrices = self.matrices.iter().zip(&other.matrices).map(|(a, b)| a.add(b)).collect::<Result<Vec<_>>>()?;
        Ok(ChainMap { source: self.source.clone(), target: self.target.clone(), matrices })
    }

    /// Induced map on `H_i`, as a matrix between the cycle presentations.
    pub fn on_homology(&self, i: usize, hs: &Homology, ht: &Homology) -> Result<crate::ab::AbHom> {
        let f = &self.matrices[i];
        let cols = (0..hs.cycles().cols())
            .map(|j| ht.class_of(&f.mul_vec(&hs.cycles().column(j))))
            .collect::<Result<Vec<_>>>()?;
        crate::ab::AbHom::new(hs.group().clone(), ht.group().clone(), IntMatrix::from_columns(ht.group().ngens(), &cols))
    }
}

/// The chain map of `N` induced by a simplicial map.
pub fn induced_chain_map(s: &SimplicialMap) -> ChainMap {
    let source = normalized_chains(s.source());
    let target = normalized_chains(s.target());
    let matrices = (0..=source.top())
        .map(|n| {
            let mut m = IntMatrix::zeros(target.rank(n), source.rank(n));
            for x in 0..source.rank(n) {
                let img = s.image(n, x);
                if img.is_nondegenerate() {
                    m[(img.base, x)] = BigInt::one();
                }
            }
            m
        })
        .collect();
    ChainMap { source, target, matrices }
}

/// Layout of the flattened chain-level hom groups.
#[derive(Clone, Debug)]
pub(crate) struct Blocks {
    pub offsets: Vec<usize>,
    pub shapes: Vec<(usize, usize)>,
    pub total: usize,
}

impl Blocks {
    pub fn new(shapes: Vec<(usize, usize)>) -> Self {
        let mut offsets = Vec::with_capacity(shapes.len());
        let mut total = 0;
        for &(r, c) in &shapes {
            offsets.push(total);
            total += r * c;
        }
        Blocks { offsets, shapes, total }
    }

    pub fn at(&self, block: usize, i: usize, j: usize) -> usize {
        self.offsets[block] + i * self.shapes[block].1 + j
    }

    pub fn unflatten(&self, v: &[BigInt]) -> Vec<IntMatrix> {
        self.shapes
            .iter()
            .enumerate()
            .map(|(b, &(r, c))| IntMatrix::from_fn(r, c, |i, j| v[self.at(b, i, j)].clone()))
            .collect()
    }

    pub fn flatten(&self, ms: &[IntMatrix]) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.total];
        for (b, m) in ms.iter().enumerate() {
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    v[self.at(b, i, j)] = m[(i, j)].clone();
                }
            }
        }
        v
    }
}

/// Serializable summary of a complex.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexSummary {
    pub ranks: Vec<usize>,
    pub truncated: bool,
}

impl From<&ChainComplex> for ComplexSummary {
    fn from(c: &ChainComplex) -> Self {
        ComplexSummary { ranks: c.ranks(), truncated: c.truncated }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{boundary, nerve, polygon, standard_simplex, FiniteGroup};

    #[test]
    fn point_and_triangle() {
        let pt = normalized_chains(&standard_simplex(0));
        assert_eq!(pt.ranks(), vec![1]);
        assert_eq!(homology(&pt, 0).unwrap().describe(), "Z");
        let tri = normalized_chains(&polygon(3).unwrap());
        assert_eq!(homology(&tri, 0).unwrap().describe(), "Z");
        assert_eq!(homology(&tri, 1).unwrap().describe(), "Z");
        assert!(homology(&tri, 2).unwrap().is_trivial());
    }

    #[test]
    fn nerve_homology() {
        let b = normalized_chains(&nerve(&FiniteGroup::cyclic(2), 3).unwrap());
        assert_eq!(homology(&b, 1).unwrap().describe(), "Z/2");
        assert!(homology(&b, 2).unwrap().is_trivial());
        assert!(matches!(homology(&b, 3), Err(Error::CutoffTooSmall { .. })));
        let s = normalized_chains(&boundary(3));
        assert_eq!(homology(&s, 2).unwrap().describe(), "Z");
        assert!(homology(&ChainComplex::zero(), 0).unwrap().is_trivial());
    }

    #[test]
    fn bad_complexes_are_rejected() {
        let labels = vec![vec!["a".to_string()], vec!["b".to_string()], vec!["c".to_string()]];
        let d = vec![IntMatrix::from_rows(&[vec![1]]), IntMatrix::from_rows(&[vec![1]])];
        assert!(ChainComplex::new(labels, d, false).is_err());
    }

    #[test]
    fn identity_induces_identity() {
        let p = std::sync::Arc::new(polygon(4).unwrap());
        let f = induced_chain_map(&SimplicialMap::identity(p.clone()));
        assert_eq!(f, ChainMap::identity(normalized_chains(&p)));
    }
}
