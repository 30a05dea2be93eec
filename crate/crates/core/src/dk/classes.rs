//! The group `[C, D]` of chain-homotopy classes of chain maps.

use num_bigint::BigInt;
use num_traits::Zero;

use super::complex::{induced_chain_map, normalized_chains, Blocks, ChainComplex, ChainMap};
use crate::ab::lattice::{kernel, LinearSolver};
use crate::ab::matrix::unit_vec;
use crate::ab::{Element, FGAbGroup, IntMatrix};
use crate::error::{Error, Result};
use crate::sset::SimplicialMap;

/// `[C, D]`, presented on a lattice basis of the chain maps modulo null-homotopic ones.
#[derive(Clone, Debug)]
pub struct HomotopyClassGroup {
    source: ChainComplex,
    target: ChainComplex,
    group: FGAbGroup,
    maps: Blocks,
    homotopies: Blocks,
    /// Columns: a basis of the chain maps, flattened.
    cycles: IntMatrix,
    /// Columns: images of the elementary homotopies, flattened.
    null: IntMatrix,
    /// The chain-map condition on flattened maps.
    phi: IntMatrix,
    solver: LinearSolver,
}

/// Computes `[C, D]`. The target must be known through degree `top(C) + 1`.
pub fn class_group(c: &ChainComplex, d: &ChainComplex) -> Result<HomotopyClassGroup> {
    let top = c.top();
    d.require_degree(top + 1)?;
    let maps = Blocks::new((0..=top).map(|n| (d.rank(n), c.rank(n))).collect());
    let homotopies = Blocks::new((0..=top).map(|n| (d.rank(n + 1), c.rank(n))).collect());
    let commute = Blocks::new((1..=top).map(|n| (d.rank(n - 1), c.rank(n))).collect());

    // Φ(f)_n = ∂f_n − f_{n−1}∂
    let mut phi = IntMatrix::zeros(commute.total, maps.total);
    for k in 0..maps.total {
        let f = maps.unflatten(&unit_vec(maps.total, k));
        let out: Vec<IntMatrix> = (1..=top)
            .map(|n| d.boundary(n).checked_mul(&f[n]).and_then(|a| a.sub(&f[n - 1].checked_mul(&c.boundary(n))?)))
            .collect::<Result<_>>()?;
        for (r, v) in commute.flatten(&out).into_iter().enumerate() {
            phi[(r, k)] = v;
        }
    }
    // Ψ(h)_n = ∂h_n + h_{n−1}∂
    let mut psi = IntMatrix::zeros(maps.total, homotopies.total);
    for k in 0..homotopies.total {
        let h = homotopies.unflatten(&unit_vec(homotopies.total, k));
        let out: Vec<IntMatrix> = (0..=top)
            .map(|n| {
                let a = d.boundary(n + 1).checked_mul(&h[n])?;
                if n == 0 {
                    Ok(a)
                } else {
                    a.add(&h[n - 1].checked_mul(&c.boundary(n))?)
                }
            })
            .collect::<Result<_>>()?;
        for (r, v) in maps.flatten(&out).into_iter().enumerate() {
            psi[(r, k)] = v;
        }
    }
    let cycles = kernel(&phi);
    let solver = LinearSolver::new(&cycles);
    let rel: Vec<Vec<BigInt>> = (0..psi.cols())
        .map(|j| solver.solve(&psi.column(j)).expect("null-homotopic maps are chain maps"))
        .collect();
    let group = FGAbGroup::new(cycles.cols(), IntMatrix::from_columns(cycles.cols(), &rel))?;
    Ok(HomotopyClassGroup { source: c.clone(), target: d.clone(), group, maps, homotopies, cycles, null: psi, phi, solver })
}

impl HomotopyClassGroup {
    pub fn group(&self) -> &FGAbGroup {
        &self.group
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn flatten(&self, f: &ChainMap) -> Vec<BigInt> {
        self.maps.flatten(f.matrices())
    }

    pub fn unflatten(&self, v: &[BigInt]) -> Result<ChainMap> {
        ChainMap::new(self.source.clone(), self.target.clone(), self.maps.unflatten(v))
    }

    pub fn flat_len(&self) -> usize {
        self.maps.total
    }

    /// Flattened chain-map basis (one column per generator of the presentation).
    pub fn cycle_basis(&self) -> &IntMatrix {
        &self.cycles
    }

    /// Flattened images of elementary homotopies; they span the null-homotopic maps.
    pub fn null_homotopic(&self) -> &IntMatrix {
        &self.null
    }

    /// Matrix whose kernel is the lattice of flattened chain maps.
    pub fn chain_condition(&self) -> &IntMatrix {
        &self.phi
    }

    /// The chain map representing generator `j`.
    pub fn basis_map(&self, j: usize) -> ChainMap {
        self.unflatten(&self.cycles.column(j)).expect("basis columns are chain maps")
    }

    /// Class of a flattened chain map.
    pub fn project_flat(&self, v: &[BigInt]) -> Result<Element> {
        let c = self.solver.solve(v).ok_or_else(|| Error::InvalidChainMap("not a chain map".into()))?;
        Ok(self.group.reduce(&c))
    }

    pub fn project(&self, f: &ChainMap) -> Result<Element> {
        let top = self.source.top();
        if f.source().ranks() != self.source.ranks() || (0..=top).any(|n| f.target().rank(n) != self.target.rank(n)) {
            return Err(Error::InvalidChainMap("chain map between other complexes".into()));
        }
        self.project_flat(&self.flatten(f))
    }

    /// A chain map in the given class (the combination of basis maps).
    pub fn representative(&self, x: &[BigInt]) -> ChainMap {
        let mut v = vec![BigInt::zero(); self.maps.total];
        for (j, c) in x.iter().enumerate() {
            if !c.is_zero() {
                for (r, e) in self.cycles.column(j).iter().enumerate() {
                    v[r] += c * e;
                }
            }
        }
        self.unflatten(&v).expect("combination of chain maps")
    }

    /// A chain homotopy `h` with `f = ∂h + h∂`, if `f` is null-homotopic.
    pub fn null_homotopy(&self, f: &ChainMap) -> Option<Vec<IntMatrix>> {
        let x = LinearSolver::new(&self.null).solve(&self.flatten(f))?;
        Some(self.homotopies.unflatten(&x))
    }

    pub fn homotopic(&self, f: &ChainMap, g: &ChainMap) -> Result<bool> {
        Ok(self.group.elem_eq(&self.project(f)?, &self.project(g)?))
    }
}

/// `h([s]) = [N s]` in `[N U, N V]`.
pub fn main_invariant(s: &SimplicialMap) -> Result<(HomotopyClassGroup, Element)> {
    let c = normalized_chains(s.source());
    let d = normalized_chains(s.target());
    let classes = class_group(&c, &d)?;
    let x = classes.project(&induced_chain_map(s))?;
    Ok((classes, x))
}
