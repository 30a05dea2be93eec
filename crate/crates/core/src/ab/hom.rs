//! Presentations of `Hom(A, B)` and `Ext(A, B)` with explicit element dictionaries.

use num_bigint::BigInt;
use num_traits::Zero;

use super::group::{AbHom, Element, FGAbGroup};
use super::lattice::{column_basis, kernel, LinearSolver};
use super::matrix::{zero_vec, IntMatrix};
use crate::error::{Error, Result};

/// `Hom(A, B)` presented on a lattice basis of admissible generator-image matrices.
#[derive(Clone, Debug)]
pub struct HomGroup {
    source: FGAbGroup,
    target: FGAbGroup,
    group: FGAbGroup,
    /// Generator `k` of `group` is the homomorphism with this matrix.
    basis: Vec<IntMatrix>,
    solver: LinearSolver,
}

fn vectorize(m: &IntMatrix) -> Vec<BigInt> {
    // column-major: entry (i, k) lands at k * rows + i
    (0..m.cols()).flat_map(|k| m.column(k)).collect()
}

fn unvectorize(v: &[BigInt], rows: usize, cols: usize) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |i, k| v[k * rows + i].clone())
}

impl HomGroup {
    pub fn new(source: &FGAbGroup, target: &FGAbGroup) -> Self {
        let (a, b) = (source.ngens(), target.ngens());
        let (ra, rb) = (source.relations(), target.relations());
        let (na, nb) = (ra.cols(), rb.cols());
        // unknowns: X (b x a, column-major) then Y (nb x na, column-major)
        // equations: X ra - rb Y = 0, entry (i, j) for i < b, j < na
        let nx = a * b;
        let mut eq = IntMatrix::zeros(b * na, nx + nb * na);
        for j in 0..na {
            for i in 0..b {
                let row = j * b + i;
                for k in 0..a {
                    eq[(row, k * b + i)] = ra[(k, j)].clone();
                }
                for l in 0..nb {
                    eq[(row, nx + j * nb + l)] = -rb[(i, l)].clone();
                }
            }
        }
        let ker = kernel(&eq);
        let lattice = column_basis(&ker.select_rows(0..nx));
        let lattice_solver = LinearSolver::new(&lattice);
        let mut rel_cols = Vec::new();
        for k in 0..a {
            for l in 0..nb {
                let mut x = IntMatrix::zeros(b, a);
                for i in 0..b {
                    x[(i, k)] = rb[(i, l)].clone();
                }
                let c = lattice_solver.solve(&vectorize(&x)).expect("trivial homs lie in the lattice");
                rel_cols.push(c);
            }
        }
        let t = lattice.cols();
        let group = FGAbGroup::new(t, IntMatrix::from_columns(t, &rel_cols)).expect("hom presentation");
        let basis: Vec<IntMatrix> = (0..t).map(|c| unvectorize(&lattice.column(c), b, a)).collect();
        let solver = LinearSolver::new(&lattice_with_trivial(&basis, target, a));
        HomGroup { source: source.clone(), target: target.clone(), group, basis, solver }
    }

    pub fn group(&self) -> &FGAbGroup {
        &self.group
    }

    pub fn basis(&self) -> &[IntMatrix] {
        &self.basis
    }

    pub fn to_hom(&self, x: &[BigInt]) -> AbHom {
        let (b, a) = (self.target.ngens(), self.source.ngens());
        let mut m = IntMatrix::zeros(b, a);
        for (c, mat) in x.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = m.add(&mat.scale(c)).expect("same shape");
            }
        }
        AbHom::new(self.source.clone(), self.target.clone(), m).expect("lattice elements are homomorphisms")
    }

    /// Coordinates of a homomorphism `A -> B` in this presentation.
    pub fn element_of(&self, hom_matrix: &IntMatrix) -> Result<Element> {
        let (b, a) = (self.target.ngens(), self.source.ngens());
        if hom_matrix.rows() != b || hom_matrix.cols() != a {
            return Err(Error::Dimension("hom matrix shape".into()));
        }
        // a representative may differ from a lattice point by target relations in each column
        let hom = AbHom::new(self.source.clone(), self.target.clone(), hom_matrix.clone())?;
        let sol = self
            .solver
            .solve(&vectorize(hom.matrix()))
            .ok_or_else(|| Error::IllDefinedHom("matrix is not a homomorphism representative".into()))?;
        Ok(self.group.reduce(&sol[..self.basis.len()]))
    }
}

fn lattice_with_trivial(basis: &[IntMatrix], target: &FGAbGroup, a: usize) -> IntMatrix {
    let b = target.ngens();
    let rb = target.relations();
    let mut cols: Vec<Vec<BigInt>> = basis.iter().map(vectorize).collect();
    for k in 0..a {
        for l in 0..rb.cols() {
            let mut v = zero_vec(a * b);
            for i in 0..b {
                v[k * b + i] = rb[(i, l)].clone();
            }
            cols.push(v);
        }
    }
    IntMatrix::from_columns(a * b, &cols)
}

/// `Ext(A, B)` computed from the free resolution `0 -> Z^r -> Z^a -> A -> 0`, where the
/// first map is a basis (`resolution`) of the relation lattice of `A`. Elements are
/// tuples of `r` elements of `B`, i.e. homomorphisms from the relation lattice to `B`.
#[derive(Clone, Debug)]
pub struct ExtGroup {
    source: FGAbGroup,
    target: FGAbGroup,
    resolution: IntMatrix,
    group: FGAbGroup,
}

impl ExtGroup {
    pub fn new(source: &FGAbGroup, target: &FGAbGroup) -> Self {
        let resolution = column_basis(source.relations());
        Self::with_resolution(source, target, resolution)
    }

    /// Uses the given relation basis (columns must be a basis of the relation lattice).
    pub fn with_resolution(source: &FGAbGroup, target: &FGAbGroup, resolution: IntMatrix) -> Self {
        let a = source.ngens();
        let b = target.ngens();
        let r = resolution.cols();
        let rb = target.relations();
        let mut rel_cols = Vec::new();
        for k in 0..r {
            for l in 0..rb.cols() {
                let mut v = zero_vec(r * b);
                for i in 0..b {
                    v[k * b + i] = rb[(i, l)].clone();
                }
                rel_cols.push(v);
            }
        }
        for j in 0..a {
            for beta in 0..b {
                let mut v = zero_vec(r * b);
                for k in 0..r {
                    v[k * b + beta] = resolution[(j, k)].clone();
                }
                rel_cols.push(v);
            }
        }
        let group = FGAbGroup::new(r * b, IntMatrix::from_columns(r * b, &rel_cols)).expect("ext presentation");
        ExtGroup { source: source.clone(), target: target.clone(), resolution, group }
    }

    pub fn group(&self) -> &FGAbGroup {
        &self.group
    }

    pub fn resolution(&self) -> &IntMatrix {
        &self.resolution
    }

    pub fn source(&self) -> &FGAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FGAbGroup {
        &self.target
    }

    /// The value on each resolution basis vector.
    pub fn cocycle(&self, x: &[BigInt]) -> Vec<Element> {
        let b = self.target.ngens();
        (0..self.resolution.cols()).map(|k| x[k * b..(k + 1) * b].to_vec()).collect()
    }
}

pub fn hom_group(a: &FGAbGroup, b: &FGAbGroup) -> FGAbGroup {
    HomGroup::new(a, b).group().clone()
}

pub fn ext_group(a: &FGAbGroup, b: &FGAbGroup) -> FGAbGroup {
    ExtGroup::new(a, b).group().clone()
}
