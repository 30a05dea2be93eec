//! Lattice computations over the integers: Hermite bases, kernels, images, and
//! exact solutions of linear systems.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;
use super::snf::{smith_normal_form, SmithForm};

/// Reduced row-echelon (Hermite) basis of the row lattice of `gens`.
///
/// Pivots are positive and entries above a pivot lie in `[0, pivot)`, so two
/// generating sets of the same lattice produce the same output.
pub fn hermite_rows(gens: &IntMatrix) -> IntMatrix {
    let mut a = gens.clone();
    let (m, n) = (a.rows(), a.cols());
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..m {
                if !a[(i, c)].is_zero() && best.is_none_or(|b| a[(i, c)].abs() < a[(b, c)].abs()) {
                    best = Some(i);
                }
            }
            let Some(p) = best else { break };
            a.swap_rows(r, p);
            let mut clean = true;
            for i in r + 1..m {
                if a[(i, c)].is_zero() {
                    continue;
                }
                let q = &a[(i, c)] / &a[(r, c)];
                a.add_row_multiple(i, r, &-q);
                if !a[(i, c)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if (r..m).all(|i| a[(i, c)].is_zero()) {
            continue;
        }
        if a[(r, c)].is_negative() {
            a.negate_row(r);
        }
        let pivot = a[(r, c)].clone();
        for i in 0..r {
            let q = a[(i, c)].div_floor(&pivot);
            a.add_row_multiple(i, r, &-q);
        }
        r += 1;
    }
    a.select_rows(0..r)
}

/// Canonical basis (as columns) of the lattice spanned by the columns of `gens`.
pub fn column_basis(gens: &IntMatrix) -> IntMatrix {
    let rows = gens.rows();
    let h = hermite_rows(&gens.transpose());
    if h.rows() == 0 {
        return IntMatrix::zeros(rows, 0);
    }
    h.transpose()
}

/// Canonical basis (as columns) of `{x : a x = 0}`.
pub fn kernel(a: &IntMatrix) -> IntMatrix {
    let f = smith_normal_form(a);
    let raw = f.v.select_cols(f.rank..a.cols());
    column_basis(&raw)
}

/// Rank over the rationals.
pub fn rank(a: &IntMatrix) -> usize {
    hermite_rows(a).rows()
}

/// True when the column lattices of `a` and `b` coincide.
pub fn same_column_lattice(a: &IntMatrix, b: &IntMatrix) -> bool {
    a.rows() == b.rows() && column_basis(a) == column_basis(b)
}

/// Reusable exact solver for `a x = b` over the integers.
#[derive(Clone, Debug)]
pub struct LinearSolver {
    snf: SmithForm,
    rows: usize,
    cols: usize,
}

impl LinearSolver {
    pub fn new(a: &IntMatrix) -> Self {
        LinearSolver { snf: smith_normal_form(a), rows: a.rows(), cols: a.cols() }
    }

    pub fn rank(&self) -> usize {
        self.snf.rank
    }

    pub fn smith(&self) -> &SmithForm {
        &self.snf
    }

    /// Some integer solution of `a x = b`, or `None` if there is none.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let y = self.snf.u.mul_vec(b);
        let mut z = vec![BigInt::zero(); self.cols];
        for (i, yi) in y.iter().enumerate() {
            if i < self.snf.rank {
                let d = &self.snf.s[(i, i)];
                let (q, r) = yi.div_rem(d);
                if !r.is_zero() {
                    return None;
                }
                z[i] = q;
            } else if !yi.is_zero() {
                return None;
            }
        }
        Some(self.snf.v.mul_vec(&z))
    }
}

pub fn solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    LinearSolver::new(a).solve(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ab::matrix::vec_of;

    #[test]
    fn hermite_is_canonical() {
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let b = IntMatrix::from_rows(&[vec![2, 3], vec![2, 0], vec![4, 6]]);
        assert_eq!(hermite_rows(&a), hermite_rows(&b));
        let c = IntMatrix::from_rows(&[vec![1, 0], vec![0, 3]]);
        assert_ne!(hermite_rows(&a), hermite_rows(&c));
    }

    #[test]
    fn kernel_of_boundary() {
        // boundary of the 3-gon: columns are edges v0->v1, v1->v2, v2->v0
        let d = IntMatrix::from_rows(&[vec![-1, 0, 1], vec![1, -1, 0], vec![0, 1, -1]]);
        let k = kernel(&d);
        assert_eq!(k, IntMatrix::from_rows(&[vec![1], vec![1], vec![1]]));
    }

    #[test]
    fn solver_refuses_fractional_solutions() {
        let a = IntMatrix::from_rows(&[vec![2, 4]]);
        assert!(solve(&a, &vec_of(&[3])).is_none());
        let x = solve(&a, &vec_of(&[6])).unwrap();
        assert_eq!(a.mul_vec(&x), vec_of(&[6]));
    }
}
