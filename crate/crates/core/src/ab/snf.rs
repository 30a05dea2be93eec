//! Smith normal form by elementary row and column operations.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// `s = u * m * v` with `u`, `v` unimodular and `s` diagonal, `d1 | d2 | ...`, `di >= 0`.
/// The inverses of both transforms are tracked alongside.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl SmithForm {
    /// The diagonal entries `d_1, ..., d_min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols())).map(|i| self.s[(i, i)].clone()).collect()
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn row_add(&mut self, target: usize, source: usize, k: &BigInt) {
        self.a.add_row_multiple(target, source, k);
        self.u.add_row_multiple(target, source, k);
        self.u_inv.add_col_multiple(source, target, &-k);
    }

    fn col_add(&mut self, target: usize, source: usize, k: &BigInt) {
        self.a.add_col_multiple(target, source, k);
        self.v.add_col_multiple(target, source, k);
        self.v_inv.add_row_multiple(source, target, &-k);
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    fn row_negate(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    fn min_abs_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..self.a.rows() {
            for c in t..self.a.cols() {
                let x = &self.a[(r, c)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(br, bc)| x.abs() < self.a[(br, bc)].abs()) {
                    best = Some((r, c));
                }
            }
        }
        best
    }

    fn min_abs_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let mut best_abs: Option<BigInt> = None;
        let mut consider = |r: usize, c: usize, x: &BigInt| {
            if !x.is_zero() && best_abs.as_ref().is_none_or(|b| x.abs() < *b) {
                best_abs = Some(x.abs());
                best = (r, c);
            }
        };
        for r in t..self.a.rows() {
            consider(r, t, &self.a[(r, t)]);
        }
        for c in t..self.a.cols() {
            consider(t, c, &self.a[(t, c)]);
        }
        best
    }

    fn bring_to_pivot(&mut self, t: usize, (r, c): (usize, usize)) {
        self.row_swap(t, r);
        self.col_swap(t, c);
    }

    fn reduce(&mut self) -> usize {
        let (m, n) = (self.a.rows(), self.a.cols());
        let mut t = 0;
        while t < m.min(n) {
            let Some(pos) = self.min_abs_in_block(t) else { break };
            self.bring_to_pivot(t, pos);
            loop {
                let mut clean = true;
                for i in t + 1..m {
                    if self.a[(i, t)].is_zero() {
                        continue;
                    }
                    let q = &self.a[(i, t)] / &self.a[(t, t)];
                    self.row_add(i, t, &-q);
                    if !self.a[(i, t)].is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..n {
                    if self.a[(t, j)].is_zero() {
                        continue;
                    }
                    let q = &self.a[(t, j)] / &self.a[(t, t)];
                    self.col_add(j, t, &-q);
                    if !self.a[(t, j)].is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    let pos = self.min_abs_in_cross(t);
                    self.bring_to_pivot(t, pos);
                    continue;
                }
                // divisibility chain: fold an offending row into the pivot row
                let pivot = self.a[(t, t)].clone();
                let offender = (t + 1..m)
                    .find(|&i| (t + 1..n).any(|j| !(&self.a[(i, j)] % &pivot).is_zero()));
                match offender {
                    Some(i) => self.row_add(t, i, &BigInt::from(1)),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.row_negate(t);
            }
            t += 1;
        }
        t
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut red = Reducer {
        a: m.clone(),
        u: IntMatrix::identity(m.rows()),
        u_inv: IntMatrix::identity(m.rows()),
        v: IntMatrix::identity(m.cols()),
        v_inv: IntMatrix::identity(m.cols()),
    };
    let rank = red.reduce();
    SmithForm { u: red.u, u_inv: red.u_inv, s: red.a, v: red.v, v_inv: red.v_inv, rank }
}
