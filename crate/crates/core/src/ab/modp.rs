//! Linear algebra over the prime field `Z/p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

pub fn reduce_int(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

impl FpMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_int(m: &IntMatrix, p: u64) -> Self {
        let data = m.entries().iter().map(|x| reduce_int(x, p)).collect();
        FpMatrix { p, rows: m.rows(), cols: m.cols(), data }
    }

    pub fn from_columns(p: u64, rows: usize, cols: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(p, rows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, *v);
            }
        }
        m
    }

    pub fn to_int(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |r, c| BigInt::from(self.get(r, c)))
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = FpMatrix::zeros(self.p, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = (out.get(r, c) + a * other.get(k, c)) % self.p;
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| (0..self.cols).fold(0, |acc, c| (acc + self.get(r, c) * v[c]) % self.p))
            .collect()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let p = self.p;
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(pr) = (r..a.rows).find(|&i| a.get(i, c) != 0) else { continue };
            for k in 0..a.cols {
                a.data.swap(r * a.cols + k, pr * a.cols + k);
            }
            let inv = inv_mod(a.get(r, c), p);
            for k in 0..a.cols {
                let v = a.get(r, k) * inv % p;
                a.set(r, k, v);
            }
            for i in 0..a.rows {
                if i == r {
                    continue;
                }
                let f = a.get(i, c);
                if f == 0 {
                    continue;
                }
                for k in 0..a.cols {
                    let v = (a.get(i, k) + p - f * a.get(r, k) % p) % p;
                    a.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, as columns.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0; self.cols];
                v[f] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = (self.p - r.get(row, f)) % self.p;
                }
                v
            })
            .collect()
    }

    /// Some solution of `self x = b`.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        let mut aug = FpMatrix::zeros(self.p, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b[r]);
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = red.get(row, self.cols);
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(13));
        assert!(!is_prime(1) && !is_prime(4) && !is_prime(9));
    }

    #[test]
    fn kernel_and_solve_mod_three() {
        let m = FpMatrix::from_int(&IntMatrix::from_rows(&[vec![1, 2, 0], vec![2, 1, 0]]), 3);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
        assert!(m.solve(&[1, 2]).is_some());
        assert!(m.solve(&[1, 0]).is_none());
    }
}
