//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use straightlab::ab::{smith_normal_form, FGAbGroup, IntMatrix};

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `d_1 ⋯ d_k` is the gcd of the `k × k` minors.
pub fn invariant_factors_by_minors(m: &IntMatrix) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut previous = BigInt::one();
    for k in 1..=m.rows().min(m.cols()) {
        let mut g = BigInt::zero();
        for rs in subsets(m.rows(), k) {
            for cs in subsets(m.cols(), k) {
                let minor = IntMatrix::from_fn(k, k, |i, j| m[(rs[i], cs[j])].clone());
                g = g.gcd(&minor.determinant().unwrap());
            }
        }
        if g.is_zero() {
            out.push(BigInt::zero());
            previous = BigInt::zero();
        } else {
            out.push(&g / &previous);
            previous = g;
        }
    }
    out
}

pub fn snf_instance_ok(m: &IntMatrix) -> bool {
    let f = smith_normal_form(m);
    let product = f.u.checked_mul(m).unwrap().checked_mul(&f.v).unwrap();
    let d = f.diagonal();
    let diagonal = (0..f.s.rows()).all(|i| (0..f.s.cols()).all(|j| i == j || f.s[(i, j)].is_zero()));
    let divides = d.windows(2).all(|w| if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() });
    product == f.s
        && diagonal
        && divides
        && d.iter().all(|x| !x.is_negative())
        && f.u.checked_mul(&f.u_inv).unwrap() == IntMatrix::identity(m.rows())
        && f.v.checked_mul(&f.v_inv).unwrap() == IntMatrix::identity(m.cols())
        && d == invariant_factors_by_minors(m)
}

pub fn finite_elements(g: &FGAbGroup, orders: &[u64]) -> Vec<Vec<BigInt>> {
    let mut out = vec![vec![]];
    for &o in orders {
        out = out
            .into_iter()
            .flat_map(|e: Vec<BigInt>| (0..o).map(move |k| [e.clone(), vec![BigInt::from(k)]].concat()))
            .collect();
    }
    out.into_iter().map(|e| g.reduce(&e)).collect()
}

/// Some assignment of generators into a finite target respects the relations and constraints.
pub fn brute_extension_exists(source: &FGAbGroup, constraints: &[(Vec<BigInt>, Vec<BigInt>)], target: &FGAbGroup, targets: &[Vec<BigInt>]) -> bool {
    let n = source.ngens();
    let mut choice = vec![0usize; n];
    loop {
        let image = |x: &[BigInt]| {
            let mut acc = target.zero();
            for (i, c) in x.iter().enumerate() {
                let t: Vec<BigInt> = targets[choice[i]].iter().map(|v| v * c).collect();
                acc = target.add(&acc, &t);
            }
            acc
        };
        let rel = source.relations();
        let respects = (0..rel.cols()).all(|j| target.is_zero(&image(&rel.column(j))));
        if respects && constraints.iter().all(|(a, m)| target.elem_eq(&image(a), m)) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            choice[i] += 1;
            if choice[i] < targets.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

