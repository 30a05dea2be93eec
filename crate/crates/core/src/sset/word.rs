//! Degeneracy words and the monotone maps behind them.
//!
//! A simplex `s_{i1} ... s_{ik} x` with `x` of degree `m` is the composite of `x` with a
//! monotone surjection `[m + k] -> [m]`. Surjections are stored as their value lists.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Eilenberg–Zilber normal form `s_{i1} ∘ … ∘ s_{ik}` with `i1 > … > ik`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct DegeneracyWord(Vec<usize>);

impl DegeneracyWord {
    pub fn identity() -> Self {
        DegeneracyWord(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Normalizes an arbitrary word `s_{w0} ∘ s_{w1} ∘ …` acting on a simplex of degree `base_dim`.
    pub fn normalize(word: &[usize], base_dim: usize) -> Result<Self> {
        let mut surj: Vec<usize> = (0..=base_dim).collect();
        // the rightmost operator acts first
        for &i in word.iter().rev() {
            let n = surj.len() - 1;
            if i > n {
                return Err(Error::InvalidArgument(format!("s_{i} applied in degree {n}")));
            }
            surj = compose(&surj, &codegeneracy(n + 1, i));
        }
        Ok(Self::from_surjection(&surj))
    }

    pub fn from_surjection(surj: &[usize]) -> Self {
        let mut j: Vec<usize> = (0..surj.len().saturating_sub(1)).filter(|&t| surj[t] == surj[t + 1]).collect();
        j.reverse();
        DegeneracyWord(j)
    }

    /// The surjection `[base_dim + k] -> [base_dim]`, if the word is admissible on that degree.
    pub fn to_surjection(&self, base_dim: usize) -> Result<Vec<usize>> {
        let n = base_dim + self.0.len();
        let valid = self.0.windows(2).all(|w| w[0] > w[1]) && self.0.iter().all(|&i| i < n);
        if !valid {
            return Err(Error::InvalidArgument(format!("{:?} is not a normal degeneracy word in degree {n}", self.0)));
        }
        Ok(collapse(n, &self.0))
    }
}

impl std::fmt::Display for DegeneracyWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in &self.0 {
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

pub fn identity_map(n: usize) -> Vec<usize> {
    (0..=n).collect()
}

pub fn is_identity(f: &[usize]) -> bool {
    f.iter().enumerate().all(|(i, &v)| i == v)
}

/// `f ∘ g` for maps stored as value lists.
pub fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&t| f[t]).collect()
}

/// The coface `δ^i: [n - 1] -> [n]` missing `i`.
pub fn coface(n: usize, i: usize) -> Vec<usize> {
    (0..n).map(|t| if t < i { t } else { t + 1 }).collect()
}

/// The codegeneracy `σ^i: [n] -> [n - 1]` hitting `i` twice.
pub fn codegeneracy(n: usize, i: usize) -> Vec<usize> {
    (0..=n).map(|t| if t <= i { t } else { t - 1 }).collect()
}

/// The surjection on `[n]` that merges `t` and `t + 1` for every `t` in `merged`.
pub fn collapse(n: usize, merged: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(n + 1);
    let mut v = 0;
    out.push(0);
    for t in 0..n {
        if !merged.contains(&t) {
            v += 1;
        }
        out.push(v);
    }
    out
}

/// Positions `t` with `f(t) = f(t + 1)`.
pub fn merged_positions(f: &[usize]) -> Vec<usize> {
    (0..f.len().saturating_sub(1)).filter(|&t| f[t] == f[t + 1]).collect()
}

/// Epi–mono factorization of a monotone map: `(ρ, image)` with `f = image ∘ ρ`.
pub fn factor(f: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut image: Vec<usize> = Vec::new();
    let mut rho = Vec::with_capacity(f.len());
    for &v in f {
        if image.last() != Some(&v) {
            image.push(v);
        }
        rho.push(image.len() - 1);
    }
    (rho, image)
}

/// All monotone surjections `[n] -> [m]`, lexicographic in their merged positions.
pub fn surjections(n: usize, m: usize) -> Vec<Vec<usize>> {
    if m > n {
        return Vec::new();
    }
    combinations(n, n - m).into_iter().map(|merged| collapse(n, &merged)).collect()
}

/// `k`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn simplicial_degeneracy_identity() {
        // s_0 s_1 = s_2 s_0 on a 1-simplex
        let a = DegeneracyWord::normalize(&[0, 1], 1).unwrap();
        let b = DegeneracyWord::normalize(&[2, 0], 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.indices(), &[2, 0]);
    }

    #[test]
    fn surjection_round_trip() {
        let w = DegeneracyWord(vec![3, 1]);
        let s = w.to_surjection(2).unwrap();
        assert_eq!(s, vec![0, 1, 1, 2, 2]);
        assert_eq!(DegeneracyWord::from_surjection(&s), w);
        assert!(DegeneracyWord(vec![1, 3]).to_surjection(2).is_err());
    }

    #[test]
    fn surjection_counts_are_binomial() {
        assert_eq!(surjections(4, 2).len(), 6);
        assert_eq!(surjections(2, 3).len(), 0);
        assert_eq!(surjections(3, 3), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn factorization() {
        let (rho, image) = factor(&[0, 0, 2, 3, 3]);
        assert_eq!(rho, vec![0, 0, 1, 2, 2]);
        assert_eq!(image, vec![0, 2, 3]);
    }

    proptest! {
        #[test]
        fn normalization_is_idempotent(base in 0usize..4, raw in proptest::collection::vec(0usize..8, 0..6)) {
            // clamp each operator to an admissible index for the degree it acts on
            let mut word = Vec::new();
            let mut deg = base;
            for r in raw.iter().rev() {
                word.push(r % (deg + 1));
                deg += 1;
            }
            word.reverse();
            let once = DegeneracyWord::normalize(&word, base).unwrap();
            let twice = DegeneracyWord::normalize(once.indices(), base).unwrap();
            prop_assert_eq!(&once, &twice);
            prop_assert!(once.indices().windows(2).all(|w| w[0] > w[1]));
        }
    }
}
