//! Finite groups given by multiplication tables. Element 0 is the identity.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Checks identity, inverses and associativity.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        let bad = |m: &str| Error::InvalidArgument(format!("group table: {m}"));
        if n == 0 || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(bad("not a square table over its elements"));
        }
        if (0..n).any(|a| table[0][a] != a || table[a][0] != a) {
            return Err(bad("element 0 is not the identity"));
        }
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n).find(|&b| table[a][b] == 0).ok_or_else(|| bad("missing inverse"))?;
            inverses.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad("not associative"));
                    }
                }
            }
        }
        Ok(FiniteGroup { name: name.into(), table, inverses })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        let n = n.max(1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup { name: format!("Z{n}"), inverses: (0..n).map(|a| (n - a) % n).collect(), table }
    }

    /// Direct product; element `(a, b)` has index `a * |H| + b`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (n, m) = (g.order(), h.order());
        let table = (0..n * m)
            .map(|x| (0..n * m).map(|y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m)).collect())
            .collect();
        let inverses = (0..n * m).map(|x| g.inv(x / m) * m + h.inv(x % m)).collect();
        FiniteGroup { name: format!("{}x{}", g.name, h.name), table, inverses }
    }

    /// Permutations of three letters in lexicographic order.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation");
        let table = perms
            .iter()
            .map(|p| perms.iter().map(|q| index([p[q[0]], p[q[1]], p[q[2]]])).collect())
            .collect();
        Self::from_table("S3", table).expect("S3 table")
    }

    /// Parses `Z<n>`, `S3` and products joined by `x`.
    pub fn parse(spec: &str) -> Result<Self> {
        let parts: Vec<&str> = spec.split('x').collect();
        let mut out: Option<FiniteGroup> = None;
        for p in parts {
            let g = if p == "S3" {
                Self::symmetric3()
            } else if let Some(n) = p.strip_prefix('Z').and_then(|s| s.parse::<usize>().ok()).filter(|&n| n >= 1) {
                Self::cyclic(n)
            } else {
                return Err(Error::Parse(format!("unknown group {spec:?}")));
            };
            out = Some(match out {
                None => g,
                Some(acc) => Self::product(&acc, &g),
            });
        }
        out.ok_or_else(|| Error::Parse("empty group name".into()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}
