//! `L(X, Y)` and `L_K(X, Y)` for finite sets, and the comparison `K ⊗ L → L_K`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::sets::{partial_hom, PartialMap};
use crate::ab::{FGAbGroup, IntMatrix};
use crate::error::{Error, Result};

/// The coefficient ring `K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Coefficients {
    Integers,
    Modulo(u64),
}

impl Coefficients {
    pub fn modulo(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidArgument(format!("modulus {m} is below 2")));
        }
        Ok(Coefficients::Modulo(m))
    }

    pub fn reduce(&self, x: &BigInt) -> BigInt {
        match self {
            Coefficients::Integers => x.clone(),
            Coefficients::Modulo(m) => x.mod_floor(&BigInt::from(*m)),
        }
    }

    /// `K^n` as an abelian group.
    pub fn free_module(&self, n: usize) -> FGAbGroup {
        match self {
            Coefficients::Integers => FGAbGroup::free(n),
            Coefficients::Modulo(m) => FGAbGroup::from_orders(&vec![*m; n]),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Coefficients::Integers => "Z".into(),
            Coefficients::Modulo(m) => format!("Z/{m}"),
        }
    }
}

/// `L(X, Y)` for `|X| = nx`, `|Y| = ny`; elements are `ny × nx` integer matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LGroup {
    pub nx: usize,
    pub ny: usize,
}

/// An element of `L(X, Y)` together with its expression in generators.
#[derive(Clone, Debug)]
pub struct LElement {
    pub matrix: IntMatrix,
    pub expression: Vec<(BigInt, PartialMap)>,
}

impl LGroup {
    pub fn new(nx: usize, ny: usize) -> Self {
        LGroup { nx, ny }
    }

    pub fn rank(&self) -> usize {
        self.nx * self.ny
    }

    /// Row-major coordinates over the `E_yx`.
    pub fn flatten(&self, m: &IntMatrix) -> Vec<BigInt> {
        m.entries().to_vec()
    }

    pub fn unflatten(&self, v: &[BigInt]) -> IntMatrix {
        IntMatrix::from_fn(self.ny, self.nx, |y, x| v[y * self.nx + x].clone())
    }

    /// Writes `m` as an integer combination of homomorphisms sending each `⟨x⟩`
    /// to some `⟨y⟩` or to 0.
    pub fn element(&self, m: &IntMatrix) -> Result<LElement> {
        if m.rows() != self.ny || m.cols() != self.nx {
            return Err(Error::Dimension(format!("expected a {}x{} matrix", self.ny, self.nx)));
        }
        let mut levels: BTreeMap<BigInt, Vec<Vec<usize>>> = BTreeMap::new();
        for x in 0..self.nx {
            for y in 0..self.ny {
                let k = &m[(y, x)];
                if !k.is_zero() {
                    levels.entry(k.clone()).or_insert_with(|| vec![Vec::new(); self.nx])[x].push(y);
                }
            }
        }
        let mut expression = Vec::new();
        for (k, cols) in levels {
            let depth = cols.iter().map(Vec::len).max().unwrap_or(0);
            for layer in 0..depth {
                let values = cols.iter().map(|ys| ys.get(layer).copied()).collect();
                expression.push((k.clone(), PartialMap::new(self.ny, values)?));
            }
        }
        let e = LElement { matrix: m.clone(), expression };
        debug_assert_eq!(e.recombine(self), *m);
        Ok(e)
    }
}

impl LElement {
    pub fn recombine(&self, group: &LGroup) -> IntMatrix {
        let mut m = IntMatrix::zeros(group.ny, group.nx);
        for (k, u) in &self.expression {
            let g = partial_hom(u);
            for y in 0..group.ny {
                for x in 0..group.nx {
                    if !g[(y, x)].is_zero() {
                        m[(y, x)] += k;
                    }
                }
            }
        }
        m
    }
}

/// `L_K(X, Y)`, the free `K`-module on `Y × X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KLGroup {
    pub ring: Coefficients,
    pub nx: usize,
    pub ny: usize,
}

impl KLGroup {
    pub fn new(ring: Coefficients, nx: usize, ny: usize) -> Self {
        KLGroup { ring, nx, ny }
    }

    pub fn reduce(&self, m: &IntMatrix) -> IntMatrix {
        IntMatrix::from_fn(m.rows(), m.cols(), |r, c| self.ring.reduce(&m[(r, c)]))
    }

    pub fn as_group(&self) -> FGAbGroup {
        self.ring.free_module(self.nx * self.ny)
    }

    /// Every element, for `K = ℤ/m`, in lexicographic order of row-major entries.
    pub fn elements(&self) -> Option<Vec<IntMatrix>> {
        let Coefficients::Modulo(m) = self.ring else { return None };
        let n = self.nx * self.ny;
        let mut out = Vec::new();
        let mut v = vec![0u64; n];
        loop {
            out.push(IntMatrix::from_fn(self.ny, self.nx, |y, x| BigInt::from(v[y * self.nx + x])));
            let mut i = n;
            loop {
                if i == 0 {
                    return Some(out);
                }
                i -= 1;
                v[i] += 1;
                if v[i] < m {
                    break;
                }
                v[i] = 0;
            }
        }
    }
}

/// A formal element `Σ kᵢ ⊗ uᵢ` of `K ⊗ L(X, Y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    pub ring: Coefficients,
    pub group: LGroup,
    pub terms: Vec<(BigInt, IntMatrix)>,
}

impl TensorElement {
    pub fn new(ring: Coefficients, group: LGroup, terms: Vec<(BigInt, IntMatrix)>) -> Self {
        TensorElement { ring, group, terms }
    }

    /// Coordinates in the `K`-basis `1 ⊗ E_yx`, obtained by expanding each `uᵢ` in generators.
    pub fn normal_form(&self) -> Result<IntMatrix> {
        let mut out = IntMatrix::zeros(self.group.ny, self.group.nx);
        for (k, u) in &self.terms {
            for (c, g) in self.group.element(u)?.expression {
                let coeff = k * &c;
                for (x, y) in g.values.iter().enumerate() {
                    if let Some(y) = y {
                        out[(*y, x)] += &coeff;
                    }
                }
            }
        }
        Ok(KLGroup::new(self.ring, self.group.nx, self.group.ny).reduce(&out))
    }

    /// `e^(K)(Σ kᵢ ⊗ uᵢ) = Σ kᵢ e(uᵢ)`.
    pub fn e(&self) -> IntMatrix {
        let kl = KLGroup::new(self.ring, self.group.nx, self.group.ny);
        let mut out = IntMatrix::zeros(self.group.ny, self.group.nx);
        for (k, u) in &self.terms {
            let eu = base_change(u, self.ring);
            for y in 0..self.group.ny {
                for x in 0..self.group.nx {
                    out[(y, x)] += k * &eu[(y, x)];
                }
            }
        }
        kl.reduce(&out)
    }
}

/// `e(u)`: the `K`-homomorphism with the same matrix read in `K`.
pub fn base_change(u: &IntMatrix, ring: Coefficients) -> IntMatrix {
    IntMatrix::from_fn(u.rows(), u.cols(), |r, c| ring.reduce(&u[(r, c)]))
}

/// `d(v) = Σ_k k ⊗ v_k`, where `v_k` collects the entries of `v` equal to `k`.
pub fn inverse_decomposition(v: &IntMatrix, ring: Coefficients) -> TensorElement {
    let v = base_change(v, ring);
    let mut parts: BTreeMap<BigInt, IntMatrix> = BTreeMap::new();
    for y in 0..v.rows() {
        for x in 0..v.cols() {
            let k = &v[(y, x)];
            if !k.is_zero() {
                parts.entry(k.clone()).or_insert_with(|| IntMatrix::zeros(v.rows(), v.cols()))[(y, x)] = BigInt::one();
            }
        }
    }
    let mut terms: Vec<(BigInt, IntMatrix)> = parts.into_iter().collect();
    terms.sort_by(|a, b| a.0.abs().cmp(&b.0.abs()).then(a.0.cmp(&b.0)));
    TensorElement::new(ring, LGroup::new(v.cols(), v.rows()), terms)
}
