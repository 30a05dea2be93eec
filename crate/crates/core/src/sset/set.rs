//! Simplicial sets stored by nondegenerate simplices and face data.

use std::collections::HashMap;
use std::sync::Arc;

use super::group::FiniteGroup;
use super::word::{compose, coface, codegeneracy, factor, identity_map, is_identity, surjections, DegeneracyWord};
use crate::error::{Error, Result};

/// A simplex `x ∘ surj`, where `x` is the nondegenerate simplex `base` of degree `surj.last()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    pub surj: Vec<usize>,
    pub base: usize,
}

impl Simplex {
    pub fn nondegenerate(dim: usize, base: usize) -> Self {
        Simplex { surj: identity_map(dim), base }
    }

    pub fn dim(&self) -> usize {
        self.surj.len() - 1
    }

    pub fn base_dim(&self) -> usize {
        *self.surj.last().expect("nonempty surjection")
    }

    pub fn is_nondegenerate(&self) -> bool {
        is_identity(&self.surj)
    }

    pub fn word(&self) -> DegeneracyWord {
        DegeneracyWord::from_surjection(&self.surj)
    }
}

/// Group-tuple description of nerve simplices. Degree `n` simplices of the nerve are
/// `n`-tuples, those of the contractible nerve `n + 1`-tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleModel {
    pub group: FiniteGroup,
    pub tuples: Vec<Vec<Vec<usize>>>,
    pub index: Vec<HashMap<Vec<usize>, usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Model {
    Plain,
    Nerve(TupleModel),
    ENerve(TupleModel),
    Product(ProductModel),
}

/// Nondegenerate simplices of a product as pairs of factor simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductModel {
    pub left: Arc<SimplicialSet>,
    pub right: Arc<SimplicialSet>,
    pub pairs: Vec<Vec<(Simplex, Simplex)>>,
    pub index: Vec<HashMap<(Simplex, Simplex), usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSet {
    name: String,
    labels: Vec<Vec<String>>,
    /// `faces[n][x][i]` is `d_i` of the nondegenerate `n`-simplex `x` (empty for `n = 0`).
    faces: Vec<Vec<Vec<Simplex>>>,
    truncated: bool,
    fibrant: bool,
    model: Model,
}

impl SimplicialSet {
    /// Builds and validates a set from labels and nondegenerate face data.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<Simplex>>>,
        truncated: bool,
    ) -> Result<Self> {
        let set = Self::unchecked(name, labels, faces, truncated, false, Model::Plain);
        set.validate()?;
        Ok(set)
    }

    pub(crate) fn unchecked(
        name: impl Into<String>,
        mut labels: Vec<Vec<String>>,
        mut faces: Vec<Vec<Vec<Simplex>>>,
        truncated: bool,
        fibrant: bool,
        model: Model,
    ) -> Self {
        if labels.is_empty() {
            labels.push(Vec::new());
        }
        if !truncated {
            while labels.len() > 1 && labels.last().is_some_and(|l| l.is_empty()) {
                labels.pop();
            }
        }
        faces.resize(labels.len(), Vec::new());
        SimplicialSet { name: name.into(), labels, faces, truncated, fibrant, model }
    }

    pub(crate) fn with_flags(mut self, fibrant: bool) -> Self {
        self.fibrant = fibrant;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn model(&self) -> &Model {
        &self.model
    }

    pub fn is_compact(&self) -> bool {
        !self.truncated
    }

    pub fn is_fibrant(&self) -> bool {
        self.fibrant
    }

    pub fn is_enerve(&self) -> bool {
        matches!(self.model, Model::ENerve(_))
    }

    /// Highest stored degree: the dimension for compact sets, the cutoff otherwise.
    pub fn top(&self) -> usize {
        self.labels.len() - 1
    }

    /// Dimension of a compact set (`None` for the empty set).
    pub fn dim(&self) -> Option<usize> {
        (0..self.labels.len()).rev().find(|&n| !self.labels[n].is_empty())
    }

    pub fn cutoff(&self) -> Option<usize> {
        self.truncated.then(|| self.top())
    }

    pub fn is_empty(&self) -> bool {
        self.labels[0].is_empty()
    }

    /// Errors unless degree `n` is fully described.
    pub fn require_degree(&self, n: usize) -> Result<()> {
        if self.truncated && n > self.top() {
            return Err(Error::CutoffTooSmall { needed: n, cutoff: self.top() });
        }
        Ok(())
    }

    pub fn count(&self, n: usize) -> usize {
        self.labels.get(n).map_or(0, |l| l.len())
    }

    pub fn counts(&self) -> Vec<usize> {
        self.labels.iter().map(|l| l.len()).collect()
    }

    pub fn labels(&self, n: usize) -> &[String] {
        self.labels.get(n).map_or(&[], |l| l.as_slice())
    }

    pub fn label(&self, n: usize, x: usize) -> &str {
        &self.labels[n][x]
    }

    pub fn find_label(&self, label: &str) -> Option<(usize, usize)> {
        self.labels
            .iter()
            .enumerate()
            .find_map(|(n, ls)| ls.iter().position(|l| l == label).map(|x| (n, x)))
    }

    pub fn nondeg_faces(&self, n: usize, x: usize) -> &[Simplex] {
        &self.faces[n][x]
    }

    /// `s ∘ theta` for a monotone `theta` into the degree of `s`.
    pub fn apply(&self, s: &Simplex, theta: &[usize]) -> Simplex {
        self.pull(s.base_dim(), s.base, &compose(&s.surj, theta))
    }

    /// `x ∘ theta` for the nondegenerate `m`-simplex `x` and a monotone `theta: [k] -> [m]`.
    pub fn pull(&self, m: usize, x: usize, theta: &[usize]) -> Simplex {
        let (rho, image) = factor(theta);
        if image.len() == m + 1 {
            return Simplex { surj: rho, base: x };
        }
        let j = (0..=m).rev().find(|v| !image.contains(v)).expect("a missing vertex");
        let face = &self.faces[m][x][j];
        // theta = δ^j ∘ reduced and d_j x = face
        let reduced: Vec<usize> = theta.iter().map(|&v| if v > j { v - 1 } else { v }).collect();
        self.pull(face.base_dim(), face.base, &compose(&face.surj, &reduced))
    }

    pub fn face(&self, s: &Simplex, i: usize) -> Simplex {
        self.apply(s, &coface(s.dim(), i))
    }

    pub fn degeneracy(&self, s: &Simplex, i: usize) -> Simplex {
        Simplex { surj: compose(&s.surj, &codegeneracy(s.dim() + 1, i)), base: s.base }
    }

    /// Vertex `j` of a simplex, as a vertex index.
    pub fn vertex(&self, s: &Simplex, j: usize) -> usize {
        self.apply(s, &[j]).base
    }

    /// All simplices of degree `n` in canonical order (base degree, base, surjection).
    pub fn all_simplices(&self, n: usize) -> Result<Vec<Simplex>> {
        self.require_degree(n)?;
        let mut out = Vec::new();
        for m in 0..=n.min(self.top()) {
            let surjs = surjections(n, m);
            for x in 0..self.count(m) {
                for s in &surjs {
                    out.push(Simplex { surj: s.clone(), base: x });
                }
            }
        }
        Ok(out)
    }

    /// Human-readable name of any simplex, e.g. `s1s0(v2)`.
    pub fn simplex_label(&self, s: &Simplex) -> String {
        let base = self.label(s.base_dim(), s.base);
        if s.is_nondegenerate() {
            base.to_string()
        } else {
            format!("{}({base})", s.word())
        }
    }

    /// Checks face dimensions and `d_i d_j = d_{j-1} d_i` for `i < j` on every nondegenerate simplex.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Error::InvalidSimplicialSet(m);
        if self.faces[0].iter().any(|f| !f.is_empty()) {
            return Err(bad("vertices carry face data".into()));
        }
        for n in 1..self.labels.len() {
            if self.faces[n].len() != self.count(n) {
                return Err(bad(format!("degree {n} face table has the wrong length")));
            }
            for (x, fs) in self.faces[n].iter().enumerate() {
                if fs.len() != n + 1 {
                    return Err(bad(format!("{} needs {} faces", self.label(n, x), n + 1)));
                }
                for f in fs {
                    let m = f.base_dim();
                    let monotone = f.surj.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1) && f.surj[0] == 0;
                    if f.dim() != n - 1 || !monotone || f.base >= self.count(m) {
                        return Err(bad(format!("malformed face of {}", self.label(n, x))));
                    }
                }
            }
        }
        for n in 2..self.labels.len() {
            for x in 0..self.count(n) {
                let fs = &self.faces[n][x];
                for j in 0..=n {
                    for i in 0..j {
                        if self.face(&fs[j], i) != self.face(&fs[i], j - 1) {
                            return Err(bad(format!("simplicial identity d{i}d{j} fails on {}", self.label(n, x))));
                        }
                    }
                }
            }
        }
        let mut seen = HashMap::new();
        for (n, ls) in self.labels.iter().enumerate() {
            for l in ls {
                if seen.insert(l.clone(), n).is_some() {
                    return Err(bad(format!("duplicate label {l}")));
                }
            }
        }
        Ok(())
    }

    /// Vertex partition into connected components.
    pub fn components(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.count(0)).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for x in 0..self.count(1) {
            let a = find(&mut parent, self.faces[1][x][0].base);
            let b = find(&mut parent, self.faces[1][x][1].base);
            let (lo, hi) = (a.min(b), a.max(b));
            parent[hi] = lo;
        }
        (0..parent.len()).map(|x| find(&mut parent, x)).collect()
    }

    pub fn is_connected(&self) -> bool {
        let c = self.components();
        !c.is_empty() && c.iter().all(|&r| r == 0)
    }
}

/// Index of all simplices of one degree.
#[derive(Clone, Debug)]
pub struct SimplexIndex {
    pub simplices: Vec<Simplex>,
    pub position: HashMap<Simplex, usize>,
}

impl SimplexIndex {
    pub fn new(set: &SimplicialSet, n: usize) -> Result<Self> {
        let simplices = set.all_simplices(n)?;
        let position = simplices.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        Ok(SimplexIndex { simplices, position })
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn get(&self, s: &Simplex) -> usize {
        self.position[s]
    }
}

/// Indices of all simplices in degrees `0..=top`.
pub fn simplex_indices(set: &SimplicialSet, top: usize) -> Result<Vec<SimplexIndex>> {
    (0..=top).map(|n| SimplexIndex::new(set, n)).collect()
}
