use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::lattice::{column_basis, LinearSolver};
use super::matrix::{is_zero_vec, unit_vec, vec_add, zero_vec, IntMatrix};
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// Coordinate vector of an element over the generators of its group.
pub type Element = Vec<BigInt>;

#[derive(Debug)]
struct Normalizer {
    /// Row transform taking generator coordinates to diagonal coordinates.
    u: IntMatrix,
    u_inv: IntMatrix,
    /// Diagonal entry per generator: invariant factor, or 0 for a free coordinate.
    moduli: Vec<BigInt>,
}

/// A finitely generated abelian group `Z^ngens / im(relations)`.
///
/// Relations are the columns of an `ngens x r` matrix. The Smith form of the
/// relation matrix is computed once and used for canonical element reduction.
#[derive(Clone)]
pub struct FGAbGroup {
    ngens: usize,
    relations: IntMatrix,
    norm: Arc<Normalizer>,
}

impl FGAbGroup {
    pub fn new(ngens: usize, relations: IntMatrix) -> Result<Self> {
        if relations.rows() != ngens {
            return Err(Error::Dimension(format!(
                "relation matrix has {} rows for {} generators",
                relations.rows(),
                ngens
            )));
        }
        let f = smith_normal_form(&relations);
        let mut moduli = vec![BigInt::zero(); ngens];
        for (i, m) in moduli.iter_mut().enumerate().take(f.rank) {
            *m = f.s[(i, i)].clone();
        }
        let norm = Normalizer { u: f.u, u_inv: f.u_inv, moduli };
        Ok(FGAbGroup { ngens, relations, norm: Arc::new(norm) })
    }

    pub fn free(rank: usize) -> Self {
        Self::new(rank, IntMatrix::zeros(rank, 0)).expect("free group")
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// `Z/n`; `n = 0` gives `Z`.
    pub fn cyclic(n: u64) -> Self {
        if n == 0 {
            return Self::free(1);
        }
        Self::new(1, IntMatrix::from_rows(&[vec![n as i64]])).expect("cyclic group")
    }

    /// `Z/d_1 + ... + Z/d_k` with 0 meaning a free summand.
    pub fn from_orders(orders: &[u64]) -> Self {
        let groups: Vec<FGAbGroup> = orders.iter().map(|&d| Self::cyclic(d)).collect();
        Self::direct_sum(&groups)
    }

    pub fn direct_sum(parts: &[FGAbGroup]) -> Self {
        let n: usize = parts.iter().map(|g| g.ngens).sum();
        let r: usize = parts.iter().map(|g| g.relations.cols()).sum();
        let mut rel = IntMatrix::zeros(n, r);
        let (mut row0, mut col0) = (0, 0);
        for g in parts {
            for i in 0..g.ngens {
                for j in 0..g.relations.cols() {
                    rel[(row0 + i, col0 + j)] = g.relations[(i, j)].clone();
                }
            }
            row0 += g.ngens;
            col0 += g.relations.cols();
        }
        Self::new(n, rel).expect("direct sum")
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// Coordinates in the diagonal basis, reduced modulo the invariant factors.
    pub fn diagonal_coords(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.ngens, "element has the wrong number of coordinates");
        let mut y = self.norm.u.mul_vec(x);
        for (yi, d) in y.iter_mut().zip(&self.norm.moduli) {
            if d.is_positive() {
                *yi = yi.mod_floor(d);
            }
        }
        y
    }

    /// Coordinates matching `describe`: free summands first, then each `Z/d` with `d > 1`.
    pub fn invariant_coords(&self, x: &[BigInt]) -> Vec<BigInt> {
        let y = self.diagonal_coords(x);
        let pick = |keep: fn(&BigInt) -> bool| y.iter().zip(&self.norm.moduli).filter(move |(_, d)| keep(d)).map(|(v, _)| v.clone());
        pick(|d| d.is_zero()).chain(pick(|d| *d > BigInt::one())).collect()
    }

    /// The canonical representative of the class of `x`.
    pub fn reduce(&self, x: &[BigInt]) -> Element {
        self.norm.u_inv.mul_vec(&self.diagonal_coords(x))
    }

    pub fn is_zero(&self, x: &[BigInt]) -> bool {
        is_zero_vec(&self.diagonal_coords(x))
    }

    pub fn elem_eq(&self, a: &[BigInt], b: &[BigInt]) -> bool {
        self.diagonal_coords(a) == self.diagonal_coords(b)
    }

    pub fn zero(&self) -> Element {
        zero_vec(self.ngens)
    }

    pub fn generator(&self, i: usize) -> Element {
        unit_vec(self.ngens, i)
    }

    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> Element {
        self.reduce(&vec_add(a, b))
    }

    /// Nontrivial invariant factors `d_1 | d_2 | ...` (all > 1).
    pub fn torsion(&self) -> Vec<BigInt> {
        self.norm.moduli.iter().filter(|d| **d > BigInt::one()).cloned().collect()
    }

    pub fn free_rank(&self) -> usize {
        self.norm.moduli.iter().filter(|d| d.is_zero()).count()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank() == 0 && self.torsion().is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    /// Group order, if finite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion().iter().product())
    }

    /// True when both groups have the same invariant factors.
    pub fn isomorphic(&self, other: &FGAbGroup) -> bool {
        self.free_rank() == other.free_rank() && self.torsion() == other.torsion()
    }

    /// Same generators and the same relation lattice.
    pub fn same_presentation(&self, other: &FGAbGroup) -> bool {
        self.ngens == other.ngens && column_basis(&self.relations) == column_basis(&other.relations)
    }

    /// Order of an element; `None` for elements of infinite order.
    pub fn element_order(&self, x: &[BigInt]) -> Option<BigInt> {
        let y = self.diagonal_coords(x);
        let mut ord = BigInt::one();
        for (yi, d) in y.iter().zip(&self.norm.moduli) {
            if yi.is_zero() {
                continue;
            }
            if d.is_zero() {
                return None;
            }
            ord = ord.lcm(&(d / d.gcd(yi)));
        }
        Some(ord)
    }

    /// All elements of a finite group in canonical form, if there are at most `limit`.
    pub fn elements(&self, limit: usize) -> Option<Vec<Element>> {
        let order = self.order()?.to_usize()?;
        if order > limit {
            return None;
        }
        let mut coords: Vec<Vec<BigInt>> = vec![vec![]];
        for d in &self.norm.moduli {
            let range = if d.is_positive() { d.to_usize()? } else { 1 };
            let mut next = Vec::with_capacity(coords.len() * range);
            for c in &coords {
                for k in 0..range {
                    let mut c2 = c.clone();
                    c2.push(BigInt::from(k));
                    next.push(c2);
                }
            }
            coords = next;
        }
        Some(coords.iter().map(|y| self.norm.u_inv.mul_vec(y)).collect())
    }

    /// Solve `d * x = m` in this group.
    pub fn divide(&self, d: &BigInt, m: &[BigInt]) -> Option<Element> {
        let y = self.diagonal_coords(m);
        let mut x = vec![BigInt::zero(); self.ngens];
        for (i, (yi, e)) in y.iter().zip(&self.norm.moduli).enumerate() {
            if e.is_zero() {
                if d.is_zero() {
                    if !yi.is_zero() {
                        return None;
                    }
                } else {
                    let (q, r) = yi.div_rem(d);
                    if !r.is_zero() {
                        return None;
                    }
                    x[i] = q;
                }
            } else {
                // d * x = y (mod e)
                let g = d.gcd(e);
                if !(yi % &g).is_zero() {
                    return None;
                }
                if g.is_zero() || yi.is_zero() {
                    continue;
                }
                let e_red = e / &g;
                let d_red = (d / &g).mod_floor(&e_red);
                let inv = mod_inverse(&d_red, &e_red).expect("coprime after reduction");
                x[i] = ((yi / &g) * inv).mod_floor(&e_red);
            }
        }
        Some(self.norm.u_inv.mul_vec(&x))
    }

    /// Human-readable invariant form such as `Z^2 + Z/2`.
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.torsion().iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank() {
            0 => {}
            1 => parts.insert(0, "Z".into()),
            r => parts.insert(0, format!("Z^{r}")),
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let g = a.extended_gcd(m);
    g.gcd.is_one().then(|| g.x.mod_floor(m))
}

impl fmt::Debug for FGAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FGAbGroup({}; {} gens)", self.describe(), self.ngens)
    }
}

/// Homomorphism between presented groups, given by images of generators
/// (the columns of `matrix`).
#[derive(Clone, Debug)]
pub struct AbHom {
    source: FGAbGroup,
    target: FGAbGroup,
    matrix: IntMatrix,
}

impl AbHom {
    /// Checks that every source relation is sent to zero.
    pub fn new(source: FGAbGroup, target: FGAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.ngens() || matrix.cols() != source.ngens() {
            return Err(Error::Dimension(format!(
                "hom matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.ngens(),
                source.ngens()
            )));
        }
        let images = matrix.checked_mul(source.relations())?;
        for j in 0..images.cols() {
            if !target.is_zero(&images.column(j)) {
                return Err(Error::IllDefinedHom(format!("relation {j} does not map to zero")));
            }
        }
        Ok(AbHom { source, target, matrix })
    }

    pub fn zero(source: FGAbGroup, target: FGAbGroup) -> Self {
        let matrix = IntMatrix::zeros(target.ngens(), source.ngens());
        AbHom { source, target, matrix }
    }

    pub fn identity(group: FGAbGroup) -> Self {
        let matrix = IntMatrix::identity(group.ngens());
        AbHom { source: group.clone(), target: group, matrix }
    }

    pub fn source(&self) -> &FGAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FGAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[BigInt]) -> Element {
        self.target.reduce(&self.matrix.mul_vec(x))
    }

    /// `other ∘ self`
    pub fn then(&self, other: &AbHom) -> Result<AbHom> {
        if self.target.ngens() != other.source.ngens() {
            return Err(Error::Dimension("composition of incompatible homomorphisms".into()));
        }
        let m = other.matrix.checked_mul(&self.matrix)?;
        AbHom::new(self.source.clone(), other.target.clone(), m)
    }

    /// Equal as homomorphisms (generator images agree in the target).
    pub fn same_map(&self, other: &AbHom) -> bool {
        self.matrix.cols() == other.matrix.cols()
            && (0..self.matrix.cols())
                .all(|j| self.target.elem_eq(&self.matrix.column(j), &other.matrix.column(j)))
    }

    pub fn is_zero(&self) -> bool {
        (0..self.matrix.cols()).all(|j| self.target.is_zero(&self.matrix.column(j)))
    }

    pub fn is_injective(&self) -> bool {
        super::subgroup::Subgroup::kernel(self).is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        let img = super::subgroup::Subgroup::image(self);
        let full = super::subgroup::Subgroup::full(self.target.clone());
        img.equals(&full).unwrap_or(false)
    }
}

/// Solve `a x ≡ b` modulo the relations of `group` (the columns of `a` are
/// elements of `group`). Returns integer coefficients `x`.
pub fn solve_in_group(group: &FGAbGroup, a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let system = a.hstack(group.relations()).ok()?;
    let sol = LinearSolver::new(&system).solve(b)?;
    Some(sol[..a.cols()].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ab::matrix::vec_of;

    #[test]
    fn invariant_factors() {
        let g = FGAbGroup::from_orders(&[2, 3, 0]);
        assert_eq!(g.torsion(), vec![BigInt::from(6)]);
        assert_eq!(g.free_rank(), 1);
        assert_eq!(g.describe(), "Z + Z/6");
    }

    #[test]
    fn canonical_reduction() {
        let g = FGAbGroup::from_orders(&[4]);
        assert!(g.elem_eq(&vec_of(&[1]), &vec_of(&[5])));
        assert!(g.is_zero(&vec_of(&[-8])));
        assert_eq!(g.element_order(&vec_of(&[2])), Some(BigInt::from(2)));
    }

    #[test]
    fn division() {
        let g = FGAbGroup::from_orders(&[4, 0]);
        let x = g.divide(&BigInt::from(2), &vec_of(&[2, 6])).unwrap();
        assert!(g.elem_eq(&x.iter().map(|v| v * 2).collect::<Vec<_>>(), &vec_of(&[2, 6])));
        assert!(g.divide(&BigInt::from(2), &vec_of(&[1, 0])).is_none());
        assert!(g.divide(&BigInt::from(0), &vec_of(&[4, 0])).is_some());
    }

    #[test]
    fn ill_defined_hom_is_rejected() {
        let z2 = FGAbGroup::cyclic(2);
        let z = FGAbGroup::free(1);
        assert!(AbHom::new(z2.clone(), z.clone(), IntMatrix::from_rows(&[vec![1]])).is_err());
        assert!(AbHom::new(z, z2, IntMatrix::from_rows(&[vec![1]])).is_ok());
    }

    #[test]
    fn invariant_coordinates_follow_the_description() {
        let g = FGAbGroup::from_orders(&[2, 0]);
        assert_eq!(g.describe(), "Z + Z/2");
        assert_eq!(g.invariant_coords(&vec_of(&[3, -4])), vec_of(&[-4, 1]));
        assert_eq!(FGAbGroup::from_orders(&[1, 3]).invariant_coords(&vec_of(&[5, 5])), vec_of(&[2]));
    }
}
