//! The split exact sequence `0 -> ⊕ Ext(H_{i-1}C, H_iD) -> [C, D] -> ⊕ Hom(H_iC, H_iD) -> 0`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::classes::{class_group, HomotopyClassGroup};
use super::complex::{ChainComplex, ChainMap, Homology};
use crate::ab::matrix::{unit_vec, vec_add, vec_scale, vec_sub, zero_vec};
use crate::ab::{extend_hom, solve_in_group, AbHom, ExtGroup, Extension, FGAbGroup, HomGroup, IntMatrix, Subgroup};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct UctSequence {
    pub ext_pieces: Vec<(usize, ExtGroup)>,
    pub hom_pieces: Vec<(usize, HomGroup)>,
    pub ext_part: FGAbGroup,
    pub hom_part: FGAbGroup,
    pub classes: HomotopyClassGroup,
    pub injection: AbHom,
    pub surjection: AbHom,
    /// Right inverse of the surjection.
    pub splitting: AbHom,
    /// Left inverse of the injection vanishing on the image of the splitting.
    pub retraction: AbHom,
    pub report: UctReport,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct UctReport {
    pub injective: bool,
    pub surjective: bool,
    pub exact_in_middle: bool,
    pub splitting_is_section: bool,
    pub retraction_is_inverse: bool,
}

impl UctReport {
    pub fn holds(&self) -> bool {
        self.injective && self.surjective && self.exact_in_middle && self.splitting_is_section && self.retraction_is_inverse
    }
}

/// Builds both maps of the sequence, a splitting, and checks exactness.
pub fn uct_sequence(c: &ChainComplex, d: &ChainComplex) -> Result<UctSequence> {
    let classes = class_group(c, d)?;
    let top = c.top();
    let hc: Vec<Homology> = (0..=top).map(|i| Homology::of_bounded(c, i)).collect();
    let hd: Vec<Homology> = (0..=top).map(|i| Homology::of_bounded(d, i)).collect();

    let hom_pieces: Vec<(usize, HomGroup)> =
        (0..=top).map(|i| (i, HomGroup::new(hc[i].group(), hd[i].group()))).collect();
    let hom_groups: Vec<&FGAbGroup> = hom_pieces.iter().map(|(_, h)| h.group()).collect();
    let hom_part = FGAbGroup::direct_sum(&hom_groups.iter().map(|g| (*g).clone()).collect::<Vec<_>>());

    let ext_pieces: Vec<(usize, ExtGroup)> =
        (1..=top).map(|i| (i, ExtGroup::new(hc[i - 1].group(), hd[i].group()))).collect();
    let ext_groups: Vec<&FGAbGroup> = ext_pieces.iter().map(|(_, e)| e.group()).collect();
    let ext_part = FGAbGroup::direct_sum(&ext_groups.iter().map(|g| (*g).clone()).collect::<Vec<_>>());

    let g = classes.group().clone();

    // surjection: induced maps on homology
    let mut beta_cols = Vec::new();
    for j in 0..g.ngens() {
        let f = classes.basis_map(j);
        let mut col = Vec::new();
        for (i, hom) in &hom_pieces {
            let on_h = f.on_homology(*i, &hc[*i], &hd[*i])?;
            col.extend(hom.element_of(on_h.matrix())?);
        }
        beta_cols.push(col);
    }
    let surjection = AbHom::new(g.clone(), hom_part.clone(), IntMatrix::from_columns(hom_part.ngens(), &beta_cols))?;

    // injection: a cocycle on the relation lattice of H_{i-1}C becomes a map C_i -> Z_i D
    let mut alpha_cols = Vec::new();
    for (i, ext) in &ext_pieces {
        let i = *i;
        for k in 0..ext.group().ngens() {
            let phi = ext.cocycle(&unit_vec(ext.group().ngens(), k));
            let res = crate::ab::LinearSolver::new(ext.resolution());
            let boundary = c.boundary(i);
            let mut fi = IntMatrix::zeros(d.rank(i), c.rank(i));
            for col in 0..c.rank(i) {
                let y = hc[i - 1].cycle_coords(&boundary.column(col)).expect("boundaries are cycles");
                let w = res.solve(&y).expect("boundaries lie in the relation lattice");
                let mut value = zero_vec(hd[i].group().ngens());
                for (wk, pk) in w.iter().zip(&phi) {
                    value = vec_add(&value, &vec_scale(pk, wk));
                }
                let lift = hd[i].cycles().mul_vec(&value);
                for (r, e) in lift.into_iter().enumerate() {
                    fi[(r, col)] = e;
                }
            }
            let mut ms: Vec<IntMatrix> = (0..=top).map(|n| IntMatrix::zeros(d.rank(n), c.rank(n))).collect();
            ms[i] = fi;
            let f = ChainMap::new(c.clone(), d.clone(), ms)?;
            alpha_cols.push(classes.project(&f)?);
        }
    }
    let injection = AbHom::new(ext_part.clone(), g.clone(), IntMatrix::from_columns(g.ngens(), &alpha_cols))?;

    let splitting = split(&surjection, &injection, &hom_part, &ext_part, &g)?;

    // retraction: x - σβx lies in the image of the injection
    let mut rho_cols = Vec::new();
    for k in 0..g.ngens() {
        let e = unit_vec(g.ngens(), k);
        let back = splitting.apply(&surjection.apply(&e));
        let y = vec_sub(&e, &back);
        let t = solve_in_group(&g, injection.matrix(), &y)
            .ok_or_else(|| Error::InvalidComplex("sequence is not exact in the middle".into()))?;
        rho_cols.push(ext_part.reduce(&t));
    }
    let retraction = AbHom::new(g.clone(), ext_part.clone(), IntMatrix::from_columns(ext_part.ngens(), &rho_cols))?;

    let report = UctReport {
        injective: injection.is_injective(),
        surjective: surjection.is_surjective(),
        exact_in_middle: Subgroup::image(&injection).equals(&Subgroup::kernel(&surjection))?,
        splitting_is_section: splitting.then(&surjection)?.same_map(&AbHom::identity(hom_part.clone())),
        retraction_is_inverse: injection.then(&retraction)?.same_map(&AbHom::identity(ext_part.clone())),
    };
    Ok(UctSequence {
        ext_pieces,
        hom_pieces,
        ext_part,
        hom_part,
        classes,
        injection,
        surjection,
        splitting,
        retraction,
        report,
    })
}

/// A homomorphism `σ` with `β σ = id`: free preimages corrected by an extension problem into Ext.
fn split(beta: &AbHom, alpha: &AbHom, hom_part: &FGAbGroup, ext_part: &FGAbGroup, g: &FGAbGroup) -> Result<AbHom> {
    let nh = hom_part.ngens();
    let preimages: Vec<Vec<BigInt>> = (0..nh)
        .map(|j| {
            solve_in_group(hom_part, beta.matrix(), &unit_vec(nh, j))
                .ok_or_else(|| Error::InvalidComplex("surjection misses a generator".into()))
        })
        .collect::<Result<_>>()?;
    let rels = hom_part.relations();
    let mut constraints = Vec::new();
    for r in 0..rels.cols() {
        let col = rels.column(r);
        let mut s = zero_vec(g.ngens());
        for (j, c) in col.iter().enumerate() {
            if !c.is_zero() {
                s = vec_add(&s, &vec_scale(&preimages[j], c));
            }
        }
        let t = solve_in_group(g, alpha.matrix(), &s)
            .ok_or_else(|| Error::InvalidComplex("relation lifts outside the image of Ext".into()))?;
        constraints.push((col, vec_scale(&t, &BigInt::from(-1))));
    }
    let correction = match extend_hom(&FGAbGroup::free(nh), &constraints, ext_part)? {
        Extension::Found(h) => h,
        Extension::Refused(_) => return Err(Error::InvalidComplex("sequence does not split".into())),
    };
    let cols: Vec<Vec<BigInt>> = (0..nh)
        .map(|j| g.reduce(&vec_add(&preimages[j], &alpha.apply(&correction.apply(&unit_vec(nh, j))))))
        .collect();
    AbHom::new(hom_part.clone(), g.clone(), IntMatrix::from_columns(g.ngens(), &cols))
}
