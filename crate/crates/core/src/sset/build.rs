//! Builders: standard simplices, boundaries, polygons, group nerves and disjoint unions.

use std::collections::HashMap;

use super::group::FiniteGroup;
use super::set::{Model, Simplex, SimplicialSet, TupleModel};
use super::word::combinations;
use crate::error::{Error, Result};

fn subset_label(s: &[usize], n: usize) -> String {
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    if n < 10 {
        parts.concat()
    } else {
        parts.join(",")
    }
}

/// Nonempty subsets of `[n]` as a simplicial set, optionally without the top simplex.
fn simplex_like(name: String, n: usize, with_top: bool) -> SimplicialSet {
    let top = if with_top { n + 1 } else { n };
    let mut subsets: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut index: Vec<HashMap<Vec<usize>, usize>> = Vec::new();
    for k in 0..top {
        let level = combinations(n + 1, k + 1);
        index.push(level.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect());
        subsets.push(level);
    }
    let labels = subsets.iter().map(|lv| lv.iter().map(|s| subset_label(s, n)).collect()).collect();
    let faces = subsets
        .iter()
        .enumerate()
        .map(|(k, lv)| {
            if k == 0 {
                return vec![Vec::new(); lv.len()];
            }
            lv.iter()
                .map(|s| {
                    (0..=k)
                        .map(|i| {
                            let mut f = s.clone();
                            f.remove(i);
                            Simplex::nondegenerate(k - 1, index[k - 1][&f])
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    SimplicialSet::unchecked(name, labels, faces, false, false, Model::Plain)
}

/// The standard `n`-simplex; nondegenerate simplices are the nonempty subsets of `[n]`.
pub fn standard_simplex(n: usize) -> SimplicialSet {
    simplex_like(format!("delta{n}"), n, true).with_flags(n == 0)
}

pub fn boundary(n: usize) -> SimplicialSet {
    simplex_like(format!("boundary{n}"), n, false)
}

/// The `m`-gon with `d1 e_i = v_i` and `d0 e_i = v_{i+1 mod m}`.
pub fn polygon(m: usize) -> Result<SimplicialSet> {
    if m < 3 {
        return Err(Error::InvalidArgument(format!("a polygon needs at least 3 sides, got {m}")));
    }
    let labels = vec![(0..m).map(|i| format!("v{i}")).collect(), (0..m).map(|i| format!("e{i}")).collect()];
    let edges = (0..m)
        .map(|i| vec![Simplex::nondegenerate(0, (i + 1) % m), Simplex::nondegenerate(0, i)])
        .collect();
    let faces = vec![vec![Vec::new(); m], edges];
    Ok(SimplicialSet::unchecked(format!("polygon{m}"), labels, faces, false, false, Model::Plain))
}

fn tuple_label(t: &[usize], open: char, close: char) -> String {
    let parts: Vec<String> = t.iter().map(|v| v.to_string()).collect();
    format!("{open}{}{close}", parts.join(","))
}

fn all_tuples(alphabet: &[usize], len: usize, ok: impl Fn(&[usize]) -> bool) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                alphabet.iter().map(move |&a| {
                    let mut u = t.clone();
                    u.push(a);
                    u
                })
            })
            .filter(|t| ok(t))
            .collect();
    }
    out
}

/// Nerve `BG` stored through degree `cutoff`. Nondegenerate `n`-simplices are the
/// `n`-tuples without identity entries.
pub fn nerve(group: &FiniteGroup, cutoff: usize) -> Result<SimplicialSet> {
    if cutoff < 1 {
        return Err(Error::InvalidArgument("nerve cutoff must be at least 1".into()));
    }
    let nonid: Vec<usize> = (1..group.order()).collect();
    let tuples: Vec<Vec<Vec<usize>>> = (0..=cutoff).map(|n| all_tuples(&nonid, n, |_| true)).collect();
    let model = tuple_model(group, tuples);
    let mut faces = vec![vec![Vec::new()]];
    for n in 1..=cutoff {
        let level = model.tuples[n]
            .iter()
            .map(|t| {
                (0..=n)
                    .map(|i| {
                        let mut f = t.clone();
                        if i == 0 {
                            f.remove(0);
                        } else if i == n {
                            f.pop();
                        } else {
                            let g = group.mul(f[i - 1], f[i]);
                            f[i - 1] = g;
                            f.remove(i);
                        }
                        nerve_simplex_in(&model, &f)
                    })
                    .collect()
            })
            .collect();
        faces.push(level);
    }
    let labels = model.tuples.iter().map(|lv| lv.iter().map(|t| tuple_label(t, '[', ']')).collect()).collect();
    let truncated = group.order() > 1;
    let name = format!("nerve:{}", group.name());
    Ok(SimplicialSet::unchecked(name, labels, faces, truncated, true, Model::Nerve(model)))
}

/// Contractible nerve `EG` stored through degree `cutoff`. Nondegenerate `n`-simplices are the
/// `(n + 1)`-tuples with distinct consecutive entries; faces delete entries.
pub fn e_nerve(group: &FiniteGroup, cutoff: usize) -> Result<SimplicialSet> {
    if cutoff < 1 {
        return Err(Error::InvalidArgument("nerve cutoff must be at least 1".into()));
    }
    let all: Vec<usize> = (0..group.order()).collect();
    let tuples: Vec<Vec<Vec<usize>>> = (0..=cutoff)
        .map(|n| all_tuples(&all, n + 1, |t| t.len() < 2 || t[t.len() - 1] != t[t.len() - 2]))
        .collect();
    let model = tuple_model(group, tuples);
    let mut faces = vec![vec![Vec::new(); group.order()]];
    for n in 1..=cutoff {
        let level = model.tuples[n]
            .iter()
            .map(|t| {
                (0..=n)
                    .map(|i| {
                        let mut f = t.clone();
                        f.remove(i);
                        enerve_simplex_in(&model, &f)
                    })
                    .collect()
            })
            .collect();
        faces.push(level);
    }
    let labels = model.tuples.iter().map(|lv| lv.iter().map(|t| tuple_label(t, '(', ')')).collect()).collect();
    let truncated = group.order() > 1;
    let name = format!("enerve:{}", group.name());
    Ok(SimplicialSet::unchecked(name, labels, faces, truncated, true, Model::ENerve(model)))
}

fn tuple_model(group: &FiniteGroup, tuples: Vec<Vec<Vec<usize>>>) -> TupleModel {
    let index = tuples.iter().map(|lv| lv.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect()).collect();
    TupleModel { group: group.clone(), tuples, index }
}

fn nerve_simplex_in(model: &TupleModel, t: &[usize]) -> Simplex {
    let mut surj = vec![0];
    let mut reduced = Vec::new();
    for &g in t {
        let last = *surj.last().expect("nonempty");
        if g == 0 {
            surj.push(last);
        } else {
            surj.push(last + 1);
            reduced.push(g);
        }
    }
    Simplex { surj, base: model.index[reduced.len()][&reduced] }
}

fn enerve_simplex_in(model: &TupleModel, t: &[usize]) -> Simplex {
    let mut surj = vec![0];
    let mut reduced = vec![t[0]];
    for w in t.windows(2) {
        let last = *surj.last().expect("nonempty");
        if w[0] == w[1] {
            surj.push(last);
        } else {
            surj.push(last + 1);
            reduced.push(w[1]);
        }
    }
    Simplex { surj, base: model.index[reduced.len() - 1][&reduced] }
}

impl SimplicialSet {
    /// The simplex of a group nerve with the given tuple (`n` entries for `BG`, `n + 1` for `EG`).
    pub fn tuple_simplex(&self, t: &[usize]) -> Result<Simplex> {
        let check = |m: &TupleModel, len: usize| -> Result<()> {
            if t.iter().any(|&g| g >= m.group.order()) {
                return Err(Error::InvalidArgument(format!("{t:?} is not a tuple of group elements")));
            }
            self.require_degree(len)
        };
        match self.model() {
            Model::Nerve(m) => {
                check(m, t.len())?;
                Ok(nerve_simplex_in(m, t))
            }
            Model::ENerve(m) => {
                if t.is_empty() {
                    return Err(Error::InvalidArgument("empty tuple".into()));
                }
                check(m, t.len() - 1)?;
                Ok(enerve_simplex_in(m, t))
            }
            _ => Err(Error::NotENerve),
        }
    }

    /// Tuple of a simplex of a group nerve.
    pub fn simplex_tuple(&self, s: &Simplex) -> Result<Vec<usize>> {
        match self.model() {
            Model::Nerve(m) => {
                let base = &m.tuples[s.base_dim()][s.base];
                Ok(s.surj.windows(2).map(|w| if w[0] == w[1] { 0 } else { base[w[0]] }).collect())
            }
            Model::ENerve(m) => {
                let base = &m.tuples[s.base_dim()][s.base];
                Ok(s.surj.iter().map(|&v| base[v]).collect())
            }
            _ => Err(Error::NotENerve),
        }
    }

    pub fn group(&self) -> Option<&FiniteGroup> {
        match self.model() {
            Model::Nerve(m) | Model::ENerve(m) => Some(&m.group),
            _ => None,
        }
    }
}

/// Disjoint union; simplices of part `i` are labelled `{i}.{label}`.
pub fn disjoint_union(parts: &[&SimplicialSet]) -> SimplicialSet {
    let cutoff = parts.iter().filter_map(|p| p.cutoff()).min();
    let top = match cutoff {
        Some(c) => c,
        None => parts.iter().map(|p| p.top()).max().unwrap_or(0),
    };
    let mut labels = vec![Vec::new(); top + 1];
    let mut faces: Vec<Vec<Vec<Simplex>>> = vec![Vec::new(); top + 1];
    for (i, p) in parts.iter().enumerate() {
        let offsets: Vec<usize> = labels.iter().map(|l: &Vec<String>| l.len()).collect();
        for n in 0..=top.min(p.top()) {
            for x in 0..p.count(n) {
                labels[n].push(format!("{i}.{}", p.label(n, x)));
                let fs = p
                    .nondeg_faces(n, x)
                    .iter()
                    .map(|f| Simplex { surj: f.surj.clone(), base: f.base + offsets[f.base_dim()] })
                    .collect();
                faces[n].push(fs);
            }
        }
    }
    let names: Vec<&str> = parts.iter().map(|p| p.name()).collect();
    let fibrant = parts.iter().all(|p| p.is_fibrant());
    SimplicialSet::unchecked(names.join("+"), labels, faces, cutoff.is_some(), fibrant, Model::Plain)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_counts() {
        assert_eq!(standard_simplex(2).counts(), vec![3, 3, 1]);
        assert_eq!(boundary(2).counts(), vec![3, 3]);
        assert!(boundary(0).is_empty());
        standard_simplex(3).validate().unwrap();
        boundary(3).validate().unwrap();
    }

    #[test]
    fn polygons() {
        let p = polygon(5).unwrap();
        p.validate().unwrap();
        assert_eq!(p.counts(), vec![5, 5]);
        assert!(p.is_connected());
        assert!(polygon(2).is_err());
    }

    #[test]
    fn nerve_counts() {
        let z2 = FiniteGroup::cyclic(2);
        let b = nerve(&z2, 3).unwrap();
        b.validate().unwrap();
        let all: Vec<usize> = (0..=3).map(|n| b.all_simplices(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 2, 4, 8]);
        let e = e_nerve(&z2, 2).unwrap();
        e.validate().unwrap();
        let all: Vec<usize> = (0..=2).map(|n| e.all_simplices(n).unwrap().len()).collect();
        assert_eq!(all, vec![2, 4, 8]);
        let point = nerve(&FiniteGroup::trivial(), 3).unwrap();
        assert!(point.is_compact());
        assert_eq!(point.counts(), vec![1]);
        assert!(b.all_simplices(4).is_err());
    }

    #[test]
    fn nonabelian_nerve_is_simplicial() {
        let s3 = FiniteGroup::symmetric3();
        nerve(&s3, 3).unwrap().validate().unwrap();
        e_nerve(&s3, 2).unwrap().validate().unwrap();
    }

    #[test]
    fn tuples_round_trip() {
        let z3 = FiniteGroup::cyclic(3);
        let b = nerve(&z3, 3).unwrap();
        for n in 0..=3 {
            for s in b.all_simplices(n).unwrap() {
                let t = b.simplex_tuple(&s).unwrap();
                assert_eq!(t.len(), n);
                assert_eq!(b.tuple_simplex(&t).unwrap(), s);
            }
        }
        let e = e_nerve(&z3, 2).unwrap();
        for n in 0..=2 {
            for s in e.all_simplices(n).unwrap() {
                let t = e.simplex_tuple(&s).unwrap();
                assert_eq!(e.tuple_simplex(&t).unwrap(), s);
            }
        }
    }

    #[test]
    fn union_labels() {
        let u = disjoint_union(&[&standard_simplex(1), &polygon(3).unwrap()]);
        u.validate().unwrap();
        assert_eq!(u.counts(), vec![5, 4]);
        assert_eq!(u.label(0, 2), "1.v0");
        assert!(!u.is_connected());
    }
}
