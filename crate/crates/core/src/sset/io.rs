//! Named builders and the JSON form of simplicial sets and maps.
//!
//! Names: `point`, `delta<n>`, `boundary<n>`, `polygon<m>`, `nerve:<G>`, `enerve:<G>`,
//! products `A*B` and disjoint unions `A+B` (`*` binds tighter).

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::build::{boundary, disjoint_union, e_nerve, nerve, polygon, standard_simplex};
use super::group::FiniteGroup;
use super::map::SimplicialMap;
use super::product::{product, product_truncated};
use super::set::{Simplex, SimplicialSet};
use super::word::DegeneracyWord;
use crate::error::{Error, Result};

fn atom(name: &str, cutoff: usize) -> Result<SimplicialSet> {
    let number = |prefix: &str| name.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
    if name == "point" {
        Ok(standard_simplex(0))
    } else if let Some(n) = number("delta") {
        Ok(standard_simplex(n))
    } else if let Some(n) = number("boundary") {
        Ok(boundary(n))
    } else if let Some(m) = number("polygon") {
        polygon(m)
    } else if let Some(g) = name.strip_prefix("nerve:") {
        nerve(&FiniteGroup::parse(g)?, cutoff)
    } else if let Some(g) = name.strip_prefix("enerve:") {
        e_nerve(&FiniteGroup::parse(g)?, cutoff)
    } else {
        Err(Error::Parse(format!("unknown simplicial set {name:?}")))
    }
}

/// Builds a set from its name; truncated factors are cut at `cutoff`.
pub fn named_set(name: &str, cutoff: usize) -> Result<SimplicialSet> {
    let name = name.trim();
    if name.is_empty() {
        return Err(Error::Parse("empty simplicial set name".into()));
    }
    let terms = name
        .split('+')
        .map(|term| {
            let mut factors = term.split('*').map(|f| atom(f.trim(), cutoff));
            let first = factors.next().expect("split yields one piece")?;
            factors.try_fold(first, |acc, f| {
                let f = f?;
                if acc.is_compact() && f.is_compact() {
                    product(&acc, &f)
                } else {
                    product_truncated(&acc, &f, cutoff)
                }
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if terms.len() == 1 {
        return Ok(terms.into_iter().next().expect("one term"));
    }
    let refs: Vec<&SimplicialSet> = terms.iter().collect();
    Ok(disjoint_union(&refs))
}

/// Reads a simplex written as a label, or as `s..s..(label)`; `degree` is checked when given.
pub fn parse_simplex(set: &SimplicialSet, text: &str, degree: Option<usize>) -> Result<Simplex> {
    let text = text.trim();
    let check = |s: Simplex| match degree {
        Some(n) if s.dim() != n => Err(Error::Parse(format!("{text:?} has degree {}, expected {n}", s.dim()))),
        _ => Ok(s),
    };
    if let Some((n, x)) = set.find_label(text) {
        return check(Simplex::nondegenerate(n, x));
    }
    let open = text.find('(').ok_or_else(|| Error::Parse(format!("unknown simplex {text:?}")))?;
    let (word, rest) = text.split_at(open);
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("unbalanced simplex {text:?}")))?;
    let indices = word
        .split('s')
        .skip(1)
        .map(|d| d.parse::<usize>().map_err(|_| Error::Parse(format!("bad degeneracy word in {text:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if !word.starts_with('s') || indices.is_empty() {
        return Err(Error::Parse(format!("unknown simplex {text:?}")));
    }
    let (m, x) = set.find_label(inner).ok_or_else(|| Error::Parse(format!("unknown simplex {inner:?}")))?;
    let w = DegeneracyWord::normalize(&indices, m)?;
    if w.len() != indices.len() {
        return Err(Error::Parse(format!("{text:?} is not in normal form")));
    }
    check(Simplex { surj: w.to_surjection(m)?, base: x })
}

/// A simplex as `[word, id]`: a degeneracy word (empty for none) applied to a
/// nondegenerate simplex.
pub type WordRef = (String, String);

fn word_ref(set: &SimplicialSet, s: &Simplex) -> WordRef {
    let word = if s.is_nondegenerate() { String::new() } else { s.word().to_string() };
    (word, set.label(s.base_dim(), s.base).to_string())
}

fn resolve(set: &SimplicialSet, (word, id): &WordRef, degree: usize) -> Result<Simplex> {
    let text = if word.is_empty() { id.clone() } else { format!("{word}({id})") };
    parse_simplex(set, &text, Some(degree))
}

/// JSON form of a simplicial set. When `builder` is present it is authoritative and the
/// other fields are informational.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SetJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builder: Option<String>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub name: String,
    /// `None` for a compact set.
    #[serde(default)]
    pub cutoff: Option<usize>,
    /// Nondegenerate simplex ids by degree.
    #[serde(default)]
    pub simplices: BTreeMap<String, Vec<String>>,
    /// `d_0, …, d_n` of each positive-degree simplex.
    #[serde(default)]
    pub faces: BTreeMap<String, Vec<WordRef>>,
}

impl SetJson {
    pub fn from_set(set: &SimplicialSet, builder: Option<&str>) -> Self {
        let mut simplices = BTreeMap::new();
        let mut faces = BTreeMap::new();
        for n in 0..=set.top() {
            simplices.insert(n.to_string(), set.labels(n).to_vec());
            if n > 0 {
                for x in 0..set.count(n) {
                    let fs = set.nondeg_faces(n, x).iter().map(|f| word_ref(set, f)).collect();
                    faces.insert(set.label(n, x).to_string(), fs);
                }
            }
        }
        SetJson { builder: builder.map(str::to_string), name: set.name().to_string(), cutoff: set.cutoff(), simplices, faces }
    }

    /// Rebuilds the set; `default_cutoff` applies to builders without a cutoff.
    pub fn to_set(&self, default_cutoff: usize) -> Result<SimplicialSet> {
        if let Some(b) = &self.builder {
            return named_set(b, self.cutoff.unwrap_or(default_cutoff));
        }
        let bad = |m: String| Error::InvalidSimplicialSet(m);
        let labels = (0..self.simplices.len())
            .map(|n| self.simplices.get(&n.to_string()).cloned().ok_or_else(|| bad(format!("no simplices listed in degree {n}"))))
            .collect::<Result<Vec<_>>>()?;
        if let Some(k) = self.simplices.keys().find(|k| k.parse::<usize>().map_or(true, |n| n >= labels.len())) {
            return Err(bad(format!("bad degree key {k:?}")));
        }
        let mut seen = std::collections::BTreeSet::new();
        if let Some(id) = labels.iter().flatten().find(|id| !seen.insert(id.as_str())) {
            return Err(bad(format!("simplex id {id:?} is listed twice")));
        }
        if let Some(id) = self.faces.keys().find(|id| !seen.contains(id.as_str())) {
            return Err(bad(format!("faces given for unknown simplex {id:?}")));
        }
        let truncated = self.cutoff.is_some();
        // faces refer to lower degrees only, so a label-only skeleton resolves them
        let lookup = label_only(&labels, truncated);
        let faces = labels
            .iter()
            .enumerate()
            .map(|(n, ids)| {
                ids.iter()
                    .map(|id| {
                        let fs = self.faces.get(id).map(Vec::as_slice).unwrap_or(&[]);
                        let expected = if n == 0 { 0 } else { n + 1 };
                        if fs.len() != expected {
                            return Err(bad(format!("simplex {id:?} of degree {n} needs {expected} faces")));
                        }
                        fs.iter().map(|f| resolve(&lookup, f, n - 1)).collect()
                    })
                    .collect()
            })
            .collect::<Result<Vec<_>>>()?;
        let name = if self.name.is_empty() { "U".to_string() } else { self.name.clone() };
        SimplicialSet::new(name, labels, faces, truncated)
    }
}

fn label_only(labels: &[Vec<String>], truncated: bool) -> SimplicialSet {
    let faces = labels
        .iter()
        .enumerate()
        .map(|(n, l)| vec![vec![Simplex::nondegenerate(0, 0); if n == 0 { 0 } else { n + 1 }]; l.len()])
        .collect();
    SimplicialSet::unchecked("labels", labels.to_vec(), faces, truncated, false, super::set::Model::Plain)
}

/// JSON form of a simplicial map: the image of every nondegenerate simplex.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MapJson {
    pub source: SetJson,
    pub target: SetJson,
    pub assignment: BTreeMap<String, WordRef>,
}

impl MapJson {
    pub fn from_map(s: &SimplicialMap, source: SetJson, target: SetJson) -> Self {
        let mut assignment = BTreeMap::new();
        for (n, lv) in s.images().iter().enumerate() {
            for (x, t) in lv.iter().enumerate() {
                assignment.insert(s.source().label(n, x).to_string(), word_ref(s.target(), t));
            }
        }
        MapJson { source, target, assignment }
    }

    pub fn to_map(&self, default_cutoff: usize) -> Result<SimplicialMap> {
        let source = Arc::new(self.source.to_set(default_cutoff)?);
        let target = Arc::new(self.target.to_set(default_cutoff)?);
        assignment_to_map(source, target, &self.assignment)
    }
}

pub fn assignment_to_map(
    source: Arc<SimplicialSet>,
    target: Arc<SimplicialSet>,
    assignment: &BTreeMap<String, WordRef>,
) -> Result<SimplicialMap> {
    if let Some(id) = assignment.keys().find(|id| source.find_label(id).is_none()) {
        return Err(Error::InvalidSimplicialMap(format!("assignment names unknown simplex {id:?}")));
    }
    let images = (0..=source.top())
        .map(|n| {
            source
                .labels(n)
                .iter()
                .map(|id| {
                    let r = assignment.get(id).ok_or_else(|| Error::InvalidSimplicialMap(format!("no image for {id:?}")))?;
                    resolve(&target, r, n)
                })
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    SimplicialMap::new(source, target, images)
}
