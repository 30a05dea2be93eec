//! One function per subcommand; each returns a JSON document and its text rendering.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Value};

use straightlab::ab::FGAbGroup;
use straightlab::dk::{base_change_classes, class_group, homology, main_invariant, normalized_chains, uct_sequence};
use straightlab::sset::{assignment_to_map, homotopy_classes, named_set, MapJson, SetJson, SimplicialMap, SimplicialSet, WordRef};
use straightlab::straight::{is_k_straight, is_straight, Coefficients, FiniteMap, InvariantTable};
use straightlab::superpos::factor_through_main;
use straightlab::verify::{self, Report};
use straightlab::Error;

use crate::input::{self, parse_group, parse_json, Input, InputError, Value1};

pub struct Output {
    pub json: Value,
    pub text: String,
    /// Some verified statement did not hold.
    pub failed: bool,
}

fn output(json: Value, text: String) -> Output {
    Output { json, text, failed: false }
}

fn group_json(g: &FGAbGroup) -> Value {
    json!({
        "description": g.describe(),
        "free_rank": g.free_rank(),
        "torsion": g.torsion().iter().map(BigInt::to_string).collect::<Vec<_>>(),
    })
}

fn decimal(v: &[BigInt]) -> Vec<String> {
    v.iter().map(BigInt::to_string).collect()
}

/// Default budget for a target: two degrees above the source.
fn target_cutoff(flag: Option<usize>, u: &SimplicialSet) -> Input<usize> {
    input::cutoff(flag, u.top() + 2)
}

pub const GEN_CUTOFF: usize = 4;

pub fn gen(kind: &str, args: &[String], cutoff: Option<usize>) -> Input<Output> {
    let arg = |i: usize| args.get(i).cloned().ok_or_else(|| InputError(format!("gen {kind} needs {} argument(s)", i + 1)));
    let name = match kind {
        "point" => "point".to_string(),
        "simplex" | "delta" => format!("delta{}", arg(0)?),
        "boundary" => format!("boundary{}", arg(0)?),
        "polygon" => format!("polygon{}", arg(0)?),
        "nerve" => format!("nerve:{}", arg(0)?),
        "enerve" | "e-nerve" => format!("enerve:{}", arg(0)?),
        "product" => format!("{}*{}", arg(0)?, arg(1)?),
        "union" => format!("{}+{}", arg(0)?, arg(1)?),
        "name" => arg(0)?,
        other => return Err(InputError(format!("unknown builder {other:?}"))),
    };
    let set = named_set(&name, input::cutoff(cutoff, GEN_CUTOFF)?)?;
    let j = SetJson::from_set(&set, Some(&name));
    let mut text = format!("{name}\n");
    for (n, c) in set.counts().iter().enumerate() {
        let _ = writeln!(text, "  degree {n}: {c} nondegenerate");
    }
    if let Some(c) = set.cutoff() {
        let _ = writeln!(text, "  truncated at {c}");
    }
    Ok(output(serde_json::to_value(j).expect("set serializes"), text))
}

pub fn homology_of(set: &SimplicialSet) -> Input<Output> {
    let c = normalized_chains(set);
    let mut groups = Vec::new();
    let mut text = String::new();
    if !set.is_empty() {
        for n in 0..=c.top() {
            match homology(&c, n) {
                Ok(h) => {
                    let _ = writeln!(text, "H{n} = {}", h.describe());
                    groups.push(json!({"degree": n, "group": group_json(&h)}));
                }
                Err(Error::CutoffTooSmall { .. }) => break,
                Err(e) => return Err(e.into()),
            }
        }
    }
    if groups.is_empty() {
        text.push_str("H* = 0\n");
    }
    Ok(output(json!({"name": set.name(), "homology": groups}), text))
}

pub fn maps(u: &Arc<SimplicialSet>, v: &Arc<SimplicialSet>) -> Input<Output> {
    let h = homotopy_classes(u, v)?;
    let (sj, tj) = (SetJson::from_set(u, None), SetJson::from_set(v, None));
    let mut text = format!("{} maps {} -> {}, {} classes\n", h.maps().len(), u.name(), v.name(), h.count());
    let listed: Vec<Value> = h
        .maps()
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let a = MapJson::from_map(s, sj.clone(), tj.clone()).assignment;
            let images: Vec<String> = a.iter().map(|(k, (w, id))| format!("{k}->{}", ref_text(w, id))).collect();
            let _ = writeln!(text, "  {i:>3} class {:>2}  {}", h.class_of(i), images.join(" "));
            json!({"class": h.class_of(i), "assignment": a})
        })
        .collect();
    Ok(output(
        json!({"source": u.name(), "target": v.name(), "count": h.maps().len(), "classes": h.count(), "maps": listed}),
        text,
    ))
}

fn ref_text(word: &str, id: &str) -> String {
    if word.is_empty() {
        id.to_string()
    } else {
        format!("{word}({id})")
    }
}

pub fn classes(u: &Arc<SimplicialSet>, v: &Arc<SimplicialSet>, uct: bool) -> Input<Output> {
    let (c, d) = (normalized_chains(u), normalized_chains(v));
    let g = class_group(&c, &d)?;
    let mut text = format!("[N {}, N {}] = {}\n", u.name(), v.name(), g.group().describe());
    let mut doc = json!({"source": u.name(), "target": v.name(), "group": group_json(g.group())});
    if uct {
        let s = uct_sequence(&c, &d)?;
        let pieces = |ps: Vec<(usize, FGAbGroup)>| ps.iter().map(|(i, g)| json!({"degree": i, "group": group_json(g)})).collect::<Vec<_>>();
        for (i, p) in &s.ext_pieces {
            let _ = writeln!(text, "  Ext(H{}, H{}) = {}", i - 1, i, p.group().describe());
        }
        for (i, p) in &s.hom_pieces {
            let _ = writeln!(text, "  Hom(H{i}, H{i}) = {}", p.group().describe());
        }
        let _ = writeln!(text, "  split exact: {}", s.report.holds());
        doc["uct"] = json!({
            "ext": pieces(s.ext_pieces.iter().map(|(i, p)| (*i, p.group().clone())).collect()),
            "hom": pieces(s.hom_pieces.iter().map(|(i, p)| (*i, p.group().clone())).collect()),
            "report": s.report,
            "holds": s.report.holds(),
        });
    }
    Ok(output(doc, text))
}

pub fn main_invariant_of(s: &SimplicialMap) -> Input<Output> {
    let (g, x) = main_invariant(s)?;
    let inv = g.group().invariant_coords(&x);
    let text = format!("h([s]) = ({}) in {}\n", decimal(&inv).join(", "), g.group().describe());
    Ok(output(
        json!({
            "source": s.source().name(),
            "target": s.target().name(),
            "group": group_json(g.group()),
            "element": decimal(&x),
            "invariant_coordinates": decimal(&inv),
        }),
        text,
    ))
}

pub fn base_change(u: &Arc<SimplicialSet>, v: &Arc<SimplicialSet>, p: u64) -> Input<Output> {
    let b = base_change_classes(&normalized_chains(u), &normalized_chains(v), p)?;
    let text = format!(
        "Z/{p} (x) {} -> {} : dimension {} -> {}, injective {}, surjective {}\n",
        b.classes.group().describe(),
        b.target.describe(),
        b.source_dimension,
        b.dimension,
        b.injective,
        b.surjective
    );
    Ok(output(
        json!({
            "prime": p,
            "classes": group_json(b.classes.group()),
            "target": group_json(&b.target),
            "source_dimension": b.source_dimension,
            "dimension": b.dimension,
            "injective": b.injective,
            "surjective": b.surjective,
            "matrix": b.map.matrix(),
        }),
        text,
    ))
}

/// A finite set given by its size or by element names.
#[derive(Deserialize)]
#[serde(untagged)]
enum FiniteSet {
    Size(usize),
    Names(Vec<String>),
}

impl FiniteSet {
    fn names(&self) -> Vec<String> {
        match self {
            FiniteSet::Size(n) => (0..*n).map(|i| i.to_string()).collect(),
            FiniteSet::Names(v) => v.clone(),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Point {
    Index(usize),
    Name(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FiniteEntry {
    map: Vec<Point>,
    value: Value1,
    #[serde(default)]
    class: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FiniteTable {
    #[serde(rename = "X")]
    x: FiniteSet,
    #[serde(rename = "Y")]
    y: FiniteSet,
    group: String,
    #[serde(default)]
    ring: Option<String>,
    entries: Vec<FiniteEntry>,
}

fn straightness_text(straight: bool, note: &str) -> String {
    format!("{}{note}\n", if straight { "straight" } else { "not straight" })
}

pub fn straight_check(text: &str) -> Input<Output> {
    let t: FiniteTable = parse_json(text, "invariant table")?;
    let (xs, ys) = (t.x.names(), t.y.names());
    let group = parse_group(&t.group)?;
    let mut maps = Vec::new();
    let mut classes = Vec::new();
    let mut values = Vec::new();
    for (i, e) in t.entries.iter().enumerate() {
        if e.map.len() != xs.len() {
            return Err(InputError(format!("entry {i}: a map needs {} values", xs.len())));
        }
        let points = e
            .map
            .iter()
            .map(|p| match p {
                Point::Index(k) => Ok(*k),
                Point::Name(n) => ys.iter().position(|y| y == n).ok_or_else(|| InputError(format!("entry {i}: {n:?} is not in Y"))),
            })
            .collect::<Input<Vec<_>>>()?;
        maps.push(FiniteMap::new(ys.len(), points)?);
        classes.push(e.class.unwrap_or(i));
        values.push(e.value.to_element(&group)?);
    }
    let table = InvariantTable::new(maps, classes, values, group)?;
    let (s, ring) = match t.ring.as_deref() {
        None | Some("Z") => (is_straight(&table)?, "Z".to_string()),
        Some(r) => {
            let m = r.strip_prefix("Z/").and_then(|m| m.parse().ok()).ok_or_else(|| InputError(format!("cannot read ring {r:?}")))?;
            let k = Coefficients::modulo(m)?;
            (is_k_straight(&table, k)?, k.describe())
        }
    };
    let note = if ring == "Z" { String::new() } else { format!(" over {ring}") };
    let mut doc = serde_json::to_value(&s).expect("decision serializes");
    doc["ring"] = json!(ring);
    Ok(output(doc, straightness_text(s.straight, &note)))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MapEntry {
    assignment: BTreeMap<String, WordRef>,
    value: Value1,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SetTable {
    source: Value,
    target: Value,
    group: String,
    /// One value per homotopy class, in class order.
    #[serde(default)]
    class_values: Option<Vec<Value1>>,
    #[serde(default)]
    entries: Option<Vec<MapEntry>>,
}

pub fn factor_check(text: &str, cutoff: Option<usize>) -> Input<Output> {
    let t: SetTable = parse_json(text, "invariant table")?;
    let u = input::set_from_value(&t.source, input::cutoff(cutoff, GEN_CUTOFF)?)?;
    let v = input::set_from_value(&t.target, target_cutoff(cutoff, &u)?)?;
    let group = parse_group(&t.group)?;
    let h = homotopy_classes(&u, &v)?;
    let (maps, values) = match (&t.class_values, &t.entries) {
        (Some(cv), None) => {
            if cv.len() != h.count() {
                return Err(InputError(format!("{} class values given, there are {} classes", cv.len(), h.count())));
            }
            let values = h.class_labels().iter().map(|&c| cv[c].to_element(&group)).collect::<Input<Vec<_>>>()?;
            (h.maps().to_vec(), values)
        }
        (None, Some(es)) => {
            let maps = es.iter().map(|e| assignment_to_map(u.clone(), v.clone(), &e.assignment)).collect::<Result<Vec<_>, _>>()?;
            let values = es.iter().map(|e| e.value.to_element(&group)).collect::<Input<Vec<_>>>()?;
            (maps, values)
        }
        _ => return Err(InputError("give exactly one of class_values and entries".into())),
    };
    let classes = maps
        .iter()
        .map(|s| h.position(s).map(|i| h.class_of(i)).ok_or_else(|| InputError("a map is not in Si(U, V)".into())))
        .collect::<Input<Vec<_>>>()?;
    let table = InvariantTable::new(maps, classes, values, group)?;
    let d = factor_through_main(&u, &v, &table)?;
    let text = format!(
        "straight: {}\nfactors through h: {}\nverdicts agree: {}\n",
        d.straight.straight, d.factored.straight, d.agree
    );
    let doc = serde_json::to_value(&d).expect("decision serializes");
    Ok(Output { json: doc, text, failed: !d.agree })
}

pub struct VerifyArgs {
    pub suite: String,
    pub grid: Option<String>,
    pub u: Option<String>,
    pub v: Option<String>,
    pub w: Option<String>,
    pub k: Option<u64>,
    pub x: Option<usize>,
    pub y: Option<usize>,
    pub cutoff: Option<usize>,
    pub timing: bool,
}

fn instance(a: &VerifyArgs, cutoff: usize) -> Input<Option<Vec<Report>>> {
    let need = |o: &Option<String>, flag: &str| o.clone().ok_or_else(|| InputError(format!("{} needs --{flag}", a.suite)));
    let single = a.u.is_some() || a.v.is_some() || a.w.is_some() || a.k.is_some() || a.x.is_some() || a.y.is_some();
    if !single {
        return Ok(None);
    }
    let r = match a.suite.as_str() {
        "lemma9.1" => verify::lemma_9_1(&need(&a.u, "U")?, &need(&a.w, "W")?, cutoff)?,
        "lemma10.1" => verify::lemma_10_1(&need(&a.u, "U")?, &need(&a.v, "V")?, cutoff)?,
        "lemma11.2" => verify::lemma_11_2(&need(&a.u, "U")?, &need(&a.v, "V")?, cutoff)?,
        "lemma16.1" => {
            let (k, x, y) = (a.k.unwrap_or(2), a.x.unwrap_or(1), a.y.unwrap_or(1));
            verify::lemma_16_1(k, x, y)?
        }
        other => return Err(InputError(format!("{other} runs on its grid only"))),
    };
    Ok(Some(vec![r]))
}

pub fn verify_suite(a: &VerifyArgs) -> Input<Output> {
    if !verify::SUITES.contains(&a.suite.as_str()) {
        return Err(InputError(format!("unknown suite {:?}; known: {}", a.suite, verify::SUITES.join(", "))));
    }
    if let Some(g) = a.grid.as_deref().filter(|g| *g != "default") {
        return Err(InputError(format!("unknown grid {g:?}")));
    }
    let cutoff = input::cutoff(a.cutoff, verify::DEFAULT_CUTOFF)?;
    let reports = match instance(a, cutoff)? {
        Some(r) => r,
        None => verify::suite(&a.suite, cutoff)?,
    };
    let reports: Vec<Report> = reports.into_iter().map(|r| if a.timing { r } else { r.without_timing() }).collect();
    let holds = reports.iter().all(|r| r.holds);
    let mut text = String::new();
    for r in &reports {
        let inst: Vec<String> = r.instance.iter().map(|(k, v)| format!("{k}={}", v.as_str().map_or(v.to_string(), str::to_string))).collect();
        let _ = writeln!(text, "{} {} {}", if r.holds { "PASS" } else { "FAIL" }, r.lemma, inst.join(" "));
    }
    let _ = writeln!(text, "{}/{} instances hold", reports.iter().filter(|r| r.holds).count(), reports.len());
    Ok(Output { json: json!({"suite": a.suite, "holds": holds, "reports": reports}), text, failed: !holds })
}
