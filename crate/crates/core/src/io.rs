//! The JSON instance format.
//!
//! A document holds exactly one of
//!
//! * `group` + `vectors` (+ optional `labels`): `{"group": {"free_rank": 1,
//!   "torsion": [2]}, "vectors": [[2, 1], [1, 0]]}`, free coordinates first;
//! * `graph`: `{"graph": {"vertices": 3, "edges": [{"tail": 1, "head": 2,
//!   "weight": 1}]}}`, vertices numbered from 1;
//! * `tables`: `{"tables": {"ranks": [...], "multiplicities": ["1", "2", ...],
//!   "kind": "arithmetic"}}`, indexed by the bitmask of the subset.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::abelian::{FgGroup, VectorList};
use crate::arithmetic::{ArithmeticMatroid, Kind, Represented};
use crate::error::{Error, Result};
use crate::matroid::{RankTable, TABLE_LIMIT};
use crate::poly::{format_rational, parse_rational};
use crate::potts::{graph_encode, Edge, WeightedDigraph};
use crate::suite::Instance;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub free_rank: usize,
    #[serde(default)]
    pub torsion: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub tail: usize,
    pub head: usize,
    #[serde(default = "unit_weight")]
    pub weight: i64,
}

fn unit_weight() -> i64 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpec {
    pub vertices: usize,
    pub edges: Vec<EdgeSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TablesSpec {
    pub ranks: Vec<u32>,
    /// Strings `"p/q"` or JSON integers.
    pub multiplicities: Vec<Value>,
    #[serde(default = "default_kind")]
    pub kind: Kind,
}

fn default_kind() -> Kind {
    Kind::Arithmetic
}

/// The raw document, before validation.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vectors: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tables: Option<TablesSpec>,
}

/// A validated instance together with any normalization warnings.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub instance: Instance,
    pub warnings: Vec<String>,
}

fn invalid(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Invalid(format!("{path}: {msg}"))
}

pub fn parse_str(text: &str) -> Result<Parsed> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| invalid("document", e))?;
    doc.validate()
}

pub fn parse_file(path: &std::path::Path) -> Result<Parsed> {
    let text = std::fs::read_to_string(path).map_err(|e| invalid(&path.display().to_string(), e))?;
    parse_str(&text)
}

impl InputDocument {
    pub fn validate(&self) -> Result<Parsed> {
        let present = [self.vectors.is_some(), self.graph.is_some(), self.tables.is_some()];
        if present.iter().filter(|&&p| p).count() != 1 {
            return Err(invalid("document", "exactly one of `vectors`, `graph`, `tables` must be present"));
        }
        if self.vectors.is_none() && (self.group.is_some() || self.labels.is_some()) {
            return Err(invalid("document", "`group` and `labels` go with `vectors`"));
        }
        if let Some(vectors) = &self.vectors {
            let group = self.group.as_ref().ok_or_else(|| invalid("group", "required with `vectors`"))?;
            let (list, warnings) = parse_list(group, vectors, self.labels.as_deref())?;
            return Ok(Parsed { instance: Instance::List { rep: Represented::new(list)?, graph: None }, warnings });
        }
        if let Some(graph) = &self.graph {
            let d = parse_graph(graph)?;
            let rep = Represented::new(graph_encode(&d)?)?;
            return Ok(Parsed { instance: Instance::List { rep, graph: Some(d) }, warnings: Vec::new() });
        }
        let tables = self.tables.as_ref().expect("one source present");
        Ok(Parsed { instance: Instance::Tables(parse_tables(tables)?), warnings: Vec::new() })
    }
}

fn parse_list(group: &GroupSpec, vectors: &[Vec<i64>], labels: Option<&[String]>) -> Result<(VectorList, Vec<String>)> {
    for (i, &d) in group.torsion.iter().enumerate() {
        if d <= 0 {
            return Err(invalid(&format!("group.torsion[{i}]"), format!("invariant {d} is not positive")));
        }
    }
    let dim = group.free_rank + group.torsion.len();
    for (i, v) in vectors.iter().enumerate() {
        if v.len() != dim {
            return Err(invalid(&format!("vectors[{i}]"), format!("length {} does not match group dimension {dim}", v.len())));
        }
    }
    let mut warnings = Vec::new();
    let list = match FgGroup::new(group.free_rank, group.torsion.clone()) {
        Ok(g) => VectorList::from_coords(g, vectors)?,
        Err(_) => {
            let factors: Vec<BigInt> = group.torsion.iter().map(|&d| BigInt::from(d)).collect();
            let (g, map) = FgGroup::normalize(group.free_rank, &factors);
            warnings.push(format!("torsion {:?} renormalized to {g}", group.torsion));
            let elements = vectors
                .iter()
                .map(|v| map.map(&v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()))
                .collect();
            VectorList::new(g, elements)?
        }
    };
    if list.len() > TABLE_LIMIT {
        return Err(invalid("vectors", format!("{} elements exceed the limit of {TABLE_LIMIT}", list.len())));
    }
    match labels {
        Some(l) if l.len() != list.len() => {
            Err(invalid("labels", format!("{} labels for {} vectors", l.len(), list.len())))
        }
        Some(l) => Ok((list.with_labels(l.to_vec())?, warnings)),
        None => Ok((list, warnings)),
    }
}

fn parse_graph(g: &GraphSpec) -> Result<WeightedDigraph> {
    let mut edges = Vec::with_capacity(g.edges.len());
    for (i, e) in g.edges.iter().enumerate() {
        let path = format!("graph.edges[{i}]");
        for (name, v) in [("tail", e.tail), ("head", e.head)] {
            if v == 0 || v > g.vertices {
                return Err(invalid(&format!("{path}.{name}"), format!("vertex {v} outside 1..={}", g.vertices)));
            }
        }
        if e.weight < 1 {
            return Err(invalid(&format!("{path}.weight"), format!("weight {} is not positive", e.weight)));
        }
        if e.tail == e.head {
            return Err(invalid(&path, format!("loop at vertex {}", e.tail)));
        }
        edges.push(Edge { tail: e.tail - 1, head: e.head - 1, weight: e.weight as u64 });
    }
    if g.edges.len() > TABLE_LIMIT {
        return Err(invalid("graph.edges", format!("{} edges exceed the limit of {TABLE_LIMIT}", g.edges.len())));
    }
    WeightedDigraph::new(g.vertices, edges)
}

fn parse_multiplicity(i: usize, v: &Value) -> Result<BigRational> {
    let path = format!("tables.multiplicities[{i}]");
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| invalid(&path, e)),
        Value::Number(n) => n
            .as_i64()
            .map(|x| BigRational::from_integer(BigInt::from(x)))
            .ok_or_else(|| invalid(&path, format!("{n} is not an integer; use a \"p/q\" string"))),
        other => Err(invalid(&path, format!("expected a string or an integer, found {other}"))),
    }
}

fn parse_tables(t: &TablesSpec) -> Result<ArithmeticMatroid> {
    let len = t.ranks.len();
    if !len.is_power_of_two() {
        return Err(invalid("tables.ranks", format!("length {len} is not a power of two")));
    }
    let n = len.trailing_zeros() as usize;
    if n > TABLE_LIMIT {
        return Err(invalid("tables.ranks", format!("{n} elements exceed the limit of {TABLE_LIMIT}")));
    }
    if t.multiplicities.len() != len {
        return Err(invalid("tables.multiplicities", format!("length {} differs from ranks length {len}", t.multiplicities.len())));
    }
    let mult = t.multiplicities.iter().enumerate().map(|(i, v)| parse_multiplicity(i, v)).collect::<Result<Vec<_>>>()?;
    let matroid = RankTable::new(n, t.ranks.clone()).map_err(|e| invalid("tables.ranks", e))?;
    ArithmeticMatroid::new_unchecked(matroid, mult, t.kind).map_err(|e| invalid("tables.multiplicities", e))
}

fn int_i64(x: &BigInt, what: &str) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Invalid(format!("{what} {x} does not fit in 64 bits")))
}

/// The document describing an instance; `parse(emit(x))` rebuilds `x`.
pub fn emit_instance(instance: &Instance) -> Result<InputDocument> {
    match instance {
        Instance::List { graph: Some(d), .. } => Ok(InputDocument {
            graph: Some(GraphSpec {
                vertices: d.vertices,
                edges: d
                    .edges
                    .iter()
                    .map(|e| EdgeSpec { tail: e.tail + 1, head: e.head + 1, weight: e.weight as i64 })
                    .collect(),
            }),
            ..InputDocument::default()
        }),
        Instance::List { rep, graph: None } => emit_list(rep.list()),
        Instance::Tables(a) => Ok(emit_tables(a)),
    }
}

pub fn emit_list(list: &VectorList) -> Result<InputDocument> {
    let g = list.group();
    let torsion = g.torsion().iter().map(|d| int_i64(d, "torsion invariant")).collect::<Result<Vec<_>>>()?;
    let vectors = list
        .elements()
        .iter()
        .map(|e| e.coords().iter().map(|x| int_i64(x, "coordinate")).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(InputDocument {
        group: Some(GroupSpec { free_rank: g.free_rank(), torsion }),
        vectors: Some(vectors),
        labels: list.labels().map(<[String]>::to_vec),
        ..InputDocument::default()
    })
}

pub fn emit_tables(a: &ArithmeticMatroid) -> InputDocument {
    InputDocument {
        tables: Some(TablesSpec {
            ranks: a.matroid().ranks().to_vec(),
            multiplicities: a.multiplicities().iter().map(|m| Value::String(format_rational(m))).collect(),
            kind: a.kind(),
        }),
        ..InputDocument::default()
    }
}

/// `"p/q"`, or `"p"` for integers.
pub fn rational_json(r: &BigRational) -> Value {
    Value::String(format_rational(r))
}

/// Parses `"a,b,c"` as rationals; one value is broadcast to `n` entries.
pub fn parse_values(s: &str, n: usize) -> Result<Vec<BigRational>> {
    let vals = s.split(',').map(|t| parse_rational(t.trim())).collect::<Result<Vec<_>>>()?;
    match vals.len() {
        1 => Ok(vec![vals[0].clone(); n]),
        k if k == n => Ok(vals),
        k => Err(Error::Invalid(format!("--v: {k} values for {n} elements"))),
    }
}

/// Parses `"d1,d2,..."` as a finite group `Z_{d1} ⊕ Z_{d2} ⊕ ...`.
pub fn parse_target(s: &str) -> Result<FgGroup> {
    let factors = s
        .split(',')
        .map(|t| {
            let d: i64 = t.trim().parse().map_err(|_| Error::Invalid(format!("--h: `{t}` is not an integer")))?;
            if d <= 0 {
                return Err(Error::Invalid(format!("--h: invariant {d} is not positive")));
            }
            Ok(BigInt::from(d))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FgGroup::normalize(0, &factors).0)
}
