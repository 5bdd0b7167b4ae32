//! The structure document format.
//!
//! A document is a JSON object:
//!
//! ```text
//! document := { "format": "rbl2/1", body }
//! body     := "kind": KIND,
//!             "dims": { NAME: NAT, ... }            (non-hom kinds)
//!             "labels": { NAME: [STRING, ...], ... } (optional)
//!             "source": { body }, "target": { body } (hom kinds)
//!             "tensors": { TENSOR: [ENTRY, ...], ... }
//! ENTRY    := [NAT, ..., RATIONAL]
//! RATIONAL := "-?p" | "-?p/q"     (q > 0, lowest terms)
//! ```
//!
//! Entry indices are in document order: `[row, col]` for linear maps,
//! `[i, j, k]` meaning the `e_k` coefficient of `f(e_i, e_j)` for bilinear
//! maps, `[i, j, k, l]` likewise for trilinear maps, and `[x, row, col]`
//! for actions. Omitted entries and omitted tensors are zero. Duplicate
//! index tuples are rejected.
//!
//! The writer emits the canonical form: fixed key order, every tensor
//! listed, nonzero entries only, sorted by index tuple, values as `p/q`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};
use crate::structure::{Kind, Structure, TensorMut, TensorRef};

pub const FORMAT_VERSION: &str = "rbl2/1";

/// A structure together with optional basis labels. Label keys are
/// dimension names, prefixed `source/` or `target/` for hom endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub structure: Structure,
    pub labels: BTreeMap<String, Vec<String>>,
}

impl Document {
    pub fn new(structure: impl Into<Structure>) -> Self {
        Self {
            structure: structure.into(),
            labels: BTreeMap::new(),
        }
    }

    pub fn with_labels(mut self, dim: &str, labels: &[&str]) -> Self {
        self.labels.insert(
            dim.to_string(),
            labels.iter().map(|s| s.to_string()).collect(),
        );
        self
    }
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

pub fn parse_document(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = value
        .as_object()
        .ok_or_else(|| schema("document must be an object"))?;
    match obj.get("format") {
        Some(Value::String(v)) if v == FORMAT_VERSION => {}
        Some(Value::String(v)) => return Err(Error::VersionMismatch(v.clone())),
        Some(_) => return Err(schema("`format` must be a string")),
        None => return Err(schema("missing `format`")),
    }
    let mut labels = BTreeMap::new();
    let structure = parse_body(obj, true, None, "", &mut labels)?;
    Ok(Document { structure, labels })
}

pub fn load(path: impl AsRef<Path>) -> Result<Document> {
    parse_document(&std::fs::read_to_string(path)?)
}

pub fn save(path: impl AsRef<Path>, doc: &Document) -> Result<()> {
    std::fs::write(path, write_document(doc)?)?;
    Ok(())
}

fn parse_body(
    obj: &Map<String, Value>,
    top: bool,
    expected: Option<Kind>,
    prefix: &str,
    labels: &mut BTreeMap<String, Vec<String>>,
) -> Result<Structure> {
    const KEYS: [&str; 7] = [
        "format", "kind", "dims", "labels", "source", "target", "tensors",
    ];
    for key in obj.keys() {
        if !KEYS.contains(&key.as_str()) || (!top && key == "format") {
            return Err(schema(format!("unexpected key `{prefix}{key}`")));
        }
    }
    let kind: Kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| schema(format!("missing string `{prefix}kind`")))?
        .parse()?;
    if let Some(want) = expected {
        if kind != want {
            return Err(schema(format!(
                "`{prefix}kind` must be `{want}`, got `{kind}`"
            )));
        }
    }

    let mut structure = match kind.endpoint() {
        Some(end) => {
            if obj.contains_key("dims") {
                return Err(schema(format!("`{kind}` takes no `dims`")));
            }
            let mut side = |name: &str| {
                let sub = obj
                    .get(name)
                    .and_then(Value::as_object)
                    .ok_or_else(|| schema(format!("missing object `{prefix}{name}`")))?;
                parse_body(sub, false, Some(end), &format!("{prefix}{name}/"), labels)
            };
            let (s, t) = (side("source")?, side("target")?);
            Structure::zero_hom(kind, s, t)?
        }
        None => {
            for k in ["source", "target"] {
                if obj.contains_key(k) {
                    return Err(schema(format!("`{kind}` takes no `{k}`")));
                }
            }
            let dims_obj = obj
                .get("dims")
                .and_then(Value::as_object)
                .ok_or_else(|| schema(format!("missing object `{prefix}dims`")))?;
            let names = kind.dim_names();
            if let Some(extra) = dims_obj.keys().find(|k| !names.contains(&k.as_str())) {
                return Err(schema(format!("unknown dimension `{prefix}{extra}`")));
            }
            let dims = names
                .iter()
                .map(|n| {
                    dims_obj
                        .get(*n)
                        .and_then(Value::as_u64)
                        .map(|d| d as usize)
                        .ok_or_else(|| schema(format!("missing natural `{prefix}dims.{n}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            Structure::zero(kind, &dims)?
        }
    };

    if let Some(l) = obj.get("labels") {
        let l = l
            .as_object()
            .ok_or_else(|| schema("`labels` must be an object"))?;
        let names = kind.dim_names();
        let dims = structure.dims();
        for (name, list) in l {
            let pos = names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| schema(format!("labels for unknown dimension `{prefix}{name}`")))?;
            let list = list
                .as_array()
                .and_then(|a| {
                    a.iter()
                        .map(|v| v.as_str().map(str::to_string))
                        .collect::<Option<Vec<_>>>()
                })
                .ok_or_else(|| {
                    schema(format!("labels `{prefix}{name}` must be a list of strings"))
                })?;
            if list.len() != dims[pos] {
                return Err(schema(format!(
                    "labels `{prefix}{name}`: expected {}, got {}",
                    dims[pos],
                    list.len()
                )));
            }
            labels.insert(format!("{prefix}{name}"), list);
        }
    }

    let tensors = match obj.get("tensors") {
        Some(t) => t
            .as_object()
            .ok_or_else(|| schema("`tensors` must be an object"))?
            .clone(),
        None => Map::new(),
    };
    let known: Vec<&str> = structure.tensors().iter().map(|(n, _)| *n).collect();
    for (name, entries) in &tensors {
        if !known.contains(&name.as_str()) {
            return Err(schema(format!("`{kind}` has no tensor `{prefix}{name}`")));
        }
        let entries = entries
            .as_array()
            .ok_or_else(|| schema(format!("tensor `{prefix}{name}` must be a list")))?;
        let target = structure
            .tensor_mut(name)
            .expect("listed tensor is reachable");
        fill(target, &format!("{prefix}{name}"), entries)?;
    }
    Ok(structure)
}

fn shape_of(t: &TensorMut<'_>) -> Vec<usize> {
    match t {
        TensorMut::Linear(m) => vec![m.rows, m.cols],
        TensorMut::Bilinear(b) => vec![b.dim_a, b.dim_b, b.dim_out],
        TensorMut::Trilinear(t) => vec![t.dim, t.dim, t.dim, t.dim_out],
        TensorMut::Action(a) => vec![a.dim(), a.dim_v, a.dim_v],
    }
}

fn fill(mut target: TensorMut<'_>, name: &str, entries: &[Value]) -> Result<()> {
    let shape = shape_of(&target);
    let mut seen = BTreeSet::new();
    for entry in entries {
        let items = entry
            .as_array()
            .filter(|a| a.len() == shape.len() + 1)
            .ok_or_else(|| {
                schema(format!(
                    "entry of `{name}` must be {} indices and a value",
                    shape.len()
                ))
            })?;
        let (value, idx) = items.split_last().expect("nonempty");
        let indices = idx
            .iter()
            .zip(&shape)
            .map(|(v, &d)| match v.as_u64() {
                Some(i) if (i as usize) < d => Ok(i as usize),
                _ => Err(schema(format!("index {v} of `{name}` outside 0..{d}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let value = match value {
            Value::String(s) => scalar::parse(s)?,
            other => return Err(Error::BadRational(other.to_string())),
        };
        if !seen.insert(indices.clone()) {
            return Err(Error::DuplicateEntry {
                tensor: name.to_string(),
                indices,
            });
        }
        set_entry(&mut target, &indices, value);
    }
    Ok(())
}

fn set_entry(t: &mut TensorMut<'_>, ix: &[usize], value: Scalar) {
    match t {
        TensorMut::Linear(m) => m.set(ix[0], ix[1], value),
        TensorMut::Bilinear(b) => b.set(ix[2], ix[0], ix[1], value),
        TensorMut::Trilinear(t) => {
            let at = t.index(ix[3], ix[0], ix[1], ix[2]);
            t.coeffs[at] = value;
        }
        TensorMut::Action(a) => a.maps[ix[0]].set(ix[1], ix[2], value),
    }
}

/// Nonzero entries in document index order.
pub fn entries(t: &TensorRef<'_>) -> Vec<(Vec<usize>, Scalar)> {
    let mut out = Vec::new();
    let mut push = |ix: Vec<usize>, v: &Scalar| {
        if !num_traits::Zero::is_zero(v) {
            out.push((ix, v.clone()));
        }
    };
    match t {
        TensorRef::Linear(m) => {
            for r in 0..m.rows {
                for c in 0..m.cols {
                    push(vec![r, c], m.get(r, c));
                }
            }
        }
        TensorRef::Bilinear(b) => {
            for i in 0..b.dim_a {
                for j in 0..b.dim_b {
                    for k in 0..b.dim_out {
                        push(vec![i, j, k], b.get(k, i, j));
                    }
                }
            }
        }
        TensorRef::Trilinear(t) => {
            for i in 0..t.dim {
                for j in 0..t.dim {
                    for k in 0..t.dim {
                        for l in 0..t.dim_out {
                            push(vec![i, j, k, l], t.get(l, i, j, k));
                        }
                    }
                }
            }
        }
        TensorRef::Action(a) => {
            for (x, m) in a.maps.iter().enumerate() {
                for r in 0..m.rows {
                    for c in 0..m.cols {
                        push(vec![x, r, c], m.get(r, c));
                    }
                }
            }
        }
    }
    out
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn write_body(
    out: &mut String,
    s: &Structure,
    labels: &BTreeMap<String, Vec<String>>,
    prefix: &str,
    indent: usize,
) -> Result<()> {
    let pad = " ".repeat(indent);
    writeln!(out, "{pad}\"kind\": {},", json_str(s.kind().tag())).unwrap();
    let names = s.kind().dim_names();
    if !names.is_empty() {
        let dims: Vec<String> = names
            .iter()
            .zip(s.dims())
            .map(|(n, d)| format!("{}: {d}", json_str(n)))
            .collect();
        writeln!(out, "{pad}\"dims\": {{{}}},", dims.join(", ")).unwrap();
        let present: Vec<(&str, &Vec<String>)> = names
            .iter()
            .filter_map(|n| labels.get(&format!("{prefix}{n}")).map(|l| (*n, l)))
            .collect();
        if !present.is_empty() {
            writeln!(out, "{pad}\"labels\": {{").unwrap();
            for (k, (n, list)) in present.iter().enumerate() {
                let items: Vec<String> = list.iter().map(|l| json_str(l)).collect();
                let comma = if k + 1 < present.len() { "," } else { "" };
                writeln!(out, "{pad}  {}: [{}]{comma}", json_str(n), items.join(", ")).unwrap();
            }
            writeln!(out, "{pad}}},").unwrap();
        }
    }
    if let Some((source, target)) = s.endpoints() {
        for (name, side) in [("source", &source), ("target", &target)] {
            writeln!(out, "{pad}\"{name}\": {{").unwrap();
            write_body(out, side, labels, &format!("{prefix}{name}/"), indent + 2)?;
            writeln!(out, "{pad}}},").unwrap();
        }
    }
    let tensors = s.tensors();
    writeln!(out, "{pad}\"tensors\": {{").unwrap();
    for (k, (name, t)) in tensors.iter().enumerate() {
        let comma = if k + 1 < tensors.len() { "," } else { "" };
        let es = entries(t);
        if es.is_empty() {
            writeln!(out, "{pad}  {}: []{comma}", json_str(name)).unwrap();
            continue;
        }
        writeln!(out, "{pad}  {}: [", json_str(name)).unwrap();
        for (e, (ix, v)) in es.iter().enumerate() {
            let idx: Vec<String> = ix.iter().map(usize::to_string).collect();
            let ecomma = if e + 1 < es.len() { "," } else { "" };
            writeln!(
                out,
                "{pad}    [{}, \"{}\"]{ecomma}",
                idx.join(", "),
                scalar::format(v)
            )
            .unwrap();
        }
        writeln!(out, "{pad}  ]{comma}").unwrap();
    }
    writeln!(out, "{pad}}}").unwrap();
    Ok(())
}

/// Canonical text of a document.
pub fn write_document(doc: &Document) -> Result<String> {
    let mut out = String::new();
    out.push_str("{\n");
    writeln!(out, "  \"format\": {},", json_str(FORMAT_VERSION)).unwrap();
    write_body(&mut out, &doc.structure, &doc.labels, "", 2)?;
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LieAlgebra;
    use crate::tensor::from_ints;

    fn aff1_doc() -> Document {
        Document::new(LieAlgebra::from_upper(2, |_, _| from_ints(&[0, 1])))
            .with_labels("g", &["e1", "e2"])
    }

    #[test]
    fn canonical_text() {
        let text = write_document(&aff1_doc()).unwrap();
        let want = r#"{
  "format": "rbl2/1",
  "kind": "lie",
  "dims": {"g": 2},
  "labels": {
    "g": ["e1", "e2"]
  },
  "tensors": {
    "bracket": [
      [0, 1, 1, "1/1"],
      [1, 0, 1, "-1/1"]
    ]
  }
}
"#;
        assert_eq!(text, want);
        assert_eq!(parse_document(&text).unwrap(), aff1_doc());
    }

    #[test]
    fn integer_shorthand_is_normalized() {
        let text = r#"{"format": "rbl2/1", "kind": "lie", "dims": {"g": 2},
            "labels": {"g": ["e1", "e2"]},
            "tensors": {"bracket": [[0, 1, 1, "1"], [1, 0, 1, "-1"]]}}"#;
        let doc = parse_document(text).unwrap();
        assert_eq!(
            write_document(&doc).unwrap(),
            write_document(&aff1_doc()).unwrap()
        );
    }

    #[test]
    fn errors() {
        let base = |tensors: &str| {
            format!(
                r#"{{"format": "rbl2/1", "kind": "lie", "dims": {{"g": 2}}, "tensors": {{"bracket": {tensors}}}}}"#
            )
        };
        assert!(matches!(
            parse_document(&base(r#"[[0, 1, 1, "1/-2"]]"#)),
            Err(Error::BadRational(_))
        ));
        assert!(matches!(
            parse_document(&base(r#"[[0, 1, 1, "1"], [0, 1, 1, "2"]]"#)),
            Err(Error::DuplicateEntry { indices, .. }) if indices == vec![0, 1, 1]
        ));
        assert!(matches!(
            parse_document(&base("[[0, 2, 1, \"1\"]]")),
            Err(Error::Schema(_))
        ));
        assert!(matches!(
            parse_document("{\n  \"format\": }"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_document(r#"{"format": "rbl2/9", "kind": "lie"}"#),
            Err(Error::VersionMismatch(_))
        ));
        assert!(matches!(
            parse_document(r#"{"format": "rbl2/1", "kind": "group", "dims": {}}"#),
            Err(Error::UnknownKind(_))
        ));
    }
}
