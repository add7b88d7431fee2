//! JSON reading and writing of semirings, semimodules, congruences and reports.
//!
//! Output is compact JSON with keys in a fixed order, followed by a newline.
//! Parse errors carry the path of the offending value, such as `mult[2][1]`.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::cells::CellDecomposition;
use crate::error::{Error, Result};
use crate::monoid::FinMonoid;
use crate::semimodule::Semimodule;
use crate::semiring::{BasedSemiring, FiniteSemiring, NatVec, Semiring};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BasedDoc {
    kind: String,
    basis: Vec<String>,
    unit: Vec<u64>,
    mult: Vec<Vec<Vec<u64>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FiniteDoc {
    kind: String,
    elements: Vec<String>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
}

enum SemiringDoc {
    Based(BasedDoc),
    Finite(FiniteDoc),
}

impl SemiringDoc {
    fn to_value(&self) -> Value {
        match self {
            SemiringDoc::Based(d) => serde_json::to_value(d),
            SemiringDoc::Finite(d) => serde_json::to_value(d),
        }
        .expect("serializable")
    }

    fn from_value(v: Value, prefix: &str) -> Result<Self> {
        let kind = v
            .as_object()
            .ok_or_else(|| schema(join(prefix, "."), "expected a JSON object"))?
            .get("kind")
            .cloned();
        match kind.as_ref().and_then(Value::as_str) {
            Some("based") => Ok(SemiringDoc::Based(from_value_at(v, prefix)?)),
            Some("finite") => Ok(SemiringDoc::Finite(from_value_at(v, prefix)?)),
            _ => Err(schema(join(prefix, "kind"), "expected \"based\" or \"finite\"")),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SemimoduleDoc {
    semiring: Value,
    size: usize,
    zero: usize,
    add: Vec<Vec<usize>>,
    actions: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.into(),
        message: message.into(),
    }
}

fn join(prefix: &str, path: &str) -> String {
    match (prefix.is_empty(), path == ".") {
        (true, _) => path.to_string(),
        (false, true) => prefix.to_string(),
        (false, false) if path.starts_with('[') => format!("{prefix}{path}"),
        (false, false) => format!("{prefix}.{path}"),
    }
}

fn from_value_at<T: DeserializeOwned>(value: Value, prefix: &str) -> Result<T> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        schema(join(prefix, &path), e.into_inner().to_string())
    })
}

/// Parses any of the serializable types, reporting the path of the first
/// mismatch with the expected shape.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        schema(path, e.into_inner().to_string())
    })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable value");
    s.push('\n');
    s
}

fn check_square<T>(rows: &[Vec<T>], n: usize, path: &str) -> Result<()> {
    if rows.len() != n {
        return Err(schema(path, format!("expected {n} rows, found {}", rows.len())));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(schema(
                format!("{path}[{i}]"),
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
    }
    Ok(())
}

fn check_indices(rows: &[Vec<usize>], n: usize, path: &str) -> Result<()> {
    for (i, row) in rows.iter().enumerate() {
        if let Some(j) = row.iter().position(|&x| x >= n) {
            return Err(schema(
                format!("{path}[{i}][{j}]"),
                format!("index {} out of range for {n} elements", row[j]),
            ));
        }
    }
    Ok(())
}

fn semiring_doc(s: &Semiring) -> SemiringDoc {
    match s {
        Semiring::Based(b) => SemiringDoc::Based(BasedDoc {
            kind: "based".into(),
            basis: b.basis_names().to_vec(),
            unit: b.unit().coeffs().to_vec(),
            mult: b
                .mult_table()
                .iter()
                .map(|row| row.iter().map(|v| v.coeffs().to_vec()).collect())
                .collect(),
        }),
        Semiring::Finite(f) => SemiringDoc::Finite(FiniteDoc {
            kind: "finite".into(),
            elements: f.element_names().to_vec(),
            add: f.add_table().to_vec(),
            mul: f.mul_table().to_vec(),
            zero: f.zero(),
            one: f.one(),
        }),
    }
}

fn semiring_from_doc(doc: SemiringDoc, prefix: &str) -> Result<Semiring> {
    let at = |p: &str| join(prefix, p);
    match doc {
        SemiringDoc::Based(BasedDoc { basis, unit, mult, .. }) => {
            let k = basis.len();
            if unit.len() != k {
                return Err(schema(at("unit"), format!("expected {k} coefficients, found {}", unit.len())));
            }
            check_square(&mult, k, &at("mult"))?;
            let mut table = Vec::with_capacity(k);
            for (i, row) in mult.into_iter().enumerate() {
                let mut out = Vec::with_capacity(k);
                for (j, v) in row.into_iter().enumerate() {
                    if v.len() != k {
                        return Err(schema(
                            at(&format!("mult[{i}][{j}]")),
                            format!("expected {k} coefficients, found {}", v.len()),
                        ));
                    }
                    out.push(NatVec::from_coeffs(v));
                }
                table.push(out);
            }
            Ok(Semiring::Based(BasedSemiring::new(basis, NatVec::from_coeffs(unit), table)?))
        }
        SemiringDoc::Finite(FiniteDoc {
            elements,
            add,
            mul,
            zero,
            one,
            ..
        }) => {
            let k = elements.len();
            check_square(&add, k, &at("add"))?;
            check_square(&mul, k, &at("mul"))?;
            check_indices(&add, k, &at("add"))?;
            check_indices(&mul, k, &at("mul"))?;
            if zero >= k {
                return Err(schema(at("zero"), format!("index {zero} out of range")));
            }
            if one >= k {
                return Err(schema(at("one"), format!("index {one} out of range")));
            }
            Ok(Semiring::Finite(FiniteSemiring::new(elements, add, mul, zero, one)?))
        }
    }
}

pub fn semiring_to_json(s: &Semiring) -> String {
    to_json(&semiring_doc(s).to_value())
}

pub fn semiring_from_json(text: &str) -> Result<Semiring> {
    semiring_from_doc(SemiringDoc::from_value(from_json(text)?, "")?, "")
}

fn semimodule_doc(m: &Semimodule, semiring: Value) -> SemimoduleDoc {
    SemimoduleDoc {
        semiring,
        size: m.size(),
        zero: m.zero(),
        add: m.monoid().table().to_vec(),
        actions: m.actions().to_vec(),
        labels: m.labels().map(<[String]>::to_vec),
    }
}

/// Serializes with the semiring inlined.
pub fn semimodule_to_json(m: &Semimodule) -> String {
    let inline = semiring_doc(m.semiring()).to_value();
    to_json(&semimodule_doc(m, inline))
}

/// Serializes with the semiring given by a path to its JSON file.
pub fn semimodule_to_json_with_path(m: &Semimodule, semiring_path: &str) -> String {
    to_json(&semimodule_doc(m, Value::String(semiring_path.to_string())))
}

/// Parses a semimodule. A semiring given as a path is resolved against
/// `base_dir` when relative.
pub fn semimodule_from_json(text: &str, base_dir: Option<&Path>) -> Result<Semimodule> {
    let doc: SemimoduleDoc = from_json(text)?;
    let semiring = match doc.semiring {
        Value::String(p) => {
            let mut path = PathBuf::from(&p);
            if path.is_relative() {
                if let Some(dir) = base_dir {
                    path = dir.join(path);
                }
            }
            load_semiring(&path)?
        }
        v @ Value::Object(_) => semiring_from_doc(SemiringDoc::from_value(v, "semiring")?, "semiring")?,
        _ => {
            return Err(schema(
                "semiring",
                "expected a path string or an inline semiring object",
            ))
        }
    };
    semimodule_from_parts(Arc::new(semiring), doc.size, doc.zero, doc.add, doc.actions, doc.labels)
}

fn semimodule_from_parts(
    semiring: Arc<Semiring>,
    size: usize,
    zero: usize,
    add: Vec<Vec<usize>>,
    actions: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
) -> Result<Semimodule> {
    if size == 0 {
        return Err(schema("size", "carrier must be nonempty"));
    }
    check_square(&add, size, "add")?;
    check_indices(&add, size, "add")?;
    if zero >= size {
        return Err(schema("zero", format!("index {zero} out of range")));
    }
    let k = semiring.action_count();
    if actions.len() != k {
        return Err(schema(
            "actions",
            format!("expected {k} action tables, found {}", actions.len()),
        ));
    }
    for (i, a) in actions.iter().enumerate() {
        if a.len() != size {
            return Err(schema(
                format!("actions[{i}]"),
                format!("expected {size} entries, found {}", a.len()),
            ));
        }
    }
    check_indices(&actions, size, "actions")?;
    let mut m = Semimodule::new(semiring, FinMonoid::new(add, zero)?, actions)?;
    if let Some(l) = labels {
        if l.len() != size {
            return Err(schema("labels", format!("expected {size} labels, found {}", l.len())));
        }
        m = m.with_labels(l)?;
    }
    Ok(m)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn load_semiring(path: &Path) -> Result<Semiring> {
    semiring_from_json(&read(path)?)
}

pub fn load_semimodule(path: &Path) -> Result<Semimodule> {
    semimodule_from_json(&read(path)?, path.parent())
}

/// What a JSON document describes, judged by its top-level keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DocKind {
    Semiring,
    Semimodule,
    Congruence,
}

pub fn detect_kind(text: &str) -> Result<DocKind> {
    let v: Value = from_json(text)?;
    let obj = v
        .as_object()
        .ok_or_else(|| schema(".", "expected a JSON object"))?;
    if obj.contains_key("kind") {
        Ok(DocKind::Semiring)
    } else if obj.contains_key("semiring") {
        Ok(DocKind::Semimodule)
    } else if obj.contains_key("blocks") {
        Ok(DocKind::Congruence)
    } else {
        Err(schema(".", "unrecognized document"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellEntry {
    pub members: Vec<String>,
    pub idempotent: bool,
    pub strongly_regular: bool,
}

/// Cell structure with basis elements given by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellReport {
    pub left_cells: Vec<Vec<String>>,
    pub right_cells: Vec<Vec<String>>,
    pub two_sided_cells: Vec<CellEntry>,
}

impl CellReport {
    pub fn new(r: &BasedSemiring, d: &CellDecomposition) -> Self {
        let names = |c: &[usize]| c.iter().map(|&i| r.name(i).to_string()).collect();
        Self {
            left_cells: d.left_cells.iter().map(|c| names(c)).collect(),
            right_cells: d.right_cells.iter().map(|c| names(c)).collect(),
            two_sided_cells: d
                .two_sided_cells
                .iter()
                .map(|c| CellEntry {
                    members: names(&c.members),
                    idempotent: c.idempotent,
                    strongly_regular: c.strongly_regular,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    #[test]
    fn semiring_output_is_stable() {
        let r: Semiring = presets::kl_dihedral(3).unwrap().into();
        let once = semiring_to_json(&r);
        let back = semiring_from_json(&once).unwrap();
        assert_eq!(back, r);
        assert_eq!(semiring_to_json(&back), once);
        assert!(once.starts_with(r#"{"kind":"based","basis":["e","s","t","st","ts","w0"]"#));
    }

    #[test]
    fn schema_errors_name_the_path() {
        let bad = r#"{"kind":"based","basis":["e"],"unit":[1],"mult":[[[1, "x"]]]}"#;
        match semiring_from_json(bad) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "mult[0][0][1]"),
            other => panic!("unexpected {other:?}"),
        }
        let short = r#"{"kind":"based","basis":["e","f"],"unit":[1,0],"mult":[[[1,0],[0,1]],[[0,1]]]}"#;
        match semiring_from_json(short) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "mult[1]"),
            other => panic!("unexpected {other:?}"),
        }
        let extra = r#"{"kind":"finite","elements":["0"],"add":[[0]],"mul":[[0]],"zero":0,"one":0,"x":1}"#;
        assert!(matches!(semiring_from_json(extra), Err(Error::Schema { .. })));
    }

    #[test]
    fn action_count_mismatch_is_a_schema_error() {
        let r: Semiring = presets::kl_hat_s2().into();
        let inline = semiring_doc(&r).to_value().to_string();
        let text = format!(
            r#"{{"semiring":{inline},"size":2,"zero":0,"add":[[0,1],[1,1]],"actions":[[0,1]]}}"#
        );
        match semimodule_from_json(&text, None) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "actions"),
            other => panic!("unexpected {other:?}"),
        }
        let nested = format!(
            r#"{{"semiring":{},"size":1,"zero":0,"add":[[0]],"actions":[[0],[0]]}}"#,
            inline.replace(r#""unit":[1,0]"#, r#""unit":[1,-1]"#)
        );
        match semimodule_from_json(&nested, None) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "semiring.unit[1]"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
