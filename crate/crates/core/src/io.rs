//! JSON formats and Graphviz output.
//!
//! * poset: `{"points": [...], "covers": [[i, j], ...]}`; points are labels (strings)
//!   or indices (numbers), a cover `[i, j]` means `i ⋖ j` and may name points by
//!   index or label.
//! * algebra: `{"dual": poset}`, or explicit tables `{"leq", "meet", "join", "imp",
//!   "bottom", "top"}` with optional `"elements"` labels, or just `{"leq"}`.
//! * partition: `{"classes": [[...], ...]}`.
//! * morphism: `{"map": [...]}`.

use std::fmt::Write as _;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::algebra::HeytingAlgebra;
use crate::duality::{is_correct_partition, CorrectPartition};
use crate::error::{Error, Result};
use crate::poset::FinitePoset;

impl Serialize for FinitePoset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        poset_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinitePoset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        poset_from_json(&Value::deserialize(d)?).map_err(D::Error::custom)
    }
}

impl Serialize for HeytingAlgebra {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        algebra_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for HeytingAlgebra {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        algebra_from_json(&Value::deserialize(d)?).map_err(D::Error::custom)
    }
}

pub fn poset_to_json(p: &FinitePoset) -> Value {
    let points: Vec<Value> = match p.labels() {
        Some(l) => l.iter().map(|s| json!(s)).collect(),
        None => (0..p.len()).map(|i| json!(i)).collect(),
    };
    let covers: Vec<[usize; 2]> = p.covers().into_iter().map(|(i, j)| [i, j]).collect();
    json!({ "points": points, "covers": covers })
}

pub fn poset_from_json(v: &Value) -> Result<FinitePoset> {
    let points = v
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::invalid("a poset needs a \"points\" array"))?;
    let n = points.len();
    let mut labels = Vec::with_capacity(n);
    let mut labeled = false;
    for (i, p) in points.iter().enumerate() {
        match p {
            Value::String(s) => {
                labeled = true;
                labels.push(s.clone());
            }
            Value::Number(k) if k.as_u64() == Some(i as u64) => labels.push(i.to_string()),
            _ => return Err(Error::invalid(format!("point {i} must be a label or the number {i}"))),
        }
    }
    let point = |e: &Value| -> Result<usize> {
        let i = match e {
            Value::String(s) => labels.iter().position(|l| l == s),
            Value::Number(k) => k.as_u64().map(|k| k as usize).filter(|&k| k < n),
            _ => None,
        };
        i.ok_or_else(|| Error::invalid(format!("a cover refers to a missing point {e}")))
    };
    let covers: Vec<(usize, usize)> = match v.get("covers") {
        None => Vec::new(),
        Some(c) => serde_json::from_value::<Vec<[Value; 2]>>(c.clone())
            .map_err(|e| Error::invalid(format!("bad covers: {e}")))?
            .iter()
            .map(|[i, j]| Ok((point(i)?, point(j)?)))
            .collect::<Result<_>>()?,
    };
    let p = FinitePoset::from_covers(n, &covers)?;
    if labeled {
        Ok(p.with_labels(labels)?)
    } else {
        Ok(p)
    }
}

pub fn algebra_to_json(a: &HeytingAlgebra) -> Value {
    if let Some(p) = a.provenance() {
        if a.labels().is_none() {
            return json!({ "dual": poset_to_json(&p.dual) });
        }
    }
    let mut v = json!({
        "leq": a.leq_matrix(),
        "meet": a.meet_matrix(),
        "join": a.join_matrix(),
        "imp": a.imp_matrix(),
        "bottom": a.bottom(),
        "top": a.top(),
    });
    if let Some(l) = a.labels() {
        v["elements"] = json!(l);
    }
    v
}

/// Parse and verify an algebra.
pub fn algebra_from_json(v: &Value) -> Result<HeytingAlgebra> {
    let field = |k: &str| v.get(k).cloned();
    let parse = |k: &str| -> Result<Option<Vec<Vec<usize>>>> {
        field(k)
            .map(|x| serde_json::from_value(x).map_err(|e| Error::invalid(format!("bad {k} table: {e}"))))
            .transpose()
    };
    let a = if let Some(d) = field("dual") {
        HeytingAlgebra::from_upsets(&poset_from_json(&d)?)?
    } else {
        let leq: Vec<Vec<bool>> = serde_json::from_value(field("leq").ok_or_else(|| {
            Error::invalid("an algebra needs \"dual\" or a \"leq\" table")
        })?)
        .map_err(|e| Error::invalid(format!("bad leq table: {e}")))?;
        match (parse("meet")?, parse("join")?, parse("imp")?) {
            (Some(m), Some(j), Some(i)) => {
                let bottom = serde_json::from_value(field("bottom").unwrap_or(Value::Null))
                    .map_err(|_| Error::invalid("explicit tables need \"bottom\""))?;
                let top = serde_json::from_value(field("top").unwrap_or(Value::Null))
                    .map_err(|_| Error::invalid("explicit tables need \"top\""))?;
                HeytingAlgebra::from_tables(&leq, &m, &j, &i, bottom, top)?
            }
            (None, None, None) => HeytingAlgebra::from_order(&leq)?,
            _ => return Err(Error::invalid("give all of meet, join and imp, or none")),
        }
    };
    a.verify_heyting().map_err(|e| Error::invalid(format!("not a Heyting algebra: {e}")))?;
    match field("elements") {
        Some(l) => {
            let labels: Vec<String> =
                serde_json::from_value(l).map_err(|e| Error::invalid(format!("bad element labels: {e}")))?;
            a.with_labels(labels)
        }
        None => Ok(a),
    }
}

/// Parse a partition and check it against `x`.
pub fn partition_from_json(v: &Value, x: &FinitePoset) -> Result<CorrectPartition> {
    let classes: Vec<Vec<usize>> = serde_json::from_value(
        v.get("classes").cloned().ok_or_else(|| Error::invalid("a partition needs \"classes\""))?,
    )
    .map_err(|e| Error::invalid(format!("bad classes: {e}")))?;
    let r = CorrectPartition::new(x.len(), classes)?;
    is_correct_partition(&r, x).map_err(|e| Error::invalid(e.to_string()))?;
    Ok(r)
}

const PALETTE: [&str; 8] = ["#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5"];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn hasse_body(out: &mut String, p: &FinitePoset, prefix: &str, fill: &dyn Fn(usize) -> Option<&'static str>) {
    for i in 0..p.len() {
        let style = match fill(i) {
            Some(c) => format!(", style=filled, fillcolor={}", quote(c)),
            None => String::new(),
        };
        let _ = writeln!(out, "  {prefix}{i} [label={}{style}];", quote(&p.label(i)));
    }
    for (i, j) in p.covers() {
        let _ = writeln!(out, "  {prefix}{i} -> {prefix}{j};");
    }
}

/// Hasse diagram, bottom to top; classes of `partition` share a fill colour.
pub fn poset_dot(p: &FinitePoset, partition: Option<&CorrectPartition>) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n  edge [arrowhead=none];\n");
    let class = partition.map(|r| r.class_of());
    let multi: Vec<bool> = match partition {
        Some(r) => {
            let c = r.class_of();
            (0..p.len()).map(|i| r.classes[c[i]].len() > 1).collect()
        }
        None => vec![false; p.len()],
    };
    hasse_body(&mut out, p, "p", &|i| {
        class.as_ref().filter(|_| multi[i]).map(|c| PALETTE[c[i] % PALETTE.len()])
    });
    out.push_str("}\n");
    out
}

/// Hasse diagram of an algebra's lattice order.
pub fn algebra_dot(a: &HeytingAlgebra) -> String {
    let leq = a.leq_matrix();
    let order = FinitePoset::validate(&leq).expect("lattice order");
    let labels = a.elements().map(|e| a.label(e)).collect();
    poset_dot(&order.with_labels(labels).expect("one label per element"), None)
}

/// Both posets side by side with `f` drawn as dashed arrows.
pub fn morphism_dot(x: &FinitePoset, y: &FinitePoset, f: &[usize]) -> String {
    let mut out = String::from("digraph morphism {\n  rankdir=BT;\n  node [shape=circle];\n  edge [arrowhead=none];\n");
    out.push_str("  subgraph cluster_source {\n  label=\"source\";\n");
    hasse_body(&mut out, x, "s", &|_| None);
    out.push_str("  }\n  subgraph cluster_target {\n  label=\"target\";\n");
    hasse_body(&mut out, y, "t", &|_| None);
    out.push_str("  }\n");
    for (i, &j) in f.iter().enumerate() {
        let _ = writeln!(out, "  s{i} -> t{j} [style=dashed, arrowhead=normal, constraint=false];");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::algebra_iso;
    use crate::constructions::{rn_downset, x_n_space, RNElement};
    use crate::duality::EsakiaMap;

    #[test]
    fn poset_round_trip() {
        for p in [FinitePoset::chain(3), FinitePoset::antichain(2), x_n_space(3)] {
            let s = serde_json::to_string(&p).unwrap();
            let q: FinitePoset = serde_json::from_str(&s).unwrap();
            assert_eq!(p, q);
        }
        let v = json!({"points": ["a", "b", "c"], "covers": [[0, 1], [0, 2]]});
        let p = poset_from_json(&v).unwrap();
        assert_eq!(p.root(), Some(0));
        let by_label = json!({"points": ["a", "b", "c"], "covers": [["a", "b"], ["a", 2]]});
        assert_eq!(poset_from_json(&by_label).unwrap(), p);
        assert!(poset_from_json(&json!({"points": ["a"], "covers": [["a", "z"]]})).is_err());
        assert!(poset_from_json(&json!({"points": [0, 1], "covers": [[0, 1], [1, 0]]})).is_err());
        assert!(poset_from_json(&json!({"points": [0], "covers": [[0, 3]]})).is_err());
        assert!(poset_from_json(&json!({"covers": []})).is_err());
    }

    #[test]
    fn algebra_round_trip() {
        let a = HeytingAlgebra::from_upsets(&x_n_space(2)).unwrap();
        let b: HeytingAlgebra = serde_json::from_value(algebra_to_json(&a)).unwrap();
        assert_eq!(a, b);
        let r = rn_downset(RNElement::A(2)).unwrap();
        let b: HeytingAlgebra = serde_json::from_value(algebra_to_json(&r)).unwrap();
        assert!(algebra_iso(&r, &b).is_some());
        assert_eq!(b.labels(), r.labels());
        let order_only = json!({"leq": HeytingAlgebra::chain(3).leq_matrix()});
        assert_eq!(algebra_from_json(&order_only).unwrap().len(), 3);
        let mut broken = algebra_to_json(&HeytingAlgebra::chain(3).without_provenance());
        broken["imp"][2][1] = json!(2);
        assert!(algebra_from_json(&broken).is_err());
    }

    #[test]
    fn partitions_and_maps() {
        let c2 = FinitePoset::chain(2);
        assert!(partition_from_json(&json!({"classes": [[0, 1]]}), &c2).is_ok());
        assert!(partition_from_json(&json!({"classes": [[0]]}), &c2).is_err());
        let c3 = FinitePoset::chain(3);
        assert!(partition_from_json(&json!({"classes": [[0, 2], [1]]}), &c3).is_err());
        let m: EsakiaMap = serde_json::from_value(json!({"map": [1, 0]})).unwrap();
        assert_eq!(m.map, vec![1, 0]);
    }

    #[test]
    fn dot_output() {
        let p = FinitePoset::chain(2);
        let r = CorrectPartition::new(2, vec![vec![0, 1]]).unwrap();
        let d = poset_dot(&p, Some(&r));
        assert!(d.starts_with("digraph") && d.contains("p0 -> p1") && d.contains("fillcolor"));
        assert!(algebra_dot(&HeytingAlgebra::chain(3)).contains("p1 -> p2"));
        assert!(morphism_dot(&p, &p, &[1, 1]).contains("s0 -> t1 [style=dashed"));
    }
}
