//! Reading algebras, posets and element lists from the command line.

use std::fs;
use std::io::Read;

use esakia::constructions::{
    algebra_d, b_n_family, d2_partition, d2_tower_labeled, named, r_n_partition, rn_downset, x_n_tower, Named,
    RNElement,
};
use esakia::duality::{dual_space, CorrectPartition};
use esakia::io::{algebra_from_json, partition_from_json, poset_from_json};
use esakia::{Elem, Error, FinitePoset, HeytingAlgebra, Result};
use serde_json::Value;

/// Something `make` can build.
pub enum Built {
    Algebra(HeytingAlgebra),
    Space(FinitePoset, Option<CorrectPartition>),
}

/// Parameters of a construction.
#[derive(Debug, Default, Clone)]
pub struct Recipe {
    pub name: String,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub top: bool,
    pub elem: Option<String>,
}

impl Recipe {
    /// `name[:param...]`, where numeric params fill `n` then `k`, `top` sets the flag and
    /// anything else is an RN element.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut parts = spec.split(':');
        let mut r = Recipe { name: parts.next().unwrap_or_default().to_string(), ..Default::default() };
        for p in parts {
            if let Ok(v) = p.parse::<usize>() {
                if r.n.is_none() {
                    r.n = Some(v);
                } else if r.k.is_none() {
                    r.k = Some(v);
                } else {
                    return Err(Error::invalid(format!("too many numeric parameters in {spec:?}")));
                }
            } else if p == "top" {
                r.top = true;
            } else {
                r.elem = Some(p.to_string());
            }
        }
        Ok(r)
    }

    pub fn build(&self) -> Result<Built> {
        let need = |v: Option<usize>, what: &str| v.ok_or_else(|| Error::invalid(format!("{} needs {what}", self.name)));
        Ok(match self.name.as_str() {
            "xn-tower" => {
                let (n, k) = (need(self.n, "--n")?, need(self.k, "--k")?);
                if n < 2 || k < 1 {
                    return Err(Error::invalid("xn-tower needs n >= 2 and k >= 1"));
                }
                let t = x_n_tower(n, k, self.top);
                let r = r_n_partition(&t)?;
                Built::Space(t.poset, Some(r))
            }
            "d2-tower" => {
                let k = need(self.k.or(self.n), "--k")?;
                if k < 2 {
                    return Err(Error::invalid("d2-tower needs k >= 2"));
                }
                let t = d2_tower_labeled(k, self.top);
                let r = d2_partition(&t)?;
                Built::Space(t.poset, Some(r))
            }
            "rn-downset" => {
                let e: RNElement = self.elem.as_deref().ok_or_else(|| Error::invalid("rn-downset needs --elem"))?.parse()?;
                Built::Algebra(rn_downset(e)?)
            }
            "bn" => Built::Algebra(b_n_family(need(self.n, "--n")?)?),
            "algebra-d" => Built::Algebra(algebra_d()),
            other => match named(other, self.n)? {
                Named::Algebra(a) => Built::Algebra(a),
                Named::Space(p) => Built::Space(p, None),
            },
        })
    }
}

/// The text behind a path, `-` for stdin.
fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::invalid(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Error::invalid(format!("{path}: {e}")))
}

fn read_json(path: &str) -> Result<Value> {
    serde_json::from_str(&read_source(path)?).map_err(|e| Error::invalid(format!("{path}: {e}")))
}

fn is_poset_json(v: &Value) -> bool {
    v.get("points").is_some() && v.get("dual").is_none() && v.get("leq").is_none()
}

/// An algebra from a file or an `@name:params` recipe. A poset file stands for its
/// algebra of upsets.
pub fn load_algebra(src: &str) -> Result<HeytingAlgebra> {
    if let Some(spec) = src.strip_prefix('@') {
        return match Recipe::parse(spec)?.build()? {
            Built::Algebra(a) => Ok(a),
            Built::Space(p, _) => HeytingAlgebra::from_upsets(&p),
        };
    }
    let v = read_json(src)?;
    if is_poset_json(&v) {
        HeytingAlgebra::from_upsets(&poset_from_json(&v)?)
    } else {
        algebra_from_json(&v)
    }
}

/// A poset from a file or recipe, with the partition stored next to it if any. An
/// algebra stands for its dual.
pub fn load_poset(src: &str) -> Result<(FinitePoset, Option<CorrectPartition>)> {
    if let Some(spec) = src.strip_prefix('@') {
        return match Recipe::parse(spec)?.build()? {
            Built::Algebra(a) => Ok((dual_space(&a)?.poset, None)),
            Built::Space(p, r) => Ok((p, r)),
        };
    }
    let v = read_json(src)?;
    if is_poset_json(&v) {
        let p = poset_from_json(&v)?;
        let r = v.get("partition").map(|r| partition_from_json(r, &p)).transpose()?;
        Ok((p, r))
    } else {
        Ok((dual_space(&algebra_from_json(&v)?)?.poset, None))
    }
}

pub fn load_partition(src: &str, x: &FinitePoset) -> Result<CorrectPartition> {
    let v = read_json(src)?;
    partition_from_json(v.get("partition").unwrap_or(&v), x)
}

/// A point map `{"map": [...]}` or a bare array.
pub fn load_map(src: &str) -> Result<Vec<usize>> {
    let v = read_json(src)?;
    serde_json::from_value(v.get("map").cloned().unwrap_or(v)).map_err(|e| Error::invalid(format!("{src}: bad map: {e}")))
}

/// An element named by label or index.
pub fn element(a: &HeytingAlgebra, name: &str) -> Result<Elem> {
    if let Some(e) = a.find_label(name) {
        return Ok(e);
    }
    match name.parse::<usize>() {
        Ok(e) if e < a.len() => Ok(e),
        _ => Err(Error::invalid(format!("no element {name:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recipes() {
        let r = Recipe::parse("xn-tower:2:3:top").unwrap();
        assert_eq!((r.name.as_str(), r.n, r.k, r.top), ("xn-tower", Some(2), Some(3), true));
        assert_eq!(Recipe::parse("rn-downset:a4").unwrap().elem.as_deref(), Some("a4"));
        assert!(Recipe::parse("chain:1:2:3").is_err());
        assert!(matches!(Recipe::parse("xn-tower:2:2").unwrap().build(), Ok(Built::Space(_, Some(_)))));
        assert!(matches!(load_algebra("@chain:4"), Ok(a) if a.len() == 4));
        assert!(load_algebra("@nothing").is_err());
    }
}
