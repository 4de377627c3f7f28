//! JSON encodings of words, subgroups, configurations and reports.
//!
//! Integers are written as decimal strings so that big values survive;
//! on input plain JSON numbers are accepted too. Words are text strings
//! (`"xyX"`) when the rank allows, or `{"letters": [1, 2, -1]}`.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::configs::{
    ConfigError, Configuration, FactorPiece, Realization, SubgroupSpec, Verdict, VerifyReport,
};
use crate::ftfa::{subgroup_basis, FtfaElement, FtfaError, SubgroupBasis};
use crate::mintersect::{Certificate, Intersection};
use crate::words::Word;
use crate::zlattice::{IntMatrix, IntVec, Lattice};

pub const SCHEMA: &str = "ftfa-kit/1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Ftfa(#[from] FtfaError),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

fn shape<T>(msg: impl Into<String>) -> Result<T, JsonError> {
    Err(JsonError::Shape(msg.into()))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, JsonError> {
    v.get(key)
        .ok_or_else(|| JsonError::Shape(format!("missing field {key:?}")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize, JsonError> {
    match v {
        Value::Number(n) => n.as_u64().map(|x| x as usize),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
    .ok_or_else(|| JsonError::Shape(format!("{what} must be a nonnegative integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, JsonError> {
    v.as_array()
        .ok_or_else(|| JsonError::Shape(format!("{what} must be an array")))
}

pub fn int_from_json(v: &Value) -> Result<BigInt, JsonError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| JsonError::Shape(format!("{n} is not an integer"))),
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| JsonError::Shape(format!("{s:?} is not an integer"))),
        _ => shape("integers must be numbers or decimal strings"),
    }
}

pub fn int_to_json(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn vec_from_json(v: &Value, m: usize) -> Result<IntVec, JsonError> {
    let items = as_array(v, "vector")?;
    if items.len() != m {
        return shape(format!("vector has length {}, expected {m}", items.len()));
    }
    items.iter().map(int_from_json).collect()
}

pub fn vec_to_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_to_json).collect())
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    Value::Array(m.rows().map(vec_to_json).collect())
}

pub fn lattice_from_json(v: &Value, m: usize) -> Result<Lattice, JsonError> {
    let rows = as_array(v, "lattice")?
        .iter()
        .map(|r| vec_from_json(r, m))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Lattice::from_generators(rows, m))
}

pub fn word_from_json(v: &Value, n: usize) -> Result<Word, JsonError> {
    match v {
        Value::String(s) => Word::parse(s, n).map_err(|e| JsonError::Shape(e.to_string())),
        Value::Object(_) => {
            let letters = as_array(field(v, "letters")?, "letters")?
                .iter()
                .map(|x| {
                    x.as_i64()
                        .and_then(|l| i32::try_from(l).ok())
                        .ok_or_else(|| JsonError::Shape("letters must be small integers".into()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Word::reduce(&letters, n).map_err(|e| JsonError::Shape(e.to_string()))
        }
        _ => shape("a word is a string or an object with \"letters\""),
    }
}

pub fn word_to_json(w: &Word, n: usize) -> Value {
    if n <= 26 {
        Value::String(w.to_text(n))
    } else {
        json!({ "letters": w.letters() })
    }
}

pub fn element_from_json(v: &Value, n: usize, m: usize) -> Result<FtfaElement, JsonError> {
    let word = match v.get("word") {
        Some(w) => word_from_json(w, n)?,
        None => Word::identity(),
    };
    let vec = match v.get("vec") {
        Some(x) => vec_from_json(x, m)?,
        None => crate::zlattice::zero_vec(m),
    };
    Ok(FtfaElement::new(word, vec))
}

pub fn element_to_json(g: &FtfaElement, n: usize) -> Value {
    json!({ "word": word_to_json(&g.word, n), "vec": vec_to_json(&g.vec) })
}

/// Reads either `{"n","m","generators"}` or a basis `{"n","m","pairs","lattice"}`.
pub fn subgroup_from_json(v: &Value) -> Result<SubgroupBasis, JsonError> {
    let n = as_usize(field(v, "n")?, "n")?;
    let m = as_usize(field(v, "m")?, "m")?;
    if let Some(gens) = v.get("generators") {
        let gens = as_array(gens, "generators")?
            .iter()
            .map(|g| element_from_json(g, n, m))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(subgroup_basis(n, m, &gens)?);
    }
    let pairs = as_array(field(v, "pairs")?, "pairs")?
        .iter()
        .map(|p| element_from_json(p, n, m).map(|g| (g.word, g.vec)))
        .collect::<Result<Vec<_>, _>>()?;
    let lattice = match v.get("lattice") {
        Some(l) => lattice_from_json(l, m)?,
        None => Lattice::trivial(m),
    };
    Ok(SubgroupBasis::from_parts(n, m, pairs, lattice)?)
}

fn basis_body(b: &SubgroupBasis) -> Map<String, Value> {
    let mut map = Map::new();
    map.insert("n".into(), json!(b.n()));
    map.insert("m".into(), json!(b.m()));
    map.insert(
        "pairs".into(),
        Value::Array(
            b.pairs()
                .iter()
                .map(|(u, a)| json!({ "word": word_to_json(u, b.n()), "vec": vec_to_json(a) }))
                .collect(),
        ),
    );
    map.insert("lattice".into(), matrix_to_json(b.lattice().basis()));
    map
}

pub fn basis_to_json(b: &SubgroupBasis) -> Value {
    Value::Object(basis_body(b))
}

pub fn certificate_to_json(c: &Certificate) -> Value {
    json!({
        "r": c.r,
        "lambda": matrix_to_json(c.lambda.basis()),
        "rank": c.rank,
        "rank_deficit": c.rank_deficit,
    })
}

pub fn intersection_to_json(out: &Intersection) -> Value {
    let mut map = Map::new();
    map.insert("fg".into(), json!(out.fg));
    if let Some(b) = &out.basis {
        map.insert("basis".into(), basis_to_json(b));
    }
    if let Some(c) = &out.certificate {
        map.insert("certificate".into(), certificate_to_json(c));
    }
    Value::Object(map)
}

pub fn config_from_json(v: &Value) -> Result<Configuration, JsonError> {
    let k = as_usize(field(v, "k")?, "k")?;
    let support = as_array(field(v, "support")?, "support")?
        .iter()
        .map(|s| {
            as_array(s, "support set")?
                .iter()
                .map(|i| as_usize(i, "index"))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Configuration::new(k, &support)?)
}

pub fn config_to_json(c: &Configuration) -> Value {
    json!({ "k": c.k(), "support": c.support_sets() })
}

fn piece_to_json(p: &FactorPiece) -> Value {
    match p {
        FactorPiece::Finite { letters, basis } => {
            let mut map = basis_body(basis);
            map.insert("type".into(), json!("finite"));
            map.insert("letters".into(), json!(letters));
            Value::Object(map)
        }
        FactorPiece::NormalClosure { letters, closed } => {
            json!({ "type": "normal_closure", "letters": letters, "closed": closed })
        }
        FactorPiece::Ray { modulus, residue } => {
            json!({ "type": "ray", "modulus": modulus, "residue": residue })
        }
    }
}

fn letters_from_json(v: &Value) -> Result<Vec<i64>, JsonError> {
    as_array(v, "letters")?
        .iter()
        .map(|x| {
            x.as_i64()
                .ok_or_else(|| JsonError::Shape("letters must be integers".into()))
        })
        .collect()
}

fn piece_from_json(v: &Value, m: usize) -> Result<FactorPiece, JsonError> {
    let kind = field(v, "type")?.as_str().unwrap_or_default();
    match kind {
        "finite" => {
            let letters = letters_from_json(field(v, "letters")?)?;
            let basis = subgroup_from_json(v)?;
            if basis.n() != letters.len() || basis.m() != m {
                return shape(
                    "finite piece basis must have one symbol per letter and the realization's m",
                );
            }
            Ok(FactorPiece::Finite { letters, basis })
        }
        "normal_closure" => Ok(FactorPiece::NormalClosure {
            letters: letters_from_json(field(v, "letters")?)?,
            closed: letters_from_json(field(v, "closed")?)?,
        }),
        "ray" => {
            let modulus = as_usize(field(v, "modulus")?, "modulus")? as u32;
            let residue = as_usize(field(v, "residue")?, "residue")? as u32;
            if modulus == 0 || residue >= modulus {
                return shape("ray needs 0 ≤ residue < modulus");
            }
            Ok(FactorPiece::Ray { modulus, residue })
        }
        other => shape(format!("unknown piece type {other:?}")),
    }
}

pub fn realization_to_json(r: &Realization) -> Value {
    let subgroups: Vec<Value> = r
        .subgroups
        .iter()
        .map(|s| match s {
            SubgroupSpec::Finite(b) => {
                let mut map = basis_body(b);
                map.insert("kind".into(), json!("finite"));
                Value::Object(map)
            }
            SubgroupSpec::Parametric { m, pieces } => json!({
                "kind": "parametric",
                "n": 2,
                "m": m,
                "pieces": pieces.iter().map(piece_to_json).collect::<Vec<_>>(),
            }),
        })
        .collect();
    json!({ "n": 2, "m": r.m, "subgroups": subgroups })
}

pub fn realization_from_json(v: &Value) -> Result<Realization, JsonError> {
    let m = as_usize(field(v, "m")?, "m")?;
    let subgroups = as_array(field(v, "subgroups")?, "subgroups")?
        .iter()
        .map(|s| match field(s, "kind")?.as_str() {
            Some("finite") => {
                let b = subgroup_from_json(s)?;
                if b.n() != 2 || b.m() != m {
                    return shape("realization subgroups live in F_2 × Z^m");
                }
                Ok(SubgroupSpec::Finite(b))
            }
            Some("parametric") => {
                let pieces = as_array(field(s, "pieces")?, "pieces")?
                    .iter()
                    .map(|p| piece_from_json(p, m))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(SubgroupSpec::Parametric { m, pieces })
            }
            _ => shape("subgroup kind must be \"finite\" or \"parametric\""),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Realization { m, subgroups })
}

fn verdict_evidence(v: &Verdict) -> Value {
    match v {
        Verdict::VerifiedFg { basis } => basis_to_json(basis),
        Verdict::VerifiedNonFg { certificate } => certificate_to_json(certificate),
        Verdict::WitnessedNonFg { witness } => json!({
            "rank": witness.len(),
            "elements": witness.iter().map(|g| element_to_json(g, 2)).collect::<Vec<_>>(),
        }),
        Verdict::WitnessIncomplete { found, wanted } => json!({
            "rank": found.len(),
            "wanted": wanted,
            "elements": found.iter().map(|g| element_to_json(g, 2)).collect::<Vec<_>>(),
        }),
        Verdict::StructuralOnly {
            sampled,
            in_intersection,
        } => {
            json!({ "sampled": sampled, "in_intersection": in_intersection })
        }
        Verdict::Undecided { reason } => json!({ "reason": reason }),
    }
}

pub fn report_to_json(r: &VerifyReport) -> Value {
    let names = [
        "VerifiedFG",
        "VerifiedNonFG",
        "WitnessedNonFG",
        "WitnessIncomplete",
        "StructuralOnly",
        "Undecided",
    ];
    let counts: Map<String, Value> = names
        .iter()
        .map(|&n| (n.to_string(), json!(r.count(n))))
        .collect();
    json!({
        "k": r.k,
        "pass": r.pass,
        "counts": counts,
        "subsets": r.subsets.iter().map(|s| json!({
            "set": s.set,
            "expected": u8::from(s.expected),
            "verdict": s.verdict.name(),
            "consistent": s.consistent,
            "evidence": verdict_evidence(&s.verdict),
        })).collect::<Vec<_>>(),
    })
}

/// Adds the schema tag to a JSON object.
pub fn tagged(v: Value) -> Value {
    match v {
        Value::Object(mut map) => {
            map.insert("schema".into(), json!(SCHEMA));
            Value::Object(map)
        }
        other => json!({ "schema": SCHEMA, "value": other }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subgroup_round_trip() {
        let v = json!({"n": 2, "m": 1, "generators": [{"word": "x", "vec": [1]}, {"word": "y", "vec": ["0"]}]});
        let b = subgroup_from_json(&v).unwrap();
        let back = subgroup_from_json(&basis_to_json(&b)).unwrap();
        assert_eq!(b, back);
    }

    #[test]
    fn big_integers_survive() {
        let v = json!({"n": 2, "m": 1, "pairs": [{"word": {"letters": [1]}, "vec": ["123456789012345678901234567890"]}], "lattice": []});
        let b = subgroup_from_json(&v).unwrap();
        let text = basis_to_json(&b).to_string();
        assert!(text.contains("123456789012345678901234567890"));
    }

    #[test]
    fn config_round_trip() {
        let v = json!({"k": 3, "support": [[1, 2, 3], [2]]});
        let c = config_from_json(&v).unwrap();
        assert_eq!(config_from_json(&config_to_json(&c)).unwrap(), c);
        assert!(config_from_json(&json!({"k": 2, "support": [[3]]})).is_err());
    }

    #[test]
    fn realization_round_trip() {
        let c =
            Configuration::new(4, &[vec![1], vec![2, 3], vec![1, 3, 4], vec![2, 3, 4]]).unwrap();
        let r = crate::configs::realize_ftfa(&c).unwrap();
        let back = realization_from_json(&realization_to_json(&r)).unwrap();
        assert_eq!(back, r);
        let f =
            crate::configs::realize_free(&Configuration::new(3, &[vec![1], vec![1, 2]]).unwrap())
                .unwrap();
        assert_eq!(realization_from_json(&realization_to_json(&f)).unwrap(), f);
    }
}
