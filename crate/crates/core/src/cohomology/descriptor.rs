//! JSON descriptors for cochains.
//!
//! `{"table": [[["0", "1/2"], …], …]}` lists all values, nested once per
//! argument, with elements in enumeration order. `{"product": [{"kind":
//! "phi_ij", "i": 1, "j": 2, "power": 2}, …]}` is a product of generators
//! with 1-based indices.

use serde::Deserialize;
use serde_json::Value;

use crate::abelian::{CircleValue, FinAbGroup};
use crate::error::{Error, Result};

use super::classify::H3Class;
use super::cochain::Cochain;
use super::generators::Generator;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Factor {
    kind: String,
    i: usize,
    j: Option<usize>,
    k: Option<usize>,
    #[serde(default = "one")]
    power: i64,
}

fn one() -> i64 {
    1
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
enum CocycleJson {
    #[serde(rename = "table")]
    Table(Value),
    #[serde(rename = "product")]
    Product(Vec<Factor>),
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse { line: e.line(), column: e.column(), message: e.to_string() }
}

fn generator_of(f: &Factor) -> Result<Generator> {
    let z = |x: usize| {
        x.checked_sub(1)
            .ok_or_else(|| Error::BadIndex(format!("indices are 1-based, got 0 in {}", f.kind)))
    };
    let need = |x: Option<usize>, name: &str| {
        x.ok_or_else(|| Error::Invalid(format!("{} needs an index {name}", f.kind)))
    };
    match f.kind.as_str() {
        "phi_i" => Ok(Generator::Single(z(f.i)?)),
        "phi_ij" => Ok(Generator::Pair(z(f.i)?, z(need(f.j, "j")?)?)),
        "phi_ijk" => Ok(Generator::Triple(z(f.i)?, z(need(f.j, "j")?)?, z(need(f.k, "k")?)?)),
        other => Err(Error::Invalid(format!("unknown generator kind {other:?}"))),
    }
}

fn flatten(v: &Value, depth: usize, width: usize, out: &mut Vec<CircleValue>) -> Result<()> {
    if depth == 0 {
        let x = match v {
            Value::String(s) => s.parse::<CircleValue>()?,
            Value::Number(n) if n.is_i64() => CircleValue::new(n.as_i64().unwrap(), 1),
            _ => return Err(Error::Invalid(format!("table entry {v} is not a \"p/q\" string"))),
        };
        out.push(x);
        return Ok(());
    }
    match v {
        Value::Array(items) if items.len() == width => {
            for it in items {
                flatten(it, depth - 1, width, out)?;
            }
            Ok(())
        }
        _ => Err(Error::Invalid(format!("every table level must be a list of {width} entries"))),
    }
}

fn depth_of(v: &Value) -> usize {
    match v {
        Value::Array(items) => 1 + items.first().map_or(0, depth_of),
        _ => 0,
    }
}

/// Parses a cocycle descriptor for the given group.
pub fn parse_cocycle(group: &FinAbGroup, text: &str) -> Result<Cochain> {
    match serde_json::from_str::<CocycleJson>(text).map_err(parse_err)? {
        CocycleJson::Table(v) => {
            let degree = depth_of(&v);
            let mut values = Vec::new();
            flatten(&v, degree, group.order(), &mut values)?;
            Cochain::from_table(group, degree, values)
        }
        CocycleJson::Product(factors) => {
            let exps = factors
                .iter()
                .map(|f| Ok((generator_of(f)?, f.power)))
                .collect::<Result<Vec<_>>>()?;
            Ok(H3Class::from_exponents(group, exps)?.representative())
        }
    }
}

/// Table descriptor of a cochain, nested once per argument.
pub fn cochain_to_json(c: &Cochain) -> Value {
    let g = c.group();
    let order = g.order();
    let mut idx = vec![0usize; c.degree()];
    fn build(c: &Cochain, idx: &mut Vec<usize>, slot: usize, order: usize) -> Value {
        if slot == idx.len() {
            return Value::String(c.eval_indices(idx).to_string());
        }
        Value::Array(
            (0..order)
                .map(|i| {
                    idx[slot] = i;
                    build(c, idx, slot + 1, order)
                })
                .collect(),
        )
    }
    serde_json::json!({ "table": build(c, &mut idx, 0, order) })
}
