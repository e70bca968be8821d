//! JSON forms of the domain types. Integer coefficients are emitted as JSON
//! integers of arbitrary size and accepted back as integers or strings.

use crate::asymptotics::AsymptoticProfile;
use crate::birational::{BiRational, BivarPoly, Factor};
use crate::chain::ChainSpec;
use crate::error::{Error, Result};
use crate::groebner::GridPolynomial;
use crate::hilbert::UniRational;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::univar::IntPoly;
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};
use std::str::FromStr;

fn bigint_value(x: &BigInt) -> Value {
    Value::Number(Number::from_string_unchecked(x.to_string()))
}

fn bigint_from(v: &Value) -> Result<BigInt> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => return Err(Error::Parse(format!("expected integer, got {other}"))),
    };
    BigInt::from_str(&text).map_err(|_| Error::Parse(format!("bad integer `{text}`")))
}

fn u32_from(v: &Value, what: &str) -> Result<u32> {
    v.as_u64()
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| Error::Parse(format!("bad {what}: {v}")))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::Parse(format!("missing field `{key}`")))
}

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::Parse(format!("{what} must be a JSON object")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("{what} must be a JSON array")))
}

fn intpoly_value(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(bigint_value).collect())
}

fn intpoly_from(v: &Value, what: &str) -> Result<IntPoly> {
    let arr = as_array(v, what)?;
    Ok(IntPoly::new(
        arr.iter().map(bigint_from).collect::<Result<Vec<_>>>()?,
    ))
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> Value {
    json!({
        "c": ideal.rows(),
        "width": ideal.width(),
        "gens": ideal.to_text_gens(),
    })
}

pub fn ideal_from_json(v: &Value) -> Result<MonomialIdeal> {
    let obj = as_object(v, "ideal")?;
    let c = u32_from(field(obj, "c")?, "c")?;
    let width = u32_from(field(obj, "width")?, "width")?;
    let gens = as_array(field(obj, "gens")?, "gens")?
        .iter()
        .map(|g| {
            g.as_str()
                .ok_or_else(|| Error::Parse("generators must be strings".into()))
                .and_then(|s| Monomial::parse(s, c))
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(gens, c, width)
}

pub fn chain_to_json(chain: &ChainSpec) -> Value {
    let mut obj = Map::new();
    obj.insert("c".into(), json!(chain.rows()));
    obj.insert("i".into(), json!(chain.monoid_prefix()));
    obj.insert("r".into(), json!(chain.seed_width()));
    obj.insert("seed".into(), ideal_to_json(chain.seed()));
    if let Some(pre) = chain.prefix() {
        obj.insert(
            "prefix".into(),
            Value::Array(pre.iter().map(ideal_to_json).collect()),
        );
    }
    Value::Object(obj)
}

pub fn chain_from_json(v: &Value) -> Result<ChainSpec> {
    let obj = as_object(v, "chain")?;
    let c = u32_from(field(obj, "c")?, "c")?;
    let i = u32_from(field(obj, "i")?, "i")?;
    let r = u32_from(field(obj, "r")?, "r")?;
    let seed = ideal_from_json(field(obj, "seed")?)?;
    let prefix = match obj.get("prefix") {
        None | Some(Value::Null) => None,
        Some(p) => Some(
            as_array(p, "prefix")?
                .iter()
                .map(ideal_from_json)
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    ChainSpec::new(c, i, r, seed, prefix)
}

pub fn unirational_to_json(h: &UniRational) -> Value {
    json!({
        "num": intpoly_value(h.numerator()),
        "pole": h.pole_order(),
    })
}

pub fn unirational_from_json(v: &Value) -> Result<UniRational> {
    let obj = as_object(v, "series")?;
    let num = intpoly_from(field(obj, "num")?, "num")?;
    let pole = u32_from(field(obj, "pole")?, "pole")? as usize;
    Ok(UniRational::new(num, pole))
}

pub fn birational_to_json(h: &BiRational) -> Value {
    let triples: Vec<Value> = h
        .numerator()
        .as_triples()
        .iter()
        .map(|(se, te, c)| Value::Array(vec![json!(se), json!(te), bigint_value(c)]))
        .collect();
    let factors: Vec<Value> = h
        .factors()
        .iter()
        .map(|f| {
            json!({
                "c_j": f.c_j,
                "f": intpoly_value(&f.f),
                "b": f.b,
            })
        })
        .collect();
    json!({
        "num": triples,
        "a": h.pole_order(),
        "factors": factors,
    })
}

pub fn birational_from_json(v: &Value) -> Result<BiRational> {
    let obj = as_object(v, "series")?;
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    for entry in as_array(field(obj, "num")?, "num")? {
        let triple = as_array(entry, "numerator entry")?;
        if triple.len() != 3 {
            return Err(Error::Parse("numerator entries are [s, t, coeff]".into()));
        }
        let se = u32_from(&triple[0], "s exponent")? as usize;
        let te = u32_from(&triple[1], "t exponent")? as usize;
        let c = bigint_from(&triple[2])?;
        if cols.len() <= se {
            cols.resize(se + 1, Vec::new());
        }
        if cols[se].len() <= te {
            cols[se].resize(te + 1, BigInt::from(0));
        }
        cols[se][te] += c;
    }
    let num = BivarPoly::new(cols.into_iter().map(IntPoly::new).collect());
    let a = u32_from(field(obj, "a")?, "a")? as usize;
    let factors = as_array(field(obj, "factors")?, "factors")?
        .iter()
        .map(|fv| {
            let fo = as_object(fv, "factor")?;
            Ok(Factor {
                c_j: u32_from(field(fo, "c_j")?, "c_j")? as usize,
                f: intpoly_from(field(fo, "f")?, "f")?,
                b: u32_from(field(fo, "b")?, "b")? as usize,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    BiRational::new(num, a, factors)
}

pub fn profile_to_json(p: &AsymptoticProfile) -> Value {
    json!({
        "A": p.slope,
        "B": p.offset,
        "M": bigint_value(&p.base),
        "L": p.power,
        "limit": format!("{}/{}", p.limit.numer(), p.limit.denom()),
        "onset": p.onset,
    })
}

pub fn polynomials_to_json(c: u32, width: u32, polys: &[GridPolynomial]) -> Value {
    json!({
        "c": c,
        "width": width,
        "polys": polys.iter().map(|f| f.to_text()).collect::<Vec<_>>(),
    })
}

/// `{ "c", "width", "i", "polys": [text] }`: a polynomial seed for the
/// initial-chain and equivariant basis commands.
pub fn polynomial_seed_from_json(v: &Value) -> Result<(u32, Vec<GridPolynomial>)> {
    let obj = as_object(v, "seed")?;
    let c = u32_from(field(obj, "c")?, "c")?;
    let width = u32_from(field(obj, "width")?, "width")?;
    let i = u32_from(field(obj, "i")?, "i")?;
    let polys = as_array(field(obj, "polys")?, "polys")?
        .iter()
        .map(|p| {
            p.as_str()
                .ok_or_else(|| Error::Parse("polynomials must be strings".into()))
                .and_then(|s| GridPolynomial::parse(s, c, width))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((i, polys))
}
