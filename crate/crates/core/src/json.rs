//! JSON encodings.
//!
//! Scalars are written as strings `"p/q"` on the exact path and as plain
//! numbers on the float path. A document must not mix the two; with
//! `force_exact`, plain numbers are read exactly from their decimal text.
//!
//! ```text
//! hom    {"gamma1": [a1, b1, c1], "gamma2": [a2, b2, c2]}
//! pair   {"rho": hom, "rho_prime": hom}
//! param  {"S": [[s0, s1], [s2, s3]], "t": [t0, t1, t2, t3], "c": [c1, c2, c1p, c2p]}
//! ```

use serde_json::{json, Map, Value};

use crate::error::{DeformError, Result};
use crate::heis::HeisPoint;
use crate::homs::{GammaWord, HeisHom};
use crate::linalg::Mat2;
use crate::oracle::ProbeReport;
use crate::parametrize::{Canonicalized, ParamPoint, UVPair};
use crate::properness::{Component, Geometry, HomPair, ProperVerdict};
use crate::scalar::{parse_rational, Rational, Scalar, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Float,
}

/// Scalars that can be read from a JSON leaf.
pub trait JsonScalar: Scalar {
    fn from_json(v: &Value, force_exact: bool) -> Result<Self>;
}

impl JsonScalar for Rational {
    fn from_json(v: &Value, force_exact: bool) -> Result<Self> {
        match v {
            Value::String(s) => {
                parse_rational(s).ok_or_else(|| input(format!("not a rational literal: {s:?}")))
            }
            Value::Number(n) if force_exact => parse_rational(&n.to_string())
                .ok_or_else(|| input(format!("number {n} has no exact decimal form"))),
            other => Err(input(format!(
                "expected a rational string \"p/q\", found {other}"
            ))),
        }
    }
}

impl JsonScalar for f64 {
    fn from_json(v: &Value, _force_exact: bool) -> Result<Self> {
        match v {
            Value::Number(n) => n
                .as_f64()
                .filter(|x| x.is_finite())
                .ok_or_else(|| input(format!("not a finite number: {n}"))),
            other => Err(input(format!("expected a number, found {other}"))),
        }
    }
}

fn input(msg: impl Into<String>) -> DeformError {
    DeformError::Input(msg.into())
}

/// Decides exact versus float from the scalar leaves of `values`.
pub fn detect_mode<'a>(
    values: impl IntoIterator<Item = &'a Value>,
    force_exact: bool,
) -> Result<Mode> {
    let mut leaves = Vec::new();
    for v in values {
        collect_leaves(v, &mut leaves);
    }
    let strings = leaves.iter().filter(|v| v.is_string()).count();
    let numbers = leaves.iter().filter(|v| v.is_number()).count();
    match (strings, numbers) {
        (s, n) if s > 0 && n > 0 && !force_exact => Err(input(
            "mixed exact (string) and float (number) scalars in one document",
        )),
        (s, _) if s > 0 || force_exact => Ok(Mode::Exact),
        _ => Ok(Mode::Float),
    }
}

fn collect_leaves<'a>(v: &'a Value, out: &mut Vec<&'a Value>) {
    match v {
        Value::Array(items) => items.iter().for_each(|x| collect_leaves(x, out)),
        Value::Object(map) => map.values().for_each(|x| collect_leaves(x, out)),
        Value::String(_) | Value::Number(_) => out.push(v),
        _ => {}
    }
}

pub fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| input(format!("missing field {key:?}")))
}

fn array<'a>(v: &'a Value, len: usize, what: &str) -> Result<&'a [Value]> {
    match v.as_array() {
        Some(items) if items.len() == len => Ok(items),
        _ => Err(input(format!("{what}: expected an array of {len} entries"))),
    }
}

pub fn parse_scalars<S: JsonScalar, const N: usize>(
    v: &Value,
    force_exact: bool,
    what: &str,
) -> Result<[S; N]> {
    let items = array(v, N, what)?;
    let parsed = items
        .iter()
        .map(|x| S::from_json(x, force_exact))
        .collect::<Result<Vec<_>>>()?;
    parsed
        .try_into()
        .map_err(|_| input(format!("{what}: wrong length")))
}

pub fn parse_point<S: JsonScalar>(v: &Value, force_exact: bool) -> Result<HeisPoint<S>> {
    let [a, b, c] = parse_scalars(v, force_exact, "point")?;
    Ok(HeisPoint::new(a, b, c))
}

pub fn parse_hom<S: JsonScalar>(v: &Value, force_exact: bool) -> Result<HeisHom<S>> {
    Ok(HeisHom::new(
        parse_point(field(v, "gamma1")?, force_exact)?,
        parse_point(field(v, "gamma2")?, force_exact)?,
    ))
}

pub fn parse_pair<S: JsonScalar>(v: &Value, force_exact: bool) -> Result<HomPair<S>> {
    Ok(HomPair::new(
        parse_hom(field(v, "rho")?, force_exact)?,
        parse_hom(field(v, "rho_prime")?, force_exact)?,
    ))
}

pub fn pair_mode(v: &Value, force_exact: bool) -> Result<Mode> {
    detect_mode([field(v, "rho")?, field(v, "rho_prime")?], force_exact)
}

pub fn parse_mat2<S: JsonScalar>(v: &Value, force_exact: bool) -> Result<Mat2<S>> {
    let rows = array(v, 2, "2x2 matrix")?;
    let [m00, m01] = parse_scalars(&rows[0], force_exact, "matrix row")?;
    let [m10, m11] = parse_scalars(&rows[1], force_exact, "matrix row")?;
    Ok(Mat2::new(m00, m01, m10, m11))
}

pub fn parse_param<S: JsonScalar>(v: &Value, force_exact: bool) -> Result<ParamPoint<S>> {
    Ok(ParamPoint::new(
        parse_mat2(field(v, "S")?, force_exact)?,
        parse_scalars(field(v, "t")?, force_exact, "t")?,
        parse_scalars(field(v, "c")?, force_exact, "c")?,
    ))
}

pub fn param_mode(v: &Value, force_exact: bool) -> Result<Mode> {
    detect_mode(
        [field(v, "S")?, field(v, "t")?, field(v, "c")?],
        force_exact,
    )
}

pub fn scalars_json<S: Scalar>(xs: &[S]) -> Value {
    Value::Array(xs.iter().map(Scalar::to_json).collect())
}

pub fn point_json<S: Scalar>(p: &HeisPoint<S>) -> Value {
    scalars_json(&p.to_array())
}

pub fn mat2_json<S: Scalar>(m: &Mat2<S>) -> Value {
    json!([scalars_json(&m.0[0]), scalars_json(&m.0[1])])
}

pub fn hom_json<S: Scalar>(h: &HeisHom<S>) -> Value {
    json!({"gamma1": point_json(&h.g1), "gamma2": point_json(&h.g2)})
}

pub fn pair_json<S: Scalar>(p: &HomPair<S>) -> Value {
    json!({"rho": hom_json(p.rho()), "rho_prime": hom_json(p.rho_prime())})
}

pub fn param_json<S: Scalar>(p: &ParamPoint<S>) -> Value {
    json!({"S": mat2_json(&p.s), "t": scalars_json(&p.t), "c": scalars_json(&p.c)})
}

pub fn uv_json<S: Scalar>(uv: &UVPair<S>) -> Value {
    json!({"U": mat2_json(&uv.u), "V": mat2_json(&uv.v)})
}

pub fn word_json(w: &GammaWord) -> Value {
    json!(w.to_array())
}

pub fn component_json(c: &Component) -> Value {
    match c {
        Component::Signs { torus, fiber } => json!([torus.as_i8(), fiber.as_i8()]),
        Component::Boundary => json!("boundary"),
    }
}

pub fn verdict_json<S: Scalar>(v: &ProperVerdict<S>) -> Value {
    json!({
        "exact": S::EXACT,
        "cond_a": v.cond_a,
        "cond_b": v.cond_b,
        "proper": v.proper,
        // cocompactness comes with the criterion, it is not computed separately
        "cocompact": v.proper,
        "undecided": v.undecided,
        "torus_matrix": mat2_json(&v.torus_matrix),
        "torus_det": v.torus_det.to_json(),
        "fiber_value": v.fiber_value.to_json(),
        "component": component_json(&v.component),
        "rho_injective": v.rho_injective,
        "rho_prime_injective": v.rho_prime_injective,
    })
}

pub fn geometry_json<S: Scalar>(g: &Geometry<S>) -> Value {
    json!({
        "torus_matrix": mat2_json(&g.torus_matrix),
        "fiber_length": g.fiber_length.to_json(),
        "torus_orientation": sign_json(g.torus_orientation),
        "fiber_orientation": sign_json(g.fiber_orientation),
    })
}

fn sign_json(s: Sign) -> Value {
    json!(s.as_i8())
}

pub fn canonical_json<S: Scalar>(c: &Canonicalized<S>) -> Value {
    let mut t = vec![c.coords.t0.clone()];
    t.extend(c.coords.t.iter().cloned());
    json!({
        "S": mat2_json(&c.coords.s),
        "t": scalars_json(&t),
        "representative": pair_json(&c.representative),
        "h1": point_json(&c.h1),
        "h2": point_json(&c.h2),
    })
}

pub fn probe_json<S: Scalar>(r: &ProbeReport<S>) -> Value {
    let mut map = Map::new();
    map.insert("R".into(), r.radius.to_json());
    map.insert("contact".into(), json!(r.contact.as_str()));
    map.insert("N".into(), json!(r.n_list));
    map.insert("counts".into(), json!(r.counts));
    map.insert("verdict".into(), json!(r.verdict.as_str()));
    map.insert(
        "witnesses".into(),
        Value::Array(r.witnesses.iter().map(word_json).collect()),
    );
    Value::Object(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn mode_detection() {
        let exact = json!({"rho": {"gamma1": ["1", "0", "0"]}, "rho_prime": {}});
        assert_eq!(pair_mode(&exact, false).unwrap(), Mode::Exact);
        let float = json!({"rho": {"gamma1": [1, 0.5, 0]}, "rho_prime": {}});
        assert_eq!(pair_mode(&float, false).unwrap(), Mode::Float);
        assert_eq!(pair_mode(&float, true).unwrap(), Mode::Exact);
        let mixed = json!({"rho": {"gamma1": ["1", 0.5, 0]}, "rho_prime": {}});
        assert!(pair_mode(&mixed, false).is_err());
    }

    #[test]
    fn parses_example_pair() {
        let v = json!({
            "rho": {"gamma1": ["2", "1/2", "0"], "gamma2": ["1", "2", "0"]},
            "rho_prime": {"gamma1": ["1", "1/2", "0"], "gamma2": ["0", "1", "0"]}
        });
        let p: HomPair<Rational> = parse_pair(&v, false).unwrap();
        assert_eq!(p.fiber_value(), Rational::ratio(5, 2));
        assert_eq!(pair_json(&p), v);
        let forced: HomPair<Rational> = parse_pair(
            &json!({"rho": {"gamma1": [2, 0.5, 0], "gamma2": [1, 2, 0]},
                               "rho_prime": {"gamma1": [1, 0.5, 0], "gamma2": [0, 1, 0]}}),
            true,
        )
        .unwrap();
        assert_eq!(forced, p);
    }

    #[test]
    fn rejects_malformed_documents() {
        assert!(parse_pair::<Rational>(&json!({"rho": {}}), false).is_err());
        let short = json!({"rho": {"gamma1": ["1"], "gamma2": ["0", "1", "0"]},
                           "rho_prime": {"gamma1": ["0", "0", "0"], "gamma2": ["0", "0", "0"]}});
        assert!(parse_pair::<Rational>(&short, false).is_err());
        assert!(Rational::from_json(&json!(0.5), false).is_err());
        assert!(f64::from_json(&json!("1/2"), false).is_err());
    }

    proptest! {
        #[test]
        fn param_json_round_trips(vals in proptest::collection::vec((-50i64..50, 1i64..9), 12)) {
            let q: Vec<Rational> = vals.iter().map(|&(p, d)| Rational::ratio(p, d)).collect();
            let p = ParamPoint::new(
                Mat2::new(q[0].clone(), q[1].clone(), q[2].clone(), q[3].clone()),
                [q[4].clone(), q[5].clone(), q[6].clone(), q[7].clone()],
                [q[8].clone(), q[9].clone(), q[10].clone(), q[11].clone()],
            );
            let back: ParamPoint<Rational> = parse_param(&param_json(&p), false).unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn float_pair_json_round_trips(xs in proptest::collection::vec(-1e6f64..1e6, 12)) {
            let pt = |i: usize| HeisPoint::new(xs[i], xs[i + 1], xs[i + 2]);
            let p = HomPair::new(HeisHom::new(pt(0), pt(3)), HeisHom::new(pt(6), pt(9)));
            let back: HomPair<f64> = parse_pair(&pair_json(&p), false).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
