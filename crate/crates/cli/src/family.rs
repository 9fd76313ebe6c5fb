//! One-parameter families of pairs whose generator images depend affinely
//! on a parameter `c`, evaluated exactly at evenly spaced steps.
//!
//! Input is either `{"preset": "example9"}` or a pair document whose scalar
//! leaves may be replaced by `{"const": x, "coef": y}` (meaning `x + y·c`).
//! Both forms accept optional `"range": [lo, hi]` and `"steps": k`.

use heis_deform::json::{self, JsonScalar, Mode};
use heis_deform::{Component, HeisHom, HeisPoint, HomPair, Mat2, Rational, Scalar, Tolerance};
use serde_json::{json, Value};

use crate::{text, Cli, CliError, Outcome, EXIT_OK};

const DEFAULT_STEPS: usize = 5;

/// `constant + coef·c`
#[derive(Debug, Clone, PartialEq)]
pub struct Affine<S> {
    pub constant: S,
    pub coef: S,
}

impl<S: Scalar> Affine<S> {
    pub fn fixed(constant: S) -> Self {
        Self {
            constant,
            coef: S::zero(),
        }
    }

    pub fn linear(constant: S, coef: S) -> Self {
        Self { constant, coef }
    }

    fn at(&self, c: &S) -> S {
        self.constant.clone() + &(self.coef.clone() * c)
    }
}

/// Generator images as `[[γ1 entries], [γ2 entries]]`.
pub type AffineHom<S> = [[Affine<S>; 3]; 2];

#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec<S> {
    pub rho: AffineHom<S>,
    pub rho_prime: AffineHom<S>,
    pub range: (S, S),
    pub steps: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilyRow<S> {
    pub parameter: S,
    pub pair: HomPair<S>,
    pub proper: bool,
    pub undecided: bool,
    pub fiber_length: S,
    pub torus_matrix: Mat2<S>,
    pub component: Component,
}

impl<S: Scalar> FamilySpec<S> {
    /// The family `ρ(γ1) = [2, c, 0]`, `ρ(γ2) = [1, 2, 0]`,
    /// `ρ'(γ1) = [1, c, 0]`, `ρ'(γ2) = [0, 1, 0]` for `c ∈ [0, 1]`.
    pub fn shrinking_fiber() -> Self {
        let k = |v: i64| Affine::fixed(S::from_i64(v));
        let c = || Affine::linear(S::zero(), S::one());
        Self {
            rho: [[k(2), c(), k(0)], [k(1), k(2), k(0)]],
            rho_prime: [[k(1), c(), k(0)], [k(0), k(1), k(0)]],
            range: (S::zero(), S::one()),
            steps: DEFAULT_STEPS,
        }
    }

    pub fn parameters(&self) -> Vec<S> {
        let (lo, hi) = &self.range;
        if self.steps <= 1 {
            return vec![lo.clone()];
        }
        let last = self.steps as i64 - 1;
        (0..=last)
            .map(|i| lo.clone() + &((hi.clone() - lo) * &S::ratio(i, last)))
            .collect()
    }

    pub fn pair_at(&self, c: &S) -> HomPair<S> {
        let hom = |h: &AffineHom<S>| {
            let point = |g: &[Affine<S>; 3]| HeisPoint::new(g[0].at(c), g[1].at(c), g[2].at(c));
            HeisHom::new(point(&h[0]), point(&h[1]))
        };
        HomPair::new(hom(&self.rho), hom(&self.rho_prime))
    }

    pub fn evaluate(&self, tol: Tolerance) -> Vec<FamilyRow<S>> {
        self.parameters()
            .into_iter()
            .map(|c| {
                let pair = self.pair_at(&c);
                let v = pair.is_proper(tol);
                FamilyRow {
                    parameter: c,
                    proper: v.proper,
                    undecided: v.undecided,
                    fiber_length: v.fiber_value.abs(),
                    torus_matrix: v.torus_matrix,
                    component: v.component,
                    pair,
                }
            })
            .collect()
    }
}

pub(crate) fn run(cli: &Cli, doc: &Value, tol: Tolerance) -> Result<Outcome, CliError> {
    let leaves: Vec<&Value> = ["rho", "rho_prime", "range"]
        .iter()
        .filter_map(|k| doc.get(*k))
        .collect();
    // a bare preset has no scalars to infer from and runs exactly
    let mode = if leaves.is_empty() {
        Mode::Exact
    } else {
        json::detect_mode(leaves, cli.exact)?
    };
    match mode {
        Mode::Exact => run_as::<Rational>(cli, doc, tol),
        Mode::Float => run_as::<f64>(cli, doc, tol),
    }
}

fn run_as<S: JsonScalar>(cli: &Cli, doc: &Value, tol: Tolerance) -> Result<Outcome, CliError> {
    let spec = parse::<S>(doc, cli.exact)?;
    let rows = spec.evaluate(tol);
    let out = Value::Array(rows.iter().map(row_json).collect());
    let plot = rows
        .iter()
        .map(|r| (r.parameter.to_f64(), r.fiber_length.to_f64()))
        .collect();
    Ok(Outcome {
        json: out,
        text: text::family(&rows),
        exit: EXIT_OK,
        plot: Some(plot),
    })
}

pub fn parse<S: JsonScalar>(doc: &Value, exact: bool) -> Result<FamilySpec<S>, CliError> {
    let bad = |msg: String| CliError::Parse(msg);
    let obj = doc
        .as_object()
        .ok_or_else(|| bad("family input must be a JSON object".into()))?;
    for key in obj.keys() {
        if !["preset", "rho", "rho_prime", "range", "steps"].contains(&key.as_str()) {
            return Err(bad(format!("unknown family field {key:?}")));
        }
    }
    let mut spec = match obj.get("preset") {
        Some(Value::String(name)) if name == "example9" => {
            if obj.contains_key("rho") || obj.contains_key("rho_prime") {
                return Err(bad("a preset family takes no generator images".into()));
            }
            FamilySpec::shrinking_fiber()
        }
        Some(other) => return Err(bad(format!("unknown preset {other}"))),
        None => FamilySpec {
            rho: affine_hom(json::field(doc, "rho")?, exact)?,
            rho_prime: affine_hom(json::field(doc, "rho_prime")?, exact)?,
            range: (S::zero(), S::one()),
            steps: DEFAULT_STEPS,
        },
    };
    if let Some(range) = obj.get("range") {
        let [lo, hi] = json::parse_scalars::<S, 2>(range, exact, "range")?;
        spec.range = (lo, hi);
    }
    if let Some(steps) = obj.get("steps") {
        spec.steps = steps
            .as_u64()
            .filter(|&k| (1..=100_000).contains(&k))
            .ok_or_else(|| {
                bad(format!(
                    "steps must be an integer in 1..=100000, got {steps}"
                ))
            })? as usize;
    }
    Ok(spec)
}

fn affine_hom<S: JsonScalar>(v: &Value, exact: bool) -> Result<AffineHom<S>, CliError> {
    let image = |key: &str| -> Result<[Affine<S>; 3], CliError> {
        let entries = json::field(v, key)?
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| CliError::Parse(format!("{key}: expected an array of 3 entries")))?;
        let parsed = entries
            .iter()
            .map(|e| affine(e, exact))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(parsed
            .try_into()
            .unwrap_or_else(|_| unreachable!("length checked above")))
    };
    Ok([image("gamma1")?, image("gamma2")?])
}

fn affine<S: JsonScalar>(v: &Value, exact: bool) -> Result<Affine<S>, CliError> {
    let Some(obj) = v.as_object() else {
        return Ok(Affine::fixed(S::from_json(v, exact)?));
    };
    if let Some(key) = obj.keys().find(|k| *k != "const" && *k != "coef") {
        return Err(CliError::Parse(format!(
            "entry {v}: only affine dependence {{\"const\", \"coef\"}} on the parameter is supported (found {key:?})"
        )));
    }
    let read = |key: &str| obj.get(key).map(|x| S::from_json(x, exact)).transpose();
    Ok(Affine::linear(
        read("const")?.unwrap_or_else(S::zero),
        read("coef")?.unwrap_or_else(S::zero),
    ))
}

fn row_json<S: Scalar>(r: &FamilyRow<S>) -> Value {
    json!({
        "parameter": r.parameter.to_json(),
        "proper": r.proper,
        "undecided": r.undecided,
        "fiber_length": r.fiber_length.to_json(),
        "torus_matrix": json::mat2_json(&r.torus_matrix),
        "component": json::component_json(&r.component),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::ratio(p, d)
    }

    #[test]
    fn preset_fiber_runs_from_three_to_two() {
        let spec = FamilySpec::<Rational> {
            steps: 3,
            ..FamilySpec::shrinking_fiber()
        };
        let rows = spec.evaluate(Tolerance::DEFAULT);
        let lengths: Vec<_> = rows.iter().map(|r| r.fiber_length.clone()).collect();
        assert_eq!(lengths, vec![q(3, 1), q(5, 2), q(2, 1)]);
        assert!(rows
            .iter()
            .all(|r| r.proper && r.torus_matrix == Mat2::from_ints(1, 1, 0, 1)));
    }

    #[test]
    fn constant_family_repeats_its_row() {
        let doc = json!({
            "rho": {"gamma1": ["1", "0", "0"], "gamma2": ["0", "1", "0"]},
            "rho_prime": {"gamma1": ["0", "0", "0"], "gamma2": ["0", "0", "0"]},
            "steps": 4
        });
        let rows = parse::<Rational>(&doc, false)
            .unwrap()
            .evaluate(Tolerance::DEFAULT);
        assert_eq!(rows.len(), 4);
        assert!(rows
            .windows(2)
            .all(|w| w[0].pair == w[1].pair && w[0].fiber_length == w[1].fiber_length));
    }

    #[test]
    fn scaling_a_prime_crosses_the_fiber_wall() {
        // A = 2·I, A' = c·(1 1; 0 1): det A − det A' = 4 − c², zero at c = 2
        let doc = json!({
            "rho": {"gamma1": ["2", "0", "0"], "gamma2": ["0", "2", "0"]},
            "rho_prime": {
                "gamma1": [{"coef": "1"}, "0", "0"],
                "gamma2": [{"coef": "1"}, {"coef": "1"}, "0"]
            },
            "range": ["1", "3"],
            "steps": 5
        });
        let rows = parse::<Rational>(&doc, false)
            .unwrap()
            .evaluate(Tolerance::DEFAULT);
        let proper: Vec<_> = rows.iter().map(|r| r.proper).collect();
        assert_eq!(proper, vec![true, true, false, true, true]);
        assert_eq!(rows[2].parameter, q(2, 1));
        assert_eq!(rows[2].component, Component::Boundary);
        assert_ne!(rows[1].component, rows[3].component);
    }

    #[test]
    fn rejects_non_affine_entries() {
        let doc = json!({
            "rho": {"gamma1": [{"const": "1", "square": "1"}, "0", "0"], "gamma2": ["0", "1", "0"]},
            "rho_prime": {"gamma1": ["0", "0", "0"], "gamma2": ["0", "0", "0"]}
        });
        assert!(matches!(
            parse::<Rational>(&doc, false),
            Err(CliError::Parse(_))
        ));
        assert!(parse::<Rational>(&json!({"preset": "unknown"}), false).is_err());
    }
}
