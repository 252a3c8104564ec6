use serde::Deserialize;

use crate::error::{Error, Result};
use crate::linalg::{Activation, DenseMatrix, DEFAULT_LEAKY_SLOPE};
use crate::uncertain::{Consequent, MembershipFunction, Rule, RuleLayer, RuleSet};

#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum MembershipDoc {
    One,
    Triangular { a: f64, b: f64, c: f64 },
    Trapezoid { a: f64, b: f64, c: f64, d: f64 },
    Gaussian { mean: f64, sigma: f64 },
}

impl From<MembershipDoc> for MembershipFunction {
    fn from(m: MembershipDoc) -> Self {
        match m {
            MembershipDoc::One => MembershipFunction::One,
            MembershipDoc::Triangular { a, b, c } => MembershipFunction::Triangular { a, b, c },
            MembershipDoc::Trapezoid { a, b, c, d } => MembershipFunction::Trapezoid { a, b, c, d },
            MembershipDoc::Gaussian { mean, sigma } => MembershipFunction::Gaussian { mean, sigma },
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RuleDoc {
    vertex: MembershipDoc,
    neighbor: MembershipDoc,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConsequentDoc {
    w: Vec<Vec<f64>>,
    u: Vec<Vec<f64>>,
    b: Vec<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LayerDoc {
    consequents: Vec<ConsequentDoc>,
    #[serde(default = "default_activation")]
    activation: String,
    #[serde(default)]
    slope: Option<f64>,
    #[serde(default)]
    residual: bool,
}

fn default_activation() -> String {
    "relu".into()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelDoc {
    rules: Vec<RuleDoc>,
    layers: Vec<LayerDoc>,
}

pub(crate) fn activation(name: &str, slope: Option<f64>) -> Result<Activation> {
    match name {
        "identity" => Ok(Activation::Identity),
        "relu" => Ok(Activation::Relu),
        "leaky_relu" | "leaky-relu" => Ok(Activation::LeakyRelu(slope.unwrap_or(DEFAULT_LEAKY_SLOPE))),
        other => Err(Error::InvalidArgument(format!("unknown activation {other:?}"))),
    }
}

fn matrix(rows: &[Vec<f64>]) -> Result<DenseMatrix> {
    DenseMatrix::from_rows(rows)
}

/// Rule set and layers of a rule network from its JSON description.
pub(crate) fn parse_model(text: &str) -> Result<(RuleSet, Vec<RuleLayer>)> {
    let doc: ModelDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    let rules = RuleSet::new(
        doc.rules
            .into_iter()
            .map(|r| Rule {
                vertex: r.vertex.into(),
                neighbor: r.neighbor.into(),
            })
            .collect(),
    )?;
    let layers = doc
        .layers
        .into_iter()
        .map(|l| {
            Ok(RuleLayer {
                consequents: l
                    .consequents
                    .iter()
                    .map(|c| {
                        Ok(Consequent {
                            w: matrix(&c.w)?,
                            u: matrix(&c.u)?,
                            b: c.b.clone(),
                        })
                    })
                    .collect::<Result<_>>()?,
                activation: activation(&l.activation, l.slope)?,
                residual: l.residual,
            })
        })
        .collect::<Result<_>>()?;
    Ok((rules, layers))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_model() {
        let text = r#"{
          "rules": [{"vertex": {"type": "one"}, "neighbor": {"type": "triangular", "a": 0, "b": 0.5, "c": 1}}],
          "layers": [{"consequents": [{"w": [[1, 0], [0, 1]], "u": [[0.5, 0], [0, 0.5]], "b": [0, 0]}], "activation": "leaky_relu", "slope": 0.2}]
        }"#;
        let (rules, layers) = parse_model(text).unwrap();
        assert_eq!(rules.len(), 1);
        assert_eq!(layers[0].activation, Activation::LeakyRelu(0.2));
        assert!(!layers[0].residual);
        assert!(parse_model(r#"{"rules": [], "layers": []}"#).is_err());
        assert!(matches!(parse_model("{"), Err(Error::Parse { .. })));
    }
}
