use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use super::{Diagram, TrisectionParams};
use crate::error::{Error, Result};
use crate::intlin::IntMatrix;
use crate::json::{big_to_number, number_to_big};

pub const FORMAT_VERSION: u32 = 1;
const BASIS: &str = "canonical-v1";

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamsFile {
    g: i64,
    b: i64,
    p: i64,
    k: [i64; 3],
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramFile {
    format_version: u32,
    params: ParamsFile,
    basis: String,
    alpha: Vec<Vec<Number>>,
    beta: Vec<Vec<Number>>,
    gamma: Vec<Vec<Number>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    arcs: Option<Vec<Vec<Number>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    eta: Option<Vec<Vec<Number>>>,
}

fn nonneg(name: &str, x: i64) -> Result<usize> {
    usize::try_from(x).map_err(|_| Error::InvalidParams(format!("{name} = {x} is negative")))
}

fn classes(name: &str, vs: &[Vec<Number>], rank: usize) -> Result<IntMatrix> {
    let mut cols = Vec::with_capacity(vs.len());
    for (i, v) in vs.iter().enumerate() {
        if v.len() != rank {
            return Err(Error::DimensionMismatch(format!(
                "{name}[{i}] has length {}, expected surface rank {rank}",
                v.len()
            )));
        }
        let col = v
            .iter()
            .enumerate()
            .map(|(j, x)| number_to_big(x).ok_or_else(|| Error::parse(format!("{name}[{i}][{j}]"), format!("{x} is not an integer"))))
            .collect::<Result<Vec<BigInt>>>()?;
        cols.push(col);
    }
    Ok(IntMatrix::from_columns(rank, &cols))
}

/// Reads a `format_version = 1` diagram file.
///
/// Rejects only what prevents building the surface (negative entries,
/// `b < 1`, `g < p`) or the class matrices; `k` ranges are left to
/// [`validate`](super::validate).
pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let file: DiagramFile = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    if file.format_version != FORMAT_VERSION {
        return Err(Error::parse("format_version", format!("unsupported version {}", file.format_version)));
    }
    if file.basis != BASIS {
        return Err(Error::parse("basis", format!("expected \"{BASIS}\", got \"{}\"", file.basis)));
    }
    let p = &file.params;
    let k = [nonneg("k_1", p.k[0])?, nonneg("k_2", p.k[1])?, nonneg("k_3", p.k[2])?];
    let params = TrisectionParams::new(nonneg("g", p.g)?, nonneg("b", p.b)?, nonneg("p", p.p)?, k);
    if params.b < 1 {
        return Err(Error::InvalidParams("b must be at least 1".into()));
    }
    let rank = 2 * params.g + params.b - 1;
    let alpha = classes("alpha", &file.alpha, rank)?;
    let beta = classes("beta", &file.beta, rank)?;
    let gamma = classes("gamma", &file.gamma, rank)?;
    let arcs = file.arcs.as_deref().map(|a| classes("arcs", a, rank)).transpose()?;
    let eta = file.eta.as_deref().map(|e| classes("eta", e, rank)).transpose()?;
    Diagram::new(params, alpha, beta, gamma, arcs, eta)
}

fn columns(m: &IntMatrix) -> Vec<Vec<Number>> {
    m.columns().iter().map(|c| c.iter().map(big_to_number).collect()).collect()
}

/// Pretty-printed JSON with a trailing newline; `parse_diagram` inverts it.
pub fn serialize_diagram(d: &Diagram) -> String {
    let p = &d.params;
    let file = DiagramFile {
        format_version: FORMAT_VERSION,
        params: ParamsFile {
            g: p.g as i64,
            b: p.b as i64,
            p: p.p as i64,
            k: [p.k[0] as i64, p.k[1] as i64, p.k[2] as i64],
        },
        basis: BASIS.into(),
        alpha: columns(&d.alpha),
        beta: columns(&d.beta),
        gamma: columns(&d.gamma),
        arcs: d.arcs.as_ref().map(columns),
        eta: d.eta.as_ref().map(columns),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("diagram serializes");
    s.push('\n');
    s
}
