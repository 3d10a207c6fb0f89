//! Gate specifications: catalog names with parameters, or explicit matrices.

use std::path::Path;

use entangler_core::gates;
use entangler_core::numeric::{unitarity_deviation, Mat4, UNITARY_TOL};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::json::{Cx, F64};

/// Catalog names and how many real parameters each takes.
pub const CATALOG: [(&str, usize); 8] = [
    ("identity", 0),
    ("cnot", 0),
    ("cz", 0),
    ("swap", 0),
    ("sqrt_swap", 0),
    ("cp", 1),
    ("canonical", 3),
    ("xx", 1),
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
#[allow(clippy::large_enum_variant)]
pub enum GateSpec {
    Named {
        name: String,
        #[serde(default)]
        params: Vec<F64>,
    },
    /// Row-major, basis order `|00>, |01>, |10>, |11>`.
    Matrix { matrix: [[Cx; 4]; 4] },
}

pub fn arity(name: &str) -> Option<usize> {
    CATALOG.iter().find(|(n, _)| *n == name).map(|&(_, a)| a)
}

fn named_matrix(name: &str, p: &[f64]) -> Result<Mat4, CliError> {
    let want = arity(name).ok_or_else(|| {
        let names: Vec<&str> = CATALOG.iter().map(|(n, _)| *n).collect();
        CliError::Parse(format!(
            "unknown gate '{name}'; known: {}",
            names.join(", ")
        ))
    })?;
    if p.len() != want {
        return Err(CliError::Parse(format!(
            "gate '{name}' takes {want} parameter(s), got {}",
            p.len()
        )));
    }
    if p.iter().any(|x| !x.is_finite()) {
        return Err(CliError::Parse(format!(
            "non-finite parameter for '{name}'"
        )));
    }
    Ok(match name {
        "identity" => gates::identity(),
        "cnot" => gates::cnot(),
        "cz" => gates::cz(),
        "swap" => gates::swap(),
        "sqrt_swap" => gates::sqrt_swap(),
        "cp" => gates::cp(p[0]),
        "canonical" => gates::canonical(p[0], p[1], p[2]),
        "xx" => gates::xx(p[0]),
        _ => unreachable!("checked against the catalog"),
    })
}

impl GateSpec {
    pub fn named(name: &str, params: &[f64]) -> Self {
        GateSpec::Named {
            name: name.to_string(),
            params: params.iter().copied().map(F64).collect(),
        }
    }

    pub fn from_matrix(m: &Mat4) -> Self {
        GateSpec::Matrix {
            matrix: std::array::from_fn(|r| std::array::from_fn(|c| Cx::from(m[(r, c)]))),
        }
    }

    /// The matrix, checked for unitarity at `1e-8`.
    pub fn resolve(&self) -> Result<Mat4, CliError> {
        let m = match self {
            GateSpec::Named { name, params } => {
                let p: Vec<f64> = params.iter().map(|x| x.0).collect();
                named_matrix(name, &p)?
            }
            GateSpec::Matrix { matrix } => Mat4::from_fn(|r, c| matrix[r][c].into()),
        };
        if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(CliError::Parse("matrix has non-finite entries".into()));
        }
        let dev = unitarity_deviation(&m);
        if dev > UNITARY_TOL {
            return Err(CliError::NotUnitary(format!(
                "matrix is not unitary (max |m^dagger m - I| = {dev:.3e}, tolerance {UNITARY_TOL:.1e})"
            )));
        }
        Ok(m)
    }
}

/// Splits `cp(0.5)` into `("cp", [0.5])`; a bare name has no inline params.
pub fn split_inline(text: &str) -> Result<(String, Option<Vec<f64>>), CliError> {
    let text = text.trim();
    let Some(open) = text.find('(') else {
        return Ok((text.to_ascii_lowercase(), None));
    };
    let inner = text[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| CliError::Parse(format!("unbalanced parentheses in '{text}'")))?;
    let params = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner
            .split(',')
            .map(|p| {
                p.trim().parse::<f64>().map_err(|_| {
                    CliError::Parse(format!("bad parameter '{}' in '{text}'", p.trim()))
                })
            })
            .collect::<Result<_, _>>()?
    };
    Ok((text[..open].trim().to_ascii_lowercase(), Some(params)))
}

/// Reads a gate file: a GateSpec object, or a bare 4×4 array of `[re, im]`.
pub fn load_matrix_file(path: &Path) -> Result<GateSpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    if let Ok(spec) = serde_json::from_str::<GateSpec>(&text) {
        return Ok(spec);
    }
    serde_json::from_str::<[[Cx; 4]; 4]>(&text)
        .map(|matrix| GateSpec::Matrix { matrix })
        .map_err(|e| {
            CliError::Parse(format!(
                "{}: expected a gate spec or a 4x4 array of [re, im] pairs ({e})",
                path.display()
            ))
        })
}

/// Builds specs from command-line pieces. Named gates are taken first, in
/// order, then matrix files. Gates written without inline parameters draw
/// theirs from `params` in order, by arity; every value must be used.
pub fn specs_from_args(
    names: &[String],
    params: &[f64],
    matrices: &[impl AsRef<Path>],
) -> Result<Vec<GateSpec>, CliError> {
    let mut pool = params.iter().copied();
    let mut specs = Vec::new();
    for raw in names {
        let (name, inline) = split_inline(raw)?;
        let p = match inline {
            Some(p) => p,
            None => {
                let n = arity(&name)
                    .ok_or_else(|| CliError::Parse(format!("unknown gate '{name}'")))?;
                let taken: Vec<f64> = pool.by_ref().take(n).collect();
                if taken.len() != n {
                    return Err(CliError::Parse(format!(
                        "gate '{name}' takes {n} parameter(s), got {}",
                        taken.len()
                    )));
                }
                taken
            }
        };
        let spec = GateSpec::named(&name, &p);
        spec.resolve()?;
        specs.push(spec);
    }
    if pool.next().is_some() {
        return Err(CliError::Parse(
            "more --param values than the gates take".into(),
        ));
    }
    for path in matrices {
        specs.push(load_matrix_file(path.as_ref())?);
    }
    Ok(specs)
}

/// Exactly one gate from `--gate`/`--param` or `--matrix`.
pub fn single_spec(
    name: Option<&String>,
    params: &[f64],
    matrix: Option<&std::path::PathBuf>,
) -> Result<GateSpec, CliError> {
    let names: Vec<String> = name.cloned().into_iter().collect();
    let files: Vec<&std::path::PathBuf> = matrix.into_iter().collect();
    let mut specs = specs_from_args(&names, params, &files)?;
    match specs.len() {
        1 => Ok(specs.remove(0)),
        0 => Err(CliError::Parse(
            "a gate is required: --gate <name> or --matrix <path>".into(),
        )),
        _ => Err(CliError::Parse(
            "give either --gate or --matrix, not both".into(),
        )),
    }
}
