//! JSON file formats and small text formats used on the command line.
//!
//! Rationals are written as strings `"p/q"` (or `"p"` for integers) so that
//! round trips are exact. Matrices are lists of rows. The structure tensor is
//! nested as `bracket[i][j][k]`, the `k`-th coordinate of `[e_i, e_j]`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::{BihomAssociativeAlgebra, BihomLieAlgebra, StructureTensor};
use crate::cohomology::Representation;
use crate::error::{Error, Result};
use crate::linalg::{parse_scalar, Matrix, Scalar, Vector};

pub const FIELD: &str = "rational";

/// Directory that relative output paths are resolved against, when set.
pub const OUTPUT_DIR_ENV: &str = "BIHOM_OUTPUT_DIR";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyAlgebra {
    Lie(BihomLieAlgebra),
    Associative(BihomAssociativeAlgebra),
}

impl AnyAlgebra {
    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Lie(l) => l.dim(),
            AnyAlgebra::Associative(a) => a.dim(),
        }
    }

    pub fn into_lie(self) -> Result<BihomLieAlgebra> {
        match self {
            AnyAlgebra::Lie(l) => Ok(l),
            AnyAlgebra::Associative(_) => Err(Error::InvalidInput(
                "expected a bihom-lie algebra, found bihom-associative".into(),
            )),
        }
    }

    pub fn into_associative(self) -> Result<BihomAssociativeAlgebra> {
        match self {
            AnyAlgebra::Associative(a) => Ok(a),
            AnyAlgebra::Lie(_) => Err(Error::InvalidInput(
                "expected a bihom-associative algebra, found bihom-lie".into(),
            )),
        }
    }
}

type RawMatrix = Vec<Vec<String>>;
type RawTensor = Vec<Vec<Vec<String>>>;

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
enum AlgebraFile {
    #[serde(rename = "bihom-lie")]
    Lie {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        field: String,
        dim: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        basis: Option<Vec<String>>,
        bracket: RawTensor,
        alpha: RawMatrix,
        beta: RawMatrix,
    },
    #[serde(rename = "bihom-associative")]
    Associative {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        field: String,
        dim: usize,
        product: RawTensor,
        alpha: RawMatrix,
        beta: RawMatrix,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepresentationFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    algebra: Option<String>,
    dim: usize,
    rho: Vec<RawMatrix>,
    #[serde(rename = "alpha_M")]
    alpha_m: RawMatrix,
    #[serde(rename = "beta_M")]
    beta_m: RawMatrix,
}

fn parse_err(context: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        context: context.into(),
        message: message.into(),
    }
}

fn json_err(e: serde_json::Error) -> Error {
    parse_err(format!("line {}, column {}", e.line(), e.column()), e.to_string())
}

fn scalar_at(text: &str, path: &str) -> Result<Scalar> {
    parse_scalar(text).map_err(|m| parse_err(path, m))
}

fn vector_at(raw: &[String], len: usize, path: &str) -> Result<Vector> {
    if raw.len() != len {
        return Err(parse_err(path, format!("expected {len} entries, found {}", raw.len())));
    }
    raw.iter()
        .enumerate()
        .map(|(i, s)| scalar_at(s, &format!("{path}[{i}]")))
        .collect()
}

fn matrix_at(raw: &RawMatrix, rows: usize, cols: usize, path: &str) -> Result<Matrix> {
    if raw.len() != rows {
        return Err(parse_err(path, format!("expected {rows} rows, found {}", raw.len())));
    }
    let rows_v = raw
        .iter()
        .enumerate()
        .map(|(r, row)| vector_at(row, cols, &format!("{path}[{r}]")))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(cols, rows_v)
}

fn tensor_at(raw: &RawTensor, dim: usize, path: &str) -> Result<StructureTensor> {
    if raw.len() != dim {
        return Err(parse_err(path, format!("expected {dim} entries, found {}", raw.len())));
    }
    let mut t = StructureTensor::zeros(dim);
    for (i, plane) in raw.iter().enumerate() {
        if plane.len() != dim {
            return Err(parse_err(
                format!("{path}[{i}]"),
                format!("expected {dim} entries, found {}", plane.len()),
            ));
        }
        for (j, v) in plane.iter().enumerate() {
            let v = vector_at(v, dim, &format!("{path}[{i}][{j}]"))?;
            for (k, x) in v.into_iter().enumerate() {
                t.set(i, j, k, x);
            }
        }
    }
    Ok(t)
}

fn check_field(field: &str) -> Result<()> {
    if field != FIELD {
        return Err(parse_err("field", format!("unsupported field {field:?}, expected {FIELD:?}")));
    }
    Ok(())
}

fn raw_matrix(m: &Matrix) -> RawMatrix {
    m.to_rows()
        .into_iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

fn raw_tensor(t: &StructureTensor) -> RawTensor {
    t.to_nested()
        .into_iter()
        .map(|plane| {
            plane
                .into_iter()
                .map(|v| v.iter().map(ToString::to_string).collect())
                .collect()
        })
        .collect()
}

pub fn parse_algebra(text: &str) -> Result<AnyAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(json_err)?;
    match file {
        AlgebraFile::Lie {
            name,
            field,
            dim,
            basis,
            bracket,
            alpha,
            beta,
        } => {
            check_field(&field)?;
            let mut l = BihomLieAlgebra::new(
                tensor_at(&bracket, dim, "bracket")?,
                matrix_at(&alpha, dim, dim, "alpha")?,
                matrix_at(&beta, dim, dim, "beta")?,
            )?;
            if let Some(name) = name {
                l = l.with_name(name);
            }
            if let Some(basis) = basis {
                if basis.len() != dim {
                    return Err(parse_err("basis", format!("expected {dim} labels, found {}", basis.len())));
                }
                l = l.with_labels(basis)?;
            }
            Ok(AnyAlgebra::Lie(l))
        }
        AlgebraFile::Associative {
            name,
            field,
            dim,
            product,
            alpha,
            beta,
        } => {
            check_field(&field)?;
            let mut a = BihomAssociativeAlgebra::new(
                tensor_at(&product, dim, "product")?,
                matrix_at(&alpha, dim, dim, "alpha")?,
                matrix_at(&beta, dim, dim, "beta")?,
            )?;
            if let Some(name) = name {
                a = a.with_name(name);
            }
            Ok(AnyAlgebra::Associative(a))
        }
    }
}

pub fn emit_algebra(alg: &AnyAlgebra) -> String {
    let file = match alg {
        AnyAlgebra::Lie(l) => AlgebraFile::Lie {
            name: l.name().map(str::to_string),
            field: FIELD.into(),
            dim: l.dim(),
            basis: l.explicit_labels().map(<[String]>::to_vec),
            bracket: raw_tensor(l.bracket_tensor()),
            alpha: raw_matrix(l.alpha()),
            beta: raw_matrix(l.beta()),
        },
        AnyAlgebra::Associative(a) => AlgebraFile::Associative {
            name: a.name().map(str::to_string),
            field: FIELD.into(),
            dim: a.dim(),
            product: raw_tensor(a.product_tensor()),
            alpha: raw_matrix(a.alpha()),
            beta: raw_matrix(a.beta()),
        },
    };
    let mut out = serde_json::to_string_pretty(&file).expect("serializable");
    out.push('\n');
    out
}

pub fn emit_lie(l: &BihomLieAlgebra) -> String {
    emit_algebra(&AnyAlgebra::Lie(l.clone()))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| parse_err(path.display().to_string(), e.to_string()))
}

fn with_path(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { context, message } => {
            parse_err(format!("{}: {context}", path.display()), message)
        }
        other => other,
    }
}

pub fn load_algebra(path: impl AsRef<Path>) -> Result<AnyAlgebra> {
    let path = path.as_ref();
    parse_algebra(&read(path)?).map_err(|e| with_path(path, e))
}

pub fn load_lie(path: impl AsRef<Path>) -> Result<BihomLieAlgebra> {
    load_algebra(path)?.into_lie()
}

/// Parses a representation of `algebra`. Any `algebra` reference inside the
/// file is ignored.
pub fn parse_representation(text: &str, algebra: &BihomLieAlgebra) -> Result<Representation> {
    let file: RepresentationFile = serde_json::from_str(text).map_err(json_err)?;
    representation_from_file(file, algebra)
}

fn representation_from_file(file: RepresentationFile, algebra: &BihomLieAlgebra) -> Result<Representation> {
    let m = file.dim;
    if file.rho.len() != algebra.dim() {
        return Err(parse_err(
            "rho",
            format!("expected {} matrices, found {}", algebra.dim(), file.rho.len()),
        ));
    }
    let rho = file
        .rho
        .iter()
        .enumerate()
        .map(|(i, r)| matrix_at(r, m, m, &format!("rho[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Representation::new(
        algebra.clone(),
        rho,
        matrix_at(&file.alpha_m, m, m, "alpha_M")?,
        matrix_at(&file.beta_m, m, m, "beta_M")?,
    )
}

/// Loads a representation file. Its `algebra` field names the algebra file,
/// relative to the representation file's directory.
pub fn load_representation(path: impl AsRef<Path>) -> Result<Representation> {
    let path = path.as_ref();
    let file: RepresentationFile =
        serde_json::from_str(&read(path)?).map_err(|e| with_path(path, json_err(e)))?;
    let reference = file.algebra.clone().ok_or_else(|| {
        parse_err(path.display().to_string(), "missing \"algebra\" reference")
    })?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    let algebra = load_lie(base.join(reference))?;
    representation_from_file(file, &algebra).map_err(|e| with_path(path, e))
}

pub fn emit_representation(rep: &Representation, algebra_ref: Option<&str>) -> String {
    let file = RepresentationFile {
        algebra: algebra_ref.map(str::to_string),
        dim: rep.module_dim(),
        rho: rep.rho().iter().map(raw_matrix).collect(),
        alpha_m: raw_matrix(rep.alpha_m()),
        beta_m: raw_matrix(rep.beta_m()),
    };
    let mut out = serde_json::to_string_pretty(&file).expect("serializable");
    out.push('\n');
    out
}

/// `"a,b;c,d"` as a matrix with rows separated by `;`.
pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let rows = text
        .split(';')
        .enumerate()
        .map(|(r, row)| parse_vector(row).map_err(|e| with_context(e, &format!("row {}", r + 1))))
        .collect::<Result<Vec<_>>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(parse_err("matrix", "rows have different lengths"));
    }
    Matrix::from_rows(cols, rows)
}

/// `"a,b,c"` as a vector.
pub fn parse_vector(text: &str) -> Result<Vector> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .enumerate()
        .map(|(i, s)| scalar_at(s, &format!("entry {}", i + 1)))
        .collect()
}

fn with_context(e: Error, ctx: &str) -> Error {
    match e {
        Error::Parse { context, message } => parse_err(format!("{ctx}, {context}"), message),
        other => other,
    }
}

/// `["k=1", "l=-1/2"]` as a parameter map.
pub fn parse_params<S: AsRef<str>>(items: &[S]) -> Result<BTreeMap<String, Scalar>> {
    let mut out = BTreeMap::new();
    for item in items {
        let item = item.as_ref();
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| parse_err(item, "expected key=value"))?;
        let key = key.trim();
        if key.is_empty() {
            return Err(parse_err(item, "empty parameter name"));
        }
        let value = scalar_at(value, key)?;
        if out.insert(key.to_string(), value).is_some() {
            return Err(parse_err(key, "parameter given twice"));
        }
    }
    Ok(out)
}

/// Resolves a relative output path against `BIHOM_OUTPUT_DIR` when it is set.
pub fn output_path(path: impl AsRef<Path>) -> PathBuf {
    let path = path.as_ref();
    match std::env::var_os(OUTPUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}
