//! instance files: JSON with integer matrices, reduced into the field at load

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bialgebroid::RightBialgebroid;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat, PrimeField, Rationals};
use crate::report::Report;
use crate::ringmod::{Algebra, Bimodule, Obj};

/// version tag accepted in the `schema` field
pub const INSTANCE_SCHEMA_VERSION: &str = "skewmon-instance/1";

pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Prime { p: u64 },
    Named(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    /// for corrupted variants: the check id the corruption must trip
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_failure: Option<ExpectedFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedFailure {
    pub command: String,
    pub id: String,
    pub anchor: String,
}

/// an algebra by structure constants: `mult` is `dim × dim²`, column `i·dim + j`
/// holding the coordinates of `e_i·e_j`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub mult: IntMatrix,
    pub unit: Vec<i64>,
}

/// `H` with `s`, `t` (`dim H × dim R`), `Delta` (`dim H² × dim H`, into `H⊗_k H`)
/// and `counit` (`dim R × dim H`)
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebroidBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub mult: IntMatrix,
    pub unit: Vec<i64>,
    pub s: IntMatrix,
    pub t: IntMatrix,
    #[serde(rename = "Delta")]
    pub delta: IntMatrix,
    pub counit: IntMatrix,
}

/// a right `R`-module given by one action matrix per basis element of `R`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleBlock {
    pub label: String,
    pub dim: usize,
    pub right: Vec<IntMatrix>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_maps: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modules: Vec<ModuleBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub schema: String,
    pub metadata: Metadata,
    pub field: FieldSpec,
    pub algebra: AlgebraBlock,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bialgebroid: Option<BialgebroidBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probes: Option<ProbeBlock>,
}

fn input(path: &str, msg: impl Into<String>) -> Error {
    Error::Input {
        path: path.to_string(),
        msg: msg.into(),
    }
}

fn check_shape(path: &str, m: &IntMatrix, rows: usize, cols: usize) -> Result<()> {
    if m.len() != rows {
        return Err(input(path, format!("expected {rows} rows, found {}", m.len())));
    }
    if let Some((i, r)) = m.iter().enumerate().find(|(_, r)| r.len() != cols) {
        return Err(input(&format!("{path}[{i}]"), format!("expected {cols} entries, found {}", r.len())));
    }
    Ok(())
}

fn check_len(path: &str, v: &[i64], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(input(path, format!("expected {n} entries, found {}", v.len())));
    }
    Ok(())
}

fn to_mat<F: Field>(field: &F, m: &IntMatrix, cols: usize) -> Mat<F> {
    Mat::from_fn(field, m.len(), cols, |i, j| field.from_i64(m[i][j]))
}

impl InstanceFile {
    /// parse JSON text; syntax errors carry line and column
    pub fn parse(text: &str) -> Result<Self> {
        let file: InstanceFile = serde_json::from_str(text).map_err(|e| {
            input(
                &format!("line {} column {}", e.line(), e.column()),
                e.to_string(),
            )
        })?;
        file.validate()?;
        Ok(file)
    }

    /// pretty JSON with each row of integers on one line
    pub fn to_json(&self) -> String {
        compact_rows(&serde_json::to_string_pretty(self).expect("instance serializes"))
    }

    /// shape checks that do not depend on the field
    pub fn validate(&self) -> Result<()> {
        if self.schema != INSTANCE_SCHEMA_VERSION {
            return Err(input("schema", format!("expected \"{INSTANCE_SCHEMA_VERSION}\", found \"{}\"", self.schema)));
        }
        match &self.field {
            FieldSpec::Prime { p } => {
                PrimeField::new(*p).map_err(|e| input("field.p", e.to_string()))?;
            }
            FieldSpec::Named(s) if s == "rational" => {}
            FieldSpec::Named(s) => return Err(input("field", format!("expected a prime {{\"p\": n}} or \"rational\", found \"{s}\""))),
        }
        let r = self.algebra.dim;
        if r == 0 {
            return Err(input("algebra.dim", "must be positive"));
        }
        check_shape("algebra.mult", &self.algebra.mult, r, r * r)?;
        check_len("algebra.unit", &self.algebra.unit, r)?;
        if let Some(b) = &self.bialgebroid {
            let h = b.dim;
            if h == 0 {
                return Err(input("bialgebroid.dim", "must be positive"));
            }
            check_shape("bialgebroid.mult", &b.mult, h, h * h)?;
            check_len("bialgebroid.unit", &b.unit, h)?;
            check_shape("bialgebroid.s", &b.s, h, r)?;
            check_shape("bialgebroid.t", &b.t, h, r)?;
            check_shape("bialgebroid.Delta", &b.delta, h * h, h)?;
            check_shape("bialgebroid.counit", &b.counit, r, h)?;
        }
        if let Some(p) = &self.probes {
            for (i, m) in p.modules.iter().enumerate() {
                let path = format!("probes.modules[{i}].right");
                if m.right.len() != r {
                    return Err(input(&path, format!("expected {r} action matrices, found {}", m.right.len())));
                }
                for (j, a) in m.right.iter().enumerate() {
                    check_shape(&format!("{path}[{j}]"), a, m.dim, m.dim)?;
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.metadata.name
    }

    /// every integer matrix of the file, by path, for mutation runs
    pub fn matrices_mut(&mut self) -> Vec<(String, &mut IntMatrix)> {
        let mut out = vec![("algebra.mult".to_string(), &mut self.algebra.mult)];
        if let Some(b) = &mut self.bialgebroid {
            out.push(("bialgebroid.mult".into(), &mut b.mult));
            out.push(("bialgebroid.s".into(), &mut b.s));
            out.push(("bialgebroid.t".into(), &mut b.t));
            out.push(("bialgebroid.Delta".into(), &mut b.delta));
            out.push(("bialgebroid.counit".into(), &mut b.counit));
        }
        out
    }

    /// add one to the entry `[i][j]` of the matrix at `path`; false if there is none
    pub fn bump(&mut self, path: &str, i: usize, j: usize) -> bool {
        for (p, m) in self.matrices_mut() {
            if p == path {
                if let Some(x) = m.get_mut(i).and_then(|r| r.get_mut(j)) {
                    *x += 1;
                    return true;
                }
            }
        }
        false
    }

    /// the field-specific data; errors name the block that failed
    pub fn build<F: Field>(&self, field: &F) -> Result<Built<F>> {
        let a = &self.algebra;
        let alg_name = a.name.clone().unwrap_or_else(|| "R".into());
        let base = Arc::new(
            Algebra::new(field, a.dim, to_mat(field, &a.mult, a.dim * a.dim), a.unit.iter().map(|&x| field.from_i64(x)).collect(), alg_name)
                .map_err(|e| input("algebra", e.to_string()))?,
        );
        let mut checks = base.check();
        let bialgebroid = match &self.bialgebroid {
            None => None,
            Some(b) => {
                let h_name = b.name.clone().unwrap_or_else(|| "H".into());
                let n = b.dim;
                let h = Arc::new(
                    Algebra::new(field, n, to_mat(field, &b.mult, n * n), b.unit.iter().map(|&x| field.from_i64(x)).collect(), h_name)
                        .map_err(|e| input("bialgebroid.mult", e.to_string()))?,
                );
                let r = a.dim;
                let bg = RightBialgebroid::new(
                    base.clone(),
                    h,
                    to_mat(field, &b.s, r),
                    to_mat(field, &b.t, r),
                    to_mat(field, &b.delta, n),
                    to_mat(field, &b.counit, n),
                    self.metadata.name.clone(),
                )
                .map_err(|e| match e {
                    Error::Input { .. } => e,
                    other => input("bialgebroid", other.to_string()),
                })?;
                Some(Arc::new(bg))
            }
        };
        let mut extra = Vec::new();
        let mut max_maps = None;
        if let Some(p) = &self.probes {
            max_maps = p.max_maps;
            for (i, m) in p.modules.iter().enumerate() {
                let right = m.right.iter().map(|x| to_mat(field, x, m.dim)).collect();
                let module = Bimodule::right_module(base.clone(), right, m.label.clone())
                    .map_err(|e| input(&format!("probes.modules[{i}]"), e.to_string()))?;
                checks.extend(module.check());
                extra.push(Arc::new(module) as Obj<F>);
            }
        }
        Ok(Built {
            field: field.clone(),
            name: self.metadata.name.clone(),
            base,
            bialgebroid,
            extra,
            max_maps,
            checks,
        })
    }

    /// an instance file holding a bialgebroid over a prime field
    pub fn from_bialgebroid(b: &RightBialgebroid<PrimeField>, description: &str) -> Self {
        let f = b.field();
        let ints = |m: &Mat<PrimeField>| -> IntMatrix {
            (0..m.rows()).map(|i| m.row(i).iter().map(|x| *x as i64).collect()).collect()
        };
        let vec = |v: &[u64]| v.iter().map(|&x| x as i64).collect::<Vec<_>>();
        let base = b.base();
        let h = b.total();
        InstanceFile {
            schema: INSTANCE_SCHEMA_VERSION.into(),
            metadata: Metadata {
                name: b.name().to_string(),
                description: description.to_string(),
                expected_failure: None,
            },
            field: FieldSpec::Prime { p: f.modulus() },
            algebra: AlgebraBlock {
                name: Some(base.name().to_string()),
                dim: base.dim(),
                mult: ints(base.structure()),
                unit: vec(base.unit()),
            },
            bialgebroid: Some(BialgebroidBlock {
                name: Some(h.name().to_string()),
                dim: h.dim(),
                mult: ints(h.structure()),
                unit: vec(h.unit()),
                s: ints(b.source()),
                t: ints(b.target()),
                delta: ints(b.delta_free()),
                counit: ints(b.counit()),
            }),
            probes: None,
        }
    }
}

/// collapse arrays that hold only integers onto a single line
fn compact_rows(pretty: &str) -> String {
    let mut out = String::with_capacity(pretty.len());
    let mut rest = pretty;
    while let Some(open) = rest.find('[') {
        out.push_str(&rest[..open]);
        let tail = &rest[open + 1..];
        let close = tail.find(['[', ']', '{', '"']);
        match close {
            Some(end) if tail.as_bytes()[end] == b']' => {
                let items: Vec<&str> = tail[..end].split(',').map(str::trim).filter(|x| !x.is_empty()).collect();
                out.push('[');
                out.push_str(&items.join(", "));
                out.push(']');
                rest = &tail[end + 1..];
            }
            _ => {
                out.push('[');
                rest = tail;
            }
        }
    }
    out.push_str(rest);
    out
}

/// an instance in a concrete field
pub struct Built<F: Field> {
    pub field: F,
    pub name: String,
    pub base: Arc<Algebra<F>>,
    pub bialgebroid: Option<Arc<RightBialgebroid<F>>>,
    /// probe modules from the file
    pub extra: Vec<Obj<F>>,
    pub max_maps: Option<usize>,
    /// the algebra and module checks run at load
    pub checks: Report,
}

impl<F: Field> Built<F> {
    pub fn require_bialgebroid(&self) -> Result<&Arc<RightBialgebroid<F>>> {
        self.bialgebroid
            .as_ref()
            .ok_or_else(|| input("bialgebroid", "this command needs a bialgebroid block"))
    }
}

/// a loaded instance in the field its file names
pub enum Loaded {
    Prime(Built<PrimeField>),
    Rational(Built<Rationals>),
}

impl Loaded {
    pub fn from_file(file: &InstanceFile) -> Result<Self> {
        match &file.field {
            FieldSpec::Prime { p } => Ok(Loaded::Prime(file.build(&PrimeField::new(*p)?)?)),
            FieldSpec::Named(_) => Ok(Loaded::Rational(file.build(&Rationals)?)),
        }
    }
}

/// read, validate and build an instance
pub fn load(path: impl AsRef<Path>) -> Result<(InstanceFile, Loaded)> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| input(&path.display().to_string(), e.to_string()))?;
    let file = InstanceFile::parse(&text)?;
    let loaded = Loaded::from_file(&file)?;
    Ok((file, loaded))
}
