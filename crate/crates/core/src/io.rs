//! JSON schemas for inputs, cone files and reports.
//!
//! Polynomials are stored as strings in the input grammar; exact constants
//! as `"a/b"` or `"a/b+c/d*i"`.

use std::path::Path;

use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::cones::{ConeKind, ConeResult, Purity};
use crate::error::{Error, Result};
use crate::ideal::{Budget, Ideal, Variety};
use crate::poly::VariableContext;
use crate::projections::{LinearSubspace, Splitting};
use crate::witness::WitnessArc;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarietyFile {
    pub vars: Vec<String>,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_dim: Option<i64>,
}

impl VarietyFile {
    /// Parses the generators and computes the dimension, checking it
    /// against `claimed_dim` when present.
    pub fn build(&self, budget: &Budget) -> Result<Variety> {
        let x = Variety::parse(&self.vars, &self.generators, budget)?;
        if let Some(c) = self.claimed_dim {
            if c != x.dim {
                return Err(Error::Input(format!(
                    "claimed dimension {c} but the computed dimension is {}",
                    x.dim
                )));
            }
        }
        Ok(x)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceFile {
    pub ambient: usize,
    /// Basis columns.
    pub basis: Vec<Vec<String>>,
}

impl SubspaceFile {
    pub fn build(&self) -> Result<LinearSubspace> {
        LinearSubspace::parse(self.ambient, &self.basis)
    }

    pub fn from_subspace(s: &LinearSubspace) -> Self {
        SubspaceFile {
            ambient: s.ambient(),
            basis: s.to_strings(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplittingFile {
    #[serde(rename = "V")]
    pub v: SubspaceFile,
    #[serde(rename = "W")]
    pub w: SubspaceFile,
}

impl SplittingFile {
    pub fn build(&self) -> Result<Splitting> {
        Splitting::new(self.v.build()?, self.w.build()?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcFile {
    pub vars: Vec<String>,
    pub parameter: String,
    pub components: Vec<String>,
}

impl ArcFile {
    /// Validates the arc against `x`, whose variables must match.
    pub fn build(&self, x: &Variety) -> Result<WitnessArc> {
        if self.vars != x.ctx().names() {
            return Err(Error::Input(format!(
                "arc variables {:?} differ from the variety's {:?}",
                self.vars,
                x.ctx().names()
            )));
        }
        WitnessArc::parse(x, &self.parameter, &self.components)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConeFile {
    pub which: ConeKind,
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    pub dim: i64,
    pub purity: Purity,
}

impl ConeFile {
    pub fn from_result(c: &ConeResult) -> Self {
        ConeFile {
            which: c.which,
            variables: c.ideal.ctx().names().to_vec(),
            generators: c
                .ideal
                .nonzero_generators()
                .map(|g| g.to_string())
                .collect(),
            dim: c.dim,
            purity: c.purity,
        }
    }

    pub fn ideal(&self) -> Result<Ideal> {
        let ctx = VariableContext::new(&self.variables)?;
        Ideal::parse(&ctx, &self.generators)
    }
}

/// Envelope of every command's output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: serde_json::Value,
    pub results: serde_json::Value,
    /// Wall-clock seconds per stage; omitted unless requested, so that
    /// reports are reproducible byte for byte.
    pub timings: Option<serde_json::Value>,
    pub budget_used: u64,
}

pub fn from_json<T: DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed {what}: {e}")))
}

pub fn read_json<T: DeserializeOwned>(path: &Path, what: &str) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {what} {}: {e}", path.display())))?;
    from_json(&text, what)
}

pub fn load_variety(path: &Path, budget: &Budget) -> Result<Variety> {
    read_json::<VarietyFile>(path, "variety file")?.build(budget)
}

pub fn load_subspace(path: &Path) -> Result<LinearSubspace> {
    read_json::<SubspaceFile>(path, "subspace file")?.build()
}

pub fn load_splitting(path: &Path) -> Result<Splitting> {
    read_json::<SplittingFile>(path, "splitting file")?.build()
}

pub fn load_arc(path: &Path, x: &Variety) -> Result<WitnessArc> {
    read_json::<ArcFile>(path, "arc file")?.build(x)
}

/// Loads a cone from a bare cone file or from the report of the `cone`
/// command.
pub fn load_cone(path: &Path) -> Result<Ideal> {
    let value: serde_json::Value = read_json(path, "cone file")?;
    let body = match value.get("results") {
        Some(results) if value.get("command").is_some() => results.clone(),
        _ => value,
    };
    let cone: ConeFile = serde_json::from_value(body)
        .map_err(|e| Error::Input(format!("malformed cone file: {e}")))?;
    cone.ideal()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schema_examples() {
        let b = Budget::default();
        let v: VarietyFile =
            from_json(r#"{"vars":["x","y"],"generators":["y - x^2"]}"#, "variety").unwrap();
        assert_eq!(v.build(&b).unwrap().dim, 1);
        let wrong: VarietyFile = from_json(
            r#"{"vars":["x","y"],"generators":["y - x^2"],"claimed_dim":2}"#,
            "variety",
        )
        .unwrap();
        assert!(wrong.build(&b).is_err());
        let s: SubspaceFile =
            from_json(r#"{"ambient":2,"basis":[["1","0"]]}"#, "subspace").unwrap();
        assert_eq!(s.build().unwrap().standard_index(0), Some(0));
        let arc: ArcFile = from_json(
            r#"{"vars":["x","y"],"parameter":"s","components":["s","s^2"]}"#,
            "arc",
        )
        .unwrap();
        assert!(arc.build(&v.build(&b).unwrap()).is_ok());
        assert!(from_json::<VarietyFile>(r#"{"vars":["x"],"gens":[]}"#, "variety").is_err());
    }

    #[test]
    fn cone_file_round_trip() {
        let b = Budget::default();
        let x = Variety::parse(&["x", "y"], &["y^2 - x^3"], &b).unwrap();
        let c = crate::cones::c4_infinity(&x, &b).unwrap();
        let file = ConeFile::from_result(&c);
        let text = serde_json::to_string(&file).unwrap();
        let back: ConeFile = from_json(&text, "cone").unwrap();
        assert!(back.ideal().unwrap().equals(&c.ideal, &b).unwrap());
    }
}
