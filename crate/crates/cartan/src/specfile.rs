// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

//! Curve spec files.
//!
//! ```json
//! {
//!   "name": "null_helix_a1_b2",
//!   "constants": { "a": 1.0, "b": 2.0 },
//!   "components": ["...", "...", "...", "..."],
//!   "parametrization": "pseudo_arc",
//!   "domain": [-1.0, 1.0]
//! }
//! ```

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use cartan_core::curve::{CurveSpec, Interval, Parametrization};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParametrizationTag {
    PseudoArc,
    General,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub name: String,
    #[serde(default)]
    pub constants: BTreeMap<String, f64>,
    pub components: [String; 4],
    pub parametrization: ParametrizationTag,
    pub domain: [f64; 2],
}

impl SpecFile {
    pub fn from_spec(spec: &CurveSpec) -> Self {
        SpecFile {
            name: spec.name.clone(),
            constants: spec.constants.clone(),
            components: spec.components.each_ref().map(|c| c.to_string()),
            parametrization: match spec.parametrization {
                Parametrization::PseudoArc => ParametrizationTag::PseudoArc,
                Parametrization::General => ParametrizationTag::General,
            },
            domain: [spec.domain.lo, spec.domain.hi],
        }
    }

    pub fn to_spec(&self) -> cartan_core::Result<CurveSpec> {
        let parametrization = match self.parametrization {
            ParametrizationTag::PseudoArc => Parametrization::PseudoArc,
            ParametrizationTag::General => Parametrization::General,
        };
        CurveSpec::parse(
            self.name.clone(),
            self.components.each_ref().map(String::as_str),
            self.constants.clone(),
            Interval::new(self.domain[0], self.domain[1])?,
            parametrization,
        )
    }
}

pub fn parse_spec(text: &str, path: &Path) -> CliResult<CurveSpec> {
    let bad = |message: String| CliError::SpecFile {
        path: path.to_path_buf(),
        message,
    };
    let file: SpecFile = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    file.to_spec().map_err(|e| bad(e.to_string()))
}

pub fn load_spec(path: &Path) -> CliResult<CurveSpec> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_spec(&text, path)
}

pub fn render_spec(spec: &CurveSpec) -> String {
    let mut text =
        serde_json::to_string_pretty(&SpecFile::from_spec(spec)).expect("spec files serialize");
    text.push('\n');
    text
}

pub fn save_spec(spec: &CurveSpec, path: &Path) -> CliResult<()> {
    fs::write(path, render_spec(spec)).map_err(|e| CliError::io(path, e))
}

/// `*.json` files directly inside `dir`, sorted by file name.
pub fn spec_files_in(dir: &Path) -> CliResult<Vec<PathBuf>> {
    let entries = fs::read_dir(dir).map_err(|e| CliError::io(dir, e))?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| CliError::io(dir, e))?.path();
        if path.is_file() && path.extension().is_some_and(|x| x == "json") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cartan_core::corpus::{example_curve, ExampleParams};

    #[test]
    fn round_trip() {
        let spec = example_curve(&ExampleParams::new(1.0, 2.0).unwrap()).unwrap();
        let text = render_spec(&spec);
        assert_eq!(parse_spec(&text, Path::new("x.json")).unwrap(), spec);
    }

    #[test]
    fn rejects_malformed_files() {
        let p = Path::new("bad.json");
        assert!(matches!(parse_spec("{", p), Err(CliError::SpecFile { .. })));
        let missing =
            r#"{"name":"x","components":["s","s","0"],"parametrization":"general","domain":[0,1]}"#;
        assert!(matches!(
            parse_spec(missing, p),
            Err(CliError::SpecFile { .. })
        ));
        let unbound = r#"{"name":"x","components":["k*s","s","0","0"],"parametrization":"general","domain":[0,1]}"#;
        assert!(matches!(
            parse_spec(unbound, p),
            Err(CliError::SpecFile { .. })
        ));
        let reversed = r#"{"name":"x","components":["s","s","0","0"],"parametrization":"general","domain":[1,0]}"#;
        assert!(matches!(
            parse_spec(reversed, p),
            Err(CliError::SpecFile { .. })
        ));
    }
}
