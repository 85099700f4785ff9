//! Job settings read from JSON and overlaid with command-line values.

use serde::Deserialize;
use serde_json::Value;

use crate::dg::DEFAULT_MAX_DEGREE;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::resolution::{DEFAULT_HOM_BOUND, DEFAULT_INT_BOUND};
use crate::suite::DEFAULT_SEED;
use crate::transform::{parse_json_matrix, MonomialMatrix};

/// Unresolved settings. Matrices stay as JSON until the field is known.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobFile {
    pub matrix: Option<Value>,
    pub field: Option<FieldSetting>,
    pub max_degree: Option<u32>,
    pub hom_bound: Option<usize>,
    pub int_bound: Option<u32>,
    pub transform: Option<Value>,
    pub seed: Option<u64>,
}

/// `"Q"`, `"Fp:7"` or `{"Fp": 7}`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum FieldSetting {
    Text(String),
    Prime {
        #[serde(rename = "Fp")]
        p: u64,
    },
}

impl FieldSetting {
    pub fn resolve(&self) -> Result<Field> {
        match self {
            FieldSetting::Text(s) => s.parse(),
            FieldSetting::Prime { p } => Field::prime(*p),
        }
    }
}

#[derive(Clone, Debug)]
pub struct JobConfig {
    pub field: Field,
    pub matrix: Option<Matrix>,
    pub max_degree: u32,
    pub hom_bound: usize,
    pub int_bound: u32,
    pub transform: Option<MonomialMatrix>,
    pub seed: u64,
}

impl JobFile {
    pub fn from_json(text: &str) -> Result<JobFile> {
        serde_json::from_str(text).map_err(|e| Error::Config(format!("config JSON: {e}")))
    }

    /// Values set in `over` win.
    pub fn overlay(self, over: JobFile) -> JobFile {
        JobFile {
            matrix: over.matrix.or(self.matrix),
            field: over.field.or(self.field),
            max_degree: over.max_degree.or(self.max_degree),
            hom_bound: over.hom_bound.or(self.hom_bound),
            int_bound: over.int_bound.or(self.int_bound),
            transform: over.transform.or(self.transform),
            seed: over.seed.or(self.seed),
        }
    }

    pub fn resolve(&self, default_field: Field) -> Result<JobConfig> {
        let field = match &self.field {
            Some(f) => f.resolve()?,
            None => default_field,
        };
        let max_degree = self.max_degree.unwrap_or(DEFAULT_MAX_DEGREE);
        if max_degree < 2 {
            return Err(Error::Config(format!("max degree must be at least 2, got {max_degree}")));
        }
        let matrix = self.matrix.as_ref().map(|v| parse_json_matrix(field, &v.to_string())).transpose()?;
        if let Some(m) = &matrix {
            if (m.rows(), m.cols()) != (3, 3) {
                return Err(Error::Dimension(format!("expected a 3x3 matrix, got {}x{}", m.rows(), m.cols())));
            }
        }
        let transform = self.transform.as_ref().map(|v| MonomialMatrix::from_json(field, &v.to_string())).transpose()?;
        Ok(JobConfig {
            field,
            matrix,
            max_degree,
            hom_bound: self.hom_bound.unwrap_or(DEFAULT_HOM_BOUND),
            int_bound: self.int_bound.unwrap_or(DEFAULT_INT_BOUND),
            transform,
            seed: self.seed.unwrap_or(DEFAULT_SEED),
        })
    }
}

impl JobConfig {
    pub fn require_matrix(&self) -> Result<&Matrix> {
        self.matrix.as_ref().ok_or_else(|| Error::Config("a matrix is required (--matrix or \"matrix\" in the config)".into()))
    }

    pub fn require_transform(&self) -> Result<&MonomialMatrix> {
        self.transform.as_ref().ok_or_else(|| Error::Config("a transform is required (--transform or \"transform\" in the config)".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_overlays() {
        let file = JobFile::from_json(r#"{"matrix": [[1, "1/2", 0], [0, 0, 0], [0, 0, 0]], "field": {"Fp": 7}, "max_degree": 5}"#).unwrap();
        let cfg = file.clone().resolve(Field::Rational).unwrap();
        assert_eq!(cfg.field, Field::prime(7).unwrap());
        assert_eq!(cfg.matrix.unwrap().get(0, 1), &Field::prime(7).unwrap().ratio(1, 2).unwrap());
        let over = JobFile { field: Some(FieldSetting::Text("Q".into())), ..Default::default() };
        let cfg = file.overlay(over).resolve(Field::Rational).unwrap();
        assert_eq!((cfg.field, cfg.max_degree, cfg.hom_bound), (Field::Rational, 5, DEFAULT_HOM_BOUND));
    }

    #[test]
    fn rejects_bad_settings() {
        let low = JobFile { max_degree: Some(1), ..Default::default() };
        assert!(matches!(low.resolve(Field::Rational), Err(Error::Config(_))));
        let composite = JobFile { field: Some(FieldSetting::Prime { p: 9 }), ..Default::default() };
        assert!(matches!(composite.resolve(Field::Rational), Err(Error::NotPrime(9))));
        assert!(matches!(JobFile::from_json(r#"{"colour": 1}"#), Err(Error::Config(_))));
        let shape = JobFile::from_json(r#"{"matrix": [[1, 2], [3, 4]]}"#).unwrap();
        assert!(matches!(shape.resolve(Field::Rational), Err(Error::Dimension(_))));
    }
}
