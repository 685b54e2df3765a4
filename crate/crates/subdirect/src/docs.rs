//! JSON documents: tuple algebras, witness families, census results and the
//! report envelope every command prints.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use subdirect_core::certify::CertificateKind;
use subdirect_core::constructions::WitnessFamily;
use subdirect_core::enumerate::CensusResult;
use subdirect_core::{FiniteSemigroup, Tuple, TupleAlgebra};

use crate::error::{CliError, CliResult};
use crate::io;

/// Version of the report layout; bumped on incompatible changes.
pub const SCHEMA: &str = "subdirect-report/1";

/// What a witness family expects to be told apart by.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CertificateSummary {
    pub hook: CertificateKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub m_values: Vec<usize>,
}

/// A finite set of tuples over a base semigroup, optionally labelled with
/// the construction that produced it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AlgebraDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub base: FiniteSemigroup,
    pub arity: usize,
    /// Sorted, without repetitions.
    pub members: Vec<Tuple>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateSummary>,
    /// Exact generators as `pre|per` literals.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<String>,
    /// Construction-specific extras.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

impl AlgebraDoc {
    pub fn from_algebra(t: &TupleAlgebra, label: Option<String>) -> Self {
        AlgebraDoc {
            label,
            base: t.base().clone(),
            arity: t.arity(),
            members: t.members().cloned().collect(),
            certificate: None,
            generators: Vec::new(),
            details: None,
        }
    }

    pub fn from_family(f: &WitnessFamily) -> Self {
        let mut doc = Self::from_algebra(&f.truncation, Some(f.label.clone()));
        doc.certificate = Some(CertificateSummary { hook: f.hook, m_values: f.m_values.clone() });
        doc.generators = f.generators.iter().map(|g| g.display(f.base())).collect();
        doc
    }

    pub fn to_algebra(&self) -> CliResult<TupleAlgebra> {
        Ok(TupleAlgebra::new(self.base.clone(), self.arity, self.members.iter().cloned())?)
    }

    /// Accepts a bare document or a report whose result is one.
    pub fn parse(text: &str) -> CliResult<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| CliError::Document(e.to_string()))?;
        let inner = match value.get("result") {
            Some(result) if value.get("schema").is_some() => result.clone(),
            _ => value,
        };
        serde_json::from_value(inner).map_err(|e| CliError::Document(format!("not a tuple algebra: {e}")))
    }

    pub fn digest(&self) -> String {
        io::hex_digest(serde_json::to_string(self).expect("document serializes").as_bytes())
    }
}

/// A census in a form that can be read back from the cache.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CensusDoc {
    pub base: FiniteSemigroup,
    pub arity: usize,
    pub total: usize,
    pub classes: usize,
    pub class_sizes: Vec<usize>,
    /// Member lists of one representative per class.
    pub representatives: Vec<Vec<Tuple>>,
}

impl From<&CensusResult> for CensusDoc {
    fn from(r: &CensusResult) -> Self {
        CensusDoc {
            base: r.base.clone(),
            arity: r.arity,
            total: r.total,
            classes: r.classes(),
            class_sizes: r.class_sizes.clone(),
            representatives: r.representatives.iter().map(|t| t.members().cloned().collect()).collect(),
        }
    }
}

impl CensusDoc {
    pub fn representative(&self, k: usize) -> CliResult<TupleAlgebra> {
        let members = self
            .representatives
            .get(k)
            .ok_or_else(|| CliError::Usage(format!("representative {k} requested, census has {}", self.classes)))?;
        Ok(TupleAlgebra::new(self.base.clone(), self.arity, members.iter().cloned())?)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct InputRef {
    pub source: String,
    pub sha256: String,
}

impl InputRef {
    pub fn table(source: &str, s: &FiniteSemigroup) -> Self {
        InputRef { source: source.to_string(), sha256: io::table_digest(s) }
    }
}

/// Every command prints one of these.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub tool: String,
    pub version: String,
    /// The arguments that reproduce this report.
    pub command: Vec<String>,
    pub inputs: Vec<InputRef>,
    pub result: Value,
}

impl Report {
    pub fn new(command: Vec<String>, inputs: Vec<InputRef>, result: Value) -> Self {
        Report {
            schema: SCHEMA.to_string(),
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command,
            inputs,
            result,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use subdirect_core::catalog;
    use subdirect_core::constructions::t_m;

    #[test]
    fn algebra_round_trip() {
        let nil3 = catalog::get("NIL3").unwrap();
        let f = t_m(&nil3, &"3k".parse().unwrap(), 1, 4).unwrap();
        let doc = AlgebraDoc::from_family(&f);
        assert_eq!(doc.certificate.as_ref().unwrap().hook, CertificateKind::DivisorSpectrum);
        let text = serde_json::to_string(&doc).unwrap();
        let back = AlgebraDoc::parse(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_algebra().unwrap(), f.truncation);

        let wrapped = Report::new(vec![], vec![], serde_json::to_value(&doc).unwrap());
        assert_eq!(AlgebraDoc::parse(&serde_json::to_string(&wrapped).unwrap()).unwrap(), doc);
    }

    #[test]
    fn rejects_bad_algebras() {
        let l2 = serde_json::to_value(catalog::get("L2").unwrap()).unwrap();
        let doc = serde_json::json!({"base": l2, "arity": 2, "members": [[0, 1, 1]]});
        let parsed = AlgebraDoc::parse(&doc.to_string()).unwrap();
        assert!(parsed.to_algebra().is_err());
        assert!(AlgebraDoc::parse("{\"arity\": 2}").is_err());
    }
}
