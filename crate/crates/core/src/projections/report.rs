use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::Ideal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Verified,
    HypothesisNotSatisfied,
    /// The hypothesis may hold but could not be certified exactly.
    HypothesisNotCertified,
    Failed,
    ResourceExceeded,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::HypothesisNotSatisfied => "hypothesis-not-satisfied",
            Verdict::HypothesisNotCertified => "hypothesis-not-certified",
            Verdict::Failed => "failed",
            Verdict::ResourceExceeded => "resource-exceeded",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Exact computation could not decide the check.
    Uncertified,
}

/// Evidence behind a check: an ideal with its dimension and point count.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<u64>,
}

impl Certificate {
    pub fn of(ideal: &Ideal, dim: i64) -> Self {
        Certificate {
            variables: ideal.ctx().names().to_vec(),
            generators: ideal.nonzero_generators().map(|g| g.to_string()).collect(),
            dim: Some(dim),
            count: None,
        }
    }

    pub fn with_count(mut self, count: u64) -> Self {
        self.count = Some(count);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

impl Check {
    pub fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        let status = if pass {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        Check {
            name: name.to_string(),
            status,
            detail: detail.into(),
            certificate: None,
        }
    }

    pub fn with_certificate(mut self, c: Certificate) -> Self {
        self.certificate = Some(c);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Outcome of a theorem checker. `diagnostics` are reported but never
/// affect the verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub hypotheses: Vec<Check>,
    pub conclusions: Vec<Check>,
    pub diagnostics: Vec<Check>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl TheoremReport {
    pub(crate) fn new(theorem: &str) -> Self {
        TheoremReport {
            theorem: theorem.to_string(),
            hypotheses: Vec::new(),
            conclusions: Vec::new(),
            diagnostics: Vec::new(),
            verdict: Verdict::Failed,
            error: None,
        }
    }

    /// Runs `body` to fill the checks, then derives the verdict. Resource
    /// errors become a `resource-exceeded` verdict; other errors propagate.
    pub(crate) fn run(
        mut self,
        body: impl FnOnce(&mut TheoremReport) -> Result<()>,
    ) -> Result<Self> {
        match body(&mut self) {
            Ok(()) => {
                self.verdict = self.derive_verdict();
                Ok(self)
            }
            Err(e @ Error::Resource { .. }) => {
                self.verdict = Verdict::ResourceExceeded;
                self.error = Some(e.to_string());
                Ok(self)
            }
            Err(e) => Err(e),
        }
    }

    fn derive_verdict(&self) -> Verdict {
        if self
            .hypotheses
            .iter()
            .any(|c| c.status == CheckStatus::Fail)
        {
            Verdict::HypothesisNotSatisfied
        } else if self
            .hypotheses
            .iter()
            .any(|c| c.status == CheckStatus::Uncertified)
        {
            Verdict::HypothesisNotCertified
        } else if self.conclusions.iter().all(Check::passed) {
            Verdict::Verified
        } else {
            Verdict::Failed
        }
    }
}
