use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    pub details: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckRecord {
    pub fn new(name: impl Into<String>, status: Status, details: impl Into<String>) -> Self {
        CheckRecord {
            name: name.into(),
            status,
            details: details.into(),
            witness: None,
        }
    }

    pub fn pass(name: impl Into<String>, details: impl Into<String>) -> Self {
        Self::new(name, Status::Pass, details)
    }

    pub fn fail(
        name: impl Into<String>,
        details: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        CheckRecord {
            witness: Some(witness.into()),
            ..Self::new(name, Status::Fail, details)
        }
    }

    pub fn skipped(name: impl Into<String>, details: impl Into<String>) -> Self {
        Self::new(name, Status::Skipped, details)
    }

    /// Pass when `holds`, otherwise fail with `witness`.
    pub fn verdict(
        name: impl Into<String>,
        holds: bool,
        details: impl Into<String>,
        witness: Option<String>,
    ) -> Self {
        if holds {
            Self::pass(name, details)
        } else {
            Self::fail(name, details, witness.unwrap_or_default())
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

/// Echo of the configuration a report was produced with.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConfigEcho {
    pub eta: String,
    pub c: String,
    pub relation: String,
    pub max_param_degree: u8,
    pub sample_count: usize,
    pub max_sample_degree: u32,
    pub coefficient_bound: u32,
    pub rng_seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub config: ConfigEcho,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Sorts checks by name and tallies the summary.
    pub fn new(config: ConfigEcho, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        VerificationReport {
            config,
            checks,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring: k[x,y,z,t]/({})", self.config.relation)?;
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            writeln!(
                f,
                "{:<7} {:<width$}  {}",
                c.status.to_string(),
                c.name,
                c.details
            )?;
            if let Some(w) = &c.witness {
                writeln!(f, "        {:<width$}  witness: {}", "", w)?;
            }
        }
        write!(
            f,
            "{} passed, {} failed, {} skipped",
            self.summary.pass, self.summary.fail, self.summary.skipped
        )
    }
}
