//! Catalog files: batches of (group, field, checks) instances.
//!
//! A catalog is a JSON array of entries. Each entry names a group (builtin
//! descriptor or Cayley-table file path), a field spec string, an optional
//! check selection (defaults to all), and an optional per-entry budget.
//! Entry-level failures (unparseable group/field) become reports with the
//! CATALOG tag and a `fails` verdict — recorded, never thrown — so one bad
//! entry fails the aggregate without stopping the run.

use std::path::Path;

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::json;

use super::checks::run_instance_checks;
use super::{CheckInstance, CheckReport, LabError, TheoremId, Verdict};
use crate::field::FieldSpec;
use crate::group::Group;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckSelection {
    All,
    Tags(Vec<TheoremId>),
}

impl Serialize for CheckSelection {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CheckSelection::All => s.serialize_str("all"),
            CheckSelection::Tags(tags) => {
                let names: Vec<String> = tags.iter().map(|t| t.to_string()).collect();
                names.serialize(s)
            }
        }
    }
}

impl<'de> Deserialize<'de> for CheckSelection {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::String(s) if s.eq_ignore_ascii_case("all") => {
                Ok(CheckSelection::All)
            }
            serde_json::Value::Array(items) => {
                let mut tags = Vec::with_capacity(items.len());
                for item in items {
                    let s = item
                        .as_str()
                        .ok_or_else(|| D::Error::custom("check tags must be strings"))?;
                    tags.push(s.parse::<TheoremId>().map_err(D::Error::custom)?);
                }
                Ok(CheckSelection::Tags(tags))
            }
            other => Err(D::Error::custom(format!("bad checks selection: {other}"))),
        }
    }
}

impl CheckSelection {
    pub fn tags(&self) -> Vec<TheoremId> {
        match self {
            CheckSelection::All => TheoremId::ALL.to_vec(),
            CheckSelection::Tags(tags) => tags.clone(),
        }
    }
}

fn default_checks() -> CheckSelection {
    CheckSelection::All
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub group: String,
    pub field: String,
    #[serde(default = "default_checks")]
    pub checks: CheckSelection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Catalog, LabError> {
        serde_json::from_str(text).map_err(|e| LabError::CatalogParse(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Catalog, LabError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| LabError::CatalogParse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

/// The six small groups exercised against GF(2) and GF(3), all checks.
pub fn default_catalog() -> Catalog {
    let mut entries = Vec::new();
    for group in ["S3", "A4", "C8", "C4", "D4", "C3xC3"] {
        for field in ["2", "3"] {
            entries.push(CatalogEntry {
                group: group.to_string(),
                field: field.to_string(),
                checks: CheckSelection::All,
                budget: None,
            });
        }
    }
    Catalog { entries }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogOutcome {
    pub reports: Vec<CheckReport>,
    /// True iff no report has a `fails` verdict.
    pub aggregate_holds: bool,
    /// True iff any search was budget-limited or ran an incomplete strategy.
    pub partial: bool,
}

/// Group strings are tried as builtin descriptors first, then as
/// Cayley-table file paths.
fn resolve_group(s: &str) -> Result<Group, String> {
    match Group::from_descriptor(s) {
        Ok(g) => Ok(g),
        Err(desc_err) => {
            let path = Path::new(s);
            if s.contains('/') || s.ends_with(".json") || path.exists() {
                crate::group::load_cayley_table_json(path).map_err(|e| e.to_string())
            } else {
                Err(desc_err.to_string())
            }
        }
    }
}

fn entry_error_report(entry: &CatalogEntry, message: String) -> CheckReport {
    CheckReport {
        theorem: TheoremId::Catalog,
        instance: CheckInstance {
            group: entry.group.clone(),
            field: entry.field.clone(),
            witness: None,
        },
        verdict: Verdict::Fails,
        evidence: json!({ "error": message }),
        elapsed: std::time::Duration::ZERO,
    }
}

/// Execute every selected check on every entry, in catalog order then
/// canonical tag order. Per-entry budgets override `default_budget`.
pub fn run_catalog(catalog: &Catalog, default_budget: u64) -> CatalogOutcome {
    let mut reports = Vec::new();
    for entry in &catalog.entries {
        let budget = entry.budget.unwrap_or(default_budget);
        let group = match resolve_group(&entry.group) {
            Ok(g) => g,
            Err(e) => {
                reports.push(entry_error_report(entry, e));
                continue;
            }
        };
        let field = match FieldSpec::parse(&entry.field) {
            Ok(f) => f,
            Err(e) => {
                reports.push(entry_error_report(entry, e.to_string()));
                continue;
            }
        };
        reports.extend(run_instance_checks(&group, &field, &entry.checks.tags(), budget));
    }
    let aggregate_holds = reports.iter().all(|r| r.verdict != Verdict::Fails);
    let partial = reports.iter().any(|r| {
        r.verdict == Verdict::BudgetExceeded
            || r.evidence["search"]["complete"] == json!(false)
            || r.evidence["witnesses_budget_skipped"].as_u64().unwrap_or(0) > 0
    });
    CatalogOutcome { reports, aggregate_holds, partial }
}

impl Default for Catalog {
    fn default() -> Self {
        default_catalog()
    }
}
