//! Executable verification: theorem predicates, idempotent search, and
//! catalog runs.
//!
//! Each structural claim about LCD/MDS group codes is exposed as a check
//! producing a [`CheckReport`] with a four-valued verdict. Most claims are
//! implications, so "hypothesis not met" (`Vacuous`) is reported separately
//! from "conclusion verified" (`Holds`); a `Fails` verdict always carries a
//! concrete counterexample witness in its evidence and is never swallowed.

mod catalog;
mod checks;

pub use catalog::{default_catalog, run_catalog, Catalog, CatalogEntry, CatalogOutcome, CheckSelection};
pub use checks::{
    check_central_from_normal, check_components_generate_normal, check_density_obstruction,
    check_distance_bounds, check_mds_generation, check_pgroup_obstruction, check_rank_nullity,
    check_sylow_obstruction, check_sylow_support_exclusion, construct_lcd_from_subgroup,
    run_instance_checks, SylowHypothesis,
};

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError};
use crate::code::sat_pow;
use crate::field::FieldSpec;
use crate::group::{Group, GroupError};

/// Default cap on candidates per enumeration.
pub const DEFAULT_SEARCH_BUDGET: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabError {
    #[error("search space of {needed} candidates exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Code(#[from] crate::code::CodeError),
    #[error("cannot parse catalog: {0}")]
    CatalogParse(String),
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
}

/// Tags for the verifiable claims. `Catalog` marks entry-level failures
/// (e.g. an unparseable catalog line), not a theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[allow(clippy::upper_case_acronyms)]
pub enum TheoremId {
    T1, T2, T3, T4, T5, T6, T7, T8, T9, T10, T11,
    C1, C2, C3, C4, C5, C6, C7, C8, C9,
    #[serde(rename = "CATALOG")]
    Catalog,
}

impl TheoremId {
    /// Every theorem/corollary tag, in report order.
    pub const ALL: [TheoremId; 20] = [
        TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4, TheoremId::T5,
        TheoremId::T6, TheoremId::T7, TheoremId::T8, TheoremId::T9, TheoremId::T10,
        TheoremId::T11, TheoremId::C1, TheoremId::C2, TheoremId::C3, TheoremId::C4,
        TheoremId::C5, TheoremId::C6, TheoremId::C7, TheoremId::C8, TheoremId::C9,
    ];
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let TheoremId::Catalog = self {
            return write!(f, "CATALOG");
        }
        write!(f, "{self:?}")
    }
}

impl FromStr for TheoremId {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, LabError> {
        let up = s.trim().to_ascii_uppercase();
        TheoremId::ALL
            .iter()
            .find(|t| t.to_string() == up)
            .copied()
            .ok_or(LabError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    Vacuous,
    BudgetExceeded,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Vacuous => "vacuous",
            Verdict::BudgetExceeded => "budget-exceeded",
        };
        write!(f, "{s}")
    }
}

/// What a check ran on: group descriptor, field spec, and the witness
/// element(s) when the check concerns a specific z or subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckInstance {
    pub group: String,
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

/// Outcome of one check on one instance.
///
/// `elapsed` is intentionally excluded from serialization and equality:
/// report JSON must be byte-identical across identical runs, and reports
/// re-parsed from JSON must compare equal to the in-memory originals.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub theorem: TheoremId,
    pub instance: CheckInstance,
    pub verdict: Verdict,
    pub evidence: serde_json::Value,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl PartialEq for CheckReport {
    fn eq(&self, other: &Self) -> bool {
        self.theorem == other.theorem
            && self.instance == other.instance
            && self.verdict == other.verdict
            && self.evidence == other.evidence
    }
}
impl Eq for CheckReport {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrategyKind {
    /// Scan all q^n coefficient vectors.
    Full,
    /// Scan λ·Σ_{h∈H} h over all subgroups H and nonzero λ.
    SubgroupSums,
    /// Scan the span of conjugacy-class sums (complete for central
    /// symmetric idempotents).
    ClassSums,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStrategy {
    pub kind: StrategyKind,
    pub budget: u64,
}

impl SearchStrategy {
    pub fn full(budget: u64) -> Self {
        SearchStrategy { kind: StrategyKind::Full, budget }
    }
}

/// All z with z = z² = ẑ inside the strategy's search space, deduplicated
/// and sorted by (weight, lexicographic coefficients).
pub fn enumerate_symmetric_idempotents(
    field: &FieldSpec,
    group: &Group,
    strategy: &SearchStrategy,
) -> Result<Vec<AlgebraElement>, LabError> {
    let mut found = match strategy.kind {
        StrategyKind::Full => full_scan(field, group, strategy.budget)?,
        StrategyKind::SubgroupSums => subgroup_sum_scan(field, group)?,
        StrategyKind::ClassSums => class_sum_scan(field, group, strategy.budget)?,
    };
    found.sort_by(|a, b| {
        (a.weight(), a.coeff_reps()).cmp(&(b.weight(), b.coeff_reps()))
    });
    found.dedup_by(|a, b| a.coeff_reps() == b.coeff_reps());
    Ok(found)
}

/// Nominal search-space size of a strategy on an instance (the quantity the
/// budget is compared against).
pub fn strategy_space(field: &FieldSpec, group: &Group, kind: StrategyKind) -> u128 {
    match kind {
        StrategyKind::Full => sat_pow(field.order(), group.order()),
        StrategyKind::ClassSums => sat_pow(field.order(), group.conjugacy_classes().len()),
        // one candidate per (subgroup, nonzero scalar); subgroup count is
        // unknown without enumerating, so report the scalar factor only
        StrategyKind::SubgroupSums => (field.order() - 1) as u128,
    }
}

/// Full scan. Only self-adjoint vectors can qualify, so the enumeration
/// walks assignments that are constant on {g, g⁻¹} orbits; the budget is
/// still charged against the nominal q^n space.
fn full_scan(field: &FieldSpec, group: &Group, budget: u64) -> Result<Vec<AlgebraElement>, LabError> {
    let n = group.order();
    let q = field.order();
    let nominal = sat_pow(q, n);
    if nominal > budget as u128 {
        return Err(LabError::BudgetExceeded { needed: nominal, budget });
    }
    // orbit classes of the inversion map
    let mut orbit_of = vec![usize::MAX; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for g in 0..n {
        if orbit_of[g] != usize::MAX {
            continue;
        }
        let gi = group.inv(g);
        let members = if gi == g { vec![g] } else { vec![g, gi] };
        for &m in &members {
            orbit_of[m] = orbits.len();
        }
        orbits.push(members);
    }
    let m = orbits.len();
    let mut digits = vec![0u64; m];
    let mut out = Vec::new();
    let candidate_zero = AlgebraElement::zero(field, group);
    out.push(candidate_zero); // z = 0 always qualifies
    let total = sat_pow(q, m) as u64;
    let mut coeffs = vec![0u64; n];
    for _ in 1..total {
        let mut i = m;
        loop {
            i -= 1;
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
        }
        for (oi, orbit) in orbits.iter().enumerate() {
            for &g in orbit {
                coeffs[g] = digits[oi];
            }
        }
        let z = AlgebraElement::from_coeff_reps(field, group, coeffs.clone())
            .expect("digits are canonical reps");
        if z.is_idempotent() {
            out.push(z);
        }
    }
    Ok(out)
}

fn subgroup_sum_scan(field: &FieldSpec, group: &Group) -> Result<Vec<AlgebraElement>, LabError> {
    let subgroups = group.all_subgroups(None)?;
    let mut out = vec![AlgebraElement::zero(field, group)];
    for h in &subgroups {
        for lambda in field.nonzero_elements() {
            let z = AlgebraElement::subgroup_sum(field, h, &lambda)?;
            if z.is_symmetric_idempotent() {
                out.push(z);
            }
        }
    }
    Ok(out)
}

fn class_sum_scan(field: &FieldSpec, group: &Group, budget: u64) -> Result<Vec<AlgebraElement>, LabError> {
    let classes = group.conjugacy_classes();
    let q = field.order();
    let c = classes.len();
    let nominal = sat_pow(q, c);
    if nominal > budget as u128 {
        return Err(LabError::BudgetExceeded { needed: nominal, budget });
    }
    let n = group.order();
    let total = nominal as u64;
    let mut digits = vec![0u64; c];
    let mut out = vec![AlgebraElement::zero(field, group)];
    let mut coeffs = vec![0u64; n];
    for _ in 1..total {
        let mut i = c;
        loop {
            i -= 1;
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
        }
        for (ci, class) in classes.iter().enumerate() {
            for &g in class {
                coeffs[g] = digits[ci];
            }
        }
        let z = AlgebraElement::from_coeff_reps(field, group, coeffs.clone())
            .expect("digits are canonical reps");
        if z.is_self_adjoint_element() && z.is_idempotent() {
            out.push(z);
        }
    }
    Ok(out)
}
