//! Catalog of checkable identities and the suite runner.
//!
//! Each entry pairs two independent evaluations of the same quantity. A case
//! passes when `|lhs − rhs| ≤ max(default_tolerance, 4 (lhs.err + rhs.err))`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use crate::context::{EvalContext, RealValue};
use crate::error::{Error, Result};

mod catalog;
mod support;

/// Free parameters of a case, keyed by name.
pub type Params = BTreeMap<String, f64>;

#[derive(Debug, Clone, Serialize)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub aliases: &'static [&'static str],
    pub title: &'static str,
    pub reference: &'static str,
    pub param_spec: &'static str,
    pub default_tolerance: f64,
}

/// One evaluated instance of an identity.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct IdentityCase {
    pub id: String,
    pub params: Params,
    #[serde(with = "crate::report::sig17")]
    pub lhs: f64,
    #[serde(with = "crate::report::sig17")]
    pub rhs: f64,
    #[serde(with = "crate::report::sig17")]
    pub residual: f64,
    #[serde(with = "crate::report::sig17")]
    pub tol: f64,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SamplePlan {
    /// One default parameter point per identity.
    Smoke,
    /// The full sampling grid of every identity.
    Full,
}

/// Both sides of an identity at one parameter point.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub lhs: RealValue,
    pub rhs: RealValue,
    pub note: Option<String>,
}

impl Evaluation {
    pub fn new(lhs: RealValue, rhs: RealValue) -> Self {
        Evaluation { lhs, rhs, note: None }
    }

    pub fn with_note(mut self, note: String) -> Self {
        self.note = Some(note);
        self
    }
}

type EvalFn = Box<dyn Fn(&Params, &EvalContext) -> Result<Evaluation> + Send + Sync>;

pub(crate) struct Entry {
    pub desc: IdentityDescriptor,
    /// First point is the smoke point.
    pub grid: Vec<Params>,
    pub eval: EvalFn,
}

fn catalog() -> &'static [Entry] {
    static CATALOG: OnceLock<Vec<Entry>> = OnceLock::new();
    CATALOG.get_or_init(catalog::build)
}

/// Every identity in catalog order.
pub fn list_identities() -> Vec<IdentityDescriptor> {
    catalog().iter().map(|e| e.desc.clone()).collect()
}

fn find(id: &str) -> Result<&'static Entry> {
    catalog()
        .iter()
        .find(|e| e.desc.id == id || e.desc.aliases.contains(&id))
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Descriptor for an id or one of its aliases.
pub fn lookup(id: &str) -> Result<IdentityDescriptor> {
    find(id).map(|e| e.desc.clone())
}

/// Default parameter points of an identity for the given plan.
pub fn sample_points(id: &str, plan: SamplePlan) -> Result<Vec<Params>> {
    let e = find(id)?;
    Ok(match plan {
        SamplePlan::Smoke => e.grid[..1].to_vec(),
        SamplePlan::Full => e.grid.clone(),
    })
}

fn run_case(entry: &Entry, params: Params, ctx: &EvalContext) -> Result<IdentityCase> {
    let start = Instant::now();
    let id = entry.desc.id.to_string();
    match (entry.eval)(&params, ctx) {
        Ok(ev) => {
            let residual = (ev.lhs.value - ev.rhs.value).abs();
            let tol = entry.desc.default_tolerance.max(4.0 * (ev.lhs.err_estimate + ev.rhs.err_estimate));
            Ok(IdentityCase {
                id,
                params,
                lhs: ev.lhs.value,
                rhs: ev.rhs.value,
                residual,
                tol,
                pass: residual <= tol,
                note: ev.note,
                error: None,
                elapsed: start.elapsed(),
            })
        }
        Err(e @ Error::Domain { .. }) => Err(e),
        Err(e) => Ok(IdentityCase {
            id,
            params,
            lhs: f64::NAN,
            rhs: f64::NAN,
            residual: f64::NAN,
            tol: entry.desc.default_tolerance,
            pass: false,
            note: None,
            error: Some(e.to_string()),
            elapsed: start.elapsed(),
        }),
    }
}

/// Evaluates one identity. Parameters missing from `params` take the smoke-point values.
pub fn check(id: &str, params: &Params, ctx: &EvalContext) -> Result<IdentityCase> {
    ctx.validate()?;
    let entry = find(id)?;
    let mut full = entry.grid[0].clone();
    for (k, v) in params {
        if !full.contains_key(k) {
            return Err(Error::domain("check", format!("{} has no parameter `{k}`", entry.desc.id)));
        }
        full.insert(k.clone(), *v);
    }
    run_case(entry, full, ctx)
}

/// Runs every identity whose id starts with `filter`, in catalog order.
///
/// Per-case failures, including domain errors, are recorded in the case and do
/// not abort the suite.
pub fn run_suite(filter: Option<&str>, plan: SamplePlan, ctx: &EvalContext) -> Result<Vec<IdentityCase>> {
    ctx.validate()?;
    let jobs: Vec<(&Entry, Params)> = catalog()
        .iter()
        .filter(|e| filter.is_none_or(|f| e.desc.id.starts_with(f)))
        .flat_map(|e| {
            let pts = match plan {
                SamplePlan::Smoke => &e.grid[..1],
                SamplePlan::Full => &e.grid[..],
            };
            pts.iter().map(move |p| (e, p.clone()))
        })
        .collect();
    Ok(jobs
        .into_par_iter()
        .map(|(e, p)| {
            run_case(e, p.clone(), ctx).unwrap_or_else(|err| IdentityCase {
                id: e.desc.id.to_string(),
                params: p,
                lhs: f64::NAN,
                rhs: f64::NAN,
                residual: f64::NAN,
                tol: e.desc.default_tolerance,
                pass: false,
                note: None,
                error: Some(err.to_string()),
                elapsed: Duration::ZERO,
            })
        })
        .collect())
}

#[cfg(test)]
mod tests;
