//! Verification reports and their JSON and CSV encodings.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

use crate::context::EvalContext;
use crate::registry::IdentityCase;

/// Formats a float with 17 significant digits, enough to round-trip binary64.
pub fn fmt17(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        v.to_string()
    }
}

/// Serde adapter writing floats with 17 significant digits and non-finite values as `null`.
pub mod sig17 {
    use serde::de::Deserializer;
    use serde::ser::{Error as _, Serializer};
    use serde::{Deserialize, Serialize};
    use serde_json::value::RawValue;

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if !v.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(super::fmt17(*v)).map_err(S::Error::custom)?;
        raw.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    #[serde(with = "sig17")]
    pub max_residual: f64,
}

impl Summary {
    /// Counts over `cases`; `max_residual` is NaN when any case has no residual.
    pub fn of(cases: &[IdentityCase]) -> Self {
        let passed = cases.iter().filter(|c| c.pass).count();
        let max_residual = cases.iter().map(|c| c.residual).fold(0.0, |m: f64, r| if r.is_nan() || m.is_nan() { f64::NAN } else { m.max(r) });
        Summary { total: cases.len(), passed, failed: cases.len() - passed, max_residual }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub context: EvalContext,
    pub cases: Vec<IdentityCase>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn new(context: EvalContext, cases: Vec<IdentityCase>) -> Self {
        let summary = Summary::of(&cases);
        ReportDocument { tool_version: env!("CARGO_PKG_VERSION").to_string(), context, cases, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is always serializable");
        s.push('\n');
        s
    }

    /// One row per case under the header `id,param,lhs,rhs,residual,tol,pass`.
    ///
    /// Parameters are written as `name=value` pairs joined by `;`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,param,lhs,rhs,residual,tol,pass\n");
        for c in &self.cases {
            let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                c.id,
                params.join(";"),
                fmt17(c.lhs),
                fmt17(c.rhs),
                fmt17(c.residual),
                fmt17(c.tol),
                c.pass
            );
        }
        out
    }
}

/// CSV under the header `x,value,err`.
pub fn table_csv(rows: &[(f64, f64, f64)]) -> String {
    let mut out = String::from("x,value,err\n");
    for &(x, v, e) in rows {
        let _ = writeln!(out, "{},{},{}", fmt17(x), fmt17(v), fmt17(e));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::Params;
    use std::time::Duration;

    fn case(residual: f64, pass: bool) -> IdentityCase {
        IdentityCase {
            id: "I-x".into(),
            params: Params::from([("x".to_string(), 0.5)]),
            lhs: 0.1,
            rhs: 0.1 + residual,
            residual,
            tol: 1e-9,
            pass,
            note: None,
            error: None,
            elapsed: Duration::ZERO,
        }
    }

    #[test]
    fn seventeen_digits_round_trip() {
        for v in [0.1, -1.0 / 3.0, 1e-300, 6.02214076e23] {
            let s = fmt17(v);
            assert_eq!(s.parse::<f64>().unwrap(), v);
            assert_eq!(s.split('e').next().unwrap().chars().filter(char::is_ascii_digit).count(), 17);
        }
    }

    #[test]
    fn json_round_trip_and_null_for_nan() {
        let doc = ReportDocument::new(EvalContext::default(), vec![case(1e-12, true), case(f64::NAN, false)]);
        let js = doc.to_json();
        assert!(js.contains("\"residual\": null"));
        assert!(js.contains("\"lhs\": 1.0000000000000001e-1"));
        let back: ReportDocument = serde_json::from_str(&js).unwrap();
        assert_eq!(back.cases[0], doc.cases[0]);
        assert!(back.cases[1].residual.is_nan());
        assert_eq!((back.summary.total, back.summary.passed, back.summary.failed), (2, 1, 1));
    }

    #[test]
    fn csv_layout() {
        let doc = ReportDocument::new(EvalContext::default(), vec![case(0.0, true)]);
        let csv = doc.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("id,param,lhs,rhs,residual,tol,pass"));
        assert!(lines.next().unwrap().starts_with("I-x,x=0.5,1.0000000000000001e-1,"));
        assert_eq!(table_csv(&[(0.5, 1.0, 0.0)]), "x,value,err\n5.0000000000000000e-1,1.0000000000000000e0,0.0000000000000000e0\n");
    }
}
