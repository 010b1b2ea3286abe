//! Builds a verification report and prints it as JSON and CSV.

use stieltjes::registry::{run_suite, SamplePlan};
use stieltjes::report::ReportDocument;
use stieltjes::EvalContext;

fn main() -> stieltjes::Result<()> {
    let ctx = EvalContext::default();
    let cases = run_suite(Some("I-7.6"), SamplePlan::Full, &ctx)?;
    let doc = ReportDocument::new(ctx, cases);
    print!("{}", doc.to_json());
    print!("{}", doc.to_csv());
    Ok(())
}
