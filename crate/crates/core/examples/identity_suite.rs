//! Runs the identity registry on the smoke plan and prints one line per case.

use stieltjes::registry::{list_identities, run_suite, SamplePlan};
use stieltjes::EvalContext;

fn main() -> stieltjes::Result<()> {
    let filter = std::env::args().nth(1);
    println!("{} identities registered", list_identities().len());
    let cases = run_suite(filter.as_deref(), SamplePlan::Smoke, &EvalContext::default())?;
    for c in &cases {
        println!("{:<14} {:<5} residual {:.2e} tol {:.0e}", c.id, if c.pass { "pass" } else { "FAIL" }, c.residual, c.tol);
    }
    Ok(())
}
