//! Power series in odd zeta values against their digamma closed form.

use stieltjes::repr::zeta_odd_power_series;
use stieltjes::EvalContext;

fn main() -> stieltjes::Result<()> {
    let ctx = EvalContext::default();
    for x in [0.1, 0.5, 0.9] {
        let r = zeta_odd_power_series(x, &ctx)?;
        println!("x = {x}: series {:.15e}  closed form {:.15e}  residual {:.1e}", r.series.value, r.closed_form.value, r.residual());
    }
    Ok(())
}
