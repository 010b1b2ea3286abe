//! Generalized Stieltjes constants by direct series and by x-differentiation.

use stieltjes::zeta::{stieltjes as gamma_n, stieltjes_via_xderiv};
use stieltjes::EvalContext;

fn main() -> stieltjes::Result<()> {
    let ctx = EvalContext::default();
    for n in 0..4 {
        for x in [0.25, 0.5, 1.0, 3.0] {
            let direct = gamma_n(n, x, &ctx)?;
            let xd = stieltjes_via_xderiv(n, x, &ctx)?;
            println!(
                "gamma_{n}({x}) = {:.15e}  via x-derivative {:.15e}  diff {:.1e}",
                direct.value,
                xd.value,
                (direct.value - xd.value).abs()
            );
        }
    }
    Ok(())
}
