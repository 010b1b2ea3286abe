//! Fourier-type representation of the first Stieltjes constant on (0, 1).

use stieltjes::repr::{gamma1_rep, Path};
use stieltjes::zeta::stieltjes as gamma_n;
use stieltjes::EvalContext;

fn main() -> stieltjes::Result<()> {
    let ctx = EvalContext::default();
    for x in [0.1, 0.25, 0.5, 0.75, 0.9] {
        let exact = gamma_n(1, x, &ctx)?.value;
        let expansion = gamma1_rep(x, Path::StieltjesExpansion, &ctx)?;
        let abel = gamma1_rep(x, Path::Abel, &ctx)?;
        println!(
            "x = {x}: direct {exact:.15e}  expansion {:.15e}  abel {:.15e} (err {:.1e})",
            expansion.value, abel.value, abel.err_estimate
        );
    }
    Ok(())
}
