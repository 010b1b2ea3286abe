//! Exponentially regularized log sums and a Ramanujan-summed series.

use stieltjes::regsum::{abel_exp_limit, exp_log_constant, ramanujan_sum_convergent};
use stieltjes::zeta::{alt_zeta_deriv, riemann_zeta_deriv};
use stieltjes::EvalContext;

fn main() -> stieltjes::Result<()> {
    let ctx = EvalContext::default();
    for k in 0..3 {
        let r = abel_exp_limit(k, &ctx)?;
        let eta = alt_zeta_deriv(1, -(k as f64), &ctx)?.value;
        println!("lim sum (-1)^n n^{k} e^(-nz) log n = {:.15e} (err {:.1e});  eta'(-{k}) = {eta:.15e}", r.value, r.err_estimate);
    }
    let c = exp_log_constant(&ctx)?;
    println!("constant term of sum e^(-nz) log n = {:.15e};  -zeta'(0) = {:.15e}", c.value, -riemann_zeta_deriv(1, 0.0, &ctx)?.value);
    let r = ramanujan_sum_convergent(|t| t.ln() / (t * t), &ctx)?;
    println!("Ramanujan sum of log n / n^2 = {:.15e}", r.value);
    Ok(())
}
