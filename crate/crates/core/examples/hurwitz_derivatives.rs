//! Hurwitz zeta function and its s-derivatives at a few points.

use stieltjes::zeta::{hurwitz_zeta_deriv, riemann_zeta_deriv};
use stieltjes::EvalContext;

fn main() -> stieltjes::Result<()> {
    let ctx = EvalContext::default();
    for (s, x) in [(2.0, 0.5), (0.0, 0.3), (-1.0, 0.25), (-3.5, 1.7)] {
        for k in 0..3 {
            let v = hurwitz_zeta_deriv(k, s, x, &ctx)?;
            println!("d^{k}/ds^{k} zeta(s={s}, x={x}) = {:.15e}  (err {:.1e})", v.value, v.err_estimate);
        }
    }
    println!("zeta'(-1) = {:.15e}", riemann_zeta_deriv(1, -1.0, &ctx)?.value);
    Ok(())
}
