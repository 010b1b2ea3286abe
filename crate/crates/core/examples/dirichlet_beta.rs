//! Dirichlet beta and alternating zeta functions with derivatives.

use stieltjes::zeta::{alt_zeta_deriv, dirichlet_beta_deriv};
use stieltjes::EvalContext;

fn main() -> stieltjes::Result<()> {
    let ctx = EvalContext::default();
    for s in [0.0, 1.0, 2.0] {
        for k in 0..2 {
            let b = dirichlet_beta_deriv(k, s, &ctx)?.value;
            let a = alt_zeta_deriv(k, s, &ctx)?.value;
            println!("s = {s}, k = {k}: beta {b:.15e}  eta {a:.15e}");
        }
    }
    Ok(())
}
