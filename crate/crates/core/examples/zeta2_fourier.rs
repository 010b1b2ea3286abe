//! Fourier expansion of the second s-derivative of the Hurwitz zeta function at s = 0.

use stieltjes::repr::zeta2_fourier;
use stieltjes::zeta::hurwitz_zeta_deriv;
use stieltjes::EvalContext;

fn main() -> stieltjes::Result<()> {
    let ctx = EvalContext::default();
    for u in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let f = zeta2_fourier(u, &ctx)?;
        let e = hurwitz_zeta_deriv(2, 0.0, u, &ctx)?;
        println!("u = {u}: fourier {:.15e}  engine {:.15e}  diff {:.1e}", f.value, e.value, (f.value - e.value).abs());
    }
    Ok(())
}
