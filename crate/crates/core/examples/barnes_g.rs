//! log G(1+u) for the Barnes G-function by three routes.

use stieltjes::repr::barnes_fourier;
use stieltjes::special::log_gamma;
use stieltjes::zeta::{barnes_log_g, barnes_log_g_product};
use stieltjes::EvalContext;

fn main() -> stieltjes::Result<()> {
    let ctx = EvalContext::default();
    for u in [0.2, 0.5, 0.8] {
        let zeta = barnes_log_g(u, &ctx)?.value + log_gamma(u, &ctx)?.value;
        let product = barnes_log_g_product(u, &ctx)?.value;
        let fourier = barnes_fourier(u, &ctx)?.value;
        println!("log G(1+{u}): zeta {zeta:.15e}  product {product:.15e}  fourier {fourier:.15e}");
    }
    Ok(())
}
