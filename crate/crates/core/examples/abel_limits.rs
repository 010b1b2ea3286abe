//! Abel-regularized trigonometric series with log-power weights.

use stieltjes::regsum::{abel_trig_limit, TrigKind, TrigSeriesSpec};
use stieltjes::repr::hansen_trig_closed;
use stieltjes::EvalContext;

fn main() -> stieltjes::Result<()> {
    let ctx = EvalContext::default();
    for j in 0..3 {
        for kind in [TrigKind::Cos, TrigKind::Sin] {
            let spec = TrigSeriesSpec::new(j, 0.3, 0.0, 0.0, kind);
            let r = abel_trig_limit(&spec, &ctx)?;
            let closed = hansen_trig_closed(j, 0.3, 0.0, kind, &ctx)?;
            println!(
                "sum log^{j} n {kind:?}(2 pi n 0.3): abel {:.12e} (err {:.1e}, {} samples)  closed form {:.12e}",
                r.value,
                r.err_estimate,
                r.samples.len(),
                closed.value
            );
        }
    }
    Ok(())
}
