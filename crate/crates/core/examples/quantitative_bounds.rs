//! Checks that `ξ` of the ball `S^{≤k}` already equals `ξ_G`, where `k` is
//! 1, 2 or 3 depending on the case of the group.

use std::sync::Arc;

use cayley::families::quantsuite;
use cayley::{verify_quantitative, GeneratingSet};

fn main() -> cayley::Result<()> {
    for (spec, gens) in quantsuite() {
        let g = Arc::new(spec.build()?);
        let s = GeneratingSet::parse(g, &gens)?;
        let r = verify_quantitative(&s)?;
        println!(
            "{} {spec} S={{{gens}}} case={:?} k={} |S^<=k|={} |xi_ball|={} |xi_G|={}",
            if r.pass { "PASS" } else { "FAIL" },
            r.case,
            r.radius,
            r.ball_size,
            r.xi_ball_order,
            r.xi_group_order
        );
    }
    Ok(())
}
