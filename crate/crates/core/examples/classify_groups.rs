//! Classifies the small test suite and compares the predicted order of `ξ_G`
//! with the one found by search.

use std::sync::Arc;

use cayley::families::smallsuite;
use cayley::{classify, xi_of_group};

fn main() -> cayley::Result<()> {
    println!(
        "{:<28} {:>5}  {:<26} {:>9} {:>8}",
        "group", "|G|", "case", "predicted", "computed"
    );
    for spec in smallsuite() {
        let g = Arc::new(spec.build()?);
        let c = classify(&g);
        let xi = xi_of_group(&g)?;
        let mark = if xi.order() == c.predicted_xi_order {
            ""
        } else {
            "  MISMATCH"
        };
        println!(
            "{:<28} {:>5}  {:<26} {:>9} {:>8}{mark}",
            spec.to_string(),
            g.order(),
            format!("{:?}", c.case),
            c.predicted_xi_order,
            xi.order()
        );
    }
    Ok(())
}
