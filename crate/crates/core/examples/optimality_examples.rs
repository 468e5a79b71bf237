//! The examples showing the ball radii cannot be lowered.

use cayley::rigidity::{
    optimality_example_h, optimality_example_k, optimality_example_product, optimality_example_q8,
};

fn main() -> cayley::Result<()> {
    for (m, n) in [(3, 3), (3, 4), (4, 5)] {
        let r = optimality_example_product(m, n)?;
        println!(
            "Z/{m} x Z/{n}: |xi_S| = {}, |xi_S^<=2| = {}",
            r.xi_s_order, r.xi_ball2_order
        );
    }
    for n in 1..=2 {
        let r = optimality_example_q8(n)?;
        println!(
            "Q8 x (Z/2)^{n}: mixed map in xi_S^<=2: {}, in xi_G: {}",
            r.mixed_map_in_ball2, r.mixed_map_in_xi_group
        );
    }
    for n in 2..=5 {
        let r = optimality_example_h(n)?;
        println!(
            "H_{n} ({:?}): eta in xi_S^<=2: {}, |xi_S^<=3| = {}",
            r.case, r.eta_in_ball2, r.xi_ball3_order
        );
    }
    for n in 1..=2 {
        let r = optimality_example_k(n)?;
        println!(
            "K_{n} ({:?}): eta in xi_T: {}, |xi_T^<=3| = {}",
            r.case, r.eta_in_xi_t, r.xi_ball3_order
        );
    }
    Ok(())
}
