//! Every generating set of Q8 has the same eight colour-preserving
//! automorphisms fixing 1: the sign flips on i, j and k.

use std::sync::Arc;

use cayley::aut::ALL_SIGN_TRIPLES;
use cayley::{colour_group, phi_eps, quaternion, xi_stabilizer, CayleyGraph, GeneratingSet};

fn main() -> cayley::Result<()> {
    let q8 = Arc::new(quaternion());
    for gens in ["i,j", "i,k", "i,j,k", "-1,i,j"] {
        let s = GeneratingSet::parse(q8.clone(), gens)?;
        let graph = CayleyGraph::new(&s);
        let xi = xi_stabilizer(&graph)?;
        let big = colour_group(&graph)?;
        println!(
            "S = {{{}}}  |xi_S| = {}  |Xi_S| = {}",
            s.spec(),
            xi.order(),
            big.order()
        );
    }

    let s = GeneratingSet::parse(q8.clone(), "i,j")?;
    let xi = xi_stabilizer(&CayleyGraph::new(&s))?;
    for eps in ALL_SIGN_TRIPLES {
        let phi = phi_eps(&q8, eps)?;
        let images: Vec<&str> = ["i", "j", "k"]
            .iter()
            .map(|n| q8.name(phi.apply(q8.resolve(n).unwrap())))
            .collect();
        println!(
            "{eps:?}: i,j,k -> {}  in xi: {}",
            images.join(","),
            xi.contains(&phi)
        );
    }
    Ok(())
}
