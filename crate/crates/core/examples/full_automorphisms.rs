//! Labelled, colour-preserving and full automorphism groups of one graph,
//! plus its DOT rendering.
//!
//! `cargo run --example full_automorphisms -- out.dot` writes the graph.

use std::sync::Arc;

use cayley::{colour_group, dihedral, full_aut, left_translations, CayleyGraph, GeneratingSet};

fn main() -> cayley::Result<()> {
    let g = Arc::new(dihedral(4)?);
    let s = GeneratingSet::parse(g, "r,s")?;
    let graph = CayleyGraph::new(&s);
    println!(
        "Cay(D4, {{{}}}): {} vertices, {} edges",
        s.spec(),
        graph.vertex_count(),
        graph.edge_count()
    );
    let labelled = left_translations(&graph);
    let colour = colour_group(&graph)?;
    let full = full_aut(&graph)?;
    println!(
        "labelled {}  colour {}  full {}",
        labelled.order(),
        colour.order(),
        full.order()
    );

    let k = CayleyGraph::new(&GeneratingSet::full(graph.genset().group().clone())?);
    let full_k = full_aut(&k)?;
    println!(
        "complete graph K8: |Aut| = {} (explicit: {})",
        full_k.order(),
        full_k.is_explicit()
    );

    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, graph.to_dot())?;
        println!("wrote {path}");
    }
    Ok(())
}
