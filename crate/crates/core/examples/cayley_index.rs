//! Cayley index of small groups: the least `[Aut(Cay(G,S)) : G]` over all
//! symmetric generating sets.

use std::sync::Arc;

use cayley::rigidity::{SearchMode, SearchOptions};
use cayley::{build_group, cayley_index_search, index_of, GeneratingSet};

fn main() -> cayley::Result<()> {
    let g = Arc::new(build_group("cyclic:8")?);
    let s = GeneratingSet::parse(g, "1")?;
    let r = index_of(&s)?;
    println!(
        "cycle C8: |Aut| = {}, index {}",
        r.full_aut_order, r.cayley_index
    );

    for spec in [
        "cyclic:2",
        "cyclic:5",
        "abelian:2,2",
        "cyclic:6",
        "q8",
        "symmetric:3",
    ] {
        let g = Arc::new(build_group(spec)?);
        let opts = SearchOptions {
            mode: SearchMode::Exhaustive,
            ..SearchOptions::default()
        };
        let r = cayley_index_search(&g, opts)?;
        println!(
            "{spec:<12} best {:>3} with S = {{{}}} ({} sets)",
            r.best_index, r.witness_genset, r.sets_examined
        );
    }

    let g = Arc::new(build_group("cyclic:30")?);
    let opts = SearchOptions {
        mode: SearchMode::Sampled,
        budget: 200,
        seed: 7,
        ..SearchOptions::default()
    };
    let r = cayley_index_search(&g, opts)?;
    println!(
        "cyclic:30 sampled (seed 7): best {} with S = {{{}}}",
        r.best_index, r.witness_genset
    );
    Ok(())
}
