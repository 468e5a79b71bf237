//! The textual group specifications understood by the CLI.

use cayley::{classify, GroupSpec};

fn main() -> cayley::Result<()> {
    for text in [
        "cyclic:12",
        "abelian:4,2",
        "q8",
        "dic:cyclic:6@3",
        "product:(q8)x(abelian:2,2)",
        "hgroup:4",
        "symmetric:4",
        "pres:<a,b|a^3,b^2,(a b)^2>",
    ] {
        let spec: GroupSpec = text.parse()?;
        let g = spec.build()?;
        println!(
            "{:<30} order {:>3}  abelian {:<5}  centre {:>2}  {:?}",
            spec.to_string(),
            g.order(),
            g.is_abelian(),
            g.center().len(),
            classify(&g).case
        );
    }
    Ok(())
}
