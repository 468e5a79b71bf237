//! Named families of groups and (group, generating set) pairs used by the
//! CLI sweeps and the test suites.

use crate::error::{Error, Result};
use crate::groupspec::GroupSpec;

/// Every case of the classification, with several groups each.
pub fn smallsuite() -> Vec<GroupSpec> {
    let mut specs: Vec<GroupSpec> = (3..=12).map(GroupSpec::Cyclic).collect();
    specs.extend((1..=4).map(|k| GroupSpec::Abelian(vec![2; k])));
    specs.extend(
        [
            "abelian:4,2",
            "abelian:3,3",
            "abelian:6,2",
            "q8",
            "product:(q8)x(abelian:2)",
            "product:(q8)x(abelian:2,2)",
            "dic:cyclic:6@3",
            "dic:abelian:4,2@(0,1)",
            "hgroup:3",
            "hgroup:4",
            "hgroup:5",
            "symmetric:3",
            "dihedral:4",
            "alternating:4",
            "symmetric:4",
        ]
        .iter()
        .map(|s| s.parse().expect("suite specs are well formed")),
    );
    specs
}

/// Pairs `(group spec, generating set)` exercising every radius of the
/// ball bound. Generating sets are symmetrized when used.
pub fn quantsuite() -> Vec<(GroupSpec, String)> {
    [
        ("abelian:2,2,2", "(1,0,0),(0,1,0),(0,0,1)"),
        ("cyclic:6", "1"),
        ("abelian:3,3", "(1,0),(0,1)"),
        ("product:(q8)x(abelian:2)", "(i,1),(j,1),(k,1)"),
        ("hgroup:3", "s1,s2,s3"),
        (
            "product:(hgroup:3)x(abelian:2)",
            "(s1,0),(s2,0),(s3,0),(1,1)",
        ),
        ("hgroup:4", "s1,s2,s3,s4"),
        ("hgroup:5", "s1,s2,s3,s4,s5"),
        ("symmetric:4", "(1 2),(1 2 3 4)"),
    ]
    .iter()
    .map(|(g, s)| {
        (
            g.parse().expect("suite specs are well formed"),
            s.to_string(),
        )
    })
    .collect()
}

pub fn family(name: &str) -> Result<Vec<GroupSpec>> {
    match name {
        "smallsuite" => Ok(smallsuite()),
        "quantsuite" => Ok(quantsuite().into_iter().map(|(g, _)| g).collect()),
        _ => Err(Error::malformed(format!(
            "unknown family '{name}' (known: smallsuite, quantsuite)"
        ))),
    }
}
