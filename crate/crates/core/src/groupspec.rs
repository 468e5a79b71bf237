//! The group-spec mini-language.
//!
//! ```text
//! spec    := "cyclic:" N
//!          | "abelian:" N ("," N)*       factors, first is most significant
//!          | "q8"
//!          | "dic:" spec "@" ELEMENT     A must be an abelian spec, y an element name of A
//!          | "product:" "(" spec ")" ("x" "(" spec ")")+
//!          | "hgroup:" N                 2 ≤ N ≤ 8
//!          | "symmetric:" N | "alternating:" N   1 ≤ N ≤ 6
//!          | "dihedral:" N               order 2N
//!          | "pres:" PRESENTATION        e.g. pres:< a, b | a^3, b^2, (a b)^2 >
//! ```
//!
//! Parsing and [`Display`](std::fmt::Display) round-trip, and the label of a
//! built group is its canonical spec.

use std::fmt;
use std::str::FromStr;

use crate::cayley::split_top_level;
use crate::error::{Error, Result};
use crate::group::{
    abelian, alternating, cyclic, dihedral, direct_product, generalized_dicyclic, quaternion,
    symmetric, FiniteGroup,
};
use crate::presentation::{h_group, parse_presentation, todd_coxeter};

/// Coset cap used for `pres:` specs unless the caller supplies one.
pub const DEFAULT_COSET_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Abelian(Vec<usize>),
    Q8,
    Dicyclic { base: Box<GroupSpec>, y: String },
    Product(Vec<GroupSpec>),
    HGroup(usize),
    Symmetric(usize),
    Alternating(usize),
    Dihedral(usize),
    Presentation(String),
}

fn number(s: &str, what: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::malformed(format!("{what}: '{s}' is not a non-negative integer")))
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "q8" {
            return Ok(GroupSpec::Q8);
        }
        let (kind, rest) = text
            .split_once(':')
            .ok_or_else(|| Error::malformed(format!("unknown group spec '{text}'")))?;
        Ok(match kind {
            "cyclic" => GroupSpec::Cyclic(number(rest, "cyclic")?),
            "abelian" if rest.trim().is_empty() => GroupSpec::Abelian(Vec::new()),
            "abelian" => GroupSpec::Abelian(
                rest.split(',')
                    .map(|f| number(f, "abelian"))
                    .collect::<Result<_>>()?,
            ),
            "dic" => {
                let at = rest
                    .rfind('@')
                    .ok_or_else(|| Error::malformed("dic spec needs '@y'"))?;
                let base: GroupSpec = rest[..at].parse()?;
                if !matches!(base, GroupSpec::Cyclic(_) | GroupSpec::Abelian(_)) {
                    return Err(Error::malformed(
                        "dic base must be a cyclic or abelian spec",
                    ));
                }
                GroupSpec::Dicyclic {
                    base: Box::new(base),
                    y: rest[at + 1..].trim().to_string(),
                }
            }
            "product" => {
                let factors = split_top_level(rest, 'x')
                    .into_iter()
                    .map(|f| {
                        let f = f.trim();
                        f.strip_prefix('(')
                            .and_then(|f| f.strip_suffix(')'))
                            .ok_or_else(|| {
                                Error::malformed(format!("product factor '{f}' needs parentheses"))
                            })?
                            .parse()
                    })
                    .collect::<Result<Vec<GroupSpec>>>()?;
                if factors.len() < 2 {
                    return Err(Error::malformed("product needs at least two factors"));
                }
                GroupSpec::Product(factors)
            }
            "hgroup" => GroupSpec::HGroup(number(rest, "hgroup")?),
            "symmetric" => GroupSpec::Symmetric(number(rest, "symmetric")?),
            "alternating" => GroupSpec::Alternating(number(rest, "alternating")?),
            "dihedral" => GroupSpec::Dihedral(number(rest, "dihedral")?),
            "pres" => {
                let p = parse_presentation(rest)?;
                GroupSpec::Presentation(p.to_string())
            }
            _ => return Err(Error::malformed(format!("unknown group family '{kind}'"))),
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Abelian(v) => write!(f, "abelian:{}", join(v)),
            GroupSpec::Q8 => write!(f, "q8"),
            GroupSpec::Dicyclic { base, y } => write!(f, "dic:{base}@{y}"),
            GroupSpec::Product(factors) => {
                let parts: Vec<_> = factors.iter().map(|s| format!("({s})")).collect();
                write!(f, "product:{}", parts.join("x"))
            }
            GroupSpec::HGroup(n) => write!(f, "hgroup:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupSpec::Alternating(n) => write!(f, "alternating:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Presentation(p) => write!(f, "pres:{p}"),
        }
    }
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        self.build_with(DEFAULT_COSET_CAP)
    }

    /// Builds the group; `coset_cap` bounds Todd–Coxeter for `pres:` specs.
    pub fn build_with(&self, coset_cap: usize) -> Result<FiniteGroup> {
        let mut group = match self {
            GroupSpec::Cyclic(n) => cyclic(*n)?,
            GroupSpec::Abelian(v) => abelian(v)?,
            GroupSpec::Q8 => quaternion(),
            GroupSpec::Dicyclic { base, y } => {
                let a = base.build_with(coset_cap)?;
                let y = a.resolve(y)?;
                generalized_dicyclic(&a, y)?.0
            }
            GroupSpec::Product(factors) => {
                let mut acc = factors[0].build_with(coset_cap)?;
                for f in &factors[1..] {
                    acc = direct_product(&acc, &f.build_with(coset_cap)?);
                }
                acc
            }
            GroupSpec::HGroup(n) => h_group(*n)?.0,
            GroupSpec::Symmetric(n) => symmetric(*n)?,
            GroupSpec::Alternating(n) => alternating(*n)?,
            GroupSpec::Dihedral(n) => dihedral(*n)?,
            GroupSpec::Presentation(p) => todd_coxeter(&parse_presentation(p)?, coset_cap)?.0,
        };
        group.set_label(self.to_string());
        Ok(group)
    }
}

/// Parses and builds in one step.
pub fn build_group(spec: &str) -> Result<FiniteGroup> {
    spec.parse::<GroupSpec>()?.build()
}
