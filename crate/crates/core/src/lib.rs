//! Colour-preserving and full automorphism groups of Cayley graphs of finite
//! groups.
//!
//! Groups are stored as complete multiplication tables over dense element
//! indices. On top of that the crate builds Cayley graphs, computes the
//! identity stabilizer `ξ_S` of the colour-preserving automorphism group, the
//! full automorphism group of the uncoloured graph, and classifies groups by
//! the shape of `ξ_G`.
//!
//! ```
//! use std::sync::Arc;
//! use cayley::{quaternion, xi_stabilizer, CayleyGraph, GeneratingSet};
//!
//! let q8 = Arc::new(quaternion());
//! let s = GeneratingSet::parse(q8, "i,j").unwrap();
//! let xi = xi_stabilizer(&CayleyGraph::new(&s)).unwrap();
//! assert_eq!(xi.order(), 8);
//! ```

pub mod aut;
pub mod cache;
pub mod cayley;
pub mod classify;
pub mod cli;
pub mod error;
pub mod families;
pub mod group;
pub mod groupspec;
pub mod perm;
pub mod presentation;
pub mod report;
pub mod rigidity;

pub use aut::{
    colour_group, eta_map, full_aut, in_stabilizer, left_translations, phi_eps, psi_map,
    xi_of_group, xi_stabilizer, AutGroup, AutKind, Stabilizer,
};
pub use cayley::{CayleyGraph, GeneratingSet};
pub use classify::{classify, Case, Classification};
pub use error::{Error, Result};
pub use group::{
    abelian, alternating, cyclic, dihedral, direct_product, generalized_dicyclic, quaternion,
    symmetric, DicyclicWitness, Element, FiniteGroup,
};
pub use groupspec::{build_group, GroupSpec};
pub use perm::Permutation;
pub use presentation::{h_group, parse_presentation, todd_coxeter, Presentation};
pub use rigidity::{cayley_index_search, index_of, verify_quantitative, IndexReport, SearchResult};
