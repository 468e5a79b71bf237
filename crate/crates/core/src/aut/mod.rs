//! The three automorphism groups of a Cayley graph.
//!
//! * labelled: `φ(gs) = φ(g)s`, exactly the left translations;
//! * colour-preserving: `φ(gs) ∈ {φ(g)s, φ(g)s⁻¹}`, computed through its
//!   vertex stabilizer `ξ_S` (see [`xi_stabilizer`]);
//! * full: automorphisms of the uncoloured graph (see [`full_aut`]).

mod full;
mod maps;
mod xi;

use serde::Serialize;

use crate::cayley::CayleyGraph;
use crate::error::Result;
use crate::perm::Permutation;

pub use full::{full_aut, full_aut_with, FullAutOptions, DEFAULT_VERTEX_CAP};
pub use maps::{eta_map, phi_eps, phi_eps_product, psi_map, SignTriple, ALL_SIGN_TRIPLES};
pub use xi::{
    check_propagation, xi_of_group, xi_stabilizer, xi_stabilizer_with_budget, Stabilizer,
    DEFAULT_NODE_BUDGET,
};

/// Groups of at most this order are stored element by element.
pub const DEFAULT_EXPLICIT_CAP: u128 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AutKind {
    Labelled,
    Colour,
    Full,
}

/// An automorphism group of a Cayley graph: explicit element list when
/// small, generators and exact order otherwise.
#[derive(Debug, Clone)]
pub struct AutGroup {
    kind: AutKind,
    order: u128,
    generators: Vec<Permutation>,
    elements: Option<Vec<Permutation>>,
    base_graph_digest: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AutGroupReport<'a> {
    pub kind: AutKind,
    pub order: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<&'a [Permutation]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<&'a [Permutation]>,
    pub base_graph_digest: &'a str,
}

impl AutGroup {
    pub(crate) fn new(
        kind: AutKind,
        order: u128,
        generators: Vec<Permutation>,
        mut elements: Option<Vec<Permutation>>,
        base_graph_digest: String,
    ) -> Self {
        if let Some(e) = elements.as_mut() {
            e.sort_unstable();
        }
        AutGroup {
            kind,
            order,
            generators,
            elements,
            base_graph_digest,
        }
    }

    pub fn kind(&self) -> AutKind {
        self.kind
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Sorted element list, present when the order is within the explicit cap.
    pub fn elements(&self) -> Option<&[Permutation]> {
        self.elements.as_deref()
    }

    pub fn is_explicit(&self) -> bool {
        self.elements.is_some()
    }

    /// Membership in explicit mode; `None` when only generators are stored.
    pub fn contains(&self, p: &Permutation) -> Option<bool> {
        self.elements.as_ref().map(|e| e.binary_search(p).is_ok())
    }

    pub fn base_graph_digest(&self) -> &str {
        &self.base_graph_digest
    }

    pub fn report(&self) -> AutGroupReport<'_> {
        AutGroupReport {
            kind: self.kind,
            order: self.order,
            elements: self.elements.as_deref(),
            generators: if self.elements.is_some() {
                None
            } else {
                Some(&self.generators)
            },
            base_graph_digest: &self.base_graph_digest,
        }
    }
}

/// Left translation `g ↦ h·g`.
pub fn left_translation(graph: &CayleyGraph, h: usize) -> Permutation {
    let g = graph.group();
    Permutation::from_images_unchecked(g.elements().map(|x| g.mul(h, x)).collect())
}

/// The labelled automorphism group: all `|G|` left translations.
pub fn left_translations(graph: &CayleyGraph) -> AutGroup {
    let g = graph.group();
    let elements = g.elements().map(|h| left_translation(graph, h)).collect();
    let generators = graph
        .genset()
        .elements()
        .iter()
        .map(|&s| left_translation(graph, s))
        .collect();
    AutGroup::new(
        AutKind::Labelled,
        g.order() as u128,
        generators,
        Some(elements),
        graph.digest(),
    )
}

/// `Ξ_S = G·ξ_S`, the colour-preserving automorphism group.
pub fn colour_group(graph: &CayleyGraph) -> Result<AutGroup> {
    colour_group_from(graph, &xi_stabilizer(graph)?)
}

/// Builds `Ξ_S` from an already computed stabilizer.
pub fn colour_group_from(graph: &CayleyGraph, xi: &Stabilizer) -> Result<AutGroup> {
    let n = graph.vertex_count() as u128;
    let order = n * xi.order() as u128;
    let mut generators: Vec<Permutation> = graph
        .genset()
        .elements()
        .iter()
        .map(|&s| left_translation(graph, s))
        .collect();
    generators.extend(xi.elements().iter().filter(|p| !p.is_identity()).cloned());
    let elements = (order <= DEFAULT_EXPLICIT_CAP).then(|| {
        graph
            .group()
            .elements()
            .flat_map(|h| {
                let t = left_translation(graph, h);
                xi.elements()
                    .iter()
                    .map(|phi| t.compose(phi))
                    .collect::<Vec<_>>()
            })
            .collect()
    });
    Ok(AutGroup::new(
        AutKind::Colour,
        order,
        generators,
        elements,
        graph.digest(),
    ))
}

/// `φ(gs) ∈ {φ(g)s, φ(g)s⁻¹}` for every vertex `g` and generator `s`.
pub fn is_colour_automorphism(graph: &CayleyGraph, p: &Permutation) -> bool {
    let g = graph.group();
    if p.len() != g.order() {
        return false;
    }
    g.elements().all(|x| {
        let px = p.apply(x);
        graph.genset().elements().iter().all(|&s| {
            let target = p.apply(g.mul(x, s));
            target == g.mul(px, s) || target == g.mul(px, g.inverse(s))
        })
    })
}

/// Membership in `ξ_S` without enumerating it: `φ(1) = 1` and `φ` is a
/// colour automorphism.
pub fn in_stabilizer(graph: &CayleyGraph, p: &Permutation) -> bool {
    let e = graph.group().identity();
    p.len() == graph.vertex_count() && p.fixes(e) && is_colour_automorphism(graph, p)
}

/// `φ(gs) = φ(g)s` for every vertex `g` and generator `s`.
pub fn is_labelled_automorphism(graph: &CayleyGraph, p: &Permutation) -> bool {
    let g = graph.group();
    p.len() == g.order()
        && g.elements().all(|x| {
            graph
                .genset()
                .elements()
                .iter()
                .all(|&s| p.apply(g.mul(x, s)) == g.mul(p.apply(x), s))
        })
}

/// Edge preservation for the uncoloured graph.
pub fn is_graph_automorphism(graph: &CayleyGraph, p: &Permutation) -> bool {
    p.len() == graph.vertex_count()
        && (0..graph.vertex_count()).all(|u| {
            graph
                .neighbours(u)
                .iter()
                .all(|&v| graph.adjacent(p.apply(u), p.apply(v)))
        })
}

/// Closure of `generators` under composition, or `None` once it exceeds `cap`.
pub(crate) fn enumerate_group(
    n: usize,
    generators: &[Permutation],
    cap: u128,
) -> Option<Vec<Permutation>> {
    use std::collections::HashSet;
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        let p = queue[head].clone();
        head += 1;
        for s in generators {
            let q = s.compose(&p);
            if !seen.contains(&q) {
                if seen.len() as u128 >= cap {
                    return None;
                }
                seen.insert(q.clone());
                queue.push(q);
            }
        }
    }
    Some(queue)
}
