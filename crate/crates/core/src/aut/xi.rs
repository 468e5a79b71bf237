//! The stabilizer `ξ_S` of the identity vertex in the colour-preserving
//! automorphism group.
//!
//! A permutation fixing `1` is in `ξ_S` iff for every vertex `g` and every
//! colour `{s, s⁻¹}` the pair `{gs, gs⁻¹}` is sent onto `{φ(g)s, φ(g)s⁻¹}`.
//! Once `φ(g)` is known this leaves a single binary choice per (vertex, colour),
//! none for involutions. The search discovers vertices breadth-first from
//! `1`, applies every forced choice before branching, and branches on the
//! first open (vertex, colour) pair, `+` before `−`.

use std::sync::Arc;

use log::debug;
use serde::Serialize;

use crate::cayley::{CayleyGraph, GeneratingSet};
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::perm::Permutation;

/// Search nodes allowed before giving up with a resource-limit error.
pub const DEFAULT_NODE_BUDGET: u64 = 20_000_000;

/// `ξ_S` as an explicit, lexicographically sorted list of permutations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stabilizer {
    elements: Vec<Permutation>,
    base_graph_digest: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct StabilizerReport<'a> {
    pub kind: &'static str,
    pub order: usize,
    pub elements: &'a [Permutation],
    pub base_graph_digest: &'a str,
}

impl Stabilizer {
    pub(crate) fn from_sorted(elements: Vec<Permutation>, base_graph_digest: String) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Stabilizer {
            elements,
            base_graph_digest,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Same permutations, regardless of which graph they came from.
    pub fn same_elements(&self, other: &Stabilizer) -> bool {
        self.elements == other.elements
    }

    pub fn is_subset_of(&self, other: &Stabilizer) -> bool {
        self.elements.iter().all(|p| other.contains(p))
    }

    pub fn base_graph_digest(&self) -> &str {
        &self.base_graph_digest
    }

    pub fn report(&self) -> StabilizerReport<'_> {
        StabilizerReport {
            kind: "colour-stabilizer",
            order: self.order(),
            elements: &self.elements,
            base_graph_digest: &self.base_graph_digest,
        }
    }
}

const UNSET: usize = usize::MAX;

struct Search<'a> {
    group: &'a FiniteGroup,
    colours: Vec<(Element, Element)>,
    image: Vec<usize>,
    preimage: Vec<usize>,
    assigned: Vec<usize>,
    solutions: Vec<Permutation>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    #[inline]
    fn compatible(&self, u: usize, target: usize) -> bool {
        let current = self.image[u];
        current == target || (current == UNSET && self.preimage[target] == UNSET)
    }

    #[inline]
    fn assign(&mut self, u: usize, target: usize) {
        if self.image[u] == UNSET {
            self.image[u] = target;
            self.preimage[target] = u;
            self.assigned.push(u);
        }
    }

    fn undo_to(&mut self, mark: usize) {
        for &u in &self.assigned[mark..] {
            self.preimage[self.image[u]] = UNSET;
            self.image[u] = UNSET;
        }
        self.assigned.truncate(mark);
    }

    /// Pair `p` is (vertex `assigned[p / c]`, colour `p % c`); returns the
    /// two neighbours `v·s`, `v·s⁻¹` and their admissible images `φ(v)·s`, `φ(v)·s⁻¹`.
    #[inline]
    fn pair(&self, p: usize) -> (usize, usize, usize, usize) {
        let g = self.group;
        let ncol = self.colours.len();
        let v = self.assigned[p / ncol];
        let pv = self.image[v];
        let (s, s_inv) = self.colours[p % ncol];
        (g.mul(v, s), g.mul(v, s_inv), g.mul(pv, s), g.mul(pv, s_inv))
    }

    /// Applies forced choices until none is left. Pairs before `prefix` are
    /// known to be settled; `prefix` is advanced past newly settled ones.
    fn propagate(&mut self, prefix: &mut usize) -> Step {
        let ncol = self.colours.len();
        loop {
            let before = self.assigned.len();
            let mut first_open = None;
            let mut p = *prefix;
            while p < self.assigned.len() * ncol {
                let (u, w, a, b) = self.pair(p);
                let plus = self.compatible(u, a) && self.compatible(w, b);
                let minus = u != w && self.compatible(u, b) && self.compatible(w, a);
                match (plus, minus) {
                    (false, false) => return Step::Conflict,
                    (true, true) => {
                        first_open.get_or_insert(p);
                    }
                    (true, false) | (false, true) => {
                        let (x, y) = if plus { (a, b) } else { (b, a) };
                        self.assign(u, x);
                        self.assign(w, y);
                        if first_open.is_none() {
                            *prefix = p + 1;
                        }
                    }
                }
                p += 1;
            }
            if self.assigned.len() == before {
                return first_open.map_or(Step::Complete, Step::Branch);
            }
        }
    }

    fn descend(&mut self, mut prefix: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceLimit(format!(
                "colour-automorphism search exceeded {} nodes",
                self.budget
            )));
        }
        let mark = self.assigned.len();
        let mut result = Ok(());
        match self.propagate(&mut prefix) {
            Step::Conflict => {}
            Step::Complete => {
                debug_assert_eq!(self.assigned.len(), self.group.order());
                self.solutions
                    .push(Permutation::from_images_unchecked(self.image.clone()));
            }
            Step::Branch(p) => {
                let (u, w, a, b) = self.pair(p);
                let branch_mark = self.assigned.len();
                for (x, y) in [(a, b), (b, a)] {
                    self.assign(u, x);
                    self.assign(w, y);
                    result = self.descend(prefix);
                    self.undo_to(branch_mark);
                    if result.is_err() {
                        break;
                    }
                }
            }
        }
        self.undo_to(mark);
        result
    }
}

enum Step {
    Conflict,
    Complete,
    Branch(usize),
}

/// All permutations fixing `1` that preserve every colour class of the graph.
pub fn xi_stabilizer(graph: &CayleyGraph) -> Result<Stabilizer> {
    xi_stabilizer_with_budget(graph, DEFAULT_NODE_BUDGET)
}

pub fn xi_stabilizer_with_budget(graph: &CayleyGraph, budget: u64) -> Result<Stabilizer> {
    let group = graph.group();
    let n = group.order();
    let mut search = Search {
        group,
        colours: graph.colours().iter().map(|c| (c.rep, c.inv)).collect(),
        image: vec![UNSET; n],
        preimage: vec![UNSET; n],
        assigned: Vec::with_capacity(n),
        solutions: Vec::new(),
        nodes: 0,
        budget,
    };
    let e = group.identity();
    search.assign(e, e);
    search.descend(0)?;
    let mut elements = search.solutions;
    elements.sort_unstable();
    debug!(
        "xi search on {} (|S| = {}): {} nodes, |xi| = {}",
        group.label(),
        graph.degree(),
        search.nodes,
        elements.len()
    );
    Ok(Stabilizer::from_sorted(elements, graph.digest()))
}

/// `ξ_G`: the stabilizer for the full generating set `G \ {1}`.
pub fn xi_of_group(group: &Arc<FiniteGroup>) -> Result<Stabilizer> {
    let full = GeneratingSet::full(group.clone())?;
    xi_stabilizer(&CayleyGraph::new(&full))
}

/// Checks both halves of the propagation lemma on a concrete instance.
///
/// Premise: every `φ ∈ ξ_T` that is the identity on `S0` is the identity on
/// `S ∪ S·S0`. Conclusion: every such `φ` is the identity. Returns
/// `premise && conclusion`; with a true premise a false conclusion would
/// contradict the lemma and is logged as such.
pub fn check_propagation(graph_t: &CayleyGraph, s: &GeneratingSet, s0: &[Element]) -> Result<bool> {
    if !s.is_subset_of(graph_t.genset()) {
        return Err(Error::malformed("S is not contained in T"));
    }
    let g = graph_t.group();
    for &x in s0 {
        g.check(x)?;
    }
    let mut region: Vec<Element> = s.elements().to_vec();
    for &a in s.elements() {
        for &b in s0 {
            region.push(g.mul(a, b));
        }
    }
    region.sort_unstable();
    region.dedup();

    let xi = xi_stabilizer(graph_t)?;
    let pinned: Vec<&Permutation> = xi
        .elements()
        .iter()
        .filter(|p| s0.iter().all(|&x| p.fixes(x)))
        .collect();
    let premise = pinned.iter().all(|p| region.iter().all(|&x| p.fixes(x)));
    let conclusion = pinned.iter().all(|p| p.is_identity());
    if !premise {
        debug!("propagation premise fails: some φ fixing S0 moves a point of S ∪ S·S0");
    }
    if !conclusion {
        if premise {
            log::warn!("propagation conclusion fails although the premise holds");
        } else {
            debug!("propagation conclusion fails: a non-identity φ fixes S0");
        }
    }
    Ok(premise && conclusion)
}
