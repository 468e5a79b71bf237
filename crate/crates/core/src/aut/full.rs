//! Automorphism group of the uncoloured Cayley graph.
//!
//! Individualization–refinement over colourings refined by neighbour-colour
//! multisets. A first descent fixes a base `b_0, b_1, …`; then, deepest level
//! first, the orbit of `b_i` under the pointwise stabilizer of `b_0..b_{i-1}`
//! is completed by searching for automorphisms that send `b_i` to each
//! candidate outside the orbit found so far. The group order is the product
//! of the orbit lengths.

use log::debug;

use super::{enumerate_group, AutGroup, AutKind, DEFAULT_EXPLICIT_CAP};
use crate::cayley::CayleyGraph;
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_VERTEX_CAP: usize = 64;

#[derive(Debug, Clone, Copy)]
pub struct FullAutOptions {
    pub vertex_cap: usize,
    pub explicit_cap: u128,
}

impl Default for FullAutOptions {
    fn default() -> Self {
        FullAutOptions {
            vertex_cap: DEFAULT_VERTEX_CAP,
            explicit_cap: DEFAULT_EXPLICIT_CAP,
        }
    }
}

type Colouring = Vec<u32>;

struct Refiner<'a> {
    adjacency: Vec<&'a [usize]>,
}

impl Refiner<'_> {
    fn n(&self) -> usize {
        self.adjacency.len()
    }

    fn colour_count(c: &Colouring) -> usize {
        c.iter().copied().max().map_or(0, |m| m as usize + 1)
    }

    /// Iterates `colour(v) ← rank of (colour(v), sorted neighbour colours)` to a fixed point.
    fn refine(&self, mut colours: Colouring) -> Colouring {
        let n = self.n();
        let mut count = Self::colour_count(&colours);
        loop {
            let mut sigs: Vec<(Vec<u32>, usize)> = (0..n)
                .map(|v| {
                    let mut sig = Vec::with_capacity(self.adjacency[v].len() + 1);
                    sig.push(colours[v]);
                    let start = sig.len();
                    sig.extend(self.adjacency[v].iter().map(|&w| colours[w]));
                    sig[start..].sort_unstable();
                    (sig, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut next = vec![0u32; n];
            let mut rank = 0u32;
            for idx in 0..n {
                if idx > 0 && sigs[idx].0 != sigs[idx - 1].0 {
                    rank += 1;
                }
                next[sigs[idx].1] = rank;
            }
            let new_count = rank as usize + 1;
            colours = next;
            if new_count == count {
                return colours;
            }
            count = new_count;
        }
    }

    fn individualize(&self, colours: &Colouring, v: usize) -> Colouring {
        let mut c = colours.clone();
        c[v] = Self::colour_count(colours) as u32;
        self.refine(c)
    }

    /// Smallest colour with more than one vertex.
    fn target_cell(colours: &Colouring) -> Option<u32> {
        let mut sizes = vec![0usize; Self::colour_count(colours)];
        for &c in colours {
            sizes[c as usize] += 1;
        }
        sizes.iter().position(|&s| s > 1).map(|c| c as u32)
    }

    fn histogram(colours: &Colouring) -> Vec<usize> {
        let mut sizes = vec![0usize; Self::colour_count(colours)];
        for &c in colours {
            sizes[c as usize] += 1;
        }
        sizes
    }

    fn is_automorphism(&self, p: &[usize]) -> bool {
        (0..self.n()).all(|u| {
            self.adjacency[u]
                .iter()
                .all(|&v| self.adjacency[p[u]].binary_search(&p[v]).is_ok())
        })
    }
}

struct Level {
    colouring: Colouring,
    cell: u32,
    base_point: usize,
}

struct Matcher<'a> {
    refiner: &'a Refiner<'a>,
    levels: &'a [Level],
    leaf: &'a Colouring,
}

impl Matcher<'_> {
    /// Extends a partial match whose right-hand colouring corresponds to the
    /// left colouring at `depth`.
    fn extend(&self, depth: usize, right: &Colouring) -> Option<Vec<usize>> {
        let left = self.levels.get(depth).map_or(self.leaf, |l| &l.colouring);
        if Refiner::histogram(left) != Refiner::histogram(right) {
            return None;
        }
        if depth == self.levels.len() {
            let n = right.len();
            let mut by_colour = vec![0usize; n];
            for (v, &c) in right.iter().enumerate() {
                by_colour[c as usize] = v;
            }
            let p: Vec<usize> = left.iter().map(|&c| by_colour[c as usize]).collect();
            return self.refiner.is_automorphism(&p).then_some(p);
        }
        let cell = self.levels[depth].cell;
        for w in (0..right.len()).filter(|&w| right[w] == cell) {
            let next = self.refiner.individualize(right, w);
            if let Some(p) = self.extend(depth + 1, &next) {
                return Some(p);
            }
        }
        None
    }
}

fn orbit(n: usize, point: usize, generators: &[Permutation]) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[point] = true;
    let mut stack = vec![point];
    while let Some(v) = stack.pop() {
        for g in generators {
            let w = g.apply(v);
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Order and generators of `Aut(Cay(G, S))`, with default caps.
pub fn full_aut(graph: &CayleyGraph) -> Result<AutGroup> {
    full_aut_with(graph, FullAutOptions::default())
}

pub fn full_aut_with(graph: &CayleyGraph, options: FullAutOptions) -> Result<AutGroup> {
    let n = graph.vertex_count();
    if n > options.vertex_cap {
        return Err(Error::ResourceLimit(format!(
            "full automorphism search is capped at {} vertices, graph has {n}",
            options.vertex_cap
        )));
    }
    let refiner = Refiner {
        adjacency: (0..n).map(|v| graph.neighbours(v)).collect(),
    };

    let mut levels = Vec::new();
    let mut colouring = refiner.refine(vec![0; n]);
    while let Some(cell) = Refiner::target_cell(&colouring) {
        let base_point = colouring.iter().position(|&c| c == cell).unwrap();
        let next = refiner.individualize(&colouring, base_point);
        levels.push(Level {
            colouring,
            cell,
            base_point,
        });
        colouring = next;
    }
    let leaf = colouring;
    let matcher = Matcher {
        refiner: &refiner,
        levels: &levels,
        leaf: &leaf,
    };

    let mut generators: Vec<Permutation> = Vec::new();
    let mut order: u128 = 1;
    for depth in (0..levels.len()).rev() {
        let level = &levels[depth];
        let mut in_orbit = orbit(n, level.base_point, &generators);
        for v in 0..n {
            if level.colouring[v] != level.cell || in_orbit[v] {
                continue;
            }
            let right = refiner.individualize(&level.colouring, v);
            if let Some(p) = matcher.extend(depth + 1, &right) {
                generators.push(Permutation::from_images_unchecked(p));
                in_orbit = orbit(n, level.base_point, &generators);
            }
        }
        let orbit_len = in_orbit.iter().filter(|&&b| b).count() as u128;
        order = order
            .checked_mul(orbit_len)
            .ok_or_else(|| Error::ResourceLimit("automorphism group order exceeds 2^128".into()))?;
    }
    debug!(
        "full aut of {} (|S| = {}): base length {}, {} generators, order {order}",
        graph.group().label(),
        graph.degree(),
        levels.len(),
        generators.len()
    );

    let elements = if order <= options.explicit_cap {
        let elems = enumerate_group(n, &generators, order)
            .expect("closure of the generators has the computed order");
        debug_assert_eq!(elems.len() as u128, order);
        Some(elems)
    } else {
        None
    };
    Ok(AutGroup::new(
        AutKind::Full,
        order,
        generators,
        elements,
        graph.digest(),
    ))
}
