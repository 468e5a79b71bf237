//! Symmetric generating sets, product balls `S^{≤k}`, and Cayley graphs.

use std::fmt::Write as _;
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};

/// A symmetric, identity-free subset of a group that generates it.
#[derive(Clone, Debug)]
pub struct GeneratingSet {
    group: Arc<FiniteGroup>,
    elements: Vec<Element>,
}

impl PartialEq for GeneratingSet {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
            && (Arc::ptr_eq(&self.group, &other.group) || self.group == other.group)
    }
}

impl Eq for GeneratingSet {}

impl GeneratingSet {
    /// Validates `elems` as a generating set.
    ///
    /// With `symmetrize`, inverses are added and the identity is dropped;
    /// without it, an identity or a missing inverse is an error.
    pub fn new(group: Arc<FiniteGroup>, elems: &[Element], symmetrize: bool) -> Result<Self> {
        for &g in elems {
            group.check(g)?;
        }
        let e = group.identity();
        let mut elements: Vec<Element> = Vec::with_capacity(2 * elems.len());
        for &g in elems {
            if g == e {
                if symmetrize {
                    continue;
                }
                return Err(Error::malformed("generating set contains the identity"));
            }
            elements.push(g);
            if symmetrize {
                elements.push(group.inverse(g));
            }
        }
        elements.sort_unstable();
        elements.dedup();
        if let Some(&g) = elements
            .iter()
            .find(|&&g| elements.binary_search(&group.inverse(g)).is_err())
        {
            return Err(Error::malformed(format!(
                "generating set is not symmetric: missing inverse of {}",
                group.name(g)
            )));
        }
        let generated = group.subgroup_generated(&elements).len();
        if generated != group.order() {
            return Err(Error::NotGenerating {
                subgroup_order: generated,
                group_order: group.order(),
            });
        }
        Ok(GeneratingSet { group, elements })
    }

    /// `G \ {1}`.
    pub fn full(group: Arc<FiniteGroup>) -> Result<Self> {
        if group.order() < 2 {
            return Err(Error::degenerate(
                "the trivial group has no non-identity elements",
            ));
        }
        let e = group.identity();
        let elements = group.elements().filter(|&g| g != e).collect();
        Ok(GeneratingSet { group, elements })
    }

    /// Parses a comma-separated list of element names (or indices), symmetrized.
    pub fn parse(group: Arc<FiniteGroup>, list: &str) -> Result<Self> {
        let elems = split_top_level(list, ',')
            .into_iter()
            .filter(|t| !t.trim().is_empty())
            .map(|t| group.resolve(t))
            .collect::<Result<Vec<_>>>()?;
        GeneratingSet::new(group, &elems, true)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: Element) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_subset_of(&self, other: &GeneratingSet) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    /// True when this is all of `G \ {1}`.
    pub fn is_full(&self) -> bool {
        self.elements.len() + 1 == self.group.order()
    }

    /// All products of at most `k` elements, minus the identity.
    pub fn ball(&self, k: usize) -> GeneratingSet {
        self.ball_with_radius(k).0
    }

    /// Like [`ball`](Self::ball), also returning the radius at which the
    /// ball stopped growing, if that happened at or before `k`.
    pub fn ball_with_radius(&self, k: usize) -> (GeneratingSet, Option<usize>) {
        let g = &self.group;
        let mut member = vec![false; g.order()];
        member[g.identity()] = true;
        let mut frontier: Vec<Element> = vec![g.identity()];
        let mut stabilized = None;
        for radius in 1..=k.max(1) {
            let mut next = Vec::new();
            for &h in &frontier {
                for &s in &self.elements {
                    let p = g.mul(h, s);
                    if !member[p] {
                        member[p] = true;
                        next.push(p);
                    }
                }
            }
            if next.is_empty() {
                stabilized = Some(radius - 1);
                break;
            }
            frontier = next;
        }
        member[g.identity()] = false;
        let elements = g.elements().filter(|&h| member[h]).collect();
        (
            GeneratingSet {
                group: self.group.clone(),
                elements,
            },
            stabilized,
        )
    }

    /// Smallest `k` with `S^{≤k} = G \ {1}`; the diameter of the Cayley graph.
    pub fn diameter(&self) -> usize {
        let mut k = 1;
        while !self.ball(k).is_full() {
            k += 1;
        }
        k
    }

    pub fn names(&self) -> Vec<&str> {
        self.elements.iter().map(|&g| self.group.name(g)).collect()
    }

    /// `name1,name2,...` in element order.
    pub fn spec(&self) -> String {
        self.names().join(",")
    }

    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.group.digest().as_bytes());
        for &g in &self.elements {
            hasher.update((g as u64).to_le_bytes());
        }
        hex::encode(hasher.finalize())[..16].to_string()
    }
}

/// Splits on `sep` outside parentheses.
pub(crate) fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '<' => depth += 1,
            ')' | '>' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// A colour class `{s, s⁻¹}`, keyed by the smaller index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Colour {
    pub rep: Element,
    pub inv: Element,
}

impl Colour {
    pub fn is_involution(&self) -> bool {
        self.rep == self.inv
    }
}

/// The Cayley graph of a generating set, with its edge colouring.
///
/// One carrier serves the plain, colour and labelled flavours; they differ
/// only in which permutations count as automorphisms.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    genset: GeneratingSet,
    adjacency: Vec<Vec<Element>>,
    colours: Vec<Colour>,
    colour_of: Vec<Option<usize>>,
}

impl CayleyGraph {
    pub fn new(genset: &GeneratingSet) -> Self {
        let g = genset.group();
        let mut colours = Vec::new();
        let mut colour_of = vec![None; g.order()];
        for &s in genset.elements() {
            let inv = g.inverse(s);
            if s <= inv {
                colour_of[s] = Some(colours.len());
                colour_of[inv] = Some(colours.len());
                colours.push(Colour { rep: s, inv });
            }
        }
        let adjacency = g
            .elements()
            .map(|v| {
                let mut nb: Vec<Element> = genset.elements().iter().map(|&s| g.mul(v, s)).collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        CayleyGraph {
            genset: genset.clone(),
            adjacency,
            colours,
            colour_of,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        self.genset.group()
    }

    pub fn genset(&self) -> &GeneratingSet {
        &self.genset
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbours(&self, v: Element) -> &[Element] {
        &self.adjacency[v]
    }

    pub fn adjacent(&self, u: Element, v: Element) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self) -> usize {
        self.genset.len()
    }

    /// Colour classes in ascending order of representative.
    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    /// Colour index of the generator `s`, if it is in the generating set.
    pub fn colour_of_generator(&self, s: Element) -> Option<usize> {
        self.colour_of[s]
    }

    /// Colour of the edge `{u, v}`, i.e. of `u⁻¹v`.
    pub fn colour_of_edge(&self, u: Element, v: Element) -> Option<usize> {
        let g = self.group();
        self.colour_of[g.mul(g.inverse(u), v)]
    }

    pub fn edge_count(&self) -> usize {
        let n = self.vertex_count();
        self.colours
            .iter()
            .map(|c| if c.is_involution() { n / 2 } else { n })
            .sum()
    }

    /// Edges `(u, v, colour)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Element, Element, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            self.adjacency[u]
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v, self.colour_of_edge(u, v).unwrap()))
        })
    }

    pub fn digest(&self) -> String {
        self.genset.digest()
    }

    /// Graphviz export; colour classes become edge colours.
    pub fn to_dot(&self) -> String {
        const PALETTE: [&str; 12] = [
            "red",
            "blue",
            "darkgreen",
            "orange",
            "purple",
            "brown",
            "magenta",
            "cyan4",
            "gold3",
            "gray40",
            "navy",
            "olivedrab",
        ];
        let g = self.group();
        let mut out = String::from("graph cayley {\n");
        for v in 0..self.vertex_count() {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", g.name(v).replace('"', "'"));
        }
        for (u, v, c) in self.edges() {
            let colour = &self.colours[c];
            let _ = writeln!(
                out,
                "  {u} -- {v} [color=\"{}\", label=\"{}\"];",
                PALETTE[c % PALETTE.len()],
                g.name(colour.rep).replace('"', "'")
            );
        }
        out.push_str("}\n");
        out
    }

    /// Adjacency dump: `vertex,neighbour,generator,colour` per directed arc.
    pub fn to_csv(&self) -> String {
        let g = self.group();
        let mut out = String::from("vertex,neighbour,generator,colour\n");
        for u in 0..self.vertex_count() {
            for &v in &self.adjacency[u] {
                let s = g.mul(g.inverse(u), v);
                let _ = writeln!(
                    out,
                    "{u},{v},{},{}",
                    csv_field(g.name(s)),
                    self.colour_of[s].unwrap()
                );
            }
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
