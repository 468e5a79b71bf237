//! Brute-force oracles shared by the integration tests. They only read the
//! multiplication table and never call the search code under test.

#![allow(dead_code)]

use cayley::{Element, FiniteGroup, Permutation};
use itertools::Itertools;

pub fn closure(g: &FiniteGroup, gens: &[Element]) -> Vec<Element> {
    let mut seen = vec![false; g.order()];
    let mut stack = vec![g.identity()];
    seen[g.identity()] = true;
    while let Some(x) = stack.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    (0..g.order()).filter(|&x| seen[x]).collect()
}

pub fn generates(g: &FiniteGroup, gens: &[Element]) -> bool {
    closure(g, gens).len() == g.order()
}

/// Classes `{s, s⁻¹}` of non-identity elements.
pub fn inverse_classes(g: &FiniteGroup) -> Vec<Vec<Element>> {
    let e = g.identity();
    let mut out = Vec::new();
    for x in g.elements() {
        let y = g.inverse(x);
        if x != e && x <= y {
            out.push(if x == y { vec![x] } else { vec![x, y] });
        }
    }
    out
}

/// Every symmetric generating set, as sorted element lists.
pub fn all_symmetric_gensets(g: &FiniteGroup) -> Vec<Vec<Element>> {
    let classes = inverse_classes(g);
    let mut out = Vec::new();
    for mask in 1u64..(1 << classes.len()) {
        let mut s: Vec<Element> = classes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .flat_map(|(_, c)| c.iter().copied())
            .collect();
        s.sort_unstable();
        if generates(g, &s) {
            out.push(s);
        }
    }
    out
}

/// Products of between 1 and `k` elements of `s`, without the identity.
pub fn ball(g: &FiniteGroup, s: &[Element], k: usize) -> Vec<Element> {
    let mut layer = vec![g.identity()];
    let mut all = vec![false; g.order()];
    for _ in 0..k {
        let mut next = Vec::new();
        for &x in &layer {
            for &t in s {
                let y = g.mul(x, t);
                if !all[y] {
                    all[y] = true;
                    next.push(y);
                }
            }
        }
        layer = next;
    }
    all[g.identity()] = false;
    (0..g.order()).filter(|&x| all[x]).collect()
}

pub fn is_colour_aut(g: &FiniteGroup, s: &[Element], p: &[usize]) -> bool {
    g.elements().all(|x| {
        s.iter().all(|&t| {
            let img = p[g.mul(x, t)];
            img == g.mul(p[x], t) || img == g.mul(p[x], g.inverse(t))
        })
    })
}

pub fn is_graph_aut(g: &FiniteGroup, s: &[Element], p: &[usize]) -> bool {
    let mut in_s = vec![false; g.order()];
    for &t in s {
        in_s[t] = true;
    }
    g.elements().all(|x| {
        s.iter().all(|&t| {
            let y = g.mul(x, t);
            in_s[g.mul(g.inverse(p[x]), p[y])]
        })
    })
}

/// `ξ_S` by filtering all permutations fixing the identity.
pub fn brute_xi(g: &FiniteGroup, s: &[Element]) -> Vec<Permutation> {
    let e = g.identity();
    let rest: Vec<usize> = g.elements().filter(|&x| x != e).collect();
    let mut out: Vec<Permutation> = rest
        .iter()
        .copied()
        .permutations(rest.len())
        .filter_map(|imgs| {
            let mut p = vec![e; g.order()];
            for (&x, &y) in rest.iter().zip(&imgs) {
                p[x] = y;
            }
            is_colour_aut(g, s, &p).then(|| Permutation::from_images(p).unwrap())
        })
        .collect();
    out.sort();
    out
}

/// `|Aut(Cay(G, S))|` by filtering all permutations of the vertices.
pub fn brute_aut_order(g: &FiniteGroup, s: &[Element]) -> u128 {
    let n = g.order();
    (0..n)
        .permutations(n)
        .filter(|p| is_graph_aut(g, s, p))
        .count() as u128
}

pub fn inverse_map(g: &FiniteGroup) -> Permutation {
    Permutation::from_images(g.elements().map(|x| g.inverse(x)).collect()).unwrap()
}

/// Identity on `a`, inversion elsewhere.
pub fn psi(g: &FiniteGroup, a: &[Element]) -> Permutation {
    Permutation::from_images(
        g.elements()
            .map(|x| if a.contains(&x) { x } else { g.inverse(x) })
            .collect(),
    )
    .unwrap()
}

/// The eight sign maps on `⟨i, j⟩ × B`, built from `i`, `j` and the
/// Boolean complement only.
pub fn sign_maps(g: &FiniteGroup, i: Element, j: Element, b: &[Element]) -> Vec<Permutation> {
    let neg = g.mul(i, i);
    let k = g.mul(i, j);
    let e = g.identity();
    let mut out = Vec::new();
    for (ei, ej, ek) in itertools::iproduct!([false, true], [false, true], [false, true]) {
        let mut q: Vec<(Element, Element)> = vec![(e, e), (neg, neg)];
        for (x, flip) in [(i, ei), (j, ej), (k, ek)] {
            let y = if flip { g.mul(neg, x) } else { x };
            q.push((x, y));
            q.push((g.mul(neg, x), g.mul(neg, y)));
        }
        let mut p = vec![usize::MAX; g.order()];
        for &(x, y) in &q {
            for &z in b {
                p[g.mul(x, z)] = g.mul(y, z);
            }
        }
        out.push(Permutation::from_images(p).unwrap());
    }
    out.sort();
    out
}

pub fn sorted(mut v: Vec<Permutation>) -> Vec<Permutation> {
    v.sort();
    v.dedup();
    v
}
