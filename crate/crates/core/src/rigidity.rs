//! Cayley indices, the ball-radius bounds for `ξ`, and the example families
//! showing those radii cannot be lowered.

use std::collections::BTreeSet;
use std::sync::Arc;

use log::debug;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::aut::{
    eta_map, full_aut_with, in_stabilizer, phi_eps_product, psi_map, xi_of_group, xi_stabilizer,
    xi_stabilizer_with_budget, FullAutOptions, Stabilizer, ALL_SIGN_TRIPLES,
};
use crate::cayley::{CayleyGraph, GeneratingSet};
use crate::classify::{classify, lift_over_boolean, Case, Classification};
use crate::error::{Error, Result};
use crate::group::{abelian, cyclic, direct_product, quaternion, Element, FiniteGroup};
use crate::perm::Permutation;
use crate::presentation::h_group;

/// Groups up to this order are searched exhaustively by default.
pub const EXHAUSTIVE_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub group_digest: String,
    pub genset: String,
    pub genset_size: usize,
    pub full_aut_order: u128,
    pub colour_aut_order: u128,
    pub cayley_index: u128,
    pub colour_index: u128,
}

/// `[Aut(Cay(G, S)) : G]` and `[Ξ_S : G] = |ξ_S|` for one generating set.
pub fn index_of(s: &GeneratingSet) -> Result<IndexReport> {
    index_of_with(s, FullAutOptions::default())
}

pub fn index_of_with(s: &GeneratingSet, options: FullAutOptions) -> Result<IndexReport> {
    let graph = CayleyGraph::new(s);
    let n = s.group().order() as u128;
    let full = full_aut_with(&graph, options)?.order();
    let xi = xi_stabilizer(&graph)?;
    let colour = n * xi.order() as u128;
    debug_assert_eq!(full % n, 0);
    Ok(IndexReport {
        group_digest: s.group().digest(),
        genset: s.spec(),
        genset_size: s.len(),
        full_aut_order: full,
        colour_aut_order: colour,
        cayley_index: full / n,
        colour_index: colour / n,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// Exhaustive up to [`EXHAUSTIVE_MAX_ORDER`], sampled above.
    Auto,
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub mode: SearchMode,
    /// Maximum number of generating sets whose automorphism group is computed.
    pub budget: u64,
    pub seed: u64,
    pub parallel: bool,
    pub aut: FullAutOptions,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            mode: SearchMode::Auto,
            budget: 100_000,
            seed: 0,
            parallel: true,
            aut: FullAutOptions::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub group_digest: String,
    pub best_index: u128,
    pub witness_genset: String,
    pub witness_size: usize,
    pub exhaustive: bool,
    pub sets_examined: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

/// The inverse-pair classes `{s, s⁻¹}` of non-identity elements, keyed by
/// their smaller element.
pub fn inverse_pairs(group: &FiniteGroup) -> Vec<(Element, Element)> {
    group
        .elements()
        .filter(|&g| g != group.identity() && g <= group.inverse(g))
        .map(|g| (g, group.inverse(g)))
        .collect()
}

fn elements_of(pairs: &[(Element, Element)], chosen: impl Iterator<Item = usize>) -> Vec<Element> {
    let mut elems = Vec::new();
    for k in chosen {
        let (a, b) = pairs[k];
        elems.push(a);
        if b != a {
            elems.push(b);
        }
    }
    elems
}

fn generates(group: &FiniteGroup, elems: &[Element]) -> bool {
    group.subgroup_generated(elems).len() == group.order()
}

/// Smallest Cayley index found over symmetric generating sets.
///
/// Exhaustive mode visits inverse-pair bitmasks in ascending order; ties go
/// to the first set visited, also when candidates are evaluated in parallel.
pub fn cayley_index_search(
    group: &Arc<FiniteGroup>,
    options: SearchOptions,
) -> Result<SearchResult> {
    let pairs = inverse_pairs(group);
    if pairs.is_empty() {
        return Err(Error::degenerate(
            "the trivial group has no generating set to search",
        ));
    }
    let exhaustive_mode = match options.mode {
        SearchMode::Auto => group.order() <= EXHAUSTIVE_MAX_ORDER,
        SearchMode::Exhaustive => {
            if pairs.len() >= 63 {
                return Err(Error::ResourceLimit(format!(
                    "{} inverse pairs are too many for exhaustive search",
                    pairs.len()
                )));
            }
            true
        }
        SearchMode::Sampled => false,
    };

    let (candidates, complete) = if exhaustive_mode {
        let mut candidates = Vec::new();
        let mut complete = true;
        for mask in 1u64..(1u64 << pairs.len()) {
            let elems = elements_of(&pairs, (0..pairs.len()).filter(|k| mask >> k & 1 == 1));
            if !generates(group, &elems) {
                continue;
            }
            if candidates.len() as u64 == options.budget {
                complete = false;
                break;
            }
            candidates.push(elems);
        }
        (candidates, complete)
    } else {
        (
            sample_candidates(group, &pairs, options.budget, options.seed),
            false,
        )
    };

    let evaluate = |elems: &Vec<Element>| -> Result<u128> {
        let s = GeneratingSet::new(group.clone(), elems, false)?;
        let order = full_aut_with(&CayleyGraph::new(&s), options.aut)?.order();
        Ok(order / group.order() as u128)
    };
    let indices: Vec<u128> = if options.parallel {
        candidates.par_iter().map(evaluate).collect::<Result<_>>()?
    } else {
        candidates.iter().map(evaluate).collect::<Result<_>>()?
    };
    let (best_pos, &best_index) = indices
        .iter()
        .enumerate()
        .min_by_key(|&(pos, idx)| (*idx, pos))
        .ok_or_else(|| Error::ResourceLimit("search budget allowed no generating set".into()))?;
    let witness = GeneratingSet::new(group.clone(), &candidates[best_pos], false)?;
    debug!(
        "index search on {}: {} sets, best {best_index} at {}",
        group.label(),
        candidates.len(),
        witness.spec()
    );
    Ok(SearchResult {
        group_digest: group.digest(),
        best_index,
        witness_genset: witness.spec(),
        witness_size: witness.len(),
        exhaustive: complete,
        sets_examined: candidates.len() as u64,
        seed: (!exhaustive_mode).then_some(options.seed),
    })
}

/// Random symmetric generating sets, small ones first in probability: the
/// number of pairs drawn is geometric with mean about 2.
fn sample_candidates(
    group: &FiniteGroup,
    pairs: &[(Element, Element)],
    budget: u64,
    seed: u64,
) -> Vec<Vec<Element>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for _ in 0..budget.saturating_mul(4) {
        if out.len() as u64 == budget {
            break;
        }
        let mut size = 1;
        while size < pairs.len() && rng.random_bool(0.5) {
            size += 1;
        }
        let mut chosen = BTreeSet::new();
        while chosen.len() < size {
            chosen.insert(rng.random_range(0..pairs.len()));
        }
        if !seen.insert(chosen.clone()) {
            continue;
        }
        let elems = elements_of(pairs, chosen.into_iter());
        if generates(group, &elems) {
            out.push(elems);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuantitativeReport {
    pub case: Case,
    pub radius: usize,
    pub ball_size: usize,
    pub xi_ball_order: usize,
    pub xi_group_order: usize,
    pub pass: bool,
}

/// Checks `ξ_{S^{≤k}} = ξ_G` for the radius `k` dictated by the case of `G`.
pub fn verify_quantitative(s: &GeneratingSet) -> Result<QuantitativeReport> {
    let group = s.group();
    let case = classify(group).case;
    let radius = case.quantitative_radius();
    let ball = s.ball(radius);
    let xi_ball = xi_stabilizer(&CayleyGraph::new(&ball))?;
    let xi_group = xi_of_group(group)?;
    Ok(QuantitativeReport {
        case,
        radius,
        ball_size: ball.len(),
        xi_ball_order: xi_ball.order(),
        xi_group_order: xi_group.order(),
        pass: xi_ball.same_elements(&xi_group),
    })
}

/// The predicted `ξ_G` as explicit permutations, from the structural witnesses.
pub fn predicted_xi(
    group: &FiniteGroup,
    classification: &Classification,
) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(group.order());
    let mut maps = match classification.case {
        Case::Boolean | Case::Neither => vec![id],
        Case::AbelianOrderGe3 => vec![id, eta_map(group)],
        Case::OtherGeneralizedDicyclic => {
            let w = classification
                .witness
                .as_ref()
                .ok_or_else(|| Error::Precondition("classification lacks a witness".into()))?;
            vec![id, psi_map(group, w)?]
        }
        Case::Q8TimesBoolean => {
            let d = classification.decomposition.as_ref().ok_or_else(|| {
                Error::Precondition("classification lacks a decomposition".into())
            })?;
            ALL_SIGN_TRIPLES
                .iter()
                .map(|&eps| phi_eps_product(group, d.i, d.j, &d.boolean_factor, eps))
                .collect::<Result<_>>()?
        }
    };
    maps.sort();
    maps.dedup();
    Ok(maps)
}

fn ball_xi(s: &GeneratingSet, radius: usize) -> Result<Stabilizer> {
    xi_stabilizer(&CayleyGraph::new(&s.ball(radius)))
}

/// Search nodes spent on reporting `|ξ|` for balls whose stabilizer is only
/// tested for membership; it can have tens of thousands of elements.
pub const ORDER_REPORT_BUDGET: u64 = 2_000_000;

/// `|ξ|` when it can be enumerated within [`ORDER_REPORT_BUDGET`].
fn order_if_cheap(graph: &CayleyGraph) -> Result<Option<usize>> {
    match xi_stabilizer_with_budget(graph, ORDER_REPORT_BUDGET) {
        Ok(xi) => Ok(Some(xi.order())),
        Err(e) if e.is_resource_limit() => Ok(None),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductExampleReport {
    pub m: usize,
    pub n: usize,
    pub xi_s_order: usize,
    pub xi_ball2_order: usize,
    pub named_maps_distinct: bool,
    pub named_maps_in_xi_s: bool,
}

impl ProductExampleReport {
    pub fn passed(&self) -> bool {
        self.named_maps_distinct
            && self.named_maps_in_xi_s
            && self.xi_s_order >= 4
            && self.xi_ball2_order == 2
    }
}

/// `Z/m × Z/n` with the unit vectors: `id, η, η₁×id, id×η₂` all lie in `ξ_S`
/// while `ξ_{S^{≤2}} = {id, η}`.
pub fn optimality_example_product(m: usize, n: usize) -> Result<ProductExampleReport> {
    if m < 3 || n < 3 {
        return Err(Error::malformed("both factors need order at least 3"));
    }
    let g = Arc::new(direct_product(&cyclic(m)?, &cyclic(n)?));
    let s = GeneratingSet::new(g.clone(), &[n, 1], true)?;
    let xi_s = xi_stabilizer(&CayleyGraph::new(&s))?;
    let xi_ball2 = ball_xi(&s, 2)?;
    let neg = |x: usize, k: usize| (k - x) % k;
    let map = |f: &dyn Fn(usize, usize) -> (usize, usize)| {
        Permutation::from_images_unchecked(
            g.elements()
                .map(|p| {
                    let (a, b) = f(p / n, p % n);
                    a * n + b
                })
                .collect(),
        )
    };
    let named = [
        map(&|a, b| (a, b)),
        map(&|a, b| (neg(a, m), neg(b, n))),
        map(&|a, b| (neg(a, m), b)),
        map(&|a, b| (a, neg(b, n))),
    ];
    let distinct = named.iter().collect::<BTreeSet<_>>().len() == 4;
    Ok(ProductExampleReport {
        m,
        n,
        xi_s_order: xi_s.order(),
        xi_ball2_order: xi_ball2.order(),
        named_maps_distinct: distinct,
        named_maps_in_xi_s: named.iter().all(|p| xi_s.contains(p)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Q8ExampleReport {
    pub n: usize,
    pub xi_ball2_order: Option<usize>,
    pub xi_group_order: usize,
    pub mixed_map_in_ball2: bool,
    pub mixed_map_in_xi_group: bool,
    pub mixed_map_in_ball3: bool,
}

impl Q8ExampleReport {
    pub fn passed(&self) -> bool {
        // ξ_G ⊆ ξ_{S^{≤2}}, so the mixed map alone forces |ξ_{S^{≤2}}| > 8.
        self.mixed_map_in_ball2
            && !self.mixed_map_in_xi_group
            && !self.mixed_map_in_ball3
            && self.xi_group_order == 8
            && self.xi_ball2_order.is_none_or(|o| o > 8)
    }
}

/// `Q8 × (Z/2)ⁿ`, and the generating set and mixed map of the example:
/// the first `Z/2` coordinate `ε` selects `id` or `η` on the `Q8` factor.
pub fn q8_example(n: usize) -> Result<(GeneratingSet, Permutation)> {
    if !(1..=4).contains(&n) {
        return Err(Error::malformed(format!("n = {n} is outside 1..=4")));
    }
    let q8 = quaternion();
    let b = abelian(&vec![2; n])?;
    let m = b.order();
    let eps_bit = m / 2;
    let g = Arc::new(direct_product(&q8, &b));
    let mut gens: Vec<Element> = ["i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|name| q8.resolve(name).map(|q| q * m + eps_bit))
        .collect::<Result<_>>()?;
    gens.extend(1..eps_bit);
    let s = GeneratingSet::new(g.clone(), &gens, false)?;
    let images = g
        .elements()
        .map(|p| {
            let (q, z) = (p / m, p % m);
            let q = if z & eps_bit != 0 { q8.inverse(q) } else { q };
            q * m + z
        })
        .collect();
    Ok((s, Permutation::from_images(images)?))
}

pub fn optimality_example_q8(n: usize) -> Result<Q8ExampleReport> {
    let (s, phi) = q8_example(n)?;
    let ball2 = CayleyGraph::new(&s.ball(2));
    let xi_ball3 = ball_xi(&s, 3)?;
    let xi_group = xi_of_group(s.group())?;
    Ok(Q8ExampleReport {
        n,
        xi_ball2_order: order_if_cheap(&ball2)?,
        xi_group_order: xi_group.order(),
        mixed_map_in_ball2: in_stabilizer(&ball2, &phi),
        mixed_map_in_xi_group: xi_group.contains(&phi),
        mixed_map_in_ball3: xi_ball3.contains(&phi),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HExampleReport {
    pub n: usize,
    pub case: Case,
    pub eta_in_ball2: bool,
    pub xi_ball2_order: Option<usize>,
    pub xi_ball3_order: usize,
    pub xi_ball3_equals_xi_group: bool,
    pub eta_in_ball3: bool,
}

impl HExampleReport {
    /// `η ∈ ξ_{S^{≤2}}` always; radius 3 must already give `ξ_G`, which is
    /// trivial once `H_n` is neither abelian nor generalized dicyclic.
    pub fn passed(&self) -> bool {
        let ball3_ok = match self.case {
            Case::Neither => self.xi_ball3_order == 1,
            _ => self.xi_ball3_equals_xi_group,
        };
        self.eta_in_ball2 && ball3_ok
    }
}

pub fn optimality_example_h(n: usize) -> Result<HExampleReport> {
    if !(2..=6).contains(&n) {
        return Err(Error::malformed(format!("n = {n} is outside 2..=6")));
    }
    let (g, s) = h_group(n)?;
    let eta = eta_map(&g);
    let ball2 = CayleyGraph::new(&s.ball(2));
    let xi_ball3 = ball_xi(&s, 3)?;
    let xi_group = xi_of_group(s.group())?;
    Ok(HExampleReport {
        n,
        case: classify(&g).case,
        eta_in_ball2: in_stabilizer(&ball2, &eta),
        xi_ball2_order: order_if_cheap(&ball2)?,
        xi_ball3_order: xi_ball3.order(),
        xi_ball3_equals_xi_group: xi_ball3.same_elements(&xi_group),
        eta_in_ball3: xi_ball3.contains(&eta),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KExampleReport {
    pub n: usize,
    pub case: Case,
    pub eta_in_xi_t: bool,
    pub eta_in_ball2: bool,
    pub xi_ball3_order: usize,
    pub xi_ball3_equals_xi_group: bool,
    pub eta_in_ball3: bool,
}

impl KExampleReport {
    pub fn passed(&self) -> bool {
        self.eta_in_xi_t && self.eta_in_ball2 && self.xi_ball3_equals_xi_group
    }
}

/// `K_n = H_3 × (Z/2)ⁿ` with `T_n = (S_3 × {0}) ∪ ({1} × (Z/2)ⁿ \ {0})`.
pub fn k_example(n: usize) -> Result<GeneratingSet> {
    if !(1..=3).contains(&n) {
        return Err(Error::malformed(format!("n = {n} is outside 1..=3")));
    }
    let (h3, s3) = h_group(3)?;
    let b = abelian(&vec![2; n])?;
    let m = b.order();
    let g = Arc::new(direct_product(&h3, &b));
    let mut gens: Vec<Element> = s3.elements().iter().map(|&s| s * m).collect();
    gens.extend(1..m);
    GeneratingSet::new(g, &gens, false)
}

pub fn optimality_example_k(n: usize) -> Result<KExampleReport> {
    let t = k_example(n)?;
    let g = t.group();
    let eta = eta_map(g);
    let xi_ball3 = ball_xi(&t, 3)?;
    let xi_group = xi_of_group(g)?;
    Ok(KExampleReport {
        n,
        case: classify(g).case,
        eta_in_xi_t: in_stabilizer(&CayleyGraph::new(&t), &eta),
        eta_in_ball2: in_stabilizer(&CayleyGraph::new(&t.ball(2)), &eta),
        xi_ball3_order: xi_ball3.order(),
        xi_ball3_equals_xi_group: xi_ball3.same_elements(&xi_group),
        eta_in_ball3: xi_ball3.contains(&eta),
    })
}

/// Lifts each `φ ∈ ξ_G` to `G × B` and checks the result against the
/// computed `ξ_{G×B}`; exposed here for reports that already hold `ξ_G`.
pub fn lifted_stabilizer(xi: &Stabilizer, boolean_order: usize) -> Vec<Permutation> {
    let mut lifted: Vec<_> = xi
        .elements()
        .iter()
        .map(|phi| lift_over_boolean(phi, boolean_order))
        .collect();
    lifted.sort();
    lifted
}

#[cfg(test)]
mod tests {
    use super::*;

    fn genset(g: FiniteGroup, elems: &[Element]) -> GeneratingSet {
        GeneratingSet::new(Arc::new(g), elems, true).unwrap()
    }

    #[test]
    fn index_examples() {
        let r = index_of(&genset(cyclic(5).unwrap(), &[1])).unwrap();
        assert_eq!(
            (r.full_aut_order, r.cayley_index, r.colour_index),
            (10, 2, 2)
        );
        let r = index_of(&genset(cyclic(5).unwrap(), &[1, 2])).unwrap();
        assert_eq!((r.cayley_index, r.colour_index), (24, 2));
        let r = index_of(&genset(cyclic(2).unwrap(), &[1])).unwrap();
        assert_eq!(r.cayley_index, 1);
    }

    #[test]
    fn search_examples() {
        let opts = SearchOptions::default();
        let r = cayley_index_search(&Arc::new(cyclic(5).unwrap()), opts).unwrap();
        assert_eq!((r.best_index, r.exhaustive, r.sets_examined), (2, true, 3));
        let r = cayley_index_search(&Arc::new(abelian(&[2, 2]).unwrap()), opts).unwrap();
        assert_eq!((r.best_index, r.exhaustive), (2, true));
        let r = cayley_index_search(&Arc::new(cyclic(2).unwrap()), opts).unwrap();
        assert_eq!(r.best_index, 1);
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let g = Arc::new(cyclic(12).unwrap());
        let par = cayley_index_search(&g, SearchOptions::default()).unwrap();
        let seq = cayley_index_search(
            &g,
            SearchOptions {
                parallel: false,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(par, seq);
    }

    #[test]
    fn budget_truncates_search() {
        let opts = SearchOptions {
            budget: 2,
            ..Default::default()
        };
        let r = cayley_index_search(&Arc::new(cyclic(6).unwrap()), opts).unwrap();
        assert!(!r.exhaustive);
        assert_eq!(r.sets_examined, 2);
    }

    #[test]
    fn sampled_search_is_reproducible() {
        let g = Arc::new(direct_product(&cyclic(3).unwrap(), &cyclic(6).unwrap()));
        let opts = SearchOptions {
            mode: SearchMode::Sampled,
            budget: 20,
            seed: 7,
            ..Default::default()
        };
        let a = cayley_index_search(&g, opts).unwrap();
        assert_eq!(a, cayley_index_search(&g, opts).unwrap());
        assert!(!a.exhaustive);
        assert_eq!(a.seed, Some(7));
    }

    #[test]
    fn quantitative_examples() {
        let r = verify_quantitative(&genset(cyclic(6).unwrap(), &[1])).unwrap();
        assert_eq!(
            (r.case, r.radius, r.xi_ball_order, r.xi_group_order),
            (Case::AbelianOrderGe3, 2, 2, 2)
        );
        assert!(r.pass);
        let (s, _) = q8_example(1).unwrap();
        let r = verify_quantitative(&s).unwrap();
        assert_eq!(
            (r.case, r.radius, r.xi_ball_order),
            (Case::Q8TimesBoolean, 3, 8)
        );
        assert!(r.pass);
    }

    #[test]
    fn product_example() {
        let r = optimality_example_product(3, 4).unwrap();
        assert!(r.named_maps_distinct);
        assert!(r.passed(), "{r:?}");
        assert!(optimality_example_product(2, 5).is_err());
    }

    #[test]
    fn q8_example_one() {
        let r = optimality_example_q8(1).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(optimality_example_q8(0).is_err());
    }

    #[test]
    fn h_examples() {
        for n in [2, 3, 4] {
            let r = optimality_example_h(n).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        assert_eq!(optimality_example_h(4).unwrap().xi_ball3_order, 1);
        assert!(optimality_example_h(7).is_err());
    }

    #[test]
    fn k_example_one() {
        let r = optimality_example_k(1).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(optimality_example_k(4).is_err());
    }
}
