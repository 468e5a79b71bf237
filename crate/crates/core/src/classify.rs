//! Five-way classification of finite groups by the shape of `ξ_G`, with
//! structural witnesses.
//!
//! | case | `ξ_G` |
//! |------|-------|
//! | Boolean | `{id}` |
//! | abelian with an element of order ≥ 3 | `{id, η}` |
//! | `Q8 × B`, `B` Boolean | the eight sign maps on the `Q8` factor |
//! | other generalized dicyclic | `{id, ψ}` |
//! | neither abelian nor generalized dicyclic | `{id}` |
//!
//! "Generalized dicyclic" here requires `x` of order exactly 4. Groups that
//! only qualify when `x` may be an involution (generalized dihedral groups)
//! are reported through [`Classification::literal_dicyclic_only`].

use std::sync::Arc;

use serde::Serialize;

use crate::aut::xi_of_group;
use crate::error::{Error, Result};
use crate::group::{direct_product, DicyclicWitness, Element, FiniteGroup};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Case {
    Boolean,
    AbelianOrderGe3,
    Q8TimesBoolean,
    OtherGeneralizedDicyclic,
    Neither,
}

impl Case {
    pub fn predicted_xi_order(self) -> usize {
        match self {
            Case::Boolean | Case::Neither => 1,
            Case::AbelianOrderGe3 | Case::OtherGeneralizedDicyclic => 2,
            Case::Q8TimesBoolean => 8,
        }
    }

    /// Ball radius after which `ξ_{S^{≤k}} = ξ_G` for every generating set `S`.
    pub fn quantitative_radius(self) -> usize {
        match self {
            Case::Boolean => 1,
            Case::AbelianOrderGe3 => 2,
            _ => 3,
        }
    }
}

/// An internal `Q8 = ⟨i, j⟩` with a central Boolean complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Q8Decomposition {
    pub q8_factor: Vec<Element>,
    pub boolean_factor: Vec<Element>,
    pub i: Element,
    pub j: Element,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub case: Case,
    pub predicted_xi_order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<DicyclicWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Q8Decomposition>,
    /// Non-abelian, not generalized dicyclic, but has an abelian index-2
    /// subgroup inverted by an involution outside it.
    pub literal_dicyclic_only: bool,
}

/// Every element squares to the identity.
pub fn is_boolean(group: &FiniteGroup) -> bool {
    group.elements().all(|g| group.is_involution_or_identity(g))
}

/// Greedy generating set: each element not yet in the subgroup generated so far.
fn greedy_generators(group: &FiniteGroup) -> Vec<Element> {
    let mut gens = Vec::new();
    let mut member = vec![false; group.order()];
    member[group.identity()] = true;
    for g in group.elements() {
        if !member[g] {
            gens.push(g);
            for h in group.subgroup_generated(&gens) {
                member[h] = true;
            }
        }
    }
    gens
}

/// All subgroups of index 2, as sorted element lists in ascending order.
///
/// They are the kernels of the non-trivial homomorphisms to `Z/2`, each of
/// which is determined by its values on a generating set.
pub fn index_two_subgroups(group: &FiniteGroup) -> Vec<Vec<Element>> {
    let gens = greedy_generators(group);
    let n = group.order();
    let mut kernels = Vec::new();
    for mask in 1u64..(1u64 << gens.len()) {
        let mut sign: Vec<Option<bool>> = vec![None; n];
        sign[group.identity()] = Some(false);
        let mut stack = vec![group.identity()];
        let mut consistent = true;
        'walk: while let Some(g) = stack.pop() {
            let sg = sign[g].unwrap();
            for (k, &s) in gens.iter().enumerate() {
                let h = group.mul(g, s);
                let sh = sg ^ (mask >> k & 1 == 1);
                match sign[h] {
                    None => {
                        sign[h] = Some(sh);
                        stack.push(h);
                    }
                    Some(existing) if existing != sh => {
                        consistent = false;
                        break 'walk;
                    }
                    Some(_) => {}
                }
            }
        }
        if consistent {
            kernels.push(
                group
                    .elements()
                    .filter(|&g| sign[g] == Some(false))
                    .collect::<Vec<_>>(),
            );
        }
    }
    kernels.sort();
    kernels.dedup();
    kernels
}

fn is_abelian_subset(group: &FiniteGroup, a: &[Element]) -> bool {
    a.iter()
        .enumerate()
        .all(|(i, &g)| a[i + 1..].iter().all(|&h| group.commute(g, h)))
}

fn inverts(group: &FiniteGroup, x: Element, a: &[Element]) -> bool {
    let x_inv = group.inverse(x);
    a.iter()
        .all(|&g| group.mul(group.mul(x, g), x_inv) == group.inverse(g))
}

fn find_witness_with(
    group: &FiniteGroup,
    allowed_order: &[usize],
) -> Option<(Vec<Element>, Element)> {
    if group.is_abelian() {
        return None;
    }
    for a in index_two_subgroups(group) {
        if !is_abelian_subset(group, &a) {
            continue;
        }
        let x = group.elements().find(|&x| {
            a.binary_search(&x).is_err()
                && allowed_order.contains(&group.element_order(x))
                && inverts(group, x, &a)
        });
        if let Some(x) = x {
            return Some((a, x));
        }
    }
    None
}

/// Smallest (abelian index-2 subgroup, `x`) pair, if the group is generalized dicyclic.
pub fn find_dicyclic_witness(group: &FiniteGroup) -> Option<DicyclicWitness> {
    find_witness_with(group, &[4]).map(|(a, x)| {
        DicyclicWitness::new(group, a, x).expect("search only returns valid witnesses")
    })
}

/// True when the group is non-abelian and some abelian index-2 subgroup is
/// inverted by an element of order 2 or 4 outside it.
pub fn has_literal_dicyclic_structure(group: &FiniteGroup) -> bool {
    find_witness_with(group, &[2, 4]).is_some()
}

/// Splits `G ≅ Q8 × B` with `B` Boolean, if possible.
///
/// Such groups are exactly the generalized dicyclic ones with `a² ∈ {1, x²}`
/// for every `a ∈ A`.
pub fn decompose_q8_times_boolean(group: &FiniteGroup) -> Option<Q8Decomposition> {
    let w = find_dicyclic_witness(group)?;
    let x = w.x();
    let x2 = group.mul(x, x);
    let e = group.identity();
    if w.abelian_subgroup()
        .iter()
        .any(|&a| ![e, x2].contains(&group.mul(a, a)))
    {
        return None;
    }
    let i = *w
        .abelian_subgroup()
        .iter()
        .find(|&&a| group.element_order(a) == 4)?;
    let j = x;
    let q8_factor = group.subgroup_generated(&[i, j]);
    if q8_factor.len() != 8 {
        return None;
    }

    // Boolean complement to ⟨x²⟩ inside the elements of order ≤ 2.
    let mut boolean_gens = Vec::new();
    let mut span = group.subgroup_generated(&[x2]);
    for b in group.elements() {
        if group.is_involution_or_identity(b) && span.binary_search(&b).is_err() {
            boolean_gens.push(b);
            let mut with_x2 = boolean_gens.clone();
            with_x2.push(x2);
            span = group.subgroup_generated(&with_x2);
        }
    }
    let boolean_factor = group.subgroup_generated(&boolean_gens);
    if q8_factor.len() * boolean_factor.len() != group.order() {
        return None;
    }
    let mut covered = vec![false; group.order()];
    for &q in &q8_factor {
        for &b in &boolean_factor {
            if !group.commute(q, b) || std::mem::replace(&mut covered[group.mul(q, b)], true) {
                return None;
            }
        }
    }
    Some(Q8Decomposition {
        q8_factor,
        boolean_factor,
        i,
        j,
    })
}

/// Smallest `a ∈ A` with `a² ∉ {1, x²}`.
///
/// Errors exactly when no such element exists, which happens iff the group
/// is `Q8 × B` with `B` Boolean.
pub fn find_a0(group: &FiniteGroup, witness: &DicyclicWitness) -> Result<Element> {
    witness.validate(group)?;
    let x2 = group.mul(witness.x(), witness.x());
    let e = group.identity();
    witness
        .abelian_subgroup()
        .iter()
        .copied()
        .find(|&a| {
            let a2 = group.mul(a, a);
            a2 != e && a2 != x2
        })
        .ok_or_else(|| {
            Error::Precondition("every a in A has a² ∈ {1, x²}: the group is Q8 × Boolean".into())
        })
}

pub fn classify(group: &FiniteGroup) -> Classification {
    let literal = || has_literal_dicyclic_structure(group);
    let (case, witness, decomposition, literal_only) = if is_boolean(group) {
        (Case::Boolean, None, None, false)
    } else if group.is_abelian() {
        (Case::AbelianOrderGe3, None, None, false)
    } else if let Some(w) = find_dicyclic_witness(group) {
        match decompose_q8_times_boolean(group) {
            Some(d) => (Case::Q8TimesBoolean, Some(w), Some(d), false),
            None => (Case::OtherGeneralizedDicyclic, Some(w), None, false),
        }
    } else {
        (Case::Neither, None, None, literal())
    };
    Classification {
        case,
        predicted_xi_order: case.predicted_xi_order(),
        witness,
        decomposition,
        literal_dicyclic_only: literal_only,
    }
}

/// Verifies `ξ_{G×B} = {(g, b) ↦ (φ(g), b) : φ ∈ ξ_G}` for a Boolean `B`.
pub fn check_boolean_factor_lemma(group: &FiniteGroup, boolean: &FiniteGroup) -> Result<bool> {
    if !is_boolean(boolean) {
        return Err(Error::malformed("B is not a Boolean group"));
    }
    let product = Arc::new(direct_product(group, boolean));
    let xi_product = xi_of_group(&product)?;
    let m = boolean.order();
    let lifted: Vec<Permutation> = if group.order() >= 2 {
        xi_of_group(&Arc::new(group.clone()))?
            .elements()
            .iter()
            .map(|phi| lift_over_boolean(phi, m))
            .collect()
    } else {
        vec![Permutation::identity(m)]
    };
    let mut lifted_sorted = lifted.clone();
    lifted_sorted.sort();
    lifted_sorted.dedup();
    Ok(lifted_sorted.len() == lifted.len()
        && lifted_sorted.len() == xi_product.order()
        && lifted_sorted.as_slice() == xi_product.elements())
}

/// `(g, b) ↦ (φ(g), b)` on the index layout of [`direct_product`].
pub fn lift_over_boolean(phi: &Permutation, boolean_order: usize) -> Permutation {
    let m = boolean_order;
    let images = (0..phi.len() * m)
        .map(|p| phi.apply(p / m) * m + p % m)
        .collect();
    Permutation::from_images(images).expect("lift of a permutation is a permutation")
}
