//! The named colour automorphisms: inversion `η`, the dicyclic map `ψ`, and
//! the eight sign maps on `Q8`.

use crate::error::{Error, Result};
use crate::group::{DicyclicWitness, Element, FiniteGroup};
use crate::perm::Permutation;

/// `g ↦ g⁻¹`.
pub fn eta_map(group: &FiniteGroup) -> Permutation {
    Permutation::from_images_unchecked(group.elements().map(|g| group.inverse(g)).collect())
}

/// Identity on `A`, inversion on the coset `xA`.
pub fn psi_map(group: &FiniteGroup, witness: &DicyclicWitness) -> Result<Permutation> {
    witness.validate(group)?;
    Ok(Permutation::from_images_unchecked(
        group
            .elements()
            .map(|g| {
                if witness.contains(g) {
                    g
                } else {
                    group.inverse(g)
                }
            })
            .collect(),
    ))
}

/// Signs `(ε_i, ε_j, ε_k)`, each `+1` or `-1`.
pub type SignTriple = [i8; 3];

pub const ALL_SIGN_TRIPLES: [SignTriple; 8] = [
    [1, 1, 1],
    [1, 1, -1],
    [1, -1, 1],
    [1, -1, -1],
    [-1, 1, 1],
    [-1, 1, -1],
    [-1, -1, 1],
    [-1, -1, -1],
];

/// The sign map on the named quaternion group: fixes `±1` and sends `±x`
/// to `±x^{ε_x}` for `x ∈ {i, j, k}`.
pub fn phi_eps(q8: &FiniteGroup, eps: SignTriple) -> Result<Permutation> {
    let named = q8.order() == 8
        && q8.label() == "q8"
        && ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .enumerate()
            .all(|(idx, n)| q8.element_by_name(n) == Some(idx));
    if !named {
        return Err(Error::malformed("phi_eps needs the named quaternion group"));
    }
    let i = q8.resolve("i")?;
    let j = q8.resolve("j")?;
    phi_eps_product(q8, i, j, &[q8.identity()], eps)
}

/// The sign map lifted along `G = Q·B`, where `Q = ⟨i, j⟩ ≅ Q8` and `B` is a
/// Boolean complement: `q·b ↦ φ_ε(q)·b`.
pub fn phi_eps_product(
    group: &FiniteGroup,
    i: Element,
    j: Element,
    boolean_factor: &[Element],
    eps: SignTriple,
) -> Result<Permutation> {
    if eps.iter().any(|&e| e != 1 && e != -1) {
        return Err(Error::malformed(format!(
            "{eps:?} is not a triple of signs"
        )));
    }
    for &g in boolean_factor.iter().chain([&i, &j]) {
        group.check(g)?;
    }
    let minus_one = group.mul(i, i);
    let k = group.mul(i, j);
    if group.element_order(i) != 4
        || group.mul(j, j) != minus_one
        || group.mul(k, k) != minus_one
        || group.mul(k, j) != group.mul(minus_one, i)
    {
        return Err(Error::malformed(
            "i and j do not satisfy the quaternion relations",
        ));
    }
    let one = group.identity();
    let units = [(i, eps[0]), (j, eps[1]), (k, eps[2])];
    let mut q_image: Vec<(Element, Element)> = vec![(one, one), (minus_one, minus_one)];
    for (x, e) in units {
        for q in [x, group.mul(minus_one, x)] {
            q_image.push((q, if e == 1 { q } else { group.inverse(q) }));
        }
    }

    let n = group.order();
    let mut images = vec![usize::MAX; n];
    for &(q, fq) in &q_image {
        for &b in boolean_factor {
            let g = group.mul(q, b);
            if images[g] != usize::MAX {
                return Err(Error::malformed("Q·B is not a direct decomposition"));
            }
            images[g] = group.mul(fq, b);
        }
    }
    if images.contains(&usize::MAX) {
        return Err(Error::malformed("Q·B does not cover the group"));
    }
    Permutation::from_images(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{abelian, cyclic, generalized_dicyclic, quaternion};

    #[test]
    fn eta_examples() {
        let z5 = cyclic(5).unwrap();
        assert_eq!(eta_map(&z5).images(), &[0, 4, 3, 2, 1]);
        assert!(eta_map(&abelian(&[2, 2]).unwrap()).is_identity());
        let q = quaternion();
        let eta = eta_map(&q);
        for (from, to) in [
            ("1", "1"),
            ("-1", "-1"),
            ("i", "-i"),
            ("j", "-j"),
            ("k", "-k"),
        ] {
            assert_eq!(q.name(eta.apply(q.resolve(from).unwrap())), to);
        }
    }

    #[test]
    fn psi_examples() {
        let q = quaternion();
        let a = q.subgroup_generated(&[q.resolve("i").unwrap()]);
        let w = DicyclicWitness::new(&q, a, q.resolve("j").unwrap()).unwrap();
        let psi = psi_map(&q, &w).unwrap();
        for (from, to) in [
            ("1", "1"),
            ("-1", "-1"),
            ("i", "i"),
            ("-i", "-i"),
            ("j", "-j"),
            ("k", "-k"),
        ] {
            assert_eq!(q.name(psi.apply(q.resolve(from).unwrap())), to);
        }
        assert!(psi.compose(&psi).is_identity());

        let (g, w) = generalized_dicyclic(&cyclic(6).unwrap(), 3).unwrap();
        let psi = psi_map(&g, &w).unwrap();
        assert!(psi.compose(&psi).is_identity());
    }

    #[test]
    fn phi_eps_examples() {
        let q = quaternion();
        assert!(phi_eps(&q, [1, 1, 1]).unwrap().is_identity());
        assert_eq!(phi_eps(&q, [-1, -1, -1]).unwrap(), eta_map(&q));
        let maps: Vec<_> = ALL_SIGN_TRIPLES
            .iter()
            .map(|&e| phi_eps(&q, e).unwrap())
            .collect();
        for a in &maps {
            assert!(a.compose(a).is_identity());
            for b in &maps {
                assert!(maps.contains(&a.compose(b)));
            }
        }
        let mut dedup = maps.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 8);
    }

    #[test]
    fn phi_eps_rejects_other_groups() {
        let (g, _) = generalized_dicyclic(&cyclic(4).unwrap(), 2).unwrap();
        assert!(matches!(phi_eps(&g, [1, 1, 1]), Err(Error::Malformed(_))));
        assert!(phi_eps(&quaternion(), [1, 0, 1]).is_err());
    }
}
