//! Finite groups stored as complete multiplication tables.
//!
//! Elements are dense indices `0..order`; every operation in the crate works
//! on those indices and carries names only for display.

mod constructors;

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub use constructors::{
    abelian, alternating, cyclic, dihedral, direct_product, generalized_dicyclic, quaternion,
    symmetric,
};

/// Index of an element in its owning [`FiniteGroup`].
pub type Element = usize;

/// Orders up to this bound get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOCIATIVITY_MAX: usize = 512;

/// A finite group given by its multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<Element>,
    identity: Element,
    names: Vec<String>,
    name_index: HashMap<String, Element>,
    label: String,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Builds a group from `table[g][h] = g·h`, checking every group axiom.
    pub fn from_table(
        table: Vec<Vec<Element>>,
        names: Vec<String>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::malformed("a group needs at least one element"));
        }
        if names.len() != order {
            return Err(Error::malformed(format!(
                "{} names given for a table of order {order}",
                names.len()
            )));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (g, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::malformed(format!(
                    "row {g} has length {}",
                    row.len()
                )));
            }
            for &h in row {
                if h >= order {
                    return Err(Error::malformed(format!(
                        "entry {h} out of range in row {g}"
                    )));
                }
                flat.push(h as u32);
            }
        }
        Self::from_flat(order, flat, names, label.into())
    }

    pub(crate) fn from_flat(
        order: usize,
        table: Vec<u32>,
        names: Vec<String>,
        label: String,
    ) -> Result<Self> {
        debug_assert_eq!(table.len(), order * order);
        let at = |g: usize, h: usize| table[g * order + h] as usize;

        // Latin square.
        let mut seen = vec![usize::MAX; order];
        for g in 0..order {
            for h in 0..order {
                let v = at(g, h);
                if seen[v] == g {
                    return Err(Error::malformed(format!("row {g} repeats entry {v}")));
                }
                seen[v] = g;
            }
        }
        seen.fill(usize::MAX);
        for h in 0..order {
            for g in 0..order {
                let v = at(g, h);
                if seen[v] == h {
                    return Err(Error::malformed(format!("column {h} repeats entry {v}")));
                }
                seen[v] = h;
            }
        }

        let identity = (0..order)
            .find(|&e| (0..order).all(|g| at(e, g) == g && at(g, e) == g))
            .ok_or_else(|| Error::malformed("table has no two-sided identity"))?;

        let mut inverses = vec![0; order];
        for (g, slot) in inverses.iter_mut().enumerate() {
            // Latin rows guarantee a unique right inverse.
            let h = (0..order).find(|&h| at(g, h) == identity).unwrap();
            if at(h, g) != identity {
                return Err(Error::malformed(format!(
                    "element {g} has no two-sided inverse"
                )));
            }
            *slot = h;
        }

        if order <= EXHAUSTIVE_ASSOCIATIVITY_MAX {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::malformed(format!(
                                "associativity fails for ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(order as u64);
            for _ in 0..10 * order {
                let (a, b, c) = (
                    rng.random_range(0..order),
                    rng.random_range(0..order),
                    rng.random_range(0..order),
                );
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(Error::malformed(format!(
                        "associativity fails for ({a}, {b}, {c})"
                    )));
                }
            }
        }

        let mut name_index = HashMap::with_capacity(order);
        for (g, name) in names.iter().enumerate() {
            if name_index.insert(name.clone(), g).is_some() {
                return Err(Error::malformed(format!("duplicate element name {name:?}")));
            }
        }

        Ok(FiniteGroup {
            order,
            table,
            inverses,
            identity,
            names,
            name_index,
            label,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    /// Spec string or free-form description this group was built from.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub(crate) fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, g: Element, h: Element) -> Element {
        self.table[g * self.order + h] as usize
    }

    pub fn checked_mul(&self, g: Element, h: Element) -> Result<Element> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.mul(g, h))
    }

    #[inline]
    pub fn inverse(&self, g: Element) -> Element {
        self.inverses[g]
    }

    pub fn checked_inverse(&self, g: Element) -> Result<Element> {
        self.check(g)?;
        Ok(self.inverse(g))
    }

    pub fn check(&self, g: Element) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(Error::malformed(format!(
                "element {g} out of range for group of order {}",
                self.order
            )))
        }
    }

    /// `g^k` for a possibly negative exponent.
    pub fn pow(&self, g: Element, k: i64) -> Element {
        let base = if k < 0 { self.inverse(g) } else { g };
        let mut acc = self.identity;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// Smallest `n ≥ 1` with `g^n = 1`.
    pub fn element_order(&self, g: Element) -> usize {
        let mut acc = g;
        let mut n = 1;
        while acc != self.identity {
            acc = self.mul(acc, g);
            n += 1;
        }
        n
    }

    pub fn commute(&self, g: Element, h: Element) -> bool {
        self.mul(g, h) == self.mul(h, g)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|g| (g + 1..self.order).all(|h| self.commute(g, h)))
    }

    pub fn is_involution_or_identity(&self, g: Element) -> bool {
        self.mul(g, g) == self.identity
    }

    pub fn name(&self, g: Element) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_by_name(&self, name: &str) -> Option<Element> {
        self.name_index.get(name).copied()
    }

    /// Resolves an element by name, falling back to a decimal index.
    pub fn resolve(&self, token: &str) -> Result<Element> {
        let token = token.trim();
        if let Some(g) = self.element_by_name(token) {
            return Ok(g);
        }
        match token.parse::<usize>() {
            Ok(g) if g < self.order => Ok(g),
            _ => Err(Error::malformed(format!(
                "no element named {token:?} in group {}",
                self.label
            ))),
        }
    }

    /// Closure of `gens` under product (hence under inverse, since the group is finite).
    pub fn subgroup_generated(&self, gens: &[Element]) -> Vec<Element> {
        let mut member = vec![false; self.order];
        member[self.identity] = true;
        let mut queue = vec![self.identity];
        let mut head = 0;
        while head < queue.len() {
            let g = queue[head];
            head += 1;
            for &s in gens {
                let h = self.mul(g, s);
                if !member[h] {
                    member[h] = true;
                    queue.push(h);
                }
            }
        }
        queue.sort_unstable();
        queue
    }

    /// Centre of the group, sorted.
    pub fn center(&self) -> Vec<Element> {
        self.elements()
            .filter(|&z| self.elements().all(|g| self.commute(z, g)))
            .collect()
    }

    /// Content digest of the multiplication table (hex, 16 chars).
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update((self.order as u64).to_le_bytes());
        for v in &self.table {
            hasher.update(v.to_le_bytes());
        }
        hex::encode(hasher.finalize())[..16].to_string()
    }

    pub(crate) fn raw_table(&self) -> &[u32] {
        &self.table
    }

    /// Row `g` of the table as a vector.
    pub fn row(&self, g: Element) -> Vec<Element> {
        self.table[g * self.order..(g + 1) * self.order]
            .iter()
            .map(|&v| v as usize)
            .collect()
    }

    /// Human-readable dump used by `group describe`.
    pub fn describe(&self) -> GroupDescription {
        GroupDescription {
            spec: self.label.clone(),
            order: self.order,
            identity: self.name(self.identity).to_string(),
            abelian: self.is_abelian(),
            digest: self.digest(),
            elements: self
                .elements()
                .map(|g| ElementDescription {
                    index: g,
                    name: self.names[g].clone(),
                    order: self.element_order(g),
                    inverse: self.names[self.inverse(g)].clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupDescription {
    pub spec: String,
    pub order: usize,
    pub identity: String,
    pub abelian: bool,
    pub digest: String,
    pub elements: Vec<ElementDescription>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ElementDescription {
    pub index: Element,
    pub name: String,
    pub order: usize,
    pub inverse: String,
}

/// An abelian subgroup `A` of index 2 together with `x ∉ A` of order 4
/// inverting `A` by conjugation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DicyclicWitness {
    abelian_subgroup: Vec<Element>,
    x: Element,
}

impl DicyclicWitness {
    /// Checks every witness invariant against `group`.
    pub fn new(
        group: &FiniteGroup,
        mut abelian_subgroup: Vec<Element>,
        x: Element,
    ) -> Result<Self> {
        abelian_subgroup.sort_unstable();
        abelian_subgroup.dedup();
        let witness = DicyclicWitness {
            abelian_subgroup,
            x,
        };
        witness.validate(group)?;
        Ok(witness)
    }

    pub fn abelian_subgroup(&self) -> &[Element] {
        &self.abelian_subgroup
    }

    pub fn x(&self) -> Element {
        self.x
    }

    pub fn contains(&self, g: Element) -> bool {
        self.abelian_subgroup.binary_search(&g).is_ok()
    }

    pub fn validate(&self, group: &FiniteGroup) -> Result<()> {
        let a = &self.abelian_subgroup;
        for &g in a.iter().chain(std::iter::once(&self.x)) {
            group.check(g)?;
        }
        if 2 * a.len() != group.order() {
            return Err(Error::malformed(format!(
                "subgroup of size {} is not of index 2 in a group of order {}",
                a.len(),
                group.order()
            )));
        }
        if !self.contains(group.identity()) {
            return Err(Error::malformed("subgroup misses the identity"));
        }
        for &g in a {
            if !self.contains(group.inverse(g)) {
                return Err(Error::malformed("subgroup not closed under inverse"));
            }
            for &h in a {
                if !self.contains(group.mul(g, h)) {
                    return Err(Error::malformed("subgroup not closed under product"));
                }
                if !group.commute(g, h) {
                    return Err(Error::malformed("subgroup is not abelian"));
                }
            }
        }
        if self.contains(self.x) {
            return Err(Error::malformed("x lies in the abelian subgroup"));
        }
        if group.element_order(self.x) != 4 {
            return Err(Error::malformed("x does not have order 4"));
        }
        if !self.contains(group.mul(self.x, self.x)) {
            return Err(Error::malformed("x² is not in the abelian subgroup"));
        }
        let x_inv = group.inverse(self.x);
        for &g in a {
            if group.mul(group.mul(self.x, g), x_inv) != group.inverse(g) {
                return Err(Error::malformed(format!(
                    "x does not invert {} by conjugation",
                    group.name(g)
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_examples() {
        let z5 = cyclic(5).unwrap();
        assert_eq!(z5.mul(2, 4), 1);
        let q8 = quaternion();
        let (i, j, k) = (
            q8.element_by_name("i").unwrap(),
            q8.element_by_name("j").unwrap(),
            q8.element_by_name("k").unwrap(),
        );
        assert_eq!(q8.mul(i, j), k);
        for g in q8.elements() {
            assert_eq!(q8.mul(q8.identity(), g), g);
        }
        assert!(matches!(z5.checked_mul(5, 1), Err(Error::Malformed(_))));
    }

    #[test]
    fn inverse_examples() {
        let z5 = cyclic(5).unwrap();
        assert_eq!(z5.inverse(2), 3);
        let q8 = quaternion();
        let i = q8.resolve("i").unwrap();
        assert_eq!(q8.name(q8.inverse(i)), "-i");
        assert_eq!(q8.inverse(q8.identity()), q8.identity());
        assert!(z5.checked_inverse(7).is_err());
    }

    #[test]
    fn element_order_examples() {
        let z6 = cyclic(6).unwrap();
        assert_eq!(z6.element_order(2), 3);
        let q8 = quaternion();
        assert_eq!(q8.element_order(q8.resolve("-1").unwrap()), 2);
        assert_eq!(q8.element_order(q8.resolve("i").unwrap()), 4);
    }

    #[test]
    fn rejects_non_latin_table() {
        let t = vec![vec![0, 1], vec![1, 1]];
        let err = FiniteGroup::from_table(t, vec!["a".into(), "b".into()], "bad").unwrap_err();
        assert!(matches!(err, Error::Malformed(_)));
    }

    #[test]
    fn rejects_non_associative_latin_square() {
        // A loop of order 5 that is not a group.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let names = (0..5).map(|i| i.to_string()).collect();
        let err = FiniteGroup::from_table(t, names, "loop").unwrap_err();
        assert!(err.to_string().contains("associativity"), "{err}");
    }

    #[test]
    fn subgroup_generated_examples() {
        let q8 = quaternion();
        let i = q8.resolve("i").unwrap();
        let sub: Vec<&str> = q8
            .subgroup_generated(&[i])
            .iter()
            .map(|&g| q8.name(g))
            .collect();
        let mut sorted = sub.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["-1", "-i", "1", "i"]);
        assert_eq!(q8.subgroup_generated(&[]), vec![q8.identity()]);
    }

    #[test]
    fn quaternion_center_is_plus_minus_one() {
        let q8 = quaternion();
        let names: Vec<&str> = q8.center().iter().map(|&g| q8.name(g)).collect();
        assert_eq!(names, vec!["1", "-1"]);
    }

    #[test]
    fn witness_validation_catches_bad_x() {
        let q8 = quaternion();
        let a = q8.subgroup_generated(&[q8.resolve("i").unwrap()]);
        assert!(DicyclicWitness::new(&q8, a.clone(), q8.resolve("j").unwrap()).is_ok());
        assert!(DicyclicWitness::new(&q8, a, q8.resolve("i").unwrap()).is_err());
    }
}
