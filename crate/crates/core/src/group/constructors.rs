//! Constructors for the group families used throughout the crate.

use std::collections::HashMap;

use super::{DicyclicWitness, Element, FiniteGroup};
use crate::error::{Error, Result};

/// `Z/nZ` with elements named `0..n`.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::malformed("cyclic group of order 0"));
    }
    let table = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
    let names = (0..n).map(|g| g.to_string()).collect();
    FiniteGroup::from_flat(n, table, names, format!("cyclic:{n}"))
}

/// Direct product with elements `(g, h)` stored at index `g·|H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (m, n) = (g.order(), h.order());
    let order = m * n;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (a1, a2) = (a / n, a % n);
        for b in 0..order {
            let (b1, b2) = (b / n, b % n);
            table.push((g.mul(a1, b1) * n + h.mul(a2, b2)) as u32);
        }
    }
    let names = (0..order)
        .map(|a| format!("({},{})", g.name(a / n), h.name(a % n)))
        .collect();
    let label = format!("product:({})x({})", g.label(), h.label());
    FiniteGroup::from_flat(order, table, names, label).expect("direct product of groups is a group")
}

/// Iterated direct product of cyclic groups. The empty list gives the trivial group.
///
/// Elements are tuples; the first factor is the most significant index digit.
pub fn abelian(factors: &[usize]) -> Result<FiniteGroup> {
    if let Some(pos) = factors.iter().position(|&f| f == 0) {
        return Err(Error::malformed(format!("factor {pos} has order 0")));
    }
    let order: usize = factors.iter().product();
    let digits = |mut a: usize| {
        let mut d = vec![0; factors.len()];
        for (slot, &f) in d.iter_mut().zip(factors).rev() {
            *slot = a % f;
            a /= f;
        }
        d
    };
    let index = |d: &[usize]| d.iter().zip(factors).fold(0, |acc, (&x, &f)| acc * f + x);
    let coords: Vec<Vec<usize>> = (0..order).map(digits).collect();
    let mut table = Vec::with_capacity(order * order);
    let mut buf = vec![0; factors.len()];
    for a in &coords {
        for b in &coords {
            for (k, slot) in buf.iter_mut().enumerate() {
                *slot = (a[k] + b[k]) % factors[k];
            }
            table.push(index(&buf) as u32);
        }
    }
    let names = coords
        .iter()
        .map(|d| match d.len() {
            0 => "0".to_string(),
            1 => d[0].to_string(),
            _ => format!(
                "({})",
                d.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        })
        .collect();
    let label = format!(
        "abelian:{}",
        factors
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    FiniteGroup::from_flat(order, table, names, label)
}

/// The quaternion group with elements `1, -1, i, -i, j, -j, k, -k` in that index order.
pub fn quaternion() -> FiniteGroup {
    // Unit u ∈ {1, i, j, k} = {0, 1, 2, 3}; element index = 2·u + (sign bit).
    fn unit_mul(u: usize, v: usize) -> (bool, usize) {
        match (u, v) {
            (0, v) => (false, v),
            (u, 0) => (false, u),
            (u, v) if u == v => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    }
    let mut table = Vec::with_capacity(64);
    for a in 0..8 {
        for b in 0..8 {
            let (neg, w) = unit_mul(a / 2, b / 2);
            let sign = (a % 2) ^ (b % 2) ^ usize::from(neg);
            table.push((2 * w + sign) as u32);
        }
    }
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteGroup::from_flat(8, table, names, "q8".to_string()).expect("Q8 table is a group")
}

/// The group generated by an abelian `A` and `x` with `x² = y` and `x a x⁻¹ = a⁻¹`.
///
/// Element `(a, ε)` stands for `a·x^ε` and lives at index `a + ε·|A|`, so `A`
/// occupies the first half of the index range and `x` is index `|A|`.
pub fn generalized_dicyclic(
    base: &FiniteGroup,
    y: Element,
) -> Result<(FiniteGroup, DicyclicWitness)> {
    base.check(y)?;
    if !base.is_abelian() {
        return Err(Error::malformed("the base group must be abelian"));
    }
    if base.element_order(y) != 2 {
        return Err(Error::malformed(format!(
            "y = {} must have order exactly 2 (has order {})",
            base.name(y),
            base.element_order(y)
        )));
    }
    if base.elements().all(|a| base.is_involution_or_identity(a)) {
        return Err(Error::degenerate(
            "base group has exponent 2, so the extension would be abelian",
        ));
    }
    let m = base.order();
    let order = 2 * m;
    let mut table = Vec::with_capacity(order * order);
    for p in 0..order {
        let (a, e) = (p % m, p / m);
        for q in 0..order {
            let (b, f) = (q % m, q / m);
            let b = if e == 1 { base.inverse(b) } else { b };
            let mut c = base.mul(a, b);
            let mut eps = e + f;
            if eps == 2 {
                c = base.mul(c, y);
                eps = 0;
            }
            table.push((c + eps * m) as u32);
        }
    }
    let names = (0..order)
        .map(|p| {
            let a = base.name(p % m);
            if p < m {
                a.to_string()
            } else {
                format!("{a}x")
            }
        })
        .collect();
    let label = format!("dic:{}@{}", base.label(), base.name(y));
    let group = FiniteGroup::from_flat(order, table, names, label)?;
    let witness = DicyclicWitness::new(&group, (0..m).collect(), m)?;
    Ok((group, witness))
}

/// Builds a group from a set of permutations of `0..points` closed under composition.
///
/// Elements are sorted lexicographically by image array, so the identity is index 0.
/// The product is `(p·q)(v) = p(q(v))`.
fn permutation_group(perms: Vec<Vec<u8>>, label: String) -> FiniteGroup {
    let mut perms = perms;
    perms.sort();
    perms.dedup();
    let index: HashMap<&[u8], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let order = perms.len();
    let mut table = Vec::with_capacity(order * order);
    let mut buf = vec![0u8; perms[0].len()];
    for p in &perms {
        for q in &perms {
            for (slot, &v) in buf.iter_mut().zip(q) {
                *slot = p[v as usize];
            }
            table.push(index[buf.as_slice()] as u32);
        }
    }
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_flat(order, table, names, label).expect("closed permutation set is a group")
}

fn cycle_notation(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut v = p[start] as usize;
        while v != start {
            seen[v] = true;
            cycle.push(v + 1);
            v = p[v] as usize;
        }
        out.push('(');
        out.push_str(
            &cycle
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push(')');
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current: Vec<u8> = (0..n as u8).collect();
    fn heap(k: usize, a: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
        heap(k - 1, a, out);
    }
    heap(n, &mut current, &mut out);
    out
}

fn is_even(p: &[u8]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// The symmetric group on `n ≤ 6` points, elements named in cycle notation.
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if !(1..=6).contains(&n) {
        return Err(Error::malformed(format!("symmetric:{n} needs 1 ≤ n ≤ 6")));
    }
    Ok(permutation_group(
        all_permutations(n),
        format!("symmetric:{n}"),
    ))
}

/// The alternating group on `n ≤ 6` points.
pub fn alternating(n: usize) -> Result<FiniteGroup> {
    if !(1..=6).contains(&n) {
        return Err(Error::malformed(format!("alternating:{n} needs 1 ≤ n ≤ 6")));
    }
    let even = all_permutations(n)
        .into_iter()
        .filter(|p| is_even(p))
        .collect();
    Ok(permutation_group(even, format!("alternating:{n}")))
}

/// The dihedral group of order `2n`: rotations `r^k` at index `k`, reflections `s·r^k` at `n + k`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::malformed("dihedral:0"));
    }
    let order = 2 * n;
    let mut table = Vec::with_capacity(order * order);
    for p in 0..order {
        let (a, s1) = (p % n, p / n);
        for q in 0..order {
            let (b, s2) = (q % n, q / n);
            // r^a r^b = r^(a+b), r^a s r^b = s r^(b-a)
            let rot = if s2 == 1 {
                (b + n - a) % n
            } else {
                (a + b) % n
            };
            let refl = s1 ^ s2;
            table.push((rot + refl * n) as u32);
        }
    }
    let rot_name = |k: usize| match k {
        0 => String::new(),
        1 => "r".to_string(),
        k => format!("r^{k}"),
    };
    let names = (0..order)
        .map(|p| {
            let (k, s) = (p % n, p / n);
            match (s, k) {
                (0, 0) => "1".to_string(),
                (0, k) => rot_name(k),
                (_, k) => format!("s{}", rot_name(k)),
            }
        })
        .collect();
    FiniteGroup::from_flat(order, table, names, format!("dihedral:{n}"))
}
