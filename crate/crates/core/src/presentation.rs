//! Finite presentations, their parser, and HLT coset enumeration over the
//! trivial subgroup.
//!
//! Grammar accepted by [`parse_presentation`]:
//!
//! ```text
//! presentation := '<' ident (',' ident)* '|' [relation (',' relation)*] '>'
//! relation     := word ['=' word]
//! word         := '1' | factor (['*'] factor)*
//! factor       := (ident | '(' word ')') ['^' integer]
//! ```
//!
//! A relation `u = v` is stored as the relator `u v⁻¹`.

use std::fmt;

use crate::cayley::GeneratingSet;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// One letter of a word: generator index and whether it is inverted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    fn column(self) -> usize {
        2 * self.generator + usize::from(self.inverse)
    }

    fn inverted(self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Vec<Letter>>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Vec<Letter>>) -> Result<Self> {
        for (r, word) in relators.iter().enumerate() {
            if let Some(l) = word.iter().find(|l| l.generator >= generators.len()) {
                return Err(Error::malformed(format!(
                    "relator {r} references undeclared generator {}",
                    l.generator
                )));
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Vec<Letter>] {
        &self.relators
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} |", self.generators.join(", "))?;
        for (r, word) in self.relators.iter().enumerate() {
            f.write_str(if r == 0 { " " } else { ", " })?;
            if word.is_empty() {
                f.write_str("1")?;
            }
            for (i, l) in word.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                f.write_str(&self.generators[l.generator])?;
                if l.inverse {
                    f.write_str("^-1")?;
                }
            }
        }
        f.write_str(" >")
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    generators: Vec<String>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(d) => Err(Error::parse(
                self.pos,
                format!("expected '{c}', found '{d}'"),
            )),
            None => Err(Error::parse(
                self.pos,
                format!("expected '{c}', found end of input"),
            )),
        }
    }

    fn ident(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest
            .char_indices()
            .find(|&(i, c)| !(c == '_' || c.is_ascii_alphabetic() || (i > 0 && c.is_ascii_digit())))
            .map_or(rest.len(), |(i, _)| i);
        if len == 0 {
            return Err(Error::parse(start, "expected a generator name"));
        }
        self.pos += len;
        Ok((start, &rest[..len]))
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let mut len = usize::from(rest.starts_with('-'));
        len += rest[len..]
            .chars()
            .take_while(|c| c.is_ascii_digit())
            .count();
        rest[..len]
            .parse()
            .map_err(|_| Error::parse(start, "expected an integer exponent"))
            .inspect(|_| self.pos += len)
    }

    fn word(&mut self) -> Result<Vec<Letter>> {
        if self.peek() == Some('1') {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        loop {
            out.extend(self.factor()?);
            match self.peek() {
                Some('*') => self.pos += 1,
                Some(c) if c == '(' || c == '_' || c.is_ascii_alphabetic() => {}
                _ => break,
            }
        }
        Ok(out)
    }

    fn factor(&mut self) -> Result<Vec<Letter>> {
        let base = if self.peek() == Some('(') {
            self.pos += 1;
            let w = self.word()?;
            self.expect(')')?;
            w
        } else {
            let (at, name) = self.ident()?;
            let generator = self
                .generators
                .iter()
                .position(|g| g == name)
                .ok_or_else(|| Error::parse(at, format!("unknown generator '{name}'")))?;
            vec![Letter {
                generator,
                inverse: false,
            }]
        };
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let k = self.integer()?;
        let unit: Vec<Letter> = if k < 0 {
            base.iter().rev().map(|l| l.inverted()).collect()
        } else {
            base
        };
        let reps = k.unsigned_abs() as usize;
        Ok(unit
            .iter()
            .copied()
            .cycle()
            .take(unit.len() * reps)
            .collect())
    }
}

fn free_reduce(word: Vec<Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    for l in word {
        if out.last() == Some(&l.inverted()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Parses `< s1, s2 | s1 s2 s1^-1 s2, ... >`.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut p = Parser {
        src: text,
        pos: 0,
        generators: Vec::new(),
    };
    p.expect('<')?;
    loop {
        let (at, name) = p.ident()?;
        if p.generators.iter().any(|g| g == name) {
            return Err(Error::parse(
                at,
                format!("generator '{name}' declared twice"),
            ));
        }
        p.generators.push(name.to_string());
        match p.peek() {
            Some(',') => p.pos += 1,
            _ => break,
        }
    }
    p.expect('|')?;
    let mut relators = Vec::new();
    if p.peek() != Some('>') {
        loop {
            let mut w = p.word()?;
            if p.peek() == Some('=') {
                p.pos += 1;
                let rhs = p.word()?;
                w.extend(rhs.iter().rev().map(|l| l.inverted()));
            }
            relators.push(free_reduce(w));
            match p.peek() {
                Some(',') => p.pos += 1,
                _ => break,
            }
        }
    }
    p.expect('>')?;
    if let Some(c) = p.peek() {
        return Err(Error::parse(p.pos, format!("unexpected trailing '{c}'")));
    }
    Presentation::new(p.generators, relators)
}

const UNDEF: usize = usize::MAX;

/// A complete coset table over the trivial subgroup, numbered in
/// breadth-first discovery order. Row 0 is the identity coset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    columns: usize,
    rows: Vec<usize>,
    count: usize,
}

impl CosetTable {
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn num_generators(&self) -> usize {
        self.columns / 2
    }

    /// Image of `coset` under the letter.
    pub fn act(&self, coset: usize, letter: Letter) -> usize {
        self.rows[coset * self.columns + letter.column()]
    }

    /// Follows `word` from `coset`.
    pub fn trace(&self, coset: usize, word: &[Letter]) -> usize {
        word.iter().fold(coset, |c, &l| self.act(c, l))
    }
}

/// HLT enumeration state. Rows are never reused until a compaction between
/// passes of the main loop.
struct Enumerator {
    columns: usize,
    table: Vec<usize>,
    parent: Vec<usize>,
    live: usize,
    max_live: usize,
    relators: Vec<Vec<usize>>,
    queue: Vec<usize>,
}

impl Enumerator {
    #[inline]
    fn get(&self, c: usize, x: usize) -> usize {
        self.table[c * self.columns + x]
    }

    #[inline]
    fn set(&mut self, c: usize, x: usize, v: usize) {
        self.table[c * self.columns + x] = v;
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rows(&self) -> usize {
        self.parent.len()
    }

    fn new_coset(&mut self) -> Result<usize> {
        if self.live >= self.max_live {
            return Err(Error::ResourceLimit(format!(
                "coset enumeration needs more than {} live cosets",
                self.max_live
            )));
        }
        let c = self.rows();
        self.parent.push(c);
        self.table.extend(std::iter::repeat_n(UNDEF, self.columns));
        self.live += 1;
        Ok(c)
    }

    fn define(&mut self, c: usize, x: usize) -> Result<usize> {
        let d = self.new_coset()?;
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(d)
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut k = c;
        while self.parent[k] != root {
            let next = self.parent[k];
            self.parent[k] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.parent[kill] = keep;
        self.live -= 1;
        self.queue.push(kill);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i];
            i += 1;
            for x in 0..self.columns {
                let target = self.get(dead, x);
                if target == UNDEF {
                    continue;
                }
                self.set(target, x ^ 1, UNDEF);
                let mu = self.rep(dead);
                let nu = self.rep(target);
                let mu_x = self.get(mu, x);
                if mu_x != UNDEF {
                    self.merge(nu, mu_x);
                } else {
                    let nu_inv = self.get(nu, x ^ 1);
                    if nu_inv != UNDEF {
                        self.merge(mu, nu_inv);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x ^ 1, mu);
                    }
                }
            }
        }
    }

    /// Scans relator `r` at coset `c`, defining new cosets to complete the scan.
    fn scan_and_fill(&mut self, c: usize, r: usize) -> Result<()> {
        let len = self.relators[r].len();
        let (mut f, mut i) = (c, 0);
        let (mut b, mut j) = (c, len);
        loop {
            while i < j {
                let next = self.get(f, self.relators[r][i]);
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                let next = self.get(b, self.relators[r][j - 1] ^ 1);
                if next == UNDEF {
                    break;
                }
                b = next;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                let x = self.relators[r][i];
                self.set(f, x, b);
                self.set(b, x ^ 1, f);
                return Ok(());
            }
            let x = self.relators[r][i];
            self.define(f, x)?;
        }
    }

    /// Drops dead rows, renumbering live ones in their current order.
    /// Returns the new index of `cursor` (or of the next live row after it).
    fn compact(&mut self, cursor: usize) -> usize {
        let rows = self.rows();
        let mut renumber = vec![UNDEF; rows];
        let mut next = 0;
        let mut new_cursor = None;
        for (c, slot) in renumber.iter_mut().enumerate() {
            if c >= cursor && new_cursor.is_none() && self.is_live(c) {
                new_cursor = Some(next);
            }
            if self.is_live(c) {
                *slot = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next * self.columns);
        for c in (0..rows).filter(|&c| self.is_live(c)) {
            for x in 0..self.columns {
                let v = self.get(c, x);
                table.push(if v == UNDEF { UNDEF } else { renumber[v] });
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        new_cursor.unwrap_or(next)
    }

    fn run(&mut self) -> Result<()> {
        self.new_coset()?;
        let mut c = 0;
        while c < self.rows() {
            if self.is_live(c) {
                for r in 0..self.relators.len() {
                    self.scan_and_fill(c, r)?;
                    if !self.is_live(c) {
                        break;
                    }
                }
                if self.is_live(c) {
                    for x in 0..self.columns {
                        if self.get(c, x) == UNDEF {
                            self.define(c, x)?;
                        }
                    }
                }
            }
            c += 1;
            if self.rows() > 1024 && self.rows() > 2 * self.live {
                c = self.compact(c);
            }
        }
        Ok(())
    }
}

/// Enumerates the cosets of the trivial subgroup, returning the group as a
/// multiplication table together with the (normalized) coset table.
///
/// `max_cosets` caps the number of simultaneously live cosets.
pub fn todd_coxeter(
    presentation: &Presentation,
    max_cosets: usize,
) -> Result<(FiniteGroup, CosetTable)> {
    if max_cosets == 0 {
        return Err(Error::malformed("max_cosets must be at least 1"));
    }
    if presentation.relators.is_empty() {
        return Err(Error::malformed(
            "presentation has no relators; the group is free and infinite",
        ));
    }
    let columns = 2 * presentation.generators.len();
    let mut e = Enumerator {
        columns,
        table: Vec::new(),
        parent: Vec::new(),
        live: 0,
        max_live: max_cosets,
        relators: presentation
            .relators
            .iter()
            .map(|w| w.iter().map(|l| l.column()).collect())
            .collect(),
        queue: Vec::new(),
    };
    e.run()?;
    e.compact(0);
    let raw_rows = e.rows();

    // Breadth-first renumbering from coset 0, recording the spanning tree.
    let mut number = vec![UNDEF; raw_rows];
    let mut order = vec![0usize];
    let mut tree: Vec<(usize, usize)> = vec![(UNDEF, UNDEF)];
    number[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let c = order[head];
        head += 1;
        for x in 0..columns {
            let d = e.get(c, x);
            if d == UNDEF {
                return Err(Error::malformed("coset table incomplete after enumeration"));
            }
            if number[d] == UNDEF {
                number[d] = order.len();
                tree.push((number[c], x));
                order.push(d);
            }
        }
    }
    let count = order.len();
    let mut rows = Vec::with_capacity(count * columns);
    for &c in &order {
        for x in 0..columns {
            rows.push(number[e.get(c, x)]);
        }
    }
    let coset_table = CosetTable {
        columns,
        rows,
        count,
    };

    for word in &presentation.relators {
        for c in 0..count {
            if coset_table.trace(c, word) != c {
                return Err(Error::malformed(format!(
                    "relator {} does not close at coset {c}",
                    format_word(presentation, word)
                )));
            }
        }
    }

    // Element j is the coset reached by its tree word; g·h is coset g acted on by h's word.
    let mut table = vec![0u32; count * count];
    for g in 0..count {
        table[g * count] = g as u32;
        for h in 1..count {
            let (parent, x) = tree[h];
            let via = table[g * count + parent] as usize;
            table[g * count + h] = coset_table.rows[via * columns + x] as u32;
        }
    }
    let mut names = vec![String::from("1")];
    for &(parent, x) in &tree[1..count] {
        let letter = format!(
            "{}{}",
            presentation.generators[x / 2],
            if x % 2 == 1 { "^-1" } else { "" }
        );
        names.push(if parent == 0 {
            letter
        } else {
            format!("{}*{}", names[parent], letter)
        });
    }
    let label = format!("pres:{presentation}");
    let group = FiniteGroup::from_flat(count, table, names, label)?;
    Ok((group, coset_table))
}

fn format_word(p: &Presentation, word: &[Letter]) -> String {
    word.iter()
        .map(|l| {
            format!(
                "{}{}",
                p.generators[l.generator],
                if l.inverse { "^-1" } else { "" }
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Largest `n` accepted by [`h_group`] (order `2^(n+1) = 512`).
pub const H_GROUP_MAX: usize = 8;

/// The presentation `< s1..sn | s_i s_j s_i^-1 s_j (i ≠ j) >`.
pub fn h_presentation(n: usize) -> Presentation {
    let generators: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
    let mut relators = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let l = |g, inverse| Letter {
                generator: g,
                inverse,
            };
            relators.push(vec![l(i, false), l(j, false), l(i, true), l(j, false)]);
        }
    }
    Presentation {
        generators,
        relators,
    }
}

/// Builds `H_n` by coset enumeration and returns it with the symmetric closure of `{s_1, …, s_n}`.
pub fn h_group(n: usize) -> Result<(FiniteGroup, GeneratingSet)> {
    if !(2..=H_GROUP_MAX).contains(&n) {
        return Err(Error::malformed(format!(
            "hgroup:{n} needs 2 ≤ n ≤ {H_GROUP_MAX}"
        )));
    }
    let expected = 1usize << (n + 1);
    let (mut group, _) = todd_coxeter(&h_presentation(n), 64 * expected)?;
    if group.order() != expected {
        return Err(Error::malformed(format!(
            "H_{n} enumerated to order {} instead of {expected}",
            group.order()
        )));
    }
    group.set_label(format!("hgroup:{n}"));
    let gens: Vec<_> = (1..=n)
        .map(|i| group.resolve(&format!("s{i}")))
        .collect::<Result<_>>()?;
    let epsilon = group.mul(gens[0], gens[0]);
    if gens.iter().any(|&s| group.mul(s, s) != epsilon)
        || group.element_order(epsilon) != 2
        || group.elements().any(|g| !group.commute(g, epsilon))
    {
        return Err(Error::malformed(format!(
            "H_{n}: squares of generators are not a common central involution"
        )));
    }
    let group = std::sync::Arc::new(group);
    let genset = GeneratingSet::new(group.clone(), &gens, true)?;
    Ok((std::sync::Arc::unwrap_or_clone(group), genset))
}
