//! Exhaustive subgroup enumeration for small groups, on element indices.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

pub const DEFAULT_SUBGROUP_CAP: u128 = 10_000;

/// Element set of a subgroup as a bitset over the group's element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bitset(Vec<u64>);

impl Bitset {
    pub fn new(n: usize) -> Bitset {
        Bitset(vec![0; n.div_ceil(64)])
    }

    pub fn contains(&self, i: u32) -> bool {
        self.0[i as usize / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: u32) -> bool {
        let (w, b) = (i as usize / 64, i % 64);
        let fresh = self.0[w] >> b & 1 == 0;
        self.0[w] |= 1 << b;
        fresh
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset_of(&self, other: &Bitset) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection_len(&self, other: &Bitset) -> usize {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| (w * 64 + b) as u32))
    }
}

#[derive(Clone, Debug)]
pub struct Subgroup {
    pub elements: Bitset,
    pub order: usize,
    /// Generators as element indices.
    pub generators: Vec<u32>,
}

/// The elements of a small group with lazily built right-multiplication rows.
pub struct GroupTable {
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    rows: HashMap<u32, Vec<u32>>,
    identity: u32,
}

impl GroupTable {
    pub fn new(group: &PermGroup, cap: u128) -> Result<GroupTable> {
        if group.order() > cap {
            return Err(Error::CapExceeded { what: "subgroup enumeration", size: group.order(), cap });
        }
        let mut elements = group.elements(cap)?;
        elements.sort();
        let index: HashMap<Perm, u32> = elements.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let identity = index[&group.identity()];
        Ok(GroupTable { elements, index, rows: HashMap::new(), identity })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: u32) -> &Perm {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    /// `i ↦ index(e_i · e_g)`.
    fn row(&mut self, g: u32) -> &[u32] {
        if !self.rows.contains_key(&g) {
            let gp = self.elements[g as usize].clone();
            let row = self.elements.iter().map(|e| self.index[&(e * &gp)]).collect();
            self.rows.insert(g, row);
        }
        &self.rows[&g]
    }

    pub fn mul(&mut self, a: u32, b: u32) -> u32 {
        self.row(b)[a as usize]
    }

    /// Subgroup generated by `generators`.
    pub fn closure(&mut self, generators: &[u32]) -> Subgroup {
        let mut set = Bitset::new(self.len());
        set.insert(self.identity);
        let mut list = vec![self.identity];
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &g in generators {
                let y = self.row(g)[x as usize];
                if set.insert(y) {
                    list.push(y);
                }
            }
        }
        Subgroup { order: list.len(), elements: set, generators: generators.to_vec() }
    }

    /// The subgroup on indices `s`, conjugated by the element `g`.
    pub fn conjugate(&self, s: &Bitset, g: u32) -> Bitset {
        let gp = &self.elements[g as usize];
        let mut out = Bitset::new(self.len());
        for i in s.iter() {
            out.insert(self.index[&self.elements[i as usize].conjugate_by(gp)]);
        }
        out
    }

    pub fn as_perm_group(&self, sub: &Subgroup, degree: usize) -> PermGroup {
        let gens = sub.generators.iter().map(|&i| self.elements[i as usize].clone()).collect();
        PermGroup::with_order(degree, gens, sub.order as u128).expect("same degree")
    }
}

fn is_prime_power(mut n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while !n.is_multiple_of(p) {
        p += 1;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Every subgroup, sorted by order then element set. Starts from the cyclic
/// subgroups of prime-power order and joins them onto known subgroups until
/// nothing new appears.
pub fn all_subgroups(table: &mut GroupTable) -> Vec<Subgroup> {
    let n = table.len();
    let mut seen: HashSet<Bitset> = HashSet::new();
    let mut cyclic: Vec<u32> = Vec::new();
    let mut out: Vec<Subgroup> = Vec::new();
    let trivial = table.closure(&[]);
    seen.insert(trivial.elements.clone());
    out.push(trivial);
    for i in 0..n as u32 {
        if !is_prime_power(table.element(i).order()) {
            continue;
        }
        let c = table.closure(&[i]);
        if seen.insert(c.elements.clone()) {
            cyclic.push(i);
            out.push(c);
        }
    }
    let mut frontier: Vec<usize> = (1..out.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &s in &frontier {
            for &x in &cyclic {
                if out[s].elements.contains(x) {
                    continue;
                }
                let mut gens = out[s].generators.clone();
                gens.push(x);
                let k = table.closure(&gens);
                if seen.insert(k.elements.clone()) {
                    next.push(out.len());
                    out.push(k);
                }
            }
        }
        frontier = next;
    }
    out.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.elements.0.cmp(&b.elements.0)));
    out
}

/// Indices (into `subgroups`) of the maximal subgroups.
pub fn maximal_subgroups(subgroups: &[Subgroup], group_order: usize) -> Vec<usize> {
    let proper: Vec<usize> = (0..subgroups.len()).filter(|&i| subgroups[i].order < group_order).collect();
    proper
        .iter()
        .copied()
        .filter(|&i| {
            let s = &subgroups[i];
            !proper.iter().any(|&j| {
                let t = &subgroups[j];
                t.order > s.order && t.order.is_multiple_of(s.order) && s.elements.is_subset_of(&t.elements)
            })
        })
        .collect()
}

/// Conjugacy class labels: `labels[i]` is the smallest index in the class of
/// `ids[i]`, with classes computed by conjugating under `generators`.
pub fn conjugacy_labels(table: &GroupTable, subgroups: &[Subgroup], ids: &[usize], generators: &[u32]) -> Vec<usize> {
    let position: HashMap<&Bitset, usize> = ids.iter().map(|&i| (&subgroups[i].elements, i)).collect();
    let mut label: HashMap<usize, usize> = HashMap::new();
    for &i in ids {
        if label.contains_key(&i) {
            continue;
        }
        let mut class = vec![i];
        let mut head = 0;
        while head < class.len() {
            let s = &subgroups[class[head]].elements;
            head += 1;
            for &g in generators {
                let c = table.conjugate(s, g);
                if let Some(&j) = position.get(&c) {
                    if !class.contains(&j) {
                        class.push(j);
                    }
                }
            }
        }
        let least = *class.iter().min().expect("non-empty");
        for j in class {
            label.insert(j, least);
        }
    }
    ids.iter().map(|i| label[i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{alt, cyclic, sym};

    fn count(g: &PermGroup) -> usize {
        let mut t = GroupTable::new(g, DEFAULT_SUBGROUP_CAP).unwrap();
        all_subgroups(&mut t).len()
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(count(&sym(3).unwrap()), 6);
        assert_eq!(count(&sym(4).unwrap()), 30);
        assert_eq!(count(&alt(5).unwrap()), 59);
        assert_eq!(count(&cyclic(12).unwrap()), 6);
    }

    #[test]
    fn maximal_of_alt5() {
        let g = alt(5).unwrap();
        let mut t = GroupTable::new(&g, DEFAULT_SUBGROUP_CAP).unwrap();
        let subs = all_subgroups(&mut t);
        let max = maximal_subgroups(&subs, 60);
        let mut orders: Vec<usize> = max.iter().map(|&i| subs[i].order).collect();
        orders.sort();
        orders.dedup();
        assert_eq!(orders, vec![6, 10, 12]);
        let gens: Vec<u32> = g.generators().iter().map(|p| t.index_of(p).unwrap()).collect();
        let labels = conjugacy_labels(&t, &subs, &max, &gens);
        let mut classes = labels.clone();
        classes.sort();
        classes.dedup();
        assert_eq!(classes.len(), 3);
    }

    #[test]
    fn cap_enforced() {
        assert!(GroupTable::new(&sym(8).unwrap(), DEFAULT_SUBGROUP_CAP).is_err());
    }
}
