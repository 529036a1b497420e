use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{gcd, intersection, CosetKeyer, Perm, PermGroup};

use super::subgroups::{all_subgroups, conjugacy_labels, maximal_subgroups, GroupTable, DEFAULT_SUBGROUP_CAP};

pub const DEFAULT_INTERSECTION_CAP: u128 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationRecord {
    pub group_order: u128,
    pub order_a: u128,
    pub order_b: u128,
    pub order_intersection: u128,
    pub index_a: u128,
    pub index_b: u128,
    /// `G = AB`.
    pub holds: bool,
    pub coprime: bool,
    pub exact: bool,
}

impl FactorizationRecord {
    pub fn from_orders(group: u128, a: u128, b: u128, both: u128) -> FactorizationRecord {
        let (index_a, index_b) = (group / a, group / b);
        FactorizationRecord {
            group_order: group,
            order_a: a,
            order_b: b,
            order_intersection: both,
            index_a,
            index_b,
            holds: a * b == group * both,
            coprime: gcd(index_a as u64, index_b as u64) == 1,
            exact: both == 1,
        }
    }
}

/// Length of the orbit of the coset `X` under `Y`, acting by right multiplication.
fn coset_orbit_length(group: &PermGroup, x: &PermGroup, y: &PermGroup) -> usize {
    let keyer = CosetKeyer::new(group, x.generators());
    let id = group.identity();
    let mut seen: HashSet<Vec<u32>> = HashSet::from([keyer.key(&id)]);
    let mut queue = vec![id];
    while let Some(r) = queue.pop() {
        for g in y.generators() {
            let s = &r * g;
            if seen.insert(keyer.key(&s)) {
                queue.push(s);
            }
        }
    }
    seen.len()
}

/// `|A ∩ B|`, by counting an orbit on cosets when an index is small enough
/// and by enumerating the smaller subgroup otherwise.
pub fn intersection_order(group: &PermGroup, a: &PermGroup, b: &PermGroup, cap: u128) -> Result<u128> {
    let (ia, ib) = (group.order() / a.order(), group.order() / b.order());
    let (x, y, ix) = if ia <= ib { (a, b, ia) } else { (b, a, ib) };
    if ix <= cap {
        return Ok(y.order() / coset_orbit_length(group, x, y) as u128);
    }
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    if small.order() > cap {
        return Err(Error::CapExceeded { what: "intersection", size: small.order(), cap });
    }
    Ok(intersection(small, large, cap)?.order())
}

pub fn check_factorization(group: &PermGroup, a_gens: &[Perm], b_gens: &[Perm]) -> Result<FactorizationRecord> {
    let a = group.subgroup(a_gens.to_vec())?;
    let b = group.subgroup(b_gens.to_vec())?;
    check_subgroups(group, &a, &b)
}

pub fn check_subgroups(group: &PermGroup, a: &PermGroup, b: &PermGroup) -> Result<FactorizationRecord> {
    let both = intersection_order(group, a, b, DEFAULT_INTERSECTION_CAP)?;
    Ok(FactorizationRecord::from_orders(group.order(), a.order(), b.order(), both))
}

/// A coprime factorization by maximal subgroups found by exhaustive search.
#[derive(Clone, Debug, Serialize)]
pub struct MaximalFactorization {
    pub record: FactorizationRecord,
    /// Conjugacy class labels of `A` and `B` among the maximal subgroups.
    pub class_a: usize,
    pub class_b: usize,
    pub generators_a: Vec<Perm>,
    pub generators_b: Vec<Perm>,
}

pub struct FactorizationSearch {
    pub maximal_count: usize,
    /// Every pair of maximal subgroups with coprime indices (unordered, `index_a < index_b`).
    pub factorizations: Vec<MaximalFactorization>,
    /// Pairs of subgroups examined for the "coprime implies factorization"
    /// check, and how many of them violated it.
    pub pairs_checked: usize,
    pub coprime_without_factorization: usize,
}

impl FactorizationSearch {
    /// Distinct `(index_a, index_b)` pairs found.
    pub fn index_pairs(&self) -> Vec<(u128, u128)> {
        let mut v: Vec<(u128, u128)> =
            self.factorizations.iter().map(|f| (f.record.index_a, f.record.index_b)).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Distinct `(index_a, index_b, class_a, class_b)` up to conjugacy.
    pub fn class_pairs(&self) -> Vec<(u128, u128, usize, usize)> {
        let mut v: Vec<_> =
            self.factorizations.iter().map(|f| (f.record.index_a, f.record.index_b, f.class_a, f.class_b)).collect();
        v.sort();
        v.dedup();
        v
    }
}

/// All coprime factorizations `G = AB` with `A`, `B` maximal.
pub fn coprime_factorization_search(group: &PermGroup, cap: Option<u128>) -> Result<FactorizationSearch> {
    let mut table = GroupTable::new(group, cap.unwrap_or(DEFAULT_SUBGROUP_CAP))?;
    let subs = all_subgroups(&mut table);
    let n = table.len();
    let order = n as u128;
    let mut pairs_checked = 0;
    let mut violations = 0;
    for (i, a) in subs.iter().enumerate() {
        for b in &subs[i..] {
            let rec = FactorizationRecord::from_orders(
                order,
                a.order as u128,
                b.order as u128,
                a.elements.intersection_len(&b.elements) as u128,
            );
            pairs_checked += 1;
            if rec.coprime && !rec.holds {
                violations += 1;
            }
        }
    }
    let max = maximal_subgroups(&subs, n);
    let gens: Vec<u32> = group.generators().iter().map(|p| table.index_of(p).expect("member")).collect();
    let labels = conjugacy_labels(&table, &subs, &max, &gens);
    let mut factorizations = Vec::new();
    for (x, &i) in max.iter().enumerate() {
        for (y, &j) in max.iter().enumerate() {
            let (a, b) = (&subs[i], &subs[j]);
            if a.order <= b.order {
                continue;
            }
            let both = a.elements.intersection_len(&b.elements) as u128;
            let rec = FactorizationRecord::from_orders(order, a.order as u128, b.order as u128, both);
            if rec.coprime && rec.holds {
                factorizations.push(MaximalFactorization {
                    record: rec,
                    class_a: labels[x],
                    class_b: labels[y],
                    generators_a: a.generators.iter().map(|&k| table.element(k).clone()).collect(),
                    generators_b: b.generators.iter().map(|&k| table.element(k).clone()).collect(),
                });
            }
        }
    }
    Ok(FactorizationSearch {
        maximal_count: max.len(),
        factorizations,
        pairs_checked,
        coprime_without_factorization: violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{alt, cyclic, mathieu, psl2, sym};
    use crate::perm::parse_perm;

    #[test]
    fn sym4_alt4_transposition() {
        let g = sym(4).unwrap();
        let a = alt(4).unwrap().generators().to_vec();
        let b = vec![parse_perm("(1 2)", 4).unwrap()];
        let r = check_factorization(&g, &a, &b).unwrap();
        assert!(r.holds && !r.coprime);
        assert_eq!((r.index_a, r.index_b), (2, 12));
        assert!(check_factorization(&g, &[parse_perm("(1 2 3 4 5)", 5).unwrap()], &b).is_err());
    }

    #[test]
    fn orbit_count_matches_enumeration() {
        let g = mathieu(11).unwrap();
        let a = g.point_stabilizer(0);
        let b = g.pointwise_stabilizer(&[1, 2]);
        let counted = intersection_order(&g, &a, &b, DEFAULT_INTERSECTION_CAP).unwrap();
        let enumerated = intersection(&b, &a, 10_000).unwrap().order();
        assert_eq!(counted, enumerated);
        assert_eq!(counted, 8);
    }

    #[test]
    fn searches() {
        assert_eq!(coprime_factorization_search(&alt(5).unwrap(), None).unwrap().index_pairs(), vec![(5, 6)]);
        assert_eq!(coprime_factorization_search(&psl2(7).unwrap(), None).unwrap().index_pairs(), vec![(7, 8)]);
        let c = coprime_factorization_search(&cyclic(30).unwrap(), None).unwrap();
        assert_eq!(c.index_pairs(), vec![(2, 3), (2, 5), (3, 5)]);
        assert_eq!(c.coprime_without_factorization, 0);
    }
}
