use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::PermGroup;

use super::coprime::{coprime_pairs, max_coprime_set};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuborbitInfo {
    /// Smallest point of the orbit (0-based).
    pub representative: u32,
    pub length: u64,
    /// Whether the stabilizer acts faithfully on the orbit, when computed.
    pub faithful: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubdegreeReport {
    pub degree: usize,
    /// Base point (0-based).
    pub base: u32,
    pub stabilizer_order: u128,
    /// Sorted multiset of stabilizer orbit lengths.
    pub subdegrees: Vec<u64>,
    /// Orbits sorted by (length, representative).
    pub orbits: Vec<SuborbitInfo>,
    pub coprime_pairs: Vec<(u64, u64)>,
    /// For each coprime pair, whether the product is itself a subdegree.
    pub product_present: Vec<bool>,
    pub max_coprime_set: Vec<u64>,
}

impl SubdegreeReport {
    pub fn is_regular(&self) -> bool {
        self.stabilizer_order == 1
    }

    pub fn faithful_subdegrees(&self) -> Vec<u64> {
        self.orbits.iter().filter(|o| o.faithful == Some(true)).map(|o| o.length).collect()
    }
}

/// Orbit lengths of the stabilizer of `base`, with faithfulness flags when
/// `faithful` is set.
pub fn subdegrees(group: &PermGroup, base: u32, faithful: bool) -> Result<SubdegreeReport> {
    if base as usize >= group.degree() {
        return Err(Error::PointOutOfRange { point: base as usize + 1, degree: group.degree() });
    }
    if !group.is_transitive() {
        return Err(Error::Intransitive);
    }
    let stab = group.point_stabilizer(base);
    let mut orbits: Vec<SuborbitInfo> = stab
        .orbits()
        .into_iter()
        .map(|o| SuborbitInfo {
            representative: o.iter().copied().min().expect("non-empty"),
            length: o.len() as u64,
            faithful: faithful.then(|| stab.is_faithful_on(&o)),
        })
        .collect();
    orbits.sort_by_key(|o| (o.length, o.representative));
    let subdegrees: Vec<u64> = orbits.iter().map(|o| o.length).collect();
    let pairs = coprime_pairs(&subdegrees);
    let product_present = pairs.iter().map(|&(m, n)| subdegrees.contains(&(m * n))).collect();
    Ok(SubdegreeReport {
        degree: group.degree(),
        base,
        stabilizer_order: stab.order(),
        max_coprime_set: max_coprime_set(&subdegrees),
        coprime_pairs: pairs,
        product_present,
        subdegrees,
        orbits,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaithfulReport {
    pub regular: bool,
    /// Lengths of the non-trivial orbits acted on faithfully, ascending.
    pub faithful_subdegrees: Vec<u64>,
    pub max_coprime_faithful: Vec<u64>,
}

pub fn faithful_subdegrees(group: &PermGroup, base: u32) -> Result<FaithfulReport> {
    let report = subdegrees(group, base, true)?;
    Ok(faithful_from_report(&report))
}

pub fn faithful_from_report(report: &SubdegreeReport) -> FaithfulReport {
    let faithful: Vec<u64> =
        report.orbits.iter().filter(|o| o.length > 1 && o.faithful == Some(true)).map(|o| o.length).collect();
    FaithfulReport {
        regular: report.is_regular(),
        max_coprime_faithful: max_coprime_set(&faithful),
        faithful_subdegrees: faithful,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{alt, cyclic, frobenius_product, mathieu, psl2, sym};

    #[test]
    fn natural_actions() {
        assert_eq!(subdegrees(&sym(4).unwrap(), 0, false).unwrap().subdegrees, vec![1, 3]);
        assert_eq!(subdegrees(&alt(5).unwrap(), 2, false).unwrap().subdegrees, vec![1, 4]);
        let r = subdegrees(&mathieu(11).unwrap(), 0, true).unwrap();
        assert_eq!(r.subdegrees, vec![1, 10]);
        assert_eq!(r.orbits[1].faithful, Some(true));
        assert_eq!(r.subdegrees.iter().sum::<u64>(), 11);
    }

    #[test]
    fn intransitive_rejected() {
        let g = PermGroup::new(4, vec![crate::perm::parse_perm("(1 2)", 4).unwrap()]).unwrap();
        assert_eq!(subdegrees(&g, 0, false).unwrap_err(), Error::Intransitive);
    }

    #[test]
    fn regular_group() {
        let f = faithful_subdegrees(&cyclic(6).unwrap(), 0).unwrap();
        assert!(f.regular);
        assert!(f.faithful_subdegrees.is_empty());
    }

    #[test]
    fn frobenius_product_faithfulness() {
        let f = frobenius_product(&[(5, 4), (7, 3), (23, 11)]).unwrap();
        let r = subdegrees(&f.group, 0, true).unwrap();
        assert_eq!(r.max_coprime_set, vec![3, 4, 11]);
        let faithful = faithful_from_report(&r);
        assert!(faithful.max_coprime_faithful.len() <= 2);
        assert!(r.orbits.iter().filter(|o| o.length > 1).any(|o| o.faithful == Some(false)));
    }

    #[test]
    fn base_independence() {
        let g = psl2(11).unwrap();
        let a = subdegrees(&g, 0, false).unwrap().subdegrees;
        for b in [3, 7, 11] {
            assert_eq!(subdegrees(&g, b, false).unwrap().subdegrees, a);
        }
    }
}
