//! p-solubility and Hall p'-subgroups at desk scale.

use crate::error::{Error, Result};
use crate::perm::{gcd, Perm, PermGroup};

pub const DEFAULT_SOLUBLE_CAP: u128 = 10_000;

fn is_power_of(mut n: u128, p: u128) -> bool {
    while n > 1 && n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Smallest subgroup of `k` containing `base` and normalized by `k`, generated with `extra`.
fn normal_closure(k: &PermGroup, base: &PermGroup, extra: &Perm) -> PermGroup {
    let mut gens = base.generators().to_vec();
    gens.push(extra.clone());
    let mut m = PermGroup::new(k.degree(), gens.clone()).expect("degree");
    let mut i = 0;
    while i < gens.len() {
        for g in k.generators() {
            let c = gens[i].conjugate_by(g);
            if !m.chain().contains(&c) {
                gens.push(c);
                m = PermGroup::new(k.degree(), gens.clone()).expect("degree");
            }
        }
        i += 1;
    }
    m
}

/// Whether each factor of a normal series through `n ⊴ k` refines to factors
/// that are p-groups or p'-groups.
fn section_is_p_soluble(k: &PermGroup, n: &PermGroup, p: u128, cap: u128) -> Result<bool> {
    let m = k.order() / n.order();
    if !m.is_multiple_of(p) || is_power_of(m, p) {
        return Ok(true);
    }
    let mut elements = k.elements(cap)?;
    elements.sort();
    let mut done = vec![false; elements.len()];
    let position = |x: &Perm| elements.binary_search(x).expect("member");
    for i in 0..elements.len() {
        if done[i] || n.chain().contains(&elements[i]) {
            continue;
        }
        let closure = normal_closure(k, n, &elements[i]);
        if closure.order() < k.order() {
            return Ok(section_is_p_soluble(k, &closure, p, cap)? && section_is_p_soluble(&closure, n, p, cap)?);
        }
        let mut class = vec![i];
        done[i] = true;
        while let Some(j) = class.pop() {
            for g in k.generators() {
                let c = position(&elements[j].conjugate_by(g));
                if !done[c] {
                    done[c] = true;
                    class.push(c);
                }
            }
        }
    }
    Ok(false)
}

/// True when every composition factor has order a power of `p` or coprime to `p`.
pub fn is_p_soluble(group: &PermGroup, p: u64, cap: u128) -> Result<bool> {
    if group.order() > cap {
        return Err(Error::CapExceeded { what: "p-solubility", size: group.order(), cap });
    }
    section_is_p_soluble(group, &PermGroup::trivial(group.degree()), p as u128, cap)
}

/// A maximal p'-subgroup grown greedily; in a p-soluble group this is a Hall p'-subgroup.
pub fn hall_p_complement(group: &PermGroup, p: u64, cap: u128) -> Result<PermGroup> {
    let target = {
        let mut m = group.order();
        while m.is_multiple_of(p as u128) {
            m /= p as u128;
        }
        m
    };
    let mut l = PermGroup::trivial(group.degree());
    for x in group.elements(cap)? {
        if l.order() == target {
            break;
        }
        if gcd(x.order(), p) != 1 || l.chain().contains(&x) {
            continue;
        }
        let mut gens = l.generators().to_vec();
        gens.push(x);
        let next = PermGroup::new(group.degree(), gens)?;
        if next.order() % p as u128 != 0 {
            l = next;
        }
    }
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{alt, psl2, sym};

    #[test]
    fn solubility() {
        assert!(is_p_soluble(&sym(4).unwrap(), 2, DEFAULT_SOLUBLE_CAP).unwrap());
        assert!(!is_p_soluble(&alt(5).unwrap(), 2, DEFAULT_SOLUBLE_CAP).unwrap());
        assert!(is_p_soluble(&alt(5).unwrap(), 7, DEFAULT_SOLUBLE_CAP).unwrap());
        assert!(!is_p_soluble(&sym(5).unwrap(), 5, DEFAULT_SOLUBLE_CAP).unwrap());
        assert!(!is_p_soluble(&psl2(7).unwrap(), 3, DEFAULT_SOLUBLE_CAP).unwrap());
    }

    #[test]
    fn hall_subgroups() {
        assert_eq!(hall_p_complement(&sym(4).unwrap(), 2, DEFAULT_SOLUBLE_CAP).unwrap().order(), 3);
        assert_eq!(hall_p_complement(&sym(4).unwrap(), 3, DEFAULT_SOLUBLE_CAP).unwrap().order(), 8);
        assert_eq!(hall_p_complement(&alt(5).unwrap(), 5, DEFAULT_SOLUBLE_CAP).unwrap().order(), 12);
    }
}
