//! Sylow subgroups, p-cores and the Fitting subgroup test.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

use super::{Perm, PermGroup};

pub const DEFAULT_FITTING_CAP: u128 = 1_000_000;

/// Prime factorization as `(prime, exponent)` pairs.
pub fn factorize(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn p_part(order: u64, p: u64) -> (u64, u64) {
    let mut m = order;
    let mut pk = 1;
    while m.is_multiple_of(p) {
        m /= p;
        pk *= p;
    }
    (pk, m)
}

fn normalizes(x: &Perm, sub: &PermGroup) -> bool {
    sub.generators().iter().all(|g| sub.chain().contains(&g.conjugate_by(x)))
}

/// Tries to extend the p-subgroup `p_sub` by a p-element of its normalizer.
fn extend_by<I: Iterator<Item = Perm>>(p: u64, p_sub: &PermGroup, candidates: I) -> Option<PermGroup> {
    for g in candidates {
        let (pk, m) = p_part(g.order(), p);
        if pk == 1 {
            continue;
        }
        let x = g.pow(m);
        if p_sub.chain().contains(&x) || !normalizes(&x, p_sub) {
            continue;
        }
        let mut gens = p_sub.generators().to_vec();
        gens.push(x);
        return Some(PermGroup::new(p_sub.degree(), gens).expect("same degree"));
    }
    None
}

/// A Sylow `p`-subgroup: grown from the trivial group one normalizing
/// p-element at a time, sampling seeded random elements before falling
/// back to scanning all elements.
pub fn sylow_subgroup(group: &PermGroup, p: u64) -> Result<PermGroup> {
    let order = group.order();
    let target = factorize(order).into_iter().find(|&(q, _)| q == p as u128).map(|(q, e)| q.pow(e)).unwrap_or(1);
    let mut sylow = PermGroup::trivial(group.degree());
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let samples = 10 * ((order as f64).sqrt() as usize + 1);
    let mut all: Option<Vec<Perm>> = None;
    while sylow.order() < target {
        let random = (0..samples).map(|_| group.random_element(&mut rng));
        if let Some(next) = extend_by(p, &sylow, random) {
            sylow = next;
            continue;
        }
        if all.is_none() {
            all = Some(group.elements(DEFAULT_FITTING_CAP)?);
        }
        let elements = all.as_ref().expect("enumerated").iter().cloned();
        sylow = extend_by(p, &sylow, elements).ok_or_else(|| Error::InvalidArgument("Sylow search stalled".into()))?;
    }
    Ok(sylow)
}

/// Intersection of two subgroups by filtering the elements of `a`.
pub fn intersection(a: &PermGroup, b: &PermGroup, cap: u128) -> Result<PermGroup> {
    let mut out = PermGroup::trivial(a.degree());
    for x in a.elements(cap)? {
        if b.chain().contains(&x) && !out.chain().contains(&x) {
            let mut gens = out.generators().to_vec();
            gens.push(x);
            out = PermGroup::new(a.degree(), gens)?;
        }
    }
    Ok(out)
}

/// The largest normal subgroup of `group` contained in `sub`.
pub fn core(group: &PermGroup, sub: &PermGroup, cap: u128) -> Result<PermGroup> {
    let mut c = sub.clone();
    loop {
        let before = c.order();
        for s in group.generators() {
            if c.order() == 1 {
                return Ok(c);
            }
            let conj = c.conjugate(s);
            c = intersection(&c, &conj, cap)?;
        }
        if c.order() == before {
            return Ok(c);
        }
    }
}

/// The p-core: the intersection of all Sylow p-subgroups.
pub fn p_core(group: &PermGroup, p: u64, cap: u128) -> Result<PermGroup> {
    let sylow = sylow_subgroup(group, p)?;
    core(group, &sylow, cap)
}

/// True iff the Fitting subgroup (product of all p-cores) is trivial.
pub fn fitting_is_trivial(group: &PermGroup, cap: u128) -> Result<bool> {
    let order = group.order();
    if order > cap {
        return Err(Error::CapExceeded { what: "group order", size: order, cap });
    }
    for (p, _) in factorize(order) {
        if p_core(group, p as u64, cap)?.order() > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_perm;

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(degree, gens.iter().map(|s| parse_perm(s, degree).unwrap()).collect()).unwrap()
    }

    #[test]
    fn sylow_orders() {
        let s4 = group(4, &["(1 2)", "(1 2 3 4)"]);
        assert_eq!(sylow_subgroup(&s4, 2).unwrap().order(), 8);
        assert_eq!(sylow_subgroup(&s4, 3).unwrap().order(), 3);
        assert_eq!(sylow_subgroup(&s4, 5).unwrap().order(), 1);
        let m11 = group(11, &["(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"]);
        assert_eq!(sylow_subgroup(&m11, 2).unwrap().order(), 16);
        assert_eq!(sylow_subgroup(&m11, 3).unwrap().order(), 9);
    }

    #[test]
    fn fitting_examples() {
        let s4 = group(4, &["(1 2)", "(1 2 3 4)"]);
        assert!(!fitting_is_trivial(&s4, DEFAULT_FITTING_CAP).unwrap());
        assert_eq!(p_core(&s4, 2, DEFAULT_FITTING_CAP).unwrap().order(), 4);
        let a5 = group(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        assert!(fitting_is_trivial(&a5, DEFAULT_FITTING_CAP).unwrap());
        let f20 = group(5, &["(1 2 3 4 5)", "(2 3 5 4)"]);
        assert_eq!(f20.order(), 20);
        assert!(!fitting_is_trivial(&f20, DEFAULT_FITTING_CAP).unwrap());
        assert_eq!(p_core(&f20, 5, DEFAULT_FITTING_CAP).unwrap().order(), 5);
        assert!(fitting_is_trivial(&a5, 10).is_err());
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(7920), vec![(2, 4), (3, 2), (5, 1), (11, 1)]);
        assert_eq!(factorize(1), vec![]);
    }
}
