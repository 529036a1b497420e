use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

use super::action::point_orbits;
use super::chain::StabChain;
use super::Perm;

/// A permutation group given by generators, with a lazily built
/// stabilizer chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    order_hint: Option<u128>,
    chain: OnceLock<StabChain>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<PermGroup> {
        if degree == 0 {
            return Err(Error::InvalidArgument("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        Ok(PermGroup { degree, generators, order_hint: None, chain: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup { degree, generators: Vec::new(), order_hint: Some(1), chain: OnceLock::new() }
    }

    /// Group whose order is known in advance; the chain is then built by a
    /// seeded randomized method that stops at that order.
    pub fn with_order(degree: usize, generators: Vec<Perm>, order: u128) -> Result<PermGroup> {
        let mut g = PermGroup::new(degree, generators)?;
        g.order_hint = Some(order);
        Ok(g)
    }

    pub(crate) fn from_chain(degree: usize, chain: StabChain) -> PermGroup {
        let generators = chain.strong_generators().to_vec();
        let order = chain.order();
        let cell = OnceLock::new();
        let _ = cell.set(chain);
        PermGroup { degree, generators, order_hint: Some(order), chain: cell }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| self.build_chain(&[]))
    }

    fn build_chain(&self, prefix: &[u32]) -> StabChain {
        let gens: &[Perm] = match self.chain.get() {
            Some(c) if !c.strong_generators().is_empty() => c.strong_generators(),
            _ => &self.generators,
        };
        match self.order_hint {
            Some(order) if order > 1 => {
                let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ prefix.len() as u64);
                StabChain::build_with_order(self.degree, gens, prefix, order, &mut rng)
            }
            _ => StabChain::build(self.degree, gens, prefix),
        }
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Perm::is_identity)
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn contains(&self, g: &Perm) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: g.degree() });
        }
        Ok(self.chain().contains(g))
    }

    /// Subgroup generated by `generators`, each checked for membership.
    pub fn subgroup(&self, generators: Vec<Perm>) -> Result<PermGroup> {
        for g in &generators {
            if !self.contains(g)? {
                return Err(Error::NotInGroup(g.to_string()));
            }
        }
        PermGroup::new(self.degree, generators)
    }

    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        seen[point as usize] = true;
        let mut orb = vec![point];
        let mut head = 0;
        while head < orb.len() {
            let x = orb[head];
            head += 1;
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    orb.push(y);
                }
            }
        }
        orb
    }

    /// All orbits, sorted, in order of smallest point.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        point_orbits(&self.generators, self.degree)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// Block labels of the finest block system in which `a` and `b` share a block.
    pub fn minimal_block(&self, a: u32, b: u32) -> Vec<u32> {
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                let up = parent[parent[x as usize] as usize];
                parent[x as usize] = up;
                x = up;
            }
            x
        }
        let mut parent: Vec<u32> = (0..self.degree as u32).collect();
        let mut pending = vec![(a, b)];
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb) as usize] = ra.min(rb);
        }
        while let Some((x, y)) = pending.pop() {
            for g in &self.generators {
                let (gx, gy) = (g.apply(x), g.apply(y));
                let (u, v) = (find(&mut parent, gx), find(&mut parent, gy));
                if u != v {
                    parent[u.max(v) as usize] = u.min(v);
                    pending.push((gx, gy));
                }
            }
        }
        (0..self.degree as u32).map(|x| find(&mut parent, x)).collect()
    }

    pub fn is_primitive(&self) -> bool {
        if !self.is_transitive() {
            return false;
        }
        if self.degree <= 2 {
            return true;
        }
        let stab = self.point_stabilizer(0);
        stab.orbits().iter().filter(|o| o[0] != 0).all(|o| self.minimal_block(0, o[0]).iter().all(|&r| r == 0))
    }

    /// Stabilizer of the points `points` in order (pointwise).
    pub fn pointwise_stabilizer(&self, points: &[u32]) -> PermGroup {
        if points.is_empty() {
            return self.clone();
        }
        let chain = self.chain();
        let base = chain.base();
        let chain = if base.len() >= points.len() && base[..points.len()] == *points {
            chain.sub_chain(points.len())
        } else {
            self.build_chain(points).sub_chain(points.len())
        };
        PermGroup::from_chain(self.degree, chain)
    }

    pub fn point_stabilizer(&self, point: u32) -> PermGroup {
        self.pointwise_stabilizer(&[point])
    }

    /// An element sending `from[i]` to `to[i]` for every `i`, if one exists.
    pub fn element_mapping(&self, from: &[u32], to: &[u32]) -> Option<Perm> {
        if from.len() != to.len() {
            return None;
        }
        let n = self.degree as u32;
        let mut distinct = from.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != from.len() || from.iter().chain(to).any(|&x| x >= n) {
            return None;
        }
        let chain = self.build_chain(from);
        let mut g = self.identity();
        for (level, &target) in chain.levels().iter().zip(to) {
            let u = level.transversal_element(g.inverse().apply(target))?;
            g = &u * &g;
        }
        from.iter().zip(to).all(|(&a, &b)| g.apply(a) == b).then_some(g)
    }

    /// True when only the identity fixes every listed point.
    pub fn is_faithful_on(&self, points: &[u32]) -> bool {
        if self.is_trivial() || points.is_empty() {
            return self.is_trivial();
        }
        let set: HashSet<u32> = points.iter().copied().collect();
        let invariant = self.generators.iter().all(|g| points.iter().all(|&p| set.contains(&g.apply(p))));
        if invariant {
            let mut pts: Vec<u32> = set.into_iter().collect();
            pts.sort_unstable();
            let index: HashMap<u32, u32> = pts.iter().enumerate().map(|(i, &p)| (p, i as u32)).collect();
            let image = self.restrict_to(&pts, &index);
            image.order() == self.order()
        } else {
            let mut pts: Vec<u32> = set.into_iter().collect();
            pts.sort_unstable();
            self.pointwise_stabilizer(&pts).order() == 1
        }
    }

    /// Permutation image on an invariant set, relabelled by position.
    pub fn restrict_to(&self, points: &[u32], index_of: &HashMap<u32, u32>) -> PermGroup {
        let gens = self.generators.iter().map(|g| g.restrict(points, index_of)).collect();
        PermGroup::new(points.len(), gens).expect("restriction degree")
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Perm {
        self.chain().random_element(rng)
    }

    /// All elements, refused above `cap`.
    pub fn elements(&self, cap: u128) -> Result<Vec<Perm>> {
        let order = self.order();
        if order > cap {
            return Err(Error::CapExceeded { what: "element enumeration", size: order, cap });
        }
        Ok(self.chain().elements())
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.chain().contains(g))
    }

    /// Group generated by the conjugates `g^x` of the generators.
    pub fn conjugate(&self, x: &Perm) -> PermGroup {
        let gens = self.generators.iter().map(|g| g.conjugate_by(x)).collect();
        let mut out = PermGroup::new(self.degree, gens).expect("same degree");
        out.order_hint = self.chain.get().map(StabChain::order).or(self.order_hint);
        out
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.order() == other.order() && self.is_subgroup_of(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_perm;
    use rand::seq::SliceRandom;

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(degree, gens.iter().map(|s| parse_perm(s, degree).unwrap()).collect()).unwrap()
    }

    fn m11() -> PermGroup {
        group(11, &["(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"])
    }

    #[test]
    fn primitivity() {
        assert!(m11().is_primitive());
        assert!(group(5, &["(1 2 3 4 5)"]).is_primitive());
        let d4 = group(4, &["(1 2 3 4)", "(1 3)"]);
        assert!(!d4.is_primitive());
        assert_eq!(d4.minimal_block(0, 2), vec![0, 1, 0, 1]);
        assert!(!group(6, &["(1 2 3 4 5 6)"]).is_primitive());
        assert!(!group(4, &["(1 2)"]).is_primitive());
    }

    #[test]
    fn element_mapping_finds_witnesses() {
        let g = m11();
        for (from, to) in [(vec![0, 1], vec![1, 0]), (vec![0, 1, 2, 3], vec![5, 9, 2, 7])] {
            let x = g.element_mapping(&from, &to).unwrap();
            assert!(g.contains(&x).unwrap());
            assert!(from.iter().zip(&to).all(|(&a, &b)| x.apply(a) == b));
        }
        assert!(g.element_mapping(&[0, 0], &[1, 2]).is_none());
        let c = group(4, &["(1 2 3 4)"]);
        assert!(c.element_mapping(&[0, 1], &[1, 0]).is_none());
    }

    fn psl27() -> PermGroup {
        // x -> x+1 and x -> -1/x on {0..6, inf}, inf = point 8
        group(8, &["(1 2 3 4 5 6 7)", "(1 8)(2 7)(3 4)(5 6)"])
    }

    #[test]
    fn orders() {
        assert_eq!(group(4, &["(1 2)", "(1 2 3 4)"]).order(), 24);
        assert_eq!(psl27().order(), 168);
        assert_eq!(m11().order(), 7920);
        assert_eq!(group(5, &["(1 2 3 4 5)", "(1 2)"]).order(), 120);
    }

    #[test]
    fn membership() {
        let a4 = group(4, &["(1 2 3)", "(2 3 4)"]);
        assert!(a4.contains(&parse_perm("(1 2 3)", 4).unwrap()).unwrap());
        assert!(!a4.contains(&parse_perm("(1 2)", 4).unwrap()).unwrap());
        let s5 = group(5, &["(1 2 3 4 5)", "(1 2)"]);
        assert!(s5.contains(&parse_perm("(1 5)(2 3)", 5).unwrap()).unwrap());
        assert!(matches!(a4.contains(&Perm::identity(5)), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn stabilizers() {
        assert_eq!(group(4, &["(1 2)", "(1 2 3 4)"]).point_stabilizer(0).order(), 6);
        let m = m11();
        let h = m.point_stabilizer(0);
        assert_eq!(h.order(), 720);
        assert_eq!(h.orbit(1).len(), 10);
        assert_eq!(psl27().point_stabilizer(0).order(), 21);
        assert_eq!(m.point_stabilizer(5).order(), 720);
        assert_eq!(m.pointwise_stabilizer(&[3, 7]).order(), 72);
    }

    #[test]
    fn faithful_and_transitive() {
        assert!(group(4, &["(1 2)", "(1 2 3 4)"]).is_transitive());
        let g = group(4, &["(1 2)(3 4)"]);
        assert!(g.is_faithful_on(&[0, 1]));
        assert!(!group(4, &["(1 2)", "(3 4)"]).is_faithful_on(&[0, 1]));
        assert!(!g.is_transitive());
    }

    #[test]
    fn randomized_chain_matches() {
        let m = m11();
        let r = PermGroup::with_order(11, m.generators().to_vec(), 7920).unwrap();
        assert_eq!(r.order(), 7920);
        assert_eq!(r.point_stabilizer(2).order(), 720);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let x = m.random_element(&mut rng);
            assert!(r.contains(&x).unwrap());
        }
    }

    #[test]
    fn element_enumeration() {
        let els = psl27().elements(1000).unwrap();
        assert_eq!(els.len(), 168);
        let set: HashSet<_> = els.iter().cloned().collect();
        assert_eq!(set.len(), 168);
        assert!(psl27().elements(100).is_err());
    }

    #[test]
    fn non_members_leave_residue() {
        let m = m11();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut outside = 0;
        for _ in 0..200 {
            let mut imgs: Vec<u32> = (0..11).collect();
            imgs.shuffle(&mut rng);
            let p = Perm::from_images(imgs).unwrap();
            if !m.contains(&p).unwrap() {
                outside += 1;
                assert!(!m.chain().sift(&p).is_identity());
            }
        }
        assert!(outside > 190);
    }
}
