//! Stabilizer chains (bases and strong generating sets).
//!
//! Transversals are stored as Schreier vectors: for every orbit point the
//! index of the strong generator that first reached it. Coset
//! representatives are rebuilt by tracing back to the base point, which
//! keeps memory linear in the degree per level.

use std::collections::HashSet;

use rand::Rng;

use super::Perm;

const NOT_IN_ORBIT: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

#[derive(Clone, Debug)]
pub struct Level {
    base_point: u32,
    gens: Vec<Perm>,
    gens_inv: Vec<Perm>,
    orbit: Vec<u32>,
    /// Per point: `NOT_IN_ORBIT`, `ROOT`, or the generator index that reached it.
    edge: Vec<u32>,
}

impl Level {
    fn new(base_point: u32, degree: usize) -> Level {
        let mut edge = vec![NOT_IN_ORBIT; degree];
        edge[base_point as usize] = ROOT;
        Level { base_point, gens: Vec::new(), gens_inv: Vec::new(), orbit: vec![base_point], edge }
    }

    pub fn base_point(&self) -> u32 {
        self.base_point
    }

    pub fn orbit(&self) -> &[u32] {
        &self.orbit
    }

    /// Strong generators of the stabilizer of all earlier base points.
    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    #[inline]
    pub fn in_orbit(&self, point: u32) -> bool {
        self.edge[point as usize] != NOT_IN_ORBIT
    }

    fn add_generator(&mut self, g: Perm) {
        let gi = self.gens.len();
        self.gens_inv.push(g.inverse());
        self.gens.push(g);
        // New generator applied to old points, then full BFS on new points.
        let old_len = self.orbit.len();
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            let range = if head < old_len { gi..gi + 1 } else { 0..self.gens.len() };
            for s in range {
                let y = self.gens[s].apply(x);
                if self.edge[y as usize] == NOT_IN_ORBIT {
                    self.edge[y as usize] = s as u32;
                    self.orbit.push(y);
                }
            }
            head += 1;
        }
    }

    /// `h * u_point^{-1}` where `u_point` maps the base point to `point`.
    fn strip(&self, mut h: Perm, mut point: u32) -> Perm {
        while self.edge[point as usize] != ROOT {
            let s = self.edge[point as usize] as usize;
            let inv = &self.gens_inv[s];
            point = inv.apply(point);
            h = &h * inv;
        }
        h
    }

    /// Coset representative mapping the base point to `point`.
    pub fn transversal_element(&self, point: u32) -> Option<Perm> {
        if !self.in_orbit(point) {
            return None;
        }
        let mut word = Vec::new();
        let mut x = point;
        while self.edge[x as usize] != ROOT {
            let s = self.edge[x as usize] as usize;
            word.push(s);
            x = self.gens_inv[s].apply(x);
        }
        let degree = self.edge.len();
        let mut u = Perm::identity(degree);
        for &s in word.iter().rev() {
            u = &u * &self.gens[s];
        }
        Some(u)
    }
}

/// A base and strong generating set for a permutation group.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Deterministic Schreier–Sims. The base starts with `prefix`; further
    /// base points are the smallest points moved by the element that forced
    /// a new level.
    pub fn build(degree: usize, generators: &[Perm], prefix: &[u32]) -> StabChain {
        let mut chain = StabChain { degree, levels: prefix.iter().map(|&b| Level::new(b, degree)).collect() };
        for g in generators.iter().filter(|g| !g.is_identity()) {
            chain.insert_strong_generator(g.clone(), 0);
        }
        let mut done: Vec<HashSet<(u32, u32)>> = vec![HashSet::new(); chain.levels.len()];
        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            let li = i as usize;
            let mut restart = None;
            let mut pos = 0;
            'scan: while pos < chain.levels[li].orbit.len() {
                let beta = chain.levels[li].orbit[pos];
                let mut s = 0;
                while s < chain.levels[li].gens.len() {
                    if !done[li].insert((beta, s as u32)) {
                        s += 1;
                        continue;
                    }
                    let level = &chain.levels[li];
                    let gamma = level.gens[s].apply(beta);
                    // Tree edges give trivial Schreier generators.
                    if level.edge[gamma as usize] == s as u32
                        && level.gens_inv[s].apply(gamma) == beta
                        && gamma != level.base_point
                    {
                        s += 1;
                        continue;
                    }
                    let u_beta = level.transversal_element(beta).expect("orbit point");
                    let h = level.strip(&u_beta * &level.gens[s], gamma);
                    if h.is_identity() {
                        s += 1;
                        continue;
                    }
                    let (residue, j) = chain.sift_from(h, li + 1);
                    if !residue.is_identity() {
                        chain.insert_strong_generator(residue, li + 1);
                        while done.len() < chain.levels.len() {
                            done.push(HashSet::new());
                        }
                        restart = Some(j);
                        break 'scan;
                    }
                    s += 1;
                }
                pos += 1;
            }
            match restart {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
        chain
    }

    /// Seeded randomized construction that stops once the chain order
    /// reaches `order`. Exact when `order` is the true group order.
    pub fn build_with_order<R: Rng>(
        degree: usize,
        generators: &[Perm],
        prefix: &[u32],
        order: u128,
        rng: &mut R,
    ) -> StabChain {
        let mut chain = StabChain { degree, levels: prefix.iter().map(|&b| Level::new(b, degree)).collect() };
        let gens: Vec<Perm> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            let (r, _) = chain.sift_from(g.clone(), 0);
            if !r.is_identity() {
                chain.insert_strong_generator(r, 0);
            }
        }
        if gens.is_empty() {
            return chain;
        }
        let mut pool = ProductReplacement::new(&gens, rng);
        while chain.order() < order {
            let g = pool.next(rng);
            let (r, _) = chain.sift_from(g, 0);
            if !r.is_identity() {
                chain.insert_strong_generator(r, 0);
            }
        }
        chain
    }

    /// Adds `g` (which fixes the base points before `from`) to every level
    /// from `from` up to the first base point it moves, creating a level if
    /// it fixes the whole base.
    fn insert_strong_generator(&mut self, g: Perm, from: usize) {
        let mut last = from;
        while last < self.levels.len() && g.apply(self.levels[last].base_point) == self.levels[last].base_point {
            last += 1;
        }
        if last == self.levels.len() {
            let b = g.first_moved().expect("non-identity");
            self.levels.push(Level::new(b, self.degree));
        }
        for l in from..=last {
            self.levels[l].add_generator(g.clone());
        }
    }

    /// Sifts `h` through levels `start..`; returns the residue and the level
    /// at which sifting stopped (the chain length if it went through).
    pub fn sift_from(&self, mut h: Perm, start: usize) -> (Perm, usize) {
        for l in start..self.levels.len() {
            let level = &self.levels[l];
            let gamma = h.apply(level.base_point);
            if !level.in_orbit(gamma) {
                return (h, l);
            }
            h = level.strip(h, gamma);
        }
        (h, self.levels.len())
    }

    pub fn sift(&self, h: &Perm) -> Perm {
        self.sift_from(h.clone(), 0).0
    }

    pub fn contains(&self, h: &Perm) -> bool {
        h.degree() == self.degree && self.sift(h).is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Chain for the stabilizer of the first `from` base points.
    pub fn sub_chain(&self, from: usize) -> StabChain {
        StabChain { degree: self.degree, levels: self.levels[from.min(self.levels.len())..].to_vec() }
    }

    /// Strong generators of the whole group.
    pub fn strong_generators(&self) -> &[Perm] {
        self.levels.first().map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    /// Uniformly distributed random element.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Perm {
        let mut g = Perm::identity(self.degree);
        for level in self.levels.iter().rev() {
            let pt = level.orbit[rng.gen_range(0..level.orbit.len())];
            let u = level.transversal_element(pt).expect("orbit point");
            g = &g * &u;
        }
        g
    }

    /// All group elements (products of transversal elements).
    pub fn elements(&self) -> Vec<Perm> {
        let mut list = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let transversal: Vec<Perm> =
                level.orbit.iter().map(|&p| level.transversal_element(p).expect("orbit point")).collect();
            let mut next = Vec::with_capacity(list.len() * transversal.len());
            for h in &list {
                for u in &transversal {
                    next.push(h * u);
                }
            }
            list = next;
        }
        list
    }
}

/// Product-replacement random element generator.
pub struct ProductReplacement {
    slots: Vec<Perm>,
    acc: Perm,
}

impl ProductReplacement {
    pub fn new<R: Rng>(gens: &[Perm], rng: &mut R) -> Self {
        let n = gens[0].degree();
        let mut slots: Vec<Perm> = gens.to_vec();
        while slots.len() < 10 {
            let k = slots.len() % gens.len();
            slots.push(gens[k].clone());
        }
        let mut pr = ProductReplacement { slots, acc: Perm::identity(n) };
        for _ in 0..50 {
            pr.next(rng);
        }
        pr
    }

    pub fn next<R: Rng>(&mut self, rng: &mut R) -> Perm {
        let n = self.slots.len();
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let s =
            if rng.gen_bool(0.5) { &self.slots[i] * &self.slots[j] } else { &self.slots[i] * &self.slots[j].inverse() };
        self.slots[i] = s;
        self.acc = &self.acc * &self.slots[i];
        self.acc.clone()
    }
}
