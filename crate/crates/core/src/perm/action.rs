//! Generic group actions and breadth-first orbit computation.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use crate::error::{Error, Result};

use super::Perm;

/// Default cap on the number of points an orbit computation may visit.
pub const DEFAULT_ORBIT_CAP: usize = 10_000_000;

/// A finite set of generators acting on a domain of hashable points.
///
/// Points are expected to be in canonical form, so that `Eq` decides
/// equality of the underlying objects.
pub trait Action {
    type Point: Clone + Eq + Hash;

    fn num_generators(&self) -> usize;

    /// Image of `point` under generator number `generator`.
    fn act(&self, point: &Self::Point, generator: usize) -> Self::Point;
}

#[derive(Clone, Copy, Debug)]
pub struct OrbitOptions {
    pub cap: usize,
    pub record_points: bool,
    pub record_words: bool,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions { cap: DEFAULT_ORBIT_CAP, record_points: true, record_words: false }
    }
}

impl OrbitOptions {
    pub fn length_only() -> Self {
        OrbitOptions { record_points: false, ..Default::default() }
    }

    pub fn with_words() -> Self {
        OrbitOptions { record_words: true, ..Default::default() }
    }
}

/// Result of an orbit computation.
#[derive(Clone, Debug)]
pub struct OrbitRecord<P> {
    pub representative: P,
    pub length: usize,
    /// Orbit points in discovery order (representative first).
    pub points: Option<Vec<P>>,
    /// Schreier tree: for point `i > 0`, `(parent index, generator)` with
    /// `points[i] = act(points[parent], generator)`.
    pub tree: Option<Vec<(usize, usize)>>,
}

impl<P> OrbitRecord<P> {
    /// Generator word carrying the representative to the point at `index`.
    pub fn word(&self, index: usize) -> Option<Vec<usize>> {
        let tree = self.tree.as_ref()?;
        let mut word = Vec::new();
        let mut i = index;
        while i != 0 {
            let (parent, gen) = tree[i];
            word.push(gen);
            i = parent;
        }
        word.reverse();
        Some(word)
    }
}

/// Breadth-first closure of `start` under all generators of `action`.
pub fn orbit<A: Action>(action: &A, start: A::Point, opts: OrbitOptions) -> Result<OrbitRecord<A::Point>> {
    let mut index: HashMap<A::Point, usize> = HashMap::new();
    let mut points = vec![start.clone()];
    let mut tree = vec![(usize::MAX, usize::MAX)];
    index.insert(start.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    let ngens = action.num_generators();
    while let Some(i) = queue.pop_front() {
        for g in 0..ngens {
            let img = action.act(&points[i], g);
            if index.contains_key(&img) {
                continue;
            }
            let j = points.len();
            if j >= opts.cap {
                return Err(Error::CapExceeded { what: "orbit", size: j as u128 + 1, cap: opts.cap as u128 });
            }
            index.insert(img.clone(), j);
            points.push(img);
            tree.push((i, g));
            queue.push_back(j);
        }
    }
    let length = points.len();
    Ok(OrbitRecord {
        representative: start,
        length,
        points: (opts.record_points || opts.record_words).then_some(points),
        tree: opts.record_words.then_some(tree),
    })
}

/// Permutations acting on their points.
pub struct PointAction<'a> {
    pub generators: &'a [Perm],
}

impl Action for PointAction<'_> {
    type Point = u32;
    fn num_generators(&self) -> usize {
        self.generators.len()
    }
    fn act(&self, point: &u32, generator: usize) -> u32 {
        self.generators[generator].apply(*point)
    }
}

/// Permutations acting on permutations by conjugation, `x ↦ g⁻¹ x g`.
pub struct ConjugationAction<'a> {
    pub generators: &'a [Perm],
}

impl Action for ConjugationAction<'_> {
    type Point = Perm;
    fn num_generators(&self) -> usize {
        self.generators.len()
    }
    fn act(&self, point: &Perm, generator: usize) -> Perm {
        point.conjugate_by(&self.generators[generator])
    }
}

/// An action given by a closure `(point, generator index) -> point`.
pub struct FnAction<P, F> {
    pub generators: usize,
    pub f: F,
    _marker: std::marker::PhantomData<fn(&P) -> P>,
}

impl<P, F> FnAction<P, F>
where
    F: Fn(&P, usize) -> P,
{
    pub fn new(generators: usize, f: F) -> Self {
        FnAction { generators, f, _marker: std::marker::PhantomData }
    }
}

impl<P, F> Action for FnAction<P, F>
where
    P: Clone + Eq + Hash,
    F: Fn(&P, usize) -> P,
{
    type Point = P;
    fn num_generators(&self) -> usize {
        self.generators
    }
    fn act(&self, point: &P, generator: usize) -> P {
        (self.f)(point, generator)
    }
}

/// All orbits of a set of permutations of `degree` points, each sorted, in
/// order of their smallest point.
pub fn point_orbits(generators: &[Perm], degree: usize) -> Vec<Vec<u32>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orb = vec![start as u32];
        let mut head = 0;
        while head < orb.len() {
            let x = orb[head];
            head += 1;
            for g in generators {
                let y = g.apply(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    orb.push(y);
                }
            }
        }
        orb.sort_unstable();
        out.push(orb);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_perm;

    #[test]
    fn cyclic_orbit() {
        let g = [parse_perm("(1 2 3 4 5)", 5).unwrap()];
        let rec = orbit(&PointAction { generators: &g }, 0, OrbitOptions::default()).unwrap();
        assert_eq!(rec.length, 5);
    }

    #[test]
    fn conjugacy_class_of_transposition_in_sym4() {
        let g = [parse_perm("(1 2)", 4).unwrap(), parse_perm("(1 2 3 4)", 4).unwrap()];
        let start = g[0].clone();
        let rec = orbit(&ConjugationAction { generators: &g }, start, OrbitOptions::default()).unwrap();
        assert_eq!(rec.length, 6);
    }

    #[test]
    fn words_reach_their_points() {
        let g = [parse_perm("(1 2)", 4).unwrap(), parse_perm("(1 2 3 4)", 4).unwrap()];
        let act = PointAction { generators: &g };
        let rec = orbit(&act, 2, OrbitOptions::with_words()).unwrap();
        let pts = rec.points.as_ref().unwrap();
        for (i, &p) in pts.iter().enumerate() {
            let w = rec.word(i).unwrap();
            let img = w.iter().fold(rec.representative, |x, &s| act.act(&x, s));
            assert_eq!(img, p);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = [parse_perm("(1 2 3 4 5)", 5).unwrap()];
        let opts = OrbitOptions { cap: 3, ..Default::default() };
        assert!(matches!(orbit(&PointAction { generators: &g }, 0, opts), Err(Error::CapExceeded { .. })));
    }
}
