use std::sync::Arc;

use super::field::{Elem, Field};
use super::mat::{row_reduce, vec_add, vec_scale, Vector};

/// A subspace of `GF(q)^n` held as a reduced echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: Arc<Field>,
    ambient: usize,
    basis: Vec<Vector>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl std::hash::Hash for Subspace {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.basis.hash(state);
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// By dimension, then canonical basis.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.dim(), &self.basis).cmp(&(other.dim(), &other.basis))
    }
}

impl Subspace {
    pub fn zero(field: &Arc<Field>, ambient: usize) -> Subspace {
        Subspace { field: field.clone(), ambient, basis: Vec::new() }
    }

    pub fn full(field: &Arc<Field>, ambient: usize) -> Subspace {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![0; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Subspace { field: field.clone(), ambient, basis }
    }

    pub fn span(field: &Arc<Field>, ambient: usize, vectors: Vec<Vector>) -> Subspace {
        let basis = if vectors.is_empty() { vectors } else { row_reduce(field, vectors) };
        Subspace { field: field.clone(), ambient, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Reduces `v` against the basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Elem]) -> Vector {
        let f = &self.field;
        let mut w = v.to_vec();
        for b in &self.basis {
            let pivot = b.iter().position(|&x| x != 0).expect("nonzero basis row");
            let c = w[pivot];
            if c != 0 {
                w = vec_add(f, &w, &vec_scale(f, b, f.neg(c)));
            }
        }
        w
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        if self.contains(v) {
            return false;
        }
        let mut rows = std::mem::take(&mut self.basis);
        rows.push(v.to_vec());
        self.basis = row_reduce(&self.field, rows);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::span(&self.field, self.ambient, rows)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn intersection_dim(&self, other: &Subspace) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }

    /// Every vector of the subspace (refuses more than `cap`).
    pub fn vectors(&self, cap: u64) -> Option<Vec<Vector>> {
        let q = self.field.order() as u64;
        let count = q.checked_pow(self.dim() as u32)?;
        if count > cap {
            return None;
        }
        let f = &self.field;
        let mut out = Vec::with_capacity(count as usize);
        for code in 0..count {
            let mut v = vec![0; self.ambient];
            let mut c = code;
            for b in &self.basis {
                let coeff = (c % q) as Elem;
                c /= q;
                if coeff != 0 {
                    v = vec_add(f, &v, &vec_scale(f, b, coeff));
                }
            }
            out.push(v);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_and_membership() {
        let f = Arc::new(Field::new(5, 1).unwrap());
        let mut s = Subspace::zero(&f, 3);
        assert!(s.insert(&[1, 2, 0]));
        assert!(!s.insert(&[2, 4, 0]));
        assert!(s.insert(&[0, 1, 1]));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[1, 3, 1]));
        assert!(!s.contains(&[0, 0, 1]));
        assert_eq!(s.vectors(100).unwrap().len(), 25);
        let t = Subspace::span(&f, 3, vec![vec![0, 0, 1]]);
        assert_eq!(s.intersection_dim(&t), 0);
        assert!(s.sum(&t).is_full());
    }
}
