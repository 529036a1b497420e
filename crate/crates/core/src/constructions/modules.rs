//! Building blocks for module corpora: permutation modules, sums,
//! sub- and quotient modules, Singer cycles and small monomial groups.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{vec_add, vec_mul, vec_scale, Elem, Field, Mat, MatGroup, Subspace, Vector};
use crate::perm::{Perm, PermGroup};

pub fn perm_matrix(field: &Arc<Field>, p: &Perm) -> Mat {
    let n = p.degree();
    let mut m = Mat::zero(field, n, n);
    for i in 0..n {
        m.set(i, p.apply(i as u32) as usize, 1);
    }
    m
}

/// The natural permutation module `GF(q)^n` of a permutation group.
pub fn permutation_module(field: &Arc<Field>, group: &PermGroup) -> Result<MatGroup> {
    let gens = group.generators().iter().map(|g| perm_matrix(field, g)).collect();
    Ok(MatGroup::new(field, group.degree(), gens)?.with_order(group.order()))
}

fn block(a: &Mat, b: &Mat) -> Mat {
    let (n, m) = (a.rows(), b.rows());
    let mut out = Mat::zero(a.field(), n + m, n + m);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, a.get(i, j));
        }
    }
    for i in 0..m {
        for j in 0..m {
            out.set(n + i, n + j, b.get(i, j));
        }
    }
    out
}

/// `A × B` acting on `V_A ⊕ V_B`.
pub fn external_sum(a: &MatGroup, b: &MatGroup) -> Result<MatGroup> {
    if a.field() != b.field() {
        return Err(Error::InvalidArgument("summands over different fields".into()));
    }
    let (ia, ib) = (a.identity(), b.identity());
    let mut gens: Vec<Mat> = a.generators().iter().map(|g| block(g, &ib)).collect();
    gens.extend(b.generators().iter().map(|h| block(&ia, h)));
    Ok(MatGroup::new(a.field(), a.dim() + b.dim(), gens)?.with_order(a.order() * b.order()))
}

/// One group acting on `V ⊕ W`, generators paired in order.
pub fn diagonal_sum(a: &MatGroup, b: &MatGroup) -> Result<MatGroup> {
    if a.field() != b.field() || a.generators().len() != b.generators().len() {
        return Err(Error::InvalidArgument("summands are not paired".into()));
    }
    let gens = a.generators().iter().zip(b.generators()).map(|(g, h)| block(g, h)).collect();
    MatGroup::new(a.field(), a.dim() + b.dim(), gens)
}

fn coordinates(field: &Field, sub: &Subspace, v: &[Elem]) -> Option<Vector> {
    let mut w = v.to_vec();
    let mut coords = Vec::with_capacity(sub.dim());
    for b in sub.basis() {
        let pivot = b.iter().position(|&x| x != 0)?;
        let c = w[pivot];
        coords.push(c);
        if c != 0 {
            w = vec_add(field, &w, &vec_scale(field, b, field.neg(c)));
        }
    }
    w.iter().all(|&x| x == 0).then_some(coords)
}

/// The action on an invariant subspace, in its echelon basis.
pub fn submodule(group: &MatGroup, sub: &Subspace) -> Result<MatGroup> {
    if sub.dim() == 0 {
        return Err(Error::InvalidArgument("zero submodule".into()));
    }
    let field = group.field();
    let mut gens = Vec::new();
    for g in group.generators() {
        let rows = sub
            .basis()
            .iter()
            .map(|b| coordinates(field, sub, &vec_mul(field, b, g)))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidArgument("subspace is not invariant".into()))?;
        gens.push(Mat::from_rows(field, &rows)?);
    }
    MatGroup::new(field, sub.dim(), gens)
}

/// The action on `V / W`, using the non-pivot coordinates.
pub fn quotient_module(group: &MatGroup, sub: &Subspace) -> Result<MatGroup> {
    let n = group.dim();
    if sub.dim() >= n {
        return Err(Error::InvalidArgument("quotient by the whole space".into()));
    }
    let field = group.field();
    let pivots: Vec<usize> = sub.basis().iter().map(|b| b.iter().position(|&x| x != 0).expect("nonzero row")).collect();
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    let mut gens = Vec::new();
    for g in group.generators() {
        for b in sub.basis() {
            if !sub.contains(&vec_mul(field, b, g)) {
                return Err(Error::InvalidArgument("subspace is not invariant".into()));
            }
        }
        let rows: Vec<Vector> = free
            .iter()
            .map(|&j| {
                let mut e = vec![0; n];
                e[j] = 1;
                let w = sub.reduce(&vec_mul(field, &e, g));
                free.iter().map(|&k| w[k]).collect()
            })
            .collect();
        gens.push(Mat::from_rows(field, &rows)?);
    }
    MatGroup::new(field, free.len(), gens)
}

/// `x⁻¹ g x` for every generator.
pub fn conjugate_module(group: &MatGroup, x: &Mat) -> Result<MatGroup> {
    let xi = x.inverse()?;
    let order = group.order();
    Ok(group.map_generators(|g| xi.mul(g).mul(x))?.with_order(order))
}

/// Matrix over `GF(p)` of multiplication by `a ∈ GF(p^k)` in the power basis.
pub fn multiplication_matrix(big: &Field, prime: &Arc<Field>, a: Elem) -> Mat {
    let k = big.degree() as usize;
    let rows: Vec<Vector> = (0..k)
        .map(|i| {
            let mut c = vec![0; k];
            c[i] = 1;
            big.coeffs(big.mul(big.from_coeffs(&c), a))
        })
        .collect();
    Mat::from_rows(prime, &rows).expect("square")
}

fn frobenius_matrix(big: &Field, prime: &Arc<Field>) -> Mat {
    let k = big.degree() as usize;
    let rows: Vec<Vector> = (0..k)
        .map(|i| {
            let mut c = vec![0; k];
            c[i] = 1;
            big.coeffs(big.frobenius(big.from_coeffs(&c)))
        })
        .collect();
    Mat::from_rows(prime, &rows).expect("square")
}

fn prime_and_big(p: u32, k: u32) -> Result<(Field, Arc<Field>)> {
    Ok((Field::new(p, k)?, Arc::new(Field::new(p, 1)?)))
}

/// The subgroup of order `d` of `GF(p^k)^×` acting on `GF(p)^k`
/// (`d` divides `p^k − 1`; `d = p^k − 1` is a Singer cycle).
pub fn singer_subgroup(p: u32, k: u32, d: u32) -> Result<MatGroup> {
    let (big, prime) = prime_and_big(p, k)?;
    let top = big.order() - 1;
    if d == 0 || top % d != 0 {
        return Err(Error::InvalidArgument(format!("{d} does not divide {top}")));
    }
    let g = big.pow(big.primitive(), (top / d) as u64);
    let m = multiplication_matrix(&big, &prime, g);
    Ok(MatGroup::new(&prime, k as usize, vec![m])?.with_order(d as u128))
}

/// `ΓL(1, p^k)` acting on `GF(p)^k`, restricted to multipliers of order `d`.
pub fn semilinear_group(p: u32, k: u32, d: u32) -> Result<MatGroup> {
    let (big, prime) = prime_and_big(p, k)?;
    let top = big.order() - 1;
    if d == 0 || top % d != 0 {
        return Err(Error::InvalidArgument(format!("{d} does not divide {top}")));
    }
    let g = big.pow(big.primitive(), (top / d) as u64);
    let gens = vec![multiplication_matrix(&big, &prime, g), frobenius_matrix(&big, &prime)];
    MatGroup::new(&prime, k as usize, gens)
}

/// A faithful 2-dimensional representation of the quaternion group of
/// order 8 over `GF(q)`, `q` odd.
pub fn quaternion_module(q: u32) -> Result<MatGroup> {
    let field = Arc::new(Field::from_order(q)?);
    if field.characteristic() == 2 {
        return Err(Error::InvalidArgument("need odd characteristic".into()));
    }
    let minus_one = field.neg(1);
    let (a, b) = field
        .elements()
        .flat_map(|a| field.elements().map(move |b| (a, b)))
        .find(|&(a, b)| field.add(field.mul(a, a), field.mul(b, b)) == minus_one)
        .expect("sums of two squares");
    let i = Mat::new(&field, 2, 2, vec![0, 1, minus_one, 0])?;
    let j = Mat::new(&field, 2, 2, vec![a, b, b, field.neg(a)])?;
    Ok(MatGroup::new(&field, 2, vec![i, j])?.with_order(8))
}

/// Diagonal matrices with entries in the subgroup of order `d` of
/// `GF(q)^×`, extended by the permutation matrices of `top`.
pub fn monomial_group(q: u32, d: u32, top: &PermGroup) -> Result<MatGroup> {
    let field = Arc::new(Field::from_order(q)?);
    let units = field.order() - 1;
    if d == 0 || units % d != 0 {
        return Err(Error::InvalidArgument(format!("{d} does not divide {units}")));
    }
    let n = top.degree();
    let z = field.pow(field.primitive(), (units / d) as u64);
    let mut diag = vec![1; n];
    diag[0] = z;
    let mut gens = vec![Mat::diagonal(&field, &diag)];
    gens.extend(top.generators().iter().map(|g| perm_matrix(&field, g)));
    MatGroup::new(&field, n, gens)
}

/// Scalar matrices of order `d` in dimension `n`.
pub fn scalar_group(q: u32, n: usize, d: u32) -> Result<MatGroup> {
    let field = Arc::new(Field::from_order(q)?);
    let units = field.order() - 1;
    if d == 0 || units % d != 0 {
        return Err(Error::InvalidArgument(format!("{d} does not divide {units}")));
    }
    let z = field.pow(field.primitive(), (units / d) as u64);
    Ok(MatGroup::new(&field, n, vec![Mat::scalar(&field, n, z)])?.with_order(d as u128))
}

/// The sum-zero submodule of the permutation module.
pub fn deleted_permutation_module(field: &Arc<Field>, group: &PermGroup) -> Result<MatGroup> {
    let n = group.degree();
    let full = permutation_module(field, group)?;
    let rows: Vec<Vector> = (1..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[0] = 1;
            v[i] = field.neg(1);
            v
        })
        .collect();
    let sub = Subspace::span(field, n, rows);
    submodule(&full, &sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{ex31_char2_module, sym};
    use crate::gf::{is_completely_reducible, is_irreducible, submodule_lattice, DEFAULT_SPACE_CAP};

    #[test]
    fn singer_cycles_are_transitive_on_nonzero_vectors() {
        for (p, k) in [(2, 3), (3, 2), (2, 4), (5, 2)] {
            let g = singer_subgroup(p, k, p.pow(k) - 1).unwrap();
            assert_eq!(g.order(), (p.pow(k) - 1) as u128);
            let lengths = g.orbit_lengths().unwrap();
            assert!(lengths[1..].iter().all(|&l| l == (p.pow(k) - 1) as usize));
        }
        let c5 = singer_subgroup(2, 4, 5).unwrap();
        assert!(is_irreducible(&c5, DEFAULT_SPACE_CAP).unwrap());
        assert_eq!(semilinear_group(2, 3, 7).unwrap().order(), 21);
    }

    #[test]
    fn quaternion_matrices() {
        for q in [3, 5, 7, 9] {
            let m = quaternion_module(q).unwrap();
            assert_eq!(m.order(), 8);
            assert!(is_irreducible(&m, DEFAULT_SPACE_CAP).unwrap());
        }
    }

    #[test]
    fn sub_and_quotient_of_sym4_module() {
        let f = Arc::new(Field::new(2, 1).unwrap());
        let s4 = sym(4).unwrap();
        let m = permutation_module(&f, &s4).unwrap();
        let lattice = submodule_lattice(&m, DEFAULT_SPACE_CAP).unwrap();
        let m1 = &lattice[1];
        let q = quotient_module(&m, m1).unwrap();
        assert_eq!(q.dim(), 3);
        assert_eq!(q.orbit_lengths().unwrap()[1..].iter().copied().max(), Some(4));
        let a1 = ex31_char2_module();
        let two = submodule_lattice(&a1.group, DEFAULT_SPACE_CAP).unwrap();
        assert_eq!(two.len(), 3);
        let inner = submodule(&a1.group, &two[1]).unwrap();
        assert_eq!(inner.dim(), 2);
        assert!(is_irreducible(&inner, DEFAULT_SPACE_CAP).unwrap());
        let deleted = deleted_permutation_module(&Arc::new(Field::new(3, 1).unwrap()), &s4).unwrap();
        assert!(is_irreducible(&deleted, DEFAULT_SPACE_CAP).unwrap());
    }

    #[test]
    fn sums_and_conjugates() {
        let a = scalar_group(7, 1, 2).unwrap();
        let b = scalar_group(7, 1, 3).unwrap();
        let s = external_sum(&a, &b).unwrap();
        assert_eq!(s.order(), 6);
        assert!(is_completely_reducible(&s, DEFAULT_SPACE_CAP).unwrap());
        let mut lengths = s.orbit_lengths().unwrap();
        lengths.sort_unstable();
        lengths.dedup();
        assert_eq!(lengths, vec![1, 2, 3, 6]);
        let x = Mat::from_ints(s.field(), &[&[1, 2], &[3, 4]]);
        let c = conjugate_module(&s, &x).unwrap();
        assert_eq!(c.order(), 6);
        let d = diagonal_sum(&a, &a).unwrap();
        assert_eq!(d.order(), 2);
        let mono = monomial_group(3, 2, &sym(3).unwrap()).unwrap();
        assert_eq!(mono.order(), 48);
    }
}
