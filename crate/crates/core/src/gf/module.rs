//! Invariant subspaces and module predicates for matrix groups.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

use super::group::{MatGroup, DEFAULT_SPACE_CAP};
use super::mat::{decode, left_kernel, vec_add, vec_mul, Mat, Vector};
use super::subspace::Subspace;

/// `{v : v g = v}` for every `g`, as the left kernel of `[g_1 - I | g_2 - I | …]`.
pub fn fixed_space(generators: &[Mat], field: &std::sync::Arc<super::Field>, dim: usize) -> Subspace {
    if generators.is_empty() {
        return Subspace::full(field, dim);
    }
    let id = Mat::identity(field, dim);
    let stacked = generators[1..].iter().fold(generators[0].sub(&id), |acc, g| acc.hconcat(&g.sub(&id)));
    Subspace::span(field, dim, left_kernel(&stacked))
}

/// Smallest invariant subspace containing `v`.
pub fn spin(group: &MatGroup, v: &[u32]) -> Subspace {
    let field = group.field();
    let mut sub = Subspace::zero(field, group.dim());
    if v.iter().all(|&x| x == 0) {
        return sub;
    }
    let mut queue = vec![v.to_vec()];
    sub.insert(v);
    while let Some(w) = queue.pop() {
        for g in group.generators() {
            let x = vec_mul(field, &w, g);
            if sub.insert(&x) {
                queue.push(x);
            }
        }
    }
    sub
}

/// Representatives of the 1-dimensional subspaces (first nonzero entry 1).
fn projective_points(group: &MatGroup) -> impl Iterator<Item = Vector> + '_ {
    let q = group.field().order();
    (1..group.space_size()).filter_map(move |c| {
        let v = decode(q, group.dim(), c);
        (v.iter().find(|&&x| x != 0) == Some(&1)).then_some(v)
    })
}

fn check_space_cap(group: &MatGroup, cap: u64) -> Result<()> {
    if group.space_size() > cap {
        return Err(Error::CapExceeded { what: "vector space", size: group.space_size() as u128, cap: cap as u128 });
    }
    Ok(())
}

/// All invariant subspaces, sorted by dimension then canonical basis.
pub fn submodule_lattice(group: &MatGroup, cap: u64) -> Result<Vec<Subspace>> {
    check_space_cap(group, cap)?;
    let mut seen: HashSet<Subspace> = HashSet::new();
    let mut cyclic = Vec::new();
    for v in projective_points(group) {
        let s = spin(group, &v);
        if seen.insert(s.clone()) {
            cyclic.push(s);
        }
    }
    let mut all: Vec<Subspace> = cyclic.clone();
    let mut frontier = cyclic.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for c in &cyclic {
                let s = a.sum(c);
                if seen.insert(s.clone()) {
                    next.push(s.clone());
                    all.push(s);
                }
            }
        }
        frontier = next;
    }
    all.push(Subspace::zero(group.field(), group.dim()));
    all.sort();
    Ok(all)
}

pub fn is_irreducible(group: &MatGroup, cap: u64) -> Result<bool> {
    check_space_cap(group, cap)?;
    Ok(projective_points(group).all(|v| spin(group, &v).is_full()))
}

/// True when every submodule has an invariant complement.
pub fn is_completely_reducible(group: &MatGroup, cap: u64) -> Result<bool> {
    let p = group.field().characteristic() as u128;
    if !group.order().is_multiple_of(p) {
        return Ok(true);
    }
    let lattice = submodule_lattice(group, cap)?;
    let n = group.dim();
    Ok(lattice.iter().all(|w| lattice.iter().any(|u| u.dim() + w.dim() == n && w.intersection_dim(u) == 0)))
}

/// `Σ_{x ∈ L} v x`.
pub fn psi_map(v: &[u32], elements: &[Mat]) -> Vector {
    let Some(first) = elements.first() else {
        return vec![0; v.len()];
    };
    let field = first.field();
    elements.iter().fold(vec![0; v.len()], |acc, x| vec_add(field, &acc, &vec_mul(field, v, x)))
}

/// Basis of `{X : g1_i X = X g2_i for all i}`; each solution is a
/// homomorphism of row-vector modules.
pub fn intertwiners(g1: &MatGroup, g2: &MatGroup) -> Result<Vec<Mat>> {
    if g1.field() != g2.field() || g1.dim() != g2.dim() || g1.generators().len() != g2.generators().len() {
        return Err(Error::InvalidArgument("modules are not comparable under the pairing".into()));
    }
    let field = g1.field();
    let n = g1.dim();
    let unknowns = n * n;
    // Each generator pair contributes n² equations in the entries of X.
    let mut rows: Vec<Vector> = Vec::new();
    for (a, b) in g1.generators().iter().zip(g2.generators()) {
        for i in 0..n {
            for j in 0..n {
                let mut eq = vec![0; unknowns];
                for k in 0..n {
                    // (A X)_{ij} = Σ_k A_{ik} X_{kj}
                    let idx = k * n + j;
                    eq[idx] = field.add(eq[idx], a.get(i, k));
                    // (X B)_{ij} = Σ_k X_{ik} B_{kj}
                    let idx = i * n + k;
                    eq[idx] = field.sub(eq[idx], b.get(k, j));
                }
                rows.push(eq);
            }
        }
    }
    let basis = if rows.is_empty() {
        (0..unknowns)
            .map(|i| {
                let mut e = vec![0; unknowns];
                e[i] = 1;
                e
            })
            .collect()
    } else {
        let sys = Mat::from_rows(field, &rows)?;
        super::mat::kernel(&sys)
    };
    basis.into_iter().map(|x| Mat::new(field, n, n, x)).collect()
}

/// Whether the two modules are isomorphic under the given generator pairing.
pub fn module_isomorphic(g1: &MatGroup, g2: &MatGroup) -> Result<bool> {
    let basis = intertwiners(g1, g2)?;
    let field = g1.field();
    let n = g1.dim();
    if basis.is_empty() {
        return Ok(false);
    }
    let q = field.order() as u64;
    let count = q.checked_pow(basis.len() as u32);
    let combine = |coeffs: &[u32]| {
        basis
            .iter()
            .zip(coeffs)
            .fold(Mat::zero(field, n, n), |acc, (b, &c)| if c == 0 { acc } else { acc.add(&b.scale(c)) })
    };
    match count {
        Some(c) if c <= DEFAULT_SPACE_CAP => {
            Ok((1..c).any(|code| combine(&decode(q as u32, basis.len(), code)).det() != 0))
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(0x15);
            for _ in 0..64 {
                let coeffs: Vec<u32> = (0..basis.len()).map(|_| rng.gen_range(0..q as u32)).collect();
                if combine(&coeffs).det() != 0 {
                    return Ok(true);
                }
            }
            Err(Error::Inconclusive(format!(
                "no invertible intertwiner among 64 samples of a {}-dimensional solution space",
                basis.len()
            )))
        }
    }
}

/// Whether the characteristic is coprime to the group order.
pub fn is_coprime_module(group: &MatGroup) -> bool {
    !group.order().is_multiple_of(group.field().characteristic() as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use std::sync::Arc;

    fn gf(p: u32) -> Arc<Field> {
        Arc::new(Field::new(p, 1).unwrap())
    }

    fn perm_matrix(f: &Arc<Field>, images: &[usize]) -> Mat {
        let n = images.len();
        let mut m = Mat::zero(f, n, n);
        for (i, &j) in images.iter().enumerate() {
            m.set(i, j, 1);
        }
        m
    }

    fn sym_perm_module(p: u32, n: usize) -> MatGroup {
        let f = gf(p);
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        MatGroup::new(&f, n, vec![perm_matrix(&f, &swap), perm_matrix(&f, &cycle)]).unwrap()
    }

    #[test]
    fn fixed_space_of_permutation_module() {
        let g = sym_perm_module(3, 4);
        let fs = fixed_space(g.generators(), g.field(), 4);
        assert_eq!(fs.dim(), 1);
        assert!(fs.contains(&[1, 1, 1, 1]));
        let f = gf(5);
        assert!(fixed_space(&[Mat::identity(&f, 3)], &f, 3).is_full());
    }

    #[test]
    fn lattice_of_uniserial_module() {
        let g = sym_perm_module(2, 4);
        let lattice = submodule_lattice(&g, DEFAULT_SPACE_CAP).unwrap();
        let dims: Vec<usize> = lattice.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![0, 1, 3, 4]);
        assert!(!is_completely_reducible(&g, DEFAULT_SPACE_CAP).unwrap());
    }

    #[test]
    fn irreducible_natural_module() {
        let f = gf(7);
        let a = Mat::from_ints(&f, &[&[1, 1], &[0, 1]]);
        let b = Mat::from_ints(&f, &[&[0, 1], &[-1, 0]]);
        let g = MatGroup::new(&f, 2, vec![a, b]).unwrap();
        assert!(is_irreducible(&g, DEFAULT_SPACE_CAP).unwrap());
        assert_eq!(submodule_lattice(&g, DEFAULT_SPACE_CAP).unwrap().len(), 2);
    }

    #[test]
    fn direct_sum_of_distinct_irreducibles() {
        let f = gf(7);
        let g = MatGroup::new(&f, 2, vec![Mat::diagonal(&f, &[1, 6])]).unwrap();
        assert_eq!(submodule_lattice(&g, DEFAULT_SPACE_CAP).unwrap().len(), 4);
    }

    #[test]
    fn psi_of_sym3() {
        let g = sym_perm_module(7, 3);
        let els = g.elements(10).unwrap();
        assert_eq!(psi_map(&[1, 0, 0], &els), vec![2, 2, 2]);
        assert_eq!(psi_map(&[1, 0, 0], &[g.identity()]), vec![1, 0, 0]);
    }

    #[test]
    fn isomorphism_tests() {
        let f = gf(7);
        let a = MatGroup::new(&f, 1, vec![Mat::scalar(&f, 1, 2)]).unwrap();
        let b = MatGroup::new(&f, 1, vec![Mat::scalar(&f, 1, 4)]).unwrap();
        assert!(!module_isomorphic(&a, &b).unwrap());
        assert!(module_isomorphic(&a, &a).unwrap());
        let g = sym_perm_module(7, 3);
        let p = Mat::from_ints(&f, &[&[1, 2, 0], &[0, 1, 0], &[3, 0, 1]]);
        let pinv = p.inverse().unwrap();
        let h = g.map_generators(|x| pinv.mul(x).mul(&p)).unwrap();
        assert!(module_isomorphic(&g, &h).unwrap());
    }
}
