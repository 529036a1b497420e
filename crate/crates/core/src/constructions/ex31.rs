//! The two small modules showing that complete reducibility is needed.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{is_prime, Field, Mat, MatGroup, Vector};
use crate::perm::{parse_perm, Perm};

/// The odd-characteristic module over GF(p).
#[derive(Clone, Debug)]
pub struct OddModule {
    pub p: u32,
    pub lambda: u32,
    pub group: MatGroup,
    /// `g = [[1,0],[1,1]]`.
    pub g: Mat,
    /// `h = diag(λ, 1)`.
    pub h: Mat,
    /// `e1 = (λ, 0)`.
    pub e1: Vector,
    /// `e2 = (0, 1 - λ)`.
    pub e2: Vector,
}

pub fn ex31_odd_module(p: u32) -> Result<OddModule> {
    if p == 2 || p > 97 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not an odd prime up to 97")));
    }
    let field = Arc::new(Field::new(p, 1)?);
    let lambda = field.primitive();
    let g = Mat::from_ints(&field, &[&[1, 0], &[1, 1]]);
    let h = Mat::diagonal(&field, &[lambda, 1]);
    let group = MatGroup::new(&field, 2, vec![g.clone(), h.clone()])?.with_order((p * (p - 1)) as u128);
    let e1 = vec![lambda, 0];
    let e2 = vec![0, field.sub(1, lambda)];
    Ok(OddModule { p, lambda, group, g, h, e1, e2 })
}

/// Sym(4) acting on `V = M/M1`, where `M` is the 4-point permutation module
/// over GF(2) and `M1` is spanned by the all-ones vector. Coordinates are
/// with respect to `e1 + M1, e2 + M1, e3 + M1`.
#[derive(Clone, Debug)]
pub struct Char2Module {
    pub group: MatGroup,
    /// `a = e1 + M1`.
    pub a: Vector,
    /// `b = e1 + e2 + M1`.
    pub b: Vector,
}

/// Image of `e_i + M1` (0-based `i`) in quotient coordinates.
fn quotient_coords(i: u32) -> Vector {
    match i {
        3 => vec![1, 1, 1],
        _ => {
            let mut v = vec![0; 3];
            v[i as usize] = 1;
            v
        }
    }
}

/// Matrix of a permutation of {1,2,3,4} on the quotient module.
pub fn sym4_quotient_matrix(field: &Arc<Field>, sigma: &Perm) -> Mat {
    let rows: Vec<Vector> = (0..3).map(|i| quotient_coords(sigma.apply(i))).collect();
    Mat::from_rows(field, &rows).expect("3x3")
}

pub fn ex31_char2_module() -> Char2Module {
    let field = Arc::new(Field::new(2, 1).expect("GF(2)"));
    let gens = ["(1 2)", "(1 2 3 4)"]
        .iter()
        .map(|s| sym4_quotient_matrix(&field, &parse_perm(s, 4).expect("valid")))
        .collect();
    let group = MatGroup::new(&field, 3, gens).expect("invertible").with_order(24);
    Char2Module { group, a: vec![1, 0, 0], b: vec![1, 1, 0] }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::is_completely_reducible;
    use crate::gf::DEFAULT_SPACE_CAP;

    #[test]
    fn odd_orders() {
        for p in [3, 5, 7, 11] {
            let m = ex31_odd_module(p).unwrap();
            assert_eq!(m.group.order(), (p * (p - 1)) as u128);
        }
        assert!(ex31_odd_module(9).is_err());
        assert!(ex31_odd_module(2).is_err());
    }

    #[test]
    fn char2_module() {
        let m = ex31_char2_module();
        assert_eq!(m.group.order(), 24);
        assert!(!is_completely_reducible(&m.group, DEFAULT_SPACE_CAP).unwrap());
        let field = m.group.field().clone();
        let s = parse_perm("(1 3)", 4).unwrap();
        let t = parse_perm("(3 4)", 4).unwrap();
        let st = sym4_quotient_matrix(&field, &(&s * &t));
        assert_eq!(st, sym4_quotient_matrix(&field, &s).mul(&sym4_quotient_matrix(&field, &t)));
    }
}
