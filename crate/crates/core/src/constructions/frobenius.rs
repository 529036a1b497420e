use crate::error::{Error, Result};
use crate::perm::{gcd, Perm, PermGroup};

pub const FROBENIUS_CAP: u64 = 100_000;

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Least unit `u` of multiplicative order `d` mod `m` acting fixed-point-freely
/// on `Z/m` (every `u^k - 1`, `0 < k < d`, a unit).
fn complement_multiplier(m: u64, d: u64) -> Option<u64> {
    (2..m).find(|&u| {
        gcd(u, m) == 1
            && pow_mod(u, d, m) == 1
            && (1..d).all(|k| {
                let x = pow_mod(u, k, m);
                x != 1 && gcd((x + m - 1) % m, m) == 1
            })
    })
}

/// Direct product of Frobenius groups `C_m ⋊ C_d` acting on `Π C_m`
/// (holomorphic action, points rank-encoded, first factor fastest).
#[derive(Clone, Debug)]
pub struct FrobeniusProduct {
    pub group: PermGroup,
    pub params: Vec<(u64, u64)>,
    pub multipliers: Vec<u64>,
    /// For each factor, the point with generator 1 in that coordinate and 0 elsewhere.
    pub marked_points: Vec<u32>,
}

pub fn frobenius_product(params: &[(u64, u64)]) -> Result<FrobeniusProduct> {
    if params.is_empty() {
        return Err(Error::InvalidArgument("need at least one factor".into()));
    }
    let degree: u64 = params.iter().map(|&(m, _)| m).product();
    if degree > FROBENIUS_CAP {
        return Err(Error::CapExceeded {
            what: "Frobenius product degree",
            size: degree as u128,
            cap: FROBENIUS_CAP as u128,
        });
    }
    let mut multipliers = Vec::new();
    for &(m, d) in params {
        if d < 2 || m < 3 {
            return Err(Error::InvalidArgument(format!("({m}, {d}) is not a Frobenius pair")));
        }
        let u = complement_multiplier(m, d).ok_or_else(|| {
            Error::InvalidArgument(format!("C_{m} has no fixed-point-free automorphism of order {d}"))
        })?;
        multipliers.push(u);
    }
    let n = degree as usize;
    let mut gens = Vec::new();
    let mut marked = Vec::new();
    let mut stride = 1u64;
    for (&(m, _), &u) in params.iter().zip(&multipliers) {
        let digit = |pt: u64| (pt / stride) % m;
        let translate =
            (0..degree).map(|pt| (pt - digit(pt) * stride + ((digit(pt) + 1) % m) * stride) as u32).collect();
        let scale = (0..degree).map(|pt| (pt - digit(pt) * stride + (digit(pt) * u % m) * stride) as u32).collect();
        gens.push(Perm::from_images(translate)?);
        gens.push(Perm::from_images(scale)?);
        marked.push(stride as u32);
        stride *= m;
    }
    let order: u128 = params.iter().map(|&(m, d)| (m * d) as u128).product();
    let group = PermGroup::with_order(n, gens, order)?;
    Ok(FrobeniusProduct { group, params: params.to_vec(), multipliers, marked_points: marked })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_factor() {
        let f = frobenius_product(&[(5, 4)]).unwrap();
        assert_eq!(f.group.order(), 20);
        let mut sizes: Vec<usize> = f.group.point_stabilizer(0).orbits().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 4]);
    }

    #[test]
    fn three_factors() {
        let f = frobenius_product(&[(5, 4), (7, 3), (23, 11)]).unwrap();
        assert_eq!(f.group.degree(), 805);
        let k = f.group.point_stabilizer(0);
        assert_eq!(k.order(), 4 * 3 * 11);
        let lens: Vec<usize> = f.marked_points.iter().map(|&p| k.orbit(p).len()).collect();
        assert_eq!(lens, vec![4, 3, 11]);
        assert_eq!(k.orbit(0).len(), 1);
    }

    #[test]
    fn invalid_pairs() {
        assert!(frobenius_product(&[(5, 3)]).is_err());
        assert!(frobenius_product(&[]).is_err());
    }
}
