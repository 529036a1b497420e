use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

pub const WREATH_CAP: u128 = 1_000_000;

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `base ≀ Sym(n)` in product action on `Δ^n`; tuples are rank-encoded with
/// coordinate 0 varying fastest.
pub fn product_action_wreath(base: &PermGroup, n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("need at least one coordinate".into()));
    }
    let d = base.degree();
    let degree = (d as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if degree > WREATH_CAP {
        return Err(Error::CapExceeded { what: "product action degree", size: degree, cap: WREATH_CAP });
    }
    let degree = degree as usize;
    let digits = |mut pt: usize| -> Vec<usize> {
        (0..n)
            .map(|_| {
                let x = pt % d;
                pt /= d;
                x
            })
            .collect()
    };
    let rank = |t: &[usize]| t.iter().rev().fold(0, |acc, &x| acc * d + x) as u32;
    let mut gens = Vec::new();
    for g in base.generators() {
        let images = (0..degree)
            .map(|pt| {
                let mut t = digits(pt);
                t[0] = g.apply(t[0] as u32) as usize;
                rank(&t)
            })
            .collect();
        gens.push(Perm::from_images(images)?);
    }
    if n > 1 {
        let swap = (0..degree)
            .map(|pt| {
                let mut t = digits(pt);
                t.swap(0, 1);
                rank(&t)
            })
            .collect();
        gens.push(Perm::from_images(swap)?);
    }
    if n > 2 {
        let rotate = (0..degree)
            .map(|pt| {
                let t = digits(pt);
                let r: Vec<usize> = (0..n).map(|i| t[(i + n - 1) % n]).collect();
                rank(&r)
            })
            .collect();
        gens.push(Perm::from_images(rotate)?);
    }
    let order = base.order().pow(n as u32) * factorial(n);
    PermGroup::with_order(degree, gens, order)
}
