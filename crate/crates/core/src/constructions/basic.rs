use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

fn check_range(n: usize) -> Result<()> {
    if !(1..=64).contains(&n) {
        return Err(Error::InvalidArgument(format!("n = {n} outside 1..=64")));
    }
    Ok(())
}

fn cycle(n: usize, points: impl IntoIterator<Item = usize>) -> Perm {
    let pts: Vec<usize> = points.into_iter().collect();
    Perm::from_cycles(n, &[pts]).expect("valid cycle")
}

/// `⟨(1 2), (1 2 … n)⟩`.
pub fn sym(n: usize) -> Result<PermGroup> {
    check_range(n)?;
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    PermGroup::new(n, vec![cycle(n, [0, 1]), cycle(n, 0..n)])
}

/// `⟨(1 2 3), (3 4 … n)⟩` for odd `n`, `⟨(1 2 3), (1 2)(3 4 … n)⟩` for even `n`.
pub fn alt(n: usize) -> Result<PermGroup> {
    check_range(n)?;
    if n < 3 {
        return Ok(PermGroup::trivial(n));
    }
    let three = cycle(n, [0, 1, 2]);
    if n == 3 {
        return PermGroup::new(n, vec![three]);
    }
    let long = if n % 2 == 1 { cycle(n, 2..n) } else { &cycle(n, [0, 1]) * &cycle(n, 2..n) };
    PermGroup::new(n, vec![three, long])
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    check_range(n)?;
    PermGroup::new(n, vec![cycle(n, 0..n)])
}

/// Symmetries of the n-gon on `n` points, order `2n`.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    check_range(n)?;
    if n < 3 {
        return sym(n);
    }
    let reflection = Perm::from_images((0..n).map(|i| ((n - i) % n) as u32).collect())?;
    PermGroup::new(n, vec![cycle(n, 0..n), reflection])
}

/// Direct product acting on the disjoint union of the point sets.
pub fn direct_product_intransitive(groups: &[&PermGroup]) -> Result<PermGroup> {
    let degree: usize = groups.iter().map(|g| g.degree()).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for g in groups {
        for x in g.generators() {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for i in 0..g.degree() {
                images[offset + i] = offset as u32 + x.apply(i as u32);
            }
            gens.push(Perm::from_images(images)?);
        }
        offset += g.degree();
    }
    PermGroup::new(degree, gens)
}

/// Direct product acting on tuples (product action), points rank-encoded
/// with the first factor varying fastest.
pub fn direct_product_on_tuples(groups: &[&PermGroup]) -> Result<PermGroup> {
    let degree: usize = groups.iter().map(|g| g.degree()).product();
    let mut gens = Vec::new();
    let mut stride = 1;
    for g in groups {
        let d = g.degree();
        for x in g.generators() {
            let images = (0..degree)
                .map(|pt| {
                    let digit = (pt / stride) % d;
                    (pt - digit * stride + x.apply(digit as u32) as usize * stride) as u32
                })
                .collect();
            gens.push(Perm::from_images(images)?);
        }
        stride *= d;
    }
    PermGroup::new(degree, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(sym(4).unwrap().order(), 24);
        assert_eq!(alt(8).unwrap().order(), 20160);
        assert_eq!(alt(7).unwrap().order(), 2520);
        assert_eq!(dihedral(5).unwrap().order(), 10);
        assert_eq!(cyclic(30).unwrap().order(), 30);
        assert!(sym(65).is_err());
        assert!(sym(0).is_err());
    }

    #[test]
    fn products() {
        let s3 = sym(3).unwrap();
        let c5 = cyclic(5).unwrap();
        assert_eq!(direct_product_intransitive(&[&s3, &c5]).unwrap().order(), 30);
        let p = direct_product_on_tuples(&[&s3, &c5]).unwrap();
        assert_eq!(p.degree(), 15);
        assert_eq!(p.order(), 30);
        assert!(p.is_transitive());
    }
}
