//! Seeded searches and direct constructions for named subgroups.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

/// Tries per search before giving up.
pub const SEARCH_LIMIT: usize = 20_000;

fn element_of_order<R: rand::Rng>(group: &PermGroup, k: u64, rng: &mut R) -> Option<Perm> {
    for _ in 0..200 {
        let g = group.random_element(rng);
        let o = g.order();
        if o.is_multiple_of(k) {
            return Some(g.pow(o / k));
        }
    }
    None
}

/// A subgroup `⟨x, y⟩` with `x² = y³ = 1`, `xy` of order `product_order`
/// and the whole subgroup of order `target`, from a seeded stream.
pub fn find_two_three_subgroup(group: &PermGroup, product_order: u64, target: u128, seed: u64) -> Result<PermGroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if !group.order().is_multiple_of(target) {
        return Err(Error::InvalidArgument(format!("{target} does not divide |G| = {}", group.order())));
    }
    for _ in 0..SEARCH_LIMIT {
        let (Some(x), Some(y)) = (element_of_order(group, 2, &mut rng), element_of_order(group, 3, &mut rng)) else {
            break;
        };
        if (&x * &y).order() != product_order {
            continue;
        }
        let sub = PermGroup::new(group.degree(), vec![x, y])?;
        if sub.order() == target {
            return Ok(sub);
        }
    }
    Err(Error::Inconclusive(format!("no (2,3,{product_order}) subgroup of order {target} found")))
}

/// `Alt(5) ≤ PSL(2, p)` as a (2,3,5)-generated subgroup.
pub fn find_alt5(group: &PermGroup, seed: u64) -> Result<PermGroup> {
    find_two_three_subgroup(group, 5, 60, seed)
}

/// The stabilizer of the unordered pair `{x, y}`.
pub fn pair_stabilizer(group: &PermGroup, x: u32, y: u32) -> Result<PermGroup> {
    if x == y || x as usize >= group.degree() || y as usize >= group.degree() {
        return Err(Error::InvalidArgument(format!("invalid pair {{{}, {}}}", x + 1, y + 1)));
    }
    let mut gens = group.pointwise_stabilizer(&[x, y]).generators().to_vec();
    let order = group.pointwise_stabilizer(&[x, y]).order();
    let order = match group.element_mapping(&[x, y], &[y, x]) {
        Some(swap) => {
            gens.push(swap);
            order * 2
        }
        None => order,
    };
    PermGroup::with_order(group.degree(), gens, order)
}

/// The normalizer of a regular cyclic subgroup of prime degree `p`
/// intersected with `group`: generated by the `p`-cycle and the map
/// `c^i(0) ↦ c^{ki}(0)` when `k` generates the squares mod `p`
/// and that map lies in `group`.
pub fn cyclic_normalizer(group: &PermGroup, cycle: &Perm, k: u64) -> Result<PermGroup> {
    let p = group.degree();
    if cycle.order() != p as u64 || cycle.cycles().len() != 1 {
        return Err(Error::InvalidArgument("need a full cycle".into()));
    }
    let mut seq = vec![0u32; p];
    for i in 1..p {
        seq[i] = cycle.apply(seq[i - 1]);
    }
    let mut images = vec![0u32; p];
    for i in 0..p {
        images[seq[i] as usize] = seq[(i as u64 * k % p as u64) as usize];
    }
    let m = Perm::from_images(images)?;
    if !group.contains(&m)? {
        return Err(Error::NotInGroup(m.to_string()));
    }
    let mult_order = m.order() as u128;
    PermGroup::with_order(p, vec![cycle.clone(), m], p as u128 * mult_order)
}

/// A full cycle found among seeded random elements.
pub fn find_full_cycle(group: &PermGroup, seed: u64) -> Result<Perm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = group.degree() as u64;
    for _ in 0..SEARCH_LIMIT {
        let g = group.random_element(&mut rng);
        if g.order() == n && g.cycles().len() == 1 {
            return Ok(g);
        }
    }
    Err(Error::Inconclusive("no full cycle found".into()))
}

/// Points completing a 5-set to its octad, for the 24-point Mathieu group.
fn octad_through(group: &PermGroup, five: &[u32]) -> Result<Vec<u32>> {
    let stab = group.pointwise_stabilizer(five);
    let rest = stab
        .orbits()
        .into_iter()
        .find(|o| o.len() == 3)
        .ok_or_else(|| Error::InvalidArgument("no orbit of length 3: not the 24-point Mathieu group".into()))?;
    let mut octad: Vec<u32> = five.iter().copied().chain(rest).collect();
    octad.sort_unstable();
    Ok(octad)
}

/// The six tetrads of the sextet containing `tetrad`.
pub fn sextet(group: &PermGroup, tetrad: [u32; 4]) -> Result<Vec<Vec<u32>>> {
    let mut parts = vec![{
        let mut t = tetrad.to_vec();
        t.sort_unstable();
        t
    }];
    for p in 0..group.degree() as u32 {
        if parts.iter().any(|t| t.contains(&p)) {
            continue;
        }
        let mut five = tetrad.to_vec();
        five.push(p);
        let octad = octad_through(group, &five)?;
        parts.push(octad.into_iter().filter(|x| !tetrad.contains(x)).collect());
    }
    if parts.len() != 6 || parts.iter().any(|t| t.len() != 4) {
        return Err(Error::InvalidArgument("tetrads do not form a sextet".into()));
    }
    Ok(parts)
}

/// The stabilizer of the sextet containing `{1, 2, 3, 4}` in `M24`.
pub fn sextet_stabilizer(group: &PermGroup) -> Result<PermGroup> {
    if group.degree() != 24 {
        return Err(Error::InvalidArgument("need degree 24".into()));
    }
    let tetrad = [0, 1, 2, 3];
    let parts = sextet(group, tetrad)?;
    let mut gens = group.pointwise_stabilizer(&tetrad).generators().to_vec();
    let missing = || Error::Inconclusive("sextet element not found".into());
    gens.push(group.element_mapping(&tetrad, &[1, 0, 2, 3]).ok_or_else(missing)?);
    gens.push(group.element_mapping(&tetrad, &[1, 2, 3, 0]).ok_or_else(missing)?);
    gens.push(group.element_mapping(&tetrad, &parts[1]).ok_or_else(missing)?);
    let b = PermGroup::new(24, gens)?;
    for g in b.generators() {
        let moved: Vec<Vec<u32>> = parts
            .iter()
            .map(|t| {
                let mut s: Vec<u32> = t.iter().map(|&x| g.apply(x)).collect();
                s.sort_unstable();
                s
            })
            .collect();
        if moved.iter().any(|t| !parts.contains(t)) {
            return Err(Error::InvalidArgument("generator does not preserve the sextet".into()));
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{mathieu, psl2, sym};

    #[test]
    fn alt5_in_psl2_11() {
        let g = psl2(11).unwrap();
        let a = find_alt5(&g, 1).unwrap();
        assert_eq!(a.order(), 60);
        assert!(a.is_subgroup_of(&g));
    }

    #[test]
    fn pair_stabilizer_in_sym5() {
        let s5 = sym(5).unwrap();
        let st = pair_stabilizer(&s5, 0, 3).unwrap();
        assert_eq!(st.order(), 12);
        assert!(pair_stabilizer(&s5, 2, 2).is_err());
    }

    #[test]
    fn m23_normalizer_and_m24_sextet() {
        let m23 = mathieu(23).unwrap();
        let c = find_full_cycle(&m23, 7).unwrap();
        let n = cyclic_normalizer(&m23, &c, 2).unwrap();
        assert_eq!(n.order(), 253);
        let m24 = mathieu(24).unwrap();
        let b = sextet_stabilizer(&m24).unwrap();
        assert_eq!(b.order(), 138240);
    }
}
