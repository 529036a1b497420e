use crate::error::{Error, Result};
use crate::gf::{decode, encode, vec_add, MatGroup};
use crate::perm::{Perm, PermGroup};

pub const AFFINE_CAP: u64 = 100_000;

/// `V ⋊ H` acting on the vectors of `V` (point = vector code).
#[derive(Clone, Debug)]
pub struct AffineGroup {
    pub group: PermGroup,
    /// The stabilizer of the zero vector: `H` acting on `V`.
    pub zero_stabilizer: PermGroup,
}

pub fn affine_holomorph(module: &MatGroup) -> Result<AffineGroup> {
    let size = module.space_size();
    if size > AFFINE_CAP {
        return Err(Error::CapExceeded { what: "affine degree", size: size as u128, cap: AFFINE_CAP as u128 });
    }
    let field = module.field();
    let q = field.order();
    let n = module.dim();
    let h = module
        .space_action()
        .ok_or(Error::CapExceeded { what: "vector space", size: size as u128, cap: AFFINE_CAP as u128 })?
        .clone();
    let mut gens = Vec::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        let images = (0..size).map(|c| encode(q, &vec_add(field, &decode(q, n, c), &e)) as u32).collect();
        gens.push(Perm::from_images(images)?);
    }
    gens.extend(h.generators().iter().cloned());
    let order = size as u128 * module.order();
    let group = PermGroup::with_order(size as usize, gens, order)?;
    Ok(AffineGroup { group, zero_stabilizer: h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{classical, Family, Variant};

    #[test]
    fn agl22_is_sym4() {
        let gl = classical(Family::GL, 2, 2, Variant::Plain).unwrap().group;
        let a = affine_holomorph(&gl).unwrap();
        assert_eq!(a.group.degree(), 4);
        assert_eq!(a.group.order(), 24);
        assert_eq!(a.group.point_stabilizer(0).order(), 6);
    }

    #[test]
    fn sl23_holomorph() {
        let sl = classical(Family::SL, 2, 3, Variant::Plain).unwrap().group;
        let a = affine_holomorph(&sl).unwrap();
        let mut sizes: Vec<usize> = a.zero_stabilizer.orbits().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 8]);
        assert_eq!(a.group.point_stabilizer(0).orbits().len(), 2);
    }
}
