use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, Mat};
use crate::perm::{Perm, PermGroup};

/// The projective line over GF(q): point 0 is ∞, point `1 + a` is the
/// field element `a`.
#[derive(Clone, Debug)]
pub struct ProjectiveLine {
    field: Arc<Field>,
}

impl ProjectiveLine {
    pub fn new(field: &Arc<Field>) -> ProjectiveLine {
        ProjectiveLine { field: field.clone() }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn size(&self) -> usize {
        self.field.order() as usize + 1
    }

    fn point(&self, x: Elem, y: Elem) -> u32 {
        let f = &self.field;
        if y == 0 {
            0
        } else {
            1 + f.mul(x, f.inv(y).expect("nonzero"))
        }
    }

    /// Möbius map of a 2×2 matrix acting on row vectors `(x, y)`.
    pub fn perm_of(&self, m: &Mat) -> Result<Perm> {
        if m.rows() != 2 || m.cols() != 2 || m.det() == 0 {
            return Err(Error::InvalidArgument("need an invertible 2x2 matrix".into()));
        }
        let f = &self.field;
        let (a, b, c, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
        let mut images = vec![self.point(a, b)];
        for z in f.elements() {
            images.push(self.point(f.add(f.mul(a, z), c), f.add(f.mul(b, z), d)));
        }
        Perm::from_images(images)
    }
}

pub fn psl2_order(q: u128) -> u128 {
    let g = if q.is_multiple_of(2) { 1 } else { 2 };
    q * (q * q - 1) / g
}

/// Generators of SL(2, q): a transvection, a diagonal and the Weyl element.
pub fn sl2_generators(field: &Arc<Field>) -> Vec<Mat> {
    let w = field.primitive();
    let t = Mat::from_ints(field, &[&[1, 1], &[0, 1]]);
    let d = Mat::diagonal(field, &[w, field.inv(w).expect("nonzero")]);
    let s = Mat::from_ints(field, &[&[0, 1], &[-1, 0]]);
    if field.degree() == 1 {
        vec![t, s]
    } else {
        vec![t, d, s]
    }
}

/// PSL(2, q) acting on the q + 1 points of the projective line.
pub fn psl2(q: u32) -> Result<PermGroup> {
    if q > 64 {
        return Err(Error::InvalidArgument(format!("q = {q} above 64")));
    }
    let field = Arc::new(Field::from_order(q)?);
    let line = ProjectiveLine::new(&field);
    let gens = sl2_generators(&field).iter().map(|m| line.perm_of(m)).collect::<Result<Vec<_>>>()?;
    PermGroup::new(line.size(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match_formula() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27] {
            let g = psl2(q).unwrap();
            assert_eq!(g.degree(), q as usize + 1);
            assert_eq!(g.order(), psl2_order(q as u128), "q = {q}");
        }
        assert!(psl2(6).is_err());
    }

    #[test]
    fn mobius_is_a_homomorphism() {
        let f = Arc::new(Field::new(7, 1).unwrap());
        let line = ProjectiveLine::new(&f);
        let a = Mat::from_ints(&f, &[&[0, 4], &[5, 4]]);
        let b = Mat::from_ints(&f, &[&[2, 1], &[0, 4]]);
        let ab = line.perm_of(&a.mul(&b)).unwrap();
        assert_eq!(ab, &line.perm_of(&a).unwrap() * &line.perm_of(&b).unwrap());
        let scalar = Mat::scalar(&f, 2, 3);
        assert!(line.perm_of(&scalar).unwrap().is_identity());
    }
}
