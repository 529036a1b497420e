use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::perm::{orbit, FnAction, OrbitOptions, OrbitRecord, Perm, PermGroup};

use super::field::Field;
use super::mat::{decode, encode, vec_mul, Mat, Vector};

/// Largest vector space whose points may be enumerated.
pub const DEFAULT_SPACE_CAP: u64 = 1 << 20;

/// Permutation image on the union of the orbits of the standard basis.
#[derive(Clone, Debug)]
pub struct PermImage {
    pub points: Vec<u64>,
    pub index: HashMap<u64, u32>,
    pub group: PermGroup,
}

/// A group of invertible matrices acting on row vectors from the right.
#[derive(Clone, Debug)]
pub struct MatGroup {
    field: Arc<Field>,
    dim: usize,
    generators: Vec<Mat>,
    order_hint: Option<u128>,
    image: OnceLock<PermImage>,
    space: OnceLock<Option<PermGroup>>,
}

impl MatGroup {
    pub fn new(field: &Arc<Field>, dim: usize, generators: Vec<Mat>) -> Result<MatGroup> {
        if dim == 0 {
            return Err(Error::InvalidArgument("dimension must be positive".into()));
        }
        for g in &generators {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::DegreeMismatch { expected: dim, found: g.rows() });
            }
            if g.field() != field {
                return Err(Error::InvalidArgument("generator over a different field".into()));
            }
            if g.det() == 0 {
                return Err(Error::Singular);
            }
        }
        if (field.order() as u64).checked_pow(dim as u32).is_none() {
            return Err(Error::InvalidArgument("vector space too large to encode".into()));
        }
        Ok(MatGroup {
            field: field.clone(),
            dim,
            generators,
            order_hint: None,
            image: OnceLock::new(),
            space: OnceLock::new(),
        })
    }

    /// Records a known order, used to build chains faster.
    pub fn with_order(mut self, order: u128) -> MatGroup {
        self.order_hint = Some(order);
        self
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Mat] {
        &self.generators
    }

    pub fn space_size(&self) -> u64 {
        (self.field.order() as u64).pow(self.dim as u32)
    }

    pub fn apply(&self, v: &[u32], g: usize) -> Vector {
        vec_mul(&self.field, v, &self.generators[g])
    }

    pub fn perm_image(&self) -> &PermImage {
        self.image.get_or_init(|| {
            let q = self.field.order();
            let mut points: Vec<u64> = Vec::new();
            let mut index: HashMap<u64, u32> = HashMap::new();
            for i in 0..self.dim {
                let mut e = vec![0; self.dim];
                e[i] = 1;
                let code = encode(q, &e);
                if index.contains_key(&code) {
                    continue;
                }
                index.insert(code, points.len() as u32);
                points.push(code);
                let mut head = points.len() - 1;
                while head < points.len() {
                    let v = decode(q, self.dim, points[head]);
                    for g in &self.generators {
                        let c = encode(q, &vec_mul(&self.field, &v, g));
                        if let std::collections::hash_map::Entry::Vacant(e) = index.entry(c) {
                            e.insert(points.len() as u32);
                            points.push(c);
                        }
                    }
                    head += 1;
                }
            }
            let perms: Vec<Perm> = self.generators.iter().map(|g| self.perm_of_unchecked(g, &points, &index)).collect();
            let group = match self.order_hint {
                Some(order) => PermGroup::with_order(points.len(), perms, order),
                None => PermGroup::new(points.len(), perms),
            }
            .expect("consistent degree");
            PermImage { points, index, group }
        })
    }

    fn perm_of_unchecked(&self, g: &Mat, points: &[u64], index: &HashMap<u64, u32>) -> Perm {
        let q = self.field.order();
        let images =
            points.iter().map(|&c| index[&encode(q, &vec_mul(&self.field, &decode(q, self.dim, c), g))]).collect();
        Perm::from_images(images).expect("matrix permutes the basis orbits")
    }

    /// Permutation of the image points induced by `g`, if `g` preserves them.
    pub fn perm_of(&self, g: &Mat) -> Option<Perm> {
        let img = self.perm_image();
        let q = self.field.order();
        let mut images = Vec::with_capacity(img.points.len());
        for &c in &img.points {
            let w = encode(q, &vec_mul(&self.field, &decode(q, self.dim, c), g));
            images.push(*img.index.get(&w)?);
        }
        Perm::from_images(images).ok()
    }

    /// Matrix of an element of the permutation image.
    pub fn mat_of(&self, p: &Perm) -> Mat {
        let img = self.perm_image();
        let q = self.field.order();
        let rows: Vec<Vector> = (0..self.dim)
            .map(|i| {
                let mut e = vec![0; self.dim];
                e[i] = 1;
                let pt = img.index[&encode(q, &e)];
                decode(q, self.dim, img.points[p.apply(pt) as usize])
            })
            .collect();
        Mat::from_rows(&self.field, &rows).expect("square")
    }

    pub fn order(&self) -> u128 {
        self.perm_image().group.order()
    }

    pub fn contains(&self, g: &Mat) -> Result<bool> {
        if g.rows() != self.dim || g.cols() != self.dim {
            return Err(Error::DegreeMismatch { expected: self.dim, found: g.rows() });
        }
        Ok(match self.perm_of(g) {
            Some(p) => self.perm_image().group.contains(&p)? && self.mat_of(&p) == *g,
            None => false,
        })
    }

    pub fn identity(&self) -> Mat {
        Mat::identity(&self.field, self.dim)
    }

    /// All elements, refused above `cap`.
    pub fn elements(&self, cap: u128) -> Result<Vec<Mat>> {
        Ok(self.perm_image().group.elements(cap)?.iter().map(|p| self.mat_of(p)).collect())
    }

    pub fn vec_orbit(&self, v: &[u32], opts: OrbitOptions) -> Result<OrbitRecord<Vector>> {
        if v.len() != self.dim {
            return Err(Error::DegreeMismatch { expected: self.dim, found: v.len() });
        }
        let action = FnAction::new(self.generators.len(), |x: &Vector, g| self.apply(x, g));
        orbit(&action, v.to_vec(), opts)
    }

    pub fn vec_stabilizer_order(&self, v: &[u32]) -> Result<u128> {
        let len = self.vec_orbit(v, OrbitOptions::length_only())?.length;
        Ok(self.order() / len as u128)
    }

    /// The action on all `q^dim` vectors (point = vector code), if within cap.
    pub fn space_action(&self) -> Option<&PermGroup> {
        self.space
            .get_or_init(|| {
                let size = self.space_size();
                if size > DEFAULT_SPACE_CAP {
                    return None;
                }
                let q = self.field.order();
                let perms = self
                    .generators
                    .iter()
                    .map(|g| {
                        let images = (0..size)
                            .map(|c| encode(q, &vec_mul(&self.field, &decode(q, self.dim, c), g)) as u32)
                            .collect();
                        Perm::from_images(images).expect("invertible matrix")
                    })
                    .collect();
                let order = self.order();
                Some(PermGroup::with_order(size as usize, perms, order).expect("degree"))
            })
            .as_ref()
    }

    /// Orbit lengths on all vectors, indexed by vector code.
    pub fn orbit_lengths(&self) -> Result<Vec<usize>> {
        let space = self.space_action().ok_or(Error::CapExceeded {
            what: "vector space",
            size: self.space_size() as u128,
            cap: DEFAULT_SPACE_CAP as u128,
        })?;
        let mut lengths = vec![0; space.degree()];
        for orb in space.orbits() {
            for &x in &orb {
                lengths[x as usize] = orb.len();
            }
        }
        Ok(lengths)
    }

    /// Transpose-inverse generators (the dual module).
    pub fn dual(&self) -> MatGroup {
        let gens = self.generators.iter().map(|g| g.transpose().inverse().expect("invertible")).collect();
        let mut d = MatGroup::new(&self.field, self.dim, gens).expect("same shape");
        d.order_hint = self.order_hint;
        d
    }

    /// Group generated by the images of `generators` under `f`.
    pub fn map_generators(&self, f: impl Fn(&Mat) -> Mat) -> Result<MatGroup> {
        MatGroup::new(&self.field, self.dim, self.generators.iter().map(f).collect())
    }

    pub fn subgroup(&self, generators: Vec<Mat>) -> Result<MatGroup> {
        for g in &generators {
            if !self.contains(g)? {
                return Err(Error::NotInGroup(g.to_string()));
            }
        }
        MatGroup::new(&self.field, self.dim, generators)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2(p: u32) -> MatGroup {
        let f = Arc::new(Field::new(p, 1).unwrap());
        let a = Mat::from_ints(&f, &[&[1, 1], &[0, 1]]);
        let b = Mat::from_ints(&f, &[&[0, 1], &[-1, 0]]);
        MatGroup::new(&f, 2, vec![a, b]).unwrap()
    }

    #[test]
    fn orders_and_orbits() {
        let g = sl2(3);
        assert_eq!(g.order(), 24);
        assert_eq!(g.vec_orbit(&[0, 0], OrbitOptions::default()).unwrap().length, 1);
        assert_eq!(g.vec_orbit(&[1, 0], OrbitOptions::default()).unwrap().length, 8);
        assert_eq!(g.vec_stabilizer_order(&[1, 0]).unwrap(), 3);
        assert_eq!(sl2(7).order(), 336);
    }

    #[test]
    fn membership_and_elements() {
        let g = sl2(3);
        let f = g.field().clone();
        assert!(g.contains(&Mat::scalar(&f, 2, 2)).unwrap());
        assert!(!g.contains(&Mat::diagonal(&f, &[2, 1])).unwrap());
        let els = g.elements(100).unwrap();
        assert_eq!(els.len(), 24);
        assert!(els.iter().all(|m| m.det() == 1));
    }

    #[test]
    fn dual_is_involution() {
        let g = sl2(3);
        assert_eq!(g.dual().dual().generators(), g.generators());
    }

    #[test]
    fn orbit_lengths_sum() {
        let g = sl2(5);
        let lengths = g.orbit_lengths().unwrap();
        assert_eq!(lengths[0], 1);
        assert!(lengths[1..].iter().all(|&l| l == 24));
    }

    #[test]
    fn rejects_singular() {
        let f = Arc::new(Field::new(3, 1).unwrap());
        let s = Mat::from_ints(&f, &[&[1, 1], &[1, 1]]);
        assert!(matches!(MatGroup::new(&f, 2, vec![s]), Err(Error::Singular)));
    }
}
