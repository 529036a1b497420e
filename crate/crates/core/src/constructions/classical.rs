//! Small general linear, symplectic, unitary and orthogonal groups.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::{decode, Elem, Field, Mat, MatGroup, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    GL,
    SL,
    SP,
    GU,
    GO,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s.to_ascii_uppercase().as_str() {
            "GL" => Ok(Family::GL),
            "SL" => Ok(Family::SL),
            "SP" => Ok(Family::SP),
            "GU" => Ok(Family::GU),
            "GO" => Ok(Family::GO),
            _ => Err(Error::InvalidArgument(format!("unknown classical family '{s}'"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    #[default]
    Plain,
    /// Adjoins the transpose-inverse automorphism (used by the reality check).
    TauExtended,
    /// Adds similitudes of the form.
    Conformal,
    /// Orthogonal form of plus type.
    Plus,
    /// Orthogonal form of minus type.
    Minus,
}

/// Upper bound on `q^n`, the number of candidate rows in the isometry search.
pub const CLASSICAL_CAP: u128 = 4096;

/// A classical group with its reference form.
#[derive(Clone, Debug)]
pub struct ClassicalGroup {
    pub family: Family,
    pub n: usize,
    pub q: u32,
    pub variant: Variant,
    pub group: MatGroup,
    /// Gram matrix of the preserved form (none for GL/SL).
    pub form: Option<Mat>,
}

pub fn gl_order(n: usize, q: u128) -> u128 {
    let qn = q.pow(n as u32);
    (0..n as u32).map(|i| qn - q.pow(i)).product()
}

/// Elementary transvections `I + c E_ij` (c running over a GF(p)-basis of
/// the field) plus, for GL, `diag(ω, 1, …, 1)`, pruned to an irredundant list.
fn linear_generators(field: &Arc<Field>, n: usize, special: bool) -> Vec<Mat> {
    let mut gens = Vec::new();
    if !special {
        let mut d = vec![1; n];
        d[0] = field.primitive();
        gens.push(Mat::diagonal(field, &d));
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for k in 0..field.degree() {
                let mut m = Mat::identity(field, n);
                m.set(i, j, field.exp(k as u64));
                gens.push(m);
            }
        }
    }
    prune(field, n, gens)
}

fn prune(field: &Arc<Field>, n: usize, candidates: Vec<Mat>) -> Vec<Mat> {
    let mut kept: Vec<Mat> = Vec::new();
    let mut current = MatGroup::new(field, n, Vec::new()).expect("trivial group");
    for m in candidates {
        if m.is_identity() || current.contains(&m).unwrap_or(false) {
            continue;
        }
        kept.push(m);
        current = MatGroup::new(field, n, kept.clone()).expect("invertible");
    }
    kept
}

struct FormSearch<'a> {
    field: &'a Field,
    n: usize,
    form: &'a Mat,
    hermitian: Option<u64>,
    vectors: Vec<Vector>,
}

impl FormSearch<'_> {
    fn conj(&self, x: Elem) -> Elem {
        match self.hermitian {
            Some(e) => self.field.pow(x, e),
            None => x,
        }
    }

    /// `u F v^σT`.
    fn pair(&self, u: &[Elem], v: &[Elem]) -> Elem {
        let f = self.field;
        let mut acc = 0;
        for i in 0..self.n {
            if u[i] == 0 {
                continue;
            }
            let mut s = 0;
            for j in 0..self.n {
                s = f.add(s, f.mul(self.form.get(i, j), self.conj(v[j])));
            }
            acc = f.add(acc, f.mul(u[i], s));
        }
        acc
    }

    /// Every matrix `M` with `M F M^σT = λ F`, by choosing rows in turn.
    fn solutions(&self, lambda: Elem, out: &mut Vec<Vec<Vector>>) {
        let mut rows: Vec<Vector> = Vec::with_capacity(self.n);
        self.extend(lambda, &mut rows, out);
    }

    fn extend(&self, lambda: Elem, rows: &mut Vec<Vector>, out: &mut Vec<Vec<Vector>>) {
        let i = rows.len();
        if i == self.n {
            out.push(rows.clone());
            return;
        }
        let f = self.field;
        for v in &self.vectors {
            if self.pair(v, v) != f.mul(lambda, self.form.get(i, i)) {
                continue;
            }
            let ok = (0..i).all(|j| {
                self.pair(v, &rows[j]) == f.mul(lambda, self.form.get(i, j))
                    && self.pair(&rows[j], v) == f.mul(lambda, self.form.get(j, i))
            });
            if ok {
                rows.push(v.clone());
                self.extend(lambda, rows, out);
                rows.pop();
            }
        }
    }
}

fn symplectic_form(field: &Arc<Field>, n: usize) -> Mat {
    let h = n / 2;
    let mut j = Mat::zero(field, n, n);
    for i in 0..h {
        j.set(i, h + i, 1);
        j.set(h + i, i, field.from_int(-1));
    }
    j
}

fn orthogonal_form(field: &Arc<Field>, n: usize, variant: Variant) -> Result<Mat> {
    let mut diag = vec![1; n];
    match (n % 2, variant) {
        (1, Variant::Plain) => {}
        (0, Variant::Plus | Variant::Minus) => {
            // Plus type iff (-1)^{n/2} det is a square.
            let sign = field.pow(field.from_int(-1), (n / 2) as u64);
            let sign_is_square = field.log(sign).is_some_and(|l| l % 2 == 0);
            if sign_is_square != (variant == Variant::Plus) {
                diag[n - 1] = field.primitive();
            }
        }
        _ => {
            return Err(Error::InvalidArgument(format!("orthogonal variant {variant:?} invalid in dimension {n}")));
        }
    }
    Ok(Mat::diagonal(field, &diag))
}

pub fn preserves_form(m: &Mat, form: &Mat, hermitian: Option<u64>, lambda: Elem) -> bool {
    let f = m.field();
    let conj_t = match hermitian {
        Some(e) => m.map_entries(|x| f.pow(x, e)).transpose(),
        None => m.transpose(),
    };
    m.mul(form).mul(&conj_t) == form.scale(lambda)
}

pub fn classical(family: Family, n: usize, q: u32, variant: Variant) -> Result<ClassicalGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    let field_order = if family == Family::GU {
        q.checked_mul(q).ok_or_else(|| Error::InvalidArgument("q too large".into()))?
    } else {
        q
    };
    let field = Arc::new(Field::from_order(field_order)?);
    let ambient = gl_order(n, field_order as u128);
    let rows = (field_order as u128).pow(n as u32);
    if rows > CLASSICAL_CAP && !matches!(family, Family::GL | Family::SL) {
        return Err(Error::CapExceeded { what: "vector space", size: rows, cap: CLASSICAL_CAP });
    }
    let conformal = variant == Variant::Conformal;
    match (family, variant) {
        (Family::GL | Family::SL, Variant::Plain | Variant::TauExtended) => {}
        (Family::SP | Family::GU, Variant::Plain | Variant::TauExtended | Variant::Conformal) => {}
        (Family::GO, Variant::Plain | Variant::Plus | Variant::Minus) => {}
        _ => {
            return Err(Error::InvalidArgument(format!("variant {variant:?} invalid for {family}")));
        }
    }
    let (form, hermitian) = match family {
        Family::GL | Family::SL => {
            let gens = linear_generators(&field, n, family == Family::SL);
            let order = if family == Family::GL { ambient } else { ambient / (field_order as u128 - 1) };
            let group = MatGroup::new(&field, n, gens)?.with_order(order);
            return Ok(ClassicalGroup { family, n, q, variant, group, form: None });
        }
        Family::SP => {
            if n % 2 == 1 {
                return Err(Error::InvalidArgument("symplectic groups need even dimension".into()));
            }
            (symplectic_form(&field, n), None)
        }
        Family::GU => (Mat::identity(&field, n), Some(q as u64)),
        Family::GO => {
            if q.is_multiple_of(2) {
                return Err(Error::InvalidArgument("orthogonal groups are built in odd characteristic only".into()));
            }
            (orthogonal_form(&field, n, variant)?, None)
        }
    };
    let size = (field_order as u64).pow(n as u32);
    let search = FormSearch {
        field: &field,
        n,
        form: &form,
        hermitian,
        vectors: (1..size).map(|c| decode(field_order, n, c)).collect(),
    };
    let lambdas: Vec<Elem> = if conformal { (1..field_order).collect() } else { vec![1] };
    let mut solutions = Vec::new();
    for &l in &lambdas {
        search.solutions(l, &mut solutions);
    }
    let mut elements: Vec<Mat> = solutions.iter().map(|rows| Mat::from_rows(&field, rows)).collect::<Result<_>>()?;
    let order = elements.len() as u128;
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64 * 1000 + q as u64);
    elements.shuffle(&mut rng);
    let gens = prune(&field, n, elements);
    let group = MatGroup::new(&field, n, gens)?.with_order(order);
    Ok(ClassicalGroup { family, n, q, variant, group, form: Some(form) })
}

impl ClassicalGroup {
    /// Exponent of the field automorphism in the unitary form, if any.
    pub fn hermitian_exponent(&self) -> Option<u64> {
        (self.family == Family::GU).then_some(self.q as u64)
    }

    /// Re-checks that every generator preserves the form (up to a scalar for
    /// conformal groups).
    pub fn generators_preserve_form(&self) -> bool {
        let Some(form) = &self.form else {
            return true;
        };
        let field = self.group.field();
        self.group.generators().iter().all(|g| {
            let lambdas: Vec<Elem> =
                if self.variant == Variant::Conformal { (1..field.order()).collect() } else { vec![1] };
            lambdas.into_iter().any(|l| preserves_form(g, form, self.hermitian_exponent(), l))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_orders() {
        assert_eq!(classical(Family::GL, 2, 2, Variant::Plain).unwrap().group.order(), 6);
        assert_eq!(classical(Family::GL, 2, 3, Variant::Plain).unwrap().group.order(), 48);
        assert_eq!(classical(Family::SL, 2, 9, Variant::Plain).unwrap().group.order(), 720);
        assert_eq!(classical(Family::GL, 3, 2, Variant::Plain).unwrap().group.order(), 168);
        assert_eq!(classical(Family::GL, 2, 4, Variant::Plain).unwrap().group.order(), 180);
    }

    #[test]
    fn form_groups() {
        let cases = [
            (Family::SP, 4, 2, Variant::Plain, 720),
            (Family::SP, 2, 3, Variant::Plain, 24),
            (Family::SP, 2, 3, Variant::Conformal, 48),
            (Family::GU, 2, 2, Variant::Plain, 18),
            (Family::GU, 3, 2, Variant::Plain, 648),
            (Family::GO, 3, 3, Variant::Plain, 48),
            (Family::GO, 4, 3, Variant::Plus, 1152),
            (Family::GO, 4, 3, Variant::Minus, 1440),
        ];
        for (fam, n, q, var, order) in cases {
            let g = classical(fam, n, q, var).unwrap();
            assert_eq!(g.group.order(), order, "{fam} {n} {q} {var:?}");
            assert!(g.generators_preserve_form());
        }
    }

    #[test]
    fn invalid_combinations() {
        assert!(classical(Family::SP, 3, 3, Variant::Plain).is_err());
        assert!(classical(Family::GO, 4, 3, Variant::Plain).is_err());
        assert!(classical(Family::GL, 2, 3, Variant::Minus).is_err());
        assert!(classical(Family::GO, 3, 2, Variant::Plain).is_err());
    }
}
