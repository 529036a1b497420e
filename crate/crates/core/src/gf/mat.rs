use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::field::{Elem, Field};

/// Row vector over a field.
pub type Vector = Vec<Elem>;

/// Dense row-major matrix over a finite field.
#[derive(Clone)]
pub struct Mat {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl PartialEq for Mat {
    fn eq(&self, other: &Mat) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data && self.field == other.field
    }
}

impl Eq for Mat {}

impl std::hash::Hash for Mat {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.data.hash(state);
    }
}

impl Mat {
    pub fn new(field: &Arc<Field>, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Mat> {
        if data.len() != rows * cols {
            return Err(Error::InvalidArgument(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if let Some(&x) = data.iter().find(|&&x| x >= field.order()) {
            return Err(Error::InvalidArgument(format!("entry {x} outside the field")));
        }
        Ok(Mat { field: field.clone(), rows, cols, data })
    }

    /// Square matrix from integer rows, reduced mod p.
    pub fn from_ints(field: &Arc<Field>, rows: &[&[i64]]) -> Mat {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        let data = rows.iter().flat_map(|r| r.iter().map(|&x| field.from_int(x))).collect();
        Mat { field: field.clone(), rows: n, cols: m, data }
    }

    pub fn from_rows(field: &Arc<Field>, rows: &[Vector]) -> Result<Mat> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument("ragged rows".into()));
        }
        Mat::new(field, rows.len(), cols, rows.concat())
    }

    pub fn zero(field: &Arc<Field>, rows: usize, cols: usize) -> Mat {
        Mat { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Arc<Field>, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(field: &Arc<Field>, n: usize, c: Elem) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn diagonal(field: &Arc<Field>, diag: &[Elem]) -> Mat {
        let n = diag.len();
        let mut m = Mat::zero(field, n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Elem) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let f = &self.field;
        let mut out = Mat::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(k, j)));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: Elem) -> Mat {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    /// Entrywise `x ↦ x^e`, used for field automorphisms.
    pub fn map_entries(&self, f: impl Fn(Elem) -> Elem) -> Mat {
        Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == (i == j) as Elem))
    }

    pub fn rank(&self) -> usize {
        row_reduce(&self.field, self.row_vectors()).len()
    }

    pub fn det(&self) -> Elem {
        assert!(self.is_square());
        let f = &self.field;
        let n = self.rows;
        let mut a = self.clone();
        let mut det = 1;
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| a.get(r, c) != 0) else {
                return 0;
            };
            if p != c {
                for j in 0..n {
                    let t = a.get(p, j);
                    a.set(p, j, a.get(c, j));
                    a.set(c, j, t);
                }
                det = f.neg(det);
            }
            let pivot = a.get(c, c);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot).expect("nonzero pivot");
            for r in c + 1..n {
                let factor = f.mul(a.get(r, c), inv);
                if factor == 0 {
                    continue;
                }
                for j in c..n {
                    let v = f.sub(a.get(r, j), f.mul(factor, a.get(c, j)));
                    a.set(r, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::Singular);
        }
        let f = &self.field;
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(f, n);
        for c in 0..n {
            let p = (c..n).find(|&r| a.get(r, c) != 0).ok_or(Error::Singular)?;
            if p != c {
                for j in 0..n {
                    let t = a.get(p, j);
                    a.set(p, j, a.get(c, j));
                    a.set(c, j, t);
                    let t = inv.get(p, j);
                    inv.set(p, j, inv.get(c, j));
                    inv.set(c, j, t);
                }
            }
            let s = f.inv(a.get(c, c))?;
            for j in 0..n {
                a.set(c, j, f.mul(a.get(c, j), s));
                inv.set(c, j, f.mul(inv.get(c, j), s));
            }
            for r in 0..n {
                let factor = a.get(r, c);
                if r == c || factor == 0 {
                    continue;
                }
                for j in 0..n {
                    a.set(r, j, f.sub(a.get(r, j), f.mul(factor, a.get(c, j))));
                    inv.set(r, j, f.sub(inv.get(r, j), f.mul(factor, inv.get(c, j))));
                }
            }
        }
        Ok(inv)
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        let mut base = self.clone();
        let mut acc = Mat::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of an invertible matrix.
    pub fn order(&self) -> u64 {
        let mut x = self.clone();
        let mut n = 1;
        while !x.is_identity() {
            x = x.mul(self);
            n += 1;
        }
        n
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Mat { field: self.field.clone(), rows: self.rows, cols, data }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `[[a,b],[c,d]]` with entries in the field's text form.
impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|&x| self.field.format(x)).collect();
            write!(f, "[{}]", row.join(","))?;
        }
        write!(f, "]")
    }
}

/// `v · m` for a row vector `v`.
pub fn vec_mul(field: &Field, v: &[Elem], m: &Mat) -> Vector {
    let mut out = vec![0; m.cols];
    for (i, &a) in v.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let row = m.row(i);
        for (o, &b) in out.iter_mut().zip(row) {
            *o = field.add(*o, field.mul(a, b));
        }
    }
    out
}

pub fn vec_add(field: &Field, a: &[Elem], b: &[Elem]) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| field.add(x, y)).collect()
}

pub fn vec_scale(field: &Field, a: &[Elem], c: Elem) -> Vector {
    a.iter().map(|&x| field.mul(x, c)).collect()
}

pub fn is_zero(v: &[Elem]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// Encodes a vector as the integer `Σ v_i q^i`.
pub fn encode(q: u32, v: &[Elem]) -> u64 {
    v.iter().rev().fold(0u64, |acc, &x| acc * q as u64 + x as u64)
}

pub fn decode(q: u32, dim: usize, mut code: u64) -> Vector {
    (0..dim)
        .map(|_| {
            let x = (code % q as u64) as Elem;
            code /= q as u64;
            x
        })
        .collect()
}

/// Reduced row echelon form of the span of `rows`, zero rows dropped.
pub fn row_reduce(field: &Field, mut rows: Vec<Vector>) -> Vec<Vector> {
    let Some(cols) = rows.first().map(|r| r.len()) else {
        return rows;
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = field.inv(rows[rank][c]).expect("nonzero pivot");
        rows[rank] = vec_scale(field, &rows[rank], inv);
        for r in 0..rows.len() {
            let factor = rows[r][c];
            if r != rank && factor != 0 {
                let neg = field.neg(factor);
                let scaled = vec_scale(field, &rows[rank], neg);
                rows[r] = vec_add(field, &rows[r], &scaled);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

/// Basis of `{x : m x = 0}` (column kernel).
pub fn kernel(m: &Mat) -> Vec<Vector> {
    let f = m.field();
    let rref = row_reduce(f, m.row_vectors());
    let cols = m.cols();
    let pivots: Vec<usize> = rref.iter().map(|r| r.iter().position(|&x| x != 0).expect("nonzero row")).collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![0; cols];
        x[free] = 1;
        for (r, &pc) in rref.iter().zip(&pivots) {
            x[pc] = f.neg(r[free]);
        }
        basis.push(x);
    }
    basis
}

/// Basis of `{v : v m = 0}` (row kernel).
pub fn left_kernel(m: &Mat) -> Vec<Vector> {
    kernel(&m.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, k: u32) -> Arc<Field> {
        Arc::new(Field::new(p, k).unwrap())
    }

    #[test]
    fn inverse_and_det() {
        let f = gf(7, 1);
        let m = Mat::from_ints(&f, &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(m.det(), f.from_int(-2));
        let s = Mat::from_ints(&f, &[&[1, 2], &[2, 4]]);
        assert!(matches!(s.inverse(), Err(Error::Singular)));
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn kernels() {
        let f = gf(3, 1);
        let m = Mat::from_ints(&f, &[&[1, 1, 0], &[0, 1, 1]]);
        let k = kernel(&m);
        assert_eq!(k.len(), 1);
        let x = &k[0];
        let mx = vec_mul(&f, x, &m.transpose());
        assert!(is_zero(&mx));
        let lk = left_kernel(&m.transpose());
        assert_eq!(lk, k);
    }

    #[test]
    fn codes_roundtrip() {
        for code in 0..81 {
            assert_eq!(encode(3, &decode(3, 4, code)), code);
        }
    }

    #[test]
    fn extension_order() {
        let f = gf(2, 2);
        let w = f.primitive();
        let m = Mat::diagonal(&f, &[w, 1]);
        assert_eq!(m.order(), 3);
        assert_eq!(m.pow(3), Mat::identity(&f, 2));
    }
}
