use std::fmt;

use crate::error::{Error, Result};

/// Field elements are encoded as integers `c_0 + c_1 p + … + c_{k-1} p^{k-1}`
/// where `c_0 + c_1 t + …` is the polynomial representative in `t`.
pub type Elem = u32;

const TABLE_LIMIT: u32 = 256;

/// The field GF(p^k) with a canonical modulus.
pub struct Field {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    primitive: Elem,
    exp: Vec<Elem>,
    log: Vec<u32>,
    add_table: Option<Vec<Elem>>,
    mul_table: Option<Vec<Elem>>,
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `(p, k)` with `q = p^k`, if `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut m = q;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// Polynomial remainder over GF(p); coefficients low to high, `m` monic.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().expect("non-empty");
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn has_factor_of_degree(f: &[u32], d: u32, p: u32) -> bool {
    let count = p.pow(d);
    (0..count).any(|code| {
        let mut g: Vec<u32> = (0..d).map(|i| (code / p.pow(i)) % p).collect();
        g.push(1);
        poly_rem(f, &g, p).iter().all(|&c| c == 0)
    })
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len() as u32 - 1;
    (1..=k / 2).all(|d| !has_factor_of_degree(f, d, p))
}

/// Least monic irreducible of degree `k`, comparing the constant
/// coefficient first.
fn canonical_modulus(p: u32, k: u32) -> Vec<u32> {
    let count = p.pow(k);
    for code in 0..count {
        // constant term is the most significant digit of `code`
        let mut f: Vec<u32> = (0..k).map(|i| (code / p.pow(k - 1 - i)) % p).collect();
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    pub fn new(p: u32, k: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if !(1..=8).contains(&k) || (p as u64).pow(k) > 1 << 20 {
            return Err(Error::InvalidArgument(format!("GF({p}^{k}) outside supported range")));
        }
        let q = p.pow(k);
        let modulus = canonical_modulus(p, k);
        let mut field = Field {
            p,
            k,
            q,
            modulus,
            primitive: 0,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
            mul_table: None,
        };
        field.primitive = (1..q).find(|&x| field.is_primitive(x)).expect("cyclic group");
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![u32::MAX; q as usize];
        let mut x = 1;
        for i in 0..q - 1 {
            exp.push(x);
            log[x as usize] = i;
            x = field.slow_mul(x, field.primitive);
        }
        field.exp = exp;
        field.log = log;
        if q <= TABLE_LIMIT {
            let n = q as usize;
            let mut add = vec![0; n * n];
            let mut mul = vec![0; n * n];
            for a in 0..q {
                for b in 0..q {
                    add[(a * q + b) as usize] = field.slow_add(a, b);
                    mul[(a * q + b) as usize] = field.log_mul(a, b);
                }
            }
            field.add_table = Some(add);
            field.mul_table = Some(mul);
        }
        Ok(field)
    }

    pub fn from_order(q: u32) -> Result<Field> {
        let (p, k) = prime_power(q).ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
        Field::new(p, k)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients of the modulus, low to high (monic).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn primitive(&self) -> Elem {
        self.primitive
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q
    }

    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        (0..self.k).map(|i| (a / self.p.pow(i)) % self.p).collect()
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Elem {
        c.iter().rev().fold(0, |acc, &x| acc * self.p + x % self.p)
    }

    /// Image of an integer under `Z → GF(p)`.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.p as i64) as Elem
    }

    fn slow_add(&self, a: Elem, b: Elem) -> Elem {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    fn slow_mul(&self, a: Elem, b: Elem) -> Elem {
        if self.k == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as Elem;
        }
        let ca = self.coeffs(a);
        let cb = self.coeffs(b);
        let mut prod = vec![0u32; 2 * self.k as usize - 1];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        self.from_coeffs(&poly_rem(&prod, &self.modulus, self.p))
    }

    fn slow_pow(&self, a: Elem, mut e: u32) -> Elem {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn is_primitive(&self, x: Elem) -> bool {
        let n = self.q - 1;
        crate::perm::factorize(n as u128).iter().all(|&(r, _)| self.slow_pow(x, n / r as u32) != 1)
    }

    fn log_mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[s as usize]
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.add_table {
            Some(t) => t[(a * self.q + b) as usize],
            None => self.slow_add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.mul_table {
            Some(t) => t[(a * self.q + b) as usize],
            None => self.log_mul(a, b),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let c: Vec<u32> = self.coeffs(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.from_coeffs(&c)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::Singular);
        }
        let l = self.log[a as usize];
        Ok(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = (self.log[a as usize] as u64 * (e % (self.q as u64 - 1))) % (self.q as u64 - 1);
        self.exp[l as usize]
    }

    /// `ω^i` for the primitive element `ω`.
    pub fn exp(&self, i: u64) -> Elem {
        self.exp[(i % (self.q as u64 - 1)) as usize]
    }

    /// Discrete log base the primitive element; `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.p as u64)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Elem) -> u32 {
        let n = self.q - 1;
        let l = self.log[a as usize];
        n / crate::perm::gcd(l as u64, n as u64) as u32
    }

    /// Formats an element as a polynomial in `t`, e.g. `1+2*t`.
    pub fn format(&self, a: Elem) -> String {
        if self.k == 1 {
            return a.to_string();
        }
        let terms: Vec<String> = self
            .coeffs(a)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match i {
                0 => c.to_string(),
                1 if c == 1 => "t".to_string(),
                1 => format!("{c}*t"),
                _ if c == 1 => format!("t^{i}"),
                _ => format!("{c}*t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Parses an integer (reduced mod p) or a polynomial in `t` such as
    /// `2+t`, `1+2*t^2`.
    pub fn parse(&self, text: &str) -> std::result::Result<Elem, String> {
        let text = text.trim();
        if text.is_empty() {
            return Err("empty field element".into());
        }
        let mut coeffs = vec![0u32; self.k as usize];
        for term in text.split('+') {
            let term = term.trim();
            let (c, e) = if let Some(pos) = term.find('t') {
                let (lhs, rhs) = term.split_at(pos);
                let lhs = lhs.trim().trim_end_matches('*').trim();
                let c = if lhs.is_empty() {
                    1
                } else {
                    lhs.parse::<i64>().map_err(|_| format!("bad coefficient '{lhs}'"))?
                };
                let rhs = rhs[1..].trim();
                let e = if rhs.is_empty() {
                    1
                } else {
                    let r = rhs.strip_prefix('^').ok_or_else(|| format!("bad term '{term}'"))?;
                    r.trim().parse::<usize>().map_err(|_| format!("bad exponent '{r}'"))?
                };
                (c, e)
            } else {
                let c = term.parse::<i64>().map_err(|_| format!("bad field element '{term}'"))?;
                (c, 0)
            };
            if e >= self.k as usize {
                return Err(format!("exponent {e} not below extension degree {}", self.k));
            }
            coeffs[e] = ((coeffs[e] as i64 + c).rem_euclid(self.p as i64)) as u32;
        }
        Ok(self.from_coeffs(&coeffs))
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Field) -> bool {
        self.p == other.p && self.k == other.k
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field() {
        let f = Field::new(7, 1).unwrap();
        assert_eq!(f.order(), 7);
        assert_eq!(f.primitive(), 3);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3).unwrap(), 5);
        assert_eq!(f.from_int(-1), 6);
    }

    #[test]
    fn moduli() {
        assert_eq!(Field::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Field::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(Field::new(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
    }

    #[test]
    fn frobenius_fixes_prime_field() {
        let f = Field::new(3, 2).unwrap();
        for x in f.elements() {
            assert_eq!(f.pow(x, 9), x);
            assert_eq!(f.frobenius(x) == x, x < 3);
        }
    }

    #[test]
    fn rejects() {
        assert!(Field::new(4, 1).is_err());
        assert!(Field::new(2, 21).is_err());
        assert!(Field::from_order(6).is_err());
    }

    #[test]
    fn large_field_without_tables() {
        let f = Field::new(5, 4).unwrap();
        for a in [1, 5, 77, 600] {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            assert_eq!(f.mul(a, f.add(a, 3)), f.add(f.mul(a, a), f.mul(a, 3)));
        }
    }

    #[test]
    fn parse_and_format() {
        let f = Field::new(3, 2).unwrap();
        for x in f.elements() {
            assert_eq!(f.parse(&f.format(x)).unwrap(), x);
        }
        assert_eq!(f.parse("2+t").unwrap(), 5);
        assert!(f.parse("t^2").is_err());
    }
}
