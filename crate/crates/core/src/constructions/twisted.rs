//! The twisted wreath product `N ⋊ H` with `T = PSL(2,7)`,
//! `H = T² ⋊ ⟨ι⟩` and `L = {(x,x)}⟨ι⟩`, acting on `Ω = N`.
//!
//! `N` consists of the functions `f: H → T` with `f(zl) = f(z)^{φ(l)}`,
//! stored by their values on the left coset representatives `(c, 1)` of
//! `L`, indexed by `c ∈ T`. `H` acts by `f^x(z) = f(xz)`.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Field, Mat};
use crate::perm::{orbit, FnAction, OrbitOptions, Perm};

use super::psl2::{psl2, ProjectiveLine};

/// An element of `T`, as an index into the enumerated group.
pub type TElem = u8;

/// `(x, y, i)` stands for `(x, y) ι^i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HElem {
    pub x: TElem,
    pub y: TElem,
    pub iota: bool,
}

/// A point of `Ω`: values at the coset representatives `(c, 1)`.
pub type NElem = Vec<TElem>;

/// Orders and identities checked while building the example.
#[derive(Clone, Debug, Default)]
pub struct TwistedChecks {
    pub gamma_order: u64,
    pub a_order: u64,
    pub b_order: u64,
    pub ab_order: usize,
    pub eta_is_r_squared: bool,
    /// `D^t ∩ L` has order 8, equals `⟨(a²,a²), (r,r)ι⟩` and has centre `⟨(η,η)⟩`.
    pub dt_cap_l_order: usize,
    pub dt_cap_l_matches: bool,
    pub dt_cap_l_centre_matches: bool,
    /// No conflicting values arose when defining `g` and `h` on `CL` and `DtL`.
    pub g_well_defined: bool,
    pub h_well_defined: bool,
    /// `g` and `h` satisfy the twisting rule on all of `H`.
    pub g_in_n: bool,
    pub h_in_n: bool,
}

#[derive(Clone, Debug)]
pub struct TwistedWreath {
    elements: Vec<Perm>,
    index: HashMap<Perm, TElem>,
    mul: Vec<TElem>,
    inv: Vec<TElem>,
    identity: TElem,
    pub gamma: TElem,
    pub a: TElem,
    pub b: TElem,
    pub r: TElem,
    pub eta: TElem,
    /// The constant function with value 1 (the fixed point of `H`).
    pub f: NElem,
    pub g: NElem,
    pub h: NElem,
    pub c_sub: Vec<HElem>,
    pub d_sub: Vec<HElem>,
    pub checks: TwistedChecks,
}

const T_ORDER: usize = 168;

impl TwistedWreath {
    pub fn t_order(&self) -> usize {
        T_ORDER
    }

    /// `|H| = 2·|T|²`.
    pub fn h_order(&self) -> usize {
        2 * T_ORDER * T_ORDER
    }

    /// `|H : L|`, so that `|Ω| = |T|^{|H:L|}`.
    pub fn coset_count(&self) -> usize {
        T_ORDER
    }

    pub fn t_perm(&self, t: TElem) -> &Perm {
        &self.elements[t as usize]
    }

    pub fn tmul(&self, s: TElem, t: TElem) -> TElem {
        self.mul[s as usize * T_ORDER + t as usize]
    }

    pub fn tinv(&self, t: TElem) -> TElem {
        self.inv[t as usize]
    }

    /// `t^y = y⁻¹ t y`.
    pub fn tconj(&self, t: TElem, y: TElem) -> TElem {
        self.tmul(self.tmul(self.tinv(y), t), y)
    }

    fn tpow(&self, t: TElem, k: u32) -> TElem {
        (0..k).fold(self.identity, |acc, _| self.tmul(acc, t))
    }

    pub fn h_identity(&self) -> HElem {
        HElem { x: self.identity, y: self.identity, iota: false }
    }

    pub fn hmul(&self, u: HElem, v: HElem) -> HElem {
        let (x2, y2) = if u.iota { (v.y, v.x) } else { (v.x, v.y) };
        HElem { x: self.tmul(u.x, x2), y: self.tmul(u.y, y2), iota: u.iota ^ v.iota }
    }

    pub fn hinv(&self, u: HElem) -> HElem {
        let (x, y) = (self.tinv(u.x), self.tinv(u.y));
        if u.iota {
            HElem { x: y, y: x, iota: true }
        } else {
            HElem { x, y, iota: false }
        }
    }

    /// All of `H`, in a fixed order.
    pub fn h_elements(&self) -> impl Iterator<Item = HElem> + '_ {
        (0..T_ORDER as u16).flat_map(move |x| {
            (0..T_ORDER as u16)
                .flat_map(move |y| [false, true].into_iter().map(move |iota| HElem { x: x as u8, y: y as u8, iota }))
        })
    }

    /// Generators of `H`: generators of the first factor and `ι`.
    pub fn h_generators(&self) -> Vec<HElem> {
        let gens = psl2(7).expect("PSL(2,7)").generators().to_vec();
        let mut out: Vec<HElem> =
            gens.iter().map(|g| HElem { x: self.index[g], y: self.identity, iota: false }).collect();
        out.push(HElem { x: self.identity, y: self.identity, iota: true });
        out
    }

    /// `f^x`, where `f^x(z) = f(xz)`.
    pub fn act(&self, f: &[TElem], x: HElem) -> NElem {
        (0..T_ORDER as u16)
            .map(|c| {
                let c = c as u8;
                let binv = self.tinv(x.y);
                if x.iota {
                    let coset = self.tmul(self.tmul(x.x, self.tinv(c)), binv);
                    self.tconj(f[coset as usize], self.tmul(x.y, c))
                } else {
                    let coset = self.tmul(self.tmul(x.x, c), binv);
                    self.tconj(f[coset as usize], x.y)
                }
            })
            .collect()
    }

    /// The value at an arbitrary `z ∈ H` of the function stored as `f`.
    pub fn value_at(&self, f: &[TElem], z: HElem) -> TElem {
        let coset = self.tmul(z.x, self.tinv(z.y));
        self.tconj(f[coset as usize], z.y)
    }

    /// Pointwise product in `N`.
    pub fn n_mul(&self, f1: &[TElem], f2: &[TElem]) -> NElem {
        f1.iter().zip(f2).map(|(&s, &t)| self.tmul(s, t)).collect()
    }

    /// `C_H(f)` by scanning all of `H`.
    pub fn centralizer(&self, f: &[TElem]) -> Vec<HElem> {
        self.h_elements().filter(|&x| self.act(f, x) == f).collect()
    }

    /// Length of the `H`-orbit of `f`.
    pub fn orbit_length(&self, f: &[TElem]) -> Result<usize> {
        let gens = self.h_generators();
        let action = FnAction::new(gens.len(), |v: &NElem, i| self.act(v, gens[i]));
        Ok(orbit(&action, f.to_vec(), OrbitOptions::length_only())?.length)
    }

    fn t_from_matrix(&self, line: &ProjectiveLine, m: &Mat) -> Result<TElem> {
        let p = line.perm_of(m)?;
        self.index.get(&p).copied().ok_or_else(|| Error::NotInGroup(m.to_string()))
    }

    fn subgroup_closure(&self, gens: &[HElem]) -> HashSet<HElem> {
        let mut set = HashSet::from([self.h_identity()]);
        let mut queue = vec![self.h_identity()];
        while let Some(u) = queue.pop() {
            for &g in gens {
                let v = self.hmul(u, g);
                if set.insert(v) {
                    queue.push(v);
                }
            }
        }
        set
    }

    fn in_l(&self, u: HElem) -> bool {
        u.x == u.y
    }

    /// Defines the function with value `v^{φ(l)}` on `S t L` and 1 elsewhere;
    /// returns it with a flag telling whether no conflicting values arose.
    fn induced_function(&self, s: &[HElem], t: HElem, v: TElem) -> (NElem, bool) {
        let mut values: HashMap<HElem, TElem> = HashMap::new();
        let mut consistent = true;
        let l_elements: Vec<HElem> = (0..T_ORDER as u16)
            .flat_map(|x| [false, true].into_iter().map(move |iota| HElem { x: x as u8, y: x as u8, iota }))
            .collect();
        for &d in s {
            let dt = self.hmul(d, t);
            for &l in &l_elements {
                let z = self.hmul(dt, l);
                let val = self.tconj(v, l.x);
                if *values.entry(z).or_insert(val) != val {
                    consistent = false;
                }
            }
        }
        let f = (0..T_ORDER as u16)
            .map(|c| {
                let z = HElem { x: c as u8, y: self.identity, iota: false };
                values.get(&z).copied().unwrap_or(self.identity)
            })
            .collect();
        (f, consistent)
    }

    fn satisfies_twisting(&self, f: &[TElem], values: impl Fn(HElem) -> TElem) -> bool {
        self.h_elements().all(|z| self.value_at(f, z) == values(z))
    }
}

pub fn twisted_wreath_ex44() -> Result<TwistedWreath> {
    let field = Arc::new(Field::new(7, 1)?);
    let line = ProjectiveLine::new(&field);
    let t_group = psl2(7)?;
    let mut elements = t_group.elements(T_ORDER as u128)?;
    elements.sort();
    let index: HashMap<Perm, TElem> = elements.iter().enumerate().map(|(i, p)| (p.clone(), i as TElem)).collect();
    let mut mul = vec![0; T_ORDER * T_ORDER];
    let mut inv = vec![0; T_ORDER];
    for (i, s) in elements.iter().enumerate() {
        inv[i] = index[&s.inverse()];
        for (j, t) in elements.iter().enumerate() {
            mul[i * T_ORDER + j] = index[&(s * t)];
        }
    }
    let identity = index[&Perm::identity(8)];
    let mut tw = TwistedWreath {
        elements,
        index,
        mul,
        inv,
        identity,
        gamma: 0,
        a: 0,
        b: 0,
        r: 0,
        eta: 0,
        f: vec![identity; T_ORDER],
        g: Vec::new(),
        h: Vec::new(),
        c_sub: Vec::new(),
        d_sub: Vec::new(),
        checks: TwistedChecks::default(),
    };
    let m = |rows: &[&[i64]]| Mat::from_ints(&field, rows);
    tw.gamma = tw.t_from_matrix(&line, &m(&[&[1, 1], &[0, 1]]))?;
    tw.a = tw.t_from_matrix(&line, &m(&[&[0, 4], &[5, 4]]))?;
    tw.b = tw.t_from_matrix(&line, &m(&[&[2, 1], &[0, 4]]))?;
    tw.r = tw.t_from_matrix(&line, &m(&[&[3, 5], &[4, 0]]))?;
    tw.eta = tw.t_from_matrix(&line, &m(&[&[1, 1], &[5, 6]]))?;

    let id = tw.identity;
    let iota = HElem { x: id, y: id, iota: true };
    let pair = |s: TElem, t: TElem| HElem { x: s, y: t, iota: false };
    let mut c_sub: Vec<HElem> =
        tw.subgroup_closure(&[pair(tw.gamma, id), pair(id, tw.gamma), iota]).into_iter().collect();
    c_sub.sort();
    let mut d_sub: Vec<HElem> = tw
        .subgroup_closure(&[pair(tw.a, id), pair(tw.b, id), pair(id, tw.a), pair(id, tw.b), iota])
        .into_iter()
        .collect();
    d_sub.sort();

    let t = pair(tw.gamma, id);
    let tinv = tw.hinv(t);
    let dt_cap_l: HashSet<HElem> =
        d_sub.iter().map(|&d| tw.hmul(tw.hmul(tinv, d), t)).filter(|&u| tw.in_l(u)).collect();
    let a2 = tw.tmul(tw.a, tw.a);
    let expected = tw.subgroup_closure(&[pair(a2, a2), HElem { x: tw.r, y: tw.r, iota: true }]);
    let centre: HashSet<HElem> =
        dt_cap_l.iter().copied().filter(|&u| dt_cap_l.iter().all(|&v| tw.hmul(u, v) == tw.hmul(v, u))).collect();
    let eta_centre = tw.subgroup_closure(&[pair(tw.eta, tw.eta)]);

    let (g, g_ok) = tw.induced_function(&c_sub, tw.h_identity(), tw.gamma);
    let (h, h_ok) = tw.induced_function(&d_sub, t, tw.eta);
    let s_elems =
        HashSet::<TElem>::from_iter(tw.subgroup_closure(&[pair(tw.a, id), pair(tw.b, id)]).into_iter().map(|u| u.x));
    let checks = TwistedChecks {
        gamma_order: tw.t_perm(tw.gamma).order(),
        a_order: tw.t_perm(tw.a).order(),
        b_order: tw.t_perm(tw.b).order(),
        ab_order: s_elems.len(),
        eta_is_r_squared: tw.tpow(tw.r, 2) == tw.eta,
        dt_cap_l_order: dt_cap_l.len(),
        dt_cap_l_matches: dt_cap_l == expected,
        dt_cap_l_centre_matches: centre == eta_centre,
        g_well_defined: g_ok,
        h_well_defined: h_ok,
        g_in_n: false,
        h_in_n: false,
    };
    tw.checks = checks;
    tw.c_sub = c_sub;
    tw.d_sub = d_sub;
    let case_value = |set: &[HElem], shift: HElem, v: TElem, z: HElem| {
        set.iter()
            .map(|&d| tw.hmul(tw.hinv(tw.hmul(d, shift)), z))
            .find(|&l| tw.in_l(l))
            .map(|l| tw.tconj(v, l.x))
            .unwrap_or(id)
    };
    let g_in_n = tw.satisfies_twisting(&g, |z| case_value(&tw.c_sub, tw.h_identity(), tw.gamma, z));
    let h_in_n = tw.satisfies_twisting(&h, |z| case_value(&tw.d_sub, t, tw.eta, z));
    tw.checks.g_in_n = g_in_n;
    tw.checks.h_in_n = h_in_n;
    tw.g = g;
    tw.h = h;
    Ok(tw)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_arithmetic() {
        let tw = twisted_wreath_ex44().unwrap();
        let u = HElem { x: 3, y: 17, iota: true };
        let v = HElem { x: 40, y: 2, iota: false };
        assert_eq!(tw.hmul(u, tw.hinv(u)), tw.h_identity());
        let w = HElem { x: 9, y: 100, iota: true };
        assert_eq!(tw.hmul(tw.hmul(u, v), w), tw.hmul(u, tw.hmul(v, w)));
        let f = &tw.g;
        assert_eq!(tw.act(&tw.act(f, u), v), tw.act(f, tw.hmul(u, v)));
    }

    #[test]
    fn example_numbers() {
        let tw = twisted_wreath_ex44().unwrap();
        let c = &tw.checks;
        assert_eq!((c.gamma_order, c.a_order, c.b_order, c.ab_order), (7, 4, 3, 24));
        assert!(c.eta_is_r_squared && c.dt_cap_l_matches && c.dt_cap_l_centre_matches);
        assert_eq!(c.dt_cap_l_order, 8);
        assert!(c.g_well_defined && c.h_well_defined && c.g_in_n && c.h_in_n);
        assert_eq!(tw.c_sub.len(), 98);
        assert_eq!(tw.d_sub.len(), 1152);
        assert_eq!(tw.orbit_length(&tw.g).unwrap(), 576);
        assert_eq!(tw.orbit_length(&tw.h).unwrap(), 49);
        assert_eq!(tw.centralizer(&tw.g), tw.c_sub);
        assert_eq!(tw.centralizer(&tw.h), tw.d_sub);
        let gh = tw.n_mul(&tw.g, &tw.h);
        let cg: HashSet<HElem> = tw.c_sub.iter().copied().collect();
        let both: Vec<HElem> = tw.d_sub.iter().copied().filter(|u| cg.contains(u)).collect();
        assert_eq!(tw.centralizer(&gh), both);
        assert_eq!(both.len(), 2);
    }
}
