//! Orbit-length and subdegree claims checked item by item over the corpora.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::affine_holomorph;
use crate::error::{Error, Result};
use crate::gf::{
    decode, fixed_space, is_completely_reducible, is_irreducible, psi_map, spin, MatGroup, Subspace, DEFAULT_SPACE_CAP,
};
use crate::perm::{fitting_is_trivial, gcd, sylow_subgroup, PermGroup, DEFAULT_FITTING_CAP};

use super::coprime::max_coprime_set;
use super::corpus::{
    affine_module_corpus, completely_reducible_corpus, general_module_corpus, irreducible_corpus, simple_power_corpus,
    transitive_corpus, ModuleItem, PermItem,
};
use super::mu::mu;
use super::soluble::{hall_p_complement, is_p_soluble, DEFAULT_SOLUBLE_CAP};
use super::subdegree::subdegrees;
use super::subgroups::{all_subgroups, GroupTable};

/// Above this many cases a universally quantified check is sampled.
pub const SAMPLE_THRESHOLD: u64 = 1_000_000;
/// Largest group order admitted to the subgroup-pair factorization sweep.
pub const FACTORIZATION_SWEEP_CAP: u128 = 1000;
/// Largest stabilizer order whose μ is computed in the stabilizer sweep.
pub const MU_SWEEP_CAP: u128 = 720;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Theorem {
    #[serde(rename = "T1_1")]
    T1_1,
    #[serde(rename = "T1_2")]
    T1_2,
    #[serde(rename = "C1_3")]
    C1_3,
    #[serde(rename = "T1_4")]
    T1_4,
    #[serde(rename = "L2_2")]
    L2_2,
    #[serde(rename = "T1_5")]
    T1_5,
    #[serde(rename = "T1_6")]
    T1_6,
    #[serde(rename = "T1_9")]
    T1_9,
    #[serde(rename = "L5_2")]
    L5_2,
    #[serde(rename = "L5_3")]
    L5_3,
    #[serde(rename = "L6_2")]
    L6_2,
}

impl Theorem {
    pub const ALL: [Theorem; 11] = [
        Theorem::T1_1,
        Theorem::T1_2,
        Theorem::C1_3,
        Theorem::T1_4,
        Theorem::L2_2,
        Theorem::T1_5,
        Theorem::T1_6,
        Theorem::T1_9,
        Theorem::L5_2,
        Theorem::L5_3,
        Theorem::L6_2,
    ];
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Theorem> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown theorem '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ItemStatus {
    Pass,
    Fail,
    Skipped,
    /// The conclusion fails on an item that does not meet the hypothesis.
    HypothesisViolation,
}

#[derive(Clone, Debug, Serialize)]
pub struct ItemReport {
    pub item: String,
    pub theorem: Theorem,
    pub status: ItemStatus,
    pub hypothesis: bool,
    /// Cases examined.
    pub checked: u64,
    /// Cases meeting the non-trivial premise (for example coprime orbit
    /// lengths both above 1).
    pub premise: u64,
    pub sampled: bool,
    pub witness: Value,
    pub millis: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub theorem: Theorem,
    pub seed: u64,
    pub items: Vec<ItemReport>,
}

impl SweepReport {
    pub fn count(&self, status: ItemStatus) -> usize {
        self.items.iter().filter(|i| i.status == status).count()
    }

    pub fn failures(&self) -> usize {
        self.count(ItemStatus::Fail)
    }

    /// Items whose premise was met at least once.
    pub fn with_premise(&self) -> usize {
        self.items.iter().filter(|i| i.premise > 0 && i.hypothesis).count()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub seed: u64,
    /// Size of the seeded completely reducible corpus.
    pub count: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { seed: 1, count: 220 }
    }
}

struct Outcome {
    status: ItemStatus,
    hypothesis: bool,
    checked: u64,
    premise: u64,
    sampled: bool,
    witness: Value,
}

impl Outcome {
    fn new(hypothesis: bool) -> Outcome {
        Outcome { status: ItemStatus::Pass, hypothesis, checked: 0, premise: 0, sampled: false, witness: Value::Null }
    }

    fn violate(&mut self, witness: Value) {
        if self.status == ItemStatus::Pass {
            self.status = if self.hypothesis { ItemStatus::Fail } else { ItemStatus::HypothesisViolation };
            self.witness = witness;
        }
    }

    fn skip(reason: impl Into<String>) -> Outcome {
        let mut o = Outcome::new(false);
        o.status = ItemStatus::Skipped;
        o.witness = json!({ "reason": reason.into() });
        o
    }
}

fn timed(id: &str, theorem: Theorem, f: impl FnOnce() -> Result<Outcome>) -> ItemReport {
    let start = Instant::now();
    let o = f().unwrap_or_else(|e| Outcome::skip(e.to_string()));
    ItemReport {
        item: id.to_string(),
        theorem,
        status: o.status,
        hypothesis: o.hypothesis,
        checked: o.checked,
        premise: o.premise,
        sampled: o.sampled,
        witness: o.witness,
        millis: start.elapsed().as_millis() as u64,
    }
}

fn space_of(group: &MatGroup) -> Result<&PermGroup> {
    group.space_action().ok_or(Error::CapExceeded {
        what: "vector space",
        size: group.space_size() as u128,
        cap: DEFAULT_SPACE_CAP as u128,
    })
}

fn orbit_data(space: &PermGroup) -> (Vec<u64>, Vec<u32>) {
    let mut lengths = vec![0u64; space.degree()];
    let mut reps = Vec::new();
    for o in space.orbits() {
        reps.push(o[0]);
        for &x in &o {
            lengths[x as usize] = o.len() as u64;
        }
    }
    (lengths, reps)
}

fn vec_of(group: &MatGroup, code: u32) -> Vec<u32> {
    decode(group.field().order(), group.dim(), code as u64)
}

fn code_of(group: &MatGroup, v: &[u32]) -> u32 {
    crate::gf::encode(group.field().order(), v) as u32
}

fn add_codes(group: &MatGroup, a: u32, b: u32) -> u32 {
    let f = group.field();
    code_of(group, &crate::gf::vec_add(f, &vec_of(group, a), &vec_of(group, b)))
}

/// Sums of vectors with coprime orbit lengths: for orbit representatives `a` and all `b`
/// with coprime orbit lengths, `|(a+b)^H| = mn` and
/// `|C(a) ∩ C(b)| = |C(a+b)|`.
pub fn check_t1_1(m: &ModuleItem, seed: u64) -> ItemReport {
    timed(&m.id, Theorem::T1_1, || {
        let g = &m.group;
        let hypothesis = is_completely_reducible(g, DEFAULT_SPACE_CAP)?;
        let mut out = Outcome::new(hypothesis);
        let space = space_of(g)?;
        let order = g.order() as u64;
        let (lengths, reps) = orbit_data(space);
        let partners: Vec<(u32, Vec<u32>)> = reps
            .iter()
            .map(|&a| {
                let m = lengths[a as usize];
                let bs = (0..lengths.len() as u32).filter(|&b| gcd(m, lengths[b as usize]) == 1).collect();
                (a, bs)
            })
            .collect();
        let total: u64 = partners.iter().map(|(_, b)| b.len() as u64).sum();
        let mut stab_cache: HashMap<u32, (u64, Vec<u64>)> = HashMap::new();
        let mut stab_orbits = |a: u32| -> (u64, Vec<u64>) {
            stab_cache
                .entry(a)
                .or_insert_with(|| {
                    let st = space.point_stabilizer(a);
                    (st.order() as u64, orbit_data(&st).0)
                })
                .clone()
        };
        let mut check = |a: u32, b: u32, out: &mut Outcome| {
            let (m, n) = (lengths[a as usize], lengths[b as usize]);
            let s = add_codes(g, a, b);
            let (ca, within) = stab_orbits(a);
            let both = ca / within[b as usize];
            let sum_stab = order / lengths[s as usize];
            out.checked += 1;
            if m > 1 && n > 1 {
                out.premise += 1;
            }
            if lengths[s as usize] != m * n || both != sum_stab {
                out.violate(json!({
                    "a": vec_of(g, a), "b": vec_of(g, b), "m": m, "n": n,
                    "orbit_a_plus_b": lengths[s as usize],
                    "stabilizer_a_plus_b": sum_stab, "stabilizer_intersection": both,
                }));
            }
        };
        if total <= SAMPLE_THRESHOLD {
            for (a, bs) in &partners {
                for &b in bs {
                    check(*a, b, &mut out);
                }
            }
        } else {
            out.sampled = true;
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1111);
            let live: Vec<&(u32, Vec<u32>)> = partners.iter().filter(|(_, b)| !b.is_empty()).collect();
            for _ in 0..SAMPLE_THRESHOLD {
                let (a, bs) = live[rng.gen_range(0..live.len())];
                check(*a, bs[rng.gen_range(0..bs.len())], &mut out);
            }
        }
        if out.status == ItemStatus::Pass {
            out.witness = json!({ "order": order, "dim": g.dim(), "q": g.field().order(), "cases": total });
        }
        Ok(out)
    })
}

fn nonzero_orbit_lengths(g: &MatGroup) -> Result<Vec<(u32, u64)>> {
    let (lengths, reps) = orbit_data(space_of(g)?);
    Ok(reps.into_iter().filter(|&r| r != 0).map(|r| (r, lengths[r as usize])).collect())
}

fn is_trivial_module(g: &MatGroup) -> bool {
    g.generators().iter().all(|m| m.is_identity())
}

fn gcd_pairs_check(g: &MatGroup, reps: &[(u32, u64)], out: &mut Outcome) {
    for (i, &(a, m)) in reps.iter().enumerate() {
        for &(b, n) in &reps[i..] {
            out.checked += 1;
            if m > 1 && n > 1 {
                out.premise += 1;
            }
            if gcd(m, n) == 1 {
                out.violate(json!({ "a": vec_of(g, a), "b": vec_of(g, b), "m": m, "n": n }));
            }
        }
    }
}

/// In a non-trivial irreducible module any two nonzero orbit lengths
/// share a factor. Orbit representatives cover every vector pair.
pub fn check_t1_2(m: &ModuleItem) -> ItemReport {
    timed(&m.id, Theorem::T1_2, || {
        let g = &m.group;
        let hypothesis = !is_trivial_module(g) && is_irreducible(g, DEFAULT_SPACE_CAP)?;
        let mut out = Outcome::new(hypothesis);
        let reps = nonzero_orbit_lengths(g)?;
        gcd_pairs_check(g, &reps, &mut out);
        if out.status == ItemStatus::Pass {
            let mut ls: Vec<u64> = reps.iter().map(|r| r.1).collect();
            ls.sort_unstable();
            ls.dedup();
            out.witness = json!({ "orbit_lengths": ls });
        }
        Ok(out)
    })
}

/// Orbits that both span a non-trivial module have
/// lengths with a common factor.
pub fn check_c1_3(m: &ModuleItem) -> ItemReport {
    timed(&m.id, Theorem::C1_3, || {
        let g = &m.group;
        let mut out = Outcome::new(!is_trivial_module(g));
        let spanning: Vec<(u32, u64)> =
            nonzero_orbit_lengths(g)?.into_iter().filter(|&(r, _)| spin(g, &vec_of(g, r)).is_full()).collect();
        gcd_pairs_check(g, &spanning, &mut out);
        if out.status == ItemStatus::Pass {
            out.witness = json!({ "spanning_orbits": spanning.len() });
        }
        Ok(out)
    })
}

/// Vectors fixed by a Sylow `p`-subgroup, `p` the characteristic, together
/// with the ψ_L identities for a Hall p'-subgroup `L`.
pub fn check_t1_4(m: &ModuleItem) -> ItemReport {
    timed(&m.id, Theorem::T1_4, || {
        let g = &m.group;
        let p = g.field().characteristic() as u64;
        let image = &g.perm_image().group;
        if g.order() > DEFAULT_SOLUBLE_CAP {
            return Ok(Outcome::skip("group above the solubility cap"));
        }
        let hypothesis = is_p_soluble(image, p, DEFAULT_SOLUBLE_CAP)?;
        let mut out = Outcome::new(hypothesis);
        if !hypothesis {
            out.witness = json!({ "reason": "not p-soluble" });
            return Ok(out);
        }
        let space = space_of(g)?;
        let (lengths, _) = orbit_data(space);
        let sylow = sylow_subgroup(space, p)?;
        let fixed_by_p: Vec<u32> =
            (0..space.degree() as u32).filter(|&v| sylow.generators().iter().all(|s| s.apply(v) == v)).collect();
        let cvh = fixed_space(g.generators(), g.field(), g.dim());
        let hall = hall_p_complement(image, p, DEFAULT_SOLUBLE_CAP)?;
        let l_elems: Vec<_> = hall.elements(DEFAULT_SOLUBLE_CAP)?.iter().map(|x| g.mat_of(x)).collect();
        let p_part = {
            let mut o = g.order();
            while o.is_multiple_of(p as u128) {
                o /= p as u128;
            }
            o
        };
        let l_gens: Vec<_> = hall.generators().iter().map(|x| g.mat_of(x)).collect();
        let cvl = fixed_space(&l_gens, g.field(), g.dim());
        let psi_image = Subspace::span(
            g.field(),
            g.dim(),
            (0..space.degree() as u32).map(|v| psi_map(&vec_of(g, v), &l_elems)).collect(),
        );
        let mut spanning = 0u64;
        for &a in &fixed_by_p {
            let av = vec_of(g, a);
            if !spin(g, &av).is_full() {
                continue;
            }
            spanning += 1;
            out.checked += 1;
            let ma = lengths[a as usize];
            let stab_a = g.order() / ma as u128;
            let a_cap_l = l_elems.iter().filter(|x| crate::gf::vec_mul(g.field(), &av, x) == av).count() as u128;
            let h_is_al = stab_a * hall.order() == g.order() * a_cap_l;
            let bad_b =
                (0..space.degree() as u32).find(|&b| gcd(ma, lengths[b as usize]) == 1 && lengths[b as usize] != 1);
            out.premise += (0..space.degree() as u32).filter(|&b| gcd(ma, lengths[b as usize]) == 1).count() as u64;
            let violation = cvh.dim() > 1
                || bad_b.is_some()
                || hall.order() != p_part
                || !h_is_al
                || psi_image != cvl
                || cvl != cvh;
            if violation {
                out.violate(json!({
                    "a": av, "dim_fixed": cvh.dim(), "b": bad_b.map(|b| vec_of(g, b)),
                    "hall_order": hall.order(), "expected_hall_order": p_part, "h_equals_al": h_is_al,
                    "psi_equals_cvl": psi_image == cvl, "cvl_equals_cvh": cvl == cvh,
                }));
            }
        }
        if out.status == ItemStatus::Pass {
            out.witness = json!({ "sylow_fixed_spanning_vectors": spanning, "dim_fixed": cvh.dim() });
        }
        Ok(out)
    })
}

/// Over every factorization `H = AB` by subgroups: never both
/// `C_V(A) ≠ 0` and `C_{V*}(B) ≠ 0`.
pub fn check_l2_2(m: &ModuleItem) -> ItemReport {
    timed(&m.id, Theorem::L2_2, || {
        let g = &m.group;
        if g.order() > FACTORIZATION_SWEEP_CAP {
            return Ok(Outcome::skip("group above the factorization sweep cap"));
        }
        let hypothesis = !is_trivial_module(g) && is_irreducible(g, DEFAULT_SPACE_CAP)?;
        let mut out = Outcome::new(hypothesis);
        let image = &g.perm_image().group;
        let mut table = GroupTable::new(image, FACTORIZATION_SWEEP_CAP)?;
        let subs = all_subgroups(&mut table);
        let n = table.len();
        let dual = g.dual();
        let fixes_v: Vec<bool> = subs
            .iter()
            .map(|s| {
                let gens: Vec<_> = s.generators.iter().map(|&i| g.mat_of(table.element(i))).collect();
                fixed_space(&gens, g.field(), g.dim()).dim() > 0
            })
            .collect();
        let fixes_dual: Vec<bool> = subs
            .iter()
            .map(|s| {
                let gens: Vec<_> = s
                    .generators
                    .iter()
                    .map(|&i| g.mat_of(table.element(i)).transpose().inverse().expect("invertible"))
                    .collect();
                fixed_space(&gens, dual.field(), dual.dim()).dim() > 0
            })
            .collect();
        for (i, a) in subs.iter().enumerate() {
            for (j, b) in subs.iter().enumerate() {
                if a.order == n || b.order == n {
                    continue;
                }
                if a.order * b.order != n * a.elements.intersection_len(&b.elements) {
                    continue;
                }
                out.checked += 1;
                if gcd((n / a.order) as u64, (n / b.order) as u64) == 1 {
                    out.premise += 1;
                }
                if fixes_v[i] && fixes_dual[j] {
                    out.violate(json!({ "a_order": a.order, "b_order": b.order }));
                }
            }
        }
        if out.status == ItemStatus::Pass {
            out.witness = json!({ "subgroups": subs.len(), "factorizations": out.checked });
        }
        Ok(out)
    })
}

/// The affine case: an irreducible `H` gives a holomorph with no two
/// coprime non-trivial subdegrees.
pub fn check_t1_5_affine(m: &ModuleItem) -> ItemReport {
    timed(&m.id, Theorem::T1_5, || {
        let g = &m.group;
        let hypothesis = !is_trivial_module(g) && is_irreducible(g, DEFAULT_SPACE_CAP)?;
        let mut out = Outcome::new(hypothesis);
        let holomorph = affine_holomorph(g)?;
        let r = subdegrees(&holomorph.group, 0, false)?;
        let mut from_module: Vec<u64> =
            std::iter::once(1).chain(nonzero_orbit_lengths(g)?.into_iter().map(|r| r.1)).collect();
        from_module.sort_unstable();
        out.checked = r.subdegrees.len() as u64;
        out.premise = r.coprime_pairs.len() as u64;
        let payload = json!({
            "degree": r.degree, "primitive": holomorph.group.is_primitive(),
            "subdegrees": r.subdegrees, "coprime_pairs": r.coprime_pairs,
        });
        if !r.coprime_pairs.is_empty() || r.subdegrees != from_module || !holomorph.group.is_primitive() {
            out.violate(payload);
        } else {
            out.witness = payload;
        }
        Ok(out)
    })
}

/// A primitive group has at most two pairwise coprime non-trivial
/// subdegrees.
pub fn check_t1_6(p: &PermItem) -> ItemReport {
    timed(&p.id, Theorem::T1_6, || {
        let hypothesis = p.group.is_primitive();
        let mut out = Outcome::new(hypothesis);
        let r = subdegrees(&p.group, 0, false)?;
        out.checked = r.subdegrees.len() as u64;
        out.premise = r.coprime_pairs.len() as u64;
        if r.max_coprime_set.len() > 2 {
            out.violate(json!({ "max_coprime_set": r.max_coprime_set }));
        } else {
            out.witness = json!({ "max_coprime_set": r.max_coprime_set });
        }
        Ok(out)
    })
}

fn faithful_coprime(h: &PermGroup) -> (Vec<u64>, Vec<u64>) {
    let faithful: Vec<u64> =
        h.orbits().into_iter().filter(|o| o.len() > 1 && h.is_faithful_on(o)).map(|o| o.len() as u64).collect();
    let set = max_coprime_set(&faithful);
    (faithful, set)
}

/// On a transitive group, pairwise coprime faithful
/// subdegrees number at most 2, and at most 1 when the stabilizer has a
/// non-trivial Fitting subgroup.
pub fn check_t1_9(p: &PermItem) -> ItemReport {
    timed(&p.id, Theorem::T1_9, || {
        let g = &p.group;
        let stab = g.point_stabilizer(0);
        let hypothesis = g.degree() > 1 && g.is_transitive() && stab.order() > 1;
        let mut out = Outcome::new(hypothesis);
        let (faithful, set) = faithful_coprime(&stab);
        let fitting_trivial = fitting_is_trivial(&stab, DEFAULT_FITTING_CAP)?;
        out.checked = faithful.len() as u64;
        out.premise = set.len() as u64;
        let bound = if fitting_trivial { 2 } else { 1 };
        let payload = json!({ "faithful_max_coprime": set, "fitting_trivial": fitting_trivial });
        if set.len() > bound {
            out.violate(payload);
        } else {
            out.witness = payload;
        }
        Ok(out)
    })
}

/// On a point stabilizer `H`: faithful orbits of pairwise coprime size number at most 2, and at most
/// 1 when `F(H) ≠ 1`.
pub fn check_l6_2(p: &PermItem) -> ItemReport {
    timed(&p.id, Theorem::L6_2, || {
        let h = p.group.point_stabilizer(0);
        let mut out = Outcome::new(true);
        let (faithful, set) = faithful_coprime(&h);
        let fitting_trivial = fitting_is_trivial(&h, DEFAULT_FITTING_CAP)?;
        out.checked = faithful.len() as u64;
        out.premise = set.len() as u64;
        let payload = json!({ "t": set.len(), "fitting_trivial": fitting_trivial, "faithful_orbits": faithful });
        if set.len() > 2 || (!fitting_trivial && set.len() > 1) {
            out.violate(payload);
        } else {
            out.witness = payload;
        }
        Ok(out)
    })
}

/// `μ ≤ 2` on a direct power of a non-abelian simple group.
pub fn check_l5_2(p: &PermItem) -> ItemReport {
    timed(&p.id, Theorem::L5_2, || {
        let mut out = Outcome::new(true);
        let r = mu(&p.group, None)?;
        out.checked = r.indices.len() as u64;
        out.premise = r.mu as u64;
        let payload = json!({ "mu": r.mu, "witness": r.witness });
        if r.mu > 2 {
            out.violate(payload);
        } else {
            out.witness = payload;
        }
        Ok(out)
    })
}

/// Pairwise coprime subdegrees number at most `μ(N)` for `N = G_ω`,
/// applicable when the stabilizer fixes only ω.
pub fn check_l5_3(p: &PermItem) -> ItemReport {
    timed(&p.id, Theorem::L5_3, || {
        let g = &p.group;
        let r = subdegrees(g, 0, false)?;
        let fixed = r.subdegrees.iter().filter(|&&d| d == 1).count();
        let hypothesis = fixed == 1 && r.stabilizer_order > 1;
        let mut out = Outcome::new(hypothesis);
        if !hypothesis {
            out.witness = json!({ "reason": "stabilizer fixes more than one point" });
            return Ok(out);
        }
        if r.stabilizer_order > MU_SWEEP_CAP {
            return Ok(Outcome::skip("stabilizer above the subgroup cap"));
        }
        let n = mu(&g.point_stabilizer(0), None)?;
        out.checked = 1;
        out.premise = r.max_coprime_set.len() as u64;
        let payload = json!({ "coprime_subdegrees": r.max_coprime_set, "mu_n": n.mu });
        if r.max_coprime_set.len() > n.mu {
            out.violate(payload);
        } else {
            out.witness = payload;
        }
        Ok(out)
    })
}

fn run_modules(theorem: Theorem, items: &[ModuleItem], seed: u64) -> Vec<ItemReport> {
    items
        .par_iter()
        .map(|m| match theorem {
            Theorem::T1_1 => check_t1_1(m, seed),
            Theorem::T1_2 => check_t1_2(m),
            Theorem::C1_3 => check_c1_3(m),
            Theorem::T1_4 => check_t1_4(m),
            Theorem::L2_2 => check_l2_2(m),
            Theorem::T1_5 => check_t1_5_affine(m),
            _ => unreachable!("module theorem"),
        })
        .collect()
}

fn run_perms(theorem: Theorem, items: &[PermItem]) -> Vec<ItemReport> {
    items
        .par_iter()
        .map(|p| match theorem {
            Theorem::T1_6 => check_t1_6(p),
            Theorem::T1_9 => check_t1_9(p),
            Theorem::L5_2 => check_l5_2(p),
            Theorem::L5_3 => check_l5_3(p),
            Theorem::L6_2 => check_l6_2(p),
            _ => unreachable!("permutation theorem"),
        })
        .collect()
}

/// Runs one claim over its default corpus.
pub fn sweep(theorem: Theorem, config: SweepConfig) -> Result<SweepReport> {
    let items = match theorem {
        Theorem::T1_1 => run_modules(theorem, &completely_reducible_corpus(config.seed, config.count)?, config.seed),
        Theorem::T1_2 | Theorem::L2_2 => run_modules(theorem, &irreducible_corpus()?, config.seed),
        Theorem::C1_3 | Theorem::T1_4 => {
            run_modules(theorem, &general_module_corpus(config.seed, config.count.min(60))?, config.seed)
        }
        Theorem::T1_5 => run_modules(theorem, &affine_module_corpus()?, config.seed),
        Theorem::T1_6 => {
            let items: Vec<PermItem> = transitive_corpus()?.into_iter().filter(|p| p.group.is_primitive()).collect();
            run_perms(theorem, &items)
        }
        Theorem::T1_9 | Theorem::L5_3 | Theorem::L6_2 => run_perms(theorem, &transitive_corpus()?),
        Theorem::L5_2 => run_perms(theorem, &simple_power_corpus()?),
    };
    Ok(SweepReport { theorem, seed: config.seed, items })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{ex31_char2_module, frobenius_product};

    #[test]
    fn char2_example_is_a_hypothesis_violation() {
        let m = ModuleItem { id: "x".into(), group: ex31_char2_module().group };
        let r = check_t1_1(&m, 0);
        assert_eq!(r.status, ItemStatus::HypothesisViolation);
        assert!(!r.hypothesis);
        let w = &r.witness;
        assert_eq!((w["m"].as_u64(), w["n"].as_u64()), (Some(4), Some(3)));
        assert!(!check_t1_2(&m).hypothesis);
    }

    #[test]
    fn frobenius_triple_meets_the_mu_bound_with_equality() {
        let g = frobenius_product(&[(5, 4), (7, 3), (23, 11)]).unwrap().group;
        let r = check_l5_3(&PermItem { id: "f".into(), group: g.clone() });
        assert_eq!(r.status, ItemStatus::Pass);
        assert_eq!(r.witness["mu_n"].as_u64(), Some(3));
        let r9 = check_t1_9(&PermItem { id: "f".into(), group: g });
        assert_eq!(r9.status, ItemStatus::Pass);
        assert_eq!(r9.witness["fitting_trivial"].as_bool(), Some(false));
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.to_string().parse::<Theorem>().unwrap(), t);
        }
        assert!("T9_9".parse::<Theorem>().is_err());
    }
}
