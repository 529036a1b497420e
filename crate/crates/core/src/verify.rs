//! Registry of reproducible verification cases and their reports.

use std::collections::HashSet;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{
    check_subgroups, coprime_factorization_search, irreducible_corpus, max_coprime_set, mu, real_classes_check,
    subdegrees, sweep, Extension, ItemReport, ItemStatus, SweepConfig, SweepReport, Theorem, DEFAULT_REAL_CAP,
};
use crate::constructions::{
    affine_holomorph, alt, classical, cyclic, cyclic_normalizer, ex31_char2_module, ex31_odd_module, find_alt5,
    find_full_cycle, find_two_three_subgroup, frobenius_product, mathieu_in, pair_stabilizer, product_action_wreath,
    psl2, sextet_stabilizer, twisted_wreath_ex44, Family, Variant,
};
use crate::data::{find_data_file, load_perm_group};
use crate::error::{Error, Result};
use crate::gf::{is_completely_reducible, vec_mul, Mat, MatGroup, DEFAULT_SPACE_CAP};
use crate::perm::{coset_action, CosetLookup, PermGroup};

/// Version tag of the report stream.
pub const REPORT_FORMAT: &str = "subdeg-report/1";
pub const DEFAULT_SEED: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    /// Seconds.
    Fast,
    /// Minutes.
    Standard,
    /// Needs optional data; excluded from `--all`.
    Extended,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    Pass,
    Inconclusive,
    Skipped,
    Fail,
}

impl CaseStatus {
    /// Process exit code for a run whose worst status is `self`.
    pub fn exit_code(self) -> i32 {
        match self {
            CaseStatus::Pass => 0,
            CaseStatus::Fail | CaseStatus::Inconclusive => 1,
            CaseStatus::Skipped => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CaseInfo {
    pub id: &'static str,
    pub title: &'static str,
    pub scale: Scale,
    /// Data files the case reads; all but bundled ones are optional inputs.
    pub data: &'static [&'static str],
    /// Acceptance criterion covered, if any.
    pub criterion: Option<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    pub expected: Value,
    pub actual: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub case: String,
    pub status: CaseStatus,
    pub seed: u64,
    pub millis: u64,
    pub version: &'static str,
    pub assertions: Vec<Assertion>,
    /// Computed values that are reported but not asserted.
    pub notes: Vec<Value>,
    pub items: Vec<ItemReport>,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub seed: u64,
    pub data_dir: Option<PathBuf>,
}

impl VerifyOptions {
    pub fn new(seed: u64, data_dir: Option<PathBuf>) -> VerifyOptions {
        VerifyOptions { seed, data_dir }
    }

    fn dir(&self) -> Option<&Path> {
        self.data_dir.as_deref()
    }
}

const CASES: &[CaseInfo] = &[
    CaseInfo {
        id: "ex3.1-p2",
        title: "Sym(4) on the 3-dim quotient of the GF(2) permutation module",
        scale: Scale::Fast,
        data: &[],
        criterion: Some("A1"),
    },
    CaseInfo {
        id: "ex3.1-odd",
        title: "The 2-dim Borel module over GF(p), p = 5, 7, 11",
        scale: Scale::Fast,
        data: &[],
        criterion: Some("A2"),
    },
    CaseInfo {
        id: "thm1.1-sweep",
        title: "Orbit of a + b for coprime orbit lengths, completely reducible corpus",
        scale: Scale::Standard,
        data: &[],
        criterion: Some("A3"),
    },
    CaseInfo {
        id: "thm1.2-sweep",
        title: "No coprime nonzero orbit lengths in irreducible modules",
        scale: Scale::Standard,
        data: &[],
        criterion: Some("A4"),
    },
    CaseInfo {
        id: "ex4.4",
        title: "Twisted wreath product with T = PSL(2,7)",
        scale: Scale::Standard,
        data: &[],
        criterion: Some("A5"),
    },
    CaseInfo {
        id: "tab1-m11",
        title: "M11 = L2(11) M10 and M11 = L2(11) M9.2",
        scale: Scale::Standard,
        data: &["mathieu11.grp"],
        criterion: Some("A6"),
    },
    CaseInfo {
        id: "tab1-m23",
        title: "M23 = (23:11) M22",
        scale: Scale::Standard,
        data: &["mathieu23.grp"],
        criterion: Some("A6"),
    },
    CaseInfo {
        id: "tab1-alt8",
        title: "Alt(8) = Alt(7) AGL(3,2)",
        scale: Scale::Standard,
        data: &[],
        criterion: Some("A6"),
    },
    CaseInfo {
        id: "tab1-small",
        title: "Exhaustive coprime factorizations of Alt(5), Alt(6), PSL(2,7), PSL(2,11)",
        scale: Scale::Standard,
        data: &[],
        criterion: Some("A6"),
    },
    CaseInfo {
        id: "thm2.1-real",
        title: "Real conjugacy classes in extended classical groups",
        scale: Scale::Standard,
        data: &[],
        criterion: Some("A7"),
    },
    CaseInfo {
        id: "mu-lemmas",
        title: "mu values, faithful coprime orbits and the Frobenius product",
        scale: Scale::Fast,
        data: &[],
        criterion: Some("A8"),
    },
    CaseInfo {
        id: "thm1.4-sweep",
        title: "Sylow-fixed spanning vectors in p-soluble modules",
        scale: Scale::Standard,
        data: &[],
        criterion: Some("A9"),
    },
    CaseInfo {
        id: "thm1.5-affine",
        title: "Affine holomorphs of irreducible modules",
        scale: Scale::Standard,
        data: &[],
        criterion: Some("A10"),
    },
    CaseInfo {
        id: "cor1.3-sweep",
        title: "Spanning orbits have non-coprime lengths",
        scale: Scale::Standard,
        data: &[],
        criterion: None,
    },
    CaseInfo {
        id: "lem2.2-sweep",
        title: "Fixed points of factorizing subgroups on V and its dual",
        scale: Scale::Standard,
        data: &[],
        criterion: None,
    },
    CaseInfo {
        id: "thm1.6-sweep",
        title: "At most two pairwise coprime subdegrees in primitive groups",
        scale: Scale::Standard,
        data: &[],
        criterion: None,
    },
    CaseInfo {
        id: "thm1.9-sweep",
        title: "Faithful pairwise coprime subdegrees of transitive groups",
        scale: Scale::Standard,
        data: &[],
        criterion: None,
    },
    CaseInfo {
        id: "lem5.2-sweep",
        title: "mu of non-abelian simple groups",
        scale: Scale::Standard,
        data: &[],
        criterion: None,
    },
    CaseInfo {
        id: "lem5.3-sweep",
        title: "Coprime subdegrees bounded by mu of the stabilizer",
        scale: Scale::Standard,
        data: &[],
        criterion: None,
    },
    CaseInfo {
        id: "ex4.2-psl2",
        title: "PSL(2,31) on the cosets of Alt(5)",
        scale: Scale::Standard,
        data: &[],
        criterion: None,
    },
    CaseInfo {
        id: "ex4.3-pa",
        title: "Product action of PSL(2,31) wr Sym(2) on 248^2 points",
        scale: Scale::Standard,
        data: &[],
        criterion: None,
    },
    CaseInfo {
        id: "ex1.12-frobenius",
        title: "Three pairwise coprime subdegrees in a product of Frobenius groups",
        scale: Scale::Fast,
        data: &[],
        criterion: None,
    },
    CaseInfo {
        id: "ex1.11-hs",
        title: "HS on 3850 points",
        scale: Scale::Extended,
        data: &["hs100.grp"],
        criterion: Some("A11"),
    },
    CaseInfo {
        id: "ex4.2-j1",
        title: "J1 on 266 points",
        scale: Scale::Extended,
        data: &["j1-266.grp"],
        criterion: Some("A11"),
    },
    CaseInfo {
        id: "tab1-m24",
        title: "M24 = M23 (2^6.3.Sym(6))",
        scale: Scale::Extended,
        data: &["mathieu24.grp", "m24-sextet.grp"],
        criterion: Some("A11"),
    },
];

pub fn cases() -> &'static [CaseInfo] {
    CASES
}

pub fn case_info(id: &str) -> Option<&'static CaseInfo> {
    CASES.iter().find(|c| c.id == id)
}

/// Accumulates assertion results for one case.
#[derive(Default)]
struct Checks {
    assertions: Vec<Assertion>,
    notes: Vec<Value>,
    items: Vec<ItemReport>,
    skipped: bool,
}

impl Checks {
    fn eq<T: Serialize + PartialEq>(&mut self, name: &str, expected: T, actual: T) {
        let passed = expected == actual;
        self.push(name, passed, json!(expected), json!(actual));
    }

    fn holds(&mut self, name: &str, passed: bool, actual: Value) {
        self.push(name, passed, json!(true), actual);
    }

    fn at_least(&mut self, name: &str, bound: usize, actual: usize) {
        self.push(name, actual >= bound, json!(format!(">= {bound}")), json!(actual));
    }

    fn push(&mut self, name: &str, passed: bool, expected: Value, actual: Value) {
        self.assertions.push(Assertion { name: name.to_string(), passed, expected, actual });
    }

    fn note(&mut self, v: Value) {
        self.notes.push(v);
    }

    fn sweep(&mut self, report: SweepReport, min_items: usize) {
        let t = report.theorem;
        let skipped = report.count(ItemStatus::Skipped);
        self.at_least(&format!("{t} items checked"), min_items, report.items.len() - skipped);
        self.eq(&format!("{t} failures"), 0, report.failures());
        self.note(json!({
            "theorem": t, "seed": report.seed, "skipped": skipped,
            "hypothesis_violations": report.count(ItemStatus::HypothesisViolation),
            "items_with_premise": report.with_premise(),
        }));
        self.items.extend(report.items);
    }
}

/// Runs one registered case. Unknown ids are an error; computation errors
/// become failed or inconclusive reports.
pub fn run_case(id: &str, opts: &VerifyOptions) -> Result<CaseReport> {
    let info = case_info(id).ok_or_else(|| Error::InvalidArgument(format!("unknown case id '{id}'")))?;
    let start = Instant::now();
    let mut c = Checks::default();
    let outcome = dispatch(info.id, opts, &mut c);
    let status = match outcome {
        Ok(()) if c.skipped => CaseStatus::Skipped,
        Ok(()) if c.assertions.iter().all(|a| a.passed) => CaseStatus::Pass,
        Ok(()) => CaseStatus::Fail,
        Err(Error::MissingData(name)) => {
            c.note(json!({ "missing_data": name }));
            CaseStatus::Skipped
        }
        Err(e @ (Error::Inconclusive(_) | Error::CapExceeded { .. })) => {
            c.note(json!({ "error": e.to_string() }));
            CaseStatus::Inconclusive
        }
        Err(e) => {
            c.note(json!({ "error": e.to_string() }));
            CaseStatus::Fail
        }
    };
    Ok(CaseReport {
        case: info.id.to_string(),
        status,
        seed: opts.seed,
        millis: start.elapsed().as_millis() as u64,
        version: env!("CARGO_PKG_VERSION"),
        assertions: c.assertions,
        notes: c.notes,
        items: c.items,
    })
}

fn dispatch(id: &str, opts: &VerifyOptions, c: &mut Checks) -> Result<()> {
    let config = SweepConfig { seed: opts.seed, ..SweepConfig::default() };
    match id {
        "ex3.1-p2" => char2_module(c),
        "ex3.1-odd" => odd_modules(c),
        "thm1.1-sweep" => {
            let r = sweep(Theorem::T1_1, config)?;
            let premise = r.with_premise();
            c.sweep(r, 200);
            c.at_least("T1_1 items with a non-trivial coprime pair", 30, premise);
            Ok(())
        }
        "thm1.2-sweep" => {
            let ids: HashSet<String> = irreducible_corpus()?.into_iter().map(|m| m.id).collect();
            let mut wanted = vec!["sym4-quotient-2dim".to_string()];
            wanted.extend([2, 3, 4, 5, 7, 8, 9].map(|q| format!("sl2-{q}")));
            let missing: Vec<&String> = wanted.iter().filter(|w| !ids.contains(*w)).collect();
            c.holds("required modules present", missing.is_empty(), json!(missing));
            c.sweep(sweep(Theorem::T1_2, config)?, 20);
            Ok(())
        }
        "ex4.4" => twisted(c),
        "tab1-m11" => m11(opts, c),
        "tab1-m23" => m23(opts, c),
        "tab1-alt8" => alt8(c),
        "tab1-small" => small_factorizations(c),
        "thm2.1-real" => real_classes(c),
        "mu-lemmas" => {
            c.eq("mu(Alt(5))", 2, mu(&alt(5)?, None)?.mu);
            c.eq("mu(PSL(2,7))", 2, mu(&psl2(7)?, None)?.mu);
            c.eq("mu(C30)", 3, mu(&cyclic(30)?, None)?.mu);
            c.sweep(sweep(Theorem::L6_2, config)?, 30);
            frobenius_triple(c)
        }
        "thm1.4-sweep" => {
            let r = sweep(Theorem::T1_4, config)?;
            let soluble = r.items.iter().filter(|i| i.hypothesis).count();
            c.at_least("p-soluble items", 20, soluble);
            c.sweep(r, 20);
            Ok(())
        }
        "thm1.5-affine" => {
            let r = sweep(Theorem::T1_5, config)?;
            let irreducible = r.items.iter().filter(|i| i.hypothesis && i.status == ItemStatus::Pass).count();
            c.at_least("irreducible affine holomorphs", 30, irreducible);
            c.sweep(r, 30);
            Ok(())
        }
        "cor1.3-sweep" => {
            c.sweep(sweep(Theorem::C1_3, config)?, 20);
            Ok(())
        }
        "lem2.2-sweep" => {
            c.sweep(sweep(Theorem::L2_2, config)?, 20);
            Ok(())
        }
        "thm1.6-sweep" => {
            c.sweep(sweep(Theorem::T1_6, config)?, 20);
            Ok(())
        }
        "thm1.9-sweep" => {
            c.sweep(sweep(Theorem::T1_9, config)?, 30);
            Ok(())
        }
        "lem5.2-sweep" => {
            c.sweep(sweep(Theorem::L5_2, config)?, 5);
            Ok(())
        }
        "lem5.3-sweep" => {
            c.sweep(sweep(Theorem::L5_3, config)?, 20);
            Ok(())
        }
        "ex4.2-psl2" => psl2_31(opts, c, false),
        "ex4.3-pa" => psl2_31(opts, c, true),
        "ex1.12-frobenius" => frobenius_triple(c),
        "ex1.11-hs" => hs(opts, c),
        "ex4.2-j1" => {
            let g = load_perm_group("j1-266.grp", opts.dir())?;
            c.eq("degree", 266, g.degree());
            let r = subdegrees(&g, 0, false)?;
            c.eq("subdegrees", vec![1, 11, 12, 110, 132], r.subdegrees.clone());
            c.eq("coprime pairs", vec![(11, 12)], r.coprime_pairs.clone());
            Ok(())
        }
        "tab1-m24" => m24(opts, c),
        _ => unreachable!("registered case without a runner"),
    }
}

fn stabilizer_set(group: &MatGroup, v: &[u32]) -> Result<HashSet<Mat>> {
    Ok(group.elements(DEFAULT_SPACE_CAP as u128)?.into_iter().filter(|g| vec_mul(group.field(), v, g) == v).collect())
}

/// Sorted orbit sizes of the group on its vectors.
fn orbit_sizes(group: &MatGroup) -> Result<Vec<usize>> {
    let space = group.space_action().ok_or(Error::CapExceeded {
        what: "vector space",
        size: group.space_size() as u128,
        cap: DEFAULT_SPACE_CAP as u128,
    })?;
    let mut sizes: Vec<usize> = space.orbits().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    Ok(sizes)
}

fn char2_module(c: &mut Checks) -> Result<()> {
    let m = ex31_char2_module();
    let g = &m.group;
    let sizes = orbit_sizes(g)?;
    c.eq("orbit sizes", vec![1, 3, 4], sizes);
    let sum: Vec<u32> = m.a.iter().zip(&m.b).map(|(x, y)| x ^ y).collect();
    let ca = stabilizer_set(g, &m.a)?;
    let cb = stabilizer_set(g, &m.b)?;
    c.eq("|C_H(a)|", 6, ca.len());
    c.eq("|C_H(b)|", 8, cb.len());
    c.eq("|C_H(a+b)|", 6, g.vec_stabilizer_order(&sum)? as usize);
    c.eq("|C_H(a) ∩ C_H(b)|", 2, ca.intersection(&cb).count());
    c.eq("completely reducible", false, is_completely_reducible(g, DEFAULT_SPACE_CAP)?);
    Ok(())
}

fn odd_modules(c: &mut Checks) -> Result<()> {
    for p in [5u32, 7, 11] {
        let m = ex31_odd_module(p)?;
        let g = &m.group;
        let sizes = orbit_sizes(g)?;
        let mut expected = vec![1, p as usize - 1];
        expected.extend(std::iter::repeat_n(p as usize, p as usize - 1));
        expected.sort_unstable();
        c.eq(&format!("p={p} orbit count"), p as usize + 1, sizes.len());
        c.eq(&format!("p={p} orbit sizes"), expected, sizes);
        let f = g.field();
        let sum: Vec<u32> = m.e1.iter().zip(&m.e2).map(|(&x, &y)| f.add(x, y)).collect();
        let gh = m.g.mul(&m.h);
        let mut cyclic_gh = HashSet::new();
        let mut x = g.identity();
        while cyclic_gh.insert(x.clone()) {
            x = x.mul(&gh);
        }
        let c_sum = stabilizer_set(g, &sum)?;
        c.holds(&format!("p={p} C_H(e1+e2) = <gh>"), c_sum == cyclic_gh, json!(c_sum.len()));
        let both = stabilizer_set(g, &m.e1)?.intersection(&stabilizer_set(g, &m.e2)?).count();
        c.eq(&format!("p={p} |C_H(e1) ∩ C_H(e2)|"), 1, both);
    }
    Ok(())
}

fn twisted(c: &mut Checks) -> Result<()> {
    let tw = twisted_wreath_ex44()?;
    let ch = &tw.checks;
    c.holds(
        "construction checks",
        ch.eta_is_r_squared
            && ch.dt_cap_l_matches
            && ch.dt_cap_l_centre_matches
            && ch.g_well_defined
            && ch.h_well_defined
            && ch.g_in_n
            && ch.h_in_n,
        json!({ "gamma_order": ch.gamma_order, "a_order": ch.a_order, "b_order": ch.b_order }),
    );
    c.eq("|g^H|", 576, tw.orbit_length(&tw.g)?);
    c.eq("|h^H|", 49, tw.orbit_length(&tw.h)?);
    let cg = tw.centralizer(&tw.g);
    let chh = tw.centralizer(&tw.h);
    c.eq("|C_H(g)|", 98, cg.len());
    c.eq("|C_H(h)|", 1152, chh.len());
    let gh = tw.n_mul(&tw.g, &tw.h);
    let cgh: HashSet<_> = tw.centralizer(&gh).into_iter().collect();
    let both: HashSet<_> = cg.iter().copied().filter(|u| chh.contains(u)).collect();
    c.holds("C_H(gh) = C_H(g) ∩ C_H(h)", cgh == both, json!(cgh.len()));
    let orbit_gh = tw.orbit_length(&gh)?;
    c.eq("|(gh)^H|", 576 * 49, orbit_gh);
    let computed = [1u64, 576, 49, orbit_gh as u64];
    c.eq("max coprime set over computed suborbits", 2, max_coprime_set(&computed).len());
    c.note(json!({
        "points": format!("functions on the {} cosets of L", tw.coset_count()),
        "h_order": tw.h_order(),
        "centralizer_gh": cgh.len(),
        "product_orbit": orbit_gh,
        "remark": "the point set is N = T^168, so a suborbit of size 576*49 fits",
    }));
    Ok(())
}

fn factorization(
    c: &mut Checks,
    label: &str,
    g: &PermGroup,
    a: &PermGroup,
    b: &PermGroup,
    want: (u128, u128),
) -> Result<u128> {
    c.holds(&format!("{label}: A ≤ G"), a.is_subgroup_of(g), json!(a.order()));
    c.holds(&format!("{label}: B ≤ G"), b.is_subgroup_of(g), json!(b.order()));
    let r = check_subgroups(g, a, b)?;
    c.eq(&format!("{label}: indices"), want, (r.index_a, r.index_b));
    c.holds(&format!("{label}: G = AB"), r.holds, json!(r));
    Ok(r.order_intersection)
}

fn m11(opts: &VerifyOptions, c: &mut Checks) -> Result<()> {
    let g = mathieu_in(11, opts.dir())?;
    let l211 = find_two_three_subgroup(&g, 11, 660, opts.seed)?;
    let m10 = g.point_stabilizer(0);
    factorization(c, "L2(11) M10", &g, &l211, &m10, (12, 11))?;
    let m92 = pair_stabilizer(&g, 0, 1)?;
    c.eq("|M9.2|", 144, m92.order());
    let both = factorization(c, "L2(11) M9.2", &g, &l211, &m92, (12, 55))?;
    c.eq("|L2(11) ∩ M9.2|", 12, both);
    Ok(())
}

fn m23(opts: &VerifyOptions, c: &mut Checks) -> Result<()> {
    let g = mathieu_in(23, opts.dir())?;
    let cycle = find_full_cycle(&g, opts.seed)?;
    let a = cyclic_normalizer(&g, &cycle, 2)?;
    c.eq("|23:11|", 253, a.order());
    let b = g.point_stabilizer(0);
    factorization(c, "(23:11) M22", &g, &a, &b, (40320, 23))?;
    Ok(())
}

fn alt8(c: &mut Checks) -> Result<()> {
    let g = alt(8)?;
    let a = g.point_stabilizer(0);
    let gl32 = classical(Family::GL, 3, 2, Variant::Plain)?.group;
    let b = affine_holomorph(&gl32)?.group;
    c.eq("|AGL(3,2)|", 1344, b.order());
    factorization(c, "Alt(7) AGL(3,2)", &g, &a, &b, (8, 15))?;
    Ok(())
}

fn small_factorizations(c: &mut Checks) -> Result<()> {
    let expected: [(&str, PermGroup, Vec<(u128, u128)>); 4] = [
        ("Alt(5)", alt(5)?, vec![(5, 6)]),
        ("Alt(6)", alt(6)?, vec![]),
        ("PSL(2,7)", psl2(7)?, vec![(7, 8)]),
        ("PSL(2,11)", psl2(11)?, vec![(11, 12), (12, 55)]),
    ];
    for (name, g, want) in expected {
        let s = coprime_factorization_search(&g, None)?;
        c.eq(&format!("{name} maximal coprime index pairs"), want, s.index_pairs());
        c.eq(&format!("{name} coprime pairs without factorization"), 0, s.coprime_without_factorization);
    }
    Ok(())
}

fn real_classes(c: &mut Checks) -> Result<()> {
    let extended = [
        ("GL(2,3)<tau>", Family::GL, 2, 3),
        ("GL(3,2)<tau>", Family::GL, 3, 2),
        ("GU(2,2)<tau>", Family::GU, 2, 2),
        ("GU(3,2)<tau>", Family::GU, 3, 2),
    ];
    for (name, family, n, q) in extended {
        let g = classical(family, n, q, Variant::Plain)?.group;
        let r = real_classes_check(&g, &Extension::Tau, DEFAULT_REAL_CAP)?;
        c.holds(name, r.passed, json!(r));
    }
    let plain = [
        ("SP(4,2)", Family::SP, 4, 2, Variant::Plain),
        ("GO+(4,3)", Family::GO, 4, 3, Variant::Plus),
        ("GO-(4,3)", Family::GO, 4, 3, Variant::Minus),
        ("GO(3,3)", Family::GO, 3, 3, Variant::Plain),
    ];
    for (name, family, n, q, variant) in plain {
        let g = classical(family, n, q, variant)?.group;
        let r = real_classes_check(&g, &Extension::None, DEFAULT_REAL_CAP)?;
        c.holds(name, r.passed, json!(r));
    }
    let sp23 = classical(Family::SP, 2, 3, Variant::Plain)?.group;
    let csp23 = classical(Family::SP, 2, 3, Variant::Conformal)?.group;
    let r = real_classes_check(&sp23, &Extension::Overgroup(csp23), DEFAULT_REAL_CAP)?;
    c.holds("SP(2,3) in CSp(2,3)", r.passed, json!(r));
    let gl25 = classical(Family::GL, 2, 5, Variant::Plain)?.group;
    let r = real_classes_check(&gl25, &Extension::None, DEFAULT_REAL_CAP)?;
    c.holds("GL(2,5) without tau has a non-real element", r.non_real > 0, json!(r));
    Ok(())
}

fn frobenius_triple(c: &mut Checks) -> Result<()> {
    let f = frobenius_product(&[(5, 4), (7, 3), (23, 11)])?;
    let g = &f.group;
    c.holds("Frobenius product transitive", g.is_transitive(), json!(g.degree()));
    c.eq("Frobenius product primitive", false, g.is_primitive());
    let r = subdegrees(g, 0, false)?;
    let present = [3u64, 4, 11].iter().all(|d| r.subdegrees.contains(d));
    c.holds("subdegrees 3, 4, 11 present", present, json!(r.max_coprime_set));
    c.eq("max coprime set", vec![3, 4, 11], r.max_coprime_set.clone());
    Ok(())
}

fn psl2_31(opts: &VerifyOptions, c: &mut Checks, wreath: bool) -> Result<()> {
    let g = psl2(31)?;
    let a5 = find_alt5(&g, opts.seed)?;
    c.eq("|H|", 60, a5.order());
    let action = coset_action(&g, a5.generators(), CosetLookup::Hash, 1 << 12)?;
    c.eq("degree", 248, action.index);
    let base = &action.image;
    c.holds("primitive", base.is_primitive(), json!(base.degree()));
    let r = subdegrees(base, 0, false)?;
    for d in [5u64, 12, 60] {
        c.holds(&format!("subdegree {d} present"), r.subdegrees.contains(&d), json!(r.subdegrees));
    }
    if !wreath {
        c.note(json!({ "subdegrees": r.subdegrees, "coprime_pairs": r.coprime_pairs }));
        return Ok(());
    }
    let w = product_action_wreath(base, 2)?;
    c.eq("product degree", 248 * 248, w.degree());
    let rw = subdegrees(&w, 0, false)?;
    for d in [25u64, 144] {
        c.holds(&format!("subdegree {d} present"), rw.subdegrees.contains(&d), json!(rw.max_coprime_set));
    }
    c.holds("25 and 144 coprime", rw.coprime_pairs.contains(&(25, 144)), json!(rw.coprime_pairs.len()));
    c.holds("at most two pairwise coprime", rw.max_coprime_set.len() <= 2, json!(rw.max_coprime_set));
    Ok(())
}

fn hs(opts: &VerifyOptions, c: &mut Checks) -> Result<()> {
    let g = load_perm_group("hs100.grp", opts.dir())?;
    c.eq("degree", 100, g.degree());
    let stab = g.point_stabilizer(0);
    let y = stab
        .orbits()
        .into_iter()
        .find(|o| o.len() == 77)
        .ok_or_else(|| Error::InvalidArgument("no suborbit of length 77".into()))?[0];
    let b = pair_stabilizer(&g, 0, y)?;
    c.eq("|2^4.Sym(6)|", 11520, b.order());
    let action = coset_action(&g, b.generators(), CosetLookup::Hash, 4000)?;
    c.eq("coset degree", 3850, action.index);
    let r = subdegrees(&action.image, 0, false)?;
    c.eq("subdegrees", vec![1, 15, 32, 90, 120, 160, 192, 240, 240, 360, 960, 1440], r.subdegrees.clone());
    let k = r.coprime_pairs.iter().position(|&p| p == (15, 32));
    let absent = k.map(|k| !r.product_present[k]);
    c.eq("15*32 = 480 absent", Some(true), absent);
    c.note(json!({ "coprime_pairs": r.coprime_pairs, "product_present": r.product_present }));
    Ok(())
}

fn m24(opts: &VerifyOptions, c: &mut Checks) -> Result<()> {
    let g = mathieu_in(24, opts.dir())?;
    let a = g.point_stabilizer(0);
    let b = match find_data_file("m24-sextet.grp", opts.dir()) {
        Some(_) => {
            let b = load_perm_group("m24-sextet.grp", opts.dir())?;
            c.note(json!({ "sextet_subgroup": "file" }));
            b
        }
        None => {
            c.note(json!({ "sextet_subgroup": "computed" }));
            sextet_stabilizer(&g)?
        }
    };
    let both = factorization(c, "M23 (2^6.3.Sym(6))", &g, &a, &b, (24, 1771))?;
    c.eq("|A ∩ B|", 5760, both);
    Ok(())
}

/// JSON-lines records for a batch of case reports: a header, then one
/// record per assertion and item, one per case, and a final summary.
pub fn report_lines(reports: &[CaseReport], seed: u64) -> Vec<Value> {
    let mut out = vec![json!({
        "record": "header", "format": REPORT_FORMAT, "version": env!("CARGO_PKG_VERSION"), "seed": seed,
    })];
    for r in reports {
        for a in &r.assertions {
            out.push(json!({
                "record": "assertion", "case": r.case, "name": a.name, "passed": a.passed,
                "expected": a.expected, "actual": a.actual,
            }));
        }
        for i in &r.items {
            let mut v = json!(i);
            v["record"] = json!("item");
            v["case"] = json!(r.case);
            out.push(v);
        }
        out.push(json!({
            "record": "case", "case": r.case, "status": r.status, "seed": r.seed, "millis": r.millis,
            "version": r.version, "notes": r.notes,
            "assertions": r.assertions.len(),
            "failed": r.assertions.iter().filter(|a| !a.passed).count(),
        }));
    }
    let status = overall_status(reports);
    out.push(json!({
        "record": "summary", "status": status, "exit": status.exit_code(), "cases": reports.len(),
    }));
    out
}

/// Worst status across reports; an empty batch passes.
pub fn overall_status(reports: &[CaseReport]) -> CaseStatus {
    reports.iter().map(|r| r.status).max().unwrap_or(CaseStatus::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_consistent() {
        let ids: HashSet<&str> = cases().iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), cases().len());
        for k in 1..=11 {
            let name = format!("A{k}");
            assert!(cases().iter().any(|c| c.criterion == Some(name.as_str())), "{name}");
        }
        assert!(run_case("nope", &VerifyOptions::default()).is_err());
    }

    #[test]
    fn fast_case_passes() {
        let r = run_case("ex3.1-p2", &VerifyOptions::new(DEFAULT_SEED, None)).unwrap();
        assert_eq!(r.status, CaseStatus::Pass, "{:?}", r.assertions);
        let lines = report_lines(&[r], DEFAULT_SEED);
        assert_eq!(lines[0]["record"], "header");
        assert_eq!(lines.last().unwrap()["exit"], 0);
    }

    #[test]
    fn missing_data_is_skipped() {
        let dir = tempfile::tempdir().unwrap();
        let opts = VerifyOptions::new(DEFAULT_SEED, Some(dir.path().to_path_buf()));
        if find_data_file("j1-266.grp", Some(dir.path())).is_none() {
            let r = run_case("ex4.2-j1", &opts).unwrap();
            assert_eq!(r.status, CaseStatus::Skipped);
            assert_eq!(r.status.exit_code(), 3);
        }
    }
}
