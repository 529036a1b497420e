//! Deterministic corpora of modules and permutation groups for the sweeps.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{
    affine_holomorph, alt, classical, conjugate_module, cyclic, deleted_permutation_module, dihedral,
    direct_product_on_tuples, ex31_char2_module, ex31_odd_module, external_sum, find_alt5, frobenius_product, mathieu,
    monomial_group, pair_stabilizer, permutation_module, product_action_wreath, psl2, quaternion_module,
    quotient_module, scalar_group, semilinear_group, singer_subgroup, submodule, sym, Family, Variant,
};
use crate::error::Result;
use crate::gf::{is_irreducible, submodule_lattice, Field, Mat, MatGroup, DEFAULT_SPACE_CAP};
use crate::perm::{coset_action, CosetLookup, Perm, PermGroup, DEFAULT_INDEX_CAP};

fn coset_action_group(group: &PermGroup, sub: &[Perm]) -> Result<PermGroup> {
    Ok(coset_action(group, sub, CosetLookup::Hash, DEFAULT_INDEX_CAP)?.image)
}

/// Largest `|V|` admitted to the seeded completely reducible corpus.
pub const CR_SPACE_CAP: u64 = 4096;
/// Largest `|H|` admitted to the seeded completely reducible corpus.
pub const CR_ORDER_CAP: u128 = 2000;

#[derive(Clone, Debug)]
pub struct ModuleItem {
    pub id: String,
    pub group: MatGroup,
}

#[derive(Clone, Debug)]
pub struct PermItem {
    pub id: String,
    pub group: PermGroup,
}

fn item(id: impl Into<String>, group: MatGroup) -> ModuleItem {
    ModuleItem { id: id.into(), group }
}

fn gf(q: u32) -> Arc<Field> {
    Arc::new(Field::from_order(q).expect("prime power"))
}

/// Small blocks whose order is prime to the characteristic.
fn coprime_blocks(q: u32) -> Result<Vec<(String, MatGroup)>> {
    let f = gf(q);
    let p = f.characteristic();
    let mut out: Vec<(String, MatGroup)> = Vec::new();
    for d in 2..q {
        if (q - 1).is_multiple_of(d) {
            out.push((format!("scalar{d}"), scalar_group(q, 1, d)?));
        }
    }
    if f.degree() == 1 {
        for k in 2..=4u32 {
            let top = q.pow(k) - 1;
            if q.pow(k) > 256 {
                break;
            }
            for d in 2..=top {
                if top % d == 0 && d <= 80 {
                    let g = singer_subgroup(q, k, d)?;
                    if is_irreducible(&g, DEFAULT_SPACE_CAP)? {
                        out.push((format!("singer{k}-{d}"), g));
                    }
                }
            }
        }
        if p > 2 {
            out.push(("quaternion".into(), quaternion_module(q)?));
        }
        for (name, g) in [("sym3", sym(3)?), ("sym4", sym(4)?), ("alt4", alt(4)?), ("dih5", dihedral(5)?)] {
            if g.order() % p as u128 != 0 {
                out.push((format!("{name}-deleted"), deleted_permutation_module(&f, &g)?));
                out.push((format!("{name}-perm"), permutation_module(&f, &g)?));
            }
        }
        if p > 3 {
            out.push(("mono2-sym3".into(), monomial_group(q, 2, &sym(3)?)?));
        }
    } else if p > 2 {
        out.push(("quaternion".into(), quaternion_module(q)?));
    }
    if p != 3 && p != 2 {
        out.push(("sym3-perm".into(), permutation_module(&f, &sym(3)?)?));
    }
    if p == 2 {
        out.push(("cyc3-perm".into(), permutation_module(&f, &cyclic(3)?)?));
        out.push(("cyc5-perm".into(), permutation_module(&f, &cyclic(5)?)?));
    }
    out.retain(|(_, g)| g.order() % p as u128 != 0);
    out.dedup_by(|a, b| a.0 == b.0);
    Ok(out)
}

fn random_invertible<R: Rng>(field: &Arc<Field>, n: usize, rng: &mut R) -> Mat {
    loop {
        let data = (0..n * n).map(|_| rng.gen_range(0..field.order())).collect();
        let m = Mat::new(field, n, n, data).expect("shape");
        if m.det() != 0 {
            return m;
        }
    }
}

/// Seeded direct sums of coprime-characteristic blocks, conjugated by a
/// random basis change. Every item is completely reducible by Maschke.
pub fn completely_reducible_corpus(seed: u64, count: usize) -> Result<Vec<ModuleItem>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fields = [2u32, 3, 4, 5, 7, 8, 9];
    let libraries: Vec<(u32, Vec<(String, MatGroup)>)> =
        fields.iter().map(|&q| Ok((q, coprime_blocks(q)?))).collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 50 {
        attempts += 1;
        let (q, lib) = libraries.choose(&mut rng).expect("nonempty");
        if lib.is_empty() {
            continue;
        }
        let parts = rng.gen_range(1..=3);
        let mut names = Vec::new();
        let mut acc: Option<MatGroup> = None;
        for _ in 0..parts {
            let (name, block) = lib.choose(&mut rng).expect("nonempty");
            let next = match &acc {
                None => Some(block.clone()),
                Some(a) => {
                    let dim = a.dim() + block.dim();
                    let size = (*q as u64).checked_pow(dim as u32);
                    if dim > 6 || size.is_none_or(|s| s > CR_SPACE_CAP) {
                        continue;
                    }
                    Some(external_sum(a, block)?)
                }
            };
            names.push(name.clone());
            acc = next;
        }
        let Some(group) = acc else { continue };
        if group.space_size() > CR_SPACE_CAP || group.dim() > 6 || group.order() > CR_ORDER_CAP {
            continue;
        }
        let x = random_invertible(group.field(), group.dim(), &mut rng);
        let group = conjugate_module(&group, &x)?;
        out.push(item(format!("cr{:03}-gf{q}-{}", out.len(), names.join("+")), group));
    }
    Ok(out)
}

/// A fixed list of non-trivial irreducible modules.
pub fn irreducible_corpus() -> Result<Vec<ModuleItem>> {
    let mut out = Vec::new();
    let a1 = ex31_char2_module();
    let lattice = submodule_lattice(&a1.group, DEFAULT_SPACE_CAP)?;
    out.push(item("sym4-quotient-2dim", submodule(&a1.group, &lattice[1])?));
    for q in [2, 3, 4, 5, 7, 8, 9] {
        out.push(item(format!("sl2-{q}"), classical(Family::SL, 2, q, Variant::Plain)?.group));
    }
    out.push(item("gl2-3", classical(Family::GL, 2, 3, Variant::Plain)?.group));
    out.push(item("gl2-5", classical(Family::GL, 2, 5, Variant::Plain)?.group));
    out.push(item("gl3-2", classical(Family::GL, 3, 2, Variant::Plain)?.group));
    out.push(item("sp4-2", classical(Family::SP, 4, 2, Variant::Plain)?.group));
    out.push(item("gu2-2", classical(Family::GU, 2, 2, Variant::Plain)?.group));
    out.push(item("go3-3", classical(Family::GO, 3, 3, Variant::Plain)?.group));
    out.push(item("singer-2-3", singer_subgroup(2, 3, 7)?));
    out.push(item("cyclic5-gf2^4", singer_subgroup(2, 4, 5)?));
    out.push(item("singer-2-4", singer_subgroup(2, 4, 15)?));
    out.push(item("cyclic4-gf3^2", singer_subgroup(3, 2, 4)?));
    out.push(item("singer-3-2", singer_subgroup(3, 2, 8)?));
    out.push(item("gammal1-8", semilinear_group(2, 3, 7)?));
    out.push(item("gammal1-9", semilinear_group(3, 2, 8)?));
    for q in [3, 5, 7] {
        out.push(item(format!("quaternion-gf{q}"), quaternion_module(q)?));
    }
    out.push(item("sym3-deleted-gf5", deleted_permutation_module(&gf(5), &sym(3)?)?));
    out.push(item("sym4-deleted-gf3", deleted_permutation_module(&gf(3), &sym(4)?)?));
    out.push(item("sym5-deleted-gf3", deleted_permutation_module(&gf(3), &sym(5)?)?));
    out.push(item("alt5-deleted-gf2", deleted_permutation_module(&gf(2), &alt(5)?)?));
    out.push(item("mono2-sym3-gf3", monomial_group(3, 2, &sym(3)?)?));
    let mut checked = Vec::with_capacity(out.len());
    for m in out {
        if is_irreducible(&m.group, DEFAULT_SPACE_CAP)? {
            checked.push(m);
        }
    }
    Ok(checked)
}

/// Modules outside the completely reducible class.
pub fn modular_corpus() -> Result<Vec<ModuleItem>> {
    let mut out = vec![item("sym4-quotient-gf2", ex31_char2_module().group)];
    for p in [3, 5, 7] {
        out.push(item(format!("borel-gf{p}"), ex31_odd_module(p)?.group));
    }
    out.push(item("sym4-perm-gf2", permutation_module(&gf(2), &sym(4)?)?));
    out.push(item("sym3-perm-gf3", permutation_module(&gf(3), &sym(3)?)?));
    out.push(item("sym3-perm-gf2", permutation_module(&gf(2), &sym(3)?)?));
    out.push(item("alt4-perm-gf2", permutation_module(&gf(2), &alt(4)?)?));
    out.push(item("alt4-perm-gf3", permutation_module(&gf(3), &alt(4)?)?));
    out.push(item("cyclic3-perm-gf3", permutation_module(&gf(3), &cyclic(3)?)?));
    out.push(item("dih4-perm-gf2", permutation_module(&gf(2), &dihedral(4)?)?));
    for p in [2, 3, 5] {
        let f = gf(p);
        let jordan = Mat::from_ints(&f, &[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        out.push(item(format!("jordan3-gf{p}"), MatGroup::new(&f, 3, vec![jordan])?));
    }
    out.push(item("sym4-deleted-gf2", deleted_permutation_module(&gf(2), &sym(4)?)?));
    out.push(item("sym3-deleted-gf3", deleted_permutation_module(&gf(3), &sym(3)?)?));
    Ok(out)
}

/// Irreducible, seeded completely reducible and modular modules together.
pub fn general_module_corpus(seed: u64, count: usize) -> Result<Vec<ModuleItem>> {
    let mut out = irreducible_corpus()?;
    out.extend(modular_corpus()?);
    out.extend(completely_reducible_corpus(seed, count)?);
    Ok(out)
}

/// Irreducible modules whose holomorphs form the affine corpus.
pub fn affine_module_corpus() -> Result<Vec<ModuleItem>> {
    let mut out = irreducible_corpus()?;
    out.push(item("singer-2-2", singer_subgroup(2, 2, 3)?));
    out.push(item("singer-2-5", singer_subgroup(2, 5, 31)?));
    out.push(item("cyclic9-gf2^6", singer_subgroup(2, 6, 9)?));
    out.push(item("cyclic21-gf2^6", singer_subgroup(2, 6, 21)?));
    out.push(item("cyclic13-gf3^3", singer_subgroup(3, 3, 13)?));
    out.push(item("cyclic11-gf3^5", singer_subgroup(3, 5, 11)?));
    out.push(item("gammal1-16", semilinear_group(2, 4, 15)?));
    out.push(item("gammal1-25", semilinear_group(5, 2, 24)?));
    out.push(item("sl2-11", classical(Family::SL, 2, 11, Variant::Plain)?.group));
    out.push(item("gl2-7", classical(Family::GL, 2, 7, Variant::Plain)?.group));
    out.push(item("sl3-3", classical(Family::SL, 3, 3, Variant::Plain)?.group));
    let heart = {
        let del = deleted_permutation_module(&gf(3), &alt(6)?)?;
        let lattice = submodule_lattice(&del, DEFAULT_SPACE_CAP)?;
        let line = lattice.iter().find(|s| s.dim() == 1).expect("all-ones line").clone();
        quotient_module(&del, &line)?
    };
    out.push(item("alt6-heart-gf3", heart));
    let mut checked = Vec::with_capacity(out.len());
    for m in out {
        if is_irreducible(&m.group, DEFAULT_SPACE_CAP)? {
            checked.push(m);
        }
    }
    Ok(checked)
}

/// Transitive permutation groups of several O'Nan–Scott types, plus
/// imprimitive and regular examples.
pub fn transitive_corpus() -> Result<Vec<PermItem>> {
    let mut out = Vec::new();
    let mut push = |id: String, group: PermGroup| out.push(PermItem { id, group });
    for n in 3..=7 {
        push(format!("sym{n}"), sym(n)?);
    }
    for n in 4..=8 {
        push(format!("alt{n}"), alt(n)?);
    }
    for n in [5, 6, 8] {
        push(format!("cyclic{n}"), cyclic(n)?);
    }
    for n in [5, 6, 7, 8] {
        push(format!("dihedral{n}"), dihedral(n)?);
    }
    for q in [4, 5, 7, 8, 9, 11, 13] {
        push(format!("psl2-{q}"), psl2(q)?);
    }
    push("m11".into(), mathieu(11)?);
    let l211 = psl2(11)?;
    let a5 = find_alt5(&l211, 11)?;
    push("psl2-11-on-11".into(), coset_action_group(&l211, a5.generators())?);
    let l231 = psl2(31)?;
    let a5 = find_alt5(&l231, 31)?;
    push("psl2-31-on-248".into(), coset_action_group(&l231, a5.generators())?);
    push("sym5-on-pairs".into(), {
        let s5 = sym(5)?;
        let st = pair_stabilizer(&s5, 0, 1)?;
        coset_action_group(&s5, st.generators())?
    });
    push("sym3-wr-2".into(), product_action_wreath(&sym(3)?, 2)?);
    push("alt5-wr-2".into(), product_action_wreath(&alt(5)?, 2)?);
    push("psl2-7-wr-2".into(), product_action_wreath(&psl2(7)?, 2)?);
    push("sym4-wr-3".into(), product_action_wreath(&sym(4)?, 3)?);
    push("frobenius-5-4".into(), frobenius_product(&[(5, 4)])?.group);
    push("frobenius-5-4-7-3".into(), frobenius_product(&[(5, 4), (7, 3)])?.group);
    push("frobenius-5-4-7-3-23-11".into(), frobenius_product(&[(5, 4), (7, 3), (23, 11)])?.group);
    push("sym3-x-sym3".into(), direct_product_on_tuples(&[&sym(3)?, &sym(3)?])?);
    for m in affine_module_corpus()?.into_iter().take(12) {
        if m.group.space_size() <= 4096 {
            push(format!("affine-{}", m.id), affine_holomorph(&m.group)?.group);
        }
    }
    Ok(out)
}

/// Direct powers of non-abelian simple groups.
pub fn simple_power_corpus() -> Result<Vec<PermItem>> {
    Ok(vec![
        PermItem { id: "alt5".into(), group: alt(5)? },
        PermItem { id: "psl2-7".into(), group: psl2(7)? },
        PermItem { id: "alt6".into(), group: alt(6)? },
        PermItem { id: "psl2-8".into(), group: psl2(8)? },
        PermItem { id: "psl2-11".into(), group: psl2(11)? },
        PermItem { id: "psl2-13".into(), group: psl2(13)? },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::is_coprime_module;

    #[test]
    fn corpora_are_deterministic_and_gated() {
        let a = completely_reducible_corpus(3, 40).unwrap();
        let b = completely_reducible_corpus(3, 40).unwrap();
        assert_eq!(a.len(), 40);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.id, y.id);
            assert_eq!(x.group.generators(), y.group.generators());
            assert!(is_coprime_module(&x.group));
            assert!(x.group.order() <= CR_ORDER_CAP && x.group.dim() <= 6);
        }
    }

    #[test]
    fn irreducible_corpus_is_large_enough() {
        let irr = irreducible_corpus().unwrap();
        assert!(irr.len() >= 20, "{}", irr.len());
        assert_eq!(irr[0].group.dim(), 2);
    }
}
