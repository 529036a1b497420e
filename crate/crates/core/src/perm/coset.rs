//! Action of a group on the right cosets of a subgroup.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::chain::StabChain;
use super::{Perm, PermGroup};

pub const DEFAULT_INDEX_CAP: usize = 100_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CosetLookup {
    /// Canonical coset keys in a hash table.
    #[default]
    Hash,
    /// Compare against every stored representative by sifting `x·r⁻¹`.
    LinearProbe,
}

/// Computes a canonical key for right cosets `Hx` inside `G`.
///
/// The subgroup chain is built on the base of `G`, so the images of that
/// base determine an element; the key is the lexicographically least image
/// tuple over the coset.
pub struct CosetKeyer {
    base: Vec<u32>,
    sub_chain: StabChain,
}

impl CosetKeyer {
    pub fn new(group: &PermGroup, sub_generators: &[Perm]) -> CosetKeyer {
        let base = group.chain().base();
        let sub_chain = StabChain::build(group.degree(), sub_generators, &base);
        CosetKeyer { base, sub_chain }
    }

    pub fn sub_chain(&self) -> &StabChain {
        &self.sub_chain
    }

    pub fn key(&self, x: &Perm) -> Vec<u32> {
        let mut y = x.clone();
        for level in self.sub_chain.levels() {
            let best = level.orbit().iter().copied().min_by_key(|&c| y.apply(c)).expect("non-empty orbit");
            if best != level.base_point() {
                let u = level.transversal_element(best).expect("orbit point");
                y = &u * &y;
            }
        }
        self.base.iter().map(|&b| y.apply(b)).collect()
    }
}

/// The permutation image of `G` acting on cosets of `H` by right
/// multiplication. Coset 0 is `H`; numbering follows discovery order.
#[derive(Clone, Debug)]
pub struct CosetAction {
    pub image: PermGroup,
    pub index: usize,
    pub representatives: Vec<Perm>,
}

pub fn coset_action(
    group: &PermGroup,
    sub_generators: &[Perm],
    lookup: CosetLookup,
    cap: usize,
) -> Result<CosetAction> {
    for h in sub_generators {
        if !group.contains(h)? {
            return Err(Error::NotInGroup(h.to_string()));
        }
    }
    let keyer = CosetKeyer::new(group, sub_generators);
    let sub_order = keyer.sub_chain().order();
    let index = group.order() / sub_order;
    if index > cap as u128 {
        return Err(Error::CapExceeded { what: "coset index", size: index, cap: cap as u128 });
    }
    let index = index as usize;
    let gens = group.generators();
    let mut reps = vec![group.identity()];
    let mut table: HashMap<Vec<u32>, usize> = HashMap::new();
    if lookup == CosetLookup::Hash {
        table.insert(keyer.key(&reps[0]), 0);
    }
    let mut images: Vec<Vec<u32>> = vec![Vec::with_capacity(index); gens.len()];
    let mut head = 0;
    while head < reps.len() {
        for (s, g) in gens.iter().enumerate() {
            let x = &reps[head] * g;
            let found = match lookup {
                CosetLookup::Hash => table.get(&keyer.key(&x)).copied(),
                CosetLookup::LinearProbe => reps.iter().position(|r| keyer.sub_chain().contains(&(&x * &r.inverse()))),
            };
            let j = match found {
                Some(j) => j,
                None => {
                    let j = reps.len();
                    if lookup == CosetLookup::Hash {
                        table.insert(keyer.key(&x), j);
                    }
                    reps.push(x);
                    j
                }
            };
            images[s].push(j as u32);
        }
        head += 1;
    }
    debug_assert_eq!(reps.len(), index);
    let perms: Vec<Perm> = images.into_iter().map(Perm::from_images_unchecked).collect();
    Ok(CosetAction { image: PermGroup::new(index, perms)?, index, representatives: reps })
}
