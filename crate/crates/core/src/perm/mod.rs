//! Permutations, group actions, stabilizer chains and permutation groups.

mod action;
mod chain;
mod coset;
mod group;
mod permutation;
mod structure;

pub use action::{
    orbit, point_orbits, Action, ConjugationAction, FnAction, OrbitOptions, OrbitRecord, PointAction, DEFAULT_ORBIT_CAP,
};
pub use chain::{Level, ProductReplacement, StabChain};
pub use coset::{coset_action, CosetAction, CosetKeyer, CosetLookup, DEFAULT_INDEX_CAP};
pub use group::PermGroup;
pub(crate) use permutation::parse_perm_at;
pub use permutation::{gcd, lcm, parse_perm, Perm};
pub use structure::{core, factorize, fitting_is_trivial, intersection, p_core, sylow_subgroup, DEFAULT_FITTING_CAP};
