//! Factories for the groups and modules used throughout.

mod affine;
mod basic;
mod classical;
mod ex31;
mod finders;
mod frobenius;
mod mathieu;
mod modules;
mod psl2;
mod twisted;
mod wreath;

pub use affine::{affine_holomorph, AffineGroup, AFFINE_CAP};
pub use basic::{alt, cyclic, dihedral, direct_product_intransitive, direct_product_on_tuples, sym};
pub use classical::{classical, gl_order, preserves_form, ClassicalGroup, Family, Variant, CLASSICAL_CAP};
pub use ex31::{ex31_char2_module, ex31_odd_module, sym4_quotient_matrix, Char2Module, OddModule};
pub use finders::{
    cyclic_normalizer, find_alt5, find_full_cycle, find_two_three_subgroup, pair_stabilizer, sextet, sextet_stabilizer,
    SEARCH_LIMIT,
};
pub use frobenius::{frobenius_product, FrobeniusProduct, FROBENIUS_CAP};
pub use mathieu::{mathieu, mathieu_in, mathieu_order};
pub use modules::{
    conjugate_module, deleted_permutation_module, diagonal_sum, external_sum, monomial_group, multiplication_matrix,
    perm_matrix, permutation_module, quaternion_module, quotient_module, scalar_group, semilinear_group,
    singer_subgroup, submodule,
};
pub use psl2::{psl2, psl2_order, sl2_generators, ProjectiveLine};
pub use twisted::{twisted_wreath_ex44, HElem, NElem, TElem, TwistedChecks, TwistedWreath};
pub use wreath::{product_action_wreath, WREATH_CAP};
