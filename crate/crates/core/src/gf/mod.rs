//! Finite fields, matrices, matrix groups and their modules.

mod field;
mod group;
mod mat;
mod module;
mod subspace;

pub use field::{is_prime, prime_power, Elem, Field};
pub use group::{MatGroup, PermImage, DEFAULT_SPACE_CAP};
pub use mat::{decode, encode, is_zero, kernel, left_kernel, row_reduce, vec_add, vec_mul, vec_scale, Mat, Vector};
pub use module::{
    fixed_space, intertwiners, is_completely_reducible, is_coprime_module, is_irreducible, module_isomorphic, psi_map,
    spin, submodule_lattice,
};
pub use subspace::Subspace;
