//! Subdegrees, factorizations, μ and the theorem-level checks.

mod coprime;
mod factor;
mod mu;
mod real;
mod soluble;
mod subdegree;
mod subgroups;

pub use coprime::{coprime_pairs, max_coprime_set};
pub use factor::{
    check_factorization, check_subgroups, coprime_factorization_search, intersection_order, FactorizationRecord,
    FactorizationSearch, MaximalFactorization, DEFAULT_INTERSECTION_CAP,
};
pub use mu::{mu, MuReport};
pub use real::{real_classes_check, Extension, RealClassesReport, DEFAULT_REAL_CAP};
pub use soluble::{hall_p_complement, is_p_soluble, DEFAULT_SOLUBLE_CAP};
pub use subdegree::{
    faithful_from_report, faithful_subdegrees, subdegrees, FaithfulReport, SubdegreeReport, SuborbitInfo,
};
pub use subgroups::{
    all_subgroups, conjugacy_labels, maximal_subgroups, Bitset, GroupTable, Subgroup, DEFAULT_SUBGROUP_CAP,
};

mod corpus;
mod sweep;

pub use corpus::{
    affine_module_corpus, completely_reducible_corpus, general_module_corpus, irreducible_corpus, modular_corpus,
    simple_power_corpus, transitive_corpus, ModuleItem, PermItem,
};
pub use sweep::{
    check_c1_3, check_l2_2, check_l5_2, check_l5_3, check_l6_2, check_t1_1, check_t1_2, check_t1_4, check_t1_5_affine,
    check_t1_6, check_t1_9, sweep, ItemReport, ItemStatus, SweepConfig, SweepReport, Theorem, FACTORIZATION_SWEEP_CAP,
    MU_SWEEP_CAP, SAMPLE_THRESHOLD,
};
