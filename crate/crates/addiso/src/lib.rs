//! Additive combinatorics over finite abelian groups: sumsets and stabilizers,
//! isoperimetric connectivity with its fragments and atoms, critical-pair
//! structure, and an exhaustive small-order verification harness.

pub mod error;
mod flow;
pub mod group;
pub mod iso;
pub mod quotient;
pub mod report;
pub mod sets;

pub use error::{Error, Result};
pub use group::{abelian_group_catalog, Element, Group, Subgroup};
pub use iso::{
    atom_intersection_check, fragments, hyper_atom, is_k_fragment, is_vosper, kappa,
    kappa1_mincut, quotient_kappa_check, strong_isoperimetric_witness, vominus_check,
    FragmentSet, HyperAtom, KappaResult, StrongIpWitness, VosperMode, FRAGMENT_LIMIT_DEFAULT,
    KAPPA_BRUTE_MAX, KAPPA_HIGH_K_MAX,
};
pub use quotient::QuotientMap;
pub use report::{config_hash, CheckSummary, ConfigEcho, Counterexample, Report, Verdict};
pub use sets::{boundary, lee_double_dual, outside, GroupSet, HDecomposition};
