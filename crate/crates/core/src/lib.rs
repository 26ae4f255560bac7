//! Finite quasigroup and loop algebra over explicit Cayley tables:
//! structure classification, Smarandache substructures, isotopy and
//! autotopism machinery, holomorph construction, variety checking by
//! exhaustive identity evaluation, and instance-level audits of the two
//! holomorph/variety theorems.
//!
//! The crate is `no_std + alloc`; everything is integer math over immutable
//! values, so all operations are pure and freely shareable across threads.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod fixtures;
pub mod holomorph;
pub mod morph;
pub mod perm;
pub mod subs;
pub mod sweep;
pub mod table;
pub mod theorem;
pub mod variety;

pub use holomorph::{build_holomorph, build_smarandache_holomorph, HolomorphTable};
pub use morph::{
    apply_isotopism, automorphism_group, autotopism_set, find_conjugator, find_isomorphism,
    find_s_isomorphism, s_autotopism_set, saum, ssym, verify_isotopism, verify_s_isotopism,
    AutotopismSet, Isotopism, PermGroup,
};
pub use perm::Perm;
pub use subs::{
    closure, enumerate_substructures, is_smarandache, make_spair, ClassFilter, SPair, SubStructure,
};
pub use table::{CayleyTable, Side, StructureClass};
pub use theorem::{
    check_pairing, corollary_checks_31, special_triple, verify_theorem_31, verify_theorem_32,
    TheoremReport,
};
pub use variety::{
    catalog, eval_term, holds_identity, smarandache_variety_check, variety_profile, IdentityTerm,
    IdentityVerdict, ProfileEntry, VarietyDef,
};
