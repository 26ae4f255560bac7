//! Holomorphs: the product table on `AUM(L) × L` (or `SAUM(L) × L`) with
//! `(α,x)∘(β,y) = (αβ, xβ·y)`.
//!
//! Pairs are encoded as `n·a + x` where `a` is the group element's index in
//! the sorted order of image sequences and `x` the base element, so tables
//! are reproducible across runs. The Smarandache holomorph's claimed
//! properties (the product table is a quasigroup, the designated block
//! `L′ × SAUM` is a group) are verified on every construction rather than
//! assumed.

use crate::morph::{self, MorphError, PermGroup};
use crate::perm::Perm;
use crate::subs::{self, SPair, SubError};
use crate::table::{CayleyTable, TableError};
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HolomorphMode {
    Full,
    Smarandache,
}

/// A holomorph table together with its encoding data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HolomorphTable {
    base: CayleyTable,
    group: PermGroup,
    table: CayleyTable,
    mode: HolomorphMode,
    /// Image of `L′ × SAUM` under the encoding; Smarandache mode only.
    designated: Option<BTreeSet<usize>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HolomorphError {
    Morph(MorphError),
    Table(TableError),
    Sub(SubError),
    NotAQuasigroupBase,
    /// Construction-time verification of a structural claim failed.
    ClaimViolated(&'static str),
    NotSmarandacheMode,
}

impl fmt::Display for HolomorphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HolomorphError::Morph(e) => write!(f, "{e}"),
            HolomorphError::Table(e) => write!(f, "{e}"),
            HolomorphError::Sub(e) => write!(f, "{e}"),
            HolomorphError::NotAQuasigroupBase => {
                write!(f, "holomorph construction requires a quasigroup base")
            }
            HolomorphError::ClaimViolated(what) => {
                write!(f, "holomorph verification failed: {what}")
            }
            HolomorphError::NotSmarandacheMode => {
                write!(f, "operation requires a Smarandache-mode holomorph")
            }
        }
    }
}

impl core::error::Error for HolomorphError {}

impl From<MorphError> for HolomorphError {
    fn from(e: MorphError) -> Self {
        HolomorphError::Morph(e)
    }
}

impl From<TableError> for HolomorphError {
    fn from(e: TableError) -> Self {
        HolomorphError::Table(e)
    }
}

impl From<SubError> for HolomorphError {
    fn from(e: SubError) -> Self {
        HolomorphError::Sub(e)
    }
}

fn product_table(base: &CayleyTable, group: &PermGroup) -> CayleyTable {
    let n = base.order();
    let m = group.order();
    let index_of = |p: &Perm| {
        group
            .elements()
            .binary_search(p)
            .expect("product of group elements stays inside")
    };
    // Rows and columns walk the encoded indices n·a + x in order, so the
    // entries come out row-major directly.
    let mut entries = Vec::with_capacity(n * m * n * m);
    for a in 0..m {
        for x in 0..n {
            for b in 0..m {
                let beta = &group.elements()[b];
                let ab = index_of(&group.elements()[a].then(beta));
                let xb = beta.apply(x);
                for y in 0..n {
                    entries.push(n * ab + base.get(xb, y));
                }
            }
        }
    }
    CayleyTable::new(n * m, entries).expect("holomorph entries are in range")
}

fn build(
    base: &CayleyTable,
    group: PermGroup,
    mode: HolomorphMode,
    designated: Option<BTreeSet<usize>>,
) -> Result<HolomorphTable, HolomorphError> {
    if !base.is_quasigroup() {
        return Err(HolomorphError::NotAQuasigroupBase);
    }
    let table = product_table(base, &group);
    if !table.is_quasigroup() {
        return Err(HolomorphError::ClaimViolated(
            "product table is not a quasigroup",
        ));
    }
    if let Some(e) = base.identity_element() {
        // Identity of the group sorts first, so (I,e) encodes as e.
        let holo_identity = table.identity_element();
        if holo_identity != Some(e) {
            return Err(HolomorphError::ClaimViolated(
                "holomorph of a loop lost its identity",
            ));
        }
    }
    if let Some(designated) = &designated {
        let restricted = table.restrict(designated)?;
        if !restricted.classify().is_group {
            return Err(HolomorphError::ClaimViolated(
                "designated block is not a group",
            ));
        }
    }
    Ok(HolomorphTable {
        base: base.clone(),
        group,
        table,
        mode,
        designated,
    })
}

/// The holomorph `H(L,·)` over the full automorphism group.
pub fn build_holomorph(
    base: &CayleyTable,
    max_order: Option<usize>,
) -> Result<HolomorphTable, HolomorphError> {
    let group = morph::automorphism_group(base, max_order)?;
    build(base, group, HolomorphMode::Full, None)
}

/// The Smarandache holomorph `H_S(L,·)` over `SAUM`, with designated
/// S-subset `L′ × SAUM`.
pub fn build_smarandache_holomorph(
    p: &SPair,
    max_order: Option<usize>,
) -> Result<HolomorphTable, HolomorphError> {
    let group = morph::saum(p, max_order)?;
    let n = p.table().order();
    let designated: BTreeSet<usize> = (0..group.order())
        .flat_map(|a| p.subset().iter().map(move |&x| n * a + x))
        .collect();
    build(
        p.table(),
        group,
        HolomorphMode::Smarandache,
        Some(designated),
    )
}

impl HolomorphTable {
    pub fn base(&self) -> &CayleyTable {
        &self.base
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn mode(&self) -> HolomorphMode {
        self.mode
    }

    pub fn designated(&self) -> Option<&BTreeSet<usize>> {
        self.designated.as_ref()
    }

    /// `(group index, base element) → encoded index`.
    pub fn encode(&self, group_index: usize, element: usize) -> usize {
        self.base.order() * group_index + element
    }

    /// `encoded index → (group index, base element)`.
    pub fn decode(&self, index: usize) -> (usize, usize) {
        (index / self.base.order(), index % self.base.order())
    }

    /// The designated subset as an `SPair` over the holomorph table.
    pub fn s_pair(&self) -> Result<SPair, HolomorphError> {
        match &self.designated {
            Some(d) => Ok(subs::make_spair(&self.table, d)?),
            None => Err(HolomorphError::NotSmarandacheMode),
        }
    }
}
