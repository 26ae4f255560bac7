//! Closed subsets of a Cayley table and Smarandache structure detection.
//!
//! A Smarandache structure designates one non-trivial proper subset whose
//! restricted table is a group (a subsemigroup suffices when the parent is
//! only a groupoid). "Non-trivial" is `2 ≤ |M| < n`: singleton idempotents
//! and the full carrier are both excluded so the property is never vacuous.

use crate::table::{CayleyTable, StructureClass, TableError};
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

/// A closed subset together with the classification of its restricted table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubStructure {
    pub elements: BTreeSet<usize>,
    pub class: StructureClass,
}

/// A table with one designated S-substructure. All Smarandache-relative
/// computations (SAUM, SSYM, S-isotopism checks) are taken relative to the
/// designated subset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SPair {
    table: CayleyTable,
    subset: BTreeSet<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SubError {
    EmptySeed,
    Table(TableError),
    NotClosed { x: usize, y: usize, product: usize },
    /// Subset has fewer than two elements or is the whole carrier.
    Trivial { size: usize, order: usize },
    /// The restricted table does not meet the Smarandache requirement for
    /// the parent's kind.
    NotSmarandache { required: &'static str },
}

impl fmt::Display for SubError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubError::EmptySeed => write!(f, "seed subset must be non-empty"),
            SubError::Table(e) => write!(f, "{e}"),
            SubError::NotClosed { x, y, product } => {
                write!(f, "subset not closed: {x}·{y} = {product} lies outside it")
            }
            SubError::Trivial { size, order } => write!(
                f,
                "subset of size {size} in a table of order {order} is trivial \
                 (need 2 ≤ size < order)"
            ),
            SubError::NotSmarandache { required } => {
                write!(f, "restricted table is not a {required}")
            }
        }
    }
}

impl core::error::Error for SubError {}

impl From<TableError> for SubError {
    fn from(e: TableError) -> Self {
        SubError::Table(e)
    }
}

/// Filter for [`enumerate_substructures`]: which restricted classes to keep.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClassFilter {
    Any,
    Semigroup,
    Quasigroup,
    Loop,
    Group,
}

impl ClassFilter {
    fn admits(&self, class: &StructureClass) -> bool {
        match self {
            ClassFilter::Any => true,
            ClassFilter::Semigroup => class.is_semigroup,
            ClassFilter::Quasigroup => class.is_quasigroup,
            ClassFilter::Loop => class.is_loop,
            ClassFilter::Group => class.is_group,
        }
    }
}

/// The smallest superset of `seed` closed under the table's operation.
pub fn closure(table: &CayleyTable, seed: &BTreeSet<usize>) -> Result<BTreeSet<usize>, SubError> {
    if seed.is_empty() {
        return Err(SubError::EmptySeed);
    }
    if let Some(&e) = seed.iter().find(|&&e| e >= table.order()) {
        return Err(SubError::Table(TableError::ElementOutOfRange {
            element: e,
            order: table.order(),
        }));
    }
    let mut set = seed.clone();
    let mut frontier: Vec<usize> = set.iter().copied().collect();
    while let Some(x) = frontier.pop() {
        // Products of the new element with everything already present.
        let current: Vec<usize> = set.iter().copied().collect();
        for y in current {
            for p in [table.get(x, y), table.get(y, x)] {
                if set.insert(p) {
                    frontier.push(p);
                }
            }
        }
    }
    Ok(set)
}

/// All closed subsets matching the filter, sorted by (size, elements).
///
/// Every closed subset is a join of singleton closures, so taking singleton
/// closures and then closing the collection under pairwise union-closure
/// reaches the full lattice without touching the `2ⁿ` powerset.
pub fn enumerate_substructures(
    table: &CayleyTable,
    filter: ClassFilter,
    max_size: Option<usize>,
) -> Vec<SubStructure> {
    let n = table.order();
    let mut closed: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for x in 0..n {
        let seed: BTreeSet<usize> = [x].into_iter().collect();
        closed.insert(closure(table, &seed).expect("singleton closure"));
    }
    loop {
        let snapshot: Vec<BTreeSet<usize>> = closed.iter().cloned().collect();
        let before = closed.len();
        for (i, a) in snapshot.iter().enumerate() {
            for b in snapshot.iter().skip(i + 1) {
                let union: BTreeSet<usize> = a.union(b).copied().collect();
                if !closed.contains(&union) {
                    closed.insert(closure(table, &union).expect("join closure"));
                }
            }
        }
        if closed.len() == before {
            break;
        }
    }

    let mut out: Vec<SubStructure> = closed
        .into_iter()
        .filter(|s| max_size.is_none_or(|m| s.len() <= m))
        .map(|elements| {
            let class = table
                .restrict(&elements)
                .expect("closed subset restricts")
                .classify();
            SubStructure { elements, class }
        })
        .filter(|s| filter.admits(&s.class))
        .collect();
    out.sort_by(|a, b| {
        (a.elements.len(), &a.elements).cmp(&(b.elements.len(), &b.elements))
    });
    out
}

/// Oracle-grade enumeration over the whole powerset; only usable at small
/// orders. Kept public so test suites can cross-check the lattice walk.
pub fn enumerate_substructures_powerset(
    table: &CayleyTable,
    filter: ClassFilter,
    max_size: Option<usize>,
) -> Vec<SubStructure> {
    let n = table.order();
    assert!(n <= 16, "powerset enumeration is an oracle for small orders");
    let mut out = Vec::new();
    for bits in 1u32..(1 << n) {
        let elements: BTreeSet<usize> = (0..n).filter(|&i| bits >> i & 1 == 1).collect();
        if let Some(m) = max_size {
            if elements.len() > m {
                continue;
            }
        }
        if !table.subset_is_closed(&elements) {
            continue;
        }
        let class = table.restrict(&elements).unwrap().classify();
        if filter.admits(&class) {
            out.push(SubStructure { elements, class });
        }
    }
    out.sort_by(|a, b| {
        (a.elements.len(), &a.elements).cmp(&(b.elements.len(), &b.elements))
    });
    out
}

/// What the Smarandache definition demands of the designated subset, given
/// the parent's classification: a subgroup for quasigroups, semigroups and
/// loops; a subsemigroup for bare groupoids.
fn smarandache_requirement(parent: &StructureClass) -> (&'static str, ClassFilter) {
    if parent.is_quasigroup || parent.is_semigroup {
        ("group", ClassFilter::Group)
    } else {
        ("semigroup", ClassFilter::Semigroup)
    }
}

/// Validates and designates an S-substructure.
pub fn make_spair(table: &CayleyTable, subset: &BTreeSet<usize>) -> Result<SPair, SubError> {
    let n = table.order();
    if subset.len() < 2 || subset.len() >= n {
        return Err(SubError::Trivial {
            size: subset.len(),
            order: n,
        });
    }
    for &x in subset {
        for &y in subset {
            let p = table.get(x, y);
            if !subset.contains(&p) {
                return Err(SubError::NotClosed { x, y, product: p });
            }
        }
    }
    let restricted = table.restrict(subset)?.classify();
    let (required, filter) = smarandache_requirement(&table.classify());
    if !filter.admits(&restricted) {
        return Err(SubError::NotSmarandache { required });
    }
    Ok(SPair {
        table: table.clone(),
        subset: subset.clone(),
    })
}

/// First valid S-substructure witness in (size, elements) order, if any.
pub fn is_smarandache(table: &CayleyTable) -> Option<BTreeSet<usize>> {
    let (_, filter) = smarandache_requirement(&table.classify());
    enumerate_substructures(table, filter, None)
        .into_iter()
        .map(|s| s.elements)
        .find(|s| s.len() >= 2 && s.len() < table.order())
}

impl SPair {
    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn subset(&self) -> &BTreeSet<usize> {
        &self.subset
    }

    /// The designated subset's table, re-indexed to `{0..k-1}`.
    pub fn restricted(&self) -> CayleyTable {
        self.table.restrict(&self.subset).expect("validated subset")
    }
}

/// Renders a subset as `{a,b,c}`; shared by reports and error messages.
pub fn format_subset(set: &BTreeSet<usize>) -> alloc::string::String {
    use core::fmt::Write;
    let mut s = alloc::string::String::from("{");
    for (i, e) in set.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{e}");
    }
    s.push('}');
    s
}

/// Deduplicated sorted subsets usable as S-designations, for sweeps.
pub fn spair_subsets(table: &CayleyTable) -> Vec<BTreeSet<usize>> {
    let (_, filter) = smarandache_requirement(&table.classify());
    enumerate_substructures(table, filter, None)
        .into_iter()
        .map(|s| s.elements)
        .filter(|s| s.len() >= 2 && s.len() < table.order())
        .collect()
}
