//! Cayley tables of finite binary systems and their classification.
//!
//! A table of order `n` stores the products of a closed binary operation on
//! `{0..n-1}` row-major: the entry at `(x, y)` is `x·y`. All structure
//! predicates (quasigroup, semigroup, loop, group) are decided by direct
//! enumeration, which is exact at the orders this crate targets.

use crate::perm::Perm;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

/// An order-`n` binary operation as an `n×n` table of element indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<usize>,
}

/// Which of the standard structure classes a table falls into.
///
/// `is_loop` requires the quasigroup property plus a two-sided identity;
/// a semigroup with identity is reported with `identity` present but
/// `is_loop` false. `is_group` is the conjunction of quasigroup,
/// semigroup, and identity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StructureClass {
    pub is_quasigroup: bool,
    pub is_semigroup: bool,
    pub is_loop: bool,
    pub is_group: bool,
    pub identity: Option<usize>,
}

impl StructureClass {
    /// The most specific class name, for reports.
    pub fn name(&self) -> &'static str {
        if self.is_group {
            "group"
        } else if self.is_loop {
            "loop"
        } else if self.is_quasigroup {
            "quasigroup"
        } else if self.is_semigroup {
            "semigroup"
        } else {
            "groupoid"
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TableError {
    ZeroOrder,
    WrongShape {
        expected: usize,
        found: usize,
    },
    /// Closure failure: the entry at (row, col) is outside `{0..n-1}`.
    EntryOutOfRange {
        row: usize,
        col: usize,
        entry: usize,
        order: usize,
    },
    /// A translation was requested on a row/column that is not a bijection.
    NotBijective {
        row_or_col: usize,
        side: Side,
    },
    /// Inverse elements are only defined in a loop.
    NotALoop,
    ElementOutOfRange {
        element: usize,
        order: usize,
    },
    SubsetNotClosed {
        x: usize,
        y: usize,
        product: usize,
    },
    EmptySubset,
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::ZeroOrder => write!(f, "table order must be at least 1"),
            TableError::WrongShape { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            TableError::EntryOutOfRange {
                row,
                col,
                entry,
                order,
            } => write!(
                f,
                "entry {entry} at row {row}, column {col} is outside 0..{order}"
            ),
            TableError::NotBijective { row_or_col, side } => write!(
                f,
                "{} {row_or_col} is not a permutation of the elements (not a quasigroup)",
                match side {
                    Side::Left => "row",
                    Side::Right => "column",
                }
            ),
            TableError::NotALoop => write!(f, "operation requires a loop (two-sided identity)"),
            TableError::ElementOutOfRange { element, order } => {
                write!(f, "element {element} is outside 0..{order}")
            }
            TableError::SubsetNotClosed { x, y, product } => {
                write!(f, "subset is not closed: {x}·{y} = {product} lies outside it")
            }
            TableError::EmptySubset => write!(f, "subset must be non-empty"),
        }
    }
}

impl core::error::Error for TableError {}

/// Which translation of a quasigroup: `Left` is `y ↦ x·y`, `Right` is
/// `y ↦ y·x`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

impl CayleyTable {
    /// Builds a table from row-major entries, validating shape and closure.
    pub fn new(order: usize, entries: Vec<usize>) -> Result<CayleyTable, TableError> {
        if order == 0 {
            return Err(TableError::ZeroOrder);
        }
        if entries.len() != order * order {
            return Err(TableError::WrongShape {
                expected: order * order,
                found: entries.len(),
            });
        }
        for (i, &e) in entries.iter().enumerate() {
            if e >= order {
                return Err(TableError::EntryOutOfRange {
                    row: i / order,
                    col: i % order,
                    entry: e,
                    order,
                });
            }
        }
        Ok(CayleyTable { order, entries })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<CayleyTable, TableError> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(TableError::WrongShape {
                    expected: order * order,
                    found: rows.iter().map(|r| r.len()).sum(),
                });
            }
            entries.extend_from_slice(row);
        }
        CayleyTable::new(order, entries)
    }

    /// The cyclic group `Z_n` under addition.
    pub fn cyclic(order: usize) -> CayleyTable {
        let entries = (0..order)
            .flat_map(|x| (0..order).map(move |y| (x + y) % order))
            .collect();
        CayleyTable { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The product `x·y`.
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.entries[x * self.order + y]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.entries[x * self.order..(x + 1) * self.order]
    }

    fn row_is_bijective(&self, x: usize) -> bool {
        let mut seen = alloc::vec![false; self.order];
        self.row(x).iter().all(|&e| !core::mem::replace(&mut seen[e], true))
    }

    fn col_is_bijective(&self, y: usize) -> bool {
        let mut seen = alloc::vec![false; self.order];
        (0..self.order).all(|x| !core::mem::replace(&mut seen[self.get(x, y)], true))
    }

    pub fn is_quasigroup(&self) -> bool {
        (0..self.order).all(|i| self.row_is_bijective(i) && self.col_is_bijective(i))
    }

    pub fn is_semigroup(&self) -> bool {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                let xy = self.get(x, y);
                for z in 0..n {
                    if self.get(xy, z) != self.get(x, self.get(y, z)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The two-sided identity, if one exists.
    ///
    /// A two-sided identity in any groupoid is unique (e = e·f = f); this is
    /// asserted rather than assumed.
    pub fn identity_element(&self) -> Option<usize> {
        let mut found = None;
        for e in 0..self.order {
            let two_sided =
                (0..self.order).all(|x| self.get(e, x) == x && self.get(x, e) == x);
            if two_sided {
                assert!(found.is_none(), "two distinct two-sided identities");
                found = Some(e);
            }
        }
        found
    }

    /// Full structure classification by enumeration.
    pub fn classify(&self) -> StructureClass {
        let is_quasigroup = self.is_quasigroup();
        let is_semigroup = self.is_semigroup();
        let identity = self.identity_element();
        let is_loop = is_quasigroup && identity.is_some();
        let is_group = is_quasigroup && is_semigroup && identity.is_some();
        StructureClass {
            is_quasigroup,
            is_semigroup,
            is_loop,
            is_group,
            identity,
        }
    }

    /// The translation `L_x: y ↦ x·y` (left) or `R_x: y ↦ y·x` (right).
    ///
    /// Fails when the relevant row/column is not bijective, i.e. the table
    /// is not a quasigroup in the direction asked for.
    pub fn translation(&self, x: usize, side: Side) -> Result<Perm, TableError> {
        if x >= self.order {
            return Err(TableError::ElementOutOfRange {
                element: x,
                order: self.order,
            });
        }
        let images: Vec<usize> = match side {
            Side::Left => self.row(x).to_vec(),
            Side::Right => (0..self.order).map(|y| self.get(y, x)).collect(),
        };
        Perm::from_images(images).map_err(|_| TableError::NotBijective { row_or_col: x, side })
    }

    /// Left and right inverses `(x^λ, x^ρ)` of `x` in a loop:
    /// `x^λ·x = e` and `x·x^ρ = e`.
    pub fn inverse_elements(&self, x: usize) -> Result<(usize, usize), TableError> {
        if x >= self.order {
            return Err(TableError::ElementOutOfRange {
                element: x,
                order: self.order,
            });
        }
        let class = self.classify();
        let e = match (class.is_loop, class.identity) {
            (true, Some(e)) => e,
            _ => return Err(TableError::NotALoop),
        };
        let left = (0..self.order).find(|&l| self.get(l, x) == e).unwrap();
        let right = (0..self.order).find(|&r| self.get(x, r) == e).unwrap();
        Ok((left, right))
    }

    /// True if `x·y ∈ subset` for all `x, y ∈ subset`.
    pub fn subset_is_closed(&self, subset: &BTreeSet<usize>) -> bool {
        subset
            .iter()
            .all(|&x| subset.iter().all(|&y| subset.contains(&self.get(x, y))))
    }

    /// The subtable on a closed subset, re-indexed to `{0..k-1}` in the
    /// sorted order of the subset.
    pub fn restrict(&self, subset: &BTreeSet<usize>) -> Result<CayleyTable, TableError> {
        if subset.is_empty() {
            return Err(TableError::EmptySubset);
        }
        let elems: Vec<usize> = subset.iter().copied().collect();
        if let Some(&e) = elems.iter().find(|&&e| e >= self.order) {
            return Err(TableError::ElementOutOfRange {
                element: e,
                order: self.order,
            });
        }
        let mut index_of = alloc::vec![usize::MAX; self.order];
        for (i, &e) in elems.iter().enumerate() {
            index_of[e] = i;
        }
        let k = elems.len();
        let mut entries = Vec::with_capacity(k * k);
        for &x in &elems {
            for &y in &elems {
                let p = self.get(x, y);
                if index_of[p] == usize::MAX {
                    return Err(TableError::SubsetNotClosed { x, y, product: p });
                }
                entries.push(index_of[p]);
            }
        }
        Ok(CayleyTable { order: k, entries })
    }

    /// Relabels the table by a permutation: the new product is
    /// `a∘b = ((aφ⁻¹)·(bφ⁻¹))φ`, so `φ` is an isomorphism onto the result.
    pub fn relabel(&self, phi: &Perm) -> CayleyTable {
        debug_assert_eq!(phi.degree(), self.order);
        let inv = phi.inverse();
        let entries = (0..self.order)
            .flat_map(|a| {
                (0..self.order).map({
                    let inv = &inv;
                    move |b| phi.apply(self.get(inv.apply(a), inv.apply(b)))
                })
            })
            .collect();
        CayleyTable {
            order: self.order,
            entries,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn exam1_dot_is_quasigroup_not_loop() {
        let t = fixtures::example1_dot();
        let c = t.classify();
        assert!(c.is_quasigroup);
        assert!(!c.is_semigroup);
        assert!(!c.is_loop);
        assert!(!c.is_group);
        assert_eq!(c.identity, None);
    }

    #[test]
    fn z6_times_is_semigroup_with_identity_not_quasigroup() {
        let t = fixtures::example2_times6();
        let c = t.classify();
        assert!(!c.is_quasigroup);
        assert!(c.is_semigroup);
        assert!(!c.is_loop);
        assert!(!c.is_group);
        assert_eq!(c.identity, Some(1));
    }

    #[test]
    fn order_one_table_is_the_trivial_group() {
        let t = CayleyTable::new(1, vec![0]).unwrap();
        let c = t.classify();
        assert!(c.is_quasigroup && c.is_semigroup && c.is_loop && c.is_group);
        assert_eq!(c.identity, Some(0));
    }

    #[test]
    fn exam1_translations_match_row_and_column() {
        let t = fixtures::example1_dot();
        let left = t.translation(2, Side::Left).unwrap();
        assert_eq!(left.images(), &[3, 4, 1, 2, 0]);
        let right = t.translation(2, Side::Right).unwrap();
        assert_eq!(right.images(), &[3, 2, 1, 0, 4]);
    }

    #[test]
    fn identity_translation_in_a_loop_is_identity_perm() {
        let z4 = CayleyTable::cyclic(4);
        assert!(z4.translation(0, Side::Left).unwrap().is_identity());
        assert!(z4.translation(0, Side::Right).unwrap().is_identity());
    }

    #[test]
    fn translation_rejects_non_bijective_rows() {
        let t = fixtures::example2_times6();
        // Row 0 of (Z6,×6) is constant 0.
        assert!(matches!(
            t.translation(0, Side::Left),
            Err(TableError::NotBijective { row_or_col: 0, side: Side::Left })
        ));
    }

    #[test]
    fn latin_property_iff_all_translations_succeed() {
        for t in [
            fixtures::example1_dot(),
            fixtures::example1_star(),
            fixtures::example2_times6(),
            fixtures::example2_star(),
            CayleyTable::cyclic(4),
        ] {
            let all_ok = (0..t.order()).all(|x| {
                t.translation(x, Side::Left).is_ok() && t.translation(x, Side::Right).is_ok()
            });
            assert_eq!(all_ok, t.classify().is_quasigroup);
        }
    }

    #[test]
    fn translations_compose_with_inverses_to_identity() {
        let t = fixtures::example1_dot();
        for x in 0..t.order() {
            for side in [Side::Left, Side::Right] {
                let p = t.translation(x, side).unwrap();
                assert!(p.then(&p.inverse()).is_identity());
            }
        }
    }

    #[test]
    fn inverse_elements_in_z4() {
        let z4 = CayleyTable::cyclic(4);
        assert_eq!(z4.inverse_elements(1).unwrap(), (3, 3));
        assert_eq!(z4.inverse_elements(0).unwrap(), (0, 0));
    }

    #[test]
    fn inverse_elements_trivial_loop() {
        let t = CayleyTable::new(1, vec![0]).unwrap();
        assert_eq!(t.inverse_elements(0).unwrap(), (0, 0));
    }

    #[test]
    fn inverse_elements_require_a_loop() {
        let t = fixtures::example1_dot();
        assert!(matches!(t.inverse_elements(0), Err(TableError::NotALoop)));
    }

    #[test]
    fn lambda_and_rho_are_mutually_inverse_maps() {
        for t in [CayleyTable::cyclic(4), CayleyTable::cyclic(5), fixtures::s3()] {
            for x in 0..t.order() {
                let (_, rho) = t.inverse_elements(x).unwrap();
                let (lambda_of_rho, _) = t.inverse_elements(rho).unwrap();
                assert_eq!(lambda_of_rho, x);
            }
        }
    }

    #[test]
    fn constructor_rejects_out_of_range_entries() {
        let err = CayleyTable::new(2, vec![0, 1, 2, 0]).unwrap_err();
        assert_eq!(
            err,
            TableError::EntryOutOfRange {
                row: 1,
                col: 0,
                entry: 2,
                order: 2
            }
        );
    }

    #[test]
    fn restrict_reindexes_a_closed_subset() {
        let z6 = fixtures::example2_times6();
        let sub: BTreeSet<usize> = [1, 5].into_iter().collect();
        let r = z6.restrict(&sub).unwrap();
        // {1,5} under ×6 is Z2 with identity 1 (index 0).
        assert_eq!(r.entries(), &[0, 1, 1, 0]);
        assert!(r.classify().is_group);
    }

    #[test]
    fn restrict_rejects_open_subsets() {
        let z4 = CayleyTable::cyclic(4);
        let sub: BTreeSet<usize> = [0, 1].into_iter().collect();
        assert!(matches!(
            z4.restrict(&sub),
            Err(TableError::SubsetNotClosed { x: 1, y: 1, product: 2 })
        ));
    }

    #[test]
    fn relabel_by_identity_is_identity() {
        let t = fixtures::example1_dot();
        assert_eq!(t.relabel(&Perm::identity(5)), t);
    }
}
