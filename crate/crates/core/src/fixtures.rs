//! Built-in reference tables and triples used by the test suites and
//! shipped as CLI fixtures: the two worked S-isotopism examples plus the
//! group tables of order ≤ 6.

use crate::morph::Isotopism;
use crate::perm::Perm;
use crate::table::CayleyTable;
use alloc::vec;
use alloc::vec::Vec;

/// The order-5 S-quasigroup `(L,·)` with S-subgroup `{0,1}`.
pub fn example1_dot() -> CayleyTable {
    CayleyTable::new(
        5,
        vec![
            0, 1, 3, 4, 2, //
            1, 0, 2, 3, 4, //
            3, 4, 1, 2, 0, //
            4, 2, 0, 1, 3, //
            2, 3, 4, 0, 1,
        ],
    )
    .unwrap()
}

/// The order-5 S-quasigroup `(L,∗)` with S-subgroup `{1,2}`, the isotope
/// of [`example1_dot`] under [`example1_triple`].
pub fn example1_star() -> CayleyTable {
    CayleyTable::new(
        5,
        vec![
            1, 0, 4, 2, 3, //
            3, 1, 2, 0, 4, //
            4, 2, 1, 3, 0, //
            0, 4, 3, 1, 2, //
            2, 3, 0, 4, 1,
        ],
    )
    .unwrap()
}

/// The triple `(U,V,W)` carrying `(L,·)` onto `(L,∗)`.
pub fn example1_triple() -> Isotopism {
    Isotopism::new(
        Perm::from_images(vec![1, 2, 3, 4, 0]).unwrap(),
        Perm::from_images(vec![1, 2, 4, 0, 3]).unwrap(),
        Perm::from_images(vec![1, 2, 0, 4, 3]).unwrap(),
    )
    .unwrap()
}

/// `(Z6,×6)`: multiplication modulo 6, an S-semigroup with S-subgroups
/// `{2,4}` and `{1,5}`.
pub fn example2_times6() -> CayleyTable {
    CayleyTable::new(
        6,
        (0..6)
            .flat_map(|x| (0..6).map(move |y| (x * y) % 6))
            .collect(),
    )
    .unwrap()
}

/// The isotope `(Z6,∗)` of `(Z6,×6)` under [`example2_triple`], with
/// S-subgroups `{2,5}` and `{0,3}`.
pub fn example2_star() -> CayleyTable {
    CayleyTable::new(
        6,
        vec![
            0, 1, 2, 3, 4, 5, //
            4, 1, 1, 4, 4, 1, //
            5, 1, 5, 2, 1, 2, //
            3, 1, 5, 0, 4, 2, //
            1, 1, 1, 1, 1, 1, //
            2, 1, 2, 5, 1, 5,
        ],
    )
    .unwrap()
}

/// The triple `(U,V,W)` carrying `(Z6,×6)` onto `(Z6,∗)`.
pub fn example2_triple() -> Isotopism {
    Isotopism::new(
        Perm::from_images(vec![4, 3, 5, 1, 2, 0]).unwrap(),
        Perm::from_images(vec![1, 3, 2, 4, 5, 0]).unwrap(),
        Perm::from_images(vec![1, 0, 5, 4, 2, 3]).unwrap(),
    )
    .unwrap()
}

/// The Klein four-group as XOR on `{0..3}`.
pub fn klein_four() -> CayleyTable {
    CayleyTable::new(
        4,
        (0..4).flat_map(|x| (0..4).map(move |y| x ^ y)).collect(),
    )
    .unwrap()
}

/// The symmetric group on three letters, elements indexed in the
/// lexicographic order of their image lists; products compose left-to-right.
pub fn s3() -> CayleyTable {
    let elems = Perm::all(3);
    let index_of = |p: &Perm| elems.iter().position(|q| q == p).unwrap();
    CayleyTable::new(
        6,
        elems
            .iter()
            .flat_map(|a| elems.iter().map(|b| index_of(&a.then(b))))
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

/// All group tables of order ≤ 6 up to isomorphism, with names.
pub fn groups_up_to_order_6() -> Vec<(&'static str, CayleyTable)> {
    vec![
        ("Z1", CayleyTable::cyclic(1)),
        ("Z2", CayleyTable::cyclic(2)),
        ("Z3", CayleyTable::cyclic(3)),
        ("Z4", CayleyTable::cyclic(4)),
        ("V4", klein_four()),
        ("Z5", CayleyTable::cyclic(5)),
        ("Z6", CayleyTable::cyclic(6)),
        ("S3", s3()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixture_groups_really_are_groups() {
        for (name, t) in groups_up_to_order_6() {
            assert!(t.classify().is_group, "{name} must classify as a group");
        }
    }

    #[test]
    fn s3_is_not_abelian() {
        let t = s3();
        assert!((0..6).any(|x| (0..6).any(|y| t.get(x, y) != t.get(y, x))));
    }

    #[test]
    fn example_tables_are_what_the_worked_examples_say() {
        assert!(example1_dot().classify().is_quasigroup);
        assert!(example1_star().classify().is_quasigroup);
        assert!(example2_times6().classify().is_semigroup);
        assert!(!example2_star().classify().is_semigroup);
        assert!(!example2_star().classify().is_quasigroup);
    }
}
