//! Permutations of `{0..n-1}` with postfix application and left-to-right
//! composition, the convention used throughout: `x.then(y)` applies `x`
//! first.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

/// A bijection on `{0..degree-1}`, stored as its image list: `i` maps to
/// `images[i]`.
///
/// `Ord` is lexicographic on the image list, which is the tie-breaking
/// order every deterministic "least witness" rule in this crate uses.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

/// Rejected image lists: wrong range or repeated images.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PermError {
    EmptyDegree,
    NotABijection { index: usize, image: usize },
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::EmptyDegree => write!(f, "permutation degree must be at least 1"),
            PermError::NotABijection { index, image } => write!(
                f,
                "image list is not a bijection: position {index} maps to {image} (out of range or repeated)"
            ),
        }
    }
}

impl core::error::Error for PermError {}

impl Perm {
    /// The identity permutation on `{0..degree-1}`.
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// Validates that `images` is a bijection on `{0..images.len()-1}`.
    pub fn from_images(images: Vec<usize>) -> Result<Perm, PermError> {
        if images.is_empty() {
            return Err(PermError::EmptyDegree);
        }
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for (index, &image) in images.iter().enumerate() {
            if image >= n || seen[image] {
                return Err(PermError::NotABijection { index, image });
            }
            seen[image] = true;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Postfix application: returns `iP`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = alloc::vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im] = i;
        }
        Perm { images: inv }
    }

    /// Left-to-right composition: `x (self.then(other)) = (x self) other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&im| other.images[im]).collect(),
        }
    }

    /// `other⁻¹ ∘ self ∘ other` in application order: first `other⁻¹`,
    /// then `self`, then `other`.
    pub fn conjugated_by(&self, other: &Perm) -> Perm {
        other.inverse().then(self).then(other)
    }

    /// Image of a subset under postfix application.
    pub fn image_of_set(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        set.iter().map(|&i| self.images[i]).collect()
    }

    /// True if the subset maps onto itself setwise.
    pub fn preserves_set(&self, set: &BTreeSet<usize>) -> bool {
        set.iter().all(|&i| set.contains(&self.images[i]))
    }

    /// All `degree!` permutations in lexicographic image order.
    ///
    /// Intended for oracles and small symmetric groups; callers guard the
    /// degree.
    pub fn all(degree: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut images = Vec::with_capacity(degree);
        let mut used = alloc::vec![false; degree];
        fn rec(degree: usize, images: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if images.len() == degree {
                out.push(Perm {
                    images: images.clone(),
                });
                return;
            }
            for v in 0..degree {
                if !used[v] {
                    used[v] = true;
                    images.push(v);
                    rec(degree, images, used, out);
                    images.pop();
                    used[v] = false;
                }
            }
        }
        rec(degree, &mut images, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, im) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{im}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_is_left_to_right() {
        let a = Perm::from_images(vec![1, 2, 0]).unwrap();
        let b = Perm::from_images(vec![0, 2, 1]).unwrap();
        let ab = a.then(&b);
        for x in 0..3 {
            assert_eq!(ab.apply(x), b.apply(a.apply(x)));
        }
    }

    #[test]
    fn inverse_composes_to_identity() {
        let a = Perm::from_images(vec![3, 0, 2, 1]).unwrap();
        assert!(a.then(&a.inverse()).is_identity());
        assert!(a.inverse().then(&a).is_identity());
    }

    #[test]
    fn rejects_repeats_and_out_of_range() {
        assert!(matches!(
            Perm::from_images(vec![0, 0, 1]),
            Err(PermError::NotABijection { index: 1, image: 0 })
        ));
        assert!(matches!(
            Perm::from_images(vec![0, 3]),
            Err(PermError::NotABijection { index: 1, image: 3 })
        ));
    }

    #[test]
    fn all_is_sorted_and_complete() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], Perm::identity(4));
    }

    #[test]
    fn conjugation_matches_definition() {
        let a = Perm::from_images(vec![1, 0, 2]).unwrap();
        let g = Perm::from_images(vec![2, 1, 0]).unwrap();
        let c = a.conjugated_by(&g);
        for x in 0..3 {
            assert_eq!(c.apply(x), g.apply(a.apply(g.inverse().apply(x))));
        }
    }
}
