//! Isotopisms, automorphism/autotopism groups, and the backtracking
//! searches behind them.
//!
//! Conventions: permutations apply postfix and compose left to right, so an
//! isotopism `(U,V,W): (L,·) → (G,∘)` satisfies `xU ∘ yV = (x·y)W`. Every
//! "find one" search returns the lexicographically least witness under
//! image-sequence order. Exhaustive searches are guarded by explicit order
//! bounds and refuse loudly rather than truncate.

use crate::perm::Perm;
use crate::subs::SPair;
use crate::table::CayleyTable;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

/// Default ceiling for the `n!`-flavoured automorphism searches.
pub const DEFAULT_AUTOMORPHISM_BOUND: usize = 8;
/// Default ceiling for the `(n!)²`-flavoured autotopism search.
pub const DEFAULT_AUTOTOPISM_BOUND: usize = 6;

/// An ordered triple `(U,V,W)` of permutations of equal degree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Isotopism {
    u: Perm,
    v: Perm,
    w: Perm,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MorphError {
    DegreeMismatch { expected: usize, found: usize },
    /// The search was refused because the order exceeds the configured
    /// bound; raising the bound is the caller's explicit decision.
    OrderAboveBound { order: usize, bound: usize },
    NotAQuasigroup,
}

impl fmt::Display for MorphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphError::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            MorphError::OrderAboveBound { order, bound } => write!(
                f,
                "order {order} exceeds the search bound {bound}; raise the bound to proceed"
            ),
            MorphError::NotAQuasigroup => write!(f, "operation requires a quasigroup table"),
        }
    }
}

impl core::error::Error for MorphError {}

impl Isotopism {
    pub fn new(u: Perm, v: Perm, w: Perm) -> Result<Isotopism, MorphError> {
        let d = u.degree();
        for p in [&v, &w] {
            if p.degree() != d {
                return Err(MorphError::DegreeMismatch {
                    expected: d,
                    found: p.degree(),
                });
            }
        }
        Ok(Isotopism { u, v, w })
    }

    pub fn identity(degree: usize) -> Isotopism {
        Isotopism {
            u: Perm::identity(degree),
            v: Perm::identity(degree),
            w: Perm::identity(degree),
        }
    }

    pub fn degree(&self) -> usize {
        self.u.degree()
    }

    pub fn u(&self) -> &Perm {
        &self.u
    }

    pub fn v(&self) -> &Perm {
        &self.v
    }

    pub fn w(&self) -> &Perm {
        &self.w
    }

    /// Component-wise left-to-right composition.
    pub fn then(&self, other: &Isotopism) -> Isotopism {
        Isotopism {
            u: self.u.then(&other.u),
            v: self.v.then(&other.v),
            w: self.w.then(&other.w),
        }
    }

    pub fn inverse(&self) -> Isotopism {
        Isotopism {
            u: self.u.inverse(),
            v: self.v.inverse(),
            w: self.w.inverse(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_identity() && self.v.is_identity() && self.w.is_identity()
    }

    /// The isomorphism-shaped triple `(φ,φ,φ)`.
    pub fn from_isomorphism(phi: &Perm) -> Isotopism {
        Isotopism {
            u: phi.clone(),
            v: phi.clone(),
            w: phi.clone(),
        }
    }

    pub fn components(&self) -> [(&'static str, &Perm); 3] {
        [("U", &self.u), ("V", &self.v), ("W", &self.w)]
    }
}

/// A permutation group given by its explicit, sorted element list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
}

/// First group-axiom violation found by [`PermGroup::verify_group_axioms`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GroupAxiomFailure {
    MissingIdentity,
    NotClosed { a: usize, b: usize },
    MissingInverse { a: usize },
}

impl fmt::Display for GroupAxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupAxiomFailure::MissingIdentity => write!(f, "identity permutation missing"),
            GroupAxiomFailure::NotClosed { a, b } => {
                write!(f, "not closed: product of elements {a} and {b} is outside the set")
            }
            GroupAxiomFailure::MissingInverse { a } => {
                write!(f, "element {a} has no inverse in the set")
            }
        }
    }
}

impl PermGroup {
    /// Sorts and deduplicates; membership of the identity is the only
    /// construction-time check. Run [`Self::verify_group_axioms`] for the
    /// full audit.
    pub fn from_elements(degree: usize, mut elements: Vec<Perm>) -> PermGroup {
        elements.sort();
        elements.dedup();
        let g = PermGroup { degree, elements };
        debug_assert!(g.contains(&Perm::identity(degree)));
        g
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            elements: alloc::vec![Perm::identity(degree)],
        }
    }

    /// The full symmetric group; `degree` is kept small by callers.
    pub fn symmetric(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            elements: Perm::all(degree),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    /// Closure, identity, and inverse audit over the explicit element list.
    pub fn verify_group_axioms(&self) -> Result<(), GroupAxiomFailure> {
        if !self.contains(&Perm::identity(self.degree)) {
            return Err(GroupAxiomFailure::MissingIdentity);
        }
        for (a, pa) in self.elements.iter().enumerate() {
            if !self.contains(&pa.inverse()) {
                return Err(GroupAxiomFailure::MissingInverse { a });
            }
            for (b, pb) in self.elements.iter().enumerate() {
                if !self.contains(&pa.then(pb)) {
                    return Err(GroupAxiomFailure::NotClosed { a, b });
                }
            }
        }
        Ok(())
    }

    /// The sorted set `ψ⁻¹ G ψ`.
    pub fn conjugated_by(&self, psi: &Perm) -> Vec<Perm> {
        let mut out: Vec<Perm> = self
            .elements
            .iter()
            .map(|g| g.conjugated_by(psi))
            .collect();
        out.sort();
        out
    }
}

/// Autotopism triples forming a group under component-wise composition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AutotopismSet {
    degree: usize,
    triples: Vec<Isotopism>,
}

impl AutotopismSet {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.triples.len()
    }

    pub fn triples(&self) -> &[Isotopism] {
        &self.triples
    }

    pub fn contains(&self, iso: &Isotopism) -> bool {
        self.triples.binary_search(iso).is_ok()
    }

    pub fn is_subset_of(&self, other: &AutotopismSet) -> bool {
        self.degree == other.degree && self.triples.iter().all(|t| other.contains(t))
    }

    /// Closure/identity/inverse audit under component-wise composition.
    pub fn verify_group_axioms(&self) -> Result<(), GroupAxiomFailure> {
        if !self.contains(&Isotopism::identity(self.degree)) {
            return Err(GroupAxiomFailure::MissingIdentity);
        }
        for (a, ta) in self.triples.iter().enumerate() {
            if !self.contains(&ta.inverse()) {
                return Err(GroupAxiomFailure::MissingInverse { a });
            }
            for (b, tb) in self.triples.iter().enumerate() {
                if !self.contains(&ta.then(tb)) {
                    return Err(GroupAxiomFailure::NotClosed { a, b });
                }
            }
        }
        Ok(())
    }
}

/// The isotope of `t` under `(U,V,W)`: the unique table `G` with
/// `a∘b = ((aU⁻¹)·(bV⁻¹))W`, making the triple an isotopism `t → G`.
pub fn apply_isotopism(t: &CayleyTable, iso: &Isotopism) -> Result<CayleyTable, MorphError> {
    if iso.degree() != t.order() {
        return Err(MorphError::DegreeMismatch {
            expected: t.order(),
            found: iso.degree(),
        });
    }
    let n = t.order();
    let u_inv = iso.u.inverse();
    let v_inv = iso.v.inverse();
    let mut entries = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            entries.push(iso.w.apply(t.get(u_inv.apply(a), v_inv.apply(b))));
        }
    }
    Ok(CayleyTable::new(n, entries).expect("isotope stays closed"))
}

/// One cell where `xU ∘ yV ≠ (x·y)W`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FailingCell {
    pub x: usize,
    pub y: usize,
    /// `xU ∘ yV` in the target table.
    pub lhs: usize,
    /// `(x·y)W`.
    pub rhs: usize,
}

/// A component that does not carry the source S-subset onto the target's.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentFailure {
    pub component: &'static str,
    pub image: BTreeSet<usize>,
    pub expected: BTreeSet<usize>,
}

/// Outcome of an isotopism check; `smarandache` is populated only when both
/// sides carry designated subsets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsotopyVerdict {
    pub is_isotopism: bool,
    pub failing_cells: Vec<FailingCell>,
    pub smarandache: Option<SmarandacheVerdict>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmarandacheVerdict {
    pub is_s_isotopism: bool,
    pub failing_components: Vec<ComponentFailure>,
}

impl IsotopyVerdict {
    /// The overall verdict: S-isotopism when subsets were supplied,
    /// otherwise plain isotopism.
    pub fn holds(&self) -> bool {
        match &self.smarandache {
            Some(s) => self.is_isotopism && s.is_s_isotopism,
            None => self.is_isotopism,
        }
    }
}

/// Checks `xU ∘ yV = (x·y)W` over every cell.
pub fn verify_isotopism(
    src: &CayleyTable,
    dst: &CayleyTable,
    iso: &Isotopism,
) -> Result<IsotopyVerdict, MorphError> {
    if src.order() != dst.order() {
        return Err(MorphError::DegreeMismatch {
            expected: src.order(),
            found: dst.order(),
        });
    }
    if iso.degree() != src.order() {
        return Err(MorphError::DegreeMismatch {
            expected: src.order(),
            found: iso.degree(),
        });
    }
    let n = src.order();
    let mut failing_cells = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let lhs = dst.get(iso.u.apply(x), iso.v.apply(y));
            let rhs = iso.w.apply(src.get(x, y));
            if lhs != rhs {
                failing_cells.push(FailingCell { x, y, lhs, rhs });
            }
        }
    }
    Ok(IsotopyVerdict {
        is_isotopism: failing_cells.is_empty(),
        failing_cells,
        smarandache: None,
    })
}

/// Plain check plus the Smarandache condition: every component must map the
/// source's designated subset bijectively onto the target's.
pub fn verify_s_isotopism(
    src: &SPair,
    dst: &SPair,
    iso: &Isotopism,
) -> Result<IsotopyVerdict, MorphError> {
    let mut verdict = verify_isotopism(src.table(), dst.table(), iso)?;
    let mut failing_components = Vec::new();
    for (name, perm) in iso.components() {
        let image = perm.image_of_set(src.subset());
        if &image != dst.subset() {
            failing_components.push(ComponentFailure {
                component: name,
                image,
                expected: dst.subset().clone(),
            });
        }
    }
    verdict.smarandache = Some(SmarandacheVerdict {
        is_s_isotopism: verdict.is_isotopism && failing_components.is_empty(),
        failing_components,
    });
    Ok(verdict)
}

/// Backtracking search for all maps `φ` with `(x·y)φ = xφ ∘ yφ`, with
/// product-forcing propagation. Branches on the lowest unassigned element
/// with candidate images ascending, so the first completed map is the
/// lexicographically least.
struct MorphismSearch<'a> {
    src: &'a CayleyTable,
    dst: &'a CayleyTable,
    src_subset: Option<&'a BTreeSet<usize>>,
    dst_subset: Option<&'a BTreeSet<usize>>,
}

const UNSET: usize = usize::MAX;

impl<'a> MorphismSearch<'a> {
    fn allowed(&self, pos: usize, val: usize) -> bool {
        match (self.src_subset, self.dst_subset) {
            (Some(s), Some(d)) => s.contains(&pos) == d.contains(&val),
            _ => true,
        }
    }

    /// Assigns `pos ↦ val` and everything it forces; false on conflict.
    /// Every position actually assigned is pushed to `trail` for undo.
    fn assign(
        &self,
        pos: usize,
        val: usize,
        img: &mut [usize],
        used: &mut [bool],
        trail: &mut Vec<usize>,
    ) -> bool {
        let mut queue = alloc::vec![(pos, val)];
        while let Some((p, v)) = queue.pop() {
            if img[p] != UNSET {
                if img[p] != v {
                    return false;
                }
                continue;
            }
            if used[v] || !self.allowed(p, v) {
                return false;
            }
            img[p] = v;
            used[v] = true;
            trail.push(p);
            for (a, &img_a) in img.iter().enumerate() {
                if img_a == UNSET {
                    continue;
                }
                queue.push((self.src.get(a, p), self.dst.get(img_a, v)));
                queue.push((self.src.get(p, a), self.dst.get(v, img_a)));
            }
        }
        true
    }

    fn branch(
        &self,
        img: &mut [usize],
        used: &mut [bool],
        results: &mut Vec<Perm>,
        stop_at_first: bool,
    ) -> bool {
        let n = self.src.order();
        let pos = match img.iter().position(|&v| v == UNSET) {
            None => {
                results.push(Perm::from_images(img.to_vec()).expect("search yields bijections"));
                return stop_at_first;
            }
            Some(p) => p,
        };
        for val in 0..n {
            if used[val] || !self.allowed(pos, val) {
                continue;
            }
            let mut trail = Vec::new();
            if self.assign(pos, val, img, used, &mut trail)
                && self.branch(img, used, results, stop_at_first)
            {
                return true;
            }
            for &p in trail.iter().rev() {
                used[img[p]] = false;
                img[p] = UNSET;
            }
        }
        false
    }

    fn run(&self, stop_at_first: bool) -> Vec<Perm> {
        let n = self.src.order();
        let mut img = alloc::vec![UNSET; n];
        let mut used = alloc::vec![false; n];
        let mut results = Vec::new();
        self.branch(&mut img, &mut used, &mut results, stop_at_first);
        results
    }
}

fn effective_bound(max_order: Option<usize>, default: usize) -> usize {
    max_order.unwrap_or(default)
}

/// All automorphisms of `t`, by pruned backtracking.
pub fn automorphism_group(
    t: &CayleyTable,
    max_order: Option<usize>,
) -> Result<PermGroup, MorphError> {
    let bound = effective_bound(max_order, DEFAULT_AUTOMORPHISM_BOUND);
    if t.order() > bound {
        return Err(MorphError::OrderAboveBound {
            order: t.order(),
            bound,
        });
    }
    let search = MorphismSearch {
        src: t,
        dst: t,
        src_subset: None,
        dst_subset: None,
    };
    Ok(PermGroup::from_elements(t.order(), search.run(false)))
}

/// Oracle: automorphisms by filtering the full `n!` enumeration.
pub fn automorphism_group_bruteforce(t: &CayleyTable) -> PermGroup {
    let n = t.order();
    assert!(n <= 8, "factorial oracle is for desk-scale orders");
    let elements = Perm::all(n)
        .into_iter()
        .filter(|p| {
            (0..n).all(|x| (0..n).all(|y| p.apply(t.get(x, y)) == t.get(p.apply(x), p.apply(y))))
        })
        .collect();
    PermGroup::from_elements(n, elements)
}

/// The Smarandache automorphism group: automorphisms fixing the designated
/// subset setwise.
pub fn saum(p: &SPair, max_order: Option<usize>) -> Result<PermGroup, MorphError> {
    let aum = automorphism_group(p.table(), max_order)?;
    let elements = aum
        .elements()
        .iter()
        .filter(|a| a.preserves_set(p.subset()))
        .cloned()
        .collect();
    Ok(PermGroup::from_elements(p.table().order(), elements))
}

/// The Smarandache symmetric group: all degree-`n` permutations fixing the
/// designated subset setwise; order `|H|!·(n−|H|)!`.
pub fn ssym(p: &SPair) -> PermGroup {
    let n = p.table().order();
    let subset: Vec<usize> = p.subset().iter().copied().collect();
    let complement: Vec<usize> = (0..n).filter(|i| !p.subset().contains(i)).collect();
    let mut elements = Vec::new();
    for ps in Perm::all(subset.len()) {
        for pc in Perm::all(complement.len()) {
            let mut images = alloc::vec![0; n];
            for (i, &e) in subset.iter().enumerate() {
                images[e] = subset[ps.apply(i)];
            }
            for (i, &e) in complement.iter().enumerate() {
                images[e] = complement[pc.apply(i)];
            }
            elements.push(Perm::from_images(images).expect("interleaved bijection"));
        }
    }
    PermGroup::from_elements(n, elements)
}

/// All autotopisms of a quasigroup, by scanning `(U,V)` pairs with `W`
/// forced through row 0: `(0·y)W = 0U · yV` pins every image of `W`, and
/// the remaining rows are verified cell by cell.
pub fn autotopism_set(
    t: &CayleyTable,
    max_order: Option<usize>,
) -> Result<AutotopismSet, MorphError> {
    let bound = effective_bound(max_order, DEFAULT_AUTOTOPISM_BOUND);
    let n = t.order();
    if n > bound {
        return Err(MorphError::OrderAboveBound { order: n, bound });
    }
    if !t.is_quasigroup() {
        return Err(MorphError::NotAQuasigroup);
    }
    let perms = Perm::all(n);
    let mut triples = Vec::new();
    let mut w_images = alloc::vec![0; n];
    for u in &perms {
        let u0 = u.apply(0);
        for v in &perms {
            for y in 0..n {
                w_images[t.get(0, y)] = t.get(u0, v.apply(y));
            }
            let ok = (1..n).all(|x| {
                let ux = u.apply(x);
                (0..n).all(|y| w_images[t.get(x, y)] == t.get(ux, v.apply(y)))
            });
            if ok {
                let w = Perm::from_images(w_images.clone()).expect("forced W is bijective");
                triples.push(
                    Isotopism::new(u.clone(), v.clone(), w).expect("equal degrees"),
                );
            }
        }
    }
    triples.sort();
    Ok(AutotopismSet { degree: n, triples })
}

/// The Smarandache autotopism group: autotopisms all of whose components
/// preserve the designated subset.
pub fn s_autotopism_set(
    p: &SPair,
    max_order: Option<usize>,
) -> Result<AutotopismSet, MorphError> {
    let aut = autotopism_set(p.table(), max_order)?;
    let triples = aut
        .triples
        .into_iter()
        .filter(|iso| {
            iso.components()
                .iter()
                .all(|(_, perm)| perm.preserves_set(p.subset()))
        })
        .collect();
    Ok(AutotopismSet {
        degree: p.table().order(),
        triples,
    })
}

/// Least isomorphism `φ` with `(x·y)φ = xφ ∘ yφ`, or `None`. Absence is a
/// value, not an error; mismatched orders simply have no isomorphism.
pub fn find_isomorphism(src: &CayleyTable, dst: &CayleyTable) -> Option<Perm> {
    if src.order() != dst.order() {
        return None;
    }
    let search = MorphismSearch {
        src,
        dst,
        src_subset: None,
        dst_subset: None,
    };
    search.run(true).into_iter().next()
}

/// Least S-isomorphism: an isomorphism additionally carrying the source's
/// designated subset onto the target's.
pub fn find_s_isomorphism(src: &SPair, dst: &SPair) -> Option<Perm> {
    if src.table().order() != dst.table().order() || src.subset().len() != dst.subset().len() {
        return None;
    }
    let search = MorphismSearch {
        src: src.table(),
        dst: dst.table(),
        src_subset: Some(src.subset()),
        dst_subset: Some(dst.subset()),
    };
    search.run(true).into_iter().next()
}

/// Oracle for the isomorphism searches: filter the full `n!` enumeration.
pub fn find_isomorphism_bruteforce(
    src: &CayleyTable,
    dst: &CayleyTable,
    subsets: Option<(&BTreeSet<usize>, &BTreeSet<usize>)>,
) -> Option<Perm> {
    let n = src.order();
    assert!(n <= 8, "factorial oracle is for desk-scale orders");
    if dst.order() != n {
        return None;
    }
    Perm::all(n).into_iter().find(|p| {
        let hom =
            (0..n).all(|x| (0..n).all(|y| p.apply(src.get(x, y)) == dst.get(p.apply(x), p.apply(y))));
        let sub = subsets.is_none_or(|(s, d)| &p.image_of_set(s) == d);
        hom && sub
    })
}

/// Least `ψ` in `ambient` with `ψ⁻¹Aψ = B` setwise, or `None`.
pub fn find_conjugator(a: &PermGroup, b: &PermGroup, ambient: &PermGroup) -> Option<Perm> {
    if a.degree() != b.degree() || a.degree() != ambient.degree() {
        return None;
    }
    if a.order() != b.order() {
        return None;
    }
    ambient
        .elements()
        .iter()
        .find(|psi| a.conjugated_by(psi) == b.elements())
        .cloned()
}
