//! Identity evaluation by exhaustive assignment, and the built-in variety
//! catalog (Bol, Moufang, extra, central, alternative, flexible, and the
//! inverse-property family).
//!
//! Each catalog entry records one fixed representative identity; equivalent
//! forms coincide on loops, so one representative per variety suffices. The
//! exact term trees are spelled out in [`catalog`].

use crate::subs::SPair;
use crate::table::CayleyTable;
use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A term over variables with multiplication, left/right inverse, and the
/// identity constant. Inverse and identity nodes are only evaluable on
/// loops.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IdentityTerm {
    Var(usize),
    Mul(Box<IdentityTerm>, Box<IdentityTerm>),
    LeftInv(Box<IdentityTerm>),
    RightInv(Box<IdentityTerm>),
    IdentityConst,
}

/// Shorthand constructors so catalog entries read like the identities.
pub fn var(i: usize) -> IdentityTerm {
    IdentityTerm::Var(i)
}

pub fn mul(a: IdentityTerm, b: IdentityTerm) -> IdentityTerm {
    IdentityTerm::Mul(Box::new(a), Box::new(b))
}

pub fn linv(a: IdentityTerm) -> IdentityTerm {
    IdentityTerm::LeftInv(Box::new(a))
}

pub fn rinv(a: IdentityTerm) -> IdentityTerm {
    IdentityTerm::RightInv(Box::new(a))
}

pub fn ident() -> IdentityTerm {
    IdentityTerm::IdentityConst
}

impl IdentityTerm {
    fn collect_vars(&self, into: &mut BTreeSet<usize>) {
        match self {
            IdentityTerm::Var(i) => {
                into.insert(*i);
            }
            IdentityTerm::Mul(a, b) => {
                a.collect_vars(into);
                b.collect_vars(into);
            }
            IdentityTerm::LeftInv(a) | IdentityTerm::RightInv(a) => a.collect_vars(into),
            IdentityTerm::IdentityConst => {}
        }
    }

    pub fn variables(&self) -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        self.collect_vars(&mut s);
        s
    }

    /// True if the term mentions inverses or the identity constant.
    pub fn uses_loop_structure(&self) -> bool {
        match self {
            IdentityTerm::Var(_) => false,
            IdentityTerm::Mul(a, b) => a.uses_loop_structure() || b.uses_loop_structure(),
            IdentityTerm::LeftInv(_) | IdentityTerm::RightInv(_) => true,
            IdentityTerm::IdentityConst => true,
        }
    }

    /// Prefix rendering, e.g. `(mul (mul x y) (rinv x))`; variables beyond
    /// `x, y, z` print as `v3, v4, …`.
    pub fn to_prefix(&self) -> String {
        fn var_name(i: usize) -> String {
            match i {
                0 => String::from("x"),
                1 => String::from("y"),
                2 => String::from("z"),
                _ => alloc::format!("v{i}"),
            }
        }
        match self {
            IdentityTerm::Var(i) => var_name(*i),
            IdentityTerm::Mul(a, b) => {
                alloc::format!("(mul {} {})", a.to_prefix(), b.to_prefix())
            }
            IdentityTerm::LeftInv(a) => alloc::format!("(linv {})", a.to_prefix()),
            IdentityTerm::RightInv(a) => alloc::format!("(rinv {})", a.to_prefix()),
            IdentityTerm::IdentityConst => String::from("e"),
        }
    }
}

/// A named identity `lhs = rhs`. The two sides draw their variables from
/// one dense pool `{0..var_count-1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarietyDef {
    pub name: String,
    pub lhs: IdentityTerm,
    pub rhs: IdentityTerm,
    pub requires_loop: bool,
    pub var_count: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum VarietyError {
    /// Variable indices must be dense from 0 across both sides.
    SparseVariables { missing: usize },
    UnassignedVariable { index: usize },
    /// Inverses/identity constant demand a loop.
    NotApplicable,
}

impl fmt::Display for VarietyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarietyError::SparseVariables { missing } => {
                write!(f, "variable v{missing} is skipped; indices must be dense from 0")
            }
            VarietyError::UnassignedVariable { index } => {
                write!(f, "variable v{index} has no assigned value")
            }
            VarietyError::NotApplicable => {
                write!(f, "identity uses inverses or the identity constant; table is not a loop")
            }
        }
    }
}

impl core::error::Error for VarietyError {}

impl VarietyDef {
    pub fn new(
        name: impl Into<String>,
        lhs: IdentityTerm,
        rhs: IdentityTerm,
    ) -> Result<VarietyDef, VarietyError> {
        let mut vars = lhs.variables();
        vars.extend(rhs.variables());
        let var_count = vars.len();
        for i in 0..var_count {
            if !vars.contains(&i) {
                return Err(VarietyError::SparseVariables { missing: i });
            }
        }
        let requires_loop = lhs.uses_loop_structure() || rhs.uses_loop_structure();
        Ok(VarietyDef {
            name: name.into(),
            lhs,
            rhs,
            requires_loop,
            var_count,
        })
    }

    /// `lhs = rhs` in prefix notation.
    pub fn display_identity(&self) -> String {
        alloc::format!("{} = {}", self.lhs.to_prefix(), self.rhs.to_prefix())
    }
}

/// Loop data needed by inverse/identity nodes, precomputed once per check.
struct LoopData {
    identity: usize,
    left_inv: Vec<usize>,
    right_inv: Vec<usize>,
}

impl LoopData {
    fn of(t: &CayleyTable) -> Option<LoopData> {
        let class = t.classify();
        if !class.is_loop {
            return None;
        }
        let n = t.order();
        let mut left_inv = Vec::with_capacity(n);
        let mut right_inv = Vec::with_capacity(n);
        for x in 0..n {
            let (l, r) = t.inverse_elements(x).expect("loop has inverses");
            left_inv.push(l);
            right_inv.push(r);
        }
        Some(LoopData {
            identity: class.identity.expect("loop has identity"),
            left_inv,
            right_inv,
        })
    }
}

fn eval(
    t: &CayleyTable,
    term: &IdentityTerm,
    assignment: &[usize],
    loop_data: &Option<LoopData>,
) -> Result<usize, VarietyError> {
    match term {
        IdentityTerm::Var(i) => assignment
            .get(*i)
            .copied()
            .ok_or(VarietyError::UnassignedVariable { index: *i }),
        IdentityTerm::Mul(a, b) => {
            let a = eval(t, a, assignment, loop_data)?;
            let b = eval(t, b, assignment, loop_data)?;
            Ok(t.get(a, b))
        }
        IdentityTerm::LeftInv(a) => {
            let a = eval(t, a, assignment, loop_data)?;
            loop_data
                .as_ref()
                .map(|d| d.left_inv[a])
                .ok_or(VarietyError::NotApplicable)
        }
        IdentityTerm::RightInv(a) => {
            let a = eval(t, a, assignment, loop_data)?;
            loop_data
                .as_ref()
                .map(|d| d.right_inv[a])
                .ok_or(VarietyError::NotApplicable)
        }
        IdentityTerm::IdentityConst => loop_data
            .as_ref()
            .map(|d| d.identity)
            .ok_or(VarietyError::NotApplicable),
    }
}

/// Bottom-up evaluation of a term under a variable assignment.
pub fn eval_term(
    t: &CayleyTable,
    term: &IdentityTerm,
    assignment: &[usize],
) -> Result<usize, VarietyError> {
    let loop_data = if term.uses_loop_structure() {
        match LoopData::of(t) {
            Some(d) => Some(d),
            None => return Err(VarietyError::NotApplicable),
        }
    } else {
        None
    };
    eval(t, term, assignment, &loop_data)
}

/// Whether an identity holds; carries the least counterexample otherwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IdentityVerdict {
    Holds,
    /// The lexicographically least failing assignment, with both sides'
    /// values.
    Fails {
        assignment: Vec<usize>,
        lhs: usize,
        rhs: usize,
    },
}

/// Exhaustively checks `lhs = rhs` under every assignment (`n^k` of them).
///
/// An identity that needs loop structure on a non-loop is an applicability
/// error, distinct from `Fails`.
pub fn holds_identity(t: &CayleyTable, def: &VarietyDef) -> Result<IdentityVerdict, VarietyError> {
    let loop_data = if def.requires_loop {
        match LoopData::of(t) {
            Some(d) => Some(d),
            None => return Err(VarietyError::NotApplicable),
        }
    } else {
        None
    };
    let n = t.order();
    let k = def.var_count;
    let mut assignment = alloc::vec![0usize; k];
    loop {
        let lhs = eval(t, &def.lhs, &assignment, &loop_data)?;
        let rhs = eval(t, &def.rhs, &assignment, &loop_data)?;
        if lhs != rhs {
            return Ok(IdentityVerdict::Fails {
                assignment,
                lhs,
                rhs,
            });
        }
        // Advance odometer-style with the last variable fastest, so
        // assignments are visited in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(IdentityVerdict::Holds);
            }
            i -= 1;
            assignment[i] += 1;
            if assignment[i] < n {
                break;
            }
            assignment[i] = 0;
        }
    }
}

/// One profile line: how a table relates to a catalog entry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ProfileEntry {
    Holds,
    Fails {
        assignment: Vec<usize>,
        lhs: usize,
        rhs: usize,
    },
    NotApplicable,
}

/// The built-in catalog in its fixed report order.
pub fn catalog() -> Vec<VarietyDef> {
    let defs = [
        // Purely equational entries, checkable on any groupoid.
        ("bol.left", mul(var(0), mul(var(1), mul(var(0), var(2)))), mul(mul(var(0), mul(var(1), var(0))), var(2))),
        ("bol.right", mul(mul(mul(var(2), var(0)), var(1)), var(0)), mul(var(2), mul(mul(var(0), var(1)), var(0)))),
        ("moufang", mul(mul(var(0), var(1)), mul(var(2), var(0))), mul(mul(var(0), mul(var(1), var(2))), var(0))),
        ("extra", mul(var(0), mul(var(1), mul(var(2), var(0)))), mul(mul(mul(var(0), var(1)), var(2)), var(0))),
        ("alt.left", mul(var(0), mul(var(0), var(1))), mul(mul(var(0), var(0)), var(1))),
        ("alt.right", mul(mul(var(1), var(0)), var(0)), mul(var(1), mul(var(0), var(0)))),
        ("flexible", mul(var(0), mul(var(1), var(0))), mul(mul(var(0), var(1)), var(0))),
        ("lc", mul(mul(var(0), var(0)), mul(var(1), var(2))), mul(mul(var(0), mul(var(0), var(1))), var(2))),
        ("rc", mul(mul(var(2), var(1)), mul(var(0), var(0))), mul(var(2), mul(mul(var(1), var(0)), var(0)))),
        ("c", mul(var(0), mul(var(1), mul(var(1), var(2)))), mul(mul(mul(var(0), var(1)), var(1)), var(2))),
        // Inverse-property entries; loops only.
        ("ip.left", mul(linv(var(0)), mul(var(0), var(1))), var(1)),
        ("ip.right", mul(mul(var(1), var(0)), rinv(var(0))), var(1)),
        ("wip", mul(var(1), rinv(mul(var(0), var(1)))), rinv(var(0))),
        ("cip", mul(mul(var(0), var(1)), rinv(var(0))), var(1)),
        ("aip", rinv(mul(var(0), var(1))), mul(rinv(var(0)), rinv(var(1)))),
    ];
    defs.into_iter()
        .map(|(name, lhs, rhs)| VarietyDef::new(name, lhs, rhs).expect("catalog entries are dense"))
        .collect()
}

/// Looks up catalog entries by their stable names.
pub fn catalog_entry(name: &str) -> Option<VarietyDef> {
    catalog().into_iter().find(|d| d.name == name)
}

/// Evaluates the whole catalog; inverse-based entries on non-loops come
/// back `NotApplicable` rather than false.
pub fn variety_profile(t: &CayleyTable) -> Vec<(String, ProfileEntry)> {
    catalog()
        .into_iter()
        .map(|def| {
            let entry = match holds_identity(t, &def) {
                Ok(IdentityVerdict::Holds) => ProfileEntry::Holds,
                Ok(IdentityVerdict::Fails {
                    assignment,
                    lhs,
                    rhs,
                }) => ProfileEntry::Fails {
                    assignment,
                    lhs,
                    rhs,
                },
                Err(VarietyError::NotApplicable) => ProfileEntry::NotApplicable,
                Err(e) => panic!("catalog evaluation cannot fail otherwise: {e}"),
            };
            (def.name, entry)
        })
        .collect()
}

/// The Smarandache "certain" property lives on the designated substructure:
/// the identity is checked on the restricted table. Counterexample elements
/// are reported in the restricted table's indexing.
pub fn smarandache_variety_check(
    p: &SPair,
    def: &VarietyDef,
) -> Result<IdentityVerdict, VarietyError> {
    holds_identity(&p.restricted(), def)
}
