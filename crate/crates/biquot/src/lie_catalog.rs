//! Compact simple Lie groups and their rational sphere dimensions.
//!
//! Rationally, a compact connected Lie group is a product of odd spheres.
//! Everything downstream works with the multiset of those sphere dimensions,
//! so a group here is just (family, rank), identified up to cover and up to
//! rational equivalence.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("invalid group {label}: {reason}")]
    InvalidGroup { label: String, reason: String },
    #[error("catalog parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("duplicate catalog entry {0}")]
    Duplicate(String),
    #[error("max_rank must be at least 1")]
    EmptyRange,
}

/// The nine families of compact simple Lie groups.
///
/// Declaration order doubles as the canonical order used when a class of
/// rationally coincident groups needs a single representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::G2,
        Family::F4,
        Family::E6,
        Family::E7,
        Family::E8,
    ];

    /// Exceptional families come in exactly one rank.
    pub fn fixed_rank(self) -> Option<u32> {
        match self {
            Family::G2 => Some(2),
            Family::F4 => Some(4),
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            _ => None,
        }
    }

    /// Smallest rank at which the family is simple and not a repeat of an
    /// earlier-listed group (D starts at 3: D_1 is a circle, D_2 is not simple).
    pub fn min_rank(self) -> u32 {
        match self {
            Family::A | Family::B | Family::C => 1,
            Family::D => 3,
            other => other.fixed_rank().expect("exceptional"),
        }
    }

    /// Where the built-in catalog starts the family.  B and C are valid from
    /// rank 1 but their rank-1 members are rationally the same group as A_1,
    /// so the catalog lists rank-1 once, under A.
    fn catalog_min_rank(self) -> u32 {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
            other => other.fixed_rank().expect("exceptional"),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.symbol() == s)
    }
}

/// A multiset of odd dimensions, kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SphereMultiset(Vec<u32>);

impl SphereMultiset {
    pub fn new(mut dims: Vec<u32>) -> Self {
        dims.sort_unstable();
        SphereMultiset(dims)
    }

    pub fn empty() -> Self {
        SphereMultiset(Vec::new())
    }

    pub fn dims(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Union with a single extra element.
    pub fn with(&self, d: u32) -> Self {
        let mut v = self.0.clone();
        v.push(d);
        SphereMultiset::new(v)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SphereMultiset::new(v)
    }

    /// If `self` equals `other` plus exactly one extra element, return it.
    pub fn single_difference(&self, other: &Self) -> Option<u32> {
        if self.0.len() != other.0.len() + 1 {
            return None;
        }
        let mut extra = None;
        let mut j = 0;
        for &x in &self.0 {
            if j < other.0.len() && other.0[j] == x {
                j += 1;
            } else if extra.is_none() {
                extra = Some(x);
            } else {
                return None;
            }
        }
        if j == other.0.len() {
            extra
        } else {
            None
        }
    }
}

impl fmt::Display for SphereMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

/// A compact simple Lie group given by family and rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleGroup {
    family: Family,
    rank: u32,
}

impl SimpleGroup {
    pub fn new(family: Family, rank: u32) -> Result<Self, CatalogError> {
        let bad = |reason: &str| CatalogError::InvalidGroup {
            label: format!("{}{}", family.symbol(), rank),
            reason: reason.to_string(),
        };
        if let Some(fixed) = family.fixed_rank() {
            if rank != fixed {
                return Err(bad(&format!("family {} has rank {fixed} only", family.symbol())));
            }
        } else if rank < family.min_rank() {
            return Err(bad(&format!(
                "family {} needs rank >= {}",
                family.symbol(),
                family.min_rank()
            )));
        }
        Ok(SimpleGroup { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// One display label per (family, rank); covers are not distinguished.
    pub fn label(&self) -> String {
        let r = self.rank;
        match self.family {
            Family::A => format!("SU({})", r + 1),
            Family::B => format!("SO({})", 2 * r + 1),
            Family::C => format!("Sp({r})"),
            Family::D => format!("SO({})", 2 * r),
            ex => ex.symbol().to_string(),
        }
    }

    /// Dimensions of the odd spheres in the rational homotopy type.
    ///
    /// A_r: 3, 5, ..., 2r+1.  B_r, C_r: 3, 7, ..., 4r-1.
    /// D_r: 3, 7, ..., 4r-5 together with 2r-1.  Exceptionals are fixed lists.
    pub fn sphere_dimensions(&self) -> SphereMultiset {
        let r = self.rank;
        let dims: Vec<u32> = match self.family {
            Family::A => (1..=r).map(|k| 2 * k + 1).collect(),
            Family::B | Family::C => (1..=r).map(|k| 4 * k - 1).collect(),
            Family::D => (1..r).map(|k| 4 * k - 1).chain([2 * r - 1]).collect(),
            Family::G2 => vec![3, 11],
            Family::F4 => vec![3, 11, 15, 23],
            Family::E6 => vec![3, 9, 11, 15, 17, 23],
            Family::E7 => vec![3, 11, 15, 19, 23, 27, 35],
            Family::E8 => vec![3, 15, 23, 27, 35, 39, 47, 59],
        };
        SphereMultiset::new(dims)
    }

    /// Group dimension from the classical closed formulas.  Always equals the
    /// sum of the sphere dimensions; the redundancy is exploited in tests.
    pub fn dimension(&self) -> u32 {
        let r = self.rank;
        match self.family {
            Family::A => r * (r + 2),
            Family::B | Family::C => r * (2 * r + 1),
            Family::D => r * (2 * r - 1),
            Family::G2 => 14,
            Family::F4 => 52,
            Family::E6 => 78,
            Family::E7 => 133,
            Family::E8 => 248,
        }
    }
}

impl fmt::Display for SimpleGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// All simple groups up to a rank bound, plus the detected rational
/// coincidences (distinct groups with identical sphere-dimension multisets).
#[derive(Debug, Clone)]
pub struct GroupCatalog {
    entries: Vec<SimpleGroup>,
    coincidences: Vec<(SimpleGroup, SimpleGroup)>,
    max_rank: u32,
}

impl GroupCatalog {
    /// Every family instantiated for min_rank..=max_rank, exceptional groups
    /// included when their fixed rank fits.
    pub fn builtin(max_rank: u32) -> Self {
        let mut entries = Vec::new();
        for family in Family::ALL {
            match family.fixed_rank() {
                Some(r) => {
                    if r <= max_rank {
                        entries.push(SimpleGroup::new(family, r).expect("fixed rank"));
                    }
                }
                None => {
                    for r in family.catalog_min_rank()..=max_rank {
                        entries.push(SimpleGroup::new(family, r).expect("in range"));
                    }
                }
            }
        }
        Self::from_entries(entries, max_rank).expect("builtin entries are distinct")
    }

    fn from_entries(mut entries: Vec<SimpleGroup>, max_rank: u32) -> Result<Self, CatalogError> {
        entries.sort();
        let mut seen = BTreeSet::new();
        for g in &entries {
            if !seen.insert(*g) {
                return Err(CatalogError::Duplicate(g.label()));
            }
        }
        let coincidences = detect_coincidences(&entries);
        // Paranoia: the detected pairs really do share their multisets.
        for (a, b) in &coincidences {
            assert_eq!(a.sphere_dimensions(), b.sphere_dimensions());
        }
        Ok(GroupCatalog {
            entries,
            coincidences,
            max_rank,
        })
    }

    /// Parse an override catalog: one `FAMILY RANK` pair per line (rank may be
    /// omitted for exceptional families), `#` starts a comment.
    pub fn parse(src: &str) -> Result<Self, CatalogError> {
        let mut entries = Vec::new();
        let mut max_rank = 0;
        for (idx, raw) in src.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let sym = parts.next().expect("nonempty line");
            let family = Family::from_symbol(sym).ok_or_else(|| CatalogError::Parse {
                line: idx + 1,
                msg: format!("unknown family {sym:?}"),
            })?;
            let rank = match parts.next() {
                Some(tok) => tok.parse::<u32>().map_err(|_| CatalogError::Parse {
                    line: idx + 1,
                    msg: format!("bad rank {tok:?}"),
                })?,
                None => family.fixed_rank().ok_or_else(|| CatalogError::Parse {
                    line: idx + 1,
                    msg: format!("family {sym} needs an explicit rank"),
                })?,
            };
            if parts.next().is_some() {
                return Err(CatalogError::Parse {
                    line: idx + 1,
                    msg: "expected `FAMILY RANK`".to_string(),
                });
            }
            let g = SimpleGroup::new(family, rank).map_err(|e| CatalogError::Parse {
                line: idx + 1,
                msg: e.to_string(),
            })?;
            max_rank = max_rank.max(rank);
            entries.push(g);
        }
        Self::from_entries(entries, max_rank)
    }

    pub fn entries(&self) -> &[SimpleGroup] {
        &self.entries
    }

    pub fn coincidences(&self) -> &[(SimpleGroup, SimpleGroup)] {
        &self.coincidences
    }

    pub fn max_rank(&self) -> u32 {
        self.max_rank
    }

    pub fn get(&self, family: Family, rank: u32) -> Option<SimpleGroup> {
        self.entries
            .iter()
            .copied()
            .find(|g| g.family() == family && g.rank() == rank)
    }

    pub fn contains(&self, g: &SimpleGroup) -> bool {
        self.entries.contains(g)
    }
}

fn detect_coincidences(entries: &[SimpleGroup]) -> Vec<(SimpleGroup, SimpleGroup)> {
    let mut out = Vec::new();
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i + 1..] {
            if a.sphere_dimensions() == b.sphere_dimensions() {
                out.push((*a, *b));
            }
        }
    }
    out
}

/// Built-in catalog up to `max_rank`, or the parsed override when a source
/// string is supplied (in which case `max_rank` is ignored).
pub fn load_catalog(source: Option<&str>, max_rank: u32) -> Result<GroupCatalog, CatalogError> {
    match source {
        Some(src) => GroupCatalog::parse(src),
        None => {
            if max_rank == 0 {
                return Err(CatalogError::EmptyRange);
            }
            Ok(GroupCatalog::builtin(max_rank))
        }
    }
}
