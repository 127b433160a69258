//! Exhaustive search for odd-sphere pairs and verification of the curated
//! quotient rows.
//!
//! A pair (G, H) of simple groups is an odd-sphere pair when the sphere
//! dimensions of G are those of H plus exactly one more odd sphere — the
//! rational shadow of a quotient G/H that is a rational homology sphere.
//! The matcher brute-forces all catalog pairs and canonicalizes by exponent
//! multiset, so rationally coincident groups (B_n/C_n, A_3/D_3) collapse to
//! one candidate with alias labels.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::lie_catalog::{GroupCatalog, SimpleGroup, SphereMultiset};
use crate::rational_model::{rational_balance, RationalModelError};
use crate::tables::{CuratedTables, GroupPattern, QuotientRow, TableError};

#[derive(Debug, Error)]
pub enum EnumerationError {
    #[error("candidate {0}: multiset relation violated")]
    BadMultiset(String),
    #[error("candidate {0}: rank or dimension relation violated")]
    BadRank(String),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Balance(#[from] RationalModelError),
}

/// Canonical identity of a candidate: exponent multisets of g and h plus the
/// removed sphere dimension.  Coincident pairs share a key by construction.
pub type ClassKey = (SphereMultiset, SphereMultiset, u32);

#[derive(Debug, Clone)]
pub struct SpherePairCandidate {
    pub g: SimpleGroup,
    /// None encodes the trivial subgroup (rank-1 G only).
    pub h: Option<SimpleGroup>,
    pub sphere_dim: u32,
    /// Quotient labels of every (g, h) combination in the class, canonical
    /// representative first.
    pub coincidence_labels: Vec<String>,
}

fn quotient_label(g: &SimpleGroup, h: &Option<SimpleGroup>) -> String {
    match h {
        Some(h) => format!("{}/{}", g.label(), h.label()),
        None => format!("{}/{{e}}", g.label()),
    }
}

impl SpherePairCandidate {
    pub fn class_key(&self) -> ClassKey {
        let h_dims = self
            .h
            .map(|h| h.sphere_dimensions())
            .unwrap_or_else(SphereMultiset::empty);
        (self.g.sphere_dimensions(), h_dims, self.sphere_dim)
    }

    pub fn label(&self) -> &str {
        &self.coincidence_labels[0]
    }

    /// Re-derive both type invariants from scratch.
    pub fn validate(&self) -> Result<(), EnumerationError> {
        let name = self.label().to_string();
        let g_dims = self.g.sphere_dimensions();
        let (h_dims, h_rank, h_dim) = match &self.h {
            Some(h) => (h.sphere_dimensions(), h.rank(), h.dimension()),
            None => (SphereMultiset::empty(), 0, 0),
        };
        if g_dims.single_difference(&h_dims) != Some(self.sphere_dim) {
            return Err(EnumerationError::BadMultiset(name));
        }
        if self.g.rank() != h_rank + 1 || self.g.dimension() != h_dim + self.sphere_dim {
            return Err(EnumerationError::BadRank(name));
        }
        Ok(())
    }
}

impl fmt::Display for SpherePairCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}  (S^{})", self.coincidence_labels.join(" = "), self.sphere_dim)
    }
}

/// All catalog pairs (g, h) with sphere_dims(g) = sphere_dims(h) + {d},
/// canonicalized by exponent multiset.  Deterministic order: rank of g,
/// then family, then d.
pub fn match_odd_sphere_pairs(
    catalog: &GroupCatalog,
    include_trivial_h: bool,
) -> Vec<SpherePairCandidate> {
    let mut classes: BTreeMap<ClassKey, Vec<(SimpleGroup, Option<SimpleGroup>)>> = BTreeMap::new();
    for g in catalog.entries() {
        let g_dims = g.sphere_dimensions();
        if include_trivial_h && g.rank() == 1 {
            let d = g_dims.dims()[0];
            classes
                .entry((g_dims.clone(), SphereMultiset::empty(), d))
                .or_default()
                .push((*g, None));
        }
        for h in catalog.entries() {
            if h.rank() + 1 != g.rank() {
                continue;
            }
            let h_dims = h.sphere_dimensions();
            if let Some(d) = g_dims.single_difference(&h_dims) {
                classes
                    .entry((g_dims.clone(), h_dims, d))
                    .or_default()
                    .push((*g, Some(*h)));
            }
        }
    }
    let mut out: Vec<SpherePairCandidate> = classes
        .into_iter()
        .map(|((_, _, d), mut members)| {
            members.sort();
            let (g, h) = members[0];
            let coincidence_labels = members.iter().map(|(g, h)| quotient_label(g, h)).collect();
            SpherePairCandidate {
                g,
                h,
                sphere_dim: d,
                coincidence_labels,
            }
        })
        .collect();
    out.sort_by_key(|c| (c.g.rank(), c.g.family(), c.sphere_dim));
    out
}

/// The curated pair list instantiated against a catalog: class key → names of
/// the contributing curated records (several when families overlap or
/// coincide rationally).
pub fn expected_pair_classes(
    tables: &CuratedTables,
    catalog: &GroupCatalog,
) -> Result<BTreeMap<ClassKey, Vec<String>>, EnumerationError> {
    let present: BTreeSet<SphereMultiset> = catalog
        .entries()
        .iter()
        .map(|g| g.sphere_dimensions())
        .collect();
    let mut out: BTreeMap<ClassKey, Vec<String>> = BTreeMap::new();
    let mut push = |key: ClassKey, name: String| {
        out.entry(key).or_default().push(name);
    };
    for fam in &tables.pair_families {
        // Rank expressions grow with n, so stop once g leaves the catalog.
        for n in fam.range.min..=(fam.range.min + 2 * catalog.max_rank() + 8) {
            let g = match fam.g.instantiate(&fam.name, n) {
                Ok(g) => g,
                Err(_) => continue, // rank not yet valid (cannot happen for the built-in data)
            };
            if g.rank() > catalog.max_rank() {
                break;
            }
            if !fam.range.contains(n) {
                continue;
            }
            let h = fam.h.instantiate(&fam.name, n)?;
            let g_dims = g.sphere_dimensions();
            let h_dims = h.sphere_dimensions();
            let d = g_dims.single_difference(&h_dims).ok_or_else(|| {
                TableError::Instantiation {
                    name: fam.name.clone(),
                    msg: format!("not an odd-sphere pair at n = {n}"),
                }
            })?;
            if i64::from(d) != fam.removed.eval(n) {
                return Err(TableError::Instantiation {
                    name: fam.name.clone(),
                    msg: format!("removed dimension {} recorded, {} computed", fam.removed.eval(n), d),
                }
                .into());
            }
            if present.contains(&g_dims) && present.contains(&h_dims) {
                push((g_dims, h_dims, d), format!("{} [n={n}] (reps {})", fam.name, fam.reps));
            }
        }
    }
    for sp in &tables.sporadic_pairs {
        let g_dims = sp.g.sphere_dimensions();
        let h_dims = sp.h.sphere_dimensions();
        let d = g_dims
            .single_difference(&h_dims)
            .ok_or_else(|| TableError::Instantiation {
                name: sp.name.clone(),
                msg: "not an odd-sphere pair".to_string(),
            })?;
        if d != sp.removed {
            return Err(TableError::Instantiation {
                name: sp.name.clone(),
                msg: format!("removed dimension {} recorded, {} computed", sp.removed, d),
            }
            .into());
        }
        if present.contains(&g_dims) && present.contains(&h_dims) {
            push((g_dims, h_dims, d), format!("{} (reps {})", sp.name, sp.reps));
        }
    }
    Ok(out)
}

/// Per-row outcome of the quotient-row verification.
#[derive(Debug, Clone)]
pub struct RowCheck {
    pub row: QuotientRow,
    pub in_catalog: bool,
    pub balance_ok: bool,
    pub dimension_ok: bool,
}

impl RowCheck {
    pub fn pass(&self) -> bool {
        self.in_catalog && self.balance_ok && self.dimension_ok
    }

    pub fn detail(&self) -> String {
        format!(
            "{} / ({}; dim {}) ~ {}: balance {}, dimension {} - {} = {} {}",
            self.row.g.label(),
            self.row.h_spheres,
            self.row.h_dim,
            self.row.rational_type,
            if self.balance_ok { "ok" } else { "FAILED" },
            self.row.g.dimension(),
            self.row.h_dim,
            self.row.rational_type.dimension(),
            if self.dimension_ok { "ok" } else { "FAILED" },
        )
    }
}

/// Check every curated quotient row (parameterized rows for 2 ≤ n ≤ n_max):
/// rational balance plus dimension consistency.  A failing row is reported in
/// its RowCheck, not raised as an error.
pub fn verify_quotient_rows(
    catalog: &GroupCatalog,
    n_max: u32,
) -> Result<Vec<RowCheck>, EnumerationError> {
    verify_quotient_rows_with(CuratedTables::builtin(), catalog, n_max)
}

pub fn verify_quotient_rows_with(
    tables: &CuratedTables,
    catalog: &GroupCatalog,
    n_max: u32,
) -> Result<Vec<RowCheck>, EnumerationError> {
    let mut out = Vec::new();
    for row in tables.instantiate_rows(n_max)? {
        let in_catalog = catalog.contains(&row.g);
        let balance_ok = rational_balance(&row.g.sphere_dimensions(), &row.h_spheres, &row.rational_type)?;
        let dimension_ok = row.g.dimension() == row.h_dim + row.rational_type.dimension();
        out.push(RowCheck {
            row,
            in_catalog,
            balance_ok,
            dimension_ok,
        });
    }
    Ok(out)
}

/// Upper bound on the parameter n for which the curated rows stay inside a
/// catalog of the given max rank (the widest row needs rank 2n).
pub fn rank_needed_for(n_max: u32, tables: &CuratedTables) -> u32 {
    let mut needed = 1;
    for row in &tables.quotient_rows {
        if let (Some(range), GroupPattern::Param { .. }) = (&row.range, &row.g) {
            for n in range.min..=n_max {
                if range.contains(n) {
                    if let Ok(g) = row.g.instantiate(&row.name, n) {
                        needed = needed.max(g.rank());
                    }
                }
            }
        } else if let GroupPattern::Fixed(g) = row.g {
            needed = needed.max(g.rank());
        }
    }
    needed
}
