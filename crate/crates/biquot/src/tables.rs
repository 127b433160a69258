//! Curated classification data and its parser.
//!
//! The built-in copy lives in `data/curated.txt` and is embedded at compile
//! time; the same parser accepts an override file so every recorded constant
//! can be audited or swapped from the command line.  Parameterized records
//! use a tiny expression language: a rank or dimension is `c·n ± k` written
//! as e.g. `2n-1`, `n`, or a bare constant.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::lie_catalog::{Family, SimpleGroup, SphereMultiset};
use crate::rational_model::RationalType;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("curated data parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("row {name}: {msg}")]
    Instantiation { name: String, msg: String },
}

fn perr(line: usize, msg: impl Into<String>) -> TableError {
    TableError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Linear expression `n_coef * n + constant`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinExpr {
    n_coef: i64,
    constant: i64,
}

impl LinExpr {
    pub fn constant(c: i64) -> Self {
        LinExpr { n_coef: 0, constant: c }
    }

    pub fn eval(&self, n: u32) -> i64 {
        self.n_coef * i64::from(n) + self.constant
    }

    pub fn is_constant(&self) -> bool {
        self.n_coef == 0
    }

    fn parse(s: &str) -> Option<LinExpr> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match s.find('n') {
            None => s.parse().ok().map(LinExpr::constant),
            Some(pos) => {
                let coef = &s[..pos];
                let n_coef = if coef.is_empty() { 1 } else { coef.parse().ok()? };
                let rest = &s[pos + 1..];
                let constant = if rest.is_empty() {
                    0
                } else if let Some(k) = rest.strip_prefix('+') {
                    k.parse::<i64>().ok()?
                } else if let Some(k) = rest.strip_prefix('-') {
                    -k.parse::<i64>().ok()?
                } else {
                    return None;
                };
                Some(LinExpr { n_coef, constant })
            }
        }
    }
}

/// A simple group, either fixed (`B3`) or with a rank expression (`B(n-1)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupPattern {
    Fixed(SimpleGroup),
    Param { family: Family, rank: LinExpr },
}

impl GroupPattern {
    fn parse(s: &str) -> Option<GroupPattern> {
        let s = s.trim();
        for sym in ["G2", "F4", "E6", "E7", "E8"] {
            if s == sym {
                let family = Family::from_symbol(sym)?;
                let rank = family.fixed_rank()?;
                return Some(GroupPattern::Fixed(SimpleGroup::new(family, rank).ok()?));
            }
        }
        let family = Family::from_symbol(&s[..1])?;
        let rest = &s[1..];
        if let Some(expr) = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            Some(GroupPattern::Param {
                family,
                rank: LinExpr::parse(expr)?,
            })
        } else {
            let rank: u32 = rest.parse().ok()?;
            Some(GroupPattern::Fixed(SimpleGroup::new(family, rank).ok()?))
        }
    }

    pub fn is_fixed(&self) -> bool {
        matches!(self, GroupPattern::Fixed(_))
    }

    pub fn instantiate(&self, name: &str, n: u32) -> Result<SimpleGroup, TableError> {
        match *self {
            GroupPattern::Fixed(g) => Ok(g),
            GroupPattern::Param { family, rank } => {
                let r = rank.eval(n);
                let r = u32::try_from(r).map_err(|_| TableError::Instantiation {
                    name: name.to_string(),
                    msg: format!("rank {r} at n = {n} is not a valid rank"),
                })?;
                SimpleGroup::new(family, r).map_err(|e| TableError::Instantiation {
                    name: name.to_string(),
                    msg: e.to_string(),
                })
            }
        }
    }
}

/// One factor of the subgroup side of a quotient row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupFactor {
    Simple(GroupPattern),
    Circle,
}

/// Rational type with a parameterized dimension or index: `S(4n-1)`, `CP5`, ...
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypePattern {
    Sphere(LinExpr),
    Complex(LinExpr),
    Quaternionic(LinExpr),
}

impl TypePattern {
    fn parse(s: &str) -> Option<TypePattern> {
        let s = s.trim();
        let (ctor, rest): (fn(LinExpr) -> TypePattern, &str) = if let Some(r) = s.strip_prefix("CP") {
            (TypePattern::Complex, r)
        } else if let Some(r) = s.strip_prefix("HP") {
            (TypePattern::Quaternionic, r)
        } else if let Some(r) = s.strip_prefix('S') {
            (TypePattern::Sphere, r)
        } else {
            return None;
        };
        let expr = if let Some(inner) = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            LinExpr::parse(inner)?
        } else {
            LinExpr::constant(rest.parse().ok()?)
        };
        Some(ctor(expr))
    }

    pub fn instantiate(&self, name: &str, n: u32) -> Result<RationalType, TableError> {
        let make_err = |msg: String| TableError::Instantiation {
            name: name.to_string(),
            msg,
        };
        let eval = |e: &LinExpr| -> Result<u32, TableError> {
            let v = e.eval(n);
            u32::try_from(v).map_err(|_| make_err(format!("negative value {v} at n = {n}")))
        };
        match self {
            TypePattern::Sphere(e) => RationalType::odd_sphere(eval(e)?),
            TypePattern::Complex(e) => RationalType::truncated(2, eval(e)?),
            TypePattern::Quaternionic(e) => RationalType::truncated(4, eval(e)?),
        }
        .map_err(|e| make_err(e.to_string()))
    }
}

/// `n >= min` with finitely many exclusions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NRange {
    pub min: u32,
    pub excluded: Vec<u32>,
}

impl NRange {
    fn parse(s: &str) -> Option<Option<NRange>> {
        let s = s.trim();
        if s == "-" {
            return Some(None);
        }
        let mut min = None;
        let mut excluded = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            if let Some(v) = part.strip_prefix("n>=") {
                min = Some(v.trim().parse().ok()?);
            } else if let Some(v) = part.strip_prefix("n!=") {
                excluded.push(v.trim().parse().ok()?);
            } else {
                return None;
            }
        }
        Some(Some(NRange {
            min: min?,
            excluded,
        }))
    }

    pub fn contains(&self, n: u32) -> bool {
        n >= self.min && !self.excluded.contains(&n)
    }
}

/// Golden sphere-dimension record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereRow {
    pub group: SimpleGroup,
    pub dims: Vec<u32>,
}

/// Parameterized odd-sphere pair family.
#[derive(Debug, Clone)]
pub struct PairFamily {
    pub name: String,
    pub g: GroupPattern,
    pub h: GroupPattern,
    pub removed: LinExpr,
    pub range: NRange,
    pub reps: u32,
    pub note: String,
}

/// One of the finitely many pairs outside the families.
#[derive(Debug, Clone)]
pub struct SporadicPair {
    pub name: String,
    pub g: SimpleGroup,
    pub h: SimpleGroup,
    pub removed: u32,
    pub reps: u32,
    pub note: String,
}

/// Template of a verified quotient row; `range` is None for fixed rows.
#[derive(Debug, Clone)]
pub struct QuotientRowTemplate {
    pub name: String,
    pub g: GroupPattern,
    pub subgroup: Vec<SubgroupFactor>,
    pub rational_type: TypePattern,
    pub range: Option<NRange>,
    pub note: String,
}

/// A quotient row instantiated at a concrete parameter.
#[derive(Debug, Clone)]
pub struct QuotientRow {
    pub name: String,
    pub n: Option<u32>,
    pub g: SimpleGroup,
    pub h_spheres: SphereMultiset,
    pub h_dim: u32,
    pub rational_type: RationalType,
    pub embedding_note: String,
}

impl QuotientRow {
    pub fn display_name(&self) -> String {
        match self.n {
            Some(n) => format!("{} [n={n}]", self.name),
            None => self.name.clone(),
        }
    }
}

impl QuotientRowTemplate {
    pub fn instantiate(&self, n: Option<u32>) -> Result<QuotientRow, TableError> {
        let bad = |msg: String| TableError::Instantiation {
            name: self.name.clone(),
            msg,
        };
        let n_val = match (&self.range, n) {
            (Some(range), Some(n)) if range.contains(n) => n,
            (Some(_), Some(n)) => return Err(bad(format!("n = {n} outside the stated range"))),
            (Some(_), None) => return Err(bad("parameterized row needs n".to_string())),
            (None, None) => 0,
            (None, Some(_)) => return Err(bad("fixed row takes no n".to_string())),
        };
        let g = self.g.instantiate(&self.name, n_val)?;
        let mut h_spheres = SphereMultiset::empty();
        let mut h_dim = 0;
        for factor in &self.subgroup {
            match factor {
                SubgroupFactor::Simple(p) => {
                    let grp = p.instantiate(&self.name, n_val)?;
                    h_spheres = h_spheres.union(&grp.sphere_dimensions());
                    h_dim += grp.dimension();
                }
                SubgroupFactor::Circle => {
                    h_spheres = h_spheres.with(1);
                    h_dim += 1;
                }
            }
        }
        let rational_type = self.rational_type.instantiate(&self.name, n_val)?;
        Ok(QuotientRow {
            name: self.name.clone(),
            n,
            g,
            h_spheres,
            h_dim,
            rational_type,
            embedding_note: self.note.clone(),
        })
    }
}

/// The full curated data set.
#[derive(Debug, Clone, Default)]
pub struct CuratedTables {
    pub sphere_rows: Vec<SphereRow>,
    pub pair_families: Vec<PairFamily>,
    pub sporadic_pairs: Vec<SporadicPair>,
    pub quotient_rows: Vec<QuotientRowTemplate>,
}

const BUILTIN_DATA: &str = include_str!("../data/curated.txt");

static BUILTIN: OnceLock<CuratedTables> = OnceLock::new();

impl CuratedTables {
    pub fn builtin() -> &'static CuratedTables {
        BUILTIN.get_or_init(|| {
            CuratedTables::parse(BUILTIN_DATA).expect("embedded curated data parses")
        })
    }

    pub fn parse(src: &str) -> Result<CuratedTables, TableError> {
        let mut out = CuratedTables::default();
        for (idx, raw) in src.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('|').map(str::trim).collect();
            let (kind, name) = match fields[0].split_once(char::is_whitespace) {
                Some((k, rest)) => (k, rest.trim().to_string()),
                None => (fields[0], String::new()),
            };
            match kind {
                "dims" => out.sphere_rows.push(parse_dims(line_no, &name, &fields)?),
                "family" => out.pair_families.push(parse_family(line_no, name, &fields)?),
                "sporadic" => out.sporadic_pairs.push(parse_sporadic(line_no, name, &fields)?),
                "row" => out.quotient_rows.push(parse_row(line_no, name, &fields)?),
                other => return Err(perr(line_no, format!("unknown record kind {other:?}"))),
            }
        }
        Ok(out)
    }

    /// All quotient rows instantiated: fixed rows once, parameterized rows
    /// for every admissible n ≤ n_max.
    pub fn instantiate_rows(&self, n_max: u32) -> Result<Vec<QuotientRow>, TableError> {
        let mut out = Vec::new();
        for template in &self.quotient_rows {
            match &template.range {
                None => out.push(template.instantiate(None)?),
                Some(range) => {
                    for n in range.min..=n_max {
                        if range.contains(n) {
                            out.push(template.instantiate(Some(n))?);
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

fn parse_dims(line: usize, name: &str, fields: &[&str]) -> Result<SphereRow, TableError> {
    if fields.len() != 2 {
        return Err(perr(line, "dims record needs `dims GROUP | dims...`"));
    }
    let group = match GroupPattern::parse(name) {
        Some(GroupPattern::Fixed(g)) => g,
        _ => return Err(perr(line, format!("bad group {name:?}"))),
    };
    let mut dims = Vec::new();
    for tok in fields[1].split_whitespace() {
        let d: u32 = tok
            .parse()
            .map_err(|_| perr(line, format!("bad dimension {tok:?}")))?;
        if d % 2 == 0 {
            return Err(perr(line, format!("even sphere dimension {d}")));
        }
        dims.push(d);
    }
    if dims.is_empty() {
        return Err(perr(line, "empty dimension list"));
    }
    Ok(SphereRow { group, dims })
}

fn parse_family(line: usize, name: String, fields: &[&str]) -> Result<PairFamily, TableError> {
    if fields.len() != 7 {
        return Err(perr(line, "family record needs 7 fields"));
    }
    let g = GroupPattern::parse(fields[1]).ok_or_else(|| perr(line, format!("bad group {:?}", fields[1])))?;
    let h = GroupPattern::parse(fields[2]).ok_or_else(|| perr(line, format!("bad group {:?}", fields[2])))?;
    let removed = LinExpr::parse(fields[3]).ok_or_else(|| perr(line, format!("bad expression {:?}", fields[3])))?;
    let range = NRange::parse(fields[4])
        .ok_or_else(|| perr(line, format!("bad range {:?}", fields[4])))?
        .ok_or_else(|| perr(line, "family record needs a real n range"))?;
    let reps: u32 = fields[5]
        .parse()
        .map_err(|_| perr(line, format!("bad reps {:?}", fields[5])))?;
    if reps == 0 {
        return Err(perr(line, "reps must be positive"));
    }
    Ok(PairFamily {
        name,
        g,
        h,
        removed,
        range,
        reps,
        note: fields[6].to_string(),
    })
}

fn parse_sporadic(line: usize, name: String, fields: &[&str]) -> Result<SporadicPair, TableError> {
    if fields.len() != 6 {
        return Err(perr(line, "sporadic record needs 6 fields"));
    }
    let fixed = |s: &str| match GroupPattern::parse(s) {
        Some(GroupPattern::Fixed(g)) => Ok(g),
        _ => Err(perr(line, format!("bad group {s:?}"))),
    };
    let g = fixed(fields[1])?;
    let h = fixed(fields[2])?;
    let removed: u32 = fields[3]
        .parse()
        .map_err(|_| perr(line, format!("bad dimension {:?}", fields[3])))?;
    if removed % 2 == 0 || removed < 3 {
        return Err(perr(line, format!("removed dimension {removed} must be odd and >= 3")));
    }
    let reps: u32 = fields[4]
        .parse()
        .map_err(|_| perr(line, format!("bad reps {:?}", fields[4])))?;
    if reps == 0 {
        return Err(perr(line, "reps must be positive"));
    }
    Ok(SporadicPair {
        name,
        g,
        h,
        removed,
        reps,
        note: fields[5].to_string(),
    })
}

fn parse_row(line: usize, name: String, fields: &[&str]) -> Result<QuotientRowTemplate, TableError> {
    if fields.len() != 6 {
        return Err(perr(line, "row record needs 6 fields"));
    }
    let g = GroupPattern::parse(fields[1]).ok_or_else(|| perr(line, format!("bad group {:?}", fields[1])))?;
    let mut subgroup = Vec::new();
    for part in split_factors(fields[2]) {
        let part = part.trim();
        if part == "S1" {
            subgroup.push(SubgroupFactor::Circle);
        } else {
            let p = GroupPattern::parse(part).ok_or_else(|| perr(line, format!("bad subgroup factor {part:?}")))?;
            subgroup.push(SubgroupFactor::Simple(p));
        }
    }
    if subgroup.is_empty() {
        return Err(perr(line, "empty subgroup"));
    }
    let rational_type =
        TypePattern::parse(fields[3]).ok_or_else(|| perr(line, format!("bad rational type {:?}", fields[3])))?;
    let range = NRange::parse(fields[4]).ok_or_else(|| perr(line, format!("bad range {:?}", fields[4])))?;
    Ok(QuotientRowTemplate {
        name,
        g,
        subgroup,
        rational_type,
        range,
        note: fields[5].to_string(),
    })
}

/// Split on `+` at paren depth zero, so `B(n+1)+S1` keeps its expression whole.
fn split_factors(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            '+' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
            }
            _ => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

impl fmt::Display for QuotientRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} / (spheres {}, dim {}) ~ {}",
            self.display_name(),
            self.g.label(),
            self.h_spheres,
            self.h_dim,
            self.rational_type
        )
    }
}
