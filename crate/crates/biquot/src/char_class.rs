//! Pontrjagin-class arithmetic for the two rational CP^{2n-1} quotients, and
//! weight decomposition of circle representations.
//!
//! Both quotients of T¹S^{2n} — the circle biquotient M and the Grassmannian
//! N of oriented 2-planes — have torsion-free H⁴ generated by a single class,
//! so p₁ lives in integer units of a², the square of the degree-2 generator.
//! Each tangent bundle is pinned down by a stable Whitney-sum relation
//! against classified plane bundles, from which p₁ follows by additivity.
//! The homeomorphism invariant is the order of H⁴/⟨p₁⟩, which needs the
//! divisibility c₂ of a² and not just the bare coefficient.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::cohomology::{circle_quotient_ring, CohomologyError, DividedRing};

#[derive(Debug, Error)]
pub enum CharClassError {
    #[error("ranks do not balance: left {left}, right {right}")]
    RankImbalance { left: u32, right: u32 },
    #[error("p1 = 0 gives an infinite quotient, not a finite order")]
    InfiniteQuotient,
    #[error("ring not usable for H^4 orders: {0}")]
    BadRing(String),
    #[error("n = {n} not allowed: {reason}")]
    Domain { n: u32, reason: String },
    #[error("{samples} samples cannot resolve weights up to {max_weight}; need at least {needed}")]
    TooFewSamples {
        samples: usize,
        max_weight: u32,
        needed: usize,
    },
    #[error("weight {weight} multiplicity {value} is not a nonnegative integer")]
    BadMultiplicity { weight: u32, value: f64 },
    #[error("decomposition does not reproduce the character (residual {residual:.3e}): not a representation of weight <= {max_weight}")]
    Reconstruction { residual: f64, max_weight: u32 },
    #[error("multiplicities account for rank {found}, expected {expected}")]
    RankMismatch { expected: u32, found: u32 },
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

/// An oriented 2-plane bundle whose Euler class is `euler_coeff` times the
/// degree-2 ring generator; one copy contributes euler_coeff² to p₁ in units
/// of a².
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneBundle {
    pub name: String,
    pub euler_coeff: i64,
}

impl PlaneBundle {
    pub fn new(name: &str, euler_coeff: i64) -> Self {
        PlaneBundle {
            name: name.to_string(),
            euler_coeff,
        }
    }

    pub fn p1(&self) -> i64 {
        self.euler_coeff * self.euler_coeff
    }
}

impl fmt::Display for PlaneBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (e={})", self.name, self.euler_coeff)
    }
}

/// Sum of p₁ over a formal Whitney sum of plane bundles, in units of a².
pub fn p1_of_sum(bundles: &[(PlaneBundle, u32)]) -> i64 {
    bundles
        .iter()
        .map(|(b, m)| i64::from(*m) * b.p1())
        .sum()
}

/// A stable bundle identity  T ⊕ (known) ⊕ ε^r  ≅  (classified) ⊕ ε^l,
/// with T the tangent bundle of a manifold of dimension `tangent_rank`.
#[derive(Debug, Clone)]
pub struct StableBundleRelation {
    pub tangent_name: String,
    pub tangent_rank: u32,
    /// Classified side (right-hand side of the identity as written above).
    pub classified: Vec<(PlaneBundle, u32)>,
    pub classified_trivial: u32,
    /// Known plane-bundle summands sitting next to the tangent bundle.
    pub alongside_tangent: Vec<(PlaneBundle, u32)>,
    pub tangent_side_trivial: u32,
}

impl StableBundleRelation {
    pub fn new(
        tangent_name: &str,
        tangent_rank: u32,
        classified: Vec<(PlaneBundle, u32)>,
        classified_trivial: u32,
        alongside_tangent: Vec<(PlaneBundle, u32)>,
        tangent_side_trivial: u32,
    ) -> Result<Self, CharClassError> {
        let rel = StableBundleRelation {
            tangent_name: tangent_name.to_string(),
            tangent_rank,
            classified,
            classified_trivial,
            alongside_tangent,
            tangent_side_trivial,
        };
        rel.check_balance()?;
        Ok(rel)
    }

    fn side_rank(bundles: &[(PlaneBundle, u32)], trivial: u32) -> u32 {
        2 * bundles.iter().map(|(_, m)| m).sum::<u32>() + trivial
    }

    fn check_balance(&self) -> Result<(), CharClassError> {
        let left = self.tangent_rank
            + Self::side_rank(&self.alongside_tangent, self.tangent_side_trivial);
        let right = Self::side_rank(&self.classified, self.classified_trivial);
        if left != right {
            return Err(CharClassError::RankImbalance { left, right });
        }
        Ok(())
    }
}

impl fmt::Display for StableBundleRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |bundles: &[(PlaneBundle, u32)], trivial: u32, lead: Option<&str>| {
            let mut parts: Vec<String> = lead.iter().map(|s| s.to_string()).collect();
            for (b, m) in bundles {
                parts.push(if *m == 1 {
                    b.name.clone()
                } else {
                    format!("{m} {}", b.name)
                });
            }
            if trivial > 0 {
                parts.push(format!("eps^{trivial}"));
            }
            if parts.is_empty() {
                parts.push("0".to_string());
            }
            parts.join(" + ")
        };
        write!(
            f,
            "{} = {}",
            side(
                &self.alongside_tangent,
                self.tangent_side_trivial,
                Some(self.tangent_name.as_str()),
            ),
            side(&self.classified, self.classified_trivial, None)
        )
    }
}

/// p₁ of the tangent unknown: p₁ of the classified side minus p₁ of the known
/// summands alongside it (trivial bundles contribute nothing).
pub fn solve_p1_tangent(rel: &StableBundleRelation) -> Result<i64, CharClassError> {
    rel.check_balance()?;
    Ok(p1_of_sum(&rel.classified) - p1_of_sum(&rel.alongside_tangent))
}

/// TM ⊕ ε⁴ ≅ 2n·γ_M ⊕ ε² for the circle biquotient M of dimension 4n-2;
/// γ_M has Euler class a_M.
pub fn circle_quotient_tangent_relation(n: u32) -> Result<StableBundleRelation, CharClassError> {
    if n < 2 {
        return Err(CharClassError::Domain {
            n,
            reason: "n >= 2 required".to_string(),
        });
    }
    StableBundleRelation::new(
        "TM",
        4 * n - 2,
        vec![(PlaneBundle::new("gamma_M", 1), 2 * n)],
        2,
        Vec::new(),
        4,
    )
}

/// TN ⊕ η_N ⊕ ε² ≅ (2n+1)·γ_N for the Grassmannian N of oriented 2-planes in
/// R^{2n+1}; η_N has Euler class 2a_N.
pub fn grassmannian_tangent_relation(n: u32) -> Result<StableBundleRelation, CharClassError> {
    if n < 2 {
        return Err(CharClassError::Domain {
            n,
            reason: "n >= 2 required".to_string(),
        });
    }
    StableBundleRelation::new(
        "TN",
        4 * n - 2,
        vec![(PlaneBundle::new("gamma_N", 1), 2 * n + 1)],
        0,
        vec![(PlaneBundle::new("eta_N", 2), 1)],
        2,
    )
}

/// Order of H⁴/⟨p₁⟩ for a space whose ring has a degree-2 generator a with
/// a² = c₂·g for a generator g of H⁴: the order is |p1_coeff|·c₂.
pub fn quotient_order(p1_coeff: i64, ring: &DividedRing) -> Result<u64, CharClassError> {
    if ring.gen_degree() != 2 || ring.top_power() < 2 {
        return Err(CharClassError::BadRing(format!(
            "need a degree-2 generator with a nonzero square (gen degree {}, top power {})",
            ring.gen_degree(),
            ring.top_power()
        )));
    }
    if p1_coeff == 0 {
        return Err(CharClassError::InfiniteQuotient);
    }
    let c2 = ring
        .c(2)
        .ok_or_else(|| CharClassError::BadRing("no c_2 recorded".to_string()))?;
    Ok(p1_coeff.unsigned_abs() * c2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distinction {
    NotHomeomorphic,
    Unresolved,
}

impl fmt::Display for Distinction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distinction::NotHomeomorphic => write!(f, "not homeomorphic"),
            Distinction::Unresolved => write!(f, "unresolved"),
        }
    }
}

/// Full derivation for one n: both p₁ coefficients, the shared divisibility
/// c₂, both quotient orders, and the verdict, with a human-readable trace.
#[derive(Debug, Clone)]
pub struct CpPairVerdict {
    pub n: u32,
    pub p1_biquotient: i64,
    pub p1_grassmannian: i64,
    pub c2: u64,
    pub order_biquotient: u64,
    pub order_grassmannian: u64,
    pub distinction: Distinction,
    pub trace: Vec<String>,
}

/// Distinguishes the circle biquotient M from the Grassmannian N (both
/// rational CP^{2n-1}) by the orders of H⁴/⟨p₁⟩.
pub fn distinguish_cp_pair(n: u32) -> Result<CpPairVerdict, CharClassError> {
    let rel_m = circle_quotient_tangent_relation(n)?;
    let rel_n = grassmannian_tangent_relation(n)?;
    let p1_m = solve_p1_tangent(&rel_m)?;
    let p1_n = solve_p1_tangent(&rel_n)?;
    let (_, ring) = circle_quotient_ring(n)?;
    let c2 = ring.c(2).expect("top power 2n-1 >= 2");
    let order_m = quotient_order(p1_m, &ring)?;
    let order_n = quotient_order(p1_n, &ring)?;
    let distinction = if order_m != order_n {
        Distinction::NotHomeomorphic
    } else {
        Distinction::Unresolved
    };
    let trace = vec![
        format!("M: {rel_m}"),
        format!("p1(TM) = {p1_m} a_M^2"),
        format!("N: {rel_n}"),
        format!("p1(TN) = {p1_n} a_N^2"),
        format!("both rings have {ring}; a^2 = {c2} g_4"),
        format!("|H^4(M)/<p1(TM)>| = {p1_m}*{c2} = {order_m}"),
        format!("|H^4(N)/<p1(TN)>| = {p1_n}*{c2} = {order_n}"),
        format!(
            "orders {order_m} and {order_n} {}: {distinction}",
            if order_m != order_n { "differ" } else { "agree" }
        ),
    ];
    Ok(CpPairVerdict {
        n,
        p1_biquotient: p1_m,
        p1_grassmannian: p1_n,
        c2,
        order_biquotient: order_m,
        order_grassmannian: order_n,
        distinction,
        trace,
    })
}

/// Weight multiplicities of a circle representation: m₀ trivial summands plus
/// m_w planes rotated at speed w.  Zero multiplicities are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDecomposition {
    multiplicities: BTreeMap<u32, u32>,
}

impl WeightDecomposition {
    pub fn multiplicity(&self, weight: u32) -> u32 {
        self.multiplicities.get(&weight).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.multiplicities.iter().map(|(w, m)| (*w, *m))
    }

    /// Dimension of the representation: m₀ + 2·Σ_{w≥1} m_w.
    pub fn rank(&self) -> u32 {
        self.multiplicities
            .iter()
            .map(|(w, m)| if *w == 0 { *m } else { 2 * m })
            .sum()
    }
}

impl fmt::Display for WeightDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (w, m)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}: {m}")?;
        }
        write!(f, "}}")
    }
}

const WEIGHT_TOL: f64 = 1e-9;

/// Recovers weight multiplicities from a sampled character by discrete
/// Fourier analysis: m₀ is the mean of χ, m_w the mean of χ(t)cos(wt), over a
/// uniform grid on [0, 2π).  The rounded values must reproduce the samples
/// and account for the stated rank.
pub fn weight_decompose<F: Fn(f64) -> f64>(
    character: F,
    rank: u32,
    max_weight: u32,
    samples: usize,
) -> Result<WeightDecomposition, CharClassError> {
    let needed = 4 * max_weight as usize + 1;
    if samples < needed {
        return Err(CharClassError::TooFewSamples {
            samples,
            max_weight,
            needed,
        });
    }
    let grid: Vec<f64> = (0..samples)
        .map(|i| 2.0 * std::f64::consts::PI * i as f64 / samples as f64)
        .collect();
    let values: Vec<f64> = grid.iter().map(|&t| character(t)).collect();
    let mean = |weighted: &dyn Fn(usize) -> f64| -> f64 {
        (0..samples).map(weighted).sum::<f64>() / samples as f64
    };
    let mut multiplicities = BTreeMap::new();
    for w in 0..=max_weight {
        let raw = if w == 0 {
            mean(&|i| values[i])
        } else {
            mean(&|i| values[i] * (f64::from(w) * grid[i]).cos())
        };
        let rounded = raw.round();
        if (raw - rounded).abs() > WEIGHT_TOL || rounded < 0.0 {
            return Err(CharClassError::BadMultiplicity {
                weight: w,
                value: raw,
            });
        }
        if rounded > 0.0 {
            multiplicities.insert(w, rounded as u32);
        }
    }
    let decomposition = WeightDecomposition { multiplicities };
    let residual = grid
        .iter()
        .zip(&values)
        .map(|(&t, &v)| {
            let rebuilt: f64 = decomposition
                .iter()
                .map(|(w, m)| {
                    if w == 0 {
                        f64::from(m)
                    } else {
                        2.0 * f64::from(m) * (f64::from(w) * t).cos()
                    }
                })
                .sum();
            (rebuilt - v).abs()
        })
        .fold(0.0, f64::max);
    if residual > WEIGHT_TOL {
        return Err(CharClassError::Reconstruction {
            residual,
            max_weight,
        });
    }
    if decomposition.rank() != rank {
        return Err(CharClassError::RankMismatch {
            expected: rank,
            found: decomposition.rank(),
        });
    }
    Ok(decomposition)
}

/// The rotation family on the rank-3 normal bundle of the Grassmannian
/// construction, written out as an explicit orthogonal matrix.
pub fn normal_action_matrix(t: f64) -> [[f64; 3]; 3] {
    let (s, c) = t.sin_cos();
    let r2 = std::f64::consts::SQRT_2;
    [
        [c * c, s * s, r2 * s * c],
        [s * s, c * c, -r2 * s * c],
        [-r2 * s * c, r2 * s * c, c * c - s * s],
    ]
}

/// Trace of the normal-action matrix, measured rather than simplified.
pub fn normal_action_character(t: f64) -> f64 {
    let m = normal_action_matrix(t);
    m[0][0] + m[1][1] + m[2][2]
}

/// The circle acts trivially on the rank-3 normal bundle of the biquotient M.
pub fn trivial_normal_character(_t: f64) -> f64 {
    3.0
}

/// Standard rotation of the plane.
pub fn standard_rotation_character(t: f64) -> f64 {
    2.0 * t.cos()
}

/// Geodesic-flow action on R^{4n+2}: 2n+1 copies of the standard rotation.
pub fn geodesic_flow_character(n: u32) -> impl Fn(f64) -> f64 {
    move |t| f64::from(2 * n + 1) * 2.0 * t.cos()
}
