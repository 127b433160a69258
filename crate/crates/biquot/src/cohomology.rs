//! Integral cohomology of the specific quotient spaces, in closed form, with
//! a Gysin-sequence consistency checker certifying each formula.
//!
//! The checker works degree by degree on the long exact sequence of a sphere
//! bundle S^r → E → B,
//!
//! ```text
//! ... → H^{k-r-1}(B) --∪e--> H^k(B) → H^k(E) → H^{k-r}(B) --∪e--> H^{k+1}(B) → ...
//! ```
//!
//! so H^k(E) must be an extension of ker(∪e) by coker(∪e).  Extensions are
//! not resolved here (the closed forms already incorporate the ring-structure
//! arguments that settle them); the checker compares free ranks and torsion
//! orders, which are extension-invariant.
//!
//! Cup product with the Euler class is multiplication by an integer once a
//! generator is chosen in each degree.  On a base whose ring is a truncated
//! polynomial algebra with divisibility profile c_k (a^k = c_k · generator),
//! the multiplier from degree k·d to (k+s)·d is e·c_{k+s}/c_k; without a
//! profile only the map out of degree 0 is determined, and any other nonzero
//! map is reported as an unsupported shape rather than guessed.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CohomologyError {
    #[error("n = {n} not allowed: {reason}")]
    Domain { n: u32, reason: String },
    #[error("torsion order {0} is not a cyclic order >= 2")]
    BadTorsionOrder(u64),
    #[error("degree {degree} exceeds top degree {top}")]
    DegreeAboveTop { degree: u32, top: u32 },
    #[error("degree 0 must be exactly Z for a connected space")]
    NotConnected,
    #[error("free ranks are not symmetric about the middle (degree {degree}): not the cohomology of a closed oriented manifold")]
    NotClosedOriented { degree: u32 },
    #[error("bad divisibility profile: {0}")]
    BadDivisibility(String),
    #[error("euler coefficient given but H^{degree}(base) does not have free rank 1")]
    EulerNeedsFreeRankOne { degree: u32 },
    #[error("fiber dimension must be >= 1")]
    BadFiberDimension,
    #[error("base does not match its divisibility ring: {0}")]
    RingMismatch(String),
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
}

fn domain(n: u32, reason: &str) -> CohomologyError {
    CohomologyError::Domain {
        n,
        reason: reason.to_string(),
    }
}

/// One graded piece: a free part plus finite cyclic summands.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Homogeneous {
    pub free_rank: u32,
    pub torsion: Vec<u64>,
}

impl Homogeneous {
    pub fn new(free_rank: u32, mut torsion: Vec<u64>) -> Result<Self, CohomologyError> {
        for &t in &torsion {
            if t < 2 {
                return Err(CohomologyError::BadTorsionOrder(t));
            }
        }
        torsion.sort_unstable();
        Ok(Homogeneous { free_rank, torsion })
    }

    pub fn zero() -> Self {
        Homogeneous::default()
    }

    pub fn free(rank: u32) -> Self {
        Homogeneous {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        Homogeneous {
            free_rank: 0,
            torsion: vec![order],
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Product of the cyclic orders (1 for torsion-free).
    pub fn torsion_order(&self) -> u64 {
        self.torsion.iter().product()
    }
}

impl fmt::Display for Homogeneous {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, [", self.free_rank)?;
        for (i, t) in self.torsion.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "]")
    }
}

/// Degreewise finitely generated abelian groups up to a top degree (the
/// manifold dimension).  Degree 0 is required to be Z: everything here is
/// connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAbelianGroup {
    groups: BTreeMap<u32, Homogeneous>,
    top_degree: u32,
}

impl GradedAbelianGroup {
    pub fn new(
        top_degree: u32,
        entries: impl IntoIterator<Item = (u32, Homogeneous)>,
    ) -> Result<Self, CohomologyError> {
        let mut groups = BTreeMap::new();
        for (degree, h) in entries {
            if h.is_trivial() {
                continue;
            }
            if degree > top_degree {
                return Err(CohomologyError::DegreeAboveTop {
                    degree,
                    top: top_degree,
                });
            }
            groups.insert(degree, h);
        }
        if groups.get(&0) != Some(&Homogeneous::free(1)) {
            return Err(CohomologyError::NotConnected);
        }
        Ok(GradedAbelianGroup { groups, top_degree })
    }

    /// {0: Z, d: Z}: the cohomology of S^d (any d >= 1).
    pub fn sphere(d: u32) -> Self {
        GradedAbelianGroup::new(d, [(0, Homogeneous::free(1)), (d, Homogeneous::free(1))])
            .expect("sphere data is valid")
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn group(&self, degree: u32) -> Homogeneous {
        self.groups.get(&degree).cloned().unwrap_or_default()
    }

    /// Nonzero degrees in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &Homogeneous)> {
        self.groups.iter().map(|(d, h)| (*d, h))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .map(|(d, h)| {
                let sign = if d % 2 == 0 { 1 } else { -1 };
                sign * i64::from(h.free_rank)
            })
            .sum()
    }
}

impl fmt::Display for GradedAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, h)) in self.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{d}: {h}")?;
        }
        Ok(())
    }
}

/// Truncated polynomial cohomology ring with recorded divisibility: the k-th
/// power of the degree-`gen_degree` class a equals c_k times the chosen
/// generator of degree k·gen_degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DividedRing {
    gen_degree: u32,
    divisibility: Vec<u64>,
}

impl DividedRing {
    pub fn new(gen_degree: u32, divisibility: Vec<u64>) -> Result<Self, CohomologyError> {
        if gen_degree % 2 != 0 || gen_degree == 0 {
            return Err(CohomologyError::BadDivisibility(format!(
                "generator degree {gen_degree} must be even and positive"
            )));
        }
        if divisibility.first() != Some(&1) {
            return Err(CohomologyError::BadDivisibility(
                "c_1 must be 1 (a is a generator)".to_string(),
            ));
        }
        for w in divisibility.windows(2) {
            if w[0] == 0 || w[1] % w[0] != 0 {
                return Err(CohomologyError::BadDivisibility(format!(
                    "{} does not divide {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(DividedRing {
            gen_degree,
            divisibility,
        })
    }

    pub fn gen_degree(&self) -> u32 {
        self.gen_degree
    }

    pub fn top_power(&self) -> u32 {
        self.divisibility.len() as u32
    }

    /// c_k for 0 <= k <= top_power (c_0 = 1).
    pub fn c(&self, k: u32) -> Option<u64> {
        if k == 0 {
            Some(1)
        } else {
            self.divisibility.get(k as usize - 1).copied()
        }
    }

    pub fn divisibility(&self) -> &[u64] {
        &self.divisibility
    }

    /// The underlying graded group: Z in each multiple of gen_degree.
    pub fn graded_group(&self) -> GradedAbelianGroup {
        GradedAbelianGroup::new(
            self.gen_degree * self.top_power(),
            (0..=self.top_power()).map(|k| (k * self.gen_degree, Homogeneous::free(1))),
        )
        .expect("ring degrees are valid")
    }
}

impl fmt::Display for DividedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "gen degree {}, top power {}, divisibility: [",
            self.gen_degree,
            self.top_power()
        )?;
        for (i, c) in self.divisibility.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// A sphere bundle S^r → E → B with the Euler class recorded as an integer
/// multiple of the chosen generator of H^{r+1}(B), when that group has free
/// rank 1 (None encodes a zero or undefined Euler class).
#[derive(Debug, Clone)]
pub struct FibrationSpec {
    fiber_dim: u32,
    euler_coeff: Option<i64>,
    base: GradedAbelianGroup,
    base_ring: Option<DividedRing>,
    total: GradedAbelianGroup,
}

impl FibrationSpec {
    pub fn new(
        fiber_dim: u32,
        euler_coeff: Option<i64>,
        base: GradedAbelianGroup,
        base_ring: Option<DividedRing>,
        total: GradedAbelianGroup,
    ) -> Result<Self, CohomologyError> {
        if fiber_dim < 1 {
            return Err(CohomologyError::BadFiberDimension);
        }
        if let Some(ring) = &base_ring {
            if ring.graded_group() != base {
                return Err(CohomologyError::RingMismatch(format!(
                    "ring spans degrees 0..{} step {}, base disagrees",
                    ring.gen_degree * ring.top_power(),
                    ring.gen_degree
                )));
            }
        }
        if euler_coeff.is_some() && base.group(fiber_dim + 1).free_rank != 1 {
            return Err(CohomologyError::EulerNeedsFreeRankOne {
                degree: fiber_dim + 1,
            });
        }
        Ok(FibrationSpec {
            fiber_dim,
            euler_coeff,
            base,
            base_ring,
            total,
        })
    }

    pub fn fiber_dim(&self) -> u32 {
        self.fiber_dim
    }

    pub fn base(&self) -> &GradedAbelianGroup {
        &self.base
    }

    pub fn total(&self) -> &GradedAbelianGroup {
        &self.total
    }

    pub fn describe(&self) -> String {
        format!(
            "S^{} bundle, euler {}",
            self.fiber_dim,
            match self.euler_coeff {
                Some(e) => e.to_string(),
                None => "0".to_string(),
            }
        )
    }

    /// Multiplier of cup-with-Euler-class from degree j, or None for the zero
    /// map.  Errors when the map is nonzero but not determined by the data.
    fn cup_multiplier(&self, j: u32) -> Result<Option<i64>, CohomologyError> {
        let target_degree = j + self.fiber_dim + 1;
        let source = self.base.group(j);
        let target = self.base.group(target_degree);
        if source.is_trivial() || target.is_trivial() {
            return Ok(None);
        }
        let e = match self.euler_coeff {
            None | Some(0) => return Ok(None),
            Some(e) => e,
        };
        let shape_ok = |h: &Homogeneous| h.free_rank == 1 && h.torsion.is_empty();
        if !shape_ok(&source) || !shape_ok(&target) {
            return Err(CohomologyError::UnsupportedShape(format!(
                "cup product H^{j} -> H^{target_degree} between groups that are not both Z"
            )));
        }
        match &self.base_ring {
            Some(ring) => {
                let d = ring.gen_degree();
                if j % d != 0 || (self.fiber_dim + 1) % d != 0 {
                    return Err(CohomologyError::UnsupportedShape(format!(
                        "degrees {j} and {} not multiples of the ring generator degree {d}",
                        self.fiber_dim + 1
                    )));
                }
                let k = j / d;
                let s = (self.fiber_dim + 1) / d;
                let (c_from, c_to) = match (ring.c(k), ring.c(k + s)) {
                    (Some(a), Some(b)) => (a, b),
                    _ => {
                        return Err(CohomologyError::UnsupportedShape(format!(
                            "power {} outside the ring truncation",
                            k + s
                        )))
                    }
                };
                // Divisibility c_k | c_{k+s} makes this exact.
                Ok(Some(e * (c_to / c_from) as i64))
            }
            None => {
                if j == 0 {
                    Ok(Some(e))
                } else {
                    Err(CohomologyError::UnsupportedShape(format!(
                        "nonzero cup product out of degree {j} needs a divisibility profile"
                    )))
                }
            }
        }
    }

    /// Kernel of cup-with-e out of degree j.
    fn cup_kernel(&self, j: u32) -> Result<Homogeneous, CohomologyError> {
        match self.cup_multiplier(j)? {
            None => Ok(self.base.group(j)),
            // Nonzero multiplication on Z is injective.
            Some(_) => Ok(Homogeneous::zero()),
        }
    }

    /// Cokernel of cup-with-e into degree k (from degree k - fiber_dim - 1).
    fn cup_cokernel(&self, k: u32) -> Result<Homogeneous, CohomologyError> {
        let Some(j) = k.checked_sub(self.fiber_dim + 1) else {
            return Ok(self.base.group(k));
        };
        match self.cup_multiplier(j)? {
            None => Ok(self.base.group(k)),
            Some(m) => {
                let order = m.unsigned_abs();
                if order == 1 {
                    Ok(Homogeneous::zero())
                } else {
                    Ok(Homogeneous::cyclic(order))
                }
            }
        }
    }
}

/// Outcome of the exactness check: pass, or the first failing degree with the
/// counts that disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GysinOutcome {
    pub pass: bool,
    pub failure: Option<GysinMismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GysinMismatch {
    pub degree: u32,
    pub expected_rank: u32,
    pub expected_torsion_order: u64,
    pub found_rank: u32,
    pub found_torsion_order: u64,
}

impl fmt::Display for GysinMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "degree {}: exactness needs rank {} and torsion order {}, total space has rank {} and torsion order {}",
            self.degree,
            self.expected_rank,
            self.expected_torsion_order,
            self.found_rank,
            self.found_torsion_order
        )
    }
}

/// Checks that the stated total space is degreewise consistent with the long
/// exact Gysin sequence of the stated base and Euler class.
pub fn check_gysin_consistency(spec: &FibrationSpec) -> Result<GysinOutcome, CohomologyError> {
    let top = spec
        .total
        .top_degree()
        .max(spec.base.top_degree() + spec.fiber_dim + 1);
    for k in 0..=top {
        let coker = spec.cup_cokernel(k)?;
        let kernel = match k.checked_sub(spec.fiber_dim) {
            Some(j) => spec.cup_kernel(j)?,
            None => Homogeneous::zero(),
        };
        let expected_rank = coker.free_rank + kernel.free_rank;
        let expected_torsion_order = coker.torsion_order() * kernel.torsion_order();
        let found = spec.total.group(k);
        if found.free_rank != expected_rank || found.torsion_order() != expected_torsion_order {
            return Ok(GysinOutcome {
                pass: false,
                failure: Some(GysinMismatch {
                    degree: k,
                    expected_rank,
                    expected_torsion_order,
                    found_rank: found.free_rank,
                    found_torsion_order: found.torsion_order(),
                }),
            });
        }
    }
    Ok(GysinOutcome {
        pass: true,
        failure: None,
    })
}

/// H^*(T¹S^{2n}): Z in degrees 0 and 4n-1, Z/2 in degree 2n.  The n = 1 case
/// (T¹S² = RP³) is admitted only when `allow_n1` is set.
pub fn unit_tangent_cohomology(
    n: u32,
    allow_n1: bool,
) -> Result<GradedAbelianGroup, CohomologyError> {
    if n == 0 {
        return Err(domain(0, "the base sphere is empty-dimensional"));
    }
    if n == 1 && !allow_n1 {
        return Err(domain(1, "n >= 2 required (pass the n=1 flag to override)"));
    }
    GradedAbelianGroup::new(
        4 * n - 1,
        [
            (0, Homogeneous::free(1)),
            (2 * n, Homogeneous::cyclic(2)),
            (4 * n - 1, Homogeneous::free(1)),
        ],
    )
}

fn half_doubled_profile(n: u32) -> Vec<u64> {
    // c_k = 1 below the middle power n, then 2 up to the top power 2n-1.
    (1..=2 * n - 1).map(|k| if k < n { 1 } else { 2 }).collect()
}

/// Common cohomology of the two rational CP^{2n-1} quotients of T¹S^{2n}
/// (the circle biquotient and the oriented 2-plane Grassmannian): Z in even
/// degrees 0..4n-2, with a^k twice a generator from the middle power on.
pub fn circle_quotient_ring(n: u32) -> Result<(GradedAbelianGroup, DividedRing), CohomologyError> {
    if n < 2 {
        return Err(domain(n, "n >= 2 required"));
    }
    let ring = DividedRing::new(2, half_doubled_profile(n))?;
    Ok((ring.graded_group(), ring))
}

/// Cohomology of the rational HP^{2n-1} quotient of T¹S^{4n} by the Hopf
/// SU(2): Z in degrees 4k, k = 0..2n-1, same divisibility pattern in the
/// degree-4 generator.
pub fn quaternionic_quotient_ring(
    n: u32,
) -> Result<(GradedAbelianGroup, DividedRing), CohomologyError> {
    if n < 2 {
        return Err(domain(n, "n >= 2 required"));
    }
    let ring = DividedRing::new(4, half_doubled_profile(n))?;
    Ok((ring.graded_group(), ring))
}

/// H^*(G2) as a stored constant: Z in degrees 0, 3, 11, 14 and Z/2 in
/// degrees 6 and 9.
pub fn g2_group_cohomology() -> GradedAbelianGroup {
    GradedAbelianGroup::new(
        14,
        [
            (0, Homogeneous::free(1)),
            (3, Homogeneous::free(1)),
            (6, Homogeneous::cyclic(2)),
            (9, Homogeneous::cyclic(2)),
            (11, Homogeneous::free(1)),
            (14, Homogeneous::free(1)),
        ],
    )
    .expect("constant is valid")
}

/// Cohomology and homology of the 11-dimensional two-sided SU(2) quotient of
/// G2: the space is 4-connected with H^6 = Z/2, and homology follows by
/// Poincaré duality.
pub fn g2_su2_cohomology() -> (GradedAbelianGroup, GradedAbelianGroup) {
    let cohomology = GradedAbelianGroup::new(
        11,
        [
            (0, Homogeneous::free(1)),
            (6, Homogeneous::cyclic(2)),
            (11, Homogeneous::free(1)),
        ],
    )
    .expect("constant is valid");
    let homology = poincare_dual(&cohomology).expect("closed oriented");
    (cohomology, homology)
}

/// Homology of a closed oriented manifold from its cohomology: free ranks
/// carry over degreewise, torsion shifts down by one (universal
/// coefficients: torsion of H_k is the torsion of H^{k+1}).
pub fn poincare_dual(h: &GradedAbelianGroup) -> Result<GradedAbelianGroup, CohomologyError> {
    let n = h.top_degree();
    for k in 0..=n {
        if h.group(k).free_rank != h.group(n - k).free_rank {
            return Err(CohomologyError::NotClosedOriented { degree: k });
        }
    }
    let entries = (0..=n).map(|k| {
        let free_rank = h.group(k).free_rank;
        let torsion = if k < n { h.group(k + 1).torsion } else { Vec::new() };
        (k, Homogeneous { free_rank, torsion })
    });
    GradedAbelianGroup::new(n, entries)
}

/// S^{2n-1} → T¹S^{2n} → S^{2n} with Euler coefficient 2 (the Euler
/// characteristic of the even sphere), validated by the consistency checker.
pub fn unit_tangent_fibration(n: u32, allow_n1: bool) -> Result<FibrationSpec, CohomologyError> {
    let total = unit_tangent_cohomology(n, allow_n1)?;
    FibrationSpec::new(
        2 * n - 1,
        Some(2),
        GradedAbelianGroup::sphere(2 * n),
        None,
        total,
    )
}

/// S¹ → T¹S^{2n} → M over the rational CP^{2n-1} ring; the Euler class is a
/// generator of H².
pub fn circle_quotient_fibration(n: u32) -> Result<FibrationSpec, CohomologyError> {
    let (base, ring) = circle_quotient_ring(n)?;
    let total = unit_tangent_cohomology(n, false)?;
    FibrationSpec::new(1, Some(1), base, Some(ring), total)
}

/// S³ → T¹S^{4n} → M over the rational HP^{2n-1} ring; the Euler class is a
/// generator of H⁴.
pub fn quaternionic_quotient_fibration(n: u32) -> Result<FibrationSpec, CohomologyError> {
    let (base, ring) = quaternionic_quotient_ring(n)?;
    let total = unit_tangent_cohomology(2 * n, false)?;
    FibrationSpec::new(3, Some(1), base, Some(ring), total)
}

/// S³ → G2 → G2//SU(2); H⁴ of the base vanishes, so the Euler class is zero
/// and the sequence splits degreewise.
pub fn g2_su2_fibration() -> FibrationSpec {
    let (base, _) = g2_su2_cohomology();
    FibrationSpec::new(3, None, base, None, g2_group_cohomology())
        .expect("constant data is valid")
}
