//! Rational homotopy bookkeeping for the quotient candidates.
//!
//! The spaces of interest have rational cohomology generated by one element:
//! either an odd sphere S^d or a truncated polynomial algebra Q[a]/a^{m+1}
//! with deg a even (complex or quaternionic projective space for deg 2 or 4).
//! For a quotient G/H (or a biquotient with the same rational data) the only
//! obstruction bookkeeping needed here is a multiset balance between the odd
//! sphere dimensions of G, those of H, and the generators contributed by the
//! quotient type.

use std::fmt;

use thiserror::Error;

use crate::lie_catalog::SphereMultiset;

#[derive(Debug, Error)]
pub enum RationalModelError {
    #[error("odd sphere dimension must be odd and at least 3, got {0}")]
    BadSphereDimension(u32),
    #[error("truncated generator degree must be even and at least 2, got {0}")]
    BadGeneratorDegree(u32),
    #[error("truncation power must be at least 1")]
    BadTruncationPower,
    #[error("multiset entry {0} is even; only odd entries (1 for circle factors) are allowed")]
    EvenEntry(u32),
    #[error("embedding index must be nonzero")]
    ZeroIndex,
}

/// Rational homotopy type of a space whose rational cohomology has one
/// generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RationalType {
    /// S^d with d odd.
    OddSphere { dim: u32 },
    /// Q[a]/a^{power+1}, deg a = gen_degree (even).  gen_degree 2 is CP^power,
    /// gen_degree 4 is HP^power.
    Truncated { gen_degree: u32, power: u32 },
}

impl RationalType {
    pub fn odd_sphere(dim: u32) -> Result<Self, RationalModelError> {
        if dim % 2 == 0 || dim < 3 {
            return Err(RationalModelError::BadSphereDimension(dim));
        }
        Ok(RationalType::OddSphere { dim })
    }

    pub fn truncated(gen_degree: u32, power: u32) -> Result<Self, RationalModelError> {
        if gen_degree % 2 == 1 || gen_degree < 2 {
            return Err(RationalModelError::BadGeneratorDegree(gen_degree));
        }
        if power == 0 {
            return Err(RationalModelError::BadTruncationPower);
        }
        Ok(RationalType::Truncated { gen_degree, power })
    }

    /// Dimension of the underlying manifold.
    pub fn dimension(&self) -> u32 {
        match *self {
            RationalType::OddSphere { dim } => dim,
            RationalType::Truncated { gen_degree, power } => gen_degree * power,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            RationalType::OddSphere { dim } => format!("S^{dim}"),
            RationalType::Truncated { gen_degree: 2, power } => format!("CP^{power}"),
            RationalType::Truncated { gen_degree: 4, power } => format!("HP^{power}"),
            RationalType::Truncated { gen_degree, power } => {
                format!("Q[a_{gen_degree}]/a^{}", power + 1)
            }
        }
    }
}

impl fmt::Display for RationalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Generator of a minimal Sullivan model; `differential_power` records
/// dy = x^k for the closing generator, None for a cocycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModelGenerator {
    pub degree: u32,
    pub differential_power: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalModel {
    pub generators: Vec<ModelGenerator>,
}

/// Minimal model of the rational type: one odd cocycle for a sphere; for a
/// truncated algebra, the even generator x in degree deg a plus the odd
/// generator y with dy = x^{power+1} killing the truncation.
pub fn minimal_model(t: &RationalType) -> MinimalModel {
    let generators = match *t {
        RationalType::OddSphere { dim } => vec![ModelGenerator {
            degree: dim,
            differential_power: None,
        }],
        RationalType::Truncated { gen_degree, power } => vec![
            ModelGenerator {
                degree: gen_degree,
                differential_power: None,
            },
            ModelGenerator {
                degree: (power + 1) * gen_degree - 1,
                differential_power: Some(power + 1),
            },
        ],
    };
    MinimalModel { generators }
}

fn check_odd_entries(m: &SphereMultiset) -> Result<(), RationalModelError> {
    for &d in m.dims() {
        if d % 2 == 0 {
            return Err(RationalModelError::EvenEntry(d));
        }
    }
    Ok(())
}

/// Rank/dimension balance for a quotient of rational type `t` with total
/// space spheres `g` and subgroup spheres `h` (circle factors enter `h` as
/// entries equal to 1).
///
/// For S^d:             g = h + {d}.
/// For Q[a]/a^{m+1}:    g + {deg a - 1} = h + {(m+1)·deg a - 1},
/// i.e. the subgroup side must absorb one even generator's worth of spheres
/// and emit the closing odd degree.
pub fn rational_balance(
    g: &SphereMultiset,
    h: &SphereMultiset,
    t: &RationalType,
) -> Result<bool, RationalModelError> {
    check_odd_entries(g)?;
    check_odd_entries(h)?;
    Ok(match *t {
        RationalType::OddSphere { dim } => *g == h.with(dim),
        RationalType::Truncated { gen_degree, power } => {
            g.with(gen_degree - 1) == h.with((power + 1) * gen_degree - 1)
        }
    })
}

/// Homotopy class of a rank-one subgroup embedding, normalized to its
/// absolute value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EmbeddingIndex(u32);

impl EmbeddingIndex {
    pub fn new(k: i64) -> Result<Self, RationalModelError> {
        if k == 0 {
            return Err(RationalModelError::ZeroIndex);
        }
        Ok(EmbeddingIndex(k.unsigned_abs() as u32))
    }

    pub fn value(&self) -> u32 {
        self.0
    }
}

impl fmt::Display for EmbeddingIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Order of pi_3 of the quotient by an index-k rank-one subgroup: the cyclic
/// group Z_k (1 means trivial).
pub fn pi3_of_quotient(k: EmbeddingIndex) -> u32 {
    k.value()
}

/// Order of the image obstruction for a two-sided (biquotient) action with
/// side indices k_minus, k_plus: |k_minus - k_plus|.  A value of 1 certifies
/// an isomorphism on pi_3; 0 means the two sides cancel.
pub fn fiber_pi3_map(k_minus: u32, k_plus: u32) -> u32 {
    k_minus.abs_diff(k_plus)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(v: &[u32]) -> SphereMultiset {
        SphereMultiset::new(v.to_vec())
    }

    #[test]
    fn rational_type_validation() {
        assert!(RationalType::odd_sphere(7).is_ok());
        assert!(RationalType::odd_sphere(4).is_err());
        assert!(RationalType::odd_sphere(1).is_err());
        assert!(RationalType::truncated(2, 5).is_ok());
        assert!(RationalType::truncated(3, 5).is_err());
        assert!(RationalType::truncated(4, 0).is_err());
    }

    #[test]
    fn labels() {
        assert_eq!(RationalType::odd_sphere(11).unwrap().label(), "S^11");
        assert_eq!(RationalType::truncated(2, 5).unwrap().label(), "CP^5");
        assert_eq!(RationalType::truncated(4, 2).unwrap().label(), "HP^2");
        assert_eq!(RationalType::truncated(6, 1).unwrap().label(), "Q[a_6]/a^2");
    }

    #[test]
    fn dimensions() {
        assert_eq!(RationalType::odd_sphere(7).unwrap().dimension(), 7);
        assert_eq!(RationalType::truncated(2, 5).unwrap().dimension(), 10);
        assert_eq!(RationalType::truncated(4, 3).unwrap().dimension(), 12);
    }

    #[test]
    fn minimal_models() {
        let s7 = minimal_model(&RationalType::odd_sphere(7).unwrap());
        assert_eq!(
            s7.generators,
            vec![ModelGenerator {
                degree: 7,
                differential_power: None
            }]
        );
        // CP^5: x in degree 2, y in degree 11 with dy = x^6.
        let cp5 = minimal_model(&RationalType::truncated(2, 5).unwrap());
        assert_eq!(cp5.generators[0].degree, 2);
        assert_eq!(cp5.generators[1].degree, 11);
        assert_eq!(cp5.generators[1].differential_power, Some(6));
        // S^6 as the 1-truncated degree-6 algebra: generators 6 and 11.
        let s6 = minimal_model(&RationalType::truncated(6, 1).unwrap());
        assert_eq!(s6.generators[0].degree, 6);
        assert_eq!(s6.generators[1].degree, 11);
    }

    #[test]
    fn closing_generator_degree_is_odd() {
        for gen_degree in [2u32, 4, 6, 8] {
            for power in 1..6 {
                let t = RationalType::truncated(gen_degree, power).unwrap();
                let m = minimal_model(&t);
                let y = m.generators.last().unwrap();
                assert_eq!(y.degree % 2, 1);
                // deg y = dim + deg a - 1
                assert_eq!(y.degree, t.dimension() + gen_degree - 1);
            }
        }
    }

    #[test]
    fn balance_examples() {
        // G2 / SU(2), S^11: {3,11} = {3} + {11}
        let t = RationalType::odd_sphere(11).unwrap();
        assert!(rational_balance(&ms(&[3, 11]), &ms(&[3]), &t).unwrap());
        // Sp(2) / Sp(1), S^7
        let t = RationalType::odd_sphere(7).unwrap();
        assert!(rational_balance(&ms(&[3, 7]), &ms(&[3]), &t).unwrap());
        // G2 / U(2), CP^5: {3,11} + {1} = {1,3} + {11}
        let t = RationalType::truncated(2, 5).unwrap();
        assert!(rational_balance(&ms(&[3, 11]), &ms(&[1, 3]), &t).unwrap());
        // G2 / SO(4), HP^2: {3,3,11} = {3,3,11}
        let t = RationalType::truncated(4, 2).unwrap();
        assert!(rational_balance(&ms(&[3, 11]), &ms(&[3, 3]), &t).unwrap());
        // G2 / SU(3) carries the rational structure of S^6 = Q[a_6]/a^2:
        // {3,11} + {5} = {3,5} + {11}
        let t = RationalType::truncated(6, 1).unwrap();
        assert!(rational_balance(&ms(&[3, 11]), &ms(&[3, 5]), &t).unwrap());
        // SO(4n+1) spheres vs SO(4n-1) x SU(2) for HP^{2n-1}, n = 2:
        // B_4 = {3,7,11,15}, h = B_3 + {3} = {3,3,7,11}; type HP^3 = Q[a_4]/a^4:
        // {3,7,11,15} + {3} = {3,3,7,11} + {15}
        let t = RationalType::truncated(4, 3).unwrap();
        assert!(rational_balance(&ms(&[3, 7, 11, 15]), &ms(&[3, 3, 7, 11]), &t).unwrap());
    }

    #[test]
    fn balance_negatives() {
        let s7 = RationalType::odd_sphere(7).unwrap();
        assert!(!rational_balance(&ms(&[3, 7]), &ms(&[5]), &s7).unwrap());
        assert!(!rational_balance(&ms(&[3, 7]), &ms(&[3, 7]), &s7).unwrap());
        let cp2 = RationalType::truncated(2, 2).unwrap();
        assert!(!rational_balance(&ms(&[3, 7]), &ms(&[1, 3]), &cp2).unwrap());
        // {3,11} + {1} = {1,3,11} but {3,3} + {11} = {3,3,11}: not CP^5 data.
        let cp5 = RationalType::truncated(2, 5).unwrap();
        assert!(!rational_balance(&ms(&[3, 11]), &ms(&[3, 3]), &cp5).unwrap());
    }

    #[test]
    fn balance_rejects_even_entries() {
        let s7 = RationalType::odd_sphere(7).unwrap();
        assert!(matches!(
            rational_balance(&ms(&[3, 4]), &ms(&[3]), &s7),
            Err(RationalModelError::EvenEntry(4))
        ));
        assert!(matches!(
            rational_balance(&ms(&[3, 7]), &ms(&[2]), &s7),
            Err(RationalModelError::EvenEntry(2))
        ));
    }

    #[test]
    fn balance_invariant_under_common_factor() {
        // Appending the same entry to both sides never changes the verdict.
        let cases = [
            (ms(&[3, 11]), ms(&[3]), RationalType::odd_sphere(11).unwrap()),
            (ms(&[3, 7]), ms(&[3, 5]), RationalType::odd_sphere(7).unwrap()),
            (ms(&[3, 11]), ms(&[1, 3]), RationalType::truncated(2, 5).unwrap()),
        ];
        for (g, h, t) in cases {
            let before = rational_balance(&g, &h, &t).unwrap();
            for extra in [1u32, 3, 9, 11] {
                let after = rational_balance(&g.with(extra), &h.with(extra), &t).unwrap();
                assert_eq!(before, after, "extra {extra} flipped the verdict");
            }
        }
    }

    #[test]
    fn embedding_indices_and_pi3() {
        assert_eq!(EmbeddingIndex::new(-3).unwrap().value(), 3);
        assert!(EmbeddingIndex::new(0).is_err());
        assert_eq!(pi3_of_quotient(EmbeddingIndex::new(10).unwrap()), 10);
        assert_eq!(pi3_of_quotient(EmbeddingIndex::new(28).unwrap()), 28);
        assert_eq!(pi3_of_quotient(EmbeddingIndex::new(1).unwrap()), 1);
    }

    #[test]
    fn fiber_pi3_examples() {
        // Two-sided SU(2) action with side indices 3 and 4: isomorphism on pi_3.
        assert_eq!(fiber_pi3_map(3, 4), 1);
        assert_eq!(fiber_pi3_map(2, 1), 1);
        assert_eq!(fiber_pi3_map(5, 5), 0);
        assert_eq!(fiber_pi3_map(0, 7), 7);
    }
}
