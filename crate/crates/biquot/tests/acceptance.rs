//! Acceptance battery: one test per criterion, each printing a single
//! PASS/FAIL line (visible with `--nocapture`).  Expected values are frozen
//! here as literals, independent of the shipped data files.

use std::panic::AssertUnwindSafe;
use std::time::{Duration, Instant};

use biquot::cohomology::{
    check_gysin_consistency, circle_quotient_fibration, circle_quotient_ring, g2_su2_cohomology,
    g2_su2_fibration, poincare_dual, quaternionic_quotient_fibration, quaternionic_quotient_ring,
    unit_tangent_cohomology, unit_tangent_fibration, FibrationSpec, GradedAbelianGroup,
    Homogeneous,
};
use biquot::char_class::{
    circle_quotient_tangent_relation, distinguish_cp_pair, geodesic_flow_character,
    grassmannian_tangent_relation, normal_action_character, solve_p1_tangent,
    trivial_normal_character, weight_decompose, Distinction,
};
use biquot::enumeration::{
    expected_pair_classes, match_odd_sphere_pairs, rank_needed_for, verify_quotient_rows,
};
use biquot::lie_catalog::{Family, GroupCatalog, SimpleGroup, SphereMultiset};
use biquot::rational_model::{rational_balance, RationalType};
use biquot::tables::CuratedTables;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn criterion(number: u32, name: &str, body: impl FnOnce()) {
    let outcome = std::panic::catch_unwind(AssertUnwindSafe(body));
    match outcome {
        Ok(()) => println!("acceptance {number} {name}: PASS"),
        Err(e) => {
            println!("acceptance {number} {name}: FAIL");
            std::panic::resume_unwind(e);
        }
    }
}

fn group(code: &str) -> SimpleGroup {
    if let Some(family) = Family::from_symbol(code) {
        let rank = family.fixed_rank().expect("exceptional symbol");
        return SimpleGroup::new(family, rank).expect("valid group");
    }
    let (sym, rank) = code.split_at(1);
    let family = Family::from_symbol(sym).expect("family symbol");
    SimpleGroup::new(family, rank.parse().expect("rank digits")).expect("valid group")
}

#[test]
fn acceptance_1_sphere_dimension_regression() {
    criterion(1, "sphere dimension regression", || {
        let start = Instant::now();
        let frozen: &[(&str, &[u32])] = &[
            ("A1", &[3]),
            ("A2", &[3, 5]),
            ("A3", &[3, 5, 7]),
            ("A4", &[3, 5, 7, 9]),
            ("A5", &[3, 5, 7, 9, 11]),
            ("A6", &[3, 5, 7, 9, 11, 13]),
            ("A7", &[3, 5, 7, 9, 11, 13, 15]),
            ("A8", &[3, 5, 7, 9, 11, 13, 15, 17]),
            ("A9", &[3, 5, 7, 9, 11, 13, 15, 17, 19]),
            ("B2", &[3, 7]),
            ("B3", &[3, 7, 11]),
            ("B4", &[3, 7, 11, 15]),
            ("B5", &[3, 7, 11, 15, 19]),
            ("B6", &[3, 7, 11, 15, 19, 23]),
            ("B7", &[3, 7, 11, 15, 19, 23, 27]),
            ("B8", &[3, 7, 11, 15, 19, 23, 27, 31]),
            ("B9", &[3, 7, 11, 15, 19, 23, 27, 31, 35]),
            ("C2", &[3, 7]),
            ("C3", &[3, 7, 11]),
            ("C4", &[3, 7, 11, 15]),
            ("C5", &[3, 7, 11, 15, 19]),
            ("C6", &[3, 7, 11, 15, 19, 23]),
            ("C7", &[3, 7, 11, 15, 19, 23, 27]),
            ("C8", &[3, 7, 11, 15, 19, 23, 27, 31]),
            ("C9", &[3, 7, 11, 15, 19, 23, 27, 31, 35]),
            ("D3", &[3, 5, 7]),
            ("D4", &[3, 7, 7, 11]),
            ("D5", &[3, 7, 9, 11, 15]),
            ("D6", &[3, 7, 11, 11, 15, 19]),
            ("D7", &[3, 7, 11, 13, 15, 19, 23]),
            ("D8", &[3, 7, 11, 15, 15, 19, 23, 27]),
            ("D9", &[3, 7, 11, 15, 17, 19, 23, 27, 31]),
            ("G2", &[3, 11]),
            ("F4", &[3, 11, 15, 23]),
            ("E6", &[3, 9, 11, 15, 17, 23]),
            ("E7", &[3, 11, 15, 19, 23, 27, 35]),
            ("E8", &[3, 15, 23, 27, 35, 39, 47, 59]),
        ];
        assert_eq!(frozen.len(), 37);
        for (code, dims) in frozen {
            let g = group(code);
            let computed = g.sphere_dimensions();
            assert_eq!(
                computed,
                SphereMultiset::new(dims.to_vec()),
                "sphere dimensions of {}",
                g.label()
            );
            let sum: u32 = computed.dims().iter().sum();
            assert_eq!(sum, g.dimension(), "dimension sum rule for {}", g.label());
        }
        assert!(start.elapsed() < Duration::from_millis(100), "too slow");
    });
}

#[test]
fn acceptance_2_pair_enumeration() {
    criterion(2, "pair enumeration", || {
        let start = Instant::now();
        // Frozen canonical classes over the rank <= 4 catalog, in output order.
        let low_rank: &[(&str, u32)] = &[
            ("SU(3)/SU(2)", 5),
            ("SO(5)/SU(2)", 7),
            ("G2/SU(2)", 11),
            ("SU(4)/SO(5)", 5),
            ("SU(4)/SU(3)", 7),
            ("SO(7)/G2", 7),
            ("SO(7)/SO(5)", 11),
            ("SU(5)/SU(4)", 9),
            ("SO(9)/SO(7)", 15),
            ("SO(8)/SO(7)", 7),
        ];
        let found = match_odd_sphere_pairs(&GroupCatalog::builtin(4), false);
        let found_pairs: Vec<(String, u32)> = found
            .iter()
            .map(|c| (c.label().to_string(), c.sphere_dim))
            .collect();
        let expected_pairs: Vec<(String, u32)> = low_rank
            .iter()
            .map(|(l, d)| (l.to_string(), *d))
            .collect();
        assert_eq!(found_pairs, expected_pairs);

        // Full rank <= 10 run against the curated list: exact class equality.
        let catalog = GroupCatalog::builtin(10);
        let matched = match_odd_sphere_pairs(&catalog, false);
        let curated = expected_pair_classes(CuratedTables::builtin(), &catalog).unwrap();
        assert_eq!(matched.len(), curated.len(), "class counts differ");
        for cand in &matched {
            assert!(
                curated.contains_key(&cand.class_key()),
                "uncurated match {cand}"
            );
            cand.validate().unwrap();
        }
        assert!(start.elapsed() < Duration::from_secs(1), "too slow");
    });
}

#[test]
fn acceptance_3_quotient_row_verification() {
    criterion(3, "quotient row verification", || {
        let tables = CuratedTables::builtin();
        let catalog = GroupCatalog::builtin(rank_needed_for(10, tables));
        let start = Instant::now();
        let checks = verify_quotient_rows(&catalog, 10).unwrap();
        assert_eq!(checks.len(), 9 + 4 * 9, "9 fixed rows, 4 families over n = 2..10");
        for check in &checks {
            assert!(check.pass(), "row failed: {} — {}", check.row.display_name(), check.detail());
        }
        // The biquotient rows are present and verified.
        for name in [
            "Sp(2)//Sp(1)",
            "G2//SU(2)_34",
            "dSO(2)\\SO(2n+1)/SO(2n-1) [n=10]",
            "dSU(2)\\SO(4n+1)/SO(4n-1) [n=10]",
        ] {
            assert!(
                checks.iter().any(|c| c.row.display_name() == name),
                "missing row {name}"
            );
        }
        assert!(start.elapsed() < Duration::from_millis(100), "too slow");
    });
}

fn graded(top: u32, entries: &[(u32, u32, &[u64])]) -> GradedAbelianGroup {
    GradedAbelianGroup::new(
        top,
        entries
            .iter()
            .map(|(d, f, t)| (*d, Homogeneous::new(*f, t.to_vec()).unwrap())),
    )
    .unwrap()
}

#[test]
fn acceptance_4_quotient_cohomology() {
    criterion(4, "quotient cohomology", || {
        for n in 2..=10u32 {
            let expected = graded(
                4 * n - 1,
                &[(0, 1, &[]), (2 * n, 0, &[2]), (4 * n - 1, 1, &[])],
            );
            assert_eq!(unit_tangent_cohomology(n, false).unwrap(), expected);

            let (h, ring) = circle_quotient_ring(n).unwrap();
            let evens: Vec<(u32, u32, &[u64])> =
                (0..=2 * n - 1).map(|k| (2 * k, 1, &[] as &[u64])).collect();
            assert_eq!(h, graded(4 * n - 2, &evens));
            let profile: Vec<u64> = (1..=2 * n - 1).map(|k| if k < n { 1 } else { 2 }).collect();
            assert_eq!(ring.divisibility(), &profile[..]);

            let (h, ring) = quaternionic_quotient_ring(n).unwrap();
            let quads: Vec<(u32, u32, &[u64])> =
                (0..=2 * n - 1).map(|k| (4 * k, 1, &[] as &[u64])).collect();
            assert_eq!(h, graded(8 * n - 4, &quads));
            assert_eq!(ring.divisibility(), &profile[..]);

            for spec in [
                unit_tangent_fibration(n, false).unwrap(),
                circle_quotient_fibration(n).unwrap(),
                quaternionic_quotient_fibration(n).unwrap(),
            ] {
                let outcome = check_gysin_consistency(&spec).unwrap();
                assert!(outcome.pass, "Gysin failed at n = {n}: {:?}", outcome.failure);
            }
        }
        let (coh, hom) = g2_su2_cohomology();
        assert_eq!(coh, graded(11, &[(0, 1, &[]), (6, 0, &[2]), (11, 1, &[])]));
        assert!(check_gysin_consistency(&g2_su2_fibration()).unwrap().pass);
        let dual = poincare_dual(&coh).unwrap();
        let frozen_homology = graded(11, &[(0, 1, &[]), (5, 0, &[2]), (11, 1, &[])]);
        assert_eq!(dual, frozen_homology);
        assert_eq!(hom, frozen_homology);
    });
}

#[test]
fn acceptance_5_tangent_p1_coefficients() {
    criterion(5, "tangent p1 coefficients", || {
        for n in 2..=50u32 {
            let rel = circle_quotient_tangent_relation(n).unwrap();
            assert_eq!(solve_p1_tangent(&rel).unwrap(), i64::from(2 * n));
            let rel = grassmannian_tangent_relation(n).unwrap();
            assert_eq!(solve_p1_tangent(&rel).unwrap(), i64::from(2 * n) - 3);

            let verdict = distinguish_cp_pair(n).unwrap();
            assert_eq!(verdict.distinction, Distinction::NotHomeomorphic);
            let (_, ring) = circle_quotient_ring(n).unwrap();
            let c2 = ring.c(2).unwrap();
            assert_eq!(verdict.order_biquotient, u64::from(2 * n) * c2);
            assert_eq!(verdict.order_grassmannian, u64::from(2 * n - 3) * c2);
        }
    });
}

#[test]
fn acceptance_6_representation_weights() {
    criterion(6, "representation weights", || {
        let d = weight_decompose(normal_action_character, 3, 4, 32).unwrap();
        assert_eq!(d.iter().collect::<Vec<_>>(), vec![(0, 1), (2, 1)]);
        let d = weight_decompose(trivial_normal_character, 3, 4, 32).unwrap();
        assert_eq!(d.iter().collect::<Vec<_>>(), vec![(0, 3)]);
        for n in 2..=5u32 {
            let d = weight_decompose(geodesic_flow_character(n), 4 * n + 2, 4, 32).unwrap();
            assert_eq!(d.iter().collect::<Vec<_>>(), vec![(1, 2 * n + 1)]);
        }
    });
}

#[test]
fn acceptance_7_property_suites() {
    criterion(7, "property suites", || {
        // (a) Euler characteristics: 0 in odd dimension, 2n for the rings.
        for n in 2..=10u32 {
            assert_eq!(
                unit_tangent_cohomology(n, false).unwrap().euler_characteristic(),
                0
            );
            assert_eq!(
                circle_quotient_ring(n).unwrap().0.euler_characteristic(),
                i64::from(2 * n)
            );
            assert_eq!(
                quaternionic_quotient_ring(n).unwrap().0.euler_characteristic(),
                i64::from(2 * n)
            );
        }
        assert_eq!(g2_su2_cohomology().0.euler_characteristic(), 0);

        // (b) Divisibility monotonicity.
        for n in 2..=12u32 {
            for ring in [
                circle_quotient_ring(n).unwrap().1,
                quaternionic_quotient_ring(n).unwrap().1,
            ] {
                for k in 1..ring.top_power() {
                    let a = ring.c(k).unwrap();
                    let b = ring.c(k + 1).unwrap();
                    assert_eq!(b % a, 0, "c_{k} does not divide c_{}", k + 1);
                }
            }
        }

        // (c) Balance forces the cardinality/rank relation, on 1000 random
        // instances (half constructed to balance, half perturbed).
        let mut rng = ChaCha8Rng::seed_from_u64(0xb10f);
        let mut balanced_seen = 0u32;
        for trial in 0..1000 {
            let h_len = rng.random_range(0..=4usize);
            let h = SphereMultiset::new(
                (0..h_len)
                    .map(|_| 2 * rng.random_range(0..=9u32) + 1)
                    .collect(),
            );
            let t = match rng.random_range(0..3u32) {
                0 => RationalType::odd_sphere(2 * rng.random_range(1..=10u32) + 1).unwrap(),
                1 => RationalType::truncated(2, rng.random_range(1..=8u32)).unwrap(),
                _ => RationalType::truncated(4, rng.random_range(1..=8u32)).unwrap(),
            };
            let mut g = match &t {
                RationalType::OddSphere { dim } => h.with(*dim),
                RationalType::Truncated { gen_degree, power } => {
                    // Balanced g swaps the opening sphere (degree gen-1) for
                    // the closing one; without the opener in h the instance
                    // simply stays unbalanced.
                    let closing = (power + 1) * gen_degree - 1;
                    let mut dims = h.dims().to_vec();
                    dims.push(closing);
                    if let Some(pos) = dims.iter().position(|&d| d == gen_degree - 1) {
                        dims.remove(pos);
                    }
                    SphereMultiset::new(dims)
                }
            };
            if trial % 2 == 1 {
                // Perturb: add one extra random odd sphere to g.
                g = g.with(2 * rng.random_range(0..=9u32) + 1);
            }
            if let Ok(true) = rational_balance(&g, &h, &t) {
                balanced_seen += 1;
                match &t {
                    RationalType::OddSphere { .. } => assert_eq!(g.len(), h.len() + 1),
                    RationalType::Truncated { .. } => assert_eq!(g.len(), h.len()),
                }
            }
        }
        assert!(balanced_seen >= 100, "only {balanced_seen} balanced instances");

        // (d) Negative control: a wrong Euler coefficient is rejected at the
        // expected degree.
        for n in [2u32, 4] {
            let spec = FibrationSpec::new(
                2 * n - 1,
                Some(3),
                GradedAbelianGroup::sphere(2 * n),
                None,
                unit_tangent_cohomology(n, false).unwrap(),
            )
            .unwrap();
            let outcome = check_gysin_consistency(&spec).unwrap();
            assert!(!outcome.pass);
            let f = outcome.failure.unwrap();
            assert_eq!(f.degree, 2 * n);
            assert_eq!(f.expected_torsion_order, 3);
            assert_eq!(f.found_torsion_order, 2);
        }
    });
}
