//! End-to-end verification: every curated table row and every closed-form
//! computation re-derived and checked, organized into reports.  This is what
//! the `verify-tables` command runs.

use thiserror::Error;

use crate::char_class::{
    circle_quotient_tangent_relation, distinguish_cp_pair, grassmannian_tangent_relation,
    p1_of_sum, solve_p1_tangent, CharClassError, Distinction,
};
use crate::char_class::{
    geodesic_flow_character, normal_action_character, standard_rotation_character,
    trivial_normal_character, weight_decompose, WeightDecomposition,
};
use crate::cohomology::{
    check_gysin_consistency, circle_quotient_fibration, circle_quotient_ring, g2_su2_cohomology,
    g2_su2_fibration, quaternionic_quotient_fibration, quaternionic_quotient_ring,
    unit_tangent_cohomology, unit_tangent_fibration, CohomologyError, GradedAbelianGroup,
    Homogeneous,
};
use crate::enumeration::{
    expected_pair_classes, match_odd_sphere_pairs, verify_quotient_rows_with, EnumerationError,
};
use crate::lie_catalog::{CatalogError, GroupCatalog, SphereMultiset};
use crate::rational_model::RationalModelError;
use crate::report::Report;
use crate::tables::{CuratedTables, TableError};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    CharClass(#[from] CharClassError),
    #[error(transparent)]
    RationalModel(#[from] RationalModelError),
}

/// Graded groups on one line for report details.
pub fn inline_graded(h: &GradedAbelianGroup) -> String {
    h.to_string().replace('\n', "; ")
}

/// Every curated sphere-dimension row against the computed exponents, plus
/// the sum rule (sphere dimensions add up to the group dimension).
pub fn sphere_dimension_report(tables: &CuratedTables) -> Report {
    let mut rep = Report::new("sphere dimensions");
    for row in &tables.sphere_rows {
        let computed = row.group.sphere_dimensions();
        let expected = SphereMultiset::new(row.dims.clone());
        let sum: u32 = computed.dims().iter().sum();
        let dim = row.group.dimension();
        let pass = computed == expected && sum == dim;
        rep.record(
            row.group.label(),
            format!("spheres {computed}, recorded {expected}; sum {sum}, dim {dim}"),
            pass,
        );
    }
    rep
}

/// The exhaustive matcher against the curated pair list: same classes, no
/// extras, none missing.
pub fn matcher_report(
    catalog: &GroupCatalog,
    tables: &CuratedTables,
) -> Result<Report, VerifyError> {
    let mut rep = Report::new(format!(
        "odd-sphere pair matching (rank <= {})",
        catalog.max_rank()
    ));
    let computed = match_odd_sphere_pairs(catalog, false);
    let mut expected = expected_pair_classes(tables, catalog)?;
    for cand in &computed {
        match expected.remove(&cand.class_key()) {
            Some(names) => rep.record(
                cand.label().to_string(),
                format!("{cand}; curated: {}", names.join(", ")),
                true,
            ),
            None => rep.record(
                cand.label().to_string(),
                format!("{cand}; no curated record"),
                false,
            ),
        }
    }
    for (key, names) in expected {
        rep.record(
            names.join(", "),
            format!("curated class (removing S^{}) not found by the matcher", key.2),
            false,
        );
    }
    Ok(rep)
}

/// Balance and dimension checks for every curated quotient row.
pub fn quotient_rows_report(
    catalog: &GroupCatalog,
    tables: &CuratedTables,
    n_max: u32,
) -> Result<Report, VerifyError> {
    let mut rep = Report::new(format!("quotient rows (n <= {n_max})"));
    for check in verify_quotient_rows_with(tables, catalog, n_max)? {
        rep.record(check.row.display_name(), check.detail(), check.pass());
    }
    Ok(rep)
}

fn frozen_g2_su2_homology() -> GradedAbelianGroup {
    GradedAbelianGroup::new(
        11,
        [
            (0, Homogeneous::free(1)),
            (5, Homogeneous::cyclic(2)),
            (11, Homogeneous::free(1)),
        ],
    )
    .expect("constant is valid")
}

fn gysin_word(pass: bool) -> &'static str {
    if pass {
        "consistent"
    } else {
        "FAILED"
    }
}

fn push_unit_tangent(rep: &mut Report, n: u32, allow_n1: bool) -> Result<(), VerifyError> {
    let total = unit_tangent_cohomology(n, allow_n1)?;
    let gysin = check_gysin_consistency(&unit_tangent_fibration(n, allow_n1)?)?;
    rep.record(
        format!("T1 S^{} over S^{}", 2 * n, 2 * n),
        format!("{}; Gysin {}", inline_graded(&total), gysin_word(gysin.pass)),
        gysin.pass,
    );
    Ok(())
}

fn push_quotient_rings(rep: &mut Report, n: u32) -> Result<(), VerifyError> {
    let (_, ring) = circle_quotient_ring(n)?;
    let gysin = check_gysin_consistency(&circle_quotient_fibration(n)?)?;
    let c_mid = ring.c(n) == Some(2);
    rep.record(
        format!("circle quotient of T1 S^{}", 2 * n),
        format!(
            "{ring}; c_{n} = 2 {}; Gysin {}",
            if c_mid { "ok" } else { "FAILED" },
            gysin_word(gysin.pass)
        ),
        gysin.pass && c_mid,
    );
    let (_, ring) = quaternionic_quotient_ring(n)?;
    let gysin = check_gysin_consistency(&quaternionic_quotient_fibration(n)?)?;
    let c_mid = ring.c(n) == Some(2);
    rep.record(
        format!("SU(2) quotient of T1 S^{}", 4 * n),
        format!(
            "{ring}; c_{n} = 2 {}; Gysin {}",
            if c_mid { "ok" } else { "FAILED" },
            gysin_word(gysin.pass)
        ),
        gysin.pass && c_mid,
    );
    Ok(())
}

fn push_g2(rep: &mut Report) -> Result<(), VerifyError> {
    let (coh, hom) = g2_su2_cohomology();
    let gysin = check_gysin_consistency(&g2_su2_fibration())?;
    rep.record(
        "G2//SU(2)",
        format!("H^* {}; Gysin {}", inline_graded(&coh), gysin_word(gysin.pass)),
        gysin.pass,
    );
    let dual_ok = hom == frozen_g2_su2_homology();
    rep.record(
        "G2//SU(2) homology",
        format!(
            "H_* {} via duality {}",
            inline_graded(&hom),
            if dual_ok { "ok" } else { "FAILED" }
        ),
        dual_ok,
    );
    Ok(())
}

/// Closed cohomology forms with their defining fibrations run through the
/// Gysin checker, the divisibility phenomenon, and Poincaré duality.
pub fn cohomology_report(n_max: u32) -> Result<Report, VerifyError> {
    if n_max < 2 {
        return Err(VerifyError::BadParameter(
            "cohomology sweep needs n_max >= 2".to_string(),
        ));
    }
    let mut rep = Report::new(format!("cohomology closed forms (n = 2..{n_max})"));
    for n in 2..=n_max {
        push_unit_tangent(&mut rep, n, false)?;
        push_quotient_rings(&mut rep, n)?;
    }
    push_g2(&mut rep)?;
    Ok(rep)
}

/// Same content for a single parameter value (the `cohomology` command);
/// n = 1 is admitted only with the override flag and skips the quotients.
pub fn cohomology_report_at(n: u32, allow_n1: bool) -> Result<Report, VerifyError> {
    let mut rep = Report::new(format!("cohomology at n = {n}"));
    push_unit_tangent(&mut rep, n, allow_n1)?;
    if n >= 2 {
        push_quotient_rings(&mut rep, n)?;
    } else {
        rep.info("quotient rings", "defined for n >= 2 only; skipped");
    }
    push_g2(&mut rep)?;
    Ok(rep)
}

/// Tangent p1 for both spaces at one n, each coefficient cross-checked
/// against the direct Whitney-sum derivation.
pub fn p1_report_at(n: u32) -> Result<Report, VerifyError> {
    let mut rep = Report::new(format!("tangent p1 derivations (n = {n})"));
    let rel = circle_quotient_tangent_relation(n)?;
    let p1 = solve_p1_tangent(&rel)?;
    let direct = p1_of_sum(&rel.classified) - p1_of_sum(&rel.alongside_tangent);
    rep.record(
        "biquotient tangent",
        format!("{rel} => p1(TM) = {p1} a^2"),
        p1 == direct && p1 == i64::from(2 * n),
    );
    let rel = grassmannian_tangent_relation(n)?;
    let p1 = solve_p1_tangent(&rel)?;
    let direct = p1_of_sum(&rel.classified) - p1_of_sum(&rel.alongside_tangent);
    rep.record(
        "grassmannian tangent",
        format!("{rel} => p1(TN) = {p1} a^2"),
        p1 == direct && p1 == i64::from(2 * n) - 3,
    );
    Ok(rep)
}

/// Full distinction derivation for one n: the verdict trace plus the final
/// check that the two quotient orders differ.
pub fn distinction_report_at(n: u32) -> Result<Report, VerifyError> {
    let v = distinguish_cp_pair(n)?;
    let mut rep = Report::new(format!("homeomorphism distinction (n = {n})"));
    for (i, line) in v.trace.iter().enumerate() {
        rep.info(format!("step {}", i + 1), line);
    }
    rep.record(
        "verdict",
        format!(
            "orders {} vs {}: {}",
            v.order_biquotient, v.order_grassmannian, v.distinction
        ),
        v.distinction == Distinction::NotHomeomorphic,
    );
    Ok(rep)
}

/// The homeomorphism distinction for every n in the sweep: orders of
/// H⁴/⟨p₁⟩ computed through the full pipeline must differ.
pub fn pontrjagin_report(n_max: u32) -> Result<Report, VerifyError> {
    if n_max < 2 {
        return Err(VerifyError::BadParameter(
            "distinction sweep needs n_max >= 2".to_string(),
        ));
    }
    let mut rep = Report::new(format!("p1 distinction of the CP^(2n-1) pairs (n = 2..{n_max})"));
    for n in 2..=n_max {
        let v = distinguish_cp_pair(n)?;
        let coefficients_ok =
            v.p1_biquotient == i64::from(2 * n) && v.p1_grassmannian == i64::from(2 * n) - 3;
        let pass = coefficients_ok && v.distinction == Distinction::NotHomeomorphic;
        rep.record(
            format!("n = {n}"),
            format!(
                "p1 {} vs {}, orders {} vs {}: {}",
                v.p1_biquotient, v.p1_grassmannian, v.order_biquotient, v.order_grassmannian,
                v.distinction
            ),
            pass,
        );
    }
    Ok(rep)
}

fn expect_weights(
    rep: &mut Report,
    name: &str,
    result: Result<WeightDecomposition, CharClassError>,
    expected: &[(u32, u32)],
) {
    match result {
        Ok(d) => {
            let pass = d.iter().collect::<Vec<_>>() == expected;
            rep.record(name, format!("{d}"), pass);
        }
        Err(e) => rep.record(name, format!("decomposition failed: {e}"), false),
    }
}

/// The circle-representation weight decompositions used in the normal-bundle
/// arguments.
pub fn weights_report() -> Report {
    let mut rep = Report::new("circle representation weights");
    expect_weights(
        &mut rep,
        "normal rotation family (rank 3)",
        weight_decompose(normal_action_character, 3, 4, 32),
        &[(0, 1), (2, 1)],
    );
    expect_weights(
        &mut rep,
        "trivial normal action (rank 3)",
        weight_decompose(trivial_normal_character, 3, 4, 32),
        &[(0, 3)],
    );
    expect_weights(
        &mut rep,
        "standard plane rotation",
        weight_decompose(standard_rotation_character, 2, 4, 32),
        &[(1, 1)],
    );
    for n in 2..=5 {
        expect_weights(
            &mut rep,
            &format!("geodesic flow on R^{} (n = {n})", 4 * n + 2),
            weight_decompose(geodesic_flow_character(n), 4 * n + 2, 4, 32),
            &[(1, 2 * n + 1)],
        );
    }
    rep
}

/// The full battery: sphere-dimension regression, pair matching, quotient
/// rows, cohomology with Gysin consistency, the p1 distinction sweep, and
/// the weight decompositions.
pub fn run_verification(
    catalog: &GroupCatalog,
    tables: &CuratedTables,
    n_max: u32,
) -> Result<Vec<Report>, VerifyError> {
    Ok(vec![
        sphere_dimension_report(tables),
        matcher_report(catalog, tables)?,
        quotient_rows_report(catalog, tables, n_max)?,
        cohomology_report(n_max)?,
        pontrjagin_report(n_max)?,
        weights_report(),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::rank_needed_for;

    fn full_catalog(n_max: u32) -> GroupCatalog {
        let tables = CuratedTables::builtin();
        GroupCatalog::builtin(10.max(rank_needed_for(n_max, tables)))
    }

    #[test]
    fn everything_passes_on_builtin_data() {
        let tables = CuratedTables::builtin();
        let catalog = full_catalog(6);
        let reports = run_verification(&catalog, tables, 6).unwrap();
        assert_eq!(reports.len(), 6);
        for rep in &reports {
            assert!(rep.pass(), "section failed:\n{}", rep.render_text());
        }
    }

    #[test]
    fn deterministic_output() {
        let tables = CuratedTables::builtin();
        let catalog = full_catalog(4);
        let a = run_verification(&catalog, tables, 4).unwrap();
        let b = run_verification(&catalog, tables, 4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sphere_regression_catches_tampered_row() {
        let src = "dims A1 | 5\n";
        let tables = CuratedTables::parse(src).unwrap();
        let rep = sphere_dimension_report(&tables);
        assert!(!rep.pass());
    }

    #[test]
    fn matcher_report_flags_uncurated_extras() {
        // With the pair families stripped out, every matched class becomes an
        // unexplained extra.
        let tables = CuratedTables::parse("dims A1 | 3\n").unwrap();
        let catalog = GroupCatalog::builtin(4);
        let rep = matcher_report(&catalog, &tables).unwrap();
        assert!(!rep.pass());
        assert!(rep.failures().count() > 0);
    }

    #[test]
    fn single_n_reports() {
        assert!(cohomology_report_at(3, false).unwrap().pass());
        let rep = cohomology_report_at(1, true).unwrap();
        assert!(rep.pass(), "{}", rep.render_text());
        assert!(cohomology_report_at(1, false).is_err());
        assert!(p1_report_at(4).unwrap().pass());
        let rep = distinction_report_at(3).unwrap();
        assert!(rep.pass());
        assert!(rep.render_text().contains("orders 6 vs 3"));
    }

    #[test]
    fn small_n_max_rejected() {
        assert!(matches!(
            cohomology_report(1),
            Err(VerifyError::BadParameter(_))
        ));
        assert!(matches!(
            pontrjagin_report(0),
            Err(VerifyError::BadParameter(_))
        ));
    }

    #[test]
    fn quotient_rows_fail_against_too_small_catalog() {
        let tables = CuratedTables::builtin();
        let catalog = GroupCatalog::builtin(3);
        let rep = quotient_rows_report(&catalog, tables, 4).unwrap();
        // Rows with groups beyond rank 3 are reported as failures, not
        // silently dropped.
        assert!(!rep.pass());
    }
}
