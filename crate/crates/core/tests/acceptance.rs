//! Acceptance checks: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use foldlab_core::action::{validate, PinnedAction};
use foldlab_core::chevalley::{base_constants, check_equivariance, equivariant_signs, jacobi_violations, magnitude_violations};
use foldlab_core::criteria::{decide, fiber_report, BaseSpec};
use foldlab_core::folding::{equivalence_classes, fixed_weyl, folded_root_data, invariant_violations, ClassType, Variant};
use foldlab_core::matrixlab::{bruhat_predicted_count, classical_order, count_fixed, tangent_dim, u3_fixed_presentation, CountOptions, Poly};
use foldlab_core::presets::{by_name, CATALOG};
use foldlab_core::rootdata::weyl::{weyl_group, DEFAULT_WEYL_LIMIT};
use foldlab_core::rootdata::{build_preset, Family, Isogeny, RootDatum};
use foldlab_core::Result;

fn setup(name: &str) -> Result<(RootDatum, PinnedAction)> {
    let p = by_name(name)?;
    let act = validate(&p.datum, &p.generators)?;
    Ok((p.datum, act))
}

type Check = fn() -> Result<std::result::Result<(), String>>;

fn ensure(ok: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn folding_golden() -> Result<std::result::Result<(), String>> {
    let (d, act) = setup("A2-sc-flip")?;
    let [r1, r2, _] = folded_root_data(&d, &act)?;
    let a1 = "A1".parse()?;
    let pgl2 = build_preset(&a1, Isogeny::Adjoint)?;
    let sl2 = build_preset(&a1, Isogeny::SimplyConnected)?;
    Ok(ensure(r1.datum.is_isomorphic(&pgl2)?, "R1 is not the adjoint rank-1 datum")
        .and(ensure(r2.datum.is_isomorphic(&sl2)?, "R2 is not the simply connected rank-1 datum"))
        .and(ensure(r1.variant == Variant::R1 && r2.variant == Variant::R2, "variant tags")))
}

fn triality() -> Result<std::result::Result<(), String>> {
    let (d, act) = setup("D4-sc-triality")?;
    let cl = equivalence_classes(&d, &act)?;
    let r1 = folded_root_data(&d, &act)?[0].datum.clone();
    let c = r1.cartan_matrix();
    let mut off = vec![c[0][1], c[1][0]];
    off.sort_unstable();
    let wa = fixed_weyl(&d, &act, DEFAULT_WEYL_LIMIT)?.order();
    let wf = weyl_group(&r1, DEFAULT_WEYL_LIMIT)?.order();
    Ok(ensure(cl.len() == 6 && cl.iter().all(|c| c.class_type == ClassType::TypeI), "expected six TypeI classes")
        .and(ensure(r1.cartan_type()?.components == [(Family::G, 2)] && off == [-3, -1], format!("R1 Cartan {c:?}")))
        .and(ensure(wa == 12 && wf == 12, format!("|W^A| = {wa}, folded Weyl order {wf}"))))
}

fn point_counts() -> Result<std::result::Result<(), String>> {
    let mut bad = Vec::new();
    for (n, q, expected) in [(1usize, 2u64, 6u128), (1, 3, 24), (1, 4, 60), (1, 5, 120), (2, 2, 720)] {
        let p = by_name(if n == 1 { "A2-sc-flip" } else { "A4-sc-flip" })?;
        let act = validate(&p.datum, &p.generators)?;
        let brute = count_fixed(n, q, CountOptions::default())?.count;
        let predicted = bruhat_predicted_count(&p.datum, &act, q, DEFAULT_WEYL_LIMIT)?;
        if brute != expected || predicted != expected {
            bad.push(format!("({n},{q}): brute {brute}, predicted {predicted}, expected {expected}"));
        }
    }
    let ok = bad.is_empty() && classical_order(2, 2) == Some(720);
    Ok(ensure(ok, bad.join("; ")))
}

fn smoothness() -> Result<std::result::Result<(), String>> {
    let (d, act) = setup("A2-sc-flip")?;
    let dim = fiber_report(&d, &act, 3)?.dimension;
    let t3 = tangent_dim(1, 3)?;
    let t2 = tangent_dim(1, 2)?;
    let all = decide(&d, &act, &BaseSpec::AllPrimes)?.smooth.value;
    let away = decide(&d, &act, &BaseSpec::explicit(&[3, 5])?)?.smooth.value;
    Ok(ensure(
        t3 == 3 && dim == 3 && t2 > 3 && !all && away,
        format!("tangent(1,3) = {t3}, dim = {dim}, tangent(1,2) = {t2}, smooth over Z {all}, over {{3,5}} {away}"),
    ))
}

fn u3() -> Result<std::result::Result<(), String>> {
    let u = u3_fixed_presentation();
    let expected = vec![Poly::from_terms(2, &[(1, &[2, 0]), (-2, &[0, 1])])];
    let s2 = u.specialize(2)?;
    let s3 = u.specialize(3)?;
    Ok(ensure(u.presentation.relations == expected && u.presentation.variables == ["x", "y"], u.presentation.to_string())
        .and(ensure(s2.nilpotent.is_some() && !s2.jacobian_smooth, "F_2 specialization not detected nonreduced"))
        .and(ensure(s3.jacobian_smooth && u.point_count(3)? == 3, "F_3 specialization")))
}

fn chevalley() -> Result<std::result::Result<(), String>> {
    let mut bad = Vec::new();
    for name in ["A2-sc-flip", "A3-sc-flip", "A2+A2-sc-swap", "D4-sc-triality", "D4-sc-cyclic3"] {
        let (d, act) = setup(name)?;
        let sc = equivariant_signs(&d, &base_constants(&d)?, &act)?;
        let report = check_equivariance(&d, &sc, &act)?;
        let mags = magnitude_violations(&d, &sc).len();
        let jac = jacobi_violations(&d, &sc);
        if mags != 0 || jac != 0 || !report.nonspecial_satisfied() || !report.special_discrepancies_are_signs() {
            bad.push(format!("{name}: {mags} magnitude, {jac} Jacobi violations"));
        }
    }
    Ok(ensure(bad.is_empty(), bad.join("; ")))
}

fn invariants() -> Result<std::result::Result<(), String>> {
    let mut bad = Vec::new();
    for name in CATALOG {
        let (d, act) = setup(name)?;
        bad.extend(invariant_violations(&d, &act, DEFAULT_WEYL_LIMIT)?.into_iter().map(|v| format!("{name}: {v}")));
    }
    Ok(ensure(bad.is_empty(), bad.join("; ")))
}

fn components() -> Result<std::result::Result<(), String>> {
    let (d, act) = setup("A2-sc-flip")?;
    let mut ok = true;
    for p in [0, 2, 3, 5, 7] {
        ok &= fiber_report(&d, &act, p)?.component_group.is_trivial();
    }
    let (t, inv) = setup("A1-torus-inversion")?;
    for p in [3, 5, 7] {
        ok &= fiber_report(&t, &inv, p)?.component_group.to_string() == "Z/2";
    }
    ok &= fiber_report(&t, &inv, 2)?.component_group.is_trivial();
    Ok(ensure(ok, "component groups differ from the expected values"))
}

fn main() -> ExitCode {
    let checks: [(&str, Check, Duration); 8] = [
        ("folding golden results (A2 flip: PGL2 and SL2)", folding_golden, Duration::from_secs(1)),
        ("D4 triality: six classes, G2, |W^A| = 12", triality, Duration::from_secs(1)),
        ("point counts: brute force equals Bruhat prediction", point_counts, Duration::from_secs(120)),
        ("smoothness and tangent dimensions agree", smoothness, Duration::from_secs(10)),
        ("U3 fixed ideal Z[x,y]/(x^2 - 2y)", u3, Duration::from_secs(10)),
        ("Chevalley-Steinberg systems", chevalley, Duration::from_secs(30)),
        ("folding invariants on the catalog", invariants, Duration::from_secs(60)),
        ("connected components", components, Duration::from_secs(10)),
    ];
    let mut failed = 0;
    for (k, (name, check, budget)) in checks.iter().enumerate() {
        let start = Instant::now();
        let outcome = match check() {
            Ok(r) => r,
            Err(e) => Err(format!("error: {e}")),
        };
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|_| {
            ensure(elapsed <= *budget, format!("took {:.2?}, budget {budget:?}", elapsed))
        });
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({elapsed:.2?})", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({elapsed:.2?}): {msg}", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", checks.len() - failed, checks.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
