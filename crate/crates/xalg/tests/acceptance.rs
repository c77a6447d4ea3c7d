//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! and holding the stated runtime bound. Every tolerance here is exact;
//! nothing is deferred to later calibration.

use std::process::Command;
use std::time::{Duration, Instant};

use xalg::fixtures as fx;
use xalg_core::algebra::{AlgebraMorphism, DEFAULT_MAX_SEARCH};
use xalg_core::basechange::{
    adjunction_check, induce_epi, induce_ideal_inclusion, induce_tensor, iso_search, pullback,
    pullback_universal_check, AugmentationChoice, Comparison,
};
use xalg_core::koszul::{free_universal_check, free_xmod};
use xalg_core::linalg::{enumerate_vectors, Subspace};
use xalg_core::xmod::{
    boundary_image_ideal, exhaustive_axiom_check, kernel_module, CrossedModule, XModMorphism,
};

const EXHAUSTIVE_LIMIT: u64 = 4096;

fn timed<T>(bound: Duration, criterion: &str, body: impl FnOnce() -> T) -> T {
    let started = Instant::now();
    let out = body();
    let elapsed = started.elapsed();
    println!(
        "acceptance {criterion}: PASS in {:.3}s (bound {:.0}s)",
        elapsed.as_secs_f64(),
        bound.as_secs_f64()
    );
    assert!(
        elapsed < bound,
        "{criterion} exceeded its runtime bound: {elapsed:?} >= {bound:?}"
    );
    out
}

/// Criterion 1: every bundled crossed module passes equivariance and the
/// Peiffer identity on all basis pairs, and exhaustively on all element
/// pairs when the element count stays within 4096.
#[test]
fn criterion_1_axiom_suite() {
    timed(Duration::from_secs(1), "criterion 1 (axiom suite)", || {
        for (name, xm) in fx::bundled_xmods() {
            let res = exhaustive_axiom_check(&xm, EXHAUSTIVE_LIMIT)
                .unwrap_or_else(|e| panic!("{name}: {e}"));
            let p = xm.top().p().get() as u128;
            let elements = p.pow(xm.top().dim() as u32) * p.pow(xm.base().dim() as u32);
            if elements <= EXHAUSTIVE_LIMIT as u128 {
                assert!(
                    res.equivariance_pairs > 0,
                    "{name}: exhaustive pass expected"
                );
            }
        }
    });
}

/// Criterion 2: for every bundled crossed module the boundary image is an
/// ideal and it acts trivially on the boundary kernel.
#[test]
fn criterion_2_lemma_instances() {
    timed(
        Duration::from_secs(1),
        "criterion 2 (structure lemmas)",
        || {
            for (name, xm) in fx::bundled_xmods() {
                boundary_image_ideal(&xm).unwrap_or_else(|e| panic!("{name}: {e}"));
                kernel_module(&xm).unwrap_or_else(|e| panic!("{name}: {e}"));
            }
        },
    );
}

/// Criterion 3: pullback closed forms, exactly. The zero module over the
/// residue field pulls back to the kernel ideal inclusion, and a
/// zero-boundary module pulls back to its product with the kernel.
#[test]
fn criterion_3_pullback_closed_forms() {
    timed(
        Duration::from_secs(5),
        "criterion 3 (pullback closed forms)",
        || {
            let phi = fx::projection_mod_x();

            let zero = CrossedModule::zero(phi.target());
            let res = pullback(&zero, &phi).expect("kernel pullback");
            assert_eq!(res.xm.top().dim(), 2);
            let iso = iso_search(&res.xm, &fx::inclusion_x(), DEFAULT_MAX_SEARCH)
                .expect("search in budget");
            assert!(
                iso.is_some(),
                "kernel pullback must match the ideal inclusion"
            );

            let m_xm = fx::point_module_f2();
            let res = pullback(&m_xm, &phi).expect("module pullback");
            let expected = fx::product_with_kernel(&phi, &m_xm);
            assert_eq!(res.xm.top().dim(), expected.top().dim());
            let iso = iso_search(&res.xm, &expected, DEFAULT_MAX_SEARCH).expect("search in budget");
            assert!(iso.is_some(), "module pullback must match M x ker");
        },
    );
}

/// Criterion 4: the pullback mediator is unique (count exactly one) for at
/// least three bundled cones, under exhaustive enumeration.
#[test]
fn criterion_4_pullback_universal_property() {
    timed(
        Duration::from_secs(60),
        "criterion 4 (pullback universal property)",
        || {
            let phi = fx::projection_mod_x();
            let zero_r = CrossedModule::zero(phi.target());
            let res = pullback(&zero_r, &phi).expect("pullback");

            let mut cones: Vec<XModMorphism> = vec![res.morphism.clone()];
            let zero_s = CrossedModule::zero(phi.source());
            cones.push(
                XModMorphism::new(
                    &zero_s,
                    &zero_r,
                    AlgebraMorphism::zero(zero_s.top(), zero_r.top()),
                    phi.clone(),
                )
                .expect("zero cone"),
            );
            let incl = fx::inclusion_x();
            cones.push(
                XModMorphism::new(
                    &incl,
                    &zero_r,
                    AlgebraMorphism::zero(incl.top(), zero_r.top()),
                    phi.clone(),
                )
                .expect("inclusion cone"),
            );
            assert!(cones.len() >= 3);
            for (i, cone) in cones.iter().enumerate() {
                let report = pullback_universal_check(&res, cone, DEFAULT_MAX_SEARCH)
                    .expect("enumeration in budget");
                assert_eq!(report.count, 1, "cone {i}: mediator must be unique");
            }
        },
    );
}

/// Criterion 5: the quotient formula for surjections agrees with the tensor
/// construction on at least three bundled pairs; the residue projection on
/// the maximal ideal gives the one-dimensional I/I^2.
#[test]
fn criterion_5_induced_epi_oracle() {
    timed(
        Duration::from_secs(30),
        "criterion 5 (induced epi oracle)",
        || {
            let pairs = vec![
                (fx::inclusion_x(), fx::projection_mod_x()),
                (fx::inclusion_x2(), fx::projection_mod_x()),
                (fx::inclusion_x(), fx::projection_mod_x2()),
            ];
            assert!(pairs.len() >= 3);
            for (xm, phi) in &pairs {
                let epi = induce_epi(xm, phi).expect("quotient formula");
                let tensor = induce_tensor(xm, phi).expect("tensor construction");
                assert_eq!(epi.top().dim(), tensor.xm.top().dim());
                let iso =
                    iso_search(&epi, &tensor.xm, DEFAULT_MAX_SEARCH).expect("search in budget");
                assert!(
                    iso.is_some(),
                    "epi and tensor constructions must be isomorphic"
                );
            }
            // the worked instance: inducing (x) along T3 -> T3/(x)
            let res = induce_tensor(&fx::inclusion_x(), &fx::projection_mod_x()).expect("tensor");
            assert_eq!(res.xm.top().dim(), 1, "I tensor S/I collapses to I/I^2");
        },
    );
}

/// Criterion 6: hom-set counts agree on both sides of the adjunction for at
/// least three bundled triples, with the transposition verified to be a
/// bijection.
#[test]
fn criterion_6_adjunction() {
    timed(Duration::from_secs(120), "criterion 6 (adjunction)", || {
        let f2 = fx::f2();
        let triples = [
            (
                fx::projection_mod_x(),
                fx::inclusion_x(),
                CrossedModule::zero(fx::projection_mod_x().target()),
            ),
            (
                AlgebraMorphism::identity(&f2),
                fx::point_module_f2(),
                fx::point_module_f2(),
            ),
            (
                fx::projection_mod_x(),
                fx::point_module_t3(),
                fx::point_module_f2(),
            ),
        ];
        assert!(triples.len() >= 3);
        for (i, (phi, d, c)) in triples.iter().enumerate() {
            let report = adjunction_check(phi, d, c, DEFAULT_MAX_SEARCH).expect("in budget");
            assert_eq!(
                report.left_count, report.right_count,
                "triple {i}: hom-set counts must agree"
            );
            assert!(
                report.transposition_bijective,
                "triple {i}: transposition must be a bijection"
            );
        }
    });
}

/// Criterion 7: the Koszul numbers for f = (x, x^2) over T3, and uniqueness
/// of the free mediator for every admissible assignment into bundled
/// targets over the same base.
#[test]
fn criterion_7_koszul() {
    timed(
        Duration::from_secs(30),
        "criterion 7 (free presentation)",
        || {
            let t3 = fx::t3();
            let fvals = vec![vec![0, 1, 0], vec![0, 0, 1]];
            let pres = free_xmod(&t3, &fvals).expect("free presentation");
            assert_eq!(
                pres.quotient.relations().dim(),
                2,
                "image of the differential"
            );
            assert_eq!(pres.xm.top().dim(), 4, "presented top dimension");
            assert!(
                pres.theta_hat.mat_mul(&pres.differential.matrix).is_zero(),
                "boundary composed with the differential must vanish"
            );

            // every admissible w into every bundled target over T3 admits
            // exactly one mediator
            let mut assignments_checked = 0;
            for (name, target) in fx::bundled_xmods() {
                if target.base() != &t3 {
                    continue;
                }
                let top_dim = target.top().dim();
                if (2u128).pow(top_dim as u32) > 64 {
                    continue;
                }
                let candidates = enumerate_vectors(fx::p2(), top_dim);
                for w0 in &candidates {
                    if target.boundary().apply(w0) != fvals[0] {
                        continue;
                    }
                    for w1 in &candidates {
                        if target.boundary().apply(w1) != fvals[1] {
                            continue;
                        }
                        let report = free_universal_check(
                            &pres,
                            &target,
                            &[w0.clone(), w1.clone()],
                            DEFAULT_MAX_SEARCH,
                        )
                        .expect("compatible assignment");
                        assert_eq!(report.count, 1, "{name}: mediator must be unique");
                        assignments_checked += 1;
                    }
                }
            }
            assert!(
                assignments_checked >= 2,
                "admissible assignments must exist"
            );
        },
    );
}

/// Criterion 8: the closed form for the bundled ideal chain validates, the
/// defect subchecks pass, and the comparison against the tensor
/// construction is reported with a witness or a stated obstruction,
/// deterministically.
#[test]
fn criterion_8_ideal_inclusion_pipeline() {
    timed(
        Duration::from_secs(60),
        "criterion 8 (ideal chain closed form)",
        || {
            let r = fx::t3();
            let s = fx::ideal_x();
            let d = fx::ideal_x2();

            let witnessed = induce_ideal_inclusion(
                &r,
                &s,
                &d,
                &AugmentationChoice::Generated(vec![]),
                DEFAULT_MAX_SEARCH,
            )
            .expect("closed form with the zero ideal");
            assert!(witnessed.report.all_subchecks_pass());
            assert_eq!(witnessed.report.comparison, Comparison::Isomorphic);
            assert!(
                witnessed.witness.is_some(),
                "a witness isomorphism is exhibited"
            );

            let obstructed = induce_ideal_inclusion(
                &r,
                &s,
                &d,
                &AugmentationChoice::WholeQuotient,
                DEFAULT_MAX_SEARCH,
            )
            .expect("closed form with the whole quotient");
            assert!(obstructed.report.all_subchecks_pass());
            assert_eq!(
                obstructed.report.comparison,
                Comparison::DimensionMismatch {
                    constructed: 2,
                    tensor: 1
                },
                "the obstruction must be stated"
            );

            // determinism: a second run reproduces the reports exactly
            let again = induce_ideal_inclusion(
                &r,
                &s,
                &d,
                &AugmentationChoice::WholeQuotient,
                DEFAULT_MAX_SEARCH,
            )
            .expect("second run");
            assert_eq!(again.report, obstructed.report);
        },
    );
}

/// Criterion 9: two runs of the full catalog in JSON produce byte-identical
/// reports.
#[test]
fn criterion_9_determinism() {
    timed(
        Duration::from_secs(120),
        "criterion 9 (byte determinism)",
        || {
            let run = || {
                Command::new(env!("CARGO_BIN_EXE_xalg"))
                    .args(["catalog", "--format", "json"])
                    .output()
                    .expect("binary runs")
            };
            let a = run();
            let b = run();
            assert_eq!(a.status.code(), Some(0), "catalog must pass");
            assert!(!a.stdout.is_empty());
            assert_eq!(a.stdout, b.stdout, "reports must be byte-identical");

            // the image space of the differential is part of the reported
            // content; pin a spot value so the determinism check has teeth
            let json: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
            assert_eq!(json["command"], "catalog");
            assert!(json["verdicts"].as_array().unwrap().len() >= 100);
        },
    );
}

/// The worked family also satisfies subspace canonicality end to end: the
/// kernel pullback witness is literally the canonical kernel basis.
#[test]
fn witness_bases_are_canonical() {
    let phi = fx::projection_mod_x();
    let zero = CrossedModule::zero(phi.target());
    let res = pullback(&zero, &phi).expect("pullback");
    let expected = Subspace::from_generators(fx::p2(), 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
    assert_eq!(res.witness, expected);
}
