//! Acceptance suite: every shipping criterion, one test per criterion,
//! each printing a single PASS/FAIL line. Run with
//! `cargo test -p geomharm-cli --test acceptance -- --nocapture`.

use std::panic::{catch_unwind, UnwindSafe};
use std::process::Command;
use std::time::Instant;

use geomharm_core::harmonic_geometric::{
    hgp, hgp_via_egf, hgp_via_gp_derivatives, hgp_via_gp_products, hgp_via_shifted_products,
    hgp_via_stirling_triple_sum,
};
use geomharm_core::rational::{rat, rat_int, rat_to_f64, Rational};
use geomharm_core::report::IdentityReport;
use geomharm_core::verify::{checks_for_suite, run_checks, series_grid, Suite};
use geomharm_core::Poly;
use geomharm_testkit::{integrate_01, TestRng};

fn criterion(number: u32, name: &str, body: impl FnOnce() + UnwindSafe) {
    let start = Instant::now();
    let result = catch_unwind(body);
    let verdict = if result.is_ok() { "PASS" } else { "FAIL" };
    println!(
        "acceptance criterion {number} ({name}): {verdict} [{:.2?}]",
        start.elapsed()
    );
    if let Err(cause) = result {
        std::panic::resume_unwind(cause);
    }
}

fn assert_suite_clean(suite: Suite, max_n: u32) {
    let reports = run_checks(&checks_for_suite(suite, max_n), 0);
    for r in &reports {
        assert!(
            !r.status.is_fail(),
            "{} {} failed: lhs={} rhs={}",
            r.identity_id,
            r.params_string(),
            r.lhs,
            r.rhs
        );
    }
}

#[test]
fn criterion_1_hgp_first_terms() {
    criterion(1, "hgp first terms", || {
        let expected = ["0", "x", "x + 3*x^2", "x + 9*x^2 + 11*x^3"];
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(hgp(n as u32).to_string(), *want, "hgp({n})");
        }
    });
}

#[test]
fn criterion_2_representation_equivalence() {
    criterion(2, "representation equivalence n <= 15", || {
        for n in 1..=15u32 {
            let reference = hgp(n);
            assert_eq!(hgp_via_gp_products(n), reference, "gp-products at {n}");
            assert_eq!(
                hgp_via_stirling_triple_sum(n).unwrap(),
                reference,
                "triple-sum at {n}"
            );
            assert_eq!(hgp_via_gp_derivatives(n), reference, "derivatives at {n}");
            if n >= 2 {
                assert_eq!(
                    hgp_via_shifted_products(n - 1),
                    reference,
                    "shifted-products at {n}"
                );
            }
            assert_eq!(hgp_via_egf(n), reference, "egf at {n}");
        }
    });
}

#[test]
fn criterion_3_polynomial_identity_suite() {
    criterion(3, "polynomial identities n <= 20", || {
        assert_suite_clean(Suite::Polynomial, 20);
    });
}

#[test]
fn criterion_4_integral_suite() {
    criterion(4, "integral identities n, m <= 30", || {
        // spot values pinned first
        let (lhs, rhs) = geomharm_core::integrals::gp_unit_integral(1);
        assert_eq!(lhs, rat(-1, 2));
        assert_eq!(rhs, rat(-1, 2));
        let (lhs, rhs) = geomharm_core::integrals::hgp_gp_product_integral(1, 1).unwrap();
        assert_eq!(lhs, rat(-1, 12));
        assert_eq!(rhs, rat(-1, 12));
        assert_suite_clean(Suite::Integral, 30);
    });
}

#[test]
fn criterion_5_number_identity_suite() {
    criterion(5, "number identities n, m <= 40", || {
        let (lhs, rhs) = geomharm_core::number_identities::stirling_pair_harmonic_sum(2, 1);
        assert_eq!(lhs, rat_int(5));
        assert_eq!(rhs, rat_int(5));
        assert_suite_clean(Suite::Number, 40);
    });
}

#[test]
fn criterion_6_series_oracle_equivalence() {
    criterion(6, "series closed forms vs direct sums, m <= 8, p <= 60", || {
        use geomharm_core::series_eval::{
            direct_sum, harmonic_power_sum_partial, power_sum_partial,
        };
        for x in series_grid() {
            for m in 0..=8u32 {
                for p in 0..=60u32 {
                    assert_eq!(
                        power_sum_partial(m, p, &x).unwrap(),
                        direct_sum(m, p, &x, false),
                        "plain mismatch at m={m} p={p} x={x}"
                    );
                    if p >= 1 {
                        // log-coefficient cancellation asserted inside:
                        // a residue surfaces as LogResidueError -> unwrap panics
                        assert_eq!(
                            harmonic_power_sum_partial(m, p, &x).unwrap(),
                            direct_sum(m, p, &x, true),
                            "harmonic mismatch at m={m} p={p} x={x}"
                        );
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_7_numeric_convergence() {
    criterion(7, "float truncations converge to closed forms", || {
        use geomharm_core::series_eval::{harmonic_power_sum, power_sum};
        for x in series_grid() {
            let xf = rat_to_f64(&x);
            for m in 0..=5u32 {
                let (mut plain, mut plain_c) = (0.0f64, 0.0f64);
                let (mut harm, mut harm_c) = (0.0f64, 0.0f64);
                let mut kahan = |sum: &mut f64, carry: &mut f64, v: f64| {
                    let y = v - *carry;
                    let t = *sum + y;
                    *carry = (t - *sum) - y;
                    *sum = t;
                };
                if m == 0 {
                    plain = 1.0; // n = 0 term under 0^0 = 1
                }
                let mut h = 0.0;
                let mut xn = 1.0;
                for n in 1..=4000u32 {
                    h += 1.0 / n as f64;
                    xn *= xf;
                    let nm = (n as f64).powi(m as i32);
                    kahan(&mut plain, &mut plain_c, nm * xn);
                    kahan(&mut harm, &mut harm_c, h * nm * xn);
                }
                let a = rat_to_f64(&power_sum(m, &x).unwrap());
                let ha = harmonic_power_sum(m, &x).unwrap().to_f64();
                let tol = |v: f64| 1e-10 * v.abs().max(1.0);
                assert!((a - plain).abs() < tol(a), "plain at m={m} x={x}");
                assert!((ha - harm).abs() < tol(ha), "harmonic at m={m} x={x}");
            }
        }
    });
}

fn poly_f64(p: &Poly) -> impl Fn(f64) -> f64 + '_ {
    let coeffs: Vec<f64> = p.coeffs().iter().map(rat_to_f64).collect();
    move |x: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

fn reflected(p: &Poly) -> Poly {
    p.compose_affine(&rat_int(0), &rat_int(-1))
}

#[test]
fn criterion_8_quadrature_cross_check() {
    criterion(8, "quadrature agrees with exact integrals", || {
        use geomharm_core::geometric::geometric;
        use geomharm_core::integrals;
        let mut rng = TestRng::new(0x6e0_817_u64);
        let close = |exact: &Rational, numeric: f64| {
            let e = rat_to_f64(exact);
            (e - numeric).abs() <= 1e-8 * e.abs().max(1.0)
        };

        for _ in 0..5 {
            // plain unit integral of w_n(-y)
            let n = rng.range(1, 6);
            let (exact, _) = integrals::gp_unit_integral(n);
            let w = reflected(&geometric(n));
            let f = poly_f64(&w);
            assert!(close(&exact, integrate_01(|y| f(y), 1e-13)), "unit n={n}");

            // semi-orthogonality
            let n = rng.range(1, 6);
            let m = rng.range(0, 6);
            let (exact, _) = integrals::gp_semiorthogonality(n, m).unwrap();
            let p = reflected(&geometric(n)) * reflected(&geometric(m));
            let f = poly_f64(&p);
            assert!(
                close(&exact, integrate_01(|x| (1.0 - x) / x * f(x), 1e-13)),
                "semiorth n={n} m={m}"
            );

            // harmonic unit integral
            let n = rng.range(1, 6);
            let (exact, _) = integrals::hgp_unit_integral(n);
            let hwp = reflected(&hgp(n));
            let f = poly_f64(&hwp);
            assert!(close(&exact, integrate_01(|y| f(y), 1e-13)), "h-unit n={n}");

            // harmonic weighted integral
            let n = rng.range(0, 6);
            let (exact, _) = integrals::hgp_weighted_integral(n).unwrap();
            let hwp = reflected(&hgp(n + 1));
            let f = poly_f64(&hwp);
            assert!(
                close(&exact, integrate_01(|x| (1.0 - x) / x * f(x), 1e-13)),
                "h-weighted n={n}"
            );

            // product integral, even parity
            let n = rng.range(0, 5);
            let m = {
                let m = rng.range(1, 5);
                if (n + m) % 2 == 1 {
                    m + 1
                } else {
                    m
                }
            };
            let (exact, _) = integrals::hgp_gp_product_integral(n, m).unwrap();
            let p = reflected(&hgp(n + 1)) * reflected(&geometric(m));
            let f = poly_f64(&p);
            assert!(
                close(&exact, integrate_01(|x| (1.0 - x) / x * f(x), 1e-13)),
                "product n={n} m={m}"
            );

            // log-weight integral
            let n = rng.range(1, 6);
            let (exact, _) = integrals::gp_log_integral(n).unwrap();
            let w = reflected(&geometric(n));
            let f = poly_f64(&w);
            assert!(
                close(&exact, integrate_01(|x| (1.0 - x).ln() / x * f(x), 1e-13)),
                "log n={n}"
            );
        }
    });
}

#[test]
fn criterion_9_cli_contract() {
    criterion(9, "cli verify exit codes and fault detection", || {
        let bin = env!("CARGO_BIN_EXE_geomharm");
        let clean = Command::new(bin)
            .args(["verify", "--suite", "all", "--max-n", "10", "--format", "json"])
            .output()
            .expect("binary runs");
        assert_eq!(clean.status.code(), Some(0), "clean run must exit 0");

        let corrupted = Command::new(bin)
            .args(["verify", "--suite", "all", "--max-n", "10", "--format", "json"])
            .env("GEOMHARM_CORRUPT_STIRLING2", "7,3")
            .output()
            .expect("binary runs");
        assert_eq!(
            corrupted.status.code(),
            Some(1),
            "corrupted table must exit 1"
        );
        let failing: Vec<IdentityReport> = String::from_utf8_lossy(&corrupted.stdout)
            .lines()
            .map(|line| serde_json::from_str::<IdentityReport>(line).expect("report line"))
            .filter(|r| r.status.is_fail())
            .collect();
        assert!(!failing.is_empty(), "at least one failing report");
        for report in &failing {
            assert!(
                !report.params.is_empty(),
                "failing report must name its tuple"
            );
        }
    });
}
