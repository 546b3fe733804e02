//! End-to-end acceptance checks, one printed pass/fail line per criterion.

use std::time::Instant;

use gjms::constants::{adams_constant, gjms_bottom_integer_check, sobolev_constant};
use gjms::symbols::{bottom_constant_p, bottom_constant_ptilde, symbol_p, symbol_ptilde};
use gjms_verify::{run_suite, SuiteConfig, VerificationReport};

fn suite(name: &str) -> VerificationReport {
    run_suite(&SuiteConfig { suite_name: name.into(), ..Default::default() }).unwrap()
}

struct Tally {
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { failures: Vec::new() }
    }

    fn record(&mut self, label: &str, ok: bool) {
        println!("criterion {label}: {}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failures.push(label.to_string());
        }
    }
}

#[test]
fn acceptance() {
    let mut t = Tally::new();

    // 1: quadrature transform of K matches the gamma-quotient closed form
    let started = Instant::now();
    let r = suite("transform-of-K");
    let ok = r.all_passed() && r.summary.total == 90 && started.elapsed().as_secs_f64() <= 60.0;
    t.record("1 transform-of-K (rel 1e-6, 60s budget)", ok);

    // 2: symbol decomposition identity on the 100×100 grid
    let started = Instant::now();
    let r = suite("decomposition-identity");
    let ok = r.all_passed()
        && r.summary.total == 10_000
        && r.summary.max_abs_residual <= 1e-10
        && started.elapsed().as_secs_f64() <= 5.0;
    t.record("2 decomposition identity (rel 1e-10, 5s budget)", ok);

    // 3: integer orders collapse to the polynomial ∏((j−1/2)² + λ²), and
    // the bottom constants to ∏(2i−1)²/4
    let mut ok = true;
    for k in 1..=4u32 {
        let mut bottom = 1.0;
        for i in 1..=k {
            let odd = (2 * i - 1) as f64;
            bottom *= odd * odd / 4.0;
        }
        for &lambda in &[0.0, 0.5, 1.0, 3.0, 10.0] {
            let mut poly = 1.0;
            for j in 1..=k {
                let half = j as f64 - 0.5;
                poly *= half * half + lambda * lambda;
            }
            for v in [symbol_p(k as f64, lambda), symbol_ptilde(k as f64, lambda)] {
                ok &= ((v - poly) / poly).abs() <= 1e-12;
            }
        }
        ok &= ((bottom_constant_p(k as f64) - bottom) / bottom).abs() <= 1e-12;
        ok &= ((bottom_constant_ptilde(k as f64) - bottom) / bottom).abs() <= 1e-12;
    }
    t.record("3 integer-order consistency (rel 1e-12)", ok);

    // 4: scattering ODE reproduces the normalized symbol
    let started = Instant::now();
    let r = suite("scattering-oracle");
    let ok = r.all_passed()
        && r.summary.total == 20
        && r.summary.max_abs_residual <= 1e-4
        && started.elapsed().as_secs_f64() <= 120.0;
    t.record("4 scattering oracle (rel 1e-4, 120s budget)", ok);

    // 5: every inequality margin ≥ −1e-9 relative
    let started = Instant::now();
    let mut ok = true;
    for name in ["prop63-margins", "lemma46-zeta", "lemma52-zeta", "section7-chain"] {
        let r = suite(name);
        ok &= r.all_passed();
    }
    ok &= started.elapsed().as_secs_f64() <= 30.0;
    t.record("5 inequality margins (floor -1e-9, 30s budget)", ok);

    // 6: conformal Green's-function relations and the image-charge form
    let ball = suite("conformal-green-ball");
    let half = suite("conformal-green-halfspace");
    let image = suite("image-charge");
    let ok = ball.all_passed()
        && half.all_passed()
        && image.all_passed()
        && image.summary.max_abs_residual <= 1e-10;
    t.record("6 conformal Green relations (rel 1e-9, image charge 1e-10)", ok);

    // 7: finite differences confirm the radial differential identity
    let r = suite("lemma61-differential");
    let ok = r.all_passed() && r.summary.total == 300 && r.summary.max_abs_residual <= 1e-5;
    t.record("7 differential identity (rel 1e-5)", ok);

    // 8: sharp constants — duality identity plus frozen exact values
    let r = suite("constants-duality");
    let mut ok = r.all_passed();
    let s31 = sobolev_constant(3, 1.0).unwrap();
    let s31_exact = 3.0 * (std::f64::consts::PI / 2.0).powf(4.0 / 3.0);
    ok &= ((s31 - s31_exact) / s31_exact).abs() <= 1e-12;
    for k in 1..=7u32 {
        let mut product = 1.0;
        for i in 1..=k {
            let odd = (2 * i - 1) as f64;
            product *= odd * odd / 4.0;
        }
        ok &= gjms_bottom_integer_check(k).abs() <= 1e-12 * product;
    }
    let adams = adams_constant(3, 1.5).unwrap();
    let adams_exact = 6.0 * std::f64::consts::PI * std::f64::consts::PI;
    ok &= ((adams - adams_exact) / adams_exact).abs() <= 1e-12;
    t.record("8 sharp constants and duality (rel 1e-12)", ok);

    // 9: gamma-modulus closed forms, the large-λ asymptotic, and the
    // Legendre-weighted integral
    let forms = suite("gamma-closed-forms");
    let legendre = suite("legendre-integral");
    let ok = forms.all_passed() && legendre.all_passed();
    t.record("9 special-function closed forms (rel 1e-12 / 0.1% / 1e-6)", ok);

    // 10: report bodies are byte-identical across worker counts
    let cfg = SuiteConfig { suite_name: "conformal-green-ball".into(), ..Default::default() };
    let body1 = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| run_suite(&cfg).unwrap().body());
    let body8 = rayon::ThreadPoolBuilder::new()
        .num_threads(8)
        .build()
        .unwrap()
        .install(|| run_suite(&cfg).unwrap().body());
    t.record("10 determinism across --jobs 1 vs --jobs 8", body1 == body8);

    assert!(t.failures.is_empty(), "failing criteria: {:?}", t.failures);
}
