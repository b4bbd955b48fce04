//! Acceptance suite. Prints one line per criterion and fails if any
//! criterion fails or exceeds its time limit. All arithmetic is exact, so
//! every tolerance is zero.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sl2hahn::hahn::{
    hahn_identity_residuals, natural, verify_hahn_identities, verify_image_gradings, verify_kernel_and_inverse,
    verify_natural_well_defined, HahnPresentation, DEFAULT_DEGREE_BOUND,
};
use sl2hahn::linalg::int;
use sl2hahn::report::Report;
use sl2hahn::repr::{
    build_l, build_l0, build_l1, classify_ue_irreducible, evaluate, verify_hahn_module_splitting,
    verify_module_facts, UeLabel,
};
use sl2hahn::sample::{random_free, random_usl2, SampleShape};
use sl2hahn::terwilliger::{
    decompose_halved, decompose_standard, standard_multiplicity, te_dimension, te_dimension_formula, CubeContext,
    HalvedContext,
};
use sl2hahn::usl2::{power_identity_suite, verify_ue_presentation};

const TOLERANCE: &str = "exact";

struct Criterion {
    id: u8,
    name: &'static str,
    limit: Duration,
    run: fn() -> Result<String, String>,
}

const CRITERIA: [Criterion; 9] = [
    Criterion { id: 1, name: "power identities, 1 <= n <= 8", limit: Duration::from_secs(10), run: power_identities },
    Criterion { id: 2, name: "even-subalgebra relations", limit: Duration::from_secs(1), run: presentation },
    Criterion { id: 3, name: "natural map well defined, images", limit: Duration::from_secs(5), run: natural_map },
    Criterion { id: 4, name: "membership certificates at bound 8", limit: Duration::from_secs(300), run: certificates },
    Criterion { id: 5, name: "module facts, n <= 12", limit: Duration::from_secs(120), run: module_facts },
    Criterion { id: 6, name: "L_n splits into two blocks, n <= 12", limit: Duration::from_secs(60), run: splitting },
    Criterion { id: 7, name: "hypercube multiplicities, D <= 10", limit: Duration::from_secs(120), run: hypercube },
    Criterion { id: 8, name: "halved cube algebra dimension, D <= 8", limit: Duration::from_secs(600), run: halved },
    Criterion { id: 9, name: "randomized property suites", limit: Duration::from_secs(300), run: properties },
];

fn require(report: &Report) -> Result<(), String> {
    match report.failures().next() {
        None => Ok(()),
        Some(item) => Err(format!("{}: {} {} {}", report.suite, item.status.as_str(), item.name, item.detail)),
    }
}

fn power_identities() -> Result<String, String> {
    let report = power_identity_suite(8);
    require(&report)?;
    Ok(format!("{} identities", report.items.len()))
}

fn presentation() -> Result<String, String> {
    let report = verify_ue_presentation();
    require(&report)?;
    Ok(format!("{} relations", report.items.len()))
}

fn natural_map() -> Result<String, String> {
    let mut report = verify_natural_well_defined();
    report.extend(verify_image_gradings());
    require(&report)?;
    let p = HahnPresentation::new();
    let kernel = &(&p.omega.scale(&int(16)) - &p.alpha.scale(&int(24))) + &p.constant(int(3));
    if !natural(&p.beta).is_zero() || !natural(&kernel).is_zero() {
        return Err("beta or 16 Omega - 24 alpha + 3 has a nonzero image".into());
    }
    Ok(format!("{} checks", report.items.len()))
}

fn certificates() -> Result<String, String> {
    let report = verify_hahn_identities(DEFAULT_DEGREE_BOUND);
    require(&report)?;
    let relators = HahnPresentation::new().relators();
    let mut certified = 0;
    for (name, residual) in hahn_identity_residuals() {
        let item = report.get(&name).ok_or(format!("missing item {name}"))?;
        match &item.certificate {
            Some(cert) if cert.verify(&residual, &relators) => certified += 1,
            Some(_) => return Err(format!("{name}: certificate does not replay")),
            None if residual.is_zero() => {}
            None => return Err(format!("{name}: nonzero residual without certificate")),
        }
    }
    let inverse = verify_kernel_and_inverse(DEFAULT_DEGREE_BOUND);
    require(&inverse)?;
    Ok(format!("{certified} certificates replayed, {} identities, {} kernel checks", report.items.len(), inverse.items.len()))
}

fn module_facts() -> Result<String, String> {
    let report = verify_module_facts(12);
    require(&report)?;
    // Round trip in each of the four cases for d <= 5.
    for d in 0..=5usize {
        let cases = [
            (1, build_l0(2 * d), UeLabel::even(2 * d)),
            (2, build_l0(2 * d + 1), UeLabel::even(2 * d + 1)),
            (3, build_l1(2 * d + 1).map_err(|e| e.to_string())?, UeLabel::odd(2 * d + 1)),
            (4, build_l1(2 * d + 2).map_err(|e| e.to_string())?, UeLabel::odd(2 * d + 2)),
        ];
        for (case, rep, label) in cases {
            let c = classify_ue_irreducible(&rep).map_err(|e| format!("{label}: {e}"))?;
            if c.case != case || c.label != label || c.d != d {
                return Err(format!("{label} classified as {} (case {})", c.label, c.case));
            }
        }
    }
    Ok(format!("{} checks, 24 round trips", report.items.len()))
}

fn splitting() -> Result<String, String> {
    let report = verify_hahn_module_splitting(12);
    require(&report)?;
    Ok(format!("{} checks", report.items.len()))
}

fn hypercube() -> Result<String, String> {
    for d in 2..=10 {
        let dec = decompose_standard(&CubeContext::standard(d).map_err(|e| e.to_string())?);
        require(&dec.report)?;
        let mut total = 0;
        for (k, (n, mult)) in dec.summands.iter().enumerate() {
            if *mult != standard_multiplicity(d, k) {
                return Err(format!("D={d} L_{n}: {mult} copies"));
            }
            total += mult * (n + 1);
        }
        if total != 1 << d {
            return Err(format!("D={d}: dimensions sum to {total}"));
        }
    }
    Ok("D = 2..10".into())
}

fn halved() -> Result<String, String> {
    let mut values = Vec::new();
    for d in 2..=8 {
        let start = Instant::now();
        let hctx = HalvedContext::standard(d).map_err(|e| e.to_string())?;
        let te = te_dimension(&hctx);
        let dec = decompose_halved(&hctx).map_err(|e| e.to_string())?;
        require(&dec.report)?;
        if te != te_dimension_formula(d) || te != dec.wedderburn_dimension {
            return Err(format!("D={d}: closure {te}, formula {}, squares {}", te_dimension_formula(d), dec.wedderburn_dimension));
        }
        if d <= 6 && start.elapsed() > Duration::from_secs(30) {
            return Err(format!("D={d} took {:?}", start.elapsed()));
        }
        values.push(te);
    }
    Ok(format!("dimensions {values:?}"))
}

fn properties() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let shape = SampleShape::default();
    for i in 0..1000 {
        let (a, b, c) = (random_usl2(&mut rng, &shape), random_usl2(&mut rng, &shape), random_usl2(&mut rng, &shape));
        if a.multiply(&b.multiply(&c)) != a.multiply(&b).multiply(&c) {
            return Err(format!("associativity triple {i}"));
        }
    }
    let samples: Vec<_> = (0..500).map(|_| random_usl2(&mut rng, &shape)).collect();
    for (i, x) in samples.iter().enumerate() {
        let y = &samples[(i + 1) % samples.len()];
        if x.rho().rho() != *x || x.multiply(y).rho() != x.rho().multiply(&y.rho()) {
            return Err(format!("rho sample {i}"));
        }
    }
    let alphabet = HahnPresentation::new().alphabet;
    let free_shape = SampleShape { max_exponent: 4, ..shape };
    for i in 0..500 {
        if !natural(&random_free(&mut rng, &alphabet, &free_shape)).is_even() {
            return Err(format!("evenness sample {i}"));
        }
    }
    let reps: Vec<_> = (0..=6).map(build_l).collect();
    for i in 0..200 {
        let (a, b) = (random_usl2(&mut rng, &shape), random_usl2(&mut rng, &shape));
        let rep = &reps[i % reps.len()];
        if evaluate(&a.multiply(&b), rep) != &evaluate(&a, rep) * &evaluate(&b, rep) {
            return Err(format!("matrix oracle sample {i}"));
        }
    }
    Ok("1000 + 500 + 500 + 200 samples".into())
}

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match &outcome {
            Ok(_) if elapsed <= c.limit => "PASS",
            _ => "FAIL",
        };
        let detail = match outcome {
            Ok(s) if elapsed <= c.limit => s,
            Ok(s) => format!("{s}; over time limit"),
            Err(e) => e,
        };
        println!(
            "{verdict} criterion {}: {} [{:.2?} of {:?}, tolerance {TOLERANCE}] {detail}",
            c.id, c.name, elapsed, c.limit
        );
        if verdict == "FAIL" {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
