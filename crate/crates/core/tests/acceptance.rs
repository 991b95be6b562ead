//! Acceptance run: one line per criterion, zero tolerance, non-zero exit on
//! any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use principal_yangian::exact_arith::{int, rat, Rat};
use principal_yangian::principal_gl::checks as gl;
use principal_yangian::rep_engine::{
    build_tensor_module, burnside_dimension, calibrate, corollary52, irreducibility, verify_theorem51, Irreducibility,
};
use principal_yangian::report::CheckReport;
use principal_yangian::yangian_core::checks as yc;
use principal_yangian::yangian_core::InverseVariant;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    ok: bool,
    detail: String,
}

fn all_pass(reports: &[CheckReport]) -> Result<usize, String> {
    let mut tested = 0;
    for r in reports {
        if !r.passed {
            let first = r.failures.first().map(|f| f.index.as_str()).unwrap_or("-");
            return Err(format!("{} (n={}) failed at {first}", r.check, r.n));
        }
        tested += r.indices_tested;
    }
    Ok(tested)
}

fn outcome(res: Result<String, String>) -> Outcome {
    match res {
        Ok(detail) => Outcome { ok: true, detail },
        Err(detail) => Outcome { ok: false, detail },
    }
}

fn within(limit: Duration, start: Instant, res: Result<String, String>) -> Result<String, String> {
    let elapsed = start.elapsed();
    let detail = res?;
    if elapsed >= limit {
        return Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}"));
    }
    Ok(format!("{detail}; {elapsed:.2?} < {limit:?}"))
}

fn criterion_1() -> Result<String, String> {
    let start = Instant::now();
    let res = (|| {
        let reports: Vec<_> = (2..=8)
            .flat_map(|n| [gl::product_law(n), gl::commutator_law(n)])
            .collect();
        Ok(format!("{} products and commutators, n = 2..8", all_pass(&reports)?))
    })();
    within(Duration::from_secs(5), start, res)
}

fn criterion_2() -> Result<String, String> {
    let reports: Vec<_> = (2..=8)
        .flat_map(|n| [gl::cartan_action_law(n), gl::sigma_eigen(n)])
        .collect();
    Ok(format!("{} gradation and σ-eigen identities, n = 2..8", all_pass(&reports)?))
}

fn criterion_3() -> Result<String, String> {
    let reports: Vec<_> = (2..=8).map(gl::invariant_form).collect();
    Ok(format!("{} pairings, n = 2..8", all_pass(&reports)?))
}

fn criterion_4() -> Result<String, String> {
    let reports: Vec<_> = (2..=6).map(gl::permutation_expansion).collect();
    Ok(format!("{} entries, n = 2..6", all_pass(&reports)?))
}

fn criterion_5() -> Result<String, String> {
    let mut corrected = Vec::new();
    let mut printed = Vec::new();
    for n in 2..=6 {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        corrected.push(yc::isomorphism_round_trip(n, 3, 5, InverseVariant::Corrected, &mut rng).map_err(|e| e.to_string())?);
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        printed.push(yc::isomorphism_round_trip(n, 3, 5, InverseVariant::AsPrinted, &mut rng).map_err(|e| e.to_string())?);
    }
    let tested = all_pass(&corrected)?;
    let broken: Vec<String> = printed
        .iter()
        .map(|r| format!("n={}: {}", r.n, r.failure_count()))
        .collect();
    if printed.iter().any(|r| r.failures.is_empty()) {
        return Err(format!("as-printed inverse round-tripped somewhere: [{}]", broken.join(", ")));
    }
    Ok(format!(
        "corrected: {tested} entries exact; as-printed failures [{}]",
        broken.join(", ")
    ))
}

fn criterion_6() -> Result<String, String> {
    let mut reports = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for n in 2..=4 {
        reports.push(yc::qybe_check(n));
        reports.push(yc::qybe_negative_control(n, &mut rng));
    }
    for n in 2..=3 {
        reports.extend(yc::rtt_checks(n));
    }
    let controls = reports
        .iter()
        .filter(|r| r.expectation == principal_yangian::report::Expectation::Nonzero)
        .count();
    Ok(format!(
        "{} coefficients; QYBE n = 2..4, RTT n = 2..3, {controls} negative controls nonzero",
        all_pass(&reports)?
    ))
}

fn criterion_7() -> Result<String, String> {
    let mut survivors = Vec::new();
    for n in 2..=3 {
        let survey = yc::relation_survey(n, 2).map_err(|e| e.to_string())?;
        if !survey.summary.passed {
            return Err(format!("n={n}: {}", survey.summary.note.unwrap_or_default()));
        }
        let names: Vec<&str> = survey.survivors.iter().map(|v| v.name()).collect();
        survivors.push(format!("n={n}: [{}]", names.join(",")));
    }
    Ok(format!("surviving exponent variant {}", survivors.join(" ")))
}

fn criterion_8() -> Result<String, String> {
    let start = Instant::now();
    let res = (|| {
        let cal = calibrate().map_err(|e| e.to_string())?;
        let samples = [(int(1), int(0)), (rat(2, 1), rat(1, 3)), (rat(-7, 5), rat(3, 8))];
        for (a, b) in &samples {
            let r = verify_theorem51(a, b, &cal.c, cal.convention);
            if !r.passed() || r.entries.len() != 72 {
                return Err(format!("({a}, {b}): {} of 72 failed", r.failure_count()));
            }
        }
        Ok(format!(
            "c = {}, convention {}, 72/72 at {} pairs",
            cal.c,
            cal.convention,
            samples.len()
        ))
    })();
    within(Duration::from_secs(10), start, res)
}

fn criterion_9() -> Result<String, String> {
    let c = calibrate().map_err(|e| e.to_string())?;
    let module = |a: &Rat, b: &Rat| build_tensor_module(a.clone(), b.clone(), c.c.clone());
    for (a, b) in [(int(1), int(0)), (int(2), rat(1, 3)), (int(0), int(0))] {
        let d = burnside_dimension(&module(&a, &b));
        if d != 81 {
            return Err(format!("Burnside dimension {d} at ({a}, {b})"));
        }
    }
    for ((a, b), dim) in [((rat(3, 2), int(0)), 1), ((int(0), rat(3, 2)), 8)] {
        let r = corollary52(&module(&a, &b), c.convention).map_err(|e| e.to_string())?;
        let unique = r.proper_submodules == vec![dim] && r.distinct_proper_closures == 1;
        if !(unique && r.consistent) {
            return Err(format!("({a}, {b}): proper {:?}, verdict {:?}", r.proper_submodules, r.verdict));
        }
    }
    let shifts = [int(1), rat(-2, 3), rat(5, 4)];
    for (a, b) in [(int(1), int(0)), (rat(3, 2), int(0)), (int(0), rat(3, 2))] {
        let base = irreducibility(&module(&a, &b));
        for t in &shifts {
            let shifted = irreducibility(&module(&(&a + t), &(&b + t)));
            if shifted != base {
                return Err(format!("verdict changed under shift {t} at ({a}, {b})"));
            }
        }
    }
    let v = irreducibility(&module(&rat(3, 2), &int(0)));
    if v != (Irreducibility::Reducible { submodule_dims: vec![1] }) {
        return Err(format!("unexpected verdict {v:?}"));
    }
    Ok("Burnside 81 at 3 pairs; unique proper submodules of dim 1 and 8; invariant under 3 shifts".into())
}

fn criterion_10() -> Result<String, String> {
    let reports: Vec<_> = (2..=8)
        .flat_map(|n| [gl::fourier_action(n), gl::fourier_pairing(n)])
        .collect();
    Ok(format!("{} Fourier identities, n = 2..8", all_pass(&reports)?))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<String, String>); 10] = [
        ("principal algebra laws", criterion_1),
        ("gradation and σ eigenvalues", criterion_2),
        ("invariant form", criterion_3),
        ("two expansions of P", criterion_4),
        ("presentation round trip", criterion_5),
        ("Yang-Baxter and RTT", criterion_6),
        ("principal relations in representation", criterion_7),
        ("closed-form action on entangled basis", criterion_8),
        ("irreducibility", criterion_9),
        ("Fourier basis", criterion_10),
    ];
    let mut failed = 0;
    for (idx, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = outcome(run());
        if !o.ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {:<40} {}  {} [{:.2?}]",
            idx + 1,
            name,
            if o.ok { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
