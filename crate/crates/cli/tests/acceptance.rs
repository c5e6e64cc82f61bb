//! Runs the ten acceptance criteria and prints one line per criterion.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ncsphere::config::{RunOptions, SuiteConfig, SuiteName};
use ncsphere::report::{strip_timings, Report, Verdict};
use ncsphere::run_suite;
use ncsphere_core::partition::{Partition, Sign};
use ncsphere_core::permgroup::Permutation;
use serde_json::Value;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, u64);

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Set partitions of m points into blocks of even size.
fn even_partitions(m: usize) -> usize {
    let mut e = vec![1usize; m + 1];
    for n in 1..=m {
        e[n] = (1..n)
            .step_by(2)
            .map(|j| binomial(n - 1, j) * e[n - 1 - j])
            .sum();
    }
    e[m]
}

fn run(suite: SuiteName) -> Result<Report, String> {
    run_suite(suite, &SuiteConfig::default(), &RunOptions::default()).map_err(|e| e.to_string())
}

fn all_pass(r: &Report) -> Check {
    match r.cases.iter().find(|c| c.verdict != Verdict::Pass) {
        Some(c) => Err(format!("{} is {:?}: {}", c.id, c.verdict, c.witness)),
        None => Ok(format!("{} cases", r.cases.len())),
    }
}

fn witness<'a>(r: &'a Report, id: &str) -> Result<&'a Value, String> {
    let c = r.case(id).ok_or_else(|| format!("missing case {id}"))?;
    if c.verdict != Verdict::Pass {
        return Err(format!("{id} is {:?}: {}", c.verdict, c.witness));
    }
    Ok(&c.witness)
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn field(w: &Value, key: &str) -> u64 {
    w[key].as_u64().unwrap_or(u64::MAX)
}

fn signature_calculus() -> Check {
    for k in 1..=6 {
        for sigma in Permutation::all(k) {
            let inversions = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| sigma.image(i + 1) > sigma.image(j + 1))
                .count();
            let sig = Partition::pair_partition(&sigma)
                .signature()
                .map_err(|e| e.to_string())?;
            expect(sig == Sign::from_parity(inversions), || {
                format!("signature of {sigma}")
            })?;
        }
    }
    let r = run(SuiteName::SignatureCalculus)?;
    all_pass(&r)?;
    for points in [2, 4, 6, 8] {
        let w = witness(&r, &format!("signature-calculus/well-defined/p{points}"))?;
        expect(
            field(w, "even_partitions") == even_partitions(points) as u64,
            || format!("{points} points: {w}"),
        )?;
    }
    for k in 1..=6 {
        let w = witness(&r, &format!("signature-calculus/pairing/k{k}"))?;
        expect(field(w, "permutations") == factorial(k) as u64, || {
            format!("k = {k}: {w}")
        })?;
    }
    Ok("S_1..S_6 exhaustive, even partitions on 2..8 points".into())
}

fn clifford_oracle() -> Check {
    let r = run(SuiteName::SignatureCalculus)?;
    let w = witness(&r, "signature-calculus/clifford-oracle")?;
    expect(field(w, "pairs") == 500, || format!("{w}"))?;
    Ok(format!("500 pairs, {} with sign -1", w["minus_signs"]))
}

fn adjacency() -> Check {
    let r = run(SuiteName::AdjacencyWitness)?;
    all_pass(&r)?;
    let searches = r
        .cases
        .iter()
        .filter(|c| c.id.starts_with("adjacency-witness/k"))
        .count();
    let expected: usize = (2..=5).map(|k| factorial(k) - 1).sum();
    expect(searches == expected, || {
        format!("{searches} searches, expected {expected}")
    })?;
    for (sigma, tau) in [
        ("(231)", "(2143)"),
        ("(3412)", "(52143)"),
        ("(2413)", "(4321)"),
        ("(42513)", "(435621)"),
    ] {
        let w = witness(&r, &format!("adjacency-witness/highlight/{sigma}"))?;
        expect(w["element"] == tau && w["member"] == true, || {
            format!("{sigma}: {w}")
        })?;
    }
    expect(
        witness(&r, "adjacency-witness/k3/(231)")?["tau"] == "(2143)",
        || "(231)".into(),
    )?;
    expect(
        witness(&r, "adjacency-witness/k5/(42513)")?["tau"] == "(435621)",
        || "(42513)".into(),
    )?;
    Ok(format!("{searches} searches, 4 highlighted witnesses"))
}

fn parametrization() -> Check {
    let r = run(SuiteName::Parametrization)?;
    all_pass(&r)?;
    for k in 2..=6usize {
        let all = witness(&r, &format!("parametrization/k{k}/all-coarsenings"))?;
        expect(field(all, "size") == 1, || format!("k = {k}: {all}"))?;
        let two = witness(&r, &format!("parametrization/k{k}/two-block"))?;
        let expected = factorial(k.div_ceil(2)) * factorial(k / 2);
        expect(
            field(two, "size") == expected as u64 && two["parity_preserving"] == true,
            || format!("k = {k}: {two}"),
        )?;
    }
    Ok("k = 2..6".into())
}

fn vanish_degree() -> Check {
    let r = run(SuiteName::VanishDegree)?;
    all_pass(&r)?;
    for k in 2..=6 {
        let w = witness(&r, &format!("vanish-degree/k{k}"))?;
        expect(
            field(w, "degree_1") + field(w, "degree_2") == factorial(k) as u64 - 1,
            || format!("k = {k}: {w}"),
        )?;
    }
    Ok("every σ ≠ id, k ≤ 6".into())
}

fn weak_saturation() -> Check {
    let r = run(SuiteName::WeakSaturation)?;
    all_pass(&r)?;
    for name in ["trivial", "half-liberated", "full"] {
        witness(&r, &format!("weak-saturation/fixpoint/{name}"))?;
    }
    let closures = r
        .cases
        .iter()
        .filter(|c| c.id.starts_with("weak-saturation/closure/"))
        .count();
    let expected: usize = (2..=5).map(|k| factorial(k) - 1).sum();
    expect(closures == expected, || format!("{closures} closures"))?;
    Ok(format!("3 fixpoints at K = 6, {closures} closures"))
}

fn intersections() -> Check {
    let r = run(SuiteName::SphereIntersections)?;
    all_pass(&r)?;
    let mut count = 0;
    for field_name in ["real", "complex"] {
        for pair in [
            "classical+twisted",
            "classical+twisted-half",
            "half+twisted",
            "half+twisted-half",
        ] {
            let w = witness(&r, &format!("sphere-intersections/{field_name}/{pair}"))?;
            expect(
                w["certificates_verified"] == true && field(w, "degree") == 4,
                || format!("{pair}: {w}"),
            )?;
            count += 1;
        }
    }
    Ok(format!("{count} identities, N = 3, D = 4"))
}

fn independence() -> Check {
    let r = run(SuiteName::Independence)?;
    let mut expected = vec![("independence/unit-circle-cubics".to_string(), 6)];
    for n in [2usize, 3] {
        expected.push((
            format!("independence/half-liberated/n{n}"),
            2 * n * (n - 1) + n,
        ));
    }
    expected.push(("independence/classical-quadratics".into(), 3 * 4 / 2));
    expected.push(("independence/clifford-cubics".into(), 3 * 2));
    for (id, rank) in &expected {
        let w = witness(&r, id)?;
        expect(field(w, "rank") == *rank as u64, || format!("{id}: {w}"))?;
    }
    Ok("(a) 6, (b) 6 and 15, (c) 6, (d) 6".into())
}

fn quantum_relations() -> Check {
    let r = run(SuiteName::QuantumRelations)?;
    all_pass(&r)?;
    for n in [2, 3] {
        let w = witness(
            &r,
            &format!("quantum-relations/monomial/random-orthogonal/n{n}"),
        )?;
        expect(field(w, "samples") >= 1000, || format!("{w}"))?;
    }
    Ok(format!("{} cases", r.cases.len()))
}

fn determinism() -> Check {
    let dir = std::env::temp_dir().join(format!("ncsphere-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut reports = Vec::new();
    for i in 0..2 {
        let path = dir.join(format!("all-{i}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_ncsphere"))
            .args(["all", "--seed", "0", "--no-cache", "--out"])
            .arg(&path)
            .stdout(std::process::Stdio::null())
            .status()
            .map_err(|e| e.to_string())?;
        expect(status.success(), || format!("run {i} exited with {status}"))?;
        let json = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        reports.push(strip_timings(&json).map_err(|e| e.to_string())?);
    }
    let _ = std::fs::remove_dir_all(&dir);
    expect(reports[0] == reports[1], || "reports differ".into())?;
    Ok(format!(
        "{} bytes, identical modulo timings",
        reports[0].len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("signature calculus", signature_calculus, 120),
        ("Clifford cross-oracle", clifford_oracle, 120),
        ("adjacency witnesses", adjacency, 60),
        ("parametrization", parametrization, 120),
        ("vanish degree", vanish_degree, 180),
        ("weak saturation", weak_saturation, 180),
        ("sphere intersections", intersections, 180),
        ("independence", independence, 120),
        ("quantum relations", quantum_relations, 300),
        ("determinism", determinism, 600),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.into_iter().enumerate() {
        let started = Instant::now();
        let mut result = check();
        let elapsed = started.elapsed();
        if result.is_ok() && elapsed > Duration::from_secs(budget) {
            result = Err(format!("over the {budget} s budget"));
        }
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d.clone()),
            Err(d) => {
                failed += 1;
                ("FAIL", d.clone())
            }
        };
        println!(
            "[{tag}] criterion {}: {name}: {detail} ({:.1} s)",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
