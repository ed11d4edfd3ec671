//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fail.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use invseq::bijections::{theta, theta_inverse};
use invseq::checks::{bijection_suite, run_check, scan_schroder_pairs, Theorem, CONJECTURED_PAIRS};
use invseq::enumerate::{
    baxter_closed_form, baxter_generating_tree, catalan_triangle, gen_permutations, invseq_avoiders, schroder_triangle,
    Avoidance,
};
use invseq::series::{check, Identity};
use invseq::words::RelationTriple;

type Outcome = Result<(), String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn theorem(t: Theorem, max_n: usize) -> Outcome {
    let report = run_check(t, max_n, false);
    if report.passed {
        return Ok(());
    }
    let bad = report.sizes.iter().find(|s| !s.passed).unwrap();
    Err(format!(
        "{} at n = {}: {}",
        t,
        bad.n,
        bad.failure.clone().unwrap_or_default()
    ))
}

fn identity(id: Identity, order: usize) -> Outcome {
    let r = check(id, order);
    match r.passed {
        true => Ok(()),
        false => Err(format!("{}: {}", id, r.failure.unwrap_or_default())),
    }
}

fn expect_counts(what: &str, got: &[BigUint], want: &[u64]) -> Outcome {
    let want: Vec<BigUint> = want.iter().map(|&x| x.into()).collect();
    if got != want {
        return Err(format!("{what}: {got:?} vs {want:?}"));
    }
    Ok(())
}

fn catalan_counts() -> Outcome {
    let want = [1, 2, 5, 14, 42, 132, 429, 1430];
    let brute: Vec<BigUint> = (1..=8)
        .map(|n| {
            invseq_avoiders(n, &Avoidance::Triple(RelationTriple::CATALAN))
                .len()
                .into()
        })
        .collect();
    expect_counts("brute force", &brute, &want)?;
    expect_counts("recurrence", &catalan_triangle(8).row_sums(), &want)
}

fn ballot_golden() -> Outcome {
    let golden: Vec<Vec<BigUint>> = include_str!("data/a009766.txt")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(|x| x.parse().unwrap()).collect())
        .collect();
    let t = catalan_triangle(10);
    for (i, row) in golden.iter().enumerate() {
        if t.row(i + 1) != row.as_slice() {
            return Err(format!("row {}: {:?} vs {row:?}", i + 1, t.row(i + 1)));
        }
    }
    Ok(())
}

fn pair_scan() -> Outcome {
    let scan = scan_schroder_pairs(8);
    let mut want: Vec<(String, String)> = CONJECTURED_PAIRS
        .iter()
        .map(|&(a, b)| (a.to_string(), b.to_string()))
        .collect();
    want.sort();
    let mut got = scan.pairs.clone();
    got.sort();
    if got != want {
        return Err(format!("found {:?}", scan.pairs));
    }
    Ok(())
}

fn baxter() -> Outcome {
    let totals = baxter_generating_tree(12).totals();
    for (i, total) in totals.iter().enumerate() {
        let n = i as u64 + 1;
        let closed = baxter_closed_form(n).map_err(|e| e.to_string())?;
        if *total != closed {
            return Err(format!("tree total {total} vs closed form {closed} at n = {n}"));
        }
    }
    if totals.len() != 12 {
        return Err(format!("tree has {} levels", totals.len()));
    }
    theorem(Theorem::Thm4_1, 8)?;
    theorem(Theorem::Cor4_2, 8)
}

fn theta_round_trip() -> Outcome {
    match gen_permutations(7).all(|pi| theta_inverse(&theta(&pi)) == pi) {
        true => Ok(()),
        false => Err("theta does not round-trip on S_7".into()),
    }
}

fn criteria() -> Vec<Criterion> {
    vec![
        (
            "Catalan counts, brute force and recurrence, n <= 8",
            Box::new(catalan_counts),
        ),
        ("Catalan triangle rows 1..10 equal A009766", Box::new(ballot_golden)),
        (
            "dist over I_n(>=,-,>=) ~ des over S_n(123), n <= 9; dist o.g.f. at order 9",
            Box::new(|| {
                theorem(Theorem::Thm2_2, 9)?;
                identity(Identity::DistOgf, 9)
            }),
        ),
        (
            "last-entry identity and four-term recurrence, n <= 9",
            Box::new(|| theorem(Theorem::Thm3_1, 9)),
        ),
        (
            "Schröder pair scan at n = 8 finds exactly the nine pairs",
            Box::new(pair_scan),
        ),
        (
            "sextuple equidistribution and large Schröder counts, n <= 8",
            Box::new(|| {
                expect_counts(
                    "row sums",
                    &schroder_triangle(8).row_sums(),
                    &[1, 2, 6, 22, 90, 394, 1806, 8558],
                )?;
                theorem(Theorem::Thm3_6, 8)
            }),
        ),
        (
            "ascent/distinct-value equidistributions n <= 8; triple asc coincidence and palindromicity n <= 10",
            Box::new(|| {
                theorem(Theorem::Thm3_4, 8)?;
                theorem(Theorem::Thm3_5, 8)?;
                theorem(Theorem::Palindromic, 10)
            }),
        ),
        (
            "Baxter tree vs closed form n <= 12; lma+rma and B(n,k) identities n <= 8",
            Box::new(baxter),
        ),
        (
            "series: baxter-fe 8, kernel-root 10, main-identity 8, bousquet-side 7",
            Box::new(|| {
                identity(Identity::BaxterFe, 8)?;
                identity(Identity::KernelRoot, 10)?;
                identity(Identity::MainIdentity, 8)?;
                identity(Identity::BousquetSide, 7)
            }),
        ),
        (
            "Euler and Entringer counts; simsun equidistributions, n <= 8",
            Box::new(|| {
                theorem(Theorem::Entringer, 8)?;
                theorem(Theorem::Thm5_1, 8)?;
                theorem(Theorem::Thm5_2, 8)
            }),
        ),
        (
            "foundational equidistributions n <= 7; theta round trip on S_7",
            Box::new(|| {
                theorem(Theorem::Eq1, 7)?;
                theorem(Theorem::Thm1_1, 7)?;
                theta_round_trip()
            }),
        ),
        (
            "explicit bijections are bijective, n <= 8",
            Box::new(|| (0..=8).try_for_each(|n| bijection_suite(n).map_err(|e| e.to_string()))),
        ),
    ]
}

fn main() -> ExitCode {
    let mut failed = 0;
    for (i, (name, run)) in criteria().into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({})", i + 1, secs(took)),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({}): {why}", i + 1, secs(took));
            }
        }
    }
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}
