//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fail.
//!
//! Reference values come from small oracles defined in this file (plain
//! dynamic programming in machine integers, bit tricks, Legendre sums) so
//! that no criterion is checked only against the library's own routes.

use std::collections::HashSet;
use std::process::Command;
use std::time::{Duration, Instant};

use partcount_core::asymptotics::{
    leading_coefficient, ratio_report, residue_reports, FiniteSetA, Target,
};
use partcount_core::carlitz::{carlitz_table_gf, carlitz_table_rec};
use partcount_core::identities::{catalog, default_sets, verify, verify_entries, Status};
use partcount_core::oracle::{enumerate_carlitz, Oracle};
use partcount_core::partitions::{
    np_table_conv, np_table_gf, nq_table_conv, nq_table_gf, p_table, parity_diff_table, q_table,
};
use partcount_core::{BigInt, BigRational, Flavor, PartSet, SetKind};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_secs: u64) -> Result<(), String> {
    ensure(elapsed < Duration::from_secs(limit_secs), || {
        format!("took {elapsed:.2?}, limit {limit_secs} s")
    })
}

/// `(p_A(n), N^p_A(n))` for `n = 0..=n_max` by coin-change DP over `u128`.
fn dp_counts(parts: &[usize], n_max: usize) -> (Vec<u128>, Vec<u128>) {
    let mut count = vec![0u128; n_max + 1];
    let mut total_parts = vec![0u128; n_max + 1];
    count[0] = 1;
    for &a in parts {
        for n in a..=n_max {
            total_parts[n] += total_parts[n - a] + count[n - a];
            count[n] += count[n - a];
        }
    }
    (count, total_parts)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let oracle = Oracle::default();
    let mut checked = 0;
    for set in default_sets() {
        let n_max = if set.kind() == SetKind::Naturals {
            18
        } else {
            25
        };
        let engine = [
            p_table(&set, n_max).values,
            q_table(&set, n_max).values,
            np_table_gf(&set, n_max).values,
            nq_table_gf(&set, n_max).values,
            parity_diff_table(&set, n_max, Flavor::Partition).values,
            parity_diff_table(&set, n_max, Flavor::Distinct).values,
            carlitz_table_gf(&set, n_max).values,
        ];
        for n in 0..=n_max {
            let o = oracle.counts(n, &set).map_err(|e| e.to_string())?;
            let brute = [
                &o.p,
                &o.q,
                &o.np,
                &o.nq,
                &o.p_parity_diff,
                &o.q_parity_diff,
                &o.cl,
            ];
            for (field, (b, e)) in brute.iter().zip(&engine).enumerate() {
                ensure(**b == e[n], || {
                    format!("{set} n={n} field #{field}: oracle {b}, engine {}", e[n])
                })?;
                checked += 1;
            }
        }
    }
    within(start.elapsed(), 60)?;
    Ok(format!(
        "{checked} values over 9 sets in {:.2?}",
        start.elapsed()
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let entries: Vec<_> = catalog().iter().collect();
    let reports = verify_entries(&entries, &default_sets(), |s| {
        if s.is_finite() {
            300
        } else {
            200
        }
    });
    if let Some(bad) = reports.iter().find(|r| r.status == Status::Failure) {
        return Err(bad.to_json());
    }
    let held: HashSet<&str> = reports
        .iter()
        .filter(|r| r.status == Status::AllHold)
        .map(|r| r.id.as_str())
        .collect();
    ensure(held.len() == catalog().len(), || {
        format!("only {} of {} identities ran", held.len(), catalog().len())
    })?;
    ensure(held.len() >= 24, || {
        format!("catalog has {} identities", held.len())
    })?;
    // the complement identities need small finite sets to say anything
    for spec in ["finite:2", "finite:2,3"] {
        let set: PartSet = spec.parse().map_err(|e| format!("{e}"))?;
        for id in ["T2.3a", "T2.3b"] {
            let r = verify(id, &set, 300).map_err(|e| e.to_string())?;
            ensure(r.status == Status::AllHold, || r.to_json())?;
        }
    }
    within(start.elapsed(), 60)?;
    Ok(format!(
        "{} identities, {} reports, all hold, {:.2?}",
        held.len(),
        reports.len(),
        start.elapsed()
    ))
}

fn criterion_3() -> Outcome {
    const N: usize = 500;
    for set in default_sets() {
        ensure(
            np_table_gf(&set, N).values == np_table_conv(&set, N).values,
            || format!("np routes differ on {set}"),
        )?;
        ensure(
            nq_table_gf(&set, N).values == nq_table_conv(&set, N).values,
            || format!("nq routes differ on {set}"),
        )?;
        ensure(
            carlitz_table_gf(&set, N) == carlitz_table_rec(&set, N),
            || format!("cl routes differ on {set}"),
        )?;
    }
    Ok(format!("np, nq, cl agree on 9 sets for n <= {N}"))
}

fn criterion_4() -> Outcome {
    const N: u64 = 100_000;
    let h = |n: u64| n.count_ones() as i64;
    let v2 = |n: u64| n.trailing_zeros() as i64;
    // Legendre: v2(n!) = Σ floor(n / 2^i)
    let legendre = |n: u64| (1..64).map(|i| (n >> i) as i64).sum::<i64>();
    for n in 2..=N {
        ensure(h(n) == h(n - 1) + 1 - v2(n), || {
            format!("recurrence fails at {n}")
        })?;
    }
    for n in 1..=N {
        ensure(legendre(n) == n as i64 - h(n), || {
            format!("factorial form fails at {n}")
        })?;
    }
    let binary = PartSet::prime_powers(2).map_err(|e| e.to_string())?;
    for id in ["C-hamming", "C-hamming-factorial"] {
        let r = verify(id, &binary, N as usize).map_err(|e| e.to_string())?;
        ensure(r.status == Status::AllHold, || r.to_json())?;
    }
    Ok(format!(
        "both forms exact for n <= {N}; catalog entries agree"
    ))
}

const QUASI_SETS: [&[usize]; 4] = [&[1, 2], &[1, 2, 3], &[2, 3, 5], &[3, 4, 5]];

/// Runs one target over all residues with `l ∈ [1, k+4]`, checking the
/// samples against the DP oracle and the top difference against `expected`.
fn quasi_check(target: Target, expected_for: impl Fn(&[usize]) -> BigInt) -> Result<usize, String> {
    let mut residues = 0;
    for els in QUASI_SETS {
        let a = FiniteSetA::new(els.iter().copied()).map_err(|e| e.to_string())?;
        let (k, period) = (els.len(), a.period());
        let reports = residue_reports(&a, target, 1, k + 3).map_err(|e| e.to_string())?;
        let (count, parts) = dp_counts(els, period * (k + 5));
        let reference = match target {
            Target::P => count,
            Target::Np => parts,
        };
        let expected = expected_for(els);
        ensure(reports.len() == period, || {
            format!("{els:?}: {} residues", reports.len())
        })?;
        for rep in &reports {
            let want: Vec<BigInt> = (1..=k + 4)
                .map(|l| BigInt::from(reference[period * l + rep.r]))
                .collect();
            ensure(rep.samples == want, || {
                format!("{els:?} r={}: samples differ from DP", rep.r)
            })?;
            ensure(rep.differences.iter().all(|d| *d == expected), || {
                format!(
                    "{els:?} r={}: differences {:?}, expected {expected}",
                    rep.r, rep.differences
                )
            })?;
            ensure(rep.matches, || {
                format!("{els:?} r={} not flagged as match", rep.r)
            })?;
            residues += 1;
        }
    }
    Ok(residues)
}

fn criterion_5() -> Outcome {
    let residues = quasi_check(Target::P, |els| {
        let period: u64 = els.iter().map(|&a| a as u64).product();
        BigInt::from(period.pow(els.len() as u32 - 2))
    })?;
    Ok(format!(
        "(k-1)-th differences constant = P^(k-2) on {residues} residues"
    ))
}

fn criterion_6() -> Outcome {
    let formula = |els: &[usize]| -> BigInt {
        let k = els.len() as u32;
        (0..els.len())
            .map(|i| {
                let others: u64 = (0..els.len())
                    .filter(|&j| j != i)
                    .map(|j| (els[j] as u64).pow(k - 1))
                    .product();
                BigInt::from((els[i] as u64).pow(k - 2) * others)
            })
            .sum()
    };
    ensure(
        formula(&[1, 2]) == BigInt::from(3) && formula(&[1, 2, 3]) == BigInt::from(66),
        || "closed form does not give 3 and 66".into(),
    )?;
    let residues = quasi_check(Target::Np, formula)?;
    Ok(format!(
        "k-th differences constant = k!*c_k on {residues} residues"
    ))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let pair = FiniteSetA::new([1, 2]).map_err(|e| e.to_string())?;
    let triple = FiniteSetA::new([1, 2, 3]).map_err(|e| e.to_string())?;
    let quadratic = &ratio_report(&pair, &[1000])[0];
    let cubic = ratio_report(&triple, &[300, 3000]);
    within(start.elapsed(), 30)?;

    // independent recomputation of the ratio at n = 3000
    let (_, parts) = dp_counts(&[1, 2, 3], 3000);
    let c = leading_coefficient(&triple).c;
    let direct = BigRational::from_integer(BigInt::from(parts[3000]))
        / (c * BigRational::from_integer(BigInt::from(3000u64.pow(3))));
    ensure(direct == cubic[1].ratio, || {
        "ratio at 3000 disagrees with DP".into()
    })?;

    let pct = |n: i64| BigRational::new(n.into(), 100.into());
    ensure(quadratic.deviation() < pct(1), || {
        format!("{{1,2}} at 1000: {}", quadratic.decimal)
    })?;
    ensure(cubic[1].deviation() < pct(5), || {
        format!("{{1,2,3}} at 3000: {}", cubic[1].decimal)
    })?;
    ensure(cubic[1].deviation() < cubic[0].deviation(), || {
        format!(
            "{{1,2,3}}: 300 -> {}, 3000 -> {}",
            cubic[0].decimal, cubic[1].decimal
        )
    })?;
    Ok(format!(
        "{{1,2}}@1000 = {}, {{1,2,3}}@300 = {}, @3000 = {}, {:.2?}",
        quadratic.decimal,
        cubic[0].decimal,
        cubic[1].decimal,
        start.elapsed()
    ))
}

fn criterion_8() -> Outcome {
    let expected: Vec<BigInt> = [1, 1, 1, 3, 4, 7, 14]
        .into_iter()
        .map(BigInt::from)
        .collect();
    let n = PartSet::naturals();
    let gf = carlitz_table_gf(&n, 6).values;
    let rec = carlitz_table_rec(&n, 6).values;
    let enumerated: Vec<BigInt> = (0..=6)
        .map(|m| enumerate_carlitz(m, &n).map(|v| BigInt::from(v.len())))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    // plain count of words with no equal neighbours, by last part
    let mut by_last = vec![vec![0u64; 7]; 7];
    let mut naive = vec![1u64; 7];
    for m in 1..=6 {
        for last in 1..=m {
            by_last[m][last] = if m == last {
                1
            } else {
                (1..=m - last)
                    .filter(|&x| x != last)
                    .map(|x| by_last[m - last][x])
                    .sum()
            };
        }
        naive[m] = by_last[m].iter().sum();
    }
    let naive: Vec<BigInt> = naive.into_iter().map(BigInt::from).collect();
    for (name, got) in [
        ("gf", &gf),
        ("recurrence", &rec),
        ("enumeration", &enumerated),
        ("word count", &naive),
    ] {
        ensure(*got == expected, || format!("{name}: {got:?}"))?;
    }
    Ok("1,1,1,3,4,7,14 from gf, recurrence, enumeration".into())
}

fn criterion_9() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_partcount"))
            .args(["verify", "--identity", "all", "--n-max", "200"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(
        a.status.code() == Some(0) && b.status.code() == Some(0),
        || format!("exit codes {:?} {:?}", a.status.code(), b.status.code()),
    )?;
    ensure(!a.stdout.is_empty() && a.stdout == b.stdout, || {
        "outputs differ".into()
    })?;
    Ok(format!("{} bytes, identical", a.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("oracle equivalence", criterion_1),
        ("identity suite", criterion_2),
        ("dual-route equality", criterion_3),
        ("hamming recurrence", criterion_4),
        ("p_A quasi-polynomial differences", criterion_5),
        ("N^p_A quasi-polynomial differences", criterion_6),
        ("leading-term ratio", criterion_7),
        ("carlitz spot values", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS  {}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {}. {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
