//! One function per subcommand. Each returns the full output text and
//! whether every check passed; nothing is printed here.

use partcount_core::arith::{hamming_weight, p_adic_valuation, DivisorFnKind};
use partcount_core::asymptotics::{ratio_report, residue_reports, FiniteSetA, Target};
use partcount_core::carlitz::carlitz_table_gf;
use partcount_core::identities::{
    self, default_sets, lookup, verify_entries, IdentityEntry, Status,
};
use partcount_core::oracle::{Guardrails, Oracle};
use partcount_core::partitions::{
    divisor_table, np_table_gf, nq_table_gf, p_table, parity_diff_table, q_table,
};
use partcount_core::{BigInt, Flavor, PartSet};
use serde::Serialize;
use serde_json::json;

use crate::args::{
    AsymptoticsArgs, ComputeArgs, FnName, Format, OracleDiffArgs, TargetArg, VerifyArgs,
};

#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

fn json_only(format: Format) -> Result<(), UsageError> {
    match format {
        Format::Json => Ok(()),
        Format::Csv => Err(UsageError(
            "CSV is only available for two-column `compute` tables".into(),
        )),
    }
}

fn lines(rows: impl IntoIterator<Item = String>) -> String {
    rows.into_iter()
        .map(|mut l| {
            l.push('\n');
            l
        })
        .collect()
}

fn values_for(args: &ComputeArgs) -> Result<Vec<BigInt>, UsageError> {
    let set = &args.set;
    let n = usize::try_from(args.n_max)?;
    let divisors = |kind| divisor_table(kind, set, n);
    Ok(match args.function {
        FnName::P => p_table(set, n).values,
        FnName::Q => q_table(set, n).values,
        FnName::Np => np_table_gf(set, n).values,
        FnName::Nq => nq_table_gf(set, n).values,
        FnName::PParityDiff => parity_diff_table(set, n, Flavor::Partition).values,
        FnName::QParityDiff => parity_diff_table(set, n, Flavor::Distinct).values,
        FnName::Tau => divisors(DivisorFnKind::TAU),
        FnName::TauS => divisors(DivisorFnKind::TAU_S),
        FnName::Sigma => divisors(DivisorFnKind::SIGMA),
        FnName::SigmaS => divisors(DivisorFnKind::SIGMA_S),
        FnName::Cl => carlitz_table_gf(set, n).values,
        FnName::Hamming => (0..=args.n_max)
            .map(|m| BigInt::from(hamming_weight(m)))
            .collect(),
        FnName::Vp => {
            p_adic_valuation(args.prime, 1)?;
            std::iter::once(BigInt::from(0))
                .chain(
                    (1..=args.n_max).map(|m| {
                        BigInt::from(p_adic_valuation(args.prime, m).expect("prime checked"))
                    }),
                )
                .collect()
        }
    })
}

pub fn compute(args: &ComputeArgs) -> Result<Outcome, UsageError> {
    let values = values_for(args)?;
    let rows = values.iter().enumerate().skip(args.function.first_n());
    let text = match args.output.format {
        Format::Json => {
            lines(rows.map(|(n, v)| json!({ "n": n, "value": v.to_string() }).to_string()))
        }
        Format::Csv => {
            let mut out = String::from("n,value\n");
            out.push_str(&lines(rows.map(|(n, v)| format!("{n},{v}"))));
            out
        }
    };
    Ok(Outcome { text, passed: true })
}

pub fn verify(args: &VerifyArgs) -> Result<Outcome, UsageError> {
    json_only(args.output.format)?;
    let n_max = usize::try_from(args.n_max)?;
    let entries: Vec<&'static IdentityEntry> = if args.identity == "all" {
        identities::catalog().iter().collect()
    } else {
        let entry = lookup(&args.identity)
            .ok_or_else(|| UsageError(format!("unknown identity `{}`", args.identity)))?;
        vec![entry]
    };
    let reports = match &args.set {
        Some(set) => {
            if let [entry] = entries[..] {
                if !entry.constraint.admits(set) {
                    return Err(UsageError(format!(
                        "identity {} requires a {} set, got {set}",
                        entry.id,
                        entry.constraint.describe()
                    )));
                }
            }
            // an explicit set replaces the built-in sets of fixed-set entries
            let mut reports = verify_entries(&entries, std::slice::from_ref(set), |_| n_max);
            reports.retain(|r| r.set == set.to_string());
            reports
        }
        None => verify_entries(&entries, &default_sets(), |_| n_max),
    };
    let passed = reports.iter().all(|r| r.status != Status::Failure);
    Ok(Outcome {
        text: lines(reports.iter().map(|r| r.to_json())),
        passed,
    })
}

pub fn asymptotics(args: &AsymptoticsArgs) -> Result<Outcome, UsageError> {
    json_only(args.output.format)?;
    let a = FiniteSetA::from_part_set(&args.set)?;
    let targets: &[Target] = match args.target {
        TargetArg::P => &[Target::P],
        TargetArg::Np => &[Target::Np],
        TargetArg::Both => &[Target::P, Target::Np],
    };
    if let Some(&bad) = args.ratio_n.iter().find(|&&n| n == 0) {
        return Err(UsageError(format!(
            "ratio points must be at least 1, got {bad}"
        )));
    }
    let l_max = args.l_max.unwrap_or(a.k() + 4);
    let mut out = Vec::new();
    let mut passed = true;
    for &target in targets {
        let window = l_max
            .checked_sub(1)
            .filter(|&w| w >= target.degree(&a) + 2)
            .ok_or_else(|| {
                UsageError(format!(
                    "--l-max {l_max} is too small for degree {}",
                    target.degree(&a)
                ))
            })?;
        for report in residue_reports(&a, target, 1, window)? {
            passed &= report.matches;
            out.push(report.to_json());
        }
    }
    if args.strict {
        for &target in targets {
            for report in residue_reports(&a, target, 0, l_max)? {
                out.push(report.to_json());
            }
        }
    }
    out.extend(
        ratio_report(&a, &args.ratio_n)
            .iter()
            .map(|row| row.to_json()),
    );
    Ok(Outcome {
        text: lines(out),
        passed,
    })
}

#[derive(Serialize)]
struct FieldMismatch {
    field: &'static str,
    oracle: String,
    engine: String,
}

#[derive(Serialize)]
struct OracleRow<'a> {
    n: usize,
    set: &'a str,
    #[serde(rename = "match")]
    matches: bool,
    mismatches: Vec<FieldMismatch>,
}

const ORACLE_FIELDS: [&str; 7] = ["p", "q", "np", "nq", "p_parity_diff", "q_parity_diff", "cl"];

pub fn oracle_diff(args: &OracleDiffArgs) -> Result<Outcome, UsageError> {
    json_only(args.output.format)?;
    let n_max = usize::try_from(args.n_max)?;
    let set: &PartSet = &args.set;
    let oracle = Oracle::new(Guardrails::from_env());
    let limit = oracle
        .guardrails
        .partitions
        .min(oracle.guardrails.compositions);
    if n_max > limit {
        // the guardrail check fires before any enumeration
        oracle.counts(n_max, set)?;
    }
    let engine: [Vec<BigInt>; 7] = [
        p_table(set, n_max).values,
        q_table(set, n_max).values,
        np_table_gf(set, n_max).values,
        nq_table_gf(set, n_max).values,
        parity_diff_table(set, n_max, Flavor::Partition).values,
        parity_diff_table(set, n_max, Flavor::Distinct).values,
        carlitz_table_gf(set, n_max).values,
    ];
    let set_name = set.to_string();
    let mut out = Vec::new();
    let mut passed = true;
    for n in 0..=n_max {
        let o = oracle.counts(n, set)?;
        let brute = [
            &o.p,
            &o.q,
            &o.np,
            &o.nq,
            &o.p_parity_diff,
            &o.q_parity_diff,
            &o.cl,
        ];
        let mismatches: Vec<_> = ORACLE_FIELDS
            .iter()
            .zip(brute)
            .zip(&engine)
            .filter(|((_, b), e)| **b != e[n])
            .map(|((&field, b), e)| FieldMismatch {
                field,
                oracle: b.to_string(),
                engine: e[n].to_string(),
            })
            .collect();
        passed &= mismatches.is_empty();
        let row = OracleRow {
            n,
            set: &set_name,
            matches: mismatches.is_empty(),
            mismatches,
        };
        out.push(serde_json::to_string(&row).expect("plain data"));
    }
    Ok(Outcome {
        text: lines(out),
        passed,
    })
}
