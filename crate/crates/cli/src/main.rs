//! Batch command line front end: compute, verify, and export weight-count
//! tables and class listings.

mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use stubborn_weights::{
    automizer_of, count_weights_enum_with, count_weights_gf, enumerate_labels_with,
    exceptional_weight_count, expected_verdict, is_prime, verify, weight_contribution,
    ClassWeight, Error, GroupSpec, Verdict, WeightReport,
};

use output::{ClassDoc, ClassesDoc, CountDoc, RequestDoc, VerifyDoc, VerifyRowDoc};

const EXIT_MISMATCH: u8 = 1;
const EXIT_UNSUPPORTED: u8 = 2;
const EXIT_USAGE: u8 = 64;

const FAMILY_ORDER: [&str; 9] = [
    "U", "Sp", "SO-odd", "SO-even", "G2", "F4", "E6", "E7", "E8",
];

#[derive(Parser)]
#[command(
    name = "stubborn-weights",
    version,
    about = "Exact weight counts for fusion systems of compact connected Lie groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Compute w(F) for one group and prime and compare with |Irr(W)|.
    Count {
        /// Family tag: U, Sp, SO-odd, SO-even, G2, F4, E6, E7 or E8.
        #[arg(long)]
        family: String,
        /// Rank parameter n (required for the classical families).
        #[arg(long)]
        rank: Option<u32>,
        /// The prime ell.
        #[arg(long)]
        prime: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Include the per-class table.
        #[arg(long)]
        classes: bool,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a (family, rank, prime) rectangle and check every cell against
    /// the expected verdict, with both computation methods where available.
    Verify {
        /// Comma-separated family tags (default: all nine).
        #[arg(long, value_delimiter = ',')]
        families: Vec<String>,
        #[arg(long, default_value_t = 8)]
        max_rank: u32,
        /// Comma-separated primes (default: 2,3,5,7).
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Attach per-class tables to each supported cell (json output).
        #[arg(long)]
        include_classes: bool,
        /// Also enumerate the classification's excluded labels; their
        /// contributions are zero, so no total may change.
        #[arg(long)]
        lift_exclusions: bool,
        /// Measure per-cell runtimes. Off by default so reports are
        /// byte-deterministic.
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the stubborn conjugacy classes of a classical group.
    Classes {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: Option<u32>,
        #[arg(long)]
        prime: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Also list the classification's excluded labels.
        #[arg(long)]
        lift_exclusions: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Unsupported(String),
    Operational(String),
}

impl Failure {
    fn report(&self) -> ExitCode {
        match self {
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(EXIT_USAGE)
            }
            Failure::Unsupported(msg) => {
                eprintln!("unsupported: {msg}");
                ExitCode::from(EXIT_UNSUPPORTED)
            }
            Failure::Operational(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(EXIT_MISMATCH)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = err.print();
                    ExitCode::SUCCESS
                }
                _ => {
                    let _ = err.print();
                    ExitCode::from(EXIT_USAGE)
                }
            };
        }
    };
    if let Err(failure) = configure_threads() {
        return failure.report();
    }
    let outcome = match cli.command {
        Command::Count {
            family,
            rank,
            prime,
            format,
            classes,
            out,
        } => cmd_count(&family, rank, prime, format, classes, &out),
        Command::Verify {
            families,
            max_rank,
            primes,
            format,
            include_classes,
            lift_exclusions,
            timing,
            out,
        } => cmd_verify(
            &families,
            max_rank,
            &primes,
            format,
            include_classes,
            lift_exclusions,
            timing,
            &out,
        ),
        Command::Classes {
            family,
            rank,
            prime,
            format,
            lift_exclusions,
            out,
        } => cmd_classes(&family, rank, prime, format, lift_exclusions, &out),
    };
    match outcome {
        Ok(code) => code,
        Err(failure) => failure.report(),
    }
}

/// STUBBORN_WEIGHTS_THREADS caps sweep parallelism.
fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("STUBBORN_WEIGHTS_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.parse().ok().filter(|&n| n >= 1).ok_or_else(|| {
        Failure::Usage(format!(
            "STUBBORN_WEIGHTS_THREADS must be a positive integer, got {raw:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Operational(format!("thread pool: {e}")))
}

fn canonical_family(tag: &str) -> Option<&'static str> {
    FAMILY_ORDER
        .iter()
        .copied()
        .find(|known| known.eq_ignore_ascii_case(tag))
}

fn family_spec(family: &'static str, rank: u32) -> GroupSpec {
    match family {
        "U" => GroupSpec::Unitary(rank),
        "Sp" => GroupSpec::Symplectic(rank),
        "SO-odd" => GroupSpec::SpecialOrthogonalOdd(rank),
        "SO-even" => GroupSpec::SpecialOrthogonalEven(rank),
        "G2" => GroupSpec::G2,
        "F4" => GroupSpec::F4,
        "E6" => GroupSpec::E6,
        "E7" => GroupSpec::E7,
        "E8" => GroupSpec::E8,
        _ => unreachable!("canonical family tags only"),
    }
}

fn is_classical_tag(family: &str) -> bool {
    matches!(family, "U" | "Sp" | "SO-odd" | "SO-even")
}

fn build_spec(family: &str, rank: Option<u32>) -> Result<GroupSpec, Failure> {
    let family = canonical_family(family).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown family {family:?}; expected one of {}",
            FAMILY_ORDER.join(", ")
        ))
    })?;
    if !is_classical_tag(family) {
        // The rank parameter is meaningless for exceptional groups.
        return Ok(family_spec(family, 1));
    }
    let n = rank.ok_or_else(|| Failure::Usage(format!("family {family} requires --rank")))?;
    if n == 0 {
        return Err(Failure::Usage("--rank must be at least 1".into()));
    }
    Ok(family_spec(family, n))
}

fn ensure_prime(ell: u64) -> Result<(), Failure> {
    if is_prime(ell) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("{ell} is not a prime")))
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    match out {
        None => {
            print!("{text}");
            std::io::stdout()
                .flush()
                .map_err(|e| Failure::Operational(format!("stdout: {e}")))
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Operational(format!("writing {}: {e}", path.display()))),
    }
}

fn class_doc(class: &ClassWeight) -> ClassDoc {
    ClassDoc {
        label: class.id.clone(),
        automizer: class.automizer.clone(),
        contribution: class.contribution.to_string(),
    }
}

fn display_rank(spec: GroupSpec) -> Option<u32> {
    spec.is_classical().then(|| spec.rank())
}

fn count_doc(report: &WeightReport, include_classes: bool) -> CountDoc {
    CountDoc {
        family: report.spec.family_tag().to_string(),
        rank: display_rank(report.spec),
        group: report.spec.to_string(),
        prime: report.ell,
        method: report.method.map(|m| m.to_string()),
        total: report.total_weights.as_ref().map(|t| t.to_string()),
        irr_w: report.irr_w.to_string(),
        verdict: report.verdict.to_string(),
        note: report.note.clone(),
        classes: include_classes.then(|| report.per_class.iter().map(class_doc).collect()),
    }
}

fn cmd_count(
    family: &str,
    rank: Option<u32>,
    prime: u64,
    format: Format,
    classes: bool,
    out: &Option<PathBuf>,
) -> Result<ExitCode, Failure> {
    let spec = build_spec(family, rank)?;
    ensure_prime(prime)?;
    let report = verify(spec, prime).map_err(|e| Failure::Operational(e.to_string()))?;
    let doc = count_doc(&report, classes);
    let text = match format {
        Format::Json => output::to_json(&doc),
        Format::Csv => output::count_to_csv(&doc),
        Format::Markdown => output::count_to_markdown(&doc),
    };
    emit(&text, out)?;
    if report.verdict == Verdict::Unsupported {
        Ok(ExitCode::from(EXIT_UNSUPPORTED))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_classes(
    family: &str,
    rank: Option<u32>,
    prime: u64,
    format: Format,
    lift_exclusions: bool,
    out: &Option<PathBuf>,
) -> Result<ExitCode, Failure> {
    let spec = build_spec(family, rank)?;
    ensure_prime(prime)?;
    let labels = enumerate_labels_with(spec, prime, lift_exclusions).map_err(|e| match e {
        Error::Unsupported { .. } => Failure::Unsupported(e.to_string()),
        other => Failure::Operational(other.to_string()),
    })?;
    let mut classes = Vec::with_capacity(labels.len());
    for label in &labels {
        let descriptor = automizer_of(label);
        let contribution = weight_contribution(&descriptor, prime)
            .map_err(|e| Failure::Operational(e.to_string()))?;
        classes.push(ClassDoc {
            label: label.to_string(),
            automizer: descriptor.to_string(),
            contribution: contribution.to_string(),
        });
    }
    let doc = ClassesDoc {
        family: spec.family_tag().to_string(),
        rank: display_rank(spec),
        group: spec.to_string(),
        prime,
        class_count: classes.len() as u64,
        classes,
    };
    let text = match format {
        Format::Json => output::to_json(&doc),
        Format::Csv => output::classes_to_csv(&doc),
        Format::Markdown => output::classes_to_markdown(&doc),
    };
    emit(&text, out)?;
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    families: &[String],
    max_rank: u32,
    primes: &[u64],
    format: Format,
    include_classes: bool,
    lift_exclusions: bool,
    timing: bool,
    out: &Option<PathBuf>,
) -> Result<ExitCode, Failure> {
    if max_rank == 0 {
        return Err(Failure::Usage("--max-rank must be at least 1".into()));
    }
    let requested: Vec<&'static str> = if families.is_empty() {
        FAMILY_ORDER.to_vec()
    } else {
        let mut seen = Vec::new();
        for tag in families {
            let canonical = canonical_family(tag).ok_or_else(|| {
                Failure::Usage(format!(
                    "unknown family {tag:?}; expected one of {}",
                    FAMILY_ORDER.join(", ")
                ))
            })?;
            if !seen.contains(&canonical) {
                seen.push(canonical);
            }
        }
        // Canonical report order regardless of how the request was written.
        FAMILY_ORDER
            .iter()
            .copied()
            .filter(|f| seen.contains(f))
            .collect()
    };
    let mut primes: Vec<u64> = if primes.is_empty() {
        vec![2, 3, 5, 7]
    } else {
        primes.to_vec()
    };
    primes.sort_unstable();
    primes.dedup();
    for &p in &primes {
        ensure_prime(p)?;
    }

    let mut cells: Vec<(GroupSpec, u64)> = Vec::new();
    for family in &requested {
        let ranks: Vec<u32> = if is_classical_tag(family) {
            (1..=max_rank).collect()
        } else {
            vec![1]
        };
        for rank in ranks {
            for &ell in &primes {
                cells.push((family_spec(family, rank), ell));
            }
        }
    }

    let start = Instant::now();
    let rows: Result<Vec<VerifyRowDoc>, Failure> = cells
        .par_iter()
        .map(|&(spec, ell)| evaluate_cell(spec, ell, lift_exclusions, include_classes, timing))
        .collect();
    let rows = rows?;
    let all_expected = rows.iter().all(|row| row.ok);
    for row in rows.iter().filter(|row| !row.ok) {
        eprintln!(
            "mismatch: {} rank {} at {}: verdict {}, expected {}, methods agree: {}",
            row.family,
            row.rank.map_or_else(|| "-".into(), |r| r.to_string()),
            row.prime,
            row.verdict,
            row.expected,
            row.methods_agree
        );
    }
    let doc = VerifyDoc {
        request: RequestDoc {
            families: requested.iter().map(|s| s.to_string()).collect(),
            max_rank,
            primes: primes.clone(),
            lift_exclusions,
        },
        rows,
        all_expected,
        elapsed_ms: timing.then(|| start.elapsed().as_millis() as u64),
    };
    let text = match format {
        Format::Json => output::to_json(&doc),
        Format::Csv => output::verify_to_csv(&doc),
        Format::Markdown => output::verify_to_markdown(&doc),
    };
    emit(&text, out)?;
    Ok(if all_expected {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    })
}

fn evaluate_cell(
    spec: GroupSpec,
    ell: u64,
    lift_exclusions: bool,
    include_classes: bool,
    timing: bool,
) -> Result<VerifyRowDoc, Failure> {
    let start = Instant::now();
    let expected = expected_verdict(spec, ell);
    let operational = |e: Error| Failure::Operational(e.to_string());

    let (report, method, methods_agree) = if spec.is_exceptional() {
        let report = exceptional_weight_count(spec, ell).map_err(operational)?;
        let method = if report.method.is_some() { "table" } else { "none" };
        (report, method, true)
    } else {
        match count_weights_enum_with(spec, ell, lift_exclusions) {
            Ok(enum_report) => {
                let gf_report = count_weights_gf(spec, ell).map_err(operational)?;
                let agree = enum_report.total_weights == gf_report.total_weights;
                (enum_report, "enum+gf", agree)
            }
            // SO(n) at 2: verify() owns the unsupported wording.
            Err(Error::Unsupported { .. }) => {
                let report = verify(spec, ell).map_err(operational)?;
                (report, "none", true)
            }
            Err(other) => return Err(operational(other)),
        }
    };

    let verdict = report.verdict;
    let ok = methods_agree && verdict == expected;
    Ok(VerifyRowDoc {
        family: spec.family_tag().to_string(),
        rank: display_rank(spec),
        prime: ell,
        method: method.to_string(),
        total: report.total_weights.as_ref().map(|t| t.to_string()),
        irr_w: report.irr_w.to_string(),
        verdict: verdict.to_string(),
        expected: expected.to_string(),
        methods_agree,
        ok,
        classes: report
            .method
            .is_some()
            .then(|| report.per_class.len() as u64),
        runtime_ms: if timing {
            start.elapsed().as_millis() as u64
        } else {
            0
        },
        class_rows: (include_classes && report.method.is_some())
            .then(|| report.per_class.iter().map(class_doc).collect()),
    })
}
