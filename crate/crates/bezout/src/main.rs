//! Thin command-line front end for the `bezout` library.
//!
//! Exit codes: 0 on success, 1 on domain failures (non-invertible
//! element, invariant violation, exhausted resources), 2 on usage or
//! parse errors.

use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use bezout::{
    check_trace, egcd_iterative, egcd_traced, gcd, mod_inverse, parse_nat, run_bench,
    verify_exhaustive, verify_random, Error, Modulus, Variant, VerifyReport,
};

#[derive(Parser)]
#[command(
    name = "bezout",
    version,
    about = "Extended Euclidean algorithm toolkit: gcd, Bézout coefficients, modular \
             inverses, traced and self-checking execution, benchmarks",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print gcd(a, b) in decimal
    Gcd {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Print the Bézout triple "d x y" with d = a·x + b·y
    Egcd {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        /// Emit {"d":…,"x":…,"y":…} instead of "d x y"
        #[arg(long)]
        json: bool,
    },
    /// Print the inverse of a modulo m
    Inverse {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        m: String,
    },
    /// Emit the per-iteration trace after auditing every row
    Trace {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        /// JSON trace (the default)
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// CSV trace with header k,q,a,b,c,d,e,f
        #[arg(long)]
        csv: bool,
    },
    /// Run invariant and oracle suites; exit 0 only with zero violations
    #[command(group = ArgGroup::new("mode").required(true).args(["random", "exhaustive_to"]))]
    Verify {
        /// Audit N random traces
        #[arg(long, value_name = "N", requires = "max_bits", requires = "seed")]
        random: Option<u64>,
        /// Operand size for --random, in bits
        #[arg(long, value_name = "B", requires = "random")]
        max_bits: Option<u64>,
        /// RNG seed for --random
        #[arg(long, value_name = "S", requires = "random")]
        seed: Option<u64>,
        /// Sweep every pair 0 <= b <= a <= K against the trial-division oracle
        #[arg(long, value_name = "K")]
        exhaustive_to: Option<u64>,
    },
    /// Time one variant on seeded random operands; print a JSON report
    Bench {
        /// "recursive" or "iterative"
        #[arg(long)]
        variant: Variant,
        /// Exact bit length of the first operand (>= 2)
        #[arg(long)]
        bits: u64,
        /// Number of trials (>= 1)
        #[arg(long)]
        count: u32,
        /// RNG seed; fixes the operand sequence for both variants
        #[arg(long)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("{err}");
            exit_code_for(&err)
        }
    }
}

fn exit_code_for(err: &Error) -> ExitCode {
    match err {
        // usage-level problems: bad literals, bad flag values, m = 0
        Error::InvalidInput(_) | Error::DivisionByZero => ExitCode::from(2),
        // domain failures
        Error::NonInvertible { .. }
        | Error::OracleBoundExceeded { .. }
        | Error::MalformedTrace(_)
        | Error::ResourceExhausted(_) => ExitCode::from(1),
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Gcd { a, b } => {
            let (a, b) = (parse_nat(&a)?, parse_nat(&b)?);
            println!("{}", gcd(&a, &b));
            Ok(ExitCode::SUCCESS)
        }
        Command::Egcd { a, b, json } => {
            let (a, b) = (parse_nat(&a)?, parse_nat(&b)?);
            let triple = egcd_iterative(&a, &b);
            if json {
                println!("{}", to_json(&triple));
            } else {
                println!("{} {} {}", triple.d, triple.x, triple.y);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Inverse { a, m } => {
            let a = parse_nat(&a)?;
            let modulus = Modulus::new(parse_nat(&m)?)?;
            match mod_inverse(&a, &modulus) {
                Ok(v) => {
                    println!("{v}");
                    Ok(ExitCode::SUCCESS)
                }
                Err(err @ Error::NonInvertible { .. }) => {
                    eprintln!("{err}");
                    Ok(ExitCode::from(1))
                }
                Err(other) => Err(other),
            }
        }
        Command::Trace { a, b, json: _, csv } => {
            let (a, b) = (parse_nat(&a)?, parse_nat(&b)?);
            let trace = egcd_traced(&a, &b);
            let audit = check_trace(&trace);
            if csv {
                print!("{}", trace.to_csv());
            } else {
                println!("{}", to_json(&trace));
            }
            match audit.violated {
                None => Ok(ExitCode::SUCCESS),
                Some(violation) => {
                    eprintln!("invariant violated: {violation}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Verify {
            random,
            max_bits,
            seed,
            exhaustive_to,
        } => {
            let (banner, report) = match (random, exhaustive_to) {
                (Some(count), None) => {
                    let bits = max_bits.expect("clap enforces --max-bits");
                    let seed = seed.expect("clap enforces --seed");
                    (
                        format!("random audit: {count} traces, {bits}-bit operands, seed {seed}"),
                        verify_random(count, bits, seed)?,
                    )
                }
                (None, Some(limit)) => (
                    format!("exhaustive sweep: all pairs 0 <= b <= a <= {limit}"),
                    verify_exhaustive(limit)?,
                ),
                _ => unreachable!("clap enforces exactly one mode"),
            };
            println!("{banner}");
            print_verify_report(&report);
            if report.ok() {
                Ok(ExitCode::SUCCESS)
            } else {
                for violation in &report.violations {
                    eprintln!("violation: {violation}");
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::Bench {
            variant,
            bits,
            count,
            seed,
        } => {
            let report = run_bench(variant, bits, count, seed)?;
            println!("{}", to_json(&report));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_verify_report(report: &VerifyReport) {
    println!("pairs checked: {}", report.pairs);
    if report.oracle_checks > 0 {
        println!("oracle checks passed: {}", report.oracle_checks);
    }
    println!("variant equality checks passed: {}", report.variant_checks);
    println!("trace audits passed: {}", report.trace_audits);
    println!("trace rows invariant-checked: {}", report.rows);
    println!("violations: {}", report.violations.len());
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serialization cannot fail")
}
