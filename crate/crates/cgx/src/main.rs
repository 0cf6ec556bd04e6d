//! Command-line front end. Digit strings are comma-separated and
//! little-endian everywhere: "6,5,6" means 6*H_1 + 5*H_2 + 6*H_3.
//!
//! Exit codes: 0 success, 1 internal invariant failure, 2 usage or parse
//! error, 3 domain validation failure.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::json;

use cgx::blocks::{decompose, successors};
use cgx::codec::{decode, encode};
use cgx::oracle::{verify_bijection_with_limit, DEFAULT_DESK_LIMIT};
use cgx::rule::{validate, CoefficientSequence, Params};
use cgx::sequences::{alpha, fibonacci, lucas_k, BaseSequence};
use cgx::Error;

const EXIT_INTERNAL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cgx",
    version,
    about = "Chung-Graham expansions over evenly spaced Fibonacci terms",
    long_about = "Encode, decode, and enumerate digit strings of the numeration system \
                  with base H_k = F_(2+d(k-1)) for even interval d.\n\n\
                  Digit strings are LITTLE-ENDIAN: the first digit multiplies H_1 = 1. \
                  Most numeral tools print the most significant digit first; this one \
                  does not."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode a non-negative integer as a digit string
    Encode {
        /// Even interval d
        #[arg(long)]
        d: u64,
        /// The integer, as a decimal of arbitrary size
        n: String,
        /// Re-decode the result and fail loudly on any mismatch
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decode a digit string back to its integer
    Decode {
        #[arg(long)]
        d: u64,
        /// Comma-separated little-endian digits; empty string is zero
        digits: String,
        /// Also validate against the expansion rule
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print iterated successors of a digit string
    Succ {
        #[arg(long)]
        d: u64,
        digits: String,
        /// How many successors to print
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long)]
        json: bool,
    },
    /// Decompose a digit string into blocks
    Blocks {
        #[arg(long)]
        d: u64,
        digits: String,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively verify the bijection up to a maximal order (JSON report)
    Verify {
        #[arg(long)]
        d: u64,
        /// Maximal order of the enumerated digit strings
        #[arg(long)]
        max: usize,
    },
    /// Print the constant alpha to a number of decimal digits
    Alpha {
        /// Decimal digits after the point
        digits: usize,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate k, H_k, K_k, F_k
    Seq {
        #[arg(long)]
        d: u64,
        /// Largest k to print
        #[arg(long, default_value_t = 10)]
        max: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}

fn fail(code: u8, message: impl std::fmt::Display) -> u8 {
    eprintln!("error: {message}");
    code
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::UnsupportedInterval { .. }
        | Error::IndexMustBePositive
        | Error::InvalidDigitString(_) => EXIT_USAGE,
        Error::InvalidInput(_) | Error::NotDecomposable { .. } => EXIT_DOMAIN,
        Error::DeskScaleExceeded { .. } => EXIT_USAGE,
    }
}

fn lift<T>(result: Result<T, Error>) -> Result<T, u8> {
    result.map_err(|e| {
        let code = exit_code_for(&e);
        fail(code, e)
    })
}

fn parse_params(d: u64) -> Result<Params, u8> {
    lift(Params::new(d))
}

fn parse_digits(text: &str) -> Result<CoefficientSequence, u8> {
    lift(text.parse::<CoefficientSequence>())
}

fn run(command: Command) -> Result<(), u8> {
    match command {
        Command::Encode { d, n, verify, json } => {
            parse_params(d)?;
            let n: BigUint = n
                .trim()
                .parse()
                .map_err(|_| fail(EXIT_USAGE, "n must be a non-negative decimal integer"))?;
            let digits = lift(encode(&n, d))?;
            if verify {
                let back = lift(decode(&digits, d))?;
                if back != n {
                    return Err(fail(
                        EXIT_INTERNAL,
                        format!("round trip failed: {n} encoded to \"{digits}\" but decoded to {back}"),
                    ));
                }
            }
            if json {
                println!(
                    "{}",
                    json!({
                        "command": "encode",
                        "d": d,
                        "n": n.to_string(),
                        "digits": digits.to_string(),
                    })
                );
            } else {
                println!("{digits}");
            }
            Ok(())
        }
        Command::Decode {
            d,
            digits,
            strict,
            json,
        } => {
            let p = parse_params(d)?;
            let digits = parse_digits(&digits)?;
            if strict {
                if let Err(violation) = validate(&digits, &p) {
                    return Err(fail(EXIT_DOMAIN, violation));
                }
            }
            let value = lift(decode(&digits, d))?;
            if json {
                println!(
                    "{}",
                    json!({
                        "command": "decode",
                        "d": d,
                        "digits": digits.to_string(),
                        "value": value.to_string(),
                    })
                );
            } else {
                println!("{value}");
            }
            Ok(())
        }
        Command::Succ {
            d,
            digits,
            count,
            json,
        } => {
            let p = parse_params(d)?;
            let start = parse_digits(&digits)?;
            let stream = lift(successors(&start, count, &p))?;
            if json {
                let all: Vec<String> = stream.map(|s| s.to_string()).collect();
                println!(
                    "{}",
                    json!({
                        "command": "succ",
                        "d": d,
                        "start": start.to_string(),
                        "count": count,
                        "successors": all,
                    })
                );
            } else {
                for s in stream {
                    println!("{s}");
                }
            }
            Ok(())
        }
        Command::Blocks { d, digits, json } => {
            let p = parse_params(d)?;
            let digits = parse_digits(&digits)?;
            let blocks = lift(decompose(&digits, &p))?;
            if json {
                let items: Vec<_> = blocks
                    .iter()
                    .map(|b| {
                        json!({
                            "kind": b.kind.tag(),
                            "digits": b
                                .digits
                                .iter()
                                .map(|x| x.to_string())
                                .collect::<Vec<_>>()
                                .join(","),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({
                        "command": "blocks",
                        "d": d,
                        "digits": digits.to_string(),
                        "blocks": items,
                    })
                );
            } else {
                let rendered: Vec<String> = blocks
                    .iter()
                    .map(|b| {
                        if b.kind == cgx::BlockKind::Maximal {
                            format!("{b}[max]")
                        } else {
                            b.to_string()
                        }
                    })
                    .collect();
                println!("{}", rendered.join("v"));
            }
            Ok(())
        }
        Command::Verify { d, max } => {
            if max == 0 {
                return Err(fail(EXIT_USAGE, "--max must be at least 1"));
            }
            let limit = desk_limit()?;
            let report = lift(verify_bijection_with_limit(max, d, limit))?;
            println!(
                "{}",
                serde_json::to_string(&report).expect("report serializes")
            );
            if report.ok {
                Ok(())
            } else {
                Err(fail(EXIT_INTERNAL, "bijection check failed"))
            }
        }
        Command::Alpha { digits, json } => {
            if digits == 0 {
                return Err(fail(EXIT_USAGE, "need at least one decimal digit"));
            }
            let value = alpha(digits);
            if json {
                println!(
                    "{}",
                    json!({ "command": "alpha", "digits": digits, "value": value })
                );
            } else {
                println!("{value}");
            }
            Ok(())
        }
        Command::Seq { d, max, json } => {
            let base = lift(BaseSequence::new(d))?;
            if max == 0 {
                return Err(fail(EXIT_USAGE, "--max must be at least 1"));
            }
            let rows: Vec<(usize, BigUint, BigUint, BigUint)> = (1..=max)
                .map(|k| {
                    let h = base.term(k);
                    let kk = lucas_k(k as u64).expect("k >= 1");
                    let f = fibonacci(k as u64).expect("k >= 1");
                    (k, h, kk, f)
                })
                .collect();
            if json {
                let items: Vec<_> = rows
                    .iter()
                    .map(|(k, h, kk, f)| {
                        json!({
                            "k": k,
                            "h": h.to_string(),
                            "k_seq": kk.to_string(),
                            "f": f.to_string(),
                        })
                    })
                    .collect();
                println!("{}", json!({ "command": "seq", "d": d, "rows": items }));
            } else {
                println!("k\tH_k\tK_k\tF_k");
                for (k, h, kk, f) in rows {
                    println!("{k}\t{h}\t{kk}\t{f}");
                }
            }
            Ok(())
        }
    }
}

/// Desk-scale override for `verify`, meant for local experiments.
fn desk_limit() -> Result<u64, u8> {
    match std::env::var("CGX_DESK_LIMIT") {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .map_err(|_| fail(EXIT_USAGE, "CGX_DESK_LIMIT must be an unsigned integer")),
        Err(_) => Ok(DEFAULT_DESK_LIMIT),
    }
}
