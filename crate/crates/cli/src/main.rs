mod args;
mod input;
mod render;

use std::process::ExitCode;

use bajinv::codes::{r_decode, r_encode, rank, unrank, v_decode, v_encode};
use bajinv::{Permutation, RCode, VCode, Verifier};
use clap::Parser;

use args::{Cli, Command};
use input::parse_ints;

/// Exit 1 is reserved for a failed verification, exit 2 for everything the
/// user got wrong.
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<bajinv::Error> for Failure {
    fn from(e: bajinv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(msg: String) -> Self {
        Failure::Usage(msg)
    }
}

fn parse_perm(text: &str) -> Result<Permutation, Failure> {
    Ok(Permutation::new(parse_ints(text)?)?)
}

fn run(cli: &Cli, out: &mut String) -> Result<(), Failure> {
    let format = cli.format;
    let mut verifier = Verifier::default();
    if let Some(max_n) = cli.max_n {
        verifier.max_n = max_n;
    }
    match &cli.command {
        Command::Stats(a) => {
            let p = parse_perm(a.text())?;
            out.push_str(&render::stats(&p, format));
        }
        Command::Encode(a) => {
            let p = parse_perm(&a.perm)?;
            let v = v_encode(&p);
            let rc = r_encode(&v);
            out.push_str(&render::codes(&v, &rc, format));
        }
        Command::Decode(a) => {
            let v = match (&a.vcode, &a.rcode) {
                (Some(text), _) => VCode::new(parse_ints(text)?)?,
                (None, Some(text)) => {
                    let k = a.k.expect("clap requires --k with --rcode");
                    r_decode(&RCode::new(k, parse_ints(text)?)?)
                }
                (None, None) => unreachable!("clap requires one code"),
            };
            out.push_str(&render::permutation(&v_decode(&v), format));
        }
        Command::Verify(a) => {
            verifier.parts = a.parts;
            if a.parts == 0 {
                return Err(bajinv::Error::ZeroParts.into());
            }
            let report = match a.k {
                Some(k) => verifier.verify_theorem2(a.n, k)?,
                None => verifier.verify_theorem1(a.n)?,
            };
            out.push_str(&render::report(&report, format));
            if let Some(m) = &report.first_mismatch {
                return Err(Failure::Verification(m.to_string()));
            }
        }
        Command::Dist(a) => {
            verifier.parts = a.parts;
            if a.parts == 0 {
                return Err(bajinv::Error::ZeroParts.into());
            }
            let d = match a.k {
                Some(k) if a.parts > 1 => verifier.parallel_distribution(a.n, k, a.parts)?,
                Some(k) => verifier.distribution(a.n, k)?,
                None => verifier.distribution_all(a.n)?,
            };
            out.push_str(&render::distribution(&d, format));
        }
        Command::Rank(a) => {
            let p = parse_perm(&a.perm)?;
            let idx = rank(&r_encode(&v_encode(&p)))?;
            out.push_str(&render::rank_index(idx, format));
        }
        Command::Unrank(a) => {
            let rc = unrank(a.n, a.k, a.idx)?;
            let p = v_decode(&r_decode(&rc));
            out.push_str(&render::unranked(a.idx, &rc, &p, format));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli, &mut out);
    print!("{out}");
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
