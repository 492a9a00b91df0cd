//! `grs`: encode, corrupt, decode and benchmark GRS codes from the shell.

mod config;
mod wordfile;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use grs_core::channel::{bench, bench_csv, corrupt_symbols, BenchOptions};
use grs_core::decoder::{decode_bmd, list_decode_with, params_for, DecodeParams};
use grs_core::syndromes::gs_syndromes;
use grs_core::{Fe, GrsCode, UniPoly};

use config::CodeConfig;
use wordfile::WordFile;

#[derive(Parser)]
#[command(name = "grs", version, about = "Generalized Reed-Solomon encoding and list decoding")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Encode a message of k symbols (coefficients low to high).
    Encode {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        message: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Change exactly `weight` symbols of a word.
    Corrupt {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        weight: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Decode a received word, either by list decoding up to a radius or classically.
    Decode {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, conflicts_with = "bmd", required_unless_present = "bmd")]
        radius: Option<usize>,
        /// Override the multiplicity; requires --list-size.
        #[arg(long, requires = "list_size", requires = "radius")]
        multiplicity: Option<usize>,
        #[arg(long, requires = "multiplicity")]
        list_size: Option<usize>,
        /// Classical decoding up to half the minimum distance.
        #[arg(long)]
        bmd: bool,
        /// Write the interpolation trace as CSV.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Show the code and the interpolation parameters chosen for a radius.
    Params {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        radius: usize,
    },
    /// Planted-error trials; CSV of success and iteration counts.
    Bench {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        radius: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of errors per trial; defaults to the radius.
        #[arg(long)]
        weight: Option<usize>,
        /// Leave the wall_time column empty so output is reproducible.
        #[arg(long)]
        no_time: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Dump every syndrome block as CSV `b,t,i,value`.
    Syndromes {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        radius: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    /// Output file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

impl Output {
    fn emit(&self, text: &str) -> Result<()> {
        match &self.output {
            Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.chain().find_map(|c| c.downcast_ref::<grs_core::Error>()) {
        Some(grs_core::Error::Infeasible(_)) => 3,
        Some(grs_core::Error::DecodeFailure(_)) => 4,
        _ => 2,
    }
}

fn load_code(path: &Path) -> Result<GrsCode> {
    CodeConfig::load(path)?.build().with_context(|| format!("invalid code in {}", path.display()))
}

fn read_word(code: &GrsCode, path: &Path, len: usize) -> Result<Vec<Fe>> {
    WordFile::read(path)?.to_elems(code.field(), len).with_context(|| format!("in {}", path.display()))
}

fn symbols(v: &[Fe]) -> String {
    v.iter().map(|e| e.index().to_string()).collect::<Vec<_>>().join(" ")
}

/// Message coefficients padded to k symbols.
fn message_symbols(m: &UniPoly, k: usize) -> String {
    symbols(&(0..k).map(|i| m.coeff(i)).collect::<Vec<_>>())
}

fn params_line(p: &DecodeParams) -> String {
    let bounds: Vec<String> = p.bounds.iter().map(usize::to_string).collect();
    format!("params s={} ell={} tau={} N=({})\n", p.s, p.ell, p.tau, bounds.join(","))
}

fn code_line(code: &GrsCode) -> String {
    format!("code q={} n={} k={} d={}\n", code.field().order(), code.n(), code.k(), code.d())
}

fn run(cmd: Cmd) -> Result<()> {
    match cmd {
        Cmd::Encode { config, message, out } => {
            let code = load_code(&config)?;
            let msg = read_word(&code, &message, code.k())?;
            let c = code.encode(&UniPoly::from_coeffs(code.field(), msg))?;
            out.emit(&WordFile::from_elems(code.field(), &c).render())
        }
        Cmd::Corrupt { input, weight, seed, out } => {
            let w = WordFile::read(&input)?;
            let symbols = corrupt_symbols(w.q, &w.symbols, weight, seed)?;
            out.emit(&WordFile { q: w.q, symbols }.render())
        }
        Cmd::Decode { config, input, radius, multiplicity, list_size, bmd, trace, out } => {
            let code = load_code(&config)?;
            let r = read_word(&code, &input, code.n())?;
            let mut report = code_line(&code);
            if bmd {
                let res = decode_bmd(&code, &r)?;
                report.push_str("mode bmd\n");
                writeln!(report, "iterations {}", res.iterations)?;
                report.push_str("candidates 1\n");
                writeln!(
                    report,
                    "candidate distance={} message={} codeword={}",
                    res.error_positions.len(),
                    message_symbols(&res.message, code.k()),
                    symbols(&res.codeword)
                )?;
                return out.emit(&report);
            }
            let tau = radius.expect("clap enforces --radius without --bmd");
            let params = match (multiplicity, list_size) {
                (Some(s), Some(ell)) => DecodeParams::new(&code, s, ell, tau)?,
                _ => params_for(&code, tau)?,
            };
            let res = list_decode_with(&code, &r, &params)?;
            report.push_str("mode list\n");
            report.push_str(&params_line(&params));
            writeln!(report, "iterations {}", res.iterations())?;
            writeln!(report, "candidates {}", res.candidates.len())?;
            for c in &res.candidates {
                writeln!(
                    report,
                    "candidate distance={} message={} codeword={}",
                    c.distance,
                    message_symbols(&c.message, code.k()),
                    symbols(&c.codeword)
                )?;
            }
            if let Some(path) = trace {
                std::fs::write(&path, res.trace.to_csv()).with_context(|| format!("writing {}", path.display()))?;
            }
            out.emit(&report)
        }
        Cmd::Params { config, radius } => {
            let code = load_code(&config)?;
            let p = params_for(&code, radius)?;
            let mut report = code_line(&code);
            report.push_str(&params_line(&p));
            writeln!(report, "unknowns {} constraints {}", p.unknowns(), p.constraints(code.n()))?;
            print!("{report}");
            Ok(())
        }
        Cmd::Bench { config, radius, trials, seed, weight, no_time, out } => {
            let code = load_code(&config)?;
            let params = params_for(&code, radius)?;
            let opts = BenchOptions { trials, seed, weight, timing: !no_time };
            out.emit(&bench_csv(&bench(&code, &params, opts)?))
        }
        Cmd::Syndromes { config, input, radius, out } => {
            let code = load_code(&config)?;
            let r = read_word(&code, &input, code.n())?;
            let p = params_for(&code, radius)?;
            let set = gs_syndromes(&code, &r, p.s, p.ell, p.tau)?;
            let mut csv = String::from("b,t,i,value\n");
            for b in 0..set.multiplicity() {
                for t in 0..set.bounds().len() {
                    for (i, v) in set.block(b, t).iter().enumerate() {
                        writeln!(csv, "{b},{t},{i},{}", v.index())?;
                    }
                }
            }
            out.emit(&csv)
        }
    }
}
