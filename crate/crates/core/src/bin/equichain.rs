//! Command-line front end: reads chain or polynomial specs as JSON, runs the
//! pipeline, prints JSON or human-readable results.

use clap::{Args, Parser, Subcommand, ValueEnum};
use equichain::asymptotics::{asymptotic_profile, AsymptoticProfile};
use equichain::chain::stability_index;
use equichain::equivariant::{check_shape, equivariant_hilbert, verify_series};
use equichain::groebner::{equivariant_gb_truncation, initial_chain, GbStatus};
use equichain::hilbert::hilbert_quotient;
use equichain::io;
use equichain::{Error, Result};
use serde_json::{json, Value};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "equichain", version, about = "Exact equivariant Hilbert series of invariant chains")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Args)]
struct Common {
    /// Input JSON file; `-` or omitted reads stdin
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
    /// Worker threads; output is independent of this setting
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the chain member at a given width
    Materialize {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: u32,
    },
    /// Scan widths for one-step stability of the materialized chain
    Stability {
        #[command(flatten)]
        common: Common,
        /// Largest width to scan
        #[arg(long)]
        n: u32,
    },
    /// Single-width Hilbert series of the quotient (oracle path)
    HilbertN {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: u32,
    },
    /// Bigraded equivariant Hilbert series of the whole chain
    EquivHilbert {
        #[command(flatten)]
        common: Common,
        /// Cross-check widths 1..=N against the single-width oracle
        /// (default: seed width + 5)
        #[arg(long)]
        verify_up_to: Option<u32>,
        #[arg(long)]
        no_verify: bool,
    },
    /// Dimension and degree asymptotics of the chain
    Asymptotics {
        #[command(flatten)]
        common: Common,
        /// Cross-check window `A..B` (default: r+2..r+10)
        #[arg(long)]
        window: Option<String>,
    },
    /// Monomial chain of lex initial ideals of a polynomial seed
    InitialChain {
        #[command(flatten)]
        common: Common,
        /// Stabilization search window `A..B`
        #[arg(long)]
        window: String,
    },
    /// Window-certified equivariant Groebner basis of a polynomial seed
    EquivariantGb {
        #[command(flatten)]
        common: Common,
        /// Largest width to try
        #[arg(long)]
        n: u32,
    },
}

fn read_input(path: &Option<PathBuf>) -> Result<Value> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", p.display())))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

fn parse_window(text: &str) -> Result<(u32, u32)> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| Error::Parse(format!("window must be `A..B`, got `{text}`")))?;
    let lo: u32 = a
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad window start `{a}`")))?;
    let hi: u32 = b
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad window end `{b}`")))?;
    if lo < 1 || hi < lo {
        return Err(Error::BadArguments("window bounds must be positive and ordered".into()));
    }
    Ok((lo, hi))
}

fn emit(format: Format, v: &Value, pretty: &str) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(v).unwrap()),
        Format::Pretty => println!("{pretty}"),
    }
}

fn profile_pretty(p: &AsymptoticProfile) -> String {
    let mut out = format!(
        "A={} B={} M={} L={} limit={} onset={}",
        p.slope, p.offset, p.base, p.power, p.limit, p.onset
    );
    for w in &p.table {
        out.push_str(&format!("\n  n={:<3} dim={:<4} deg={}", w.n, w.dim, w.deg));
    }
    out
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Materialize { common, n } => {
            check_threads(common.threads)?;
            let chain = io::chain_from_json(&read_input(&common.input)?)?;
            let ideal = chain.materialize(n)?;
            let pretty = if ideal.is_zero() {
                "0".to_string()
            } else {
                ideal.to_text_gens().join(", ")
            };
            emit(common.format, &io::ideal_to_json(&ideal), &pretty);
        }
        Cmd::Stability { common, n } => {
            check_threads(common.threads)?;
            let chain = io::chain_from_json(&read_input(&common.input)?)?;
            let members = (1..=n)
                .map(|w| chain.materialize(w))
                .collect::<Result<Vec<_>>>()?;
            let index = stability_index(&members, chain.monoid_prefix())?;
            let v = json!({ "index": index, "checked_to": n });
            let pretty = match index {
                Some(k) => format!("stability index {k} (checked widths 1..={n})"),
                None => format!("not stable within widths 1..={n}"),
            };
            emit(common.format, &v, &pretty);
        }
        Cmd::HilbertN { common, n } => {
            check_threads(common.threads)?;
            let chain = io::chain_from_json(&read_input(&common.input)?)?;
            let h = hilbert_quotient(&chain.materialize(n)?);
            emit(common.format, &io::unirational_to_json(&h), &h.to_string());
        }
        Cmd::EquivHilbert {
            common,
            verify_up_to,
            no_verify,
        } => {
            check_threads(common.threads)?;
            let chain = io::chain_from_json(&read_input(&common.input)?)?;
            let h = equivariant_hilbert(&chain)?;
            check_shape(&h, chain.rows())?;
            let verified = if no_verify {
                None
            } else {
                let up_to = verify_up_to.unwrap_or(chain.seed_width() + 5);
                verify_series(&chain, &h, up_to)?;
                Some(up_to)
            };
            let mut v = io::birational_to_json(&h);
            v.as_object_mut()
                .unwrap()
                .insert("verified_up_to".into(), json!(verified));
            let pretty = match verified {
                Some(u) => format!("{h}\noracle cross-check passed for widths 1..={u}"),
                None => format!("{h}\noracle cross-check skipped"),
            };
            emit(common.format, &v, &pretty);
        }
        Cmd::Asymptotics { common, window } => {
            check_threads(common.threads)?;
            let input = read_input(&common.input)?;
            // accept a chain spec or a ready-made series
            let (h, default_lo) = if input.get("seed").is_some() {
                let chain = io::chain_from_json(&input)?;
                (equivariant_hilbert(&chain)?, chain.seed_width() + 2)
            } else {
                (io::birational_from_json(&input)?, 3)
            };
            let window = match window {
                Some(w) => parse_window(&w)?,
                None => (default_lo, default_lo + 8),
            };
            let p = asymptotic_profile(&h, window)?;
            emit(common.format, &io::profile_to_json(&p), &profile_pretty(&p));
        }
        Cmd::InitialChain { common, window } => {
            check_threads(common.threads)?;
            let (i, polys) = io::polynomial_seed_from_json(&read_input(&common.input)?)?;
            let window = parse_window(&window)?;
            let (chain, cert) = initial_chain(&polys, i, window)?;
            let v = json!({
                "chain": io::chain_to_json(&chain),
                "certificate": {
                    "seed_width": cert.seed_width,
                    "stable_width": cert.stable_width,
                    "window": [cert.window.0, cert.window.1],
                },
            });
            let pretty = format!(
                "initial chain stable from width {} (window {}..{})\nseed: {}",
                cert.stable_width,
                cert.window.0,
                cert.window.1,
                chain.seed().to_text_gens().join(", ")
            );
            emit(common.format, &v, &pretty);
        }
        Cmd::EquivariantGb { common, n } => {
            check_threads(common.threads)?;
            let input = read_input(&common.input)?;
            let (i, polys) = io::polynomial_seed_from_json(&input)?;
            let c = polys.first().map_or(1, |f| f.rows());
            let (basis, width, status) = equivariant_gb_truncation(&polys, i, n)?;
            let GbStatus::WindowCertified { checked_width } = status;
            let v = json!({
                "basis": io::polynomials_to_json(c, width, &basis),
                "certified_width": width,
                "status": { "window_certified": { "checked_width": checked_width } },
            });
            let mut pretty = format!(
                "{} orbit representative(s) at width {width}, S-pairs checked through width {checked_width}",
                basis.len()
            );
            for f in &basis {
                pretty.push_str(&format!("\n  {}", f.to_text()));
            }
            emit(common.format, &v, &pretty);
        }
    }
    Ok(())
}

fn check_threads(threads: usize) -> Result<()> {
    if threads == 0 {
        return Err(Error::BadArguments("--threads must be at least 1".into()));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let kind = format!("{e:?}");
            let kind = kind
                .split(['(', ' ', '{'])
                .next()
                .unwrap_or("Error");
            eprintln!(
                "{}",
                json!({ "error": { "kind": kind, "message": e.to_string() } })
            );
            ExitCode::FAILURE
        }
    }
}
