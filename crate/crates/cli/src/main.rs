use std::io::{Read, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

mod commands;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Parser, Debug)]
#[command(name = "qtwist", version, about = "Twisted q-deformations and H^3 of finite abelian groups")]
pub struct Cli {
    /// Output format; `latex` is only understood by `relations`.
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generators of H^3(Γ; T) and their pairing with the dual cycles.
    H3 {
        /// `Z/2 + Z/4` or `{"rank": 2, "relations": [[2, 0], [0, 4]]}`.
        group: String,
    },
    /// Class of a 3-cocycle in H^3(Γ; T).
    Classify {
        group: String,
        /// Cocycle JSON, `@path` to read a file, or `-` for stdin.
        cocycle: String,
    },
    /// Θ(τ) ∈ H^3(P/Q; T), with the closed form for SU(n).
    Theta {
        /// Root datum: `A2`, `D4`, `A1xA1`, or `{"cartan": …}`.
        #[arg(long = "type")]
        root_type: String,
        /// τ: exponents `1,0` (SU(n) or cyclic center) or coordinate lists `[[1,0],[0,1]]`.
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
    },
    /// Υ(τ) for τ in the kernel of Θ.
    Upsilon {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
    },
    /// Relations of C[SU_q^τ(n)], checked before they are printed.
    Relations {
        #[arg(long)]
        n: usize,
        /// Exponents t with τ_p = ζ_n^{t_p}; formal τ when omitted.
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
        /// Largest number of identities checked per family before sampling.
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Per-permutation check of the twisted quantum determinant.
    QdetCheck {
        #[arg(long)]
        n: usize,
    },
    /// ψ̃, θ_w and the stabilizers for SU(n), q ≠ 1.
    Spectrum {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
    },
    /// Hopf axioms of the twisted coproduct on fundamental representations.
    HopfCheck {
        /// `A1`, `A2`, … (type A only).
        #[arg(long = "type")]
        root_type: String,
        /// Positive rational different from 1, e.g. `2` or `3/2`.
        #[arg(long, default_value = "2")]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
    },
    /// Quick consistency checks across all modules.
    Selftest,
}

/// Outcome of a command: what to print and whether every check passed.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub latex: Option<String>,
    pub passed: bool,
}

impl Outcome {
    pub fn new(text: String, json: Value, passed: bool) -> Self {
        Outcome { text, json, latex: None, passed }
    }
}

pub fn read_arg(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    } else {
        Ok(arg.to_string())
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    if cli.format == Format::Latex && !matches!(cli.command, Command::Relations { .. }) {
        bail!("--format latex is only available for `relations`");
    }
    match &cli.command {
        Command::H3 { group } => commands::h3(group),
        Command::Classify { group, cocycle } => commands::classify(group, &read_arg(cocycle)?),
        Command::Theta { root_type, tau } => commands::theta(root_type, tau),
        Command::Upsilon { root_type, tau } => commands::upsilon(root_type, tau),
        Command::Relations { n, tau, budget, seed } => commands::relations(*n, tau.as_deref(), *budget, *seed),
        Command::QdetCheck { n } => commands::qdet_check(*n),
        Command::Spectrum { n, tau } => commands::spectrum(*n, tau),
        Command::HopfCheck { root_type, q, tau } => commands::hopf_check(root_type, q, tau),
        Command::Selftest => Ok(commands::selftest()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("json"),
                Format::Latex => out.latex.unwrap_or(out.text),
            };
            // a closed pipe (`| head`) is not an error
            let _ = writeln!(std::io::stdout(), "{body}");
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.format == Format::Json {
                println!("{}", json!({ "error": format!("{e:#}") }));
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
