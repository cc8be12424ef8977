mod ascii;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

/// Symbolic calculator for sheaves on Bun_n, Kottwitz sets and the
/// cohomology of local shtuka spaces for GL_n.
#[derive(Parser, Debug)]
#[command(name = "bunncalc", version, arg_required_else_help = true)]
pub struct Cli {
    /// Emit the versioned JSON envelope instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Transliterate text output to ASCII.
    #[arg(long, global = true)]
    pub ascii: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normalize a bundle and report its invariants.
    Bundle {
        /// Bundle expression, e.g. "O(3/4)+O(1/3)+O^3".
        expr: String,
    },
    /// Kottwitz sets B(GL_n, μ).
    #[command(subcommand)]
    Kottwitz(KottwitzCmd),
    /// The bundle E_χ and stratum b_χ of a character.
    ChiToB {
        #[command(flatten)]
        phi: PhiArgs,
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
    },
    /// All characters χ with b_χ = b.
    BToChis {
        #[command(flatten)]
        phi: PhiArgs,
        #[arg(long)]
        bundle: String,
    },
    /// Weight multiplicities, Levi branching and isotypic pieces.
    #[command(subcommand)]
    Weights(WeightsCmd),
    /// Spectral action, Hecke operators and the eigensheaf.
    #[command(subcommand)]
    Spectral(SpectralCmd),
    /// Hecke operator T_λ applied to F_ξ (same as `spectral hecke`).
    Hecke(HeckeArgs),
    /// Cohomology of local shtuka spaces from a Hecke stalk.
    Shtuka {
        #[command(flatten)]
        phi: PhiArgs,
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        /// Highest weight of T_μ (forward convention).
        #[arg(long, allow_hyphen_values = true, conflicts_with = "mu_inv", required_unless_present = "mu_inv")]
        mu: Option<String>,
        /// Highest weight of T_{μ^{-1}} (inverse convention).
        #[arg(long, allow_hyphen_values = true)]
        mu_inv: Option<String>,
        /// Target stratum b'.
        #[arg(long)]
        target: String,
    },
    /// Harris–Viehmann presentation at b_ξ, or at every χ over a stratum.
    Hv {
        #[command(flatten)]
        phi: PhiArgs,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "b", required_unless_present = "b")]
        xi: Option<String>,
        /// Stratum; one output per χ with b_χ = b.
        #[arg(long)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu_inv: String,
    },
    /// Boyer-type factorization along a split at rank m.
    Boyer {
        #[arg(long)]
        b: String,
        #[arg(long)]
        bprime: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        split: u64,
    },
    /// Modifications: rank-one targets, or the necessary conditions for a pair.
    Modif {
        #[arg(short = 'n', long, requires = "n_prime", conflicts_with_all = ["b", "bprime", "mu"])]
        n: Option<u64>,
        #[arg(long)]
        n_prime: Option<u64>,
        #[arg(long, requires_all = ["bprime", "mu"], required_unless_present = "n")]
        b: Option<String>,
        #[arg(long)]
        bprime: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// Cohomology of Igusa varieties at a stratum.
    Igusa {
        #[command(flatten)]
        phi: PhiArgs,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        b: String,
        /// Also list the graded pieces of the Mantovan filtration.
        #[arg(long)]
        mantovan: bool,
    },
}

#[derive(Args, Debug)]
pub struct PhiArgs {
    /// Dimensions n_i of the components φ_i.
    #[arg(long)]
    pub dims: String,
}

#[derive(Subcommand, Debug)]
pub enum KottwitzCmd {
    /// List B(GL_n, μ) in a linear extension of the order.
    Enum(KottwitzArgs),
    /// Covering relations of B(GL_n, μ).
    Hasse(KottwitzArgs),
}

#[derive(Args, Debug)]
pub struct KottwitzArgs {
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
    /// Write the Hasse diagram in DOT format to this file ("-" for stdout).
    #[arg(long)]
    pub dot: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum WeightsCmd {
    /// Weight multiplicities of V_λ.
    Mult {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Restriction of V_λ to GL_{n_1} × … × GL_{n_k}.
    Branch {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        blocks: String,
    },
    /// σ_χ = Hom_{S_φ}(χ, r_λ ∘ φ).
    Sigma {
        #[command(flatten)]
        phi: PhiArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum SpectralCmd {
    /// C_χ ⋆ F_ξ.
    Act {
        #[command(flatten)]
        phi: PhiArgs,
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
    },
    /// T_λ(F_ξ).
    Hecke(HeckeArgs),
    /// i_b^* T_λ(F_ξ).
    Stalk {
        #[command(flatten)]
        phi: PhiArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        #[arg(long)]
        b: String,
    },
    /// Stalk of the eigensheaf G_φ at b.
    Eigensheaf {
        #[command(flatten)]
        phi: PhiArgs,
        #[arg(long)]
        b: String,
    },
    /// Check the eigensheaf identity on the given strata.
    Verify {
        #[command(flatten)]
        phi: PhiArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Strata to check (repeatable); defaults to every b_χ reached by T_λ(F_1) and O^n.
        #[arg(long)]
        b: Vec<String>,
    },
}

#[derive(Args, Debug)]
pub struct HeckeArgs {
    #[command(flatten)]
    pub phi: PhiArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    pub xi: String,
    /// Restrict to the terms supported on this stratum.
    #[arg(long)]
    pub stalk: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let ascii = cli.ascii;
    match commands::run(&cli) {
        Ok(out) => {
            let mut text = out;
            if ascii {
                text = ascii::transliterate(&text);
            }
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            if !text.ends_with('\n') {
                let _ = stdout.write_all(b"\n");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let msg = e.to_string();
            eprintln!("error: {}", if ascii { ascii::transliterate(&msg) } else { msg });
            ExitCode::from(e.exit_code())
        }
    }
}
