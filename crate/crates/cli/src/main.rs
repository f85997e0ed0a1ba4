use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod input;

use input::EmbeddingArgs;

/// Exact GKRS multiplets, Dirac induction and Thom isomorphism checks.
#[derive(Parser, Debug)]
#[command(name = "gkrs", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
struct EmbeddingFlags {
    /// Ambient type, e.g. A2, B2, G2, A1xA1.
    #[arg(long)]
    g: Option<String>,
    /// Simple roots of h in fundamental-weight coordinates of g: "" for the
    /// torus, "[2,-1]", "[2,-2],[0,2]", or a catalog name such as "A2>A1u1".
    #[arg(long, allow_hyphen_values = true)]
    h: Option<String>,
    /// Catalog embedding name (A2>A1u1, B2>A1A1, G2>A2, G2>A1A1).
    #[arg(long)]
    catalog: Option<String>,
    /// Embedding as JSON: {"g":"A2","h_roots":[[2,-1]]}.
    #[arg(long)]
    embedding: Option<String>,
}

impl From<&EmbeddingFlags> for EmbeddingArgs {
    fn from(f: &EmbeddingFlags) -> Self {
        EmbeddingArgs {
            g: f.g.clone(),
            h: f.h.clone(),
            catalog: f.catalog.clone(),
            embedding: f.embedding.clone(),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cartan matrix, roots, ρ and Weyl group order of g.
    Rootdata {
        #[arg(long)]
        g: String,
    },
    /// Restriction of V_λ to h, decomposed into h-irreducibles.
    Branch {
        #[command(flatten)]
        emb: EmbeddingFlags,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// The multiplet of V_λ, cross-checked against Euler-class restriction.
    Gkrs {
        #[command(flatten)]
        emb: EmbeddingFlags,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Dirac induction of U_μ; μ may have half-integral coordinates.
    Dirac {
        #[command(flatten)]
        emb: EmbeddingFlags,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Truncated pushforward of U_μ ⊗ S₀* − U_μ ⊗ S₁*, compared with `dirac`.
    Induce {
        #[command(flatten)]
        emb: EmbeddingFlags,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Height cutoff for the pushforward.
        #[arg(long, default_value_t = 12)]
        bound: i64,
    },
    /// Run a property suite and report pass counts.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[command(flatten)]
        emb: EmbeddingFlags,
        /// Largest weight coordinate in the grids.
        #[arg(long, default_value_t = 3)]
        max_coord: i64,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Gkrs,
    Thom,
    Clifford,
    Frobenius,
    Weyl,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.output;
    let result = match &cli.command {
        Command::Rootdata { g } => commands::rootdata(g, out),
        Command::Branch { emb, lambda } => commands::branch(&emb.into(), lambda, out),
        Command::Gkrs { emb, lambda } => commands::gkrs(&emb.into(), lambda, out),
        Command::Dirac { emb, mu } => commands::dirac(&emb.into(), mu, out),
        Command::Induce { emb, mu, bound } => commands::induce(&emb.into(), mu, *bound, out),
        Command::Verify {
            suite,
            emb,
            max_coord,
        } => commands::verify(*suite, &emb.into(), *max_coord, out),
    };
    match result {
        Ok(commands::Status::Pass) => ExitCode::SUCCESS,
        Ok(commands::Status::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
