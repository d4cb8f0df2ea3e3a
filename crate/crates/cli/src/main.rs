use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use wildforms::apolar::HessianMode;
use wildforms::random::DEFAULT_SEED;

mod algebra;
mod analyze;
mod family;
mod input;

/// Apolarity, Hessians and border decompositions of homogeneous forms over Q.
#[derive(Parser)]
#[command(name = "wildforms", version)]
struct Cli {
    /// Print JSON (schema 1, sorted keys) instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Decide Hessian vanishing symbolically instead of by random evaluation.
    #[arg(long, global = true)]
    exact: bool,
    /// Seed for every pseudorandom choice.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Degree bound for truncations and limit ideals.
    #[arg(long, global = true)]
    degree_bound: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function, Hessians, saturation and wildness verdict of a form.
    Analyze {
        /// The form, e.g. "x0^3 + x1^3".
        form: Option<String>,
        /// Read the form (text or form JSON) from a file.
        #[arg(long, conflicts_with_all = ["form", "name"])]
        file: Option<String>,
        /// A catalog example: H5, Ikeda, L5, NonMinimal4, NonWildVH, Jet, ConicTangent, Cusp,
        /// Fermat, Fermat(n,d), Perazzo, G<d>, F<n>.
        #[arg(long, conflicts_with = "form")]
        name: Option<String>,
        /// Certify minimal border rank with a family decomposition instead of assuming it.
        #[arg(long)]
        certify_family: bool,
    },
    /// The series G_d and F_n.
    Family {
        kind: FamilyKind,
        /// d for gd, n = 3k + 1 for fn.
        param: u32,
        action: FamilyAction,
        /// Binary form of degree d + 2 in the dual u-variables (vsp-check).
        #[arg(long)]
        q: Option<String>,
        /// Lines (a,b) carrying the fourth points of an F_n configuration.
        #[arg(long)]
        pair: Option<String>,
    },
    /// Finite algebras and tensors.
    Algebra {
        action: AlgebraAction,
        /// Interchange file holding an algebra, tensor or form.
        file: Option<String>,
        /// Use the apolar algebra (or the tensor) of this form.
        #[arg(long, conflicts_with = "file")]
        form: Option<String>,
        /// Number of slots of the structure tensor.
        #[arg(long)]
        d: Option<usize>,
        /// Comma-separated coordinates of the linear form used by from-tensor.
        #[arg(long)]
        witness: Option<String>,
    },
    /// VSP ideal of G_d for a binary form q (same as `family gd <d> vsp-check`).
    VspCheck {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        q: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Gd,
    Fn,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyAction {
    Emit,
    Decompose,
    Verify,
    VspCheck,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraAction {
    Gorenstein,
    Tensor,
    FromTensor,
}

/// Settings shared by every command.
pub struct Options {
    pub json: bool,
    pub mode: HessianMode,
    pub seed: u64,
    pub degree_bound: Option<u32>,
}

/// What a command wants the process to report.
pub enum Outcome {
    Done,
    NotApplicable,
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let opts = Options {
        json: cli.json,
        mode: if cli.exact { HessianMode::Exact } else { HessianMode::Probabilistic { seed: cli.seed } },
        seed: cli.seed,
        degree_bound: cli.degree_bound,
    };
    match cli.command {
        Command::Analyze { form, file, name, certify_family } => {
            let (label, f) = input::resolve_form(form.as_deref(), file.as_deref(), name.as_deref())?;
            analyze::run(&label, &f, certify_family, &opts)
        }
        Command::Family { kind, param, action, q, pair } => {
            let kind = match kind {
                FamilyKind::Gd => family::Kind::Gd(param),
                FamilyKind::Fn => family::Kind::Fn(param as usize, pair.as_deref().map(input::parse_pair).transpose()?),
            };
            match action {
                FamilyAction::Emit => family::emit(&kind, &opts),
                FamilyAction::Decompose => family::decompose(&kind),
                FamilyAction::Verify => family::verify(&kind, &opts),
                FamilyAction::VspCheck => match kind {
                    family::Kind::Gd(d) => family::vsp_check(d, q.as_deref(), &opts),
                    family::Kind::Fn(..) => anyhow::bail!("vsp-check is only available for gd"),
                },
            }
        }
        Command::Algebra { action, file, form, d, witness } => {
            let source = input::resolve_algebra_input(file.as_deref(), form.as_deref())?;
            match action {
                AlgebraAction::Gorenstein => algebra::gorenstein(&source, &opts),
                AlgebraAction::Tensor => algebra::tensor(&source, d),
                AlgebraAction::FromTensor => algebra::from_tensor(&source, witness.as_deref(), &opts),
            }
        }
        Command::VspCheck { d, q } => family::vsp_check(d, Some(&q), &opts),
    }
}

fn main() -> ExitCode {
    // exit code 2 means "not applicable", so usage errors report 1
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::FAILURE } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::NotApplicable) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
