mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "eqorient", version, about = "Burnside rings, unit groups, Mackey functors, orientation verdicts and Bredon cohomology for finite groups")]
pub struct Cli {
    /// Print structured JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub area: Area,
}

#[derive(Args, Clone)]
pub struct GroupArg {
    /// Built-in group name (C4, S3, D4, Q8, C2xC2, ...) or path to a JSON file
    /// `{"degree": n, "generators": [[...], ...]}`.
    #[arg(long)]
    pub group: String,
}

#[derive(Subcommand)]
pub enum Area {
    /// Groups and their subgroups.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Burnside rings, norms and unit groups.
    #[command(subcommand)]
    Burnside(BurnsideCmd),
    /// Mackey functors.
    #[command(subcommand)]
    Mackey(MackeyCmd),
    /// Representations of products Π × G.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Orientability verdicts.
    #[command(subcommand)]
    Orient(OrientCmd),
    /// Bredon cohomology.
    #[command(subcommand)]
    Bredon(BredonCmd),
}

#[derive(Subcommand)]
pub enum GroupCmd {
    /// Order, degree, generators and subgroup counts.
    Info(GroupArg),
    /// Conjugacy classes of subgroups.
    Subgroups(GroupArg),
}

#[derive(Subcommand)]
pub enum BurnsideCmd {
    /// Table of marks of A(H).
    Tom {
        #[command(flatten)]
        group: GroupArg,
        /// Subgroup index; defaults to the whole group.
        #[arg(long)]
        level: Option<usize>,
    },
    /// Product of two elements given as coefficient lists.
    Mul {
        #[command(flatten)]
        group: GroupArg,
        /// Subgroup index; defaults to the whole group.
        #[arg(long)]
        level: Option<usize>,
        /// Coefficients in the orbit basis, e.g. `1,0,-2`.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Restriction from A(H) to A(K).
    Res {
        #[command(flatten)]
        group: GroupArg,
        /// Subgroup index of H; defaults to the whole group.
        #[arg(long)]
        from: Option<usize>,
        /// Subgroup index of K.
        #[arg(long)]
        to: usize,
        /// Coefficients in the orbit basis of the source level.
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Additive transfer from A(K) to A(H).
    Tr {
        #[command(flatten)]
        group: GroupArg,
        /// Subgroup index of K.
        #[arg(long)]
        from: usize,
        /// Defaults to the whole group.
        #[arg(long)]
        to: Option<usize>,
        /// Coefficients in the orbit basis of the source level.
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Multiplicative norm from A(K) to A(H).
    Norm {
        #[command(flatten)]
        group: GroupArg,
        /// Subgroup index of K.
        #[arg(long)]
        from: usize,
        /// Defaults to the whole group.
        #[arg(long)]
        to: Option<usize>,
        /// Coefficients in the orbit basis of the source level.
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// The unit group of A(H).
    Units {
        #[command(flatten)]
        group: GroupArg,
        /// Subgroup index; defaults to the whole group.
        #[arg(long)]
        level: Option<usize>,
        /// Also list every unit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand)]
pub enum MackeyCmd {
    /// Values and structure maps of a built-in functor.
    Show {
        #[command(flatten)]
        group: GroupArg,
        /// Coefficient functor: burnside, constZ, constF2, units or ghost.
        #[arg(long)]
        coefficients: String,
    },
    /// Checks the Mackey functor axioms.
    Verify {
        #[command(flatten)]
        group: GroupArg,
        /// Coefficient functor: burnside, constZ, constF2, units or ghost.
        #[arg(long)]
        coefficients: String,
    },
    /// Unit restriction and transfer tables for C₂ⁿ, checked against closed forms.
    Tn {
        /// The exponent n.
        #[arg(long)]
        n: usize,
        /// Use the cyclic group of order 2ⁿ instead.
        #[arg(long)]
        cyclic: bool,
    },
}

#[derive(Args, Clone)]
pub struct ProductArgs {
    #[command(flatten)]
    pub group: GroupArg,
    /// The structure group Π (name or JSON path).
    #[arg(long)]
    pub structure: String,
    /// Representation expression such as `external(sign(Sigma2), regular(C2))`,
    /// or a path to a JSON file with generator matrices.
    #[arg(long)]
    pub rep: String,
}

#[derive(Subcommand)]
pub enum RepCmd {
    /// Homogeneity check by fiber characters.
    Homog(ProductArgs),
    /// Fiber characters over one subgroup.
    Fiber {
        #[command(flatten)]
        args: ProductArgs,
        /// Subgroup index; defaults to the whole group.
        #[arg(long)]
        subgroup: Option<usize>,
    },
}

#[derive(Subcommand)]
pub enum OrientCmd {
    /// HZ and HA orientability of γ_ρ.
    GammaRho(GroupArg),
    /// Components of the fixed points of B_G Π.
    Pi0 {
        #[command(flatten)]
        group: GroupArg,
        /// The structure group Π (name or JSON path).
        #[arg(long)]
        structure: String,
    },
    /// w₁ of the line induced from the Möbius line over a free orbit.
    InducedLine(GroupArg),
    /// Augmentation isomorphism at every level (odd order only).
    OddCollapse(GroupArg),
}

#[derive(Subcommand)]
pub enum BredonCmd {
    /// Bredon cohomology of a G-CW complex.
    Compute {
        #[command(flatten)]
        group: GroupArg,
        /// Built-in complex (point, circle, free, sigma_sphere, s2sigma) or JSON path.
        #[arg(long)]
        complex: String,
        /// Coefficient functor: burnside, constZ, constF2, units or ghost.
        #[arg(long)]
        coefficients: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let msg = e.to_string();
            eprintln!("{}", msg.lines().next().unwrap_or("invalid arguments"));
            return ExitCode::from(2);
        }
        Err(e) => e.exit(),
    };
    match commands::run(&cli) {
        Ok(out) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("JSON output") + "\n"
            } else {
                out.text
            };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_internal() {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
