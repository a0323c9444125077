use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, ValueEnum};

use qgrass::cli::{exit_code, parse_problem, run_command, Command, Options};

#[derive(Parser)]
#[command(name = "qgrass", version, about = "Affine charts of quiver Grassmannians")]
struct Cli {
    command: CommandArg,
    /// Problem file, or `-` for stdin.
    file: String,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Clone, Copy, ValueEnum)]
enum CommandArg {
    Skeletons,
    Chart,
    ChartsAll,
    Layering,
    Hom,
    InvariantCheck,
    ModuliCheck,
    OrbitDims,
    Enumerate,
    CrossValidate,
    LocalType,
}

#[derive(Args)]
struct Flags {
    /// Top vertices, e.g. `1` or `1 3`.
    #[arg(long)]
    top: Option<String>,
    #[arg(long)]
    dim: Option<usize>,
    /// Comma-separated paths, e.g. `e1,w1,a1*w1,a2`.
    #[arg(long)]
    skeleton: Option<String>,
    #[arg(long)]
    prune: bool,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    budget: Option<u128>,
    /// `Q` or `F<p>`.
    #[arg(long)]
    field: Option<String>,
    /// Prime for the finite-field oracle.
    #[arg(long)]
    q: Option<u32>,
    /// Comma-separated generators of a submodule of P, e.g. `a*w`.
    #[arg(long)]
    sub: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = if cli.file == "-" {
        let mut s = String::new();
        if let Err(e) = std::io::stdin().read_to_string(&mut s) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        s
    } else {
        match std::fs::read_to_string(&cli.file) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {}: {e}", cli.file);
                return ExitCode::from(2);
            }
        }
    };
    let name = cli.command.to_possible_value().expect("named").get_name().to_string();
    let command = Command::from_name(&name).expect("every subcommand is known");
    let f = cli.flags;
    let options = Options {
        top: f.top,
        dim: f.dim,
        skeleton: f.skeleton,
        prune: f.prune,
        json: f.json,
        budget: f.budget,
        field: f.field,
        q: f.q,
        sub: f.sub,
    };
    let result = parse_problem(&text).and_then(|p| run_command(&p, command, &options));
    match &result {
        Ok(out) => print!("{}", out.text),
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(exit_code(&result) as u8)
}
