use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use num_complex::Complex64;

use todafactor::cli::{random_problem, run_command, Command, CommandError, Options};
use todafactor::herglotz::Side;
use todafactor::io::parse_problem;
use todafactor::SampleGrid;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Plus,
    Minus,
}

/// Factor polynomial SL(2) matrix functions and classify their Toda maps.
#[derive(Debug, Parser)]
#[command(name = "todafactor", version)]
struct Args {
    command: Command,
    /// JSON problem file; `-` or omitted reads stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Evaluation point `RE,IM` for weyl-disk (default `0,1`).
    #[arg(long, value_parser = parse_z, allow_hyphen_values = true)]
    z: Option<Complex64>,
    #[arg(long, default_value_t = -10.0, allow_hyphen_values = true)]
    re_min: f64,
    #[arg(long, default_value_t = 10.0, allow_hyphen_values = true)]
    re_max: f64,
    #[arg(long, default_value_t = 21)]
    re_count: usize,
    #[arg(long, default_value_t = 1e-3)]
    im_min: f64,
    #[arg(long, default_value_t = 1e3)]
    im_max: f64,
    #[arg(long, default_value_t = 25)]
    im_count: usize,
    /// Side of the Toda map used by `act`.
    #[arg(long, value_enum, default_value = "plus")]
    side: SideArg,
    /// Without --input, run on a random problem generated from this seed.
    #[arg(long)]
    seed: Option<u64>,
}

fn parse_z(s: &str) -> Result<Complex64, String> {
    let (re, im) = s.split_once(',').ok_or("expected RE,IM")?;
    let re = re.trim().parse::<f64>().map_err(|e| e.to_string())?;
    let im = im.trim().parse::<f64>().map_err(|e| e.to_string())?;
    Ok(Complex64::new(re, im))
}

fn read_input(path: Option<&PathBuf>) -> std::io::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let opts = Options {
        z: args.z,
        grid: SampleGrid {
            re_min: args.re_min,
            re_max: args.re_max,
            re_count: args.re_count,
            im_min: args.im_min,
            im_max: args.im_max,
            im_count: args.im_count,
        },
        side: match args.side {
            SideArg::Plus => Side::Plus,
            SideArg::Minus => Side::Minus,
        },
    };

    let problem = match (&args.input, args.seed) {
        (None, Some(seed)) => Ok(random_problem(seed)),
        _ => match read_input(args.input.as_ref()) {
            Ok(text) => parse_problem(&text).map_err(CommandError::from),
            Err(e) => {
                eprintln!("todafactor: cannot read input: {e}");
                return ExitCode::from(2);
            }
        },
    };

    let result = problem.and_then(|p| run_command(args.command, &p, &opts));
    let (report, code) = match result {
        Ok(outcome) => (outcome.report.clone(), outcome.exit_code()),
        Err(e) => {
            eprintln!("todafactor: {e}");
            (e.report(args.command), e.exit_code())
        }
    };
    println!("{}", serde_json::to_string_pretty(&report).expect("JSON values serialize"));
    ExitCode::from(code as u8)
}
