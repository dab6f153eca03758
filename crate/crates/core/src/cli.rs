//! Command dispatch for the `todafactor` binary. Every command produces one
//! JSON report; exact values are rational strings, floats use the shortest
//! round-trip decimal form.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{ComplexPoint, PolyMat, RatFunc};
use crate::classify::{classify, hp_min_eigen_sample, weyl_disk, Disk, HpReport, Verdict};
use crate::error::Error;
use crate::factorization::{expand, factorize};
use crate::factors::Factorization;
use crate::grid::SampleGrid;
use crate::herglotz::{herglotz_check, herglotz_generate, toda_apply, HerglotzSample, Side};
use crate::io::{
    extended_real_json, factorization_json, matrix_json, projection_json, ratfunc_json, rational_json,
    HerglotzInput, Operator, ParseError, ProblemFile,
};
use crate::random;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Factor,
    Classify,
    Synthesize,
    VerifyHp,
    Act,
    WeylDisk,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Factor => "factor",
            Command::Classify => "classify",
            Command::Synthesize => "synthesize",
            Command::VerifyHp => "verify-hp",
            Command::Act => "act",
            Command::WeylDisk => "weyl-disk",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Options {
    pub z: Option<Complex64>,
    pub grid: SampleGrid,
    pub side: Side,
}

impl Default for Options {
    fn default() -> Self {
        Options { z: None, grid: SampleGrid::default(), side: Side::Plus }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CommandError {
    #[error("input error: {0}")]
    Parse(#[from] ParseError),
    #[error("incompatible input: {0}")]
    IncompatibleInput(String),
    #[error("{0}")]
    Domain(#[from] Error),
}

impl CommandError {
    /// 2 for usage and input-format problems, 3 for mathematical domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Parse(ParseError::DetNotOne { .. } | ParseError::Domain { .. }) => 3,
            CommandError::Parse(_) | CommandError::IncompatibleInput(_) => 2,
            CommandError::Domain(_) => 3,
        }
    }

    pub fn report(&self, cmd: Command) -> Value {
        json!({ "command": cmd.name(), "error": self.to_string(), "exit_code": self.exit_code() })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Value,
    /// `false` when a verification ran correctly but found a violation.
    pub verified: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.verified {
            0
        } else {
            1
        }
    }
}

fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn grid_json(g: &SampleGrid) -> Value {
    json!({
        "re_min": g.re_min, "re_max": g.re_max, "re_count": g.re_count,
        "im_min": g.im_min, "im_max": g.im_max, "im_count": g.im_count,
    })
}

pub fn verdict_json(v: &Verdict) -> Value {
    let lengths = |ls: &[(crate::algebra::Rational, crate::factors::Projection)]| {
        ls.iter()
            .map(|(l, p)| json!({ "length": rational_json(l), "direction": projection_json(p) }))
            .collect::<Vec<_>>()
    };
    match v {
        Verdict::TransferMatrix(ls) | Verdict::InverseTransferMatrix(ls) => {
            json!({ "kind": v.name(), "factors": lengths(ls) })
        }
        Verdict::TrivialSingular { p, proj, fixed_point } => json!({
            "kind": v.name(),
            "poly": p.coeffs().iter().skip(1).map(rational_json).collect::<Vec<_>>(),
            "direction": projection_json(proj),
            "fixed_point": extended_real_json(fixed_point),
        }),
        _ => json!({ "kind": v.name() }),
    }
}

pub fn hp_json(r: &HpReport) -> Value {
    json!({
        "passed": r.passed,
        "min_eigenvalue": r.min_eigenvalue,
        "witness": complex_json(r.witness),
        "witness_norm": r.witness_norm,
        "violations": r.violations,
        "grid": grid_json(&r.grid),
    })
}

pub fn herglotz_sample_json(s: &HerglotzSample) -> Value {
    json!({
        "passed": s.passed,
        "min_imag": if s.evaluated > 0 { json!(s.min_imag) } else { Value::Null },
        "witness": s.witness.map(complex_json),
        "evaluated": s.evaluated,
        "poles_skipped": s.poles_skipped,
    })
}

pub fn disk_json(d: &Disk) -> Value {
    match *d {
        Disk::Round { center, radius, exterior } => json!({
            "is_half_plane": false,
            "center": complex_json(center),
            "radius": radius,
            "exterior": exterior,
        }),
        Disk::HalfPlane { boundary, interior } => json!({
            "is_half_plane": true,
            "boundary": [complex_json(boundary[0]), complex_json(boundary[1])],
            "interior": complex_json(interior),
        }),
    }
}

fn operator(problem: &ProblemFile, cmd: Command) -> Result<&Operator, CommandError> {
    problem
        .operator
        .as_ref()
        .ok_or_else(|| CommandError::IncompatibleInput(format!("{} needs a matrix or factorization", cmd.name())))
}

fn operator_matrix(op: &Operator) -> PolyMat {
    match op {
        Operator::Matrix(a) => a.clone(),
        Operator::Factorization(f) => expand(f),
    }
}

fn operator_factorization(op: &Operator) -> Result<Factorization, Error> {
    match op {
        Operator::Matrix(a) => factorize(a),
        Operator::Factorization(f) => Ok(f.clone()),
    }
}

fn herglotz_function(h: &HerglotzInput) -> Result<RatFunc, Error> {
    match h {
        HerglotzInput::Generated { transfer, y } => herglotz_generate(transfer, y),
        HerglotzInput::Explicit(f) => Ok(f.clone()),
    }
}

pub fn run_command(cmd: Command, problem: &ProblemFile, opts: &Options) -> Result<Outcome, CommandError> {
    let mut report = json!({ "command": cmd.name() });
    let out = report.as_object_mut().expect("object");
    let mut verified = true;
    match cmd {
        Command::Factor => {
            let f = operator_factorization(operator(problem, cmd)?)?;
            out.insert("degree".into(), json!(expand(&f).degree()));
            out.insert("factorization".into(), factorization_json(&f));
        }
        Command::Classify => {
            let f = operator_factorization(operator(problem, cmd)?)?;
            let verdict = classify(&f.normalized())?;
            out.insert("verdict".into(), verdict_json(&verdict));
            out.insert("up_to_constant_prefix".into(), json!(!f.prefix().is_identity()));
            out.insert("factorization".into(), factorization_json(&f));
        }
        Command::Synthesize => {
            let f = match operator(problem, cmd)? {
                Operator::Factorization(f) => f,
                Operator::Matrix(_) => {
                    return Err(CommandError::IncompatibleInput("synthesize needs a factorization".into()))
                }
            };
            let a = expand(f);
            out.insert("degree".into(), json!(a.degree()));
            out.insert("matrix".into(), matrix_json(&a));
        }
        Command::VerifyHp => {
            let a = operator_matrix(operator(problem, cmd)?);
            let r = hp_min_eigen_sample(&a, &opts.grid)?;
            verified = r.passed;
            out.insert("hp".into(), hp_json(&r));
        }
        Command::Act => {
            let a = operator_matrix(operator(problem, cmd)?);
            let h = problem
                .herglotz
                .as_ref()
                .ok_or_else(|| CommandError::IncompatibleInput("act needs a herglotz input".into()))?;
            let f = herglotz_function(h)?;
            let g = toda_apply(&a, &f, opts.side)?;
            let input_check = herglotz_check(&f, &opts.grid)?;
            let result_check = herglotz_check(&g, &opts.grid)?;
            verified = result_check.passed;
            out.insert("side".into(), json!(if opts.side == Side::Plus { "plus" } else { "minus" }));
            out.insert("input".into(), ratfunc_json(&f));
            out.insert("input_check".into(), herglotz_sample_json(&input_check));
            out.insert("result".into(), ratfunc_json(&g));
            out.insert("result_check".into(), herglotz_sample_json(&result_check));
        }
        Command::WeylDisk => {
            let a = operator_matrix(operator(problem, cmd)?);
            let z = opts.z.unwrap_or(Complex64::new(0.0, 1.0));
            let d = weyl_disk(&a, ComplexPoint::Finite(z))?;
            out.insert("z".into(), complex_json(z));
            out.insert("disk".into(), disk_json(&d));
        }
    }
    Ok(Outcome { report, verified })
}

/// Deterministic random problem: a factorization plus a generated Herglotz function.
pub fn random_problem(seed: u64) -> ProblemFile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = random::factorization(&mut rng, &random::FactorizationParams::default());
    let n = rng.gen_range(0..=3);
    let transfer = random::transfer_matrix(&mut rng, n, 9);
    let y = random::extended_real(&mut rng, 9);
    ProblemFile {
        operator: Some(Operator::Factorization(f)),
        herglotz: Some(HerglotzInput::Generated { transfer, y }),
    }
}
