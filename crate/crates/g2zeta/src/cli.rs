//! Command-line interface: evaluation, symbolic construction, zero finding,
//! and the verification pipeline. Owns config loading and output formats.

use crate::config::{self, Config};
use crate::error::{Error, Result};
use crate::exec;
use crate::period::{
    build_period, multipliers, normalize, pipeline, residue_along,
    Hyperplane, ParabolicKind,
};
use crate::rhverify::{full_report, VerifyOptions};
use crate::rootsystem::build_g2;
use crate::zeros::{winding_count, xi_zeros_up_to, Rectangle, XiZeroTable};
use crate::zetas::{eval_fn, eval_z, eval_zeta_g2, FunctionId};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "g2zeta",
    about = "Zeta functions attached to G2: symbolic construction, evaluation, zero counting, verification",
    version
)]
pub struct Cli {
    /// Config file (TOML, key = value entries); G2ZETA_* env vars override it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Seed for randomized sample grids.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Worker cap for data-parallel scans.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Root-system utilities.
    G2 {
        #[command(subcommand)]
        cmd: G2Cmd,
    },
    /// Symbolic period pipeline.
    Period {
        #[command(subcommand)]
        cmd: PeriodCmd,
    },
    /// Numeric evaluation of the zeta functions and companions.
    Zeta {
        #[command(subcommand)]
        cmd: ZetaCmd,
    },
    /// Zero counting and scanning.
    Zeros {
        #[command(subcommand)]
        cmd: ZerosCmd,
    },
    /// Verification pipeline.
    Rh {
        #[command(subcommand)]
        cmd: RhCmd,
    },
    /// Shorthand for `zeta eval`.
    Eval(EvalArgs),
}

#[derive(Subcommand)]
pub enum G2Cmd {
    /// Print the regenerated action/inversion table.
    Table,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
pub enum EmitKind {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
pub enum Stage {
    /// The 12-term two-variable period.
    Period,
    /// After the residue along the singular hyperplane.
    Residue,
    /// Multiplied through, before the final shift.
    Unshifted,
    /// The published eight-term zeta expression.
    Final,
}

#[derive(Subcommand)]
pub enum PeriodCmd {
    /// Build the period and run the residue/normalize pipeline.
    Build {
        #[arg(long, value_parser = parse_kind)]
        kind: ParabolicKind,
        #[arg(long, value_enum, default_value = "json")]
        emit: EmitKind,
        #[arg(long, value_enum, default_value = "final")]
        stage: Stage,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
pub struct EvalArgs {
    /// Function id: Z1, Z2, F1, F2, FT1, FT2, long, short, xi.
    #[arg(long = "fn", value_parser = parse_fn)]
    pub function: FunctionId,
    /// Point, written like "0.5+14.2i" or "2" or "-1.5-3i".
    #[arg(long, value_parser = parse_complex)]
    pub s: Complex64,
}

#[derive(Subcommand)]
pub enum ZetaCmd {
    /// Evaluate a function at one point; prints {re, im, abs}.
    Eval(EvalArgs),
    /// Max functional-equation residual over random samples.
    CheckFe {
        #[arg(long = "fn", value_parser = parse_fn)]
        function: FunctionId,
        #[arg(long, default_value = "100")]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand)]
pub enum ZerosCmd {
    /// Winding number of a function around a rectangle.
    Count {
        #[arg(long = "fn", value_parser = parse_fn)]
        function: FunctionId,
        /// re_min,re_max,im_min,im_max
        #[arg(long, value_parser = parse_rect)]
        rect: Rectangle,
    },
    /// Critical-line scan; CSV columns t, re_part, im_part.
    Scan {
        #[arg(long = "fn", value_parser = parse_fn)]
        function: FunctionId,
        #[arg(long)]
        t0: f64,
        #[arg(long)]
        t1: f64,
        #[arg(long)]
        step: Option<f64>,
        #[arg(long, value_enum, default_value = "csv")]
        emit: ScanEmit,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate critical-line xi zero ordinates up to height T.
    XiTable {
        #[arg(long = "T")]
        t_max: f64,
        /// Cache file; reused when present with sufficient height.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
pub enum ScanEmit {
    Csv,
    Json,
}

#[derive(Subcommand)]
pub enum RhCmd {
    /// Run the full verification pipeline; exit 0 iff every check passes.
    Verify {
        #[arg(long = "T")]
        t_max: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also dump the critical-line scans of both companions as CSV.
        #[arg(long, value_enum)]
        emit: Option<ScanEmit>,
        /// Include wall-clock timings in the report (not byte-reproducible).
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn parse_kind(s: &str) -> std::result::Result<ParabolicKind, String> {
    s.parse()
}

fn parse_fn(s: &str) -> std::result::Result<FunctionId, String> {
    s.parse()
}

/// Parse "a+bi" / "a-bi" / "a" / "bi" with optional spaces.
pub fn parse_complex(input: &str) -> std::result::Result<Complex64, String> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty complex number".into());
    }
    let err = || format!("cannot parse complex number: {input}");
    if let Some(body) = s.strip_suffix(['i', 'I']) {
        // split into real and imaginary at the last +/- that is not an
        // exponent sign and not the leading sign
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let c = bytes[k] as char;
            if (c == '+' || c == '-') && !matches!(bytes[k - 1] as char, 'e' | 'E') {
                split = Some(k);
                break;
            }
        }
        match split {
            Some(k) => {
                let re: f64 = body[..k].parse().map_err(|_| err())?;
                let im_str = &body[k..];
                let im: f64 = match im_str {
                    "+" => 1.0,
                    "-" => -1.0,
                    _ => im_str.parse().map_err(|_| err())?,
                };
                Ok(Complex64::new(re, im))
            }
            None => {
                let im: f64 = match body {
                    "" | "+" => 1.0,
                    "-" => -1.0,
                    _ => body.parse().map_err(|_| err())?,
                };
                Ok(Complex64::new(0.0, im))
            }
        }
    } else {
        let re: f64 = s.parse().map_err(|_| err())?;
        Ok(Complex64::new(re, 0.0))
    }
}

fn parse_rect(s: &str) -> std::result::Result<Rectangle, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err("rectangle needs re_min,re_max,im_min,im_max".into());
    }
    let mut v = [0f64; 4];
    for (i, p) in parts.iter().enumerate() {
        v[i] = p.trim().parse().map_err(|_| format!("bad number: {p}"))?;
    }
    Rectangle::new(v[0], v[1], v[2], v[3]).map_err(|e| e.to_string())
}

fn load_config(cli: &Cli) -> Result<Config> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            Config::from_toml_str(&text)?
        }
        None => Config::default(),
    };
    cfg.apply_env()?;
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if let Some(jobs) = cli.jobs {
        cfg.jobs = jobs;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, content)?;
            Ok(())
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())?;
            if !content.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

/// Run the parsed command. Returns the process exit code.
pub fn run(cli: Cli) -> u8 {
    let cfg = match load_config(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    exec::limit_jobs(cfg.jobs);
    config::set_global(cfg.clone());
    match dispatch(cli, &cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn dispatch(cli: Cli, cfg: &Config) -> Result<u8> {
    match cli.command {
        Command::G2 { cmd: G2Cmd::Table } => {
            let rs = build_g2();
            print!("{}", rs.table_text());
            Ok(0)
        }
        Command::Period { cmd } => run_period(cmd),
        Command::Zeta { cmd } => run_zeta(cmd, cfg),
        Command::Eval(args) => run_eval(&args),
        Command::Zeros { cmd } => run_zeros(cmd, cfg),
        Command::Rh { cmd } => run_rh(cmd, cfg),
    }
}

mod g2zeta_single_var {
    use crate::rootsystem::{LinearForm, SingleVar};

    pub fn render_xi(args: &[LinearForm]) -> String {
        args.iter()
            .map(|f| format!("xi({})", SingleVar(*f)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn run_period(cmd: PeriodCmd) -> Result<u8> {
    let PeriodCmd::Build {
        kind,
        emit,
        stage,
        out,
    } = cmd;
    let rs = build_g2();
    let content = match stage {
        Stage::Period => {
            let period = build_period(&rs);
            match emit {
                EmitKind::Json => serde_json::to_string_pretty(&period)?,
                EmitKind::Text => {
                    let mut s = String::new();
                    for t in &period.terms {
                        s.push_str(&format!(
                            "{}: {}  ratios: {}\n",
                            t.weyl,
                            t.coeff.render(false),
                            t.ratios
                                .iter()
                                .map(|r| format!("xi({})/xi({}+1)", r.arg, r.arg))
                                .collect::<Vec<_>>()
                                .join(" "),
                        ));
                    }
                    s
                }
            }
        }
        _ => {
            let expr = match stage {
                Stage::Residue => residue_along(&build_period(&rs), Hyperplane::for_kind(kind)),
                Stage::Unshifted => normalize(
                    &residue_along(&build_period(&rs), Hyperplane::for_kind(kind)),
                    &multipliers(kind),
                    0,
                ),
                Stage::Final => pipeline(&rs, kind),
                Stage::Period => unreachable!(),
            };
            match emit {
                EmitKind::Json => serde_json::to_string_pretty(&expr)?,
                EmitKind::Text => {
                    use g2zeta_single_var::render_xi;
                    let mut s = String::new();
                    for t in &expr.terms {
                        s.push_str(&t.coeff.render(true));
                        if !t.xi_num.is_empty() {
                            s.push_str("  *  ");
                            s.push_str(&render_xi(&t.xi_num));
                        }
                        if !t.xi_den.is_empty() {
                            s.push_str("  /  ");
                            s.push_str(&render_xi(&t.xi_den));
                        }
                        s.push('\n');
                    }
                    s
                }
            }
        }
    };
    write_output(&out, &content)?;
    Ok(0)
}

fn run_eval(args: &EvalArgs) -> Result<u8> {
    let v = eval_fn(args.function, args.s)?;
    let doc = json!({ "re": v.re, "im": v.im, "abs": v.norm() });
    println!("{}", serde_json::to_string_pretty(&doc)?);
    Ok(0)
}

fn run_zeta(cmd: ZetaCmd, cfg: &Config) -> Result<u8> {
    match cmd {
        ZetaCmd::Eval(args) => run_eval(&args),
        ZetaCmd::CheckFe {
            function,
            samples,
            seed,
        } => {
            let seed = seed.unwrap_or(cfg.seed);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut max_rel = 0f64;
            let mut checked = 0;
            while checked < samples {
                let s = Complex64::new(rng.gen_range(-4.0..5.0), rng.gen_range(-20.0..20.0));
                let rel = match function {
                    FunctionId::ZetaLong | FunctionId::ZetaShort => {
                        let kind = if function == FunctionId::ZetaLong {
                            ParabolicKind::Long
                        } else {
                            ParabolicKind::Short
                        };
                        match (eval_zeta_g2(kind, s), eval_zeta_g2(kind, 1.0 - s)) {
                            (Ok(a), Ok(b)) => (a - b).norm() / a.norm().max(1e-300),
                            _ => continue,
                        }
                    }
                    FunctionId::Z1 | FunctionId::Z2 => {
                        let a = eval_z(function, s);
                        (a + eval_z(function, 1.0 - s)).norm() / a.norm().max(1e-300)
                    }
                    FunctionId::Xi => match (crate::special::xi(s), crate::special::xi(1.0 - s)) {
                        (Ok(a), Ok(b)) => (a - b).norm() / a.norm().max(1e-300),
                        _ => continue,
                    },
                    other => {
                        return Err(Error::InvalidInput(format!(
                            "no functional equation check for {other}"
                        )))
                    }
                };
                max_rel = max_rel.max(rel);
                checked += 1;
            }
            let doc = json!({
                "function": function.label(),
                "samples": samples,
                "seed": seed,
                "max_rel_residual": max_rel,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
            Ok(0)
        }
    }
}

fn scan_csv(function: FunctionId, t0: f64, t1: f64, step: f64) -> Result<String> {
    let n = ((t1 - t0) / step).ceil() as usize + 1;
    let ts: Vec<f64> = (0..n).map(|k| (t0 + k as f64 * step).min(t1)).collect();
    let vals = exec::map(&ts, |&t| eval_fn(function, Complex64::new(0.5, t)));
    let mut out = String::from("t,re_part,im_part\n");
    for (t, v) in ts.iter().zip(vals) {
        let v = v?;
        out.push_str(&format!("{t},{},{}\n", v.re, v.im));
    }
    Ok(out)
}

fn run_zeros(cmd: ZerosCmd, cfg: &Config) -> Result<u8> {
    match cmd {
        ZerosCmd::Count { function, rect } => {
            let w = winding_count(function, rect)?;
            println!("{}", serde_json::to_string_pretty(&w)?);
            Ok(0)
        }
        ZerosCmd::Scan {
            function,
            t0,
            t1,
            step,
            emit,
            out,
        } => {
            let step = step.unwrap_or(cfg.scan_step);
            if !(step > 0.0 && step <= 0.05) {
                return Err(Error::InvalidInput(format!(
                    "scan step {step} outside (0, 0.05]"
                )));
            }
            // the restriction vanishes identically at t = 0; start one step up
            let t0 = if t0 <= 0.0 { step } else { t0 };
            let content = match emit {
                ScanEmit::Csv => scan_csv(function, t0, t1, step)?,
                ScanEmit::Json => {
                    let brackets = crate::zeros::line_scan(function, t0, t1, step)?;
                    serde_json::to_string_pretty(&json!({ "brackets": brackets }))?
                }
            };
            write_output(&out, &content)?;
            Ok(0)
        }
        ZerosCmd::XiTable { t_max, out } => {
            // default the cache file into the configured cache directory
            let out = out.or_else(|| {
                cfg.cache_dir
                    .as_ref()
                    .map(|d| d.join("zeros_xi.json"))
            });
            if let Some(parent) = out.as_ref().and_then(|p| p.parent()) {
                if !parent.as_os_str().is_empty() {
                    std::fs::create_dir_all(parent)?;
                }
            }
            // reuse the cached table when it is tall enough
            if let Some(path) = &out {
                if let Ok(text) = std::fs::read_to_string(path) {
                    if let Ok(table) = serde_json::from_str::<XiZeroTable>(&text) {
                        if table.height >= t_max {
                            eprintln!(
                                "reusing cached table at {} (height {})",
                                path.display(),
                                table.height
                            );
                            println!("{}", serde_json::to_string_pretty(&table)?);
                            return Ok(0);
                        }
                    }
                }
            }
            let table = xi_zeros_up_to(t_max)?;
            let content = serde_json::to_string_pretty(&table)?;
            if let Some(path) = &out {
                std::fs::write(path, &content)?;
            }
            println!("{content}");
            Ok(0)
        }
    }
}

fn run_rh(cmd: RhCmd, cfg: &Config) -> Result<u8> {
    let RhCmd::Verify {
        t_max,
        out,
        emit,
        timings,
        seed,
    } = cmd;
    let opts = VerifyOptions {
        t_max: t_max.unwrap_or(cfg.default_t),
        seed: seed.unwrap_or(cfg.seed),
        timings,
        scan_step: cfg.scan_step,
    };
    let report = full_report(&opts);
    let content = report.to_json_pretty();
    match &out {
        Some(path) => std::fs::write(path, &content)?,
        None => println!("{content}"),
    }
    if let Some(ScanEmit::Csv) = emit {
        for (id, name) in [(FunctionId::Z1, "z1"), (FunctionId::Z2, "z2")] {
            let csv = scan_csv(id, opts.scan_step, opts.t_max, opts.scan_step)?;
            let path = match &out {
                Some(p) => p.with_file_name(format!("scan_{name}.csv")),
                None => PathBuf::from(format!("scan_{name}.csv")),
            };
            std::fs::write(&path, csv)?;
            eprintln!("wrote {}", path.display());
        }
    }
    for c in &report.checks {
        eprintln!(
            "{} {}",
            match c.status {
                crate::rhverify::CheckStatus::Pass => "PASS",
                crate::rhverify::CheckStatus::Fail => "FAIL",
                crate::rhverify::CheckStatus::Error => "ERROR",
            },
            c.check_id
        );
    }
    eprintln!(
        "{}/{} checks passed",
        report.summary.passed, report.summary.total
    );
    Ok(if report.all_pass() { 0 } else { 1 })
}
