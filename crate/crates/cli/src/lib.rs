//! `zeta-crystal` command line: measure construction, evaluation, zero scans,
//! x-rays and sequence certification.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zeta_crystal::asymptotics::expansion_main;
use zeta_crystal::crystal::{construct_selfdual, measure_from_function};
use zeta_crystal::documents::{
    format_f64, load_ordinates, serialize_ordinates, zeta_sequence, CombinationDocument, MeasureDocument, ZeroDocument,
};
use zeta_crystal::numerics::{Complex64, Precision, Rational};
use zeta_crystal::sequence::{
    certify, slope, smallx_residual, theta_sum, zero_sum, zeta_ordinates, zeta_zero_sum_oracle, RiemannSequenceCandidate,
};
use zeta_crystal::xray::xray_svg;
use zeta_crystal::zerofind::{scan_zeros, zeros_to_sequence, Rectangle};
use zeta_crystal::zetabuild::{build_zeta_m, ZetaLikeFunction};
use zeta_crystal::Error;

#[derive(Parser, Debug)]
#[command(name = "zeta-crystal", version, about = "Zeta functions from crystalline measures")]
struct Cli {
    /// Working precision where supported (sigma0).
    #[arg(long, global = true, value_enum, default_value_t = PrecisionArg::Double)]
    precision: PrecisionArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PrecisionArg {
    Double,
    Extended,
}

impl From<PrecisionArg> for Precision {
    fn from(p: PrecisionArg) -> Self {
        match p {
            PrecisionArg::Double => Precision::Double,
            PrecisionArg::Extended => Precision::Extended,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FunctionKind {
    Zeta,
    ZetaM,
}

#[derive(Args, Debug)]
struct FunctionArgs {
    /// Built-in function, ignored when --measure is given.
    #[arg(long, value_enum, default_value_t = FunctionKind::ZetaM)]
    function: FunctionKind,
    /// Measure document; evaluates g_N, or ζ + δ g_N with --delta.
    #[arg(long)]
    measure: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<f64>,
}

impl FunctionArgs {
    fn build(&self) -> Result<ZetaLikeFunction, Error> {
        if let Some(path) = &self.measure {
            let m = MeasureDocument::load(path)?.to_measure()?;
            return match self.delta {
                Some(d) => ZetaLikeFunction::zeta_n(&m, d),
                None => ZetaLikeFunction::g_n(&m),
            };
        }
        match self.function {
            FunctionKind::Zeta => Ok(ZetaLikeFunction::riemann()),
            FunctionKind::ZetaM => build_zeta_m(),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Self-dual measure on (1/N)Z vanishing on |n| ≤ NT.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// Hurwitz terms, residue and Dirichlet head of ζ_M.
    ZetaM {
        /// Largest frequency of the printed head.
        #[arg(long, default_value = "2")]
        head: String,
    },
    /// Value at s = RE,IM.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[command(flatten)]
        function: FunctionArgs,
    },
    /// Abscissa beyond which no zeros occur.
    Sigma0 {
        /// Bisection tolerance; 1e-12 in double and 1e-25 in extended precision.
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        function: FunctionArgs,
    },
    /// Zeros in the rectangle σ_min,σ_max,t_min,t_max.
    Zeros {
        #[arg(long, allow_hyphen_values = true, default_value = "-21,22,-10,80")]
        rect: String,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, default_value_t = 40)]
        max_depth: u32,
        #[command(flatten)]
        function: FunctionArgs,
    },
    /// SVG of the loci Im f = 0 (thick) and Re f = 0 (thin).
    Xray {
        #[arg(long, allow_hyphen_values = true, default_value = "-21,22,-10,80")]
        rect: String,
        /// NXxNY grid.
        #[arg(long, default_value = "512x1024")]
        resolution: String,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        function: FunctionArgs,
    },
    /// Structure checks and expansion table for the sequence of a zero document.
    Certify {
        #[arg(long)]
        zeros: PathBuf,
        /// Bound on |Im α|; defaults to σ₀(ζ_M) − 1/2.
        #[arg(long)]
        c: Option<f64>,
        #[arg(long, default_value = "10,20,40,80")]
        x_grid: String,
        #[arg(long, default_value = "0,1,2")]
        orders: String,
    },
    /// Zero sum of the zeta zeros against its expansion, optionally against ordinates.
    VerifyAsymptotics {
        #[arg(long, default_value = "10,20,40,80")]
        x_grid: String,
        /// Highest order N of the expansion.
        #[arg(long, default_value_t = 4)]
        terms: usize,
        /// Ordinate list; the bundled 10⁴ zeta ordinates when omitted.
        #[arg(long)]
        ordinates: Option<PathBuf>,
    },
    /// Theta sum Σ e^{−α² x} and the small-x residual.
    Theta {
        #[arg(long)]
        x: f64,
        #[arg(long, default_value_t = 2)]
        terms: usize,
        #[arg(long)]
        ordinates: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// First COUNT ordinates of zeta zeros.
    Ordinates {
        #[arg(long)]
        count: usize,
    },
}

fn list(s: &str) -> Result<Vec<f64>, Error> {
    s.split(',')
        .map(|v| {
            v.trim()
                .parse::<f64>()
                .map_err(|e| Error::Parse { line: 0, message: format!("{v:?}: {e}") })
        })
        .collect()
}

fn rect(s: &str) -> Result<Rectangle, Error> {
    match list(s)?.as_slice() {
        &[a, b, c, d] => Rectangle::new(a, b, c, d),
        _ => Err(Error::Parse { line: 0, message: format!("rectangle needs four numbers, got {s:?}") }),
    }
}

fn resolution(s: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::Parse { line: 0, message: format!("resolution must look like 512x1024, got {s:?}") };
    let (a, b) = s.split_once('x').ok_or_else(bad)?;
    Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
}

fn sequence_from(path: &Option<PathBuf>) -> Result<RiemannSequenceCandidate, Error> {
    match path {
        Some(p) => load_ordinates(p),
        None => Ok(zeta_sequence()),
    }
}

fn io_err(e: io::Error) -> Error {
    Error::Io(e.to_string())
}

/// Runs one command; `Ok(false)` is a verdict failure.
fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool, Error> {
    let precision: Precision = cli.precision.into();
    match cli.command {
        Command::Construct { n, t } => {
            let f = construct_selfdual(n, t)?;
            let m = measure_from_function(&f, n)?;
            out.write_all(MeasureDocument::from_measure(&m).serialize().as_bytes()).map_err(io_err)?;
        }
        Command::ZetaM { head } => {
            let limit = head.parse::<Rational>().map_err(|e| Error::Parse { line: 0, message: e.to_string() })?;
            let f = build_zeta_m()?;
            out.write_all(CombinationDocument::new(&f, &limit).serialize().as_bytes()).map_err(io_err)?;
        }
        Command::Eval { s, function } => {
            let v = list(&s)?;
            let s = match v.as_slice() {
                [re] => Complex64::new(*re, 0.0),
                [re, im] => Complex64::new(*re, *im),
                _ => return Err(Error::Parse { line: 0, message: "s must be RE or RE,IM".into() }),
            };
            let value = function.build()?.eval(s)?;
            writeln!(out, "{{\"re\":{},\"im\":{}}}", format_f64(value.re), format_f64(value.im)).map_err(io_err)?;
        }
        Command::Sigma0 { tol, function } => {
            let default = if precision == Precision::Extended { 1e-25 } else { 1e-12 };
            let s = function.build()?.sigma0(tol.unwrap_or(default), precision)?;
            let digits = if precision == Precision::Extended { 20 } else { 16 };
            writeln!(out, "{}", s.to_decimal(digits)).map_err(io_err)?;
        }
        Command::Zeros { rect: r, tol, max_depth, function } => {
            let f = function.build()?;
            let scan = scan_zeros(&f, &rect(&r)?, tol, max_depth)?;
            out.write_all(ZeroDocument::new(&scan.zeros, &scan.poles).serialize().as_bytes()).map_err(io_err)?;
            writeln!(
                err,
                "{} zeros and {} pole(s) in {:?}, winding number {}",
                scan.zero_total(),
                scan.poles.len(),
                scan.rect,
                scan.winding
            )
            .map_err(io_err)?;
        }
        Command::Xray { rect: r, resolution: res, out: path, function } => {
            let (nx, ny) = resolution(&res)?;
            let svg = xray_svg(&function.build()?, &rect(&r)?, nx, ny)?;
            fs::write(&path, svg).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        }
        Command::Certify { zeros, c, x_grid, orders } => {
            let doc = ZeroDocument::load(&zeros)?;
            let seq = zeros_to_sequence(&doc.zeros(), &zeros.display().to_string())?;
            let c = match c {
                Some(c) => c,
                None => build_zeta_m()?.sigma0(1e-12, Precision::Double)?.to_f64() - 0.5,
            };
            let orders: Vec<usize> = list(&orders)?.iter().map(|&o| o as usize).collect();
            let report = certify(&seq, c, &list(&x_grid)?, &orders)?;
            let text = serde_json::to_string_pretty(&report).map_err(|e| Error::Io(e.to_string()))?;
            writeln!(out, "{text}").map_err(io_err)?;
            return Ok(report.structure_passes());
        }
        Command::VerifyAsymptotics { x_grid, terms, ordinates } => {
            let xs = list(&x_grid)?;
            let mut ok = true;
            writeln!(out, "order\tx\toracle-main\tscaled").map_err(io_err)?;
            for n in 0..=terms {
                let mut scaled = Vec::new();
                for &x in &xs {
                    let r = zeta_zero_sum_oracle(x)? - expansion_main(Complex64::new(x, 0.0), n)?.re;
                    scaled.push(r.abs() * x.powi(n as i32 + 1));
                    writeln!(out, "{n}\t{x}\t{r:e}\t{:e}", scaled.last().unwrap()).map_err(io_err)?;
                }
                if xs.len() >= 2 {
                    let sl = slope(
                        &xs.iter().map(|x| x.ln()).collect::<Vec<_>>(),
                        &scaled.iter().map(|v| v.ln()).collect::<Vec<_>>(),
                    );
                    let pass = sl.abs() <= 0.3;
                    ok &= pass;
                    writeln!(out, "# order {n}: log-log slope {sl:.3} ({})", if pass { "flat" } else { "trend" })
                        .map_err(io_err)?;
                }
            }
            let seq = sequence_from(&ordinates)?;
            writeln!(out, "x\tzero_sum\toracle\tdifference").map_err(io_err)?;
            for &x in &xs {
                let (z, o) = (zero_sum(&seq, x)?.re, zeta_zero_sum_oracle(x)?);
                ok &= (z - o).abs() <= 2e-3;
                writeln!(out, "{x}\t{z:.12}\t{o:.12}\t{:e}", z - o).map_err(io_err)?;
            }
            return Ok(ok);
        }
        Command::Theta { x, terms, ordinates, tol } => {
            let seq = sequence_from(&ordinates)?;
            let t = theta_sum(&seq, x, tol)?;
            let r = smallx_residual(&seq, x, terms, tol)?;
            writeln!(
                out,
                "{{\"x\":{},\"theta_re\":{},\"theta_im\":{},\"tail_bound\":{},\"terms\":{terms},\"smallx_residual\":{}}}",
                format_f64(x),
                format_f64(t.value.re),
                format_f64(t.value.im),
                format_f64(t.tail_bound),
                format_f64(r)
            )
            .map_err(io_err)?;
        }
        Command::Ordinates { count } => {
            out.write_all(serialize_ordinates(&zeta_ordinates(count)?).as_bytes()).map_err(io_err)?;
        }
    }
    Ok(true)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Ordering { .. } | Error::Io(_) | Error::Domain(_) | Error::Dimension(_) => 2,
        _ => 1,
    }
}

/// Parses `argv` (program name first) and runs the command, writing to the given streams.
/// Returns 0 on success, 1 on a failed verdict or computation, 2 on usage or input errors.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
