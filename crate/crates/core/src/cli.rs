//! The `zigzag` command-line front end. Every command produces a [`Table`]
//! written as CSV or as a JSON array of objects with the same field names.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};

use crate::characters::{evaluate, rank, OrientedPaintbox, RankedFrequencies};
use crate::composition::Composition;
use crate::error::Error;
use crate::graph::{dimension, martin_kernel};
use crate::rational::{self, Rational};
use crate::sampler;
use crate::sym::{h_values, p_values};

pub const MAX_ENUMERATE: usize = 16;
pub const MAX_KERNEL: usize = 14;
pub const MAX_EVAL: usize = 16;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_BOUND: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "zigzag", version, about = "Zigzag diagrams, paintbox characters and random arrangements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Paintbox file: one `left right up|down` line per interval.
    #[arg(long)]
    pub paintbox: Option<PathBuf>,
    /// The empty paintbox (uniform random permutations).
    #[arg(long)]
    pub uniform: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List all compositions of n with dimension, word and conjugate.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Exact probability function of a paintbox on level n.
    Eval {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        n: usize,
    },
    /// Character values on h_n and p_n for given frequencies.
    Sym {
        /// Up-interval lengths, comma separated.
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<String>,
        /// Down-interval lengths, comma separated.
        #[arg(long, value_delimiter = ',')]
        beta: Vec<String>,
        /// Take the frequencies from a paintbox file instead.
        #[arg(long, conflicts_with_all = ["alpha", "beta"])]
        paintbox: Option<PathBuf>,
        #[arg(long, default_value_t = crate::sym::DEFAULT_ORDER)]
        n: usize,
    },
    /// Empirical shape frequencies against the exact law.
    Sample {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Distance between the rescaled shape and the paintbox along one arrangement.
    Lln {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_delimiter = ',', required = true)]
        checkpoints: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Empirical heights of one arrangement.
    Heights {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Urn sampler for the bi-interval with a Beta split point.
    Polya {
        #[arg(long)]
        theta1: String,
        #[arg(long)]
        theta2: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Martin kernel K(mu, lambda_n) along a sampled path.
    Kernel {
        #[command(flatten)]
        source: Source,
        /// Composition, e.g. `2` or `1,2`.
        #[arg(long)]
        mu: String,
        #[arg(long, value_delimiter = ',', required = true)]
        checkpoints: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, message: message.into() }
    }

    fn input(message: impl Into<String>) -> Self {
        CliError { code: EXIT_INPUT, message: message.into() }
    }

    fn bound(flag: &str, size: usize, bound: usize) -> Self {
        CliError { code: EXIT_BOUND, message: format!("{flag} = {size} exceeds the supported bound {bound}") }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge { .. } => CliError { code: EXIT_BOUND, message: e.to_string() },
            _ => CliError::usage(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u64),
    Text(String),
    Float(f64),
}

impl Cell {
    fn exact(r: &Rational) -> Cell {
        Cell::Text(rational::format(r))
    }

    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Float(x) => rational::format_decimal(*x),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Int(v) => (*v).into(),
            Cell::Text(s) => s.clone().into(),
            Cell::Float(x) => {
                let s = rational::format_decimal(*x);
                s.parse::<serde_json::Number>().map(serde_json::Value::Number).unwrap_or_else(|_| s.into())
            }
        }
    }
}

/// Rows with a fixed header.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(header: Vec<&'static str>) -> Self {
        Table { header, rows: Vec::new() }
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: serde_json::Map<String, serde_json::Value> =
                    self.header.iter().zip(row).map(|(h, c)| (h.to_string(), c.json())).collect();
                serde_json::Value::Object(obj)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&rows).expect("serialisable");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

fn load_paintbox(path: &Path) -> Result<OrientedPaintbox, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    OrientedPaintbox::parse(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn resolve(source: &Source) -> Result<OrientedPaintbox, CliError> {
    match (&source.paintbox, source.uniform) {
        (Some(path), false) => load_paintbox(path),
        (None, true) => Ok(OrientedPaintbox::empty()),
        _ => Err(CliError::usage("exactly one of --paintbox and --uniform is required")),
    }
}

fn parse_rational(flag: &str, s: &str) -> Result<Rational, CliError> {
    rational::parse(s).map_err(|e| CliError::usage(format!("--{flag}: {e}")))
}

fn require_positive(flag: &str, n: usize) -> Result<(), CliError> {
    if n == 0 {
        Err(CliError::usage(format!("--{flag} must be at least 1")))
    } else {
        Ok(())
    }
}

fn dim_rational(lambda: &Composition) -> Rational {
    rational::from_biguint(&dimension(lambda))
}

pub fn cmd_enumerate(n: usize) -> Result<Table, CliError> {
    require_positive("n", n)?;
    if n > MAX_ENUMERATE {
        return Err(CliError::bound("--n", n, MAX_ENUMERATE));
    }
    let mut t = Table::new(vec!["composition", "dimension", "word", "conjugate"]);
    for lambda in Composition::all_of_size(n) {
        t.rows.push(vec![
            Cell::Text(lambda.to_string()),
            Cell::Text(dimension(&lambda).to_string()),
            Cell::Text(lambda.to_word().to_string()),
            Cell::Text(lambda.conjugate().to_string()),
        ]);
    }
    Ok(t)
}

pub fn cmd_eval(pb: &OrientedPaintbox, n: usize) -> Result<Table, CliError> {
    if n > MAX_EVAL {
        return Err(CliError::bound("--n", n, MAX_EVAL));
    }
    let mut t = Table::new(vec!["composition", "dimension", "p", "dp", "p_decimal", "dp_decimal"]);
    for lambda in Composition::all_of_size(n) {
        let p = evaluate(pb, &lambda);
        let dp = dim_rational(&lambda) * &p;
        t.rows.push(vec![
            Cell::Text(lambda.to_string()),
            Cell::Text(dimension(&lambda).to_string()),
            Cell::exact(&p),
            Cell::exact(&dp),
            Cell::Float(rational::to_f64(&p)),
            Cell::Float(rational::to_f64(&dp)),
        ]);
    }
    Ok(t)
}

pub fn cmd_sym(freq: &RankedFrequencies, n: usize) -> Table {
    let h = h_values(freq, n);
    let p = p_values(freq, n);
    let mut t = Table::new(vec!["n", "h", "p", "h_decimal", "p_decimal"]);
    for k in 0..=n {
        t.rows.push(vec![
            Cell::Int(k as u64),
            Cell::exact(&h[k]),
            Cell::exact(&p[k]),
            Cell::Float(rational::to_f64(&h[k])),
            Cell::Float(rational::to_f64(&p[k])),
        ]);
    }
    t
}

/// `(shape, dim, empirical, exact, exact_decimal, stderr)` where `exact` is
/// the probability of the shape and `stderr` its binomial standard error.
fn pmf_table(counts: &sampler::EmpiricalPmf, n: usize, exact: impl Fn(&Composition) -> Rational) -> Table {
    let mut t = Table::new(vec!["shape", "dim", "empirical", "exact", "exact_decimal", "stderr"]);
    for lambda in Composition::all_of_size(n) {
        let q = exact(&lambda);
        let qf = rational::to_f64(&q);
        t.rows.push(vec![
            Cell::Text(lambda.to_string()),
            Cell::Text(dimension(&lambda).to_string()),
            Cell::Float(counts.frequency(&lambda)),
            Cell::exact(&q),
            Cell::Float(qf),
            Cell::Float((qf * (1.0 - qf) / counts.trials as f64).sqrt()),
        ]);
    }
    t
}

pub fn cmd_sample(pb: &OrientedPaintbox, n: usize, trials: u64, seed: u64) -> Result<Table, CliError> {
    require_positive("n", n)?;
    if n > MAX_EVAL {
        return Err(CliError::bound("--n", n, MAX_EVAL));
    }
    if trials == 0 {
        return Err(CliError::usage("--trials must be at least 1"));
    }
    let counts = sampler::empirical_pmf(pb, n, trials, seed)?;
    Ok(pmf_table(&counts, n, |l| dim_rational(l) * evaluate(pb, l)))
}

pub fn cmd_lln(pb: &OrientedPaintbox, checkpoints: &[usize], seed: u64) -> Result<Table, CliError> {
    if checkpoints.iter().any(|&n| n < 2) {
        return Err(CliError::usage("--checkpoints must all be at least 2"));
    }
    let mut t = Table::new(vec!["n", "distance", "distance_decimal"]);
    for (n, d) in sampler::lln_trajectory(pb, checkpoints, seed)? {
        t.rows.push(vec![Cell::Int(n as u64), Cell::exact(&d), Cell::Float(rational::to_f64(&d))]);
    }
    Ok(t)
}

pub fn cmd_heights(pb: &OrientedPaintbox, n: usize, seed: u64) -> Result<Table, CliError> {
    require_positive("n", n)?;
    let mut t = Table::new(vec!["j", "phi_hat"]);
    for (j, h) in sampler::heights(pb, n, seed).into_iter().enumerate() {
        t.rows.push(vec![Cell::Int(j as u64 + 1), Cell::Float(h)]);
    }
    Ok(t)
}

/// `C(n-1, l) B(θ₁+l, θ₂+k) / B(θ₁, θ₂)` for the hook `(1^l, k+1)`, zero off hooks.
pub fn beta_hook_probability(theta1: &Rational, theta2: &Rational, lambda: &Composition) -> Rational {
    let parts = lambda.parts();
    let Some((&last, init)) = parts.split_last() else { return Rational::one() };
    if init.iter().any(|&p| p != 1) {
        return Rational::zero();
    }
    let (l, k) = (init.len(), last as usize - 1);
    let rising = |x: &Rational, m: usize| (0..m).fold(Rational::one(), |acc, i| acc * (x + rational::int(i as i64)));
    let per_permutation = rising(theta1, l) * rising(theta2, k) / rising(&(theta1 + theta2), l + k);
    rational::from_biguint(&rational::binomial((l + k) as u64, l as u64)) * per_permutation
}

pub fn cmd_polya(theta1: &Rational, theta2: &Rational, n: usize, trials: u64, seed: u64) -> Result<Table, CliError> {
    require_positive("n", n)?;
    if n > MAX_EVAL {
        return Err(CliError::bound("--n", n, MAX_EVAL));
    }
    if theta1 <= &Rational::zero() || theta2 <= &Rational::zero() {
        return Err(CliError::usage("--theta1 and --theta2 must be positive"));
    }
    if trials == 0 {
        return Err(CliError::usage("--trials must be at least 1"));
    }
    let counts = sampler::polya_pmf(rational::to_f64(theta1), rational::to_f64(theta2), n, trials, seed)?;
    Ok(pmf_table(&counts, n, |l| beta_hook_probability(theta1, theta2, l)))
}

pub fn cmd_kernel(pb: &OrientedPaintbox, mu: &Composition, checkpoints: &[usize], seed: u64) -> Result<Table, CliError> {
    if let Some(&n) = checkpoints.iter().find(|&&n| n > MAX_KERNEL) {
        return Err(CliError::bound("--checkpoints", n, MAX_KERNEL));
    }
    if let Some(&n) = checkpoints.iter().find(|&&n| n < mu.size()) {
        return Err(CliError::usage(format!("--checkpoints: {n} is smaller than |mu| = {}", mu.size())));
    }
    let max = checkpoints.iter().copied().max().unwrap_or(0);
    let path = sampler::sample_arrangement(pb, max, seed);
    let p_mu = evaluate(pb, mu);
    let mut t = Table::new(vec!["n", "lambda", "kernel", "kernel_decimal", "p", "p_decimal"]);
    for &n in checkpoints {
        let lambda = path.permutation(n)?.zigzag_shape();
        let k = martin_kernel(mu, &lambda)?;
        t.rows.push(vec![
            Cell::Int(n as u64),
            Cell::Text(lambda.to_string()),
            Cell::exact(&k),
            Cell::Float(rational::to_f64(&k)),
            Cell::exact(&p_mu),
            Cell::Float(rational::to_f64(&p_mu)),
        ]);
    }
    Ok(t)
}

/// Runs a parsed command and returns its table.
pub fn execute(command: &Command) -> Result<Table, CliError> {
    match command {
        Command::Enumerate { n } => cmd_enumerate(*n),
        Command::Eval { source, n } => cmd_eval(&resolve(source)?, *n),
        Command::Sym { alpha, beta, paintbox, n } => {
            let freq = match paintbox {
                Some(path) => rank(&load_paintbox(path)?),
                None => {
                    let a = alpha.iter().map(|s| parse_rational("alpha", s)).collect::<Result<_, _>>()?;
                    let b = beta.iter().map(|s| parse_rational("beta", s)).collect::<Result<_, _>>()?;
                    RankedFrequencies::new(a, b).map_err(|e| CliError::usage(format!("--alpha/--beta: {e}")))?
                }
            };
            Ok(cmd_sym(&freq, *n))
        }
        Command::Sample { source, n, trials, seed } => cmd_sample(&resolve(source)?, *n, *trials, *seed),
        Command::Lln { source, checkpoints, seed } => cmd_lln(&resolve(source)?, checkpoints, *seed),
        Command::Heights { source, n, seed } => cmd_heights(&resolve(source)?, *n, *seed),
        Command::Polya { theta1, theta2, n, trials, seed } => {
            cmd_polya(&parse_rational("theta1", theta1)?, &parse_rational("theta2", theta2)?, *n, *trials, *seed)
        }
        Command::Kernel { source, mu, checkpoints, seed } => {
            let mu: Composition = mu.parse().map_err(|e: Error| CliError::usage(format!("--mu: {e}")))?;
            cmd_kernel(&resolve(source)?, &mu, checkpoints, *seed)
        }
    }
}

/// Parses `args`, runs the command and writes its output; returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { stdout.write_all(rendered.as_bytes()) } else { stderr.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let result = execute(&cli.command).and_then(|table| {
        let text = table.render(cli.output.format);
        match &cli.output.out {
            Some(path) => fs::write(path, text).map_err(|e| CliError::input(format!("{}: {e}", path.display()))),
            None => stdout.write_all(text.as_bytes()).map_err(|e| CliError::input(e.to_string())),
        }
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}
