//! Command-line front end.
//!
//! Exit codes: 0 success, 1 failed verification or golden mismatch,
//! 2 malformed input, 3 input that violates a precondition.

pub mod config;
pub mod golden;
pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use schensted_core::{
    first_row_length, insert, lis_statistic, rs_forward, rs_forward_with_steps, rs_inverse,
    scramble, verify_bijection_bounded, verify_dimension_formula, verify_row_scheme_equivalence,
    verify_upward_recursion, all_partitions, BumpingScheme, Error, Permutation, Report, Tableau,
    TableauPair,
};

use config::{read_json, read_table, resolve_scheme, CliConfig, OutputMode, DEFAULT_N_MAX, HARD_CAP};

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Domain(String),
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Input(_) => 2,
            CliError::Domain(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Domain(m) | CliError::Failed(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidShape(_)
            | Error::InvalidTableau(_)
            | Error::InvalidPermutation(_)
            | Error::ZeroEntry => CliError::Input(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "schensted", version, about = "Robinson-Schensted correspondences from arbitrary bumping schemes")]
struct Cli {
    /// Bumping scheme: row, column, reversing, random:<seed> or table:<path>
    #[arg(long, global = true)]
    scheme: Option<String>,

    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Size bound for exhaustive subcommands (at most 8)
    #[arg(long, global = true, default_value_t = DEFAULT_N_MAX)]
    n_max: usize,

    /// Directory holding golden outputs
    #[arg(long, global = true)]
    golden_dir: Option<PathBuf>,

    /// Write outputs into the golden directory instead of comparing
    #[arg(long, global = true)]
    bless: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Insert an entry into a tableau, showing every step
    Insert { tableau: PathBuf, entry: u32 },
    /// Run the correspondence on a permutation
    Rs { permutation: String },
    /// Recover the permutation from a (P, Q) pair
    Invert { pair: PathBuf },
    /// Run the exhaustive checks
    Verify,
    /// CSV of statistics over all of S_n
    Stats { n: usize },
    /// Encode with one scheme and decode with another
    Scramble {
        permutation: String,
        #[arg(long)]
        encode: String,
        #[arg(long)]
        decode: String,
    },
    /// Inspect bumping schemes
    Schemes {
        #[command(subcommand)]
        action: SchemesAction,
    },
}

#[derive(Debug, Subcommand)]
enum SchemesAction {
    /// List the built-in schemes
    List,
    /// Print the injection of a scheme on every shape up to --n-max
    Describe { scheme: String },
    /// Check a scheme table file
    Validate { table: PathBuf },
}

/// Parses `args` and runs the subcommand, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}

fn execute(cli: Cli) -> Result<String, CliError> {
    if cli.n_max > HARD_CAP {
        return Err(CliError::Input(format!("--n-max {} exceeds the cap {HARD_CAP}", cli.n_max)));
    }
    if cli.bless && cli.golden_dir.is_none() {
        return Err(CliError::Input("--bless requires --golden-dir".into()));
    }
    let config = CliConfig {
        scheme: cli.scheme,
        output: if cli.json { OutputMode::Json } else { OutputMode::Text },
        n_max: cli.n_max,
        golden_dir: cli.golden_dir,
        bless: cli.bless,
    };
    let (output, golden_key) = match cli.command {
        Command::Insert { tableau, entry } => {
            let text = cmd_insert(&config, &tableau, entry)?;
            let key = vec!["insert".to_string(), config.scheme_spec().into(), file_stem(&tableau), entry.to_string()];
            (text, Some(key))
        }
        Command::Rs { permutation } => {
            let text = cmd_rs(&config, &permutation)?;
            (text, Some(vec!["rs".into(), config.scheme_spec().into(), permutation]))
        }
        Command::Invert { pair } => {
            let text = cmd_invert(&config, &pair)?;
            (text, Some(vec!["invert".into(), config.scheme_spec().into(), file_stem(&pair)]))
        }
        Command::Verify => (cmd_verify(&config)?, None),
        Command::Stats { n } => {
            let text = cmd_stats(&config, n)?;
            (text, Some(vec!["stats".into(), config.scheme_spec().into(), n.to_string()]))
        }
        Command::Scramble { permutation, encode, decode } => {
            let text = cmd_scramble(&config, &permutation, &encode, &decode)?;
            (text, Some(vec!["scramble".into(), encode, decode, permutation]))
        }
        Command::Schemes { action } => (cmd_schemes(&config, action)?, None),
    };
    if let (Some(dir), Some(key)) = (&config.golden_dir, golden_key) {
        let parts: Vec<&str> = key.iter().map(String::as_str).collect();
        let name = golden::file_name(&parts, config.output == OutputMode::Json);
        golden::check_or_bless(dir, &name, &output, config.bless)?;
    }
    Ok(output)
}

fn file_stem(path: &std::path::Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn cmd_insert(config: &CliConfig, path: &std::path::Path, entry: u32) -> Result<String, CliError> {
    let tableau: Tableau = read_json(path)?;
    let scheme = config.scheme()?;
    let result = insert(&scheme, &tableau, entry)?;
    Ok(match config.output {
        OutputMode::Json => to_json(&result.trace),
        OutputMode::Text => render::trace(&scheme.name(), &result.trace),
    })
}

fn cmd_rs(config: &CliConfig, word: &str) -> Result<String, CliError> {
    let perm: Permutation = word.parse()?;
    let scheme = config.scheme()?;
    let (pair, history) = rs_forward_with_steps(&scheme, &perm)?;
    Ok(match config.output {
        OutputMode::Json => to_json(&pair),
        OutputMode::Text => render::correspondence(&scheme.name(), &perm.to_string(), &history, &pair),
    })
}

fn cmd_invert(config: &CliConfig, path: &std::path::Path) -> Result<String, CliError> {
    let pair: TableauPair = read_json(path)?;
    let scheme = config.scheme()?;
    let perm = rs_inverse(&scheme, &pair)?;
    Ok(match config.output {
        OutputMode::Json => to_json(&serde_json::json!({ "permutation": perm.to_string() })),
        OutputMode::Text => format!("{perm}\n"),
    })
}

fn cmd_verify(config: &CliConfig) -> Result<String, CliError> {
    let specs: Vec<String> = match &config.scheme {
        Some(spec) => vec![spec.clone()],
        None => ["row", "column", "reversing", "random:1"].map(String::from).to_vec(),
    };
    let schemes = specs.iter().map(|s| resolve_scheme(s)).collect::<Result<Vec<_>, _>>()?;

    let n = config.n_max;
    let mut reports = vec![
        verify_upward_recursion(n),
        verify_dimension_formula(n),
        verify_row_scheme_equivalence(n),
    ];
    for scheme in &schemes {
        reports.push(bijection_report(scheme.as_ref(), n));
    }

    let text = match config.output {
        OutputMode::Json => to_json(&reports),
        OutputMode::Text => {
            let width = reports.iter().map(|r| r.name.chars().count()).max().unwrap_or(0);
            let mut s = String::new();
            for r in &reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                s.push_str(&format!("{status}  {:<width$}  {:>8} cases\n", r.name, r.checked));
                for v in r.violations.iter().take(5) {
                    s.push_str(&format!("      {v}\n"));
                }
            }
            s
        }
    };
    if reports.iter().all(Report::passed) {
        Ok(text)
    } else {
        Err(CliError::Failed(format!("verification failed\n{text}")))
    }
}

fn bijection_report(scheme: &dyn BumpingScheme, n: usize) -> Report {
    verify_bijection_bounded(scheme, n, HARD_CAP).unwrap_or_else(|e| {
        let mut r = Report::new(format!("bijection for `{}`, n = {n}", scheme.name()));
        r.violations.push(e.to_string());
        r
    })
}

fn cmd_stats(config: &CliConfig, n: usize) -> Result<String, CliError> {
    if !(1..=HARD_CAP).contains(&n) {
        return Err(CliError::Input(format!("n must be between 1 and {HARD_CAP}, got {n}")));
    }
    let scheme = config.scheme()?;
    let mut writer = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Domain(e.to_string());
    writer
        .write_record(["permutation", "shape", "first_row_length", "lis", "p_equals_q"])
        .map_err(csv_err)?;
    for perm in Permutation::all(n) {
        let pair = rs_forward(&scheme, &perm)?;
        let first = first_row_length(&scheme, &perm)?;
        writer
            .write_record([
                perm.to_string(),
                pair.shape().to_string(),
                first.to_string(),
                lis_statistic(&perm).to_string(),
                (pair.p == pair.q).to_string(),
            ])
            .map_err(csv_err)?;
    }
    let bytes = writer.into_inner().map_err(|e| CliError::Domain(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn cmd_scramble(config: &CliConfig, word: &str, encode: &str, decode: &str) -> Result<String, CliError> {
    let perm: Permutation = word.parse()?;
    let encode = resolve_scheme(encode)?;
    let decode = resolve_scheme(decode)?;
    let out = scramble(&perm, &encode, &decode)?;
    Ok(match config.output {
        OutputMode::Json => to_json(&serde_json::json!({ "permutation": out.to_string() })),
        OutputMode::Text => format!("{out}\n"),
    })
}

fn cmd_schemes(config: &CliConfig, action: SchemesAction) -> Result<String, CliError> {
    match action {
        SchemesAction::List => Ok(concat!(
            "row          removable square -> addible square one row higher; lone square ends row 1\n",
            "column       removable square -> addible square one column right; lone square tops column 1\n",
            "reversing    k-th lowest removable -> k-th highest addible; lone square ends row 1\n",
            "random:<n>   pseudorandom injection per shape, fixed by the seed\n",
            "table:<path> explicit injections read from a JSON table\n",
        )
        .to_string()),
        SchemesAction::Describe { scheme } => {
            let resolved = resolve_scheme(&scheme)?;
            match config.output {
                OutputMode::Json => {
                    let table = schensted_core::SchemeTable::from_scheme(&resolved, config.n_max)?;
                    Ok(to_json(&table))
                }
                OutputMode::Text => {
                    let mut s = format!("scheme: {}\n", resolved.name());
                    for n in 0..=config.n_max {
                        for shape in all_partitions(n) {
                            let image = resolved.injection(&shape)?;
                            let maps: Vec<String> = shape
                                .removable_squares()
                                .iter()
                                .zip(&image)
                                .map(|(r, a)| format!("{r}->{a}"))
                                .collect();
                            let lone = resolved.lone_square(&shape)?;
                            s.push_str(&format!("({shape}): {} lone {lone}\n", maps.join(" ")).replace(":  lone", ": lone"));
                        }
                    }
                    Ok(s)
                }
            }
        }
        SchemesAction::Validate { table } => {
            let parsed = read_table(&table)?;
            parsed.validate()?;
            Ok(format!("valid scheme table (max_size {}, {} shapes)\n", parsed.max_size, parsed.shapes.len()))
        }
    }
}
