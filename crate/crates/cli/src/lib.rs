//! `catkit`: counting, enumeration, bijections, verification sweeps and game
//! tables from the command line.
//!
//! [`run`] does all the work and returns the exit code with captured
//! output, so the binary is a thin wrapper and tests can drive it directly.

pub mod error;
pub mod guard;
pub mod maps;
pub mod output;
pub mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};

use catkit_core::cardgame::{
    conjecture_r, enumerate_decks, expected_score, max_prefix_score, optimal_threshold, p_exact_count,
};
use catkit_core::dyck::enumerate_d;
use catkit_core::exactnum::{class_count, to_decimal};
use catkit_core::patterns::{enumerate_family, family, FamilyId};
use catkit_core::tableaux::enumerate_syt;

use error::CliError;
use guard::{Guards, Resource};
use maps::MapParams;
use output::{Cell, Format, Table};
use verify::{Sweep, CONJECTURE_ASSERTED_UP_TO};

/// Sweep bound used by `verify` when `--max-n` is absent.
pub const DEFAULT_VERIFY_MAX_N: usize = 8;

const DECIMAL_DIGITS: usize = 6;

#[derive(Debug, Parser)]
#[command(
    name = "catkit",
    version,
    about = "Exact Dyck path, tableau, pattern and card game enumeration"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a closed-form count.
    Count(CountArgs),
    /// List every object of a class in canonical order.
    Enumerate(EnumerateArgs),
    /// Apply a named bijection (or its inverse) to one input.
    Map(MapArgs),
    /// Run exhaustive invariant sweeps: all, counts, bijections or game.
    Verify(VerifyArgs),
    /// Threshold strategy table for the red/black card game.
    Game(GameArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CountObject {
    Dyck,
    Syt,
    #[value(alias = "pattern-family")]
    Pattern,
    #[value(alias = "game-score")]
    Game,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EnumerateObject {
    Dyck,
    Syt,
    #[value(alias = "pattern-family")]
    Pattern,
    Deck,
}

#[derive(Debug, Args, Default)]
struct Params {
    /// Row excess of a tableau, or k+p for a path class.
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    /// Semilength, permutation length or number of red cards.
    #[arg(long)]
    n: Option<usize>,
    /// Game threshold or exact maximum score.
    #[arg(long)]
    r: Option<usize>,
    /// Permutation family T7..T11.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(value_enum)]
    object: CountObject,
    #[command(flatten)]
    params: Params,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(value_enum)]
    object: EnumerateObject,
    #[command(flatten)]
    params: Params,
    /// Raise or lower the resource guard for this run.
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Debug, Args)]
struct MapArgs {
    /// syt-dyck, zeta, pad, syt-class, theta, tau or walk-dyck.
    bijection: String,
    input: String,
    /// Apply the inverse map.
    #[arg(long)]
    inverse: bool,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(default_value = "all")]
    suite: String,
    /// Largest size swept; each check is further capped by its resource guard.
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GameArgs {
    /// Expected score of every threshold for one deck size.
    #[arg(long)]
    n: Option<usize>,
    /// Optimal and conjectured thresholds for every deck size up to N.
    #[arg(long)]
    scan: Option<usize>,
}

/// Exit code plus everything the command printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one invocation, reading the guard override from the environment.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_env(args, std::env::var(guard::ENV_OVERRIDE).ok())
}

/// Like [`run`] with an explicit value for the guard override variable.
pub fn run_with_env<I, T>(args: I, guard_env: Option<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let result = Guards::from_env(guard_env).and_then(|guards| dispatch(&cli, guards));
    match result {
        Ok((table, failure)) => {
            let stdout = table.render(cli.format);
            match failure {
                None => Outcome {
                    code: 0,
                    stdout,
                    stderr: String::new(),
                },
                Some(e) => Outcome {
                    code: e.exit_code(),
                    stdout,
                    stderr: format!("error: {e}\n"),
                },
            }
        }
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// The table to print, and a failure that should still print it.
type Rendered = (Table, Option<CliError>);

fn dispatch(cli: &Cli, guards: Guards) -> Result<Rendered, CliError> {
    match &cli.command {
        Command::Count(a) => cmd_count(a.object, &a.params).map(|t| (t, None)),
        Command::Enumerate(a) => cmd_enumerate(a.object, &a.params, guards.with_flag(a.max_n)).map(|t| (t, None)),
        Command::Map(a) => cmd_map(a).map(|t| (t, None)),
        Command::Verify(a) => cmd_verify(a, guards),
        Command::Game(a) => cmd_game(a),
    }
}

fn need(value: Option<usize>, flag: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::usage(format!("missing --{flag}")))
}

fn parse_family(params: &Params) -> Result<FamilyId, CliError> {
    let name = params
        .family
        .as_deref()
        .ok_or_else(|| CliError::usage("missing --family"))?;
    name.parse().map_err(CliError::usage)
}

/// `--d`, or `--k` and `--p` (which must agree with `--d` if both appear).
fn class_parameter(params: &Params) -> Result<usize, CliError> {
    let from_kp = match (params.k, params.p) {
        (Some(k), Some(p)) => Some(k + p),
        (None, None) => None,
        _ => return Err(CliError::usage("--k and --p go together")),
    };
    match (params.d, from_kp) {
        (Some(d), Some(s)) if d != s => Err(CliError::usage(format!("--d {d} disagrees with --k + --p = {s}"))),
        (d, s) => Ok(d.or(s).unwrap_or(0)),
    }
}

fn cmd_count(object: CountObject, params: &Params) -> Result<Table, CliError> {
    let n = need(params.n, "n")?;
    let value = match object {
        CountObject::Dyck | CountObject::Syt => class_count(class_parameter(params)? as u64, n as u64),
        CountObject::Pattern => family(parse_family(params)?).closed_count(n as u64),
        CountObject::Game => p_exact_count(need(params.r, "r")?, n).map_err(CliError::usage)?,
    };
    Ok(Table::single("count", value))
}

fn cmd_enumerate(object: EnumerateObject, params: &Params, guards: Guards) -> Result<Table, CliError> {
    let n = need(params.n, "n")?;
    match object {
        EnumerateObject::Dyck => {
            guards.check(Resource::Paths, n)?;
            let (k, p) = (params.k.unwrap_or(0), params.p.unwrap_or(0));
            let mut t = Table::new(&["path"]);
            for path in enumerate_d(k, p, n) {
                t.push(vec![path.to_string().into()]);
            }
            Ok(t)
        }
        EnumerateObject::Syt => {
            guards.check(Resource::Paths, n)?;
            let d = params.d.unwrap_or(0);
            let mut t = Table::new(&["tableau"]);
            for tab in enumerate_syt(d, n).map_err(CliError::usage)? {
                t.push(vec![tab.to_string().into()]);
            }
            Ok(t)
        }
        EnumerateObject::Pattern => {
            let id = parse_family(params)?;
            guards.check(Resource::Permutations, n)?;
            let mut t = Table::new(&["permutation"]);
            for perm in enumerate_family(n, id) {
                t.push(vec![perm.to_string().into()]);
            }
            Ok(t)
        }
        EnumerateObject::Deck => {
            guards.check(Resource::Decks, n)?;
            let mut t = Table::new(&["deck", "max_score"]);
            for deck in enumerate_decks(n) {
                let score = max_prefix_score(&deck);
                if params.r.is_none_or(|r| r == score) {
                    t.push(vec![deck.to_string().into(), score.into()]);
                }
            }
            Ok(t)
        }
    }
}

fn cmd_map(a: &MapArgs) -> Result<Table, CliError> {
    let strategy = maps::lookup(&a.bijection)?;
    let params = MapParams {
        d: a.d,
        k: a.k,
        p: a.p,
        r: a.r,
    };
    let image = strategy.apply(&a.input, &params, a.inverse)?;
    Ok(Table::single("image", image))
}

fn cmd_verify(a: &VerifyArgs, guards: Guards) -> Result<Rendered, CliError> {
    let sweep = Sweep {
        max_n: a.max_n.unwrap_or(DEFAULT_VERIFY_MAX_N),
        guards,
    };
    let report = verify::run_suites(&a.suite, &sweep).ok_or_else(|| {
        let known: Vec<&str> = verify::suites().iter().map(|s| s.name()).collect();
        CliError::usage(format!("unknown suite {:?}; known: all, {}", a.suite, known.join(", ")))
    })?;
    log::info!(
        "verify {} (max-n {}) finished in {:.3}s",
        report.suite,
        report.max_n,
        report.wall_time.as_secs_f64()
    );
    let failure = report
        .first_counterexample()
        .map(|(check, ce)| CliError::VerifyFailed(format!("{}/{}: {ce}", check.suite, check.check)));
    Ok((report.to_table(), failure))
}

fn cmd_game(a: &GameArgs) -> Result<Rendered, CliError> {
    if let Some(n) = a.n {
        if n == 0 {
            return Err(CliError::usage("--n must be at least 1"));
        }
        let best = optimal_threshold(n);
        let guess = conjecture_r(n);
        let mut t = Table::new(&[
            "n",
            "r",
            "expected",
            "decimal",
            "optimal",
            "optimal_r",
            "conjecture_r",
            "agree",
        ]);
        for r in 1..=n {
            let e = expected_score(r, n).map_err(CliError::usage)?;
            t.push(vec![
                n.into(),
                r.into(),
                Cell::Text(e.to_string()),
                to_decimal(&e, DECIMAL_DIGITS).into(),
                best.maximizers.contains(&r).into(),
                best.r.into(),
                guess.into(),
                (best.r == guess).into(),
            ]);
        }
        return Ok((t, None));
    }
    let max = a.scan.expect("clap enforces one of --n/--scan");
    if max == 0 {
        return Err(CliError::usage("--scan must be at least 1"));
    }
    let mut t = Table::new(&[
        "n",
        "optimal_r",
        "expected",
        "decimal",
        "conjecture_r",
        "agree",
        "tied",
        "checked",
    ]);
    let mut failure = None;
    for n in 1..=max {
        let best = optimal_threshold(n);
        let guess = conjecture_r(n);
        let asserted = n <= CONJECTURE_ASSERTED_UP_TO;
        if asserted && best.r != guess && failure.is_none() {
            failure = Some(CliError::VerifyFailed(format!(
                "n={n}: optimal threshold {} but conjecture gives {guess}",
                best.r
            )));
        }
        let tied: Option<String> = best.is_tie().then(|| {
            best.maximizers
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        });
        t.push(vec![
            n.into(),
            best.r.into(),
            Cell::Text(best.expected.to_string()),
            to_decimal(&best.expected, DECIMAL_DIGITS).into(),
            guess.into(),
            (best.r == guess).into(),
            tied.into(),
            if asserted { "asserted" } else { "reported" }.into(),
        ]);
    }
    Ok((t, failure))
}
