//! Command-line front-end.
//!
//! Exit codes: 0 for success or a positive verdict, 1 for a negative verdict
//! (conditions violated, not representable, counterexamples found), 2 for
//! invalid input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use histupdate::format::{
    parse_fixed_ranking, parse_general_ranking, parse_table, write_fixed_ranking, write_table,
};
use histupdate::history::{update_general, GeneralRanking, ObservationSequence};
use histupdate::lab::{builtin_counterexample, sweep, ConditionSet, SweepOptions};
use histupdate::logic::{parse_formula, render_model_set, ModelSet, Universe};
use histupdate::operator::{
    update_from_ranking, FixedRanking, OperatorTable, SequenceSpace, SetSequence,
};
use histupdate::postulates::{check_postulate_suite, epistemic_state_demo, find_km_u8_violation};
use histupdate::representation::{
    check_suggested_3d, check_theorem_2d, check_theorem_nd, find_representing_ranking,
    synthesize_ranking, CheckReport, Width, DEFAULT_ORACLE_BUDGET,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

const DEFAULT_POOL: [&str; 6] = ["p0", "p1", "!p0", "p0 | p1", "p0 <-> p1", "!p1"];

#[derive(Parser, Debug)]
#[command(
    name = "histupdate",
    version,
    about = "Iterated belief update by preferred histories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct UniverseArgs {
    /// Universe generated by this many atoms p0, p1, ...
    #[arg(long, conflicts_with = "universe")]
    atoms: Option<usize>,
    /// Abstract universe of this many points.
    #[arg(long)]
    universe: Option<usize>,
}

impl UniverseArgs {
    fn get(&self) -> Result<Option<Universe>> {
        Ok(match (self.atoms, self.universe) {
            (Some(k), _) => Some(Universe::with_atoms(k)?),
            (None, Some(m)) => Some(Universe::abstract_size(m)?),
            (None, None) => None,
        })
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Update by a fixed-length ranking: one observation per coordinate.
    Update {
        #[command(flatten)]
        universe: UniverseArgs,
        /// Ranking file, or `canonical` for the number-of-changes ranking.
        #[arg(long)]
        ranking: String,
        /// Observations: formulas, or model sets such as `{0,2}`.
        #[arg(required = true, allow_hyphen_values = true)]
        observations: Vec<String>,
    },
    /// Update by a ranking of variable-length histories.
    UpdateGeneral {
        #[command(flatten)]
        universe: UniverseArgs,
        /// Ranking file, or `canonical` for the (length, changes) ranking.
        #[arg(long)]
        ranking: String,
        /// Length bound for the canonical ranking [default: max(1, number of observations)].
        #[arg(long)]
        maxlen: Option<usize>,
        /// Observations: formulas, or model sets such as `{0,2}`. May be empty.
        #[arg(allow_hyphen_values = true)]
        observations: Vec<String>,
    },
    /// Check an operator table against a characterization.
    Check {
        #[arg(long, value_enum)]
        theorem: Theorem,
        table: PathBuf,
    },
    /// Print a ranking inducing the table, if the table admits one.
    Synthesize { table: PathBuf },
    /// Decide representability by exhaustive search over weak orders.
    Oracle {
        table: PathBuf,
        /// Largest |X|^n searched.
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        budget: usize,
    },
    /// Run the update-property suite against a ranking of histories.
    Postulates {
        #[command(flatten)]
        universe: UniverseArgs,
        /// Ranking file, `canonical`, or `random` (seeded, valid).
        #[arg(long, default_value = "random")]
        ranking: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Longest observation sequence checked.
        #[arg(long, default_value_t = 3)]
        maxlen: usize,
        /// Pool formula (repeatable) [default: p0, p1, !p0, p0 | p1, p0 <-> p1, !p1].
        #[arg(long = "pool", allow_hyphen_values = true)]
        pool: Vec<String>,
        /// Also search two-place rankings for a failure of union distribution.
        #[arg(long)]
        u8: bool,
        /// Also run the order-sensitivity demo.
        #[arg(long)]
        demo: bool,
    },
    /// Write the built-in three-place counterexample table.
    Counterexample {
        /// Output file [default: standard output].
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate conditions and representability over every table of a space.
    Sweep {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Number of points in the abstract universe.
        #[arg(long, default_value_t = 2)]
        universe: usize,
        #[arg(long, value_enum)]
        conditions: Conditions,
        /// Sample this many tables instead of enumerating all.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum number of counterexample tables kept.
        #[arg(long, default_value_t = 10)]
        cap: usize,
        /// Largest |X|^n the oracle searches.
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        oracle_budget: usize,
        /// Directory receiving one table file per kept counterexample.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Theorem {
    #[value(name = "2d-tight")]
    TwoDTight,
    #[value(name = "2d-wide")]
    TwoDWide,
    SuggestedTight,
    SuggestedWide,
    Nd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Conditions {
    SuggestedTight,
    SuggestedWide,
    Nd,
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_INPUT
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_table(path: &Path) -> Result<OperatorTable> {
    parse_table(&read(path)?).with_context(|| format!("parsing table {}", path.display()))
}

fn verdict_code(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn parse_observation(text: &str, universe: &Universe) -> Result<ModelSet> {
    let set = if text.trim_start().starts_with('{') {
        let set: ModelSet = text.parse()?;
        if !universe.contains(set) {
            bail!("{set} is outside a universe of {} models", universe.size());
        }
        set
    } else {
        if universe.atom_count().is_none() {
            bail!("formulas need an atom universe; give observations as model sets");
        }
        parse_formula(text, universe)?.models(universe)
    };
    if set.is_empty() {
        bail!("observation `{text}` is inconsistent");
    }
    Ok(set)
}

fn print_belief(out: &mut dyn Write, set: ModelSet, universe: &Universe) -> Result<()> {
    writeln!(out, "{set}")?;
    if let Some(f) = render_model_set(set, universe) {
        writeln!(out, "{f}")?;
    }
    Ok(())
}

fn print_report(out: &mut dyn Write, report: &CheckReport) -> Result<i32> {
    write!(out, "{report}")?;
    Ok(verdict_code(report.verdict()))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Update {
            universe,
            ranking,
            observations,
        } => {
            let ranking: FixedRanking = if ranking == "canonical" {
                let u = universe
                    .get()?
                    .context("canonical ranking needs --atoms or --universe")?;
                FixedRanking::canonical(u, observations.len())?
            } else {
                let r: FixedRanking = parse_fixed_ranking(&read(Path::new(&ranking))?)?;
                if let Some(u) = universe.get()? {
                    if u != r.universe() {
                        bail!(
                            "ranking universe {} differs from {}",
                            r.universe().header(),
                            u.header()
                        );
                    }
                }
                r
            };
            let u = ranking.universe();
            let sets = observations
                .iter()
                .map(|o| parse_observation(o, &u))
                .collect::<Result<Vec<_>>>()?;
            let result = update_from_ranking(&ranking, &SetSequence::new(sets)?)?;
            print_belief(out, result, &u)?;
            Ok(EXIT_OK)
        }
        Command::UpdateGeneral {
            universe,
            ranking,
            maxlen,
            observations,
        } => {
            let ranking: GeneralRanking = if ranking == "canonical" {
                let u = universe
                    .get()?
                    .context("canonical ranking needs --atoms or --universe")?;
                GeneralRanking::canonical(u, maxlen.unwrap_or(observations.len().max(1)))
            } else {
                let r: GeneralRanking = parse_general_ranking(&read(Path::new(&ranking))?)?;
                if let Some(v) = r.find_violation() {
                    bail!(
                        "ranking does not prefer sub-histories: {} is not ranked below {}",
                        v.sub,
                        v.sup
                    );
                }
                r
            };
            let u = ranking.universe();
            let sets = observations
                .iter()
                .map(|o| parse_observation(o, &u))
                .collect::<Result<Vec<_>>>()?;
            let result = update_general(&ObservationSequence::new(sets)?, &ranking)?;
            print_belief(out, result, &u)?;
            Ok(EXIT_OK)
        }
        Command::Check { theorem, table } => {
            let t = load_table(&table)?;
            let report = match theorem {
                Theorem::TwoDTight => check_theorem_2d(&t, Width::Tight)?,
                Theorem::TwoDWide => check_theorem_2d(&t, Width::Wide)?,
                Theorem::SuggestedTight => check_suggested_3d(&t, Width::Tight)?,
                Theorem::SuggestedWide => check_suggested_3d(&t, Width::Wide)?,
                Theorem::Nd => check_theorem_nd(&t),
            };
            print_report(out, &report)
        }
        Command::Synthesize { table } => {
            let t = load_table(&table)?;
            let report = check_theorem_nd(&t);
            if !report.verdict() {
                return print_report(out, &report);
            }
            let r = synthesize_ranking(&t)?;
            write!(out, "{}", write_fixed_ranking(&r))?;
            Ok(EXIT_OK)
        }
        Command::Oracle { table, budget } => {
            let t = load_table(&table)?;
            let found = find_representing_ranking(&t, budget)?;
            writeln!(
                out,
                "representable: {}",
                if found.is_some() { "yes" } else { "no" }
            )?;
            Ok(verdict_code(found.is_some()))
        }
        Command::Postulates {
            universe,
            ranking,
            seed,
            maxlen,
            pool,
            u8,
            demo,
        } => {
            let r: GeneralRanking = match ranking.as_str() {
                "canonical" | "random" => {
                    let u = universe.get()?.unwrap_or(Universe::with_atoms(2)?);
                    if ranking == "canonical" {
                        GeneralRanking::canonical(u, maxlen.max(1))
                    } else {
                        writeln!(out, "seed={seed}")?;
                        GeneralRanking::random_valid(u, maxlen.max(1), seed)?
                    }
                }
                path => parse_general_ranking(&read(Path::new(path))?)?,
            };
            let u = r.universe();
            let texts: Vec<String> = if pool.is_empty() {
                DEFAULT_POOL.iter().map(|s| s.to_string()).collect()
            } else {
                pool
            };
            let formulas = texts
                .iter()
                .map(|t| parse_formula(t, &u))
                .collect::<histupdate::Result<Vec<_>>>()?;
            let report = check_postulate_suite(&r, &formulas, maxlen)?;
            write!(out, "{report}")?;
            if u8 {
                let space = Universe::abstract_size(u.size().min(2))?;
                match find_km_u8_violation(space) {
                    Some(w) => writeln!(out, "union distribution fails: {w}")?,
                    None => writeln!(out, "union distribution holds for every two-place ranking")?,
                }
            }
            if demo {
                writeln!(out, "{}", epistemic_state_demo(Universe::with_atoms(2)?)?)?;
            }
            Ok(verdict_code(report.verdict()))
        }
        Command::Counterexample { output } => {
            let text = write_table(&builtin_counterexample());
            match output {
                Some(p) => {
                    fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?
                }
                None => write!(out, "{text}")?,
            }
            Ok(EXIT_OK)
        }
        Command::Sweep {
            n,
            universe,
            conditions,
            sample,
            seed,
            cap,
            oracle_budget,
            out_dir,
        } => {
            let space = SequenceSpace::new(Universe::abstract_size(universe)?, n)?;
            let conditions = match conditions {
                Conditions::SuggestedTight => ConditionSet::SuggestedTight,
                Conditions::SuggestedWide => ConditionSet::SuggestedWide,
                Conditions::Nd => ConditionSet::TheoremNd,
            };
            if sample.is_some() {
                writeln!(out, "seed={seed}")?;
            }
            let opts = SweepOptions {
                cap,
                sample: sample.map(|c| (c, seed)),
                oracle_budget,
                ..SweepOptions::default()
            };
            let res = sweep(&space, conditions, &opts)?;
            writeln!(out, "{}", res.summary())?;
            writeln!(
                out,
                "false-negatives={} reference={:?}",
                res.false_negatives, res.reference
            )?;
            if let Some(dir) = out_dir {
                fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
                for (i, t) in res.counterexample_tables.iter().enumerate() {
                    let p = dir.join(format!("counterexample-{i}.table"));
                    fs::write(&p, write_table(t))
                        .with_context(|| format!("writing {}", p.display()))?;
                }
            }
            Ok(verdict_code(
                res.counterexamples == 0 && res.false_negatives == 0,
            ))
        }
    }
}
