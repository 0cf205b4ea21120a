//! The `settle` command line.
//!
//! [`run`] takes the argument list and returns the exit status with the
//! text meant for stdout and stderr, so the whole front end can be driven
//! from tests. Exit status 0 means success, 1 a failed verification (an
//! unmet `--expect`, a golden mismatch, an oracle disagreement) and 2 a
//! usage, input or limit error.

use std::collections::BTreeMap;
use std::fs;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{audit_structural_lemmas, BoundsReport};
use crate::error::{Error, Result};
use crate::grid::{BoundaryMode, Configuration, Coord, Dims};
use crate::io::{parse_grid, render, to_grid_file, to_json_value, RenderStyle};
use crate::modelgen::{export_efficient, export_inefficient};
use crate::patterns::{brick_comb_best, generate_pattern, pattern_occupancy, PatternKind};
use crate::solvers::{self, brute_force, Limits, Objective, SolveRequest};

const SCHEMA: &str = "1";

#[derive(Parser, Debug)]
#[command(name = "settle", version, about = "Sunlit house settlements on a grid")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a pattern configuration.
    Gen(GenArgs),
    /// Check a grid file for permissibility and maximality.
    Check(CheckArgs),
    /// Solve for the exact extremal occupancy.
    Solve(SolveArgs),
    /// Print the analytic bounds for one grid size.
    Bounds(BoundsArgs),
    /// Tabulate exact optima over ranges of sizes.
    Table(TableArgs),
    /// Write an integer program in LP format.
    ExportIp(ExportArgs),
    /// Compare the dynamic program with exhaustive enumeration.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ObjectiveArg {
    Max,
    Min,
}

impl From<ObjectiveArg> for Objective {
    fn from(o: ObjectiveArg) -> Self {
        match o {
            ObjectiveArg::Max => Objective::MaxPermissible,
            ObjectiveArg::Min => Objective::MinMaximal,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BoundaryArg {
    Free,
    Bricked,
}

impl From<BoundaryArg> for BoundaryMode {
    fn from(b: BoundaryArg) -> Self {
        match b {
            BoundaryArg::Free => BoundaryMode::Free,
            BoundaryArg::Bricked => BoundaryMode::Bricked,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Ascii,
    Unicode,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Expectation {
    Permissible,
    Maximal,
}

#[derive(Args, Debug)]
struct Size {
    #[arg(long)]
    rows: usize,
    #[arg(long)]
    cols: usize,
}

#[derive(Args, Debug)]
struct GenArgs {
    /// brick, comb, rake, stripe, rake-stripe, check or brick-comb.
    #[arg(long)]
    pattern: String,
    #[command(flatten)]
    size: Size,
    /// Segment limit for brick-comb.
    #[arg(long, default_value_t = 3)]
    max_segments: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Ascii)]
    format: FormatArg,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Grid file (text or JSON).
    file: PathBuf,
    /// Read the grid under this border mode instead of the file's.
    #[arg(long, value_enum)]
    boundary: Option<BoundaryArg>,
    #[arg(long, value_enum)]
    expect: Option<Expectation>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct LimitArgs {
    /// Column cap override.
    #[arg(long)]
    max_cols: Option<usize>,
    /// State memory budget in bytes.
    #[arg(long)]
    max_bytes: Option<usize>,
    /// Wall-time budget in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
}

impl LimitArgs {
    fn limits(&self) -> Result<Limits> {
        let max_time = match self.time_limit {
            Some(t) if t.is_finite() && t >= 0.0 => Some(Duration::from_secs_f64(t)),
            Some(t) => return Err(Error::InvalidArgument(format!("bad time limit {t}"))),
            None => None,
        };
        Ok(Limits {
            max_cols: self.max_cols,
            max_state_bytes: self.max_bytes,
            max_time,
        })
    }
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long, value_enum)]
    objective: ObjectiveArg,
    #[command(flatten)]
    size: Size,
    #[arg(long, value_enum, default_value_t = BoundaryArg::Free)]
    boundary: BoundaryArg,
    /// Write the witness grid here.
    #[arg(long)]
    witness: Option<PathBuf>,
    #[command(flatten)]
    limits: LimitArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[command(flatten)]
    size: Size,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, value_enum)]
    objective: ObjectiveArg,
    /// Row range, `A..B` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range)]
    rows: RangeInclusive<usize>,
    #[arg(long, value_parser = parse_range)]
    cols: RangeInclusive<usize>,
    #[arg(long, value_enum, default_value_t = BoundaryArg::Free)]
    boundary: BoundaryArg,
    /// Compare against a golden table file.
    #[arg(long)]
    golden: Option<PathBuf>,
    #[command(flatten)]
    limits: LimitArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ExportArgs {
    #[arg(long, value_enum)]
    objective: ObjectiveArg,
    #[command(flatten)]
    size: Size,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long, value_enum)]
    objective: ObjectiveArg,
    #[command(flatten)]
    size: Size,
    #[arg(long, value_enum, default_value_t = BoundaryArg::Free)]
    boundary: BoundaryArg,
    #[arg(long)]
    json: bool,
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let bad = || format!("`{s}` is not a range like 2..16");
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            );
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            Ok(v..=v)
        }
    }
}

/// What a subcommand produced.
struct Outcome {
    ok: bool,
    stdout: String,
    stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            ok: true,
            stdout,
            stderr: String::new(),
        }
    }
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json value");
    s.push('\n');
    s
}

fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    fs::write(path, text)
        .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                (2, String::new(), text)
            } else {
                (0, text, String::new())
            };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Check(a) => check(a),
        Command::Solve(a) => solve(a),
        Command::Bounds(a) => bounds(a),
        Command::Table(a) => table(a),
        Command::ExportIp(a) => export_ip(a),
        Command::Oracle(a) => oracle(a),
    };
    match result {
        Ok(out) => (if out.ok { 0 } else { 1 }, out.stdout, out.stderr),
        Err(e) => (2, String::new(), format!("error: {e}\n")),
    }
}

fn gen(a: GenArgs) -> Result<Outcome> {
    let (m, n) = (a.size.rows, a.size.cols);
    let lower = a.pattern.to_ascii_lowercase();
    let (config, closed_form, segments) = if lower == "brick-comb" || lower == "brickcomb" {
        let (c, spec) = brick_comb_best(m, n, a.max_segments)?;
        (c, None, Some(spec))
    } else {
        let kind: PatternKind = a.pattern.parse()?;
        (generate_pattern(kind, m, n)?, Some(pattern_occupancy(kind, m, n)?), None)
    };
    let body = if a.json {
        pretty(json!({
            "schema": SCHEMA,
            "pattern": lower,
            "rows": m,
            "cols": n,
            "occupancy": config.occupancy(),
            "closed_form": closed_form,
            "maximal": config.is_maximal(),
            "segments": segments.as_ref().map(|s| s.to_string()),
            "grid": to_json_value(&config),
        }))
    } else {
        match a.format {
            FormatArg::Ascii => to_grid_file(&config),
            FormatArg::Unicode => render(&config, RenderStyle::AsciiUnicode),
            FormatArg::Svg => render(&config, RenderStyle::Svg),
        }
    };
    let mut summary = format!("{lower} {m}x{n}: occupancy {}", config.occupancy());
    if let Some(spec) = &segments {
        summary.push_str(&format!(", segments {spec}"));
    }
    summary.push('\n');
    let stdout = match &a.output {
        Some(path) => {
            write_file(path, &body)?;
            String::new()
        }
        None => body,
    };
    Ok(Outcome {
        ok: true,
        stdout,
        stderr: summary,
    })
}

fn coord_list(cells: &[Coord]) -> Vec<Value> {
    cells.iter().map(|c| json!([c.i, c.j])).collect()
}

fn check(a: CheckArgs) -> Result<Outcome> {
    let text = fs::read_to_string(&a.file)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", a.file.display())))?;
    let mut config = parse_grid(&text)?;
    if let Some(b) = a.boundary {
        config = config.with_boundary(b.into());
    }
    let permissible = config.is_permissible();
    let maximal = config.is_maximal();
    let blocked = config.blocked_houses();
    let addable = config.addable_lots();
    let mut reasons = Vec::new();
    for i in 1..=config.rows() {
        for j in 1..=config.cols() {
            let at = Coord::new(i, j);
            if !config.house(at)? {
                let tags: Vec<&str> = config
                    .propositions_at(at)?
                    .into_iter()
                    .map(|p| p.tag())
                    .collect();
                reasons.push((at, tags));
            }
        }
    }
    let audit = if maximal && config.boundary() == BoundaryMode::Free {
        Some(audit_structural_lemmas(&config)?)
    } else {
        None
    };
    let ok = match a.expect {
        Some(Expectation::Permissible) => permissible,
        Some(Expectation::Maximal) => maximal,
        None => true,
    };
    let stdout = if a.json {
        pretty(json!({
            "schema": SCHEMA,
            "rows": config.rows(),
            "cols": config.cols(),
            "boundary": config.boundary().name(),
            "occupancy": config.occupancy(),
            "permissible": permissible,
            "maximal": maximal,
            "blocked": coord_list(&blocked),
            "addable": coord_list(&addable),
            "empty_lots": reasons
                .iter()
                .map(|(at, tags)| json!({"at": [at.i, at.j], "propositions": tags}))
                .collect::<Vec<_>>(),
            "lemmas": audit,
        }))
    } else {
        let mut s = format!(
            "{}x{} ({}), occupancy {}\npermissible: {}\nmaximal: {}\n",
            config.rows(),
            config.cols(),
            config.boundary(),
            config.occupancy(),
            if permissible { "yes" } else { "no" },
            if maximal { "yes" } else { "no" },
        );
        for c in &blocked {
            s.push_str(&format!("blocked house at {c}\n"));
        }
        for (at, tags) in &reasons {
            if tags.is_empty() {
                s.push_str(&format!("empty lot {at}: addable\n"));
            } else {
                s.push_str(&format!("empty lot {at}: {}\n", tags.join(" ")));
            }
        }
        if let Some(audit) = &audit {
            let show = |v: Option<bool>| match v {
                Some(true) => "pass",
                Some(false) => "FAIL",
                None => "n/a",
            };
            s.push_str(&format!(
                "lemmas: southern rows {}, border width 2 {}, border width 3 {}, width 4 strips {}\n",
                show(audit.southern_rows),
                show(audit.border_width2),
                show(audit.border_width3),
                show(audit.width4_strips)
            ));
        }
        s
    };
    let stderr = if ok {
        String::new()
    } else {
        match a.expect {
            Some(Expectation::Permissible) => "expected a permissible configuration\n".to_string(),
            _ => "expected a maximal configuration\n".to_string(),
        }
    };
    Ok(Outcome { ok, stdout, stderr })
}

fn solve(a: SolveArgs) -> Result<Outcome> {
    let dims = Dims::new(a.size.rows, a.size.cols, a.boundary.into())?;
    let objective: Objective = a.objective.into();
    let req = SolveRequest {
        dims,
        objective,
        want_witness: true,
        limits: a.limits.limits()?,
    };
    let result = solvers::solve(&req)?;
    let witness = result.witness.expect("witness requested");
    if let Some(path) = &a.witness {
        write_file(path, &to_grid_file(&witness))?;
    }
    let stdout = if a.json {
        pretty(json!({
            "schema": SCHEMA,
            "objective": objective.name(),
            "rows": dims.rows,
            "cols": dims.cols,
            "boundary": dims.boundary.name(),
            "optimum": result.optimum,
            "witness": to_json_value(&witness),
            "stats": result.stats,
        }))
    } else {
        format!(
            "{} {}x{} ({}): {}\n{}",
            if objective == Objective::MaxPermissible { "E" } else { "I" },
            dims.rows,
            dims.cols,
            dims.boundary,
            result.optimum,
            render(&witness, RenderStyle::AsciiPlain)
        )
    };
    Ok(Outcome::ok(stdout))
}

fn bounds(a: BoundsArgs) -> Result<Outcome> {
    let report = BoundsReport::new(a.size.rows, a.size.cols)?;
    Ok(Outcome::ok(if a.json {
        let mut v = serde_json::to_value(&report).expect("report serializes");
        v["schema"] = json!(SCHEMA);
        pretty(v)
    } else {
        report.to_text()
    }))
}

/// Golden table files: `{"rows": [...], "cols": [...], "values": [[...]]}`.
fn load_golden(path: &PathBuf) -> Result<BTreeMap<(usize, usize), u64>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
    let list = |key: &str| -> Result<Vec<u64>> {
        v[key]
            .as_array()
            .and_then(|a| a.iter().map(Value::as_u64).collect())
            .ok_or_else(|| Error::InvalidArgument(format!("golden file lacks `{key}`")))
    };
    let (rows, cols) = (list("rows")?, list("cols")?);
    let values = v["values"]
        .as_array()
        .ok_or_else(|| Error::InvalidArgument("golden file lacks `values`".into()))?;
    let mut out = BTreeMap::new();
    for (r, m) in rows.iter().enumerate() {
        for (c, n) in cols.iter().enumerate() {
            if let Some(x) = values.get(r).and_then(|row| row.get(c)).and_then(Value::as_u64) {
                out.insert((*m as usize, *n as usize), x);
            }
        }
    }
    Ok(out)
}

fn table(a: TableArgs) -> Result<Outcome> {
    let objective: Objective = a.objective.into();
    let t = solvers::table(
        objective,
        a.rows.clone(),
        a.cols.clone(),
        a.boundary.into(),
        &a.limits.limits()?,
    )?;
    let mut mismatches = Vec::new();
    let mut compared = 0;
    if let Some(path) = &a.golden {
        let golden = load_golden(path)?;
        for &m in &t.rows {
            for &n in &t.cols {
                if let Some(&want) = golden.get(&(m, n)) {
                    compared += 1;
                    let got = t.get(m, n);
                    if got != Some(want) {
                        mismatches.push(json!({"rows": m, "cols": n, "expected": want, "got": got}));
                    }
                }
            }
        }
    }
    let complete = t.is_complete();
    let ok = complete && mismatches.is_empty();
    let stdout = if a.json {
        let cells: Vec<Vec<Value>> = t
            .cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| match c {
                        Ok(v) => json!(v),
                        Err(_) => Value::Null,
                    })
                    .collect()
            })
            .collect();
        let errors: Vec<Value> = t
            .rows
            .iter()
            .zip(&t.cells)
            .flat_map(|(m, row)| {
                t.cols.iter().zip(row).filter_map(move |(n, c)| {
                    c.as_ref()
                        .err()
                        .map(|e| json!({"rows": m, "cols": n, "error": e}))
                })
            })
            .collect();
        pretty(json!({
            "schema": SCHEMA,
            "objective": objective.name(),
            "boundary": t.boundary.name(),
            "rows": t.rows,
            "cols": t.cols,
            "values": cells,
            "errors": errors,
            "golden": a.golden.as_ref().map(|_| json!({
                "compared": compared,
                "mismatches": mismatches,
            })),
        }))
    } else {
        let mut s = t.to_text();
        if a.golden.is_some() {
            s.push_str(&format!(
                "golden: {compared} compared, {} mismatched\n",
                mismatches.len()
            ));
        }
        s
    };
    let mut stderr = String::new();
    for m in &mismatches {
        stderr.push_str(&format!("mismatch: {m}\n"));
    }
    if !complete {
        for (m, row) in t.rows.iter().zip(&t.cells) {
            for (n, c) in t.cols.iter().zip(row) {
                if let Err(e) = c {
                    stderr.push_str(&format!("{m}x{n} unavailable: {e}\n"));
                }
            }
        }
    }
    Ok(Outcome { ok, stdout, stderr })
}

fn export_ip(a: ExportArgs) -> Result<Outcome> {
    let (m, n) = (a.size.rows, a.size.cols);
    let model = match a.objective {
        ObjectiveArg::Max => export_efficient(m, n)?,
        ObjectiveArg::Min => export_inefficient(m, n)?,
    };
    let lp = model.to_lp();
    Ok(match &a.output {
        Some(path) => {
            write_file(path, &lp)?;
            Outcome::ok(String::new())
        }
        None => Outcome::ok(lp),
    })
}

fn oracle(a: OracleArgs) -> Result<Outcome> {
    let dims = Dims::new(a.size.rows, a.size.cols, a.boundary.into())?;
    let objective: Objective = a.objective.into();
    let req = SolveRequest::new(dims, objective);
    let brute = brute_force(&req)?;
    let dp = solvers::solve(&req)?;
    let witness_ok = |w: &Option<Configuration>, opt: u64| {
        w.as_ref()
            .is_some_and(|c| c.occupancy() == opt && c.is_maximal())
    };
    let ok = brute.optimum == dp.optimum
        && witness_ok(&brute.witness, brute.optimum)
        && witness_ok(&dp.witness, dp.optimum);
    let stdout = if a.json {
        pretty(json!({
            "schema": SCHEMA,
            "objective": objective.name(),
            "rows": dims.rows,
            "cols": dims.cols,
            "boundary": dims.boundary.name(),
            "brute_force": brute.optimum,
            "dynamic_program": dp.optimum,
            "agree": ok,
        }))
    } else {
        format!(
            "{} {}x{} ({}): brute force {}, dynamic program {}: {}\n",
            objective.name(),
            dims.rows,
            dims.cols,
            dims.boundary,
            brute.optimum,
            dp.optimum,
            if ok { "agree" } else { "DISAGREE" }
        )
    };
    Ok(Outcome {
        ok,
        stdout,
        stderr: String::new(),
    })
}
