use std::fmt;

use clap::{Args, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use invseq::checks::{run_check, scan_schroder_pairs, Theorem};
use invseq::enumerate::{
    baxter_generating_tree, catalan_triangle, invseq_avoiders, invseq_distribution, perm_avoiders, perm_distribution,
    schroder_triangle, Avoidance, Distribution, Triangle,
};
use invseq::series::{self, Identity};
use invseq::stats::{Stat, StatValue};
use invseq::words::{parse_pattern_list, RelationTriple};
use invseq::Error;

/// What a command produced: the text to write, and whether every claim it
/// checked held.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Internal(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::MalformedPattern(_)
            | Error::MalformedTriple(_)
            | Error::UnknownStatistic(_)
            | Error::StatisticUniverse { .. }
            | Error::Contains021(_)
            | Error::EmptyObject
            | Error::UnsupportedTriple(_) => CliError::Usage(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn to_json(v: &impl Serialize) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| CliError::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// One line; used where the payload is a long list of small arrays.
fn to_json_line(v: &impl Serialize) -> Result<String> {
    let mut s = serde_json::to_string(v).map_err(|e| CliError::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn to_csv(header: Vec<String>, rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let internal = |e: csv::Error| CliError::Internal(e.to_string());
    w.write_record(&header).map_err(internal)?;
    for r in rows {
        w.write_record(&r).map_err(internal)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

// ---------------------------------------------------------------- enumerate

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Universe {
    Perm,
    Invseq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Args)]
pub struct EnumerateArgs {
    #[arg(long, value_enum)]
    universe: Universe,
    /// Length of the objects.
    #[arg(long)]
    n: usize,
    /// Comma-separated patterns (`021`, `2_41_3`) or a relation triple
    /// (`>=,-,>`).
    #[arg(long, allow_hyphen_values = true)]
    avoid: Option<String>,
    /// Comma-separated statistics (`des`, `DES`, `asc`, `EXPO`, ...); when
    /// given, the joint distribution is printed instead of the objects.
    #[arg(long, value_delimiter = ',')]
    stats: Vec<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: TableFormat,
}

/// A triple is recognised by its relation symbols; anything else is a
/// pattern list.
fn parse_avoid(s: &str) -> Result<Avoidance> {
    if s.contains(['<', '>', '=', '!', '-']) {
        return Ok(Avoidance::Triple(s.parse::<RelationTriple>()?));
    }
    Ok(Avoidance::Patterns(parse_pattern_list(s)?))
}

pub fn enumerate(a: &EnumerateArgs) -> Result<Outcome> {
    let avoid = match &a.avoid {
        Some(s) => parse_avoid(s)?,
        None => Avoidance::Nothing,
    };
    let stats = a
        .stats
        .iter()
        .map(|s| s.parse::<Stat>())
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if a.n == 0 {
        return Ok(Outcome::ok(String::new()));
    }
    // objects come back in lexicographic order; the distribution is only
    // computed when asked for
    let (objects, dist): (Vec<Vec<u32>>, Option<Distribution>) = match a.universe {
        Universe::Perm => {
            let mut ps = perm_avoiders(a.n, &avoid);
            ps.sort();
            let d = (!stats.is_empty())
                .then(|| perm_distribution(&ps, &stats))
                .transpose()?;
            (ps.iter().map(|p| p.to_vec()).collect(), d)
        }
        Universe::Invseq => {
            let mut es = invseq_avoiders(a.n, &avoid);
            es.sort();
            let d = (!stats.is_empty())
                .then(|| invseq_distribution(&es, &stats))
                .transpose()?;
            (es.iter().map(|e| e.to_vec()).collect(), d)
        }
    };

    let Some(dist) = dist else {
        let text = match a.format {
            TableFormat::Json => to_json_line(&json!({
                "universe": a.universe,
                "n": a.n,
                "avoid": a.avoid,
                "count": objects.len(),
                "objects": objects,
            }))?,
            TableFormat::Csv => to_csv(
                (1..=a.n).map(|i| format!("e{i}")).collect(),
                objects.iter().map(|o| o.iter().map(u32::to_string).collect()).collect(),
            )?,
        };
        return Ok(Outcome::ok(text));
    };

    let names: Vec<&str> = stats.iter().map(|s| s.name()).collect();
    let text = match a.format {
        TableFormat::Json => {
            let entries: Vec<Value> = dist
                .iter()
                .map(|(k, c)| Ok(json!({ "key": k, "count": count(c)? })))
                .collect::<Result<_>>()?;
            to_json_line(&json!({
                "universe": a.universe,
                "n": a.n,
                "avoid": a.avoid,
                "stats": names,
                "total": objects.len(),
                "distribution": entries,
            }))?
        }
        TableFormat::Csv => {
            let mut header: Vec<String> = names.iter().map(|s| s.to_string()).collect();
            header.push("count".into());
            let rows = dist
                .iter()
                .map(|(k, c)| {
                    let mut row: Vec<String> = k.iter().map(csv_value).collect();
                    row.push(c.to_string());
                    row
                })
                .collect();
            to_csv(header, rows)?
        }
    };
    Ok(Outcome::ok(text))
}

fn count<T: fmt::Display>(c: &T) -> Result<Value> {
    let s = c.to_string();
    s.parse::<u64>()
        .map(Value::from)
        .map_err(|_| CliError::Internal(format!("count {s} does not fit in 64 bits")))
}

/// Sets become space-separated lists so they fit in one CSV field.
fn csv_value(v: &StatValue) -> String {
    match v {
        StatValue::Num(n) => n.to_string(),
        StatValue::Set(s) => s.iter().map(u32::to_string).collect::<Vec<_>>().join(" "),
    }
}

// ----------------------------------------------------------------- triangle

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Catalan,
    Schroder,
    Baxter,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TriangleFormat {
    Csv,
    Bfile,
    Json,
}

#[derive(Args)]
pub struct TriangleArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: TriangleFormat,
}

pub fn triangle(a: &TriangleArgs) -> Result<Outcome> {
    let t: Triangle = match a.family {
        Family::Catalan => catalan_triangle(a.max_n),
        Family::Schroder => schroder_triangle(a.max_n),
        Family::Baxter => baxter_generating_tree(a.max_n).triangle,
    };
    let text = match a.format {
        TriangleFormat::Csv => t.to_csv(),
        TriangleFormat::Bfile => t.to_bfile(),
        TriangleFormat::Json => to_json_line(&json!({
            "family": a.family,
            "max_n": a.max_n,
            "rows": t.rows().iter().map(|r| strings(r)).collect::<Vec<_>>(),
            "row_sums": strings(&t.row_sums()),
        }))?,
    };
    Ok(Outcome::ok(text))
}

fn strings<T: fmt::Display>(v: &[T]) -> Vec<String> {
    v.iter().map(T::to_string).collect()
}

// -------------------------------------------------------------------- check

#[derive(Args)]
pub struct CheckArgs {
    #[arg(long, value_parser = parse_theorem)]
    theorem: Theorem,
    /// Largest size to check; defaults to a size that runs in seconds.
    #[arg(long)]
    max_n: Option<usize>,
    /// Record wall-clock milliseconds per size (makes output nondeterministic).
    #[arg(long)]
    timings: bool,
}

fn parse_theorem(s: &str) -> std::result::Result<Theorem, String> {
    s.parse::<Theorem>().map_err(|_| {
        let ids: Vec<&str> = Theorem::ALL.iter().map(|t| t.id()).collect();
        format!("unknown theorem; expected one of {}", ids.join(", "))
    })
}

pub fn check(a: &CheckArgs) -> Result<Outcome> {
    let t = a.theorem;
    let max_n = a.max_n.unwrap_or(t.default_max_n());
    if max_n < t.min_n() {
        return Err(CliError::Usage(format!("{t} needs --max-n >= {}", t.min_n())));
    }
    if max_n > t.default_max_n() {
        eprintln!(
            "warning: --max-n {max_n} exceeds the default {} for {t}; this may take a long time",
            t.default_max_n()
        );
    }
    let report = run_check(t, max_n, a.timings);
    Ok(Outcome {
        ok: report.passed,
        text: to_json(&report)?,
    })
}

// --------------------------------------------------------------------- scan

#[derive(Args)]
pub struct ScanArgs {
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: TableFormat,
}

pub fn scan(a: &ScanArgs) -> Result<Outcome> {
    if a.max_n < 4 {
        return Err(CliError::Usage(
            "--max-n must be at least 4 for length-4 patterns".into(),
        ));
    }
    if a.max_n > 9 {
        eprintln!(
            "warning: --max-n {} enumerates S_{} for every pair; this may take a long time",
            a.max_n, a.max_n
        );
    }
    let scan = scan_schroder_pairs(a.max_n);
    let text = match a.format {
        TableFormat::Json => to_json(&scan)?,
        TableFormat::Csv => to_csv(
            vec!["larger".into(), "smaller".into()],
            scan.pairs.iter().map(|(x, y)| vec![x.clone(), y.clone()]).collect(),
        )?,
    };
    Ok(Outcome::ok(text))
}

// ------------------------------------------------------------------- series

#[derive(Args)]
pub struct SeriesArgs {
    /// Identity to verify; all of them when omitted.
    #[arg(long, value_parser = parse_identity)]
    identity: Option<Identity>,
    /// Truncation order; each identity's routine order when omitted.
    #[arg(long)]
    order: Option<usize>,
}

fn parse_identity(s: &str) -> std::result::Result<Identity, String> {
    s.parse::<Identity>().map_err(|_| {
        let names: Vec<&str> = Identity::ALL.iter().map(|i| i.name()).collect();
        format!("unknown identity; expected one of {}", names.join(", "))
    })
}

pub fn series_check(a: &SeriesArgs) -> Result<Outcome> {
    if a.order == Some(0) {
        return Err(CliError::Usage("--order must be at least 1".into()));
    }
    let ids: Vec<Identity> = match a.identity {
        Some(i) => vec![i],
        None => Identity::ALL.to_vec(),
    };
    let reports: Vec<series::SeriesReport> = ids
        .into_iter()
        .map(|i| series::check(i, a.order.unwrap_or(i.default_order())))
        .collect();
    let passed = reports.iter().all(|r| r.passed);
    Ok(Outcome {
        ok: passed,
        text: to_json(&json!({ "passed": passed, "reports": reports }))?,
    })
}
