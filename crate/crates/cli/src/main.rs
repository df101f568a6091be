use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gauss_universal::constructor::construction_radius_norm;
use gauss_universal::poly::DEFAULT_ORACLE_BUDGET;
use gauss_universal::universality::oracle_check_universal_with_budget;
use gauss_universal::{
    check_universal_exact, check_universal_superset, factor, growth_table, search_minimal, universal_disk_set, volume,
    Error, GaussInt, GrowthRow, PointSet, SearchBox, SearchConfig,
};
use serde_json::{json, Map, Value};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "gauss-universal", version, about = "Universal point sets over the Gaussian integers")]
struct Cli {
    /// Output format; csv is only available for `growth`.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Worker threads (defaults to one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Certify a point set: exact verdict for n+1 points, sufficient condition for more.
    Check {
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        input: PointsInput,
        /// Residue budget for the interpolation cross-check (n+1 points only).
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        oracle_budget: u64,
    },
    /// Build and certify the lattice disk for degree n.
    Construct {
        #[arg(long)]
        degree: usize,
    },
    /// Smallest universal set inside a box.
    Search {
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Product of pairwise differences of a point set.
    Volume {
        #[command(flatten)]
        input: PointsInput,
    },
    /// Factor a Gaussian integer such as `5`, `-3+4i` or `2i`.
    Factor { value: String },
    /// One search per degree from --from up to --degree.
    Growth {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[command(flatten)]
        sweep: SweepArgs,
    },
}

#[derive(Args)]
struct PointsInput {
    /// JSON array of [re, im] pairs; `-` reads standard input.
    #[arg(long)]
    points: PathBuf,
}

#[derive(Args)]
struct SweepArgs {
    /// Box `B1xB2`, meaning 0 <= re <= B1 and 0 <= im <= B2.
    #[arg(long = "box")]
    search_box: Option<SearchBox>,
    #[arg(long)]
    max_cardinality: Option<usize>,
    /// Node limit per top-level branch; truncated sweeps report exhaustive = false.
    #[arg(long)]
    node_budget: Option<u64>,
}

impl SweepArgs {
    fn config(&self, degree: usize) -> SearchConfig {
        let mut config = SearchConfig::new(degree).with_node_budget(self.node_budget);
        if let Some(b) = self.search_box {
            config = config.with_box(b);
        }
        if let Some(m) = self.max_cardinality {
            config = config.with_max_cardinality(m);
        }
        config
    }
}

struct Report {
    body: String,
    success: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "{m}"),
            Failure::Library(e) => write!(f, "{e}"),
        }
    }
}

fn read_points(input: &PointsInput) -> Result<PointSet, Failure> {
    let text = if input.points.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&input.points)
            .map_err(|e| Failure::Usage(format!("reading {}: {e}", input.points.display())))?
    };
    let set: PointSet = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("invalid point list: {e}")))?;
    if set.is_empty() {
        return Err(Failure::Usage("point list is empty".into()));
    }
    Ok(set)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn json_report(mut map: Map<String, Value>, success: bool) -> Report {
    map.insert("version".into(), json!(VERSION));
    Report { body: Value::Object(map).to_string(), success }
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("reports are objects"),
    }
}

fn integer(decimal: &str) -> Value {
    Value::Number(decimal.parse().expect("decimal integer"))
}

fn check(degree: usize, set: &PointSet, oracle_budget: u64) -> Result<Report, Failure> {
    if set.len() < degree + 1 {
        return Err(Failure::Usage(format!("degree {degree} needs at least {} points, got {}", degree + 1, set.len())));
    }
    let exact = set.len() == degree + 1;
    let cert = if exact { check_universal_exact(set)? } else { check_universal_superset(set, degree)? };
    let oracle = if exact {
        match oracle_check_universal_with_budget(set, degree, oracle_budget) {
            Ok(v) => json!(v),
            Err(Error::OracleBudget { .. }) => Value::Null,
            Err(e) => return Err(e.into()),
        }
    } else {
        Value::Null
    };
    let success = cert.verdict.is_positive();
    let mut map = object(to_value(&cert));
    map.insert("cardinality".into(), json!(set.len()));
    map.insert("oracle".into(), oracle);
    map.insert("points".into(), to_value(set));
    Ok(json_report(map, success))
}

fn construct(degree: usize) -> Result<Report, Failure> {
    let c = universal_disk_set(degree)?;
    let per_prime: Vec<Value> = c
        .per_prime
        .iter()
        .map(|sq| {
            json!({
                "A": sq.spec.half_width,
                "contained": sq.contained,
                "k": sq.spec.level,
                "prime": to_value(&sq.spec.prime),
                "square_cardinality": integer(&sq.square_cardinality.to_string()),
            })
        })
        .collect();
    let success = c.certificate.verdict.is_positive() && c.all_squares_contained();
    let mut map = Map::new();
    map.insert("cardinality".into(), json!(c.disk.points.len()));
    map.insert("certificate".into(), to_value(&c.certificate));
    map.insert("degree".into(), json!(degree));
    map.insert("per_prime".into(), Value::Array(per_prime));
    map.insert("points".into(), to_value(&c.disk.points));
    map.insert("radius_norm".into(), json!(construction_radius_norm(degree)));
    Ok(json_report(map, success))
}

fn search(degree: usize, sweep: &SweepArgs) -> Result<Report, Failure> {
    let config = sweep.config(degree);
    let out = search_minimal(&config)?;
    let mut map = Map::new();
    map.insert("box".into(), json!(config.search_box.to_string()));
    map.insert("cardinality".into(), json!(out.row.minimal_cardinality_found));
    map.insert("degree".into(), json!(degree));
    map.insert("exhaustive".into(), json!(out.row.exhaustive));
    map.insert("max_cardinality".into(), json!(config.max_cardinality));
    map.insert("found".into(), out.found.as_ref().map(to_value).unwrap_or(Value::Null));
    Ok(json_report(map, out.found.is_some()))
}

fn ratio(row: &GrowthRow) -> String {
    row.minimal_cardinality_found.map(|m| format!("{m}/{}", row.degree)).unwrap_or_default()
}

fn growth(from: usize, degree: usize, sweep: &SweepArgs, format: Format) -> Result<Report, Failure> {
    if from == 0 || from > degree {
        return Err(Failure::Usage(format!("need 1 <= --from <= --degree, got {from} and {degree}")));
    }
    let configs: Vec<SearchConfig> = (from..=degree).map(|n| sweep.config(n)).collect();
    let rows = growth_table(&configs)?;
    let success = rows.iter().all(|r| r.minimal_cardinality_found.is_some());
    if format == Format::Csv {
        let mut body = String::from("degree,min_cardinality,ratio,box,exhaustive\n");
        for r in &rows {
            let m = r.minimal_cardinality_found.map(|m| m.to_string()).unwrap_or_default();
            body.push_str(&format!("{},{m},{},{},{}\n", r.degree, ratio(r), r.search_box, r.exhaustive));
        }
        body.pop();
        return Ok(Report { body, success });
    }
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "box": r.search_box.to_string(),
                "degree": r.degree,
                "exhaustive": r.exhaustive,
                "min_cardinality": r.minimal_cardinality_found,
                "ratio": r.minimal_cardinality_found.map(|_| ratio(r)),
            })
        })
        .collect();
    let mut map = Map::new();
    map.insert("rows".into(), Value::Array(rows));
    Ok(json_report(map, success))
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let csv_ok = matches!(cli.command, Command::Growth { .. });
    if cli.format == Format::Csv && !csv_ok {
        return Err(Failure::Usage("csv output is only supported by `growth`".into()));
    }
    match &cli.command {
        Command::Check { degree, input, oracle_budget } => check(*degree, &read_points(input)?, *oracle_budget),
        Command::Construct { degree } => construct(*degree),
        Command::Search { degree, sweep } => search(*degree, sweep),
        Command::Volume { input } => {
            let v = volume(&read_points(input)?);
            Ok(json_report(object(to_value(&v)), true))
        }
        Command::Factor { value } => {
            let z: GaussInt = value.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            let f = factor(&z).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(json_report(object(to_value(&f)), true))
        }
        Command::Growth { degree, from, sweep } => growth(*from, *degree, sweep, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(report) => {
            println!("{}", report.body);
            if report.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
