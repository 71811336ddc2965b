//! `crossnest`: bijections, statistics, tables, polynomials and
//! verification suites from the command line.

mod cache;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crossnest::counting::transfer::{bipartite_balance, bipartite_rank, is_invertible, rank_corank, rect_lattice};
use crossnest::counting::{
    char_poly, distribution, distribution_sharded, fk_counts, gk1_reflection, gkj_count, gkj_series, SetFilter,
    TableSpec,
};
use crossnest::paths::{
    dyck_from_matching_k2, dyck_pair_from_matching_k3, matching_from_dyck_k2, matching_from_dyck_pair_k3, motzkin_profile,
    noncrossing_from_motzkin, nonnesting_from_motzkin, LatticePath,
};
use crossnest::setpart::{parse_partition, SetPartition};
use crossnest::stats::{self, StatRecord};
use crossnest::verify::{self, Suite};
use crossnest::walks::{
    count_walks_bounded, matching_to_oscillating_traced, oscillating_to_matching, phi, phi_bar, psi_bar_traced, psi_traced, BoxBound,
    TableauWalk, WalkKind, WalkTrace,
};
use crossnest::young::Shape;

use cache::Cache;

#[derive(Parser)]
#[command(name = "crossnest", version, about = "Crossings and nestings of set partitions and matchings")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Do not read or write the count cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Cache file; defaults to $CROSSNEST_CACHE or the user cache directory.
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,
    /// Include elapsed times in verification output.
    #[arg(long, global = true)]
    timestamps: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Apply one of the tableau bijections.
    Bijection(BijectionArgs),
    /// Crossing and nesting numbers of a partition.
    Stats(StatsArgs),
    /// Joint distribution of (cr, ne) over partitions or matchings.
    Table(TableArgs),
    /// Count walks of a given kind from ∅ to a shape.
    Walks(WalksArgs),
    /// p_{k,j}(x) = det(I - √x A_{k,j}) and det(I - tA_{k,j}).
    Charpoly(LatticeArgs),
    /// Rank, corank and invertibility of A_{k,j}.
    Rank(LatticeArgs),
    /// Closed walks of length 2m from ∅ in L(k, j).
    Gkj(GkjArgs),
    /// k-noncrossing matching counts f_k(0), ..., f_k(order).
    Fk(FkArgs),
    /// Motzkin and Dyck path bijections.
    Paths(PathsArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BijectionName {
    /// Partition to vacillating tableau.
    Phi,
    /// Vacillating tableau to partition.
    Psi,
    /// Partition to hesitating tableau.
    Phibar,
    /// Hesitating tableau to partition.
    Psibar,
    /// Matching to oscillating tableau, or an oscillating tableau back to its matching.
    Oscillate,
}

#[derive(Args)]
struct BijectionArgs {
    #[arg(value_enum)]
    name: BijectionName,
    /// A partition such as 1457-26-3, or a walk such as ∅,1,11,1,∅.
    #[arg(long)]
    input: String,
    /// Also print the tableau at every step.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long)]
    partition: String,
    /// Also report the enhanced statistics.
    #[arg(long)]
    enhanced: bool,
    /// Cross-check against the clique oracle.
    #[arg(long)]
    oracle: bool,
    /// Also report ne_r for r = 1..=R.
    #[arg(long, value_name = "R")]
    greene: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Object {
    Partitions,
    Matchings,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    object: Object,
    /// Ground set size.
    #[arg(long)]
    n: usize,
    /// Restrict to partitions with this set of block minima, e.g. 1,2,5.
    #[arg(long, requires = "max", allow_hyphen_values = true)]
    min: Option<String>,
    /// Restrict to partitions with this set of block maxima.
    #[arg(long, requires = "min", allow_hyphen_values = true)]
    max: Option<String>,
    /// Use the enhanced statistics; --min/--max then give min\max and max\min.
    #[arg(long)]
    bar: bool,
    /// Enumerate on this many threads, without the brute-force size bound.
    #[arg(long)]
    shards: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Vacillating,
    Hesitating,
    Oscillating,
}

impl From<Kind> for WalkKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Vacillating => WalkKind::Vacillating,
            Kind::Hesitating => WalkKind::Hesitating,
            Kind::Oscillating => WalkKind::Oscillating,
        }
    }
}

#[derive(Args)]
struct WalksArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// End shape, e.g. 21 or [2,1] or ∅.
    #[arg(long, default_value = "∅")]
    shape: String,
    #[arg(long)]
    length: usize,
    /// Only walks whose shapes have at most this many rows.
    #[arg(long)]
    rows: Option<usize>,
    /// Only walks whose shapes have at most this many columns.
    #[arg(long)]
    cols: Option<usize>,
}

#[derive(Args)]
struct LatticeArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    j: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GkjRoute {
    /// Walk-count dynamic programming.
    Dp,
    /// Expansion of det(I - xA(0)) / det(I - xA).
    Series,
    /// Reflection formula, j = 1 only.
    Reflection,
}

#[derive(Args)]
struct GkjArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    j: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, value_enum, default_value_t = GkjRoute::Dp)]
    via: GkjRoute,
}

#[derive(Args)]
struct FkArgs {
    #[arg(long)]
    k: usize,
    /// Largest m reported.
    #[arg(long)]
    order: usize,
}

#[derive(Args)]
struct PathsArgs {
    #[command(subcommand)]
    command: PathsCommand,
}

#[derive(Subcommand)]
enum PathsCommand {
    /// The Motzkin profile L(S, T), or the partitions recovered from a profile path.
    Motzkin {
        #[arg(long, requires_all = ["max", "n"], conflicts_with = "path", allow_hyphen_values = true)]
        min: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        max: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// A profile path over U, D, F.
        #[arg(long)]
        path: Option<String>,
    },
    /// Noncrossing matchings and Dyck paths.
    Dyck2 {
        #[arg(long, conflicts_with = "path")]
        matching: Option<String>,
        #[arg(long)]
        path: Option<String>,
    },
    /// Matchings without 3-crossings and pairs of noncrossing Dyck paths.
    Dyck3 {
        #[arg(long, conflicts_with = "paths")]
        matching: Option<String>,
        /// Upper and lower path, e.g. --paths UUDD UDUD.
        #[arg(long, num_args = 2)]
        paths: Option<Vec<String>>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name or criterion number, or all.
    #[arg(long, default_value = "all")]
    suite: String,
    /// List every check, not only failures.
    #[arg(long)]
    verbose: bool,
}

/// Result of a command in all three renderings.
struct Output {
    json: Value,
    text: String,
    csv: String,
    /// Whether the command found what it was asked to check.
    ok: bool,
}

impl Output {
    fn new(json: Value, text: String, csv: String) -> Self {
        Output { json, text, csv, ok: true }
    }

    fn keys(pairs: &[(&str, String)], json: Value) -> Self {
        let text = pairs.iter().map(|(k, v)| format!("{k}: {v}\n")).collect();
        let mut csv = String::from("key,value\n");
        for (k, v) in pairs {
            writeln!(csv, "{k},{}", csv_field(v)).unwrap();
        }
        Output::new(json, text, csv)
    }
}

fn csv_field(v: &str) -> String {
    if v.contains([',', '"', '\n']) {
        format!("\"{}\"", v.replace('"', "\"\""))
    } else {
        v.to_string()
    }
}

fn parse_set(text: &str) -> Result<BTreeSet<usize>> {
    let t = text.trim().trim_start_matches('{').trim_end_matches('}').trim();
    if t.is_empty() || t == "∅" || t == "-" {
        return Ok(BTreeSet::new());
    }
    t.split(',')
        .map(|s| s.trim().parse::<usize>().with_context(|| format!("invalid set element {s:?} in {text:?}")))
        .collect()
}

fn partition(text: &str) -> Result<SetPartition> {
    parse_partition(text).map_err(|e| anyhow!("invalid partition {text:?}: {e}"))
}

fn trace_text(trace: &WalkTrace) -> String {
    let mut out = String::new();
    for (i, t) in trace.tableaux.iter().enumerate() {
        let body = t.to_string().replace('\n', "\n    ");
        writeln!(out, "T{i}: {body}").unwrap();
    }
    out
}

fn walk_json(walk: &TableauWalk) -> Value {
    serde_json::to_value(walk).expect("walks serialize")
}

fn bijection(args: &BijectionArgs) -> Result<Output> {
    let input = args.input.trim();
    let (json, mut text, trace) = match args.name {
        BijectionName::Phi | BijectionName::Phibar => {
            let p = partition(input)?;
            let (walk, trace) = if args.name == BijectionName::Phi { phi(&p) } else { phi_bar(&p) };
            let json = json!({"partition": p.to_string(), "walk": walk_json(&walk)});
            (json, format!("{walk}\n"), trace)
        }
        BijectionName::Psi => {
            let walk = TableauWalk::parse(WalkKind::Vacillating, input)?;
            let (p, trace) = psi_traced(&walk)?;
            let last = trace.tableaux.last().cloned().unwrap_or_default();
            let json = json!({"walk": walk_json(&walk), "partition": p.to_string(), "tableau": last.rows()});
            let rows = last.to_string().replace('\n', "\n  ");
            (json, format!("{p}\nT: {rows}\n"), trace)
        }
        BijectionName::Psibar => {
            let walk = TableauWalk::parse(WalkKind::Hesitating, input)?;
            let (p, trace) = psi_bar_traced(&walk)?;
            (json!({"walk": walk_json(&walk), "partition": p.to_string()}), format!("{p}\n"), trace)
        }
        BijectionName::Oscillate => match parse_partition(input) {
            Ok(m) => {
                let (walk, trace) = matching_to_oscillating_traced(&m)?;
                (json!({"matching": m.to_string(), "walk": walk_json(&walk)}), format!("{walk}\n"), trace)
            }
            Err(_) => {
                let walk = TableauWalk::parse(WalkKind::Oscillating, input)?;
                let m = oscillating_to_matching(&walk)?;
                let (_, trace) = matching_to_oscillating_traced(&m)?;
                (json!({"walk": walk_json(&walk), "matching": m.to_string()}), format!("{m}\n"), trace)
            }
        },
    };
    let mut json = json;
    if args.trace {
        text.push_str(&trace_text(&trace));
        json["trace"] = serde_json::to_value(&trace)?;
    }
    let csv = match &json {
        Value::Object(map) => {
            let mut csv = String::from("key,value\n");
            for (k, v) in map {
                let v = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                writeln!(csv, "{k},{}", csv_field(&v)).unwrap();
            }
            csv
        }
        _ => unreachable!("bijection output is an object"),
    };
    Ok(Output::new(json, text, csv))
}

fn stats_cmd(args: &StatsArgs) -> Result<Output> {
    let p = partition(&args.partition)?;
    let rec = StatRecord::of(&p);
    let mut pairs = vec![("partition", p.to_string()), ("cr", rec.cr.to_string()), ("ne", rec.ne.to_string())];
    let mut json = json!({"partition": p.to_string(), "cr": rec.cr, "ne": rec.ne});
    if args.enhanced {
        pairs.push(("enhanced_cr", rec.enhanced_cr.to_string()));
        pairs.push(("enhanced_ne", rec.enhanced_ne.to_string()));
        json["enhanced_cr"] = json!(rec.enhanced_cr);
        json["enhanced_ne"] = json!(rec.enhanced_ne);
    }
    let mut agree = true;
    if args.oracle {
        let (oc, on) = (stats::oracle_cr(&p)?, stats::oracle_ne(&p)?);
        agree &= (oc, on) == (rec.cr, rec.ne);
        pairs.push(("oracle_cr", oc.to_string()));
        pairs.push(("oracle_ne", on.to_string()));
        json["oracle_cr"] = json!(oc);
        json["oracle_ne"] = json!(on);
        if args.enhanced {
            let (ec, en) = (stats::oracle_enhanced_cr(&p)?, stats::oracle_enhanced_ne(&p)?);
            agree &= (ec, en) == (rec.enhanced_cr, rec.enhanced_ne);
            pairs.push(("oracle_enhanced_cr", ec.to_string()));
            pairs.push(("oracle_enhanced_ne", en.to_string()));
            json["oracle_enhanced_cr"] = json!(ec);
            json["oracle_enhanced_ne"] = json!(en);
        }
        pairs.push(("agree", agree.to_string()));
        json["agree"] = json!(agree);
    }
    if let Some(r) = args.greene {
        let values = (1..=r).map(|i| stats::ne_r(&p, i)).collect::<Result<Vec<_>, _>>()?;
        pairs.push(("ne_r", values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")));
        json["ne_r"] = json!(values);
    }
    let mut out = Output::keys(&pairs, json);
    out.ok = agree;
    Ok(out)
}

fn table(args: &TableArgs) -> Result<Output> {
    let mut spec = match args.object {
        Object::Partitions => TableSpec::partitions(args.n),
        Object::Matchings => TableSpec::matchings(args.n),
    };
    if args.bar {
        spec = spec.enhanced();
    }
    if let (Some(s), Some(t)) = (&args.min, &args.max) {
        spec = spec.with_filter(SetFilter::new(parse_set(s)?, parse_set(t)?));
    }
    let table = match args.shards {
        Some(shards) => distribution_sharded(&spec, shards)?,
        None => distribution(&spec)?,
    };
    Ok(Output::new(serde_json::to_value(&table)?, table.to_text(), table.to_csv()))
}

fn walks(args: &WalksArgs, cache: &mut Cache) -> Result<Output> {
    let kind = WalkKind::from(args.kind);
    let shape: Shape = args.shape.parse().map_err(|e| anyhow!("invalid shape {:?}: {e}", args.shape))?;
    let bound = match (args.rows, args.cols) {
        (None, None) => None,
        (r, c) => Some(BoxBound {
            rows: r.unwrap_or(usize::MAX),
            cols: c.unwrap_or(usize::MAX),
        }),
    };
    let fmt_bound = |b: Option<usize>| b.map_or("inf".to_string(), |v| v.to_string());
    let key = format!(
        "walks:kind={kind},shape={},length={},rows={},cols={}",
        shape.render("0"),
        args.length,
        fmt_bound(args.rows),
        fmt_bound(args.cols)
    );
    let count = cache.get_or_compute::<anyhow::Error>(key, || Ok(count_walks_bounded(kind, &shape, args.length, bound).to_string()))?;
    let json = json!({"kind": kind, "shape": shape, "length": args.length, "count": count});
    Ok(Output::keys(
        &[("kind", kind.to_string()), ("shape", shape.to_string()), ("length", args.length.to_string()), ("count", count.clone())],
        json,
    ))
}

fn check_lattice(k: usize, j: usize) -> Result<()> {
    if k == 0 || j == 0 {
        bail!("k and j must be at least 1");
    }
    Ok(())
}

fn charpoly(args: &LatticeArgs) -> Result<Output> {
    check_lattice(args.k, args.j)?;
    let t = char_poly(&rect_lattice(args.k, args.j).0);
    if !t.is_even() {
        bail!("det(I - tA) has odd-degree terms");
    }
    let p = t.even_part();
    let json = json!({"k": args.k, "j": args.j, "p": p, "det_i_minus_ta": t});
    let text = format!("p_{{{k},{j}}}(x) = {p}\ndet(I - tA) = {}\n", t.to_string().replace('x', "t"), k = args.k, j = args.j);
    let mut csv = String::from("power,coefficient\n");
    for (i, c) in p.coeffs().iter().enumerate() {
        writeln!(csv, "{i},{c}").unwrap();
    }
    Ok(Output::new(json, text, csv))
}

fn rank(args: &LatticeArgs) -> Result<Output> {
    check_lattice(args.k, args.j)?;
    let (a, _) = rect_lattice(args.k, args.j);
    let (rank, corank) = rank_corank(&a);
    let bip = bipartite_rank(args.k, args.j);
    if bip != rank {
        bail!("rank {rank} disagrees with twice the biadjacency rank {bip}");
    }
    let (even, odd) = bipartite_balance(args.k, args.j);
    let invertible = is_invertible(args.k, args.j);
    let json = json!({
        "k": args.k, "j": args.j, "dim": a.dim(), "rank": rank, "corank": corank,
        "even_shapes": even, "odd_shapes": odd, "invertible": invertible,
    });
    Ok(Output::keys(
        &[
            ("dim", a.dim().to_string()),
            ("rank", rank.to_string()),
            ("corank", corank.to_string()),
            ("even_shapes", even.to_string()),
            ("odd_shapes", odd.to_string()),
            ("invertible", invertible.to_string()),
        ],
        json,
    ))
}

fn gkj(args: &GkjArgs, cache: &mut Cache) -> Result<Output> {
    check_lattice(args.k, args.j)?;
    let (k, j, m) = (args.k, args.j, args.m);
    let count = match args.via {
        GkjRoute::Dp => cache.get_or_compute::<anyhow::Error>(format!("gkj:k={k},j={j},m={m}"), || Ok(gkj_count(k, j, m).to_string()))?,
        GkjRoute::Series => {
            let s = gkj_series(k, j, 2 * m)?;
            let c = s.coeff(2 * m);
            if !c.is_integer() {
                bail!("non-integral coefficient {c}");
            }
            c.to_integer().to_string()
        }
        GkjRoute::Reflection => {
            if j != 1 {
                bail!("the reflection formula needs j = 1");
            }
            gk1_reflection(k, m).to_string()
        }
    };
    let json = json!({"k": k, "j": j, "m": m, "count": count});
    Ok(Output::keys(&[("k", k.to_string()), ("j", j.to_string()), ("m", m.to_string()), ("count", count.clone())], json))
}

fn fk(args: &FkArgs, cache: &mut Cache) -> Result<Output> {
    if args.k == 0 {
        bail!("k must be at least 1");
    }
    let keys: Vec<String> = (0..=args.order).map(|m| format!("fk:k={},m={m}", args.k)).collect();
    let cached: Option<Vec<String>> = keys.iter().map(|key| cache.get(key).map(str::to_string)).collect();
    let counts = match cached {
        Some(c) => c,
        None => {
            let c: Vec<String> = fk_counts(args.k, args.order)?.iter().map(|v| v.to_string()).collect();
            for (key, v) in keys.into_iter().zip(&c) {
                cache.insert(key, v.clone());
            }
            c
        }
    };
    let json = json!({"k": args.k, "counts": counts});
    let text = counts.iter().enumerate().map(|(m, c)| format!("f_{}({m}) = {c}\n", args.k)).collect();
    let mut csv = String::from("m,count\n");
    for (m, c) in counts.iter().enumerate() {
        writeln!(csv, "{m},{c}").unwrap();
    }
    Ok(Output::new(json, text, csv))
}

fn lattice_path(text: &str) -> Result<LatticePath> {
    text.parse().map_err(|e| anyhow!("invalid path {text:?}: {e}"))
}

fn paths(args: &PathsArgs) -> Result<Output> {
    match &args.command {
        PathsCommand::Motzkin { min, max, n, path } => {
            if let Some(path) = path {
                let path = lattice_path(path)?;
                let nc = noncrossing_from_motzkin(&path)?;
                let nn = nonnesting_from_motzkin(&path)?;
                let json = json!({"path": path, "noncrossing": nc.to_string(), "nonnesting": nn.to_string()});
                return Ok(Output::keys(
                    &[("path", path.to_string()), ("noncrossing", nc.to_string()), ("nonnesting", nn.to_string())],
                    json,
                ));
            }
            let (Some(min), Some(max), Some(n)) = (min, max, n) else {
                bail!("give either --path or all of --min, --max and --n");
            };
            let profile = motzkin_profile(&parse_set(min)?, &parse_set(max)?, *n)?;
            let nonempty = profile.is_motzkin();
            let json = json!({"path": profile.path, "first_violation": profile.first_violation, "nonempty": nonempty});
            Ok(Output::keys(&[("path", profile.path.to_string()), ("nonempty", nonempty.to_string())], json))
        }
        PathsCommand::Dyck2 { matching, path } => match (matching, path) {
            (Some(m), None) => {
                let m = partition(m)?;
                let d = dyck_from_matching_k2(&m)?;
                Ok(Output::keys(&[("matching", m.to_string()), ("path", d.to_string())], json!({"matching": m.to_string(), "path": d})))
            }
            (None, Some(p)) => {
                let d = lattice_path(p)?;
                let m = matching_from_dyck_k2(&d)?;
                Ok(Output::keys(&[("path", d.to_string()), ("matching", m.to_string())], json!({"path": d, "matching": m.to_string()})))
            }
            _ => bail!("give exactly one of --matching and --path"),
        },
        PathsCommand::Dyck3 { matching, paths } => match (matching, paths) {
            (Some(m), None) => {
                let m = partition(m)?;
                let (p, q) = dyck_pair_from_matching_k3(&m)?;
                Ok(Output::keys(
                    &[("matching", m.to_string()), ("upper", p.to_string()), ("lower", q.to_string())],
                    json!({"matching": m.to_string(), "upper": p, "lower": q}),
                ))
            }
            (None, Some(pair)) => {
                let (p, q) = (lattice_path(&pair[0])?, lattice_path(&pair[1])?);
                let m = matching_from_dyck_pair_k3(&p, &q)?;
                Ok(Output::keys(
                    &[("upper", p.to_string()), ("lower", q.to_string()), ("matching", m.to_string())],
                    json!({"upper": p, "lower": q, "matching": m.to_string()}),
                ))
            }
            _ => bail!("give exactly one of --matching and --paths"),
        },
    }
}

fn verify_cmd(args: &VerifyArgs, timestamps: bool) -> Result<Output> {
    let suite = match args.suite.as_str() {
        "all" => None,
        name => Some(name.parse::<Suite>().map_err(UsageError)?),
    };
    let reports = verify::run(suite);
    let mut text = String::new();
    let mut csv = String::from("criterion,suite,check,passed,detail\n");
    for r in &reports {
        let failed = r.checks.iter().filter(|c| !c.passed).count();
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        write!(text, "criterion {:>2} {:<10} {verdict} ({} checks, {failed} failed)", r.criterion, r.suite, r.checks.len()).unwrap();
        if timestamps {
            write!(text, " {:.2}s", r.seconds).unwrap();
        }
        text.push('\n');
        for c in r.checks.iter().filter(|c| args.verbose || !c.passed) {
            writeln!(text, "    {} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail).unwrap();
        }
        for c in &r.checks {
            writeln!(csv, "{},{},{},{},{}", r.criterion, r.suite, csv_field(&c.name), c.passed, csv_field(&c.detail)).unwrap();
        }
    }
    let mut json = serde_json::to_value(&reports)?;
    if !timestamps {
        for r in json.as_array_mut().expect("array of reports") {
            r.as_object_mut().expect("report object").remove("seconds");
        }
    }
    let mut out = Output::new(json, text, csv);
    out.ok = reports.iter().all(|r| r.passed);
    Ok(out)
}

/// A bad argument detected after parsing; reported with exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn run(cli: &Cli) -> Result<Output> {
    let mut cache = if cli.no_cache {
        Cache::disabled()
    } else {
        Cache::open(&cli.cache.clone().unwrap_or_else(cache::default_path))?
    };
    let out = match &cli.command {
        Command::Bijection(a) => bijection(a)?,
        Command::Stats(a) => stats_cmd(a)?,
        Command::Table(a) => table(a)?,
        Command::Walks(a) => walks(a, &mut cache)?,
        Command::Charpoly(a) => charpoly(a)?,
        Command::Rank(a) => rank(a)?,
        Command::Gkj(a) => gkj(a, &mut cache)?,
        Command::Fk(a) => fk(a, &mut cache)?,
        Command::Paths(a) => paths(a)?,
        Command::Verify(a) => verify_cmd(a, cli.timestamps)?,
    };
    cache.save()?;
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json value")),
                Format::Csv => print!("{}", out.csv),
                Format::Text => print!("{}", out.text),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
