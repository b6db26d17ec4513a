use degix_core::error::TheoremError;
use degix_core::families::FamilyKind;
use degix_core::graph::{degree_stats, edge_degree_census, graph6_encode, Graph, Vertex};
use degix_core::indices::{abc_index, compare_ga_abc, ga_index};
use degix_core::line_graph::{is_line_graph, line_graph, LineGraphViolation};
use degix_core::par::{self, Execution};
use degix_core::search::{self, Predicate, ScanRow, ScanResult, SweepRow};
use degix_core::theorems::{self, SandwichCheck, TheoremId, TheoremReport, TheoremStatus};
use degix_core::{CertifiedValue, Sign};
use serde::Serialize;

use crate::input::{self, Loaded};
use crate::output::{json, opt, value_cols, value_header, Csv, Format};
use crate::{Cli, CliError, Command, Rendered};

const EXEC: Execution = Execution::Parallel;

pub fn run(cli: &Cli) -> Result<Rendered, CliError> {
    let p = cli.precision;
    match &cli.command {
        Command::Compute(src) => per_graph(cli, "compute", &input::load(src)?, |g| Ok(compute(g, p)), COMPUTE_HEADER, compute_csv),
        Command::Census(src) => per_graph(cli, "census", &input::load(src)?, |g| Ok(census(g)), CENSUS_HEADER, census_csv),
        Command::Linegraph(src) => linegraph_cmd(cli, &input::load(src)?),
        Command::Recognize(src) => {
            per_graph(cli, "recognize", &input::load(src)?, |g| Ok(recognize(g)), RECOGNIZE_HEADER, recognize_csv)
        }
        Command::Sandwich(src) => sandwich_cmd(cli, &input::load(src)?),
        Command::Verify { source, theorem } => {
            let id: TheoremId = theorem.parse().map_err(|e: String| CliError::Usage(e))?;
            verify_cmd(cli, id, &input::load(source)?)
        }
        Command::Family { family } => family_cmd(cli, family),
        Command::Crossover { range } => crossover_cmd(cli, range),
        Command::Enumerate { max_n, trees } => enumerate_cmd(cli, *max_n, *trees),
        Command::Conjecture { max_n, trees_max_n, g6 } => conjecture_cmd(cli, *max_n, *trees_max_n, g6.as_deref()),
        Command::Sweep { family, range, theorem } => sweep_cmd(cli, family, range, theorem.as_deref()),
    }
}

fn no_g6(cli: &Cli, verb: &str) -> Result<(), CliError> {
    if cli.format == Format::G6 {
        return Err(CliError::Usage(format!("--format g6 is not available for `{verb}`")));
    }
    Ok(())
}

/// Per-graph output: the value, or why the verb does not apply to this graph.
#[derive(Serialize)]
#[serde(untagged)]
enum Entry<T> {
    Ok(T),
    Err { graph6: String, error: String },
}

/// Evaluates `f` on every loaded graph. A single graph renders as one object,
/// a graph6 stream as an array sorted by graph6. CSV rows carry a trailing
/// `error` column; `header[0]` must be `graph6`.
fn per_graph<T, F>(
    cli: &Cli,
    verb: &str,
    loaded: &Loaded,
    f: F,
    header: &[&str],
    cols: fn(&T) -> Vec<Vec<String>>,
) -> Result<Rendered, CliError>
where
    T: Serialize + Send,
    F: Fn(&Graph) -> Result<T, String> + Sync + Send,
{
    no_g6(cli, verb)?;
    let entries = evaluate(loaded, f);
    render_entries(cli, verb, loaded.single, entries, header, cols).map(Rendered::ok)
}

fn evaluate<T, F>(loaded: &Loaded, f: F) -> Vec<Entry<T>>
where
    T: Send,
    F: Fn(&Graph) -> Result<T, String> + Sync + Send,
{
    let mut keyed: Vec<(String, Entry<T>)> = par::map(&loaded.graphs, EXEC, |g| {
        let g6 = graph6_encode(g);
        let entry = match f(g) {
            Ok(v) => Entry::Ok(v),
            Err(error) => Entry::Err { graph6: g6.clone(), error },
        };
        (g6, entry)
    });
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, e)| e).collect()
}

fn render_entries<T: Serialize>(
    cli: &Cli,
    verb: &str,
    single: bool,
    entries: Vec<Entry<T>>,
    header: &[&str],
    cols: fn(&T) -> Vec<Vec<String>>,
) -> Result<String, CliError> {
    match cli.format {
        Format::Csv => {
            let mut csv = Csv::new(verb, header.iter().copied().chain(["error"]));
            for e in &entries {
                match e {
                    Entry::Ok(v) => {
                        for mut r in cols(v) {
                            r.push(String::new());
                            csv.row(r);
                        }
                    }
                    Entry::Err { graph6, error } => {
                        let mut r = vec![String::new(); header.len() + 1];
                        r[0] = graph6.clone();
                        r[header.len()] = error.clone();
                        csv.row(r);
                    }
                }
            }
            csv.finish()
        }
        _ if single && entries.len() == 1 => json(&entries[0]),
        _ => json(&entries),
    }
}

// compute

#[derive(Serialize)]
struct ComputeRow {
    graph6: String,
    n: usize,
    m: usize,
    ga: CertifiedValue,
    abc: CertifiedValue,
    gap: CertifiedValue,
    verdict: Sign,
    precision_used: u32,
}

const COMPUTE_HEADER: &[&str] = &[
    "graph6", "n", "m", "ga_lo", "ga_hi", "ga_mid", "abc_lo", "abc_hi", "abc_mid", "gap_lo", "gap_hi", "gap_mid", "verdict",
    "precision_used",
];

fn compute(g: &Graph, max_precision: u32) -> ComputeRow {
    let v = compare_ga_abc(g, max_precision);
    ComputeRow {
        graph6: graph6_encode(g),
        n: g.order(),
        m: g.size(),
        ga: ga_index(g, v.precision_used),
        abc: abc_index(g, v.precision_used),
        gap: v.gap,
        verdict: v.sign,
        precision_used: v.precision_used,
    }
}

fn compute_csv(r: &ComputeRow) -> Vec<Vec<String>> {
    let mut row = vec![r.graph6.clone(), r.n.to_string(), r.m.to_string()];
    row.extend(value_cols(&r.ga));
    row.extend(value_cols(&r.abc));
    row.extend(value_cols(&r.gap));
    row.push(r.verdict.to_string());
    row.push(r.precision_used.to_string());
    vec![row]
}

// census

#[derive(Serialize)]
struct CensusEntry {
    a: usize,
    b: usize,
    count: usize,
}

#[derive(Serialize)]
struct CensusRow {
    graph6: String,
    n: usize,
    m: usize,
    delta_max: usize,
    delta_min: usize,
    delta_min_nonpendant: Option<usize>,
    pendant_count: usize,
    census: Vec<CensusEntry>,
}

const CENSUS_HEADER: &[&str] = &["graph6", "n", "m", "a", "b", "count"];

fn census(g: &Graph) -> CensusRow {
    let st = degree_stats(g);
    CensusRow {
        graph6: graph6_encode(g),
        n: g.order(),
        m: g.size(),
        delta_max: st.delta_max,
        delta_min: st.delta_min,
        delta_min_nonpendant: st.delta_min_nonpendant,
        pendant_count: st.pendant_count,
        census: edge_degree_census(g).iter().map(|((a, b), count)| CensusEntry { a, b, count }).collect(),
    }
}

fn census_csv(r: &CensusRow) -> Vec<Vec<String>> {
    r.census
        .iter()
        .map(|c| {
            vec![r.graph6.clone(), r.n.to_string(), r.m.to_string(), c.a.to_string(), c.b.to_string(), c.count.to_string()]
        })
        .collect()
}

// linegraph

#[derive(Serialize)]
struct LineGraphRow {
    graph6: String,
    line_graph6: String,
    line_n: usize,
    line_m: usize,
}

const LINEGRAPH_HEADER: &[&str] = &["graph6", "line_graph6", "line_n", "line_m"];

fn linegraph_cmd(cli: &Cli, loaded: &Loaded) -> Result<Rendered, CliError> {
    let entries = evaluate(loaded, |g| {
        let l = line_graph(g).map_err(|e| e.to_string())?;
        Ok(LineGraphRow { graph6: graph6_encode(g), line_graph6: graph6_encode(&l), line_n: l.order(), line_m: l.size() })
    });
    if cli.format == Format::G6 {
        let mut out = String::new();
        for e in &entries {
            match e {
                Entry::Ok(r) => {
                    out.push_str(&r.line_graph6);
                    out.push('\n');
                }
                Entry::Err { graph6, error } => return Err(CliError::Failed(format!("{graph6}: {error}"))),
            }
        }
        return Ok(Rendered::ok(out));
    }
    let cols = |r: &LineGraphRow| vec![vec![r.graph6.clone(), r.line_graph6.clone(), r.line_n.to_string(), r.line_m.to_string()]];
    render_entries(cli, "linegraph", loaded.single, entries, LINEGRAPH_HEADER, cols).map(Rendered::ok)
}

// recognize

#[derive(Serialize)]
struct RecognizeRow {
    graph6: String,
    is_line_graph: bool,
    violation: Option<LineGraphViolation>,
}

const RECOGNIZE_HEADER: &[&str] = &["graph6", "is_line_graph", "violation", "witness"];

fn recognize(g: &Graph) -> RecognizeRow {
    let c = is_line_graph(g);
    RecognizeRow { graph6: graph6_encode(g), is_line_graph: c.is_line_graph, violation: c.violation }
}

fn vertex_list(vs: &[Vertex]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn recognize_csv(r: &RecognizeRow) -> Vec<Vec<String>> {
    let (kind, witness) = match &r.violation {
        Some(v @ LineGraphViolation::Claw { .. }) => ("claw", vertex_list(&v.vertices())),
        Some(v @ LineGraphViolation::OddTrianglePair { .. }) => ("odd_triangle_pair", vertex_list(&v.vertices())),
        None => ("", String::new()),
    };
    vec![vec![r.graph6.clone(), r.is_line_graph.to_string(), kind.to_string(), witness]]
}

// sandwich

#[derive(Serialize)]
struct SandwichRow {
    graph6: String,
    #[serde(flatten)]
    check: SandwichCheck,
    bounds_hold: bool,
    equality_cases_match: bool,
}

const SANDWICH_HEADER: &[&str] = &[
    "graph6",
    "left",
    "right",
    "left_margin_lo",
    "left_margin_hi",
    "left_margin_mid",
    "right_margin_lo",
    "right_margin_hi",
    "right_margin_mid",
    "is_complete",
    "is_c3",
    "bounds_hold",
    "equality_cases_match",
];

fn sandwich_cmd(cli: &Cli, loaded: &Loaded) -> Result<Rendered, CliError> {
    no_g6(cli, "sandwich")?;
    let p = cli.precision;
    let entries = evaluate(loaded, |g| {
        let check = theorems::check_sandwich(g, p).map_err(|e| e.to_string())?;
        Ok(SandwichRow {
            graph6: graph6_encode(g),
            bounds_hold: check.bounds_hold(),
            equality_cases_match: check.equality_cases_match(),
            check,
        })
    });
    let broken: Vec<&str> = entries
        .iter()
        .filter_map(|e| match e {
            Entry::Ok(r) if !r.bounds_hold => Some(r.graph6.as_str()),
            _ => None,
        })
        .collect();
    let inconsistency = (!broken.is_empty()).then(|| format!("sandwich bound violated on {}", broken.join(", ")));
    let cols = |r: &SandwichRow| {
        let c = &r.check;
        let mut row = vec![r.graph6.clone(), format!("{:?}", c.left).to_uppercase(), format!("{:?}", c.right).to_uppercase()];
        row.extend(value_cols(&c.left_margin));
        row.extend(value_cols(&c.right_margin));
        row.extend([c.is_complete, c.is_c3, r.bounds_hold, r.equality_cases_match].map(|b| b.to_string()));
        vec![row]
    };
    let text = render_entries(cli, "sandwich", loaded.single, entries, SANDWICH_HEADER, cols)?;
    Ok(Rendered { text, inconsistency })
}

// verify

/// A verify row: the full report, or the precondition that kept the theorem
/// from being evaluated.
#[derive(Serialize)]
#[serde(untagged)]
enum VerifyEntry {
    Report(Box<TheoremReport>),
    Precondition { theorem: TheoremId, graph6: String, status: &'static str, error: String },
}

const VERIFY_HEADER: &[&str] = &[
    "graph6",
    "theorem",
    "evaluated_graph6",
    "hypothesis_holds",
    "failed_clauses",
    "verdict",
    "gap_lo",
    "gap_hi",
    "precision",
    "status",
    "error",
];

fn verify_cmd(cli: &Cli, id: TheoremId, loaded: &Loaded) -> Result<Rendered, CliError> {
    no_g6(cli, "verify")?;
    let results = search::theorem_sweep(id, &loaded.graphs, cli.precision, EXEC);
    let mut entries = Vec::with_capacity(results.len());
    for (g, r) in loaded.graphs.iter().zip(results) {
        entries.push(match r {
            Ok(report) => VerifyEntry::Report(Box::new(report)),
            Err(TheoremError::Precondition { reason, .. }) => VerifyEntry::Precondition {
                theorem: id,
                graph6: graph6_encode(g),
                status: "PRECONDITION_FAILED",
                error: reason,
            },
            Err(e) => return Err(CliError::Failed(format!("{}: {e}", graph6_encode(g)))),
        });
    }
    let key = |e: &VerifyEntry| match e {
        VerifyEntry::Report(r) => r.graph6.clone(),
        VerifyEntry::Precondition { graph6, .. } => graph6.clone(),
    };
    entries.sort_by_cached_key(key);

    let violated: Vec<&str> = entries
        .iter()
        .filter_map(|e| match e {
            VerifyEntry::Report(r) if !r.consistent() => Some(r.graph6.as_str()),
            _ => None,
        })
        .collect();
    let inconsistency = (!violated.is_empty()).then(|| format!("{id} violated on {}", violated.join(", ")));

    let text = match cli.format {
        Format::Csv => {
            let mut csv = Csv::new("verify", VERIFY_HEADER);
            for e in &entries {
                match e {
                    VerifyEntry::Report(r) => {
                        let failed: Vec<&str> = r.hypothesis.clauses.iter().filter(|c| !c.holds).map(|c| c.name).collect();
                        let (lo, hi) = r.verdict.gap.bounds_f64();
                        csv.row([
                            r.graph6.clone(),
                            id.to_string(),
                            opt(r.evaluated_graph6.as_ref()),
                            r.hypothesis_holds().to_string(),
                            failed.join(";"),
                            r.verdict.sign.to_string(),
                            lo.to_string(),
                            hi.to_string(),
                            r.verdict.precision_used.to_string(),
                            r.status.as_str().to_string(),
                            String::new(),
                        ]);
                    }
                    VerifyEntry::Precondition { graph6, status, error, .. } => {
                        let mut row = vec![String::new(); VERIFY_HEADER.len()];
                        row[0] = graph6.clone();
                        row[1] = id.to_string();
                        row[9] = status.to_string();
                        row[10] = error.clone();
                        csv.row(row);
                    }
                }
            }
            csv.finish()?
        }
        _ if loaded.single && entries.len() == 1 => json(&entries[0])?,
        _ => json(&entries)?,
    };
    Ok(Rendered { text, inconsistency })
}

// family

#[derive(Serialize)]
struct FamilyOut {
    family: String,
    graph6: String,
    n: usize,
    m: usize,
    edges: Vec<(Vertex, Vertex)>,
}

fn family_cmd(cli: &Cli, spec: &str) -> Result<Rendered, CliError> {
    let (spec, g) = input::family(spec)?;
    let out = FamilyOut { family: spec.to_string(), graph6: graph6_encode(&g), n: g.order(), m: g.size(), edges: g.edges().collect() };
    let text = match cli.format {
        Format::Json => json(&out)?,
        Format::G6 => format!("{}\n", out.graph6),
        Format::Csv => {
            let mut csv = Csv::new("family", ["family", "graph6", "n", "m"]);
            csv.row([out.family, out.graph6, out.n.to_string(), out.m.to_string()]);
            csv.finish()?
        }
    };
    Ok(Rendered::ok(text))
}

// crossover

fn crossover_cmd(cli: &Cli, range: &str) -> Result<Rendered, CliError> {
    no_g6(cli, "crossover")?;
    let r = input::range(range)?;
    let scan = theorems::crossover_scan_with(*r.start(), *r.end(), cli.precision, EXEC).map_err(|e| match e {
        TheoremError::Domain(d) => CliError::Usage(d.to_string()),
        other => CliError::Failed(other.to_string()),
    })?;
    let text = match cli.format {
        Format::Csv => {
            let mut csv = Csv::new("crossover", ["n", "sign"].into_iter().map(String::from).chain(value_header("gap")));
            csv.note("first_flip", opt(scan.first_flip));
            for row in &scan.rows {
                let mut rec = vec![row.n.to_string(), row.sign.to_string()];
                rec.extend(value_cols(&row.gap));
                csv.row(rec);
            }
            csv.finish()?
        }
        _ => json(&scan)?,
    };
    Ok(Rendered::ok(text))
}

// enumerate

#[derive(Serialize)]
struct OrderCount {
    n: usize,
    count: usize,
}

#[derive(Serialize)]
struct Listed {
    graph6: String,
    n: usize,
    m: usize,
}

#[derive(Serialize)]
struct EnumerateOut {
    kind: &'static str,
    max_n: usize,
    counts: Vec<OrderCount>,
    graphs: Vec<Listed>,
}

fn enumerate_orders(lo: usize, hi: usize, trees: bool) -> Result<Vec<Vec<Graph>>, CliError> {
    (lo..=hi)
        .map(|n| {
            let r = if trees { search::enumerate_trees_with(n, EXEC) } else { search::enumerate_connected_with(n, EXEC) };
            r.map_err(|e| CliError::Usage(e.to_string()))
        })
        .collect()
}

fn enumerate_cmd(cli: &Cli, max_n: usize, trees: bool) -> Result<Rendered, CliError> {
    let by_order = enumerate_orders(1, max_n, trees)?;
    let counts = by_order.iter().enumerate().map(|(i, gs)| OrderCount { n: i + 1, count: gs.len() }).collect();
    let mut graphs: Vec<Listed> =
        by_order.iter().flatten().map(|g| Listed { graph6: graph6_encode(g), n: g.order(), m: g.size() }).collect();
    graphs.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    let text = match cli.format {
        Format::G6 => graphs.iter().map(|l| format!("{}\n", l.graph6)).collect(),
        Format::Csv => {
            let mut csv = Csv::new("enumerate", ["graph6", "n", "m"]);
            for l in &graphs {
                csv.row([l.graph6.clone(), l.n.to_string(), l.m.to_string()]);
            }
            csv.finish()?
        }
        Format::Json => json(&EnumerateOut { kind: if trees { "trees" } else { "connected" }, max_n, counts, graphs })?,
    };
    Ok(Rendered::ok(text))
}

// conjecture

fn conjecture_cmd(
    cli: &Cli,
    max_n: usize,
    trees_max_n: Option<usize>,
    g6: Option<&std::path::Path>,
) -> Result<Rendered, CliError> {
    no_g6(cli, "conjecture")?;
    let graphs: Vec<Graph> = match g6 {
        Some(path) => input::graph6_file(path)?,
        None => {
            let mut gs: Vec<Graph> = enumerate_orders(1, max_n, false)?.into_iter().flatten().collect();
            if let Some(t) = trees_max_n {
                // Trees up to max_n are already among the connected graphs.
                gs.extend(enumerate_orders(max_n + 1, t, true)?.into_iter().flatten());
            }
            gs
        }
    };
    let (mut rows, skipped) = search::scan_rows(&graphs, cli.precision, EXEC);
    rows.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    let result = ScanResult::from_rows(&rows, skipped);
    if !result.indeterminates.is_empty() {
        eprintln!(
            "degix: {} graph(s) left indeterminate at {} bits; see `indeterminates`",
            result.indeterminates.len(),
            cli.precision
        );
    }
    let inconsistency =
        (!result.violations.is_empty()).then(|| format!("GA = ABC certified on {}", result.violations.join(", ")));
    let text = match cli.format {
        Format::Csv => conjecture_csv(&rows, &result)?,
        _ => json(&result)?,
    };
    Ok(Rendered { text, inconsistency })
}

fn conjecture_csv(rows: &[ScanRow], result: &ScanResult) -> Result<String, CliError> {
    let header = ["graph6", "n", "m", "sign"].into_iter().map(String::from).chain(value_header("gap"));
    let mut csv = Csv::new("conjecture", header);
    csv.note("graphs_scanned", result.graphs_scanned);
    csv.note("graphs_skipped", result.graphs_skipped);
    csv.note("min_abs_gap", opt(result.min_abs_gap.as_ref().map(|m| m.graph6.clone())));
    for r in rows {
        let mut rec = vec![r.graph6.clone(), r.n.to_string(), r.m.to_string(), r.sign.to_string()];
        rec.extend(value_cols(&r.gap));
        csv.row(rec);
    }
    csv.finish()
}

// sweep

fn sweep_cmd(cli: &Cli, family: &str, ranges: &[String], theorem: Option<&str>) -> Result<Rendered, CliError> {
    no_g6(cli, "sweep")?;
    let kind = FamilyKind::from_keyword(family).ok_or_else(|| CliError::Usage(format!("unknown family `{family}`")))?;
    let ranges = ranges.iter().map(|r| input::range(r)).collect::<Result<Vec<_>, _>>()?;
    let predicate = match theorem {
        Some(t) => Predicate::Theorem(t.parse().map_err(|e: String| CliError::Usage(e))?),
        None => Predicate::Compare,
    };
    let rows = search::sweep_family(kind, &ranges, predicate, cli.precision, EXEC);
    let bad: Vec<&str> = rows
        .iter()
        .filter(|r| r.is_violation() || (predicate == Predicate::Compare && r.sign == Some(Sign::Equal)))
        .map(|r| r.family.as_str())
        .collect();
    let inconsistency = (!bad.is_empty()).then(|| format!("sweep found a violation on {}", bad.join(", ")));
    let text = match cli.format {
        Format::Csv => sweep_csv(&rows)?,
        _ => json(&rows)?,
    };
    Ok(Rendered { text, inconsistency })
}

fn sweep_csv(rows: &[SweepRow]) -> Result<String, CliError> {
    let header = ["family", "params", "graph6", "hypothesis_holds", "failed_clauses", "sign"]
        .into_iter()
        .map(String::from)
        .chain(value_header("gap"))
        .chain(["status", "error"].map(String::from));
    let mut csv = Csv::new("sweep", header);
    for r in rows {
        let params: Vec<String> = r.params.iter().map(|p| p.to_string()).collect();
        let failed: Vec<&str> = r.clauses.iter().filter(|c| !c.holds).map(|c| c.name).collect();
        let mut rec = vec![
            r.family.clone(),
            params.join(" "),
            opt(r.graph6.as_ref()),
            opt(r.hypothesis_holds),
            failed.join(";"),
            opt(r.sign),
        ];
        match &r.gap {
            Some(g) => rec.extend(value_cols(g)),
            None => rec.extend([String::new(), String::new(), String::new()]),
        }
        rec.push(opt(r.status.map(TheoremStatus::as_str)));
        rec.push(opt(r.error.as_ref()));
        csv.row(rec);
    }
    csv.finish()
}
