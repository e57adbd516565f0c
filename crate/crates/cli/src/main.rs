use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kp3::enumerate::{verify_lemmas, verify_turan, LemmaSweep, VerificationReport};
use kp3::formula::{erdos_gallai_bound, ex_kp3, extremal_graphs, gorgol_lower_bounds, regime, Construction};
use kp3::graph6;
use kp3::packing::contains_k_p3;
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "kp3", version, about = "Turán numbers for disjoint copies of P3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the regime and the value of ex(n, k·P3).
    Value {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Print every extremal graph for (n, k).
    Construct {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Read one graph6 line and decide whether it contains k·P3.
    Pack {
        #[arg(long)]
        k: usize,
        /// A file path, or `-` for standard input.
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Check the closed form against every k·P3-free graph of order n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run the leftover-structure checkers over all graphs of order n.
    Lemmas {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the P3-free bound and both construction counts.
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

/// A finished command: what to print and how to exit.
struct Outcome {
    stdout: String,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }

    fn decided(stdout: String, yes: bool) -> Self {
        Outcome {
            stdout,
            code: if yes { 0 } else { 1 },
        }
    }
}

type Failure = Box<dyn std::error::Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Value { n, k } => Ok(Outcome::ok(format!("{} {}\n", regime(n, k)?, ex_kp3(n, k)?))),
        Command::Construct { n, k, format } => construct(n, k, format),
        Command::Pack { k, input } => pack(k, &input),
        Command::Verify { n, k, jobs, json } => verify(n, k, jobs, json),
        Command::Lemmas { n, k, json } => lemmas(n, k, json),
        Command::Bounds { n, k } => bounds(n, k),
    }
}

fn construct(n: u64, k: u64, format: Format) -> Result<Outcome, Failure> {
    let family = extremal_graphs(n, k)?;
    let blocks: Vec<String> = family
        .graphs
        .iter()
        .map(|g| match format {
            Format::Graph6 => graph6::encode_string(g),
            Format::Edgelist => g
                .edges()
                .map(|(u, v)| format!("{u} {v}"))
                .collect::<Vec<_>>()
                .join("\n"),
        })
        .collect();
    let sep = match format {
        Format::Graph6 => "\n",
        Format::Edgelist => "\n\n",
    };
    Ok(Outcome::ok(blocks.join(sep) + "\n"))
}

fn read_input(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(input).map_err(|e| format!("{input}: {e}").into())
    }
}

fn pack(k: usize, input: &str) -> Result<Outcome, Failure> {
    let text = read_input(input)?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or("no graph6 line in input")?;
    let g = graph6::decode(line.as_bytes())?;
    let c = contains_k_p3(&g, k);
    let mut out = String::from(if c.found { "yes\n" } else { "no\n" });
    for t in c.witness.iter().flat_map(|w| &w.triples) {
        writeln!(out, "{t}").unwrap();
    }
    Ok(Outcome::decided(out, c.found))
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    n: usize,
    k: usize,
    regime: &'a str,
    formula_value: u128,
    observed_max: usize,
    extremal_graph6: Vec<&'a str>,
    agree: bool,
    graphs_scanned: u64,
    elapsed_ms: u128,
}

fn verify(n: usize, k: usize, jobs: usize, json: bool) -> Result<Outcome, Failure> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let report = pool.install(|| verify_turan(n, k))?;
    let stdout = if json {
        verify_json(&report)? + "\n"
    } else {
        eprintln!("elapsed {:.3?}", report.elapsed);
        verify_text(&report)
    };
    Ok(Outcome::decided(stdout, report.agree))
}

fn sorted_graph6(report: &VerificationReport) -> Vec<&str> {
    let mut forms: Vec<&str> = report.extremal_forms.iter().map(|f| f.graph6()).collect();
    forms.sort_unstable();
    forms
}

fn verify_json(report: &VerificationReport) -> Result<String, Failure> {
    let doc = VerifyJson {
        n: report.n,
        k: report.k,
        regime: report.regime.name(),
        formula_value: report.formula_value,
        observed_max: report.observed_max,
        extremal_graph6: sorted_graph6(report),
        agree: report.agree,
        graphs_scanned: report.graphs_scanned,
        elapsed_ms: report.elapsed.as_millis(),
    };
    Ok(serde_json::to_string(&doc)?)
}

fn verify_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    writeln!(out, "n {} k {} regime {}", report.n, report.k, report.regime).unwrap();
    writeln!(out, "formula value  {}", report.formula_value).unwrap();
    writeln!(out, "observed max   {}", report.observed_max).unwrap();
    writeln!(out, "graphs scanned {}", report.graphs_scanned).unwrap();
    for g6 in sorted_graph6(report) {
        writeln!(out, "extremal {g6}").unwrap();
    }
    writeln!(out, "{}", if report.agree { "agree" } else { "DISAGREE" }).unwrap();
    out
}

#[derive(Serialize)]
struct LemmaViolationJson<'a> {
    graph6: &'a str,
    triple: usize,
    vertices: &'a [usize],
    observed: usize,
    allowed: usize,
}

#[derive(Serialize)]
struct LemmaSummaryJson<'a> {
    lemma: &'a str,
    checked: u64,
    skipped: u64,
    violations: Vec<LemmaViolationJson<'a>>,
}

#[derive(Serialize)]
struct LemmaJson<'a> {
    n: usize,
    k: usize,
    graphs_considered: u64,
    lemmas: Vec<LemmaSummaryJson<'a>>,
    shape_violations: Vec<&'a str>,
    violation_count: usize,
}

fn lemmas(n: usize, k: usize, json: bool) -> Result<Outcome, Failure> {
    let mut sweep = verify_lemmas(n, k)?;
    for s in &mut sweep.summaries {
        s.violations.sort();
    }
    sweep.shape_violations.sort();
    let stdout = if json {
        lemma_json(&sweep)? + "\n"
    } else {
        lemma_text(&sweep)
    };
    Ok(Outcome::decided(stdout, sweep.violation_count() == 0))
}

fn lemma_json(sweep: &LemmaSweep) -> Result<String, Failure> {
    let doc = LemmaJson {
        n: sweep.n,
        k: sweep.k,
        graphs_considered: sweep.graphs_considered,
        lemmas: sweep
            .summaries
            .iter()
            .map(|s| LemmaSummaryJson {
                lemma: s.lemma.name(),
                checked: s.checked,
                skipped: s.skipped,
                violations: s
                    .violations
                    .iter()
                    .map(|(g6, v)| LemmaViolationJson {
                        graph6: g6,
                        triple: v.triple,
                        vertices: &v.vertices,
                        observed: v.observed,
                        allowed: v.allowed,
                    })
                    .collect(),
            })
            .collect(),
        shape_violations: sweep.shape_violations.iter().map(String::as_str).collect(),
        violation_count: sweep.violation_count(),
    };
    Ok(serde_json::to_string(&doc)?)
}

fn lemma_text(sweep: &LemmaSweep) -> String {
    let mut out = String::new();
    writeln!(out, "n {} k {} graphs {}", sweep.n, sweep.k, sweep.graphs_considered).unwrap();
    for s in &sweep.summaries {
        writeln!(
            out,
            "{:<11} checked {} skipped {} violations {}",
            s.lemma.name(),
            s.checked,
            s.skipped,
            s.violations.len()
        )
        .unwrap();
        for (g6, v) in &s.violations {
            writeln!(
                out,
                "  {g6} path {} vertices {:?} edges {} > {}",
                v.triple, v.vertices, v.observed, v.allowed
            )
            .unwrap();
        }
    }
    for g6 in &sweep.shape_violations {
        writeln!(out, "bad leftover shape {g6}").unwrap();
    }
    writeln!(out, "violations {}", sweep.violation_count()).unwrap();
    out
}

fn bounds(n: u64, k: u64) -> Result<Outcome, Failure> {
    let (clique, hub) = gorgol_lower_bounds(n, k)?;
    let ex = ex_kp3(n, k)?;
    let clique_name = Construction::CliqueUnionMatching {
        clique: 3 * k - 1,
        matching: n - (3 * k - 1),
    };
    let hub_name = Construction::HubJoinMatching {
        hub: k - 1,
        matching: n - (k - 1),
    };
    let attained: Vec<&str> = [(clique, "clique"), (hub, "hub")]
        .iter()
        .filter(|&&(v, _)| v == ex)
        .map(|&(_, name)| name)
        .collect();
    let mut out = String::new();
    writeln!(out, "P3-free bound     {}", erdos_gallai_bound(n, 3)?).unwrap();
    writeln!(out, "{:<17} {clique}", clique_name.to_string()).unwrap();
    writeln!(out, "{:<17} {hub}", hub_name.to_string()).unwrap();
    writeln!(out, "ex                {ex}").unwrap();
    writeln!(out, "regime            {}", regime(n, k)?).unwrap();
    writeln!(out, "attained by       {}", attained.join(", ")).unwrap();
    Ok(Outcome::ok(out))
}
