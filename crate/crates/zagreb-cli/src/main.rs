use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use zagreb::checks::{audit_results, run_suite, CheckContext, CheckResult};
use zagreb::classify::classify;
use zagreb::exact::{decimal, display, to_f64};
use zagreb::fullerene::{
    correlate, linear_regression, parse_label_value_csv, parse_spiral_file, report_from_rotations,
    report_from_spiral, CageReport,
};
use zagreb::generators::{self, CorpusSpec};
use zagreb::graph::Graph;
use zagreb::invariants::invariant_report;
use zagreb::spectral::{spectral_radius_with, DEFAULT_MAX_ITER, DEFAULT_TOL};

#[derive(Parser)]
#[command(
    name = "zagreb",
    version,
    about = "Degree-based graph indices, irregularity checks, and cage duals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute index values for edge-list files
    Invariants(InvariantsArgs),
    /// Classify graphs into degree-regularity families
    Classify(ClassifyArgs),
    /// Run the full check suite and its equality audit
    Verify(VerifyArgs),
    /// Emit a graph family as an edge list
    Generate(GenerateArgs),
    /// Analyze cage duals given face spirals or embeddings
    Fullerene(FullereneArgs),
    /// Regress one labeled value series on another
    Correlate(CorrelateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Args)]
struct InvariantsArgs {
    /// Edge-list files, one graph per file
    #[arg(required = true)]
    files: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Spectral iteration tolerance
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(required = true)]
    files: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Extra edge-list files to include in the run
    files: Vec<PathBuf>,
    /// Number of random connected graphs to add
    #[arg(long, default_value_t = 200)]
    corpus_random: usize,
    /// Smallest random graph order
    #[arg(long, default_value_t = 3)]
    corpus_n_min: usize,
    /// Largest random graph order
    #[arg(long, default_value_t = 24)]
    corpus_n_max: usize,
    /// Seed for the random part of the corpus
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Skip the deterministic family corpus
    #[arg(long)]
    no_families: bool,
    /// Spectral iteration tolerance
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Write the per-check audit as CSV
    #[arg(long)]
    out: Option<PathBuf>,
    /// Flip one verdict to exercise the failure path
    #[arg(long, hide = true)]
    inject_defect: bool,
}

#[derive(Args)]
struct GenerateArgs {
    /// cycle, path, complete, star, kbip, wheel, csplit, kmulti, dendrimer, rregular, random
    family: String,
    /// Numeric parameters of the family
    params: Vec<usize>,
    /// Seed for the randomized families
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FullereneArgs {
    /// File of `label k p1 ... p12` face spirals
    #[arg(long)]
    spirals: Option<PathBuf>,
    /// Rotation-system files, one cage per file
    #[arg(long)]
    embeddings: Vec<PathBuf>,
    /// Labeled energy CSV to correlate against
    #[arg(long)]
    energies: Option<PathBuf>,
    /// Write the per-cage report as CSV
    #[arg(long)]
    out: Option<PathBuf>,
    /// Directory for scatter CSVs
    #[arg(long)]
    scatter_dir: Option<PathBuf>,
}

#[derive(Args)]
struct CorrelateArgs {
    /// CSV of label,index rows
    index: PathBuf,
    /// CSV of label,response rows
    response: PathBuf,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run() -> Result<ExitCode> {
    match Cli::parse().command {
        Command::Invariants(args) => cmd_invariants(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Fullerene(args) => cmd_fullerene(args),
        Command::Correlate(args) => cmd_correlate(args),
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn file_label(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, content)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{content}"),
    }
    Ok(())
}

fn cmd_invariants(args: InvariantsArgs) -> Result<ExitCode> {
    let mut text = String::new();
    if args.format == Format::Csv {
        text.push_str(
            "graph,n,m,dmin,dmax,m1,m2,forgotten,s5,albertson,irl,dtqd,x3,irf,irm,var,harmonic,sum_connectivity,rho\n",
        );
    }
    for path in &args.files {
        let graph = read_graph(path)?;
        let r = invariant_report(&graph);
        let rho = spectral_radius_with(&graph, args.tol, DEFAULT_MAX_ITER);
        match args.format {
            Format::Text => {
                writeln!(
                    text,
                    "{}: n={} m={} degrees {}..{}",
                    file_label(path),
                    r.n,
                    r.m,
                    r.min_degree,
                    r.max_degree
                )?;
                writeln!(text, "  M1 = {}   M2 = {}   F = {}", r.m1, r.m2, r.forgotten)?;
                writeln!(
                    text,
                    "  F + 2*M2 = {}   X(3) = {}   S5 = {}",
                    r.dtqd, r.x3, r.degree_power_sum_5
                )?;
                writeln!(
                    text,
                    "  Irr = {}   IRL = {}   IRF = {}   IRM = {}   VAR = {}",
                    r.albertson,
                    r.irl,
                    display(&r.irf),
                    display(&r.irm),
                    display(&r.var)
                )?;
                writeln!(
                    text,
                    "  H = {}   X = {:.12}",
                    display(&r.harmonic),
                    r.sum_connectivity
                )?;
                for (alpha, value) in &r.general_sum_connectivity {
                    writeln!(text, "  X({alpha}) = {value:.12}")?;
                }
                for (lambda, value) in &r.variable_second_zagreb {
                    writeln!(text, "  M2[{lambda}] = {}", display(value))?;
                }
                match &rho {
                    Ok(s) => writeln!(
                        text,
                        "  rho = {:.12} ({} iterations, residual {:.3e})",
                        s.rho, s.iterations, s.residual
                    )?,
                    Err(e) => writeln!(text, "  rho: {e}")?,
                }
            }
            Format::Csv => {
                writeln!(
                    text,
                    "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{:.12},{}",
                    file_label(path),
                    r.n,
                    r.m,
                    r.min_degree,
                    r.max_degree,
                    r.m1,
                    r.m2,
                    r.forgotten,
                    r.degree_power_sum_5,
                    r.albertson,
                    r.irl,
                    r.dtqd,
                    r.x3,
                    display(&r.irf),
                    display(&r.irm),
                    display(&r.var),
                    display(&r.harmonic),
                    r.sum_connectivity,
                    rho.map(|s| format!("{:.12}", s.rho)).unwrap_or_default()
                )?;
            }
        }
    }
    emit(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(args: ClassifyArgs) -> Result<ExitCode> {
    let mut text = String::new();
    if args.format == Format::Csv {
        text.push_str("graph,degree_spread,tags\n");
    }
    for path in &args.files {
        let graph = read_graph(path)?;
        let c = classify(&graph);
        let tags = c.tags().join(match args.format {
            Format::Text => ", ",
            Format::Csv => ";",
        });
        match args.format {
            Format::Text => writeln!(text, "{}: {}", file_label(path), tags)?,
            Format::Csv => writeln!(text, "{},{},{}", file_label(path), c.degree_spread, tags)?,
        }
    }
    emit(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn results_csv(results: &[CheckResult]) -> String {
    let mut text = String::from("graph-id,check-id,lhs,rhs,slack,holds,equality,expected-equality,applicable\n");
    for r in results {
        let (lhs, rhs, slack) = if r.applicable {
            (r.lhs.to_string(), r.rhs.to_string(), r.slack.to_string())
        } else {
            (String::new(), String::new(), String::new())
        };
        writeln!(
            text,
            "{},{},{},{},{},{},{},{},{}",
            r.graph_label, r.check_id, lhs, rhs, slack, r.holds, r.equality, r.expected_equality, r.applicable
        )
        .unwrap();
    }
    text
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for path in &args.files {
        graphs.push((file_label(path), read_graph(path)?));
    }
    let mut spec = CorpusSpec::verification(args.corpus_random, args.seed);
    spec.n_min = args.corpus_n_min;
    spec.n_max = args.corpus_n_max;
    if args.no_families {
        spec.families.clear();
    }
    graphs.extend(generators::generate_corpus(&spec));
    if graphs.is_empty() {
        bail!("nothing to verify: no files given and the corpus is empty");
    }

    let mut results: Vec<CheckResult> = Vec::new();
    for (label, graph) in &graphs {
        let ctx = CheckContext::with_options(label.clone(), graph, args.tol, DEFAULT_MAX_ITER);
        results.extend(run_suite(&ctx));
    }
    if args.inject_defect {
        if let Some(r) = results.iter_mut().find(|r| r.applicable) {
            r.holds = !r.holds;
            eprintln!(
                "note: verdict for {} on {} inverted by --inject-defect",
                r.check_id, r.graph_label
            );
        }
    }

    let audits = audit_results(&results);
    let applicable = results.iter().filter(|r| r.applicable).count();
    let mut relation_failures = 0usize;
    let mut sufficiency_violations = 0usize;
    let mut necessity_violations = 0usize;
    let mut detail = String::new();
    for a in &audits {
        relation_failures += a.violations_of_relation.len();
        sufficiency_violations += a.sufficiency_violations.len();
        necessity_violations += a.necessity_violations.len();
        for g in a.violations_of_relation.iter().take(5) {
            writeln!(detail, "  {} does not hold on {}", a.check_id, g)?;
        }
        for g in a.sufficiency_violations.iter().take(5) {
            writeln!(
                detail,
                "  {} misses equality on {} ({} graph)",
                a.check_id, g, a.class
            )?;
        }
        for g in a.necessity_violations.iter().take(5) {
            writeln!(
                detail,
                "  {} unexpectedly tight on {} (outside {})",
                a.check_id, g, a.class
            )?;
        }
    }

    println!(
        "graphs: {}   results: {}   applicable: {}",
        graphs.len(),
        results.len(),
        applicable
    );
    println!("relation failures: {relation_failures}");
    println!("equality sufficiency violations: {sufficiency_violations}");
    println!("equality necessity violations: {necessity_violations}");
    print!("{detail}");

    if let Some(path) = &args.out {
        fs::write(path, results_csv(&results))
            .with_context(|| format!("writing {}", path.display()))?;
        println!("audit written to {}", path.display());
    }

    if relation_failures > 0 || sufficiency_violations > 0 {
        Ok(ExitCode::FAILURE)
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_generate(args: GenerateArgs) -> Result<ExitCode> {
    let p = &args.params;
    let need = |count: usize| -> Result<()> {
        if p.len() == count {
            Ok(())
        } else {
            bail!(
                "family {} takes {} parameter{}, got {}",
                args.family,
                count,
                if count == 1 { "" } else { "s" },
                p.len()
            )
        }
    };
    let graph = match args.family.as_str() {
        "cycle" => {
            need(1)?;
            generators::cycle(p[0])?
        }
        "path" => {
            need(1)?;
            generators::path(p[0])?
        }
        "complete" => {
            need(1)?;
            generators::complete(p[0])?
        }
        "star" => {
            need(1)?;
            generators::star(p[0])?
        }
        "kbip" => {
            need(2)?;
            generators::complete_bipartite(p[0], p[1])?
        }
        "wheel" => {
            need(1)?;
            generators::wheel(p[0])?
        }
        "csplit" => {
            need(2)?;
            generators::complete_split(p[0], p[1])?
        }
        "kmulti" => {
            if p.is_empty() {
                bail!("family kmulti takes at least one part size");
            }
            generators::complete_multipartite(p)?
        }
        "dendrimer" => {
            need(1)?;
            generators::dendrimer(p[0])?
        }
        "rregular" => {
            need(2)?;
            generators::random_regular(p[0], p[1], args.seed)?
        }
        "random" => {
            need(2)?;
            generators::random_connected(p[0], p[1], args.seed)?
        }
        other => bail!("unknown family {other:?}"),
    };
    let mut text = format!(
        "# {} {}\n",
        args.family,
        p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
    );
    text.push_str(&graph.to_edge_list());
    emit(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn scatter_csv(header: &str, rows: &[(String, f64, f64)]) -> String {
    let pairs: Vec<(f64, f64)> = rows.iter().map(|r| (r.1, r.2)).collect();
    let mut text = String::new();
    match linear_regression(&pairs) {
        Ok(reg) => {
            writeln!(
                text,
                "# regression: slope={} intercept={} r2={} pairs={}",
                reg.slope, reg.intercept, reg.r_squared, reg.count
            )
            .unwrap();
        }
        Err(e) => writeln!(text, "# regression unavailable: {e}").unwrap(),
    }
    writeln!(text, "{header}").unwrap();
    for (label, x, y) in rows {
        writeln!(text, "{label},{x},{y}").unwrap();
    }
    text
}

fn cmd_fullerene(args: FullereneArgs) -> Result<ExitCode> {
    let mut reports: Vec<CageReport> = Vec::new();
    if let Some(path) = &args.spirals {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let lines =
            parse_spiral_file(&text).with_context(|| format!("parsing {}", path.display()))?;
        for line in &lines {
            reports.push(
                report_from_spiral(line).with_context(|| format!("spiral {:?}", line.label))?,
            );
        }
    }
    for path in &args.embeddings {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        reports.push(
            report_from_rotations(file_label(path), &text)
                .with_context(|| format!("embedding {}", path.display()))?,
        );
    }
    if reports.is_empty() {
        bail!("no cages given: pass --spirals and/or --embeddings");
    }

    let mut csv =
        String::from("label,k,np,irld,irmd_exact,irmd_3dp,eq16,eq17,eq18\n");
    for r in &reports {
        writeln!(
            csv,
            "{},{},{},{},{},{},{},{},{}",
            r.label,
            r.k,
            r.np,
            r.irld,
            display(&r.irmd),
            decimal(&r.irmd, 3),
            r.irl_closed_form,
            r.irm_closed_form,
            r.irm_decomposition
        )?;
    }

    for r in &reports {
        println!(
            "{}: k={} faces={} np={} irld={} irmd={} ({}){}",
            r.label,
            r.k,
            r.n,
            r.np,
            r.irld,
            display(&r.irmd),
            decimal(&r.irmd, 3),
            if r.irl_closed_form && r.irm_closed_form && r.irm_decomposition {
                ""
            } else {
                "  [closed-form mismatch]"
            }
        );
    }
    if let Some(path) = &args.out {
        fs::write(path, &csv).with_context(|| format!("writing {}", path.display()))?;
        println!("report written to {}", path.display());
    }

    if let Some(dir) = &args.scatter_dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let rows: Vec<(String, f64, f64)> = reports
            .iter()
            .map(|r| (r.label.clone(), r.irld as f64, to_f64(&r.irmd)))
            .collect();
        let path = dir.join("irld-vs-irmd.csv");
        fs::write(&path, scatter_csv("label,irld,irmd", &rows))
            .with_context(|| format!("writing {}", path.display()))?;
        if let Some(energies) = &args.energies {
            let text = fs::read_to_string(energies)
                .with_context(|| format!("reading {}", energies.display()))?;
            let series = parse_label_value_csv(&text)
                .with_context(|| format!("parsing {}", energies.display()))?;
            let columns: [(&str, fn(&CageReport) -> f64); 2] = [
                ("irld", |r| r.irld as f64),
                ("irmd", |r| to_f64(&r.irmd)),
            ];
            for (name, value) in columns {
                let rows: Vec<(String, f64, f64)> = reports
                    .iter()
                    .filter_map(|r| {
                        series
                            .iter()
                            .find(|(label, _)| label == &r.label)
                            .map(|(_, e)| (r.label.clone(), value(r), *e))
                    })
                    .collect();
                let path = dir.join(format!("{name}-vs-energy.csv"));
                fs::write(&path, scatter_csv(&format!("label,{name},energy"), &rows))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
        }
        println!("scatter files written to {}", dir.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_correlate(args: CorrelateArgs) -> Result<ExitCode> {
    let index_text = fs::read_to_string(&args.index)
        .with_context(|| format!("reading {}", args.index.display()))?;
    let response_text = fs::read_to_string(&args.response)
        .with_context(|| format!("reading {}", args.response.display()))?;
    let index = parse_label_value_csv(&index_text)
        .with_context(|| format!("parsing {}", args.index.display()))?;
    let response = parse_label_value_csv(&response_text)
        .with_context(|| format!("parsing {}", args.response.display()))?;
    let reg = correlate(&index, &response)?;
    println!("pairs = {}", reg.count);
    println!("slope = {}", reg.slope);
    println!("intercept = {}", reg.intercept);
    println!("r2 = {}", reg.r_squared);
    Ok(ExitCode::SUCCESS)
}
