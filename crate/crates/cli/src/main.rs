use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use oidrd::characterize;
use oidrd::family::FamilySpec;
use oidrd::formulas;
use oidrd::graph::corona;
use oidrd::harness::{self, AuditPlan, AuditReport};
use oidrd::reduction;
use oidrd::solver::{self, Invariant, SolveOptions};
use oidrd::Graph;

const SCHEMA: &str = "oidrd/1";

const INPUT_HELP: &str = "\
GRAPH INPUT
  Every GRAPH argument is a path to an edge-list file, `-` for standard
  input, or a family spec. Edge lists start with an `n m` header followed
  by m lines `u v` (0-based, `#` starts a comment).

FAMILY SPECS
  path:n  cycle:n  complete:n  empty:n  star:k  dstar:a,b
  kbipartite:m,n  kpartite:n1,..,nk  g1:k,l  g2:k  g3:k
  h1:[sub,]abc,ab,bc,b   h2:[sub,]abc,ab,bc,b   h3:[sub,]a,ab
  h4:[sub,]abc,ab   h5:[sub,]abc,ab   h6:[sub,]abc,ac
  sharpness:m1,..,mt   corona(SPEC,SPEC)   gadget(SPEC)

  dstar:a,b is the double star with a and b leaves on its two centers.
  g1..g3 and h1..h6 build the families with small values: in h-specs each
  size counts the vertices adjacent to exactly the named anchors, and the
  optional subcase (a1, b1, c1, a2, ...) is checked. sharpness:m1,..,mt joins
  t >= 3 blocks K_{2,m_i} through a cycle on their extra vertices.
  gadget(SPEC) hangs a path on three vertices by its center off every vertex.

EXIT STATUS
  0 success, 1 a check or audit failed, 2 usage, input or limit error.
  Safety caps on graph size can be raised with OIDRD_MAX_N at your own risk.";

#[derive(Parser)]
#[command(
    name = "oidrd",
    version,
    about = "Exact outer independent double Roman domination numbers and audits",
    after_long_help = INPUT_HELP
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: available parallelism). Results do not depend on it.
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a parameter exactly and print a canonical witness.
    Solve {
        graph: String,
        /// One of gamma, alpha, beta, gamma_r, gamma_oir, gamma_dr, gamma_oidr.
        #[arg(long, default_value = "gamma_oidr", value_parser = parse_invariant)]
        invariant: Invariant,
        /// Solve all seven parameters.
        #[arg(long, conflicts_with = "invariant")]
        all: bool,
        /// Use exhaustive enumeration instead of branch and bound.
        #[arg(long)]
        brute_force: bool,
    },
    /// Check the general lower and upper bounds on one graph.
    Bounds { graph: String },
    /// Decide structurally whether the value is 3, 4, 5 or larger.
    Classify {
        graph: String,
        /// Rebuild the recognized structure and compare with the input.
        #[arg(long)]
        verify: bool,
    },
    /// Build the pendant-path gadget and check its value against 4n - alpha.
    Reduce {
        graph: String,
        /// Also print the gadget as an edge list.
        #[arg(long)]
        emit: bool,
    },
    /// Value of the corona G o H from the parameters of H.
    Corona {
        g: String,
        h: String,
        /// Also solve the corona graph directly and compare.
        #[arg(long)]
        check: bool,
    },
    /// Closed-form value for path, cycle, complete, star and complete multipartite specs.
    Formula {
        spec: String,
        /// Also run the solver and compare.
        #[arg(long)]
        check: bool,
    },
    /// Run verification campaigns.
    Audit {
        /// Campaign name (see --list).
        #[arg(required_unless_present_any = ["all", "list"], conflicts_with = "all")]
        campaign: Option<String>,
        /// Run every campaign.
        #[arg(long)]
        all: bool,
        /// List campaign names.
        #[arg(long)]
        list: bool,
        /// Largest order; each campaign clamps it to what it supports.
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the JSON report(s) to this file.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Write a CSV summary to this file.
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
    },
    /// Print a family spec as an edge list.
    Generate {
        spec: String,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

fn parse_invariant(s: &str) -> Result<Invariant, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1);
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build_global()
    {
        eprintln!("error: cannot start worker pool: {e}");
        return ExitCode::from(2);
    }
    let ctx = Ctx {
        json: cli.json,
        options: SolveOptions { workers },
    };
    match run(&ctx, cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

struct Ctx {
    json: bool,
    options: SolveOptions,
}

impl Ctx {
    fn emit(&self, mut report: Value, text: &str) {
        if self.json {
            if let Value::Object(map) = &mut report {
                map.insert("schema".into(), SCHEMA.into());
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("values serialize")
            );
        } else {
            print!("{text}");
        }
    }
}

/// Reads a graph from a file, standard input, or a family spec.
fn load_graph(source: &str) -> Result<Graph> {
    if source == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        return Graph::parse_edge_list(&text).context("standard input");
    }
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {source}"))?;
        return Graph::parse_edge_list(&text).with_context(|| source.to_string());
    }
    if !source.contains(':') && !source.contains('(') {
        bail!("{source:?} is neither a readable file nor a family spec");
    }
    Ok(source.parse::<FamilySpec>()?.build()?)
}

fn run(ctx: &Ctx, command: Command) -> Result<bool> {
    match command {
        Command::Solve {
            graph,
            invariant,
            all,
            brute_force,
        } => solve(ctx, &load_graph(&graph)?, invariant, all, brute_force),
        Command::Bounds { graph } => bounds(ctx, &load_graph(&graph)?),
        Command::Classify { graph, verify } => classify(ctx, &load_graph(&graph)?, verify),
        Command::Reduce { graph, emit } => reduce(ctx, &load_graph(&graph)?, emit),
        Command::Corona { g, h, check } => {
            corona_cmd(ctx, &load_graph(&g)?, &load_graph(&h)?, check)
        }
        Command::Formula { spec, check } => formula(ctx, &spec, check),
        Command::Audit {
            campaign,
            all,
            list,
            max_n,
            seed,
            out,
            csv,
        } => {
            if list {
                for name in harness::CAMPAIGNS {
                    println!("{name}");
                }
                return Ok(true);
            }
            let plan = AuditPlan { max_n, seed };
            let reports = if all {
                plan.run_all()?
            } else {
                vec![plan.run(
                    &campaign
                        .expect("clap requires a campaign")
                        .replace('-', "_"),
                )?]
            };
            audit(ctx, &reports, out.as_deref(), csv.as_deref())
        }
        Command::Generate { spec, out } => {
            let g = load_graph(&spec)?;
            match out {
                Some(path) => std::fs::write(&path, g.to_edge_list())
                    .with_context(|| format!("writing {}", path.display()))?,
                None if ctx.json => {
                    ctx.emit(json!({"n": g.n(), "m": g.m(), "edges": g.edges()}), "")
                }
                None => print!("{}", g.to_edge_list()),
            }
            Ok(true)
        }
    }
}

fn solve(ctx: &Ctx, g: &Graph, invariant: Invariant, all: bool, brute_force: bool) -> Result<bool> {
    let selected: Vec<Invariant> = if all {
        Invariant::ALL.to_vec()
    } else {
        vec![invariant]
    };
    let mut report = json!({"n": g.n(), "m": g.m()});
    let mut witnesses = serde_json::Map::new();
    let mut text = String::new();
    for inv in selected {
        let r = if brute_force {
            inv.brute_force(g)?
        } else {
            inv.solve_with(g, &ctx.options)?
        };
        report[inv.name()] = json!(r.value);
        if all {
            witnesses.insert(inv.name().into(), json!(r.witness.to_string()));
        } else {
            report["witness"] = json!(r.witness.to_string());
            report["node_count"] = json!(r.node_count);
            if let Some(count) = r.optimal_count {
                report["optimal_count"] = json!(count);
            }
        }
        writeln!(
            text,
            "{:<10} = {:<3} witness {}",
            inv.name(),
            r.value,
            r.witness
        )?;
    }
    if all {
        report["witnesses"] = Value::Object(witnesses);
    }
    ctx.emit(report, &text);
    Ok(true)
}

fn bounds(ctx: &Ctx, g: &Graph) -> Result<bool> {
    let b = solver::bundle(g)?;
    let delta = g.max_degree();
    let lower = (delta > 0).then(|| harness::lower_bound(&b, delta));
    let value = harness::Rational::from(b.gamma_oidr);
    let upper = 3 * b.beta;
    let lower_holds = lower.map(|l| l.cmp_value(&value).is_le());
    let upper_holds = b.gamma_oidr <= upper;
    let in_scope = g.is_connected() && g.n() >= 2;
    let report = json!({
        "n": g.n(),
        "max_degree": delta,
        "connected": g.is_connected(),
        "gamma": b.gamma,
        "alpha": b.alpha,
        "beta": b.beta,
        "gamma_oidr": b.gamma_oidr,
        "lower_bound": lower,
        "upper_bound": upper,
        "lower_holds": lower_holds,
        "upper_holds": upper_holds,
        "lower_attained": lower.map(|l| l.cmp_value(&value).is_eq()),
        "upper_attained": b.gamma_oidr == upper,
    });
    let mut text = String::new();
    writeln!(
        text,
        "gamma = {}, alpha = {}, beta = {}, max degree = {delta}",
        b.gamma, b.alpha, b.beta
    )?;
    match lower {
        Some(l) => writeln!(
            text,
            "max(gamma, 2 alpha/Delta) + beta = {l} <= {}",
            b.gamma_oidr
        )?,
        None => writeln!(text, "lower bound undefined without edges")?,
    }
    writeln!(text, "gamma_oidr = {} <= 3 beta = {upper}", b.gamma_oidr)?;
    if !in_scope {
        writeln!(
            text,
            "note: the bounds are stated for connected graphs on at least two vertices"
        )?;
    }
    ctx.emit(report, &text);
    Ok(!in_scope || (lower_holds == Some(true) && upper_holds))
}

fn classify(ctx: &Ctx, g: &Graph, verify: bool) -> Result<bool> {
    let result = characterize::classify(g)?;
    let rebuilt = match (verify, result.recognition()) {
        (true, Some(r)) => Some(r.verify(g)),
        _ => None,
    };
    let mut report = serde_json::to_value(&result)?;
    if let Some(ok) = rebuilt {
        report["verified"] = json!(ok);
    }
    let mut text = result.value_class.to_string();
    if let Some(family) = result.family {
        write!(text, " / {family}")?;
        if let Some(sub) = result.subcase {
            write!(text, " ({})", sub.name())?;
        }
        write!(text, "\nanchors {:?}", result.anchor_vertices)?;
        for (name, members) in &result.sets {
            write!(text, "\nV_{name} {members:?}")?;
        }
    }
    if let Some(ok) = rebuilt {
        write!(text, "\nrebuild {}", if ok { "matches" } else { "differs" })?;
    }
    text.push('\n');
    ctx.emit(report, &text);
    Ok(rebuilt != Some(false))
}

fn reduce(ctx: &Ctx, g: &Graph, emit: bool) -> Result<bool> {
    let map = reduction::build_gadget(g)?;
    let identity = reduction::verify_identity_with(g, &ctx.options)?;
    let alpha = solver::solve_alpha(g)?;
    let set: Vec<usize> = (0..g.n()).filter(|&v| alpha.witness.get(v) == 1).collect();
    let witness = reduction::witness_from_independent_set(g, &set)?;
    let mut report = json!({
        "n": identity.n,
        "gadget_n": map.gadget.n(),
        "gadget_max_degree": map.gadget.max_degree(),
        "alpha": identity.alpha,
        "gamma_oidr_gadget": identity.lhs,
        "four_n_minus_alpha": identity.rhs,
        "equal": identity.equal,
        "independent_set": set,
        "witness": witness.to_string(),
    });
    let mut text = format!(
        "gadget: {} vertices, max degree {}\ngamma_oidr(gadget) = {}\n4n - alpha = 4*{} - {} = {}\n{}\n",
        map.gadget.n(),
        map.gadget.max_degree(),
        identity.lhs,
        identity.n,
        identity.alpha,
        identity.rhs,
        if identity.equal { "identity holds" } else { "IDENTITY FAILS" }
    );
    if emit {
        report["gadget"] = json!(map.gadget.to_edge_list());
        text.push_str(&map.gadget.to_edge_list());
    }
    ctx.emit(report, &text);
    Ok(identity.equal)
}

fn corona_cmd(ctx: &Ctx, g: &Graph, h: &Graph, check: bool) -> Result<bool> {
    let r = formulas::corona_formula(g, h)?;
    let c = r.coefficients;
    let mut report = json!({
        "gamma_oidr": r.value,
        "coefficients": {"c0": c.c0, "c1": c.c1, "c2": c.c2, "c3": c.c3},
        "assignment": r.assignment.to_string(),
    });
    let mut text = format!("gamma_oidr = {}\nclass cost\n", r.value);
    for (label, cost) in c.as_array().iter().enumerate() {
        writeln!(text, "c{label}    {cost}")?;
    }
    writeln!(text, "assignment {}", r.assignment)?;
    let mut ok = true;
    if check {
        let product = corona(g, h)?;
        let solved = solver::solve_with(&product, oidrd::Problem::Oidrd, &ctx.options)?.value;
        ok = solved == r.value;
        report["solved"] = json!(solved);
        writeln!(
            text,
            "solver on the corona: {solved} ({})",
            if ok { "agrees" } else { "DISAGREES" }
        )?;
    }
    ctx.emit(report, &text);
    Ok(ok)
}

fn formula(ctx: &Ctx, spec: &str, check: bool) -> Result<bool> {
    let family: FamilySpec = spec.parse()?;
    let value = match &family {
        FamilySpec::Path(n) => formulas::formula_path(*n)?,
        FamilySpec::Cycle(n) => formulas::formula_cycle(*n)?,
        FamilySpec::Complete(n) => formulas::formula_complete(*n)?,
        FamilySpec::Star(k) => formulas::formula_complete_bipartite(1, *k)?,
        FamilySpec::CompleteBipartite(m, n) => formulas::formula_complete_bipartite(*m, *n)?,
        FamilySpec::CompleteMultipartite(parts) if parts.len() == 2 => {
            formulas::formula_complete_bipartite(parts[0], parts[1])?
        }
        FamilySpec::CompleteMultipartite(parts) => formulas::formula_complete_multipartite(parts)?,
        other => bail!("no closed form for {}; use `solve`", other.tag()),
    };
    let mut report = json!({"family": family.to_string(), "gamma_oidr": value});
    let mut text = format!("gamma_oidr({family}) = {value}\n");
    let mut ok = true;
    if check {
        let solved =
            solver::solve_with(&family.build()?, oidrd::Problem::Oidrd, &ctx.options)?.value;
        ok = solved == value;
        report["solved"] = json!(solved);
        writeln!(
            text,
            "solver: {solved} ({})",
            if ok { "agrees" } else { "DISAGREES" }
        )?;
    }
    ctx.emit(report, &text);
    Ok(ok)
}

fn audit(
    ctx: &Ctx,
    reports: &[AuditReport],
    out: Option<&Path>,
    csv: Option<&Path>,
) -> Result<bool> {
    let passed = reports.iter().all(AuditReport::passed);
    let body = if reports.len() == 1 {
        serde_json::to_value(&reports[0])?
    } else {
        json!({"status": if passed { "pass" } else { "fail" }, "reports": reports})
    };
    if let Some(path) = out {
        let mut stamped = body.clone();
        stamped["schema"] = SCHEMA.into();
        std::fs::write(path, serde_json::to_string_pretty(&stamped)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = csv {
        let file =
            std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
        harness::write_csv_summary(reports, file)?;
    }
    let mut text = format!(
        "{:<18} {:>10} {:>10} {:>10}  status\n",
        "campaign", "instances", "violations", "ms"
    );
    for r in reports {
        writeln!(
            text,
            "{:<18} {:>10} {:>10} {:>10}  {}",
            r.campaign,
            r.instances_checked,
            r.violations.len(),
            r.runtime_ms,
            r.status
        )?;
        for v in r.violations.iter().take(5) {
            writeln!(
                text,
                "  {}: {} vs {} on\n{}",
                v.claim,
                v.lhs,
                v.rhs,
                indent(&v.graph)
            )?;
        }
    }
    ctx.emit(body, &text);
    Ok(passed)
}

fn indent(s: &str) -> String {
    s.lines()
        .map(|l| format!("    {l}\n"))
        .collect::<String>()
        .trim_end()
        .to_string()
}
