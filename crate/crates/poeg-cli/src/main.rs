//! poeg: exact analysis of prime-order element graphs of finite groups.

mod descriptor;
mod suites;

use clap::{Args, Parser, Subcommand};
use poeg::clique::max_clique;
use poeg::graph::classify::classify_component;
use poeg::graph::{build_poeg, element_labels};
use poeg::matrix::DEFAULT_SPECTRUM_DIM_CAP;
use poeg::planar::is_planar;
use poeg::spectra::partition::{equitable_quotient, order_partition};
use poeg::spectra::{integrality_verdict, laplacian_spectrum_abelian, MatrixKind, SpectrumReport};
use poeg::structure::{clique_closed_form_abelian, planarity_necessary_condition};
use poeg::{Group, IntMatrix};
use serde::Serialize;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "poeg",
    version,
    about = "Exact spectra, planarity, cliques and component structure of prime-order element graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the graph and report size (DOT with --dot)
    Graph(GroupArgs),
    /// Exact adjacency spectrum with integrality verdict
    Spectrum(GroupArgs),
    /// Exact Laplacian spectrum (character engine for abelian groups)
    Laplacian(GroupArgs),
    /// Order partition, quotient matrix, and divisibility check
    Quotient(GroupArgs),
    /// Planarity verdict plus classification clauses
    Planar(GroupArgs),
    /// Exact maximum clique (closed form shown for abelian p-groups)
    Clique(GroupArgs),
    /// Connected components with template labels
    Components(GroupArgs),
    /// Run a verification suite over the group catalog
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GroupArgs {
    /// Group descriptor: Z:n, Z:2xZ:4, D:n, Dic:m, A4, table:<path>
    #[arg(long)]
    group: String,
    /// Emit a structured JSON report
    #[arg(long)]
    json: bool,
    /// Emit DOT (graph command)
    #[arg(long)]
    dot: bool,
    /// Emit CSV (spectrum commands)
    #[arg(long)]
    csv: bool,
    /// Override the default size caps
    #[arg(long)]
    max_order: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: integral-2group, irrational-cyclic-p, laplacian-abelian,
    /// lspec-zpr, lspec-zn-odd, planarity, clique, conjectures
    suite: String,
    #[arg(long)]
    json: bool,
    /// Override the suite's default catalog bound
    #[arg(long)]
    max_order: Option<usize>,
}

#[derive(Serialize)]
struct RunReport<T: Serialize> {
    command: &'static str,
    group: Option<String>,
    wall_ms: u128,
    payload: T,
}

fn emit<T: Serialize>(
    command: &'static str,
    group: Option<&str>,
    t0: Instant,
    json: bool,
    payload: T,
    human: String,
) {
    if json {
        let report = RunReport {
            command,
            group: group.map(str::to_string),
            wall_ms: t0.elapsed().as_millis(),
            payload,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
    } else {
        print!("{human}");
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Graph(a) => graph_cmd(a),
        Command::Spectrum(a) => spectrum_cmd(a, MatrixKind::Adjacency),
        Command::Laplacian(a) => laplacian_cmd(a),
        Command::Quotient(a) => quotient_cmd(a),
        Command::Planar(a) => planar_cmd(a),
        Command::Clique(a) => clique_cmd(a),
        Command::Components(a) => components_cmd(a),
        Command::Verify(a) => verify_cmd(a),
    }
}

fn build(args: &GroupArgs) -> Result<(Group, poeg::Graph), String> {
    let group = descriptor::build_group(&args.group)?;
    let graph = build_poeg(&group).map_err(|e| e.to_string())?;
    Ok((group, graph))
}

fn graph_cmd(args: GroupArgs) -> ExitCode {
    let t0 = Instant::now();
    let (group, graph) = match build(&args) {
        Ok(x) => x,
        Err(e) => return usage_error(&e),
    };
    if args.dot {
        print!(
            "{}",
            graph.to_dot(&args.group, Some(&element_labels(&group)))
        );
        return ExitCode::SUCCESS;
    }
    #[derive(Serialize)]
    struct Payload {
        order: usize,
        edge_count: usize,
        component_count: usize,
        edges: Vec<(usize, usize)>,
    }
    let payload = Payload {
        order: graph.n(),
        edge_count: graph.edge_count(),
        component_count: graph.components().len(),
        edges: graph.edges(),
    };
    let human = format!(
        "graph of {}: {} vertices, {} edges, {} components\n",
        args.group, payload.order, payload.edge_count, payload.component_count
    );
    emit("graph", Some(&args.group), t0, args.json, payload, human);
    ExitCode::SUCCESS
}

fn check_spectrum_cap(n: usize, args: &GroupArgs) -> Result<(), String> {
    let cap = args.max_order.unwrap_or(DEFAULT_SPECTRUM_DIM_CAP);
    if n > cap {
        return Err(format!(
            "graph has {n} vertices, above the spectrum cap {cap}; raise with --max-order"
        ));
    }
    Ok(())
}

fn spectrum_output(args: &GroupArgs, t0: Instant, rep: SpectrumReport, command: &'static str) {
    if args.csv {
        print!("{}", rep.to_csv());
    } else {
        let human = rep.to_text();
        emit(command, Some(&args.group), t0, args.json, rep, human);
    }
}

fn spectrum_cmd(args: GroupArgs, kind: MatrixKind) -> ExitCode {
    let t0 = Instant::now();
    let (_, graph) = match build(&args) {
        Ok(x) => x,
        Err(e) => return usage_error(&e),
    };
    if let Err(e) = check_spectrum_cap(graph.n(), &args) {
        return usage_error(&e);
    }
    let rep = match integrality_verdict(&graph, kind) {
        Ok(r) => r,
        Err(e) => return usage_error(&e.to_string()),
    };
    spectrum_output(&args, t0, rep, "spectrum");
    ExitCode::SUCCESS
}

fn laplacian_cmd(args: GroupArgs) -> ExitCode {
    let t0 = Instant::now();
    let (group, graph) = match build(&args) {
        Ok(x) => x,
        Err(e) => return usage_error(&e),
    };
    // character engine for abelian groups with known shape, else brute force
    let rep = if group.abelian_shape().is_some() {
        laplacian_spectrum_abelian(&group).expect("abelian shape present")
    } else {
        if let Err(e) = check_spectrum_cap(graph.n(), &args) {
            return usage_error(&e);
        }
        match integrality_verdict(&graph, MatrixKind::Laplacian) {
            Ok(r) => r,
            Err(e) => return usage_error(&e.to_string()),
        }
    };
    spectrum_output(&args, t0, rep, "laplacian");
    ExitCode::SUCCESS
}

fn matrix_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    (0..m.n())
        .map(|i| (0..m.n()).map(|j| m.get(i, j)).collect())
        .collect()
}

fn quotient_cmd(args: GroupArgs) -> ExitCode {
    let t0 = Instant::now();
    let (group, graph) = match build(&args) {
        Ok(x) => x,
        Err(e) => return usage_error(&e),
    };
    if let Err(e) = check_spectrum_cap(graph.n(), &args) {
        return usage_error(&e);
    }
    let pi = order_partition(&group);
    #[derive(Serialize)]
    struct Payload {
        blocks: Vec<Vec<usize>>,
        equitable: bool,
        quotient: Option<Vec<Vec<i64>>>,
        quotient_char_poly: Option<String>,
        adjacency_char_poly: String,
        divides: Option<bool>,
    }
    let adjacency_cp = poeg::spectra::adjacency_matrix(&graph)
        .char_poly()
        .expect("within caps");
    let payload = match equitable_quotient(&graph, &pi) {
        Ok(q) => {
            let qcp = q.matrix().char_poly().expect("small");
            let divides = adjacency_cp.div_exact(&qcp).is_some();
            Payload {
                blocks: pi.blocks().to_vec(),
                equitable: true,
                quotient: Some(matrix_rows(q.matrix())),
                quotient_char_poly: Some(qcp.to_string()),
                adjacency_char_poly: adjacency_cp.to_string(),
                divides: Some(divides),
            }
        }
        Err(_) => Payload {
            blocks: pi.blocks().to_vec(),
            equitable: false,
            quotient: None,
            quotient_char_poly: None,
            adjacency_char_poly: adjacency_cp.to_string(),
            divides: None,
        },
    };
    let mut human = format!("order partition blocks: {:?}\n", payload.blocks);
    human += &format!("equitable: {}\n", payload.equitable);
    if let Some(q) = &payload.quotient {
        human += &format!("quotient matrix: {q:?}\n");
        human += &format!(
            "quotient char poly: {}\n",
            payload.quotient_char_poly.as_deref().unwrap_or("-")
        );
        human += &format!(
            "divides adjacency char poly: {}\n",
            payload.divides.unwrap()
        );
    }
    human += &format!("adjacency char poly: {}\n", payload.adjacency_char_poly);
    emit("quotient", Some(&args.group), t0, args.json, payload, human);
    ExitCode::SUCCESS
}

fn planar_cmd(args: GroupArgs) -> ExitCode {
    let t0 = Instant::now();
    let (group, graph) = match build(&args) {
        Ok(x) => x,
        Err(e) => return usage_error(&e),
    };
    #[derive(Serialize)]
    struct Payload {
        planar: bool,
        clauses: Vec<String>,
        classification_satisfied: bool,
    }
    let verdict = is_planar(&graph);
    let clauses = planarity_necessary_condition(&group);
    let payload = Payload {
        planar: verdict.planar,
        clauses: clauses.clauses.iter().map(|c| c.to_string()).collect(),
        classification_satisfied: clauses.satisfied,
    };
    let human = format!(
        "planar: {}\nclassification clauses: [{}]\n",
        payload.planar,
        payload.clauses.join(", ")
    );
    emit("planar", Some(&args.group), t0, args.json, payload, human);
    ExitCode::SUCCESS
}

fn clique_cmd(args: GroupArgs) -> ExitCode {
    let t0 = Instant::now();
    let (group, graph) = match build(&args) {
        Ok(x) => x,
        Err(e) => return usage_error(&e),
    };
    let dense = 4 * graph.edge_count() > graph.n().saturating_sub(1) * graph.n();
    let cap = args.max_order.unwrap_or(if dense { 200 } else { 4096 });
    if graph.n() > cap {
        return usage_error(&format!(
            "graph has {} vertices (dense: {dense}), above the clique cap {cap}; raise with --max-order",
            graph.n()
        ));
    }
    #[derive(Serialize)]
    struct Payload {
        omega: usize,
        witness: Vec<usize>,
        closed_form: Option<usize>,
        closed_form_matches: Option<bool>,
    }
    let result = max_clique(&graph);
    let closed = clique_closed_form_abelian(&group).ok();
    let payload = Payload {
        omega: result.omega,
        closed_form: closed,
        closed_form_matches: closed.map(|c| c == result.omega),
        witness: result.witness,
    };
    let mut human = format!("omega: {}\nwitness: {:?}\n", payload.omega, payload.witness);
    if let Some(c) = payload.closed_form {
        human += &format!(
            "closed form: {c} (matches: {})\n",
            payload.closed_form_matches.unwrap()
        );
    }
    emit("clique", Some(&args.group), t0, args.json, payload, human);
    ExitCode::SUCCESS
}

fn components_cmd(args: GroupArgs) -> ExitCode {
    let t0 = Instant::now();
    let (group, graph) = match build(&args) {
        Ok(x) => x,
        Err(e) => return usage_error(&e),
    };
    #[derive(Serialize)]
    struct Comp {
        vertices: Vec<usize>,
        element_names: Vec<String>,
        label: String,
        element_order: usize,
    }
    let comps: Vec<Comp> = graph
        .components()
        .into_iter()
        .map(|c| {
            let label = classify_component(&graph, &c).expect("components are components");
            Comp {
                element_names: c.iter().map(|&v| group.element_name(v)).collect(),
                element_order: group.element_order(c[0]),
                label: label.to_string(),
                vertices: c,
            }
        })
        .collect();
    let mut human = String::new();
    for c in &comps {
        human += &format!(
            "{} (element order {}): {:?}\n",
            c.label, c.element_order, c.vertices
        );
    }
    emit("components", Some(&args.group), t0, args.json, comps, human);
    ExitCode::SUCCESS
}

fn verify_cmd(args: VerifyArgs) -> ExitCode {
    let t0 = Instant::now();
    let report = match suites::run_suite(&args.suite, args.max_order) {
        Ok(r) => r,
        Err(e) => return usage_error(&e),
    };
    let failed = report.failed;
    let findings_only = report.findings_only;
    if args.json {
        let envelope = RunReport {
            command: "verify",
            group: None,
            wall_ms: t0.elapsed().as_millis(),
            payload: &report,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&envelope).expect("serializable")
        );
    } else {
        for r in &report.results {
            let status = if findings_only {
                "FINDING"
            } else if r.pass {
                "PASS"
            } else {
                "FAIL"
            };
            println!("{status} {}: {}", r.group, r.detail);
        }
        println!(
            "suite {}: {} passed, {} failed ({} groups)",
            report.suite,
            report.passed,
            report.failed,
            report.results.len()
        );
    }
    if failed > 0 && !findings_only {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
