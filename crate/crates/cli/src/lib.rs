//! Command implementations behind the `mdl` binary.

pub mod args;
pub mod atlas;
pub mod error;
pub mod source;
pub mod verify;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use mdl_core::graph::write_edge_list;
use mdl_core::ilp::{build_doubly_ilp, build_strong_ilp, write_lp, Variable};
use mdl_core::{all_pairs_distances, Graph, Status};

use args::{AtlasArgs, Cli, Command, ExportArgs, Format, GenArgs, InvariantArgs, LpMode, VerifyArgs};
use atlas::{build_atlas, instances, solve, write_atlas, AtlasRow, RowStatus};
use error::{CliError, CliResult};
use source::{format_vertices, load};
use verify::{run_verify, Summary};

/// How a successful run ended; maps onto the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success,
    BudgetLimited,
    VerifyFailed,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::BudgetLimited => 2,
            Outcome::VerifyFailed => 3,
        }
    }
}

/// Exit code for errors: usage and input problems alike.
pub const ERROR_EXIT: u8 = 1;

pub fn run(cli: Cli, stdout: &mut dyn Write) -> CliResult<Outcome> {
    let budget = cli.budget;
    match cli.command {
        Command::Gen(a) => gen(a, stdout),
        Command::Invariant(a) => invariant(a, budget, stdout),
        Command::Verify(a) => verify(a, budget, stdout),
        Command::ExportLp(a) => export_lp(a, stdout),
        Command::Atlas(a) => atlas(a, budget, stdout),
    }
}

fn with_output<F>(path: Option<&Path>, stdout: &mut dyn Write, f: F) -> CliResult<()>
where
    F: FnOnce(&mut dyn Write) -> CliResult<()>,
{
    match path {
        Some(p) => {
            let file = File::create(p).map_err(|e| CliError::io(p, e))?;
            let mut w = BufWriter::new(file);
            f(&mut w)?;
            w.flush().map_err(|e| CliError::io(p, e))?;
        }
        None => f(stdout)?,
    }
    Ok(())
}

fn gen(a: GenArgs, stdout: &mut dyn Write) -> CliResult<Outcome> {
    let loaded = load(&a.source)?;
    let g = &loaded.graph;
    with_output(a.output.as_deref(), stdout, |w| {
        match a.format {
            Format::Edgelist => {
                let comment = format!(
                    "{}: {} vertices, {} edges",
                    loaded.name,
                    g.n_vertices(),
                    g.n_edges()
                );
                w.write_all(write_edge_list(g, &[comment]).as_bytes())?;
            }
            Format::Csv => write_edge_csv(g, w)?,
        }
        Ok(())
    })?;
    Ok(Outcome::Success)
}

fn write_edge_csv(g: &Graph, w: &mut dyn Write) -> CliResult<()> {
    let mut c = csv::Writer::from_writer(w);
    if g.labels().is_some() {
        c.write_record(["u", "v", "u_label", "v_label"])?;
    } else {
        c.write_record(["u", "v"])?;
    }
    for &(u, v) in g.edges() {
        let mut rec = vec![(u + 1).to_string(), (v + 1).to_string()];
        if g.labels().is_some() {
            rec.push(g.display_vertex(u));
            rec.push(g.display_vertex(v));
        }
        c.write_record(&rec)?;
    }
    c.flush()?;
    Ok(())
}

fn invariant(a: InvariantArgs, budget: u64, stdout: &mut dyn Write) -> CliResult<Outcome> {
    let loaded = load(&a.source)?;
    let g = &loaded.graph;
    let r = solve(g, a.which, budget)?;
    with_output(a.output.as_deref(), stdout, |w| {
        match a.format {
            None => {
                writeln!(
                    w,
                    "graph: {} ({} vertices, {} edges)",
                    loaded.name,
                    g.n_vertices(),
                    g.n_edges()
                )?;
                writeln!(w, "invariant: {}", a.which.tag())?;
                writeln!(w, "value: {}", r.value)?;
                writeln!(w, "status: {:?}", r.status)?;
                if r.status == Status::UpperBoundOnly {
                    writeln!(w, "lower bound: {}", r.bound)?;
                }
                if !r.certificate.is_empty() {
                    writeln!(w, "certificate: {}", format_vertices(g, &r.certificate))?;
                }
                writeln!(w, "nodes: {}", r.nodes_explored)?;
                writeln!(w, "elapsed_ms: {}", r.elapsed.as_millis())?;
            }
            Some(Format::Csv) => {
                let spec = loaded.spec.ok_or_else(|| {
                    CliError::Usage("csv output needs a family spec source".into())
                })?;
                let row = AtlasRow {
                    family: spec.family,
                    n: spec.n,
                    k: spec.k,
                    vertices: g.n_vertices(),
                    edges: g.n_edges(),
                    invariant: a.which,
                    value: r.value as u64,
                    status: RowStatus::from(r.status),
                    elapsed_ms: r.elapsed.as_millis(),
                };
                write_atlas(w, &[row])?;
            }
            Some(Format::Edgelist) => {
                return Err(CliError::Usage("invariant output is a report or csv".into()));
            }
        }
        Ok(())
    })?;
    Ok(match r.status {
        Status::Optimal => Outcome::Success,
        Status::UpperBoundOnly => Outcome::BudgetLimited,
    })
}

fn verify(a: VerifyArgs, budget: u64, stdout: &mut dyn Write) -> CliResult<Outcome> {
    let lines = run_verify(a.theorem, a.n, a.k, a.family, budget)?;
    for l in &lines {
        writeln!(stdout, "{l}")?;
    }
    let summary = Summary::of(&lines);
    writeln!(stdout, "{summary}")?;
    Ok(if summary.failed > 0 {
        Outcome::VerifyFailed
    } else if summary.inconclusive > 0 {
        Outcome::BudgetLimited
    } else {
        Outcome::Success
    })
}

fn export_lp(a: ExportArgs, stdout: &mut dyn Write) -> CliResult<Outcome> {
    let loaded = load(&a.source)?;
    let dm = all_pairs_distances(&loaded.graph);
    let model = match a.mode {
        LpMode::Strong => build_strong_ilp(&dm)?,
        LpMode::Doubly => build_doubly_ilp(&dm)?,
    };
    let text = write_lp(&model);
    let vertex_vars = model
        .binaries()
        .iter()
        .filter(|b| matches!(Variable::parse(b), Some(Variable::Vertex(_))))
        .count();
    let pair_vars = model.binaries().len() - vertex_vars;
    let summary = format!(
        "{}: {} variables ({vertex_vars} vertex + {pair_vars} pair), {} constraints",
        loaded.name,
        model.binaries().len(),
        model.constraints().len()
    );
    match a.output.as_deref() {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| CliError::io(p, e))?;
            writeln!(stdout, "{summary}")?;
        }
        None => {
            stdout.write_all(text.as_bytes())?;
            eprintln!("{summary}");
        }
    }
    Ok(Outcome::Success)
}

fn atlas(a: AtlasArgs, budget: u64, stdout: &mut dyn Write) -> CliResult<Outcome> {
    if a.format != Format::Csv {
        return Err(CliError::Usage("atlas output is csv only".into()));
    }
    let specs = instances(&a.family, &a.n, &a.k);
    let rows = build_atlas(&specs, &a.invariants, a.source, budget)?;
    with_output(a.output.as_deref(), stdout, |w| write_atlas(w, &rows))?;
    let limited = rows.iter().any(|r| r.status == RowStatus::UpperBoundOnly);
    Ok(if limited {
        Outcome::BudgetLimited
    } else {
        Outcome::Success
    })
}
