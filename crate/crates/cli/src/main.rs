use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use relgraph::fock::{build_rep, verify_pedersen};
use relgraph::format::{parse_relative, parse_relative_or_graph, relative_to_json};
use relgraph::graph::fmt_set;
use relgraph::ideal::{enumerate_hereditary, ideal_lattice};
use relgraph::pullback::{admissibility, pullback_report, suggest_a0};
use relgraph::pushout::compute_pushout;
use relgraph::relative::{check_morphism, quotient_generators, InclusionMorphism};
use relgraph::{Error, PushoutDiagram, RelativeGraph, VertexId, VertexSet};
use serde_json::json;

/// Writes to stdout, ignoring a closed pipe.
macro_rules! out_raw {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

macro_rules! out {
    ($($t:tt)*) => {{
        out_raw!($($t)*);
        out_raw!("\n");
    }};
}

#[derive(Parser)]
#[command(
    name = "relgraph",
    version,
    about = "Relative graphs, ideal codes and admissible pushouts"
)]
struct Cli {
    /// Emit structured JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the vertices of a graph.
    Analyze { file: PathBuf },
    /// Check that SUB includes into AMB as a relative-graph morphism.
    CheckMorphism { sub: PathBuf, amb: PathBuf },
    /// Compute the pushout of the span APEX -> LEFT, APEX -> RIGHT.
    Pushout {
        apex: PathBuf,
        left: PathBuf,
        right: PathBuf,
        /// Write the pushout as a relative-graph file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the gauge-invariant ideal codes and their lattice.
    Ideals {
        file: PathBuf,
        /// Relative set, overriding any in the file.
        #[arg(long = "A", value_delimiter = ',')]
        a: Option<Vec<String>>,
        /// Write the Hasse diagram in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Decide whether a span is admissible.
    Admissible {
        apex: PathBuf,
        left: PathBuf,
        right: PathBuf,
        /// Propose the admissible apex relative set A12.
        #[arg(long)]
        suggest: bool,
    },
    /// Build the matrix model of a finite acyclic relative graph.
    Fock {
        file: PathBuf,
        /// Print every generator matrix as `row col value` lines.
        #[arg(long)]
        dump_matrices: bool,
    },
    /// Check the kernel identities of a pushout and whether it is a pullback.
    VerifyPullback {
        apex: PathBuf,
        left: PathBuf,
        right: PathBuf,
    },
}

enum Verdict {
    Yes,
    No,
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn relative(path: &Path) -> Result<RelativeGraph, Error> {
    parse_relative(&read(path)?)
}

fn span(apex: &Path, left: &Path, right: &Path) -> Result<PushoutDiagram, Error> {
    PushoutDiagram::new(relative(apex)?, relative(left)?, relative(right)?)
}

fn write(path: &Path, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn print_json(v: serde_json::Value) {
    out!(
        "{}",
        serde_json::to_string_pretty(&v).expect("report serializes")
    );
}

fn analyze(json: bool, file: &Path) -> Result<Verdict, Error> {
    let rg = parse_relative_or_graph(&read(file)?)?;
    let g = &rg.graph;
    let hereditary = enumerate_hereditary(g).len();
    if json {
        print_json(json!({
            "vertices": g.vertices(),
            "edges": g.edges().len(),
            "regular": g.regular_vertices(),
            "sources": g.sources(),
            "infinite_receivers": g.infinite_receivers(),
            "A": rg.a,
            "acyclic": g.is_acyclic(),
            "hereditary_sets": hereditary,
        }));
    } else {
        out!("vertices: {}", fmt_set(&g.vertex_set()));
        out!("edge declarations: {}", g.edges().len());
        out!("regular: {}", fmt_set(&g.regular_vertices()));
        out!("sources: {}", fmt_set(&g.sources()));
        out!("infinite receivers: {}", fmt_set(&g.infinite_receivers()));
        out!("A: {}", fmt_set(&rg.a));
        out!("acyclic: {}", g.is_acyclic());
        out!("hereditary sets: {hereditary}");
    }
    Ok(Verdict::Yes)
}

fn check(json: bool, sub: &Path, amb: &Path) -> Result<Verdict, Error> {
    let (f, e) = (relative(sub)?, relative(amb)?);
    let violations = check_morphism(&f, &e);
    if !violations.is_empty() {
        let msgs: Vec<String> = violations.iter().map(ToString::to_string).collect();
        if json {
            print_json(json!({ "valid": false, "violations": msgs }));
        } else {
            out!("not a morphism");
            for m in msgs {
                out!("  {m}");
            }
        }
        return Ok(Verdict::No);
    }
    let mor = InclusionMorphism::new(f, e)?;
    let gens = quotient_generators(&mor);
    if json {
        print_json(
            json!({ "valid": true, "complement": mor.complement(), "kernel_generators": gens }),
        );
    } else {
        out!("valid morphism");
        out!("H = {}", fmt_set(&mor.complement()));
        out!(
            "kernel generated by p_v for v in {}",
            fmt_set(&gens.vertex_projections)
        );
        out!(
            "  and gap projections at {}",
            fmt_set(&gens.gap_projections)
        );
    }
    Ok(Verdict::Yes)
}

fn pushout(json: bool, d: &PushoutDiagram, out: Option<&Path>) -> Result<Verdict, Error> {
    let res = compute_pushout(d)?;
    let file = relative_to_json(&res.colimit);
    if let Some(path) = out {
        write(path, &file)?;
    }
    if json {
        let colimit: serde_json::Value = serde_json::from_str(&file).expect("valid JSON");
        print_json(json!({ "pushout": colimit, "h1": res.h1(), "h2": res.h2() }));
    } else {
        out!("pushout: {}", res.colimit);
        out!("H_F1 = {}", fmt_set(&res.h1()));
        out!("H_F2 = {}", fmt_set(&res.h2()));
    }
    Ok(Verdict::Yes)
}

fn ideals(
    json: bool,
    file: &Path,
    a: Option<Vec<String>>,
    dot: Option<&Path>,
) -> Result<Verdict, Error> {
    let mut rg = parse_relative_or_graph(&read(file)?)?;
    if let Some(a) = a {
        let a: VertexSet = a
            .into_iter()
            .filter(|s| !s.is_empty())
            .map(VertexId::new)
            .collect();
        rg = RelativeGraph::new(rg.graph, a)?;
    }
    let lattice = ideal_lattice(&rg)?;
    if let Some(path) = dot {
        write(path, &lattice.to_dot())?;
    }
    if json {
        print_json(serde_json::to_value(&lattice).expect("lattice serializes"));
    } else {
        out!("{} gauge-invariant ideal codes", lattice.codes.len());
        for (i, c) in lattice.codes.iter().enumerate() {
            out!("  {i}: {c}");
        }
        let covers: Vec<String> = lattice
            .covers
            .iter()
            .map(|(i, j)| format!("{i}<{j}"))
            .collect();
        out!("covers: {}", covers.join(" "));
    }
    Ok(Verdict::Yes)
}

fn admissible(json: bool, d: &PushoutDiagram, suggest: bool) -> Result<Verdict, Error> {
    let rep = admissibility(d)?;
    let suggestion = if suggest && !rep.admissible {
        Some(suggest_a0(d)?.apex().a.clone())
    } else {
        None
    };
    if json {
        print_json(json!({
            "admissible": rep.admissible,
            "witness": rep.witness,
            "a12": rep.a12,
            "u0": rep.codes.u0,
            "u12": rep.codes.u12,
            "suggested_a0": suggestion,
        }));
    } else {
        match &rep.witness {
            None => out!("admissible"),
            Some(w) => out!("not admissible: witness {w} lies in A0 but in neither A1 nor A2"),
        }
        out!("U0 = {}", rep.codes.u0);
        out!("U12 = {}", rep.codes.u12);
        if let Some(a) = &suggestion {
            out!("suggested A0 = {}", fmt_set(a));
        }
    }
    Ok(if rep.admissible {
        Verdict::Yes
    } else {
        Verdict::No
    })
}

fn fock(json: bool, file: &Path, dump: bool) -> Result<Verdict, Error> {
    let rg = parse_relative_or_graph(&read(file)?)?;
    let rep = build_rep(&rg)?;
    let violations = rep.verify_ck();
    if !violations.is_empty() {
        return Err(Error::Consistency(format!(
            "matrix model breaks relations: {violations:?}"
        )));
    }
    let blocks = rep.blocks();
    let (dim, generated) = (blocks.dimension(), rep.generated_dimension());
    if dim != generated {
        return Err(Error::Consistency(format!(
            "block dimension {dim} but generated dimension {generated}"
        )));
    }
    let basis: Vec<String> = rep.basis.paths().iter().map(ToString::to_string).collect();
    if json {
        let mut v = json!({ "basis": basis, "blocks": blocks.sizes, "dimension": dim });
        if dump {
            let coo = |m: &relgraph::fock::SparseMatrix| {
                m.entries()
                    .map(|(r, c, x)| [r as i64, c as i64, x])
                    .collect::<Vec<_>>()
            };
            let s: serde_json::Map<String, serde_json::Value> = rep
                .s
                .iter()
                .map(|(k, m)| (k.clone(), json!(coo(m))))
                .collect();
            let p: serde_json::Map<String, serde_json::Value> = rep
                .p
                .iter()
                .map(|(k, m)| (k.to_string(), json!(coo(m))))
                .collect();
            v["S"] = json!(s);
            v["P"] = json!(p);
        }
        print_json(v);
    } else {
        out!("basis ({}): {}", basis.len(), basis.join(" "));
        for (w, k) in &blocks.sizes {
            out!("block {w}: M_{k}");
        }
        out!("dimension: {dim} (relations verified, rank certificate matches)");
        if dump {
            for (name, m) in &rep.s {
                out!("# S_{name}");
                out_raw!("{}", m.to_coo());
            }
            for (v, m) in &rep.p {
                out!("# P_{v}");
                out_raw!("{}", m.to_coo());
            }
        }
    }
    Ok(Verdict::Yes)
}

fn verify_pullback(json: bool, d: &PushoutDiagram) -> Result<Verdict, Error> {
    let rep = pullback_report(d)?;
    let colimit = compute_pushout(d)?.colimit;
    let matrix = if !colimit.graph.has_bundles() && colimit.graph.is_acyclic() {
        let ped = verify_pedersen(d)?;
        if ped.pullback != rep.admissible {
            return Err(Error::Consistency(
                "matrix model disagrees with admissibility".into(),
            ));
        }
        Some(ped)
    } else {
        None
    };
    if json {
        print_json(json!({ "report": rep, "matrix_model": matrix }));
    } else {
        out!("pushout: {}", rep.pushout);
        out!("U1 = {}", rep.canonical.u1);
        out!("U2 = {}", rep.canonical.u2);
        out!("U12 = {}", rep.canonical.u12);
        out!("U0 = {}", rep.canonical.u0);
        out!("U1 and U2 disjoint: {}", rep.disjoint);
        out!("U1 union U2 = U12: {}", rep.union);
        out!("U12 within U0: {}", rep.containment);
        if let Some(m) = &matrix {
            out!(
                "matrix model: dim {} = {} + {} + {}",
                m.dim_e,
                m.dim_i1,
                m.dim_i2,
                m.dim_quotient
            );
        }
        match &rep.witness {
            None => out!("pullback: yes"),
            Some(w) => out!("pullback: no (witness {w})"),
        }
    }
    Ok(if rep.admissible {
        Verdict::Yes
    } else {
        Verdict::No
    })
}

fn run(cli: Cli) -> Result<Verdict, Error> {
    let json = cli.json;
    match cli.command {
        Command::Analyze { file } => analyze(json, &file),
        Command::CheckMorphism { sub, amb } => check(json, &sub, &amb),
        Command::Pushout {
            apex,
            left,
            right,
            out,
        } => pushout(json, &span(&apex, &left, &right)?, out.as_deref()),
        Command::Ideals { file, a, dot } => ideals(json, &file, a, dot.as_deref()),
        Command::Admissible {
            apex,
            left,
            right,
            suggest,
        } => admissible(json, &span(&apex, &left, &right)?, suggest),
        Command::Fock {
            file,
            dump_matrices,
        } => fock(json, &file, dump_matrices),
        Command::VerifyPullback { apex, left, right } => {
            verify_pullback(json, &span(&apex, &left, &right)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Verdict::Yes) => ExitCode::SUCCESS,
        Ok(Verdict::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_consistency() { 3 } else { 2 })
        }
    }
}
