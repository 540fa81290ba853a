//! Thin command-line front end; all functionality lives in the library.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qpkit::algebra::default_degree_bound;
use qpkit::canvas::{build_canvas, homology_h1, is_simply_connected, pi1_presentation, SimplyConnected};
use qpkit::covering::{build_covering_window, enumerate_slices};
use qpkit::cuts::{compatibility_class, enumerate_cuts, is_algebraic_cut};
use qpkit::error::QpError;
use qpkit::families;
use qpkit::json::{parse_planar, parse_qp, serialize_planar, serialize_qp};
use qpkit::lattice::{cut_lattice, export_dot, export_json, planar_mutation_lattice, transitivity_report};
use qpkit::mutation::{mutate, orbit_mutate};
use qpkit::potential::QP;
use qpkit::quiver::VertexId;
use qpkit::selfinjective::is_selfinjective;

#[derive(Parser)]
#[command(name = "qpkit", about = "Exact computation with quivers with potential")]
struct Cli {
    /// Degree bound for Jacobian computations (default: derived per QP)
    #[arg(long, global = true)]
    degree_bound: Option<usize>,
    /// Rotation applied to deterministic exploration orders
    #[arg(long, global = true, default_value_t = 0)]
    seed_order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a family member and print its JSON
    Family {
        /// cycle, tilde, tubular, tensor, square, triangle, square-planar,
        /// square-shaped-example, ngon, tilde-ngon
        name: String,
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Decide selfinjectivity; exit code 0 iff selfinjective
    Selfinjective { qp: String },
    /// Print the cut census as JSON lines
    Cuts {
        qp: String,
        #[arg(long)]
        algebraic: bool,
        #[arg(long)]
        classes: bool,
    },
    /// Mutate at a vertex (optionally along a Nakayama orbit)
    Mutate {
        qp: String,
        #[arg(short = 'k')]
        vertex: String,
        #[arg(long)]
        orbit: bool,
        /// permutation as comma-separated images of the vertices in order
        #[arg(long)]
        sigma: Option<String>,
        #[arg(long)]
        planar: bool,
    },
    /// Print a finite window of the covering, or its slices
    Cover {
        qp: String,
        #[arg(long)]
        cut: String,
        #[arg(long, default_value = "-2:2", allow_hyphen_values = true)]
        window: String,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        slices: bool,
    },
    /// Canvas topology: homology, fundamental group, simple connectivity
    Canvas {
        qp: String,
        #[arg(long)]
        h1: bool,
        #[arg(long)]
        pi1: bool,
        #[arg(long)]
        simply_connected: bool,
    },
    /// Cut-mutation lattice (default) or planar mutation lattice
    Lattice {
        qp: String,
        #[arg(long)]
        planar: bool,
        #[arg(long, default_value_t = 512)]
        size_bound: usize,
        #[arg(long)]
        dot: bool,
    },
    /// Transitivity report: hypotheses plus explicit mutation paths
    Report { qp: String },
}

fn read_input(path: &str) -> Result<String, QpError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| QpError::Parse(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| QpError::Parse(format!("{path}: {e}")))
    }
}

fn load_qp(path: &str) -> Result<QP, QpError> {
    parse_qp(&read_input(path)?)
}

fn family(name: &str, params: &[String]) -> Result<String, QpError> {
    let int = |i: usize| -> Result<usize, QpError> {
        params
            .get(i)
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| QpError::BadParameter(format!("missing integer parameter {i}")))
    };
    let dynkin = |s: &str| -> Result<families::DynkinType, QpError> {
        let (letter, rank) = s.split_at(1);
        let n: usize = rank
            .parse()
            .map_err(|_| QpError::BadParameter(format!("bad Dynkin type {s}")))?;
        match letter {
            "A" | "a" => Ok(families::DynkinType::A(n)),
            "D" | "d" => Ok(families::DynkinType::D(n)),
            "E" | "e" => match n {
                6 => Ok(families::DynkinType::E6),
                7 => Ok(families::DynkinType::E7),
                8 => Ok(families::DynkinType::E8),
                _ => Err(QpError::BadParameter(format!("bad Dynkin type {s}"))),
            },
            _ => Err(QpError::BadParameter(format!("bad Dynkin type {s}"))),
        }
    };
    match name {
        "cycle" => Ok(serialize_qp(&families::cycle_qp(int(0)?)?)),
        "tilde" => Ok(serialize_qp(&families::tilde_cycle_qp(int(0)?)?)),
        "tubular" => {
            let raw = params.first().map(|p| p.as_str()).unwrap_or("2");
            let lambda = raw
                .parse::<num_rational::BigRational>()
                .map_err(|_| QpError::BadParameter("tubular needs a rational lambda".into()))?;
            Ok(serialize_qp(&families::tubular_2222(lambda)?))
        }
        "tensor" => {
            let t1 = dynkin(params.first().map(|s| s.as_str()).unwrap_or("A3"))?;
            let t2 = dynkin(params.get(1).map(|s| s.as_str()).unwrap_or("A3"))?;
            let d1 = families::alternating_orientation(t1);
            let d2 = families::alternating_orientation(t2);
            Ok(serialize_qp(&families::tensor_qp(&d1.quiver, &d2.quiver)))
        }
        "square" => {
            let t1 = dynkin(params.first().map(|s| s.as_str()).unwrap_or("A3"))?;
            let t2 = dynkin(params.get(1).map(|s| s.as_str()).unwrap_or("A3"))?;
            let d1 = families::alternating_orientation(t1);
            let d2 = families::alternating_orientation(t2);
            Ok(serialize_qp(&families::square_product_qp(&d1.quiver, &d2.quiver)?))
        }
        "triangle" => Ok(serialize_planar(&families::triangle_qp(int(0)?)?)),
        "square-planar" => Ok(serialize_planar(&families::square_product_planar(int(0)?)?)),
        "square-shaped-example" => {
            Ok(serialize_planar(&families::square_shaped_display_example()?))
        }
        "ngon" => Ok(serialize_planar(&families::ngon_planar(int(0)?)?)),
        "tilde-ngon" => Ok(serialize_planar(&families::tilde_ngon_planar(int(0)?)?)),
        other => Err(QpError::BadParameter(format!("unknown family {other}"))),
    }
}

fn run(cli: Cli) -> Result<u8, QpError> {
    match cli.command {
        Command::Family {
            name,
            params,
            output,
        } => {
            let text = family(&name, &params)?;
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| QpError::Parse(format!("{path}: {e}")))?,
                None => println!("{text}"),
            }
            Ok(0)
        }
        Command::Selfinjective { qp } => {
            let qp = load_qp(&qp)?;
            let bound = cli.degree_bound.unwrap_or_else(|| default_degree_bound(&qp));
            let report = is_selfinjective(&qp, bound)?;
            println!("{}", report.to_json(&qp.quiver));
            Ok(if report.selfinjective { 0 } else { 1 })
        }
        Command::Cuts {
            qp,
            algebraic,
            classes,
        } => {
            let qp = load_qp(&qp)?;
            let bound = cli.degree_bound.unwrap_or_else(|| default_degree_bound(&qp));
            let cuts = enumerate_cuts(&qp);
            for cut in &cuts {
                let names: Vec<&str> = cut.iter().map(|&a| qp.quiver.arrow_name(a)).collect();
                let mut line = serde_json::json!({ "cut": names });
                if algebraic {
                    let rep = is_algebraic_cut(&qp, cut, bound)?;
                    line["algebraic"] = serde_json::json!(rep.algebraic);
                    line["diagnostic"] = serde_json::json!(rep.diagnostic);
                }
                if classes {
                    let class = compatibility_class(&qp.quiver, cut);
                    line["compatibilityClassSize"] = serde_json::json!(class.len());
                }
                println!("{line}");
            }
            Ok(0)
        }
        Command::Mutate {
            qp,
            vertex,
            orbit,
            sigma,
            planar,
        } => {
            if planar {
                let pqp = parse_planar(&read_input(&qp)?)?;
                let k = pqp
                    .quiver()
                    .vertex_by_name(&vertex)
                    .ok_or_else(|| QpError::Parse(format!("unknown vertex {vertex}")))?;
                let bound = cli
                    .degree_bound
                    .unwrap_or_else(|| default_degree_bound(&pqp.qp()));
                let out = qpkit::planar::planar_mutate(&pqp, k, bound)?;
                println!("{}", serialize_planar(&out));
                return Ok(0);
            }
            let qp = load_qp(&qp)?;
            let k = qp
                .quiver
                .vertex_by_name(&vertex)
                .ok_or_else(|| QpError::Parse(format!("unknown vertex {vertex}")))?;
            let bound = cli.degree_bound.unwrap_or_else(|| default_degree_bound(&qp));
            let result = if orbit {
                let sigma = sigma.ok_or_else(|| {
                    QpError::BadParameter("--orbit requires --sigma".into())
                })?;
                let images: Vec<VertexId> = sigma
                    .split(',')
                    .map(|n| {
                        qp.quiver
                            .vertex_by_name(n.trim())
                            .ok_or_else(|| QpError::Parse(format!("unknown vertex {n}")))
                    })
                    .collect::<Result<_, _>>()?;
                orbit_mutate(&qp, &images, k, bound)?
            } else {
                mutate(&qp, k, bound)?
            };
            println!("{}", serialize_qp(&result.qp));
            Ok(0)
        }
        Command::Cover {
            qp,
            cut,
            window,
            dot,
            slices,
        } => {
            let qp = load_qp(&qp)?;
            let cut: Vec<_> = if cut.is_empty() {
                Vec::new()
            } else {
                cut.split(',')
                    .map(|n| {
                        qp.quiver
                            .arrow_by_name(n.trim())
                            .ok_or_else(|| QpError::Parse(format!("unknown arrow {n}")))
                    })
                    .collect::<Result<_, _>>()?
            };
            if slices {
                let out = enumerate_slices(&qp.quiver, &cut);
                for h in out {
                    let heights: Vec<serde_json::Value> = qp
                        .quiver
                        .vertices()
                        .map(|v| {
                            serde_json::json!({
                                "vertex": qp.quiver.vertex_name(v),
                                "height": h.0[v.index()],
                            })
                        })
                        .collect();
                    println!("{}", serde_json::json!(heights));
                }
                return Ok(0);
            }
            let (lo, hi) = window
                .split_once(':')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                .ok_or_else(|| QpError::Parse(format!("bad window {window}")))?;
            let w = build_covering_window(&qp.quiver, &cut, lo, hi);
            if dot {
                let mut out = String::from("digraph cover {\n");
                for (v, l) in &w.vertices {
                    out.push_str(&format!(
                        "  \"{}@{}\";\n",
                        qp.quiver.vertex_name(*v),
                        l
                    ));
                }
                for a in &w.arrows {
                    if a.boundary_incomplete {
                        continue;
                    }
                    out.push_str(&format!(
                        "  \"{}@{}\" -> \"{}@{}\" [label=\"{}\"];\n",
                        qp.quiver.vertex_name(qp.quiver.source(a.arrow)),
                        a.level,
                        qp.quiver.vertex_name(qp.quiver.target(a.arrow)),
                        a.target_level,
                        qp.quiver.arrow_name(a.arrow)
                    ));
                }
                out.push_str("}\n");
                println!("{out}");
            } else {
                println!(
                    "{}",
                    serde_json::json!({
                        "levels": [w.lo, w.hi],
                        "vertices": w.vertices.len(),
                        "arrows": w.arrows.len(),
                        "boundaryIncomplete":
                            w.arrows.iter().filter(|a| a.boundary_incomplete).count(),
                    })
                );
            }
            Ok(0)
        }
        Command::Canvas {
            qp,
            h1,
            pi1,
            simply_connected,
        } => {
            let qp = load_qp(&qp)?;
            let canvas = build_canvas(&qp);
            if h1 {
                let grp = homology_h1(&canvas);
                println!(
                    "{}",
                    serde_json::json!({
                        "rank": grp.rank,
                        "torsion": grp.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    })
                );
                return Ok(if grp.is_trivial() { 0 } else { 1 });
            }
            if pi1 {
                let p = pi1_presentation(&canvas, VertexId(0))?;
                println!(
                    "{}",
                    serde_json::json!({
                        "generators": p
                            .generator_arrows
                            .iter()
                            .map(|&a| qp.quiver.arrow_name(a))
                            .collect::<Vec<_>>(),
                        "relators": p.relators,
                    })
                );
                return Ok(0);
            }
            if simply_connected {
                let verdict = is_simply_connected(&canvas, 64);
                println!("{verdict:?}");
                return Ok(match verdict {
                    SimplyConnected::Yes => 0,
                    SimplyConnected::No => 1,
                    SimplyConnected::Unknown => 2,
                });
            }
            println!(
                "{}",
                serde_json::json!({
                    "vertices": canvas.quiver.vertex_count(),
                    "arrows": canvas.quiver.arrow_count(),
                    "twoCells": canvas.two_cells.len(),
                })
            );
            Ok(0)
        }
        Command::Lattice {
            qp,
            planar,
            size_bound,
            dot,
        } => {
            let graph = if planar {
                let pqp = parse_planar(&read_input(&qp)?)?;
                planar_mutation_lattice(&pqp, size_bound)?.0
            } else {
                let qp = load_qp(&qp)?;
                let mut g = cut_lattice(&qp);
                // --seed-order rotates the exported node order deterministically
                let n = g.node_count();
                if n > 0 && !cli.seed_order.is_multiple_of(n) {
                    let r = cli.seed_order % n;
                    let perm: Vec<usize> = (0..n).map(|i| (i + r) % n).collect();
                    let mut inv = vec![0usize; n];
                    for (new, &old) in perm.iter().enumerate() {
                        inv[old] = new;
                    }
                    g = qpkit::lattice::LatticeGraph {
                        seed: g.seed.clone(),
                        node_keys: perm.iter().map(|&i| g.node_keys[i].clone()).collect(),
                        node_labels: perm.iter().map(|&i| g.node_labels[i].clone()).collect(),
                        edges: g
                            .edges
                            .iter()
                            .map(|&(a, b, ref l)| (inv[a], inv[b], l.clone()))
                            .collect(),
                        complete: g.complete,
                    };
                }
                g
            };
            if dot {
                println!("{}", export_dot(&graph));
            } else {
                println!("{}", export_json(&graph));
            }
            Ok(0)
        }
        Command::Report { qp } => {
            let qp = load_qp(&qp)?;
            let bound = cli.degree_bound.unwrap_or_else(|| default_degree_bound(&qp));
            let rep = transitivity_report(&qp, bound)?;
            let paths: Vec<serde_json::Value> = rep
                .paths
                .iter()
                .map(|(a, b, path)| {
                    serde_json::json!({
                        "from": a,
                        "to": b,
                        "moves": path
                            .iter()
                            .map(|(v, plus)| {
                                serde_json::json!({
                                    "vertex": qp.quiver.vertex_name(*v),
                                    "direction": if *plus { "+" } else { "-" },
                                })
                            })
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({
                    "selfinjective": rep.selfinjective,
                    "fullyCompatible": rep.fully_compatible,
                    "enoughCuts": rep.enough_cuts,
                    "hypothesesHold": rep.hypotheses_hold,
                    "allPairsConnected": rep.all_pairs_connected,
                    "cuts": rep
                        .cuts
                        .iter()
                        .map(|c| c
                            .iter()
                            .map(|&a| qp.quiver.arrow_name(a))
                            .collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                    "paths": paths,
                })
            );
            Ok(if rep.hypotheses_hold { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e @ (QpError::UndeterminedDimension(_) | QpError::DegreeExceeded { .. })) => {
            eprintln!("undetermined: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
