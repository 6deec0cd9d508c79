//! Command-line front end: thin dispatch from parsed arguments to the
//! library, JSON on stdout, diagnostics on stderr. Exit codes: 0 for a
//! positive verdict or success, 1 for a negative verdict, 2 for input
//! errors.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::gen::{random_correct_net, random_upm, rewire_structure, NetConfig, SplitMix64};
use crate::json::{DerivationDoc, GraphDoc, NetDoc, UpmDoc};
use crate::kingdom::kingdom_order;
use crate::proofnet::mix_count_formula;
use crate::seq::mix_sequentialize;
use crate::translate::check_mix_correctness;
use crate::transitions::{
    brute_force_closed_trails, find_compatible_closed_trail, pairs_to_transitions,
    TransitionSystem,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "matchnet",
    version,
    about = "Proof-net correctness, sequentialization and matching translations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckMode {
    Mix,
    Mll,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TranslateTarget {
    /// Proof structure (with conclusions) to its edge-based matched graph.
    Rb,
    /// Proof structure to its link-based matched graph.
    Graphify,
    /// Graph plus perfect matching to a proof structure.
    Proofify,
    /// Graph plus transitions to its vertex-per-edge-end matched graph.
    Lpm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    /// A correct proof structure (add --rewire for mutated structures).
    Net,
    /// A graph equipped with its unique perfect matching.
    Upm,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide proof-net correctness; reports a switching-cycle witness.
    Check {
        /// Input net JSON (defaults to stdin).
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = CheckMode::Mix)]
        mode: CheckMode,
        /// Write the structure as DOT to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Sequentialize a net into a derivation tree.
    Seq {
        input: Option<PathBuf>,
        /// Print an indented rule tree on stderr as well.
        #[arg(long)]
        pretty: bool,
    },
    /// Compute the link ordering shared by all sequentializations.
    Kingdom {
        input: Option<PathBuf>,
        /// Write a Hasse diagram as DOT to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Translate between nets and matched graphs.
    Translate {
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        to: TranslateTarget,
    },
    /// Find a compatible closed trail in a graph with forbidden transitions.
    Trail {
        input: Option<PathBuf>,
        /// Enumerate all trails (up to rotation/reflection) instead of one.
        #[arg(long)]
        all: bool,
        /// Bound for --all enumeration.
        #[arg(long, default_value_t = 1000)]
        cap: usize,
    },
    /// Generate a reproducible instance.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        /// Links (net) or vertices (upm).
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Rewire this many premises of the generated net.
        #[arg(long)]
        rewire: Option<usize>,
        /// Keep the generated net weakly connected.
        #[arg(long)]
        connected: bool,
    },
    /// Validate any instance document and report what it is.
    Validate { input: Option<PathBuf> },
}

fn read_input(path: &Option<PathBuf>) -> Result<String, String> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display())),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            Ok(buf)
        }
    }
}

fn parse_net(text: &str) -> Result<crate::proofnet::ProofStructure, String> {
    let doc: NetDoc = serde_json::from_str(text).map_err(|e| e.to_string())?;
    doc.to_structure().map_err(|e| e.to_string())
}

fn emit(out: &mut dyn Write, value: &serde_json::Value) {
    writeln!(out, "{}", serde_json::to_string_pretty(value).unwrap()).unwrap();
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run_inner(cli, out, err) {
        Ok(code) => code,
        Err(message) => {
            writeln!(err, "error: {message}").unwrap();
            EXIT_INPUT
        }
    }
}

fn run_inner(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    match cli.command {
        Command::Check { input, mode, dot } => {
            let ps = parse_net(&read_input(&input)?)?;
            if let Some(path) = dot {
                fs::write(&path, crate::dot::net_dot(&ps))
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            match check_mix_correctness(&ps) {
                Ok(()) => {
                    let count = mix_count_formula(&ps);
                    let correct = mode == CheckMode::Mix || count == 1;
                    emit(out, &json!({ "correct": correct, "mix_count": count }));
                    Ok(if correct { EXIT_OK } else { EXIT_NEGATIVE })
                }
                Err(witness) => {
                    emit(out, &json!({ "correct": false, "witness": witness }));
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Seq { input, pretty } => {
            let ps = parse_net(&read_input(&input)?)?;
            match mix_sequentialize(&ps) {
                Ok(derivation) => {
                    if pretty {
                        write!(err, "{}", derivation.pretty()).unwrap();
                    }
                    let doc = DerivationDoc::from_derivation(&derivation);
                    emit(out, &serde_json::to_value(doc).unwrap());
                    Ok(EXIT_OK)
                }
                Err(crate::seq::SeqError::Incorrect(witness)) => {
                    emit(out, &json!({ "correct": false, "witness": witness }));
                    Ok(EXIT_NEGATIVE)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Kingdom { input, dot } => {
            let ps = parse_net(&read_input(&input)?)?;
            match kingdom_order(&ps) {
                Ok(order) => {
                    if let Some(path) = dot {
                        fs::write(&path, crate::dot::hasse_dot(&order, &ps))
                            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    }
                    let pairs: Vec<(usize, usize)> = order.closure.iter().copied().collect();
                    let generating: Vec<(usize, usize)> =
                        order.generating.iter().copied().collect();
                    emit(
                        out,
                        &json!({
                            "links": ps.link_count(),
                            "order": pairs,
                            "generating": generating,
                        }),
                    );
                    Ok(EXIT_OK)
                }
                Err(crate::kingdom::KingdomError::NotCorrect) => {
                    emit(out, &json!({ "correct": false }));
                    Ok(EXIT_NEGATIVE)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Translate { input, to } => {
            let text = read_input(&input)?;
            match to {
                TranslateTarget::Rb => {
                    let ps = parse_net(&text)?;
                    let psc = crate::proofnet::add_conclusions(&ps);
                    let mg = crate::translate::rb_graph(&psc);
                    emit(
                        out,
                        &serde_json::to_value(GraphDoc::with_matching(&mg.graph, &mg.matching))
                            .unwrap(),
                    );
                    Ok(EXIT_OK)
                }
                TranslateTarget::Graphify => {
                    let ps = parse_net(&text)?;
                    let (mg, _) = crate::translate::graphification(&ps);
                    emit(
                        out,
                        &serde_json::to_value(GraphDoc::with_matching(&mg.graph, &mg.matching))
                            .unwrap(),
                    );
                    Ok(EXIT_OK)
                }
                TranslateTarget::Proofify => {
                    let doc: GraphDoc = serde_json::from_str(&text).map_err(|e| e.to_string())?;
                    let g = doc.to_graph().map_err(|e| e.to_string())?;
                    let m = doc
                        .to_matching(&g)
                        .map_err(|e| e.to_string())?
                        .ok_or("proofify needs a \"matching\" field")?;
                    if !m.is_perfect(&g) {
                        return Err("proofify needs a perfect matching".into());
                    }
                    if g.vertex_count() == 0 {
                        return Err("the empty graph has no proofification".into());
                    }
                    let (ps, _) = crate::translate::proofification(&g, &m);
                    emit(out, &serde_json::to_value(NetDoc::from_structure(&ps)).unwrap());
                    Ok(EXIT_OK)
                }
                TranslateTarget::Lpm => {
                    let (g, t) = parse_transition_instance(&text)?;
                    let mg = crate::translate::pm_line_graph(&g, &t);
                    emit(
                        out,
                        &serde_json::to_value(GraphDoc::with_matching(&mg.graph, &mg.matching))
                            .unwrap(),
                    );
                    Ok(EXIT_OK)
                }
            }
        }
        Command::Trail { input, all, cap } => {
            let (g, t) = parse_transition_instance(&read_input(&input)?)?;
            if all {
                let trails =
                    brute_force_closed_trails(&g, &t, cap).map_err(|e| e.to_string())?;
                let lists: Vec<Vec<usize>> =
                    trails.iter().map(|trail| trail.edge_ids.clone()).collect();
                let found = !lists.is_empty();
                emit(out, &json!({ "trails": lists }));
                Ok(if found { EXIT_OK } else { EXIT_NEGATIVE })
            } else {
                match find_compatible_closed_trail(&g, &t) {
                    Some(trail) => {
                        emit(out, &json!({ "trail": trail.edge_ids }));
                        Ok(EXIT_OK)
                    }
                    None => {
                        emit(out, &json!({ "trail": serde_json::Value::Null }));
                        Ok(EXIT_NEGATIVE)
                    }
                }
            }
        }
        Command::Gen {
            kind,
            size,
            seed,
            rewire,
            connected,
        } => {
            let mut rng = SplitMix64::new(seed);
            match kind {
                GenKind::Net => {
                    let mut config = NetConfig::with_links(size);
                    config.connected = connected;
                    let mut ps = random_correct_net(&mut rng, &config);
                    if let Some(count) = rewire {
                        ps = rewire_structure(&mut rng, &ps, count);
                    }
                    emit(out, &serde_json::to_value(NetDoc::from_structure(&ps)).unwrap());
                    Ok(EXIT_OK)
                }
                GenKind::Upm => {
                    let (g, m) = random_upm(&mut rng, size);
                    emit(
                        out,
                        &serde_json::to_value(GraphDoc::with_matching(&g, &m)).unwrap(),
                    );
                    Ok(EXIT_OK)
                }
            }
        }
        Command::Validate { input } => {
            let text = read_input(&input)?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let report = validate_value(&value);
            let valid = report["valid"].as_bool().unwrap_or(false);
            emit(out, &report);
            Ok(if valid { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}

fn parse_transition_instance(text: &str) -> Result<(crate::graph::Graph, TransitionSystem), String> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let g = doc.to_graph().map_err(|e| e.to_string())?;
    if let Some(t) = doc.to_transitions(&g).map_err(|e| e.to_string())? {
        return Ok((g, t));
    }
    if let Some(pg) = doc.to_paired().map_err(|e| e.to_string())? {
        return Ok((g, pairs_to_transitions(&pg)));
    }
    Err("expected a \"transitions\" or \"pairs\" field".into())
}

/// Classifies a JSON document by its fields and validates what it claims to
/// be. Unknown shapes are reported as invalid.
pub fn validate_value(value: &serde_json::Value) -> serde_json::Value {
    let fail = |kind: &str, message: String| json!({ "kind": kind, "valid": false, "error": message });
    if value.get("links").is_some() {
        return match serde_json::from_value::<NetDoc>(value.clone())
            .map_err(|e| e.to_string())
            .and_then(|doc| doc.to_structure().map_err(|e| e.to_string()))
        {
            Ok(ps) => json!({
                "kind": "net",
                "valid": true,
                "links": ps.link_count(),
                "edges": ps.edge_count(),
            }),
            Err(message) => fail("net", message),
        };
    }
    if value.get("rule").is_some() {
        return match serde_json::from_value::<DerivationDoc>(value.clone()) {
            Ok(_) => json!({ "kind": "derivation", "valid": true }),
            Err(e) => fail("derivation", e.to_string()),
        };
    }
    if value.get("node").is_some() {
        return match serde_json::from_value::<UpmDoc>(value.clone()) {
            Ok(_) => json!({ "kind": "upm_derivation", "valid": true }),
            Err(e) => fail("upm_derivation", e.to_string()),
        };
    }
    if value.get("vertices").is_some() {
        let doc = match serde_json::from_value::<GraphDoc>(value.clone()) {
            Ok(doc) => doc,
            Err(e) => return fail("graph", e.to_string()),
        };
        let g = match doc.to_graph() {
            Ok(g) => g,
            Err(e) => return fail("graph", e.to_string()),
        };
        let mut kind = "graph";
        let mut perfect = serde_json::Value::Null;
        match doc.to_matching(&g) {
            Ok(Some(m)) => {
                kind = "matched_graph";
                perfect = json!(m.is_perfect(&g));
            }
            Ok(None) => {}
            Err(e) => return fail("matched_graph", e.to_string()),
        }
        match doc.to_transitions(&g) {
            Ok(Some(_)) => kind = "transition_instance",
            Ok(None) => {}
            Err(e) => return fail("transition_instance", e.to_string()),
        }
        match doc.to_paired() {
            Ok(Some(_)) => kind = "paired_graph",
            Ok(None) => {}
            Err(e) => return fail("paired_graph", e.to_string()),
        }
        let mut report = json!({
            "kind": kind,
            "valid": true,
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
        });
        if !perfect.is_null() {
            report["perfect"] = perfect;
        }
        return report;
    }
    // Outputs of the verdict-style subcommands.
    for key in ["correct", "order", "trail", "trails"] {
        if value.get(key).is_some() {
            return json!({ "kind": "report", "valid": true });
        }
    }
    fail("unknown", "unrecognized document shape".into())
}
