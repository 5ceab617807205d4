//! Command-line front end. `main` only parses arguments and forwards to
//! [`run`], which writes to the given stream so it can be driven from tests.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::commuting::{self, CommutingError, Variant};
use crate::graph::{GraphError, SimpleGraph};
use crate::group::FiniteGroup;
use crate::harness::{self, CorpusEntry, VerifyOptions};
use crate::recognition::{
    self, forbidden_family, krausz_oracle, RecognitionResult, MAX_KRAUSZ_VERTICES,
};
use crate::selector::{parse_group, SelectorError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Selector(#[from] SelectorError),
    #[error(transparent)]
    Commuting(#[from] CommutingError),
    #[error("{path}: {source}")]
    GraphFile { path: String, source: GraphError },
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization failed: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(
    name = "comgraph",
    version,
    about = "Commuting graphs of finite groups and line-graph recognition"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Describe a group: center, classes, commuting probability.
    Group(GroupArgs),
    /// Emit Γ, Γ* or Γ** of a group as an edge list or DOT.
    Graph(GraphArgs),
    /// Decide line-graph and complement-of-line-graph membership.
    Recognize(RecognizeArgs),
    /// Derive and print the nine forbidden induced subgraphs.
    Forbidden(ForbiddenArgs),
    /// Check the classification theorems over a corpus of groups.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Full,
    Star,
    #[value(name = "double_star", alias = "double-star")]
    DoubleStar,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Full => Variant::Full,
            VariantArg::Star => Variant::Star,
            VariantArg::DoubleStar => Variant::DoubleStar,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Edgelist,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Report,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupFormat {
    Report,
    Structured,
    Cayley,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Group selector: Zn, Dn, Dicm, Q8, Sk, Ak, products like D4xZ2, or @path.
    #[arg(long)]
    pub group: String,
    #[arg(long, value_enum, default_value = "report")]
    pub format: GroupFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long, value_enum, default_value = "full")]
    pub variant: VariantArg,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: GraphFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RecognizeArgs {
    #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
    pub group: Option<String>,
    /// Edge-list file to recognize instead of a commuting graph.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "full")]
    pub variant: VariantArg,
    #[arg(long, value_enum, default_value = "report")]
    pub format: ReportFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ForbiddenArgs {
    /// Print the complemented family instead.
    #[arg(long)]
    pub complement: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated group selectors to verify instead of the default corpus.
    #[arg(long, conflicts_with = "corpus")]
    pub only: Option<String>,
    /// File with one group selector per line.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    /// Add groups above the default order cap (S5).
    #[arg(long)]
    pub include_large: bool,
    /// Also sample 50 random induced subgraphs of every recognized line
    /// graph with this seed and check they are line graphs.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value = "report")]
    pub format: ReportFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

const HEREDITARY_SAMPLES: usize = 50;

/// Runs one invocation and returns the process exit status.
///
/// Only `verify` reports a nonzero status on success paths, when any
/// mismatch is found; a recognition verdict of "no" is still status 0.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Group(args) => {
            let group = parse_group(&args.group)?;
            let text = match args.format {
                GroupFormat::Report => group_report(&group),
                GroupFormat::Structured => {
                    serde_json::to_string_pretty(&group_json(&group))? + "\n"
                }
                GroupFormat::Cayley => group.to_cayley_table(),
            };
            emit(&text, args.output.as_ref(), stdout)?;
            Ok(0)
        }
        Command::Graph(args) => {
            let group = parse_group(&args.group)?;
            let cg = commuting::build(&group, args.variant.into())?;
            let text = match args.format {
                GraphFormat::Edgelist => cg.graph().to_edge_list(),
                GraphFormat::Dot => cg.graph().to_dot(&cg.title()),
            };
            emit(&text, args.output.as_ref(), stdout)?;
            Ok(0)
        }
        Command::Recognize(args) => {
            let (title, graph) = match (&args.group, &args.graph) {
                (Some(sel), _) => {
                    let group = parse_group(sel)?;
                    let cg = commuting::build(&group, args.variant.into())?;
                    (cg.title(), cg.into_graph())
                }
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
                        path: path.display().to_string(),
                        source,
                    })?;
                    let graph = SimpleGraph::from_edge_list(&text).map_err(|source| {
                        CliError::GraphFile {
                            path: path.display().to_string(),
                            source,
                        }
                    })?;
                    (path.display().to_string(), graph)
                }
                (None, None) => return Err(CliError::Usage("need --group or --graph".into())),
            };
            let text = recognize_output(&title, &graph, args.format)?;
            emit(&text, args.output.as_ref(), stdout)?;
            Ok(0)
        }
        Command::Forbidden(args) => {
            let family = forbidden_family();
            let mut text = family.export(args.complement);
            text.push_str("# member vertices edges\n");
            let graphs = if args.complement {
                family.complemented_members()
            } else {
                family.members()
            };
            for (i, g) in graphs.iter().enumerate() {
                let _ = writeln!(text, "# {} {} {}", i + 1, g.vertex_count(), g.edge_count());
            }
            emit(&text, args.output.as_ref(), stdout)?;
            Ok(0)
        }
        Command::Verify(args) => {
            let mut corpus: Vec<CorpusEntry> = match (&args.only, &args.corpus) {
                (Some(list), _) => list
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| parse_group(s).map(CorpusEntry::new))
                    .collect::<Result<_, _>>()?,
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
                        path: path.display().to_string(),
                        source,
                    })?;
                    text.lines()
                        .map(str::trim)
                        .filter(|l| !l.is_empty() && !l.starts_with('#'))
                        .map(|s| parse_group(s).map(CorpusEntry::new))
                        .collect::<Result<_, _>>()?
                }
                (None, None) => harness::default_corpus(),
            };
            if args.include_large {
                for entry in harness::large_corpus() {
                    if corpus.iter().all(|e| e.name != entry.name) {
                        corpus.push(entry);
                    }
                }
            }
            let options = VerifyOptions {
                hereditary_samples: if args.seed.is_some() {
                    HEREDITARY_SAMPLES
                } else {
                    0
                },
                seed: args.seed.unwrap_or(0),
            };
            let report = harness::verify_corpus(&corpus, options);
            let text = match args.format {
                ReportFormat::Report => {
                    let mut text = String::new();
                    text.push_str(harness::report_header());
                    text.push('\n');
                    for r in &report.reports {
                        text.push_str(&harness::report_line(r));
                        text.push('\n');
                    }
                    let _ = writeln!(
                        text,
                        "groups: {}, mismatches: {}",
                        report.summary.groups, report.summary.mismatches
                    );
                    for name in &report.summary.groups_with_mismatches {
                        let _ = writeln!(text, "mismatch in {name}");
                    }
                    text
                }
                ReportFormat::Structured => serde_json::to_string_pretty(&report)? + "\n",
            };
            emit(&text, args.output.as_ref(), stdout)?;
            writeln!(
                stderr,
                "verified {} groups in {:.2?}",
                report.summary.groups, report.elapsed
            )?;
            Ok(u8::from(report.summary.mismatches > 0))
        }
    }
}

fn emit(text: &str, output: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.display().to_string(),
            source,
        }),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

fn group_report(g: &FiniteGroup) -> String {
    let classes = g.conjugacy_classes();
    let p2 = g.commuting_probability();
    let mut out = String::new();
    let _ = writeln!(out, "group: {}", g.name());
    let _ = writeln!(out, "order: {}", g.order());
    let _ = writeln!(
        out,
        "abelian: {}",
        if g.is_abelian() { "yes" } else { "no" }
    );
    let _ = writeln!(out, "center: {{{}}}", g.center().names().join(", "));
    let sizes: Vec<String> = classes.sizes().iter().map(ToString::to_string).collect();
    let _ = writeln!(
        out,
        "conjugacy classes: {} (sizes {})",
        classes.len(),
        sizes.join(", ")
    );
    let _ = writeln!(out, "commuting probability: {}/{}", p2.numer(), p2.denom());
    let _ = writeln!(out, "involutions: {}", g.involution_count());
    let _ = writeln!(
        out,
        "non-central centralizers abelian: {}",
        if g.noncentral_centralizers_abelian() {
            "yes"
        } else {
            "no"
        }
    );
    let _ = writeln!(out, "elements: {}", g.element_names().join(" "));
    out
}

fn group_json(g: &FiniteGroup) -> serde_json::Value {
    let p2 = g.commuting_probability();
    json!({
        "name": g.name(),
        "order": g.order(),
        "abelian": g.is_abelian(),
        "center": g.center().names(),
        "conjugacy_class_sizes": g.conjugacy_classes().sizes(),
        "commuting_probability": format!("{}/{}", p2.numer(), p2.denom()),
        "involutions": g.involution_count(),
        "noncentral_centralizers_abelian": g.noncentral_centralizers_abelian(),
        "elements": g.element_names(),
    })
}

#[derive(Debug, Serialize)]
struct Certificate {
    verdict: bool,
    method: recognition::Method,
    forbidden_member: Option<usize>,
    embedding: Option<recognition::EmbeddingSummary>,
    /// Cliques of the Krausz partition, as host labels.
    krausz_partition: Option<Vec<Vec<String>>>,
    root_edges: Option<Vec<(usize, usize)>>,
}

/// `krausz_host` is the graph whose partition certifies a YES: the graph
/// itself, or its complement.
fn certificate(
    graph: &SimpleGraph,
    result: &RecognitionResult,
    krausz_host: &SimpleGraph,
) -> Certificate {
    let krausz = (result.verdict && krausz_host.vertex_count() <= MAX_KRAUSZ_VERTICES)
        .then(|| krausz_oracle(krausz_host).expect("within the oracle limit"));
    let partition = krausz.as_ref().and_then(|k| k.partition.as_ref()).map(|p| {
        p.cliques
            .iter()
            .map(|c| c.iter().map(|&v| krausz_host.label(v)).collect())
            .collect()
    });
    let root_edges = krausz
        .as_ref()
        .and_then(|k| k.root.as_ref())
        .map(|r| r.edges().collect());
    Certificate {
        verdict: result.verdict,
        method: result.method,
        forbidden_member: result.family_index,
        embedding: result.embedding.as_ref().map(|e| e.summary(graph)),
        krausz_partition: partition,
        root_edges,
    }
}

fn describe(out: &mut String, heading: &str, cert: &Certificate) {
    let _ = writeln!(
        out,
        "{heading}: {}",
        if cert.verdict { "yes" } else { "no" }
    );
    if let (Some(idx), Some(e)) = (cert.forbidden_member, &cert.embedding) {
        let _ = writeln!(
            out,
            "  forbidden member {} of 9 ({} vertices, {} edges) induced on: {}",
            idx + 1,
            e.pattern_vertices,
            e.pattern_edges.len(),
            e.host_labels.join(", ")
        );
        let edges: Vec<String> = e
            .pattern_edges
            .iter()
            .map(|&(a, b)| format!("{} ~ {}", e.host_labels[a], e.host_labels[b]))
            .collect();
        let _ = writeln!(out, "  pattern edges: {}", edges.join(", "));
    }
    if let Some(cliques) = &cert.krausz_partition {
        let rendered: Vec<String> = cliques
            .iter()
            .map(|c| format!("{{{}}}", c.join(", ")))
            .collect();
        let _ = writeln!(out, "  krausz partition: {}", rendered.join(" "));
    }
    if let Some(edges) = &cert.root_edges {
        let _ = writeln!(out, "  root graph: {} edges", edges.len());
    }
    if cert.verdict && cert.krausz_partition.is_none() {
        let _ = writeln!(
            out,
            "  no forbidden member embeds (partition certificates need at most {MAX_KRAUSZ_VERTICES} vertices)"
        );
    }
}

fn recognize_output(
    title: &str,
    graph: &SimpleGraph,
    format: ReportFormat,
) -> Result<String, CliError> {
    let line = recognition::is_line_graph(graph);
    let coline = recognition::is_complement_of_line_graph(graph);
    let line_cert = certificate(graph, &line, graph);
    let coline_cert = certificate(graph, &coline, &graph.complement());
    Ok(match format {
        ReportFormat::Report => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "graph: {title}, {} vertices, {} edges",
                graph.vertex_count(),
                graph.edge_count()
            );
            describe(&mut out, "line graph", &line_cert);
            describe(&mut out, "complement of line graph", &coline_cert);
            out
        }
        ReportFormat::Structured => {
            let value = json!({
                "graph": {
                    "name": title,
                    "vertices": graph.vertex_count(),
                    "edges": graph.edge_count(),
                },
                "line_graph": line_cert,
                "complement_of_line_graph": coline_cert,
            });
            serde_json::to_string_pretty(&value)? + "\n"
        }
    })
}
