//! Command-line interface: every pipeline behind one binary with
//! machine-readable reports.
//!
//! Exit codes: 0 when every requested verification passes, 1 on a
//! verification failure (with diagnostics in the report), 2 on input
//! errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use cogkit::cog::{build_g_k, build_g_p_cyclic, is_faithful_criterion};
use cogkit::complexes::{
    build_chamber, build_x, chamber_scwol, graph_isomorphic, hyperbolicity_report,
    BipartiteGraph, SimpleGraph,
};
use cogkit::covering::{build_phi_gamma, build_psi_w, search_covering, CoveringData};
use cogkit::presentation::{
    build_amalgam, direct_limit, gamma_presentation, kg1_gluing, presentation_h, w_presentation,
};

#[derive(Parser)]
#[command(
    name = "cogkit",
    about = "Polygonal complexes, complexes of groups, coverings and presentations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PhiSource {
    /// The explicit hand construction.
    Paper,
    /// Rederive the element family by backtracking search.
    Search,
}

#[derive(Args)]
struct Common {
    /// Half the gon size: faces are 2m-gons.
    #[arg(long)]
    m: usize,
    /// Left side of a complete bipartite graph (with --q2).
    #[arg(long)]
    q1: Option<usize>,
    /// Right side of a complete bipartite graph (with --q1).
    #[arg(long)]
    q2: Option<usize>,
    /// Path to a bipartite graph JSON file (instead of --q1/--q2).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Where the covering element family comes from.
    #[arg(long, value_enum, default_value_t = PhiSource::Paper)]
    seed_phi: PhiSource,
    /// Node budget for the backtracking search (0 = unlimited).
    #[arg(long, default_value_t = 0)]
    limit: u64,
}

impl Common {
    fn graph_input(&self) -> Result<BipartiteGraph> {
        match (&self.graph, self.q1, self.q2) {
            (Some(path), None, None) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let value: serde_json::Value = serde_json::from_str(&text)?;
                Ok(BipartiteGraph::from_json(&value)?)
            }
            (None, Some(q1), Some(q2)) => Ok(BipartiteGraph::complete(q1, q2)),
            _ => bail!("provide either --graph FILE or both --q1 and --q2"),
        }
    }

    fn complete_input(&self) -> Result<(usize, usize)> {
        match (self.q1, self.q2, &self.graph) {
            (Some(q1), Some(q2), None) => Ok((q1, q2)),
            _ => bail!("this subcommand works in complete-graph mode: pass --q1 and --q2"),
        }
    }

    fn node_limit(&self) -> Option<u64> {
        if self.limit == 0 {
            None
        } else {
            Some(self.limit)
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build the polygonal complex and check every vertex link against L.
    BuildX(Common),
    /// Build the chamber (cone on the subdivided graph) and its scwol.
    Chamber(Common),
    /// Build the complex of groups (polygon of groups in complete mode,
    /// chamber of groups in graph mode) and report on it.
    Cog(Common),
    /// Build and verify the covering of the polygon of groups.
    CoverGamma(Common),
    /// Build and verify the covering of the chamber of groups.
    CoverW(Common),
    /// Search element families for every applicable codomain and verify.
    CoverSearch(Common),
    /// Exact Euler characteristics and the multiplicativity identities.
    Euler(Common),
    /// Presentations of the fundamental group and both ambient groups.
    Present(Common),
    /// The graph of groups over the smaller complete bipartite graph and
    /// its colimit, compared against the contraction presentation.
    Amalgam(Common),
    /// Aspherical gluing data: polygons attached along a loop bouquet.
    Kg1(Common),
    /// Hyperbolicity of the ambient Coxeter group.
    Hyperbolicity(Common),
}

fn emit(common: &Common, text: String) -> Result<()> {
    match &common.out {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .with_context(|| format!("creating {}", path.display()))?;
            writeln!(f, "{}", text)?;
        }
        None => println!("{}", text),
    }
    Ok(())
}

fn emit_json(common: &Common, value: &serde_json::Value) -> Result<()> {
    emit(common, serde_json::to_string_pretty(value)?)
}

/// Re-derives a covering's elements by search when requested.
fn seeded(common: &Common, covering: CoveringData) -> Result<CoveringData> {
    match common.seed_phi {
        PhiSource::Paper => Ok(covering),
        PhiSource::Search => search_covering(
            &covering.domain,
            &covering.codomain,
            &covering.morphism,
            common.node_limit(),
        )
        .ok_or_else(|| anyhow!("search found no covering within the node budget")),
    }
}

fn covering_verdict(common: &Common, covering: &CoveringData, kind: &str) -> Result<bool> {
    let report = covering.report_json();
    let ok = covering.verify().report.is_clean();
    match common.format {
        Format::Json => emit_json(
            common,
            &serde_json::json!({ "covering": kind, "report": report }),
        )?,
        Format::Text => {
            emit(
                common,
                format!(
                    "{} covering: sheets {} (lower bound {}), condition1 {}, condition2 {}, chi ratio {}",
                    kind,
                    report["sheets"],
                    report["sheetLowerBound"],
                    report["condition1"].as_str().unwrap_or("?"),
                    report["condition2"].as_str().unwrap_or("?"),
                    report["euler"]["ratio"],
                ),
            )?;
        }
        Format::Dot => bail!("dot output is not defined for covering reports"),
    }
    Ok(ok)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::BuildX(c) => {
            let graph = c.graph_input()?;
            let x = build_x(c.m, &graph)?;
            if c.format == Format::Dot {
                emit(&c, x.to_dot("X"))?;
                return Ok(true);
            }
            let report = x.validate();
            let reference = SimpleGraph::from_bipartite(&graph);
            let mut links = serde_json::Map::new();
            let mut all_links_ok = true;
            for v in 0..x.vertex_count() {
                let ok = graph_isomorphic(&x.link(v), &reference).is_some();
                all_links_ok &= ok;
                links.insert(
                    x.vertex_label(v).to_string(),
                    serde_json::json!(if ok { "isomorphic to L" } else { "NOT isomorphic" }),
                );
            }
            let ok = report.is_clean() && all_links_ok;
            let mut warnings = Vec::new();
            if let Some(w) = graph.lattice_size_warning() {
                warnings.push(w);
            }
            let value = serde_json::json!({
                "complex": x.to_json(),
                "euler": x.euler_characteristic(),
                "regularity": if report.is_clean() { "ok" } else { "failed" },
                "links": links,
                "warnings": warnings,
            });
            match c.format {
                Format::Json => emit_json(&c, &value)?,
                Format::Text => emit(
                    &c,
                    format!(
                        "complex with {} vertices, {} edges, {} faces; chi = {}; links {}",
                        x.vertex_count(),
                        x.edge_count(),
                        x.face_count(),
                        x.euler_characteristic(),
                        if all_links_ok {
                            "all isomorphic to L"
                        } else {
                            "BROKEN"
                        },
                    ),
                )?,
                Format::Dot => unreachable!(),
            }
            Ok(ok)
        }
        Command::Chamber(c) => {
            let graph = c.graph_input()?;
            let chamber = build_chamber(c.m, &graph)?;
            let ks = chamber_scwol(&chamber);
            if c.format == Format::Dot {
                emit(&c, ks.scwol.to_dot("chamber"))?;
                return Ok(true);
            }
            let ok = chamber.complex.validate().is_clean()
                && chamber.complex.intersection_property_issues().is_empty()
                && ks.scwol.validate().is_clean();
            let vertices: Vec<_> = (0..chamber.complex.vertex_count())
                .map(|v| {
                    serde_json::json!({
                        "label": chamber.complex.vertex_label(v),
                        "type": chamber.types[v].label(),
                    })
                })
                .collect();
            let mirrors: serde_json::Map<String, serde_json::Value> = chamber
                .mirrors
                .iter()
                .map(|(s, edges)| (s.clone(), serde_json::json!(edges.len())))
                .collect();
            let value = serde_json::json!({
                "vertices": vertices,
                "mirrorSizes": mirrors,
                "scwol": ks.scwol.to_json(),
                "status": if ok { "ok" } else { "failed" },
            });
            match c.format {
                Format::Json => emit_json(&c, &value)?,
                Format::Text => emit(
                    &c,
                    format!(
                        "chamber with {} vertices, scwol with {} edges and {} chains; {}",
                        chamber.complex.vertex_count(),
                        ks.scwol.edge_count(),
                        ks.scwol.chains().pairs.len(),
                        if ok { "ok" } else { "failed" }
                    ),
                )?,
                Format::Dot => unreachable!(),
            }
            Ok(ok)
        }
        Command::Cog(c) => {
            let (cog, which) = if c.graph.is_some() {
                let graph = c.graph_input()?;
                (build_g_k(c.m, &graph)?.cog, "chamber of groups")
            } else {
                let (q1, q2) = c.complete_input()?;
                (build_g_p_cyclic(c.m, q1, q2)?.cog, "polygon of groups")
            };
            let ok = cog.validate().is_clean();
            let value = serde_json::json!({
                "complex": which,
                "faithfulnessCriterion": is_faithful_criterion(&cog),
                "report": cog.report_json(),
            });
            match c.format {
                Format::Json => emit_json(&c, &value)?,
                Format::Text => emit(
                    &c,
                    format!("{}: functoriality {}", which, if ok { "ok" } else { "failed" }),
                )?,
                Format::Dot => emit(&c, cog.base().to_dot(which))?,
            }
            Ok(ok)
        }
        Command::CoverGamma(c) => {
            let (q1, q2) = c.complete_input()?;
            let covering = seeded(&c, build_phi_gamma(c.m, q1, q2)?)?;
            covering_verdict(&c, &covering, "gamma")
        }
        Command::CoverW(c) => {
            let graph = c.graph_input()?;
            let covering = seeded(&c, build_psi_w(c.m, &graph)?)?;
            covering_verdict(&c, &covering, "w")
        }
        Command::CoverSearch(c) => {
            let mut reports = serde_json::Map::new();
            let mut ok = true;
            let graph = c.graph_input()?;
            if graph.is_complete() && graph.q1() >= 2 && graph.q2() >= 2 {
                let base = build_phi_gamma(c.m, graph.q1(), graph.q2())?;
                let found =
                    search_covering(&base.domain, &base.codomain, &base.morphism, c.node_limit())
                        .ok_or_else(|| anyhow!("no polygon covering found"))?;
                ok &= found.verify().report.is_clean();
                reports.insert("gamma".into(), found.report_json());
            }
            let base = build_psi_w(c.m, &graph)?;
            let found =
                search_covering(&base.domain, &base.codomain, &base.morphism, c.node_limit())
                    .ok_or_else(|| anyhow!("no chamber covering found"))?;
            ok &= found.verify().report.is_clean();
            reports.insert("w".into(), found.report_json());
            match c.format {
                Format::Json => emit_json(&c, &serde_json::Value::Object(reports))?,
                Format::Text => {
                    let mut lines = Vec::new();
                    for (k, v) in &reports {
                        lines.push(format!("{}: sheets {}", k, v["sheets"]));
                    }
                    emit(&c, lines.join("\n"))?;
                }
                Format::Dot => bail!("dot output is not defined for covering reports"),
            }
            Ok(ok)
        }
        Command::Euler(c) => {
            let graph = c.graph_input()?;
            let x = build_x(c.m, &graph)?;
            let mut value = serde_json::Map::new();
            value.insert("chiX".into(), serde_json::json!(x.euler_characteristic()));
            let mut ok = true;
            {
                let cov = build_psi_w(c.m, &graph)?;
                let outcome = cov.verify();
                ok &= outcome.euler.multiplicative == Some(true);
                let chi = outcome.euler.chi_orb_codomain;
                value.insert(
                    "chamberOfGroups".into(),
                    serde_json::json!({
                        "chiOrb": format!("{}/{}", chi.numer(), chi.denom()),
                        "sheets": outcome.sheets,
                        "identity": if outcome.euler.multiplicative == Some(true) { "ok" } else { "failed" },
                    }),
                );
            }
            if graph.is_complete() && graph.q1() >= 2 && graph.q2() >= 2 {
                let cov = build_phi_gamma(c.m, graph.q1(), graph.q2())?;
                let outcome = cov.verify();
                ok &= outcome.euler.multiplicative == Some(true);
                let chi = outcome.euler.chi_orb_codomain;
                value.insert(
                    "polygonOfGroups".into(),
                    serde_json::json!({
                        "chiOrb": format!("{}/{}", chi.numer(), chi.denom()),
                        "sheets": outcome.sheets,
                        "identity": if outcome.euler.multiplicative == Some(true) { "ok" } else { "failed" },
                    }),
                );
            }
            match c.format {
                Format::Json => emit_json(&c, &serde_json::Value::Object(value))?,
                Format::Text => emit(
                    &c,
                    format!(
                        "chi(X) = {}; multiplicativity {}",
                        x.euler_characteristic(),
                        if ok { "ok" } else { "failed" }
                    ),
                )?,
                Format::Dot => bail!("dot output is not defined for euler reports"),
            }
            Ok(ok)
        }
        Command::Present(c) => {
            let mut value = serde_json::Map::new();
            let mut ok = true;
            let mut texts = Vec::new();
            if c.graph.is_none() {
                let (q1, q2) = c.complete_input()?;
                let h = presentation_h(c.m, q1, q2)?;
                let colimit = direct_limit(&build_amalgam(c.m, q1, q2));
                ok &= h.equivalent(&colimit);
                value.insert("h".into(), h.to_json());
                value.insert("routesAgree".into(), serde_json::json!(ok));
                let gamma = gamma_presentation(c.m, q1, q2);
                value.insert("gamma".into(), gamma.to_json());
                let w = w_presentation(c.m, &BipartiteGraph::complete(q1, q2));
                value.insert("w".into(), w.to_json());
                texts.push(format!("H = {}", h.display_text()));
                texts.push(format!("Gamma = {}", gamma.display_text()));
                texts.push(format!("W = {}", w.display_text()));
            } else {
                let graph = c.graph_input()?;
                let w = w_presentation(c.m, &graph);
                value.insert("w".into(), w.to_json());
                texts.push(format!("W = {}", w.display_text()));
            }
            match c.format {
                Format::Json => emit_json(&c, &serde_json::Value::Object(value))?,
                Format::Text => emit(&c, texts.join("\n"))?,
                Format::Dot => bail!("dot output is not defined for presentations"),
            }
            Ok(ok)
        }
        Command::Amalgam(c) => {
            let (q1, q2) = c.complete_input()?;
            let amalgam = build_amalgam(c.m, q1, q2);
            let colimit = direct_limit(&amalgam);
            let h = presentation_h(c.m, q1, q2)?;
            let agrees = colimit.equivalent(&h);
            let sinks = amalgam
                .base
                .vertices()
                .filter(|&v| amalgam.base.edges_out(v).is_empty())
                .count();
            let value = serde_json::json!({
                "baseVertices": amalgam.base.vertex_count(),
                "baseEdges": amalgam.base.edge_count(),
                "surfaceGroups": sinks,
                "freeGroups": amalgam.base.vertex_count() - sinks,
                "structureValid": amalgam.validate(),
                "colimit": colimit.to_json(),
                "equalsContraction": agrees,
            });
            match c.format {
                Format::Json => emit_json(&c, &value)?,
                Format::Text => emit(
                    &c,
                    format!(
                        "amalgam of {} surface groups over {} free groups; colimit {} the contraction presentation",
                        sinks,
                        amalgam.base.vertex_count() - sinks,
                        if agrees { "equals" } else { "DIFFERS FROM" }
                    ),
                )?,
                Format::Dot => emit(&c, amalgam.base.to_dot("amalgam"))?,
            }
            Ok(agrees && amalgam.validate())
        }
        Command::Kg1(c) => {
            let (q1, q2) = c.complete_input()?;
            let glued = kg1_gluing(c.m, q1, q2);
            let ok = glued.validate();
            let attaching: Vec<String> = glued.attaching.iter().map(|w| w.to_string()).collect();
            let value = serde_json::json!({
                "loops": glued.loops,
                "polygons": attaching,
                "chi": glued.euler_characteristic(),
                "status": if ok { "ok" } else { "failed" },
            });
            match c.format {
                Format::Json => emit_json(&c, &value)?,
                Format::Text => emit(
                    &c,
                    format!(
                        "{} polygons on {} loops, chi = {}",
                        glued.attaching.len(),
                        glued.loops.len(),
                        glued.euler_characteristic()
                    ),
                )?,
                Format::Dot => bail!("dot output is not defined for gluing data"),
            }
            Ok(ok)
        }
        Command::Hyperbolicity(c) => {
            let graph = c.graph_input()?;
            let report = hyperbolicity_report(c.m, &graph);
            let value = serde_json::json!({
                "hyperbolic": report.hyperbolic,
                "witnessFourCycle": report.witness,
            });
            match c.format {
                Format::Json => emit_json(&c, &value)?,
                Format::Text => emit(
                    &c,
                    match &report.witness {
                        Some(w) => format!("not hyperbolic: four-cycle {}", w.join(" ")),
                        None => "hyperbolic".to_string(),
                    },
                )?,
                Format::Dot => bail!("dot output is not defined for hyperbolicity"),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("COGKIT_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {:#}", err);
            ExitCode::from(2)
        }
    }
}
