//! Acceptance suite: one test per headline claim, each over its full
//! parameter grid, printing one PASS line on success. Everything here is
//! exact; there are no tolerances.

use std::time::{Duration, Instant};

use num::rational::Rational64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cogkit::cog::{build_g_k, build_g_p_cyclic, local_development};
use cogkit::complexes::{
    build_x, graph_isomorphic, verify_graph_isomorphism, BipartiteGraph, CellRef, SimpleGraph,
};
use cogkit::covering::{
    build_phi_gamma, build_psi_w, search_covering, sheet_lower_bound, CoveringData, CoveringIssue,
};
use cogkit::groups::{Elem, Monomorphism, SphericalSubset};
use cogkit::presentation::{
    build_amalgam, contraction_pipeline, direct_limit, euler_check_surface, presentation_h,
    raag_check,
};

const M_GRID: [usize; 4] = [2, 3, 4, 5];
const Q_GRID: [usize; 3] = [2, 3, 4];

/// The six test graphs for the chamber covering.
fn psi_graphs() -> Vec<(&'static str, BipartiteGraph)> {
    vec![
        ("K22", BipartiteGraph::complete(2, 2)),
        ("K23", BipartiteGraph::complete(2, 3)),
        ("K33", BipartiteGraph::complete(3, 3)),
        (
            "K23-minus-edge",
            BipartiteGraph::new(2, 3, &[(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)]).unwrap(),
        ),
        ("path3", BipartiteGraph::path(3).unwrap()),
        ("cycle6", BipartiteGraph::cycle(6).unwrap()),
    ]
}

#[test]
fn acceptance_1_covering_gamma_sheets_and_maximality() {
    let mut points = 0;
    for m in M_GRID {
        for q1 in Q_GRID {
            for q2 in Q_GRID {
                let cov = build_phi_gamma(m, q1, q2).expect("construction succeeds");
                let outcome = cov.verify();
                assert!(
                    outcome.report.is_clean(),
                    "covering invalid at ({},{},{}): {:?}",
                    m,
                    q1,
                    q2,
                    outcome.report.issues
                );
                assert_eq!(outcome.sheets, Some(q1 * q2), "sheets at ({},{},{})", m, q1, q2);
                assert_eq!(
                    sheet_lower_bound(&cov.codomain),
                    q1 * q2,
                    "lower bound at ({},{},{})",
                    m,
                    q1,
                    q2
                );
                points += 1;
            }
        }
    }
    println!(
        "ACCEPTANCE 1 (polygon covering: q1*q2 sheets, maximal): PASS on {} grid points",
        points
    );
}

#[test]
fn acceptance_2_covering_w_sheets_and_maximality() {
    let mut points = 0;
    for m in M_GRID {
        for (name, graph) in psi_graphs() {
            let cov = build_psi_w(m, &graph).expect("construction succeeds");
            let outcome = cov.verify();
            assert!(
                outcome.report.is_clean(),
                "covering invalid at m={} L={}: {:?}",
                m,
                name,
                outcome.report.issues
            );
            assert_eq!(outcome.sheets, Some(2 * m), "sheets at m={} L={}", m, name);
            assert_eq!(
                sheet_lower_bound(&cov.codomain),
                2 * m,
                "lower bound at m={} L={}",
                m,
                name
            );
            points += 1;
        }
    }
    println!(
        "ACCEPTANCE 2 (chamber covering: 2m sheets, maximal): PASS on {} grid points",
        points
    );
}

#[test]
fn acceptance_3_euler_oracle() {
    let mut checks = 0;
    for m in M_GRID {
        for q1 in Q_GRID {
            for q2 in Q_GRID {
                let cov = build_phi_gamma(m, q1, q2).unwrap();
                let outcome = cov.verify();
                assert_eq!(outcome.euler.multiplicative, Some(true));
                let n = Rational64::from_integer((q1 * q2) as i64);
                assert_eq!(
                    Rational64::from_integer(outcome.euler.chi_domain),
                    n * outcome.euler.chi_orb_codomain
                );
                checks += 1;
            }
        }
    }
    for m in M_GRID {
        for (_, graph) in psi_graphs() {
            let cov = build_psi_w(m, &graph).unwrap();
            let outcome = cov.verify();
            assert_eq!(outcome.euler.multiplicative, Some(true));
            checks += 1;
        }
    }
    // cell-count identity for the complex itself
    let mut graphs: Vec<BipartiteGraph> = psi_graphs().into_iter().map(|(_, g)| g).collect();
    for q1 in Q_GRID {
        for q2 in Q_GRID {
            graphs.push(BipartiteGraph::complete(q1, q2));
        }
    }
    for m in M_GRID {
        for graph in &graphs {
            let x = build_x(m, graph).unwrap();
            let expected = 2 * m as i64 - (m * (graph.q1() + graph.q2())) as i64
                + graph.edge_count() as i64;
            assert_eq!(x.euler_characteristic(), expected);
            checks += 1;
        }
    }
    println!(
        "ACCEPTANCE 3 (exact Euler multiplicativity and cell counts): PASS on {} checks",
        checks
    );
}

#[test]
fn acceptance_4_links_are_l() {
    let mut checks = 0;
    let mut graphs: Vec<BipartiteGraph> = psi_graphs().into_iter().map(|(_, g)| g).collect();
    for q1 in Q_GRID {
        for q2 in Q_GRID {
            graphs.push(BipartiteGraph::complete(q1, q2));
        }
    }
    for m in M_GRID {
        for graph in &graphs {
            let x = build_x(m, graph).unwrap();
            let reference = SimpleGraph::from_bipartite(graph);
            assert_eq!(x.vertex_count(), 2 * m);
            for v in 0..x.vertex_count() {
                let link = x.link(v);
                let map = graph_isomorphic(&link, &reference)
                    .unwrap_or_else(|| panic!("link not isomorphic to L at vertex {}", v));
                assert!(verify_graph_isomorphism(&link, &reference, &map));
                checks += 1;
            }
        }
    }
    println!(
        "ACCEPTANCE 4 (every vertex link isomorphic to L, isomorphism exhibited): PASS on {} links",
        checks
    );
}

#[test]
fn acceptance_5_worked_example_m4_k34() {
    let x = build_x(4, &BipartiteGraph::complete(3, 4)).unwrap();
    assert_eq!(x.face_count(), 12);
    let expected: [[&str; 8]; 12] = [
        ["x1^1", "y1^1", "x1^2", "y1^2", "x1^3", "y1^3", "x1^4", "y1^4"],
        ["x2^1", "y1^1", "x2^2", "y1^2", "x2^3", "y1^3", "x2^4", "y1^4"],
        ["x3^1", "y1^1", "x3^2", "y1^2", "x3^3", "y1^3", "x3^4", "y1^4"],
        ["x1^1", "y2^1", "x1^2", "y2^2", "x1^3", "y2^3", "x1^4", "y2^4"],
        ["x2^1", "y2^1", "x2^2", "y2^2", "x2^3", "y2^3", "x2^4", "y2^4"],
        ["x3^1", "y2^1", "x3^2", "y2^2", "x3^3", "y2^3", "x3^4", "y2^4"],
        ["x1^1", "y3^1", "x1^2", "y3^2", "x1^3", "y3^3", "x1^4", "y3^4"],
        ["x2^1", "y3^1", "x2^2", "y3^2", "x2^3", "y3^3", "x2^4", "y3^4"],
        ["x3^1", "y3^1", "x3^2", "y3^2", "x3^3", "y3^3", "x3^4", "y3^4"],
        ["x1^1", "y4^1", "x1^2", "y4^2", "x1^3", "y4^3", "x1^4", "y4^4"],
        ["x2^1", "y4^1", "x2^2", "y4^2", "x2^3", "y4^3", "x2^4", "y4^4"],
        ["x3^1", "y4^1", "x3^2", "y4^2", "x3^3", "y4^3", "x3^4", "y4^4"],
    ];
    for words in expected {
        let (i, j) = (
            words[0].trim_start_matches('x').split('^').next().unwrap(),
            words[1].trim_start_matches('y').split('^').next().unwrap(),
        );
        let face = x
            .face_by_label(&format!("P(x{},y{})", i, j))
            .expect("face exists");
        let got = x.boundary_word(face);
        assert_eq!(got, words.map(String::from).to_vec());
    }
    println!("ACCEPTANCE 5 (twelve octagon boundary words): PASS");
}

#[test]
fn acceptance_6_local_developments() {
    let mut corner_checks = 0;
    for m in M_GRID {
        for q1 in Q_GRID {
            for q2 in Q_GRID {
                let p = build_g_p_cyclic(m, q1, q2).unwrap();
                let reference = SimpleGraph::complete_bipartite(q1, q2);
                for corner in 0..2 * m {
                    let v = p.cells.vertex_of_cell(CellRef::Vertex(corner));
                    let dev = local_development(&p.cog, v).unwrap();
                    let unsub = dev.unsubdivided().unwrap();
                    let map = graph_isomorphic(&unsub, &reference)
                        .expect("corner development must be complete bipartite");
                    assert!(verify_graph_isomorphism(&unsub, &reference, &map));
                    corner_checks += 1;
                }
            }
        }
    }
    let mut pair_checks = 0;
    for m in M_GRID {
        for (_, graph) in psi_graphs() {
            let k = build_g_k(m, &graph).unwrap();
            for (i, j) in graph.edges() {
                let t = SphericalSubset::Pair(
                    graph.left_names()[i].clone(),
                    graph.right_names()[j].clone(),
                );
                let v = k.chamber_scwol.vertex_of_type(&t).unwrap();
                let dev = local_development(&k.cog, v).unwrap();
                assert!(
                    dev.is_cycle(4 * m),
                    "pair development not a 4m-cycle at m={} {}",
                    m,
                    t
                );
                pair_checks += 1;
            }
        }
    }
    println!(
        "ACCEPTANCE 6 (developments: {} corners complete bipartite, {} pair vertices 4m-cycles): PASS",
        corner_checks, pair_checks
    );
}

#[test]
fn acceptance_7_presentation_routes_agree() {
    let mut points = 0;
    for m in [2usize, 3, 4] {
        for q1 in [2usize, 3] {
            for q2 in [2usize, 3] {
                let via_h = presentation_h(m, q1, q2).unwrap();
                let x = build_x(m, &BipartiteGraph::complete(q1, q2)).unwrap();
                let via_pipeline =
                    contraction_pipeline(&x, &format!("P(x{},y{})", q1, q2)).unwrap();
                let via_colimit = direct_limit(&build_amalgam(m, q1, q2));
                assert!(via_h.equivalent(&via_pipeline));
                assert!(via_h.equivalent(&via_colimit));
                assert_eq!(via_h.relators.len(), (q1 - 1) * (q2 - 1));
                for r in &via_h.relators {
                    assert_eq!(r.len(), 4 * (m - 1), "relator length at ({},{},{})", m, q1, q2);
                    let gens: std::collections::BTreeSet<&str> =
                        r.letters().iter().map(|l| l.gen.as_str()).collect();
                    assert_eq!(gens.len(), 2 * (m - 1));
                    for g in gens {
                        let occ: Vec<bool> = r
                            .letters()
                            .iter()
                            .filter(|l| l.gen == g)
                            .map(|l| l.inv)
                            .collect();
                        assert_eq!(occ.len(), 2);
                        assert_ne!(occ[0], occ[1]);
                    }
                }
                assert_eq!(euler_check_surface(m), 2 - 2 * (m as i64 - 1));
                points += 1;
            }
        }
    }
    println!(
        "ACCEPTANCE 7 (contraction = closed form = colimit, surface shape): PASS on {} grid points",
        points
    );
}

#[test]
fn acceptance_8_raag_degeneration() {
    let mut points = 0;
    for q1 in Q_GRID {
        for q2 in Q_GRID {
            assert!(raag_check(2, q1, q2).unwrap(), "not a RAAG at ({},{})", q1, q2);
            points += 1;
        }
    }
    println!(
        "ACCEPTANCE 8 (m=2 degeneration to right-angled Artin groups): PASS on {} grid points",
        points
    );
}

#[test]
fn acceptance_9_search_recovers_coverings() {
    let budget = Duration::from_secs(10);
    let mut runs = 0;
    for m in [2usize, 3] {
        for (q1, q2) in [(2usize, 2usize), (2, 3)] {
            let cov = build_phi_gamma(m, q1, q2).unwrap();
            let start = Instant::now();
            let found = search_covering(&cov.domain, &cov.codomain, &cov.morphism, None)
                .expect("search must find a covering");
            let elapsed = start.elapsed();
            assert!(elapsed < budget, "search too slow: {:?}", elapsed);
            let outcome = found.verify();
            assert!(outcome.report.is_clean());
            assert_eq!(outcome.sheets, Some(q1 * q2));
            runs += 1;
        }
        for graph in [BipartiteGraph::complete(2, 2), BipartiteGraph::complete(2, 3)] {
            let cov = build_psi_w(m, &graph).unwrap();
            let start = Instant::now();
            let found = search_covering(&cov.domain, &cov.codomain, &cov.morphism, None)
                .expect("search must find a covering");
            let elapsed = start.elapsed();
            assert!(elapsed < budget, "search too slow: {:?}", elapsed);
            let outcome = found.verify();
            assert!(outcome.report.is_clean());
            assert_eq!(outcome.sheets, Some(2 * m));
            runs += 1;
        }
    }
    println!(
        "ACCEPTANCE 9 (backtracking search recovers verifier-passing coverings): PASS on {} runs",
        runs
    );
}

/// Applies one random corruption to a fresh copy: either one element of the
/// family, or one entry of one codomain monomorphism.
fn corrupt_once(cov: &CoveringData, rng: &mut StdRng) -> CoveringData {
    let mut c = cov.clone();
    let domain_edges = c.domain.base().edge_count();
    if rng.gen_bool(0.5) {
        loop {
            let e = cogkit::scwol::EdgeId(rng.gen_range(0..domain_edges));
            let order = c.phi_group(e).order();
            if order < 2 {
                continue;
            }
            let old = c.phi(e).0;
            let new = (old + rng.gen_range(1..order)) % order;
            c.set_phi(e, Elem(new));
            return c;
        }
    }
    loop {
        let codomain_edges = c.codomain.base().edge_count();
        let e = cogkit::scwol::EdgeId(rng.gen_range(0..codomain_edges));
        let mono = c.codomain.edge_mono(e).clone();
        let target_order = c
            .codomain
            .local_group(c.codomain.base().terminal(e))
            .order();
        if target_order < 2 {
            continue;
        }
        let pos = rng.gen_range(0..mono.map.len());
        let old = mono.map[pos];
        let new = (old + rng.gen_range(1..target_order)) % target_order;
        let mut map = mono.map.clone();
        map[pos] = new;
        c.codomain.set_edge_mono(e, Monomorphism { map });
        return c;
    }
}

#[test]
fn acceptance_10_fault_injection() {
    let mut rng = StdRng::seed_from_u64(20260809);
    let mut detected = 0;
    let mut grid: Vec<CoveringData> = Vec::new();
    for m in [2usize, 3] {
        for (q1, q2) in [(2usize, 2usize), (2, 3)] {
            grid.push(build_phi_gamma(m, q1, q2).unwrap());
        }
        for graph in [BipartiteGraph::complete(2, 2), BipartiteGraph::complete(2, 3)] {
            grid.push(build_psi_w(m, &graph).unwrap());
        }
    }
    for cov in &grid {
        assert!(cov.verify().report.is_clean());
        for _ in 0..100 {
            let corrupted = corrupt_once(cov, &mut rng);
            let outcome = corrupted.verify();
            assert!(
                !outcome.report.is_clean(),
                "corruption went undetected"
            );
            let named = outcome.report.issues.iter().any(|i| {
                matches!(
                    i,
                    CoveringIssue::Condition1 { .. }
                        | CoveringIssue::Condition2 { .. }
                        | CoveringIssue::CodomainInvalid { .. }
                        | CoveringIssue::PhiOutOfRange { .. }
                )
            });
            assert!(named, "no issue names the failing condition");
            detected += 1;
        }
    }
    println!(
        "ACCEPTANCE 10 (fault injection: {} corruptions, all detected): PASS",
        detected
    );
}
