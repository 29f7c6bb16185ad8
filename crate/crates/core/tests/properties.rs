//! Property tests for structural invariants.

use proptest::prelude::*;

use cogkit::complexes::{build_x, scwol_of, BipartiteGraph, CellRef};
use cogkit::covering::build_phi_gamma;
use cogkit::groups::{left_cosets, Elem, GroupTable};
use cogkit::presentation::{presentation_h, Letter, Presentation, Word};
use cogkit::scwol::ScwolMorphism;

/// Connected bipartite graphs with small sides: a spanning double star plus
/// random extra edges.
fn connected_bipartite() -> impl Strategy<Value = BipartiteGraph> {
    (2usize..=3, 2usize..=3, proptest::collection::vec(any::<bool>(), 9)).prop_map(
        |(q1, q2, extra)| {
            let mut edges = Vec::new();
            for j in 0..q2 {
                edges.push((0, j));
            }
            for i in 0..q1 {
                edges.push((i, 0));
            }
            let mut at = 0;
            for i in 0..q1 {
                for j in 0..q2 {
                    if extra[at % extra.len()] {
                        edges.push((i, j));
                    }
                    at += 1;
                }
            }
            BipartiteGraph::new(q1, q2, &edges).expect("well formed")
        },
    )
}

fn small_words() -> impl Strategy<Value = Word> {
    proptest::collection::vec((0usize..4, any::<bool>()), 1..12).prop_map(|letters| {
        Word::new(
            letters
                .into_iter()
                .map(|(g, inv)| Letter {
                    gen: format!("g{}", g),
                    inv,
                })
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn opposite_is_involution_preserving_chains(m in 2usize..=4, graph in connected_bipartite()) {
        let x = build_x(m, &graph).unwrap();
        let cs = scwol_of(&x);
        prop_assert!(cs.scwol.validate().is_clean());
        let op = cs.scwol.opposite();
        prop_assert!(op.validate().is_clean());
        let (c, oc) = (cs.scwol.chains(), op.chains());
        prop_assert_eq!(c.vertices.len(), oc.vertices.len());
        prop_assert_eq!(c.edges.len(), oc.edges.len());
        prop_assert_eq!(c.pairs.len(), oc.pairs.len());
        let back = op.opposite();
        for e in cs.scwol.edge_ids() {
            prop_assert_eq!(cs.scwol.initial(e), back.initial(e));
            prop_assert_eq!(cs.scwol.terminal(e), back.terminal(e));
        }
    }

    #[test]
    fn subdivision_preserves_euler(m in 2usize..=4, graph in connected_bipartite()) {
        let x = build_x(m, &graph).unwrap();
        let cs = scwol_of(&x);
        prop_assert_eq!(cs.scwol.euler_characteristic(), x.euler_characteristic());
    }

    #[test]
    fn identity_on_x_scwol_validates(m in 2usize..=3, graph in connected_bipartite()) {
        let x = build_x(m, &graph).unwrap();
        let cs = scwol_of(&x);
        let id = ScwolMorphism::identity(&cs.scwol);
        prop_assert!(id.validate(&cs.scwol, &cs.scwol).is_clean());
    }

    #[test]
    fn canonical_cyclic_is_rotation_and_inversion_invariant(w in small_words(), rot in 0usize..12) {
        let letters = w.letters().to_vec();
        if letters.is_empty() {
            return Ok(());
        }
        let s = rot % letters.len();
        let mut rotated = letters[s..].to_vec();
        rotated.extend_from_slice(&letters[..s]);
        let rotated = Word::new(rotated);
        prop_assert_eq!(w.canonical_cyclic(), rotated.canonical_cyclic());
        prop_assert_eq!(w.canonical_cyclic(), w.inverse().canonical_cyclic());
    }

    #[test]
    fn presentation_equality_survives_relator_mangling(
        m in 2usize..=3,
        q1 in 2usize..=3,
        q2 in 2usize..=3,
        rot in 0usize..8,
        flip in any::<bool>(),
    ) {
        let p = presentation_h(m, q1, q2).unwrap();
        let mangled: Vec<Word> = p
            .relators
            .iter()
            .map(|r| {
                let letters = r.letters().to_vec();
                let s = rot % letters.len();
                let mut w: Vec<Letter> = letters[s..].to_vec();
                w.extend_from_slice(&letters[..s]);
                let w = Word::new(w);
                if flip {
                    w.inverse()
                } else {
                    w
                }
            })
            .collect();
        let q = Presentation::new(p.generators.clone(), mangled);
        prop_assert!(p.equivalent(&q));
    }

    #[test]
    fn cosets_partition_dihedral_groups(m in 2usize..=6, picks in proptest::collection::vec(any::<u8>(), 2)) {
        let d = GroupTable::dihedral(m, "x", "y");
        // subgroup generated by up to two random elements: closure under
        // products and inverses
        let mut subgroup: Vec<Elem> = vec![d.identity()];
        for p in picks {
            subgroup.push(Elem(p as usize % d.order()));
        }
        loop {
            let mut added = false;
            let current = subgroup.clone();
            for &a in &current {
                for &b in &current {
                    for g in [d.mul(a, b), d.inv(a)] {
                        if !subgroup.contains(&g) {
                            subgroup.push(g);
                            added = true;
                        }
                    }
                }
            }
            if !added {
                break;
            }
        }
        subgroup.sort();
        subgroup.dedup();
        let cosets = left_cosets(&d, &subgroup).unwrap();
        prop_assert!(cosets.iter().all(|c| c.len() == subgroup.len()));
        prop_assert_eq!(cosets.len() * subgroup.len(), d.order());
        let mut all: Vec<Elem> = cosets.into_iter().flatten().collect();
        all.sort();
        let expected: Vec<Elem> = d.elements().collect();
        prop_assert_eq!(all, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Non-degenerate morphisms compose: the projection onto the polygon
    /// followed by a rotation automorphism of the polygon still validates.
    #[test]
    fn morphism_composition_validates(m in 2usize..=3, q1 in 2usize..=3, q2 in 2usize..=3, step in 1usize..3) {
        let cov = build_phi_gamma(m, q1, q2).unwrap();
        let dom = cov.domain.base();
        let graph = BipartiteGraph::complete(q1, q2);
        let x = build_x(m, &graph).unwrap();
        let xs = scwol_of(&x);
        let p = cogkit::cog::build_g_p_cyclic(m, q1, q2).unwrap();

        // rotation of the polygon by `step` corners on each side
        let rotate_cell = |c: CellRef| match c {
            CellRef::Vertex(v) => CellRef::Vertex((v + 2 * step) % (2 * m)),
            CellRef::Edge(e) => {
                if e < m {
                    CellRef::Edge((e + step) % m)
                } else {
                    CellRef::Edge(m + (e - m + step) % m)
                }
            }
            CellRef::Face(f) => CellRef::Face(f),
        };
        let vertex_map: Vec<_> = p
            .cells
            .cells
            .iter()
            .map(|&c| p.cells.vertex_of_cell(rotate_cell(c)))
            .collect();
        let edge_map: Vec<_> = p
            .cells
            .scwol
            .edge_ids()
            .map(|e| {
                let from = vertex_map[p.cells.scwol.initial(e).0];
                let to = vertex_map[p.cells.scwol.terminal(e).0];
                p.cells.scwol.edge_between(from, to).unwrap()
            })
            .collect();
        let rotation = ScwolMorphism { vertex_map, edge_map };
        prop_assert!(rotation.validate(&p.cells.scwol, &p.cells.scwol).is_clean());
        prop_assert!(cov.morphism.validate(dom, &p.cells.scwol).is_clean());
        let composed = ScwolMorphism::compose(&cov.morphism, &rotation);
        prop_assert!(composed.validate(&xs.scwol, &p.cells.scwol).is_clean());
    }
}
