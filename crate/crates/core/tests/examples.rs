//! Worked examples across modules, each checked through the public API.

use dimforce_core::families::FamilySpec;
use dimforce_core::forcing::{
    check_z_perturbation, forcing_closure, is_zero_forcing, min_degree_bound,
    one_step_resolving_check, zero_forcing_bruteforce,
};
use dimforce_core::graph::{classify, complement_edges, twins, unique_cycle, GraphClass};
use dimforce_core::pathcover::path_cover_bruteforce;
use dimforce_core::profile::{structural_profile, VertexClass};
use dimforce_core::resolve::{
    is_resolving, metric_code, metric_dimension_bruteforce, resolution_classes,
    sigma_ex_lower_bound, strongly_resolves, unresolved_pair,
};
use dimforce_core::tree::{
    dim_equals_z_tree_predicate, tree_basis_construction, tree_metric_dimension,
    tree_zero_forcing_construction, zfs_structure_audit,
};
use dimforce_core::unicyclic::{subtree_roots, unicyclic_resolving_construction};
use dimforce_core::{DistanceMatrix, Error, Graph};
use itertools::Itertools;

fn g(spec: &str) -> Graph {
    spec.parse::<FamilySpec>()
        .unwrap()
        .generate()
        .remove(0)
        .graph
}

fn dm(graph: &Graph) -> DistanceMatrix {
    DistanceMatrix::new(graph)
}

fn double_spider() -> Graph {
    Graph::new(
        9,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (0, 5),
            (0, 6),
            (4, 7),
            (4, 8),
        ],
    )
    .unwrap()
}

#[test]
fn construction_errors_name_the_pair() {
    assert_eq!(
        Graph::new(3, [(0, 0)]).unwrap_err(),
        Error::SelfLoop { vertex: 0 }
    );
    assert_eq!(
        Graph::new(3, [(0, 3)]).unwrap_err(),
        Error::VertexOutOfRange { u: 0, v: 3, n: 3 }
    );
    let c4 = g("cycle:4");
    assert!(c4.vertices().all(|v| c4.degree(v) == 2));
}

#[test]
fn classification() {
    for t in dimforce_core::enumerate::trees(7) {
        assert_eq!(classify(&t).unwrap().cycle_rank(), 0);
    }
    assert_eq!(classify(&g("complete:4")).unwrap(), GraphClass::Cyclic(3));
    assert_eq!(classify(&g("cycle:7")).unwrap(), GraphClass::Unicyclic);
    assert_eq!(classify(&Graph::empty(2)).unwrap_err(), Error::Disconnected);
}

#[test]
fn cycles_and_twins() {
    assert_eq!(unique_cycle(&g("cycle:5")).unwrap(), vec![0, 1, 2, 3, 4]);
    let paw = Graph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
    assert_eq!(unique_cycle(&paw).unwrap(), vec![0, 1, 2]);
    let p6e = g("path:6").with_edge(0, 5).unwrap();
    assert_eq!(unique_cycle(&p6e).unwrap().len(), 6);
    assert!(unique_cycle(&g("complete:4")).is_err());

    assert_eq!(twins(&g("complete:3")).len(), 3);
    assert!(twins(&g("path:4")).is_empty());
    assert_eq!(twins(&g("complete_bipartite:2,3")).len(), 4);
    assert!(complement_edges(&g("complete:4")).is_empty());
    assert_eq!(complement_edges(&g("path:3")), vec![(0, 2)]);
    let comp = Graph::new(5, complement_edges(&g("cycle:5"))).unwrap();
    assert_eq!(classify(&comp).unwrap(), GraphClass::Unicyclic);
}

#[test]
fn codes_and_resolution() {
    let p3 = g("path:3");
    assert_eq!(
        metric_code(&dm(&p3), 2, &[0]).unwrap().distances,
        vec![Some(2)]
    );
    assert_eq!(
        metric_code(&dm(&p3), 2, &[]).unwrap_err(),
        Error::EmptyLandmarks
    );
    let c6 = g("cycle:6");
    assert_eq!(
        metric_code(&dm(&c6), 3, &[0, 1]).unwrap().distances,
        vec![Some(3), Some(2)]
    );

    let c4 = g("cycle:4");
    assert_eq!(unresolved_pair(&dm(&c4), &[0]), Some((1, 3)));
    let k23 = g("complete_bipartite:2,3");
    assert!((0..5).combinations(2).all(|w| !is_resolving(&dm(&k23), &w)));
    assert_eq!(metric_dimension_bruteforce(&k23).unwrap().dim, 3);
    assert_eq!(
        metric_dimension_bruteforce(&g("complete:5")).unwrap().dim,
        4
    );
    let p7 = metric_dimension_bruteforce(&g("path:7")).unwrap();
    assert_eq!((p7.dim, p7.basis), (1, vec![0]));
}

#[test]
fn strong_resolution() {
    // three cycle vertices, two of them antipodal
    assert!(strongly_resolves(&dm(&g("cycle:6")), &[0, 3, 1]));
    assert!(!strongly_resolves(&dm(&g("cycle:4")), &[0, 1]));
    let classes = resolution_classes(&dm(&g("path:4")), &[0]);
    assert_eq!(classes.classes.len(), 1);
    let all: Vec<usize> = (0..6).collect();
    assert_eq!(
        resolution_classes(&dm(&g("cycle:6")), &all).classes.len(),
        6
    );
}

#[test]
fn lower_bound_examples() {
    let bound = |graph: &Graph| sigma_ex_lower_bound(&structural_profile(graph, &dm(graph)));
    assert_eq!(bound(&g("path:6")), 0);
    let spider = g("spider:2,2,2");
    assert_eq!(bound(&spider), 2);
    assert_eq!(metric_dimension_bruteforce(&spider).unwrap().dim, 2);
    assert_eq!(bound(&g("star:4")), 3);
}

#[test]
fn forcing_examples() {
    let p5 = g("path:5");
    let trace = forcing_closure(&p5, &[0]);
    assert_eq!((trace.events.len(), trace.final_black.len()), (4, 5));
    let c4 = g("cycle:4");
    assert!(forcing_closure(&c4, &[0]).events.is_empty());
    let k5 = g("complete:5");
    assert!(forcing_closure(&k5, &[0, 1, 2, 3, 4]).events.is_empty());

    assert!((0..5).combinations(4).all(|s| is_zero_forcing(&k5, &s)));
    assert!((0..5).combinations(3).all(|s| !is_zero_forcing(&k5, &s)));
    let c6 = g("cycle:6");
    assert!(is_zero_forcing(&c6, &[0, 1]));
    // antipodal vertices each see two white neighbours, so nothing moves
    assert!(!is_zero_forcing(&c6, &[0, 3]));

    let k5_check = one_step_resolving_check(&k5, &dm(&k5), &[0, 1, 2, 3]);
    assert!(k5_check.forces_all && k5_check.resolves);
    assert!(!one_step_resolving_check(&p5, &dm(&p5), &[0]).forces_all);
    let star = g("star:4");
    let s = one_step_resolving_check(&star, &dm(&star), &[0, 1, 2, 3]);
    assert!(s.forces_all && s.resolves);
}

#[test]
fn forcing_numbers() {
    assert_eq!(zero_forcing_bruteforce(&g("path:9")).unwrap().number, 1);
    assert_eq!(zero_forcing_bruteforce(&g("complete:6")).unwrap().number, 5);
    assert_eq!(
        zero_forcing_bruteforce(&g("complete_bipartite:2,3"))
            .unwrap()
            .number,
        3
    );
    for (spec, delta) in [("cycle:7", 2), ("complete:5", 4), ("grid:3,3", 2)] {
        let graph = g(spec);
        assert_eq!(min_degree_bound(&graph), delta);
        assert!(delta <= zero_forcing_bruteforce(&graph).unwrap().number);
    }
    assert_eq!(path_cover_bruteforce(&g("path:7")).unwrap().len(), 1);
    assert_eq!(path_cover_bruteforce(&g("star:3")).unwrap().len(), 2);
}

#[test]
fn deletion_examples() {
    let c5 = check_z_perturbation(&g("cycle:5"), 16).unwrap();
    assert_eq!(c5.z, 2);
    assert!(c5.outcomes.iter().any(|o| o.z_after == 1));
    let k4 = check_z_perturbation(&g("complete:4"), 16).unwrap();
    assert_eq!(k4.z, 3);
    assert!(k4.holds());
    assert!(k4
        .outcomes
        .iter()
        .filter(|o| matches!(o.deletion, dimforce_core::forcing::Deletion::Edge { .. }))
        .all(|o| o.z_after == 2));
}

#[test]
fn tree_profiles() {
    let star = g("star:4");
    let p = structural_profile(&star, &dm(&star));
    assert_eq!((p.sigma, p.ex, p.terminal_degree(0)), (4, 1, 4));
    let path = g("path:6");
    let p = structural_profile(&path, &dm(&path));
    assert_eq!((p.sigma, p.ex), (0, 0));
    let ds = double_spider();
    let p = structural_profile(&ds, &dm(&ds));
    assert_eq!((p.sigma, p.ex), (4, 2));
    for v in 1..=3 {
        assert_eq!(p.classes[v], VertexClass::InteriorDegreeTwo);
    }
}

#[test]
fn tree_closed_forms() {
    assert_eq!(tree_metric_dimension(&g("path:8")).unwrap(), 1);
    assert_eq!(tree_metric_dimension(&g("star:5")).unwrap(), 4);
    let ds = double_spider();
    assert_eq!(tree_metric_dimension(&ds).unwrap(), 2);
    assert_eq!(metric_dimension_bruteforce(&ds).unwrap().dim, 2);

    for t in [g("star:4"), double_spider(), g("spider:1,2,3")] {
        let p = structural_profile(&t, &dm(&t));
        let b = tree_basis_construction(&t, &p).unwrap();
        assert_eq!(b.len(), p.sigma - p.ex);
        assert!(is_resolving(&dm(&t), &b));
    }
}

#[test]
fn tree_forcing_and_characterization() {
    let p9 = g("path:9");
    let f = tree_zero_forcing_construction(&p9, &structural_profile(&p9, &dm(&p9)), 16).unwrap();
    assert_eq!((f.number, f.forcing_set), (1, vec![0]));
    let star = g("star:4");
    let f =
        tree_zero_forcing_construction(&star, &structural_profile(&star, &dm(&star)), 16).unwrap();
    assert_eq!(f.number, 3);
    assert!(is_zero_forcing(&star, &f.forcing_set));

    let ds = double_spider();
    let p = structural_profile(&ds, &dm(&ds));
    assert!(!dim_equals_z_tree_predicate(&ds, &p).unwrap());
    assert_eq!(zero_forcing_bruteforce(&ds).unwrap().number, 3);

    let claw = g("star:3");
    let p = structural_profile(&claw, &dm(&claw));
    assert!(dim_equals_z_tree_predicate(&claw, &p).unwrap());
    assert_eq!(
        zfs_structure_audit(&claw, &p, &[1, 2]).unwrap().emvs[0].omitted,
        vec![3]
    );
    let spider = g("spider:2,2,2");
    let p = structural_profile(&spider, &dm(&spider));
    let witness = zero_forcing_bruteforce(&spider).unwrap().witness;
    assert!(zfs_structure_audit(&spider, &p, &witness).unwrap().passed());
}

#[test]
fn unicyclic_examples() {
    let p6 = g("path:6");
    let c = unicyclic_resolving_construction(&p6, (0, 5)).unwrap();
    assert_eq!(c.resolving_set, vec![0, 5]);
    assert!(is_resolving(
        &dm(&p6.with_edge(0, 5).unwrap()),
        &c.resolving_set
    ));
    assert!(unicyclic_resolving_construction(&p6, (0, 1)).is_err());
}

/// Vertices of a subtree hanging off the cycle with no landmark inside share
/// the class of its root.
#[test]
fn landmark_free_subtrees_collapse_to_their_root() {
    for case in dimforce_core::families::t_plus_e_cases(4, 8) {
        let graph = &case.graph;
        let cycle = unique_cycle(graph).unwrap();
        let roots = subtree_roots(graph, &cycle);
        let d = dm(graph);
        for &root in cycle.iter().take(2) {
            let w: Vec<usize> = graph
                .vertices()
                .filter(|&v| roots[v] != root)
                .take(3)
                .collect();
            if w.is_empty() {
                continue;
            }
            let classes = resolution_classes(&d, &w);
            for x in graph.vertices().filter(|&x| roots[x] == root) {
                assert!(classes.same_class(x, root), "{graph:?} W={w:?} x={x}");
            }
        }
    }
}

/// Three landmarks in distinct subtrees, two rooted at maximally distant cycle
/// vertices, separate every pair of vertices from different subtrees.
#[test]
fn anchor_triples_separate_subtrees() {
    let mut seen = 0;
    for case in dimforce_core::families::t_plus_e_cases(4, 9) {
        let o = case.origin.as_ref().unwrap();
        let c = unicyclic_resolving_construction(&o.tree, o.edge).unwrap();
        let Some(anchors) = c.anchors else { continue };
        seen += 1;
        let d = dm(&case.graph);
        let roots = subtree_roots(&case.graph, &c.cycle);
        for (x, y) in case.graph.vertices().tuple_combinations() {
            if roots[x] != roots[y] {
                assert_ne!(
                    metric_code(&d, x, &anchors).unwrap(),
                    metric_code(&d, y, &anchors).unwrap()
                );
            }
        }
        let on_cycle: Vec<usize> = anchors.iter().map(|&a| roots[a]).collect();
        assert!(
            strongly_resolves(&d, &on_cycle) || c.cycle.len() == 3 || on_cycle.iter().all_unique()
        );
    }
    assert!(seen > 1000);
}
