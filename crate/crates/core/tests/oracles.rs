//! Library searches against the naive reference implementations in `common`.

mod common;

use dimforce_core::enumerate::{connected_graphs, trees};
use dimforce_core::forcing::{forcing_closure, zero_forcing_bruteforce};
use dimforce_core::graph::twins;
use dimforce_core::pathcover::path_cover_bruteforce;
use dimforce_core::resolve::{is_resolving, metric_dimension_bruteforce};
use dimforce_core::tree::tree_metric_dimension;
use dimforce_core::DistanceMatrix;

#[test]
fn distances_match_bfs() {
    for g in connected_graphs(6) {
        let dm = DistanceMatrix::new(&g);
        let naive = common::bfs_distances(&g);
        for u in g.vertices() {
            for v in g.vertices() {
                assert_eq!(dm.get(u, v), Some(naive[u][v] as u32));
            }
        }
    }
}

#[test]
fn dim_and_z_match_on_small_connected_graphs() {
    for n in 2..=6 {
        for g in connected_graphs(n) {
            let b = metric_dimension_bruteforce(&g).unwrap();
            assert_eq!(b.dim, common::dim(&g), "{g:?}");
            let d = common::bfs_distances(&g);
            assert!(common::resolves(&d, &b.basis));
            let z = zero_forcing_bruteforce(&g).unwrap();
            assert_eq!(z.number, common::zero_forcing(&g), "{g:?}");
            assert!(common::forces(&g, &z.witness));
        }
    }
}

#[test]
fn closure_matches_naive_rule() {
    for g in connected_graphs(5) {
        for mask in 0u32..(1 << g.order()) {
            let s: Vec<usize> = g.vertices().filter(|v| mask >> v & 1 == 1).collect();
            let black = forcing_closure(&g, &s).final_black;
            let naive = common::closure(&g, &s);
            let expected: Vec<usize> = g.vertices().filter(|&v| naive[v]).collect();
            assert_eq!(black, expected);
        }
    }
}

#[test]
fn path_cover_matches_partition_search() {
    for n in 2..=6 {
        for g in connected_graphs(n) {
            let c = path_cover_bruteforce(&g).unwrap();
            assert!(c.is_valid_for(&g));
            assert_eq!(c.len(), common::path_cover(&g), "{g:?}");
        }
    }
}

#[test]
fn trees_match_closed_form_and_search() {
    for n in 2..=10 {
        for t in trees(n) {
            let naive = common::dim(&t);
            assert_eq!(tree_metric_dimension(&t).unwrap(), naive);
            assert_eq!(
                zero_forcing_bruteforce(&t).unwrap().number,
                common::zero_forcing(&t)
            );
        }
    }
}

#[test]
fn twins_match_naive() {
    for g in connected_graphs(6) {
        assert_eq!(twins(&g), common::twin_pairs(&g));
    }
}

#[test]
fn resolving_matches_naive_on_all_subsets() {
    for g in connected_graphs(5) {
        let dm = DistanceMatrix::new(&g);
        let d = common::bfs_distances(&g);
        for mask in 1u32..(1 << g.order()) {
            let w: Vec<usize> = g.vertices().filter(|v| mask >> v & 1 == 1).collect();
            assert_eq!(is_resolving(&dm, &w), common::resolves(&d, &w));
        }
    }
}
