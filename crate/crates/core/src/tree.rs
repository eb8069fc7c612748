//! Closed forms and constructions for trees: dim(T) = σ(T) − ex(T) off paths,
//! a basis built from terminal vertices, zero forcing sets from path covers,
//! and the structural test for dim(T) = Z(T).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forcing::forces_all;
use crate::graph::{classify, Graph, GraphClass, Vertex};
use crate::pathcover::{block_endpoints, path_cover_with_cap, PathCover};
use crate::profile::StructuralProfile;

fn require_tree(t: &Graph) -> Result<GraphClass> {
    let class = classify(t)?;
    if !class.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(class)
}

/// Vertices from `leaf` up to, but excluding, the first vertex of degree
/// other than two.
pub fn leg(t: &Graph, leaf: Vertex) -> (Vec<Vertex>, Option<Vertex>) {
    let mut out = vec![leaf];
    let (mut prev, mut cur) = (leaf, t.neighbors(leaf).first().copied());
    while let Some(c) = cur {
        if t.degree(c) != 2 {
            return (out, Some(c));
        }
        out.push(c);
        let next = t.neighbors(c).iter().copied().find(|&w| w != prev);
        prev = c;
        cur = next;
    }
    (out, None)
}

pub fn tree_metric_dimension(t: &Graph) -> Result<usize> {
    if t.order() < 2 {
        return Err(Error::TooSmall { n: t.order() });
    }
    Ok(match require_tree(t)? {
        GraphClass::Path => 1,
        _ => {
            let dm = crate::graph::DistanceMatrix::new(t);
            let p = crate::profile::structural_profile(t, &dm);
            p.sigma - p.ex
        }
    })
}

/// All terminal vertices of every exterior major vertex except the least one.
pub fn tree_basis_construction(t: &Graph, profile: &StructuralProfile) -> Result<Vec<Vertex>> {
    if require_tree(t)? == GraphClass::Path {
        return Err(Error::PathInput);
    }
    let mut basis: Vec<Vertex> = profile
        .terminals
        .values()
        .filter(|ts| !ts.is_empty())
        .flat_map(|ts| ts[1..].iter().copied())
        .collect();
    basis.sort_unstable();
    Ok(basis)
}

/// No interior degree-two vertex and every major vertex has terminal degree
/// at least two. Paths qualify.
pub fn dim_equals_z_tree_predicate(t: &Graph, profile: &StructuralProfile) -> Result<bool> {
    if require_tree(t)? == GraphClass::Path {
        return Ok(true);
    }
    Ok(!profile.has_interior_degree_two()
        && profile.majors().all(|v| profile.terminal_degree(v) >= 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverSource {
    /// Built from terminal legs; size σ − ex (or one block for a path).
    Constructed,
    /// The canonical minimum cover from exhaustive search.
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeForcing {
    /// Z(T) = P(T).
    pub number: usize,
    pub forcing_set: Vec<Vertex>,
    pub cover: PathCover,
    pub source: CoverSource,
}

/// Cover of size σ − ex for trees meeting the dim = Z condition: the first
/// two terminal legs of each exterior major vertex are joined through it, and
/// every further leg is its own block.
fn constructed_cover(t: &Graph, profile: &StructuralProfile) -> PathCover {
    let mut blocks = Vec::new();
    for (&v, ts) in profile.terminals.iter().filter(|(_, ts)| !ts.is_empty()) {
        let mut joined = vec![v];
        for (i, &l) in ts.iter().enumerate() {
            let (mut body, _) = leg(t, l);
            if i < 2 {
                joined.append(&mut body);
            } else {
                body.sort_unstable();
                blocks.push(body);
            }
        }
        joined.sort_unstable();
        blocks.push(joined);
    }
    blocks.sort_unstable_by_key(|b| b[0]);
    PathCover { blocks }
}

/// One endpoint per block; the choice is searched, least endpoints first,
/// until the set forces the tree.
fn forcing_set_from_cover(t: &Graph, cover: &PathCover) -> Option<Vec<Vertex>> {
    let ends: Vec<Vec<Vertex>> = cover.blocks.iter().map(|b| block_endpoints(t, b)).collect();
    let choices: usize = ends.iter().map(Vec::len).product();
    (0..choices).find_map(|mut code| {
        let mut s: Vec<Vertex> = ends
            .iter()
            .map(|e| {
                let pick = e[code % e.len()];
                code /= e.len();
                pick
            })
            .collect();
        s.sort_unstable();
        forces_all(t, &s).then_some(s)
    })
}

pub fn tree_zero_forcing_construction(
    t: &Graph,
    profile: &StructuralProfile,
    cap: usize,
) -> Result<TreeForcing> {
    let class = require_tree(t)?;
    let searched = path_cover_with_cap(t, cap)?;
    let number = searched.len();
    let (cover, source) = if class == GraphClass::Path {
        (searched, CoverSource::Constructed)
    } else if dim_equals_z_tree_predicate(t, profile)? {
        (constructed_cover(t, profile), CoverSource::Constructed)
    } else {
        (searched, CoverSource::Search)
    };
    let forcing_set = forcing_set_from_cover(t, &cover).ok_or_else(|| {
        Error::Precondition("no endpoint choice of the cover forces the tree".into())
    })?;
    Ok(TreeForcing {
        number,
        forcing_set,
        cover,
        source,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmvAudit {
    pub emv: Vertex,
    /// Terminal vertices whose path to `emv` avoids the forcing set.
    pub omitted: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZfsAudit {
    pub emvs: Vec<EmvAudit>,
}

impl ZfsAudit {
    /// Exactly one terminal path per exterior major vertex misses the set.
    pub fn passed(&self) -> bool {
        self.emvs.iter().all(|a| a.omitted.len() == 1)
    }
}

/// For a tree with dim = Z and a minimum zero forcing set `s`, lists for each
/// exterior major vertex the terminal paths that `s` misses.
pub fn zfs_structure_audit(
    t: &Graph,
    profile: &StructuralProfile,
    s: &[Vertex],
) -> Result<ZfsAudit> {
    if !dim_equals_z_tree_predicate(t, profile)? {
        return Err(Error::Precondition("tree does not satisfy dim = Z".into()));
    }
    let dim = tree_metric_dimension(t)?;
    if s.len() != dim || !forces_all(t, s) {
        return Err(Error::Precondition(format!(
            "set of size {} is not a minimum zero forcing set (Z = {dim})",
            s.len()
        )));
    }
    let in_s = |v: Vertex| s.contains(&v);
    let emvs = profile
        .exterior_majors()
        .map(|v| {
            let omitted = profile.terminals[&v]
                .iter()
                .copied()
                .filter(|&l| !in_s(v) && !leg(t, l).0.into_iter().any(in_s))
                .collect();
            EmvAudit { emv: v, omitted }
        })
        .collect();
    Ok(ZfsAudit { emvs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DistanceMatrix;
    use crate::profile::structural_profile;
    use crate::resolve::is_resolving;

    fn profile(g: &Graph) -> StructuralProfile {
        structural_profile(g, &DistanceMatrix::new(g))
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn star(k: usize) -> Graph {
        Graph::new(k + 1, (1..=k).map(|i| (0, i))).unwrap()
    }

    fn spider(legs: &[usize]) -> Graph {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Graph::new(next, edges).unwrap()
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
    fn closed_form_values() {
        assert_eq!(tree_metric_dimension(&path(8)).unwrap(), 1);
        assert_eq!(tree_metric_dimension(&star(5)).unwrap(), 4);
        assert_eq!(tree_metric_dimension(&double_spider()).unwrap(), 2);
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(tree_metric_dimension(&c4).unwrap_err(), Error::NotATree);
    }

    #[test]
    fn bases_resolve() {
        for t in [star(4), double_spider(), spider(&[1, 2, 3])] {
            let p = profile(&t);
            let b = tree_basis_construction(&t, &p).unwrap();
            assert_eq!(b.len(), p.sigma - p.ex);
            assert!(is_resolving(&DistanceMatrix::new(&t), &b), "{t:?}");
        }
        assert_eq!(
            tree_basis_construction(&star(4), &profile(&star(4))).unwrap(),
            vec![2, 3, 4]
        );
        assert_eq!(
            tree_basis_construction(&path(4), &profile(&path(4))).unwrap_err(),
            Error::PathInput
        );
    }

    #[test]
    fn forcing_constructions() {
        let p9 = path(9);
        let f = tree_zero_forcing_construction(&p9, &profile(&p9), 16).unwrap();
        assert_eq!((f.number, f.forcing_set.clone()), (1, vec![0]));
        let s4 = star(4);
        let f = tree_zero_forcing_construction(&s4, &profile(&s4), 16).unwrap();
        assert_eq!(f.number, 3);
        assert_eq!(f.source, CoverSource::Constructed);
        assert_eq!(f.cover.len(), 3);
        let ds = double_spider();
        let f = tree_zero_forcing_construction(&ds, &profile(&ds), 16).unwrap();
        assert_eq!(f.number, 3);
        assert_eq!(f.source, CoverSource::Search);
        assert!(forces_all(&ds, &f.forcing_set));
    }

    #[test]
    fn characterization_examples() {
        assert!(dim_equals_z_tree_predicate(&star(3), &profile(&star(3))).unwrap());
        assert!(
            !dim_equals_z_tree_predicate(&double_spider(), &profile(&double_spider())).unwrap()
        );
        assert!(dim_equals_z_tree_predicate(&path(6), &profile(&path(6))).unwrap());
    }

    #[test]
    fn audits() {
        let s3 = star(3);
        let a = zfs_structure_audit(&s3, &profile(&s3), &[1, 2]).unwrap();
        assert!(a.passed());
        assert_eq!(a.emvs[0].omitted, vec![3]);
        let sp = spider(&[2, 2, 2]);
        // leg tips are 2, 4 and 6
        let a = zfs_structure_audit(&sp, &profile(&sp), &[2, 4]).unwrap();
        assert!(a.passed());
        assert_eq!(a.emvs[0].omitted, vec![6]);
        assert!(
            zfs_structure_audit(&double_spider(), &profile(&double_spider()), &[5, 7]).is_err()
        );
        assert!(zfs_structure_audit(&s3, &profile(&s3), &[1]).is_err());
    }
}
