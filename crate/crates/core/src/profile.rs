//! Major vertices, terminal vertices and the degree-two classification.
//!
//! An end-vertex `u` is a terminal vertex of the major vertex `v` when `v` is
//! strictly closer to `u` than every other major vertex; an end-vertex with two
//! equally near majors belongs to neither. A degree-two vertex is exterior when
//! it lies on a shortest path from some terminal vertex to its major vertex and
//! interior otherwise. On graphs without major vertices (paths, cycles) every
//! degree-two vertex is therefore interior.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::{DistanceMatrix, Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexClass {
    Isolated,
    EndVertex,
    ExteriorDegreeTwo,
    InteriorDegreeTwo,
    /// Degree at least three with no terminal vertex.
    Major,
    /// Exterior major vertex: degree at least three with a terminal vertex.
    ExteriorMajor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralProfile {
    pub classes: Vec<VertexClass>,
    /// Every major vertex mapped to its sorted terminal vertices (possibly none).
    pub terminals: BTreeMap<Vertex, Vec<Vertex>>,
    /// Major vertex owning each end-vertex, if any.
    pub owner: Vec<Option<Vertex>>,
    pub sigma: usize,
    pub ex: usize,
}

impl StructuralProfile {
    pub fn majors(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.terminals.keys().copied()
    }

    pub fn exterior_majors(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.terminals
            .iter()
            .filter(|(_, t)| !t.is_empty())
            .map(|(&v, _)| v)
    }

    pub fn terminal_degree(&self, v: Vertex) -> usize {
        self.terminals.get(&v).map_or(0, Vec::len)
    }

    pub fn has_interior_degree_two(&self) -> bool {
        self.classes.contains(&VertexClass::InteriorDegreeTwo)
    }
}

pub fn structural_profile(g: &Graph, dm: &DistanceMatrix) -> StructuralProfile {
    let n = g.order();
    let majors: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    let mut owner = vec![None; n];
    let mut terminals: BTreeMap<Vertex, Vec<Vertex>> =
        majors.iter().map(|&v| (v, Vec::new())).collect();

    for u in g.vertices().filter(|&u| g.degree(u) == 1) {
        let mut best: Option<(u32, Vertex)> = None;
        let mut tied = false;
        for &v in &majors {
            let Some(d) = dm.get(u, v) else { continue };
            match best {
                Some((bd, _)) if d > bd => {}
                Some((bd, _)) if d == bd => tied = true,
                _ => {
                    best = Some((d, v));
                    tied = false;
                }
            }
        }
        if let (Some((_, v)), false) = (best, tied) {
            owner[u] = Some(v);
            terminals.get_mut(&v).expect("owner is major").push(u);
        }
    }

    let classes = g
        .vertices()
        .map(|x| match g.degree(x) {
            0 => VertexClass::Isolated,
            1 => VertexClass::EndVertex,
            2 => {
                let exterior = terminals
                    .iter()
                    .any(|(&v, ts)| ts.iter().any(|&l| dm.on_geodesic(l, x, v)));
                if exterior {
                    VertexClass::ExteriorDegreeTwo
                } else {
                    VertexClass::InteriorDegreeTwo
                }
            }
            _ if terminals[&x].is_empty() => VertexClass::Major,
            _ => VertexClass::ExteriorMajor,
        })
        .collect();

    let sigma = terminals.values().map(Vec::len).sum();
    let ex = terminals.values().filter(|t| !t.is_empty()).count();
    StructuralProfile {
        classes,
        terminals,
        owner,
        sigma,
        ex,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(g: &Graph) -> StructuralProfile {
        structural_profile(g, &DistanceMatrix::new(g))
    }

    #[test]
    fn star_center_owns_every_leaf() {
        let g = Graph::new(5, (1..5).map(|i| (0, i))).unwrap();
        let p = profile(&g);
        assert_eq!(p.terminal_degree(0), 4);
        assert_eq!((p.sigma, p.ex), (4, 1));
        assert_eq!(p.classes[0], VertexClass::ExteriorMajor);
    }

    #[test]
    fn paths_have_no_majors() {
        let g = Graph::new(6, (1..6).map(|i| (i - 1, i))).unwrap();
        let p = profile(&g);
        assert_eq!((p.sigma, p.ex), (0, 0));
        assert_eq!(p.majors().count(), 0);
    }

    #[test]
    fn double_spider() {
        // majors 0 and 4 joined by 0-1-2-3-4, each with two pendant leaves
        let g = Graph::new(
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
        .unwrap();
        let p = profile(&g);
        assert_eq!((p.sigma, p.ex), (4, 2));
        for v in 1..=3 {
            assert_eq!(p.classes[v], VertexClass::InteriorDegreeTwo);
        }
        assert_eq!(p.terminals[&0], vec![5, 6]);
    }

    #[test]
    fn legs_are_exterior() {
        // spider with legs 1-2, 3-4, 5-6 from center 0
        let g = Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let p = profile(&g);
        assert_eq!((p.sigma, p.ex), (3, 1));
        for v in [1, 3, 5] {
            assert_eq!(p.classes[v], VertexClass::ExteriorDegreeTwo);
        }
    }

    #[test]
    fn leaf_chain_owner_is_first_major_reached() {
        // triangle 0-1-2 with pendant leaves 4,5 on 0, 6 on 1 and a chain 2-3-7
        let g = Graph::new(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 7),
                (0, 4),
                (0, 5),
                (1, 6),
            ],
        )
        .unwrap();
        let p = profile(&g);
        assert_eq!(p.owner[7], Some(2));
        assert_eq!(p.classes[3], VertexClass::ExteriorDegreeTwo);
        assert_eq!(p.owner[4], Some(0));
        assert_eq!(p.owner[6], Some(1));
    }
}
