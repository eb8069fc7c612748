//! Simple undirected graphs on dense vertex indices, plus the structural
//! queries every parameter computation leans on: hop distances, cycle rank,
//! the unique cycle of a unicyclic graph, twins and complement edges.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A vertex is an index in `0..n`.
pub type Vertex = usize;

/// Finite, simple, undirected graph.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted; adjacency lists are
/// sorted and symmetric.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &list {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for row in &mut adjacency {
            row.sort_unstable();
        }
        Ok(Self {
            n,
            edges: list,
            adjacency,
        })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// δ(G); zero for the empty graph on no vertices.
    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Connected components, each sorted, ordered by their least vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// |E| − |V| + c, which is |E| − |V| + 1 on connected graphs.
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + self.components().len() - self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.n
    }

    pub fn is_path(&self) -> bool {
        self.is_tree() && self.max_degree() <= 2
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Copy of the graph with the new edge `uv` added.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Self> {
        if u < self.n && v < self.n && self.has_edge(u, v) {
            return Err(Error::EdgeAlreadyPresent { u, v });
        }
        Self::new(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    /// Copy of the graph with the edge `uv` removed.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge { u, v });
        }
        let key = (u.min(v), u.max(v));
        Self::new(self.n, self.edges.iter().copied().filter(|&e| e != key))
    }

    /// G − v, with vertices above `v` shifted down by one.
    pub fn without_vertex(&self, v: Vertex) -> Self {
        let shift = |x: Vertex| if x > v { x - 1 } else { x };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift(a), shift(b)));
        Self::new(self.n - 1, edges).expect("deleting a vertex keeps edges valid")
    }

    /// Relabels vertex `old` as `perm[old]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        Self::new(self.n, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
            .expect("a permutation keeps edges valid")
    }

    /// Subgraph induced by `vertices`, relabelled to `0..k` in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Self {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]));
        Self::new(vertices.len(), edges).expect("induced edges are valid")
    }

    /// Disjoint edge-list vector, one `(u, v)` per edge with `u < v`.
    pub fn edge_list(&self) -> Vec<[Vertex; 2]> {
        self.edges.iter().map(|&(a, b)| [a, b]).collect()
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.n == 0 || !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(())
    }

    /// Connected with at least two vertices.
    pub fn in_parameter_domain(&self) -> bool {
        self.n >= 2 && self.is_connected()
    }

    /// Parameter operations work on connected graphs of order at least two.
    pub(crate) fn require_parameter_domain(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::TooSmall { n: self.n });
        }
        self.require_connected()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edge_list())?;
        st.end()
    }
}

/// Convenience wrapper mirroring [`Graph::new`].
pub fn build_graph<I>(n: usize, edges: I) -> Result<Graph>
where
    I: IntoIterator<Item = (Vertex, Vertex)>,
{
    Graph::new(n, edges)
}

/// All-pairs hop distances. `None` marks a pair in different components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Option<u32>>,
}

impl DistanceMatrix {
    /// One BFS per source vertex.
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut dist = vec![None; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = Some(0);
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u].expect("queued vertices are reached");
                for &w in g.neighbors(u) {
                    if row[w].is_none() {
                        row[w] = Some(du + 1);
                        queue.push_back(w);
                    }
                }
            }
        }
        Self { n, dist }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[Option<u32>] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// True when every pair is reachable.
    pub fn is_connected(&self) -> bool {
        self.dist.iter().all(Option::is_some)
    }

    /// Largest finite distance, or `None` when some pair is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        self.dist
            .iter()
            .copied()
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }

    /// Whether `x` lies on some shortest `u`–`v` path.
    pub fn on_geodesic(&self, u: Vertex, x: Vertex, v: Vertex) -> bool {
        match (self.get(u, x), self.get(x, v), self.get(u, v)) {
            (Some(a), Some(b), Some(c)) => a + b == c,
            _ => false,
        }
    }
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    DistanceMatrix::new(g)
}

/// Coarse class of a connected graph together with its cycle rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", content = "rank", rename_all = "snake_case")]
pub enum GraphClass {
    Path,
    /// A tree that is not a path.
    Tree,
    Unicyclic,
    /// Cycle rank at least two.
    Cyclic(usize),
}

impl GraphClass {
    pub fn cycle_rank(self) -> usize {
        match self {
            GraphClass::Path | GraphClass::Tree => 0,
            GraphClass::Unicyclic => 1,
            GraphClass::Cyclic(r) => r,
        }
    }

    pub fn is_tree(self) -> bool {
        matches!(self, GraphClass::Path | GraphClass::Tree)
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Path => "path",
            GraphClass::Tree => "tree",
            GraphClass::Unicyclic => "unicyclic",
            GraphClass::Cyclic(_) => "cyclic",
        }
    }
}

pub fn classify(g: &Graph) -> Result<GraphClass> {
    g.require_connected()?;
    Ok(match g.cycle_rank() {
        0 if g.max_degree() <= 2 => GraphClass::Path,
        0 => GraphClass::Tree,
        1 => GraphClass::Unicyclic,
        r => GraphClass::Cyclic(r),
    })
}

/// Vertices of the unique cycle in cyclic order, starting at the least
/// vertex and continuing towards its smaller cycle neighbour.
pub fn unique_cycle(g: &Graph) -> Result<Vec<Vertex>> {
    let class = classify(g)?;
    if class != GraphClass::Unicyclic {
        return Err(Error::NotUnicyclic {
            rank: class.cycle_rank(),
        });
    }
    // Peel leaves until only the cycle remains.
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut alive = vec![true; g.order()];
    let mut stack: Vec<Vertex> = g.vertices().filter(|&v| degree[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let on_cycle = |v: Vertex| alive[v];
    let start = g
        .vertices()
        .find(|&v| on_cycle(v))
        .expect("unicyclic graphs have a cycle");
    let next = *g
        .neighbors(start)
        .iter()
        .filter(|&&w| on_cycle(w))
        .min()
        .expect("cycle vertices have two cycle neighbours");
    let mut cycle = vec![start];
    let (mut prev, mut cur) = (start, next);
    while cur != start {
        cycle.push(cur);
        let step = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| on_cycle(w) && w != prev)
            .expect("cycle continues");
        prev = cur;
        cur = step;
    }
    Ok(cycle)
}

/// Edges of the unique cycle of `g`, each as `(min, max)`, sorted.
pub fn cycle_edges(g: &Graph) -> Result<Vec<(Vertex, Vertex)>> {
    let cycle = unique_cycle(g)?;
    let k = cycle.len();
    let mut edges: Vec<_> = (0..k)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    Ok(edges)
}

/// Pairs `u < v` with N(u) ∖ {v} = N(v) ∖ {u}, adjacent or not.
pub fn twins(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for u in g.vertices() {
        for v in u + 1..g.order() {
            let nu = g.neighbors(u).iter().filter(|&&x| x != v);
            let nv = g.neighbors(v).iter().filter(|&&x| x != u);
            if nu.eq(nv) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Every pair `u < v` that is not an edge, in lexicographic order.
pub fn complement_edges(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for u in g.vertices() {
        for v in u + 1..g.order() {
            if !g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}
