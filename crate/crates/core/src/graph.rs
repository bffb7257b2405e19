//! Immutable connected graphs with precomputed distances.
//!
//! Vertices are the integers `0..n`. Building a [`Graph`] runs a breadth-first
//! search from every vertex, recording hop distances, exact shortest-path
//! counts and the distance layers around each vertex. Everything downstream
//! (intervals, visibility, convexity) reads those tables.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::GraphError;
use crate::vertex_set::VertexSet;

const UNREACHED: u32 = u32::MAX;

#[derive(Clone)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
    dist: Vec<u32>,
    spcount: Vec<BigUint>,
    /// `layers[x][k]` holds the vertices at distance exactly `k` from `x`.
    layers: Vec<Vec<VertexSet>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Builds a simple connected graph on `0..n` from an edge list.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let mut adj = vec![VertexSet::empty(n); n];
    for &(u, v) in edges {
        if u >= n || v >= n || u == v {
            return Err(GraphError::InvalidEdge { u, v, n });
        }
        if adj[u].contains(v) {
            return Err(GraphError::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            });
        }
        adj[u].insert(v);
        adj[v].insert(u);
    }
    Graph::from_adjacency(adj, edges.len())
}

impl Graph {
    fn from_adjacency(adj: Vec<VertexSet>, m: usize) -> Result<Graph, GraphError> {
        let n = adj.len();
        let mut dist = vec![UNREACHED; n * n];
        let mut spcount = vec![BigUint::zero(); n * n];
        let mut layers = Vec::with_capacity(n);
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = s * n;
            dist[row + s] = 0;
            spcount[row + s] = BigUint::one();
            let mut rings = vec![VertexSet::from_indices(n, [s])];
            queue.clear();
            queue.push_back(s);
            while let Some(p) = queue.pop_front() {
                let dp = dist[row + p];
                for w in adj[p].iter() {
                    if dist[row + w] == UNREACHED {
                        dist[row + w] = dp + 1;
                        if rings.len() <= (dp + 1) as usize {
                            rings.push(VertexSet::empty(n));
                        }
                        rings[(dp + 1) as usize].insert(w);
                        queue.push_back(w);
                    }
                    if dist[row + w] == dp + 1 {
                        let add = spcount[row + p].clone();
                        spcount[row + w] += add;
                    }
                }
            }
            if let Some(v) = (0..n).find(|&v| dist[row + v] == UNREACHED) {
                return Err(GraphError::DisconnectedGraph { u: s, v });
            }
            layers.push(rings);
        }
        Ok(Graph {
            n,
            m,
            adj,
            dist,
            spcount,
            layers,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Number of shortest `u,v`-paths.
    pub fn spcount(&self, u: usize, v: usize) -> &BigUint {
        &self.spcount[u * self.n + v]
    }

    /// Vertices at distance exactly `k` from `x` (empty beyond the eccentricity).
    pub fn layer(&self, x: usize, k: usize) -> Option<&VertexSet> {
        self.layers[x].get(k)
    }

    pub fn eccentricity(&self, x: usize) -> usize {
        self.layers[x].len() - 1
    }

    pub fn diameter(&self) -> usize {
        (0..self.n).map(|x| self.eccentricity(x)).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.n)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn set_of<I: IntoIterator<Item = usize>>(&self, vertices: I) -> VertexSet {
        VertexSet::from_indices(self.n, vertices)
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> VertexSet {
        self.adj[u].intersection(&self.adj[v])
    }

    /// The interval `I(u,v)`: every vertex on at least one shortest `u,v`-path.
    pub fn interval(&self, u: usize, v: usize) -> VertexSet {
        let d = self.dist(u, v);
        let mut s = self.empty_set();
        for w in 0..self.n {
            if self.dist(u, w) + self.dist(w, v) == d {
                s.insert(w);
            }
        }
        s
    }

    /// True when every interval between members of `s` stays inside `s`.
    pub fn is_convex(&self, s: &VertexSet) -> bool {
        let members = s.to_vec();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if self.dist(u, v) >= 2 && !self.interval(u, v).is_subset(s) {
                    return false;
                }
            }
        }
        true
    }

    /// True when the subgraph induced by `s` is connected and preserves all
    /// distances of `self`. The empty set is isometric.
    pub fn is_isometric(&self, s: &VertexSet) -> bool {
        let members = s.to_vec();
        let mut local = vec![UNREACHED; self.n];
        let mut queue = VecDeque::new();
        for (idx, &src) in members.iter().enumerate() {
            local.iter_mut().for_each(|d| *d = UNREACHED);
            local[src] = 0;
            queue.clear();
            queue.push_back(src);
            while let Some(p) = queue.pop_front() {
                for w in self.adj[p].intersection(s).iter() {
                    if local[w] == UNREACHED {
                        local[w] = local[p] + 1;
                        queue.push_back(w);
                    }
                }
            }
            for &t in &members[idx + 1..] {
                if local[t] != self.dist(src, t) {
                    return false;
                }
            }
        }
        true
    }

    /// Every pair of distinct vertices has exactly one shortest path.
    pub fn is_geodetic(&self) -> bool {
        self.spcount.iter().all(|c| c.is_one())
    }

    /// Vertices whose neighborhood induces a clique.
    pub fn simplicial_vertices(&self) -> VertexSet {
        let mut s = self.empty_set();
        for v in 0..self.n {
            let nb = &self.adj[v];
            if nb.iter().all(|u| nb.without(u).is_subset(&self.adj[u])) {
                s.insert(v);
            }
        }
        s
    }

    /// Vertices that are not the center of any convex three-vertex path.
    ///
    /// `v` centers a convex `P_3` exactly when it has two nonadjacent
    /// neighbors `u`, `w` whose only common neighbor is `v`.
    pub fn bypass_vertices(&self) -> VertexSet {
        let mut s = self.empty_set();
        for v in 0..self.n {
            let nb = self.adj[v].to_vec();
            let centers_convex_p3 = nb.iter().enumerate().any(|(i, &u)| {
                nb[i + 1..]
                    .iter()
                    .any(|&w| !self.is_adjacent(u, w) && self.common_neighbors(u, w).len() == 1)
            });
            if !centers_convex_p3 {
                s.insert(v);
            }
        }
        s
    }

    /// The subgraph induced by `s`, relabelled to `0..|s|` in ascending order.
    /// Returns the graph and the map from new labels to old ones.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        let old = s.to_vec();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| s.contains(u) && s.contains(v))
            .map(|(u, v)| (new_of[u], new_of[v]))
            .collect();
        Ok((build_graph(old.len(), &edges)?, old))
    }

    /// `G - s`, relabelled like [`Graph::induced_subgraph`].
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.induced_subgraph(&s.complement())
    }

    /// Vertex sets of the blocks (maximal 2-connected pieces and bridges).
    /// Every block of a connected graph is a convex subgraph.
    pub fn blocks(&self) -> Vec<VertexSet> {
        if self.n == 1 {
            return vec![self.vertex_set()];
        }
        let mut st = BlockSearch {
            g: self,
            disc: vec![usize::MAX; self.n],
            low: vec![0; self.n],
            time: 0,
            edge_stack: Vec::new(),
            blocks: Vec::new(),
        };
        st.visit(0, usize::MAX);
        let mut blocks = st.blocks;
        blocks.sort();
        blocks
    }
}

struct BlockSearch<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
}

impl BlockSearch<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        for w in self.g.adj[u].iter() {
            if self.disc[w] == usize::MAX {
                self.edge_stack.push((u, w));
                self.visit(w, u);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    let mut block = self.g.empty_set();
                    while let Some((a, b)) = self.edge_stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[u] {
                self.edge_stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}
