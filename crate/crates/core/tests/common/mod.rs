//! Brute-force oracle built only from an edge list: Floyd-Warshall distances,
//! explicit enumeration of every shortest path, and full subset scans.
//! Shares no code with the library beyond reading `Graph::edges`.

#![allow(dead_code)]

use mutvis_core::{Graph, Variant};

pub struct Oracle {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
    pub dist: Vec<Vec<usize>>,
    /// `paths[x][y]`: internal-vertex masks of every shortest x,y-path.
    pub paths: Vec<Vec<Vec<u64>>>,
}

const INF: usize = usize::MAX / 4;

impl Oracle {
    pub fn new(g: &Graph) -> Oracle {
        Oracle::from_edges(g.n(), &g.edges())
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Oracle {
        assert!(n <= 20, "oracle is for small graphs");
        let mut adj = vec![vec![false; n]; n];
        let mut dist = vec![vec![INF; n]; n];
        for (v, row) in dist.iter_mut().enumerate() {
            row[v] = 0;
        }
        for &(u, v) in edges {
            adj[u][v] = true;
            adj[v][u] = true;
            dist[u][v] = 1;
            dist[v][u] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if dist[i][k] + dist[k][j] < dist[i][j] {
                        dist[i][j] = dist[i][k] + dist[k][j];
                    }
                }
            }
        }
        let mut o = Oracle {
            n,
            adj,
            dist,
            paths: Vec::new(),
        };
        o.paths = (0..n)
            .map(|x| (0..n).map(|y| o.shortest_paths(x, y)).collect())
            .collect();
        o
    }

    /// Walks every path from x that steps one closer to y each time.
    fn shortest_paths(&self, x: usize, y: usize) -> Vec<u64> {
        let mut out = Vec::new();
        let mut stack = vec![(x, 0u64)];
        while let Some((v, mask)) = stack.pop() {
            if v == y {
                out.push(mask);
                continue;
            }
            for w in 0..self.n {
                if self.adj[v][w] && self.dist[w][y] + 1 == self.dist[v][y] {
                    let internal = if w == y { mask } else { mask | 1 << w };
                    stack.push((w, internal));
                }
            }
        }
        out
    }

    pub fn path_count(&self, x: usize, y: usize) -> usize {
        self.paths[x][y].len()
    }

    pub fn visible(&self, x: usize, y: usize, set: u64) -> bool {
        x == y || self.paths[x][y].iter().any(|m| m & set == 0)
    }

    pub fn is_set(&self, set: u64, variant: Variant) -> bool {
        let inside = |v: usize| set >> v & 1 == 1;
        for x in 0..self.n {
            for y in x + 1..self.n {
                let needed = match (inside(x), inside(y), variant) {
                    (true, true, _) => true,
                    (false, false, Variant::Dual | Variant::Total) => true,
                    (a, b, Variant::Outer | Variant::Total) if a != b => true,
                    _ => false,
                };
                if needed && !self.visible(x, y, set) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_general_position(&self, set: u64) -> bool {
        for x in 0..self.n {
            for y in x + 1..self.n {
                if set >> x & 1 == 1 && set >> y & 1 == 1 {
                    for z in 0..self.n {
                        if z != x && z != y && set >> z & 1 == 1 && self.dist[x][z] + self.dist[z][y] == self.dist[x][y] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Coefficients `r_0..=r_k` with trailing zeros removed.
    pub fn polynomial(&self, variant: Variant) -> Vec<u64> {
        let mut counts = vec![0u64; self.n + 1];
        for set in 0u64..1 << self.n {
            if self.is_set(set, variant) {
                counts[set.count_ones() as usize] += 1;
            }
        }
        while counts.len() > 1 && *counts.last().unwrap() == 0 {
            counts.pop();
        }
        counts
    }

    pub fn number(&self, variant: Variant) -> usize {
        self.polynomial(variant).len() - 1
    }

    pub fn sets(&self, variant: Variant) -> Vec<u64> {
        (0u64..1 << self.n).filter(|&s| self.is_set(s, variant)).collect()
    }

    pub fn maximal_sets(&self, variant: Variant) -> Vec<u64> {
        let sets = self.sets(variant);
        sets.iter()
            .copied()
            .filter(|&s| !sets.iter().any(|&t| t != s && t & s == s))
            .collect()
    }
}

pub fn mask_of(set: &mutvis_core::VertexSet) -> u64 {
    set.iter().fold(0, |m, v| m | 1 << v)
}
