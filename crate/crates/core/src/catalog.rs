//! Named test graphs and seeded random connected graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{construct, Family};
use crate::graph::{build_graph, Graph};

/// A graph with a human-readable label.
#[derive(Clone, Debug)]
pub struct Named {
    pub label: String,
    pub graph: Graph,
}

impl Named {
    pub fn family(f: Family) -> Named {
        Named {
            label: f.to_string(),
            graph: construct(&f).expect("catalog families are valid").graph,
        }
    }

    pub fn new(label: impl Into<String>, graph: Graph) -> Named {
        Named {
            label: label.into(),
            graph,
        }
    }
}

/// Random labelled tree on `n` vertices: each vertex attaches to a uniformly
/// chosen earlier one, then labels are shuffled.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let edges: Vec<(usize, usize)> = (1..n)
        .map(|i| (perm[rng.gen_range(0..i)], perm[i]))
        .collect();
    build_graph(n, &edges).expect("trees are connected")
}

/// Random connected graph: a random tree plus each remaining pair with
/// probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    let tree = random_tree(n, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut edges = tree.edges();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.is_adjacent(u, v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build_graph(n, &edges).expect("supergraph of a tree is connected")
}

/// Graphs with at most ten vertices, small enough for exhaustive property checks.
pub fn small_graphs() -> Vec<Named> {
    let mut out = Vec::new();
    for n in 2..=10 {
        out.push(Named::family(Family::Path(n)));
    }
    for n in 3..=10 {
        out.push(Named::family(Family::Cycle(n)));
    }
    for n in 1..=6 {
        out.push(Named::family(Family::Complete(n)));
    }
    for (m, n) in [(1, 3), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4)] {
        out.push(Named::family(Family::CompleteBipartite(m, n)));
    }
    out.push(Named::family(Family::Petersen));
    out.push(Named::family(Family::GN(2)));
    out.push(Named::family(Family::FOneEll(1)));
    out.push(Named::new(
        "house",
        build_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)]).unwrap(),
    ));
    for seed in 0..6 {
        out.push(Named::new(format!("tree(10,#{seed})"), random_tree(10, seed)));
    }
    for (i, &(n, p)) in [(7, 0.3), (8, 0.25), (9, 0.2), (10, 0.15), (10, 0.3), (9, 0.4)]
        .iter()
        .enumerate()
    {
        let seed = 100 + i as u64;
        out.push(Named::new(
            format!("random({n},{p},#{seed})"),
            random_connected(n, p, seed),
        ));
    }
    out
}

/// Graphs with 11 to 16 vertices for sampled property checks.
pub fn medium_graphs() -> Vec<Named> {
    let mut out = vec![
        Named::family(Family::GN(3)),
        Named::family(Family::GN(4)),
        Named::family(Family::Path(12)),
        Named::family(Family::Path(16)),
        Named::family(Family::Cycle(12)),
        Named::family(Family::Cycle(15)),
        Named::family(Family::FOneEll(2)),
        Named::family(Family::CompleteBipartite(5, 6)),
    ];
    for (i, &(n, p)) in [(12, 0.2), (14, 0.15), (16, 0.12)].iter().enumerate() {
        let seed = 200 + i as u64;
        out.push(Named::new(
            format!("random({n},{p},#{seed})"),
            random_connected(n, p, seed),
        ));
    }
    out
}

/// Uniformly random `k`-subset mask of `0..n` with `k` itself uniform.
pub fn random_subset_mask<R: Rng>(rng: &mut R, n: usize) -> u64 {
    let k = rng.gen_range(0..=n);
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    verts[..k].iter().fold(0u64, |m, &v| m | 1 << v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_graphs_are_reproducible() {
        assert_eq!(random_tree(9, 3).edges(), random_tree(9, 3).edges());
        let g = random_connected(12, 0.2, 7);
        assert_eq!(g.edges(), random_connected(12, 0.2, 7).edges());
        assert_eq!(random_tree(9, 3).m(), 8);
    }

    #[test]
    fn catalog_sizes() {
        assert!(small_graphs().iter().all(|g| g.graph.n() <= 10));
        assert!(medium_graphs()
            .iter()
            .all(|g| (11..=16).contains(&g.graph.n())));
    }
}
