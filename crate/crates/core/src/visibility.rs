//! Pair visibility and the four set-level visibility predicates.
//!
//! Two vertices `x`, `y` are *X-visible* when some shortest `x,y`-path has no
//! internal vertex in `X`. The variants differ only in which vertex pairs must
//! be X-visible:
//!
//! | variant | X×X | X×X̄ | X̄×X̄ |
//! |---------|-----|-----|-----|
//! | `Mv`    |  +  |  −  |  −  |
//! | `Dual`  |  +  |  −  |  +  |
//! | `Outer` |  +  |  +  |  −  |
//! | `Total` |  +  |  +  |  +  |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::VisibilityError;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Mv,
    Dual,
    Outer,
    Total,
}

/// Which pair classes a variant requires to be X-visible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairClasses {
    pub inside: bool,
    pub mixed: bool,
    pub outside: bool,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Mv, Variant::Dual, Variant::Outer, Variant::Total];

    pub fn pair_classes(self) -> PairClasses {
        let (mixed, outside) = match self {
            Variant::Mv => (false, false),
            Variant::Dual => (false, true),
            Variant::Outer => (true, false),
            Variant::Total => (true, true),
        };
        PairClasses {
            inside: true,
            mixed,
            outside,
        }
    }

    /// Subsets of a visibility set of this variant are again visibility sets.
    /// Holds for every variant except `Dual`.
    pub fn is_subset_closed(self) -> bool {
        self != Variant::Dual
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Mv => "mv",
            Variant::Dual => "dual",
            Variant::Outer => "outer",
            Variant::Total => "total",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "mv" | "mutual" => Ok(Variant::Mv),
            "dual" => Ok(Variant::Dual),
            "outer" => Ok(Variant::Outer),
            "total" => Ok(Variant::Total),
            other => Err(format!("unknown variant {other:?} (expected mv, dual, outer or total)")),
        }
    }
}

/// All vertices `y` such that `x` and `y` are X-visible, `x` included.
///
/// Sweeps the distance layers around `x`: a vertex at distance `k` is reached
/// when one of its neighbors at distance `k - 1` was reached and may be passed
/// through (is `x` itself or lies outside `blockers`).
pub fn visible_from(g: &Graph, x: usize, blockers: &VertexSet) -> VertexSet {
    let mut seen = g.set_of([x]);
    let mut pass = seen.clone();
    let mut k = 1;
    while let Some(layer) = g.layer(x, k) {
        if pass.is_empty() {
            break;
        }
        let mut reach = g.empty_set();
        for p in pass.iter() {
            reach.union_with(g.neighbors(p));
        }
        reach.intersect_with(layer);
        seen.union_with(&reach);
        pass = reach.difference(blockers);
        k += 1;
    }
    seen
}

/// Whether `x` and `y` are X-visible for `blockers = X`.
///
/// Searches the shortest-path DAG between `x` and `y`, whose internal vertices
/// must avoid `blockers`. Membership of `x` or `y` themselves is irrelevant,
/// and `x == y` is vacuously visible.
pub fn is_pair_visible(g: &Graph, blockers: &VertexSet, x: usize, y: usize) -> bool {
    if x == y {
        return true;
    }
    let d = g.dist(x, y) as usize;
    let mut pass = g.set_of([x]);
    for k in 1..d {
        let mut reach = g.empty_set();
        for p in pass.iter() {
            reach.union_with(g.neighbors(p));
        }
        // stay on the x,y geodesics
        reach.intersect_with(g.layer(x, k).expect("within eccentricity"));
        reach.intersect_with(g.layer(y, d - k).expect("within eccentricity"));
        reach.subtract(blockers);
        if reach.is_empty() {
            return false;
        }
        pass = reach;
    }
    pass.iter().any(|p| g.is_adjacent(p, y))
}

/// Whether `set` is a visibility set of the given variant.
pub fn is_visibility_set(g: &Graph, set: &VertexSet, variant: Variant) -> bool {
    let classes = variant.pair_classes();
    let outside = set.complement();
    let full = g.vertex_set();
    for x in 0..g.n() {
        let in_set = set.contains(x);
        let targets = match (in_set, classes.mixed, classes.outside) {
            (true, true, _) => &full,
            (true, false, _) => set,
            // mixed pairs are already covered from their X endpoint
            (false, _, true) => &outside,
            (false, _, false) => continue,
        };
        if targets.len() <= 1 {
            continue;
        }
        if !targets.is_subset(&visible_from(g, x, set)) {
            return false;
        }
    }
    true
}

/// Total visibility via the distance-two characterization: `set` is a total
/// visibility set iff no pair at distance two has all its common neighbors
/// inside `set`.
pub fn is_total_visibility_set_fast(g: &Graph, set: &VertexSet) -> bool {
    for u in 0..g.n() {
        let Some(ring) = g.layer(u, 2) else {
            continue;
        };
        for v in ring.iter().filter(|&v| v > u) {
            if g.common_neighbors(u, v).is_subset(set) {
                return false;
            }
        }
    }
    true
}

/// No shortest path between two members of `set` has an internal vertex in `set`.
pub fn is_general_position_set(g: &Graph, set: &VertexSet) -> bool {
    let members = set.to_vec();
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i + 1..] {
            if g.dist(x, y) >= 2 && g.interval(x, y).intersection(set).len() != 2 {
                return false;
            }
        }
    }
    true
}

/// For a nonempty `set` whose proper subsets are all total visibility sets,
/// returns a nonadjacent pair `(v1, v2)` with `N(v1) ∩ N(v2) = set` when
/// `set` itself is not total, and `None` when it is.
///
/// The precondition is validated on the maximal proper subsets only, which
/// suffices because total visibility is closed under subsets.
pub fn minimal_non_total_witness(
    g: &Graph,
    set: &VertexSet,
) -> Result<Option<(usize, usize)>, VisibilityError> {
    if set.is_empty() {
        return Err(VisibilityError::PreconditionViolated("set is empty".into()));
    }
    for x in set.iter() {
        if !is_total_visibility_set_fast(g, &set.without(x)) {
            return Err(VisibilityError::PreconditionViolated(format!(
                "proper subset {} is not a total visibility set",
                set.without(x)
            )));
        }
    }
    if is_total_visibility_set_fast(g, set) {
        return Ok(None);
    }
    for v1 in 0..g.n() {
        for v2 in v1 + 1..g.n() {
            if !g.is_adjacent(v1, v2) && g.common_neighbors(v1, v2) == *set {
                return Ok(Some((v1, v2)));
            }
        }
    }
    Err(VisibilityError::PreconditionViolated(format!(
        "no witness pair exists for {set}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        build_graph(n, &edges).unwrap()
    }

    fn k33() -> Graph {
        let mut edges = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                edges.push((a, b));
            }
        }
        build_graph(6, &edges).unwrap()
    }

    #[test]
    fn pair_visibility_on_c6() {
        let g = cycle(6);
        let x = g.set_of([1]);
        assert!(!is_pair_visible(&g, &x, 0, 2));
        assert!(is_pair_visible(&g, &x, 0, 3));
        assert!(is_pair_visible(&g, &x, 0, 1));
        assert!(is_pair_visible(&g, &x, 4, 4));
        // endpoints in X do not block
        assert!(is_pair_visible(&g, &g.set_of([0, 2]), 0, 2));
    }

    #[test]
    fn k33_common_neighbours_block() {
        let g = k33();
        let x = g.set_of([3, 4, 5]);
        assert!(!is_pair_visible(&g, &x, 0, 1));
        assert!(is_pair_visible(&g, &g.set_of([3, 4]), 0, 1));
    }

    #[test]
    fn visible_from_agrees_with_pairs() {
        let g = cycle(7);
        let x = g.set_of([1, 4]);
        for s in 0..7 {
            let vis = visible_from(&g, s, &x);
            for t in 0..7 {
                assert_eq!(vis.contains(t), is_pair_visible(&g, &x, s, t), "{s} {t}");
            }
        }
    }

    #[test]
    fn dual_is_not_subset_closed_on_c6() {
        let g = cycle(6);
        assert!(is_visibility_set(&g, &g.set_of([0, 1]), Variant::Dual));
        assert!(!is_visibility_set(&g, &g.set_of([0]), Variant::Dual));
        assert!(!is_visibility_set(&g, &g.set_of([1]), Variant::Dual));
    }

    #[test]
    fn adjacent_pair_of_c7_is_not_total() {
        let g = cycle(7);
        let x = g.set_of([2, 3]);
        assert!(!is_visibility_set(&g, &x, Variant::Total));
        assert!(!is_visibility_set(&g, &x, Variant::Dual));
        assert!(!is_visibility_set(&g, &x, Variant::Outer));
        assert!(is_visibility_set(&g, &x, Variant::Mv));
    }

    #[test]
    fn empty_set_satisfies_everything() {
        let g = cycle(7);
        for v in Variant::ALL {
            assert!(is_visibility_set(&g, &g.empty_set(), v));
        }
    }

    #[test]
    fn fast_total_on_c4() {
        let g = cycle(4);
        assert!(is_total_visibility_set_fast(&g, &g.set_of([0])));
        assert!(!is_total_visibility_set_fast(&g, &g.set_of([0, 2])));
        let k5 = build_graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
            .unwrap();
        assert!(is_total_visibility_set_fast(&k5, &k5.vertex_set()));
    }

    #[test]
    fn general_position_on_p4() {
        let g = build_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(is_general_position_set(&g, &g.set_of([0, 3])));
        assert!(!is_general_position_set(&g, &g.set_of([0, 1, 3])));
    }

    #[test]
    fn witnesses() {
        let c4 = cycle(4);
        assert_eq!(minimal_non_total_witness(&c4, &c4.set_of([1, 3])), Ok(Some((0, 2))));
        assert_eq!(minimal_non_total_witness(&c4, &c4.set_of([0])), Ok(None));
        assert!(minimal_non_total_witness(&c4, &c4.empty_set()).is_err());
        assert!(minimal_non_total_witness(&c4, &c4.set_of([0, 1, 3])).is_err());
        let g = k33();
        assert_eq!(minimal_non_total_witness(&g, &g.set_of([3, 4, 5])), Ok(Some((0, 1))));
    }

    #[test]
    fn variant_parsing() {
        assert_eq!("Outer".parse::<Variant>(), Ok(Variant::Outer));
        assert!("bogus".parse::<Variant>().is_err());
        assert!(!Variant::Dual.is_subset_closed());
    }
}
