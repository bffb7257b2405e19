//! Exact enumeration of visibility sets: polynomials, numbers, maximal sets,
//! the dual spectrum, and the total visibility number from structure alone.
//!
//! Subset-closed variants (`Mv`, `Outer`, `Total`) are enumerated by a
//! depth-first search over their own downward-closed family: a set is extended
//! only by larger vertices, and a vertex that fails to extend a set is dropped
//! from every deeper candidate list. Dual sets are not subset-closed, so they
//! are found by walking the mutual-visibility family (every dual set is a
//! mutual-visibility set) and testing the dual predicate at each node.
//!
//! Work is split into independent subtrees, each with a private accumulator;
//! partial results are merged by addition (or max/concatenation) in a fixed
//! order, so every result is independent of `worker_count`.

use num_bigint::{BigUint, Sign};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::EnumerationError;
use crate::graph::Graph;
use crate::poly::{CountPolynomial, SignedPoly};
use crate::vertex_set::VertexSet;
use crate::visibility::{
    is_total_visibility_set_fast, is_visibility_set, Variant,
};

/// Hard ceiling on exhaustive vertex counts; per-size counts are kept in `u64`.
pub const MAX_EXHAUSTIVE_CEILING: usize = 63;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    /// Largest vertex count for which exhaustive enumeration is attempted.
    pub max_exhaustive_n: usize,
    /// Permit convex-cover pruned dual search on larger graphs.
    pub allow_lemma_assisted: bool,
    pub worker_count: usize,
    /// Node budget for inclusion-exclusion and lemma-assisted candidate search.
    pub max_search_nodes: u64,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_exhaustive_n: 16,
            allow_lemma_assisted: false,
            worker_count: std::thread::available_parallelism().map_or(1, |n| n.get()),
            max_search_nodes: 1 << 26,
        }
    }
}

impl EnumerationLimits {
    pub fn sequential() -> Self {
        EnumerationLimits {
            worker_count: 1,
            ..Default::default()
        }
    }

    fn check(&self, g: &Graph) -> Result<(), EnumerationError> {
        if self.max_exhaustive_n > MAX_EXHAUSTIVE_CEILING {
            return Err(EnumerationError::InvalidLimits(format!(
                "max_exhaustive_n must be at most {MAX_EXHAUSTIVE_CEILING}"
            )));
        }
        if g.n() > self.max_exhaustive_n {
            return Err(EnumerationError::GraphTooLarge {
                n: g.n(),
                limit: self.max_exhaustive_n,
            });
        }
        Ok(())
    }
}

/// How a result was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    #[serde(rename = "exhaustive")]
    Exhaustive,
    /// Relies on restriction of dual sets to convex subgraphs for pruning.
    #[serde(rename = "lemma-assisted")]
    LemmaAssisted,
    #[serde(rename = "closed-form")]
    ClosedForm,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Provenance::Exhaustive => "exhaustive",
            Provenance::LemmaAssisted => "lemma-assisted",
            Provenance::ClosedForm => "closed-form",
        })
    }
}

/// Membership test for the family that the search walks.
fn family_member(variant: Variant) -> impl Fn(&Graph, &VertexSet) -> bool + Sync {
    move |g, s| match variant {
        Variant::Total => is_total_visibility_set_fast(g, s),
        Variant::Dual => is_visibility_set(g, s, Variant::Mv),
        v => is_visibility_set(g, s, v),
    }
}

/// A search subtree: `set` is a family member, `cands` the larger vertices
/// that individually extend it within the family.
struct Subtree {
    set: VertexSet,
    cands: Vec<usize>,
}

fn extensions<M>(g: &Graph, member: &M, set: &VertexSet, pool: &[usize]) -> Vec<usize>
where
    M: Fn(&Graph, &VertexSet) -> bool,
{
    let mut probe = set.clone();
    pool.iter()
        .copied()
        .filter(|&c| {
            probe.insert(c);
            let ok = member(g, &probe);
            probe.remove(c);
            ok
        })
        .collect()
}

/// Splits the family below the empty set into subtrees rooted at depth two.
/// Returns the depth-one sets (visited by the caller) and the subtrees.
fn split_family<M>(g: &Graph, member: &M) -> (Vec<VertexSet>, Vec<Subtree>)
where
    M: Fn(&Graph, &VertexSet) -> bool,
{
    let all: Vec<usize> = (0..g.n()).collect();
    let roots = extensions(g, member, &g.empty_set(), &all);
    let mut shallow = Vec::new();
    let mut subtrees = Vec::new();
    for (i, &r) in roots.iter().enumerate() {
        let single = g.set_of([r]);
        let cands = extensions(g, member, &single, &roots[i + 1..]);
        for (j, &c) in cands.iter().enumerate() {
            let pair = single.with(c);
            let deeper = extensions(g, member, &pair, &cands[j + 1..]);
            subtrees.push(Subtree {
                set: pair,
                cands: deeper,
            });
        }
        shallow.push(single);
    }
    (shallow, subtrees)
}

fn walk<M, V>(g: &Graph, member: &M, set: &mut VertexSet, cands: &[usize], visit: &mut V)
where
    M: Fn(&Graph, &VertexSet) -> bool,
    V: FnMut(&VertexSet),
{
    visit(set);
    for (i, &w) in cands.iter().enumerate() {
        set.insert(w);
        let next = extensions(g, member, set, &cands[i + 1..]);
        walk(g, member, set, &next, visit);
        set.remove(w);
    }
}

/// Maps `f` over items on `workers` threads, preserving order.
fn par_map<T, R, F>(workers: usize, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    if workers <= 1 || items.len() <= 1 {
        return items.into_iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(|| items.into_par_iter().map(f).collect()),
        Err(_) => items.into_iter().map(f).collect(),
    }
}

/// Visits every member of the family walked for `variant` (including the
/// empty set) and folds per-subtree accumulators.
fn fold_family<A, I, V>(
    g: &Graph,
    variant: Variant,
    limits: &EnumerationLimits,
    init: I,
    visit: V,
) -> Vec<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &VertexSet) + Sync + Send,
{
    let member = family_member(variant);
    let (shallow, subtrees) = split_family(g, &member);
    let mut head = init();
    visit(&mut head, &g.empty_set());
    for s in &shallow {
        visit(&mut head, s);
    }
    let mut parts = vec![head];
    parts.extend(par_map(limits.worker_count, subtrees, |mut t| {
        let mut acc = init();
        walk(g, &member, &mut t.set, &t.cands, &mut |s| visit(&mut acc, s));
        acc
    }));
    parts
}

fn accepts(g: &Graph, s: &VertexSet, variant: Variant) -> bool {
    match variant {
        // the walked family already guarantees membership
        Variant::Mv | Variant::Outer | Variant::Total => true,
        Variant::Dual => is_visibility_set(g, s, Variant::Dual),
    }
}

fn counts_to_poly(counts: Vec<u64>) -> CountPolynomial {
    CountPolynomial::new(counts.into_iter().map(BigUint::from).collect())
        .expect("the empty set is always counted")
}

/// Number of `variant` sets of each size, as a polynomial.
pub fn visibility_polynomial(
    g: &Graph,
    variant: Variant,
    limits: &EnumerationLimits,
) -> Result<CountPolynomial, EnumerationError> {
    limits.check(g)?;
    let n = g.n();
    let parts = fold_family(g, variant, limits, || vec![0u64; n + 1], |acc, s| {
        if accepts(g, s, variant) {
            acc[s.len()] += 1;
        }
    });
    let mut total = vec![0u64; n + 1];
    for p in parts {
        for (t, c) in total.iter_mut().zip(p) {
            *t += c;
        }
    }
    Ok(counts_to_poly(total))
}

/// The dual visibility spectrum `(r_0, ..., r_k)`, `k` the dual visibility number.
pub fn dual_spectrum(g: &Graph, limits: &EnumerationLimits) -> Result<CountPolynomial, EnumerationError> {
    visibility_polynomial(g, Variant::Dual, limits)
}

/// Every `variant` set, in a deterministic order (ascending size, then by
/// member list).
pub fn visibility_sets(
    g: &Graph,
    variant: Variant,
    limits: &EnumerationLimits,
) -> Result<Vec<VertexSet>, EnumerationError> {
    limits.check(g)?;
    let parts = fold_family(g, variant, limits, Vec::new, |acc, s| {
        if accepts(g, s, variant) {
            acc.push(s.clone());
        }
    });
    let mut sets: Vec<VertexSet> = parts.into_iter().flatten().collect();
    sort_sets(&mut sets);
    Ok(sets)
}

fn sort_sets(sets: &mut [VertexSet]) {
    sets.sort_by_cached_key(|s| (s.len(), s.to_vec()));
}

/// Largest size of a `variant` set.
///
/// Subset-closed variants use branch and bound over their family; `Dual` is
/// read off the full spectrum.
pub fn visibility_number(
    g: &Graph,
    variant: Variant,
    limits: &EnumerationLimits,
) -> Result<usize, EnumerationError> {
    limits.check(g)?;
    if variant == Variant::Dual {
        return Ok(dual_spectrum(g, limits)?.degree());
    }
    let member = family_member(variant);
    let (shallow, subtrees) = split_family(g, &member);
    let floor = if subtrees.is_empty() { shallow.len().min(1) } else { 2 };
    let best = par_map(limits.worker_count, subtrees, |mut t| {
        let mut best = floor;
        branch_and_bound(g, &member, &mut t.set, &t.cands, &mut best);
        best
    });
    Ok(best.into_iter().max().unwrap_or(floor))
}

fn branch_and_bound<M>(g: &Graph, member: &M, set: &mut VertexSet, cands: &[usize], best: &mut usize)
where
    M: Fn(&Graph, &VertexSet) -> bool,
{
    *best = (*best).max(set.len());
    for (i, &w) in cands.iter().enumerate() {
        if set.len() + cands.len() - i <= *best {
            return;
        }
        set.insert(w);
        let next = extensions(g, member, set, &cands[i + 1..]);
        branch_and_bound(g, member, set, &next, best);
        set.remove(w);
    }
}

/// All inclusion-maximal `variant` sets; `variant` must be subset-closed.
pub fn maximal_visibility_sets(
    g: &Graph,
    variant: Variant,
    limits: &EnumerationLimits,
) -> Result<Vec<VertexSet>, EnumerationError> {
    if !variant.is_subset_closed() {
        return Err(EnumerationError::UnsupportedVariant(variant));
    }
    limits.check(g)?;
    let member = family_member(variant);
    let parts = fold_family(g, variant, limits, Vec::new, |acc, s| {
        let maximal = s
            .complement()
            .iter()
            .all(|v| !member(g, &s.with(v)));
        if maximal {
            acc.push(s.clone());
        }
    });
    let mut sets: Vec<VertexSet> = parts.into_iter().flatten().collect();
    sort_sets(&mut sets);
    Ok(sets)
}

/// Rebuilds the polynomial of a subset-closed variant from its maximal sets
/// `X_1..X_N` as the alternating sum of `(1+x)^|X_{i1} ∩ ... ∩ X_{ik}|` over
/// nonempty subfamilies.
///
/// A subfamily branch whose current intersection lies inside some set still
/// available for inclusion sums to zero (its terms pair off with opposite
/// signs), so such branches are skipped without changing the value.
pub fn polynomial_via_inclusion_exclusion(
    g: &Graph,
    variant: Variant,
    limits: &EnumerationLimits,
) -> Result<CountPolynomial, EnumerationError> {
    let maximal = maximal_visibility_sets(g, variant, limits)?;
    let powers: Vec<CountPolynomial> = (0..=g.n()).map(CountPolynomial::one_plus_x_pow).collect();
    let mut ie = InclusionExclusion {
        maximal: &maximal,
        powers: &powers,
        acc: SignedPoly::default(),
        nodes: 0,
        budget: limits.max_search_nodes,
    };
    for (i, x) in maximal.iter().enumerate() {
        ie.descend(i + 1, x.clone(), Sign::Plus)?;
    }
    Ok(ie
        .acc
        .into_counts()
        .expect("inclusion-exclusion over a subset-closed family yields counts"))
}

struct InclusionExclusion<'a> {
    maximal: &'a [VertexSet],
    powers: &'a [CountPolynomial],
    acc: SignedPoly,
    nodes: u64,
    budget: u64,
}

impl InclusionExclusion<'_> {
    fn descend(&mut self, next: usize, inter: VertexSet, sign: Sign) -> Result<(), EnumerationError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(EnumerationError::TooManyMaximalSets {
                maximal: self.maximal.len(),
            });
        }
        if self.maximal[next..].iter().any(|x| inter.is_subset(x)) {
            return Ok(());
        }
        self.acc.add_scaled(self.powers[inter.len()].coeffs(), sign);
        let flipped = -sign;
        for j in next..self.maximal.len() {
            self.descend(j + 1, inter.intersection(&self.maximal[j]), flipped)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaAssistedOutcome {
    pub spectrum: CountPolynomial,
    pub provenance: Provenance,
    /// Candidates that survived the cover pruning and were checked in full.
    pub candidates_checked: u64,
}

/// Largest number of uncovered vertices whose subsets are tried freely.
const MAX_FREE_VERTICES: usize = 24;

/// Dual spectrum search pruned by a convex cover.
///
/// Every member of `cover` must be convex. The restriction of a dual set to a
/// convex subgraph is a dual set of that subgraph, so candidates are assembled
/// from per-member dual families that agree on overlaps; uncovered vertices
/// are free. Each surviving candidate is checked with the full dual predicate.
pub fn lemma_assisted_dual_search(
    g: &Graph,
    cover: &[VertexSet],
    limits: &EnumerationLimits,
) -> Result<LemmaAssistedOutcome, EnumerationError> {
    if !limits.allow_lemma_assisted {
        return Err(EnumerationError::LemmaAssistedDisabled);
    }
    let mut members = Vec::new();
    for (index, s) in cover.iter().enumerate() {
        if s.universe() != g.n() || s.is_empty() || !g.is_convex(s) {
            return Err(EnumerationError::NonConvexCoverMember { index });
        }
        if s.len() > limits.max_exhaustive_n {
            return Err(EnumerationError::SearchSpaceTooLarge(format!(
                "cover member {index} has {} vertices, above the exhaustive limit {}",
                s.len(),
                limits.max_exhaustive_n
            )));
        }
        let (h, map) = g.induced_subgraph(s)?;
        let local = visibility_sets(&h, Variant::Dual, &EnumerationLimits { worker_count: 1, ..limits.clone() })?;
        let allowed: Vec<VertexSet> = local
            .iter()
            .map(|d| g.set_of(d.iter().map(|v| map[v])))
            .collect();
        members.push((s.clone(), allowed));
    }
    // most constrained members first
    members.sort_by_key(|(_, allowed)| allowed.len());
    let mut covered = g.empty_set();
    for (s, _) in &members {
        covered.union_with(s);
    }
    let free = covered.complement().to_vec();
    if free.len() > MAX_FREE_VERTICES {
        return Err(EnumerationError::SearchSpaceTooLarge(format!(
            "{} vertices are not covered",
            free.len()
        )));
    }
    let mut search = CoverSearch {
        g,
        members: &members,
        free: &free,
        counts: vec![0u64; g.n() + 1],
        checked: 0,
        budget: limits.max_search_nodes,
    };
    search.assign(0, g.empty_set(), g.empty_set())?;
    let checked = search.checked;
    Ok(LemmaAssistedOutcome {
        spectrum: counts_to_poly(search.counts),
        provenance: Provenance::LemmaAssisted,
        candidates_checked: checked,
    })
}

struct CoverSearch<'a> {
    g: &'a Graph,
    members: &'a [(VertexSet, Vec<VertexSet>)],
    free: &'a [usize],
    counts: Vec<u64>,
    checked: u64,
    budget: u64,
}

impl CoverSearch<'_> {
    fn assign(&mut self, depth: usize, chosen: VertexSet, assigned: VertexSet) -> Result<(), EnumerationError> {
        let Some((span, allowed)) = self.members.get(depth) else {
            return self.fill_free(&chosen);
        };
        let fixed = chosen.intersection(span);
        let overlap = assigned.intersection(span);
        for a in allowed {
            if a.intersection(&overlap) == fixed {
                self.assign(depth + 1, chosen.union(a), assigned.union(span))?;
            }
        }
        Ok(())
    }

    fn fill_free(&mut self, chosen: &VertexSet) -> Result<(), EnumerationError> {
        for mask in 0u64..1 << self.free.len() {
            self.checked += 1;
            if self.checked > self.budget {
                return Err(EnumerationError::SearchSpaceTooLarge(
                    "candidate budget exhausted".into(),
                ));
            }
            let mut x = chosen.clone();
            for (i, &v) in self.free.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    x.insert(v);
                }
            }
            if is_visibility_set(self.g, &x, Variant::Dual) {
                self.counts[x.len()] += 1;
            }
        }
        Ok(())
    }
}

/// Dual spectrum by exhaustive search when the graph is small enough,
/// otherwise by lemma-assisted search over the blocks of the graph (blocks
/// are always convex), if permitted.
pub fn dual_spectrum_auto(
    g: &Graph,
    limits: &EnumerationLimits,
) -> Result<(CountPolynomial, Provenance), EnumerationError> {
    match dual_spectrum(g, limits) {
        Ok(p) => Ok((p, Provenance::Exhaustive)),
        Err(EnumerationError::GraphTooLarge { .. }) if limits.allow_lemma_assisted => {
            let outcome = lemma_assisted_dual_search(g, &g.blocks(), limits)?;
            Ok((outcome.spectrum, outcome.provenance))
        }
        Err(e) => Err(e),
    }
}

/// The total visibility number as far as bypass vertices determine it:
/// `Some(0)` without bypass vertices, `Some(1)` when every two bypass vertices
/// `v1, v2` admit nonadjacent `u1, u2` with `N(u1) ∩ N(u2) = {v1, v2}`, and
/// `None` otherwise (then the number is at least 2).
pub fn total_number_via_bypass(g: &Graph) -> Option<usize> {
    let bypass = g.bypass_vertices().to_vec();
    if bypass.is_empty() {
        return Some(0);
    }
    let n = g.n();
    let mut blocking_pairs = Vec::new();
    for u1 in 0..n {
        for u2 in u1 + 1..n {
            if g.is_adjacent(u1, u2) {
                continue;
            }
            let common = g.common_neighbors(u1, u2);
            if common.len() == 2 {
                blocking_pairs.push(common);
            }
        }
    }
    for (i, &v1) in bypass.iter().enumerate() {
        for &v2 in &bypass[i + 1..] {
            let pair = g.set_of([v1, v2]);
            if !blocking_pairs.contains(&pair) {
                return None;
            }
        }
    }
    Some(1)
}

/// Total visibility number of a geodetic graph: the number of simplicial
/// vertices.
pub fn total_number_geodetic(g: &Graph) -> Result<usize, EnumerationError> {
    if !g.is_geodetic() {
        return Err(EnumerationError::NotGeodetic);
    }
    Ok(g.simplicial_vertices().len())
}

/// Exhaustively confirms, for a geodetic graph, that the simplicial vertices
/// form a total visibility set and that no other total set has that size or
/// more.
pub fn verify_geodetic_total(g: &Graph, limits: &EnumerationLimits) -> Result<bool, EnumerationError> {
    let s = g.simplicial_vertices();
    let size = total_number_geodetic(g)?;
    if !is_visibility_set(g, &s, Variant::Total) {
        return Ok(false);
    }
    let others = visibility_sets(g, Variant::Total, limits)?
        .into_iter()
        .filter(|x| x.len() >= size && *x != s)
        .count();
    Ok(others == 0)
}
