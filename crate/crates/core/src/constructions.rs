//! Deterministic constructors for the graph families used throughout the crate.
//!
//! Every constructor publishes its labelling through [`Construction::names`].
//! Base vertices come first, in the order listed on each [`Family`] variant;
//! attached 7-cycles follow, six fresh vertices per anchor, anchors taken in
//! ascending index order.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::ConstructionError;
use crate::graph::{build_graph, Graph};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `P_n`: `0 - 1 - ... - (n-1)`.
    Path(usize),
    /// `C_n`: the path plus edge `(n-1, 0)`.
    Cycle(usize),
    /// `K_n`.
    Complete(usize),
    /// `K_{m,n}`: parts `a_0..a_{m-1}` then `b_0..b_{n-1}`.
    CompleteBipartite(usize, usize),
    /// `K_{1,l}`: center `v0`, leaves `v1..vl`.
    Star(usize),
    /// Outer cycle `u0..u4`, then spokes `v0..v4` with `v_i ~ u_i`, `v_i ~ v_{i+2}`.
    Petersen,
    /// `n` five-cycles sharing the edge `uv`: `u, v`, then `x_i, y_i, z_i` per
    /// cycle `u x_i y_i z_i v`.
    GN(usize),
    /// `F_t`: `v0, v1`, then `v2_i, v3_i, v4_i` per five-cycle, then `v5`
    /// (unless omitted, allowed only for `t = 2`), then 7-cycles on every
    /// vertex outside `Y_t`.
    FT { t: usize, omit_v5: bool },
    /// `F_{1,l}`: `v0, v1..vl`, then `u_i_j` in lexicographic order, then
    /// 7-cycles on `v0` and every `u_i_j`.
    FOneEll(usize),
    /// `F(1, r_1, ..., r_k)`: components `F_{1,r_1}` (if `r_1 >= 1`) and `r_i`
    /// copies of `F_i`, glued at their connecting vertices into `v*` = 0.
    FComposite(Vec<usize>),
}

impl Family {
    /// Parses a family name and its comma-separated parameters.
    pub fn parse(name: &str, params: &[usize]) -> Result<Family, ConstructionError> {
        let arity = |k: usize| -> Result<(), ConstructionError> {
            if params.len() == k {
                Ok(())
            } else {
                Err(ConstructionError::InvalidParams(format!(
                    "family {name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let family = match name {
            "path" => {
                arity(1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(params[0])
            }
            "complete" => {
                arity(1)?;
                Family::Complete(params[0])
            }
            "complete_bipartite" | "knn" => {
                if name == "knn" {
                    arity(1)?;
                    Family::CompleteBipartite(params[0], params[0])
                } else {
                    arity(2)?;
                    Family::CompleteBipartite(params[0], params[1])
                }
            }
            "star" => {
                arity(1)?;
                Family::Star(params[0])
            }
            "petersen" => {
                arity(0)?;
                Family::Petersen
            }
            "g_n" => {
                arity(1)?;
                Family::GN(params[0])
            }
            "f_t" => match params {
                [t] => Family::FT { t: *t, omit_v5: false },
                [t, o] => Family::FT { t: *t, omit_v5: *o != 0 },
                _ => {
                    return Err(invalid(format!(
                        "family f_t takes t and an optional omit_v5 flag, got {} parameter(s)",
                        params.len()
                    )))
                }
            },
            "f_one_ell" => {
                arity(1)?;
                Family::FOneEll(params[0])
            }
            "f_composite" => Family::FComposite(params.to_vec()),
            other => {
                return Err(ConstructionError::InvalidParams(format!("unknown family {other:?}")))
            }
        };
        Ok(family)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::Star(_) => "star",
            Family::Petersen => "petersen",
            Family::GN(_) => "g_n",
            Family::FT { .. } => "f_t",
            Family::FOneEll(_) => "f_one_ell",
            Family::FComposite(_) => "f_composite",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match self {
            Family::Path(n) | Family::Cycle(n) | Family::Complete(n) | Family::Star(n) => vec![*n],
            Family::CompleteBipartite(m, n) => vec![*m, *n],
            Family::Petersen => vec![],
            Family::GN(n) | Family::FOneEll(n) => vec![*n],
            Family::FT { t, omit_v5 } => {
                if *omit_v5 {
                    vec![*t, 1]
                } else {
                    vec![*t]
                }
            }
            Family::FComposite(r) => r.clone(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(|p| p.to_string()).collect();
        if params.is_empty() {
            f.write_str(self.name())
        } else {
            write!(f, "{}({})", self.name(), params.join(","))
        }
    }
}

/// A constructed graph together with its role names and a list of convex
/// subgraphs (attached 7-cycles and, for `G_n`/`F_t`, the five-cycles).
#[derive(Clone, Debug)]
pub struct Construction {
    pub family: Family,
    pub graph: Graph,
    pub names: BTreeMap<String, usize>,
    pub convex_cover: Vec<VertexSet>,
}

impl Construction {
    /// Index of a named vertex. Panics on unknown names.
    pub fn vertex(&self, name: &str) -> usize {
        *self
            .names
            .get(name)
            .unwrap_or_else(|| panic!("no vertex named {name:?} in {}", self.family))
    }

    pub fn set_of_names(&self, names: &[&str]) -> VertexSet {
        self.graph.set_of(names.iter().map(|n| self.vertex(n)))
    }
}

/// Incrementally assembled labelled graph.
#[derive(Default)]
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
    names: BTreeMap<String, usize>,
    cycles: Vec<Vec<usize>>,
}

impl Builder {
    fn add(&mut self, name: impl Into<String>) -> usize {
        let v = self.n;
        self.n += 1;
        self.names.insert(name.into(), v);
        v
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn cycle_through(&mut self, vs: &[usize]) {
        for i in 0..vs.len() {
            self.edge(vs[i], vs[(i + 1) % vs.len()]);
        }
    }

    /// Six fresh vertices closing a 7-cycle through `anchor`.
    fn seven_cycle(&mut self, anchor: usize, anchor_name: &str) {
        let mut ring = vec![anchor];
        for j in 1..=6 {
            ring.push(self.add(format!("c7[{anchor_name}].{j}")));
        }
        self.cycle_through(&ring);
        self.cycles.push(ring);
    }

    fn finish(self, family: Family) -> Result<Construction, ConstructionError> {
        let graph = build_graph(self.n, &self.edges)?;
        let convex_cover = self
            .cycles
            .iter()
            .map(|c| graph.set_of(c.iter().copied()))
            .collect();
        Ok(Construction {
            family,
            graph,
            names: self.names,
            convex_cover,
        })
    }
}

fn invalid(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::InvalidParams(msg.into())
}

pub fn construct(family: &Family) -> Result<Construction, ConstructionError> {
    let mut b = Builder::default();
    match *family {
        Family::Path(n) => {
            if n < 1 {
                return Err(invalid("path needs n >= 1"));
            }
            for i in 0..n {
                b.add(format!("p{i}"));
                if i > 0 {
                    b.edge(i - 1, i);
                }
            }
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(invalid("cycle needs n >= 3"));
            }
            let vs: Vec<usize> = (0..n).map(|i| b.add(format!("c{i}"))).collect();
            b.cycle_through(&vs);
        }
        Family::Complete(n) => {
            if n < 1 {
                return Err(invalid("complete graph needs n >= 1"));
            }
            for i in 0..n {
                b.add(format!("k{i}"));
                for j in 0..i {
                    b.edge(j, i);
                }
            }
        }
        Family::CompleteBipartite(m, n) => {
            if m < 1 || n < 1 {
                return Err(invalid("complete bipartite graph needs m, n >= 1"));
            }
            let a: Vec<usize> = (0..m).map(|i| b.add(format!("a{i}"))).collect();
            let bs: Vec<usize> = (0..n).map(|j| b.add(format!("b{j}"))).collect();
            for &x in &a {
                for &y in &bs {
                    b.edge(x, y);
                }
            }
        }
        Family::Star(l) => {
            if l < 1 {
                return Err(invalid("star needs l >= 1"));
            }
            let c = b.add("v0");
            for i in 1..=l {
                let leaf = b.add(format!("v{i}"));
                b.edge(c, leaf);
            }
        }
        Family::Petersen => {
            let u: Vec<usize> = (0..5).map(|i| b.add(format!("u{i}"))).collect();
            let v: Vec<usize> = (0..5).map(|i| b.add(format!("v{i}"))).collect();
            for i in 0..5 {
                b.edge(u[i], u[(i + 1) % 5]);
                b.edge(u[i], v[i]);
                b.edge(v[i], v[(i + 2) % 5]);
            }
        }
        Family::GN(n) => {
            if n < 2 {
                return Err(invalid("G_n needs n >= 2"));
            }
            let u = b.add("u");
            let v = b.add("v");
            b.edge(u, v);
            for i in 1..=n {
                let x = b.add(format!("x{i}"));
                let y = b.add(format!("y{i}"));
                let z = b.add(format!("z{i}"));
                b.edge(u, x);
                b.edge(x, y);
                b.edge(y, z);
                b.edge(z, v);
                b.cycles.push(vec![u, x, y, z, v]);
            }
        }
        Family::FT { t, omit_v5 } => {
            if t < 2 {
                return Err(invalid("F_t needs t >= 2"));
            }
            if omit_v5 && t != 2 {
                return Err(invalid("v5 may only be omitted from F_2"));
            }
            let v0 = b.add("v0");
            let v1 = b.add("v1");
            b.edge(v0, v1);
            let mut outside_y = vec![(v0, "v0".to_string())];
            let mut spokes = Vec::new();
            for i in 1..t {
                let v2 = b.add(format!("v2_{i}"));
                let v3 = b.add(format!("v3_{i}"));
                let v4 = b.add(format!("v4_{i}"));
                b.edge(v1, v2);
                b.edge(v2, v3);
                b.edge(v3, v4);
                b.edge(v4, v0);
                b.cycles.push(vec![v0, v1, v2, v3, v4]);
                spokes.push((v2, v3));
                outside_y.push((v3, format!("v3_{i}")));
                outside_y.push((v4, format!("v4_{i}")));
            }
            if !omit_v5 {
                let v5 = b.add("v5");
                for &(v2, v3) in &spokes {
                    b.edge(v5, v2);
                    b.edge(v5, v3);
                }
                outside_y.push((v5, "v5".to_string()));
            }
            outside_y.sort();
            for (anchor, name) in outside_y {
                b.seven_cycle(anchor, &name);
            }
        }
        Family::FOneEll(l) => {
            if l < 1 {
                return Err(invalid("F_(1,l) needs l >= 1"));
            }
            let v0 = b.add("v0");
            let leaves: Vec<usize> = (1..=l).map(|i| b.add(format!("v{i}"))).collect();
            for &leaf in &leaves {
                b.edge(v0, leaf);
            }
            let mut us = Vec::new();
            for i in 1..=l {
                for j in i + 1..=l {
                    let name = format!("u{i}_{j}");
                    let u = b.add(name.clone());
                    b.edge(u, leaves[i - 1]);
                    b.edge(u, leaves[j - 1]);
                    for &(w, _) in &us {
                        b.edge(w, u);
                    }
                    us.push((u, name));
                }
            }
            b.seven_cycle(v0, "v0");
            for (u, name) in us {
                b.seven_cycle(u, &name);
            }
        }
        Family::FComposite(ref r) => return composite(family, r),
    }
    b.finish(family.clone())
}

fn composite(family: &Family, r: &[usize]) -> Result<Construction, ConstructionError> {
    if r.first() != Some(&1) {
        return Err(invalid("spectrum must start with r_0 = 1"));
    }
    if r.len() > 1 && r.last() == Some(&0) {
        return Err(invalid("last spectrum entry r_k must be positive"));
    }
    let mut b = Builder::default();
    if r.len() == 1 {
        let vs: Vec<usize> = (0..7).map(|i| b.add(format!("c{i}"))).collect();
        b.cycle_through(&vs);
        b.cycles.push(vs);
        return b.finish(family.clone());
    }
    let mut parts = Vec::new();
    if r[1] >= 1 {
        parts.push(Family::FOneEll(r[1]));
    }
    for (i, &count) in r.iter().enumerate().skip(2) {
        for _ in 0..count {
            parts.push(Family::FT { t: i, omit_v5: false });
        }
    }
    let hub = b.add("v*");
    for (ci, part) in parts.iter().enumerate() {
        let c = construct(part)?;
        let v0 = c.vertex("v0");
        debug_assert_eq!(v0, 0);
        let mut map = vec![hub; c.graph.n()];
        let mut by_index: Vec<(&String, &usize)> = c.names.iter().collect();
        by_index.sort_by_key(|(_, &v)| v);
        for (name, &v) in by_index {
            if v != v0 {
                map[v] = b.add(format!("c{ci}.{name}"));
            }
        }
        for (u, v) in c.graph.edges() {
            b.edge(map[u], map[v]);
        }
        for cyc in &c.convex_cover {
            b.cycles.push(cyc.iter().map(|v| map[v]).collect());
        }
    }
    b.finish(family.clone())
}

/// Appends six fresh vertices forming a 7-cycle through `anchor`; existing
/// labels are unchanged. Panics if `anchor` is not a vertex of `g`.
pub fn attach_seven_cycle(g: &Graph, anchor: usize) -> Graph {
    assert!(anchor < g.n(), "anchor {anchor} out of range");
    let n = g.n();
    let mut edges = g.edges();
    let ring: Vec<usize> = std::iter::once(anchor).chain(n..n + 6).collect();
    for i in 0..7 {
        edges.push((ring[i], ring[(i + 1) % 7]));
    }
    build_graph(n + 6, &edges).expect("attaching a cycle keeps the graph simple and connected")
}

/// The designated witness set `Y_t` of `F_t` or `Y_{1,l}` of `F_{1,l}`.
pub fn y_set(c: &Construction) -> Result<VertexSet, ConstructionError> {
    match c.family {
        Family::FT { t, .. } => {
            let mut names = vec!["v1".to_string()];
            names.extend((1..t).map(|i| format!("v2_{i}")));
            Ok(c.graph.set_of(names.iter().map(|n| c.vertex(n))))
        }
        Family::FOneEll(l) => Ok(c.graph.set_of((1..=l).map(|i| c.vertex(&format!("v{i}"))))),
        ref other => Err(ConstructionError::UnsupportedFamily(other.name().to_string())),
    }
}
