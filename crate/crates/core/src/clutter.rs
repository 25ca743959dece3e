//! Clutters, simple graphs, edge ideals and induced matchings, plus the
//! Betti and regularity lower bounds for powers of uniform clutters.
//!
//! Vertices are 0-based here; documents and displays use 1-based labels.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::betti::{betti_in_degree, regularity};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A vertex set `0..vertex_count` and an antichain of non-empty edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Clutter {
    vertex_count: usize,
    /// Each edge sorted ascending; edges sorted lexicographically.
    edges: Vec<Vec<usize>>,
}

impl Clutter {
    pub fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut canon: BTreeSet<Vec<usize>> = BTreeSet::new();
        for mut e in edges {
            e.sort_unstable();
            e.dedup();
            if e.is_empty() {
                return Err(Error::Domain("clutter edges must be non-empty".into()));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::Domain(format!(
                    "vertex {} outside 1..={vertex_count}",
                    v + 1
                )));
            }
            canon.insert(e);
        }
        let edges: Vec<Vec<usize>> = canon.into_iter().collect();
        for a in &edges {
            for b in &edges {
                if a != b && is_subset(a, b) {
                    return Err(Error::Domain(format!(
                        "edge {} is contained in edge {}",
                        label(a),
                        label(b)
                    )));
                }
            }
        }
        Ok(Clutter {
            vertex_count,
            edges,
        })
    }

    /// Same as [`Clutter::new`] with 1-based vertex labels.
    pub fn from_one_based(vertex_count: usize, edges: &[Vec<usize>]) -> Result<Self> {
        let shifted = edges
            .iter()
            .map(|e| {
                e.iter()
                    .map(|&v| {
                        v.checked_sub(1)
                            .ok_or_else(|| Error::Domain("vertex labels start at 1".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Clutter::new(vertex_count, shifted)
    }

    /// `t` pairwise disjoint edges of size `k` on `t·k` vertices.
    pub fn disjoint_edges(t: usize, k: usize) -> Self {
        let edges = (0..t).map(|i| (i * k..(i + 1) * k).collect()).collect();
        Clutter::new(t * k, edges).expect("disjoint edges form a clutter")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Edges with 1-based labels.
    pub fn edges_one_based(&self) -> Vec<Vec<usize>> {
        self.edges
            .iter()
            .map(|e| e.iter().map(|v| v + 1).collect())
            .collect()
    }

    /// `Some(k)` when every edge has exactly `k` vertices.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    pub fn edge_ideal(&self) -> Result<MonomialIdeal> {
        if self.edges.is_empty() {
            return Err(Error::Precondition("the clutter has no edges".into()));
        }
        let mut gens: Vec<Monomial> = self
            .edges
            .iter()
            .map(|e| Monomial::squarefree(self.vertex_count, e))
            .collect();
        gens.sort();
        Ok(MonomialIdeal::from_minimal_unchecked(self.vertex_count, gens))
    }

    /// The clutter whose edges are the supports of `G(I)`.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::Domain("the ideal is not square-free".into()));
        }
        Clutter::new(ideal.nvars(), ideal.gens().iter().map(Monomial::support).collect())
    }

    fn edge_masks(&self) -> Result<Vec<u128>> {
        if self.vertex_count > 128 {
            return Err(Error::Domain(
                "induced matchings are limited to 128 vertices".into(),
            ));
        }
        Ok(self
            .edges
            .iter()
            .map(|e| e.iter().fold(0u128, |m, &v| m | 1 << v))
            .collect())
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

fn label(e: &[usize]) -> String {
    let vs: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", vs.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedMatching {
    pub size: usize,
    /// Indices into [`Clutter::edges`].
    pub edges: Vec<usize>,
}

/// Is `chosen` (edge masks) pairwise disjoint with no other edge inside its
/// union?
pub fn is_induced_matching(masks: &[u128], chosen: &[usize]) -> bool {
    let mut union = 0u128;
    for &e in chosen {
        if union & masks[e] != 0 {
            return false;
        }
        union |= masks[e];
    }
    masks
        .iter()
        .enumerate()
        .all(|(f, &m)| chosen.contains(&f) || m & !union != 0)
}

/// Exact maximum induced matching by branch and bound.
///
/// Adding an edge is rejected if it meets the current union, then if some
/// other edge falls inside the enlarged union. Such an edge meets a chosen
/// edge, so it can never be repaired later.
pub fn induced_matching_number(clutter: &Clutter, caps: &Caps) -> Result<InducedMatching> {
    let masks = clutter.edge_masks()?;
    if masks.len() > caps.matching_edges {
        return Err(Error::resource("matching-edges", caps.matching_edges, masks.len()));
    }
    struct Search<'a> {
        masks: &'a [u128],
        best: Vec<usize>,
        current: Vec<usize>,
    }
    impl Search<'_> {
        fn go(&mut self, next: usize, union: u128) {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            let open = (next..self.masks.len())
                .filter(|&e| self.masks[e] & union == 0)
                .count();
            if self.current.len() + open <= self.best.len() {
                return;
            }
            for e in next..self.masks.len() {
                let m = self.masks[e];
                if m & union != 0 {
                    continue;
                }
                let grown = union | m;
                let clean = self.masks.iter().enumerate().all(|(f, &fm)| {
                    f == e || self.current.contains(&f) || fm & !grown != 0
                });
                if !clean {
                    continue;
                }
                self.current.push(e);
                self.go(e + 1, grown);
                self.current.pop();
            }
        }
    }
    let mut search = Search {
        masks: &masks,
        best: Vec::new(),
        current: Vec::new(),
    };
    search.go(0, 0);
    debug_assert!(is_induced_matching(&masks, &search.best));
    Ok(InducedMatching {
        size: search.best.len(),
        edges: search.best,
    })
}

/// A finite simple graph on `0..vertex_count`, at most 64 vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertex_count > 64 {
            return Err(Error::Domain("graphs are limited to 64 vertices".into()));
        }
        let mut adj = vec![0u64; vertex_count];
        for &(a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::Domain(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::Domain(format!("loop at vertex {}", a + 1)));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Graph {
            n: vertex_count,
            adj,
        })
    }

    pub fn from_clutter(clutter: &Clutter) -> Result<Self> {
        if clutter.edges().iter().any(|e| e.len() != 2) {
            return Err(Error::Domain("a graph needs 2-element edges".into()));
        }
        let edges: Vec<(usize, usize)> = clutter.edges().iter().map(|e| (e[0], e[1])).collect();
        Graph::new(clutter.vertex_count(), &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| (a + 1..self.n).filter(move |&b| self.adjacent(a, b)).map(move |b| (a, b)))
            .collect()
    }

    pub fn to_clutter(&self) -> Clutter {
        let edges = self.edges().into_iter().map(|(a, b)| vec![a, b]).collect();
        Clutter::new(self.n, edges).expect("a simple graph is a clutter")
    }

    pub fn edge_ideal(&self) -> Result<MonomialIdeal> {
        self.to_clutter().edge_ideal()
    }

    pub fn complement(&self) -> Graph {
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Four vertices inducing a 4-cycle, listed around the cycle.
    pub fn induced_4cycle(&self) -> Option<[usize; 4]> {
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let q = [a, b, c, d];
                        let set = q.iter().fold(0u64, |m, &v| m | 1 << v);
                        if !q.iter().all(|&v| (self.adj[v] & set).count_ones() == 2) {
                            continue;
                        }
                        // 2-regular on four vertices is a 4-cycle.
                        let next = |prev: usize, cur: usize| {
                            q.into_iter().find(|&w| w != prev && self.adjacent(cur, w)).unwrap()
                        };
                        let second = q.into_iter().find(|&w| self.adjacent(a, w)).unwrap();
                        let third = next(a, second);
                        let fourth = next(second, third);
                        return Some([a, second, third, fourth]);
                    }
                }
            }
        }
        None
    }

    pub fn has_induced_4cycle(&self) -> bool {
        self.induced_4cycle().is_some()
    }

    /// Maximum cardinality search followed by a perfect elimination check.
    pub fn is_chordal(&self) -> bool {
        let n = self.n;
        // MCS numbers vertices from n-1 down to 0; `order` lists them in
        // elimination order (reverse of visit order).
        let mut weight = vec![0usize; n];
        let mut visited = 0u64;
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| visited >> v & 1 == 0)
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .unwrap();
            visited |= 1 << v;
            visit.push(v);
            for w in 0..n {
                if visited >> w & 1 == 0 && self.adjacent(v, w) {
                    weight[w] += 1;
                }
            }
        }
        let order: Vec<usize> = visit.into_iter().rev().collect();
        let mut position = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        // For each v, its later neighbours must form a clique; it suffices to
        // check that the earliest of them is adjacent to all the others.
        order.iter().all(|&v| {
            let later: Vec<usize> = (0..n)
                .filter(|&w| self.adjacent(v, w) && position[w] > position[v])
                .collect();
            match later.iter().min_by_key(|&&w| position[w]) {
                None => true,
                Some(&u) => later.iter().all(|&w| w == u || self.adjacent(u, w)),
            }
        })
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub i: usize,
    pub degree: u32,
    pub bound: u64,
    pub actual: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiBoundReport {
    pub k: usize,
    pub s: u32,
    pub t: usize,
    /// An induced matching of size `t`, 1-based edges.
    pub matching: Vec<Vec<usize>>,
    pub field: FieldSpec,
    pub first: BoundCheck,
    pub second: BoundCheck,
    pub holds: bool,
}

fn uniform_setup(clutter: &Clutter, s: u32, caps: &Caps) -> Result<(usize, InducedMatching, MonomialIdeal)> {
    if s < 2 {
        return Err(Error::Precondition("the power must be at least 2".into()));
    }
    let k = clutter
        .uniformity()
        .ok_or_else(|| Error::Precondition("the clutter must be uniform and non-empty".into()))?;
    let matching = induced_matching_number(clutter, caps)?;
    let power = clutter.edge_ideal()?.power(s, caps.generators)?;
    Ok((k, matching, power))
}

/// `β_{1,ks+k}(I^s) ≥ 2·C(t,2)` and `β_{2,ks+2k}(I^s) ≥ 3·C(t,3)` for a
/// `k`-uniform clutter with induced matching number `t`.
pub fn verify_theorem_betti_bounds(
    clutter: &Clutter,
    s: u32,
    field: FieldSpec,
    caps: &Caps,
) -> Result<BettiBoundReport> {
    let (k, matching, power) = uniform_setup(clutter, s, caps)?;
    let t = matching.size;
    let ku = k as u32;
    let check = |i: usize, degree: u32, bound: u64| -> Result<BoundCheck> {
        let actual = betti_in_degree(&power, field, degree, caps)?
            .get(&i)
            .copied()
            .unwrap_or(0);
        Ok(BoundCheck {
            i,
            degree,
            bound,
            actual,
            holds: actual >= bound,
        })
    };
    let first = check(1, ku * s + ku, 2 * binomial(t, 2))?;
    let second = check(2, ku * s + 2 * ku, 3 * binomial(t, 3))?;
    Ok(BettiBoundReport {
        k,
        s,
        t,
        matching: matching
            .edges
            .iter()
            .map(|&e| clutter.edges()[e].iter().map(|v| v + 1).collect())
            .collect(),
        field,
        holds: first.holds && second.holds,
        first,
        second,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub k: usize,
    pub s: u32,
    pub t: usize,
    pub field: FieldSpec,
    /// `None` when `t < 2`.
    pub bound: Option<i64>,
    pub actual: i64,
    /// `None` when no bound applies.
    pub holds: Option<bool>,
}

/// `reg(I^s) ≥ ks + k − 1` when `t = 2` and `reg(I^s) ≥ ks + 2k − 2` when
/// `t ≥ 3`; nothing is claimed for `t ≤ 1`.
pub fn verify_regularity_corollary(
    clutter: &Clutter,
    s: u32,
    field: FieldSpec,
    caps: &Caps,
) -> Result<RegularityReport> {
    let (k, matching, power) = uniform_setup(clutter, s, caps)?;
    let t = matching.size;
    let (ki, si) = (k as i64, i64::from(s));
    let bound = match t {
        0 | 1 => None,
        2 => Some(ki * si + ki - 1),
        _ => Some(ki * si + 2 * ki - 2),
    };
    let actual = regularity(&power, field, caps)?;
    Ok(RegularityReport {
        k,
        s,
        t,
        field,
        bound,
        actual,
        holds: bound.map(|b| actual >= b),
    })
}
