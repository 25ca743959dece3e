//! Deterministic instance streams: exhaustive small graphs and seeded random
//! ideals and clutters.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clutter::{Clutter, Graph};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::orders::permutations;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// Every labelled graph on `n` vertices, by edge-subset bit pattern.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let p = pairs(n);
    assert!(p.len() < 32, "too many vertices for exhaustive enumeration");
    (0u32..1 << p.len())
        .map(|bits| {
            let edges: Vec<(usize, usize)> = (0..p.len()).filter(|&i| bits >> i & 1 == 1).map(|i| p[i]).collect();
            Graph::new(n, &edges).expect("valid edges")
        })
        .collect()
}

/// One graph per isomorphism class on `n` vertices; the representative is
/// the lexicographically smallest edge list over all relabellings.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    let perms = permutations(n);
    let mut classes: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    for g in all_graphs(n) {
        let edges = g.edges();
        let canon = perms
            .iter()
            .map(|p| {
                let mut e: Vec<(usize, usize)> = edges
                    .iter()
                    .map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b])))
                    .collect();
                e.sort_unstable();
                e
            })
            .min()
            .unwrap_or_default();
        classes.insert(canon);
    }
    classes
        .into_iter()
        .map(|e| Graph::new(n, &e).expect("valid edges"))
        .collect()
}

/// A random ideal in `n` variables with between 1 and `max_gens` generators
/// (before minimalisation) and exponents at most `max_exp`.
pub fn random_ideal(rng: &mut impl Rng, n: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    loop {
        let count = rng.gen_range(1..=max_gens);
        let gens: Vec<Monomial> = (0..count)
            .map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect()))
            .filter(|m| !m.is_one())
            .collect();
        if let Ok(ideal) = MonomialIdeal::minimalize(n, gens) {
            if !ideal.is_zero() {
                return ideal;
            }
        }
    }
}

/// A random square-free ideal without variables among its generators, with
/// generator degrees in `degrees`.
pub fn random_squarefree_ideal(
    rng: &mut impl Rng,
    n: usize,
    max_gens: usize,
    degrees: std::ops::RangeInclusive<usize>,
) -> MonomialIdeal {
    assert!(*degrees.start() >= 2 && *degrees.end() <= n);
    loop {
        let count = rng.gen_range(1..=max_gens);
        let gens: Vec<Monomial> = (0..count)
            .map(|_| {
                let d = rng.gen_range(degrees.clone());
                Monomial::squarefree(n, &sample(rng, n, d).into_vec())
            })
            .collect();
        let ideal = MonomialIdeal::minimalize(n, gens).expect("no unit generator");
        if !ideal.is_zero() {
            return ideal;
        }
    }
}

/// A random `k`-uniform clutter on `n` vertices with `edges` distinct
/// edges (fewer if there are not that many `k`-subsets).
pub fn random_uniform_clutter(rng: &mut impl Rng, n: usize, k: usize, edges: usize) -> Clutter {
    assert!(k >= 1 && k <= n);
    let total = binomial_usize(n, k);
    let want = edges.min(total);
    let mut chosen: BTreeSet<Vec<usize>> = BTreeSet::new();
    while chosen.len() < want {
        let mut e = sample(rng, n, k).into_vec();
        e.sort_unstable();
        chosen.insert(e);
    }
    // Equal-size distinct sets never contain each other.
    Clutter::new(n, chosen.into_iter().collect()).expect("uniform edges form a clutter")
}

/// The default scan stream: edge ideals of every graph with at least one
/// edge on 2..=5 vertices (one per isomorphism class), followed by an endless
/// seeded stream of square-free variable-free ideals in 4..=6 variables.
pub fn scan_instances(seed: u64) -> impl Iterator<Item = MonomialIdeal> {
    let graphs = (2..=5).flat_map(|n| {
        graphs_up_to_isomorphism(n)
            .into_iter()
            .filter(|g| !g.edges().is_empty())
            .map(|g| g.edge_ideal().expect("graph has edges"))
    });
    let mut rng = seeded(seed);
    let random = std::iter::repeat_with(move || {
        let n = rng.gen_range(4..=6);
        random_squarefree_ideal(&mut rng, n, 5, 2..=3)
    });
    graphs.chain(random)
}

fn binomial_usize(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}
