//! Production routines against slow, independent reimplementations.

use monores::betti::{has_linear_resolution, is_componentwise_linear, multigraded_betti};
use monores::clutter::{induced_matching_number, Graph};
use monores::conditions::{has_linear_quotient, linear_quotient_for_order};
use monores::generate::{all_graphs, random_ideal, random_squarefree_ideal, random_uniform_clutter, seeded};
use monores::{fixtures, Caps, Clutter, FieldSpec, MonomialIdeal};
use rand::Rng;

/// Chordal means no induced cycle of length at least four: look at every
/// vertex subset and ask whether it induces a cycle.
fn chordal_brute(g: &Graph) -> bool {
    let n = g.vertex_count();
    for mask in 0u32..1 << n {
        let vs: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        if vs.len() < 4 {
            continue;
        }
        let all_degree_two = vs
            .iter()
            .all(|&a| vs.iter().filter(|&&b| b != a && g.adjacent(a, b)).count() == 2);
        if !all_degree_two {
            continue;
        }
        // A 2-regular graph is a cycle exactly when it is connected.
        let mut seen = vec![vs[0]];
        let mut stack = vec![vs[0]];
        while let Some(a) = stack.pop() {
            for &b in &vs {
                if g.adjacent(a, b) && !seen.contains(&b) {
                    seen.push(b);
                    stack.push(b);
                }
            }
        }
        if seen.len() == vs.len() {
            return false;
        }
    }
    true
}

#[test]
fn chordality_matches_brute_force() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            assert_eq!(g.is_chordal(), chordal_brute(&g), "{:?}", g.edges());
        }
    }
}

fn induced_matching_brute(c: &Clutter) -> usize {
    let edges = c.edges();
    let mut best = 0;
    for mask in 0u32..1 << edges.len() {
        let chosen: Vec<&Vec<usize>> = (0..edges.len()).filter(|e| mask >> e & 1 == 1).map(|e| &edges[e]).collect();
        let mut union: Vec<usize> = chosen.iter().flat_map(|e| e.iter().copied()).collect();
        let total = union.len();
        union.sort_unstable();
        union.dedup();
        if union.len() != total {
            continue;
        }
        let inside = edges.iter().filter(|e| e.iter().all(|v| union.contains(v))).count();
        if inside == chosen.len() {
            best = best.max(chosen.len());
        }
    }
    best
}

#[test]
fn induced_matching_matches_brute_force() {
    let mut rng = seeded(11);
    let caps = Caps::default();
    for _ in 0..300 {
        let n = rng.gen_range(2..=9);
        let k = rng.gen_range(1..=3.min(n));
        let count = rng.gen_range(1..=12);
        let c = random_uniform_clutter(&mut rng, n, k, count);
        let m = induced_matching_number(&c, &caps).unwrap();
        assert_eq!(m.size, induced_matching_brute(&c), "{:?}", c.edges());
    }
    for n in 2..=6 {
        for g in all_graphs(n).into_iter().filter(|g| !g.edges().is_empty()).step_by(7) {
            let c = g.to_clutter();
            assert_eq!(induced_matching_number(&c, &caps).unwrap().size, induced_matching_brute(&c));
        }
    }
}

/// First off-strand entry of the full graded table, ordered by degree then
/// homological index.
fn table_witness(i: &MonomialIdeal, field: FieldSpec, caps: &Caps) -> Option<(usize, u32)> {
    let d = i.generating_degree()?;
    multigraded_betti(i, field, caps)
        .unwrap()
        .coarse()
        .into_iter()
        .filter(|&((k, j), v)| v > 0 && j != k as u32 + d)
        .map(|((k, j), _)| (j, k))
        .min()
        .map(|(j, k)| (k, j))
}

#[test]
fn koszul_linearity_matches_lattice_table() {
    let caps = Caps::default();
    let mut cases = vec![
        fixtures::triangle(),
        fixtures::two_disjoint_edges(),
        fixtures::sturmfels(),
        fixtures::sturmfels().power(2, caps.generators).unwrap(),
        fixtures::projective_plane(),
    ];
    let mut rng = seeded(5);
    for _ in 0..120 {
        let n = rng.gen_range(3..=6);
        let d = rng.gen_range(2..=3);
        cases.push(random_squarefree_ideal(&mut rng, n, 6, d..=d));
    }
    for _ in 0..40 {
        let i = random_squarefree_ideal(&mut rng, 5, 4, 2..=2);
        cases.push(i.power(2, caps.generators).unwrap());
    }
    for i in &cases {
        for field in [FieldSpec::GF2, FieldSpec::Rational] {
            let fast = has_linear_resolution(i, field, &caps).unwrap();
            let slow = table_witness(i, field, &caps);
            assert_eq!(fast.linear, slow.is_none(), "{i:?}");
            assert_eq!(fast.witness, slow, "{i:?}");
        }
    }
}

#[test]
fn linear_quotients_give_componentwise_linear() {
    let caps = Caps::default();
    let mut rng = seeded(9);
    let fields = [FieldSpec::GF2, FieldSpec::Prime(3), FieldSpec::Rational];
    let mut with_quotients = 0;
    for round in 0..150 {
        let i = if round % 2 == 0 {
            random_ideal(&mut rng, 4, 5, 2)
        } else {
            random_squarefree_ideal(&mut rng, 5, 5, 2..=3)
        };
        let Some(w) = has_linear_quotient(&i, &caps).unwrap() else {
            continue;
        };
        with_quotients += 1;
        assert!(linear_quotient_for_order(&i, &w.sequence).unwrap().holds);
        for field in fields {
            let report = is_componentwise_linear(&i, field, &caps, true).unwrap();
            assert!(report.componentwise_linear, "{i:?} over {field}");
            if i.flags().min_degree == i.flags().max_degree {
                assert!(has_linear_resolution(&i, field, &caps).unwrap().linear, "{i:?}");
            }
        }
    }
    assert!(with_quotients >= 20, "only {with_quotients} instances had linear quotients");
}
