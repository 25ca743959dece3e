//! Evidence on the strong gcd conjecture, checked with code written here.

use monores::conditions::{has_linear_quotient, strong_gcd_condition};
use monores::generate::{random_squarefree_ideal, seeded};
use monores::ideal::{ideal, minimal_elements};
use monores::orders::permutations;
use monores::scan::{open_problem_scan, Problem, ScanConfig};
use monores::{Caps, Monomial, MonomialIdeal};

/// Strong gcd condition for one order, straight from the definition.
fn strong_gcd_by_definition(seq: &[&Monomial]) -> bool {
    (0..seq.len()).all(|a| {
        (a + 1..seq.len()).all(|b| {
            let (u, v) = (seq[a], seq[b]);
            !u.is_coprime(v) || (a + 1..seq.len()).any(|c| c != b && seq[c].divides(&u.mul(v)))
        })
    })
}

fn strong_gcd_brute(i: &MonomialIdeal) -> bool {
    permutations(i.len())
        .iter()
        .any(|p| strong_gcd_by_definition(&p.iter().map(|&k| &i.gens()[k]).collect::<Vec<_>>()))
}

/// Every colon `(u_1, ..., u_{k-1}) : u_k` is generated by variables.
fn linear_quotients_by_definition(seq: &[Monomial]) -> bool {
    (1..seq.len()).all(|k| {
        let u = &seq[k];
        let quotients: Vec<Monomial> = seq[..k].iter().map(|g| g.div(&g.gcd(u))).collect();
        minimal_elements(quotients).iter().all(|q| q.degree() == 1)
    })
}

#[test]
fn five_cycle_square_has_linear_quotients_without_strong_gcd() {
    let caps = Caps::default();
    let c5 = ideal(5, &["x1*x2", "x2*x3", "x3*x4", "x4*x5", "x1*x5"]);
    assert!(!strong_gcd_brute(&c5));
    assert!(strong_gcd_condition(&c5, &caps).unwrap().is_none());
    // The ideal itself has no linear quotients, its square does.
    assert!(has_linear_quotient(&c5, &caps).unwrap().is_none());
    let sq = c5.power(2, caps.generators).unwrap();
    let w = has_linear_quotient(&sq, &caps).unwrap().expect("the square has linear quotients");
    assert!(linear_quotients_by_definition(&w.sequence));
    let mut gens = w.sequence.clone();
    gens.sort();
    assert_eq!(gens, sq.gens());
}

#[test]
fn linear_quotients_of_the_ideal_itself_give_strong_gcd() {
    let caps = Caps::default();
    let mut rng = seeded(31);
    let mut stream: Vec<MonomialIdeal> = Vec::new();
    while stream.len() < 60 {
        let i = random_squarefree_ideal(&mut rng, 5, 6, 2..=3);
        if i.len() <= 7 && has_linear_quotient(&i, &caps).unwrap().is_some() {
            stream.push(i);
        }
    }
    for i in &stream {
        assert!(strong_gcd_brute(i), "{i:?}");
    }
    let config = ScanConfig {
        s_range: 1..=1,
        ..ScanConfig::default()
    };
    let report = open_problem_scan(stream, Problem::Conjecture, 60, &config);
    assert_eq!(report.examined, 60);
    assert!(report.conjecture_counterexamples.is_empty());
}
