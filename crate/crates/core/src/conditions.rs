//! Combinatorial conditions on generating sets: the gcd and strong gcd
//! conditions, the support condition forced by componentwise linear powers,
//! linear quotients (for a given order, any order, or orders induced by a
//! monomial order) and the Golod certificates built from them.
//!
//! A Golod certificate is only ever positive evidence. Nothing here decides
//! that a ring is *not* Golod.

use std::collections::HashSet;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::orders::{orders_for, MonomialOrder, OrderSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub holds: bool,
    /// A coprime pair with no admissible third generator.
    pub failing_pair: Option<(Monomial, Monomial)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Ascending,
    Descending,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OrderKind {
    Arbitrary,
    MonomialOrder {
        order: MonomialOrder,
        direction: Direction,
    },
    /// The reversed order on `G(I)` read off from a monomial order under
    /// which `I^s` has linear quotients.
    Derived {
        order: MonomialOrder,
        direction: Direction,
        s: u32,
    },
}

/// A linear order on `G(I)`, listed from smallest to largest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderWitness {
    pub sequence: Vec<Monomial>,
    pub kind: OrderKind,
}

fn pair_condition(ideal: &MonomialIdeal, admissible: impl Fn(&Monomial, &Monomial, &Monomial) -> bool) -> PairCheck {
    let g = ideal.gens();
    for a in 0..g.len() {
        for b in a + 1..g.len() {
            if !g[a].is_coprime(&g[b]) {
                continue;
            }
            let ok = (0..g.len()).any(|c| c != a && c != b && admissible(&g[c], &g[a], &g[b]));
            if !ok {
                return PairCheck {
                    holds: false,
                    failing_pair: Some((g[a].clone(), g[b].clone())),
                };
            }
        }
    }
    PairCheck {
        holds: true,
        failing_pair: None,
    }
}

fn divides_product(w: &Monomial, u: &Monomial, v: &Monomial) -> bool {
    // For coprime u, v: lcm(u, v) = uv.
    w.divides(&u.lcm(v))
}

fn support_within(w: &Monomial, u: &Monomial, v: &Monomial) -> bool {
    w.exps()
        .iter()
        .zip(u.exps().iter().zip(v.exps()))
        .all(|(&e, (&a, &b))| e == 0 || a > 0 || b > 0)
}

/// For every coprime `u, v ∈ G(I)` some other generator divides `uv`.
pub fn gcd_condition(ideal: &MonomialIdeal) -> PairCheck {
    pair_condition(ideal, divides_product)
}

/// For every coprime `u, v ∈ G(I)` some other generator has support inside
/// `supp(u) ∪ supp(v)`. Necessary for some power of a variable-free ideal to
/// be componentwise linear.
pub fn theorem_main_condition(ideal: &MonomialIdeal) -> PairCheck {
    let check = pair_condition(ideal, support_within);
    if ideal.is_squarefree() {
        assert_eq!(
            check.holds,
            gcd_condition(ideal).holds,
            "support and gcd conditions must agree on square-free ideals"
        );
    }
    check
}

/// Does `sequence` (smallest first) witness the strong gcd condition: for
/// coprime `u ≺ v` there is `w ≠ u, v` with `u ≺ w` and `w | uv`?
pub fn is_strong_gcd_order(sequence: &[Monomial]) -> bool {
    ordered_pair_condition(sequence, divides_product)
}

/// The support variant: `supp(w) ⊆ supp(u) ∪ supp(v)` instead of `w | uv`.
pub fn is_support_order(sequence: &[Monomial]) -> bool {
    ordered_pair_condition(sequence, support_within)
}

fn ordered_pair_condition(seq: &[Monomial], admissible: impl Fn(&Monomial, &Monomial, &Monomial) -> bool) -> bool {
    (0..seq.len()).all(|p| {
        (p + 1..seq.len()).all(|q| {
            !seq[p].is_coprime(&seq[q])
                || (p + 1..seq.len()).any(|r| r != q && admissible(&seq[r], &seq[p], &seq[q]))
        })
    })
}

/// Searches for an order witnessing the strong gcd condition.
///
/// Whether a generator may be placed first depends only on the set of
/// generators placed after it, so dead suffix sets are memoised.
pub fn strong_gcd_condition(ideal: &MonomialIdeal, caps: &Caps) -> Result<Option<OrderWitness>> {
    let g = ideal.gens();
    let d = g.len();
    if d > caps.strong_gcd_generators.min(64) {
        return Err(Error::resource("strong-gcd-generators", caps.strong_gcd_generators, d));
    }
    // helpers[u][v]: mask of w ∉ {u, v} with w | uv, for coprime u, v.
    let mut helpers = vec![vec![None::<u64>; d]; d];
    for u in 0..d {
        for v in 0..d {
            if u != v && g[u].is_coprime(&g[v]) {
                let mask = (0..d)
                    .filter(|&w| w != u && w != v && divides_product(&g[w], &g[u], &g[v]))
                    .fold(0u64, |m, w| m | 1 << w);
                helpers[u][v] = Some(mask);
            }
        }
    }
    let placeable = |u: usize, rest: u64| -> bool {
        (0..d).filter(|&v| rest >> v & 1 == 1).all(|v| match helpers[u][v] {
            None => true,
            Some(mask) => mask & rest & !(1 << v) != 0,
        })
    };
    let full: u64 = if d == 64 { u64::MAX } else { (1u64 << d) - 1 };
    let mut dead: HashSet<u64> = HashSet::new();
    let mut order = Vec::with_capacity(d);
    let mut nodes = 0usize;
    fn search(
        remaining: u64,
        d: usize,
        placeable: &dyn Fn(usize, u64) -> bool,
        dead: &mut HashSet<u64>,
        order: &mut Vec<usize>,
        nodes: &mut usize,
        budget: usize,
    ) -> Result<bool> {
        if remaining == 0 {
            return Ok(true);
        }
        if dead.contains(&remaining) {
            return Ok(false);
        }
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::resource("search-nodes", budget, *nodes));
        }
        for u in (0..d).filter(|&u| remaining >> u & 1 == 1) {
            let rest = remaining & !(1 << u);
            if placeable(u, rest) {
                order.push(u);
                if search(rest, d, placeable, dead, order, nodes, budget)? {
                    return Ok(true);
                }
                order.pop();
            }
        }
        dead.insert(remaining);
        Ok(false)
    }
    if !search(full, d, &placeable, &mut dead, &mut order, &mut nodes, caps.search_nodes)? {
        return Ok(None);
    }
    let sequence: Vec<Monomial> = order.iter().map(|&i| g[i].clone()).collect();
    debug_assert!(is_strong_gcd_order(&sequence));
    assert!(
        gcd_condition(ideal).holds,
        "strong gcd condition without the gcd condition"
    );
    Ok(Some(OrderWitness {
        sequence,
        kind: OrderKind::Arbitrary,
    }))
}

/// `(prefix) : u` is generated by variables.
fn colon_is_linear(prefix: &[&Monomial], u: &Monomial) -> bool {
    let n = u.nvars();
    let mut linear_vars = vec![false; n];
    let quotients: Vec<Monomial> = prefix.iter().map(|g| g.quotient_by_gcd(u)).collect();
    for q in &quotients {
        match q.degree() {
            0 => return false,
            1 => linear_vars[q.support()[0]] = true,
            _ => {}
        }
    }
    quotients
        .iter()
        .all(|q| q.exps().iter().zip(&linear_vars).any(|(&e, &lin)| e > 0 && lin))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearQuotientCheck {
    pub holds: bool,
    /// 0-based position of the first generator whose colon is not linear.
    pub first_failure: Option<usize>,
}

fn check_is_permutation(ideal: &MonomialIdeal, sequence: &[Monomial]) -> Result<()> {
    let mut sorted = sequence.to_vec();
    sorted.sort();
    if sorted != ideal.gens() {
        return Err(Error::InvalidOrder(
            "sequence is not a permutation of the minimal generators".into(),
        ));
    }
    Ok(())
}

/// Tests `(u_1, …, u_{i-1}) : u_i` for every `i >= 2`.
pub fn linear_quotient_for_order(ideal: &MonomialIdeal, sequence: &[Monomial]) -> Result<LinearQuotientCheck> {
    check_is_permutation(ideal, sequence)?;
    let mut prefix: Vec<&Monomial> = Vec::with_capacity(sequence.len());
    for (i, u) in sequence.iter().enumerate() {
        if i > 0 && !colon_is_linear(&prefix, u) {
            return Ok(LinearQuotientCheck {
                holds: false,
                first_failure: Some(i),
            });
        }
        prefix.push(u);
    }
    Ok(LinearQuotientCheck {
        holds: true,
        first_failure: None,
    })
}

/// Searches all orders of `G(I)` for linear quotients. A prefix is only
/// extended by generators whose colon against it is linear; the colon only
/// depends on the set of placed generators, so sets that cannot be completed
/// are memoised.
pub fn has_linear_quotient(ideal: &MonomialIdeal, caps: &Caps) -> Result<Option<OrderWitness>> {
    let mut g = ideal.gens().to_vec();
    let d = g.len();
    if d > caps.linear_quotient_generators.min(64) {
        return Err(Error::resource(
            "linear-quotient-generators",
            caps.linear_quotient_generators,
            d,
        ));
    }
    if d == 0 {
        return Ok(None);
    }
    g.sort_by(|a, b| a.graded_cmp(b));
    let full: u64 = if d == 64 { u64::MAX } else { (1u64 << d) - 1 };

    struct Search<'a> {
        g: &'a [Monomial],
        full: u64,
        dead: HashSet<u64>,
        order: Vec<usize>,
        nodes: usize,
        budget: usize,
    }

    impl Search<'_> {
        fn run(&mut self, placed: u64) -> Result<bool> {
            if placed == self.full {
                return Ok(true);
            }
            if self.dead.contains(&placed) {
                return Ok(false);
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::resource("search-nodes", self.budget, self.nodes));
            }
            let prefix: Vec<&Monomial> = self.order.iter().map(|&i| &self.g[i]).collect();
            let candidates: Vec<usize> = (0..self.g.len())
                .filter(|&u| placed >> u & 1 == 0)
                .filter(|&u| prefix.is_empty() || colon_is_linear(&prefix, &self.g[u]))
                .collect();
            for u in candidates {
                self.order.push(u);
                if self.run(placed | 1 << u)? {
                    return Ok(true);
                }
                self.order.pop();
            }
            self.dead.insert(placed);
            Ok(false)
        }
    }

    let mut search = Search {
        g: &g,
        full,
        dead: HashSet::new(),
        order: Vec::with_capacity(d),
        nodes: 0,
        budget: caps.search_nodes,
    };
    if !search.run(0)? {
        return Ok(None);
    }
    Ok(Some(OrderWitness {
        sequence: search.order.iter().map(|&i| g[i].clone()).collect(),
        kind: OrderKind::Arbitrary,
    }))
}

/// Tries every order from `spec`, sorting `G(I)` ascending and descending,
/// and returns the first sequence with linear quotients.
pub fn monomial_order_linear_quotient(
    ideal: &MonomialIdeal,
    spec: &OrderSpec,
    caps: &Caps,
) -> Result<Option<OrderWitness>> {
    let mut seen: HashSet<Vec<Monomial>> = HashSet::new();
    for order in orders_for(spec, ideal.nvars(), caps.order_variables)? {
        let ascending = order.sort(ideal.gens())?;
        for direction in [Direction::Ascending, Direction::Descending] {
            let mut seq = ascending.clone();
            if direction == Direction::Descending {
                seq.reverse();
            }
            if !seen.insert(seq.clone()) {
                continue;
            }
            if linear_quotient_for_order(ideal, &seq)?.holds {
                return Ok(Some(OrderWitness {
                    sequence: seq,
                    kind: OrderKind::MonomialOrder { order, direction },
                }));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedOrder {
    pub s: u32,
    /// Linear-quotient sequence of `G(I^s)` under the monomial order.
    pub power_witness: OrderWitness,
    /// The reversed order on `G(I)`.
    pub derived: OrderWitness,
    /// The derived order satisfies the support version of the strong gcd
    /// condition.
    pub verified: bool,
    pub anomaly: Option<String>,
}

/// If `I^s` has linear quotients with respect to a monomial order `<`, order
/// `G(I)` by the reverse of `<` and check the support version of the strong
/// gcd condition on it. A failed check is reported as an anomaly.
pub fn prop_main_derived_order(
    ideal: &MonomialIdeal,
    s: u32,
    spec: &OrderSpec,
    caps: &Caps,
) -> Result<Option<DerivedOrder>> {
    if ideal.flags().contains_variable {
        return Err(Error::Precondition("the ideal must contain no variable".into()));
    }
    let power = ideal.power(s, caps.generators)?;
    let Some(power_witness) = monomial_order_linear_quotient(&power, spec, caps)? else {
        return Ok(None);
    };
    let OrderKind::MonomialOrder { order, direction } = &power_witness.kind else {
        unreachable!("monomial order search returns monomial-order witnesses");
    };
    // Ascending in the effective order: `<` itself, or its reverse.
    let mut sequence = order.sort(ideal.gens())?;
    if *direction == Direction::Ascending {
        sequence.reverse();
    }
    let verified = is_support_order(&sequence);
    let anomaly = (!verified).then(|| {
        format!("derived order {order} ({direction:?}) on G(I) fails the support condition")
    });
    Ok(Some(DerivedOrder {
        s,
        derived: OrderWitness {
            sequence,
            kind: OrderKind::Derived {
                order: order.clone(),
                direction: *direction,
                s,
            },
        },
        power_witness,
        verified,
        anomaly,
    }))
}

/// What licenses a step of a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum License {
    /// Checked directly by this crate.
    Computation,
    /// Linear quotients of `I^s` under a monomial order give an order on
    /// `G(I)` satisfying the support condition (variable-free `I`).
    PowerQuotientsGiveSupportOrder,
    /// On square-free ideals the support condition is the divisibility one.
    SquarefreeSupportIsStrongGcd,
    /// Strong gcd condition implies Golod (Backelin–Jöllenbeck).
    StrongGcdImpliesGolod,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateStep {
    pub claim: String,
    pub license: License,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GolodCertificate {
    pub subject: MonomialIdeal,
    pub s: Option<u32>,
    pub witness: OrderWitness,
    pub chain: Vec<CertificateStep>,
}

/// Builds a certificate that `S/I` is Golod, or `None` when no sufficient
/// condition could be established. Requires `I` square-free, non-zero and
/// free of variables.
pub fn golod_certificate(
    ideal: &MonomialIdeal,
    s_range: RangeInclusive<u32>,
    spec: &OrderSpec,
    caps: &Caps,
) -> Result<Option<GolodCertificate>> {
    let flags = ideal.flags();
    if ideal.is_zero() || !flags.is_squarefree || flags.contains_variable {
        return Err(Error::Precondition(
            "Golod certificates need a non-zero square-free ideal containing no variable".into(),
        ));
    }
    for s in s_range {
        let Some(derived) = prop_main_derived_order(ideal, s, spec, caps)? else {
            continue;
        };
        if !derived.verified {
            continue;
        }
        let OrderKind::MonomialOrder { order, direction } = &derived.power_witness.kind else {
            unreachable!();
        };
        assert!(is_strong_gcd_order(&derived.derived.sequence));
        let chain = vec![
            CertificateStep {
                claim: format!(
                    "I^{s} has linear quotients along {order} ({direction:?})"
                ),
                license: License::Computation,
            },
            CertificateStep {
                claim: "the reversed order on G(I) satisfies the support condition".into(),
                license: License::PowerQuotientsGiveSupportOrder,
            },
            CertificateStep {
                claim: "I satisfies the strong gcd condition".into(),
                license: License::SquarefreeSupportIsStrongGcd,
            },
            CertificateStep {
                claim: "S/I is Golod".into(),
                license: License::StrongGcdImpliesGolod,
            },
        ];
        return Ok(Some(GolodCertificate {
            subject: ideal.clone(),
            s: Some(s),
            witness: derived.derived,
            chain,
        }));
    }
    if let Some(witness) = strong_gcd_condition(ideal, caps)? {
        return Ok(Some(GolodCertificate {
            subject: ideal.clone(),
            s: None,
            witness,
            chain: vec![
                CertificateStep {
                    claim: "I satisfies the strong gcd condition".into(),
                    license: License::Computation,
                },
                CertificateStep {
                    claim: "S/I is Golod".into(),
                    license: License::StrongGcdImpliesGolod,
                },
            ],
        }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ideal;
    use crate::monomial::mono;

    fn caps() -> Caps {
        Caps::default()
    }

    fn tri() -> MonomialIdeal {
        ideal(3, &["x1*x2", "x1*x3", "x2*x3"])
    }

    #[test]
    fn gcd_examples() {
        let two = ideal(4, &["x1*x2", "x3*x4"]);
        let c = gcd_condition(&two);
        assert!(!c.holds);
        assert_eq!(c.failing_pair, Some((mono(4, "x3*x4"), mono(4, "x1*x2"))));
        assert!(gcd_condition(&ideal(4, &["x1*x2", "x3*x4", "x1*x3"])).holds);
        assert!(gcd_condition(&tri()).holds);
    }

    #[test]
    fn support_examples() {
        assert!(theorem_main_condition(&ideal(4, &["x1^2*x2", "x3^2*x4", "x1*x3^3"])).holds);
        assert!(!theorem_main_condition(&ideal(4, &["x1*x2", "x3*x4"])).holds);
        // Support condition holds, gcd condition fails: x1*x3^3 does not
        // divide x1^2*x2*x3^2*x4.
        assert!(!gcd_condition(&ideal(4, &["x1^2*x2", "x3^2*x4", "x1*x3^3"])).holds);
    }

    #[test]
    fn strong_gcd_examples() {
        assert_eq!(strong_gcd_condition(&ideal(4, &["x1*x2", "x3*x4"]), &caps()).unwrap(), None);
        let single = strong_gcd_condition(&ideal(2, &["x1*x2"]), &caps()).unwrap();
        assert!(single.is_some());
        let w = strong_gcd_condition(&tri(), &caps()).unwrap().unwrap();
        assert!(is_strong_gcd_order(&w.sequence));
    }

    #[test]
    fn strong_gcd_four_cycle_matches_exhaustive_search() {
        let c4 = ideal(4, &["x1*x2", "x2*x3", "x3*x4", "x1*x4"]);
        let exhaustive = crate::orders::permutations(4).into_iter().any(|p| {
            let seq: Vec<Monomial> = p.iter().map(|&i| c4.gens()[i].clone()).collect();
            is_strong_gcd_order(&seq)
        });
        let found = strong_gcd_condition(&c4, &caps()).unwrap();
        assert_eq!(found.is_some(), exhaustive);
        let disjoint = ideal(4, &["x1*x2", "x3*x4", "x1*x3"]);
        let w = strong_gcd_condition(&disjoint, &caps()).unwrap().unwrap();
        // x1*x3 has to come after x1*x2 or x3*x4, whichever is first.
        assert_ne!(w.sequence[0], mono(4, "x1*x3"));
    }

    #[test]
    fn strong_gcd_cap() {
        let many = ideal(13, &["x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9", "x10", "x11", "x12", "x13"]);
        assert!(strong_gcd_condition(&many, &caps()).unwrap_err().is_resource());
    }

    #[test]
    fn linear_quotient_examples() {
        let t = tri();
        let seq = [mono(3, "x1*x2"), mono(3, "x1*x3"), mono(3, "x2*x3")];
        assert!(linear_quotient_for_order(&t, &seq).unwrap().holds);
        let two = ideal(4, &["x1*x2", "x3*x4"]);
        let r = linear_quotient_for_order(&two, two.gens()).unwrap();
        assert_eq!(r.first_failure, Some(1));
        let p = ideal(2, &["x1*x2"]);
        assert!(linear_quotient_for_order(&p, p.gens()).unwrap().holds);
        assert!(linear_quotient_for_order(&t, &seq[..2]).is_err());
    }

    #[test]
    fn linear_quotient_search() {
        assert!(has_linear_quotient(&tri(), &caps()).unwrap().is_some());
        assert!(has_linear_quotient(&ideal(4, &["x1*x2", "x3*x4"]), &caps()).unwrap().is_none());
        let sq = tri().power(2, 100).unwrap();
        let w = has_linear_quotient(&sq, &caps()).unwrap().unwrap();
        assert!(linear_quotient_for_order(&sq, &w.sequence).unwrap().holds);
    }

    #[test]
    fn monomial_order_examples() {
        let lex = OrderSpec::Family(crate::orders::OrderFamily::Lex);
        let w = monomial_order_linear_quotient(&tri(), &lex, &caps()).unwrap().unwrap();
        // First success is lex with the identity permutation, ascending.
        assert_eq!(
            w.kind,
            OrderKind::MonomialOrder {
                order: MonomialOrder::Family {
                    family: crate::orders::OrderFamily::Lex,
                    perm: vec![0, 1, 2]
                },
                direction: Direction::Ascending
            }
        );
        let two = ideal(4, &["x1*x2", "x3*x4"]);
        assert!(monomial_order_linear_quotient(&two, &OrderSpec::AllFamilies, &caps()).unwrap().is_none());
        let tie = OrderSpec::Weight(vec![1, 1, 1, 1]);
        assert!(matches!(
            monomial_order_linear_quotient(&two, &tie, &caps()),
            Err(Error::InvalidOrder(_))
        ));
    }

    #[test]
    fn lex_descending_also_works_for_triangle() {
        let t = tri();
        let seq: Vec<Monomial> = t.gens().iter().rev().cloned().collect();
        assert!(linear_quotient_for_order(&t, &seq).unwrap().holds);
    }

    #[test]
    fn derived_order_for_triangle() {
        let d = prop_main_derived_order(&tri(), 1, &OrderSpec::AllFamilies, &caps())
            .unwrap()
            .unwrap();
        assert!(d.verified);
        assert!(is_strong_gcd_order(&d.derived.sequence));
        assert!(prop_main_derived_order(&ideal(4, &["x1*x2", "x3*x4"]), 1, &OrderSpec::AllFamilies, &caps())
            .unwrap()
            .is_none());
        assert!(prop_main_derived_order(&ideal(2, &["x1"]), 1, &OrderSpec::AllFamilies, &caps()).is_err());
    }

    #[test]
    fn golod_examples() {
        let c = golod_certificate(&tri(), 1..=2, &OrderSpec::AllFamilies, &caps())
            .unwrap()
            .unwrap();
        assert_eq!(c.s, Some(1));
        assert_eq!(c.chain.last().unwrap().license, License::StrongGcdImpliesGolod);
        let two = ideal(4, &["x1*x2", "x3*x4"]);
        assert!(golod_certificate(&two, 1..=2, &OrderSpec::AllFamilies, &caps()).unwrap().is_none());
        let with_var = ideal(3, &["x1", "x2*x3"]);
        assert!(matches!(
            golod_certificate(&with_var, 1..=1, &OrderSpec::AllFamilies, &caps()),
            Err(Error::Precondition(_))
        ));
        assert!(golod_certificate(&ideal(2, &["x1^2"]), 1..=1, &OrderSpec::AllFamilies, &caps()).is_err());
    }
}
