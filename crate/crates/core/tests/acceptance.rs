//! Acceptance run. Each criterion prints one PASS or FAIL line; the process
//! exits non-zero if any criterion fails.

use std::time::Instant;

use monores::betti::{has_linear_resolution, is_componentwise_linear, multigraded_betti, taylor_strand_betti};
use monores::clutter::{verify_regularity_corollary, verify_theorem_betti_bounds};
use monores::conditions::{
    gcd_condition, golod_certificate, is_strong_gcd_order, monomial_order_linear_quotient, prop_main_derived_order,
    strong_gcd_condition, theorem_main_condition,
};
use monores::generate::{graphs_up_to_isomorphism, random_ideal, random_squarefree_ideal, scan_instances, seeded};
use monores::orders::OrderSpec;
use monores::scan::{open_problem_scan, Problem, ScanConfig};
use monores::{fixtures, reduced_homology, Caps, Clutter, FieldSpec, Monomial, MonomialIdeal, SimplicialComplex};
use rand::Rng;

const FIELDS: [FieldSpec; 2] = [FieldSpec::GF2, FieldSpec::Rational];

type Verdict = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn linear(i: &MonomialIdeal, field: FieldSpec, caps: &Caps) -> std::result::Result<bool, String> {
    has_linear_resolution(i, field, caps)
        .map(|l| l.linear)
        .map_err(|e| format!("{i}: {e}"))
}

fn power(i: &MonomialIdeal, s: u32, caps: &Caps) -> std::result::Result<MonomialIdeal, String> {
    i.power(s, caps.generators).map_err(|e| e.to_string())
}

fn sturmfels(caps: &Caps) -> Verdict {
    let i = fixtures::sturmfels();
    let sq = power(&i, 2, caps)?;
    for f in FIELDS {
        ensure(linear(&i, f, caps)?, format!("I not linear over {f}"))?;
        ensure(!linear(&sq, f, caps)?, format!("I^2 linear over {f}"))?;
    }
    Ok(format!("I linear, I^2 ({} generators) not, over gf2 and rational", sq.len()))
}

fn projective_plane(caps: &Caps) -> Verdict {
    let i = fixtures::projective_plane();
    ensure(linear(&i, FieldSpec::Rational, caps)?, "I not linear over rational")?;
    let gf2 = has_linear_resolution(&i, FieldSpec::GF2, caps).map_err(|e| e.to_string())?;
    ensure(!gf2.linear, "I linear over gf2")?;
    let sq = power(&i, 2, caps)?;
    let q = has_linear_resolution(&sq, FieldSpec::Rational, caps).map_err(|e| e.to_string())?;
    ensure(!q.linear, "I^2 linear over rational")?;
    Ok(format!(
        "I linear over rational; over gf2 witness beta{:?}; I^2 over rational witness beta{:?}",
        gf2.witness.unwrap(),
        q.witness.unwrap()
    ))
}

/// Every divisor of `m`.
fn divisors(m: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for &e in m.exps() {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (0..=e).map(move |a| {
                    let mut p = prefix.clone();
                    p.push(a);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

fn oracle_equivalence(caps: &Caps) -> Verdict {
    let mut rng = seeded(2024);
    let mut compared = 0usize;
    for _ in 0..220 {
        let n = rng.gen_range(1..=5);
        let i = random_ideal(&mut rng, n, 6, 2);
        for f in FIELDS {
            let table = multigraded_betti(&i, f, caps).map_err(|e| e.to_string())?;
            for m in divisors(&i.lcm_of_gens().unwrap()) {
                for k in 0..=i.len() {
                    let oracle = taylor_strand_betti(&i, f, &m, k, caps).map_err(|e| e.to_string())?;
                    ensure(
                        table.get(k, &m) == oracle,
                        format!("{i} over {f}: beta_{k},{m} is {} but the oracle says {oracle}", table.get(k, &m)),
                    )?;
                    compared += 1;
                }
            }
        }
    }
    Ok(format!("220 ideals, {compared} entries equal over gf2 and rational"))
}

fn cwl(i: &MonomialIdeal, caps: &Caps) -> std::result::Result<bool, String> {
    is_componentwise_linear(i, FieldSpec::GF2, caps, true)
        .map(|r| r.componentwise_linear)
        .map_err(|e| format!("{i}: {e}"))
}

fn gcd_necessity(caps: &Caps) -> Verdict {
    let mut graphs = 0;
    let mut failing_graphs = 0;
    for n in 2..=5 {
        for g in graphs_up_to_isomorphism(n).into_iter().filter(|g| !g.edges().is_empty()) {
            let i = g.edge_ideal().unwrap();
            graphs += 1;
            let holds = theorem_main_condition(&i).holds;
            failing_graphs += usize::from(!holds);
            for s in 1..=3 {
                let c = cwl(&power(&i, s, caps)?, caps)?;
                ensure(holds || !c, format!("{i}: I^{s} componentwise linear but the condition fails"))?;
            }
        }
    }
    let mut rng = seeded(77);
    let mut random = 0;
    while random < 110 {
        let n = rng.gen_range(4..=6);
        let i = random_squarefree_ideal(&mut rng, n, 5, 2..=3);
        if gcd_condition(&i).holds {
            continue;
        }
        random += 1;
        for s in 1..=3 {
            ensure(
                !cwl(&power(&i, s, caps)?, caps)?,
                format!("{i}: I^{s} componentwise linear without the gcd condition"),
            )?;
        }
    }
    Ok(format!(
        "{graphs} graphs ({failing_graphs} failing the condition) and {random} gcd-failing ideals, s = 1..3, no violations"
    ))
}

fn complement_four_cycles(caps: &Caps) -> Verdict {
    let mut checked = 0;
    for n in 4..=6 {
        for g in graphs_up_to_isomorphism(n) {
            if !g.complement().has_induced_4cycle() {
                continue;
            }
            let i = g.edge_ideal().unwrap();
            for s in 1..=3 {
                ensure(!linear(&power(&i, s, caps)?, FieldSpec::GF2, caps)?, format!("{i}: I^{s} linear"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} powers checked, none linear"))
}

fn clutter_bounds(caps: &Caps) -> Verdict {
    let mut log = Vec::new();
    for (k, t) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let c = Clutter::disjoint_edges(t, k);
        for s in [2, 3] {
            let b = verify_theorem_betti_bounds(&c, s, FieldSpec::GF2, caps).map_err(|e| e.to_string())?;
            let r = verify_regularity_corollary(&c, s, FieldSpec::GF2, caps).map_err(|e| e.to_string())?;
            ensure(b.t == t, format!("induced matching number {} for t = {t}", b.t))?;
            ensure(b.holds, format!("k={k} t={t} s={s}: {b:?}"))?;
            ensure(r.holds == Some(true), format!("k={k} t={t} s={s}: {r:?}"))?;
            log.push(format!(
                "(k={k},t={t},s={s}) b1={}>={} b2={}>={} reg={}>={}",
                b.first.actual,
                b.first.bound,
                b.second.actual,
                b.second.bound,
                r.actual,
                r.bound.unwrap()
            ));
        }
    }
    Ok(log.join("; "))
}

fn froberg(caps: &Caps) -> Verdict {
    let mut graphs = 0;
    for n in 2..=6 {
        for g in graphs_up_to_isomorphism(n).into_iter().filter(|g| !g.edges().is_empty()) {
            let i = g.edge_ideal().unwrap();
            let chordal = g.complement().is_chordal();
            for f in FIELDS {
                ensure(linear(&i, f, caps)? == chordal, format!("{i} over {f}: chordal complement {chordal}"))?;
            }
            graphs += 1;
        }
    }
    Ok(format!("{graphs} graphs with edges, both fields"))
}

fn condition_chain(caps: &Caps) -> Verdict {
    let spec = OrderSpec::AllFamilies;
    let mut successes = 0;
    let mut instances = 0;
    for i in scan_instances(1).take(150) {
        instances += 1;
        let mut found = false;
        for s in 1..=2 {
            let p = power(&i, s, caps)?;
            if monomial_order_linear_quotient(&p, &spec, caps).map_err(|e| e.to_string())?.is_none() {
                continue;
            }
            found = true;
            let d = prop_main_derived_order(&i, s, &spec, caps)
                .map_err(|e| e.to_string())?
                .expect("the power was just found to have linear quotients");
            ensure(d.verified, format!("{i}, s={s}: derived order fails the support condition"))?;
            ensure(
                is_strong_gcd_order(&d.derived.sequence),
                format!("{i}, s={s}: derived order is not a strong gcd order"),
            )?;
            let sg = strong_gcd_condition(&i, caps).map_err(|e| e.to_string())?;
            ensure(sg.is_some(), format!("{i}: strong gcd search found nothing"))?;
        }
        if found {
            successes += 1;
            let cert = golod_certificate(&i, 1..=2, &spec, caps).map_err(|e| e.to_string())?;
            ensure(cert.is_some(), format!("{i}: no Golod certificate"))?;
        }
    }
    Ok(format!("{successes} of {instances} instances have monomial-order linear quotients, no anomalies"))
}

/// Face counts by dimension, computed here from the facets.
fn face_counts(facets: &[Vec<u32>]) -> Vec<usize> {
    let mut faces = std::collections::BTreeSet::new();
    for f in facets {
        for mask in 1u32..1 << f.len() {
            let face: Vec<u32> = (0..f.len()).filter(|b| mask >> b & 1 == 1).map(|b| f[b]).collect();
            faces.insert(face);
        }
    }
    let mut counts = Vec::new();
    for face in faces {
        let k = face.len() - 1;
        if counts.len() <= k {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
    }
    counts
}

/// `∂∘∂` on a face of the given dimension, over the integers.
fn boundary_of_boundary_vanishes(face: &[u32]) -> bool {
    let mut acc = std::collections::BTreeMap::<Vec<u32>, i64>::new();
    for i in 0..face.len() {
        let tau: Vec<u32> = face.iter().enumerate().filter(|&(a, _)| a != i).map(|(_, &v)| v).collect();
        for j in 0..tau.len() {
            let rho: Vec<u32> = tau.iter().enumerate().filter(|&(a, _)| a != j).map(|(_, &v)| v).collect();
            *acc.entry(rho).or_default() += if (i + j) % 2 == 0 { 1 } else { -1 };
        }
    }
    acc.values().all(|&v| v == 0)
}

fn homology_conventions() -> Verdict {
    let void = SimplicialComplex::void();
    let empty = SimplicialComplex::empty();
    let points = SimplicialComplex::from_facets(2, vec![vec![0], vec![1]]);
    let hollow = SimplicialComplex::from_facets(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
    let tetra_facets = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
    let tetra = SimplicialComplex::from_facets(4, tetra_facets.clone());
    let cases: [(&str, &SimplicialComplex, Vec<(i32, u64)>, Option<Vec<Vec<u32>>>); 5] = [
        ("void", &void, vec![], None),
        ("empty", &empty, vec![(-1, 1)], Some(vec![])),
        ("two points", &points, vec![(0, 1)], Some(vec![vec![0], vec![1]])),
        ("hollow triangle", &hollow, vec![(1, 1)], Some(vec![vec![0, 1], vec![1, 2], vec![0, 2]])),
        ("tetrahedron boundary", &tetra, vec![(2, 1)], Some(tetra_facets.clone())),
    ];
    for (name, c, want, facets) in &cases {
        for f in [FieldSpec::GF2, FieldSpec::Prime(3), FieldSpec::Rational] {
            let h = reduced_homology(c, f, 1000).map_err(|e| e.to_string())?;
            let got: Vec<(i32, u64)> = h.dims.iter().map(|(&i, &d)| (i, d)).collect();
            ensure(&got == want, format!("{name} over {f}: {got:?}"))?;
            if let Some(facets) = facets {
                let counts = face_counts(facets);
                ensure(h.face_counts == counts, format!("{name}: face counts {:?}", h.face_counts))?;
                let chi_faces: i64 = -1 + counts.iter().enumerate().map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) }).sum::<i64>();
                let chi_h: i64 = h.dims.iter().map(|(&i, &d)| if i.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) }).sum();
                ensure(chi_faces == chi_h, format!("{name}: Euler characteristic {chi_faces} vs {chi_h}"))?;
                ensure(
                    facets.iter().all(|f| boundary_of_boundary_vanishes(f)),
                    format!("{name}: boundary of a boundary"),
                )?;
            }
        }
    }
    Ok("void, empty, two points, hollow triangle, tetrahedron boundary; Euler and boundary checks hold".into())
}

fn scans() -> Verdict {
    let config = ScanConfig::default();
    let mut parts = Vec::new();
    for problem in [Problem::Conjecture, Problem::Question] {
        let report = open_problem_scan(scan_instances(1), problem, 150, &config);
        ensure(report.examined == 150, format!("{problem}: examined {}", report.examined))?;
        ensure(
            !report.has_contradictions(),
            format!(
                "{problem}: {:?} {:?}",
                report.gcd_necessity_violations, report.betti_bound_violations
            ),
        )?;
        parts.push(format!(
            "{problem}: {} examined, {} skipped, {} counterexamples, {} anomalies, {} cwl powers",
            report.examined,
            report.skipped.len(),
            report.conjecture_counterexamples.len(),
            report.anomalies.len(),
            report.componentwise_linear_powers.len()
        ));
    }
    Ok(parts.join("; "))
}

fn main() {
    let caps = Caps::default();
    let criteria: Vec<(&str, Box<dyn Fn() -> Verdict>)> = vec![
        ("1 Sturmfels ideal", Box::new(|| sturmfels(&caps))),
        ("2 projective plane ideal", Box::new(|| projective_plane(&caps))),
        ("3 lattice formula vs Taylor oracle", Box::new(|| oracle_equivalence(&caps))),
        ("4 gcd necessity for componentwise linear powers", Box::new(|| gcd_necessity(&caps))),
        ("5 complements with induced 4-cycles", Box::new(|| complement_four_cycles(&caps))),
        ("6 Betti and regularity bounds for clutters", Box::new(|| clutter_bounds(&caps))),
        ("7 Froberg cross-check", Box::new(|| froberg(&caps))),
        ("8 condition chain", Box::new(|| condition_chain(&caps))),
        ("9 homology conventions", Box::new(homology_conventions)),
        ("10 open-problem scans", Box::new(scans)),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let verdict = run();
        let ms = start.elapsed().as_millis();
        match verdict {
            Ok(detail) => println!("PASS criterion {name} ({ms} ms): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name} ({ms} ms): {detail}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
