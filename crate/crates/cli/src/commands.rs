//! One function per subcommand. Each returns the structured result together
//! with its text rendering, so cached and fresh runs print identically.

use std::fmt::Write as _;

use monores::betti::{has_linear_resolution, is_componentwise_linear, multigraded_betti, taylor_strand_betti};
use monores::clutter::{verify_regularity_corollary, verify_theorem_betti_bounds};
use monores::conditions::{
    gcd_condition, golod_certificate, has_linear_quotient, monomial_order_linear_quotient,
    strong_gcd_condition, theorem_main_condition, OrderKind, OrderWitness, PairCheck,
};
use monores::generate::{random_ideal, scan_instances, seeded};
use monores::io::ideal_document;
use monores::orders::OrderSpec;
use monores::scan::{open_problem_scan, Problem, ScanConfig, ScanReport};
use monores::{fixtures, Caps, Clutter, FieldSpec, LcmLattice, MonomialIdeal, Result, SimplicialComplex};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    pub result: Value,
    pub text: String,
    /// A checked mathematical statement came out false.
    pub falsified: bool,
}

impl Outcome {
    fn ok(result: Value, text: String) -> Self {
        Outcome {
            result,
            text,
            falsified: false,
        }
    }
}

pub struct Context {
    pub field: FieldSpec,
    pub caps: Caps,
    pub orders: OrderSpec,
    pub quotient: bool,
}

fn to_value(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("results serialise")
}

fn power_of(ideal: &MonomialIdeal, s: u32, ctx: &Context) -> Result<MonomialIdeal> {
    ideal.power(s, ctx.caps.generators)
}

fn subject_name(s: u32) -> String {
    if s == 1 {
        "I".into()
    } else {
        format!("I^{s}")
    }
}

pub fn betti(ideal: &MonomialIdeal, s: u32, ctx: &Context) -> Result<Outcome> {
    let p = power_of(ideal, s, ctx)?;
    let table = multigraded_betti(&p, ctx.field, &ctx.caps)?;
    let diagram = table.diagram(ctx.quotient);
    let coarse: Vec<Value> = table
        .coarse()
        .into_iter()
        .map(|((i, j), v)| json!({"i": i, "j": j, "value": v}))
        .collect();
    let result = json!({
        "subject": ideal_document(&p),
        "s": s,
        "quotient_display": ctx.quotient,
        "fine": table.fine_entries(),
        "coarse": coarse,
        "projective_dimension": table.projective_dimension(),
        "regularity": table.regularity(),
        "diagram": diagram,
    });
    let target = if ctx.quotient {
        format!("S/{}", subject_name(s))
    } else {
        subject_name(s)
    };
    let text = format!("Betti numbers of {target} over {}\n{diagram}", ctx.field);
    Ok(Outcome::ok(result, text))
}

pub fn power(ideal: &MonomialIdeal, s: u32, ctx: &Context) -> Result<Outcome> {
    let p = power_of(ideal, s, ctx)?;
    let doc = ideal_document(&p);
    let text = serde_json::to_string_pretty(&doc).expect("documents serialise") + "\n";
    Ok(Outcome::ok(json!({"s": s, "power": doc}), text))
}

pub fn check_linear(ideal: &MonomialIdeal, s: u32, ctx: &Context) -> Result<Outcome> {
    let p = power_of(ideal, s, ctx)?;
    let l = has_linear_resolution(&p, ctx.field, &ctx.caps)?;
    let text = match (l.linear, l.degree, l.witness) {
        (true, Some(d), _) => format!("true\n{} has a {d}-linear resolution over {}\n", subject_name(s), ctx.field),
        (false, None, _) => "false\ngenerators live in more than one degree\n".to_string(),
        (false, Some(d), Some((i, j))) => format!(
            "false\nbeta_{i},{j} is non-zero, off the {d}-linear strand (over {})\n",
            ctx.field
        ),
        _ => unreachable!("linearity reports are consistent"),
    };
    Ok(Outcome::ok(json!({"s": s, "generators": p.len(), "linearity": l}), text))
}

pub fn check_cwl(ideal: &MonomialIdeal, s: u32, ctx: &Context) -> Result<Outcome> {
    let p = power_of(ideal, s, ctx)?;
    let report = is_componentwise_linear(&p, ctx.field, &ctx.caps, false)?;
    let mut text = format!("{}\n", report.componentwise_linear);
    for piece in &report.pieces {
        let verdict = match &piece.linearity {
            Some(l) if l.linear => "linear".to_string(),
            Some(l) => match l.witness {
                Some((i, j)) => format!("not linear (beta_{i},{j})"),
                None => "not linear".to_string(),
            },
            None => "skipped".to_string(),
        };
        let _ = writeln!(text, "  degree {}: {} generators, {verdict}", piece.degree, piece.generators);
    }
    if let Some(top) = report.pieces.last() {
        let _ = writeln!(
            text,
            "  degrees above {} follow from the top piece",
            top.degree
        );
    }
    Ok(Outcome::ok(json!({"s": s, "report": report}), text))
}

fn pair_text(name: &str, c: &PairCheck) -> String {
    match &c.failing_pair {
        None => format!("{name}: true\n"),
        Some((u, v)) => format!("{name}: false (no third generator for {u}, {v})\n"),
    }
}

pub fn check_gcd(ideal: &MonomialIdeal, _ctx: &Context) -> Result<Outcome> {
    let gcd = gcd_condition(ideal);
    let support = theorem_main_condition(ideal);
    let text = pair_text("gcd condition", &gcd) + &pair_text("support condition", &support);
    Ok(Outcome::ok(json!({"gcd_condition": gcd, "support_condition": support}), text))
}

fn sequence_text(w: &OrderWitness) -> String {
    w.sequence
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" < ")
}

pub fn check_strong_gcd(ideal: &MonomialIdeal, ctx: &Context) -> Result<Outcome> {
    let w = strong_gcd_condition(ideal, &ctx.caps)?;
    let text = match &w {
        Some(w) => format!("true\norder: {}\n", sequence_text(w)),
        None => "false\nno order of the generators satisfies the strong gcd condition\n".into(),
    };
    Ok(Outcome::ok(json!({"strong_gcd_condition": w.is_some(), "witness": w}), text))
}

pub fn check_linquot(ideal: &MonomialIdeal, s: u32, ctx: &Context) -> Result<Outcome> {
    let p = power_of(ideal, s, ctx)?;
    let any = has_linear_quotient(&p, &ctx.caps)?;
    let monomial = if p.nvars() <= ctx.caps.order_variables || matches!(ctx.orders, OrderSpec::Weight(_)) {
        Some(monomial_order_linear_quotient(&p, &ctx.orders, &ctx.caps)?)
    } else {
        None
    };
    let mut text = match &any {
        Some(w) => format!("true\norder: {}\n", sequence_text(w)),
        None => "false\n".to_string(),
    };
    match &monomial {
        None => text.push_str("monomial orders: skipped (too many variables)\n"),
        Some(None) => {
            let _ = writeln!(text, "monomial orders ({}): none", ctx.orders);
        }
        Some(Some(w)) => {
            if let OrderKind::MonomialOrder { order, direction } = &w.kind {
                let _ = writeln!(text, "monomial orders ({}): {order}, {direction:?}", ctx.orders);
            }
        }
    }
    Ok(Outcome::ok(
        json!({
            "s": s,
            "linear_quotients": any.is_some(),
            "witness": any,
            "monomial_order_searched": monomial.is_some(),
            "monomial_order_witness": monomial.flatten(),
        }),
        text,
    ))
}

pub fn golod_cert(ideal: &MonomialIdeal, s_range: std::ops::RangeInclusive<u32>, ctx: &Context) -> Result<Outcome> {
    let cert = golod_certificate(ideal, s_range.clone(), &ctx.orders, &ctx.caps)?;
    let text = match &cert {
        Some(c) => {
            let mut t = String::from("certificate found\n");
            for (k, step) in c.chain.iter().enumerate() {
                let license = serde_json::to_value(step.license).expect("licenses serialise");
                let _ = writeln!(t, "  {}. {} [{}]", k + 1, step.claim, license.as_str().unwrap_or(""));
            }
            let _ = writeln!(t, "  order: {}", sequence_text(&c.witness));
            t
        }
        None => "no certificate found (this does not show that S/I is not Golod)\n".to_string(),
    };
    Ok(Outcome::ok(
        json!({"s_range": [s_range.start(), s_range.end()], "certificate": cert}),
        text,
    ))
}

pub fn verify_thm34(clutter: &Clutter, s: u32, ctx: &Context) -> Result<Outcome> {
    let r = verify_theorem_betti_bounds(clutter, s, ctx.field, &ctx.caps)?;
    let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
    let mut text = format!("k={} t={} s={} field={}\n", r.k, r.t, r.s, r.field);
    for c in [&r.first, &r.second] {
        let _ = writeln!(
            text,
            "beta_{},{}: bound {} <= actual {}; {}",
            c.i,
            c.degree,
            c.bound,
            c.actual,
            verdict(c.holds)
        );
    }
    text.push_str(verdict(r.holds));
    text.push('\n');
    Ok(Outcome {
        falsified: !r.holds,
        result: to_value(&r),
        text,
    })
}

pub fn verify_cor35(clutter: &Clutter, s: u32, ctx: &Context) -> Result<Outcome> {
    let r = verify_regularity_corollary(clutter, s, ctx.field, &ctx.caps)?;
    let mut text = format!("k={} t={} s={} field={}\n", r.k, r.t, r.s, r.field);
    match (r.bound, r.holds) {
        (Some(b), Some(ok)) => {
            let _ = writeln!(
                text,
                "reg(I^{s}): bound {b} <= actual {}; {}",
                r.actual,
                if ok { "PASS" } else { "FAIL" }
            );
        }
        _ => {
            let _ = writeln!(text, "reg(I^{s}) = {}; not applicable (t = {})", r.actual, r.t);
        }
    }
    Ok(Outcome {
        falsified: r.holds == Some(false),
        result: to_value(&r),
        text,
    })
}

pub fn lattice(ideal: &MonomialIdeal, ctx: &Context) -> Result<Outcome> {
    let l = LcmLattice::build(ideal, ctx.caps.lattice_elements)?;
    let dump = l.dump();
    Ok(Outcome::ok(
        json!({"elements": l.len(), "dump": dump.lines().collect::<Vec<_>>()}),
        dump,
    ))
}

fn findings_section(text: &mut String, title: &str, items: &[monores::scan::Finding]) {
    if items.is_empty() {
        let _ = writeln!(text, "{title}: none");
        return;
    }
    let _ = writeln!(text, "{title}: {}", items.len());
    for f in items {
        let s = f.s.map(|s| format!(" s={s}")).unwrap_or_default();
        let _ = writeln!(text, "  #{} {}{s}: {}", f.index, f.ideal, f.detail);
    }
}

pub fn scan(problem: Problem, budget: usize, seed: u64, s_max: u32, ctx: &Context) -> Outcome {
    let config = ScanConfig {
        field: ctx.field,
        s_range: 1..=s_max,
        orders: ctx.orders.clone(),
        caps: ctx.caps,
    };
    let report: ScanReport = open_problem_scan(scan_instances(seed), problem, budget, &config);
    let mut text = format!(
        "{problem} scan: {} examined, {} skipped (budget {budget}, seed {seed}, s <= {s_max}, {})\n",
        report.examined,
        report.skipped.len(),
        ctx.field
    );
    findings_section(&mut text, "counterexamples", &report.conjecture_counterexamples);
    findings_section(&mut text, "gcd necessity violations", &report.gcd_necessity_violations);
    findings_section(&mut text, "Betti bound violations", &report.betti_bound_violations);
    findings_section(&mut text, "anomalies", &report.anomalies);
    let certified = report
        .componentwise_linear_powers
        .iter()
        .filter(|c| c.golod_certificate == Some(true))
        .count();
    let _ = writeln!(
        text,
        "componentwise linear powers: {} ({certified} with a Golod certificate)",
        report.componentwise_linear_powers.len()
    );
    let falsified = report.has_contradictions()
        || !report.conjecture_counterexamples.is_empty()
        || !report.anomalies.is_empty();
    Outcome {
        result: to_value(&report),
        text,
        falsified,
    }
}

const SELFTEST_SEED: u64 = 20_240_101;

/// Quick consistency checks on built-in examples.
pub fn selftest(ctx: &Context) -> Outcome {
    let caps = &ctx.caps;
    let mut checks: Vec<(&str, std::result::Result<bool, String>)> = Vec::new();
    let mut run = |name: &'static str, f: &dyn Fn() -> Result<bool>| {
        checks.push((name, f().map_err(|e| e.to_string())));
    };
    run("triangle Betti numbers", &|| {
        let t = multigraded_betti(&fixtures::triangle(), FieldSpec::GF2, caps)?;
        Ok(t.coarse_get(0, 2) == 3 && t.coarse_get(1, 3) == 2 && t.projective_dimension() == Some(1))
    });
    run("hollow triangle homology", &|| {
        let c = SimplicialComplex::from_facets(3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        let h = monores::reduced_homology(&c, FieldSpec::GF2, caps.faces)?;
        Ok(h.dim(1) == 1 && h.dim(0) == 0)
    });
    run("Sturmfels ideal linear, square not", &|| {
        let i = fixtures::sturmfels();
        let sq = i.power(2, caps.generators)?;
        Ok(has_linear_resolution(&i, FieldSpec::Rational, caps)?.linear
            && !has_linear_resolution(&sq, FieldSpec::Rational, caps)?.linear)
    });
    run("projective plane ideal depends on characteristic", &|| {
        let i = fixtures::projective_plane();
        Ok(has_linear_resolution(&i, FieldSpec::Rational, caps)?.linear
            && !has_linear_resolution(&i, FieldSpec::GF2, caps)?.linear)
    });
    run("lattice and Taylor strand agree", &|| {
        let mut rng = seeded(SELFTEST_SEED);
        for _ in 0..20 {
            let i = random_ideal(&mut rng, 4, 5, 2);
            let table = multigraded_betti(&i, FieldSpec::GF2, caps)?;
            let lattice = LcmLattice::build(&i, caps.lattice_elements)?;
            for m in lattice.elements() {
                for k in 0..=i.len() {
                    if table.get(k, m) != taylor_strand_betti(&i, FieldSpec::GF2, m, k, caps)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    });
    run("Betti lower bounds for two disjoint edges", &|| {
        Ok(verify_theorem_betti_bounds(&Clutter::disjoint_edges(2, 2), 2, FieldSpec::GF2, caps)?.holds)
    });
    run("triangle Golod certificate", &|| {
        Ok(golod_certificate(&fixtures::triangle(), 1..=1, &OrderSpec::AllFamilies, caps)?.is_some())
    });
    let mut text = String::new();
    let mut all = true;
    let mut results = Vec::new();
    for (name, r) in &checks {
        let (status, detail) = match r {
            Ok(true) => ("PASS", String::new()),
            Ok(false) => ("FAIL", String::new()),
            Err(e) => ("ERROR", format!(": {e}")),
        };
        all &= status == "PASS";
        let _ = writeln!(text, "{status} {name}{detail}");
        results.push(json!({"check": name, "status": status}));
    }
    Outcome {
        result: json!({"checks": results, "passed": all}),
        text,
        falsified: !all,
    }
}
