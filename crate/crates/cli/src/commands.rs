use serde_json::{json, Value};

use gkrs_core::chars::{alternating_sum, decompose_virtual, freudenthal_character, weyl_dimension};
use gkrs_core::cliffmat::{
    build_clifford, commutant, quantize_check, relations_check, so3_generators, thom_map_check,
    thom_map_check_scaled, twisted_action_check, twisted_action_check_with, CheckRecord,
    CheckStatus, LieModule,
};
use gkrs_core::embed::restrict_character;
use gkrs_core::gkrs::{
    dirac_induce, dirac_source_class, dominant_lambda_grid, dominant_mu_grid, euler_restriction,
    gkrs_multiplet, verify_adjointness,
};
use gkrs_core::superring::{classify_clifford, weight_json, RestrictionTable, SRElement};
use gkrs_core::{Embedding, Result, VirtualDecomposition, Weight};
use num_rational::Rational64;

use crate::input::{parse_scaled_weight, parse_weight, root_system, EmbeddingArgs, CATALOG};
use crate::{Output, Suite};

pub enum Status {
    Pass,
    Fail,
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("json values serialize")
    );
}

fn sign_str(s: i64) -> String {
    if s > 0 {
        format!("+{s}")
    } else {
        s.to_string()
    }
}

fn embedding_label(e: &Embedding) -> String {
    let roots: Vec<String> = e.h_simple_roots().iter().map(ToString::to_string).collect();
    if roots.is_empty() {
        format!("{} ⊃ t", e.ambient().label())
    } else {
        format!("{} ⊃ h[{}]", e.ambient().label(), roots.join(", "))
    }
}

fn decomposition_json(d: &VirtualDecomposition, scale: i64) -> Value {
    Value::Array(
        d.iter()
            .map(|(w, c)| json!({"weight": weight_json(w, scale), "coeff": c}))
            .collect(),
    )
}

fn g_weight(e: &Embedding, text: &str) -> Result<Weight> {
    let w = parse_weight(text)?;
    e.ambient().check_weight(&w)?;
    Ok(w)
}

fn h_weight(e: &Embedding, text: &str) -> Result<Weight> {
    let w = parse_scaled_weight(text, e.scale())?;
    e.ambient().check_weight(&w)?;
    Ok(w)
}

pub fn rootdata(g: &str, out: Output) -> Result<Status> {
    let rs = root_system(g)?;
    let order = rs.weyl_order()?;
    match out {
        Output::Json => print_json(&json!({
            "label": rs.label(),
            "rank": rs.rank(),
            "cartan": rs.cartan(),
            "simple_roots": rs.simple_roots(),
            "positive_roots": rs.positive_roots(),
            "rho": rs.rho(),
            "weyl_order": order,
        })),
        Output::Text => {
            println!("type {}, rank {}", rs.label(), rs.rank());
            println!("cartan matrix:");
            for row in rs.cartan() {
                let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
                println!("  [{}]", cells.join(""));
            }
            let fmt = |ws: &[Weight]| {
                ws.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            println!("simple roots: {}", fmt(rs.simple_roots()));
            println!(
                "positive roots ({}): {}",
                rs.positive_roots().len(),
                fmt(rs.positive_roots())
            );
            println!("rho: {}", rs.rho());
            println!("|W| = {order}");
        }
    }
    Ok(Status::Pass)
}

pub fn branch(args: &EmbeddingArgs, lambda: &str, out: Output) -> Result<Status> {
    let e = args.resolve()?;
    let l = g_weight(&e, lambda)?;
    let d = decompose_virtual(e.h(), &restrict_character(&e, &l)?)?;
    match out {
        Output::Json => print_json(&json!({
            "lambda": l,
            "terms": decomposition_json(&d, e.scale()),
        })),
        Output::Text => {
            println!("V{l} restricted to {}:", embedding_label(&e));
            println!("{:>6}  {:<16} dim", "mult", "h-weight");
            for (w, c) in d.iter() {
                println!(
                    "{c:>6}  {:<16} {}",
                    e.display_h(w),
                    weyl_dimension(e.h(), w)?
                );
            }
        }
    }
    Ok(Status::Pass)
}

pub fn gkrs(args: &EmbeddingArgs, lambda: &str, out: Output) -> Result<Status> {
    let e = args.resolve()?;
    let l = g_weight(&e, lambda)?;
    let m = gkrs_multiplet(&e, &l)?;
    let brute = euler_restriction(&e, &l)?;
    let closed = m.as_decomposition();
    let ok = closed == brute;
    let witness = (!ok).then(|| {
        let w = closed
            .iter()
            .chain(brute.iter())
            .map(|(w, _)| w)
            .find(|w| closed.get(w) != brute.get(w))
            .cloned()
            .expect("unequal decompositions differ somewhere");
        format!(
            "at {}: multiplet {} vs Euler restriction {}",
            e.display_h(&w),
            closed.get(&w),
            brute.get(&w)
        )
    });
    match out {
        Output::Json => {
            let mut v = json!({
                "lambda": l,
                "multiplet": m.to_json(),
                "cross_check": if ok { "pass" } else { "fail" },
            });
            if let Some(w) = &witness {
                v["witness"] = json!(w);
            }
            print_json(&v);
        }
        Output::Text => {
            println!("multiplet of V{l} for {}:", embedding_label(&e));
            println!("{:>4}  {:<16} dim", "sign", "h-weight");
            for (s, w) in &m.members {
                println!(
                    "{:>4}  {:<16} {}",
                    sign_str(i64::from(*s)),
                    e.display_h(w),
                    weyl_dimension(e.h(), w)?
                );
            }
            println!("cross-check against Euler restriction: {}", verdict(ok));
            if let Some(w) = &witness {
                println!("witness: {w}");
            }
        }
    }
    Ok(status(ok))
}

fn dirac_json(r: &Option<(i8, Weight)>) -> Value {
    match r {
        Some((s, w)) => json!({"sign": s, "weight": weight_json(w, 1)}),
        None => json!(0),
    }
}

fn dirac_text(r: &Option<(i8, Weight)>) -> String {
    match r {
        Some((s, w)) => format!("{} {w}", sign_str(i64::from(*s))),
        None => "0".to_string(),
    }
}

pub fn dirac(args: &EmbeddingArgs, mu: &str, out: Output) -> Result<Status> {
    let e = args.resolve()?;
    let m = h_weight(&e, mu)?;
    let r = dirac_induce(&e, &m)?;
    match out {
        Output::Json => print_json(&dirac_json(&r)),
        Output::Text => println!("{}", dirac_text(&r)),
    }
    Ok(Status::Pass)
}

pub fn induce(args: &EmbeddingArgs, mu: &str, bound: i64, out: Output) -> Result<Status> {
    let e = args.resolve()?;
    let m = h_weight(&e, mu)?;
    let u = dirac_source_class(&e, &m)?;
    let pushed = RestrictionTable::new(&e, bound)?.pushforward(&u);
    let expected = dirac_induce(&e, &m)?;
    let ok = agrees(&e, bound, &pushed, &expected);
    match out {
        Output::Json => print_json(&json!({
            "mu": weight_json(&m, e.scale()),
            "bound": bound,
            "pushforward": pushed.to_json(),
            "dirac": dirac_json(&expected),
            "agreement": if ok { "pass" } else { "fail" },
        })),
        Output::Text => {
            println!(
                "pushforward of U{} ⊗ (S₀* − S₁*) for {}, height ≤ {bound}:",
                e.display_h(&m),
                embedding_label(&e)
            );
            if pushed.is_zero() {
                println!("  0");
            }
            for (w, c) in pushed.terms.iter() {
                println!("  {} V{w}", sign_str(c));
            }
            println!("dirac: {}", dirac_text(&expected));
            println!("agreement inside the bound: {}", verdict(ok));
        }
    }
    Ok(status(ok))
}

/// The pushforward truncated at `bound` matches the induced class seen inside the bound.
fn agrees(e: &Embedding, bound: i64, pushed: &SRElement, expected: &Option<(i8, Weight)>) -> bool {
    let support: Vec<(Weight, i64)> = pushed.terms.iter().map(|(w, c)| (w.clone(), c)).collect();
    let limit = Rational64::from_integer(bound);
    match expected {
        Some((s, w)) if e.ambient().height(w) <= limit => {
            support == vec![(w.clone(), i64::from(*s))]
        }
        _ => support.is_empty(),
    }
}

#[derive(Default)]
struct Tally {
    passed: usize,
    total: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(what());
        }
    }

    fn record(&mut self, r: &CheckRecord, expect_fail: bool) {
        let failed = r.status == CheckStatus::Fail;
        self.check(failed == expect_fail, || {
            if expect_fail {
                format!("negative control unexpectedly passed: {}", r.identity)
            } else {
                format!("{}: {}", r.identity, r.witness.clone().unwrap_or_default())
            }
        });
    }
}

fn default_gkrs_embeddings() -> Result<Vec<Embedding>> {
    let mut out = Vec::new();
    for g in ["A1", "A2", "B2", "G2"] {
        out.push(
            EmbeddingArgs {
                g: Some(g.into()),
                h: Some(String::new()),
                ..Default::default()
            }
            .resolve()?,
        );
    }
    for (name, _, _) in CATALOG {
        out.push(
            EmbeddingArgs {
                catalog: Some((*name).into()),
                ..Default::default()
            }
            .resolve()?,
        );
    }
    Ok(out)
}

fn default_frobenius_embeddings() -> Result<Vec<Embedding>> {
    Ok(vec![
        EmbeddingArgs {
            g: Some("A1".into()),
            h: Some(String::new()),
            ..Default::default()
        }
        .resolve()?,
        EmbeddingArgs {
            catalog: Some("A2>A1u1".into()),
            ..Default::default()
        }
        .resolve()?,
    ])
}

fn has_embedding(args: &EmbeddingArgs) -> bool {
    args.h.is_some() || args.catalog.is_some() || args.embedding.is_some()
}

fn suite_gkrs(args: &EmbeddingArgs, max: i64, t: &mut Tally) -> Result<()> {
    let embeddings = if has_embedding(args) {
        vec![args.resolve()?]
    } else {
        default_gkrs_embeddings()?
    };
    for e in embeddings {
        let expected = e.ambient().weyl_order()? / e.weyl_order_h()?;
        for l in dominant_lambda_grid(e.ambient().rank(), max) {
            let m = gkrs_multiplet(&e, &l)?;
            let brute = euler_restriction(&e, &l)?;
            t.check(m.as_decomposition() == brute, || {
                format!(
                    "{} λ={l}: multiplet ≠ Euler restriction",
                    embedding_label(&e)
                )
            });
            t.check(m.len() == expected, || {
                format!(
                    "{} λ={l}: {} members, expected {expected}",
                    embedding_label(&e),
                    m.len()
                )
            });
        }
    }
    Ok(())
}

fn suite_weyl(args: &EmbeddingArgs, max: i64, t: &mut Tally) -> Result<()> {
    let rs = if has_embedding(args) {
        args.resolve()?.ambient().clone()
    } else {
        root_system(args.require_g()?)?
    };
    let sys = rs.chamber();
    let denominator = alternating_sum(sys, rs.rho(), rs.weyl_bound())?;
    for l in dominant_lambda_grid(rs.rank(), max) {
        let ch = freudenthal_character(sys, &l)?;
        let numerator = alternating_sum(sys, &(&l + rs.rho()), rs.weyl_bound())?;
        t.check(ch.convolve(&denominator) == numerator, || {
            format!("{} λ={l}: Weyl character identity", rs.label())
        });
        let dim = weyl_dimension(sys, &l)?;
        t.check(ch.total() == dim, || {
            format!("{} λ={l}: Σ mult {} ≠ dim {dim}", rs.label(), ch.total())
        });
    }
    Ok(())
}

fn suite_frobenius(args: &EmbeddingArgs, max: i64, t: &mut Tally) -> Result<()> {
    let embeddings = if has_embedding(args) {
        vec![args.resolve()?]
    } else {
        default_frobenius_embeddings()?
    };
    for e in embeddings {
        let table = RestrictionTable::new(&e, 12)?;
        for mu in dominant_mu_grid(&e, max) {
            for l in dominant_lambda_grid(e.ambient().rank(), max) {
                let (lhs, rhs) = verify_adjointness(&e, &mu, &l)?;
                t.check(lhs == rhs, || {
                    format!(
                        "{} μ={} λ={l}: {lhs} ≠ {rhs}",
                        embedding_label(&e),
                        e.display_h(&mu)
                    )
                });
            }
            let pushed = table.pushforward(&dirac_source_class(&e, &mu)?);
            let expected = dirac_induce(&e, &mu)?;
            t.check(agrees(&e, 12, &pushed, &expected), || {
                format!(
                    "{} μ={}: pushforward disagrees with dirac {}",
                    embedding_label(&e),
                    e.display_h(&mu),
                    dirac_text(&expected)
                )
            });
        }
    }
    Ok(())
}

fn suite_thom(t: &mut Tally) -> Result<()> {
    let alg = build_clifford(3)?;
    let gens = so3_generators();
    for r in quantize_check(&alg, &gens)? {
        t.record(&r, false);
    }
    for r in thom_map_check(&alg, &gens)? {
        t.record(&r, false);
    }
    for m in [
        LieModule::trivial(3),
        LieModule::spin_half(),
        LieModule::defining(&gens)?,
    ] {
        for r in twisted_action_check(&alg, &gens, &m)? {
            t.record(&r, false);
        }
    }
    let dropped = thom_map_check_scaled(&alg, &gens, Rational64::from_integer(1))?;
    t.record(&dropped[0], true);
    let no_grading = twisted_action_check_with(&alg, &gens, &LieModule::spin_half(), false)?;
    t.record(&no_grading[2], true);
    Ok(())
}

fn suite_clifford(t: &mut Tally) -> Result<()> {
    for n in 1..=6 {
        let alg = build_clifford(n)?;
        for r in relations_check(&alg) {
            t.record(&r, false);
        }
        let c = commutant(&alg);
        let class = classify_clifford(n)?;
        t.check(c.kind() == class.kind, || {
            format!(
                "n={n}: commutant {:?} vs classification {:?}",
                c.kind(),
                class.kind
            )
        });
    }
    for n in 0..=10 {
        let (a, b) = (
            classify_clifford(n)?.rank_of_sr,
            classify_clifford(n + 2)?.rank_of_sr,
        );
        t.check(a == b, || {
            format!("rank({n}) = {a} ≠ rank({}) = {b}", n + 2)
        });
    }
    Ok(())
}

pub fn verify(suite: Suite, args: &EmbeddingArgs, max: i64, out: Output) -> Result<Status> {
    if max < 0 {
        return Err(gkrs_core::Error::Parse(
            "--max-coord must be nonnegative".into(),
        ));
    }
    let mut t = Tally::default();
    let name = match suite {
        Suite::Gkrs => {
            suite_gkrs(args, max, &mut t)?;
            "gkrs"
        }
        Suite::Weyl => {
            suite_weyl(args, max, &mut t)?;
            "weyl"
        }
        Suite::Frobenius => {
            suite_frobenius(args, max, &mut t)?;
            "frobenius"
        }
        Suite::Thom => {
            suite_thom(&mut t)?;
            "thom"
        }
        Suite::Clifford => {
            suite_clifford(&mut t)?;
            "clifford"
        }
    };
    let ok = t.failures.is_empty();
    match out {
        Output::Json => print_json(&json!({
            "suite": name,
            "passed": t.passed,
            "total": t.total,
            "failures": t.failures,
        })),
        Output::Text => {
            println!("suite {name}: {}/{} checks passed", t.passed, t.total);
            for f in &t.failures {
                println!("FAIL {f}");
            }
        }
    }
    Ok(status(ok))
}
