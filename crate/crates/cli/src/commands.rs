use anyhow::{bail, Context, Result};
use serde_json::json;

use qtwist::abelian::{parse_group, CircleValue, FinAbGroup};
use qtwist::cohomology::{classify_3cocycle, cycle_theta, generator_phi, pair, parse_cocycle, Generator, H3Class};
use qtwist::presentation::{check_presentation, emit_presentation, qdet_check as run_qdet};
use qtwist::qgroup::{parse_q, type_a_hopf_suite, AxiomResult};
use qtwist::roots::{su_n_class_exponent, su_n_theta_closed_form, theta_report, upsilon as run_upsilon, RootDatum, TauTuple};
use qtwist::spectrum::spectrum_report;

use crate::Outcome;

pub const RELATIONS_MAX_N: usize = 12;

/// `1,0`, `[1, 0]` or `-1`.
pub fn parse_exponents(text: &str) -> Result<Vec<i64>> {
    let t = text.trim().trim_start_matches('[').trim_end_matches(']');
    if t.trim().is_empty() {
        return Ok(vec![]);
    }
    t.split(',')
        .map(|x| x.trim().parse::<i64>().with_context(|| format!("{x:?} is not an integer exponent")))
        .collect()
}

fn formula(g: &FinAbGroup, which: Generator) -> String {
    let f = g.factors();
    match which {
        Generator::Single(i) => {
            let (n, k) = (f[i], i + 1);
            format!("φ_{k}(a,b,c) = exp(2πi ω_{n}(a_{k},b_{k}) c_{k} / {n})")
        }
        Generator::Pair(i, j) => {
            let (ni, nj, a, b) = (f[i], f[j], i + 1, j + 1);
            format!("φ_{a}{b}(a,b,c) = exp(2πi ω_{ni}(a_{a},b_{a}) c_{b} / {nj})")
        }
        Generator::Triple(i, j, k) => {
            let d = which.order(g);
            format!("φ_{}{}{}(a,b,c) = exp(2πi a_{} b_{} c_{} / {d})", i + 1, j + 1, k + 1, i + 1, j + 1, k + 1)
        }
    }
}

pub fn h3(text: &str) -> Result<Outcome> {
    let g = parse_group(text)?;
    let gens = Generator::all(&g);
    let mut phis = Vec::with_capacity(gens.len());
    let mut thetas = Vec::with_capacity(gens.len());
    for &x in &gens {
        phis.push(generator_phi(&g, x)?);
        thetas.push(cycle_theta(&g, x)?);
    }
    let mut table = vec![vec![CircleValue::ZERO; gens.len()]; gens.len()];
    let mut diagonal = true;
    for (a, phi) in phis.iter().enumerate() {
        for (b, theta) in thetas.iter().enumerate() {
            let v = pair(phi, theta)?;
            let expected = if a == b { CircleValue::new(1, gens[a].order(&g)) } else { CircleValue::ZERO };
            diagonal &= v == expected;
            table[a][b] = v;
        }
    }
    let mut text = vec![format!("Γ = {g}")];
    if gens.is_empty() {
        text.push("H^3(Γ; T) = 0".into());
    } else {
        let summands: Vec<String> = gens.iter().map(|x| format!("Z/{}", x.order(&g))).collect();
        text.push(format!("H^3(Γ; T) ≅ {}", summands.join(" + ")));
        text.push(format!("{} generator{}:", gens.len(), if gens.len() == 1 { "" } else { "s" }));
        for &x in &gens {
            text.push(format!("  [{x}] order {}: {}", x.order(&g), formula(&g, x)));
        }
        text.push("pairing ⟨φ_a, θ_b⟩:".into());
        for row in &table {
            text.push(format!("  {}", row.iter().map(|v| format!("{:>5}", v.to_string())).collect::<Vec<_>>().join(" ")));
        }
    }
    text.push(format!("pairing is diagonal with values 1/order: {}", if diagonal { "PASS" } else { "FAIL" }));
    let json = json!({
        "group": g.to_string(),
        "factors": g.factors(),
        "generators": gens.iter().map(|&x| json!({
            "index": x.to_string(),
            "order": x.order(&g),
            "formula": formula(&g, x),
        })).collect::<Vec<_>>(),
        "pairing": table,
        "diagonal": diagonal,
    });
    Ok(Outcome::new(text.join("\n"), json, diagonal))
}

pub fn classify(group: &str, cocycle: &str) -> Result<Outcome> {
    let g = parse_group(group)?;
    let phi = parse_cocycle(&g, cocycle)?;
    let class = classify_3cocycle(&phi)?;
    Ok(Outcome::new(format!("class: {class}"), serde_json::to_value(&class)?, true))
}

fn datum_and_tau(root_type: &str, tau: &str) -> Result<(RootDatum, TauTuple)> {
    let rd = RootDatum::parse(root_type)?;
    let t = TauTuple::parse(&rd, tau)?;
    Ok((rd, t))
}

pub fn theta(root_type: &str, tau: &str) -> Result<Outcome> {
    let (rd, t) = datum_and_tau(root_type, tau)?;
    let rep = theta_report(&rd, &t)?;
    let mut text = vec![format!("root datum {rd}, center {}", rep.theta.group()), format!("Θ(τ) = {}", rep.theta)];
    let mut json = json!({ "root_datum": rd.to_string(), "theta": rep.theta, "trivial": rep.theta.is_zero() });
    let mut passed = true;
    if let (Some(n), Some(exps)) = (rd.su_n(), t.su_n_exponents(&rd)) {
        let general = su_n_class_exponent(&rd, &rep.theta)?;
        let closed = su_n_theta_closed_form(n, &exps);
        passed = general == closed;
        let verdict = if passed { "MATCH" } else { "MISMATCH" };
        text.push(format!("SU({n}): Θ(τ) = ζ_{n}^{general}, closed form ∏ τ_i^(-i) = ζ_{n}^{closed}: {verdict}"));
        json["su_n"] = json!({ "n": n, "tau": exps, "general": general, "closed_form": closed, "match": passed });
    }
    Ok(Outcome::new(text.join("\n"), json, passed))
}

pub fn upsilon(root_type: &str, tau: &str) -> Result<Outcome> {
    let (rd, t) = datum_and_tau(root_type, tau)?;
    let rep = run_upsilon(&rd, &t)?;
    let mut text = vec![format!("Υ(τ) for {rd}, antisymmetry of f on the {} basis:", rep.basis)];
    for (i, j, v) in &rep.antisymmetry {
        text.push(format!("  ({i}, {j}): {v}"));
    }
    text.push(format!("coboundary on P: {}", rep.coboundary_on_p));
    text.push(format!("Υ(τ) trivial: {}", rep.trivial));
    Ok(Outcome::new(text.join("\n"), serde_json::to_value(&rep)?, true))
}

pub fn relations(n: usize, tau: Option<&str>, budget: usize, seed: u64) -> Result<Outcome> {
    if !(2..=RELATIONS_MAX_N).contains(&n) {
        bail!("relations are emitted for 2 ≤ n ≤ {RELATIONS_MAX_N}, got {n}");
    }
    let exps = tau.map(parse_exponents).transpose()?;
    let p = emit_presentation(n, exps.as_deref())?;
    let check = check_presentation(n, budget, seed)?;
    let mut head = Vec::new();
    if check.sampled {
        head.push(format!(
            "SAMPLED: {} of {} relations and {} of {} permutations checked (seed {seed})",
            check.relations_checked, check.relations_total, check.permutations_checked, check.permutations_total
        ));
    }
    head.push(match &check.failure {
        None => format!("check: PASS ({} relations, {} permutations)", check.relations_checked, check.permutations_checked),
        Some(f) => format!("check: FAIL {f}"),
    });
    let mut json = p.to_json();
    json["check"] = serde_json::to_value(&check)?;
    let text = format!("{}\n{}", head.join("\n"), p.to_text());
    let latex = format!("% {}\n{}", head.join("\n% "), p.to_latex());
    let mut out = Outcome::new(text, json, check.passed());
    out.latex = Some(latex);
    Ok(out)
}

pub fn qdet_check(n: usize) -> Result<Outcome> {
    let rep = run_qdet(n)?;
    let mut text = vec![format!("twisted quantum determinant, n = {n}")];
    let mut rows = Vec::new();
    for r in &rep.rows {
        text.push(format!(
            "σ = {:?} |σ| = {} m = {:?} shift = {} τ^m·shift = {} {}",
            r.sigma,
            r.inversions,
            r.m,
            r.shift,
            r.product,
            if r.holds { "PASS" } else { "FAIL" }
        ));
        rows.push(json!({
            "sigma": r.sigma,
            "inversions": r.inversions,
            "m": r.m,
            "shift": r.shift.monomials(),
            "holds": r.holds,
        }));
    }
    text.push(format!("sum equals the untwisted determinant: {}", rep.sum_matches));
    let passed = rep.all_hold();
    text.push(if passed { "PASS".into() } else { "FAIL".into() });
    Ok(Outcome::new(text.join("\n"), json!({ "n": n, "rows": rows, "sum_matches": rep.sum_matches, "passed": passed }), passed))
}

pub fn spectrum(n: usize, tau: &str) -> Result<Outcome> {
    let rep = spectrum_report(n, &parse_exponents(tau)?)?;
    Ok(Outcome::new(rep.to_text(), serde_json::to_value(&rep)?, true))
}

fn verdict(name: &str, r: &AxiomResult) -> String {
    match &r.witness {
        None if r.holds => format!("{name}: PASS"),
        w => format!("{name}: FAIL {}", w.clone().unwrap_or_default()),
    }
}

pub fn hopf_check(root_type: &str, q: &str, tau: &str) -> Result<Outcome> {
    let rd = RootDatum::parse(root_type)?;
    let Some(n) = rd.su_n() else { bail!("hopf-check supports type A only, got {rd}") };
    let q = parse_q(q)?;
    let rep = type_a_hopf_suite(n, &q, &parse_exponents(tau)?)?;
    let h = &rep.hopf;
    let text = [
        format!("{rd}, q = {}, τ exponents {:?}", rep.q, rep.tau),
        verdict("algebra map", &h.algebra_map),
        verdict("coassociativity", &h.coassociativity),
        verdict("counit", &h.counit),
        format!("counit forced: {}", if h.counit_forced { "PASS" } else { "FAIL" }),
        verdict("antipode", &h.antipode),
        verdict("f Δ_q f* = Δ̂", &rep.delta_f),
        if rep.all_pass() { "PASS".into() } else { "FAIL".into() },
    ];
    Ok(Outcome::new(text.join("\n"), serde_json::to_value(&rep)?, rep.all_pass()))
}

fn selftest_items() -> Vec<(&'static str, Box<dyn Fn() -> Result<bool>>)> {
    vec![
        ("h3 pairing on Z/2 + Z/4 + Z/2", Box::new(|| Ok(h3("Z/2 + Z/4 + Z/2")?.passed))),
        (
            "classification of a generator product",
            Box::new(|| {
                let g = parse_group("Z/4 + Z/2")?;
                let c = H3Class::from_exponents(&g, [(Generator::Single(0), 3), (Generator::Pair(0, 1), 1)])?;
                Ok(classify_3cocycle(&c.representative())? == c)
            }),
        ),
        (
            "Θ closed form, SU(3)",
            Box::new(|| {
                for a in 0..3 {
                    for b in 0..3 {
                        if !theta("A2", &format!("{a},{b}"))?.passed {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }),
        ),
        ("relations and determinant, n = 3", Box::new(|| Ok(check_presentation(3, 10_000, 0)?.passed()))),
        ("Hopf axioms, A1, τ = -1", Box::new(|| Ok(hopf_check("A1", "2", "1")?.passed))),
        (
            "spectrum, n = 2, τ = -1",
            Box::new(|| {
                let r = spectrum_report(2, &[1])?;
                Ok(r.rows.iter().all(|row| row.stabilizer.order == 2))
            }),
        ),
    ]
}

pub fn selftest() -> Outcome {
    let mut text = Vec::new();
    let mut items = Vec::new();
    let mut passed = true;
    for (name, f) in selftest_items() {
        let (ok, err) = match f() {
            Ok(b) => (b, None),
            Err(e) => (false, Some(format!("{e:#}"))),
        };
        passed &= ok;
        let line = format!("{} {name}{}", if ok { "PASS" } else { "FAIL" }, err.as_ref().map(|e| format!(": {e}")).unwrap_or_default());
        text.push(line);
        items.push(json!({ "name": name, "passed": ok, "error": err }));
    }
    Outcome::new(text.join("\n"), json!({ "checks": items, "passed": passed }), passed)
}
