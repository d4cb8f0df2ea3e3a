use std::time::Instant;

use num_bigint::BigInt;
use serde_json::{json, Value};
use wildforms::apolar::*;
use wildforms::borderdec::{constant_decomposition, construct_tangent_decomposition, BorderDecomposition};
use wildforms::families::{fn_form, fn_point_configuration, gd_form, gd_tangent_data};
use wildforms::groebner::{contains_linear_form, saturation};
use wildforms::interchange::{to_pretty, SCHEMA};
use wildforms::linalg::int;
use wildforms::poly::Form;

use crate::{Options, Outcome};

/// A decomposition of `f` from one of the explicit series, if `f` is literally one of them.
pub fn family_certificate(f: &Form) -> Option<(String, BorderDecomposition)> {
    let n = f.nvars();
    let d = f.degree();
    if n >= 5 && d as usize + 2 == n {
        if let Ok(g) = gd_form(d) {
            if g.poly() == f.poly() {
                let dec = construct_tangent_decomposition(&gd_tangent_data(d).ok()?).ok()?;
                return Some((format!("G{d}"), dec));
            }
        }
    }
    if d == 3 && n >= 5 && (n - 2) % 3 == 0 {
        let k = (n - 2) / 3;
        if fn_form(n - 1).ok()?.poly() == f.poly() {
            let dec = construct_tangent_decomposition(&fn_point_configuration(k, 1, k).ok()?.tangent_data()).ok()?;
            return Some((format!("F{}", n - 1), dec));
        }
    }
    let fermat = Form::parse(&(0..n).map(|i| format!("x{i}^{d}")).collect::<Vec<_>>().join(" + ")).ok()?;
    if fermat.poly() == f.poly() {
        let forms: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect();
        return Some((format!("Fermat({},{d})", n - 1), constant_decomposition(&vec![int(1); n], &forms, d).ok()?));
    }
    None
}

fn mode_name(mode: HessianMode) -> &'static str {
    match mode {
        HessianMode::Exact => "exact",
        HessianMode::Probabilistic { .. } => "probabilistic",
    }
}

pub fn run(label: &str, f: &Form, certify_family: bool, opts: &Options) -> anyhow::Result<Outcome> {
    let start = Instant::now();
    let d = f.degree();
    let cert = if certify_family {
        let (family, dec) =
            family_certificate(f).ok_or_else(|| anyhow::anyhow!("--certify-family: the form is not G_d, F_n or a Fermat form"))?;
        (Some(family), MinimalBorderRankCertificate::Decomposition(dec))
    } else {
        (None, MinimalBorderRankCertificate::AssumedMinimal)
    };
    let hf = hilbert_function(f);
    let cats: Vec<usize> = (0..=d).map(|k| catalecticant(f, k).rank()).collect();
    let hessian = hessian_vanishes(f, opts.mode)?;
    let (slp, table) = has_slp(f, opts.mode);
    let trunc = opts.degree_bound.unwrap_or(d.saturating_sub(1)).max(1);
    let sat = saturation(&annihilator_generators(f).truncate(trunc));
    let linear = contains_linear_form(&sat);
    let length = sat.length_and_regularity().map(|(len, _)| len);
    let verdict = classify_wild(f, &cert.1, opts.mode)?;
    let elapsed = start.elapsed();

    let outcome = match verdict.verdict {
        Verdict::NotApplicable(_) => Outcome::NotApplicable,
        _ => Outcome::Done,
    };
    if opts.json {
        let report = json!({
            "schema": SCHEMA,
            "kind": "analysis",
            "input": {"label": label, "form": f.to_string(), "nvars": f.nvars(), "degree": d},
            "concise": verdict.concise,
            "hilbert_function": hf,
            "catalecticant_ranks": cats,
            "rank_lower_bound": verdict.rank_lower_bound,
            "hessian": {"mode": mode_name(opts.mode), "seed": opts.seed, "status": serde_json::to_value(&hessian)?},
            "lefschetz": {
                "slp": slp,
                "higher_hessians": table.iter().map(|(k, s)| json!({"k": k, "status": serde_json::to_value(s).unwrap_or(Value::Null)})).collect::<Vec<_>>(),
            },
            "saturation": {
                "truncation_degree": trunc,
                "generators": sat.generators().iter().map(|g| g.display_with(f.vars())).collect::<Vec<_>>(),
                "contains_linear_form": linear,
                "length": length,
            },
            "wildness": {
                "verdict": verdict.verdict.to_string(),
                "certificate": verdict.certificate,
                "family": cert.0,
                "consequences": verdict.consequences,
            },
        });
        print!("{}", to_pretty(&report));
        return Ok(outcome);
    }
    println!("form: {f}");
    println!("input: {label}");
    println!("variables: {}, degree: {d}", f.nvars());
    println!("concise: {}", verdict.concise);
    println!("hilbert function: {hf:?}");
    println!("catalecticant ranks: {cats:?}");
    println!("rank lower bound: {}", verdict.rank_lower_bound);
    let bound = if hessian.exact { String::from("exact") } else { format!("failure probability <= {:.3e}, seed {}", hessian.failure_bound, opts.seed) };
    println!("hessian: {} ({bound})", if hessian.vanishes { "vanishes" } else { "nonzero" });
    for (k, s) in &table {
        println!("  hess^{k}: {}", if s.vanishes { "vanishes" } else { "nonzero" });
    }
    println!("strong lefschetz: {slp}");
    println!("saturation of Ann(F)<={trunc}: {}", sat.display_with(f.vars()));
    println!("  contains a linear form: {linear}");
    if let Some(len) = length {
        println!("  length: {len}");
    }
    println!("verdict: {}", verdict.verdict);
    if !verdict.certificate.is_empty() {
        println!("certificate: {}", verdict.certificate);
    }
    for c in &verdict.consequences {
        println!("  {c}");
    }
    println!("time: {:.1} ms", elapsed.as_secs_f64() * 1e3);
    Ok(outcome)
}
