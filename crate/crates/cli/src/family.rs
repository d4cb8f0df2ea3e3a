use anyhow::{bail, Context};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::json;
use wildforms::apolar::{annihilator_generators, rank_lower_bound};
use wildforms::borderdec::{construct_tangent_decomposition, limiting_scheme_ideal, verify_border_decomposition, BorderDecomposition};
use wildforms::families::{chain_ideal, fn_form, fn_point_configuration, gd_form, gd_tangent_data, gd_vsp_check};
use wildforms::groebner::{ideal_of_points, saturation};
use wildforms::interchange::{decomposition_to_json, form_to_json, to_pretty, SCHEMA};
use wildforms::linalg::{format_scalar, int, Scalar};
use wildforms::poly::{dim_degree, parse_dual, Form, Polynomial};

use crate::{Options, Outcome};

/// Largest degree piece the limit computation is allowed to touch without an explicit bound.
const MAX_LIMIT_MONOMIALS: usize = 50_000;

pub enum Kind {
    Gd(u32),
    /// `n` and an optional pair of lines.
    Fn(usize, Option<(usize, usize)>),
}

fn form(kind: &Kind) -> anyhow::Result<Form> {
    Ok(match kind {
        Kind::Gd(d) => gd_form(*d)?,
        Kind::Fn(n, _) => fn_form(*n)?,
    })
}

fn decomposition(kind: &Kind) -> anyhow::Result<BorderDecomposition> {
    match kind {
        Kind::Gd(d) => Ok(construct_tangent_decomposition(&gd_tangent_data(*d)?)?),
        Kind::Fn(n, pair) => {
            fn_form(*n)?;
            let k = (n - 1) / 3;
            let (a, b) = pair.unwrap_or((1, k));
            let conf = fn_point_configuration(k, a, b)?;
            construct_tangent_decomposition(&conf.tangent_data()).with_context(|| format!("configuration with lines ({a},{b})"))
        }
    }
}

pub fn emit(kind: &Kind, opts: &Options) -> anyhow::Result<Outcome> {
    let f = form(kind)?;
    if opts.json {
        print!("{}", to_pretty(&form_to_json(&f)));
    } else {
        println!("{f}");
    }
    Ok(Outcome::Done)
}

pub fn decompose(kind: &Kind) -> anyhow::Result<Outcome> {
    let f = form(kind)?;
    let dec = decomposition(kind)?;
    print!("{}", to_pretty(&decomposition_to_json(&dec, f.vars())));
    Ok(Outcome::Done)
}

pub fn verify(kind: &Kind, opts: &Options) -> anyhow::Result<Outcome> {
    let f = form(kind)?;
    let dec = decomposition(kind)?;
    let rep = verify_border_decomposition(&dec, &f)?;
    if !rep.ok {
        bail!("the decomposition fails at t^{}", rep.failing_order.unwrap_or(0));
    }
    let lb = rank_lower_bound(&f);
    if opts.degree_bound.is_none() {
        let bound = dec.len() as u32 + 1;
        let size = dim_degree(f.nvars(), bound);
        if size > MAX_LIMIT_MONOMIALS {
            bail!("the default degree bound {bound} needs {size} monomials in degree {bound}; pass --degree-bound (4 is enough for F10 and F13)");
        }
    }
    let scheme = limiting_scheme_ideal(&dec, Some(&f), opts.degree_bound)?;
    let on_chain = match kind {
        Kind::Fn(n, _) => Some(scheme.saturated.contains_ideal(&chain_ideal((n - 1) / 3))),
        Kind::Gd(_) => None,
    };
    if opts.json {
        let out = json!({
            "schema": SCHEMA,
            "kind": "verification",
            "form": f.to_string(),
            "verified": rep.ok,
            "summands": dec.len(),
            "rank_lower_bound": lb,
            "limit": {
                "degree_bound": scheme.limit.bound,
                "hilbert_function": scheme.limit.hf,
                "length": scheme.length,
                "reduced": scheme.reduced,
                "support_size": scheme.support.len(),
                "contained_in_ann": scheme.contained_in_ann,
                "on_chain": on_chain,
                "saturated_generators": scheme.saturated.generators().iter().map(|g| g.display_with(f.vars())).collect::<Vec<_>>(),
            },
        });
        print!("{}", to_pretty(&out));
    } else {
        println!("form: {f}");
        println!("decomposition verifies: {} ({} summands, rank lower bound {lb})", rep.ok, dec.len());
        println!("limit ideal HF up to degree {}: {:?}", scheme.limit.bound, scheme.limit.hf);
        match scheme.length {
            Some(len) => println!("limiting scheme: length {len}, {} support points, reduced {}", scheme.support.len(), scheme.reduced),
            None => println!("limiting scheme: not zero-dimensional within the degree bound"),
        }
        if let Some(c) = scheme.contained_in_ann {
            println!("limit ideal contained in Ann(F): {c}");
        }
        if let Some(c) = on_chain {
            println!("supported on the chain of lines: {c}");
        }
        println!("saturated ideal: {}", scheme.saturated.display_with(f.vars()));
    }
    Ok(Outcome::Done)
}

/// Coefficients `c_i` of `U0^i U1^{D-i}`, cleared of denominators.
fn binary_coefficients(q: &Polynomial, degree: usize) -> Vec<BigInt> {
    let n = q.nvars();
    let mut c = vec![Scalar::zero(); degree + 1];
    for (m, x) in q.terms() {
        c[m.exps()[n - 2] as usize] = x.clone();
    }
    let lcm = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    c.iter().map(|x| (x * Scalar::from_integer(lcm.clone())).to_integer()).collect()
}

fn divisors(x: &BigInt) -> Option<Vec<i64>> {
    let x = x.abs().to_i64()?;
    if x > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= x {
        if x % i == 0 {
            out.push(i);
            out.push(x / i);
        }
        i += 1;
    }
    Some(out)
}

fn eval(c: &[BigInt], x: &Scalar) -> Scalar {
    c.iter().rev().fold(Scalar::zero(), |acc, ci| acc * x + Scalar::from_integer(ci.clone()))
}

/// The `D` distinct projective zeros `(α : β)` of the binary form, when they are all rational and simple.
fn rational_roots(c: &[BigInt]) -> Option<Vec<(Scalar, Scalar)>> {
    let big_d = c.len() - 1;
    let top = c.iter().rposition(|x| !x.is_zero())?;
    let mut roots = Vec::new();
    match big_d - top {
        0 => {}
        1 => roots.push((int(1), int(0))),
        _ => return None,
    }
    let low = c.iter().position(|x| !x.is_zero())?;
    if low > 1 {
        return None;
    }
    if low == 1 {
        roots.push((int(0), int(1)));
    }
    let deriv: Vec<BigInt> = c.iter().enumerate().skip(1).map(|(i, x)| x * BigInt::from(i)).collect();
    for r in divisors(&c[low])? {
        for s in divisors(&c[top])? {
            for sign in [1, -1] {
                let x = Scalar::new(BigInt::from(sign * r), BigInt::from(s));
                if eval(c, &x).is_zero() && !roots.iter().any(|(a, b)| *b == int(1) && *a == x) {
                    if eval(&deriv, &x).is_zero() {
                        return None;
                    }
                    roots.push((x, int(1)));
                }
            }
        }
    }
    (roots.len() == big_d).then_some(roots)
}

pub fn vsp_check(d: u32, q: Option<&str>, opts: &Options) -> anyhow::Result<Outcome> {
    let q_text = q.context("vsp-check needs --q")?;
    let g = gd_form(d)?;
    let q = parse_dual(q_text, g.vars())?;
    let check = gd_vsp_check(d, &q)?;
    let contained = annihilator_generators(&g).contains_ideal(&check.ideal);
    let n = g.nvars();
    let oracle = rational_roots(&binary_coefficients(&q, d as usize + 2)).map(|roots| {
        let points: Vec<Vec<Scalar>> = roots
            .iter()
            .map(|(a, b)| {
                let mut p = vec![int(0); n];
                p[n - 2] = a.clone();
                p[n - 1] = b.clone();
                p
            })
            .collect();
        let matches = ideal_of_points(&points).is_ok_and(|pts| saturation(&check.ideal).same_ideal(&pts));
        (points, matches)
    });
    let all_good = check.generic && check.persistence && contained && oracle.as_ref().is_none_or(|(_, m)| *m);
    if opts.json {
        let out = json!({
            "schema": SCHEMA,
            "kind": "vsp_check",
            "d": d,
            "q": q.display_with(g.vars()),
            "hilbert_function": check.hf,
            "expected": check.expected,
            "generic": check.generic,
            "persistence": check.persistence,
            "contained_in_ann": contained,
            "points_oracle": oracle.as_ref().map(|(pts, m)| json!({
                "points": pts.iter().map(|p| p.iter().map(format_scalar).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "saturation_matches": m,
            })),
        });
        print!("{}", to_pretty(&out));
    } else {
        println!("J = Ann(G{d})<={} + <{}>", d - 1, q.display_with(g.vars()));
        println!("HF(T/J): {:?}", check.hf);
        println!("generic HF of {} points: {:?}", d + 2, check.expected);
        println!("generic: {}, persistence: {}", check.generic, check.persistence);
        println!("J contained in Ann(G{d}): {contained}");
        match &oracle {
            Some((pts, m)) => println!("q has {} distinct rational roots; saturation equals their ideal: {m}", pts.len()),
            None => println!("q has repeated or irrational roots; no points oracle"),
        }
    }
    if !all_good {
        bail!("vsp-check found a discrepancy");
    }
    Ok(Outcome::Done)
}
