use anyhow::{bail, Context};
use num_traits::Zero;
use serde_json::json;
use wildforms::algebra::*;
use wildforms::interchange::{algebra_to_json, tensor_to_json, to_pretty, SCHEMA};
use wildforms::linalg::{determinant, format_scalar, int, Scalar};
use wildforms::random::{rng, small_point};

use crate::input::{parse_vector, AlgebraSource};
use crate::{Options, Outcome};

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

/// `v` as a combination of the labelled basis.
fn combination(v: &[Scalar], labels: &[String]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(labels)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| if *c == int(1) { l.clone() } else { format!("{}*{l}", format_scalar(c)) })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn gorenstein(source: &AlgebraSource, opts: &Options) -> anyhow::Result<Outcome> {
    let a = match source {
        AlgebraSource::Algebra(a) => a.clone(),
        AlgebraSource::Form(f) => apolar_algebra(f),
        AlgebraSource::Tensor(_) => bail!("gorenstein needs an algebra or a form, not a tensor"),
    };
    // the all-ones functional first, so simple inputs get a simple witness
    let witness = GorensteinWitness::new(&a, vec![int(1); a.dim()]).ok().or_else(|| is_gorenstein(&a));
    let rad = radical(&a);
    let socle_dim = if rad.len() + 1 == a.dim() { Some(socle(&a, &rad)?.len()) } else { None };
    if opts.json {
        let out = json!({
            "schema": SCHEMA,
            "kind": "gorenstein",
            "dimension": a.dim(),
            "gorenstein": witness.is_some(),
            "witness": witness.as_ref().map(|w| strings(&w.functional)),
            "local": socle_dim.is_some(),
            "socle_dimension": socle_dim,
        });
        print!("{}", to_pretty(&out));
    } else {
        println!("dimension: {}", a.dim());
        match &witness {
            Some(w) => println!("Gorenstein, witness = {}", format_functional(&w.functional)),
            None => println!("not Gorenstein"),
        }
        if let Some(s) = socle_dim {
            println!("local, socle dimension {s}");
        }
    }
    Ok(Outcome::Done)
}

pub fn tensor(source: &AlgebraSource, d: Option<usize>) -> anyhow::Result<Outcome> {
    let t = match source {
        AlgebraSource::Algebra(a) => {
            let d = d.unwrap_or(3);
            if d < 3 {
                bail!("a structure tensor needs at least 3 slots");
            }
            structure_tensor(a, d)
        }
        AlgebraSource::Form(f) => {
            if d.is_some_and(|d| d != f.degree() as usize) {
                bail!("the tensor of a form of degree {} has {} slots", f.degree(), f.degree());
            }
            form_tensor(f)
        }
        AlgebraSource::Tensor(_) => bail!("the input already is a tensor"),
    };
    print!("{}", to_pretty(&tensor_to_json(&t)));
    Ok(Outcome::Done)
}

/// A linear form whose contraction of the tensor is invertible: coordinate vectors, then seeded random ones.
fn find_witness(t: &Tensor, seed: u64) -> Option<Vec<Scalar>> {
    let n = t.dim();
    let works = |l: &Vec<Scalar>| determinant(&t.contract_leading(&vec![l.clone(); t.ways() - 2])).is_some_and(|x| !x.is_zero());
    let coords = (0..n).map(|i| (0..n).map(|j| int((i == j) as i64)).collect::<Vec<_>>());
    let mut r = rng(seed);
    let random: Vec<Vec<Scalar>> = (0..wildforms::algebra::reconstruct::RANDOM_WITNESS_TRIES).map(|_| small_point(&mut r, n, 10)).collect();
    coords.chain(random).find(works)
}

pub fn from_tensor(source: &AlgebraSource, witness: Option<&str>, opts: &Options) -> anyhow::Result<Outcome> {
    let (t, default) = match source {
        AlgebraSource::Tensor(t) => (t.clone(), None),
        AlgebraSource::Form(f) => (form_tensor(f), hessian_witness(f)),
        AlgebraSource::Algebra(_) => bail!("from-tensor needs a tensor or a form"),
    };
    if t.ways() < 3 {
        bail!("the tensor needs at least 3 slots");
    }
    let l = match witness {
        Some(text) => parse_vector(text)?,
        None => default.or_else(|| find_witness(&t, opts.seed)).context("no linear form with an invertible contraction (the Hessian vanishes)")?,
    };
    let rec = algebra_from_tensor(&t, &l)?;
    if opts.json {
        let out = json!({
            "schema": SCHEMA,
            "kind": "reconstruction",
            "linear_form": strings(&l),
            "algebra": algebra_to_json(&rec.algebra),
            "functional": strings(&rec.witness.functional),
            "checks": serde_json::to_value(&rec.report.checks)?,
        });
        print!("{}", to_pretty(&out));
    } else {
        println!("linear form: [{}]", strings(&l).join(", "));
        println!("algebra of dimension {}", rec.algebra.dim());
        println!("{}", rec.report.summary());
        println!("functional: {}", format_functional(&rec.witness.functional));
        let a = &rec.algebra;
        let labels = a.labels();
        for i in 1..a.dim() {
            for j in i..a.dim() {
                let p = a.mul(&a.basis_vector(i), &a.basis_vector(j));
                println!("  {} * {} = {}", labels[i], labels[j], combination(&p, labels));
            }
        }
    }
    Ok(Outcome::Done)
}
