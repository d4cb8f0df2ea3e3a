use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;
use wildforms::algebra::hessian_witness;
use wildforms::apolar::*;
use wildforms::borderdec::{constant_decomposition, construct_tangent_decomposition};
use wildforms::families::{gd_form, gd_tangent_data, named_example};
use wildforms::groebner::GradedIdeal;
use wildforms::linalg::int;
use wildforms::poly::*;
use wildforms::random::{rng, small_point};

const SEED: u64 = 11;

fn prob() -> HessianMode {
    HessianMode::Probabilistic { seed: SEED }
}

fn dual(text: &str, n: usize) -> Polynomial {
    parse_dual(text, &VariableSet::standard(n)).unwrap()
}

#[test]
fn catalecticant_ranks() {
    let fermat = Form::parse("x0^3 + x1^3").unwrap();
    assert_eq!(catalecticant(&fermat, 1).rank(), 2);
    assert_eq!(catalecticant(&named_example("H5").unwrap(), 2).rank(), 7);
    for name in ["H5", "Ikeda", "Cusp", "G4"] {
        assert_eq!(catalecticant(&named_example(name).unwrap(), 0).rank(), 1);
    }
}

#[test]
fn annihilator_components() {
    let f = Form::parse("x0^2*x1").unwrap();
    assert_eq!(annihilator_component(&f, 2), vec![dual("y1^2", 2)]);
    assert_eq!(annihilator_component(&f, 4).len(), 5);
    assert!(annihilator_component(&gd_form(3).unwrap(), 1).is_empty());
}

#[test]
fn annihilator_ideals() {
    let fermat = annihilator_generators(&Form::parse("x0^3 + x1^3").unwrap());
    let expected = GradedIdeal::new(2, vec![dual("y0*y1", 2), dual("y0^3 - y1^3", 2)]).unwrap();
    assert!(fermat.same_ideal(&expected));
    let jet = annihilator_generators(&Form::parse("x0^2*x1").unwrap());
    let expected = GradedIdeal::new(2, vec![dual("y1^2", 2), dual("y0^3", 2)]).unwrap();
    assert!(jet.same_ideal(&expected));
    for d in 3..=5 {
        let g = gd_form(d).unwrap();
        let cats: Vec<usize> = (0..=d).map(|i| catalecticant(&g, i).rank()).collect();
        assert_eq!(annihilator_generators(&g).hf_table(d), cats);
    }
}

#[test]
fn hilbert_tables() {
    let cases: [(&str, &[usize]); 4] = [
        ("H5", &[1, 5, 7, 7, 5, 1]),
        ("Ikeda", &[1, 4, 10, 10, 4, 1]),
        ("L5", &[1, 4, 7, 7, 4, 1]),
        ("NonMinimal4", &[1, 5, 6, 5, 1]),
    ];
    for (name, hf) in cases {
        assert_eq!(hilbert_function(&named_example(name).unwrap()), hf, "{name}");
    }
}

#[test]
fn conciseness() {
    for d in 3..=6 {
        assert!(is_concise(&gd_form(d).unwrap()));
    }
    let jet = Form::parse_with("x0^2*x1", &VariableSet::standard(3)).unwrap();
    assert!(!is_concise(&jet));
    assert!(is_concise(&named_example("NonMinimal4").unwrap()));
}

#[test]
fn hessians() {
    for d in 3..=6 {
        assert!(hessian_vanishes(&gd_form(d).unwrap(), prob()).unwrap().vanishes);
    }
    let fermat = Form::parse("x0^3 + x1^3 + x2^3").unwrap();
    let s = hessian_vanishes(&fermat, HessianMode::Exact).unwrap();
    assert!(!s.vanishes);
    // diagonal Hessian: 6^3 x0 x1 x2
    assert_eq!(s.determinant, Some(parse_poly("216*x0*x1*x2", fermat.vars()).unwrap()));
    let ikeda = named_example("Ikeda").unwrap();
    assert!(!hessian_vanishes(&ikeda, prob()).unwrap().vanishes);
    assert!(higher_hessian_vanishes(&ikeda, 2, prob()).unwrap().vanishes);
    assert!(!higher_hessian_vanishes(&fermat, 1, HessianMode::Exact).unwrap().vanishes);
    assert_eq!(higher_hessian_vanishes(&ikeda, 1, prob()).unwrap().vanishes, hessian_vanishes(&ikeda, prob()).unwrap().vanishes);
}

#[test]
fn lefschetz() {
    assert!(has_slp(&Form::parse("x0^3 + x1^3 + x2^3").unwrap(), HessianMode::Exact).0);
    let (ok, table) = has_slp(&named_example("Ikeda").unwrap(), prob());
    assert!(!ok);
    assert!(!table[0].1.vanishes && table[1].1.vanishes);
    let (ok, table) = has_slp(&gd_form(4).unwrap(), prob());
    assert!(!ok && table[0].0 == 1 && table[0].1.vanishes);
}

#[test]
fn rank_bounds() {
    assert_eq!(rank_lower_bound(&named_example("H5").unwrap()), 7);
    assert_eq!(rank_lower_bound(&named_example("NonMinimal4").unwrap()), 6);
    assert_eq!(rank_lower_bound(&named_example("Ikeda").unwrap()), 10);
}

#[test]
fn independence() {
    let vars = |n| (0..n).map(|i| Polynomial::var(Ring::Primal, n, i)).collect::<Vec<_>>();
    assert!(algebraically_independent(&vars(3), SEED));
    let x0 = Polynomial::var(Ring::Primal, 1, 0);
    assert!(!algebraically_independent(&[x0.clone(), x0.pow(2)], SEED));
    let g = gd_form(4).unwrap();
    let dv: Vec<Polynomial> = (0..4).map(|i| g.poly().derivative(i)).collect();
    assert!(!algebraically_independent(&dv, SEED));
}

#[test]
fn wildness_examples() {
    let g = gd_form(3).unwrap();
    let dec = construct_tangent_decomposition(&gd_tangent_data(3).unwrap()).unwrap();
    let v = classify_wild(&g, &MinimalBorderRankCertificate::Decomposition(dec), prob()).unwrap();
    assert_eq!(v.verdict, Verdict::Wild);
    let fermat = Form::parse("x0^3 + x1^3 + x2^3").unwrap();
    let forms: Vec<Vec<BigInt>> = (0..3).map(|i| (0..3).map(|j| BigInt::from((i == j) as i64)).collect()).collect();
    let dec = constant_decomposition(&[int(1), int(1), int(1)], &forms, 3).unwrap();
    let v = classify_wild(&fermat, &MinimalBorderRankCertificate::Decomposition(dec), prob()).unwrap();
    assert_eq!(v.verdict, Verdict::NotWild);
    let nm = named_example("NonMinimal4").unwrap();
    let v = classify_wild(&nm, &MinimalBorderRankCertificate::AssumedMinimal, prob()).unwrap();
    assert_eq!(v.verdict, Verdict::NotApplicable(NotApplicableReason::NonMinimalBorderRank));
}

fn corpus() -> Vec<Form> {
    let mut names: Vec<String> =
        ["H5", "Ikeda", "L5", "NonMinimal4", "NonWildVH", "Jet", "ConicTangent", "Cusp", "Fermat", "F4", "F7"].map(String::from).to_vec();
    names.extend((3..=5).map(|d| format!("G{d}")));
    names.extend((1..=3).map(|n| format!("Fermat({n},3)")));
    names.iter().map(|n| named_example(n).unwrap()).collect()
}

fn random_concise_cubic(r: &mut rand_chacha::ChaCha8Rng) -> Form {
    loop {
        let n = r.gen_range(2..=5);
        let basis = monomial_basis(n, 3, None);
        let cs = small_point(r, basis.len(), 2);
        let p = Polynomial::from_terms(Ring::Primal, n, basis.into_iter().zip(cs).collect());
        if let Ok(f) = Form::new(p, VariableSet::standard(n)) {
            if is_concise(&f) {
                return f;
            }
        }
    }
}

#[test]
fn witness_exists_iff_hessian_is_nonzero() {
    let mut r = rng(SEED);
    let mut forms = corpus();
    forms.extend((0..50).map(|_| random_concise_cubic(&mut r)));
    for f in forms {
        let vanishes = hessian_vanishes(&f, HessianMode::Exact).unwrap().vanishes;
        assert_eq!(hessian_witness(&f).is_none(), vanishes, "{f}");
    }
}

#[test]
fn annihilator_generators_kill_the_form() {
    for f in corpus() {
        let ann = annihilator_generators(&f);
        for g in ann.generators() {
            assert!(apply_dual(g, f.poly()).unwrap().is_zero(), "{f}");
        }
        let d = f.degree();
        let cats: Vec<usize> = (0..=d + 1).map(|k| if k <= d { catalecticant(&f, k).rank() } else { 0 }).collect();
        assert_eq!(ann.hf_table(d + 1), cats, "{f}");
    }
}

#[test]
fn jacobian_criterion() {
    let mut r = rng(SEED + 1);
    let mut forms = corpus();
    forms.extend((0..10).map(|_| random_concise_cubic(&mut r)));
    for f in forms.into_iter().filter(|f| f.nvars() <= 6) {
        let partials: Vec<Polynomial> = (0..f.nvars()).map(|i| f.poly().derivative(i)).collect();
        let vanishes = hessian_vanishes(&f, HessianMode::Exact).unwrap().vanishes;
        assert_eq!(algebraically_independent(&partials, SEED), !vanishes, "{f}");
    }
}

/// Random forms of degree 2..=5 in two to four variables.
fn random_form() -> impl Strategy<Value = Form> {
    (2usize..=4, 2u32..=5)
        .prop_flat_map(|(n, d)| {
            let basis = monomial_basis(n, d, None);
            prop::collection::vec(-2i64..=2, basis.len()).prop_map(move |cs| {
                Polynomial::from_terms(Ring::Primal, n, basis.iter().cloned().zip(cs.into_iter().map(int)).collect())
            })
        })
        .prop_filter_map("nonzero", |p| {
            let n = p.nvars();
            Form::new(p, VariableSet::standard(n)).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn hilbert_function_is_symmetric(f in random_form()) {
        let hf = hilbert_function(&f);
        let d = f.degree() as usize;
        for k in 0..=d {
            prop_assert_eq!(hf[k], hf[d - k]);
        }
        prop_assert_eq!(is_concise(&f), hf[1] == f.nvars());
    }
}
