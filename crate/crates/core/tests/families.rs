use proptest::prelude::*;
use wildforms::apolar::*;
use wildforms::borderdec::{construct_tangent_decomposition, verify_border_decomposition};
use wildforms::families::*;
use wildforms::groebner::{contains_linear_form, ideal_of_points, is_saturated, saturation, GradedIdeal};
use wildforms::linalg::{int, Scalar};
use wildforms::poly::{parse_dual, Form, Polynomial, Ring, VariableSet};
use wildforms::Error;

const SEED: u64 = 23;

fn prob() -> HessianMode {
    HessianMode::Probabilistic { seed: SEED }
}

/// The dual linear form `a U0 + b U1` in the variables of `G_d`.
fn u_linear(d: u32, a: i64, b: i64) -> Polynomial {
    let n = d as usize + 2;
    let mut c = vec![int(0); n];
    c[n - 2] = int(a);
    c[n - 1] = int(b);
    Polynomial::linear(Ring::Dual, &c)
}

/// `Π_j (β_j U0 - α_j U1)`, vanishing at the points `α_j u0 + β_j u1`.
fn q_with_roots(d: u32, roots: &[(i64, i64)]) -> Polynomial {
    roots.iter().fold(Polynomial::one(Ring::Dual, d as usize + 2), |acc, &(a, b)| acc.mul(&u_linear(d, b, -a)))
}

#[test]
fn gd_forms() {
    let g3 = gd_form(3).unwrap();
    assert_eq!(g3.poly(), Form::parse_with("v0*u1^2 + v1*u0*u1 + v2*u0^2", &VariableSet::aliased(3, 2)).unwrap().poly());
    assert_eq!(g3.to_string(), "v2*u0^2 + v1*u0*u1 + v0*u1^2");
    assert_eq!(gd_form(3).unwrap().nvars(), 5);
    for d in 3..=6 {
        let g = gd_form(d).unwrap();
        assert_eq!(g.nvars(), d as usize + 2);
        assert!(is_concise(&g));
        assert!(hessian_vanishes(&g, prob()).unwrap().vanishes);
    }
    assert!(matches!(gd_form(2), Err(Error::DegreeTooSmall { .. })));
}

#[test]
fn fn_forms() {
    assert_eq!(fn_form(4).unwrap().poly(), Form::parse("x0*x1^2 + x1*x2*x4 + x3*x4^2").unwrap().poly());
    assert_eq!(fn_form(7).unwrap().poly(), Form::parse("x0*x1^2 + x1*x2*x4 + x3*x4^2 + x4*x5*x7 + x6*x7^2").unwrap().poly());
    assert_eq!(hilbert_function(&fn_form(4).unwrap()), [1, 5, 5, 1]);
    assert_eq!(named_example("Perazzo").unwrap().poly(), fn_form(4).unwrap().poly());
    for n in [5, 6, 8, 1] {
        assert!(matches!(fn_form(n), Err(Error::BadIndex(_))), "n = {n}");
    }
}

#[test]
fn chains() {
    let vs = VariableSet::standard(5);
    let line = GradedIdeal::new(5, ["y0", "y2", "y3"].iter().map(|g| parse_dual(g, &vs).unwrap()).collect()).unwrap();
    assert!(chain_ideal(1).same_ideal(&line));
    for k in 1..=4 {
        let c = chain_ideal(k);
        assert!(is_saturated(&c));
        let lines = chain_lines(k);
        assert_eq!(lines.len(), k);
        // consecutive lines share a point, others are disjoint
        for i in 0..k {
            for j in i + 1..k {
                let (a, b) = (lines[i], lines[j]);
                let shared = [a.0, a.1].iter().filter(|x| [b.0, b.1].contains(x)).count();
                assert_eq!(shared, (j == i + 1) as usize, "k = {k}");
            }
        }
    }
    for n in [4usize, 7, 10] {
        let i = annihilator_generators(&fn_form(n).unwrap()).truncate(2);
        assert!(saturation(&i).same_ideal(&chain_ideal((n - 1) / 3)));
    }
}

#[test]
fn vsp_with_distinct_roots() {
    let d = 3;
    for roots in [[(1, 0), (1, 1), (1, 2), (1, 3), (1, 4)], [(0, 1), (1, -1), (2, 1), (1, 5), (3, -2)]] {
        let j = gd_vsp_ideal(d, &q_with_roots(d, &roots)).unwrap();
        let points: Vec<Vec<Scalar>> = roots.iter().map(|&(a, b)| vec![int(0), int(0), int(0), int(a), int(b)]).collect();
        assert!(saturation(&j).same_ideal(&ideal_of_points(&points).unwrap()), "{roots:?}");
    }
}

#[test]
fn vsp_with_a_pure_power() {
    for d in 3..=4 {
        let q = u_linear(d, 1, 0).pow(d + 2);
        let c = gd_vsp_check(d, &q).unwrap();
        for k in d..=d + 3 {
            assert_eq!(c.hf[k as usize], d as usize + 2, "d = {d}, k = {k}");
        }
        assert!(c.generic && c.persistence);
    }
    let vs = VariableSet::aliased(3, 2);
    assert!(matches!(gd_vsp_ideal(3, &parse_dual("y0^5", &vs).unwrap()), Err(Error::BadQ(_))));
    assert!(matches!(gd_vsp_ideal(3, &Polynomial::zero(Ring::Dual, 5)), Err(Error::BadQ(_))));
}

#[test]
fn configurations() {
    let c = fn_point_configuration(1, 1, 1).unwrap();
    assert_eq!(c.points.len(), 5);
    let c = fn_point_configuration(2, 1, 2).unwrap();
    assert_eq!(c.points.len(), 8);
    let one = fn_point_configuration(4, 1, 2).unwrap();
    let other = fn_point_configuration(4, 1, 3).unwrap();
    assert_eq!((one.points.len(), other.points.len()), (14, 14));
    assert_ne!(one.points, other.points);
    for (k, a, b) in [(2, 2, 1), (3, 1, 1), (3, 0, 2), (3, 2, 4), (1, 1, 2)] {
        assert!(matches!(fn_point_configuration(k, a, b), Err(Error::BadPair { .. })), "{k} {a} {b}");
    }
}

fn cube(p: &[Scalar]) -> Polynomial {
    Polynomial::linear(Ring::Primal, p).pow(3)
}

#[test]
fn configuration_invariants() {
    let mut all = Vec::new();
    for k in 1..=4 {
        all.push(fn_point_configuration(k, 1, k).unwrap());
        for a in 1..=k {
            for b in a + 1..=k {
                all.push(fn_point_configuration(k, a, b).unwrap());
            }
        }
    }
    for c in all {
        let nv = c.nvars();
        let f = fn_form(3 * c.k + 1).unwrap();
        assert_eq!(c.points.len(), 3 * c.k + 2);
        // the relation holds, is nontrivial, and the tangents reproduce F_n
        let sum = c.points.iter().zip(&c.relation).fold(Polynomial::zero(Ring::Primal, nv), |acc, (p, l)| acc.add(&cube(&p.form).scale(l)));
        assert!(sum.is_zero(), "{} {} {}", c.k, c.a, c.b);
        assert!(c.relation.iter().any(|l| *l != int(0)));
        assert_eq!(c.tangent_data().target(), *f.poly());
        for (i, p) in c.points.iter().enumerate() {
            for q in &c.points[i + 1..] {
                assert_ne!(p.form, q.form);
            }
            let h = p.component;
            for v in [3 * h - 2, 3 * h + 1] {
                let mut e = vec![int(0); nv];
                e[v] = int(1);
                assert_ne!(cube(&p.form), cube(&e));
            }
        }
    }
}

#[test]
fn families_are_wild() {
    for d in 3..=5 {
        let dec = construct_tangent_decomposition(&gd_tangent_data(d).unwrap()).unwrap();
        let g = gd_form(d).unwrap();
        assert!(verify_border_decomposition(&dec, &g).unwrap().ok);
        let v = classify_wild(&g, &MinimalBorderRankCertificate::Decomposition(dec), prob()).unwrap();
        assert_eq!(v.verdict, Verdict::Wild, "G{d}");
    }
    for k in 1..=3 {
        let n = 3 * k + 1;
        let dec = construct_tangent_decomposition(&fn_point_configuration(k, 1, k).unwrap().tangent_data()).unwrap();
        let v = classify_wild(&fn_form(n).unwrap(), &MinimalBorderRankCertificate::Decomposition(dec), prob()).unwrap();
        assert_eq!(v.verdict, Verdict::Wild, "F{n}");
    }
}

#[test]
fn wild_forms_have_degenerate_saturations() {
    let mut forms: Vec<Form> = (3..=5).map(|d| gd_form(d).unwrap()).collect();
    forms.extend([4, 7, 10].map(|n| fn_form(n).unwrap()));
    forms.push(named_example("H5").unwrap());
    for f in forms {
        let i = annihilator_generators(&f).truncate(f.degree() - 1);
        assert!(contains_linear_form(&saturation(&i)), "{f}");
    }
}

#[test]
fn catalog() {
    assert_eq!(hilbert_function(&named_example("H5").unwrap()), [1, 5, 7, 7, 5, 1]);
    let vh = named_example("NonWildVH").unwrap();
    assert!(hessian_vanishes(&vh, HessianMode::Exact).unwrap().vanishes);
    assert_eq!(rank_lower_bound(&vh), 6);
    let cusp = named_example("Cusp").unwrap();
    let i = annihilator_generators(&cusp).truncate(2);
    assert!(is_saturated(&i));
    assert_eq!(i.length_and_regularity().map(|(len, _)| len), Some(3));
    assert!(matches!(named_example("nope"), Err(Error::UnknownName(_))));
    for name in catalog_names().iter().filter(|n| !n.contains('<') && !n.contains("(n")) {
        assert!(named_example(name).is_ok(), "{name}");
    }
}

/// A random nonzero binary form of degree `d + 2` in the dual u-variables.
fn random_q(d: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-3i64..=3, d as usize + 3).prop_filter_map("nonzero", move |cs| {
        let q = cs.iter().enumerate().fold(Polynomial::zero(Ring::Dual, d as usize + 2), |acc, (i, &c)| {
            acc.add(&u_linear(d, 1, 0).pow(i as u32).mul(&u_linear(d, 0, 1).pow(d + 2 - i as u32)).scale(&int(c)))
        });
        (!q.is_zero()).then_some(q)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn vsp_ideal_is_apolar_with_fixed_hf((d, q) in (3u32..=4).prop_flat_map(|d| random_q(d).prop_map(move |q| (d, q)))) {
        let g = gd_form(d).unwrap();
        let c = gd_vsp_check(d, &q).unwrap();
        prop_assert!(annihilator_generators(&g).contains_ideal(&c.ideal));
        let reference = gd_vsp_check(d, &u_linear(d, 1, 0).pow(d + 2)).unwrap();
        prop_assert_eq!(&c.hf, &reference.hf);
        prop_assert!(c.generic && c.persistence);
    }
}
