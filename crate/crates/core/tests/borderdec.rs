use num_bigint::BigInt;
use proptest::prelude::*;
use wildforms::apolar::{annihilator_generators, rank_lower_bound};
use wildforms::borderdec::*;
use wildforms::families::{chain_ideal, fn_form, fn_point_configuration, gd_form, gd_tangent_data};
use wildforms::groebner::ideal_of_points;
use wildforms::interchange::{decomposition_from_json, decomposition_to_json};
use wildforms::linalg::{int, ratio, Scalar, UniPoly};
use wildforms::poly::{Form, Polynomial, Ring, VariableSet};
use wildforms::Error;

fn identity_forms(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect()
}

fn fermat_decomposition(n: usize) -> BorderDecomposition {
    constant_decomposition(&vec![int(1); n], &identity_forms(n), 3).unwrap()
}

fn binomial(d: u32) -> BorderDecomposition {
    let w = ratio(1, d as i64);
    let moving = Summand { weight: w.clone(), coeffs: vec![UniPoly::from_i64(&[1]), UniPoly::from_i64(&[0, 1])] };
    let fixed = Summand { weight: -w, coeffs: vec![UniPoly::from_i64(&[1]), UniPoly::zero()] };
    BorderDecomposition::new(2, d, 1, vec![moving, fixed]).unwrap()
}

/// Every tangent construction in the corpus, with its form.
fn constructions() -> Vec<(String, BorderDecomposition, Form)> {
    let mut out = Vec::new();
    for d in 3..=6 {
        let dec = construct_tangent_decomposition(&gd_tangent_data(d).unwrap()).unwrap();
        out.push((format!("G{d}"), dec, gd_form(d).unwrap()));
    }
    for k in 1..=3 {
        let n = 3 * k + 1;
        let dec = construct_tangent_decomposition(&fn_point_configuration(k, 1, k).unwrap().tangent_data()).unwrap();
        out.push((format!("F{n}"), dec, fn_form(n).unwrap()));
    }
    out
}

#[test]
fn verification_examples() {
    let f = Form::parse("x0^3 + x1^3").unwrap();
    assert!(verify_border_decomposition(&fermat_decomposition(2), &f).unwrap().ok);
    for d in 3..=6 {
        let f = Form::parse(&format!("x0^{}*x1", d - 1)).unwrap();
        assert!(verify_border_decomposition(&binomial(d), &f).unwrap().ok);
        let wrong = Form::parse(&format!("x0^{}*x1 + x1^{d}", d - 1)).unwrap();
        let rep = verify_border_decomposition(&binomial(d), &wrong).unwrap();
        assert_eq!((rep.ok, rep.failing_order), (false, Some(1)));
        assert_eq!(rep.residual.unwrap(), Polynomial::var(Ring::Primal, 2, 1).pow(d).scale(&int(-1)));
    }
    let g = gd_form(3).unwrap();
    assert!(verify_border_decomposition(&binomial(3), &g).is_err());
}

#[test]
fn constructions_verify() {
    for (name, dec, f) in constructions() {
        assert!(verify_border_decomposition(&dec, &f).unwrap().ok, "{name}");
        assert!(rank_lower_bound(&f) <= dec.len(), "{name}");
    }
    for d in 3..=6u32 {
        let dec = construct_tangent_decomposition(&gd_tangent_data(d).unwrap()).unwrap();
        assert_eq!(dec.len(), d as usize + 2);
        assert_eq!(rank_lower_bound(&gd_form(d).unwrap()), d as usize + 2);
    }
    for k in 1..=3 {
        let n = 3 * k + 1;
        let dec = construct_tangent_decomposition(&fn_point_configuration(k, 1, k).unwrap().tangent_data()).unwrap();
        assert_eq!(dec.len(), n + 1);
        assert_eq!(rank_lower_bound(&fn_form(n).unwrap()), n + 1);
    }
}

#[test]
fn degenerate_tangent_data() {
    let l = vec![int(1), int(2)];
    let minus: Vec<Scalar> = l.iter().map(|c| -c).collect();
    let data = TangentData::new(3, vec![l, minus], vec![vec![int(0), int(1)]; 2], vec![int(1), int(1)]);
    assert_eq!(construct_tangent_decomposition(&data), Err(Error::RepeatedPoint(0, 1)));
    let mut bad = gd_tangent_data(3).unwrap();
    bad.relation[0] += int(1);
    assert_eq!(construct_tangent_decomposition(&bad), Err(Error::RelationNotSatisfied));
    let mut zero = gd_tangent_data(3).unwrap();
    zero.relation = vec![int(0); zero.points.len()];
    assert!(construct_tangent_decomposition(&zero).is_err());
}

#[test]
fn limit_families() {
    let c = |v: &[i64]| v.iter().map(|&x| UniPoly::from_i64(&[x])).collect::<Vec<_>>();
    let pts = vec![c(&[1, 0, 0]), c(&[0, 1, 0]), c(&[0, 0, 1]), c(&[1, 1, 1])];
    let lim = limit_ideal_family(&pts, None).unwrap();
    let scalars: Vec<Vec<Scalar>> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]].iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect();
    assert!(lim.ideal.same_ideal(&ideal_of_points(&scalars).unwrap()));
    // x0 and x0 + t x1 collide into the 2-jet <y1^2>
    let jet = vec![vec![UniPoly::from_i64(&[1]), UniPoly::zero()], vec![UniPoly::from_i64(&[1]), UniPoly::from_i64(&[0, 1])]];
    let lim = limit_ideal_family(&jet, None).unwrap();
    assert_eq!(lim.hf, [1, 2, 2, 2]);
    let y1sq = wildforms::poly::parse_dual("y1^2", &VariableSet::standard(2)).unwrap();
    assert!(lim.ideal.contains(&y1sq));
}

/// Specializes the curves at `t = value`.
fn at(dec: &BorderDecomposition, value: &Scalar) -> Vec<Vec<Scalar>> {
    dec.summands.iter().map(|s| s.coeffs.iter().map(|c| c.eval(value)).collect()).collect()
}

#[test]
fn limits_are_flat() {
    for (name, dec, _) in constructions().into_iter().filter(|(_, d, _)| d.len() <= 8) {
        let curves: Vec<Vec<UniPoly>> = dec.summands.iter().map(|s| s.coeffs.clone()).collect();
        let lim = limit_ideal_family(&curves, None).unwrap();
        // generic rank of the evaluation map: the maximum over a few specializations
        let ideals: Vec<_> = [ratio(7, 3), ratio(-5, 2), int(11)].iter().map(|t| ideal_of_points(&at(&dec, t)).unwrap()).collect();
        for k in 0..=lim.bound {
            let generic = ideals.iter().map(|i| i.hf(k)).max().unwrap();
            assert_eq!(lim.hf[k as usize], generic, "{name} k = {k}");
            assert_eq!(lim.ideal.hf(k), generic, "{name} k = {k}");
        }
    }
}

#[test]
fn limiting_schemes() {
    let f = named_fermat();
    let res = limiting_scheme_ideal(&fermat_decomposition(3), Some(&f), None).unwrap();
    let coords: Vec<Vec<Scalar>> = (0..3).map(|i| (0..3).map(|j| int((i == j) as i64)).collect()).collect();
    assert!(res.saturated.same_ideal(&ideal_of_points(&coords).unwrap()));
    assert_eq!(res.length, Some(3));
    assert_eq!(res.contained_in_ann, Some(true));

    let g = gd_form(3).unwrap();
    let dec = construct_tangent_decomposition(&gd_tangent_data(3).unwrap()).unwrap();
    let res = limiting_scheme_ideal(&dec, Some(&g), None).unwrap();
    assert_eq!(res.length, Some(5));
    assert!(res.reduced);
    assert_eq!(res.contained_in_ann, Some(true));
    assert!(res.saturated.same_ideal(&ideal_of_points(&res.support).unwrap()));
    assert!(annihilator_generators(&g).contains_ideal(&res.limit.ideal));

    let f7 = fn_form(7).unwrap();
    let dec = construct_tangent_decomposition(&fn_point_configuration(2, 1, 2).unwrap().tangent_data()).unwrap();
    let res = limiting_scheme_ideal(&dec, Some(&f7), None).unwrap();
    assert_eq!(res.length, Some(8));
    assert_eq!(res.contained_in_ann, Some(true));
    assert!(res.saturated.contains_ideal(&chain_ideal(2)));
}

fn named_fermat() -> Form {
    Form::parse("x0^3 + x1^3 + x2^3").unwrap()
}

#[test]
fn decompositions_round_trip() {
    for (name, dec, f) in constructions() {
        let json = decomposition_to_json(&dec, f.vars());
        assert_eq!(decomposition_from_json(&json).unwrap(), dec, "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Random multipliers change the target but never the validity of the construction.
    #[test]
    fn tangent_construction_verifies(d in 3u32..=4, mus in prop::collection::vec(-4i64..=4, 6)) {
        let mut data = gd_tangent_data(d).unwrap();
        data.multipliers = mus.iter().take(data.points.len()).map(|&m| int(m)).collect();
        let target = data.target();
        prop_assume!(!target.is_zero());
        let n = data.nvars();
        let f = Form::new(target, VariableSet::standard(n)).unwrap();
        let dec = construct_tangent_decomposition(&data).unwrap();
        prop_assert!(verify_border_decomposition(&dec, &f).unwrap().ok);
        prop_assert!(rank_lower_bound(&f) <= dec.len());
    }

    #[test]
    fn constant_decompositions_verify(
        n in 2usize..=3,
        rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 1..=4),
        ws in prop::collection::vec(1i64..=3, 4),
    ) {
        let forms: Vec<Vec<BigInt>> = rows.iter().map(|r| r[..n].iter().map(|&x| BigInt::from(x)).collect()).collect();
        prop_assume!(forms.iter().all(|f| f.iter().any(|x| *x != BigInt::from(0))));
        let weights: Vec<Scalar> = ws[..forms.len()].iter().map(|&w| int(w)).collect();
        let dec = constant_decomposition(&weights, &forms, 3).unwrap();
        let sum = dec.expand().pop().unwrap();
        prop_assume!(!sum.is_zero());
        let f = Form::new(sum, VariableSet::standard(n)).unwrap();
        prop_assert!(verify_border_decomposition(&dec, &f).unwrap().ok);
        prop_assert!(rank_lower_bound(&f) <= dec.len());
        match limiting_scheme_ideal(&dec, Some(&f), None) {
            Ok(res) => prop_assert_eq!(res.contained_in_ann, Some(true)),
            // proportional forms are one point counted twice
            Err(e) => prop_assert!(matches!(e, Error::PointCollision(..)), "{e:?}"),
        }
    }
}
