//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use wildforms::algebra::*;
use wildforms::apolar::*;
use wildforms::borderdec::*;
use wildforms::families::*;
use wildforms::groebner::{ideal_of_points, saturation, GradedIdeal};
use wildforms::linalg::{int, limit_subspace, rank, ratio, Matrix, ParamScalar, Scalar, UniPoly};
use wildforms::poly::*;
use wildforms::random::{rng, small_point};

const SEED: u64 = 20;

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn prob() -> HessianMode {
    HessianMode::Probabilistic { seed: SEED }
}

fn ex(name: &str) -> Form {
    named_example(name).unwrap()
}

fn dual(text: &str, vars: &VariableSet) -> Polynomial {
    parse_dual(text, vars).unwrap()
}

fn hilbert_tables() -> Check {
    let cases: [(&str, &[usize]); 4] = [
        ("H5", &[1, 5, 7, 7, 5, 1]),
        ("Ikeda", &[1, 4, 10, 10, 4, 1]),
        ("L5", &[1, 4, 7, 7, 4, 1]),
        ("NonMinimal4", &[1, 5, 6, 5, 1]),
    ];
    for (name, want) in cases {
        let hf = hilbert_function(&ex(name));
        ensure!(hf == want, "HF({name}) = {hf:?}, expected {want:?}");
    }
    Ok(())
}

fn saturations() -> Check {
    let h5 = ex("H5");
    let sat = saturation(&annihilator_generators(&h5).truncate(3));
    let vs = h5.vars();
    // the duals of v0, v1, v2
    let lin = GradedIdeal::new(5, ["y0", "y1", "y2"].iter().map(|g| dual(g, &VariableSet::standard(5))).collect()).unwrap();
    ensure!(sat.same_ideal(&lin), "saturation of Ann(H5)<=3 is {}", sat.display_with(vs));
    for n in [4usize, 7, 10] {
        let s = saturation(&annihilator_generators(&fn_form(n).unwrap()).truncate(2));
        ensure!(s.same_ideal(&chain_ideal((n - 1) / 3)), "saturation of Ann(F{n})_2 is not the chain ideal");
    }
    let ikeda = ex("Ikeda");
    let s = saturation(&annihilator_generators(&ikeda).truncate(3));
    ensure!(s.hf(2) < dim_degree(4, 2), "saturation of Ann(Ikeda)<=3 has no quadric");
    Ok(())
}

fn bounded(status: &HessianStatus, what: &str) -> Check {
    ensure!(status.exact || status.failure_bound < 2f64.powi(-40), "{what}: failure bound {} is too large", status.failure_bound);
    Ok(())
}

fn hessians() -> Check {
    for d in 3..=6 {
        let s = hessian_vanishes(&gd_form(d).unwrap(), prob()).unwrap();
        ensure!(s.vanishes, "Hess(G{d}) reported nonzero");
        bounded(&s, &format!("G{d}"))?;
    }
    for n in [4, 7, 10] {
        let s = hessian_vanishes(&fn_form(n).unwrap(), prob()).unwrap();
        ensure!(s.vanishes, "Hess(F{n}) reported nonzero");
        bounded(&s, &format!("F{n}"))?;
    }
    ensure!(!hessian_vanishes(&ex("Fermat"), prob()).unwrap().vanishes, "Hess(Fermat) reported zero");
    let ikeda = ex("Ikeda");
    ensure!(!hessian_vanishes(&ikeda, prob()).unwrap().vanishes, "Hess(Ikeda) reported zero");
    let s2 = higher_hessian_vanishes(&ikeda, 2, prob()).unwrap();
    ensure!(s2.vanishes, "Hess^2(Ikeda) reported nonzero");
    bounded(&s2, "Hess^2(Ikeda)")?;
    ensure!(!has_slp(&ikeda, prob()).0, "Ikeda reported to have the SLP");
    for (name, f) in [("G3", gd_form(3).unwrap()), ("F4", fn_form(4).unwrap())] {
        let s = hessian_vanishes(&f, HessianMode::Exact).unwrap();
        ensure!(s.exact && s.vanishes, "exact Hessian of {name} does not vanish");
    }
    Ok(())
}

fn certified(dec: &BorderDecomposition, f: &Form, expected: usize, what: &str) -> Check {
    ensure!(verify_border_decomposition(dec, f).map_err(|e| e.to_string())?.ok, "{what}: decomposition does not verify");
    ensure!(dec.len() == expected, "{what}: {} summands, expected {expected}", dec.len());
    let lb = rank_lower_bound(f);
    ensure!(lb == dec.len(), "{what}: lower bound {lb} differs from {} summands", dec.len());
    Ok(())
}

fn decompositions() -> Check {
    for d in 3..=6u32 {
        let dec = construct_tangent_decomposition(&gd_tangent_data(d).unwrap()).map_err(|e| format!("G{d}: {e}"))?;
        certified(&dec, &gd_form(d).unwrap(), d as usize + 2, &format!("G{d}"))?;
    }
    for k in 1..=3 {
        let n = 3 * k + 1;
        let conf = fn_point_configuration(k, 1, k).unwrap();
        let dec = construct_tangent_decomposition(&conf.tangent_data()).map_err(|e| format!("F{n}: {e}"))?;
        certified(&dec, &fn_form(n).unwrap(), n + 1, &format!("F{n}"))?;
    }
    // n = 13: every admissible pair (a, b), at least two must yield a verified decomposition
    let f13 = fn_form(13).unwrap();
    let mut good = Vec::new();
    let mut bad = Vec::new();
    for a in 1..=4 {
        for b in a + 1..=4 {
            let conf = fn_point_configuration(4, a, b).unwrap();
            match construct_tangent_decomposition(&conf.tangent_data()) {
                Ok(dec) => match certified(&dec, &f13, 14, &format!("F13 ({a},{b})")) {
                    Ok(()) => good.push((a, b)),
                    Err(e) => bad.push(e),
                },
                Err(e) => bad.push(format!("F13 ({a},{b}): {e}")),
            }
        }
    }
    ensure!(good.len() >= 2, "F13 verified only for pairs {good:?}; {}", bad.join("; "));
    Ok(())
}

fn coordinate_forms(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect()
}

fn wildness() -> Check {
    for d in 3..=6 {
        let dec = construct_tangent_decomposition(&gd_tangent_data(d).unwrap()).unwrap();
        let v = classify_wild(&gd_form(d).unwrap(), &MinimalBorderRankCertificate::Decomposition(dec), prob()).unwrap();
        ensure!(v.verdict == Verdict::Wild, "G{d}: {:?}", v.verdict);
    }
    for k in 1..=3 {
        let n = 3 * k + 1;
        let dec = construct_tangent_decomposition(&fn_point_configuration(k, 1, k).unwrap().tangent_data()).unwrap();
        let v = classify_wild(&fn_form(n).unwrap(), &MinimalBorderRankCertificate::Decomposition(dec), prob()).unwrap();
        ensure!(v.verdict == Verdict::Wild, "F{n}: {:?}", v.verdict);
    }
    for n in 1..=4usize {
        let f = ex(&format!("Fermat({n},3)"));
        let dec = constant_decomposition(&vec![int(1); n + 1], &coordinate_forms(n + 1), 3).unwrap();
        let v = classify_wild(&f, &MinimalBorderRankCertificate::Decomposition(dec), prob()).unwrap();
        ensure!(v.verdict == Verdict::NotWild, "Fermat({n},3): {:?}", v.verdict);
    }
    for name in ["NonMinimal4", "Ikeda"] {
        let v = classify_wild(&ex(name), &MinimalBorderRankCertificate::AssumedMinimal, prob()).unwrap();
        ensure!(v.verdict == Verdict::NotApplicable(NotApplicableReason::NonMinimalBorderRank), "{name}: {:?}", v.verdict);
    }
    ensure!(rank_lower_bound(&ex("Ikeda")) == 10, "Ikeda lower bound is not 10");
    Ok(())
}

fn limiting_schemes() -> Check {
    let g = gd_form(3).unwrap();
    let dec = construct_tangent_decomposition(&gd_tangent_data(3).unwrap()).unwrap();
    let res = limiting_scheme_ideal(&dec, Some(&g), None).map_err(|e| e.to_string())?;
    ensure!(res.support.len() == 5, "support has {} points", res.support.len());
    let oracle = ideal_of_points(&res.support).unwrap();
    ensure!(res.saturated.same_ideal(&oracle), "saturated limit differs from the ideal of the support");
    ensure!(res.contained_in_ann == Some(true), "limit ideal not contained in Ann(G3)");
    ensure!(annihilator_generators(&g).contains_ideal(&res.limit.ideal), "limit ideal not contained in Ann(G3)");
    Ok(())
}

fn u_linear(d: u32, a: &Scalar, b: &Scalar) -> Polynomial {
    let n = d as usize + 2;
    let mut c = vec![int(0); n];
    c[n - 2] = a.clone();
    c[n - 1] = b.clone();
    Polynomial::linear(Ring::Dual, &c)
}

fn vsp_case(d: u32, q: &Polynomial, what: &str) -> Check {
    let g = gd_form(d).unwrap();
    let c = gd_vsp_check(d, q).map_err(|e| format!("{what}: {e}"))?;
    let n = d as usize + 2;
    for k in 1..=d + 3 {
        let want = dim_degree(n, k).min(d as usize + 2);
        ensure!(c.hf[k as usize] == want, "{what}: HF({k}) = {}, expected {want}", c.hf[k as usize]);
    }
    ensure!(c.persistence, "{what}: persistence fails");
    ensure!(annihilator_generators(&g).contains_ideal(&c.ideal), "{what}: not contained in Ann(G{d})");
    Ok(())
}

fn vsp() -> Check {
    let mut r = rng(SEED);
    for d in 3..=4u32 {
        let r_pts = d as usize + 2;
        for trial in 0..10 {
            let cs = small_point(&mut r, d as usize + 3, 5);
            let q = cs.iter().enumerate().fold(Polynomial::zero(Ring::Dual, d as usize + 2), |acc, (i, c)| {
                acc.add(&u_linear(d, &int(1), &int(0)).pow(i as u32).mul(&u_linear(d, &int(0), &int(1)).pow(d + 2 - i as u32)).scale(c))
            });
            if q.is_zero() {
                continue;
            }
            vsp_case(d, &q, &format!("d = {d}, random q #{trial}"))?;
        }
        vsp_case(d, &u_linear(d, &int(1), &int(0)).pow(d + 2), &format!("d = {d}, q = U0^{}", d + 2))?;
        vsp_case(d, &u_linear(d, &int(0), &int(1)).pow(d + 2), &format!("d = {d}, q = U1^{}", d + 2))?;
        // distinct rational roots (α_j : β_j), q = Π (β_j U0 - α_j U1)
        for trial in 0..3 {
            let mut roots: Vec<(Scalar, Scalar)> = Vec::new();
            while roots.len() < r_pts {
                let (a, b) = (int(r.gen_range(-6..=6)), int(r.gen_range(-6..=6)));
                if a == int(0) && b == int(0) {
                    continue;
                }
                if roots.iter().any(|(x, y)| x * &b == y * &a) {
                    continue;
                }
                roots.push((a, b));
            }
            let q = roots.iter().fold(Polynomial::one(Ring::Dual, d as usize + 2), |acc, (a, b)| acc.mul(&u_linear(d, b, &-a)));
            let what = format!("d = {d}, distinct roots #{trial}");
            vsp_case(d, &q, &what)?;
            let points: Vec<Vec<Scalar>> = roots
                .iter()
                .map(|(a, b)| {
                    let mut p = vec![int(0); d as usize + 2];
                    p[d as usize] = a.clone();
                    p[d as usize + 1] = b.clone();
                    p
                })
                .collect();
            let sat = saturation(&gd_vsp_ideal(d, &q).unwrap());
            ensure!(sat.same_ideal(&ideal_of_points(&points).unwrap()), "{what}: saturation differs from the points");
        }
    }
    Ok(())
}

fn square_zero(n: usize) -> FiniteAlgebra {
    let gens = monomial_basis(n, 2, None).into_iter().map(|m| Polynomial::monomial(Ring::Dual, m, int(1))).collect();
    quotient_algebra(&GradedIdeal::new(n, gens).unwrap(), &VariableSet::standard(n)).unwrap().algebra
}

fn gorenstein_suite() -> Check {
    let mut r = rng(SEED);
    // graded local: the maximal ideal is spanned by the non-unit basis vectors
    let (mut yes, mut no) = (0, 0);
    for i in 0..30 {
        let a = random_graded_local_algebra(&mut r);
        let m: Vec<Vec<Scalar>> = (1..a.dim()).map(|j| a.basis_vector(j)).collect();
        let soc = socle(&a, &m).map_err(|e| e.to_string())?;
        let g = is_gorenstein(&a).is_some();
        ensure!(g == (soc.len() == 1), "algebra #{i} (dim {}): Gorenstein {g}, socle dimension {}", a.dim(), soc.len());
        if g {
            yes += 1;
        } else {
            no += 1;
        }
    }
    ensure!(yes > 0 && no > 0, "random algebras were not mixed: {yes} Gorenstein, {no} not");

    let mut forms: Vec<Form> = ["H5", "Ikeda", "L5", "NonMinimal4", "NonWildVH", "Jet", "ConicTangent", "Cusp", "Fermat", "F4"].iter().map(|n| ex(n)).collect();
    forms.extend((3..=4).map(|d| gd_form(d).unwrap()));
    for _ in 0..10 {
        let n = r.gen_range(2..=3);
        let d = r.gen_range(2..=4);
        let basis = monomial_basis(n, d, None);
        let cs = small_point(&mut r, basis.len(), 3);
        if let Ok(f) = Form::new(Polynomial::from_terms(Ring::Primal, n, basis.into_iter().zip(cs).collect()), VariableSet::standard(n)) {
            forms.push(f);
        }
    }
    for f in &forms {
        ensure!(is_gorenstein(&apolar_algebra(f)).is_some(), "apolar algebra of {f} reported non-Gorenstein");
    }

    for n in 1..=3 {
        let f = ex(&format!("Fermat({n},3)"));
        let t = form_tensor(&f);
        let l = hessian_witness(&f).ok_or(format!("Fermat({n},3) has no witness"))?;
        let rec = algebra_from_tensor(&t, &l).map_err(|e| format!("Fermat({n},3): {e}"))?;
        let back = symmetrize_structure_tensor(&rec.algebra, &rec.witness, 3).map_err(|e| e.to_string())?;
        ensure!(back == rec.transformed(&t), "Fermat({n},3) does not round-trip");
    }
    ensure!(hessian_witness(&gd_form(3).unwrap()).is_none(), "G3 unexpectedly has a Hessian witness");

    let mut algebras: Vec<FiniteAlgebra> = forms.iter().map(apolar_algebra).collect();
    algebras.extend((0..20).map(|_| random_smoothable_algebra(&mut r)));
    algebras.extend([jet_algebra(4), diagonal_algebra(5), square_zero(3)]);
    for a in &algebras {
        for d in [3, 4] {
            if d == 4 && a.dim() > 12 {
                continue;
            }
            let rep = verify_multiplication_matrices(&structure_tensor(a, d)).map_err(|e| e.to_string())?;
            ensure!(rep.all_passed(), "dim {} algebra, d = {d}: {}", a.dim(), rep.summary());
        }
    }
    // y * y^2 = y in Q[y]/(y^3) is not associative
    let mut t = structure_tensor(&jet_algebra(3), 3);
    t.set(&[1, 2, 1], int(1));
    t.set(&[2, 1, 1], int(1));
    let rep = verify_multiplication_matrices(&t).map_err(|e| e.to_string())?;
    ensure!(!rep.all_passed(), "perturbed tensor passed every check");
    Ok(())
}

fn random_form(r: &mut ChaCha8Rng) -> Form {
    loop {
        let n = r.gen_range(2..=4);
        let d = r.gen_range(2..=5);
        let basis = monomial_basis(n, d, None);
        let cs = small_point(r, basis.len(), 2);
        if let Ok(f) = Form::new(Polynomial::from_terms(Ring::Primal, n, basis.into_iter().zip(cs).collect()), VariableSet::standard(n)) {
            return f;
        }
    }
}

fn random_homogeneous(r: &mut ChaCha8Rng, ring: Ring, degree: u32) -> Polynomial {
    let basis = monomial_basis(3, degree, None);
    let cs = small_point(r, basis.len(), 3);
    Polynomial::from_terms(ring, 3, basis.into_iter().zip(cs).collect())
}

fn random_polynomial(r: &mut ChaCha8Rng) -> (usize, Polynomial) {
    let n = r.gen_range(1..=4);
    let terms = (0..r.gen_range(0..=5))
        .map(|_| {
            let e: Vec<u16> = (0..n).map(|_| r.gen_range(0..=3)).collect();
            let num = loop {
                let x = r.gen_range(-9..=9);
                if x != 0 {
                    break x;
                }
            };
            (Monomial::new(&e), ratio(num, r.gen_range(1..=4)))
        })
        .collect();
    (n, Polynomial::from_terms(Ring::Primal, n, terms))
}

/// Rank over `Q(t)` as the maximum rank over several specializations.
fn generic_rank(rows: &[Vec<(Vec<i64>, u32)>]) -> usize {
    [ratio(3, 7), ratio(-11, 5), int(13), ratio(17, 2)]
        .iter()
        .map(|t| {
            let den = (Scalar::from_integer(1.into()) + t).recip();
            let m: Vec<Vec<Scalar>> = rows
                .iter()
                .map(|row| row.iter().map(|(num, e)| UniPoly::from_i64(num).eval(t) * den.clone().pow(*e as i32)).collect())
                .collect();
            let cols = m[0].len();
            rank(&Matrix::from_rows(m, cols).unwrap())
        })
        .max()
        .unwrap()
}

fn property_suites() -> Check {
    let mut r = rng(SEED);
    for _ in 0..100 {
        let f = random_form(&mut r);
        let hf = hilbert_function(&f);
        let d = f.degree() as usize;
        ensure!((0..=d).all(|k| hf[k] == hf[d - k]), "HF of {f} is not symmetric: {hf:?}");
    }
    for _ in 0..100 {
        let i = r.gen_range(0..3);
        let y = Polynomial::var(Ring::Dual, 3, i);
        let f = random_homogeneous(&mut r, Ring::Primal, 2);
        let g = random_homogeneous(&mut r, Ring::Primal, 3);
        let lhs = apply_dual(&y, &f.mul(&g)).unwrap();
        let rhs = apply_dual(&y, &f).unwrap().mul(&g).add(&f.mul(&apply_dual(&y, &g).unwrap()));
        ensure!(lhs == rhs, "Leibniz rule fails for y{i} on ({f}) * ({g})");
    }
    let den = UniPoly::from_i64(&[1, 1]);
    for trial in 0..50 {
        let (nr, nc) = (r.gen_range(1..=4), r.gen_range(1..=4));
        let rows: Vec<Vec<(Vec<i64>, u32)>> = (0..nr)
            .map(|_| {
                (0..nc)
                    .map(|_| ((0..r.gen_range(1..=3)).map(|_| r.gen_range(-2..=2)).collect(), r.gen_range(0..=1)))
                    .collect()
            })
            .collect();
        let m: Vec<Vec<ParamScalar>> =
            rows.iter().map(|row| row.iter().map(|(num, e)| ParamScalar::new(UniPoly::from_i64(num), den.pow(*e))).collect()).collect();
        let lim = limit_subspace(&Matrix::from_rows(m, nc).unwrap()).map_err(|e| e.to_string())?;
        let want = generic_rank(&rows);
        ensure!(lim.rows() == want && rank(&lim) == want, "limit of matrix #{trial} has dimension {}, expected {want}", lim.rows());
    }
    for _ in 0..200 {
        let (n, p) = random_polynomial(&mut r);
        let vars = VariableSet::standard(n);
        let text = p.display_with(&vars);
        let back = parse_poly(&text, &vars).map_err(|e| format!("{text}: {e}"))?;
        ensure!(back == p, "{text} does not round-trip");
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("Hilbert function tables", hilbert_tables),
        ("saturations", saturations),
        ("Hessian statuses", hessians),
        ("border decompositions", decompositions),
        ("wildness verdicts", wildness),
        ("limiting schemes", limiting_schemes),
        ("VSP ideals of G_d", vsp),
        ("Gorenstein and structure tensors", gorenstein_suite),
        ("property suites", property_suites),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = match catch_unwind(AssertUnwindSafe(check)) {
            Ok(r) => r,
            Err(p) => Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into())),
        };
        match outcome {
            Ok(()) => println!("criterion {}: PASS ({name})", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL ({name}): {e}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
