use super::cubics::fn_form;
use super::gd::gd_form;
use crate::error::{Error, Result};
use crate::poly::{Form, VariableSet};

/// Fixed examples with their variable layout.
pub struct NamedExample {
    pub name: &'static str,
    pub text: &'static str,
    /// `(v count, u count)` for aliased examples.
    pub aliases: Option<(usize, usize)>,
}

const FIXED: &[NamedExample] = &[
    NamedExample { name: "H5", text: "v0*u0^4 + v1*u0^2*u1^2 + v2*u1^4", aliases: Some((3, 2)) },
    NamedExample { name: "Ikeda", text: "v0*u0^3*u1 + v1*u0*u1^3 + v0^3*v1^2", aliases: Some((2, 2)) },
    NamedExample { name: "L5", text: "v0*u0^3*u1 + v1*u0*u1^3", aliases: Some((2, 2)) },
    NamedExample { name: "NonMinimal4", text: "v0*u0^3 + v1*u0^2*u1 + v2*u0*u1^2", aliases: Some((3, 2)) },
    NamedExample { name: "NonWildVH", text: "v0*u0^3 + v1*u1^3 + v2*(u0 + u1)^3", aliases: Some((3, 2)) },
    NamedExample { name: "Jet", text: "x0^2*x1", aliases: None },
    NamedExample { name: "ConicTangent", text: "x1*(x0^2 + x1*x2)", aliases: None },
    NamedExample { name: "Cusp", text: "x1^2*x2 - x0^3", aliases: None },
];

/// Names accepted by [`named_example`]; `Fermat(n,d)`, `G<d>` and `F<n>` are parametric.
pub fn catalog_names() -> Vec<String> {
    let mut v: Vec<String> = FIXED.iter().map(|e| e.name.to_string()).collect();
    v.extend(["Fermat", "Fermat(n,d)", "Perazzo", "G<d>", "F<n>"].iter().map(|s| s.to_string()));
    v
}

fn fermat(n: usize, d: u32) -> Result<Form> {
    if d < 1 {
        return Err(Error::DegreeTooSmall { degree: d, min: 1 });
    }
    let text: Vec<String> = (0..=n).map(|i| format!("x{i}^{d}")).collect();
    Form::parse_with(&text.join(" + "), &VariableSet::standard(n + 1))
}

fn parse_args(inner: &str, name: &str) -> Result<Vec<usize>> {
    inner
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| Error::UnknownName(name.to_string())))
        .collect()
}

/// Looks up an example by name.
pub fn named_example(name: &str) -> Result<Form> {
    let name = name.trim();
    if let Some(e) = FIXED.iter().find(|e| e.name.eq_ignore_ascii_case(name)) {
        let vars = match e.aliases {
            Some((nv, nu)) => VariableSet::aliased(nv, nu),
            None => VariableSet::infer(e.text),
        };
        return Form::parse_with(e.text, &vars);
    }
    if name.eq_ignore_ascii_case("Perazzo") {
        return fn_form(4);
    }
    if name.eq_ignore_ascii_case("Fermat") {
        return fermat(2, 3);
    }
    if let Some(rest) = name.strip_prefix("Fermat(").and_then(|r| r.strip_suffix(')')) {
        let a = parse_args(rest, name)?;
        if let [n, d] = a[..] {
            return fermat(n, d as u32);
        }
        return Err(Error::UnknownName(name.to_string()));
    }
    let digits = |s: &str| s.parse::<usize>().map_err(|_| Error::UnknownName(name.to_string()));
    if let Some(rest) = name.strip_prefix('G').or_else(|| name.strip_prefix("G_")) {
        return gd_form(digits(rest.trim_start_matches('_'))? as u32);
    }
    if let Some(rest) = name.strip_prefix('F').or_else(|| name.strip_prefix("F_")) {
        return fn_form(digits(rest.trim_start_matches('_'))?);
    }
    Err(Error::UnknownName(name.to_string()))
}
