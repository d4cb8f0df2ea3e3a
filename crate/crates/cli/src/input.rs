use anyhow::{bail, Context};
use wildforms::algebra::{FiniteAlgebra, Tensor};
use wildforms::families::named_example;
use wildforms::interchange::{algebra_from_json, document_kind, form_from_json, parse_document, tensor_from_json};
use wildforms::linalg::{parse_scalar, Scalar};
use wildforms::poly::Form;

fn read(path: &str) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read `{path}`"))
}

fn form_from_text_or_json(text: &str) -> anyhow::Result<Form> {
    if text.trim_start().starts_with('{') {
        Ok(form_from_json(&parse_document(text, "form")?)?)
    } else {
        Ok(Form::parse(text.trim())?)
    }
}

/// The form to analyze and the label it is reported under.
pub fn resolve_form(text: Option<&str>, file: Option<&str>, name: Option<&str>) -> anyhow::Result<(String, Form)> {
    match (text, file, name) {
        (Some(t), None, None) => Ok((t.trim().to_string(), Form::parse(t)?)),
        (None, Some(path), None) => Ok((path.to_string(), form_from_text_or_json(&read(path)?)?)),
        (None, None, Some(n)) => Ok((n.to_string(), named_example(n)?)),
        _ => bail!("give exactly one of a form, --file or --name"),
    }
}

/// Input of the `algebra` command.
pub enum AlgebraSource {
    Algebra(FiniteAlgebra),
    Tensor(Tensor),
    Form(Form),
}

pub fn resolve_algebra_input(file: Option<&str>, form: Option<&str>) -> anyhow::Result<AlgebraSource> {
    match (file, form) {
        (Some(path), None) => {
            let text = read(path)?;
            if !text.trim_start().starts_with('{') {
                return Ok(AlgebraSource::Form(Form::parse(text.trim())?));
            }
            match document_kind(&text)?.as_str() {
                "algebra" => Ok(AlgebraSource::Algebra(algebra_from_json(&parse_document(&text, "algebra")?)?)),
                "tensor" => Ok(AlgebraSource::Tensor(tensor_from_json(&parse_document(&text, "tensor")?)?)),
                "form" => Ok(AlgebraSource::Form(form_from_json(&parse_document(&text, "form")?)?)),
                other => bail!("`{path}` holds a {other} document; expected an algebra, tensor or form"),
            }
        }
        (None, Some(text)) => Ok(AlgebraSource::Form(Form::parse(text)?)),
        _ => bail!("give an input file or --form"),
    }
}

/// `a,b` as two component indices.
pub fn parse_pair(text: &str) -> anyhow::Result<(usize, usize)> {
    let parts: Vec<&str> = text.trim_matches(|c| c == '(' || c == ')').split(',').collect();
    match parts.as_slice() {
        [a, b] => Ok((a.trim().parse().context("bad pair")?, b.trim().parse().context("bad pair")?)),
        _ => bail!("expected a pair `a,b`, got `{text}`"),
    }
}

pub fn parse_vector(text: &str) -> anyhow::Result<Vec<Scalar>> {
    text.trim_matches(|c| c == '[' || c == ']').split(',').map(|s| Ok(parse_scalar(s)?)).collect()
}
