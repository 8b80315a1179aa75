//! Reading couples and families from arguments, files or stdin.

use std::io::Read;
use std::path::Path;

use conic_isotopy::exactalg::{parse_rational, Rational};
use conic_isotopy::quadform::QuadraticForm;
use conic_isotopy::sweep::ParamFamily;
use serde_json::Value;

use crate::CliError;

/// Couple from inline coefficients (two groups of six, or twelve tokens),
/// else from `file`, else from stdin. File and stdin accept the same text,
/// or JSON `{"f": [...], "g": [...]}` / a flat array of twelve.
pub fn couple(args: &[String], file: Option<&Path>) -> Result<(QuadraticForm, QuadraticForm), CliError> {
    let text = if !args.is_empty() {
        args.join(" ")
    } else {
        read_source(file)?
    };
    parse_couple(&text)
}

pub fn read_source(file: Option<&Path>) -> Result<String, CliError> {
    match file {
        Some(p) => std::fs::read_to_string(p).map_err(|e| CliError::Parse(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

pub fn parse_couple(text: &str) -> Result<(QuadraticForm, QuadraticForm), CliError> {
    let trimmed = text.trim_start();
    let tokens: Vec<String> = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        let v: Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        json_tokens(&v)?
    } else {
        text.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(str::to_string)
            .collect()
    };
    if tokens.len() != 12 {
        return Err(CliError::Parse(format!("expected 12 coefficients, found {}", tokens.len())));
    }
    let f = QuadraticForm::parse_strings(&tokens[..6]).map_err(|e| CliError::Parse(format!("f: {e}")))?;
    let g = QuadraticForm::parse_strings(&tokens[6..]).map_err(|e| CliError::Parse(format!("g: {e}")))?;
    Ok((f, g))
}

fn json_tokens(v: &Value) -> Result<Vec<String>, CliError> {
    let scalar = |c: &Value| match c {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() => Ok(n.to_string()),
        _ => Err(CliError::Parse("coefficients must be rational strings".into())),
    };
    let list = |a: &Value| -> Result<Vec<String>, CliError> {
        a.as_array()
            .ok_or_else(|| CliError::Parse("expected an array of coefficients".into()))?
            .iter()
            .map(scalar)
            .collect()
    };
    match v {
        Value::Array(_) => list(v),
        Value::Object(o) => {
            let side = |k: &str| o.get(k).ok_or_else(|| CliError::Parse(format!("missing {k:?}"))).and_then(list);
            let mut t = side("f")?;
            t.extend(side("g")?);
            Ok(t)
        }
        _ => Err(CliError::Parse("expected an object or an array".into())),
    }
}

pub fn family(path: &Path) -> Result<ParamFamily, CliError> {
    let text = read_source(Some(path))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))?;
    ParamFamily::from_json(&v).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn rational(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Parse(e.to_string()))
}
