//! Coefficients written in terms of named parameters: sums of terms
//! `[±][q *] name` or `±q`, with `q` an integer or `p/q` rational.

use std::collections::BTreeMap;

use ncpoisson::scalar::{parse_scalar, Scalar};
use num_traits::{One, Zero};

use crate::error::CliError;

pub type Bindings = BTreeMap<String, Scalar>;

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

pub fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(is_name_start) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Evaluates `text` under `bindings`.
pub fn eval(text: &str, bindings: &Bindings) -> Result<Scalar, CliError> {
    let bad = |why: &str| CliError::Parse(format!("coefficient {text:?}: {why}"));
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty"));
    }
    let mut total = Scalar::zero();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'+' => (Scalar::one(), &rest[1..]),
            b'-' => (-Scalar::one(), &rest[1..]),
            _ if rest.len() == compact.len() => (Scalar::one(), rest),
            _ => return Err(bad("expected + or -")),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        let value = match term.split_once('*') {
            Some((q, name)) => {
                let q = parse_scalar(q).ok_or_else(|| bad("bad factor"))?;
                q * lookup(name, bindings, text)?
            }
            None if is_name(term) => lookup(term, bindings, text)?,
            None => parse_scalar(term).ok_or_else(|| bad("bad term"))?,
        };
        total += sign * value;
    }
    Ok(total)
}

fn lookup(name: &str, bindings: &Bindings, text: &str) -> Result<Scalar, CliError> {
    if !is_name(name) {
        return Err(CliError::Parse(format!("coefficient {text:?}: {name:?} is not a parameter name")));
    }
    bindings.get(name).cloned().ok_or_else(|| CliError::UnboundParameter(name.to_string()))
}

/// `name=p/q`.
pub fn parse_binding(text: &str) -> Result<(String, Scalar), CliError> {
    let (name, value) = text.split_once('=').ok_or_else(|| CliError::Parse(format!("parameter {text:?} is not name=value")))?;
    if !is_name(name) {
        return Err(CliError::Parse(format!("parameter name {name:?}")));
    }
    let value = parse_scalar(value).ok_or_else(|| CliError::Parse(format!("parameter value {value:?}")))?;
    Ok((name.to_string(), value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ncpoisson::scalar::{int, rat};

    fn env() -> Bindings {
        [("a".to_string(), rat(1, 2)), ("k14".to_string(), int(3)), ("k24".to_string(), int(-5))].into()
    }

    #[test]
    fn evaluates_linear_terms() {
        assert_eq!(eval("a", &env()).unwrap(), rat(1, 2));
        assert_eq!(eval("-a", &env()).unwrap(), rat(-1, 2));
        assert_eq!(eval("k14 + k24", &env()).unwrap(), int(-2));
        assert_eq!(eval("2*a - 1/3", &env()).unwrap(), rat(2, 3));
        assert_eq!(eval("-3/4", &env()).unwrap(), rat(-3, 4));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(eval("b", &env()), Err(CliError::UnboundParameter(_))));
        assert!(matches!(eval("", &env()), Err(CliError::Parse(_))));
        assert!(matches!(eval("1/0", &env()), Err(CliError::Parse(_))));
        assert!(matches!(eval("a*b", &env()), Err(CliError::Parse(_))));
        assert!(parse_binding("a=1/2").is_ok());
        assert!(parse_binding("1a=2").is_err());
        assert!(parse_binding("a=x").is_err());
    }
}
