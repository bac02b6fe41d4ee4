//! JSON helpers: sorted keys (serde_json's default map), reals rounded to 12
//! significant digits, and the automorphism file format.

use std::path::Path;

use serde_json::{Map, Value};
use spectre_core::reduction::Permutation;

use crate::error::{CliError, Result};

/// `x` rounded to 12 significant digits; non-finite values become `null`
/// and magnitudes below `1e-12` (eigensolver noise) become 0.
pub fn real(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    if x.abs() < 1e-12 {
        return Value::from(0);
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    // keep integers integral in the output
    if rounded.fract() == 0.0 && rounded.abs() < 1e15 {
        return Value::from(rounded as i64);
    }
    Value::from(rounded)
}

pub fn reals(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| real(x)).collect())
}

/// Builder for objects whose keys come out sorted.
#[derive(Default)]
pub struct Obj(Map<String, Value>);

impl Obj {
    pub fn new() -> Self {
        Obj(Map::new())
    }

    pub fn set(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.insert(key.to_string(), value.into());
        self
    }

    pub fn real(self, key: &str, x: f64) -> Self {
        self.set(key, real(x))
    }

    pub fn insert(&mut self, key: &str, value: impl Into<Value>) {
        self.0.insert(key.to_string(), value.into());
    }

    pub fn build(self) -> Value {
        Value::Object(self.0)
    }
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// Parses an automorphism file: a JSON array of image arrays.
pub fn parse_automorphisms(text: &str) -> Result<Vec<Permutation>> {
    let raw: Vec<Vec<usize>> = serde_json::from_str(text)?;
    if raw.is_empty() {
        return Err(CliError::Usage(
            "automorphism file lists no permutations".into(),
        ));
    }
    Ok(raw
        .into_iter()
        .map(Permutation::new)
        .collect::<Result<_, _>>()?)
}

pub fn render_automorphisms(gens: &[Permutation]) -> String {
    let raw: Vec<&[usize]> = gens.iter().map(Permutation::image).collect();
    let mut s = serde_json::to_string(&raw).expect("index arrays serialize");
    s.push('\n');
    s
}

pub fn read_automorphisms(path: &Path) -> Result<Vec<Permutation>> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_automorphisms(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digits() {
        assert_eq!(real(2.0).to_string(), "2");
        assert_eq!(real(2f64.sqrt() * 2.0).to_string(), "2.82842712475");
        assert_eq!(real(1.0 / 3.0).to_string(), "0.333333333333");
        assert_eq!(real(3.0000000000001).to_string(), "3");
        assert_eq!(real(f64::NAN), Value::Null);
        assert_eq!(real(-1.5e-20).to_string(), "0");
        assert_eq!(real(-1.5e-9).to_string(), "-1.5e-9");
    }

    #[test]
    fn keys_sorted() {
        let v = Obj::new().set("z", 1).set("a", 2).set("m", 3).build();
        assert_eq!(v.to_string(), r#"{"a":2,"m":3,"z":1}"#);
    }

    #[test]
    fn automorphism_files() {
        let gens = parse_automorphisms("[[1,0,2],[0,2,1]]").unwrap();
        assert_eq!(render_automorphisms(&gens), "[[1,0,2],[0,2,1]]\n");
        assert!(parse_automorphisms("[[0,0]]").is_err());
        assert!(parse_automorphisms("[]").is_err());
        assert!(parse_automorphisms("{").is_err());
    }
}
