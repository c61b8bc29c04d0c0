//! Line-oriented codespec files.
//!
//! ```text
//! field 17^1/1,0
//! family RCTRS
//! n 8
//! k 4
//! h 0
//! t 1
//! extended 0
//! alphas 0,3,7,8,10,12,13
//! b 1
//! c 2
//! lambda 10
//! eta 4
//! ```
//!
//! Elements are written as field indices. `v` (GRS column multipliers) is
//! optional. Blank lines and lines starting with `#` are ignored.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::code::{CodeError, CodeSpec, Family};
use crate::field::{FieldElement, GaloisField};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecFileError {
    #[error("line {line}, key `{key}`: {message}")]
    Parse { line: usize, key: String, message: String },
    #[error("missing key `{0}`")]
    MissingKey(&'static str),
    #[error(transparent)]
    Validation(#[from] CodeError),
}

const KEYS: [&str; 12] = ["family", "n", "k", "h", "t", "extended", "alphas", "b", "c", "lambda", "eta", "v"];

pub fn write_spec(spec: &CodeSpec) -> Result<String, SpecFileError> {
    spec.validate()?;
    let list = |v: &[FieldElement]| v.iter().map(|x| x.index().to_string()).collect::<Vec<_>>().join(",");
    let mut s = String::new();
    let _ = writeln!(s, "field {}", spec.field.descriptor());
    let _ = writeln!(s, "family {}", spec.family);
    let _ = writeln!(s, "n {}", spec.n);
    let _ = writeln!(s, "k {}", spec.k);
    let _ = writeln!(s, "h {}", spec.h);
    let _ = writeln!(s, "t {}", spec.t);
    let _ = writeln!(s, "extended {}", u8::from(spec.extended));
    let _ = writeln!(s, "alphas {}", list(&spec.alphas));
    let _ = writeln!(s, "b {}", spec.b.index());
    let _ = writeln!(s, "c {}", spec.c.index());
    let _ = writeln!(s, "lambda {}", spec.lambda.index());
    let _ = writeln!(s, "eta {}", spec.eta.index());
    if let Some(v) = &spec.v {
        let _ = writeln!(s, "v {}", list(v));
    }
    Ok(s)
}

pub fn read_spec(text: &str) -> Result<CodeSpec, SpecFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let err = |line: usize, key: &str, message: String| SpecFileError::Parse {
        line,
        key: key.to_string(),
        message,
    };
    let (line, first) = lines.next().ok_or(SpecFileError::MissingKey("field"))?;
    let (key, value) = split(first);
    if key != "field" {
        return Err(err(line, key, "first line must be `field p^m/c_m,...,c_0`".into()));
    }
    let field = GaloisField::parse(value).map_err(|e| err(line, "field", e.to_string()))?;

    let mut entries: HashMap<&str, (usize, &str)> = HashMap::new();
    for (line, l) in lines {
        let (key, value) = split(l);
        if !KEYS.contains(&key) {
            return Err(err(line, key, "unknown key".into()));
        }
        if let Some((prev, _)) = entries.insert(key, (line, value)) {
            return Err(err(line, key, format!("duplicate key, first given on line {prev}")));
        }
    }
    let get = |key: &'static str| entries.get(key).copied().ok_or(SpecFileError::MissingKey(key));
    let int = |key: &'static str| -> Result<usize, SpecFileError> {
        let (line, v) = get(key)?;
        v.parse().map_err(|_| err(line, key, format!("not a non-negative integer: {v:?}")))
    };
    let element = |key: &'static str| -> Result<FieldElement, SpecFileError> {
        let (line, v) = get(key)?;
        let idx: u64 = v.parse().map_err(|_| err(line, key, format!("not an element index: {v:?}")))?;
        field.element(idx).map_err(|e| err(line, key, e.to_string()))
    };
    let elements = |key: &'static str| -> Result<Vec<FieldElement>, SpecFileError> {
        let (line, v) = get(key)?;
        if v.is_empty() {
            return Ok(Vec::new());
        }
        v.split(',')
            .map(|tok| {
                let idx: u64 = tok
                    .trim()
                    .parse()
                    .map_err(|_| err(line, key, format!("not an element index: {tok:?}")))?;
                field.element(idx).map_err(|e| err(line, key, e.to_string()))
            })
            .collect()
    };

    let (fl, fv) = get("family")?;
    let family: Family = fv.parse().map_err(|e: CodeError| err(fl, "family", e.to_string()))?;
    let (el, ev) = get("extended")?;
    let extended = match ev {
        "0" => false,
        "1" => true,
        _ => return Err(err(el, "extended", format!("expected 0 or 1, got {ev:?}"))),
    };
    let v = if entries.contains_key("v") { Some(elements("v")?) } else { None };
    let spec = CodeSpec {
        family,
        n: int("n")?,
        k: int("k")?,
        alphas: elements("alphas")?,
        v,
        h: int("h")?,
        t: int("t")?,
        b: element("b")?,
        c: element("c")?,
        lambda: element("lambda")?,
        eta: element("eta")?,
        extended,
        field,
    };
    spec.validate()?;
    Ok(spec)
}

fn split(line: &str) -> (&str, &str) {
    match line.split_once(char::is_whitespace) {
        Some((k, v)) => (k, v.trim()),
        None => (line, ""),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CodeSpec {
        let f = GaloisField::new(17, 1).unwrap();
        let alphas = [0, 3, 7, 8, 10, 12, 13].iter().map(|&x| f.from_int(x)).collect();
        CodeSpec::rctrs(&f, alphas, 4, 0, 1, f.from_int(1), f.from_int(2), f.from_int(10), f.from_int(4)).unwrap()
    }

    #[test]
    fn round_trip() {
        let spec = sample();
        let text = write_spec(&spec).unwrap();
        assert!(text.starts_with("field 17^1/1,0\n"));
        assert_eq!(read_spec(&text).unwrap(), spec);
        let f = GaloisField::new(5, 2).unwrap();
        let grs = CodeSpec::grs(
            &f,
            vec![f.from_int(1), f.from_int(2)],
            Some(vec![f.from_int(3), f.element(7).unwrap()]),
            1,
        )
        .unwrap();
        assert_eq!(read_spec(&write_spec(&grs).unwrap()).unwrap(), grs);
    }

    #[test]
    fn errors_name_line_and_key() {
        let text = write_spec(&sample()).unwrap();
        let bad = text.replace("h 0", "h 4");
        assert_eq!(
            read_spec(&bad),
            Err(SpecFileError::Validation(CodeError::HookOutOfRange { h: 4, k: 4 }))
        );
        let unknown = format!("{text}colour red\n");
        match read_spec(&unknown) {
            Err(SpecFileError::Parse { line, key, .. }) => assert_eq!((line, key.as_str()), (13, "colour")),
            other => panic!("{other:?}"),
        }
        let dup = format!("{text}k 4\n");
        assert!(matches!(read_spec(&dup), Err(SpecFileError::Parse { line: 13, .. })));
        let missing = text.replace("eta 4\n", "");
        assert_eq!(read_spec(&missing), Err(SpecFileError::MissingKey("eta")));
        let big = text.replace("b 1", "b 17");
        assert!(matches!(read_spec(&big), Err(SpecFileError::Parse { line: 9, .. })));
        let dup_alpha = text.replace("0,3,7", "0,3,3");
        assert!(matches!(
            read_spec(&dup_alpha),
            Err(SpecFileError::Validation(CodeError::InvalidSpec(_)))
        ));
    }
}
