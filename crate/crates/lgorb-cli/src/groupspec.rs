//! The group specification file: structured key-value text naming the
//! diagonal and permutation generators of `S ⋉ H`.
//!
//! ```text
//! diag_generators = [["1/4", "1/4", "1/4", "1/6"]]
//! perm_generators = ["(1 2 3)", "(4 5 6)"]
//! ```
//!
//! `diag_generators` also accepts the shorthand tokens `jW`, `Gdiag` and
//! `SLW`, resolved against the polynomial. Either key may be omitted.

use lgorb::groups::{diag_generators as rho, j_w, sl_w, Diagonal, Permutation};
use lgorb::poly::InvertiblePolynomial;
use lgorb::rat::parse_rational;
use lgorb::Error;

pub struct GroupSpec {
    pub diag_generators: Vec<Diagonal>,
    pub perm_generators: Vec<Permutation>,
}

impl GroupSpec {
    pub fn load(path: &str, w: &InvertiblePolynomial) -> Result<GroupSpec, Error> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("reading {path}: {e}")))?;
        Self::parse(&text, w)
    }

    pub fn parse(text: &str, w: &InvertiblePolynomial) -> Result<GroupSpec, Error> {
        let mut diags: Vec<Diagonal> = Vec::new();
        let mut perms: Vec<Permutation> = Vec::new();
        for raw_line in text.lines() {
            let line = raw_line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key = value, got {line:?}")))?;
            match key.trim() {
                "diag_generators" => diags = parse_diag_value(value.trim(), w)?,
                "perm_generators" => perms = parse_perm_value(value.trim(), w.n_vars())?,
                other => {
                    return Err(Error::Parse(format!("unknown key {other:?}")));
                }
            }
        }
        Ok(GroupSpec {
            diag_generators: diags,
            perm_generators: perms,
        })
    }
}

fn parse_diag_value(value: &str, w: &InvertiblePolynomial) -> Result<Vec<Diagonal>, Error> {
    match value.trim_matches('"') {
        "jW" => return Ok(vec![j_w(w)]),
        "Gdiag" => return Ok(rho(w)),
        "SLW" => return Ok(sl_w(w)?.generators),
        _ => {}
    }
    let rows = parse_string_lists(value)?;
    let mut out = Vec::new();
    for row in rows {
        if row.len() != w.n_vars() {
            return Err(Error::Parse(format!(
                "diagonal generator has {} entries for {} variables",
                row.len(),
                w.n_vars()
            )));
        }
        let rat_entries: Result<Vec<_>, _> = row.iter().map(|s| parse_rational(s)).collect();
        out.push(Diagonal::from_rationals(&rat_entries?));
    }
    Ok(out)
}

fn parse_perm_value(value: &str, n: usize) -> Result<Vec<Permutation>, Error> {
    let items = parse_string_list(value)?;
    items.iter().map(|s| Permutation::parse(s, n)).collect()
}

/// Parses `[["a", "b"], ["c"]]`.
fn parse_string_lists(value: &str) -> Result<Vec<Vec<String>>, Error> {
    let v: serde_json::Value =
        serde_json::from_str(value).map_err(|e| Error::Parse(format!("bad list syntax: {e}")))?;
    let outer = v
        .as_array()
        .ok_or_else(|| Error::Parse("expected a list of lists".into()))?;
    outer
        .iter()
        .map(|inner| {
            inner
                .as_array()
                .ok_or_else(|| Error::Parse("expected a list of lists".into()))?
                .iter()
                .map(|s| {
                    s.as_str()
                        .map(String::from)
                        .ok_or_else(|| Error::Parse("expected string entries".into()))
                })
                .collect()
        })
        .collect()
}

/// Parses `["(1 2 3)", "(4 5)"]`.
fn parse_string_list(value: &str) -> Result<Vec<String>, Error> {
    let v: serde_json::Value =
        serde_json::from_str(value).map_err(|e| Error::Parse(format!("bad list syntax: {e}")))?;
    v.as_array()
        .ok_or_else(|| Error::Parse("expected a list".into()))?
        .iter()
        .map(|s| {
            s.as_str()
                .map(String::from)
                .ok_or_else(|| Error::Parse("expected string entries".into()))
        })
        .collect()
}
