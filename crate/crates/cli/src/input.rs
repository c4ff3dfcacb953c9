use weil_core::algebra::{parse_preset, Algebra};

use crate::Failure;

/// Algebra spec; `@path` reads the spec (typically JSON) from a file.
pub fn algebra(spec: &str) -> Result<Algebra, Failure> {
    let text = match spec.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))?,
        None => spec.to_string(),
    };
    parse_preset(&text).map_err(Failure::usage)
}

/// `x1:[a,b],x2:[c,d],...` with every coordinate of `R^n` present once.
pub fn region(text: &str, n: usize) -> Result<Vec<(f64, f64)>, Failure> {
    let bad = |msg: String| Failure::usage(format!("invalid region {text:?}: {msg}"));
    let mut out: Vec<Option<(f64, f64)>> = vec![None; n];
    let mut rest = text.trim();
    while !rest.is_empty() {
        let (name, after) = rest.split_once(':').ok_or_else(|| bad("expected x<i>:[a,b]".into()))?;
        let name = name.trim();
        let i: usize = name
            .strip_prefix('x')
            .and_then(|d| d.parse().ok())
            .filter(|&i| (1..=n).contains(&i))
            .ok_or_else(|| bad(format!("unknown coordinate {name:?}")))?;
        let after = after.trim_start().strip_prefix('[').ok_or_else(|| bad(format!("expected '[' after {name}")))?;
        let (inner, tail) = after.split_once(']').ok_or_else(|| bad("missing ']'".into()))?;
        let (lo, hi) = inner.split_once(',').ok_or_else(|| bad(format!("expected two bounds for {name}")))?;
        let parse = |s: &str| s.trim().parse::<f64>().map_err(|_| bad(format!("bad bound {:?}", s.trim())));
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(bad(format!("empty interval for {name}")));
        }
        if out[i - 1].replace((lo, hi)).is_some() {
            return Err(bad(format!("{name} given twice")));
        }
        rest = tail.trim_start();
        rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
    }
    out.into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or_else(|| bad(format!("missing x{}", i + 1))))
        .collect()
}
