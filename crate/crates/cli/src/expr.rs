//! Set expressions for the command line.
//!
//! `p=1/2, q` is the set with `p ↦ 1/2`, `q ↦ 1`; surrounding braces are
//! optional, so the display form of a set parses back to it. `*=λ` sets every
//! element to `λ`, and `empty` / `all` name the constant sets.

use fuzzy_closure_core::{Carrier, Error, FuzzySet};

pub fn parse_set(carrier: &Carrier, text: &str) -> Result<FuzzySet, Error> {
    let body = text.trim();
    let body = body
        .strip_prefix('{')
        .and_then(|b| b.strip_suffix('}'))
        .unwrap_or(body)
        .trim();
    match body {
        "empty" | "" => return Ok(carrier.zero()),
        "all" => return Ok(carrier.one()),
        _ => {}
    }
    let mut grades = vec![0; carrier.len()];
    for item in body.split(',') {
        let item = item.trim();
        let (name, level) = match item.split_once('=') {
            Some((name, level)) => (name.trim(), carrier.chain().parse_level(level.trim())?.0),
            None => (item, carrier.denominator()),
        };
        if name == "*" {
            grades.iter_mut().for_each(|g| *g = level);
        } else {
            grades[carrier.universe().require(name)?] = level;
        }
    }
    carrier.set(grades)
}
