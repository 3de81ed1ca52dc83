//! Plain-text algebra and element files.
//!
//! ```text
//! dim d over <field> tag <tag>
//! # names e1 e2 ...            (optional)
//! d³ structure constants, row-major in (i, j, k), one (i, j) block per line
//! d diagonal norm values
//! d² polar Gram entries, one row per line
//! ```
//!
//! Tags: `hurwitz <elem>`, `para <elem>`, `petersson <elem>`, `okubo <elem>`,
//! `okubo none`, `generic`. Elements are bracketed coordinate lists.

use super::{witness_reproduces_table, Algebra, CanonicalWitness, Elem, QuadraticForm, Tag};
use crate::error::{Error, Result};
use crate::exactfield::{parse_field, Fe, Field};
use crate::linalg::Matrix;

pub fn format_element(x: &[Fe]) -> String {
    let parts: Vec<String> = x.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn tag_text(t: &Tag) -> String {
    match t {
        Tag::Hurwitz { unit } => format!("hurwitz {}", format_element(unit)),
        Tag::Para { para_unit } => format!("para {}", format_element(para_unit)),
        Tag::Petersson { unit } => format!("petersson {}", format_element(unit)),
        Tag::Okubo { idempotent: Some(e) } => format!("okubo {}", format_element(e)),
        Tag::Okubo { idempotent: None } => "okubo none".into(),
        Tag::Generic => "generic".into(),
    }
}

pub fn format_algebra(a: &Algebra) -> String {
    let d = a.dim();
    let mut s = format!("dim {} over {} tag {}\n", d, a.field(), tag_text(a.tag()));
    s.push_str(&format!("# names {}\n", a.names().join(" ")));
    let line = |v: &[Fe]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
    for i in 0..d {
        for j in 0..d {
            s.push_str(&line(a.basis_product(i, j)));
            s.push('\n');
        }
    }
    s.push_str(&line(a.form().diag()));
    s.push('\n');
    for i in 0..d {
        s.push_str(&line(a.form().gram().row(i)));
        s.push('\n');
    }
    s
}

/// Splits on top-level commas, respecting nested brackets and parentheses.
fn split_top(text: &str) -> Vec<&str> {
    let mut out = vec![];
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(text[start..].trim());
    out
}

/// "[c0,c1,...]" over `field`.
pub fn parse_element(field: Field, text: &str) -> Result<Elem> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("element must be bracketed: '{text}'")))?;
    if inner.trim().is_empty() {
        return Ok(vec![]);
    }
    split_top(inner).into_iter().map(|t| field.parse_element(t).map_err(Error::from)).collect()
}

fn parse_tag(field: Field, d: usize, text: &str) -> Result<Tag> {
    let text = text.trim();
    let (kind, rest) = text.split_once(' ').unwrap_or((text, ""));
    let elem = || -> Result<Elem> {
        let e = parse_element(field, rest)?;
        if e.len() != d {
            return Err(Error::Parse(format!("tag element has {} coordinates, expected {d}", e.len())));
        }
        Ok(e)
    };
    Ok(match kind {
        "hurwitz" => Tag::Hurwitz { unit: elem()? },
        "para" => Tag::Para { para_unit: elem()? },
        "petersson" => Tag::Petersson { unit: elem()? },
        "okubo" if rest.trim() == "none" => Tag::Okubo { idempotent: None },
        "okubo" => Tag::Okubo { idempotent: Some(elem()?) },
        "generic" => Tag::Generic,
        other => return Err(Error::Parse(format!("unknown tag '{other}'"))),
    })
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty algebra file".into()))?;
    let bad_header = || Error::Parse("expected 'dim d over <field> tag <tag>'".into());
    let rest = header.strip_prefix("dim ").ok_or_else(bad_header)?;
    let (d, rest) = rest.split_once(" over ").ok_or_else(bad_header)?;
    let (fs, tag) = rest.split_once(" tag ").ok_or_else(bad_header)?;
    let d: usize = d.trim().parse().map_err(|_| Error::Parse(format!("bad dimension '{d}'")))?;
    let field = parse_field(fs.trim())?;
    let tag = parse_tag(field, d, tag)?;
    let mut names = None;
    let mut entries: Vec<Fe> = vec![];
    for l in lines {
        if let Some(c) = l.strip_prefix('#') {
            if let Some(ns) = c.trim().strip_prefix("names") {
                names = Some(ns.split_whitespace().map(String::from).collect::<Vec<_>>());
            }
            continue;
        }
        for tok in l.split_whitespace() {
            entries.push(field.parse_element(tok)?);
        }
    }
    let need = d * d * d + d + d * d;
    if entries.len() != need {
        return Err(Error::Parse(format!("expected {need} field entries, found {}", entries.len())));
    }
    let table: Vec<Elem> = entries[..d * d * d].chunks(d).map(<[Fe]>::to_vec).collect();
    let diag = entries[d * d * d..d * d * d + d].to_vec();
    let gram_rows: Vec<Elem> = entries[d * d * d + d..].chunks(d).map(<[Fe]>::to_vec).collect();
    let form = QuadraticForm::new(diag, Matrix::from_rows(field, &gram_rows))?;
    let mut a = Algebra::new(field, table, form, tag)?;
    if let Some(ns) = names {
        if ns.len() != d {
            return Err(Error::Parse(format!("expected {d} names, found {}", ns.len())));
        }
        a = a.with_names(ns);
    }
    if d == 8 && a.unit().is_some() {
        let std = CanonicalWitness::standard(field);
        let w = if witness_reproduces_table(&a, &std).is_ok() {
            Some(std)
        } else {
            super::find_canonical_basis(&a, None).ok()
        };
        a = a.with_witness(w);
    }
    Ok(a)
}
