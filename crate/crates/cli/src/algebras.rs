//! Algebra and map names accepted on the command line.

use okubo_core::compalg::{
    from_kw, para, parse_algebra, petersson, split_okubo, split_okubo_type1, zorn, Algebra, KwData, Tag,
};
use okubo_core::exactfield::{make_etale, EtaleAlgebra, EtaleSpec, Field, KElem};
use okubo_core::liealg::{chevalley_basis, exp_root, Root};
use okubo_core::linalg::Matrix;
use okubo_core::maps::{tau_normal_form, tau_st, Automorphism};
use okubo_core::{Error, Result};

pub const ALGEBRA_NAMES: &str =
    "zorn, para-zorn, split-okubo, split-okubo-type1, kw:<K>:<a>, kw-cayley:<K>:<a>";
pub const MAP_NAMES: &str = "tau-st, type1, type2, type3, type4, swap, exp:<root>:<t>";

/// Splits on commas outside brackets and parentheses.
fn split_commas(text: &str) -> Vec<&str> {
    let mut out = vec![];
    let (mut depth, mut start) = (0i32, 0);
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

/// Splits on colons outside brackets and parentheses.
fn split_colons(text: &str) -> Vec<&str> {
    let mut out = vec![];
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in text.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ':' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

/// `split` or `b,c` for K = F[X]/(X² − bX − c); `α` (split only, meaning
/// (α, 1/α)) or `a0,a1` for a = a0 + a1·X.
pub fn parse_ka(f: Field, k_spec: &str, a_spec: &str) -> Result<(EtaleAlgebra, KElem)> {
    let k = if k_spec.trim() == "split" {
        make_etale(f, EtaleSpec::Split)?
    } else {
        match split_commas(k_spec)[..] {
            [b, c] => make_etale(f, EtaleSpec::Quadratic(f.parse_element(b)?, f.parse_element(c)?))?,
            _ => return Err(Error::Parse(format!("K must be 'split' or 'b,c', got '{k_spec}'"))),
        }
    };
    let a = match split_commas(a_spec)[..] {
        [alpha] if k_spec.trim() == "split" => {
            let alpha = f.parse_element(alpha)?;
            let inv = alpha.inv().ok_or_else(|| Error::Parse("a = (0, 1/0)".into()))?;
            k.from_pair(&alpha, &inv).ok_or_else(|| Error::Parse("cannot form (α, 1/α)".into()))?
        }
        [a0, a1] => k.elem(f.parse_element(a0)?, f.parse_element(a1)?),
        _ => return Err(Error::Parse(format!("a must be 'α' (split K) or 'a0,a1', got '{a_spec}'"))),
    };
    Ok((k, a))
}

pub fn kw_data(f: Field, k_spec: &str, a_spec: &str) -> Result<KwData> {
    let (k, a) = parse_ka(f, k_spec, a_spec)?;
    from_kw(&k, &a)
}

/// The Okubo algebra C_τ for τ = τ_{K,a}, with 1 as its known idempotent.
pub fn kw_okubo(kw: &KwData) -> Result<Algebra> {
    Ok(petersson(&kw.algebra, kw.tau.matrix())?.with_tag(Tag::Okubo { idempotent: Some(kw.one()) }))
}

pub fn algebra(f: Field, name: &str) -> Result<Algebra> {
    match name {
        "zorn" => return Ok(zorn(f)),
        "para-zorn" => return para(&zorn(f)),
        "split-okubo" => return Ok(split_okubo(f)),
        "split-okubo-type1" => return split_okubo_type1(f),
        _ => {}
    }
    match split_colons(name)[..] {
        ["kw", k, a] => kw_okubo(&kw_data(f, k, a)?),
        ["kw-cayley", k, a] => Ok(kw_data(f, k, a)?.algebra),
        _ => Err(Error::Parse(format!("unknown algebra '{name}'; expected one of {ALGEBRA_NAMES}"))),
    }
}

/// e₁ ↔ e₂, uᵢ ↔ vᵢ on the Zorn algebra.
fn swap(f: Field) -> Matrix {
    let mut m = Matrix::zero(f, 8, 8);
    for (i, j) in [(0, 1), (1, 0), (2, 5), (3, 6), (4, 7), (5, 2), (6, 3), (7, 4)] {
        m.set(j, i, f.one());
    }
    m
}

/// Named automorphisms of zorn(F).
pub fn zorn_map(f: Field, name: &str) -> Result<Automorphism> {
    let z = zorn(f);
    match name {
        "tau-st" => return tau_st(&z),
        "swap" => return Automorphism::new(&z, swap(f)),
        _ => {}
    }
    if let Some(k) = name.strip_prefix("type").and_then(|k| k.parse::<u8>().ok()) {
        return tau_normal_form(&z, k);
    }
    match split_colons(name)[..] {
        ["exp", root, t] => {
            let r = Root::parse(root).ok_or_else(|| Error::Parse(format!("bad root '{root}'")))?;
            let cb = chevalley_basis(&z)?;
            exp_root(&z, &cb, r, &f.parse_element(t)?)
        }
        _ => Err(Error::Parse(format!("unknown map '{name}'; expected one of {MAP_NAMES}"))),
    }
}

/// The algebra header of a classify input: `algebra <name>` on one line, or
/// a full algebra block terminated by a `---` line. Returns the rest.
pub fn algebra_header(f: Field, text: &str) -> Result<(Algebra, String)> {
    let trimmed = text.trim_start();
    if let Some(rest) = trimmed.strip_prefix("algebra ") {
        let (name, body) = rest.split_once('\n').unwrap_or((rest, ""));
        return Ok((algebra(f, name.trim())?, body.to_string()));
    }
    let mut block = String::new();
    let mut lines = trimmed.lines();
    for l in lines.by_ref() {
        if l.trim() == "---" {
            let a = parse_algebra(&block)?;
            if a.field() != f {
                return Err(Error::Parse(format!("algebra is over {}, not {f}", a.field())));
            }
            return Ok((a, lines.collect::<Vec<_>>().join("\n")));
        }
        block.push_str(l);
        block.push('\n');
    }
    Err(Error::Parse("input must start with 'algebra <name>' or an algebra block ended by '---'".into()))
}
