//! Text, LaTeX and JSON renderings of elements.

use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::Signed;

use crate::coeffs::Scalar;
use crate::error::{Error, Result};
use crate::powers::{Element, Space};
use crate::tableaux::Tableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
    Latex,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            _ => Err(Error::Parse(format!("unknown format {s:?} (expected json, text or latex)"))),
        }
    }
}

pub fn render<S: Space>(x: &Element<S>, format: Format) -> String {
    match format {
        Format::Json => json(x),
        Format::Text => text(x),
        Format::Latex => latex(x),
    }
}

/// Canonical JSON; the zero element renders as `0`.
pub fn json<S: Space>(x: &Element<S>) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.to_json()
}

/// Inverse of [`json`]. `0` is read as zero over ℤ.
pub fn parse<S: Space>(s: &str) -> Result<Element<S>> {
    parse_in(s, crate::coeffs::Ring::Integers)
}

/// Like [`parse`], but a bare `0` carries no ring and is read as zero over `ring`.
pub fn parse_in<S: Space>(s: &str, ring: crate::coeffs::Ring) -> Result<Element<S>> {
    if s.trim() == "0" {
        return Ok(Element::zero(ring));
    }
    Element::from_json(s)
}

fn negative(c: &Scalar) -> bool {
    match c {
        Scalar::Int(k) => k.is_negative(),
        Scalar::Rat(q) => q.is_negative(),
        Scalar::Mod { .. } => false,
    }
}

fn sum<S: Space>(x: &Element<S>, mul: &str, label: impl Fn(&Tableau) -> String) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (t, c)) in x.iter().enumerate() {
        let neg = negative(c);
        let mag = if neg { -c } else { c.clone() };
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if !mag.is_one() {
            let _ = write!(out, "{mag}{mul}");
        }
        out.push_str(&label(t));
    }
    out
}

pub fn text<S: Space>(x: &Element<S>) -> String {
    let wrap = |t: &Tableau| match S::TAG {
        "sym_upper" => format!("⌊{}⌋", t.short()),
        "sym_lower" => format!("rsym({})", t.short()),
        "wedge" => format!("|{}|", t.short()),
        _ => format!("[{}]", t.short()),
    };
    sum(x, "·", wrap)
}

/// `ytableau` markup for one tableau.
pub fn ytableau(t: &Tableau) -> String {
    let rows: Vec<String> = t
        .rows()
        .iter()
        .map(|r| r.iter().map(|&v| if v > 9 { format!("{{{v}}}") } else { v.to_string() }).collect())
        .collect();
    format!("\\ytableaushort{{{}}}", rows.join(","))
}

pub fn latex<S: Space>(x: &Element<S>) -> String {
    let wrap = |t: &Tableau| match S::TAG {
        "sym_upper" => format!("\\lfloor {} \\rfloor", ytableau(t)),
        "sym_lower" => format!("\\operatorname{{rsym}}\\left({}\\right)", ytableau(t)),
        "wedge" => format!("\\left|{}\\right|", ytableau(t)),
        _ => ytableau(t),
    };
    sum(x, " ", wrap)
}
