//! Line-based text documents holding one algebraic object each.
//!
//! ```text
//! # comments start with '#'
//! kind: 3hom_lie
//! mode: real
//! dim: 3
//! [bracket]
//! 0 1 2 0 = 1
//! 1 0 2 0 = -1
//! [alpha]
//! 0 0 = 1
//! ```
//!
//! Entries are `indices = scalar`; unlisted entries are zero. A missing twist
//! section (`alpha`, `phi`) means the identity map, while an empty one means
//! the zero map.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;
use trihom::{GaussRational, Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    HomLie,
    Lie,
    PreLie,
    LDend,
    LinearMap,
    Rep,
    PreLieRep,
    BilinearForm,
    Covector,
}

impl Kind {
    pub const ALL: [Kind; 9] = [
        Kind::HomLie,
        Kind::Lie,
        Kind::PreLie,
        Kind::LDend,
        Kind::LinearMap,
        Kind::Rep,
        Kind::PreLieRep,
        Kind::BilinearForm,
        Kind::Covector,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::HomLie => "hom_lie",
            Kind::Lie => "3hom_lie",
            Kind::PreLie => "3hom_prelie",
            Kind::LDend => "3hom_ldend",
            Kind::LinearMap => "linear_map",
            Kind::Rep => "rep",
            Kind::PreLieRep => "prelie_rep",
            Kind::BilinearForm => "bilinear_form",
            Kind::Covector => "covector",
        }
    }

    /// Whether a `moddim` header is meaningful for this kind.
    pub fn has_moddim(self) -> bool {
        matches!(self, Kind::LinearMap | Kind::Rep | Kind::PreLieRep)
    }

    /// Allowed sections in canonical order, with the bound of each index
    /// slot in terms of `(dim, moddim)`.
    pub fn sections(self) -> &'static [(&'static str, &'static [Bound])] {
        use Bound::{Dim as D, Mod as M};
        match self {
            Kind::HomLie => &[("bracket", &[D, D, D]), ("alpha", &[D, D])],
            Kind::Lie => &[("bracket", &[D, D, D, D]), ("alpha", &[D, D])],
            Kind::PreLie => &[("product", &[D, D, D, D]), ("alpha", &[D, D])],
            Kind::LDend => &[("nw", &[D, D, D, D]), ("ne", &[D, D, D, D]), ("alpha", &[D, D])],
            Kind::LinearMap => &[("map", &[D, M])],
            Kind::Rep => &[
                ("bracket", &[D, D, D, D]),
                ("alpha", &[D, D]),
                ("rho", &[D, D, M, M]),
                ("phi", &[M, M]),
            ],
            Kind::PreLieRep => &[
                ("product", &[D, D, D, D]),
                ("alpha", &[D, D]),
                ("l", &[D, D, M, M]),
                ("r", &[D, D, M, M]),
                ("phi", &[M, M]),
            ],
            Kind::BilinearForm => &[("form", &[D, D])],
            Kind::Covector => &[("covector", &[D])],
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        Kind::ALL.into_iter().find(|k| k.name() == s).ok_or(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Dim,
    Mod,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Real,
    Complex,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Real => "real",
            Mode::Complex => "complex",
        }
    }

    pub fn of<S: Scalar>() -> Self {
        if S::COMPLEX {
            Mode::Complex
        } else {
            Mode::Real
        }
    }
}

/// Sparse entries of one section, keyed by index tuple. Zero values are
/// never stored.
pub type Section = BTreeMap<Vec<usize>, GaussRational>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub kind: Kind,
    pub mode: Mode,
    pub dim: usize,
    pub moddim: Option<usize>,
    pub sections: BTreeMap<String, Section>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DocumentError {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("range error at line {line}, column {col}: index {index} must be below {bound}")]
    Range {
        line: usize,
        col: usize,
        index: usize,
        bound: usize,
    },
}

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> DocumentError {
    DocumentError::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

impl Document {
    pub fn new(kind: Kind, mode: Mode, dim: usize) -> Self {
        Self {
            kind,
            mode,
            dim,
            moddim: None,
            sections: BTreeMap::new(),
        }
    }

    /// Module dimension, defaulting to `dim`.
    pub fn module_dim(&self) -> usize {
        self.moddim.unwrap_or(self.dim)
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.get(name)
    }

    /// Stores a value, dropping zeros so the document stays canonical.
    pub fn insert(&mut self, section: &str, index: Vec<usize>, value: GaussRational) {
        let s = self.sections.entry(section.to_string()).or_default();
        if !value.is_zero() {
            s.insert(index, value);
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Parser::default().run(text)
    }

    /// Canonical text: fixed header order, sections in schema order, entries
    /// sorted by index, scalars in lowest terms.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "kind: {}", self.kind);
        let _ = writeln!(out, "mode: {}", self.mode.name());
        let _ = writeln!(out, "dim: {}", self.dim);
        if let Some(m) = self.moddim {
            let _ = writeln!(out, "moddim: {m}");
        }
        for (name, _) in self.kind.sections() {
            let Some(entries) = self.sections.get(*name) else {
                continue;
            };
            let _ = writeln!(out, "[{name}]");
            for (index, value) in entries {
                let idx: Vec<String> = index.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "{} = {}", idx.join(" "), value.render());
            }
        }
        out
    }
}

#[derive(Default)]
struct Parser {
    kind: Option<Kind>,
    mode: Option<Mode>,
    dim: Option<usize>,
    moddim: Option<usize>,
    sections: BTreeMap<String, Section>,
    current: Option<(String, &'static [Bound])>,
}

impl Parser {
    fn run(mut self, text: &str) -> Result<Document, DocumentError> {
        let mut last = 0;
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            last = line;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim();
            if trimmed.is_empty() {
                continue;
            }
            let col = content.len() - content.trim_start().len() + 1;
            if trimmed.starts_with('[') {
                self.section_header(trimmed, line, col)?;
            } else if self.current.is_some() {
                self.entry(content, line)?;
            } else {
                self.header(trimmed, line, col)?;
            }
        }
        let kind = self.kind.ok_or_else(|| parse_err(last.max(1), 1, "missing `kind` header"))?;
        let dim = self.dim.ok_or_else(|| parse_err(last.max(1), 1, "missing `dim` header"))?;
        Ok(Document {
            kind,
            mode: self.mode.unwrap_or(Mode::Real),
            dim,
            moddim: self.moddim,
            sections: self.sections,
        })
    }

    fn header(&mut self, text: &str, line: usize, col: usize) -> Result<(), DocumentError> {
        let colon = text
            .find(':')
            .ok_or_else(|| parse_err(line, col, format!("expected `key: value`, found `{text}`")))?;
        let (key, after) = (text[..colon].trim(), &text[colon + 1..]);
        let value = after.trim();
        let vcol = col + colon + first_col(after);
        let dup = |name: &str| parse_err(line, col, format!("duplicate `{name}` header"));
        match key {
            "kind" => {
                if self.kind.is_some() {
                    return Err(dup("kind"));
                }
                let kind = value
                    .parse::<Kind>()
                    .map_err(|_| parse_err(line, vcol, format!("unknown kind `{value}`")))?;
                self.kind = Some(kind);
            }
            "mode" => {
                if self.mode.is_some() {
                    return Err(dup("mode"));
                }
                self.mode = Some(match value {
                    "real" => Mode::Real,
                    "complex" => Mode::Complex,
                    _ => return Err(parse_err(line, vcol, format!("unknown mode `{value}`"))),
                });
            }
            "dim" | "moddim" => {
                let n = value
                    .parse::<usize>()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| parse_err(line, vcol, format!("`{key}` must be a positive integer")))?;
                let slot = if key == "dim" { &mut self.dim } else { &mut self.moddim };
                if slot.is_some() {
                    return Err(dup(key));
                }
                *slot = Some(n);
            }
            _ => return Err(parse_err(line, col, format!("unknown header `{key}`"))),
        }
        Ok(())
    }

    fn section_header(&mut self, text: &str, line: usize, col: usize) -> Result<(), DocumentError> {
        let kind = self
            .kind
            .ok_or_else(|| parse_err(line, col, "section before the `kind` header"))?;
        if self.dim.is_none() {
            return Err(parse_err(line, col, "section before the `dim` header"));
        }
        if self.moddim.is_some() && !kind.has_moddim() {
            return Err(parse_err(line, col, format!("`moddim` is not allowed for {kind}")));
        }
        let name = text
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .map(str::trim)
            .ok_or_else(|| parse_err(line, col, "expected `[section]`"))?;
        let bounds = kind
            .sections()
            .iter()
            .find(|(s, _)| *s == name)
            .map(|(_, b)| *b)
            .ok_or_else(|| parse_err(line, col + 1, format!("unknown section `{name}` for {kind}")))?;
        if self.sections.contains_key(name) {
            return Err(parse_err(line, col, format!("duplicate section `{name}`")));
        }
        self.sections.insert(name.to_string(), Section::new());
        self.current = Some((name.to_string(), bounds));
        Ok(())
    }

    fn entry(&mut self, content: &str, line: usize) -> Result<(), DocumentError> {
        let (name, bounds) = self.current.clone().expect("inside a section");
        let eq = content
            .find('=')
            .ok_or_else(|| parse_err(line, first_col(content), "expected `indices = value`"))?;
        let (lhs, rhs) = (&content[..eq], &content[eq + 1..]);
        let mut index = Vec::new();
        for (offset, token) in tokens(lhs) {
            let col = offset + 1;
            let i = token
                .parse::<usize>()
                .map_err(|_| parse_err(line, col, format!("expected an index, found `{token}`")))?;
            if index.len() < bounds.len() {
                let bound = match bounds[index.len()] {
                    Bound::Dim => self.dim.expect("checked in section header"),
                    Bound::Mod => self.moddim.or(self.dim).expect("checked in section header"),
                };
                if i >= bound {
                    return Err(DocumentError::Range {
                        line,
                        col,
                        index: i,
                        bound,
                    });
                }
            }
            index.push(i);
        }
        if index.len() != bounds.len() {
            return Err(parse_err(
                line,
                first_col(content),
                format!("section `{name}` takes {} indices, found {}", bounds.len(), index.len()),
            ));
        }
        let vcol = eq + 2 + (rhs.len() - rhs.trim_start().len());
        let value = parse_scalar(rhs.trim()).map_err(|msg| parse_err(line, vcol, msg))?;
        if self.mode != Some(Mode::Complex) && !value.im.is_zero() {
            return Err(parse_err(line, vcol, "imaginary part in a real-mode document"));
        }
        let section = self.sections.get_mut(&name).expect("section registered");
        if section.contains_key(&index) {
            return Err(parse_err(line, first_col(content), format!("duplicate entry {index:?}")));
        }
        if !value.is_zero() {
            section.insert(index, value);
        }
        Ok(())
    }
}

fn first_col(s: &str) -> usize {
    s.len() - s.trim_start().len() + 1
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.split_whitespace().map(move |t| (t.as_ptr() as usize - s.as_ptr() as usize, t))
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let bad = || format!("malformed number `{s}`");
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = |t: &str, signed: bool| {
        let body = if signed { t.strip_prefix('-').unwrap_or(t) } else { t };
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(num, true) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        None => BigInt::one(),
        Some(d) if digits(d, false) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
    };
    if d.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Rational::new(n, d))
}

/// Parses `p`, `p/q`, `bi`, `a+bi`, `a-bi`, `i`, `-i`. Spaces inside the
/// value are ignored, so `1/2 + 3/4 i` is accepted.
pub fn parse_scalar(text: &str) -> Result<GaussRational, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("missing value".to_string());
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok(GaussRational::new(parse_rational(&s)?, Rational::zero()));
    };
    // split at the last sign that is not leading
    let split = body
        .char_indices()
        .rev()
        .find(|&(k, c)| k > 0 && (c == '+' || c == '-') && !body[..k].ends_with('/'))
        .map(|(k, _)| k);
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re.is_empty() {
        Rational::zero()
    } else {
        parse_rational(re)?
    };
    let im = match im.strip_prefix('+').unwrap_or(im) {
        "" => Rational::one(),
        "-" => -Rational::one(),
        coef => parse_rational(coef).map_err(|_| format!("malformed scalar `{text}`"))?,
    };
    Ok(GaussRational::new(re, im))
}
