//! Line-oriented problem files.
//!
//! ```text
//! # comment
//! p: 2
//! vars: x y z
//! u: x^2*y + x*y*z + z^3
//! epsilon: x^2*y + x*y*z + z^3      # Gorenstein mode only
//! ideal J: x, z
//! option pool = linear
//! ```

use std::fmt;

use crate::error::Error;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::PolyRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    CompleteIntersection,
    Gorenstein,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::CompleteIntersection => "complete-intersection",
            Mode::Gorenstein => "gorenstein",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PoolSpec {
    Vars,
    Linear,
    File(String),
}

impl std::str::FromStr for PoolSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "vars" => Ok(PoolSpec::Vars),
            "linear" => Ok(PoolSpec::Linear),
            other => match other.strip_prefix("file:") {
                Some(path) if !path.is_empty() => Ok(PoolSpec::File(path.to_string())),
                _ => Err(format!("unknown pool `{other}` (expected vars, linear or file:PATH)")),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Options {
    pub order: Option<MonomialOrder>,
    pub emax: Option<usize>,
    pub max_iter: Option<usize>,
    pub max_pairs: Option<usize>,
    pub max_basis: Option<usize>,
    pub max_members: Option<usize>,
    pub pool: Option<PoolSpec>,
    /// Extra pool elements, typically factors of the defining polynomials.
    pub factors: Vec<Polynomial>,
}

#[derive(Clone, Debug)]
pub struct NamedIdeal {
    pub name: String,
    pub gens: Vec<Polynomial>,
}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub ring: PolyRing,
    pub mode: Mode,
    pub u: Vec<Polynomial>,
    pub epsilon: Option<Polynomial>,
    pub ideals: Vec<NamedIdeal>,
    pub options: Options,
}

/// A problem-file error with a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ProblemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ProblemError {}

struct Line<'a> {
    number: usize,
    /// byte offset of `text` within the raw line
    start: usize,
    text: &'a str,
}

impl Line<'_> {
    fn err(&self, offset: usize, message: impl Into<String>) -> ProblemError {
        ProblemError { line: self.number, column: self.start + offset + 1, message: message.into() }
    }
}

impl ProblemFile {
    pub fn parse(src: &str) -> Result<Self, ProblemError> {
        let mut p: Option<(u64, Line)> = None;
        let mut vars: Option<(Vec<String>, Line)> = None;
        let mut rest: Vec<(String, Line)> = Vec::new();

        for (i, raw) in src.lines().enumerate() {
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let lead = content.len() - content.trim_start().len();
            let line = Line { number: i + 1, start: lead, text: content.trim() };
            let (key, value, value_at) = if let Some(body) = line.text.strip_prefix("option ") {
                ("option".to_string(), body, "option ".len())
            } else {
                let Some(colon) = line.text.find(':') else {
                    return Err(line.err(0, "expected `key: value`"));
                };
                let key = line.text[..colon].trim().to_string();
                (key, &line.text[colon + 1..], colon + 1)
            };
            let value_line = Line { number: line.number, start: line.start + value_at, text: value };
            match key.as_str() {
                "p" => {
                    if p.is_some() {
                        return Err(line.err(0, "`p` declared twice"));
                    }
                    let v = value.trim().parse::<u64>().map_err(|_| value_line.err(0, "`p` must be an integer"))?;
                    p = Some((v, value_line));
                }
                "vars" => {
                    if vars.is_some() {
                        return Err(line.err(0, "`vars` declared twice"));
                    }
                    let names: Vec<String> = value.split_whitespace().map(str::to_string).collect();
                    if names.is_empty() {
                        return Err(value_line.err(0, "no variables declared"));
                    }
                    vars = Some((names, value_line));
                }
                _ => rest.push((key, value_line)),
            }
        }

        let (p, p_line) = p.ok_or(ProblemError { line: 1, column: 1, message: "missing `p:` line".into() })?;
        let (names, vars_line) =
            vars.ok_or(ProblemError { line: 1, column: 1, message: "missing `vars:` line".into() })?;
        let ring = PolyRing::with_names(p, names).map_err(|e| match e {
            Error::NotPrime(_) => p_line.err(0, e.to_string()),
            other => vars_line.err(0, other.to_string()),
        })?;

        let mut u = None;
        let mut epsilon = None;
        let mut ideals: Vec<NamedIdeal> = Vec::new();
        let mut options = Options::default();
        for (key, line) in rest {
            if key == "u" {
                if u.is_some() {
                    return Err(line.err(0, "`u` declared twice"));
                }
                u = Some(parse_list(&ring, &line)?);
            } else if key == "epsilon" {
                if epsilon.is_some() {
                    return Err(line.err(0, "`epsilon` declared twice"));
                }
                epsilon = Some(parse_poly(&ring, &line, 0, line.text)?);
            } else if let Some(name) = key.strip_prefix("ideal ") {
                let name = name.trim().to_string();
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(line.err(0, "ideal names must be a single word"));
                }
                if ideals.iter().any(|i| i.name == name) {
                    return Err(line.err(0, format!("ideal `{name}` declared twice")));
                }
                ideals.push(NamedIdeal { name, gens: parse_list(&ring, &line)? });
            } else if key == "option" {
                parse_option(&ring, &line, &mut options)?;
            } else {
                return Err(ProblemError {
                    line: line.number,
                    column: 1,
                    message: format!("unknown key `{key}`"),
                });
            }
        }
        let u = u.ok_or(ProblemError { line: 1, column: 1, message: "missing `u:` line".into() })?;
        let mode = if epsilon.is_some() { Mode::Gorenstein } else { Mode::CompleteIntersection };
        Ok(ProblemFile { ring, mode, u, epsilon, ideals, options })
    }
}

fn parse_poly(ring: &PolyRing, line: &Line, offset: usize, text: &str) -> Result<Polynomial, ProblemError> {
    ring.parse(text).map_err(|e| match e {
        Error::Parse { offset: o, message } => line.err(offset + o, message),
        other => line.err(offset, other.to_string()),
    })
}

fn parse_list(ring: &PolyRing, line: &Line) -> Result<Vec<Polynomial>, ProblemError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in line.text.split(',') {
        out.push(parse_poly(ring, line, offset, piece)?);
        offset += piece.len() + 1;
    }
    Ok(out)
}

fn parse_option(ring: &PolyRing, line: &Line, options: &mut Options) -> Result<(), ProblemError> {
    let Some(eq) = line.text.find('=') else {
        return Err(line.err(0, "expected `option KEY = VALUE`"));
    };
    let key = line.text[..eq].trim();
    let value = line.text[eq + 1..].trim();
    let value_at = eq + 1 + (line.text[eq + 1..].len() - line.text[eq + 1..].trim_start().len());
    let int = |v: &str| v.parse::<usize>().map_err(|_| line.err(value_at, format!("`{key}` expects an integer")));
    match key {
        "order" => options.order = Some(value.parse().map_err(|e: String| line.err(value_at, e))?),
        "emax" => options.emax = Some(int(value)?),
        "max_iter" | "max-iter" => options.max_iter = Some(int(value)?),
        "max_pairs" | "max-pairs" => options.max_pairs = Some(int(value)?),
        "max_basis" | "max-basis" => options.max_basis = Some(int(value)?),
        "max_members" | "max-members" => options.max_members = Some(int(value)?),
        "pool" => options.pool = Some(value.parse().map_err(|e: String| line.err(value_at, e))?),
        "factors" => {
            let sub = Line { number: line.number, start: line.start + value_at, text: value };
            options.factors.extend(parse_list(ring, &sub)?);
        }
        other => return Err(line.err(0, format!("unknown option `{other}`"))),
    }
    Ok(())
}
