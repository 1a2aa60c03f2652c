//! Line-oriented text format describing an input function.
//!
//! ```text
//! # three levels
//! kind: step
//! piece 0 2 1
//! piece 3 4 2
//! ```
//!
//! `kind: bertrand` takes `alpha <a>` and `beta <b>`. `kind: profile` takes
//! `point <r> <value>` samples of a radial profile (linear in between, zero
//! past the last point) and an optional `dim <d>` (default 1).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::numeric::{bertrand, NumericError, RadialProfile};
use crate::step::{SimpleFunction, StepError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `kind:` header")]
    MissingKind,
    #[error("line {line}: {source}")]
    Step { line: usize, source: StepError },
    #[error("line {line}: {source}")]
    Profile { line: usize, source: NumericError },
}

fn syntax(line: usize, message: impl Into<String>) -> SpecError {
    SpecError::Syntax {
        line,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FunctionSpec {
    Step(SimpleFunction),
    Bertrand { alpha: f64, beta: f64 },
    Profile { dim: usize, points: Vec<(f64, f64)> },
}

impl FunctionSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            FunctionSpec::Step(_) => "step",
            FunctionSpec::Bertrand { .. } => "bertrand",
            FunctionSpec::Profile { .. } => "profile",
        }
    }

    /// Radial profile for the non-step kinds.
    pub fn to_profile(&self) -> Option<Result<RadialProfile, NumericError>> {
        match self {
            FunctionSpec::Step(_) => None,
            &FunctionSpec::Bertrand { alpha, beta } => Some(Ok(bertrand(alpha, beta))),
            FunctionSpec::Profile { dim, points } => Some(RadialProfile::tabulated(*dim, points.clone())),
        }
    }
}

fn number(line: usize, field: &str, token: Option<&str>) -> Result<f64, SpecError> {
    let token = token.ok_or_else(|| syntax(line, format!("missing {field}")))?;
    let value = f64::from_str(token).map_err(|_| syntax(line, format!("{field}: `{token}` is not a number")))?;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(syntax(line, format!("{field} must be finite")))
    }
}

fn no_more<'a>(line: usize, mut rest: impl Iterator<Item = &'a str>) -> Result<(), SpecError> {
    match rest.next() {
        Some(extra) => Err(syntax(line, format!("unexpected token `{extra}`"))),
        None => Ok(()),
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Kind {
    Step,
    Bertrand,
    Profile,
}

pub fn parse(text: &str) -> Result<FunctionSpec, SpecError> {
    let mut kind: Option<(Kind, usize)> = None;
    let mut pieces: Vec<(usize, f64, f64, f64)> = Vec::new();
    let mut points: Vec<(usize, f64, f64)> = Vec::new();
    let mut alpha: Option<f64> = None;
    let mut beta: Option<f64> = None;
    let mut dim: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("kind:") {
            if kind.is_some() {
                return Err(syntax(line, "duplicate `kind:` header"));
            }
            let k = match rest.trim() {
                "step" => Kind::Step,
                "bertrand" => Kind::Bertrand,
                "profile" => Kind::Profile,
                other => return Err(syntax(line, format!("unknown kind `{other}`"))),
            };
            kind = Some((k, line));
            continue;
        }
        let Some((k, _)) = kind else {
            return Err(syntax(line, "expected `kind:` header before data"));
        };
        let mut tokens = content.split_whitespace();
        let keyword = tokens.next().unwrap_or_default();
        match (k, keyword) {
            (Kind::Step, "piece") => {
                let left = number(line, "left", tokens.next())?;
                let right = number(line, "right", tokens.next())?;
                let value = number(line, "value", tokens.next())?;
                no_more(line, tokens)?;
                if left >= right {
                    return Err(SpecError::Step {
                        line,
                        source: StepError::BadInterval { left, right },
                    });
                }
                pieces.push((line, left, right, value));
            }
            (Kind::Bertrand, "alpha" | "beta") => {
                let v = number(line, keyword, tokens.next())?;
                no_more(line, tokens)?;
                let slot = if keyword == "alpha" { &mut alpha } else { &mut beta };
                if slot.replace(v).is_some() {
                    return Err(syntax(line, format!("duplicate `{keyword}`")));
                }
            }
            (Kind::Profile, "point") => {
                let r = number(line, "radius", tokens.next())?;
                let v = number(line, "value", tokens.next())?;
                no_more(line, tokens)?;
                points.push((line, r, v));
            }
            (Kind::Profile, "dim") => {
                let token = tokens.next().ok_or_else(|| syntax(line, "missing dimension"))?;
                let d = token
                    .parse::<usize>()
                    .ok()
                    .filter(|&d| d >= 1)
                    .ok_or_else(|| syntax(line, format!("dimension `{token}` must be a positive integer")))?;
                no_more(line, tokens)?;
                if dim.replace(d).is_some() {
                    return Err(syntax(line, "duplicate `dim`"));
                }
            }
            _ => return Err(syntax(line, format!("unexpected `{keyword}` for this kind"))),
        }
    }

    let (kind, header) = kind.ok_or(SpecError::MissingKind)?;
    match kind {
        Kind::Step => {
            pieces.sort_by(|a, b| a.1.total_cmp(&b.1));
            for w in pieces.windows(2) {
                let (_, l0, r0, _) = w[0];
                let (line, l1, r1, _) = w[1];
                if r0 > l1 {
                    return Err(SpecError::Step {
                        line,
                        source: StepError::Overlap(l0, r0, l1, r1),
                    });
                }
            }
            let f = SimpleFunction::new(pieces.iter().map(|&(_, l, r, v)| (l, r, v)))
                .map_err(|source| SpecError::Step { line: header, source })?;
            Ok(FunctionSpec::Step(f))
        }
        Kind::Bertrand => {
            let alpha = alpha.ok_or_else(|| syntax(header, "bertrand needs `alpha`"))?;
            let beta = beta.ok_or_else(|| syntax(header, "bertrand needs `beta`"))?;
            Ok(FunctionSpec::Bertrand { alpha, beta })
        }
        Kind::Profile => {
            let dim = dim.unwrap_or(1);
            let samples: Vec<(f64, f64)> = points.iter().map(|&(_, r, v)| (r, v)).collect();
            RadialProfile::tabulated(dim, samples.clone()).map_err(|source| SpecError::Profile {
                line: points.last().map(|p| p.0).unwrap_or(header),
                source,
            })?;
            Ok(FunctionSpec::Profile { dim, points: samples })
        }
    }
}

impl FromStr for FunctionSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

// `{}` on f64 prints the shortest string that parses back to the same value.
impl fmt::Display for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kind: {}", self.kind())?;
        match self {
            FunctionSpec::Step(s) => {
                for p in s.pieces() {
                    writeln!(f, "piece {} {} {}", p.left, p.right, p.value)?;
                }
            }
            FunctionSpec::Bertrand { alpha, beta } => {
                writeln!(f, "alpha {alpha}")?;
                writeln!(f, "beta {beta}")?;
            }
            FunctionSpec::Profile { dim, points } => {
                writeln!(f, "dim {dim}")?;
                for (r, v) in points {
                    writeln!(f, "point {r} {v}")?;
                }
            }
        }
        Ok(())
    }
}
