//! `key = value` job files for the `search` command.
//!
//! ```text
//! # comment
//! p = 5
//! m = 2
//! modulus = 2,4,1
//! n = 12
//! delta = 1-2v^2
//! gray = ref-5-2
//! degree_bounds = 2,1,1
//! ```
//!
//! Setting all of `f0`, `f1`, `f2` evaluates that single triple instead of
//! searching.

use std::fmt;
use std::str::FromStr;

use crate::distance::DEFAULT_D_MAX;
use crate::error::{Error, Result};
use crate::finite_field::DEFAULT_ENUMERATION_BOUND;
use crate::gray::GrayOrder;

/// How the Gray matrix is chosen.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum GraySpec {
    /// The shipped preset for the field if any, else the identity.
    #[default]
    Auto,
    Identity,
    Preset(String),
    /// Nine entries in field-element syntax, row-major.
    Explicit([[String; 3]; 3]),
}

impl fmt::Display for GraySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraySpec::Auto => f.write_str("auto"),
            GraySpec::Identity => f.write_str("identity"),
            GraySpec::Preset(name) => f.write_str(name),
            GraySpec::Explicit(rows) => {
                let rows: Vec<String> = rows.iter().map(|r| r.join(" ")).collect();
                write!(f, "[{}]", rows.join("; "))
            }
        }
    }
}

impl FromStr for GraySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "auto" => return Ok(GraySpec::Auto),
            "identity" => return Ok(GraySpec::Identity),
            _ => {}
        }
        let Some(body) = s.strip_prefix('[').and_then(|b| b.strip_suffix(']')) else {
            return Ok(GraySpec::Preset(s.to_string()));
        };
        let bad = |reason: &str| Error::Parse { input: s.into(), reason: reason.into() };
        let rows: Vec<Vec<String>> = body
            .split(';')
            .map(|r| r.split_whitespace().map(str::to_string).collect())
            .collect();
        if rows.len() != 3 || rows.iter().any(|r| r.len() != 3) {
            return Err(bad("expected three rows of three entries separated by ';'"));
        }
        let mut out: [[String; 3]; 3] = Default::default();
        for (dst, src) in out.iter_mut().zip(rows) {
            for (d, x) in dst.iter_mut().zip(src) {
                *d = x;
            }
        }
        Ok(GraySpec::Explicit(out))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobConfig {
    pub p: u32,
    pub m: usize,
    /// Ascending coefficients; `None` picks the default modulus.
    pub modulus: Option<Vec<u32>>,
    pub twist: u32,
    pub n: usize,
    /// `1-2v^2` or the coefficient triple `a,b,c`.
    pub delta: String,
    pub gray: GraySpec,
    pub gray_order: GrayOrder,
    /// Generator strings in ascending coefficient notation.
    pub f: Option<[String; 3]>,
    pub degree_bounds: [usize; 3],
    pub enum_bound: u64,
    pub d_max: usize,
}

impl Default for JobConfig {
    fn default() -> Self {
        JobConfig {
            p: 0,
            m: 1,
            modulus: None,
            twist: 1,
            n: 0,
            delta: "1".into(),
            gray: GraySpec::Auto,
            gray_order: GrayOrder::Blocks,
            f: None,
            degree_bounds: [1, 1, 1],
            enum_bound: DEFAULT_ENUMERATION_BOUND,
            d_max: DEFAULT_D_MAX,
        }
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for JobConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p = {}", self.p)?;
        writeln!(f, "m = {}", self.m)?;
        if let Some(modulus) = &self.modulus {
            writeln!(f, "modulus = {}", join(modulus))?;
        }
        writeln!(f, "twist = {}", self.twist)?;
        writeln!(f, "n = {}", self.n)?;
        writeln!(f, "delta = {}", self.delta)?;
        writeln!(f, "gray = {}", self.gray)?;
        writeln!(f, "gray_order = {}", self.gray_order)?;
        if let Some(fs) = &self.f {
            for (i, s) in fs.iter().enumerate() {
                writeln!(f, "f{i} = {s}")?;
            }
        }
        writeln!(f, "degree_bounds = {}", join(&self.degree_bounds))?;
        writeln!(f, "enum_bound = {}", self.enum_bound)?;
        writeln!(f, "d_max = {}", self.d_max)
    }
}

fn parse_list<T: FromStr>(value: &str) -> std::result::Result<Vec<T>, String> {
    value
        .split(',')
        .map(|x| x.trim().parse::<T>().map_err(|_| format!("bad list entry {:?}", x.trim())))
        .collect()
}

fn parse_num<T: FromStr>(value: &str) -> std::result::Result<T, String> {
    value.parse::<T>().map_err(|_| format!("expected a non-negative integer, got {value:?}"))
}

impl JobConfig {
    /// Parses a job file. Errors carry the 1-based line number; line 0 is
    /// used for problems with the file as a whole.
    pub fn parse(text: &str) -> Result<JobConfig> {
        let mut cfg = JobConfig::default();
        let mut seen: Vec<&str> = Vec::new();
        let mut fs: [Option<String>; 3] = Default::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |reason: String| Error::Config { line, reason };
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| err(format!("expected key = value, got {content:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            if seen.contains(&key) {
                return Err(err(format!("duplicate key {key:?}")));
            }
            seen.push(key);
            match key {
                "p" => cfg.p = parse_num(value).map_err(err)?,
                "m" => cfg.m = parse_num(value).map_err(err)?,
                "modulus" => cfg.modulus = Some(parse_list(value).map_err(err)?),
                "twist" => cfg.twist = parse_num(value).map_err(err)?,
                "n" => cfg.n = parse_num(value).map_err(err)?,
                "delta" => cfg.delta = value.to_string(),
                "gray" => cfg.gray = value.parse().map_err(|e: Error| err(e.to_string()))?,
                "gray_order" => cfg.gray_order = value.parse().map_err(|e: Error| err(e.to_string()))?,
                "f0" | "f1" | "f2" => {
                    let i = (key.as_bytes()[1] - b'0') as usize;
                    fs[i] = Some(value.to_string());
                }
                "degree_bounds" => {
                    let v: Vec<usize> = parse_list(value).map_err(err)?;
                    cfg.degree_bounds = match v.as_slice() {
                        [d] => [*d; 3],
                        [a, b, c] => [*a, *b, *c],
                        _ => return Err(err("degree_bounds needs one or three entries".into())),
                    };
                }
                "enum_bound" => cfg.enum_bound = parse_num(value).map_err(err)?,
                "d_max" => cfg.d_max = parse_num(value).map_err(err)?,
                other => return Err(err(format!("unknown key {other:?}"))),
            }
        }
        let whole = |reason: &str| Error::Config { line: 0, reason: reason.into() };
        for key in ["p", "n"] {
            if !seen.contains(&key) {
                return Err(whole(&format!("missing required key {key:?}")));
            }
        }
        cfg.f = match fs {
            [Some(a), Some(b), Some(c)] => Some([a, b, c]),
            [None, None, None] => None,
            _ => return Err(whole("set all of f0, f1, f2 or none of them")),
        };
        if cfg.n == 0 {
            return Err(whole("n must be positive"));
        }
        Ok(cfg)
    }
}
