use std::fmt;

use clap::ValueEnum;
use lorentz_core::poly::ExponentVector;
use lorentz_core::schubert::{
    degree_polynomial, grothendieck, grothendieck_component, homogeneous_grothendieck, key_polynomial, schubert,
    schubert_dual, Permutation,
};
use lorentz_core::symmetric::{schur, schur_p, skew_schur, verma_truncated_normalized};
use lorentz_core::{Partition, Polynomial, Rational, SkewShape, StrictPartition};
use serde::Serialize;

/// Largest permutation size or number of variables accepted anywhere.
pub const MAX_N: usize = 8;
/// Largest partition or composition size accepted anywhere.
pub const MAX_BOXES: u32 = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum, Serialize)]
#[value(rename_all = "snake_case")]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Schur,
    Skew,
    SchurP,
    Schubert,
    SchubertDual,
    Grothendieck,
    GrothendieckHomog,
    Key,
    Degree,
    Verma,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Schur => "schur",
            Family::Skew => "skew",
            Family::SchurP => "schur_p",
            Family::Schubert => "schubert",
            Family::SchubertDual => "schubert_dual",
            Family::Grothendieck => "grothendieck",
            Family::GrothendieckHomog => "grothendieck_homog",
            Family::Key => "key",
            Family::Degree => "degree",
            Family::Verma => "verma",
        }
    }

    /// Indexed by a permutation.
    pub fn is_permutation_family(self) -> bool {
        matches!(
            self,
            Family::Schubert | Family::SchubertDual | Family::Grothendieck | Family::GrothendieckHomog | Family::Degree
        )
    }

    /// The generated polynomial already carries the normalization.
    pub fn is_normalized(self) -> bool {
        matches!(self, Family::SchubertDual | Family::Verma)
    }

    fn flags(self) -> &'static [&'static str] {
        match self {
            Family::Schur | Family::SchurP => &["lambda", "vars"],
            Family::Skew => &["lambda", "inner", "vars"],
            Family::Grothendieck => &["w", "component"],
            Family::Schubert | Family::SchubertDual | Family::GrothendieckHomog | Family::Degree => &["w"],
            Family::Key => &["mu"],
            Family::Verma => &["delta"],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Bad flags or parameters; maps to exit code 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

impl From<lorentz_core::Error> for UsageError {
    fn from(e: lorentz_core::Error) -> Self {
        UsageError(e.to_string())
    }
}

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T, UsageError> {
    Err(UsageError(msg.into()))
}

/// Family parameters as given on the command line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub lambda: Option<String>,
    pub mu: Option<String>,
    pub inner: Option<String>,
    pub w: Option<String>,
    pub delta: Option<String>,
    pub vars: Option<usize>,
    /// Grothendieck only: emit `(-1)^k G^k_w` instead of `G_w`.
    pub component: Option<u32>,
    pub normalize: bool,
}

impl Params {
    fn given(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let mut push = |name, present: bool| {
            if present {
                out.push(name);
            }
        };
        push("lambda", self.lambda.is_some());
        push("mu", self.mu.is_some());
        push("inner", self.inner.is_some());
        push("w", self.w.is_some());
        push("delta", self.delta.is_some());
        push("vars", self.vars.is_some());
        push("component", self.component.is_some());
        out
    }

    /// The `gen` invocation that rebuilds this instance.
    pub fn gen_command(&self, family: Family) -> String {
        let mut cmd = format!("lorentz gen --family {family}");
        let mut add = |flag: &str, value: &Option<String>| {
            if let Some(v) = value {
                cmd.push_str(&format!(" --{flag} {v}"));
            }
        };
        add("lambda", &self.lambda);
        add("inner", &self.inner);
        add("mu", &self.mu);
        add("w", &self.w);
        add("delta", &self.delta);
        add("vars", &self.vars.map(|v| v.to_string()));
        add("component", &self.component.map(|k| k.to_string()));
        if self.normalize {
            cmd.push_str(" --normalize");
        }
        cmd
    }
}

fn required<'a>(value: &'a Option<String>, flag: &str, family: Family) -> Result<&'a str, UsageError> {
    value
        .as_deref()
        .ok_or_else(|| UsageError(format!("--family {family} needs --{flag}")))
}

fn check_boxes(size: u32) -> Result<(), UsageError> {
    if size > MAX_BOXES {
        return usage(format!("{size} boxes exceeds the cap of {MAX_BOXES}"));
    }
    Ok(())
}

fn check_n(n: usize, what: &str) -> Result<(), UsageError> {
    if n == 0 || n > MAX_N {
        return usage(format!("{what} = {n} is outside 1..={MAX_N}"));
    }
    Ok(())
}

pub fn parse_vector(s: &str, flag: &str) -> Result<Vec<u32>, UsageError> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| {
            UsageError(format!(
                "--{flag}: expected comma-separated nonnegative integers, got {s:?}"
            ))
        })
}

pub fn parse_strict(s: &str) -> Result<StrictPartition, UsageError> {
    let mut parts = parse_vector(s, "lambda")?;
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Ok(StrictPartition::new(parts)?)
}

pub fn parse_permutation(s: &str) -> Result<Permutation, UsageError> {
    let w = Permutation::parse(s)?;
    check_n(w.n(), "permutation size")?;
    Ok(w)
}

fn vars_for(params: &Params, parts: usize) -> Result<usize, UsageError> {
    let m = params.vars.unwrap_or(parts.max(1));
    check_n(m, "--vars")?;
    Ok(m)
}

/// Builds the polynomial named by `family` and `params`, applying the
/// normalization when asked.
pub fn generate(family: Family, params: &Params) -> Result<Polynomial, UsageError> {
    let allowed = family.flags();
    if let Some(extra) = params.given().into_iter().find(|f| !allowed.contains(f)) {
        return usage(format!("--{extra} does not apply to --family {family}"));
    }
    if params.normalize && family.is_normalized() {
        return usage(format!("--family {family} is already normalized"));
    }
    let p = match family {
        Family::Schur => {
            let lambda = Partition::parse(required(&params.lambda, "lambda", family)?)?;
            check_boxes(lambda.size())?;
            schur(&lambda, vars_for(params, lambda.len())?)
        }
        Family::Skew => {
            let outer = Partition::parse(required(&params.lambda, "lambda", family)?)?;
            let inner = match &params.inner {
                Some(s) => Partition::parse(s)?,
                None => Partition::empty(),
            };
            check_boxes(outer.size())?;
            let m = vars_for(params, outer.len())?;
            skew_schur(&SkewShape::new(outer, inner)?, m)
        }
        Family::SchurP => {
            let lambda = parse_strict(required(&params.lambda, "lambda", family)?)?;
            check_boxes(lambda.size())?;
            schur_p(&lambda, vars_for(params, lambda.len())?)
        }
        Family::Schubert => schubert(&parse_permutation(required(&params.w, "w", family)?)?),
        Family::SchubertDual => schubert_dual(&parse_permutation(required(&params.w, "w", family)?)?),
        Family::Grothendieck => {
            let w = parse_permutation(required(&params.w, "w", family)?)?;
            match params.component {
                None => grothendieck(&w),
                Some(k) => {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    grothendieck_component(&w, k).scale(&Rational::from_integer(sign.into()))
                }
            }
        }
        Family::GrothendieckHomog => homogeneous_grothendieck(&parse_permutation(required(&params.w, "w", family)?)?),
        Family::Degree => degree_polynomial(&parse_permutation(required(&params.w, "w", family)?)?),
        Family::Key => {
            let mu = parse_vector(required(&params.mu, "mu", family)?, "mu")?;
            check_n(mu.len(), "composition length")?;
            let mu = ExponentVector::new(mu);
            check_boxes(mu.degree())?;
            key_polynomial(&mu)
        }
        Family::Verma => {
            let delta = parse_vector(required(&params.delta, "delta", family)?, "delta")?;
            check_n(delta.len(), "delta length")?;
            let delta = ExponentVector::new(delta);
            check_boxes(delta.degree())?;
            verma_truncated_normalized(&delta)
        }
    };
    Ok(if params.normalize { p.normalize() } else { p })
}
