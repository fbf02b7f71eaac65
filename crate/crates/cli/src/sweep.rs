use std::time::Instant;

use clap::ValueEnum;
use lorentz_core::certify::{m_convex_witness, root_log_concavity_violations};
use lorentz_core::schubert::{grothendieck, Permutation};
use lorentz_core::{lorentzian_certify, Partition, Polynomial, StrictPartition, SupportSet};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::family::{generate, usage, Family, Params, UsageError, MAX_BOXES, MAX_N};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum, Serialize)]
#[value(rename_all = "snake_case")]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Full Lorentzian certification.
    Certify,
    /// M-convexity of the support only.
    SupportOnly,
    /// `c(mu)^2 >= c(mu + e_i - e_j) c(mu - e_i + e_j)` for every coefficient.
    Inequality,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Certify => "certify",
            Mode::SupportOnly => "support_only",
            Mode::Inequality => "inequality",
        }
    }
}

/// Result of checking one polynomial in some [`Mode`].
#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub passed: bool,
    pub summary: String,
    /// The certificate in `certify` mode, otherwise the witness (or null).
    pub detail: Value,
}

pub fn check(p: &Polynomial, mode: Mode) -> CheckOutcome {
    match mode {
        Mode::Certify => {
            let cert = lorentzian_certify(p);
            CheckOutcome {
                passed: cert.is_lorentzian(),
                summary: cert
                    .failure
                    .as_ref()
                    .map_or_else(|| "lorentzian".into(), |f| f.to_string()),
                detail: serde_json::to_value(&cert).expect("certificate serializes"),
            }
        }
        Mode::SupportOnly => match m_convex_witness(&SupportSet::of(p)) {
            None => CheckOutcome {
                passed: true,
                summary: "support is M-convex".into(),
                detail: Value::Null,
            },
            Some(w) => CheckOutcome {
                passed: false,
                summary: format!("exchange fails for alpha={} beta={} i={}", w.alpha, w.beta, w.i + 1),
                detail: json!({"alpha": w.alpha.entries(), "beta": w.beta.entries(), "i": w.i + 1}),
            },
        },
        Mode::Inequality => {
            for degree in p.degrees() {
                let part = p.homogeneous_component(degree);
                if let Some((mu, i, j)) = root_log_concavity_violations(&part, degree).into_iter().next() {
                    return CheckOutcome {
                        passed: false,
                        summary: format!(
                            "c(mu)^2 < c(mu+e_i-e_j) c(mu-e_i+e_j) at mu={mu} i={} j={}",
                            i + 1,
                            j + 1
                        ),
                        detail: json!({"mu": mu.entries(), "i": i + 1, "j": j + 1}),
                    };
                }
            }
            CheckOutcome {
                passed: true,
                summary: "coefficient inequality holds".into(),
                detail: Value::Null,
            }
        }
    }
}

/// What to enumerate and how to check it.
///
/// `n` is the permutation size for permutation families, the number of
/// variables for `schur`, `skew` and `schur_p`, and the composition length
/// for `key`. `delta` is the componentwise upper bound for `verma`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSpec {
    pub family: Family,
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boxes: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parts: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<u32>>,
    pub normalize: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub id: String,
    pub params: Params,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepFailure {
    pub instance: String,
    pub repro: String,
    pub summary: String,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub spec: SweepSpec,
    pub instances: usize,
    pub failures: Vec<SweepFailure>,
    pub wall_time_seconds: f64,
    pub version: &'static str,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "sweep {} mode={} instances={} failures={} time={:.3}s\n",
            self.spec.family,
            self.spec.mode.name(),
            self.instances,
            self.failures.len(),
            self.wall_time_seconds
        );
        for f in &self.failures {
            out.push_str(&format!("FAIL {}: {}\n  repro: {}\n", f.instance, f.summary, f.repro));
        }
        out
    }
}

fn join(v: &[u32]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn vectors_below(bound: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|v| (0..=b).map(move |x| [v.clone(), vec![x]].concat()))
            .collect();
    }
    out
}

fn compositions(len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; len];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..=left {
            cur[i] = x;
            rec(i + 1, left - x, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, max, &mut cur, &mut out);
    out
}

impl SweepSpec {
    fn need_n(&self) -> Result<usize, UsageError> {
        match self.n {
            Some(n) if (1..=MAX_N).contains(&n) => Ok(n),
            Some(n) => usage(format!("--n {n} is outside 1..={MAX_N}")),
            None => usage(format!("sweep --family {} needs --n", self.family)),
        }
    }

    fn need_boxes(&self) -> Result<u32, UsageError> {
        match self.boxes {
            Some(b) if b <= MAX_BOXES => Ok(b),
            Some(b) => usage(format!("--boxes {b} exceeds the cap of {MAX_BOXES}")),
            None => usage(format!("sweep --family {} needs --boxes", self.family)),
        }
    }

    fn params(&self) -> Params {
        Params {
            normalize: self.normalize,
            ..Params::default()
        }
    }

    /// Every instance of the family within the bounds, in a fixed order.
    pub fn instances(&self) -> Result<Vec<Instance>, UsageError> {
        if self.normalize && self.family.is_normalized() {
            return usage(format!("--family {} is already normalized", self.family));
        }
        if self.family != Family::Verma && self.delta.is_some() {
            return usage("--delta only applies to --family verma");
        }
        let base = self.params();
        let out = match self.family {
            f if f.is_permutation_family() => {
                if self.boxes.is_some() || self.parts.is_some() {
                    return usage(format!("--family {f} takes only --n"));
                }
                Permutation::all(self.need_n()?)
                    .into_iter()
                    .map(|w| Instance {
                        id: format!("w={w}"),
                        params: Params {
                            w: Some(w.to_string()),
                            ..base.clone()
                        },
                    })
                    .collect()
            }
            Family::Schur | Family::Skew => {
                let m = self.need_n()?;
                let parts = self.parts.unwrap_or(m).min(m);
                let mut out = Vec::new();
                for outer in Partition::up_to(self.need_boxes()?, parts) {
                    let inners = if self.family == Family::Skew {
                        Partition::up_to(outer.size(), parts)
                            .into_iter()
                            .filter(|i| outer.contains(i))
                            .collect()
                    } else {
                        vec![Partition::empty()]
                    };
                    for inner in inners {
                        let skew = self.family == Family::Skew;
                        out.push(Instance {
                            id: if skew {
                                format!("lambda={outer} inner={inner} m={m}")
                            } else {
                                format!("lambda={outer} m={m}")
                            },
                            params: Params {
                                lambda: Some(outer.to_string()),
                                inner: skew.then(|| inner.to_string()),
                                vars: Some(m),
                                ..base.clone()
                            },
                        });
                    }
                }
                out
            }
            Family::SchurP => {
                let m = self.need_n()?;
                let boxes = self.need_boxes()?;
                let parts = self.parts.unwrap_or(m).min(m);
                StrictPartition::all(boxes, parts)
                    .into_iter()
                    .filter(|l| l.size() <= boxes)
                    .map(|l| {
                        let s = join(l.parts());
                        Instance {
                            id: format!("lambda={s} m={m}"),
                            params: Params {
                                lambda: Some(s),
                                vars: Some(m),
                                ..base.clone()
                            },
                        }
                    })
                    .collect()
            }
            Family::Key => {
                let n = self.need_n()?;
                compositions(n, self.need_boxes()?)
                    .into_iter()
                    .map(|mu| Instance {
                        id: format!("mu={}", join(&mu)),
                        params: Params {
                            mu: Some(mu.iter().map(u32::to_string).collect::<Vec<_>>().join(",")),
                            ..base.clone()
                        },
                    })
                    .collect()
            }
            Family::Verma => {
                let Some(bound) = &self.delta else {
                    return usage("sweep --family verma needs --delta");
                };
                if bound.is_empty() || bound.len() > MAX_N {
                    return usage(format!("--delta length must be in 1..={MAX_N}"));
                }
                if bound.iter().sum::<u32>() > MAX_BOXES {
                    return usage(format!("--delta total exceeds the cap of {MAX_BOXES}"));
                }
                vectors_below(bound)
                    .into_iter()
                    .map(|d| {
                        let s = d.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
                        Instance {
                            id: format!("delta={s}"),
                            params: Params {
                                delta: Some(s),
                                ..base.clone()
                            },
                        }
                    })
                    .collect()
            }
            _ => unreachable!("permutation families handled above"),
        };
        Ok(out)
    }

    /// Checks one instance; `None` if it passes.
    pub fn evaluate(&self, instance: &Instance) -> Result<Option<SweepFailure>, UsageError> {
        let mut targets: Vec<(Params, Polynomial)> = Vec::new();
        if self.family == Family::Grothendieck {
            let w = Permutation::parse(instance.params.w.as_deref().expect("permutation instance"))?;
            let top = grothendieck(&w).total_degree().unwrap_or(0);
            for k in 0..=top - w.length() {
                let params = Params {
                    component: Some(k),
                    ..instance.params.clone()
                };
                let p = generate(self.family, &params)?;
                targets.push((params, p));
            }
        } else {
            targets.push((instance.params.clone(), generate(self.family, &instance.params)?));
        }
        for (params, p) in targets {
            let outcome = check(&p, self.mode);
            if !outcome.passed {
                return Ok(Some(SweepFailure {
                    instance: match params.component {
                        Some(k) => format!("{} k={k}", instance.id),
                        None => instance.id.clone(),
                    },
                    repro: format!(
                        "{} | lorentz certify --mode {}",
                        params.gen_command(self.family),
                        self.mode.name()
                    ),
                    summary: outcome.summary,
                    detail: outcome.detail,
                }));
            }
        }
        Ok(None)
    }
}

/// Enumerates and checks every instance on `jobs` worker threads (all
/// available cores when `None`). Failures come back in enumeration order
/// regardless of scheduling.
pub fn run_sweep(spec: &SweepSpec, jobs: Option<usize>) -> Result<SweepReport, UsageError> {
    let start = Instant::now();
    let instances = spec.instances()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| UsageError(format!("cannot start workers: {e}")))?;
    let results: Vec<Option<SweepFailure>> =
        pool.install(|| instances.par_iter().map(|i| spec.evaluate(i)).collect::<Result<_, _>>())?;
    Ok(SweepReport {
        spec: spec.clone(),
        instances: instances.len(),
        failures: results.into_iter().flatten().collect(),
        wall_time_seconds: start.elapsed().as_secs_f64(),
        version: env!("CARGO_PKG_VERSION"),
    })
}
