//! Certification over grids of parameter points.

use std::sync::atomic::{AtomicUsize, Ordering};

use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::certificate::{certify_infeasible_with_width, DirectVerdict};
use super::params::{validate, Invariant};
use super::recheck::recheck_json;
use super::roots::default_width;
use super::{D6Error, FailStep};
use crate::exact::rat::{self, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Grid {
    /// The Cartesian product of the listed values.
    Explicit {
        m: Vec<Rat>,
        c2: Vec<Rat>,
        b3: Vec<Rat>,
        b4: Vec<Rat>,
        c5: Vec<Rat>,
    },
    /// For each `m`, every multiple of `step` with `0 < c2, b4, c5 <= m-1` and `0 < b3 < m`.
    Natural { m: Vec<Rat>, step: Rat },
}

fn multiples(step: &Rat, upto: &Rat, inclusive: bool) -> Vec<Rat> {
    let mut out = Vec::new();
    let mut v = step.clone();
    while &v < upto || (inclusive && &v == upto) {
        out.push(v.clone());
        v += step;
    }
    out
}

impl Grid {
    /// Integer `m` from `m_lo` to `m_hi` with the other four on multiples of `step`.
    pub fn natural(m_lo: i64, m_hi: i64, step: Rat) -> Grid {
        Grid::Natural {
            m: (m_lo..=m_hi).map(rat::int).collect(),
            step,
        }
    }

    pub fn points(&self) -> Vec<[Rat; 5]> {
        let mut out = Vec::new();
        match self {
            Grid::Explicit { m, c2, b3, b4, c5 } => {
                for a in m {
                    for b in c2 {
                        for c in b3 {
                            for d in b4 {
                                for e in c5 {
                                    out.push([a.clone(), b.clone(), c.clone(), d.clone(), e.clone()]);
                                }
                            }
                        }
                    }
                }
            }
            Grid::Natural { m, step } => {
                if !step.is_positive() {
                    return out;
                }
                for a in m {
                    let mm1 = a - Rat::one();
                    let upto = multiples(step, &mm1, true);
                    let b3s = multiples(step, a, false);
                    for b in &upto {
                        for c in &b3s {
                            for d in &upto {
                                for e in &upto {
                                    out.push([a.clone(), b.clone(), c.clone(), d.clone(), e.clone()]);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointOutcome {
    Invalid(Invariant),
    Certified {
        direct: DirectVerdict,
        /// `m-1 <= lo < hi <= m` for the isolating interval of `x1`.
        x1_within_bounds: bool,
        rechecked: Option<bool>,
    },
    AlphaIntervalEmpty,
    Failed { step: Option<FailStep>, detail: String },
}

pub fn evaluate_point(point: &[Rat; 5], width: &Rat, do_recheck: bool) -> PointOutcome {
    let [m, c2, b3, b4, c5] = point.clone();
    let p = match validate(m, c2, b3, b4, c5) {
        Ok(p) => p,
        Err(D6Error::InvalidParams(inv)) => return PointOutcome::Invalid(inv),
        Err(e) => {
            return PointOutcome::Failed {
                step: None,
                detail: e.to_string(),
            }
        }
    };
    match certify_infeasible_with_width(&p, width) {
        Ok(cert) => {
            let iv = &cert.x1_enclosure;
            let x1_within_bounds = iv.lo >= &p.m - Rat::one() && iv.hi <= p.m && iv.lo < iv.hi;
            let rechecked = do_recheck.then(|| {
                recheck_json(&cert.to_json())
                    .map(|r| r.passed())
                    .unwrap_or(false)
            });
            PointOutcome::Certified {
                direct: cert.direct.verdict,
                x1_within_bounds,
                rechecked,
            }
        }
        Err(D6Error::CertificationFailed {
            step: FailStep::EmptyAlphaInterval,
            ..
        }) => PointOutcome::AlphaIntervalEmpty,
        Err(D6Error::CertificationFailed { step, detail }) => PointOutcome::Failed {
            step: Some(step),
            detail,
        },
        Err(e) => PointOutcome::Failed {
            step: None,
            detail: e.to_string(),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailedPoint {
    /// `(m, c2, b3, b4, c5)` as strings.
    pub point: Vec<String>,
    pub step: Option<FailStep>,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub total: usize,
    pub invalid: usize,
    pub certified: usize,
    pub alpha_interval_empty: usize,
    pub r_below_one: usize,
    pub r_between_one_and_two: usize,
    pub x1_bound_failures: usize,
    pub rechecked: usize,
    pub recheck_failures: usize,
    pub failed: Vec<FailedPoint>,
}

impl SweepReport {
    pub fn from_outcome(point: &[Rat; 5], o: &PointOutcome) -> SweepReport {
        let mut r = SweepReport {
            total: 1,
            ..SweepReport::default()
        };
        match o {
            PointOutcome::Invalid(_) => r.invalid = 1,
            PointOutcome::AlphaIntervalEmpty => r.alpha_interval_empty = 1,
            PointOutcome::Certified {
                direct,
                x1_within_bounds,
                rechecked,
            } => {
                r.certified = 1;
                match direct {
                    DirectVerdict::BelowOne => r.r_below_one = 1,
                    DirectVerdict::BetweenOneAndTwo => r.r_between_one_and_two = 1,
                }
                r.x1_bound_failures = usize::from(!x1_within_bounds);
                if let Some(ok) = rechecked {
                    r.rechecked = 1;
                    r.recheck_failures = usize::from(!ok);
                }
            }
            PointOutcome::Failed { step, detail } => r.failed.push(FailedPoint {
                point: point.iter().map(rat::format).collect(),
                step: *step,
                detail: detail.clone(),
            }),
        }
        r
    }

    /// Associative merge; `failed` keeps both lists.
    pub fn merge(mut self, other: SweepReport) -> SweepReport {
        self.total += other.total;
        self.invalid += other.invalid;
        self.certified += other.certified;
        self.alpha_interval_empty += other.alpha_interval_empty;
        self.r_below_one += other.r_below_one;
        self.r_between_one_and_two += other.r_between_one_and_two;
        self.x1_bound_failures += other.x1_bound_failures;
        self.rechecked += other.rechecked;
        self.recheck_failures += other.recheck_failures;
        self.failed.extend(other.failed);
        self
    }

    /// No failures, no bound violations, and every recheck passed.
    pub fn clean(&self) -> bool {
        self.failed.is_empty() && self.x1_bound_failures == 0 && self.recheck_failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
    pub width: Rat,
    pub recheck: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            jobs: None,
            width: default_width(),
            recheck: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Progress {
    pub done: usize,
    pub total: usize,
}

/// Points between progress callbacks.
const PROGRESS_EVERY: usize = 500;

pub fn sweep(grid: &Grid, config: &SweepConfig) -> SweepReport {
    sweep_with_progress(grid, config, |_| {})
}

pub fn sweep_with_progress<F>(grid: &Grid, config: &SweepConfig, progress: F) -> SweepReport
where
    F: Fn(Progress) + Sync,
{
    let points = grid.points();
    let total = points.len();
    let done = AtomicUsize::new(0);
    let run = || {
        points
            .par_iter()
            .map(|pt| {
                let o = evaluate_point(pt, &config.width, config.recheck);
                let n = done.fetch_add(1, Ordering::Relaxed) + 1;
                if n.is_multiple_of(PROGRESS_EVERY) && n < total {
                    progress(Progress { done: n, total });
                }
                SweepReport::from_outcome(pt, &o)
            })
            .reduce(SweepReport::default, SweepReport::merge)
    };
    let mut report = match config.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map(|pool| pool.install(run))
            .unwrap_or_else(|_| run()),
        None => run(),
    };
    // reduction order varies with scheduling; sort for a deterministic report
    report.failed.sort_by(|a, b| a.point.cmp(&b.point));
    if total > 0 {
        progress(Progress { done: total, total });
    }
    debug_assert_eq!(report.total, total);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{int, rat};

    #[test]
    fn empty_grid() {
        let g = Grid::Explicit {
            m: vec![],
            c2: vec![int(1)],
            b3: vec![int(1)],
            b4: vec![int(1)],
            c5: vec![int(1)],
        };
        assert_eq!(sweep(&g, &SweepConfig::default()), SweepReport::default());
    }

    #[test]
    fn only_invalid_points() {
        let g = Grid::Explicit {
            m: vec![int(2), int(3)],
            c2: vec![int(2)],
            b3: vec![int(1)],
            b4: vec![int(1)],
            c5: vec![int(1)],
        };
        let r = sweep(&g, &SweepConfig::default());
        assert_eq!((r.total, r.invalid, r.certified, r.failed.len()), (2, 2, 0, 0));
    }

    #[test]
    fn small_natural_grid() {
        let g = Grid::natural(3, 4, int(1));
        let cfg = SweepConfig {
            jobs: Some(2),
            recheck: true,
            ..SweepConfig::default()
        };
        let r = sweep(&g, &cfg);
        assert!(r.clean(), "{r:?}");
        assert!(r.certified > 0);
        assert_eq!(r.rechecked, r.certified);
        assert_eq!(r.total, r.invalid + r.certified + r.alpha_interval_empty);
    }

    #[test]
    fn merge_is_order_independent() {
        let g = Grid::natural(3, 3, rat(1, 2));
        let pts = g.points();
        let reports: Vec<SweepReport> = pts
            .iter()
            .map(|p| SweepReport::from_outcome(p, &evaluate_point(p, &default_width(), false)))
            .collect();
        let fwd = reports.iter().cloned().fold(SweepReport::default(), SweepReport::merge);
        let back = reports.into_iter().rev().fold(SweepReport::default(), SweepReport::merge);
        assert_eq!(fwd, back);
    }

    #[test]
    fn non_integer_m_reports_empty_interval() {
        let g = Grid::Explicit {
            m: vec![rat(5, 2)],
            c2: vec![rat(1, 2)],
            b3: vec![int(1)],
            b4: vec![int(1)],
            c5: vec![int(1)],
        };
        let r = sweep(&g, &SweepConfig::default());
        assert_eq!(r.alpha_interval_empty, 1);
        assert!(r.failed.is_empty());
    }
}
