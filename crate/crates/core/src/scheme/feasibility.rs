//! Integrality and nonnegativity conditions on a parameter table.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::table::ParameterTable;
use crate::exact::ext::Sign;
use crate::exact::interval::Interval;
use crate::exact::number::{IntegerVerdict, Number};
use crate::exact::rat::{self, Rat};

pub const N_POSITIVE_INTEGER: &str = "n positive integer";
pub const MULTIPLICITIES_POSITIVE_INTEGERS: &str = "multiplicities positive integers";
pub const VALENCIES_POSITIVE_INTEGERS: &str = "valencies positive integers";
pub const KREIN_NONNEGATIVE: &str = "Krein parameters nonnegative";
pub const INTERSECTION_NONNEGATIVE_INTEGERS: &str = "intersection numbers nonnegative integers";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// `[i]` for one-index quantities, `[i, j, h]` for `q^h_{ij}` and `p^h_{ij}`.
    pub index: Vec<usize>,
    pub enclosure: Interval,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub name: String,
    pub passed: bool,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub conditions: Vec<Condition>,
}

impl FeasibilityReport {
    pub fn passed(&self) -> bool {
        self.conditions.iter().all(|c| c.passed)
    }

    pub fn condition(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }
}

fn condition(name: &str, violations: Vec<Violation>) -> Condition {
    Condition {
        name: name.to_string(),
        passed: violations.is_empty(),
        violations,
    }
}

/// `Some(reason)` when `v` is not a positive (or nonnegative) integer.
fn integer_problem(v: &Number, positive: bool) -> Option<(String, Interval)> {
    match v.integer_verdict() {
        IntegerVerdict::NotInteger(e) => Some(("not an integer".into(), e)),
        IntegerVerdict::Integer(c) => {
            let bad = if positive { !c.is_positive() } else { c.is_negative() };
            bad.then(|| {
                let q = Rat::from_integer(c);
                (
                    if positive { "not positive" } else { "negative" }.into(),
                    Interval::point(q),
                )
            })
        }
    }
}

fn rational_problem(q: &Rat, positive: bool) -> Option<(String, Interval)> {
    integer_problem(&Number::Rational(q.clone()), positive)
}

pub fn feasibility_check(t: &ParameterTable) -> FeasibilityReport {
    let size = t.d + 1;
    let mut conditions = Vec::new();

    let n_viol = rational_problem(&t.n, true)
        .map(|(reason, enclosure)| Violation {
            index: vec![],
            enclosure,
            reason,
        })
        .into_iter()
        .collect();
    conditions.push(condition(N_POSITIVE_INTEGER, n_viol));

    let mult_viol = t
        .mult
        .iter()
        .enumerate()
        .filter_map(|(i, m)| {
            rational_problem(m, true).map(|(reason, enclosure)| Violation {
                index: vec![i],
                enclosure,
                reason,
            })
        })
        .collect();
    conditions.push(condition(MULTIPLICITIES_POSITIVE_INTEGERS, mult_viol));

    let k_viol = t
        .k
        .iter()
        .enumerate()
        .filter_map(|(i, k)| {
            integer_problem(k, true).map(|(reason, enclosure)| Violation {
                index: vec![i],
                enclosure,
                reason,
            })
        })
        .collect();
    conditions.push(condition(VALENCIES_POSITIVE_INTEGERS, k_viol));

    let mut q_viol = Vec::new();
    for i in 0..size {
        for j in 0..size {
            for h in 0..size {
                let q = &t.krein[i][j][h];
                if q.is_negative() {
                    q_viol.push(Violation {
                        index: vec![i, j, h],
                        enclosure: Interval::point(q.clone()),
                        reason: "negative".into(),
                    });
                }
            }
        }
    }
    conditions.push(condition(KREIN_NONNEGATIVE, q_viol));

    let mut p_viol = Vec::new();
    for i in 0..size {
        for j in i..size {
            for h in 0..size {
                let p = &t.intersection[i][j][h];
                let problem = if p.as_rational().is_some() {
                    integer_problem(p, false)
                } else {
                    // The sign settles negative and zero values without an integrality test.
                    match p.sign() {
                        Sign::Negative => Some((
                            "negative".to_string(),
                            p.enclosure(&rat::pow2_neg(20)),
                        )),
                        Sign::Zero => None,
                        Sign::Positive => integer_problem(p, false),
                    }
                };
                if let Some((reason, enclosure)) = problem {
                    p_viol.push(Violation {
                        index: vec![i, j, h],
                        enclosure,
                        reason,
                    });
                }
            }
        }
    }
    conditions.push(condition(INTERSECTION_NONNEGATIVE_INTEGERS, p_viol));

    FeasibilityReport { conditions }
}
