//! Imprimitivity classes of cometric Krein arrays and block patterns of
//! summed idempotents.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::ext::Sign;
use crate::exact::number::Number;
use crate::exact::rat::{self, Rat};
use crate::scheme::{KreinArray, ParameterTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flag {
    QBipartite,
    QAntipodal,
    ExceptionalD4,
    ExceptionalD6,
    NoneDetected,
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flag::QBipartite => "Q-bipartite",
            Flag::QAntipodal => "Q-antipodal",
            Flag::ExceptionalD4 => "exceptional d=4",
            Flag::ExceptionalD6 => "exceptional d=6",
            Flag::NoneDetected => "none detected",
        })
    }
}

/// Evidence recorded for one flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub flag: Flag,
    /// Named parameter values, rationals as strings.
    pub values: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub flags: Vec<Flag>,
    pub witnesses: Vec<Witness>,
}

impl ClassificationResult {
    pub fn has(&self, flag: Flag) -> bool {
        self.flags.contains(&flag)
    }

    /// Flags joined by `"; "`.
    pub fn summary(&self) -> String {
        self.flags
            .iter()
            .map(Flag::to_string)
            .collect::<Vec<_>>()
            .join("; ")
    }
}

fn named(pairs: &[(&str, Rat)]) -> Vec<(String, String)> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), rat::format(v)))
        .collect()
}

/// Shape `{m, m-1, 1, b3, ...; 1, c2, m-b3, 1, ...}` shared by both exceptional cases.
fn exceptional_prefix(k: &KreinArray) -> bool {
    let m = k.m();
    k.b(1) == m - rat::int(1) && k.b(2) == rat::int(1) && k.c(3) == m - k.b(3) && k.c(4) == rat::int(1)
}

pub fn classify(k: &KreinArray) -> ClassificationResult {
    let d = k.d();
    let mut flags = Vec::new();
    let mut witnesses = Vec::new();

    if (1..=d).all(|i| k.a(i).is_zero()) {
        flags.push(Flag::QBipartite);
        witnesses.push(Witness {
            flag: Flag::QBipartite,
            values: (1..=d).map(|i| (format!("a{i}"), rat::format(&k.a(i)))).collect(),
        });
    }

    // b*_i = c*_{d-i} for 0 <= i < d, except possibly i = floor(d/2) when d is even
    let skip = d.is_multiple_of(2).then_some(d / 2);
    if (0..d).filter(|&i| Some(i) != skip).all(|i| k.b(i) == k.c(d - i)) {
        flags.push(Flag::QAntipodal);
        witnesses.push(Witness {
            flag: Flag::QAntipodal,
            values: (0..d)
                .map(|i| (format!("b{i}/c{}", d - i), format!("{}/{}", rat::format(&k.b(i)), rat::format(&k.c(d - i)))))
                .collect(),
        });
    }

    if d == 4 && exceptional_prefix(k) {
        flags.push(Flag::ExceptionalD4);
        witnesses.push(Witness {
            flag: Flag::ExceptionalD4,
            values: named(&[("m", k.m().clone()), ("c2", k.c(2)), ("b3", k.b(3))]),
        });
    }

    if d == 6
        && exceptional_prefix(k)
        && k.b(5) == rat::int(1)
        && &k.c(6) == k.m()
        && k.a(2) == k.a(4) + k.a(5)
    {
        flags.push(Flag::ExceptionalD6);
        witnesses.push(Witness {
            flag: Flag::ExceptionalD6,
            values: named(&[
                ("m", k.m().clone()),
                ("c2", k.c(2)),
                ("b3", k.b(3)),
                ("b4", k.b(4)),
                ("c5", k.c(5)),
            ]),
        });
    }

    if flags.is_empty() {
        flags.push(Flag::NoneDetected);
    }
    ClassificationResult { flags, witnesses }
}

/// Block pattern: `(1/r) Σ_{i∈I} A_i = Σ_{j∈J} E_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImprimitivityPattern {
    pub iset: Vec<usize>,
    pub jset: Vec<usize>,
    #[serde(with = "rat::serde_rat")]
    pub r: Rat,
    #[serde(with = "rat::serde_rat")]
    pub s: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("J must contain 0 and only indices up to {0}")]
    BadJset(usize),
    #[error("no relation set matches this idempotent set")]
    NotAPattern,
}

/// Finds `I` with `Σ_{j∈J} Q_{lj}` equal to a positive constant on `I` and zero
/// elsewhere, then checks `r = Σ_I k_i`, `s = Σ_J m_j` and `r s = n`.
pub fn detect_pattern(t: &ParameterTable, jset: &[usize]) -> Result<ImprimitivityPattern, PatternError> {
    let d = t.d;
    let mut jset = jset.to_vec();
    jset.sort_unstable();
    jset.dedup();
    if jset.first() != Some(&0) || jset.iter().any(|&j| j > d) {
        return Err(PatternError::BadJset(d));
    }
    let sums: Vec<Number> = (0..=d)
        .map(|l| {
            jset.iter()
                .fold(Number::zero(), |acc, &j| acc.add(&t.q_mat[l][j]))
        })
        .collect();
    let mut iset = Vec::new();
    let mut constant: Option<Number> = None;
    for (l, s) in sums.iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        match &constant {
            None => {
                if s.sign() != Sign::Positive {
                    return Err(PatternError::NotAPattern);
                }
                constant = Some(s.clone());
            }
            Some(c) => {
                if !c.equals(s) {
                    return Err(PatternError::NotAPattern);
                }
            }
        }
        iset.push(l);
    }
    if iset.first() != Some(&0) {
        return Err(PatternError::NotAPattern);
    }
    let r_num = iset
        .iter()
        .fold(Number::zero(), |acc, &i| acc.add(&t.k[i]));
    let r = r_num.as_rational().cloned().ok_or(PatternError::NotAPattern)?;
    let s: Rat = jset.iter().map(|&j| t.mult[j].clone()).sum();
    let c = constant.expect("row 0 is nonzero");
    if &r * &s != t.n || !c.scale(&r).eq_rat(&t.n) {
        return Err(PatternError::NotAPattern);
    }
    Ok(ImprimitivityPattern { iset, jset, r, s })
}

/// The candidate idempotent sets of the four cases: even indices, `{0,d}`,
/// `{0,3}` and `{0,3,6}`, restricted to those that fit `d`.
pub fn builtin_jsets(d: usize) -> Vec<Vec<usize>> {
    let mut out = vec![(0..=d).step_by(2).collect::<Vec<_>>(), vec![0, d]];
    if d >= 3 {
        out.push(vec![0, 3]);
    }
    if d >= 6 {
        out.push(vec![0, 3, 6]);
    }
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::int;
    use crate::scheme::build_table;

    fn krein(b: &[i64], c: &[i64]) -> KreinArray {
        KreinArray::from_ints(b, c).unwrap()
    }

    #[test]
    fn cube_flags() {
        let r = classify(&krein(&[3, 2, 1], &[1, 2, 3]));
        assert_eq!(r.flags, vec![Flag::QBipartite, Flag::QAntipodal]);
        assert_eq!(r.summary(), "Q-bipartite; Q-antipodal");
    }

    #[test]
    fn four_cycle_flags() {
        let r = classify(&krein(&[2, 1], &[1, 2]));
        assert_eq!(r.flags, vec![Flag::QBipartite, Flag::QAntipodal]);
    }

    #[test]
    fn exceptional_six_class() {
        let r = classify(&krein(&[3, 2, 1, 1, 2, 1], &[1, 1, 2, 1, 1, 3]));
        assert_eq!(r.flags, vec![Flag::ExceptionalD6]);
        let w = &r.witnesses[0];
        let vals: Vec<&str> = w.values.iter().map(|(_, v)| v.as_str()).collect();
        assert_eq!(vals, vec!["3", "1", "1", "2", "1"]);
        // breaking a2 = a4 + a5 removes the flag
        let broken = krein(&[3, 2, 1, 1, 1, 1], &[1, 1, 2, 1, 1, 3]);
        assert_eq!(classify(&broken).flags, vec![Flag::NoneDetected]);
    }

    #[test]
    fn exceptional_four_class() {
        let r = classify(&krein(&[4, 3, 1, 2], &[1, 2, 2, 1]));
        assert!(r.has(Flag::ExceptionalD4));
    }

    #[test]
    fn antipodal_skips_middle_index() {
        // d = 2: only b0 = c2 is required
        let r = classify(&krein(&[3, 1], &[1, 3]));
        assert!(r.has(Flag::QAntipodal));
        assert!(!r.has(Flag::QBipartite));
    }

    #[test]
    fn cube_patterns() {
        let t = build_table(&krein(&[3, 2, 1], &[1, 2, 3])).unwrap();
        // values confirmed against the matrix-level oracle
        let p = detect_pattern(&t, &[0, 2]).unwrap();
        assert_eq!((p.iset, p.r, p.s), (vec![0, 3], int(2), int(4)));
        let p = detect_pattern(&t, &[0, 3]).unwrap();
        assert_eq!((p.iset, p.r, p.s), (vec![0, 2], int(4), int(2)));
    }

    #[test]
    fn four_cycle_has_no_pattern_at_01() {
        let t = build_table(&krein(&[2, 1], &[1, 2])).unwrap();
        assert_eq!(detect_pattern(&t, &[0, 1]), Err(PatternError::NotAPattern));
        assert_eq!(detect_pattern(&t, &[1]), Err(PatternError::BadJset(2)));
    }

    #[test]
    fn exceptional_pattern() {
        let t = build_table(&krein(&[3, 2, 1, 1, 2, 1], &[1, 1, 2, 1, 1, 3])).unwrap();
        let p = detect_pattern(&t, &[0, 3, 6]).unwrap();
        // the eigenvalue -1 is relation 4 in descending order
        assert_eq!(p.iset, vec![0, 4]);
        assert_eq!(p.r, int(4));
    }

    #[test]
    fn builtins() {
        assert_eq!(builtin_jsets(6), vec![vec![0, 2, 4, 6], vec![0, 6], vec![0, 3], vec![0, 3, 6]]);
        assert_eq!(builtin_jsets(2), vec![vec![0, 2]]);
    }
}
