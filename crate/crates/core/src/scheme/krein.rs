//! Krein arrays `{b*_0, ..., b*_{d-1}; c*_1, ..., c*_d}`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exact::rat::{self, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KreinError {
    #[error("empty Krein array")]
    Empty,
    #[error("length mismatch: |b| = {b} but |c| = {c}")]
    LengthMismatch { b: usize, c: usize },
    #[error("c*_1 must equal 1, got {0}")]
    FirstCNotOne(String),
    #[error("b*_{0} must be positive")]
    NonPositiveB(usize),
    #[error("c*_{0} must be positive")]
    NonPositiveC(usize),
    #[error("a*_{index} = {value} is negative")]
    NegativeA { index: usize, value: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("parse error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("invalid Krein array: {0}")]
    Invalid(#[from] KreinError),
}

/// A validated Krein array. `b[i] = b*_i` for `0 <= i < d`, `c[i-1] = c*_i` for `1 <= i <= d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KreinArray {
    b: Vec<Rat>,
    c: Vec<Rat>,
}

impl KreinArray {
    pub fn new(b: Vec<Rat>, c: Vec<Rat>) -> Result<Self, KreinError> {
        let k = KreinArray { b, c };
        k.validate()?;
        Ok(k)
    }

    /// Skips validation. Only the recurrence-level operations are meaningful on
    /// such arrays.
    pub fn unchecked(b: Vec<Rat>, c: Vec<Rat>) -> Self {
        KreinArray { b, c }
    }

    pub fn from_ints(b: &[i64], c: &[i64]) -> Result<Self, KreinError> {
        Self::new(
            b.iter().map(|&x| rat::int(x)).collect(),
            c.iter().map(|&x| rat::int(x)).collect(),
        )
    }

    pub fn validate(&self) -> Result<(), KreinError> {
        if self.b.is_empty() && self.c.is_empty() {
            return Err(KreinError::Empty);
        }
        if self.b.len() != self.c.len() {
            return Err(KreinError::LengthMismatch {
                b: self.b.len(),
                c: self.c.len(),
            });
        }
        if !self.c[0].is_one() {
            return Err(KreinError::FirstCNotOne(rat::format(&self.c[0])));
        }
        if let Some(i) = self.b.iter().position(|x| !x.is_positive()) {
            return Err(KreinError::NonPositiveB(i));
        }
        if let Some(i) = self.c.iter().position(|x| !x.is_positive()) {
            return Err(KreinError::NonPositiveC(i + 1));
        }
        for i in 1..=self.d() {
            let a = self.a(i);
            if a.is_negative() {
                return Err(KreinError::NegativeA {
                    index: i,
                    value: rat::format(&a),
                });
            }
        }
        Ok(())
    }

    pub fn d(&self) -> usize {
        self.b.len()
    }

    pub fn m(&self) -> &Rat {
        &self.b[0]
    }

    /// `b*_i`, zero for `i >= d`.
    pub fn b(&self, i: usize) -> Rat {
        self.b.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// `c*_i`, zero for `i = 0`; `c*_{d+1} := 1`.
    pub fn c(&self, i: usize) -> Rat {
        match i {
            0 => Rat::zero(),
            i if i <= self.d() => self.c[i - 1].clone(),
            _ => Rat::one(),
        }
    }

    /// `a*_i = m - b*_i - c*_i`, with `a*_0 = 0`.
    pub fn a(&self, i: usize) -> Rat {
        if i == 0 {
            return Rat::zero();
        }
        self.m() - self.b(i) - self.c(i)
    }

    pub fn b_slice(&self) -> &[Rat] {
        &self.b
    }

    pub fn c_slice(&self) -> &[Rat] {
        &self.c
    }

    /// Parses `{b0,b1,...;c1,...}`; whitespace is ignored.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let (b, c) = parse_lists(text)?;
        Ok(Self::new(b, c)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        offset,
        message: message.into(),
    }
}

fn parse_lists(text: &str) -> Result<(Vec<Rat>, Vec<Rat>), ParseError> {
    let bytes = text.as_bytes();
    let skip_ws = |mut i: usize| {
        while i < bytes.len() && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        i
    };
    let mut i = skip_ws(0);
    if bytes.get(i) != Some(&b'{') {
        return Err(syntax(i, "expected '{'"));
    }
    i += 1;
    let mut lists: [Vec<Rat>; 2] = [Vec::new(), Vec::new()];
    let mut which = 0;
    loop {
        i = skip_ws(i);
        let start = i;
        while i < bytes.len() && !matches!(bytes[i], b',' | b';' | b'}') {
            i += 1;
        }
        let token = text[start..i].trim();
        if token.is_empty() {
            return Err(syntax(start, "expected a rational number"));
        }
        let value = rat::parse(token).map_err(|e| syntax(start, e.0))?;
        lists[which].push(value);
        match bytes.get(i) {
            Some(b',') => i += 1,
            Some(b';') if which == 0 => {
                which = 1;
                i += 1;
            }
            Some(b';') => return Err(syntax(i, "second ';'")),
            Some(b'}') if which == 1 => {
                if lists[0].len() != lists[1].len() {
                    return Err(syntax(
                        i,
                        format!(
                            "length mismatch: |b| = {} must equal |c| = {}",
                            lists[0].len(),
                            lists[1].len()
                        ),
                    ));
                }
                let end = skip_ws(i + 1);
                if end != bytes.len() {
                    return Err(syntax(end, "trailing input"));
                }
                let [b, c] = lists;
                return Ok((b, c));
            }
            Some(b'}') => return Err(syntax(i, "missing ';'")),
            _ => return Err(syntax(i, "unterminated array")),
        }
    }
}

impl fmt::Display for KreinArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rat]| v.iter().map(rat::format).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

#[derive(Serialize, Deserialize)]
struct KreinJson {
    d: usize,
    #[serde(with = "rat::serde_rat_vec")]
    b: Vec<Rat>,
    #[serde(with = "rat::serde_rat_vec")]
    c: Vec<Rat>,
}

impl Serialize for KreinArray {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        KreinJson {
            d: self.d(),
            b: self.b.clone(),
            c: self.c.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for KreinArray {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = KreinJson::deserialize(d)?;
        if raw.d != raw.b.len() {
            return Err(serde::de::Error::custom(format!(
                "d = {} but |b| = {}",
                raw.d,
                raw.b.len()
            )));
        }
        KreinArray::new(raw.b, raw.c).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{int, rat};

    #[test]
    fn parse_cube() {
        let k = KreinArray::parse("{3,2,1;1,2,3}").unwrap();
        assert_eq!(k.d(), 3);
        assert_eq!(k.b_slice(), &[int(3), int(2), int(1)]);
        assert_eq!(k.c_slice(), &[int(1), int(2), int(3)]);
        assert_eq!((k.a(1), k.a(2), k.a(3)), (int(0), int(0), int(0)));
    }

    #[test]
    fn parse_whitespace_and_fractions() {
        let k = KreinArray::parse(" { 3, 2, 1, 1, 2, 1 ; 1, 1, 2, 1, 1, 3 } ").unwrap();
        assert_eq!(k.d(), 6);
        assert_eq!(k.a(2), int(1));
        let h = KreinArray::parse("{5/2,3/2;1,5/2}").unwrap();
        assert_eq!(h.m(), &rat(5, 2));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match KreinArray::parse("{3,2;1}") {
            Err(ParseError::Syntax { offset, message }) => {
                assert_eq!(offset, 6);
                assert!(message.contains("length mismatch"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            KreinArray::parse("3,2;1,2}"),
            Err(ParseError::Syntax { offset: 0, .. })
        ));
        assert!(matches!(
            KreinArray::parse("{3,x;1,2}"),
            Err(ParseError::Syntax { offset: 3, .. })
        ));
        assert!(matches!(
            KreinArray::parse("{3,2;1,2"),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn validation() {
        assert_eq!(
            KreinArray::from_ints(&[3, 2], &[2, 2]),
            Err(KreinError::FirstCNotOne("2".into()))
        );
        assert_eq!(
            KreinArray::from_ints(&[2, 2], &[1, 2]),
            Err(KreinError::NegativeA {
                index: 1,
                value: "-1".into()
            })
        );
        assert_eq!(
            KreinArray::from_ints(&[2, 0], &[1, 2]),
            Err(KreinError::NonPositiveB(1))
        );
        assert!(matches!(
            KreinArray::parse("{2,1;1,3}"),
            Err(ParseError::Invalid(KreinError::NegativeA { index: 2, .. }))
        ));
    }

    #[test]
    fn json_round_trip() {
        let k = KreinArray::from_ints(&[3, 2, 1], &[1, 2, 3]).unwrap();
        let j = k.to_json();
        assert_eq!(j, r#"{"d":3,"b":["3","2","1"],"c":["1","2","3"]}"#);
        assert_eq!(KreinArray::from_json(&j).unwrap(), k);
        assert!(KreinArray::from_json(r#"{"d":2,"b":["3","2","1"],"c":["1","2","3"]}"#).is_err());
        assert_eq!(k.to_string(), "{3,2,1;1,2,3}");
    }
}
