//! The five free parameters of the exceptional six-class family.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::D6Error;
use crate::exact::rat::{self, Rat};
use crate::scheme::KreinArray;

/// The invariant a parameter tuple violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    MGreaterThanTwo,
    C2Range,
    B3Range,
    B4Range,
    C5Range,
    A2EqualsA4PlusA5,
    CubicConstantNonnegative,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Invariant::MGreaterThanTwo => "m > 2 required",
            Invariant::C2Range => "0 < c2 <= m-1 required",
            Invariant::B3Range => "0 < b3 < m required",
            Invariant::B4Range => "0 < b4 <= m-1 required",
            Invariant::C5Range => "0 < c5 <= m-1 required",
            Invariant::A2EqualsA4PlusA5 => "a2 = a4 + a5 required",
            Invariant::CubicConstantNonnegative => "m*a2 - a5*c3 >= 0 required",
        })
    }
}

/// `(m, c2, b3, b4, c5)` with the derived quantities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct D6Params {
    #[serde(with = "rat::serde_rat")]
    pub m: Rat,
    #[serde(with = "rat::serde_rat")]
    pub c2: Rat,
    #[serde(with = "rat::serde_rat")]
    pub b3: Rat,
    #[serde(with = "rat::serde_rat")]
    pub b4: Rat,
    #[serde(with = "rat::serde_rat")]
    pub c5: Rat,
    #[serde(with = "rat::serde_rat")]
    pub a2: Rat,
    #[serde(with = "rat::serde_rat")]
    pub a4: Rat,
    #[serde(with = "rat::serde_rat")]
    pub a5: Rat,
    #[serde(with = "rat::serde_rat")]
    pub c3: Rat,
    #[serde(with = "rat::serde_rat")]
    pub m3: Rat,
    #[serde(with = "rat::serde_rat")]
    pub m6: Rat,
    #[serde(with = "rat::serde_rat")]
    pub n: Rat,
}

impl D6Params {
    /// Derived values without any invariant check. Panics if `c2`, `m - b3` or `c5` is zero.
    pub fn unchecked(m: Rat, c2: Rat, b3: Rat, b4: Rat, c5: Rat) -> Self {
        let one = Rat::one();
        let a2 = &m - &one - &c2;
        let a4 = &m - &one - &b4;
        let a5 = &m - &one - &c5;
        let c3 = &m - &b3;
        let m3 = &m * (&m - &one) / (&c2 * &c3);
        let m6 = (&m - &one) * &b3 * &b4 / (&c2 * &c3 * &c5);
        let n = (&m + &one) * (&one + &m3 + &m6);
        D6Params {
            m,
            c2,
            b3,
            b4,
            c5,
            a2,
            a4,
            a5,
            c3,
            m3,
            m6,
            n,
        }
    }

    pub fn from_ints(m: i64, c2: i64, b3: i64, b4: i64, c5: i64) -> Result<Self, D6Error> {
        validate(
            rat::int(m),
            rat::int(c2),
            rat::int(b3),
            rat::int(b4),
            rat::int(c5),
        )
    }

    /// `m a2 - a5 c3`, the constant term of the cubic factor.
    pub fn cubic_constant(&self) -> Rat {
        &self.m * &self.a2 - &self.a5 * &self.c3
    }

    /// `{m, m-1, 1, b3, b4, 1; 1, c2, m-b3, 1, c5, m}`.
    pub fn krein_array(&self) -> KreinArray {
        let (b, c) = self.krein_lists();
        KreinArray::new(b, c).expect("valid parameters give a valid Krein array")
    }

    /// The same lists without validation, for tuples that bypass [`validate`].
    pub fn krein_array_unchecked(&self) -> KreinArray {
        let (b, c) = self.krein_lists();
        KreinArray::unchecked(b, c)
    }

    fn krein_lists(&self) -> (Vec<Rat>, Vec<Rat>) {
        let one = Rat::one();
        (
            vec![
                self.m.clone(),
                &self.m - &one,
                one.clone(),
                self.b3.clone(),
                self.b4.clone(),
                one.clone(),
            ],
            vec![
                one.clone(),
                self.c2.clone(),
                self.c3.clone(),
                one,
                self.c5.clone(),
                self.m.clone(),
            ],
        )
    }

    /// `(m, c2, b3, b4, c5)` as strings.
    pub fn label(&self) -> String {
        format!(
            "({}, {}, {}, {}, {})",
            rat::format(&self.m),
            rat::format(&self.c2),
            rat::format(&self.b3),
            rat::format(&self.b4),
            rat::format(&self.c5)
        )
    }
}

pub fn validate(m: Rat, c2: Rat, b3: Rat, b4: Rat, c5: Rat) -> Result<D6Params, D6Error> {
    let two = rat::int(2);
    let mm1 = &m - Rat::one();
    let check = |ok: bool, inv: Invariant| if ok { Ok(()) } else { Err(D6Error::InvalidParams(inv)) };
    check(m > two, Invariant::MGreaterThanTwo)?;
    check(c2.is_positive() && c2 <= mm1, Invariant::C2Range)?;
    check(b3.is_positive() && b3 < m, Invariant::B3Range)?;
    check(b4.is_positive() && b4 <= mm1, Invariant::B4Range)?;
    check(c5.is_positive() && c5 <= mm1, Invariant::C5Range)?;
    let p = D6Params::unchecked(m, c2, b3, b4, c5);
    check(p.a2 == &p.a4 + &p.a5, Invariant::A2EqualsA4PlusA5)?;
    check(!p.cubic_constant().is_negative(), Invariant::CubicConstantNonnegative)?;
    debug_assert!(!p.n.is_zero());
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::int;

    #[test]
    fn spot_instance() {
        let p = D6Params::from_ints(3, 1, 1, 2, 1).unwrap();
        assert_eq!(
            (&p.a2, &p.a4, &p.a5, &p.c3, &p.m3, &p.m6, &p.n),
            (&int(1), &int(0), &int(1), &int(2), &int(3), &int(2), &int(24))
        );
    }

    #[test]
    fn second_instance() {
        let p = D6Params::from_ints(4, 1, 2, 2, 2).unwrap();
        assert_eq!((&p.a2, &p.a4, &p.a5, &p.c3), (&int(2), &int(1), &int(1), &int(2)));
        // m3 = 6, m6 = 3, n = 5 * 10
        assert_eq!((&p.m3, &p.m6, &p.n), (&int(6), &int(3), &int(50)));
    }

    #[test]
    fn invariants_named() {
        assert_eq!(
            D6Params::from_ints(3, 1, 1, 2, 2),
            Err(D6Error::InvalidParams(Invariant::A2EqualsA4PlusA5))
        );
        assert_eq!(
            D6Params::from_ints(2, 1, 1, 1, 1),
            Err(D6Error::InvalidParams(Invariant::MGreaterThanTwo))
        );
        assert_eq!(
            D6Params::from_ints(4, 1, 4, 2, 2),
            Err(D6Error::InvalidParams(Invariant::B3Range))
        );
        assert_eq!(
            D6Params::from_ints(4, 0, 1, 2, 2),
            Err(D6Error::InvalidParams(Invariant::C2Range))
        );
    }

    #[test]
    fn krein_array_shape() {
        let p = D6Params::from_ints(3, 1, 1, 2, 1).unwrap();
        assert_eq!(p.krein_array().to_string(), "{3,2,1,1,2,1;1,1,2,1,1,3}");
    }
}
