//! Closed rational intervals used as value enclosures.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rat::{self, Rat};

/// Closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    #[serde(with = "rat::serde_rat")]
    pub lo: Rat,
    #[serde(with = "rat::serde_rat")]
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        rat::midpoint(&self.lo, &self.hi)
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// `Some(sign)` when the interval excludes zero.
    pub fn strict_sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rat) -> Interval {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            Interval::new(a, b)
        } else {
            Interval::new(b, a)
        }
    }

    pub fn shift(&self, c: &Rat) -> Interval {
        Interval::new(&self.lo + c, &self.hi + c)
    }

    /// Enclosure of `1/x`; `None` when the interval contains zero.
    pub fn recip(&self) -> Option<Interval> {
        if self.contains_zero() {
            return None;
        }
        Some(Interval::new(self.hi.recip(), self.lo.recip()))
    }

    /// Horner evaluation of `p` over the interval.
    pub fn eval_poly(&self, p: &Poly) -> Interval {
        let mut acc = Interval::point(Rat::zero());
        for c in p.coeffs().iter().rev() {
            acc = (&acc * self).shift(c);
        }
        acc
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (rat::to_f64(&self.lo), rat::to_f64(&self.hi))
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval::new(&self.lo + &rhs.lo, &self.hi + &rhs.hi)
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        Interval::new(&self.lo - &rhs.hi, &self.hi - &rhs.lo)
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::new(-&self.hi, -&self.lo)
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().cloned().expect("four products");
        let hi = products.iter().max().cloned().expect("four products");
        Interval::new(lo, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{int, rat};

    #[test]
    fn arithmetic_encloses() {
        let a = Interval::new(int(-1), int(2));
        let b = Interval::new(int(3), int(4));
        assert_eq!(&a * &b, Interval::new(int(-4), int(8)));
        assert_eq!(&a - &b, Interval::new(int(-5), int(-1)));
        assert_eq!(a.scale(&int(-2)), Interval::new(int(-4), int(2)));
        assert!(a.contains_zero());
        assert_eq!(b.strict_sign(), Some(1));
        assert_eq!(b.recip().unwrap(), Interval::new(rat(1, 4), rat(1, 3)));
        assert!(a.recip().is_none());
    }

    #[test]
    fn poly_enclosure() {
        let p = Poly::from_ints(&[-2, 0, 1]);
        let e = Interval::new(rat(14, 10), rat(15, 10)).eval_poly(&p);
        assert!(e.contains_zero());
        assert!(e.lo >= rat(-2, 1) && e.hi <= rat(1, 2));
    }
}
