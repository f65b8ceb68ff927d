//! Arithmetic in `Q[x]/(f)` and exact sign determination at a root of `f`.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::interval::Interval;
use super::poly::Poly;
use super::rat::{self, Rat};
use super::sturm::AlgebraicReal;

/// Sign of a real number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn from_i8(s: i8) -> Sign {
        match s.signum() {
            -1 => Sign::Negative,
            0 => Sign::Zero,
            _ => Sign::Positive,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn of(q: &Rat) -> Sign {
        Sign::from_i8(rat::signum(q))
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_i8(self.to_i8() * rhs.to_i8())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        })
    }
}

/// Element `rep(θ)` of `Q[x]/(modulus)`, with `deg rep < deg modulus`.
#[derive(Clone, PartialEq, Eq)]
pub struct ExtElem {
    rep: Poly,
    modulus: Arc<Poly>,
}

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] mod ({})", self.rep, self.modulus)
    }
}

impl ExtElem {
    pub fn new(rep: &Poly, modulus: Arc<Poly>) -> Self {
        let rep = rep.rem(&modulus).expect("modulus is nonzero");
        ExtElem { rep, modulus }
    }

    /// Element over the defining polynomial of `theta`.
    pub fn over(rep: &Poly, theta: &AlgebraicReal) -> Self {
        Self::new(rep, theta.defpoly_arc())
    }

    pub fn constant(c: Rat, modulus: Arc<Poly>) -> Self {
        Self::new(&Poly::constant(c), modulus)
    }

    /// The generator `x` itself.
    pub fn generator(modulus: Arc<Poly>) -> Self {
        Self::new(&Poly::x(), modulus)
    }

    pub fn rep(&self) -> &Poly {
        &self.rep
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn modulus_arc(&self) -> Arc<Poly> {
        Arc::clone(&self.modulus)
    }

    /// True when the representative is the zero polynomial.
    pub fn is_zero_rep(&self) -> bool {
        self.rep.is_zero()
    }

    /// The constant term when the representative has degree <= 0.
    pub fn as_rational(&self) -> Option<Rat> {
        match self.rep.degree() {
            None => Some(Rat::zero()),
            Some(0) => Some(self.rep.coeff(0)),
            _ => None,
        }
    }

    fn check(&self, other: &ExtElem) {
        assert!(
            Arc::ptr_eq(&self.modulus, &other.modulus) || self.modulus == other.modulus,
            "ExtElem operands live over different moduli"
        );
    }

    pub fn add(&self, other: &ExtElem) -> ExtElem {
        self.check(other);
        ExtElem {
            rep: &self.rep + &other.rep,
            modulus: self.modulus_arc(),
        }
    }

    pub fn sub(&self, other: &ExtElem) -> ExtElem {
        self.check(other);
        ExtElem {
            rep: &self.rep - &other.rep,
            modulus: self.modulus_arc(),
        }
    }

    pub fn mul(&self, other: &ExtElem) -> ExtElem {
        self.check(other);
        ExtElem::new(&(&self.rep * &other.rep), self.modulus_arc())
    }

    pub fn neg(&self) -> ExtElem {
        ExtElem {
            rep: -&self.rep,
            modulus: self.modulus_arc(),
        }
    }

    pub fn scale(&self, c: &Rat) -> ExtElem {
        ExtElem {
            rep: self.rep.scale(c),
            modulus: self.modulus_arc(),
        }
    }

    pub fn add_rat(&self, c: &Rat) -> ExtElem {
        ExtElem {
            rep: &self.rep + &Poly::constant(c.clone()),
            modulus: self.modulus_arc(),
        }
    }

    /// Multiplicative inverse; `None` when `rep` shares a factor with the modulus.
    pub fn inv(&self) -> Option<ExtElem> {
        let (g, s, _) = self.rep.ext_gcd(&self.modulus);
        if g.degree() != Some(0) {
            return None;
        }
        Some(ExtElem::new(&s, self.modulus_arc()))
    }

    pub fn div(&self, other: &ExtElem) -> Option<ExtElem> {
        other.inv().map(|inv| self.mul(&inv))
    }

    /// Substitutes a rational for the generator.
    pub fn eval(&self, x: &Rat) -> Rat {
        self.rep.eval(x)
    }

    /// Interval enclosure of the value at `theta`.
    pub fn enclosure_at(&self, theta: &AlgebraicReal) -> Interval {
        theta.enclosure().eval_poly(&self.rep)
    }

    /// Re-expresses the same polynomial over another modulus.
    pub fn lift(&self, modulus: Arc<Poly>) -> ExtElem {
        ExtElem::new(&self.rep, modulus)
    }
}

/// Is `g(θ) = 0`? Decided exactly: `gcd(g, f)` must have a root in θ's interval.
pub fn vanishes_at(g: &Poly, theta: &AlgebraicReal) -> bool {
    if g.is_zero() {
        return true;
    }
    let h = g.gcd(theta.defpoly());
    if h.degree().unwrap_or(0) == 0 {
        return false;
    }
    // h divides the square-free defining polynomial, so its roots are simple and
    // it cannot vanish at the interval endpoints.
    let iv = theta.interval();
    let lo = rat::signum(&h.eval(&iv.lo));
    let hi = rat::signum(&h.eval(&iv.hi));
    lo != hi
}

/// Exact sign of the polynomial `g` at the root `θ`; also returns the refined root
/// used for the decision so callers can cache it.
pub fn sign_of_poly_at(g: &Poly, theta: &AlgebraicReal) -> (Sign, AlgebraicReal) {
    if vanishes_at(g, theta) {
        return (Sign::Zero, theta.clone());
    }
    let mut t = theta.clone();
    loop {
        if let Some(s) = t.enclosure().eval_poly(g).strict_sign() {
            return (Sign::from_i8(s), t);
        }
        // Nonzero value: interval enclosures converge to it, so this terminates.
        let w = t.width() / rat::int(16);
        t.refine_in_place(&w);
    }
}

/// Exact sign of `g(θ)`.
pub fn sign_at(g: &ExtElem, theta: &AlgebraicReal) -> Sign {
    sign_of_poly_at(g.rep(), theta).0
}

/// Enclosure of `g(θ)` of width at most `width` (refining θ as needed).
pub fn enclose_poly(g: &Poly, theta: &AlgebraicReal, width: &Rat) -> (Interval, AlgebraicReal) {
    let mut t = theta.clone();
    loop {
        let e = t.enclosure().eval_poly(g);
        if &e.width() <= width {
            return (e, t);
        }
        let w = t.width() / rat::int(16);
        t.refine_in_place(&w);
    }
}

/// Convenience: the rational one over a modulus.
pub fn one(modulus: Arc<Poly>) -> ExtElem {
    ExtElem::constant(Rat::one(), modulus)
}
