//! The factorization of `v*_7`, the cubic and quadratic factors, and `x_1`.

use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::params::D6Params;
use super::D6Error;
use crate::exact::ext::ExtElem;
use crate::exact::poly::Poly;
use crate::exact::rat::{self, Rat};
use crate::exact::sturm::{count_roots, root_bound, sturm_isolate, AlgebraicReal};
use crate::scheme::dual_polys;

/// Default width of reported enclosures.
pub fn default_width() -> Rat {
    rat::pow2_neg(20)
}

/// `x^3 - a2 x^2 - (m + c2(m-1)) x + m a2 - a5 c3`.
pub fn cubic(p: &D6Params) -> Poly {
    let mm1 = &p.m - Rat::one();
    Poly::new(vec![
        p.cubic_constant(),
        -(&p.m + &p.c2 * &mm1),
        -p.a2.clone(),
        Rat::one(),
    ])
}

/// `x^2 + c2 x - m`.
pub fn quadratic(p: &D6Params) -> Poly {
    Poly::new(vec![-p.m.clone(), p.c2.clone(), Rat::one()])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct V7Check {
    pub passed: bool,
    /// `m c2 c3 c5 v*_7 - C(x)(x^2 + c2 x - m)(x - m)(x + 1)`.
    pub difference: Poly,
}

/// Runs the recurrence through the full array, so it also works on tuples that
/// break `a2 = a4 + a5`.
pub fn v7_factorization_check(p: &D6Params) -> V7Check {
    let seq = dual_polys(&p.krein_array_unchecked());
    let scale = &p.m * &p.c2 * &p.c3 * &p.c5;
    let lhs = seq.top().scale(&scale);
    let rhs = &(&(&cubic(p) * &quadratic(p)) * &Poly::linear_root(&p.m))
        * &Poly::linear_root(&-Rat::one());
    let difference = &lhs - &rhs;
    V7Check {
        passed: difference.is_zero(),
        difference,
    }
}

/// `x_1` with the symmetric functions of the other two cubic roots and the
/// quadratic roots `x_4 > x_5`.
#[derive(Debug, Clone)]
pub struct X1Root {
    pub cubic: Poly,
    pub x1: AlgebraicReal,
    /// `x_2 + x_3 = a2 - x_1`.
    pub x2x3_sum: ExtElem,
    /// `x_2 x_3 = x_1^2 - a2 x_1 - m - c2(m-1)`.
    pub x2x3_prod: ExtElem,
    /// `C(m-1)`, equal to `-m c2 - a5 c3`.
    pub cubic_at_m_minus_1: Rat,
    pub quadratic: Poly,
    pub x4: AlgebraicReal,
    pub x5: AlgebraicReal,
}

pub fn compute_x1(p: &D6Params) -> Result<X1Root, D6Error> {
    compute_x1_with_width(p, &default_width())
}

pub fn compute_x1_with_width(p: &D6Params, width: &Rat) -> Result<X1Root, D6Error> {
    let c = cubic(p);
    let one = Rat::one();
    let mm1 = &p.m - &one;
    let at_mm1 = c.eval(&mm1);
    let expected = -(&p.m * &p.c2) - &p.a5 * &p.c3;
    if at_mm1 != expected {
        return Err(D6Error::IdentityCheckFailed(format!(
            "C(m-1) = {} but -m c2 - a5 c3 = {}",
            rat::format(&at_mm1),
            rat::format(&expected)
        )));
    }
    if !at_mm1.is_negative() {
        return Err(D6Error::BoundViolation("C(m-1) is not negative".into()));
    }
    if !c.eval(&p.m).is_positive() {
        return Err(D6Error::BoundViolation(
            "C(m) is not positive; m a2 - a5 c3 >= 0 fails".into(),
        ));
    }
    let mut x1 = AlgebraicReal::new(&c, mm1.clone(), p.m.clone())
        .map_err(|e| D6Error::BoundViolation(format!("no isolated root in (m-1, m): {e}")))?;
    let seq = x1.sturm().to_vec();
    let bound = root_bound(x1.defpoly());
    if bound > p.m && count_roots(&seq, &p.m, &bound) != 0 {
        return Err(D6Error::BoundViolation("the cubic has a root above m".into()));
    }
    x1.refine_in_place(width);

    let modulus = x1.defpoly_arc();
    let x = Poly::x();
    let x2x3_sum = ExtElem::new(&(&Poly::constant(p.a2.clone()) - &x), Arc::clone(&modulus));
    let prod = Poly::new(vec![
        -(&p.m + &p.c2 * &mm1),
        -p.a2.clone(),
        Rat::one(),
    ]);
    let x2x3_prod = ExtElem::new(&prod, modulus);

    let q = quadratic(p);
    let mut qr = sturm_isolate(&q);
    if qr.len() != 2 {
        return Err(D6Error::IdentityCheckFailed("quadratic factor lacks two real roots".into()));
    }
    let x5 = qr.pop().expect("two roots");
    let x4 = qr.pop().expect("two roots");
    debug_assert!(!x4.width().is_zero());
    Ok(X1Root {
        cubic: c,
        x1,
        x2x3_sum,
        x2x3_prod,
        cubic_at_m_minus_1: at_mm1,
        quadratic: q,
        x4,
        x5,
    })
}
