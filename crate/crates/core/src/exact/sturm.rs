//! Real root isolation by Sturm sequences and real algebraic numbers given by
//! an isolating interval.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::interval::Interval;
use super::poly::Poly;
use super::rat::{self, Rat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("defining polynomial must be nonconstant")]
    ConstantPolynomial,
    #[error("isolating interval must satisfy lo < hi")]
    EmptyInterval,
    #[error("defining polynomial vanishes at an interval endpoint")]
    RootAtEndpoint,
    #[error("interval contains {0} roots, expected exactly one")]
    NotIsolating(usize),
}

/// Sturm sequence `p, p', -rem(p, p'), ...` of a square-free polynomial.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone()];
    if p.degree().unwrap_or(0) == 0 {
        return seq;
    }
    seq.push(p.derivative());
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]).expect("sequence entries nonzero");
        if r.is_zero() {
            break;
        }
        seq.push(-r);
    }
    seq
}

fn count_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Number of sign changes of the sequence evaluated at `x`.
pub fn sign_variations(seq: &[Poly], x: &Rat) -> usize {
    count_changes(seq.iter().map(|p| rat::signum(&p.eval(x))))
}

/// Sign changes at `+inf` (`positive = true`) or `-inf`.
pub fn sign_variations_at_infinity(seq: &[Poly], positive: bool) -> usize {
    count_changes(seq.iter().map(|p| {
        let lc = p.leading().map(rat::signum).unwrap_or(0);
        let odd = p.degree().unwrap_or(0) % 2 == 1;
        if !positive && odd {
            -lc
        } else {
            lc
        }
    }))
}

/// Number of distinct real roots in `(a, b]` of the square-free polynomial
/// whose Sturm sequence is `seq`.
pub fn count_roots(seq: &[Poly], a: &Rat, b: &Rat) -> usize {
    sign_variations(seq, a).saturating_sub(sign_variations(seq, b))
}

/// Number of distinct real roots of `p`.
pub fn count_real_roots(p: &Poly) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let seq = sturm_sequence(&p.square_free());
    sign_variations_at_infinity(&seq, false).saturating_sub(sign_variations_at_infinity(&seq, true))
}

/// Power of two strictly greater than every real root's absolute value (Cauchy bound).
pub fn root_bound(p: &Poly) -> Rat {
    let lc = p.leading().expect("nonzero polynomial").abs();
    let max_ratio = p
        .coeffs()
        .iter()
        .take(p.coeffs().len() - 1)
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rat::zero);
    let bound = max_ratio + Rat::one();
    let mut k = 0u32;
    while rat::pow2(k) <= bound {
        k += 1;
    }
    rat::pow2(k)
}

/// Open interval `(lo, hi)` isolating one root of a tracked polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatingInterval {
    #[serde(with = "rat::serde_rat")]
    pub lo: Rat,
    #[serde(with = "rat::serde_rat")]
    pub hi: Rat,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn closure(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn contains(&self, other: &IsolatingInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }
}

/// A real root of a square-free rational polynomial, pinned by an isolating interval.
#[derive(Clone)]
pub struct AlgebraicReal {
    defpoly: Arc<Poly>,
    sturm: Arc<Vec<Poly>>,
    interval: IsolatingInterval,
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AlgebraicReal(root of {} in ({}, {}))",
            self.defpoly,
            rat::format(&self.interval.lo),
            rat::format(&self.interval.hi)
        )
    }
}

impl AlgebraicReal {
    /// Checks all invariants. `defpoly` is replaced by its monic square-free part.
    pub fn new(defpoly: &Poly, lo: Rat, hi: Rat) -> Result<Self, RootError> {
        if defpoly.degree().unwrap_or(0) == 0 {
            return Err(RootError::ConstantPolynomial);
        }
        if lo >= hi {
            return Err(RootError::EmptyInterval);
        }
        let p = defpoly.square_free();
        if p.eval(&lo).is_zero() || p.eval(&hi).is_zero() {
            return Err(RootError::RootAtEndpoint);
        }
        let seq = sturm_sequence(&p);
        let count = count_roots(&seq, &lo, &hi);
        if count != 1 {
            return Err(RootError::NotIsolating(count));
        }
        Ok(AlgebraicReal {
            defpoly: Arc::new(p),
            sturm: Arc::new(seq),
            interval: IsolatingInterval { lo, hi },
        })
    }

    fn from_parts(defpoly: Arc<Poly>, sturm: Arc<Vec<Poly>>, lo: Rat, hi: Rat) -> Self {
        AlgebraicReal {
            defpoly,
            sturm,
            interval: IsolatingInterval { lo, hi },
        }
    }

    /// The rational `c` as the root of `x - c`.
    pub fn from_rational(c: &Rat) -> Self {
        let p = Poly::linear_root(c);
        let seq = sturm_sequence(&p);
        Self::from_parts(
            Arc::new(p),
            Arc::new(seq),
            c - Rat::one(),
            c + Rat::one(),
        )
    }

    pub fn defpoly(&self) -> &Poly {
        &self.defpoly
    }

    pub fn defpoly_arc(&self) -> Arc<Poly> {
        Arc::clone(&self.defpoly)
    }

    pub fn sturm(&self) -> &[Poly] {
        &self.sturm
    }

    pub fn interval(&self) -> &IsolatingInterval {
        &self.interval
    }

    pub fn enclosure(&self) -> Interval {
        self.interval.closure()
    }

    pub fn width(&self) -> Rat {
        self.interval.width()
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.refine(&rat::pow2_neg(60));
        rat::to_f64(&r.interval.midpoint_rat())
    }

    /// One bisection step. Keeps dyadic endpoints when the input has them.
    pub fn bisect(&mut self) {
        let mid = rat::midpoint(&self.interval.lo, &self.interval.hi);
        let at_mid = self.defpoly.eval(&mid);
        if at_mid.is_zero() {
            // The root is exactly `mid`; shrink symmetrically around it.
            let mut eps = self.interval.width() / rat::int(4);
            loop {
                let lo = &mid - &eps;
                let hi = &mid + &eps;
                if !self.defpoly.eval(&lo).is_zero()
                    && !self.defpoly.eval(&hi).is_zero()
                    && count_roots(&self.sturm, &lo, &hi) == 1
                {
                    self.interval = IsolatingInterval { lo, hi };
                    return;
                }
                eps /= rat::two();
            }
        }
        let at_lo = self.defpoly.eval(&self.interval.lo);
        if at_lo.is_positive() == at_mid.is_positive() {
            self.interval.lo = mid;
        } else {
            self.interval.hi = mid;
        }
    }

    /// Bisects until the width is at most `width`.
    pub fn refine_in_place(&mut self, width: &Rat) {
        assert!(width.is_positive(), "refinement width must be positive");
        while &self.interval.width() > width {
            self.bisect();
        }
    }

    /// Returns a copy whose interval has width at most `width`; the new
    /// interval is contained in the old one.
    pub fn refine(&self, width: &Rat) -> AlgebraicReal {
        let mut out = self.clone();
        out.refine_in_place(width);
        out
    }

    /// Exact comparison of the root with a rational.
    pub fn cmp_rat(&self, q: &Rat) -> Ordering {
        if self.defpoly.eval(q).is_zero() && &self.interval.lo < q && q < &self.interval.hi {
            return Ordering::Equal;
        }
        let mut a = self.clone();
        loop {
            if q <= &a.interval.lo {
                return Ordering::Greater;
            }
            if q >= &a.interval.hi {
                return Ordering::Less;
            }
            a.bisect();
        }
    }

    /// The root as a rational number, when it is one.
    pub fn to_rational(&self) -> Option<Rat> {
        if self.defpoly.degree() == Some(1) {
            let c = self.defpoly.coeffs();
            return Some(-&c[0] / &c[1]);
        }
        // A rational root p/q of the primitive integer polynomial has q | leading coefficient.
        let ints = self.defpoly.primitive_integer();
        let lead = ints.last().cloned().unwrap_or_else(BigInt::one);
        let lead_rat = Rat::from_integer(lead.clone());
        let narrow = self.refine(&Rat::new(BigInt::one(), lead.clone() * 2));
        let k = rat::ceil(&(&narrow.interval.lo * &lead_rat));
        let candidate = Rat::new(k, lead);
        if candidate < narrow.interval.hi && self.defpoly.eval(&candidate).is_zero() {
            Some(candidate)
        } else {
            None
        }
    }

    /// If `self` and `other` denote the same real number, returns it as a root of
    /// the gcd of both defining polynomials.
    pub fn common_root(&self, other: &AlgebraicReal) -> Option<AlgebraicReal> {
        let lo = (&self.interval.lo).max(&other.interval.lo).clone();
        let hi = (&self.interval.hi).min(&other.interval.hi).clone();
        if lo >= hi {
            return None;
        }
        let g = if self.defpoly == other.defpoly {
            (*self.defpoly).clone()
        } else {
            self.defpoly.gcd(&other.defpoly)
        };
        if g.degree().unwrap_or(0) == 0 {
            return None;
        }
        let seq = sturm_sequence(&g);
        // Endpoints come from isolating intervals of polynomials that g divides,
        // so g does not vanish there.
        if count_roots(&seq, &lo, &hi) == 1 {
            Some(Self::from_parts(Arc::new(g), Arc::new(seq), lo, hi))
        } else {
            None
        }
    }

    /// True when both denote the same real number.
    pub fn same_root(&self, other: &AlgebraicReal) -> bool {
        self.common_root(other).is_some()
    }
}

impl IsolatingInterval {
    fn midpoint_rat(&self) -> Rat {
        rat::midpoint(&self.lo, &self.hi)
    }
}

/// One [`AlgebraicReal`] per distinct real root of `p`, sorted descending.
pub fn sturm_isolate(p: &Poly) -> Vec<AlgebraicReal> {
    assert!(!p.is_zero(), "cannot isolate roots of the zero polynomial");
    if p.degree() == Some(0) {
        return Vec::new();
    }
    let sf = p.square_free();
    let defpoly = Arc::new(sf);
    let seq = Arc::new(sturm_sequence(&defpoly));
    let bound = root_bound(&defpoly);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        let n = count_roots(&seq, &a, &b);
        match n {
            0 => {}
            1 => out.push(AlgebraicReal::from_parts(
                Arc::clone(&defpoly),
                Arc::clone(&seq),
                a,
                b,
            )),
            _ => {
                let mid = rat::midpoint(&a, &b);
                if defpoly.eval(&mid).is_zero() {
                    let mut eps = (&b - &a) / rat::int(4);
                    loop {
                        let lo = &mid - &eps;
                        let hi = &mid + &eps;
                        if !defpoly.eval(&lo).is_zero()
                            && !defpoly.eval(&hi).is_zero()
                            && count_roots(&seq, &lo, &hi) == 1
                        {
                            stack.push((a, lo.clone()));
                            stack.push((hi.clone(), b));
                            out.push(AlgebraicReal::from_parts(
                                Arc::clone(&defpoly),
                                Arc::clone(&seq),
                                lo,
                                hi,
                            ));
                            break;
                        }
                        eps /= rat::two();
                    }
                } else {
                    stack.push((a, mid.clone()));
                    stack.push((mid, b));
                }
            }
        }
    }
    out.sort_by(|x, y| y.interval.lo.cmp(&x.interval.lo));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{int, rat};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn inside(a: &AlgebraicReal, lo: f64, hi: f64) -> bool {
        let (l, h) = a.enclosure().to_f64_pair();
        lo < l && h < hi
    }

    #[test]
    fn sqrt_two() {
        let roots = sturm_isolate(&p(&[-2, 0, 1]));
        assert_eq!(roots.len(), 2);
        let r0 = roots[0].refine(&rat(1, 1000));
        let r1 = roots[1].refine(&rat(1, 1000));
        assert!(inside(&r0, 1.4132, 1.4152));
        assert!(inside(&r1, -1.4152, -1.4132));
    }

    #[test]
    fn cubic_roots_match_float_oracle() {
        // float oracle: 2.7092753594, 0.1939365665, -1.9032119259
        let roots = sturm_isolate(&p(&[1, -5, -1, 1]));
        assert_eq!(roots.len(), 3);
        let expected = [2.7092753594, 0.1939365665, -1.9032119259];
        for (r, e) in roots.iter().zip(expected) {
            let r = r.refine(&rat(1, 100_000));
            assert!(inside(&r, e - 1e-4, e + 1e-4), "{r:?} vs {e}");
        }
    }

    #[test]
    fn double_root_reduced() {
        let roots = sturm_isolate(&p(&[-1, 1]).pow(2));
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].to_rational(), Some(int(1)));
    }

    #[test]
    fn constant_has_no_roots() {
        assert!(sturm_isolate(&Poly::constant(int(3))).is_empty());
    }

    #[test]
    fn rational_root_exactly_on_midpoint() {
        // roots -2, 0, 2 ; the first split of (-4, 4) hits 0 exactly
        let roots = sturm_isolate(&p(&[0, -4, 0, 1]));
        let vals: Vec<_> = roots.iter().map(|r| r.to_rational().unwrap()).collect();
        assert_eq!(vals, vec![int(2), int(0), int(-2)]);
    }

    #[test]
    fn refine_examples() {
        let a = AlgebraicReal::new(&p(&[-2, 0, 1]), int(1), int(2)).unwrap();
        let r = a.refine(&rat(1, 100));
        assert!(r.width() <= rat(1, 100));
        assert!(a.interval().contains(r.interval()));
        assert!(inside(&r, 1.4, 1.43));

        let c = AlgebraicReal::new(&p(&[1, -5, -1, 1]), int(2), int(3)).unwrap();
        let r = c.refine(&rat(1, 1000));
        assert!(r.width() <= rat(1, 1000));
        assert!(inside(&r, 2.7082, 2.7104));

        let narrow = a.refine(&rat(1, 1000));
        let again = narrow.refine(&rat(1, 10));
        assert_eq!(again.interval(), narrow.interval());
    }

    #[test]
    fn invalid_intervals_rejected() {
        let q = p(&[-2, 0, 1]);
        assert_eq!(
            AlgebraicReal::new(&q, int(-2), int(2)).unwrap_err(),
            RootError::NotIsolating(2)
        );
        assert_eq!(
            AlgebraicReal::new(&q, int(2), int(1)).unwrap_err(),
            RootError::EmptyInterval
        );
        assert_eq!(
            AlgebraicReal::new(&p(&[-1, 1]), int(1), int(2)).unwrap_err(),
            RootError::RootAtEndpoint
        );
    }

    #[test]
    fn comparisons_and_rationality() {
        let s = AlgebraicReal::new(&p(&[-2, 0, 1]), int(1), int(2)).unwrap();
        assert_eq!(s.cmp_rat(&rat(141, 100)), Ordering::Greater);
        assert_eq!(s.cmp_rat(&rat(142, 100)), Ordering::Less);
        assert_eq!(s.to_rational(), None);
        let t = AlgebraicReal::new(&p(&[-3, 2]), int(1), int(2)).unwrap();
        assert_eq!(t.cmp_rat(&rat(3, 2)), Ordering::Equal);
        // rational root of a reducible polynomial
        let f = &p(&[-2, 0, 1]) * &p(&[3, 4]);
        let roots = sturm_isolate(&f);
        let rats: Vec<_> = roots.iter().filter_map(|r| r.to_rational()).collect();
        assert_eq!(rats, vec![rat(-3, 4)]);
    }

    #[test]
    fn common_roots() {
        let f = &p(&[-2, 0, 1]) * &p(&[-1, 1]);
        let roots_f = sturm_isolate(&f);
        let sqrt2 = AlgebraicReal::new(&p(&[-2, 0, 1]), int(1), int(2)).unwrap();
        let matches: Vec<_> = roots_f.iter().filter(|r| r.same_root(&sqrt2)).collect();
        assert_eq!(matches.len(), 1);
        let c = matches[0].common_root(&sqrt2).unwrap();
        assert_eq!(c.defpoly(), &p(&[-2, 0, 1]));
    }

    #[test]
    fn root_count_matches_isolation() {
        let f = &(&p(&[-1, 0, 1]) * &p(&[1, 0, 1])) * &p(&[-5, 1]);
        assert_eq!(count_real_roots(&f), 3);
        assert_eq!(sturm_isolate(&f).len(), 3);
    }
}
