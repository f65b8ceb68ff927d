//! Exact arithmetic at a point `(θ_1, ..., θ_s)` of real algebraic numbers.
//!
//! Values are polynomials in `y_1..y_s` reduced modulo each `f_k(y_k)`, where
//! `f_k` is the (rational, square-free) defining polynomial of `θ_k`. The ring is
//! not a field, so zero tests work at the point: `v(θ) = 0` is decided by
//! computing `gcd(v(θ_1..θ_{s-1}, Y), f_s(Y))` over the lower levels and checking
//! whether that gcd changes sign across `θ_s`'s isolating interval.

use num_traits::{One, Zero};

use super::ext::Sign;
use super::interval::Interval;
use super::poly::Poly;
use super::rat::{self, Rat};
use super::sturm::AlgebraicReal;

/// A polynomial in the first `level` variables of a [`Tower`].
///
/// `Const` is a constant at any level. `Poly(v)` at level `L` holds the
/// coefficients of `y_L` (lowest first), each an element of level `L - 1`.
#[derive(Debug, Clone, PartialEq)]
pub enum TowerElem {
    Const(Rat),
    Poly(Vec<TowerElem>),
}

impl TowerElem {
    pub fn zero() -> Self {
        TowerElem::Const(Rat::zero())
    }

    fn is_structural_zero(&self) -> bool {
        matches!(self, TowerElem::Const(c) if c.is_zero())
    }

    fn from_vec(mut v: Vec<TowerElem>) -> Self {
        while v.last().is_some_and(TowerElem::is_structural_zero) {
            v.pop();
        }
        match v.len() {
            0 => TowerElem::zero(),
            1 if matches!(v[0], TowerElem::Const(_)) => v.pop().expect("one element"),
            _ => TowerElem::Poly(v),
        }
    }

    fn coeffs(&self) -> Vec<TowerElem> {
        match self {
            TowerElem::Const(_) => vec![self.clone()],
            TowerElem::Poly(v) => v.clone(),
        }
    }
}

/// The point `(θ_1, ..., θ_s)`.
#[derive(Debug, Clone)]
pub struct Tower {
    roots: Vec<AlgebraicReal>,
    moduli: Vec<Poly>,
}

impl Tower {
    pub fn new(roots: Vec<AlgebraicReal>) -> Self {
        let moduli = roots.iter().map(|r| r.defpoly().monic()).collect();
        Tower { roots, moduli }
    }

    pub fn levels(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[AlgebraicReal] {
        &self.roots
    }

    pub fn add(&self, a: &TowerElem, b: &TowerElem) -> TowerElem {
        match (a, b) {
            (TowerElem::Const(x), TowerElem::Const(y)) => TowerElem::Const(x + y),
            _ => {
                let (av, bv) = (a.coeffs(), b.coeffs());
                let n = av.len().max(bv.len());
                let zero = TowerElem::zero();
                TowerElem::from_vec(
                    (0..n)
                        .map(|k| self.add(av.get(k).unwrap_or(&zero), bv.get(k).unwrap_or(&zero)))
                        .collect(),
                )
            }
        }
    }

    pub fn scale(&self, a: &TowerElem, c: &Rat) -> TowerElem {
        match a {
            TowerElem::Const(x) => TowerElem::Const(x * c),
            TowerElem::Poly(v) => TowerElem::from_vec(v.iter().map(|e| self.scale(e, c)).collect()),
        }
    }

    pub fn neg(&self, a: &TowerElem) -> TowerElem {
        self.scale(a, &-Rat::one())
    }

    pub fn sub(&self, a: &TowerElem, b: &TowerElem) -> TowerElem {
        self.add(a, &self.neg(b))
    }

    /// Product at `level`, reduced modulo the defining polynomials.
    pub fn mul(&self, a: &TowerElem, b: &TowerElem, level: usize) -> TowerElem {
        match (a, b) {
            (TowerElem::Const(x), _) => self.scale(b, x),
            (_, TowerElem::Const(y)) => self.scale(a, y),
            (TowerElem::Poly(av), TowerElem::Poly(bv)) => {
                assert!(level > 0, "polynomial element at level 0");
                let mut out = vec![TowerElem::zero(); av.len() + bv.len() - 1];
                for (i, x) in av.iter().enumerate() {
                    if x.is_structural_zero() {
                        continue;
                    }
                    for (j, y) in bv.iter().enumerate() {
                        let prod = self.mul(x, y, level - 1);
                        out[i + j] = self.add(&out[i + j], &prod);
                    }
                }
                self.reduce(out, level)
            }
        }
    }

    fn reduce(&self, mut v: Vec<TowerElem>, level: usize) -> TowerElem {
        let f = &self.moduli[level - 1];
        let n = f.degree().expect("nonconstant modulus");
        while v.len() > n {
            let top = v.pop().expect("nonempty");
            let base = v.len() - n;
            for i in 0..n {
                let c = f.coeff(i);
                if c.is_zero() {
                    continue;
                }
                let term = self.scale(&top, &c);
                v[base + i] = self.sub(&v[base + i], &term);
            }
        }
        TowerElem::from_vec(v)
    }

    /// `p(y_var)` as an element at `level` (`var < level`).
    pub fn embed(&self, p: &Poly, var: usize, level: usize) -> TowerElem {
        assert!(var < level, "variable outside the tower level");
        if var + 1 == level {
            let v = p.coeffs().iter().cloned().map(TowerElem::Const).collect();
            self.reduce(v, level)
        } else {
            let inner = self.embed(p, var, level - 1);
            if matches!(inner, TowerElem::Const(_)) {
                inner
            } else {
                TowerElem::Poly(vec![inner])
            }
        }
    }

    /// Substitutes the rational `q` for the top variable of a `level` element.
    fn eval_top(&self, a: &TowerElem, q: &Rat) -> TowerElem {
        match a {
            TowerElem::Const(_) => a.clone(),
            TowerElem::Poly(v) => v
                .iter()
                .rev()
                .fold(TowerElem::zero(), |acc, c| self.add(&self.scale(&acc, q), c)),
        }
    }

    /// Interval enclosure over the boxes (one per variable).
    pub fn enclosure(&self, a: &TowerElem, level: usize, boxes: &[Interval]) -> Interval {
        match a {
            TowerElem::Const(c) => Interval::point(c.clone()),
            TowerElem::Poly(v) => {
                let x = &boxes[level - 1];
                v.iter().rev().fold(Interval::point(Rat::zero()), |acc, c| {
                    let ce = self.enclosure(c, level - 1, boxes);
                    &(&acc * x) + &ce
                })
            }
        }
    }

    /// Exact zero test of the value at the point.
    pub fn is_zero(&self, a: &TowerElem, level: usize) -> bool {
        match a {
            TowerElem::Const(c) => c.is_zero(),
            TowerElem::Poly(v) => {
                let below = level - 1;
                let mut coeffs = v.clone();
                self.strip(&mut coeffs, below);
                if coeffs.len() <= 1 {
                    return coeffs.is_empty();
                }
                let f: Vec<TowerElem> = self.moduli[below]
                    .coeffs()
                    .iter()
                    .cloned()
                    .map(TowerElem::Const)
                    .collect();
                let g = self.gcd_at_point(coeffs, f, below);
                if g.len() <= 1 {
                    return false;
                }
                let iv = self.roots[below].interval();
                let gp = TowerElem::Poly(g);
                let at_lo = self.eval_top(&gp, &iv.lo);
                let at_hi = self.eval_top(&gp, &iv.hi);
                // g divides f_level at the point, so it is nonzero at the endpoints.
                self.sign(&at_lo, below) != self.sign(&at_hi, below)
            }
        }
    }

    /// Drops leading coefficients that vanish at the point.
    fn strip(&self, v: &mut Vec<TowerElem>, level: usize) {
        while let Some(top) = v.last() {
            if self.is_zero(top, level) {
                v.pop();
            } else {
                break;
            }
        }
    }

    fn gcd_at_point(
        &self,
        mut a: Vec<TowerElem>,
        mut b: Vec<TowerElem>,
        level: usize,
    ) -> Vec<TowerElem> {
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.len() <= 1 {
                // b is a nonzero constant at the point
                return b;
            }
            let mut r = self.pseudo_rem(&a, &b, level);
            self.strip(&mut r, level);
            if r.is_empty() {
                return b;
            }
            if level == 0 {
                r = monic_rational(r);
            }
            a = std::mem::replace(&mut b, r);
        }
    }

    fn pseudo_rem(&self, a: &[TowerElem], b: &[TowerElem], level: usize) -> Vec<TowerElem> {
        let lcb = b.last().expect("nonempty divisor");
        let mut r = a.to_vec();
        while r.len() >= b.len() {
            let lcr = r.last().expect("nonempty").clone();
            let shift = r.len() - b.len();
            let mut next: Vec<TowerElem> = r.iter().map(|c| self.mul(lcb, c, level)).collect();
            for (j, bj) in b.iter().enumerate() {
                let t = self.mul(&lcr, bj, level);
                next[j + shift] = self.sub(&next[j + shift], &t);
            }
            next.pop();
            self.strip(&mut next, level);
            r = next;
        }
        r
    }

    /// Exact sign of the value at the point.
    pub fn sign(&self, a: &TowerElem, level: usize) -> Sign {
        if let TowerElem::Const(c) = a {
            return Sign::of(c);
        }
        if self.is_zero(a, level) {
            return Sign::Zero;
        }
        let mut roots: Vec<AlgebraicReal> = self.roots[..level].to_vec();
        loop {
            let boxes: Vec<Interval> = roots.iter().map(AlgebraicReal::enclosure).collect();
            if let Some(s) = self.enclosure(a, level, &boxes).strict_sign() {
                return Sign::from_i8(s);
            }
            for r in &mut roots {
                let w = r.width() / rat::int(16);
                r.refine_in_place(&w);
            }
        }
    }
}

fn monic_rational(v: Vec<TowerElem>) -> Vec<TowerElem> {
    let lc = match v.last() {
        Some(TowerElem::Const(c)) if !c.is_zero() => c.recip(),
        _ => return v,
    };
    v.into_iter()
        .map(|e| match e {
            TowerElem::Const(c) => TowerElem::Const(c * &lc),
            other => other,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::int;
    use crate::exact::sturm::sturm_isolate;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn product_of_conjugates() {
        // roots of x^2 + x - 1: (-1 ± sqrt5)/2; their product is -1, sum is -1.
        let roots = sturm_isolate(&p(&[-1, 1, 1]));
        let t = Tower::new(roots);
        let x = t.embed(&Poly::x(), 0, 2);
        let y = t.embed(&Poly::x(), 1, 2);
        let prod = t.mul(&x, &y, 2);
        let plus_one = t.add(&prod, &TowerElem::Const(int(1)));
        assert!(t.is_zero(&plus_one, 2));
        let sum = t.add(&x, &y);
        assert!(t.is_zero(&t.add(&sum, &TowerElem::Const(int(1))), 2));
        assert!(!t.is_zero(&t.sub(&x, &y), 2));
        assert_eq!(t.sign(&t.sub(&x, &y), 2), Sign::Positive);
    }

    #[test]
    fn same_polynomial_same_root() {
        // both levels hold the same root of x^3 - x^2 - 5x + 1
        let r = sturm_isolate(&p(&[1, -5, -1, 1])).remove(0);
        let t = Tower::new(vec![r.clone(), r]);
        let x = t.embed(&Poly::x(), 0, 2);
        let y = t.embed(&Poly::x(), 1, 2);
        assert!(t.is_zero(&t.sub(&x, &y), 2));
        let sq = t.mul(&x, &y, 2);
        let xx = t.embed(&p(&[0, 0, 1]), 0, 2);
        assert!(t.is_zero(&t.sub(&sq, &xx), 2));
    }

    #[test]
    fn three_level_symmetric_functions() {
        // x1 + x2 + x3 = 1 and x1 x2 x3 = -1 for the roots of x^3 - x^2 - 5x + 1
        let roots = sturm_isolate(&p(&[1, -5, -1, 1]));
        let t = Tower::new(roots);
        let v: Vec<_> = (0..3).map(|k| t.embed(&Poly::x(), k, 3)).collect();
        let s = t.add(&t.add(&v[0], &v[1]), &v[2]);
        assert!(t.is_zero(&t.sub(&s, &TowerElem::Const(int(1))), 3));
        let prod = t.mul(&t.mul(&v[0], &v[1], 3), &v[2], 3);
        assert!(t.is_zero(&t.add(&prod, &TowerElem::Const(int(1))), 3));
        let e2 = t.add(
            &t.add(&t.mul(&v[0], &v[1], 3), &t.mul(&v[0], &v[2], 3)),
            &t.mul(&v[1], &v[2], 3),
        );
        assert!(t.is_zero(&t.add(&e2, &TowerElem::Const(int(5))), 3));
        assert_eq!(t.sign(&e2, 3), Sign::Negative);
    }
}
