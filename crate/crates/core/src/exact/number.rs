//! Certified real numbers: rationals, single-root algebraic values, and
//! separable sums over several roots.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ext::{self, ExtElem, Sign};
use super::interval::Interval;
use super::poly::Poly;
use super::rat::{self, Rat};
use super::sturm::AlgebraicReal;
use super::tower::{Tower, TowerElem};

/// `coeff * Π p_k(θ_{var_k})`.
#[derive(Debug, Clone)]
pub struct Term {
    pub coeff: Rat,
    pub factors: Vec<(usize, Poly)>,
}

/// Sum of products of univariate polynomials evaluated at distinct roots.
#[derive(Debug, Clone)]
pub struct MultiValue {
    roots: Vec<AlgebraicReal>,
    terms: Vec<Term>,
}

/// A real number with exact sign and equality decisions.
#[derive(Clone)]
pub enum Number {
    Rational(Rat),
    /// `elem(root)` with `elem` reduced modulo the root's defining polynomial.
    Algebraic { elem: ExtElem, root: AlgebraicReal },
    Multi(MultiValue),
}

/// Outcome of an exact integrality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntegerVerdict {
    Integer(BigInt),
    NotInteger(Interval),
}

impl fmt::Debug for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Number::Rational(q) => write!(f, "{}", rat::format(q)),
            Number::Algebraic { elem, root } => write!(f, "{elem:?} at {root:?}"),
            Number::Multi(m) => write!(f, "Multi({} terms over {} roots)", m.terms.len(), m.roots.len()),
        }
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Number::Rational(q) => write!(f, "{}", rat::format(q)),
            _ => write!(f, "~{:.10}", self.to_f64()),
        }
    }
}

impl From<Rat> for Number {
    fn from(q: Rat) -> Self {
        Number::Rational(q)
    }
}

impl MultiValue {
    pub fn new(roots: Vec<AlgebraicReal>, terms: Vec<Term>) -> Self {
        MultiValue { roots, terms }
    }

    pub fn roots(&self) -> &[AlgebraicReal] {
        &self.roots
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    fn enclosure_with(&self, roots: &[AlgebraicReal]) -> Interval {
        let boxes: Vec<Interval> = roots.iter().map(AlgebraicReal::enclosure).collect();
        self.terms.iter().fold(Interval::point(Rat::zero()), |acc, t| {
            let prod = t
                .factors
                .iter()
                .fold(Interval::point(t.coeff.clone()), |p, (v, f)| {
                    &p * &boxes[*v].eval_poly(f)
                });
            &acc + &prod
        })
    }

    fn to_tower(&self) -> (Tower, TowerElem) {
        let tower = Tower::new(self.roots.clone());
        let level = tower.levels();
        let mut total = TowerElem::zero();
        for t in &self.terms {
            let mut prod = TowerElem::Const(t.coeff.clone());
            for (v, f) in &t.factors {
                let e = tower.embed(f, *v, level);
                prod = tower.mul(&prod, &e, level);
            }
            total = tower.add(&total, &prod);
        }
        (tower, total)
    }

    fn is_zero(&self) -> bool {
        if self.terms.is_empty() {
            return true;
        }
        let (tower, elem) = self.to_tower();
        tower.is_zero(&elem, tower.levels())
    }
}

impl Number {
    pub fn zero() -> Self {
        Number::Rational(Rat::zero())
    }

    pub fn int(n: i64) -> Self {
        Number::Rational(rat::int(n))
    }

    /// `rep(root)`, collapsed to a rational when the reduced representative is constant
    /// or the root itself is rational.
    pub fn at_root(rep: &Poly, root: &AlgebraicReal) -> Self {
        if root.defpoly().degree() == Some(1) {
            let r = root.to_rational().expect("linear defining polynomial");
            return Number::Rational(rep.eval(&r));
        }
        let elem = ExtElem::over(rep, root);
        match elem.as_rational() {
            Some(q) => Number::Rational(q),
            None => Number::Algebraic {
                elem,
                root: root.clone(),
            },
        }
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            Number::Rational(q) => Some(q),
            _ => None,
        }
    }

    fn to_multi(&self) -> MultiValue {
        match self {
            Number::Rational(q) => MultiValue::new(
                Vec::new(),
                vec![Term {
                    coeff: q.clone(),
                    factors: Vec::new(),
                }],
            ),
            Number::Algebraic { elem, root } => MultiValue::new(
                vec![root.clone()],
                vec![Term {
                    coeff: Rat::one(),
                    factors: vec![(0, elem.rep().clone())],
                }],
            ),
            Number::Multi(m) => m.clone(),
        }
    }

    /// Merges the root lists; returns the combined roots and the index map for `b`.
    fn merge_roots(a: &[AlgebraicReal], b: &[AlgebraicReal]) -> (Vec<AlgebraicReal>, Vec<usize>) {
        let mut roots = a.to_vec();
        let mut map = Vec::with_capacity(b.len());
        for r in b {
            match roots.iter().position(|x| x.same_root(r)) {
                Some(i) => map.push(i),
                None => {
                    roots.push(r.clone());
                    map.push(roots.len() - 1);
                }
            }
        }
        (roots, map)
    }

    fn remap(terms: &[Term], map: &[usize]) -> Vec<Term> {
        terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.clone(),
                factors: t.factors.iter().map(|(v, f)| (map[*v], f.clone())).collect(),
            })
            .collect()
    }

    /// Both operands as polynomials over a shared root, if they have one.
    fn common_algebraic(&self, other: &Number) -> Option<(Poly, Poly, AlgebraicReal)> {
        match (self, other) {
            (
                Number::Algebraic { elem: a, root: ra },
                Number::Algebraic { elem: b, root: rb },
            ) => {
                if ra.defpoly() == rb.defpoly() && ra.interval() == rb.interval() {
                    return Some((a.rep().clone(), b.rep().clone(), ra.clone()));
                }
                let c = ra.common_root(rb)?;
                Some((a.rep().clone(), b.rep().clone(), c))
            }
            _ => None,
        }
    }

    pub fn add(&self, other: &Number) -> Number {
        match (self, other) {
            (Number::Rational(a), Number::Rational(b)) => Number::Rational(a + b),
            (Number::Rational(q), Number::Algebraic { elem, root })
            | (Number::Algebraic { elem, root }, Number::Rational(q)) => {
                Number::at_root(elem.add_rat(q).rep(), root)
            }
            _ => {
                if let Some((a, b, root)) = self.common_algebraic(other) {
                    return Number::at_root(&(&a + &b), &root);
                }
                let (ma, mb) = (self.to_multi(), other.to_multi());
                let (roots, map) = Number::merge_roots(&ma.roots, &mb.roots);
                let mut terms = ma.terms;
                terms.extend(Number::remap(&mb.terms, &map));
                Number::Multi(MultiValue::new(roots, terms))
            }
        }
    }

    pub fn neg(&self) -> Number {
        self.scale(&-Rat::one())
    }

    pub fn sub(&self, other: &Number) -> Number {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Number {
        match self {
            Number::Rational(q) => Number::Rational(q * c),
            Number::Algebraic { elem, root } => Number::at_root(elem.scale(c).rep(), root),
            Number::Multi(m) => Number::Multi(MultiValue::new(
                m.roots.clone(),
                m.terms
                    .iter()
                    .map(|t| Term {
                        coeff: &t.coeff * c,
                        factors: t.factors.clone(),
                    })
                    .collect(),
            )),
        }
    }

    pub fn add_rat(&self, c: &Rat) -> Number {
        self.add(&Number::Rational(c.clone()))
    }

    pub fn mul(&self, other: &Number) -> Number {
        match (self, other) {
            (Number::Rational(a), Number::Rational(b)) => Number::Rational(a * b),
            (Number::Rational(q), x) | (x, Number::Rational(q)) => x.scale(q),
            _ => {
                if let Some((a, b, root)) = self.common_algebraic(other) {
                    return Number::at_root(&(&a * &b), &root);
                }
                let (ma, mb) = (self.to_multi(), other.to_multi());
                let (roots, map) = Number::merge_roots(&ma.roots, &mb.roots);
                let tb = Number::remap(&mb.terms, &map);
                let mut terms = Vec::with_capacity(ma.terms.len() * tb.len());
                for x in &ma.terms {
                    for y in &tb {
                        let mut factors = x.factors.clone();
                        factors.extend(y.factors.iter().cloned());
                        terms.push(Term {
                            coeff: &x.coeff * &y.coeff,
                            factors,
                        });
                    }
                }
                Number::Multi(MultiValue::new(roots, terms))
            }
        }
    }

    /// Exact test for zero.
    pub fn is_zero(&self) -> bool {
        match self {
            Number::Rational(q) => q.is_zero(),
            Number::Algebraic { elem, root } => ext::vanishes_at(elem.rep(), root),
            Number::Multi(m) => m.is_zero(),
        }
    }

    /// Exact sign.
    pub fn sign(&self) -> Sign {
        match self {
            Number::Rational(q) => Sign::of(q),
            Number::Algebraic { elem, root } => ext::sign_at(elem, root),
            Number::Multi(m) => {
                let mut roots = m.roots.clone();
                // Cheap enclosures first; the exact zero test only when they stall.
                for _ in 0..PRE_ROUNDS {
                    if let Some(s) = m.enclosure_with(&roots).strict_sign() {
                        return Sign::from_i8(s);
                    }
                    refine_all(&mut roots);
                }
                if m.is_zero() {
                    return Sign::Zero;
                }
                loop {
                    if let Some(s) = m.enclosure_with(&roots).strict_sign() {
                        return Sign::from_i8(s);
                    }
                    refine_all(&mut roots);
                }
            }
        }
    }

    /// Exact comparison with a rational.
    pub fn cmp_rat(&self, q: &Rat) -> Ordering {
        match self.add_rat(&-q).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    pub fn eq_rat(&self, q: &Rat) -> bool {
        self.add_rat(&-q).is_zero()
    }

    /// Exact equality of two numbers.
    pub fn equals(&self, other: &Number) -> bool {
        self.sub(other).is_zero()
    }

    /// Enclosure of width at most `width`.
    pub fn enclosure(&self, width: &Rat) -> Interval {
        match self {
            Number::Rational(q) => Interval::point(q.clone()),
            Number::Algebraic { elem, root } => ext::enclose_poly(elem.rep(), root, width).0,
            Number::Multi(m) => {
                let mut roots = m.roots.clone();
                loop {
                    let e = m.enclosure_with(&roots);
                    if &e.width() <= width {
                        return e;
                    }
                    refine_all(&mut roots);
                }
            }
        }
    }

    /// Floating-point approximation for display.
    pub fn to_f64(&self) -> f64 {
        match self {
            Number::Rational(q) => rat::to_f64(q),
            _ => rat::to_f64(&self.enclosure(&rat::pow2_neg(50)).midpoint()),
        }
    }

    /// Decides whether the value is an integer: the enclosure is narrowed until it
    /// holds at most one integer, which is then tested exactly.
    pub fn integer_verdict(&self) -> IntegerVerdict {
        if let Number::Rational(q) = self {
            return if q.is_integer() {
                IntegerVerdict::Integer(q.to_integer())
            } else {
                IntegerVerdict::NotInteger(Interval::point(q.clone()))
            };
        }
        let mut width = rat::rat(1, 2);
        let mut enc = self.enclosure(&width);
        let lo = rat::ceil(&enc.lo);
        if lo > rat::floor(&enc.hi) {
            return IntegerVerdict::NotInteger(enc);
        }
        let candidate = Rat::from_integer(lo.clone());
        for _ in 0..PRE_ROUNDS {
            width /= rat::int(16);
            enc = self.enclosure(&width);
            if !enc.contains(&candidate) {
                return IntegerVerdict::NotInteger(enc);
            }
        }
        if self.eq_rat(&candidate) {
            return IntegerVerdict::Integer(lo);
        }
        loop {
            width /= rat::int(16);
            enc = self.enclosure(&width);
            if !enc.contains(&candidate) {
                return IntegerVerdict::NotInteger(enc);
            }
        }
    }

    /// `Σ_t coeff_t · Π_v polys_t[v](vars[v])`. Repeated and rational roots are
    /// folded, so the result uses as few distinct roots as possible.
    pub fn separable(vars: &[AlgebraicReal], terms: &[(Rat, Vec<Poly>)]) -> Number {
        let mut distinct: Vec<AlgebraicReal> = Vec::new();
        // Some(slot) for irrational roots, None for rational ones.
        let mut slots: Vec<Result<usize, Rat>> = Vec::with_capacity(vars.len());
        for v in vars {
            if v.defpoly().degree() == Some(1) {
                slots.push(Err(v.to_rational().expect("linear defining polynomial")));
                continue;
            }
            let found = distinct.iter().position(|d| {
                (d.defpoly() == v.defpoly() && d.interval() == v.interval()) || d.same_root(v)
            });
            match found {
                Some(i) => slots.push(Ok(i)),
                None => {
                    distinct.push(v.clone());
                    slots.push(Ok(distinct.len() - 1));
                }
            }
        }
        let mut folded: Vec<(Rat, Vec<Poly>)> = Vec::with_capacity(terms.len());
        for (coeff, polys) in terms {
            let mut c = coeff.clone();
            let mut per: Vec<Poly> = vec![Poly::one(); distinct.len()];
            for (slot, p) in slots.iter().zip(polys) {
                match slot {
                    Err(q) => c *= p.eval(q),
                    Ok(i) => {
                        let prod = &per[*i] * p;
                        per[*i] = prod.rem(distinct[*i].defpoly()).expect("nonzero modulus");
                    }
                }
            }
            if !c.is_zero() {
                folded.push((c, per));
            }
        }
        match distinct.len() {
            0 => Number::Rational(folded.iter().map(|(c, _)| c.clone()).sum()),
            1 => {
                let sum = folded
                    .iter()
                    .fold(Poly::zero(), |acc, (c, per)| &acc + &per[0].scale(c));
                Number::at_root(&sum, &distinct[0])
            }
            _ => Number::Multi(MultiValue::new(
                distinct,
                folded
                    .into_iter()
                    .map(|(coeff, per)| Term {
                        coeff,
                        factors: per.into_iter().enumerate().collect(),
                    })
                    .collect(),
            )),
        }
    }
}

const PRE_ROUNDS: usize = 8;

fn refine_all(roots: &mut [AlgebraicReal]) {
    for r in roots {
        let w = r.width() / rat::int(16);
        r.refine_in_place(&w);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{int, rat};
    use crate::exact::sturm::sturm_isolate;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn golden_ratio_conjugates() {
        let roots = sturm_isolate(&p(&[-1, 1, 1]));
        let a = Number::at_root(&Poly::x(), &roots[0]);
        let b = Number::at_root(&Poly::x(), &roots[1]);
        let prod = a.mul(&b);
        assert!(matches!(prod, Number::Multi(_)));
        assert_eq!(prod.integer_verdict(), IntegerVerdict::Integer(BigInt::from(-1)));
        assert!(a.add(&b).eq_rat(&int(-1)));
        assert_eq!(a.sub(&b).sign(), Sign::Positive);
        assert!(matches!(a.integer_verdict(), IntegerVerdict::NotInteger(_)));
    }

    #[test]
    fn same_root_collapses() {
        let roots = sturm_isolate(&p(&[-2, 0, 1]));
        let s = Number::at_root(&Poly::x(), &roots[0]);
        let sq = s.mul(&s);
        assert_eq!(sq.as_rational(), Some(&int(2)));
        // same root through a different defining polynomial
        let f = &p(&[-2, 0, 1]) * &p(&[-5, 1]);
        let other = sturm_isolate(&f)
            .into_iter()
            .find(|r| r.same_root(&roots[0]))
            .unwrap();
        let t = Number::at_root(&Poly::x(), &other);
        assert!(s.equals(&t));
        assert!(matches!(s.sub(&t), Number::Rational(_) | Number::Algebraic { .. }));
    }

    #[test]
    fn separable_folds_roots() {
        let roots = sturm_isolate(&p(&[-1, 1, 1]));
        let three = AlgebraicReal::from_rational(&int(3));
        let x = Poly::x();
        // x_a * x_a * 3 collapses to a single root value
        let v = Number::separable(
            &[roots[0].clone(), roots[0].clone(), three.clone()],
            &[(int(1), vec![x.clone(), x.clone(), x.clone()])],
        );
        assert!(matches!(v, Number::Algebraic { .. }));
        // 3 x_a^2 = 3 (1 - x_a)
        assert!(v.equals(&Number::at_root(&p(&[3, -3]), &roots[0])));
        let w = Number::separable(
            &[roots[0].clone(), roots[1].clone()],
            &[(int(1), vec![x.clone(), x.clone()])],
        );
        assert!(matches!(w, Number::Multi(_)));
        assert_eq!(w.integer_verdict(), IntegerVerdict::Integer(BigInt::from(-1)));
    }

    #[test]
    fn rational_roots_fold() {
        let r = AlgebraicReal::from_rational(&rat(3, 2));
        assert_eq!(Number::at_root(&p(&[1, 0, 4]), &r).as_rational(), Some(&int(10)));
    }

    #[test]
    fn cmp_and_enclosure() {
        let roots = sturm_isolate(&p(&[-2, 0, 1]));
        let s = Number::at_root(&Poly::x(), &roots[0]);
        assert_eq!(s.cmp_rat(&rat(7, 5)), Ordering::Greater);
        let e = s.enclosure(&rat(1, 1000));
        assert!(e.width() <= rat(1, 1000));
        assert!((s.to_f64() - 2f64.sqrt()).abs() < 1e-12);
    }
}
