//! `r = p^1_16 + 1` written in `x_1` alone, its agreement with the generic
//! intersection numbers, and the valency identities over the cubic and quadratic.

use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::params::D6Params;
use super::roots::X1Root;
use super::D6Error;
use crate::exact::ext::{enclose_poly, sign_of_poly_at, vanishes_at, ExtElem, Sign};
use crate::exact::interval::Interval;
use crate::exact::number::Number;
use crate::exact::poly::Poly;
use crate::exact::rat::{self, Rat};
use crate::exact::sturm::AlgebraicReal;
use crate::scheme::ParameterTable;

/// `x^2 - a2 x - c2(m-1)`, which is `x_2 x_3 + m` at `x = x_1`.
pub fn numerator_core(p: &D6Params) -> Poly {
    let mm1 = &p.m - Rat::one();
    Poly::new(vec![-(&p.c2 * &mm1), -p.a2.clone(), Rat::one()])
}

/// `3x^2 - 2 a2 x - m - c2(m-1)`, which is `(x_1 - x_2)(x_1 - x_3)` at `x = x_1`.
pub fn denominator(p: &D6Params) -> Poly {
    let mm1 = &p.m - Rat::one();
    Poly::new(vec![
        -(&p.m + &p.c2 * &mm1),
        -(rat::two() * &p.a2),
        rat::int(3),
    ])
}

#[derive(Debug, Clone)]
pub struct R161 {
    /// `(m+1)(x^2 - a2 x - c2(m-1))`.
    pub numerator: Poly,
    pub denominator: Poly,
    /// `x_1` over a modulus coprime to the denominator.
    pub x1: AlgebraicReal,
    /// `r` as an element over the modulus of `x1`.
    pub value: ExtElem,
    pub enclosure: Interval,
}

impl R161 {
    pub fn r(&self) -> Number {
        Number::at_root(self.value.rep(), &self.x1)
    }

    pub fn p161(&self) -> Number {
        self.r().add_rat(&-Rat::one())
    }

    /// Tightens the enclosure of `r` to width `w`.
    pub fn enclosure_within(&self, w: &Rat) -> Interval {
        enclose_poly(self.value.rep(), &self.x1, w).0
    }
}

pub fn p161_plus_1(p: &D6Params, roots: &X1Root) -> Result<R161, D6Error> {
    p161_plus_1_with_width(p, roots, &super::roots::default_width())
}

pub fn p161_plus_1_with_width(p: &D6Params, roots: &X1Root, width: &Rat) -> Result<R161, D6Error> {
    let num = numerator_core(p).scale(&(&p.m + Rat::one()));
    let den = denominator(p);
    let (sign, x1) = sign_of_poly_at(&den, &roots.x1);
    if sign != Sign::Positive {
        return Err(D6Error::DenominatorNotPositive);
    }
    // A repeated cubic root makes the denominator share a factor with the modulus.
    let sf = x1.defpoly();
    let h = sf.gcd(&den);
    let x1 = if h.degree().unwrap_or(0) > 0 {
        let g = sf.div_rem(&h).expect("nonzero gcd").0;
        let iv = x1.interval();
        AlgebraicReal::new(&g, iv.lo.clone(), iv.hi.clone())
            .map_err(|e| D6Error::IdentityCheckFailed(format!("rebuilding x1: {e}")))?
    } else {
        x1
    };
    let modulus: Arc<Poly> = x1.defpoly_arc();
    let d = ExtElem::new(&den, Arc::clone(&modulus));
    let n = ExtElem::new(&num, Arc::clone(&modulus));
    let value = d
        .inv()
        .map(|inv| n.mul(&inv))
        .ok_or_else(|| D6Error::IdentityCheckFailed("denominator not invertible".into()))?;
    if !n.sub(&value.mul(&d)).is_zero_rep() {
        return Err(D6Error::IdentityCheckFailed(
            "(m+1)(x2x3+m) - r (x1-x2)(x1-x3) is not zero".into(),
        ));
    }
    let (enclosure, x1) = enclose_poly(value.rep(), &x1, width);
    Ok(R161 {
        numerator: num,
        denominator: den,
        x1,
        value,
        enclosure,
    })
}

/// `perm[a]` is the table index of relation `a` in the family's labels:
/// 0 is `m`, 1–3 the cubic roots (1 the largest), 4 > 5 the quadratic roots, 6 is `-1`.
pub fn paper_relation_order(p: &D6Params, roots: &X1Root, t: &ParameterTable) -> Result<Vec<usize>, D6Error> {
    let minus_one = -Rat::one();
    let (mut top, mut bottom) = (None, None);
    let (mut cub, mut quad) = (Vec::new(), Vec::new());
    for (i, x) in t.x.iter().enumerate() {
        let q = x.to_rational();
        if q.as_ref() == Some(&p.m) {
            top = Some(i);
        } else if q.as_ref() == Some(&minus_one) {
            bottom = Some(i);
        } else if vanishes_at(&roots.cubic, x) {
            cub.push(i);
        } else if vanishes_at(&roots.quadratic, x) {
            quad.push(i);
        }
    }
    match (top, bottom, cub.len(), quad.len()) {
        (Some(a), Some(b), 3, 2) => {
            // the table is in descending order, so cub[0] holds the largest cubic root
            if !t.x[cub[0]].same_root(&roots.x1) {
                return Err(D6Error::IdentityCheckFailed("largest cubic root is not x1".into()));
            }
            Ok(vec![a, cub[0], cub[1], cub[2], quad[0], quad[1], b])
        }
        _ => Err(D6Error::IdentityCheckFailed(
            "table eigenvalues do not split as m, cubic, quadratic, -1".into(),
        )),
    }
}

/// `p^1_16` read from the generic intersection numbers.
pub fn generic_p161(t: &ParameterTable, perm: &[usize]) -> Number {
    t.intersection[perm[1]][perm[6]][perm[1]].clone()
}

/// Is `r - 1` equal to the generic `p^1_16`? Decided exactly.
pub fn cross_check_p161(r: &R161, t: &ParameterTable, perm: &[usize]) -> bool {
    r.p161().equals(&generic_p161(t, perm))
}

/// One identity with its exact value, the certified zero test, and a table-side enclosure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    /// Left side minus right side, computed as a trace over the factor.
    #[serde(with = "rat::serde_rat")]
    pub value: Rat,
    /// The same difference from the table's valencies and eigenvalues.
    pub enclosure: Interval,
    pub exact_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma51Report {
    /// `(k_1 + k_2 + k_3)/(m+1)`.
    #[serde(with = "rat::serde_rat")]
    pub k: Rat,
    pub identities: Vec<IdentityCheck>,
    /// `k_0 x_0`, `Σ_{1..3} k_i x_i`, `Σ_{4,5} k_i x_i`, `k_6 x_6`; they sum to `(PQ)_01 = 0`.
    #[serde(with = "rat::serde_rat_vec")]
    pub pq01_terms: Vec<Rat>,
    pub passed: bool,
}

pub fn lemma51_check(p: &D6Params, roots: &X1Root, t: &ParameterTable) -> Result<Lemma51Report, D6Error> {
    let spec = t
        .spectrum
        .as_ref()
        .ok_or_else(|| D6Error::IdentityCheckFailed("table has no spectrum".into()))?;
    let perm = paper_relation_order(p, roots, t)?;
    let kp = &spec.kpoly;
    let y = Poly::x();
    let c = roots.cubic.monic();
    let q = &roots.quadratic;
    let one = Rat::one();
    let m1 = &p.m + &one;

    let cubic_k = c.trace_of(kp);
    let k = &cubic_k / &m1;
    let s1 = c.trace_of(&(kp * &y));
    let s2 = c.trace_of(&(&(kp * &y) * &y)) - &k * &p.m * &m1;
    let s45 = q.trace_of(&(kp * &y));

    let width = rat::pow2_neg(30);
    let kx = |a: usize, power: u32| -> Number {
        let i = perm[a];
        t.k[i].mul(&Number::at_root(&y.pow(power), &t.x[i]))
    };
    let sum = |labels: &[usize], power: u32| -> Number {
        labels.iter().fold(Number::zero(), |acc, &a| acc.add(&kx(a, power)))
    };
    let table_ii = sum(&[1, 2, 3], 1);
    let table_iii = sum(&[1, 2, 3], 2).add_rat(&-(&k * &p.m * &m1));
    let table_45 = sum(&[4, 5], 1);

    // The traces are the table-side sums once every table valency equals k(x_i);
    // that is a single-root gcd test per relation.
    let consistent = (1..=5).all(|a| {
        let i = perm[a];
        t.k[i].equals(&Number::at_root(kp, &t.x[i]))
    });
    let mut identities = Vec::new();
    for (name, value, num) in [
        ("k1x1+k2x2+k3x3", s1.clone(), table_ii),
        ("k1x1^2+k2x2^2+k3x3^2-k*m(m+1)", s2, table_iii),
        ("k4x4+k5x5", s45.clone(), table_45),
    ] {
        let enclosure = num.enclosure(&width);
        let exact_zero = value.is_zero() && consistent && enclosure.contains_zero();
        identities.push(IdentityCheck {
            name: name.to_string(),
            value,
            enclosure,
            exact_zero,
        });
    }

    let k0x0 = kp.eval(&p.m) * &p.m;
    let k6x6 = -kp.eval(&-one.clone());
    let pq01_terms = vec![k0x0, s1, s45, k6x6];
    let pq01_zero = pq01_terms.iter().sum::<Rat>().is_zero();
    // identity (i) is the definition of k; check it against the table as well
    let table_k = sum(&[1, 2, 3], 0).enclosure(&width);
    let passed = identities.iter().all(|i| i.exact_zero) && pq01_zero && table_k.contains(&cubic_k);
    Ok(Lemma51Report {
        k,
        identities,
        pq01_terms,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::d6::roots::compute_x1;
    use crate::exact::rat::int;
    use crate::scheme::build_table;

    #[test]
    fn spot_r_value() {
        let p = D6Params::from_ints(3, 1, 1, 2, 1).unwrap();
        let roots = compute_x1(&p).unwrap();
        let r = p161_plus_1(&p, &roots).unwrap();
        let (lo, hi) = r.enclosure.to_f64_pair();
        // float oracle: 0.9070521719
        assert!(lo > 0.905 && hi < 0.910, "{lo} {hi}");
        assert!(r.enclosure.width() <= rat::pow2_neg(20));
        assert!((r.r().to_f64() - 0.9070521719).abs() < 1e-8);
    }

    #[test]
    fn second_r_value() {
        let p = D6Params::from_ints(4, 1, 2, 2, 2).unwrap();
        let roots = compute_x1(&p).unwrap();
        let r = p161_plus_1(&p, &roots).unwrap();
        // float oracle: 0.7206935508
        assert!((r.r().to_f64() - 0.7206935508).abs() < 1e-8);
    }

    #[test]
    fn relabeling_and_generic_agreement() {
        let p = D6Params::from_ints(3, 1, 1, 2, 1).unwrap();
        let roots = compute_x1(&p).unwrap();
        let t = build_table(&p.krein_array()).unwrap();
        let perm = paper_relation_order(&p, &roots, &t).unwrap();
        // descending: 3, x1, x4, x2, -1, x3, x5
        assert_eq!(perm, vec![0, 1, 3, 5, 2, 6, 4]);
        let r = p161_plus_1(&p, &roots).unwrap();
        assert!(cross_check_p161(&r, &t, &perm));
        // r = k_6 + 1 = m + 1 for the quotient: k_6 = m
        assert!(t.k[perm[6]].eq_rat(&p.m));
    }

    #[test]
    fn lemma_identities() {
        for p in [
            D6Params::from_ints(3, 1, 1, 2, 1).unwrap(),
            D6Params::from_ints(4, 1, 2, 2, 2).unwrap(),
        ] {
            let roots = compute_x1(&p).unwrap();
            let t = build_table(&p.krein_array()).unwrap();
            let rep = lemma51_check(&p, &roots, &t).unwrap();
            assert!(rep.passed, "{rep:?}");
            for i in &rep.identities {
                assert!(i.enclosure.contains_zero());
                assert!(i.enclosure.width() <= rat::pow2_neg(30));
            }
            assert_eq!(rep.pq01_terms[0], p.m);
        }
    }

    #[test]
    fn spot_lemma_k() {
        let p = D6Params::from_ints(3, 1, 1, 2, 1).unwrap();
        let roots = compute_x1(&p).unwrap();
        let t = build_table(&p.krein_array()).unwrap();
        let rep = lemma51_check(&p, &roots, &t).unwrap();
        // float oracle valencies of the cubic relations: 1.63269 + 2.94321 + 2.62410 = 7.2
        assert_eq!(rep.k, rat::rat(9, 5));
        assert_eq!(rep.pq01_terms[3], int(-3));
    }
}
