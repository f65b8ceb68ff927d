//! Independent verification of a serialized certificate.
//!
//! Only rationals, polynomials and Sturm counts are used. Every quantity except the
//! enclosure endpoints is derived again from `(m, c2, b3, b4, c5)`, and every claim is
//! evaluated from the stored data.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::certificate::{
    direct_ids, Certificate, Check, Quantity, SignClaim, BRANCH_POSITIVE_IDS, BRANCH_ZERO_IDS,
    FREE_QUANTITIES, SCHEMA, SETUP_IDS, VERSION,
};
use crate::exact::ext::Sign;
use crate::exact::poly::Poly;
use crate::exact::rat::Rat;
use crate::exact::sturm::{count_roots, sign_variations, sign_variations_at_infinity, sturm_sequence};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecheckReport {
    pub claims_checked: usize,
    pub failures: Vec<String>,
}

impl RecheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn recheck_json(text: &str) -> Result<RecheckReport, String> {
    let cert: Certificate = serde_json::from_str(text).map_err(|e| format!("unreadable certificate: {e}"))?;
    Ok(recheck(&cert))
}

/// The quantities as the checker derives them, built without the certificate code.
fn expected(m: &Rat, c2: &Rat, b3: &Rat, b4: &Rat, c5: &Rat) -> BTreeMap<String, Quantity> {
    let q = |v: i64| Rat::from_integer(v.into());
    let r = |v: &Rat| Quantity::Rational(v.clone());
    let pl = |v: Vec<Rat>| Quantity::Poly(Poly::new(v).coeffs().to_vec());
    let a2 = m - q(1) - c2;
    let a5 = m - q(1) - c5;
    let c3 = m - b3;
    let k = m * &a2 - &a5 * &c3;
    let lin = m + c2 * (m - q(1));
    let lower = m * (m + q(1)) / (m * m + q(1));
    let third = (m + q(1)) / q(3);
    let upper = if third < q(2) { third } else { q(2) };
    let alpha = (&lower + &upper) / q(2);
    let gap = m + q(1) - q(3) * &alpha;
    let rho = (q(1) - c2 * (m - q(1))) / (m - q(2));
    let cc = m * (m + q(1)) - q(2) * &alpha * c2 * (m - q(1)) - q(2) * m * &alpha;
    let num = vec![-(m + q(1)) * c2 * (m - q(1)), -(m + q(1)) * &a2, m + q(1)];
    let den = vec![-lin.clone(), -q(2) * &a2, q(3)];

    let mut out = BTreeMap::new();
    let mut put = |k: &str, v: Quantity| {
        out.insert(k.to_string(), v);
    };
    put("m", r(m));
    put("c2", r(c2));
    put("b3", r(b3));
    put("b4", r(b4));
    put("c5", r(c5));
    put("a2", r(&a2));
    put("a5", r(&a5));
    put("c3", r(&c3));
    put("one", r(&q(1)));
    put("two", r(&q(2)));
    put("minus_one", r(&q(-1)));
    put("m_minus_1", r(&(m - q(1))));
    put("m_plus_1", r(&(m + q(1))));
    put("cubic_constant", r(&k));
    // C(m-1) by direct substitution
    let t = m - q(1);
    put("cubic_at_m_minus_1", r(&(&t * &t * &t - &a2 * &t * &t - &lin * &t + &k)));
    put("minus_m_c2_minus_a5_c3", r(&(-(m * c2) - &a5 * &c3)));
    put("rho", r(&rho));
    put("inv_m_minus_2", r(&(q(1) / (m - q(2)))));
    put("alpha_lower", r(&lower));
    put("alpha_upper", r(&upper));
    put("alpha", r(&alpha));
    put("minus_alpha", r(&-alpha.clone()));
    put("alpha_gap", r(&gap));
    put("minus_alpha_gap", r(&-gap.clone()));
    put("combined_constant", r(&cc));
    put("final_lhs", r(&(&alpha * c2 * (m - q(1)))));
    put("final_rhs", r(&(m * (m + q(1)) - &alpha * (m * m + q(1)))));

    put("x", pl(vec![q(0), q(1)]));
    put("cubic", pl(vec![k.clone(), -lin.clone(), -a2.clone(), q(1)]));
    put("n_core", pl(vec![-(c2 * (m - q(1))), -a2.clone(), q(1)]));
    put("numerator", pl(num.clone()));
    put("denominator", pl(den.clone()));
    put("x_minus_m", pl(vec![-m.clone(), q(1)]));
    put("branch_zero_factor", pl(vec![c2 * (m - q(1)) - q(1), m - q(2)]));
    put("x_minus_rho", pl(vec![-rho, q(1)]));
    put(
        "first_form",
        pl(num.iter().zip(&den).map(|(n, d)| n - &alpha * d).collect()),
    );
    put(
        "second_form",
        pl(vec![&gap * &lin, &gap * &a2, -gap.clone()]),
    );
    put("combined", pl(vec![cc, -(&alpha * &a2)]));
    out
}

/// The isolated root `x1` of a polynomial, narrowed by bisection on Sturm counts.
struct Root {
    poly: Poly,
    seq: Vec<Poly>,
    lo: Rat,
    hi: Rat,
}

impl Root {
    fn new(poly: Poly, lo: Rat, hi: Rat) -> Result<Root, String> {
        if poly.eval(&lo).is_zero() || poly.eval(&hi).is_zero() || lo >= hi {
            return Err("isolating interval has a root at an endpoint or is empty".into());
        }
        let seq = sturm_sequence(&poly.square_free());
        if count_roots(&seq, &lo, &hi) != 1 {
            return Err("interval does not isolate exactly one root".into());
        }
        Ok(Root { poly, seq, lo, hi })
    }

    fn bisect(&mut self) -> Option<Rat> {
        let mid = (&self.lo + &self.hi) / Rat::from_integer(2.into());
        if self.poly.eval(&mid).is_zero() {
            return Some(mid);
        }
        if count_roots(&self.seq, &self.lo, &mid) == 1 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
        None
    }

    /// Exact sign of `g(x1)`.
    fn sign_of(&self, g: &Poly) -> Sign {
        if g.is_zero() {
            return Sign::Zero;
        }
        let h = g.gcd(&self.poly);
        if h.degree().unwrap_or(0) > 0 {
            let hs = sturm_sequence(&h.square_free());
            if count_roots(&hs, &self.lo, &self.hi) > 0 {
                return Sign::Zero;
            }
        }
        let mut root = Root {
            poly: self.poly.clone(),
            seq: self.seq.clone(),
            lo: self.lo.clone(),
            hi: self.hi.clone(),
        };
        loop {
            let (a, b) = horner(g, &root.lo, &root.hi);
            if a.is_positive() {
                return Sign::Positive;
            }
            if b.is_negative() {
                return Sign::Negative;
            }
            if let Some(x) = root.bisect() {
                return Sign::of(&g.eval(&x));
            }
        }
    }
}

/// Interval Horner evaluation over `[lo, hi]`.
fn horner(g: &Poly, lo: &Rat, hi: &Rat) -> (Rat, Rat) {
    let mut acc = (Rat::zero(), Rat::zero());
    for c in g.coeffs().iter().rev() {
        let prods = [&acc.0 * lo, &acc.0 * hi, &acc.1 * lo, &acc.1 * hi];
        let min = prods.iter().min().expect("four products").clone();
        let max = prods.iter().max().expect("four products").clone();
        acc = (min + c, max + c);
    }
    acc
}

struct Ctx<'a> {
    q: &'a BTreeMap<String, Quantity>,
    x1: Option<Root>,
}

impl Ctx<'_> {
    fn rational(&self, name: &str) -> Result<Rat, String> {
        match self.q.get(name) {
            Some(Quantity::Rational(r)) => Ok(r.clone()),
            Some(Quantity::Poly(_)) => Err(format!("{name} is a polynomial")),
            None => Err(format!("{name} missing")),
        }
    }

    fn poly(&self, name: &str) -> Result<Poly, String> {
        match self.q.get(name) {
            Some(Quantity::Poly(c)) => Ok(Poly::new(c.clone())),
            Some(Quantity::Rational(r)) => Ok(Poly::constant(r.clone())),
            None => Err(format!("{name} missing")),
        }
    }

    fn sum_of_products(&self, side: &[Vec<String>]) -> Result<Poly, String> {
        let mut total = Poly::zero();
        for term in side {
            let mut prod = Poly::one();
            for f in term {
                prod = &prod * &self.poly(f)?;
            }
            total = &total + &prod;
        }
        Ok(total)
    }

    fn x1(&self) -> Result<&Root, String> {
        self.x1.as_ref().ok_or_else(|| "x1 is not isolated".to_string())
    }

    fn evaluate(&mut self, check: &Check) -> Result<bool, String> {
        Ok(match check {
            Check::Less { lhs, rhs } => self.rational(lhs)? < self.rational(rhs)?,
            Check::LessEq { lhs, rhs } => self.rational(lhs)? <= self.rational(rhs)?,
            Check::Equal { lhs, rhs } => self.rational(lhs)? == self.rational(rhs)?,
            Check::RationalSign { value, sign } => sign.holds(Sign::of(&self.rational(value)?)),
            Check::RootIsolated { poly, lo, hi } => {
                let root = Root::new(self.poly(poly)?, self.rational(lo)?, self.rational(hi)?)?;
                self.x1 = Some(root);
                true
            }
            Check::NoRootAbove { poly, bound } => {
                let p = self.poly(poly)?;
                let b = self.rational(bound)?;
                let seq = sturm_sequence(&p.square_free());
                !p.eval(&b).is_zero()
                    && sign_variations(&seq, &b) == sign_variations_at_infinity(&seq, true)
            }
            Check::SignAtX1 { poly, sign } => {
                let g = self.poly(poly)?;
                sign.holds(self.x1()?.sign_of(&g))
            }
            Check::QuotientWithin { num, den, lo, hi } => {
                let (n, d) = (self.poly(num)?, self.poly(den)?);
                let (lo, hi) = (self.rational(lo)?, self.rational(hi)?);
                let x1 = self.x1()?;
                x1.sign_of(&d) == Sign::Positive
                    && SignClaim::Nonnegative.holds(x1.sign_of(&(&n - &d.scale(&lo))))
                    && SignClaim::Nonnegative.holds(x1.sign_of(&(&d.scale(&hi) - &n)))
            }
            Check::PolyIdentity { lhs, rhs } => self.sum_of_products(lhs)? == self.sum_of_products(rhs)?,
        })
    }
}

pub fn recheck(cert: &Certificate) -> RecheckReport {
    let mut failures = Vec::new();
    let mut fail = |s: String| failures.push(s);

    if cert.schema != SCHEMA || cert.version != VERSION {
        fail(format!("unknown schema {} v{}", cert.schema, cert.version));
    }
    let p = &cert.params;
    let (m, c2, b3, b4, c5) = (&p.m, &p.c2, &p.b3, &p.b4, &p.c5);
    let q = |v: i64| Rat::from_integer(v.into());
    let ranges = m > &q(2)
        && c2.is_positive()
        && c2 <= &(m - q(1))
        && b3.is_positive()
        && b3 < m
        && b4.is_positive()
        && b4 <= &(m - q(1))
        && c5.is_positive()
        && c5 <= &(m - q(1))
        && c2 == &(b4 + c5 - (m - q(1)));
    if !ranges {
        fail("parameters violate the family's constraints".into());
        return RecheckReport {
            claims_checked: 0,
            failures,
        };
    }
    let c3 = m - b3;
    let derived = [
        ("a2", m - q(1) - c2, &p.a2),
        ("a4", m - q(1) - b4, &p.a4),
        ("a5", m - q(1) - c5, &p.a5),
        ("c3", c3.clone(), &p.c3),
    ];
    for (name, want, have) in derived {
        if &want != have {
            fail(format!("derived {name} differs"));
        }
    }
    let m3 = m * (m - q(1)) / (c2 * &c3);
    let m6 = (m - q(1)) * b3 * b4 / (c2 * &c3 * c5);
    if m3 != p.m3 || m6 != p.m6 || (m + q(1)) * (q(1) + &m3 + &m6) != p.n {
        fail("derived multiplicities differ".into());
    }
    let kb = [m.clone(), m - q(1), q(1), b3.clone(), b4.clone(), q(1)];
    let kc = [q(1), c2.clone(), c3, q(1), c5.clone(), m.clone()];
    if cert.krein_array.b_slice() != kb || cert.krein_array.c_slice() != kc {
        fail("Krein array does not match the parameters".into());
    }

    let want = expected(m, c2, b3, b4, c5);
    let stored: BTreeSet<&str> = cert.quantities.keys().map(String::as_str).collect();
    let mut keys: BTreeSet<&str> = want.keys().map(String::as_str).collect();
    keys.extend(FREE_QUANTITIES);
    if stored != keys {
        fail("quantity names differ from the expected set".into());
    }
    for (k, v) in &want {
        if cert.quantities.get(k) != Some(v) {
            fail(format!("quantity {k} does not match its derivation"));
        }
    }
    let stored_rat = |k: &str| match cert.quantities.get(k) {
        Some(Quantity::Rational(r)) => Some(r.clone()),
        _ => None,
    };
    if stored_rat("alpha").as_ref() != Some(&cert.alpha) {
        fail("alpha field disagrees with the quantity table".into());
    }
    if stored_rat("x1_lo").as_ref() != Some(&cert.x1_enclosure.lo)
        || stored_rat("x1_hi").as_ref() != Some(&cert.x1_enclosure.hi)
        || stored_rat("r_lo").as_ref() != Some(&cert.r_enclosure.lo)
        || stored_rat("r_hi").as_ref() != Some(&cert.r_enclosure.hi)
    {
        fail("enclosure fields disagree with the quantity table".into());
    }

    let sections: [(&str, Vec<&str>, &[super::certificate::Claim]); 4] = [
        ("setup", SETUP_IDS.to_vec(), &cert.setup),
        ("branch_zero", BRANCH_ZERO_IDS.to_vec(), &cert.branch_zero),
        ("branch_positive", BRANCH_POSITIVE_IDS.to_vec(), &cert.branch_positive),
        ("direct", direct_ids(cert.direct.verdict), &cert.direct.claims),
    ];
    for (name, ids, claims) in &sections {
        let have: Vec<&str> = claims.iter().map(|c| c.id.as_str()).collect();
        if &have != ids {
            fail(format!("{name} claims are not the required set"));
        }
    }

    let mut ctx = Ctx {
        q: &cert.quantities,
        x1: None,
    };
    let mut checked = 0;
    for c in cert.claims() {
        checked += 1;
        match ctx.evaluate(&c.check) {
            Ok(true) => {}
            Ok(false) => fail(format!("{}: {} does not hold", c.id, c.statement)),
            Err(e) => fail(format!("{}: {e}", c.id)),
        }
    }
    RecheckReport {
        claims_checked: checked,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::d6::certificate::certify_infeasible;
    use crate::d6::params::D6Params;
    use crate::exact::rat::rat;

    fn cert() -> Certificate {
        certify_infeasible(&D6Params::from_ints(3, 1, 1, 2, 1).unwrap()).unwrap()
    }

    #[test]
    fn genuine_certificate_passes() {
        let c = cert();
        let rep = recheck_json(&c.to_json()).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
        assert_eq!(rep.claims_checked, c.claims().count());
    }

    #[test]
    fn tampered_enclosure_fails() {
        let mut c = cert();
        // push r_hi below the true value
        c.quantities.insert("r_hi".into(), Quantity::Rational(rat(9, 10)));
        c.r_enclosure.hi = rat(9, 10);
        let rep = recheck(&c);
        assert!(rep.failures.iter().any(|f| f.starts_with("r_enclosure")), "{:?}", rep.failures);
    }

    #[test]
    fn tampered_quantity_fails() {
        let mut c = cert();
        c.quantities.insert("final_rhs".into(), Quantity::Rational(rat(-1, 1)));
        assert!(!recheck(&c).passed());
    }

    #[test]
    fn wrong_isolating_interval_fails() {
        let mut c = cert();
        c.quantities.insert("x1_lo".into(), Quantity::Rational(rat(0, 1)));
        c.x1_enclosure.lo = rat(0, 1);
        let rep = recheck(&c);
        assert!(rep.failures.iter().any(|f| f.starts_with("x1_isolated")), "{:?}", rep.failures);
    }

    #[test]
    fn dropped_claim_fails() {
        let mut c = cert();
        c.branch_positive.pop();
        assert!(!recheck(&c).passed());
    }
}
