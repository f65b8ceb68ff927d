//! Infeasibility certificates: the two-branch contradiction for `p^1_16`, checked
//! at one parameter point and recorded as named quantities plus sign claims.

use std::collections::BTreeMap;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::p161::{denominator, numerator_core, p161_plus_1_with_width};
use super::params::D6Params;
use super::roots::{compute_x1_with_width, cubic, default_width};
use super::{D6Error, FailStep};
use crate::exact::ext::{sign_of_poly_at, Sign};
use crate::exact::poly::Poly;
use crate::exact::rat::{self, Rat};
use crate::exact::sturm::{AlgebraicReal, IsolatingInterval};
use crate::scheme::KreinArray;

pub const SCHEMA: &str = "cometric/d6-certificate";
pub const VERSION: u32 = 1;

/// Quantities a checker must take from the certificate instead of recomputing.
pub const FREE_QUANTITIES: [&str; 4] = ["r_hi", "r_lo", "x1_hi", "x1_lo"];

/// A named rational or polynomial (coefficients from the constant term up).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Quantity {
    Rational(#[serde(with = "rat::serde_rat")] Rat),
    Poly(#[serde(with = "rat::serde_rat_vec")] Vec<Rat>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignClaim {
    Positive,
    Negative,
    Nonnegative,
}

impl SignClaim {
    pub fn holds(self, s: Sign) -> bool {
        match self {
            SignClaim::Positive => s == Sign::Positive,
            SignClaim::Negative => s == Sign::Negative,
            SignClaim::Nonnegative => s != Sign::Negative,
        }
    }
}

/// A claim over named quantities. `x1` is the root isolated by `x1_isolated`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Check {
    Less { lhs: String, rhs: String },
    LessEq { lhs: String, rhs: String },
    Equal { lhs: String, rhs: String },
    RationalSign { value: String, sign: SignClaim },
    /// `poly` has exactly one root in `(lo, hi)` and none at the endpoints.
    RootIsolated { poly: String, lo: String, hi: String },
    NoRootAbove { poly: String, bound: String },
    SignAtX1 { poly: String, sign: SignClaim },
    /// `den(x1) > 0` and `lo <= num(x1)/den(x1) <= hi`.
    QuotientWithin { num: String, den: String, lo: String, hi: String },
    /// Sums of products of quantities agree as polynomials.
    PolyIdentity { lhs: Vec<Vec<String>>, rhs: Vec<Vec<String>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub statement: String,
    pub check: Check,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DirectVerdict {
    BelowOne,
    BetweenOneAndTwo,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectRoute {
    pub verdict: DirectVerdict,
    pub claims: Vec<Claim>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub version: u32,
    pub params: D6Params,
    pub krein_array: KreinArray,
    pub x1_enclosure: IsolatingInterval,
    /// Encloses `r = p^1_16 + 1`.
    pub r_enclosure: IsolatingInterval,
    #[serde(with = "rat::serde_rat")]
    pub alpha: Rat,
    pub quantities: BTreeMap<String, Quantity>,
    pub setup: Vec<Claim>,
    /// `p^1_16 = 0` is impossible.
    pub branch_zero: Vec<Claim>,
    /// `p^1_16 >= 1` is impossible.
    pub branch_positive: Vec<Claim>,
    pub direct: DirectRoute,
    pub verdict: Verdict,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn claims(&self) -> impl Iterator<Item = &Claim> {
        self.setup
            .iter()
            .chain(&self.branch_zero)
            .chain(&self.branch_positive)
            .chain(&self.direct.claims)
    }
}

/// `(m(m+1)/(m^2+1), min{(m+1)/3, 2})`.
pub fn alpha_interval(m: &Rat) -> (Rat, Rat) {
    let one = Rat::one();
    let lower = m * (m + &one) / (m * m + &one);
    let upper = ((m + &one) / rat::int(3)).min(rat::two());
    (lower, upper)
}

/// Every quantity except the enclosure endpoints.
pub fn derived_quantities(p: &D6Params, alpha: &Rat) -> BTreeMap<String, Quantity> {
    let one = Rat::one();
    let two = rat::two();
    let m = &p.m;
    let mm1 = m - &one;
    let mp1 = m + &one;
    let (lower, upper) = alpha_interval(m);
    let gap = &mp1 - rat::int(3) * alpha;
    let c = cubic(p);
    let n_core = numerator_core(p);
    let num = n_core.scale(&mp1);
    let den = denominator(p);
    let rho = (&one - &p.c2 * &mm1) / (m - &two);
    let first = &num - &den.scale(alpha);
    let second = (&n_core - &Poly::constant(m.clone())).scale(&-gap.clone());
    let cc = m * &mp1 - &two * alpha * &p.c2 * &mm1 - &two * m * alpha;
    let combined = Poly::new(vec![cc.clone(), -(alpha * &p.a2)]);
    let final_lhs = alpha * &p.c2 * &mm1;
    let final_rhs = m * &mp1 - alpha * (m * m + &one);

    let rats: Vec<(&str, Rat)> = vec![
        ("m", m.clone()),
        ("c2", p.c2.clone()),
        ("b3", p.b3.clone()),
        ("b4", p.b4.clone()),
        ("c5", p.c5.clone()),
        ("a2", p.a2.clone()),
        ("a5", p.a5.clone()),
        ("c3", p.c3.clone()),
        ("one", one.clone()),
        ("two", two.clone()),
        ("minus_one", -one.clone()),
        ("m_minus_1", mm1.clone()),
        ("m_plus_1", mp1.clone()),
        ("cubic_constant", p.cubic_constant()),
        ("cubic_at_m_minus_1", c.eval(&mm1)),
        ("minus_m_c2_minus_a5_c3", -(m * &p.c2) - &p.a5 * &p.c3),
        ("rho", rho.clone()),
        ("inv_m_minus_2", &one / (m - &two)),
        ("alpha_lower", lower),
        ("alpha_upper", upper),
        ("alpha", alpha.clone()),
        ("minus_alpha", -alpha.clone()),
        ("alpha_gap", gap.clone()),
        ("minus_alpha_gap", -gap),
        ("combined_constant", cc),
        ("final_lhs", final_lhs),
        ("final_rhs", final_rhs),
    ];
    let polys: Vec<(&str, Poly)> = vec![
        ("x", Poly::x()),
        ("cubic", c),
        ("n_core", n_core),
        ("numerator", num),
        ("denominator", den),
        ("x_minus_m", Poly::linear_root(m)),
        (
            "branch_zero_factor",
            Poly::new(vec![&p.c2 * &mm1 - &one, m - &two]),
        ),
        ("x_minus_rho", Poly::linear_root(&rho)),
        ("first_form", first),
        ("second_form", second),
        ("combined", combined),
    ];
    let mut out = BTreeMap::new();
    for (k, v) in rats {
        out.insert(k.to_string(), Quantity::Rational(v));
    }
    for (k, v) in polys {
        out.insert(k.to_string(), Quantity::Poly(v.coeffs().to_vec()));
    }
    out
}

fn claim(id: &str, statement: &str, check: Check) -> Claim {
    Claim {
        id: id.to_string(),
        statement: statement.to_string(),
        check,
    }
}

fn less(a: &str, b: &str) -> Check {
    Check::Less {
        lhs: a.into(),
        rhs: b.into(),
    }
}

fn less_eq(a: &str, b: &str) -> Check {
    Check::LessEq {
        lhs: a.into(),
        rhs: b.into(),
    }
}

fn rsign(v: &str, sign: SignClaim) -> Check {
    Check::RationalSign {
        value: v.into(),
        sign,
    }
}

fn at_x1(poly: &str, sign: SignClaim) -> Check {
    Check::SignAtX1 {
        poly: poly.into(),
        sign,
    }
}

fn identity(lhs: &[&[&str]], rhs: &[&[&str]]) -> Check {
    let conv = |side: &[&[&str]]| {
        side.iter()
            .map(|t| t.iter().map(|s| s.to_string()).collect())
            .collect()
    };
    Check::PolyIdentity {
        lhs: conv(lhs),
        rhs: conv(rhs),
    }
}

/// Ids every certificate carries, by section.
pub const SETUP_IDS: [&str; 11] = [
    "alpha_interval_nonempty",
    "alpha_above_lower",
    "alpha_below_upper",
    "cubic_constant_nonnegative",
    "cubic_at_m_minus_1_value",
    "cubic_at_m_minus_1_negative",
    "x1_isolated",
    "x1_largest",
    "x1_above_m_minus_1",
    "x1_below_m",
    "denominator_positive",
];
pub const BRANCH_ZERO_IDS: [&str; 5] = [
    "branch_zero_identity",
    "x1_not_m",
    "rho_below_inverse",
    "inverse_below_m_minus_1",
    "x1_not_rho",
];
pub const BRANCH_POSITIVE_IDS: [&str; 11] = [
    "alpha_gap_positive",
    "alpha_below_two",
    "first_form_definition",
    "second_form_from_cubic",
    "second_inequality",
    "combined_identity",
    "a2_nonnegative",
    "x1_positive",
    "final_identity",
    "final_lhs_positive",
    "final_rhs_negative",
];

fn setup_claims() -> Vec<Claim> {
    use SignClaim::*;
    vec![
        claim("alpha_interval_nonempty", "m(m+1)/(m^2+1) < min{(m+1)/3, 2}", less("alpha_lower", "alpha_upper")),
        claim("alpha_above_lower", "alpha > m(m+1)/(m^2+1)", less("alpha_lower", "alpha")),
        claim("alpha_below_upper", "alpha < min{(m+1)/3, 2}", less("alpha", "alpha_upper")),
        claim("cubic_constant_nonnegative", "m a2 - a5 c3 >= 0", rsign("cubic_constant", Nonnegative)),
        claim(
            "cubic_at_m_minus_1_value",
            "C(m-1) = -m c2 - a5 c3",
            Check::Equal {
                lhs: "cubic_at_m_minus_1".into(),
                rhs: "minus_m_c2_minus_a5_c3".into(),
            },
        ),
        claim("cubic_at_m_minus_1_negative", "C(m-1) < 0", rsign("cubic_at_m_minus_1", Negative)),
        claim(
            "x1_isolated",
            "C has exactly one root x1 in (x1_lo, x1_hi)",
            Check::RootIsolated {
                poly: "cubic".into(),
                lo: "x1_lo".into(),
                hi: "x1_hi".into(),
            },
        ),
        claim(
            "x1_largest",
            "C has no root above x1_hi",
            Check::NoRootAbove {
                poly: "cubic".into(),
                bound: "x1_hi".into(),
            },
        ),
        claim("x1_above_m_minus_1", "m-1 <= x1_lo", less_eq("m_minus_1", "x1_lo")),
        claim("x1_below_m", "x1_hi <= m", less_eq("x1_hi", "m")),
        claim("denominator_positive", "(x1-x2)(x1-x3) > 0", at_x1("denominator", Positive)),
    ]
}

fn branch_zero_claims() -> Vec<Claim> {
    use SignClaim::*;
    vec![
        claim(
            "branch_zero_identity",
            "(m+1)(x^2 - a2 x - c2(m-1)) - D(x) = (x-m)((m-2)x - 1 + c2(m-1))",
            identity(
                &[&["numerator"], &["minus_one", "denominator"]],
                &[&["x_minus_m", "branch_zero_factor"]],
            ),
        ),
        claim("x1_not_m", "x1 < m", at_x1("x_minus_m", Negative)),
        claim("rho_below_inverse", "(1 - c2(m-1))/(m-2) < 1/(m-2)", less("rho", "inv_m_minus_2")),
        claim("inverse_below_m_minus_1", "1/(m-2) < m-1", less("inv_m_minus_2", "m_minus_1")),
        claim("x1_not_rho", "x1 > (1 - c2(m-1))/(m-2)", at_x1("x_minus_rho", Positive)),
    ]
}

fn branch_positive_claims() -> Vec<Claim> {
    use SignClaim::*;
    vec![
        claim("alpha_gap_positive", "m + 1 - 3 alpha > 0", rsign("alpha_gap", Positive)),
        claim("alpha_below_two", "alpha < 2 <= r under the hypothesis", less("alpha", "two")),
        claim(
            "first_form_definition",
            "F1 = (m+1)(x^2 - a2 x - c2(m-1)) - alpha D; r >= 2 gives F1(x1) > 0",
            identity(&[&["first_form"]], &[&["numerator"], &["minus_alpha", "denominator"]]),
        ),
        claim(
            "second_form_from_cubic",
            "x F2(x) = -(m+1-3 alpha) C(x) + (m+1-3 alpha)(m a2 - a5 c3)",
            identity(
                &[&["x", "second_form"]],
                &[&["minus_alpha_gap", "cubic"], &["alpha_gap", "cubic_constant"]],
            ),
        ),
        claim("second_inequality", "F2(x1) >= 0", at_x1("second_form", Nonnegative)),
        claim(
            "combined_identity",
            "F1 + F2 = -alpha a2 x + m(m+1) - 2 alpha c2(m-1) - 2 m alpha",
            identity(&[&["first_form"], &["second_form"]], &[&["combined"]]),
        ),
        claim("a2_nonnegative", "a2 >= 0, so alpha a2 (m-1) <= alpha a2 x1", rsign("a2", Nonnegative)),
        claim("x1_positive", "x1 > 0", at_x1("x", Positive)),
        claim(
            "final_identity",
            "m(m+1) - 2 alpha c2(m-1) - 2 m alpha - alpha a2 (m-1) = m(m+1) - alpha(m^2+1) - alpha c2(m-1)",
            identity(
                &[&["combined_constant"], &["minus_alpha", "a2", "m_minus_1"]],
                &[&["final_rhs"], &["minus_one", "final_lhs"]],
            ),
        ),
        claim("final_lhs_positive", "alpha c2 (m-1) > 0", rsign("final_lhs", Positive)),
        claim("final_rhs_negative", "m(m+1) - alpha(m^2+1) < 0", rsign("final_rhs", Negative)),
    ]
}

fn direct_claims(verdict: DirectVerdict) -> Vec<Claim> {
    let mut out = vec![claim(
        "r_enclosure",
        "r_lo <= r <= r_hi",
        Check::QuotientWithin {
            num: "numerator".into(),
            den: "denominator".into(),
            lo: "r_lo".into(),
            hi: "r_hi".into(),
        },
    )];
    match verdict {
        DirectVerdict::BelowOne => out.push(claim("r_below_one", "r_hi < 1", less("r_hi", "one"))),
        DirectVerdict::BetweenOneAndTwo => {
            out.push(claim("r_above_one", "1 < r_lo", less("one", "r_lo")));
            out.push(claim("r_below_two", "r_hi < 2", less("r_hi", "two")));
        }
    }
    out
}

/// Ids the direct route carries for `verdict`.
pub fn direct_ids(verdict: DirectVerdict) -> Vec<&'static str> {
    match verdict {
        DirectVerdict::BelowOne => vec!["r_enclosure", "r_below_one"],
        DirectVerdict::BetweenOneAndTwo => vec!["r_enclosure", "r_above_one", "r_below_two"],
    }
}

pub fn certify_infeasible(p: &D6Params) -> Result<Certificate, D6Error> {
    certify_infeasible_with_width(p, &default_width())
}

fn poly_sign(g: &Poly, x1: &AlgebraicReal) -> Sign {
    sign_of_poly_at(g, x1).0
}

pub fn certify_infeasible_with_width(p: &D6Params, width: &Rat) -> Result<Certificate, D6Error> {
    use FailStep::*;
    let one = Rat::one();
    let two = rat::two();
    let m = &p.m;
    let mm1 = m - &one;

    // the alpha interval comes first: for m near 2 the other steps are meaningless
    let (lower, upper) = alpha_interval(m);
    if lower >= upper {
        return Err(D6Error::failed(
            EmptyAlphaInterval,
            format!("({}, {}) is empty", rat::format(&lower), rat::format(&upper)),
        ));
    }
    let alpha = rat::midpoint(&lower, &upper);
    let q = derived_quantities(p, &alpha);
    let poly = |name: &str| match &q[name] {
        Quantity::Poly(c) => Poly::new(c.clone()),
        Quantity::Rational(r) => Poly::constant(r.clone()),
    };
    let value = |name: &str| match &q[name] {
        Quantity::Rational(r) => r.clone(),
        Quantity::Poly(_) => unreachable!("{name} is a polynomial"),
    };

    let roots = compute_x1_with_width(p, width).map_err(|e| D6Error::failed(X1Bounds, e.to_string()))?;
    let x1 = roots.x1.clone();
    let x1_iv = x1.interval().clone();
    if x1_iv.lo < mm1 || &x1_iv.hi > m {
        return Err(D6Error::failed(X1Bounds, "x1 enclosure leaves (m-1, m)"));
    }
    let r = p161_plus_1_with_width(p, &roots, width).map_err(|e| match e {
        D6Error::DenominatorNotPositive => D6Error::failed(DenominatorNotPositive, e.to_string()),
        other => other,
    })?;

    // p^1_16 = 0
    let lhs = &poly("numerator") - &poly("denominator");
    let rhs = &poly("x_minus_m") * &poly("branch_zero_factor");
    if lhs != rhs {
        return Err(D6Error::failed(BranchZero, "quadratic identity fails"));
    }
    if !(value("rho") < value("inv_m_minus_2") && value("inv_m_minus_2") < mm1) {
        return Err(D6Error::failed(BranchZero, "(1-c2(m-1))/(m-2) < 1/(m-2) < m-1 fails"));
    }
    if poly_sign(&poly("x_minus_m"), &x1) != Sign::Negative
        || poly_sign(&poly("x_minus_rho"), &x1) != Sign::Positive
    {
        return Err(D6Error::failed(BranchZero, "x1 equals a root of the factored form"));
    }

    // p^1_16 >= 1
    let second = poly("second_form");
    if !value("alpha_gap").is_positive() || alpha >= two {
        return Err(D6Error::failed(SecondInequality, "alpha outside its interval"));
    }
    if &Poly::x() * &second != &(&poly("cubic") * &poly("minus_alpha_gap")) + &poly("alpha_gap").scale(&value("cubic_constant"))
        || poly_sign(&second, &x1) == Sign::Negative
    {
        return Err(D6Error::failed(SecondInequality, "F2(x1) < 0"));
    }
    if &poly("first_form") + &second != poly("combined") {
        return Err(D6Error::failed(CombinedIdentity, "F1 + F2 is not the expected linear form"));
    }
    let final_lhs = value("final_lhs");
    let final_rhs = value("final_rhs");
    let chain = value("combined_constant") - &alpha * &p.a2 * &mm1;
    if p.a2.is_negative() || chain != &final_rhs - &final_lhs || !final_lhs.is_positive() || !final_rhs.is_negative() {
        return Err(D6Error::failed(
            FinalContradiction,
            format!(
                "0 < {} <= {} < 0 not certified",
                rat::format(&final_lhs),
                rat::format(&final_rhs)
            ),
        ));
    }

    // direct route: the enclosure of r must exclude every integer >= 1
    let mut w = width.clone();
    let (verdict, r_iv) = loop {
        let e = r.enclosure_within(&w);
        if e.hi < one {
            break (DirectVerdict::BelowOne, e);
        }
        if e.lo > one && e.hi < two {
            break (DirectVerdict::BetweenOneAndTwo, e);
        }
        if e.lo >= two {
            return Err(D6Error::failed(RouteDisagreement, "r >= 2 but the alpha chain excludes it"));
        }
        for k in [&one, &two] {
            if e.contains(k) && r.r().eq_rat(k) {
                return Err(D6Error::failed(
                    RouteDisagreement,
                    format!("r = {} exactly", rat::format(k)),
                ));
            }
        }
        w /= rat::int(16);
    };
    let (num, den) = (poly("numerator"), poly("denominator"));
    if poly_sign(&(&num - &den.scale(&r_iv.lo)), &x1) == Sign::Negative
        || poly_sign(&(&den.scale(&r_iv.hi) - &num), &x1) == Sign::Negative
    {
        return Err(D6Error::failed(RouteDisagreement, "r enclosure not certified"));
    }

    let mut quantities = q;
    for (k, v) in [
        ("x1_lo", &x1_iv.lo),
        ("x1_hi", &x1_iv.hi),
        ("r_lo", &r_iv.lo),
        ("r_hi", &r_iv.hi),
    ] {
        quantities.insert(k.to_string(), Quantity::Rational(v.clone()));
    }
    Ok(Certificate {
        schema: SCHEMA.to_string(),
        version: VERSION,
        params: p.clone(),
        krein_array: p.krein_array(),
        x1_enclosure: x1_iv,
        r_enclosure: IsolatingInterval {
            lo: r_iv.lo,
            hi: r_iv.hi,
        },
        alpha,
        quantities,
        setup: setup_claims(),
        branch_zero: branch_zero_claims(),
        branch_positive: branch_positive_claims(),
        direct: DirectRoute {
            verdict,
            claims: direct_claims(verdict),
        },
        verdict: Verdict::Infeasible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{int, rat};

    #[test]
    fn spot_certificate() {
        let p = D6Params::from_ints(3, 1, 1, 2, 1).unwrap();
        let c = certify_infeasible(&p).unwrap();
        assert_eq!(c.alpha, rat(19, 15));
        assert_eq!(c.direct.verdict, DirectVerdict::BelowOne);
        let (lo, hi) = (rat::to_f64(&c.r_enclosure.lo), rat::to_f64(&c.r_enclosure.hi));
        assert!(lo > 0.90 && hi < 0.91);
        assert!(c.x1_enclosure.lo > rat(270, 100) && c.x1_enclosure.hi < rat(271, 100));
        assert_eq!(c.params.n, int(24));
    }

    #[test]
    fn second_alpha() {
        let p = D6Params::from_ints(4, 1, 2, 2, 2).unwrap();
        let c = certify_infeasible(&p).unwrap();
        assert_eq!(c.alpha, rat(145, 102));
    }

    #[test]
    fn empty_alpha_interval() {
        // c2 = b4 + c5 - (m-1) with m = 5/2
        let p = crate::d6::validate(rat(5, 2), rat(1, 2), int(1), int(1), int(1)).unwrap();
        match certify_infeasible(&p) {
            Err(D6Error::CertificationFailed { step, .. }) => assert_eq!(step, FailStep::EmptyAlphaInterval),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let p = D6Params::from_ints(3, 1, 1, 2, 1).unwrap();
        let c = certify_infeasible(&p).unwrap();
        let text = c.to_json();
        let back = Certificate::from_json(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_json(), text);
        assert!(text.contains("\"verdict\": \"infeasible\""));
    }

    #[test]
    fn claim_ids_match_sections() {
        let p = D6Params::from_ints(3, 1, 1, 2, 1).unwrap();
        let c = certify_infeasible(&p).unwrap();
        let ids = |v: &[Claim]| v.iter().map(|c| c.id.clone()).collect::<Vec<_>>();
        assert_eq!(ids(&c.setup), SETUP_IDS.to_vec());
        assert_eq!(ids(&c.branch_zero), BRANCH_ZERO_IDS.to_vec());
        assert_eq!(ids(&c.branch_positive), BRANCH_POSITIVE_IDS.to_vec());
        assert_eq!(ids(&c.direct.claims), direct_ids(c.direct.verdict));
    }
}
