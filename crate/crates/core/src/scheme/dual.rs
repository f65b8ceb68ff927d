//! Dual polynomials `v*_i` and dual eigenvalues.

use num_traits::Zero;

use super::krein::KreinArray;
use super::SchemeError;
use crate::exact::poly::Poly;
use crate::exact::rat::Rat;
use crate::exact::sturm::{sturm_isolate, AlgebraicReal};

/// `v*_0, ..., v*_{d+1}` from the three-term recurrence with `c*_{d+1} = 1`.
///
/// `v*_{d+1}` keeps the recurrence's scaling (leading coefficient
/// `1/(c*_1 ... c*_d)`); use [`DualPolySeq::eigenpolynomial`] for the monic form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPolySeq {
    pub polys: Vec<Poly>,
}

impl DualPolySeq {
    pub fn v(&self, i: usize) -> &Poly {
        &self.polys[i]
    }

    pub fn d(&self) -> usize {
        self.polys.len() - 2
    }

    /// The formal `v*_{d+1}`.
    pub fn top(&self) -> &Poly {
        &self.polys[self.polys.len() - 1]
    }

    /// `c*_1 ... c*_d v*_{d+1}`, which is monic.
    pub fn eigenpolynomial(&self) -> Poly {
        self.top().monic()
    }
}

/// Runs the recurrence. Works on unvalidated arrays as long as every `c*_i` is nonzero.
pub fn dual_polys(k: &KreinArray) -> DualPolySeq {
    let d = k.d();
    let x = Poly::x();
    let mut polys = vec![Poly::one(), x.clone()];
    for i in 1..=d {
        // x v_i = c_{i+1} v_{i+1} + a_i v_i + b_{i-1} v_{i-1}
        let rhs = &(&(&x * &polys[i]) - &polys[i].scale(&k.a(i)))
            - &polys[i - 1].scale(&k.b(i - 1));
        let c = k.c(i + 1);
        assert!(!c.is_zero(), "c*_{} is zero", i + 1);
        polys.push(rhs.scale(&c.recip()));
    }
    DualPolySeq { polys }
}

/// Roots of `v*_{d+1}` in descending order; the largest is `m`.
///
/// Rational roots are returned over linear polynomials and the irrational ones
/// over the eigenpolynomial with the rational roots divided out.
pub fn dual_eigenvalues(k: &KreinArray) -> Result<Vec<AlgebraicReal>, SchemeError> {
    let seq = dual_polys(k);
    roots_of(&seq.eigenpolynomial(), k.d() + 1, k.m())
}

pub(crate) fn roots_of(f: &Poly, expected: usize, m: &Rat) -> Result<Vec<AlgebraicReal>, SchemeError> {
    let roots = sturm_isolate(f);
    if roots.len() != expected {
        return Err(SchemeError::FewerThanD1RealRoots {
            expected,
            found: roots.len(),
        });
    }
    let rational: Vec<Option<Rat>> = roots.iter().map(AlgebraicReal::to_rational).collect();
    if rational[0].as_ref() != Some(m) {
        return Err(SchemeError::IdentityCheckFailed(format!(
            "largest dual eigenvalue is not m = {m}"
        )));
    }
    let mut g = f.clone();
    for r in rational.iter().flatten() {
        g = g.div_rem(&Poly::linear_root(r)).expect("nonzero divisor").0;
    }
    roots
        .iter()
        .zip(rational)
        .map(|(root, q)| match q {
            Some(q) => Ok(AlgebraicReal::from_rational(&q)),
            None => {
                let iv = root.interval();
                AlgebraicReal::new(&g, iv.lo.clone(), iv.hi.clone())
                    .map_err(|e| SchemeError::IdentityCheckFailed(format!("root isolation: {e}")))
            }
        })
        .collect()
}
