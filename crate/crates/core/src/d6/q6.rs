//! The explicit 7×7 dual eigenmatrix of the family.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::params::D6Params;
use super::roots::X1Root;
use super::D6Error;
use crate::exact::ext::ExtElem;
use crate::exact::number::Number;
use crate::exact::poly::Poly;
use crate::exact::rat::{self, Rat};
use crate::exact::sturm::AlgebraicReal;
use crate::scheme::KreinArray;

/// Rows 0 and 6 are rational. Rows 1–3 share one template over the cubic and
/// rows 4–5 one template over the quadratic; row `i` is the template at `x_i`.
#[derive(Debug, Clone)]
pub struct Q6 {
    pub row0: Vec<Rat>,
    pub row6: Vec<Rat>,
    pub cubic_row: Vec<ExtElem>,
    pub quadratic_row: Vec<ExtElem>,
    /// Sum of row 0.
    pub n: Rat,
    x1: AlgebraicReal,
    x4: AlgebraicReal,
    x5: AlgebraicReal,
}

impl Q6 {
    /// `Q_{ij}`. Rows 2 and 3 are not available: `x_2` and `x_3` are never isolated.
    pub fn entry(&self, i: usize, j: usize) -> Option<Number> {
        match i {
            0 => Some(Number::Rational(self.row0[j].clone())),
            6 => Some(Number::Rational(self.row6[j].clone())),
            1 => Some(Number::at_root(self.cubic_row[j].rep(), &self.x1)),
            4 => Some(Number::at_root(self.quadratic_row[j].rep(), &self.x4)),
            5 => Some(Number::at_root(self.quadratic_row[j].rep(), &self.x5)),
            _ => None,
        }
    }

    pub fn multiplicities(&self) -> &[Rat] {
        &self.row0
    }
}

/// Checks `x u_j = b_{j-1} u_{j-1} + a_j u_j + c_{j+1} u_{j+1}` for every column `j`,
/// which is row `u` of `B*_1 Q^T = Q^T diag(x)`.
fn eigenrow_residuals<T>(
    k: &KreinArray,
    u: &[T],
    x: &T,
    add: impl Fn(&T, &T) -> T,
    sub: impl Fn(&T, &T) -> T,
    mul: impl Fn(&T, &T) -> T,
    scale: impl Fn(&T, &Rat) -> T,
) -> Vec<T> {
    let d = k.d();
    (0..=d)
        .map(|j| {
            let mut rhs = scale(&u[j], &k.a(j));
            if j > 0 {
                rhs = add(&rhs, &scale(&u[j - 1], &k.b(j - 1)));
            }
            if j < d {
                rhs = add(&rhs, &scale(&u[j + 1], &k.c(j + 1)));
            }
            sub(&mul(x, &u[j]), &rhs)
        })
        .collect()
}

fn check_ext_row(k: &KreinArray, row: &[ExtElem], modulus: &Arc<Poly>, label: &str) -> Result<(), D6Error> {
    let x = ExtElem::generator(Arc::clone(modulus));
    let res = eigenrow_residuals(
        k,
        row,
        &x,
        ExtElem::add,
        ExtElem::sub,
        ExtElem::mul,
        ExtElem::scale,
    );
    match res.iter().position(|r| !r.is_zero_rep()) {
        None => Ok(()),
        Some(j) => Err(D6Error::IdentityCheckFailed(format!(
            "B*_1 Q^T = Q^T diag(x) fails in the {label} rows, column {j}"
        ))),
    }
}

fn check_rat_row(k: &KreinArray, row: &[Rat], x: &Rat, label: &str) -> Result<(), D6Error> {
    let res = eigenrow_residuals(
        k,
        row,
        x,
        |a, b| a + b,
        |a, b| a - b,
        |a, b| a * b,
        |a, c| a * c,
    );
    match res.iter().position(|r| !r.is_zero()) {
        None => Ok(()),
        Some(j) => Err(D6Error::IdentityCheckFailed(format!(
            "B*_1 Q^T = Q^T diag(x) fails in row {label}, column {j}"
        ))),
    }
}

pub fn build_q6(p: &D6Params, roots: &X1Root) -> Result<Q6, D6Error> {
    let one = Rat::one();
    let m = &p.m;
    let mm1 = m - &one;
    let c2 = &p.c2;
    let c3 = &p.c3;
    let q2 = m * &mm1 / c2;

    let row0 = vec![
        one.clone(),
        m.clone(),
        q2.clone(),
        p.m3.clone(),
        m * &p.m3 - &q2,
        m * &p.m6,
        p.m6.clone(),
    ];
    let row6 = vec![
        one.clone(),
        -one.clone(),
        -(&mm1 / c2),
        p.m3.clone(),
        -p.m3.clone() + &mm1 / c2,
        -p.m6.clone(),
        p.m6.clone(),
    ];

    let cm: Arc<Poly> = Arc::new(roots.cubic.monic());
    let c = |coeffs: Vec<Rat>| ExtElem::new(&Poly::new(coeffs), Arc::clone(&cm));
    let zero = Rat::zero();
    let cubic_row = vec![
        c(vec![one.clone()]),
        c(vec![zero.clone(), one.clone()]),
        c(vec![-(m / c2), zero.clone(), &one / c2]),
        c(vec![&p.a5 / c2]),
        c(vec![m / c2, &p.a5 / c2, -(&one / c2)]),
        c(vec![zero.clone(), -(&p.b4 / c2)]),
        c(vec![-(&p.b4 / c2)]),
    ];

    let qm: Arc<Poly> = Arc::new(roots.quadratic.clone());
    let q = |coeffs: Vec<Rat>| ExtElem::new(&Poly::new(coeffs), Arc::clone(&qm));
    let quadratic_row = vec![
        q(vec![one.clone()]),
        q(vec![zero.clone(), one.clone()]),
        q(vec![zero.clone(), -one.clone()]),
        q(vec![-(m / c3)]),
        q(vec![zero.clone(), -(&p.b3 / c3)]),
        q(vec![zero.clone(), &p.b3 / c3]),
        q(vec![&p.b3 / c3]),
    ];

    let k = p.krein_array();
    check_rat_row(&k, &row0, m, "0")?;
    check_rat_row(&k, &row6, &-one.clone(), "6")?;
    check_ext_row(&k, &cubic_row, &cm, "cubic")?;
    check_ext_row(&k, &quadratic_row, &qm, "quadratic")?;

    let n: Rat = row0.iter().sum();
    if n != p.n {
        return Err(D6Error::IdentityCheckFailed(format!(
            "sum of multiplicities {} differs from (m+1)(1+m3+m6) = {}",
            rat::format(&n),
            rat::format(&p.n)
        )));
    }
    Ok(Q6 {
        row0,
        row6,
        cubic_row,
        quadratic_row,
        n,
        x1: roots.x1.clone(),
        x4: roots.x4.clone(),
        x5: roots.x5.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::d6::roots::compute_x1;
    use crate::exact::rat::int;
    use crate::scheme::dual_polys;

    fn q6(p: &D6Params) -> Q6 {
        build_q6(p, &compute_x1(p).unwrap()).unwrap()
    }

    #[test]
    fn spot_rows() {
        let p = D6Params::from_ints(3, 1, 1, 2, 1).unwrap();
        let q = q6(&p);
        assert_eq!(q.row0[2], int(6));
        assert_eq!(q.n, int(24));
        assert_eq!((&q.row6[1], &q.row6[2]), (&int(-1), &int(-2)));
        assert_eq!(q.row0, vec![int(1), int(3), int(6), int(3), int(3), int(6), int(2)]);
    }

    #[test]
    fn templates_match_dual_polynomials() {
        for p in [
            D6Params::from_ints(3, 1, 1, 2, 1).unwrap(),
            D6Params::from_ints(4, 1, 2, 2, 2).unwrap(),
        ] {
            let q = q6(&p);
            let seq = dual_polys(&p.krein_array());
            for j in 0..=6 {
                let v = seq.v(j);
                assert_eq!(&v.rem(q.cubic_row[j].modulus()).unwrap(), q.cubic_row[j].rep(), "cubic {j}");
                assert_eq!(&v.rem(q.quadratic_row[j].modulus()).unwrap(), q.quadratic_row[j].rep(), "quad {j}");
                assert_eq!(v.eval(&p.m), q.row0[j]);
                assert_eq!(v.eval(&int(-1)), q.row6[j]);
            }
        }
    }

    #[test]
    fn entries_at_roots() {
        let p = D6Params::from_ints(3, 1, 1, 2, 1).unwrap();
        let q = q6(&p);
        let x1 = q.entry(1, 1).unwrap().to_f64();
        assert!((x1 - 2.7092753594).abs() < 1e-6);
        assert!(q.entry(2, 1).is_none());
        assert_eq!(q.entry(6, 1).unwrap().as_rational(), Some(&int(-1)));
    }
}
