//! The full parameter table of a Krein array.
//!
//! Relations are indexed by the dual eigenvalues `x_0 = m > x_1 > ... > x_d`,
//! idempotents by the cometric ordering. Sums over all relations are traces in
//! `Q[y]/(f)` with `f` the monic eigenpolynomial, so the table identities are
//! checked in rational arithmetic.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::dual::{dual_polys, roots_of};
use super::krein::KreinArray;
use super::SchemeError;
use crate::exact::ext::ExtElem;
use crate::exact::number::Number;
use crate::exact::poly::Poly;
use crate::exact::rat::{self, Rat};
use crate::exact::sturm::AlgebraicReal;

/// Polynomial data behind a table built from a Krein array.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// Monic `c*_1 ... c*_d v*_{d+1}`.
    pub f: Poly,
    /// `v*_0, ..., v*_d`.
    pub duals: Vec<Poly>,
    /// `k(y)` with `k_i = k(x_i)`.
    pub kpoly: Poly,
}

#[derive(Debug, Clone)]
pub struct ParameterTable {
    pub d: usize,
    pub n: Rat,
    /// Dual eigenvalues `x_i = Q_{i1}`.
    pub x: Vec<AlgebraicReal>,
    /// `q_mat[i][j] = Q_{ij}`.
    pub q_mat: Vec<Vec<Number>>,
    /// `p_mat[j][i] = P_{ji}`.
    pub p_mat: Vec<Vec<Number>>,
    pub k: Vec<Number>,
    pub mult: Vec<Rat>,
    /// `krein[i][j][h] = q^h_{ij}`.
    pub krein: Vec<Vec<Vec<Rat>>>,
    /// `intersection[i][j][h] = p^h_{ij}`.
    pub intersection: Vec<Vec<Vec<Number>>>,
    /// `b1star[i][j] = q^j_{1i}`.
    pub b1star: Vec<Vec<Rat>>,
    pub spectrum: Option<Spectrum>,
}

/// Root refinement applied before any enclosure is taken.
const PREREFINE_BITS: u32 = 30;

pub fn build_table(k: &KreinArray) -> Result<ParameterTable, SchemeError> {
    let d = k.d();
    let seq = dual_polys(k);
    let f = seq.eigenpolynomial();
    let mut x = roots_of(&f, d + 1, k.m())?;
    let w = rat::pow2_neg(PREREFINE_BITS);
    for r in &mut x {
        if r.defpoly().degree() != Some(1) {
            r.refine_in_place(&w);
        }
    }
    let m = k.m();
    let duals: Vec<Poly> = seq.polys[..=d].to_vec();
    let mult: Vec<Rat> = duals.iter().map(|v| v.eval(m)).collect();
    if mult.iter().any(Zero::is_zero) {
        return Err(SchemeError::SingularQ);
    }
    let n: Rat = mult.iter().sum();

    let modulus = Arc::new(f.clone());
    let g = duals
        .iter()
        .zip(&mult)
        .fold(Poly::zero(), |acc, (v, mj)| &acc + &(v * v).scale(&mj.recip()));
    let ginv = ExtElem::new(&g, Arc::clone(&modulus))
        .inv()
        .ok_or(SchemeError::SingularQ)?;
    let kpoly = ginv.rep().scale(&n);

    let b1star = b1star_of(k);
    check_identities(&f, &duals, &kpoly, &mult, &n, m, &b1star)?;

    let krein = krein_by_recurrence(k, &b1star);

    let q_mat: Vec<Vec<Number>> = x
        .iter()
        .map(|xi| duals.iter().map(|v| Number::at_root(v, xi)).collect())
        .collect();
    let kv: Vec<Poly> = duals
        .iter()
        .map(|v| (&kpoly * v).rem(&f).expect("nonzero modulus"))
        .collect();
    let p_mat: Vec<Vec<Number>> = (0..=d)
        .map(|j| {
            let poly = kv[j].scale(&mult[j].recip());
            x.iter().map(|xi| Number::at_root(&poly, xi)).collect()
        })
        .collect();
    let kvals: Vec<Number> = x.iter().map(|xi| Number::at_root(&kpoly, xi)).collect();

    let weights: Vec<Rat> = mult.iter().map(|ml| (&n * ml * ml).recip()).collect();
    // p^h_{ij} = (k_i k_j / n) Σ_l Q_{il} Q_{jl} Q_{hl} / m_l^2
    let terms: Vec<(Rat, Vec<Poly>)> = (0..=d)
        .map(|l| {
            (
                weights[l].clone(),
                vec![kv[l].clone(), kv[l].clone(), duals[l].clone()],
            )
        })
        .collect();
    let mut intersection = vec![vec![vec![Number::zero(); d + 1]; d + 1]; d + 1];
    for i in 0..=d {
        for j in i..=d {
            for h in 0..=d {
                let value =
                    Number::separable(&[x[i].clone(), x[j].clone(), x[h].clone()], &terms);
                intersection[j][i][h] = value.clone();
                intersection[i][j][h] = value;
            }
        }
    }

    Ok(ParameterTable {
        d,
        n,
        x,
        q_mat,
        p_mat,
        k: kvals,
        mult,
        krein,
        intersection,
        b1star,
        spectrum: Some(Spectrum { f, duals, kpoly }),
    })
}

fn b1star_of(k: &KreinArray) -> Vec<Vec<Rat>> {
    let d = k.d();
    let mut b = vec![vec![Rat::zero(); d + 1]; d + 1];
    for i in 0..=d {
        b[i][i] = k.a(i);
        if i < d {
            b[i][i + 1] = k.c(i + 1);
        }
        if i > 0 {
            b[i][i - 1] = k.b(i - 1);
        }
    }
    b
}

/// `M_i[h][j] = q^h_{ij}`: `v_i v_j = Σ_h q^h_{ij} v_h` modulo `f`.
fn krein_by_recurrence(k: &KreinArray, b1: &[Vec<Rat>]) -> Vec<Vec<Vec<Rat>>> {
    let d = k.d();
    let size = d + 1;
    let identity: Vec<Vec<Rat>> = (0..size)
        .map(|h| (0..size).map(|j| if h == j { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    let b1t_times = |mat: &Vec<Vec<Rat>>| -> Vec<Vec<Rat>> {
        (0..size)
            .map(|g| {
                (0..size)
                    .map(|j| (0..size).map(|h| &b1[h][g] * &mat[h][j]).sum())
                    .collect()
            })
            .collect()
    };
    let mut ms = vec![identity];
    for i in 0..d {
        let next: Vec<Vec<Rat>> = {
            let xm = b1t_times(&ms[i]);
            let (ai, bi, ci) = (k.a(i), if i > 0 { k.b(i - 1) } else { Rat::zero() }, k.c(i + 1));
            (0..size)
                .map(|h| {
                    (0..size)
                        .map(|j| {
                            let mut v = &xm[h][j] - &ai * &ms[i][h][j];
                            if i > 0 {
                                v -= &bi * &ms[i - 1][h][j];
                            }
                            v / &ci
                        })
                        .collect()
                })
                .collect()
        };
        ms.push(next);
    }
    // krein[i][j][h] = M_i[h][j]
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| (0..size).map(|h| ms[i][h][j].clone()).collect())
                .collect()
        })
        .collect()
}

fn check_identities(
    f: &Poly,
    duals: &[Poly],
    kpoly: &Poly,
    mult: &[Rat],
    n: &Rat,
    m: &Rat,
    b1: &[Vec<Rat>],
) -> Result<(), SchemeError> {
    let fail = |s: String| Err(SchemeError::IdentityCheckFailed(s));
    let size = duals.len();
    if !kpoly.eval(m).is_one() {
        return fail("k_0 differs from 1".into());
    }
    if &f.trace_of(kpoly) != n {
        return fail("sum of valencies differs from n".into());
    }
    // (PQ)_{ab} = Tr(k v_a v_b) / m_a
    for a in 0..size {
        for b in a..size {
            let t = f.trace_of(&(&(kpoly * &duals[a]) * &duals[b])) / &mult[a];
            let expected = if a == b { n.clone() } else { Rat::zero() };
            if t != expected {
                return fail(format!("(PQ)_({a},{b}) = {} differs from n·δ", rat::format(&t)));
            }
        }
    }
    // B*_1 Q^T = Q^T diag(x)
    let x = Poly::x();
    for i in 0..size {
        let lhs = (0..size).fold(Poly::zero(), |acc, j| &acc + &duals[j].scale(&b1[i][j]));
        let diff = (&lhs - &(&x * &duals[i])).rem(f).expect("nonzero modulus");
        if !diff.is_zero() {
            return fail(format!("row {i} of B*_1 Q^T - Q^T diag(x) is {diff}"));
        }
    }
    Ok(())
}

impl ParameterTable {
    pub fn krein_param(&self, i: usize, j: usize, h: usize) -> &Rat {
        &self.krein[i][j][h]
    }

    pub fn intersection_number(&self, i: usize, j: usize, h: usize) -> &Number {
        &self.intersection[i][j][h]
    }

    /// `q^h_{ij} = Tr(k v_i v_j v_h) / (n m_h)`, the triple-sum form. `None` when
    /// the table has no polynomial data.
    pub fn krein_triple_sum(&self, i: usize, j: usize, h: usize) -> Option<Rat> {
        let s = self.spectrum.as_ref()?;
        let prod = &(&(&s.kpoly * &s.duals[i]) * &s.duals[j]) * &s.duals[h];
        Some(s.f.trace_of(&prod) / (&self.n * &self.mult[h]))
    }

    /// Reorders the relations: new relation `a` is old relation `perm[a]`.
    pub fn permute_relations(&self, perm: &[usize]) -> ParameterTable {
        let size = self.d + 1;
        assert_eq!(perm.len(), size);
        let mut t = self.clone();
        t.x = perm.iter().map(|&a| self.x[a].clone()).collect();
        t.q_mat = perm.iter().map(|&a| self.q_mat[a].clone()).collect();
        t.k = perm.iter().map(|&a| self.k[a].clone()).collect();
        t.p_mat = self
            .p_mat
            .iter()
            .map(|row| perm.iter().map(|&a| row[a].clone()).collect())
            .collect();
        t.intersection = perm
            .iter()
            .map(|&i| {
                perm.iter()
                    .map(|&j| perm.iter().map(|&h| self.intersection[i][j][h].clone()).collect())
                    .collect()
            })
            .collect();
        t
    }

    /// First exact disagreement with `other` in n, Q, P, k, multiplicities,
    /// Krein parameters or intersection numbers.
    pub fn first_difference(&self, other: &ParameterTable) -> Option<String> {
        if self.d != other.d {
            return Some(format!("d: {} vs {}", self.d, other.d));
        }
        if self.n != other.n {
            return Some(format!("n: {} vs {}", self.n, other.n));
        }
        if self.mult != other.mult {
            return Some("multiplicities differ".into());
        }
        let size = self.d + 1;
        for a in 0..size {
            if !self.k[a].equals(&other.k[a]) {
                return Some(format!("k_{a}"));
            }
            for b in 0..size {
                if !self.q_mat[a][b].equals(&other.q_mat[a][b]) {
                    return Some(format!("Q[{a}][{b}]"));
                }
                if !self.p_mat[a][b].equals(&other.p_mat[a][b]) {
                    return Some(format!("P[{a}][{b}]"));
                }
                for h in 0..size {
                    if self.krein[a][b][h] != other.krein[a][b][h] {
                        return Some(format!("q^{h}_({a},{b})"));
                    }
                    if !self.intersection[a][b][h].equals(&other.intersection[a][b][h]) {
                        return Some(format!("p^{h}_({a},{b})"));
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::number::IntegerVerdict;
    use crate::exact::rat::int;
    use num_bigint::BigInt;

    fn rows(t: &ParameterTable, m: &[Vec<Number>]) -> Vec<Vec<Rat>> {
        let _ = t;
        m.iter()
            .map(|r| r.iter().map(|v| v.as_rational().expect("rational").clone()).collect())
            .collect()
    }

    fn ints(v: &[&[i64]]) -> Vec<Vec<Rat>> {
        v.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn four_cycle() {
        let t = build_table(&KreinArray::from_ints(&[2, 1], &[1, 2]).unwrap()).unwrap();
        assert_eq!(t.n, int(4));
        let e = ints(&[&[1, 2, 1], &[1, 0, -1], &[1, -2, 1]]);
        assert_eq!(rows(&t, &t.q_mat), e);
        assert_eq!(rows(&t, &t.p_mat), e);
    }

    #[test]
    fn cube() {
        let k = KreinArray::from_ints(&[3, 2, 1], &[1, 2, 3]).unwrap();
        let t = build_table(&k).unwrap();
        assert_eq!(t.n, int(8));
        assert_eq!(t.mult, vec![int(1), int(3), int(3), int(1)]);
        for i in 0..=3 {
            assert_eq!(t.krein[1][i][i], k.a(i));
            if i < 3 {
                assert_eq!(t.krein[1][i][i + 1], k.c(i + 1));
                assert_eq!(t.krein[1][i + 1][i], k.b(i));
            }
        }
        // distance-regular: p^1_{12} = c_2 = 2, p^1_{11} = 0
        assert_eq!(t.intersection[1][2][1].as_rational(), Some(&int(2)));
        assert_eq!(t.intersection[1][1][1].as_rational(), Some(&int(0)));
    }

    #[test]
    fn krein_recurrence_matches_triple_sum() {
        for k in [
            KreinArray::from_ints(&[3, 2, 1], &[1, 2, 3]).unwrap(),
            KreinArray::from_ints(&[3, 2, 1, 1, 2, 1], &[1, 1, 2, 1, 1, 3]).unwrap(),
            KreinArray::from_ints(&[5, 4, 1], &[1, 2, 4]).unwrap(),
        ] {
            let t = build_table(&k).unwrap();
            for i in 0..=t.d {
                for j in 0..=t.d {
                    for h in 0..=t.d {
                        assert_eq!(
                            t.krein_triple_sum(i, j, h).unwrap(),
                            t.krein[i][j][h],
                            "{k} q^{h}_({i},{j})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn exceptional_instance_table() {
        let k = KreinArray::from_ints(&[3, 2, 1, 1, 2, 1], &[1, 1, 2, 1, 1, 3]).unwrap();
        let t = build_table(&k).unwrap();
        assert_eq!(t.n, int(24));
        // x = -1 sits at index 4 and has valency m
        assert_eq!(t.k[4].as_rational(), Some(&int(3)));
        // p^0_{ij} = k_i δ_{ij}
        for i in 0..=6 {
            for j in 0..=6 {
                let v = &t.intersection[i][j][0];
                if i == j {
                    assert!(v.equals(&t.k[i]));
                } else {
                    assert_eq!(v.integer_verdict(), IntegerVerdict::Integer(BigInt::from(0)));
                }
            }
        }
        // float oracle: p^1_{1,4} ≈ -0.0929478
        let p = t.intersection[1][4][1].to_f64();
        assert!((p + 0.0929478281).abs() < 1e-8, "{p}");
        let ks: Vec<f64> = t.k.iter().map(Number::to_f64).collect();
        let oracle = [1.0, 1.63269, 8.17504, 2.94321, 3.0, 2.62410, 4.62496];
        for (a, b) in ks.iter().zip(oracle) {
            assert!((a - b).abs() < 1e-4);
        }
    }

    #[test]
    fn permutation_is_consistent() {
        let k = KreinArray::from_ints(&[3, 2, 1], &[1, 2, 3]).unwrap();
        let t = build_table(&k).unwrap();
        let perm = [0, 3, 1, 2];
        let u = t.permute_relations(&perm);
        assert!(u.k[1].equals(&t.k[3]));
        assert!(u.intersection[1][2][3].equals(&t.intersection[3][1][2]));
        assert!(u.first_difference(&t).is_some());
        assert!(t.first_difference(&t.clone()).is_none());
    }
}
