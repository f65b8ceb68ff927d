//! Ground truth from explicit relation matrices: axioms checked by matrix
//! products, intersection numbers by counting, idempotents by spectral
//! projection in the Bose-Mesner algebra, Krein parameters from entrywise
//! products of the idempotent matrices.

use std::collections::VecDeque;
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::krein::KreinArray;
use super::table::ParameterTable;
use super::SchemeError;
use crate::exact::number::Number;
use crate::exact::poly::Poly;
use crate::exact::rat::{self, Rat};
use crate::exact::sturm::{sturm_isolate, AlgebraicReal};

pub type Relation = Vec<Vec<u8>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// Square matrices of one common size, at least two of them.
    Shape,
    ZeroOne,
    Symmetric,
    /// `A_0 = I`.
    AS1,
    /// The relations partition `X × X` and none is empty.
    AS2,
    /// `A_i A_j` lies in the span of the `A_h`.
    AS3,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Shape => "shape",
            Axiom::ZeroOne => "0/1 entries",
            Axiom::Symmetric => "symmetry",
            Axiom::AS1 => "AS1",
            Axiom::AS2 => "AS2",
            Axiom::AS3 => "AS3",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct RelationParseError {
    pub line: usize,
    pub message: String,
}

/// A verified scheme with relations and idempotents in table order.
#[derive(Debug, Clone)]
pub struct SchemeOracle {
    pub n: usize,
    pub relations: Vec<Relation>,
    /// `E_j` as `n × n` rational matrices, cometric order.
    pub idempotents: Vec<Vec<Vec<Rat>>>,
    /// `relation_order[i]` is the input index of table relation `i`.
    pub relation_order: Vec<usize>,
}

fn zero_matrix(n: usize) -> Vec<Vec<Rat>> {
    vec![vec![Rat::zero(); n]; n]
}

fn check_axioms(rel: &[Relation]) -> Result<Vec<Vec<Vec<i64>>>, Axiom> {
    let size = rel.len();
    if size < 2 {
        return Err(Axiom::Shape);
    }
    let n = rel[0].len();
    if n == 0 || rel.iter().any(|a| a.len() != n || a.iter().any(|row| row.len() != n)) {
        return Err(Axiom::Shape);
    }
    if rel.iter().flatten().flatten().any(|&e| e > 1) {
        return Err(Axiom::ZeroOne);
    }
    for a in rel {
        for x in 0..n {
            for y in 0..x {
                if a[x][y] != a[y][x] {
                    return Err(Axiom::Symmetric);
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if rel[0][x][y] != u8::from(x == y) {
                return Err(Axiom::AS1);
            }
        }
    }
    let mut which = vec![vec![usize::MAX; n]; n];
    for (i, a) in rel.iter().enumerate() {
        if a.iter().flatten().all(|&e| e == 0) {
            return Err(Axiom::AS2);
        }
        for x in 0..n {
            for y in 0..n {
                if a[x][y] == 1 {
                    if which[x][y] != usize::MAX {
                        return Err(Axiom::AS2);
                    }
                    which[x][y] = i;
                }
            }
        }
    }
    if which.iter().flatten().any(|&w| w == usize::MAX) {
        return Err(Axiom::AS2);
    }
    // p[i][j][h] = (A_i A_j)_{xy} for any (x, y) in R_h
    let mut p = vec![vec![vec![-1i64; size]; size]; size];
    for i in 0..size {
        for j in 0..size {
            for x in 0..n {
                for y in 0..n {
                    let count = (0..n)
                        .filter(|&z| rel[i][x][z] == 1 && rel[j][z][y] == 1)
                        .count() as i64;
                    let slot = &mut p[i][j][which[x][y]];
                    if *slot == -1 {
                        *slot = count;
                    } else if *slot != count {
                        return Err(Axiom::AS3);
                    }
                }
            }
        }
    }
    Ok(p)
}

/// Solves `Σ_s coef_s cols[s] = rhs`, if possible.
fn solve(cols: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let rows = rhs.len();
    let unknowns = cols.len();
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..unknowns {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].recip();
        for e in m[r].iter_mut() {
            *e *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for k in c..=unknowns {
                    let v = &factor * &m[r][k];
                    m[i][k] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if (r..rows).any(|i| !m[i][unknowns].is_zero()) {
        return None;
    }
    let mut out = vec![Rat::zero(); unknowns];
    for (row, &c) in pivots.iter().enumerate() {
        out[c] = m[row][unknowns].clone();
    }
    Some(out)
}

fn invert(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let size = a.len();
    let mut out = Vec::with_capacity(size);
    let cols: Vec<Vec<Rat>> = (0..size).map(|c| a.iter().map(|r| r[c].clone()).collect()).collect();
    for e in 0..size {
        let rhs: Vec<Rat> = (0..size).map(|i| if i == e { Rat::one() } else { Rat::zero() }).collect();
        out.push(solve(&cols, &rhs)?);
    }
    // out[e] is column e of the inverse
    Some((0..size).map(|r| (0..size).map(|c| out[c][r].clone()).collect()).collect())
}

/// Regular representation of `C = Σ_i coef_i A_i`: `(B_C)_{jh} = Σ_i coef_i p^j_{ih}`.
fn regular_rep(p: &[Vec<Vec<i64>>], coef: &[Rat]) -> Vec<Vec<Rat>> {
    let size = coef.len();
    (0..size)
        .map(|j| {
            (0..size)
                .map(|h| (0..size).map(|i| &coef[i] * rat::int(p[i][h][j])).sum())
                .collect()
        })
        .collect()
}

fn apply(m: &[Vec<Rat>], u: &[Rat]) -> Vec<Rat> {
    m.iter()
        .map(|row| row.iter().zip(u).map(|(a, b)| a * b).sum())
        .collect()
}

/// Minimal polynomial of `B` on the cyclic vector `e_0`.
fn krylov_minpoly(b: &[Vec<Rat>]) -> Poly {
    let size = b.len();
    let mut u = vec![Rat::zero(); size];
    u[0] = Rat::one();
    let mut basis = vec![u];
    loop {
        let next = apply(b, basis.last().expect("nonempty"));
        if let Some(coef) = solve(&basis, &next) {
            let mut c: Vec<Rat> = coef.into_iter().map(|x| -x).collect();
            c.push(Rat::one());
            return Poly::new(c);
        }
        basis.push(next);
    }
}

/// Idempotent coordinates `e_l` (with `E_l = Σ_i e_l[i] A_i`) and eigenvalues.
fn spectral_idempotents(
    p: &[Vec<Vec<i64>>],
) -> Result<(Vec<Vec<Rat>>, Vec<Rat>), SchemeError> {
    let size = p.len();
    let mut bc = None;
    for t in 1..=(2 * size as i64 + 2) {
        let coef: Vec<Rat> = (0..size)
            .map(|i| if i == 0 { Rat::zero() } else { rat::int(t).pow(i as i32 - 1) })
            .collect();
        let b = regular_rep(p, &coef);
        let mp = krylov_minpoly(&b);
        if mp.degree() == Some(size) {
            bc = Some((b, mp));
            break;
        }
    }
    let (b, mp) = bc.ok_or(SchemeError::IdentityCheckFailed(
        "no generating element of the Bose-Mesner algebra found".into(),
    ))?;
    let roots: Vec<AlgebraicReal> = sturm_isolate(&mp);
    if roots.len() != size {
        return Err(SchemeError::IrrationalSpectrum);
    }
    let theta: Vec<Rat> = roots
        .iter()
        .map(AlgebraicReal::to_rational)
        .collect::<Option<_>>()
        .ok_or(SchemeError::IrrationalSpectrum)?;
    let mut idem = Vec::with_capacity(size);
    for l in 0..size {
        let mut u = vec![Rat::zero(); size];
        u[0] = Rat::one();
        for (s, th) in theta.iter().enumerate() {
            if s == l {
                continue;
            }
            let bu = apply(&b, &u);
            let denom = (&theta[l] - th).recip();
            u = bu
                .iter()
                .zip(&u)
                .map(|(x, y)| (x - th * y) * &denom)
                .collect();
        }
        idem.push(u);
    }
    Ok((idem, theta))
}

/// Verifies the axioms and computes the parameter table in cometric order.
pub fn from_relation_matrices(
    relations: &[Relation],
) -> Result<(SchemeOracle, ParameterTable), SchemeError> {
    let p = check_axioms(relations).map_err(SchemeError::NotAnAssociationScheme)?;
    let size = relations.len();
    let n = relations[0].len();
    let nr = rat::int(n as i64);
    let (idem, _) = spectral_idempotents(&p)?;
    // qraw[i][l] = Q_{il} = n e_l[i]
    let qraw: Vec<Vec<Rat>> = (0..size)
        .map(|i| (0..size).map(|l| &nr * &idem[l][i]).collect())
        .collect();
    let e0 = (0..size)
        .find(|&l| (0..size).all(|i| qraw[i][l].is_one()))
        .ok_or_else(|| SchemeError::IdentityCheckFailed("no trivial idempotent".into()))?;
    let emats: Vec<Vec<Vec<Rat>>> = (0..size)
        .map(|l| {
            let mut e = zero_matrix(n);
            for x in 0..n {
                for y in 0..n {
                    let i = (0..size).find(|&i| relations[i][x][y] == 1).expect("partition");
                    e[x][y] = &qraw[i][l] / &nr;
                }
            }
            e
        })
        .collect();
    let ranks: Vec<Rat> = (0..size).map(|l| qraw[0][l].clone()).collect();
    // kraw[a][b][c] = n tr((E_a ∘ E_b) E_c) / m_c
    let mut kraw = vec![vec![vec![Rat::zero(); size]; size]; size];
    for a in 0..size {
        for b in a..size {
            for c in 0..size {
                let mut tr = Rat::zero();
                for x in 0..n {
                    for y in 0..n {
                        tr += &emats[a][x][y] * &emats[b][x][y] * &emats[c][y][x];
                    }
                }
                let v = &nr * tr / &ranks[c];
                kraw[b][a][c] = v.clone();
                kraw[a][b][c] = v;
            }
        }
    }
    let order = cometric_order(&kraw, e0).ok_or(SchemeError::NotCometric)?;
    let e1 = order[1];
    let mut rel_order: Vec<usize> = (0..size).collect();
    rel_order.sort_by(|&a, &b| qraw[b][e1].cmp(&qraw[a][e1]));
    if rel_order.windows(2).any(|w| qraw[w[0]][e1] == qraw[w[1]][e1]) || rel_order[0] != 0 {
        return Err(SchemeError::NotCometric);
    }

    let q_rat: Vec<Vec<Rat>> = rel_order
        .iter()
        .map(|&i| order.iter().map(|&l| qraw[i][l].clone()).collect())
        .collect();
    let p_rat: Vec<Vec<Rat>> = invert(&q_rat)
        .ok_or(SchemeError::SingularQ)?
        .into_iter()
        .map(|row| row.into_iter().map(|v| v * &nr).collect())
        .collect();
    let krein: Vec<Vec<Vec<Rat>>> = order
        .iter()
        .map(|&a| {
            order
                .iter()
                .map(|&b| order.iter().map(|&c| kraw[a][b][c].clone()).collect())
                .collect()
        })
        .collect();
    let intersection: Vec<Vec<Vec<Number>>> = rel_order
        .iter()
        .map(|&i| {
            rel_order
                .iter()
                .map(|&j| {
                    rel_order
                        .iter()
                        .map(|&h| Number::Rational(rat::int(p[i][j][h])))
                        .collect()
                })
                .collect()
        })
        .collect();
    let k: Vec<Number> = rel_order
        .iter()
        .map(|&i| Number::Rational(rat::int(p[i][i][0])))
        .collect();
    let b1star: Vec<Vec<Rat>> = (0..size)
        .map(|i| (0..size).map(|j| krein[1][i][j].clone()).collect())
        .collect();
    let to_numbers = |m: Vec<Vec<Rat>>| -> Vec<Vec<Number>> {
        m.into_iter()
            .map(|row| row.into_iter().map(Number::Rational).collect())
            .collect()
    };
    let table = ParameterTable {
        d: size - 1,
        n: nr.clone(),
        x: q_rat.iter().map(|row| AlgebraicReal::from_rational(&row[1])).collect(),
        mult: order.iter().map(|&l| ranks[l].clone()).collect(),
        q_mat: to_numbers(q_rat),
        p_mat: to_numbers(p_rat),
        k,
        krein,
        intersection,
        b1star,
        spectrum: None,
    };
    let oracle = SchemeOracle {
        n,
        relations: rel_order.iter().map(|&i| relations[i].clone()).collect(),
        idempotents: order.iter().map(|&l| emats[l].clone()).collect(),
        relation_order: rel_order,
    };
    Ok((oracle, table))
}

/// First idempotent ordering in which `E_1 ∘ E_i` only meets `E_{i-1}, E_i, E_{i+1}`
/// and both off-diagonal neighbours are present.
fn cometric_order(kraw: &[Vec<Vec<Rat>>], e0: usize) -> Option<Vec<usize>> {
    let size = kraw.len();
    'candidate: for e1 in (0..size).filter(|&l| l != e0) {
        let mut order = vec![e0, e1];
        while order.len() < size {
            let last = *order.last().expect("nonempty");
            let fresh: Vec<usize> = (0..size)
                .filter(|h| !order.contains(h) && !kraw[e1][last][*h].is_zero())
                .collect();
            if fresh.len() != 1 {
                continue 'candidate;
            }
            order.push(fresh[0]);
        }
        for (i, &oi) in order.iter().enumerate() {
            for (j, &oj) in order.iter().enumerate() {
                let q = &kraw[e1][oi][oj];
                if q.is_negative() {
                    continue 'candidate;
                }
                let adjacent = i.abs_diff(j) == 1;
                if (i.abs_diff(j) > 1 && !q.is_zero()) || (adjacent && q.is_zero()) {
                    continue 'candidate;
                }
            }
        }
        return Some(order);
    }
    None
}

impl SchemeOracle {
    /// The Krein array read off `q^h_{1j}`.
    pub fn krein_array(&self, table: &ParameterTable) -> Result<KreinArray, super::KreinError> {
        let d = table.d;
        let b = (0..d).map(|i| table.krein[1][i + 1][i].clone()).collect();
        let c = (1..=d).map(|i| table.krein[1][i - 1][i].clone()).collect();
        KreinArray::new(b, c)
    }

    /// Matrix-level block pattern: `Σ_{j∈J} E_j = (1/r) Σ_{i∈I} A_i`. Returns `(I, r)`.
    pub fn block_pattern(&self, jset: &[usize]) -> Option<(Vec<usize>, Rat)> {
        let n = self.n;
        let mut s = zero_matrix(n);
        for &j in jset {
            for x in 0..n {
                for y in 0..n {
                    s[x][y] += &self.idempotents[j][x][y];
                }
            }
        }
        let mut value: Option<Rat> = None;
        let mut iset = Vec::new();
        for (i, a) in self.relations.iter().enumerate() {
            let mut seen: Option<Rat> = None;
            for x in 0..n {
                for y in 0..n {
                    if a[x][y] == 1 {
                        match &seen {
                            None => seen = Some(s[x][y].clone()),
                            Some(v) if v != &s[x][y] => return None,
                            _ => {}
                        }
                    }
                }
            }
            let v = seen.expect("nonempty relation");
            if v.is_zero() {
                continue;
            }
            if !v.is_positive() || value.as_ref().is_some_and(|c| c != &v) {
                return None;
            }
            value = Some(v);
            iset.push(i);
        }
        let c = value?;
        if iset.first() != Some(&0) {
            return None;
        }
        Some((iset, c.recip()))
    }
}

/// Distance relations `A_0, ..., A_D` of a connected graph.
pub fn distance_relations(adjacency: &[Vec<u8>]) -> Vec<Relation> {
    let n = adjacency.len();
    let mut dist = vec![vec![usize::MAX; n]; n];
    for s in 0..n {
        dist[s][s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if adjacency[u][v] == 1 && dist[s][v] == usize::MAX {
                    dist[s][v] = dist[s][u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    let diameter = dist.iter().flatten().copied().max().unwrap_or(0);
    assert!(diameter != usize::MAX, "graph is disconnected");
    (0..=diameter)
        .map(|k| {
            (0..n)
                .map(|x| (0..n).map(|y| u8::from(dist[x][y] == k)).collect())
                .collect()
        })
        .collect()
}

pub fn cycle_graph(n: usize) -> Vec<Vec<u8>> {
    (0..n)
        .map(|x| (0..n).map(|y| u8::from((x + 1) % n == y || (y + 1) % n == x)).collect())
        .collect()
}

pub fn hypercube_graph(dim: u32) -> Vec<Vec<u8>> {
    let n = 1usize << dim;
    (0..n)
        .map(|x| (0..n).map(|y| u8::from((x ^ y).count_ones() == 1)).collect())
        .collect()
}

/// Parses the point count, then `d+1` blocks of `n` rows of 0/1 entries. Rows may
/// be written with or without separating whitespace; blank lines are ignored.
pub fn parse_relation_file(text: &str) -> Result<Vec<Relation>, RelationParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first_line, first) = lines.next().ok_or(RelationParseError {
        line: 1,
        message: "missing point count".into(),
    })?;
    let n: usize = first.parse().map_err(|_| RelationParseError {
        line: first_line,
        message: format!("invalid point count {first:?}"),
    })?;
    if n == 0 {
        return Err(RelationParseError {
            line: first_line,
            message: "point count must be positive".into(),
        });
    }
    let mut rows: Vec<Vec<u8>> = Vec::new();
    let mut last_line = first_line;
    for (line, l) in lines {
        last_line = line;
        let entries: Vec<u8> = l
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(RelationParseError {
                    line,
                    message: format!("unexpected character {other:?}"),
                }),
            })
            .collect::<Result<_, _>>()?;
        if entries.len() != n {
            return Err(RelationParseError {
                line,
                message: format!("row has {} entries, expected {n}", entries.len()),
            });
        }
        rows.push(entries);
    }
    if rows.is_empty() || !rows.len().is_multiple_of(n) {
        return Err(RelationParseError {
            line: last_line,
            message: format!("{} rows do not form blocks of {n}", rows.len()),
        });
    }
    Ok(rows.chunks(n).map(<[Vec<u8>]>::to_vec).collect())
}

/// Inverse of [`parse_relation_file`].
pub fn format_relation_file(relations: &[Relation]) -> String {
    let n = relations.first().map_or(0, Vec::len);
    let mut out = format!("{n}\n");
    for a in relations {
        out.push('\n');
        for row in a {
            out.extend(row.iter().map(|&e| if e == 1 { '1' } else { '0' }));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::int;
    use crate::scheme::table::build_table;

    fn rows(m: &[Vec<Number>]) -> Vec<Vec<Rat>> {
        m.iter()
            .map(|r| r.iter().map(|v| v.as_rational().unwrap().clone()).collect())
            .collect()
    }

    #[test]
    fn four_cycle_matches_table() {
        let (oracle, t) = from_relation_matrices(&distance_relations(&cycle_graph(4))).unwrap();
        assert_eq!(t.n, int(4));
        let e: Vec<Vec<Rat>> = [[1, 2, 1], [1, 0, -1], [1, -2, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        assert_eq!(rows(&t.q_mat), e);
        assert_eq!(rows(&t.p_mat), e);
        let k = oracle.krein_array(&t).unwrap();
        assert_eq!(k, KreinArray::from_ints(&[2, 1], &[1, 2]).unwrap());
        assert_eq!(t.first_difference(&build_table(&k).unwrap()), None);
    }

    #[test]
    fn cube_matches_table() {
        let (oracle, t) = from_relation_matrices(&distance_relations(&hypercube_graph(3))).unwrap();
        let k = oracle.krein_array(&t).unwrap();
        assert_eq!(k, KreinArray::from_ints(&[3, 2, 1], &[1, 2, 3]).unwrap());
        assert_eq!(t.first_difference(&build_table(&k).unwrap()), None);
    }

    #[test]
    fn cube_block_patterns() {
        let (oracle, _) = from_relation_matrices(&distance_relations(&hypercube_graph(3))).unwrap();
        assert_eq!(oracle.block_pattern(&[0, 2]), Some((vec![0, 3], int(2))));
        assert_eq!(oracle.block_pattern(&[0, 3]), Some((vec![0, 2], int(4))));
        let (cyc, _) = from_relation_matrices(&distance_relations(&cycle_graph(4))).unwrap();
        assert_eq!(cyc.block_pattern(&[0, 1]), None);
    }

    #[test]
    fn axiom_violations() {
        // path on three vertices: AS1 and AS2 hold, the products leave the span
        let a1 = vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]];
        let a2 = vec![vec![0, 0, 1], vec![0, 0, 0], vec![1, 0, 0]];
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(
            from_relation_matrices(&[id.clone(), a1.clone(), a2.clone()]).unwrap_err(),
            SchemeError::NotAnAssociationScheme(Axiom::AS3)
        );
        assert_eq!(
            from_relation_matrices(&[a1.clone(), id.clone(), a2.clone()]).unwrap_err(),
            SchemeError::NotAnAssociationScheme(Axiom::AS1)
        );
        assert_eq!(
            from_relation_matrices(&[id.clone(), a1.clone()]).unwrap_err(),
            SchemeError::NotAnAssociationScheme(Axiom::AS2)
        );
        let asym = vec![vec![0, 1, 1], vec![0, 0, 1], vec![0, 0, 0]];
        assert_eq!(
            from_relation_matrices(&[id, asym]).unwrap_err(),
            SchemeError::NotAnAssociationScheme(Axiom::Symmetric)
        );
    }

    #[test]
    fn relation_file_round_trip() {
        let rel = distance_relations(&cycle_graph(4));
        let text = format_relation_file(&rel);
        assert_eq!(parse_relation_file(&text).unwrap(), rel);
        let spaced = "3\n1 0 0\n0 1 0\n0 0 1\n\n0 1 1\n1 0 1\n1 1 0\n";
        assert_eq!(parse_relation_file(spaced).unwrap().len(), 2);
        let err = parse_relation_file("3\n100\n01\n").unwrap_err();
        assert_eq!(err.line, 3);
    }

    #[test]
    fn complete_graph_one_class() {
        // K_3 as a one-class scheme: {2;1}
        let rel = parse_relation_file("3\n100\n010\n001\n011\n101\n110\n").unwrap();
        let (oracle, t) = from_relation_matrices(&rel).unwrap();
        assert_eq!(oracle.krein_array(&t).unwrap(), KreinArray::from_ints(&[2], &[1]).unwrap());
        assert_eq!(t.first_difference(&build_table(&KreinArray::from_ints(&[2], &[1]).unwrap()).unwrap()), None);
    }
}
