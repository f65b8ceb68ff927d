//! Acceptance suite. Each test prints one `criterion N: PASS|FAIL` line and then
//! asserts, so `cargo test --test acceptance -- --nocapture` shows the tally.

use std::time::{Duration, Instant};

use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cometric::classify::{classify, detect_pattern, Flag};
use cometric::d6::certificate::Verdict;
use cometric::d6::p161::cross_check_p161;
use cometric::d6::sweep::{sweep, SweepConfig};
use cometric::d6::{
    certify_infeasible, compute_x1, cubic, p161_plus_1, paper_relation_order, recheck_json, v7_factorization_check,
    validate, D6Params, Grid,
};
use cometric::exact::poly::Poly;
use cometric::exact::rat::{self, int, rat, Rat};
use cometric::scheme::oracle::{cycle_graph, distance_relations, hypercube_graph};
use cometric::scheme::{build_table, from_relation_matrices, KreinArray};

const IDENTITY_SUITE_BUDGET: Duration = Duration::from_secs(10);
const SWEEP_BUDGET: Duration = Duration::from_secs(300);
const MAX_NUM_DEN: i64 = 20;
const VALID_TUPLES: usize = 200;
const BROKEN_TUPLES: usize = 50;
const CROSS_CHECK_POINTS: usize = 50;
/// Agreement between the exact enclosures and the f64 recomputation.
const FLOAT_TOL: f64 = 1e-9;

fn report(n: u32, ok: bool, detail: &str) {
    println!("criterion {n}: {} {detail}", if ok { "PASS" } else { "FAIL" });
}

fn small(q: &Rat) -> bool {
    q.numer().abs() <= MAX_NUM_DEN.into() && q.denom() <= &MAX_NUM_DEN.into()
}

fn random_in(rng: &mut ChaCha8Rng, lo_exclusive: &Rat, hi: &Rat) -> Option<Rat> {
    let den = rng.gen_range(1..=MAX_NUM_DEN);
    let num = rng.gen_range(1..=MAX_NUM_DEN);
    let q = rat(num, den);
    (&q > lo_exclusive && &q <= hi).then_some(q)
}

/// A valid tuple with every entry's numerator and denominator at most 20;
/// `c2` is forced by `a2 = a4 + a5`, i.e. `c2 = b4 + c5 - (m - 1)`.
fn random_valid(rng: &mut ChaCha8Rng) -> D6Params {
    loop {
        let Some(m) = random_in(rng, &int(2), &int(MAX_NUM_DEN)) else { continue };
        let mm1 = &m - Rat::one();
        let (Some(b3), Some(b4), Some(c5)) = (
            random_in(rng, &Rat::zero(), &m),
            random_in(rng, &Rat::zero(), &mm1),
            random_in(rng, &Rat::zero(), &mm1),
        ) else {
            continue;
        };
        if b3 == m {
            continue;
        }
        let c2 = &b4 + &c5 - &mm1;
        if !small(&c2) {
            continue;
        }
        if let Ok(p) = validate(m, c2, b3, b4, c5) {
            return p;
        }
    }
}

#[test]
fn criterion_1_factorization_identity_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut valid_ok = 0;
    let mut broken_ok = 0;
    let mut valid = Vec::new();
    for _ in 0..VALID_TUPLES {
        let p = random_valid(&mut rng);
        let c = v7_factorization_check(&p);
        if c.passed && c.difference.is_zero() {
            valid_ok += 1;
        }
        valid.push(p);
    }
    for p in valid.iter().take(BROKEN_TUPLES) {
        // shift c2 by a small nonzero amount, staying positive so c2 != 0
        let shift = loop {
            let d = rat(rng.gen_range(1..=MAX_NUM_DEN), rng.gen_range(1..=MAX_NUM_DEN));
            if &p.c2 + &d != Rat::zero() {
                break d;
            }
        };
        let q = D6Params::unchecked(p.m.clone(), &p.c2 + &shift, p.b3.clone(), p.b4.clone(), p.c5.clone());
        assert_ne!(q.a2, &q.a4 + &q.a5);
        let c = v7_factorization_check(&q);
        if !c.passed && !c.difference.is_zero() {
            broken_ok += 1;
        }
    }
    let elapsed = start.elapsed();
    let ok = valid_ok == VALID_TUPLES && broken_ok == BROKEN_TUPLES && elapsed < IDENTITY_SUITE_BUDGET;
    report(
        1,
        ok,
        &format!("valid {valid_ok}/{VALID_TUPLES} exact, broken {broken_ok}/{BROKEN_TUPLES} nonzero, {elapsed:.2?}"),
    );
    assert!(ok);
}

fn desk_grid() -> Grid {
    Grid::natural(3, 8, rat(1, 2))
}

/// Criteria 2, 4 and 8 share one sweep.
#[test]
fn criteria_2_4_8_desk_sweep() {
    let start = Instant::now();
    let cfg = SweepConfig {
        recheck: true,
        ..SweepConfig::default()
    };
    let r = sweep(&desk_grid(), &cfg);
    let elapsed = start.elapsed();

    let valid = r.total - r.invalid;
    let c2 = r.failed.is_empty()
        && r.alpha_interval_empty == 0
        && r.certified == valid
        && (1_000..=10_000).contains(&valid)
        && elapsed < SWEEP_BUDGET;
    report(
        2,
        c2,
        &format!(
            "{} valid of {} grid points, {} certified, {} failed, routes agree (r<1: {}, 1<r<2: {}), {elapsed:.2?}",
            valid,
            r.total,
            r.certified,
            r.failed.len(),
            r.r_below_one,
            r.r_between_one_and_two
        ),
    );

    let c4 = r.x1_bound_failures == 0 && r.certified == valid;
    report(4, c4, &format!("x1 outside (m-1, m) at {} points", r.x1_bound_failures));

    let c8 = r.rechecked == r.certified && r.recheck_failures == 0;
    report(8, c8, &format!("{} of {} certificates recheck", r.rechecked - r.recheck_failures, r.certified));

    assert!(c2, "{:?}", r.failed);
    assert!(c4);
    assert!(c8);
}

fn inside(lo: &Rat, hi: &Rat, a: f64, b: f64) -> bool {
    rat::to_f64(lo) > a && rat::to_f64(hi) < b
}

/// Largest root of the cubic and `r` by plain floating point.
fn float_oracle(m: f64, c2: f64, b3: f64, c5: f64) -> (f64, f64) {
    let a2 = m - 1.0 - c2;
    let a5 = m - 1.0 - c5;
    let c3 = m - b3;
    let f = |x: f64| x * x * x - a2 * x * x - (m + c2 * (m - 1.0)) * x + (m * a2 - a5 * c3);
    let (mut lo, mut hi) = (m - 1.0, m);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x = 0.5 * (lo + hi);
    let n = x * x - a2 * x - c2 * (m - 1.0);
    let d = 3.0 * x * x - 2.0 * a2 * x - m - c2 * (m - 1.0);
    (x, (m + 1.0) * n / d)
}

#[test]
fn criterion_3_spot_instance() {
    let p = D6Params::from_ints(3, 1, 1, 2, 1).unwrap();
    let cert = certify_infeasible(&p).unwrap();
    let expected_cubic = Poly::new(vec![int(1), int(-5), int(-1), int(1)]);
    let (fx1, fr) = float_oracle(3.0, 1.0, 1.0, 1.0);
    let x1 = &cert.x1_enclosure;
    let r = &cert.r_enclosure;
    let checks = [
        ("cubic", cubic(&p) == expected_cubic),
        ("x1 in (2.70, 2.71)", inside(&x1.lo, &x1.hi, 2.70, 2.71)),
        ("r in (0.90, 0.91)", inside(&r.lo, &r.hi, 0.90, 0.91)),
        ("n = 24", p.n == int(24)),
        ("alpha = 19/15", cert.alpha == rat(19, 15)),
        ("verdict infeasible", cert.verdict == Verdict::Infeasible),
        (
            "float x1",
            rat::to_f64(&x1.lo) - FLOAT_TOL <= fx1 && fx1 <= rat::to_f64(&x1.hi) + FLOAT_TOL,
        ),
        (
            "float r",
            rat::to_f64(&r.lo) - FLOAT_TOL <= fr && fr <= rat::to_f64(&r.hi) + FLOAT_TOL,
        ),
    ];
    let failed: Vec<_> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    report(
        3,
        failed.is_empty(),
        &format!("cubic {}, x1 ~ {fx1:.8}, r ~ {fr:.8}, failing: {failed:?}", cubic(&p)),
    );
    assert!(failed.is_empty());
}

#[test]
fn criterion_5_cross_formula_agreement() {
    let valid: Vec<D6Params> = desk_grid()
        .points()
        .into_iter()
        .filter_map(|[m, c2, b3, b4, c5]| validate(m, c2, b3, b4, c5).ok())
        .collect();
    let stride = (valid.len() / (CROSS_CHECK_POINTS + 10)).max(1);
    let mut checked = 0;
    let mut agreed = 0;
    for p in valid.iter().step_by(stride) {
        let roots = compute_x1(p).unwrap();
        let r = p161_plus_1(p, &roots).unwrap();
        let t = build_table(&p.krein_array()).unwrap();
        let perm = paper_relation_order(p, &roots, &t).unwrap();
        checked += 1;
        if cross_check_p161(&r, &t, &perm) {
            agreed += 1;
        }
    }
    let ok = checked >= CROSS_CHECK_POINTS && agreed == checked;
    report(5, ok, &format!("{agreed}/{checked} sweep points certified equal"));
    assert!(ok);
}

#[test]
fn criterion_6_oracle_equivalence() {
    let cases = [(cycle_graph(4), "{2,1;1,2}"), (hypercube_graph(3), "{3,2,1;1,2,3}")];
    let mut diffs = Vec::new();
    for (adj, krein) in &cases {
        let (oracle, t) = from_relation_matrices(&distance_relations(adj)).unwrap();
        let k = KreinArray::parse(krein).unwrap();
        assert_eq!(oracle.krein_array(&t).unwrap(), k);
        if let Some(d) = t.first_difference(&build_table(&k).unwrap()) {
            diffs.push(format!("{krein}: {d}"));
        }
    }
    report(6, diffs.is_empty(), &format!("4-cycle and 3-cube; differences: {diffs:?}"));
    assert!(diffs.is_empty());
}

#[test]
fn criterion_7_classification() {
    let cube = classify(&KreinArray::parse("{3,2,1;1,2,3}").unwrap());
    let cube_ok = cube.has(Flag::QBipartite) && cube.has(Flag::QAntipodal);

    let p = D6Params::from_ints(3, 1, 1, 2, 1).unwrap();
    let d6_ok = classify(&p.krein_array()).has(Flag::ExceptionalD6);

    let t = build_table(&p.krein_array()).unwrap();
    let roots = compute_x1(&p).unwrap();
    let perm = paper_relation_order(&p, &roots, &t).unwrap();
    let relabeled = t.permute_relations(&perm);
    let pat = detect_pattern(&relabeled, &[0, 3, 6]).unwrap();
    let pattern_ok = pat.iset == vec![0, 6] && pat.r == &p.m + Rat::one();

    let ok = cube_ok && d6_ok && pattern_ok;
    report(
        7,
        ok,
        &format!(
            "cube flags {}, d=6 template {}, Iset {:?} with r = {}",
            cube.summary(),
            d6_ok,
            pat.iset,
            pat.r.to_i64().map_or_else(|| rat::format(&pat.r), |v| v.to_string())
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_8_recheck_of_single_certificate() {
    // the sweep test covers every grid certificate; this one goes through JSON text
    let p = D6Params::from_ints(4, 1, 2, 2, 2).unwrap();
    let text = certify_infeasible(&p).unwrap().to_json();
    let r = recheck_json(&text).unwrap();
    println!("criterion 8 (single): {} claims, passed {}", r.claims_checked, r.passed());
    assert!(r.passed(), "{:?}", r.failures);
}
