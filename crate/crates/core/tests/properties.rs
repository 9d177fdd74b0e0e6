//! Property tests over random matrices, polynomials and vector sets. Each
//! property is checked against an independent computation written here.

use std::collections::BTreeSet;

use arithstruct::arith_enum::{arithmetical_structures, min_dgeq0_matrix};
use arithstruct::classify::{critical_group_order, mp3_membership};
use arithstruct::json;
use arithstruct::poly_enum::{frontier_at_level, in_dgeq0, min_dgeq0, min_dgeq0_2var};
use arithstruct::polyring::det_diag_plus;
use arithstruct::solutions::{brute_force_box, slice_solve, Target, DEFAULT_BOX_CAP};
use arithstruct::{charpoly_of_matrix, parse, Frontier, IntMatrix, IntVec, SqFreePoly};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

const SEED: u64 = 0x5eed_a417;

fn bv(x: &[i64]) -> IntVec {
    x.iter().map(|&a| BigInt::from(a)).collect()
}

fn leq(a: &[BigInt], b: &[BigInt]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Cofactor expansion.
fn det_i64(m: &[Vec<i64>]) -> i64 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
            (if j % 2 == 0 { 1 } else { -1 }) * m[0][j] * det_i64(&minor)
        })
        .sum()
}

fn matrix(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_i64_rows(rows).unwrap()
}

fn zero_diag(n: usize, max: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(0..=max, n), n).prop_map(move |mut rows| {
        for (i, r) in rows.iter_mut().enumerate() {
            r[i] = 0;
        }
        rows
    })
}

fn square(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(lo..=hi, n), n)
}

fn vectors(dim: usize, max: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(1..=max, dim), 0..25)
}

/// Minimal elements by pairwise comparison.
fn naive_min(vs: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    vs.iter()
        .filter(|v| !vs.iter().any(|w| w != *v && w.iter().zip(v.iter()).all(|(a, b)| a <= b)))
        .cloned()
        .collect()
}

fn as_set(f: &Frontier) -> BTreeSet<Vec<i64>> {
    f.iter().map(|d| d.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect()
}

/// Dominated square-free polynomial in three variables with leading
/// coefficient 1 and small lower coefficients.
fn poly3() -> impl Strategy<Value = SqFreePoly> {
    proptest::collection::vec(-12i64..=12, 7).prop_map(|c| {
        let mut dense: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
        dense.push(BigInt::one());
        SqFreePoly::from_dense(3, &dense)
    })
}

fn coeffs3() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-12i64..=12, 7).prop_map(|mut c| {
        c.push(1);
        c
    })
}

fn poly_of(c: &[i64]) -> SqFreePoly {
    SqFreePoly::from_dense(3, &c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
}

/// Box scan in machine integers. Coefficients are indexed by variable
/// bitmask; the shifted coefficient of `s` sums `c[t] * prod d_i` over
/// supersets `t` of `s`, with the product over `t \\ s`. The region is an
/// up-set, so a member is minimal when no unit step down stays inside.
fn box_frontier_3(c: &[i64], bound: i64) -> BTreeSet<Vec<i64>> {
    let side = (bound + 1) as usize;
    let idx = |d: [i64; 3]| (d[0] as usize * side + d[1] as usize) * side + d[2] as usize;
    let mut inside = vec![false; side * side * side];
    for a in 1..=bound {
        for b in 1..=bound {
            for e in 1..=bound {
                let d = [a, b, e];
                let shifted = |s: usize| -> i64 {
                    (0..8usize)
                        .filter(|t| t & s == s)
                        .map(|t| c[t] * (0..3).filter(|i| (t & !s) >> i & 1 == 1).map(|i| d[i]).product::<i64>())
                        .sum()
                };
                inside[idx(d)] = shifted(0) >= 0 && (1..8).all(|s| shifted(s) > 0);
            }
        }
    }
    let mut out = BTreeSet::new();
    for a in 1..=bound {
        for b in 1..=bound {
            for e in 1..=bound {
                let d = [a, b, e];
                if inside[idx(d)]
                    && (0..3).all(|i| {
                        let mut p = d;
                        p[i] -= 1;
                        !inside[idx(p)]
                    })
                {
                    out.insert(d.to_vec());
                }
            }
        }
    }
    out
}

fn box_frontier(f: &SqFreePoly, bound: i64) -> BTreeSet<Vec<i64>> {
    let n = f.nvars();
    let mut inside = Vec::new();
    let mut cur = vec![1i64; n];
    loop {
        if in_dgeq0(f, &bv(&cur)).unwrap() {
            inside.push(cur.clone());
        }
        let mut i = 0;
        while i < n && cur[i] == bound {
            cur[i] = 1;
            i += 1;
        }
        if i == n {
            break;
        }
        cur[i] += 1;
    }
    naive_min(&inside)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, rng_seed: RngSeed::Fixed(SEED), .. ProptestConfig::default() })]

    #[test]
    fn frontier_is_the_set_of_minimal_elements(vs in vectors(3, 6)) {
        let f = Frontier::from_vectors(3, vs.iter().map(|v| bv(v))).unwrap();
        prop_assert!(f.is_antichain());
        prop_assert_eq!(as_set(&f), naive_min(&vs));
        for v in &vs {
            prop_assert!(f.dominates_some(&bv(v)).unwrap());
        }
    }

    #[test]
    fn merge_is_commutative_associative_idempotent(a in vectors(2, 8), b in vectors(2, 8), c in vectors(2, 8)) {
        let mk = |vs: &Vec<Vec<i64>>| Frontier::from_vectors(2, vs.iter().map(|v| bv(v))).unwrap();
        let (fa, fb, fc) = (mk(&a), mk(&b), mk(&c));
        prop_assert_eq!(fa.merge(&fb).unwrap(), fb.merge(&fa).unwrap());
        prop_assert_eq!(fa.merge(&fb).unwrap().merge(&fc).unwrap(), fa.merge(&fb.merge(&fc).unwrap()).unwrap());
        prop_assert_eq!(fa.merge(&fa).unwrap(), fa.clone());
    }

    #[test]
    fn meet_is_the_minimal_common_upper_bounds(a in vectors(2, 8), b in vectors(2, 8)) {
        let mk = |vs: &Vec<Vec<i64>>| Frontier::from_vectors(2, vs.iter().map(|v| bv(v))).unwrap();
        let (fa, fb) = (mk(&a), mk(&b));
        let meet = fa.meet_upsets(&fb).unwrap();
        prop_assert_eq!(meet.clone(), fb.meet_upsets(&fa).unwrap());
        // a point lies in both up-sets exactly when it lies in the meet's
        for x in 1..=9i64 {
            for y in 1..=9i64 {
                let p = bv(&[x, y]);
                let both = fa.dominates_some(&p).unwrap() && fb.dominates_some(&p).unwrap();
                prop_assert_eq!(both, meet.dominates_some(&p).unwrap());
            }
        }
    }

    #[test]
    fn shifts_compose(f in poly3(), a in proptest::collection::vec(-5i64..=5, 3), b in proptest::collection::vec(-5i64..=5, 3)) {
        let sum: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        prop_assert_eq!(f.shift(&bv(&a)).unwrap().shift(&bv(&b)).unwrap(), f.shift(&bv(&sum)).unwrap());
        prop_assert_eq!(f.shift(&bv(&a)).unwrap().constant_term(), f.eval(&bv(&a)).unwrap());
    }

    #[test]
    fn polynomial_text_round_trips(f in poly3()) {
        let names: Vec<String> = (1..=3).map(|i| format!("x{i}")).collect();
        let back = parse(&f.to_string(), Some(&names)).unwrap().poly;
        prop_assert_eq!(back, f.clone());
        let j = json::poly_to_json(&names, &f);
        prop_assert_eq!(json::poly_from_json(&j).unwrap().poly, f);
    }

    #[test]
    fn charpoly_evaluates_to_the_determinant(rows in zero_diag(4, 4), d in proptest::collection::vec(-6i64..=9, 4)) {
        let l = matrix(&rows);
        let m: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| if i == j { d[i] } else { -rows[i][j] }).collect()).collect();
        prop_assert_eq!(charpoly_of_matrix(&l).eval(&bv(&d)).unwrap(), BigInt::from(det_i64(&m)));
        prop_assert_eq!(charpoly_of_matrix(&l), charpoly_of_matrix(&l.transpose()));
    }

    #[test]
    fn derivative_is_the_polynomial_of_the_minor(rows in square(4, -6, 6), s in 0usize..4) {
        let m = matrix(&rows);
        prop_assert_eq!(det_diag_plus(&m).partial(s).unwrap(), det_diag_plus(&m.delete_rc(s).unwrap()));
    }

    #[test]
    fn determinant_matches_cofactor_expansion(rows in square(5, -9, 9)) {
        prop_assert_eq!(matrix(&rows).det(), BigInt::from(det_i64(&rows)));
    }

    #[test]
    fn kernel_vector_is_in_the_kernel(rows in square(4, -3, 3)) {
        let m = matrix(&rows);
        if let Ok(Some(r)) = m.kernel_primitive() {
            prop_assert!(m.mul_vec(r.as_slice()).unwrap().iter().all(Zero::is_zero));
            prop_assert!(r.as_slice().iter().any(|x| !x.is_zero()));
        }
    }

    #[test]
    fn matrix_json_round_trips(rows in square(4, -1_000_000_000_000, 1_000_000_000_000), big in any::<bool>()) {
        let mut m = matrix(&rows);
        if big {
            m.set(0, 1, BigInt::from(u64::MAX) * 1000);
        }
        let text = json::matrix_to_json(&m).to_string();
        let back = json::matrix_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn two_variable_closed_form_matches_scan(a in 1i64..=4, b1 in -15i64..=15, b2 in -15i64..=15, c in -30i64..=30) {
        let fr = min_dgeq0_2var(&BigInt::from(a), &BigInt::from(b1), &BigInt::from(b2), &BigInt::from(c)).unwrap();
        let f = SqFreePoly::from_i64_terms(2, &[(&[0, 1], a), (&[0], b1), (&[1], b2), (&[], c)]).unwrap();
        let top = fr.iter().flatten().map(|x| i64::try_from(x).unwrap()).max().unwrap_or(1);
        prop_assert_eq!(as_set(&fr), box_frontier(&f, 2 * top + 40));
        prop_assert_eq!(min_dgeq0(&f).unwrap(), fr);
    }

    #[test]
    fn level_sets_are_nested(f in poly3(), lo in -10i64..=10, step in 0i64..=10) {
        let low = frontier_at_level(&f, &BigInt::from(lo)).unwrap();
        let high = frontier_at_level(&f, &BigInt::from(lo + step)).unwrap();
        for d in high.iter() {
            prop_assert!(low.dominates_some(d).unwrap());
        }
    }

    #[test]
    fn mp3_witnesses_round_trip(a1 in -30i64..=30, a2 in -30i64..=30, a3 in -30i64..=30, b in -60i64..=60) {
        let a = [BigInt::from(a1), BigInt::from(a2), BigInt::from(a3)];
        if let Some(w) = mp3_membership([&a[0], &a[1], &a[2]], &BigInt::from(b)) {
            let want = SqFreePoly::from_i64_terms(3, &[(&[0, 1, 2], 1), (&[0], a1), (&[1], a2), (&[2], a3), (&[], b)]).unwrap();
            prop_assert_eq!(charpoly_of_matrix(&w), want);
            prop_assert!((0..3).all(|i| w.get(i, i).is_zero()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, rng_seed: RngSeed::Fixed(SEED), .. ProptestConfig::default() })]

    #[test]
    fn engine_matches_box_on_three_variables(c in coeffs3()) {
        let f = poly_of(&c);
        let fr = min_dgeq0(&f).unwrap();
        let top = fr.iter().flatten().map(|x| i64::try_from(x).unwrap()).max().unwrap_or(1);
        prop_assume!(top <= 100);
        prop_assert_eq!(as_set(&fr), box_frontier_3(&c, (top + 8).max(20)));
    }

    #[test]
    fn structures_are_genuine_and_transpose_invariant(rows in zero_diag(4, 2)) {
        let l = matrix(&rows);
        let rep = arithmetical_structures(&l).unwrap();
        let f = charpoly_of_matrix(&l);
        for s in rep.structures() {
            let m = l.diag_minus(&s.d).unwrap();
            prop_assert!(s.r.as_slice().iter().all(|x| x > &BigInt::zero()));
            prop_assert!(m.mul_vec(s.r.as_slice()).unwrap().iter().all(Zero::is_zero));
            prop_assert_eq!(critical_group_order(&f, &s.d).unwrap(), s.k.clone());
            prop_assert!(s.k >= BigInt::one());
        }
        // every structure is a frontier element, and frontier zeros are exactly the structures
        let zeros: BTreeSet<IntVec> = rep.frontier.iter().filter(|d| f.eval(d).unwrap().is_zero()).cloned().collect();
        let ds: BTreeSet<IntVec> = rep.structures().iter().map(|s| s.d.clone()).collect();
        if l.is_irreducible() {
            prop_assert_eq!(&zeros, &ds);
            let t: BTreeSet<IntVec> = arithmetical_structures(&l.transpose()).unwrap().structures().iter().map(|s| s.d.clone()).collect();
            prop_assert_eq!(ds, t);
        }
        prop_assert_eq!(min_dgeq0_matrix(&l).unwrap(), rep.frontier);
    }

    #[test]
    fn barrier_holds_and_slicing_matches_box(a in 1i64..=3, b1 in -12i64..=12, b2 in -12i64..=12, c in -40i64..=40) {
        let f = SqFreePoly::from_i64_terms(2, &[(&[0, 1], a), (&[0], b1), (&[1], b2), (&[], c)]).unwrap();
        let fr = min_dgeq0(&f).unwrap();
        let sliced = slice_solve(&f, &fr).unwrap();
        let bound = BigInt::from(300);
        let boxed = brute_force_box(Target::Poly(&f), &[bound.clone(), bound.clone()], DEFAULT_BOX_CAP).unwrap();
        for z in &boxed.solutions {
            prop_assert!(!fr.iter().any(|e| e != z && leq(e, z)));
        }
        if sliced.complete {
            let within: Vec<IntVec> = sliced.solutions.iter().filter(|d| d.iter().all(|x| x <= &bound)).cloned().collect();
            prop_assert_eq!(within, boxed.solutions);
        }
    }
}
