//! Positive integer zeros beyond the frontier: a hyperplane-slicing search
//! and an exhaustive box scan used as an independent oracle.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmat::{IntMatrix, PrimitiveVector};
use crate::frontier::{Frontier, IntVec};
use crate::poly_enum::{validate, Engine};
use crate::polyring::{Monomial, SqFreePoly};

pub const DEFAULT_BOX_CAP: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    /// Sorted, deduplicated positive zeros.
    pub solutions: Vec<IntVec>,
    /// For matrix box scans, the primitive kernel vector of each solution.
    pub kernels: Option<Vec<PrimitiveVector>>,
    /// Whether the search provably found every positive zero in `region`.
    pub complete: bool,
    pub region: String,
}

struct Slicer {
    engine: Engine,
    found: BTreeSet<IntVec>,
    complete: bool,
}

impl Slicer {
    /// Zeros of `g` (all variables positive), written into `found` after
    /// `embed` maps them back to the top-level coordinates.
    fn residual(&mut self, g: &SqFreePoly, embed: &dyn Fn(&[BigInt]) -> IntVec) -> Result<()> {
        let m = g.nvars();
        if m == 0 {
            if g.constant_term().is_zero() {
                self.found.insert(embed(&[]));
            }
            return Ok(());
        }
        if m == 1 {
            let a = g.coef(Monomial::from_vars(&[0]));
            let c = g.constant_term();
            if a.is_zero() {
                if c.is_zero() {
                    self.complete = false;
                }
                return Ok(());
            }
            let (q, r) = (-c).div_rem(&a);
            if r.is_zero() && q.is_positive() {
                self.found.insert(embed(&[q]));
            }
            return Ok(());
        }
        let lead = g.coef(Monomial::full(m));
        if lead.is_zero() {
            // not dominated by the full monomial: no barrier available
            self.complete = false;
            return Ok(());
        }
        let g = if lead.is_negative() { g.neg() } else { g.clone() };
        if validate(&g).is_err() {
            self.complete = false;
            return Ok(());
        }
        let frontier = self.engine.min_dgeq0(&g)?;
        self.slices(&g, &frontier, embed)
    }

    fn slices(&mut self, g: &SqFreePoly, frontier: &Frontier, embed: &dyn Fn(&[BigInt]) -> IntVec) -> Result<()> {
        for d in frontier.iter() {
            if g.eval(d)?.is_zero() {
                self.found.insert(embed(d));
            }
        }
        for i in 0..g.nvars() {
            let top = frontier.iter().map(|d| d[i].clone()).max().unwrap_or_else(BigInt::one);
            let mut v = BigInt::one();
            while v < top {
                let h = g.substitute(i, &v)?;
                let vv = v.clone();
                let inner = move |rest: &[BigInt]| -> IntVec {
                    let mut full = rest.to_vec();
                    full.insert(i, vv.clone());
                    embed(&full)
                };
                self.residual(&h, &inner)?;
                v += 1;
            }
        }
        Ok(())
    }
}

/// Positive zeros of `f` found by slicing the region below `frontier`.
///
/// Points dominating a frontier element are excluded by strict growth, so
/// the rest lie on hyperplanes `x_i = v` with `v` below the largest `i`-th
/// frontier coordinate. Each slice is solved recursively. `complete` is
/// false as soon as a slice cannot be resolved (a residual without a
/// positive leading term, or an identically zero linear residual).
pub fn slice_solve(f: &SqFreePoly, frontier: &Frontier) -> Result<SolutionSet> {
    validate(f)?;
    if frontier.dim() != f.nvars() {
        return Err(Error::DimensionMismatch { expected: f.nvars(), got: frontier.dim() });
    }
    let mut s = Slicer { engine: Engine::new(), found: BTreeSet::new(), complete: true };
    s.slices(f, frontier, &|d: &[BigInt]| d.to_vec())?;
    let bounds: Vec<String> =
        (0..f.nvars()).map(|i| frontier.iter().map(|d| d[i].clone()).max().unwrap_or_else(BigInt::one).to_string()).collect();
    Ok(SolutionSet {
        solutions: s.found.into_iter().collect(),
        kernels: None,
        complete: s.complete,
        region: format!("positive orthant; slices below ({}) plus frontier barrier", bounds.join(",")),
    })
}

pub enum Target<'a> {
    Matrix(&'a IntMatrix),
    Poly(&'a SqFreePoly),
}

impl Target<'_> {
    fn dim(&self) -> usize {
        match self {
            Target::Matrix(m) => m.n(),
            Target::Poly(p) => p.nvars(),
        }
    }
}

/// Exhaustive scan of `[1, b_1] x ... x [1, b_n]`. Polynomials report their
/// zeros; matrices report `d` with a one-dimensional kernel spanned by a
/// positive vector, together with that vector.
pub fn brute_force_box(target: Target<'_>, bounds: &[BigInt], cap: u64) -> Result<SolutionSet> {
    let n = target.dim();
    if bounds.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: bounds.len() });
    }
    if bounds.iter().any(|b| !b.is_positive()) {
        return Err(Error::BadInput("box bounds must be >= 1".into()));
    }
    let points: BigInt = bounds.iter().product();
    if points > BigInt::from(cap) {
        return Err(Error::BoxTooLarge { points: points.to_string(), cap });
    }
    let bounds: Vec<u64> = bounds.iter().map(|b| b.to_u64().expect("bounded by cap")).collect();
    let mut solutions = Vec::new();
    let mut kernels = Vec::new();
    let mut cur = vec![1u64; n];
    loop {
        let d: IntVec = cur.iter().map(|&x| BigInt::from(x)).collect();
        match &target {
            Target::Poly(p) => {
                if p.eval(&d)?.is_zero() {
                    solutions.push(d);
                }
            }
            Target::Matrix(l) => {
                let m = l.diag_minus(&d)?;
                if m.det().is_zero() {
                    if let Ok(Some(r)) = m.kernel_primitive() {
                        solutions.push(d);
                        kernels.push(r);
                    }
                }
            }
        }
        let mut i = 0;
        while i < n && cur[i] == bounds[i] {
            cur[i] = 1;
            i += 1;
        }
        if i == n {
            break;
        }
        cur[i] += 1;
    }
    let region = format!("[1,{}]", bounds.iter().map(u64::to_string).collect::<Vec<_>>().join("]x[1,"));
    // lexicographic enumeration order differs from the odometer, so sort
    let mut idx: Vec<usize> = (0..solutions.len()).collect();
    idx.sort_by(|&a, &b| solutions[a].cmp(&solutions[b]));
    let sorted: Vec<IntVec> = idx.iter().map(|&i| solutions[i].clone()).collect();
    let kernels = matches!(target, Target::Matrix(_)).then(|| idx.iter().map(|&i| kernels[i].clone()).collect());
    Ok(SolutionSet { solutions: sorted, kernels, complete: true, region })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly_enum::min_dgeq0;
    use crate::polyring::parse;

    fn v(x: &[i64]) -> IntVec {
        x.iter().map(|&a| BigInt::from(a)).collect()
    }

    fn p(s: &str) -> SqFreePoly {
        parse(s, None).unwrap().poly
    }

    fn solve(s: &str) -> SolutionSet {
        let f = p(s);
        slice_solve(&f, &min_dgeq0(&f).unwrap()).unwrap()
    }

    #[test]
    fn two_variable_complete() {
        let got = solve("x1*x2 + 17*x1 - 12*x2 + 27");
        assert!(got.complete);
        assert_eq!(got.solutions, vec![v(&[1, 4]), v(&[5, 16]), v(&[9, 60]), v(&[11, 214])]);
    }

    #[test]
    fn k_a_family() {
        for a in 1..=4 {
            let got = solve(&format!("x1*x2*x3 - 2*x1 + {}", 6 * a));
            assert!(got.solutions.contains(&v(&[6 * a, 1, 1])), "a={a}");
            let f = p(&format!("x1*x2*x3 - 2*x1 + {}", 6 * a));
            for s in &got.solutions {
                assert!(f.eval(s).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn three_variable_slice() {
        let got = solve("x*y*z - 17*x + 8*y - 12*z - 27");
        for s in [v(&[1, 8, 5]), v(&[1, 10, 18]), v(&[1, 11, 44])] {
            assert!(got.solutions.contains(&s), "{s:?}");
        }
    }

    #[test]
    fn matches_box_on_two_variables() {
        for s in ["x1*x2 + 17*x1 - 12*x2 + 27", "2*x1*x2 - 7*x1 - 10*x2 + 16", "x1*x2 - 6", "3*x1*x2 - 5*x1 - 4*x2 - 1"] {
            let f = p(s);
            let fr = min_dgeq0(&f).unwrap();
            let sl = slice_solve(&f, &fr).unwrap();
            let bound: BigInt = sl.solutions.iter().flatten().chain(fr.iter().flatten()).max().cloned().unwrap() + 1;
            let bx = brute_force_box(Target::Poly(&f), &[bound.clone(), bound], DEFAULT_BOX_CAP).unwrap();
            assert!(sl.complete);
            assert_eq!(sl.solutions, bx.solutions, "{s}");
        }
    }

    #[test]
    fn signed_matrix_box() {
        let l = IntMatrix::from_i64_rows(&[[0, 3, -1], [0, 0, 2], [1, 1, 0]]).unwrap();
        let b = BigInt::from(20);
        let got = brute_force_box(Target::Matrix(&l), &[b.clone(), b.clone(), b], DEFAULT_BOX_CAP).unwrap();
        let pairs: Vec<(IntVec, IntVec)> =
            got.solutions.iter().zip(got.kernels.unwrap()).map(|(d, r)| (d.clone(), r.into_vec())).collect();
        let mut want = vec![
            (v(&[1, 4, 1]), v(&[1, 1, 2])),
            (v(&[1, 2, 3]), v(&[2, 1, 1])),
            (v(&[1, 1, 7]), v(&[5, 2, 1])),
            (v(&[3, 3, 1]), v(&[1, 2, 3])),
            (v(&[5, 1, 3]), v(&[1, 2, 1])),
            (v(&[2, 2, 2]), v(&[1, 1, 1])),
        ];
        want.sort();
        assert_eq!(pairs, want);
    }

    #[test]
    fn box_cap_and_empty_box() {
        let f = p("x1*x2 - 6");
        let big = BigInt::from(100_000);
        assert!(matches!(
            brute_force_box(Target::Poly(&f), &[big.clone(), big], DEFAULT_BOX_CAP),
            Err(Error::BoxTooLarge { .. })
        ));
        let one = BigInt::one();
        let got = brute_force_box(Target::Poly(&f), &[one.clone(), one], DEFAULT_BOX_CAP).unwrap();
        assert!(got.solutions.is_empty() && got.complete);
    }

    #[test]
    fn pell_embedding_is_incomplete() {
        let f = parse("z*x1*x2*y1*y2 - x1*x2*y1*y2 + x1*x2 - 7*y1*y2 - 1", None).unwrap().poly;
        let got = slice_solve(&f, &min_dgeq0(&f).unwrap()).unwrap();
        assert!(!got.complete);
        let slice = f.substitute(0, &BigInt::one()).unwrap();
        for (x, y) in [(8, 3), (127, 48), (2024, 765)] {
            assert!(slice.eval(&v(&[x, x, y, y])).unwrap().is_zero());
        }
    }
}
