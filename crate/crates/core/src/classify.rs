//! Z-matrix taxonomy, structure predicates and three-variable membership in
//! the image of `L -> det(Diag(X) - L)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmat::{IndexSet, IntMatrix};
use crate::polyring::{charpoly_of_matrix, full_mask, Monomial, SqFreePoly};

/// Flags derived from the principal minors of a square integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZClassification {
    pub is_z: bool,
    pub det: BigInt,
    /// M-matrix.
    pub all_minors_nonneg: bool,
    /// Non-singular M-matrix.
    pub all_minors_pos: bool,
    /// Almost non-singular M-matrix.
    pub proper_pos_det_nonneg: bool,
    /// Quasi M-matrix.
    pub proper_nonneg: bool,
    /// Quasi non-singular M-matrix.
    pub proper_pos: bool,
}

impl ZClassification {
    /// Most specific class name, for human-readable output.
    pub fn label(&self) -> &'static str {
        if !self.is_z {
            "not a Z-matrix"
        } else if self.all_minors_pos {
            "non-singular M-matrix"
        } else if self.proper_pos_det_nonneg {
            "almost non-singular M-matrix"
        } else if self.all_minors_nonneg {
            "M-matrix"
        } else if self.proper_pos {
            "quasi non-singular M-matrix"
        } else if self.proper_nonneg {
            "quasi M-matrix"
        } else {
            "Z-matrix"
        }
    }
}

pub fn is_z_matrix(m: &IntMatrix) -> bool {
    let n = m.n();
    (0..n).all(|i| (0..n).all(|j| i == j || !m.get(i, j).is_positive()))
}

/// Exhaustive over all `2^n - 1` principal minors.
pub fn classify_z(m: &IntMatrix) -> ZClassification {
    let n = m.n();
    let det = m.det();
    if !is_z_matrix(m) {
        return ZClassification {
            is_z: false,
            det,
            all_minors_nonneg: false,
            all_minors_pos: false,
            proper_pos_det_nonneg: false,
            proper_nonneg: false,
            proper_pos: false,
        };
    }
    let full = full_mask(n);
    let (mut proper_nonneg, mut proper_pos) = (true, true);
    for mask in 1..full {
        let minor = m.principal_minor(&IndexSet::from_mask(mask, n)).expect("mask in range");
        if minor.is_negative() {
            proper_nonneg = false;
        }
        if !minor.is_positive() {
            proper_pos = false;
        }
    }
    ZClassification {
        is_z: true,
        all_minors_nonneg: proper_nonneg && !det.is_negative(),
        all_minors_pos: proper_pos && det.is_positive(),
        proper_pos_det_nonneg: proper_pos && !det.is_negative(),
        proper_nonneg,
        proper_pos,
        det,
    }
}

pub(crate) fn check_matrix_input(l: &IntMatrix) -> Result<()> {
    if !l.is_nonnegative() {
        return Err(Error::BadInput("matrix has a negative entry".into()));
    }
    if !l.has_zero_diagonal() {
        return Err(Error::BadInput("matrix has a nonzero diagonal entry".into()));
    }
    Ok(())
}

/// True iff every non-constant coefficient of `shifted` is positive.
pub fn nonconstant_positive(shifted: &SqFreePoly) -> bool {
    let full = full_mask(shifted.nvars());
    (1..=full).all(|m| shifted.coef(Monomial(m)).is_positive())
}

/// Whether `d` is a d-arithmetical structure of `L`.
pub fn is_arithmetical_d(l: &IntMatrix, d: &[BigInt]) -> Result<bool> {
    check_matrix_input(l)?;
    if d.len() != l.n() {
        return Err(Error::DimensionMismatch { expected: l.n(), got: d.len() });
    }
    if d.iter().any(|x| !x.is_positive()) {
        return Err(Error::BadInput("d must be positive".into()));
    }
    let shifted = charpoly_of_matrix(l).shift(d)?;
    Ok(shifted.constant_term().is_zero() && nonconstant_positive(&shifted))
}

/// Order of the critical group at a structure `d`: the gcd of the linear
/// coefficients of `f(X + d)`.
pub fn critical_group_order(f: &SqFreePoly, d: &[BigInt]) -> Result<BigInt> {
    let shifted = f.shift(d)?;
    if d.iter().any(|x| !x.is_positive()) {
        return Err(Error::NotAStructure("d must be positive".into()));
    }
    if !shifted.constant_term().is_zero() {
        return Err(Error::NotAStructure("f(d) != 0".into()));
    }
    if !nonconstant_positive(&shifted) {
        return Err(Error::NotAStructure("a non-constant shifted coefficient is not positive".into()));
    }
    Ok((0..f.nvars())
        .map(|s| shifted.coef(Monomial::from_vars(&[s])))
        .fold(BigInt::zero(), |g, c| g.gcd(&c)))
}

/// Signed divisors of a nonzero integer, ascending.
pub fn signed_divisors(a: &BigInt) -> Vec<BigInt> {
    assert!(!a.is_zero());
    let a = a.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = BigInt::one();
    while &k * &k <= a {
        if (&a % &k).is_zero() {
            let q = &a / &k;
            if q != k {
                large.push(q);
            }
            small.push(k.clone());
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    let mut out: Vec<BigInt> = small.iter().rev().map(|x| -x).collect();
    out.extend(small);
    out
}

/// Witness for `x1x2x3 + a1 x1 + a2 x2 + a3 x3 + b` being `det(Diag(X) - A)`
/// for an integer `A` with zero diagonal, or `None` if no such `A` exists.
pub fn mp3_membership(a: [&BigInt; 3], b: &BigInt) -> Option<IntMatrix> {
    let p = a[0] * a[1] * a[2];
    if p.is_zero() {
        let k = (0..3).find(|&i| a[i].is_zero()).unwrap();
        if b.is_zero() {
            return Some(hub_witness(a, k));
        }
        let mut n = [BigInt::one(), BigInt::one(), BigInt::one()];
        n[k] = -b;
        return Some(divisor_witness(a, &n));
    }
    let divs: Vec<Vec<BigInt>> = a.iter().map(|x| signed_divisors(x)).collect();
    for n1 in &divs[0] {
        for n2 in &divs[1] {
            for n3 in &divs[2] {
                let n = n1 * n2 * n3;
                if &(&p / &n - &n) == b {
                    return Some(divisor_witness(a, &[n1.clone(), n2.clone(), n3.clone()]));
                }
            }
        }
    }
    None
}

// A = [[0, n3, -a2/n2], [-a3/n3, 0, n1], [n2, -a1/n1, 0]]
fn divisor_witness(a: [&BigInt; 3], n: &[BigInt; 3]) -> IntMatrix {
    let z = BigInt::zero();
    IntMatrix::from_rows(vec![
        vec![z.clone(), n[2].clone(), -(a[1] / &n[1])],
        vec![-(a[2] / &n[2]), z.clone(), n[0].clone()],
        vec![n[1].clone(), -(a[0] / &n[0]), z],
    ])
    .expect("3x3")
}

// Star on hub k: only arcs between k and the two other indices, so the
// constant term vanishes and a_k = 0 comes for free.
fn hub_witness(a: [&BigInt; 3], k: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(3);
    let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    for (idx, &l) in others.iter().enumerate() {
        let j = others[1 - idx];
        // coefficient of x_j is -A[k][l] * A[l][k]
        m.set(k, l, -a[j].clone());
        m.set(l, k, BigInt::one());
    }
    m
}
