//! Exact integer linear algebra on small dense square matrices.
//!
//! Everything is arbitrary precision. Indices are zero-based throughout the
//! crate; index sets are kept sorted and duplicate-free.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Square matrix of arbitrary-precision integers, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

/// Sorted, duplicate-free set of row/column indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(mut indices: Vec<usize>, n: usize) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, size: n });
        }
        Ok(IndexSet(indices))
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        IndexSet((0..n).collect())
    }

    /// Index set from a bit mask; bit `i` selects index `i`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        IndexSet((0..n).filter(|&i| mask >> i & 1 == 1).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Primitive integer vector: the gcd of its entries is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitiveVector(Vec<BigInt>);

impl PrimitiveVector {
    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<BigInt> {
        self.0
    }
}

impl IntMatrix {
    pub fn new(n: usize, entries: Vec<BigInt>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::NotSquare);
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor for small literal matrices.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, entries: vec![BigInt::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn diag(d: &[BigInt]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n);
        for (i, v) in d.iter().enumerate() {
            m.entries[i * n + i] = v.clone();
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.n)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t.entries[j * n + i] = self.entries[i * n + j].clone();
            }
        }
        t
    }

    pub fn neg(&self) -> Self {
        IntMatrix { n: self.n, entries: self.entries.iter().map(|x| -x).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: other.n });
        }
        Ok(IntMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// `Diag(d) - self`.
    pub fn diag_minus(&self, d: &[BigInt]) -> Result<Self> {
        if d.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: d.len() });
        }
        Self::diag(d).sub(self)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: v.len() });
        }
        Ok(self
            .rows()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// `self * 1`, the vector of row sums.
    pub fn row_sums(&self) -> Vec<BigInt> {
        self.rows().map(|r| r.iter().sum()).collect()
    }

    pub fn has_zero_row(&self) -> bool {
        self.rows().any(|r| r.iter().all(Zero::is_zero))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|x| !x.is_negative())
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i).is_zero())
    }

    /// Principal submatrix `M[I;I]`.
    pub fn submatrix(&self, idx: &IndexSet) -> Result<Self> {
        if let Some(&bad) = idx.0.iter().find(|&&i| i >= self.n) {
            return Err(Error::IndexOutOfRange { index: bad, size: self.n });
        }
        if idx.is_empty() {
            return Err(Error::NotSquare);
        }
        let k = idx.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in &idx.0 {
            for &j in &idx.0 {
                entries.push(self.get(i, j).clone());
            }
        }
        Ok(IntMatrix { n: k, entries })
    }

    /// Exact determinant via fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        bareiss(self.n, self.entries.clone()).0
    }

    /// Rank, counted as the number of nonzero pivots of fraction-free elimination.
    pub fn rank(&self) -> usize {
        bareiss(self.n, self.entries.clone()).1
    }

    pub fn principal_minor(&self, idx: &IndexSet) -> Result<BigInt> {
        if idx.is_empty() {
            return Err(Error::BadInput("empty index set".into()));
        }
        Ok(self.submatrix(idx)?.det())
    }

    /// The matrix with row and column `s` erased.
    pub fn delete_rc(&self, s: usize) -> Result<Self> {
        if s >= self.n {
            return Err(Error::IndexOutOfRange { index: s, size: self.n });
        }
        if self.n < 2 {
            return Err(Error::BadInput("cannot delete from a 1x1 matrix".into()));
        }
        self.submatrix(&IndexSet((0..self.n).filter(|&i| i != s).collect()))
    }

    /// True iff the digraph with an arc `i -> j` for every nonzero off-diagonal
    /// entry is strongly connected. A 1x1 matrix is irreducible.
    pub fn is_irreducible(&self) -> bool {
        let n = self.n;
        let reach = |forward: bool| {
            let mut seen = vec![false; n];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(u) = stack.pop() {
                for v in 0..n {
                    let e = if forward { self.get(u, v) } else { self.get(v, u) };
                    if u != v && !e.is_zero() && !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        reach(true) && reach(false)
    }

    /// Primitive generator of a one-dimensional kernel, normalized so the first
    /// nonzero entry is positive. `None` when that generator has an entry
    /// `<= 0`.
    pub fn kernel_primitive(&self) -> Result<Option<PrimitiveVector>> {
        let basis = self.kernel_basis();
        if basis.len() != 1 {
            return Err(Error::KernelDimension(basis.len()));
        }
        let r = basis.into_iter().next().unwrap();
        if r.iter().all(|x| x.is_positive()) {
            Ok(Some(PrimitiveVector(r)))
        } else {
            Ok(None)
        }
    }

    /// Integer basis of the right kernel, each vector primitive with positive
    /// first nonzero entry.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        let n = self.n;
        let mut a: Vec<Vec<BigRational>> = self
            .rows()
            .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
            .collect();
        // reduced row echelon form
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..n).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(row, p);
            let inv = a[row][col].recip();
            for x in a[row].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..n {
                if i != row && !a[i][col].is_zero() {
                    let f = a[i][col].clone();
                    for j in 0..n {
                        let t = &a[row][j] * &f;
                        a[i][j] -= t;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == n {
                break;
            }
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![BigRational::zero(); n];
                v[fc] = BigRational::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -a[r][fc].clone();
                }
                primitive_from_rationals(&v)
            })
            .collect()
    }
}

fn primitive_from_rationals(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() {
        for x in ints.iter_mut() {
            *x = &*x / &g;
        }
    }
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in ints.iter_mut() {
            *x = -&*x;
        }
    }
    ints
}

/// Fraction-free elimination; returns `(det, rank)`.
fn bareiss(n: usize, mut a: Vec<BigInt>) -> (BigInt, usize) {
    let mut sign = false;
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut singular = false;
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&i| !a[i * n + col].is_zero()) else {
            singular = true;
            continue;
        };
        if p != row {
            for j in 0..n {
                a.swap(row * n + j, p * n + j);
            }
            sign = !sign;
        }
        rank += 1;
        let pivot = a[row * n + col].clone();
        for i in row + 1..n {
            let lead = a[i * n + col].clone();
            for j in col + 1..n {
                let v = &pivot * &a[i * n + j] - &lead * &a[row * n + j];
                a[i * n + j] = v / &prev;
            }
            a[i * n + col] = BigInt::zero();
        }
        prev = pivot;
        row += 1;
    }
    if singular {
        return (BigInt::zero(), rank);
    }
    let det = a[(n - 1) * n + (n - 1)].clone();
    (if sign { -det } else { det }, rank)
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            self.rows().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        write!(f, "IntMatrix{rows:?}")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
