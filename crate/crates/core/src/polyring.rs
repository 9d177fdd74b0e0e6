//! Square-free multivariate integer polynomials.
//!
//! A monomial is a set of variables (bit `i` set means `x_i` divides it), so
//! every exponent is 0 or 1 by construction. Terms live in a `BTreeMap`
//! without zero coefficients, which makes equal polynomials structurally
//! equal.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmat::{IndexSet, IntMatrix};

/// Upper bound on the number of variables (monomials are `u64` bit sets).
pub const MAX_VARS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_vars(vars: &[usize]) -> Self {
        Monomial(vars.iter().fold(0u64, |m, &v| m | 1 << v))
    }

    pub fn full(nvars: usize) -> Self {
        Monomial(full_mask(nvars))
    }

    pub fn contains(self, var: usize) -> bool {
        self.0 >> var & 1 == 1
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    pub fn vars(self) -> impl Iterator<Item = usize> {
        let m = self.0;
        (0..64).filter(move |&i| m >> i & 1 == 1)
    }
}

pub(crate) fn full_mask(nvars: usize) -> u64 {
    if nvars >= 64 {
        u64::MAX
    } else {
        (1u64 << nvars) - 1
    }
}

/// Squeeze out bit `s`, shifting higher bits down by one.
pub(crate) fn drop_bit(mask: u64, s: usize) -> u64 {
    let low = mask & ((1u64 << s) - 1);
    let high = (mask >> (s + 1)) << s;
    low | high
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SqFreePoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SqFreePoly {
    pub fn zero(nvars: usize) -> Self {
        SqFreePoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::ONE, c);
        p
    }

    /// Build from `(monomial, coefficient)` pairs; repeated monomials add up.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        if nvars > MAX_VARS {
            return Err(Error::BadInput(format!("at most {MAX_VARS} variables")));
        }
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            if m.0 & !full_mask(nvars) != 0 {
                let bad = m.vars().find(|&v| v >= nvars).unwrap();
                return Err(Error::IndexOutOfRange { index: bad, size: nvars });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Convenience for tests and examples: terms given as variable lists.
    pub fn from_i64_terms(nvars: usize, terms: &[(&[usize], i64)]) -> Result<Self> {
        Self::from_terms(
            nvars,
            terms.iter().map(|(vs, c)| (Monomial::from_vars(vs), BigInt::from(*c))),
        )
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coef(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coef(Monomial::ONE)
    }

    /// Dense coefficient vector indexed by monomial bit set.
    pub fn to_dense(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); 1usize << self.nvars];
        for (m, c) in &self.terms {
            v[m.0 as usize] = c.clone();
        }
        v
    }

    pub fn from_dense(nvars: usize, dense: &[BigInt]) -> Self {
        let mut p = Self::zero(nvars);
        for (i, c) in dense.iter().enumerate() {
            if !c.is_zero() {
                p.terms.insert(Monomial(i as u64), c.clone());
            }
        }
        p
    }

    /// `f(X + d)`: the coefficient of `x_S` becomes the sum over `T ⊇ S` of
    /// `coef(T) * prod_{i in T \ S} d_i`.
    pub fn shift(&self, d: &[BigInt]) -> Result<Self> {
        self.check_len(d.len())?;
        let mut dense = self.to_dense();
        shift_dense(self.nvars, &mut dense, d);
        Ok(Self::from_dense(self.nvars, &dense))
    }

    /// `∂f/∂x_s`, re-indexed over the remaining `nvars - 1` variables.
    pub fn partial(&self, s: usize) -> Result<Self> {
        if s >= self.nvars {
            return Err(Error::IndexOutOfRange { index: s, size: self.nvars });
        }
        let mut p = Self::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            if m.contains(s) {
                p.terms.insert(Monomial(drop_bit(m.0 & !(1 << s), s)), c.clone());
            }
        }
        Ok(p)
    }

    /// Substitute `x_s = v`, leaving a polynomial in the other variables.
    pub fn substitute(&self, s: usize, v: &BigInt) -> Result<Self> {
        if s >= self.nvars {
            return Err(Error::IndexOutOfRange { index: s, size: self.nvars });
        }
        let mut p = Self::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            let rest = Monomial(drop_bit(m.0 & !(1 << s), s));
            let c = if m.contains(s) { c * v } else { c.clone() };
            p.add_term(rest, c);
        }
        Ok(p)
    }

    pub fn eval(&self, d: &[BigInt]) -> Result<BigInt> {
        self.check_len(d.len())?;
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| m.vars().fold(c.clone(), |acc, v| acc * &d[v]))
            .sum())
    }

    /// The monomial divisible by every monomial of `f`, if it is itself a term.
    pub fn dominant_monomial(&self) -> Result<Option<Monomial>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let union = Monomial(self.terms.keys().fold(0, |acc, m| acc | m.0));
        Ok(self.terms.contains_key(&union).then_some(union))
    }

    pub fn is_dominated(&self) -> bool {
        matches!(self.dominant_monomial(), Ok(Some(_)))
    }

    /// Coefficient of the dominant monomial.
    pub fn leading_coefficient(&self) -> Result<BigInt> {
        let m = self.dominant_monomial()?.ok_or(Error::NotDominated)?;
        Ok(self.coef(m))
    }

    pub fn leading_positive(&self) -> Result<bool> {
        Ok(self.leading_coefficient()?.is_positive())
    }

    /// First variable that occurs in no term.
    pub fn unused_variable(&self) -> Option<usize> {
        let used = self.terms.keys().fold(0, |acc, m| acc | m.0);
        (0..self.nvars).find(|&v| used >> v & 1 == 0)
    }

    /// Finest factorization into variable-disjoint factors. Each factor is
    /// returned together with the (ascending) original variable indices it
    /// uses. All factors except possibly the last have positive leading
    /// coefficient; the product reproduces `f` exactly.
    pub fn variable_disjoint_factor_with_vars(&self) -> Result<Vec<(Vec<usize>, SqFreePoly)>> {
        if self.dominant_monomial()?.is_none() {
            return Err(Error::NotDominated);
        }
        if let Some(v) = self.unused_variable() {
            return Err(Error::VariableUnused(v));
        }
        let mut out = Vec::new();
        let mut vars: Vec<usize> = (0..self.nvars).collect();
        let mut rest = self.clone();
        loop {
            let k = rest.nvars;
            let mut split = None;
            if k > 1 {
                // smallest block containing variable 0 of `rest`
                let others = k - 1;
                let mut masks: Vec<u64> = (0..(1u64 << others)).map(|m| (m << 1) | 1).collect();
                masks.sort_by_key(|m| (m.count_ones(), *m));
                for s in masks {
                    if s == full_mask(k) {
                        break;
                    }
                    if let Some(pair) = rest.try_split(s) {
                        split = Some((s, pair));
                        break;
                    }
                }
            }
            match split {
                None => {
                    out.push((vars, rest));
                    break;
                }
                Some((s, (g, h))) => {
                    let (gv, hv): (Vec<usize>, Vec<usize>) =
                        (0..k).partition(|&i| s >> i & 1 == 1);
                    out.push((gv.iter().map(|&i| vars[i]).collect(), g));
                    vars = hv.iter().map(|&i| vars[i]).collect();
                    rest = h;
                }
            }
        }
        Ok(out)
    }

    pub fn variable_disjoint_factor(&self) -> Result<Vec<SqFreePoly>> {
        Ok(self.variable_disjoint_factor_with_vars()?.into_iter().map(|(_, p)| p).collect())
    }

    /// Try `f = g(x_S) * h(x_{S^c})` for the variable set `S` (bit mask).
    /// Requires `f` dominated over all its variables.
    fn try_split(&self, s: u64) -> Option<(SqFreePoly, SqFreePoly)> {
        let full = full_mask(self.nvars);
        let sc = full & !s;
        let lead = self.coef(Monomial(full));
        let sub_masks = |m: u64| {
            let mut v = Vec::new();
            let mut a = m;
            loop {
                v.push(a);
                if a == 0 {
                    break;
                }
                a = (a - 1) & m;
            }
            v
        };
        let a_sets = sub_masks(s);
        let b_sets = sub_masks(sc);
        for &a in &a_sets {
            let ga = self.coef(Monomial(a | sc));
            for &b in &b_sets {
                let hb = self.coef(Monomial(s | b));
                if self.coef(Monomial(a | b)) * &lead != &ga * &hb {
                    return None;
                }
            }
        }
        let compress = |m: u64, keep: u64| {
            let mut out = 0u64;
            let mut k = 0;
            for i in 0..self.nvars {
                if keep >> i & 1 == 1 {
                    if m >> i & 1 == 1 {
                        out |= 1 << k;
                    }
                    k += 1;
                }
            }
            out
        };
        let g_coefs: Vec<(u64, BigInt)> =
            a_sets.iter().map(|&a| (compress(a, s), self.coef(Monomial(a | sc)))).collect();
        let content = g_coefs.iter().fold(BigInt::zero(), |acc, (_, c)| num_integer::Integer::gcd(&acc, c));
        let g_lead = self.coef(Monomial(full));
        let content = if g_lead.is_negative() { -content } else { content };
        let g = SqFreePoly::from_terms(
            s.count_ones() as usize,
            g_coefs.into_iter().map(|(m, c)| (Monomial(m), c / &content)),
        )
        .ok()?;
        let h = SqFreePoly::from_terms(
            sc.count_ones() as usize,
            b_sets.iter().map(|&b| (Monomial(compress(b, sc)), self.coef(Monomial(s | b)) * &content / &lead)),
        )
        .ok()?;
        Some((g, h))
    }

    /// Product of polynomials over disjoint variable sets: `parts[i].0` lists
    /// the target variable indices of `parts[i].1`.
    pub fn disjoint_product(nvars: usize, parts: &[(Vec<usize>, SqFreePoly)]) -> Result<Self> {
        let mut acc = SqFreePoly::constant(nvars, BigInt::one());
        for (vars, p) in parts {
            let mut next = SqFreePoly::zero(nvars);
            for (m1, c1) in &acc.terms {
                for (m2, c2) in &p.terms {
                    let lifted = Monomial::from_vars(&m2.vars().map(|v| vars[v]).collect::<Vec<_>>());
                    if lifted.0 & m1.0 != 0 {
                        return Err(Error::BadInput("factors share a variable".into()));
                    }
                    next.add_term(Monomial(m1.0 | lifted.0), c1 * c2);
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    pub fn neg(&self) -> Self {
        SqFreePoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    /// `f - alpha`.
    pub fn minus_constant(&self, alpha: &BigInt) -> Self {
        let mut p = self.clone();
        p.add_term(Monomial::ONE, -alpha);
        p
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: len });
        }
        Ok(())
    }

    /// Render with the given variable names (defaults to `x1, x2, ...`).
    pub fn display_with(&self, names: Option<&[String]>) -> String {
        let name = |v: usize| match names {
            Some(ns) => ns[v].clone(),
            None => format!("x{}", v + 1),
        };
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut ordered: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        ordered.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(a.0.cmp(b.0)));
        let mut s = String::new();
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let vars: Vec<String> = m.vars().map(name).collect();
            if vars.is_empty() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                s.push_str(&vars.join("*"));
            }
        }
        s
    }
}

/// In-place shift of a dense coefficient vector by `d` (zeta transform along
/// each variable).
pub(crate) fn shift_dense(nvars: usize, coefs: &mut [BigInt], d: &[BigInt]) {
    for (i, di) in d.iter().enumerate().take(nvars) {
        if di.is_zero() {
            continue;
        }
        let bit = 1usize << i;
        for m in 0..coefs.len() {
            if m & bit == 0 && !coefs[m | bit].is_zero() {
                let add = &coefs[m | bit] * di;
                coefs[m] += add;
            }
        }
    }
}

/// `det(Diag(X) + M)` as a square-free polynomial: the coefficient of
/// `x_{I^c}` is the principal minor `det(M[I;I])` (1 for `I` empty).
pub fn det_diag_plus(m: &IntMatrix) -> SqFreePoly {
    let n = m.n();
    let full = full_mask(n);
    let mut p = SqFreePoly::zero(n);
    for mask in 0..=full {
        let c = if mask == 0 {
            BigInt::one()
        } else {
            m.principal_minor(&IndexSet::from_mask(mask, n)).expect("mask within range")
        };
        p.add_term(Monomial(full & !mask), c);
    }
    p
}

/// `f_L(X) = det(Diag(X) - L)`.
pub fn charpoly_of_matrix(l: &IntMatrix) -> SqFreePoly {
    det_diag_plus(&l.neg())
}

impl fmt::Debug for SqFreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SqFreePoly[{}]({})", self.nvars, self.display_with(None))
    }
}

impl fmt::Display for SqFreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(None))
    }
}

/// Polynomial with arbitrary exponents, used only as parser output and as
/// input to the non-square-free lifting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralPoly {
    pub nvars: usize,
    /// exponent vector -> coefficient, no zero coefficients
    pub terms: BTreeMap<Vec<u32>, BigInt>,
}

impl GeneralPoly {
    pub fn eval(&self, d: &[BigInt]) -> Result<BigInt> {
        if d.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: d.len() });
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| e.iter().zip(d).fold(c.clone(), |acc, (&k, x)| acc * x.pow(k)))
            .sum())
    }

    /// Largest exponent of each variable.
    pub fn max_degrees(&self) -> Vec<u32> {
        (0..self.nvars)
            .map(|v| self.terms.keys().map(|e| e[v]).max().unwrap_or(0))
            .collect()
    }

    /// True when the exponent-wise maximum is itself a term.
    pub fn is_dominated(&self) -> bool {
        !self.terms.is_empty() && self.terms.contains_key(&self.max_degrees())
    }

    /// Square-free view, failing on any exponent >= 2.
    pub fn to_square_free(&self, names: &[String]) -> Result<SqFreePoly> {
        SqFreePoly::from_terms(
            self.nvars,
            self.terms
                .iter()
                .map(|(e, c)| {
                    if let Some(v) = e.iter().position(|&k| k >= 2) {
                        return Err(Error::NotSquareFree(names[v].clone()));
                    }
                    let vars: Vec<usize> = (0..e.len()).filter(|&i| e[i] == 1).collect();
                    Ok((Monomial::from_vars(&vars), c.clone()))
                })
                .collect::<Result<Vec<_>>>()?,
        )
    }
}

/// A parsed polynomial plus the variable names in index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parsed<P> {
    pub vars: Vec<String>,
    pub poly: P,
}

/// Parse a square-free polynomial. Variables are ordered by `declared` when
/// given, else by first appearance.
pub fn parse(text: &str, declared: Option<&[String]>) -> Result<Parsed<SqFreePoly>> {
    let g = parse_general(text, declared)?;
    let poly = g.poly.to_square_free(&g.vars)?;
    Ok(Parsed { vars: g.vars, poly })
}

/// Parse a polynomial with arbitrary non-negative integer exponents.
pub fn parse_general(text: &str, declared: Option<&[String]>) -> Result<Parsed<GeneralPoly>> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, vars: declared.map(<[String]>::to_vec).unwrap_or_default(), fixed: declared.is_some() };
    let raw = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    let n = p.vars.len();
    let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for (exps, c) in raw {
        let mut e = vec![0u32; n];
        for (v, k) in exps {
            e[v] += k;
        }
        let slot = terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            terms.remove(&e);
        }
    }
    Ok(Parsed { vars: p.vars, poly: GeneralPoly { nvars: n, terms } })
}

type RawTerm = (Vec<(usize, u32)>, BigInt);

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: Vec<String>,
    fixed: bool,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Vec<RawTerm>> {
        let mut out = Vec::new();
        let mut sign = BigInt::one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -sign;
        }
        loop {
            let (vars, c) = self.term()?;
            out.push((vars, c * &sign));
            match self.peek() {
                Some(b'+') => sign = BigInt::one(),
                Some(b'-') => sign = -BigInt::one(),
                _ => break,
            }
            self.pos += 1;
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<RawTerm> {
        let mut coef = BigInt::one();
        let mut vars: Vec<(usize, u32)> = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coef *= self.int()?,
                Some(c) if c.is_ascii_alphabetic() => {
                    let name = self.ident();
                    let idx = self.var_index(&name)?;
                    let mut k = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                            return Err(self.err("expected integer exponent"));
                        }
                        let e = self.int()?;
                        k = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
                    }
                    if k > 0 {
                        vars.push((idx, k));
                    }
                }
                _ => return Err(self.err("expected integer or variable")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((vars, coef))
    }

    fn int(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.err("bad integer"))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn var_index(&mut self, name: &str) -> Result<usize> {
        if let Some(i) = self.vars.iter().position(|v| v == name) {
            return Ok(i);
        }
        if self.fixed {
            return Err(Error::UnknownVariable(name.to_string()));
        }
        self.vars.push(name.to_string());
        Ok(self.vars.len() - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn p(s: &str) -> SqFreePoly {
        parse(s, None).unwrap().poly
    }

    #[test]
    fn parse_basic() {
        let f = p("x1*x2 - 3");
        assert_eq!(f, SqFreePoly::from_i64_terms(2, &[(&[0, 1], 1), (&[], -3)]).unwrap());
        let g = p("x*y*z - 19*x + 2*y + 3*z - 23");
        assert_eq!(
            g,
            SqFreePoly::from_i64_terms(3, &[(&[0, 1, 2], 1), (&[0], -19), (&[1], 2), (&[2], 3), (&[], -23)])
                .unwrap()
        );
        assert_eq!(p("-x + 2*3*x^1"), SqFreePoly::from_i64_terms(1, &[(&[0], 5)]).unwrap());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse("x^2 - 1", None).unwrap_err(), Error::NotSquareFree("x".into()));
        assert_eq!(parse("x*x", None).unwrap_err(), Error::NotSquareFree("x".into()));
        assert!(matches!(parse("x + * y", None), Err(Error::Syntax { .. })));
        assert!(matches!(parse("x y", None), Err(Error::Syntax { .. })));
        assert!(matches!(parse("", None), Err(Error::Syntax { .. })));
        let declared = vec!["a".to_string(), "b".to_string()];
        assert_eq!(parse("a*c", Some(&declared)).unwrap_err(), Error::UnknownVariable("c".into()));
        let ok = parse("b - a", Some(&declared)).unwrap();
        assert_eq!(ok.vars, declared);
        assert_eq!(ok.poly.coef(Monomial::from_vars(&[0])), BigInt::from(-1));
    }

    #[test]
    fn charpoly_examples() {
        let l = IntMatrix::from_i64_rows(&[[0, 1], [3, 0]]).unwrap();
        assert_eq!(charpoly_of_matrix(&l), p("x1*x2 - 3"));
        let ka = IntMatrix::from_i64_rows(&[[0, 3, 0], [0, 0, 2], [-2, 1, 0]]).unwrap();
        assert_eq!(charpoly_of_matrix(&ka), p("x1*x2*x3 - 2*x1 + 12"));
        assert_eq!(charpoly_of_matrix(&IntMatrix::zeros(2)), p("x1*x2"));
    }

    #[test]
    fn shift_examples() {
        let f = p("x1*x2*x3 - 19*x1 + 2*x2 + 3*x3 - 23");
        let shifted = f.shift(&ints(&[1, 5, 4])).unwrap();
        assert_eq!(shifted, p("x1*x2*x3 + 4*x1*x2 + 5*x1*x3 + x2*x3 + x1 + 6*x2 + 8*x3"));
        let g = p("x1*x2 + 17*x1 - 12*x2 + 27");
        // the constant term is g(13, 1) = 249; 236 sometimes quoted for it is off
        assert_eq!(g.shift(&ints(&[13, 1])).unwrap(), p("x1*x2 + 18*x1 + x2 + 249"));
        assert_eq!(g.shift(&ints(&[0, 0])).unwrap(), g);
        assert!(g.shift(&ints(&[1])).is_err());
    }

    #[test]
    fn partial_examples() {
        let f = p("x1*x2*x3 - 19*x1 + 2*x2 + 3*x3 - 23");
        assert_eq!(f.partial(0).unwrap(), p("x2*x3 - 19"));
        assert_eq!(f.partial(1).unwrap(), SqFreePoly::from_i64_terms(2, &[(&[0, 1], 1), (&[], 2)]).unwrap());
        let g = p("x1*x2 + 5");
        let h = SqFreePoly::from_i64_terms(3, &[(&[0, 1], 1)]).unwrap();
        assert!(h.partial(2).unwrap().is_zero());
        assert!(g.partial(2).is_err());
    }

    #[test]
    fn eval_examples() {
        let g = p("x1*x2 + 17*x1 - 12*x2 + 27");
        assert_eq!(g.eval(&ints(&[13, 1])).unwrap(), BigInt::from(249));
        let f = p("x1*x2*x3 - 19*x1 + 2*x2 + 3*x3 - 23");
        assert_eq!(f.eval(&ints(&[1, 5, 4])).unwrap(), BigInt::zero());
        assert!(f.eval(&ints(&[1])).is_err());
    }

    #[test]
    fn dominance() {
        assert_eq!(p("x1*x2 - 3").dominant_monomial().unwrap(), Some(Monomial::from_vars(&[0, 1])));
        assert_eq!(p("x1*x2 + x3").dominant_monomial().unwrap(), None);
        let f = p("z*x1*x2*y1*y2 - x1*x2*y1*y2 + x1*x2 - 7*y1*y2 - 1");
        assert_eq!(f.dominant_monomial().unwrap(), Some(Monomial::full(5)));
        assert_eq!(SqFreePoly::zero(2).dominant_monomial(), Err(Error::ZeroPolynomial));
        assert!(p("x1*x2 - 3").leading_positive().unwrap());
        assert!(!p("-x1*x2 + 3").leading_positive().unwrap());
        assert_eq!(p("x1*x2 + x3").leading_positive(), Err(Error::NotDominated));
    }

    #[test]
    fn factorization() {
        let f = p("x1*x2*x3*x4 - 2*x1*x2 - 3*x3*x4 + 6");
        let parts = f.variable_disjoint_factor_with_vars().unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].0, vec![0, 1]);
        assert_eq!(parts[0].1, p("x1*x2 - 3"));
        assert_eq!(parts[1].1, p("x1*x2 - 2"));
        assert_eq!(SqFreePoly::disjoint_product(4, &parts).unwrap(), f);

        assert_eq!(p("x1*x2*x3 - 19*x1 + 2*x2 + 3*x3 - 23").variable_disjoint_factor().unwrap().len(), 1);
        let mono = p("x1*x2").variable_disjoint_factor().unwrap();
        assert_eq!(mono, vec![p("x"), p("x")]);

        // interleaved variables and a negative leading coefficient
        let g = p("-2*a*b*c*d + 2*a*c + 4*b*d - 4");
        let parts = g.variable_disjoint_factor_with_vars().unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].0, vec![0, 2]);
        assert_eq!(SqFreePoly::disjoint_product(4, &parts).unwrap(), g);

        assert_eq!(p("x1*x2 + x3").variable_disjoint_factor(), Err(Error::NotDominated));
        let unused = SqFreePoly::from_i64_terms(3, &[(&[0, 1], 1), (&[], 1)]).unwrap();
        assert_eq!(unused.variable_disjoint_factor(), Err(Error::VariableUnused(2)));
    }

    #[test]
    fn substitute_fixes_a_variable() {
        let f = p("x*y*z - 17*x + 8*y - 12*z - 27");
        let s = f.substitute(0, &BigInt::from(1)).unwrap();
        assert_eq!(s, p("y*z + 8*y - 12*z - 44"));
    }

    #[test]
    fn general_parse_and_square_free_view() {
        let g = parse_general("x*y^2 - 2*x + 6", None).unwrap();
        assert_eq!(g.poly.max_degrees(), vec![1, 2]);
        assert!(g.poly.is_dominated());
        assert_eq!(g.poly.eval(&ints(&[6, 1])).unwrap(), BigInt::zero());
        assert!(!parse_general("x^2 + y", None).unwrap().poly.is_dominated());
    }

    #[test]
    fn display_round_trips() {
        for s in ["x1*x2 - 3", "x1*x2*x3 + 4*x1*x2 - x3 + 7", "-x1*x2 + 3"] {
            let f = p(s);
            assert_eq!(p(&f.to_string()), f);
        }
    }
}
