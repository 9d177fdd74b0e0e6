//! Minimal frontier `min D>=0(f)` and structure sets `D(f)` for dominated
//! square-free polynomials.
//!
//! The engine recurses over partial derivatives: the frontiers of every
//! `∂_s f` are lifted back (a 1 in slot `s`) and intersected to give start
//! points, a short local search restores strictly positive linear
//! coefficients, and a slicing completion raises the constant term to `>= 0`.
//! It never uses irreducibility, so it serves reducible inputs as well.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::classify::critical_group_order;
use crate::error::{Error, Result};
use crate::frontier::{Frontier, IntVec};
use crate::polyring::{full_mask, shift_dense, GeneralPoly, Monomial, SqFreePoly};

fn ceil_div(p: &BigInt, q: &BigInt) -> BigInt {
    Integer::div_ceil(p, q)
}

fn max_big(a: BigInt, b: BigInt) -> BigInt {
    if a >= b {
        a
    } else {
        b
    }
}

/// Insert a zero bit at position `s` (inverse of `drop_bit`).
fn insert_bit(mask: usize, s: usize) -> usize {
    let low = mask & ((1 << s) - 1);
    let high = (mask >> s) << (s + 1);
    low | high
}

/// `d` with a 1 inserted at position `s`.
pub fn expand_vec(d: &[BigInt], s: usize) -> Result<IntVec> {
    if s > d.len() {
        return Err(Error::IndexOutOfRange { index: s, size: d.len() + 1 });
    }
    let mut out = d.to_vec();
    out.insert(s, BigInt::one());
    Ok(out)
}

/// `d` with position `s` removed.
pub fn restrict_vec(d: &[BigInt], s: usize) -> Result<IntVec> {
    if s >= d.len() {
        return Err(Error::IndexOutOfRange { index: s, size: d.len() });
    }
    let mut out = d.to_vec();
    out.remove(s);
    Ok(out)
}

fn dense_partial(n: usize, c: &[BigInt], s: usize) -> Vec<BigInt> {
    (0..1usize << (n - 1)).map(|m| c[insert_bit(m, s) | 1 << s].clone()).collect()
}

/// Substitute `x_i = v` in a dense polynomial.
fn dense_fix(n: usize, c: &[BigInt], i: usize, v: &BigInt) -> Vec<BigInt> {
    (0..1usize << (n - 1))
        .map(|m| {
            let lo = insert_bit(m, i);
            &c[lo] + v * &c[lo | 1 << i]
        })
        .collect()
}

fn shifted(n: usize, c: &[BigInt], d: &[BigInt]) -> Vec<BigInt> {
    let mut h = c.to_vec();
    shift_dense(n, &mut h, d);
    h
}

/// `min D>=0(a x1 x2 + b1 x1 + b2 x2 + c)` in closed form.
pub fn min_dgeq0_2var(a: &BigInt, b1: &BigInt, b2: &BigInt, c: &BigInt) -> Result<Frontier> {
    if !a.is_positive() {
        return Err(Error::BadLeadingCoefficient);
    }
    let one = BigInt::one();
    // coefficient of x2 after shifting is a d1 + b2, of x1 is a d2 + b1
    let d1_lo = max_big(one.clone(), ceil_div(&(&one - b2), a));
    let d2_lo = max_big(one.clone(), ceil_div(&(&one - b1), a));
    let upper = max_big(d1_lo.clone(), ceil_div(&-(c + b2 * &d2_lo), &(a * &d2_lo + b1)));
    let mut out = Vec::new();
    let mut d1 = d1_lo;
    while d1 <= upper {
        let need = ceil_div(&-(c + b1 * &d1), &(a * &d1 + b2));
        out.push(vec![d1.clone(), max_big(d2_lo.clone(), need)]);
        d1 += 1;
    }
    Frontier::from_vectors(2, out)
}

/// Minimal `e` in `N^n` (zeros allowed) with `h(e) >= 0`, for `h` whose
/// non-constant coefficients are all positive.
///
/// Slices on the variable needing the fewest unit steps to fix the sign on
/// its own, so long coordinates end up in the closed-form one-variable case.
fn dense_completions(n: usize, h: &[BigInt]) -> Vec<IntVec> {
    if !h[0].is_negative() {
        return vec![vec![BigInt::zero(); n]];
    }
    let deficit = -&h[0];
    if n == 1 {
        return vec![vec![ceil_div(&deficit, &h[1])]];
    }
    let (i, _) = (0..n)
        .map(|i| (i, ceil_div(&deficit, &h[1 << i])))
        .min_by(|a, b| a.1.cmp(&b.1))
        .expect("n >= 2");
    let mut out = Vec::new();
    let mut v = BigInt::zero();
    loop {
        let hv = dense_fix(n, h, i, &v);
        let done = !hv[0].is_negative();
        for mut tail in dense_completions(n - 1, &hv) {
            tail.insert(i, v.clone());
            out.push(tail);
        }
        if done {
            break;
        }
        v += 1;
    }
    out
}

/// Minimal non-negative completions of a polynomial whose non-constant
/// coefficients are positive: the minimal `e >= 0` with `h(e) >= 0`.
pub fn min_completion_poly(h: &SqFreePoly) -> Result<Frontier> {
    let n = h.nvars();
    let dense = h.to_dense();
    if (1..dense.len()).any(|m| !dense[m].is_positive()) {
        return Err(Error::BadInput("a non-constant coefficient is not positive".into()));
    }
    Frontier::from_vectors(n, dense_completions(n, &dense))
}

/// Counters for one engine instance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub solves: u64,
    pub memo_hits: u64,
    pub start_points: u64,
    pub local_points: u64,
}

/// Intermediate sets of one top-level run, for inspection.
#[derive(Clone, Debug)]
pub struct Trace {
    /// `min D>=0(∂_s f)` for each `s`.
    pub partial_frontiers: Vec<Frontier>,
    /// Minimal common upper bounds of the lifted partial frontiers.
    pub start_points: Frontier,
    /// Minimal points with every non-constant shifted coefficient positive.
    pub positive_points: Frontier,
    pub frontier: Frontier,
}

/// Frontier solver with a memo keyed by dense coefficient vectors. Reuse one
/// engine across related inputs (e.g. all graphs of a given order) to share
/// sub-results.
#[derive(Default)]
pub struct Engine {
    memo: HashMap<Vec<BigInt>, Frontier>,
    stats: EngineStats,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn stats(&self) -> &EngineStats {
        &self.stats
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `min D>=0(f)`.
    pub fn min_dgeq0(&mut self, f: &SqFreePoly) -> Result<Frontier> {
        validate(f)?;
        self.solve(f.nvars(), &f.to_dense())
    }

    /// Same as [`Engine::min_dgeq0`] but also returns the intermediate sets.
    pub fn trace(&mut self, f: &SqFreePoly) -> Result<Trace> {
        validate(f)?;
        let n = f.nvars();
        let c = f.to_dense();
        if n < 2 {
            return Err(Error::BadInput("trace needs at least two variables".into()));
        }
        let partial_frontiers = (0..n)
            .map(|s| self.solve(n - 1, &dense_partial(n, &c, s)))
            .collect::<Result<Vec<_>>>()?;
        let start_points = lift_and_meet(n, &partial_frontiers)?;
        let positive_points = self.positive_points(n, &c, &start_points)?;
        let frontier = self.solve(n, &c)?;
        Ok(Trace { partial_frontiers, start_points, positive_points, frontier })
    }

    fn solve(&mut self, n: usize, c: &[BigInt]) -> Result<Frontier> {
        self.stats.solves += 1;
        match n {
            0 => {
                let elems = if c[0].is_negative() { vec![] } else { vec![vec![]] };
                return Frontier::from_vectors(0, elems);
            }
            1 => {
                let d = max_big(BigInt::one(), ceil_div(&-&c[0], &c[1]));
                return Frontier::from_vectors(1, vec![vec![d]]);
            }
            2 => return min_dgeq0_2var(&c[3], &c[1], &c[2], &c[0]),
            _ => {}
        }
        if let Some(hit) = self.memo.get(c) {
            self.stats.memo_hits += 1;
            return Ok(hit.clone());
        }
        let mut parts = Vec::with_capacity(n);
        for s in 0..n {
            parts.push(self.solve(n - 1, &dense_partial(n, c, s))?);
        }
        let starts = lift_and_meet(n, &parts)?;
        let positive = self.positive_points(n, c, &starts)?;
        let mut cands = Vec::new();
        for q in positive.iter() {
            let h = shifted(n, c, q);
            for e in dense_completions(n, &h) {
                let d: IntVec = q.iter().zip(&e).map(|(a, b)| a + b).collect();
                cands.push(d);
            }
        }
        let out = Frontier::from_vectors(n, cands)?;
        log::debug!("n={n}: {} start points, {} positive points, frontier {}", starts.len(), positive.len(), out.len());
        self.memo.insert(c.to_vec(), out.clone());
        Ok(out)
    }

    /// From each start point, the minimal points above it whose linear
    /// shifted coefficients are all strictly positive.
    fn positive_points(&mut self, n: usize, c: &[BigInt], starts: &Frontier) -> Result<Frontier> {
        let mut found = Frontier::new(n);
        for x in starts.iter() {
            self.stats.start_points += 1;
            let h = shifted(n, c, x);
            for m in 1..h.len() {
                let bad = if m.count_ones() == 1 { h[m].is_negative() } else { !h[m].is_positive() };
                if bad {
                    return Err(Error::Invariant(format!(
                        "start point {x:?}: shifted coefficient of monomial {m:#b} is {}",
                        h[m]
                    )));
                }
            }
            let mut visited: HashSet<IntVec> = HashSet::new();
            let mut stack = vec![x.clone()];
            visited.insert(x.clone());
            while let Some(y) = stack.pop() {
                self.stats.local_points += 1;
                let h = shifted(n, c, &y);
                let zero: Vec<usize> = (0..n).filter(|&s| h[1 << s].is_zero()).collect();
                if zero.is_empty() {
                    found.insert_min(y)?;
                    continue;
                }
                // bumping t lifts every zero linear coefficient except x_t's
                for t in (0..n).rev() {
                    if zero.len() == 1 && zero[0] == t {
                        continue;
                    }
                    let mut z = y.clone();
                    z[t] += 1;
                    if visited.insert(z.clone()) {
                        stack.push(z);
                    }
                }
            }
        }
        Ok(found)
    }
}

fn lift_and_meet(n: usize, parts: &[Frontier]) -> Result<Frontier> {
    let mut acc: Option<Frontier> = None;
    for (s, part) in parts.iter().enumerate() {
        let lifted = Frontier::from_vectors(n, part.iter().map(|d| expand_vec(d, s)).collect::<Result<Vec<_>>>()?)?;
        acc = Some(match acc {
            None => lifted,
            Some(a) => a.meet_upsets(&lifted)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Frontier::new(n)))
}

/// Input checks shared by every entry point.
pub fn validate(f: &SqFreePoly) -> Result<()> {
    let dom = f.dominant_monomial()?.ok_or(Error::NotDominated)?;
    if let Some(v) = f.unused_variable() {
        return Err(Error::VariableUnused(v));
    }
    debug_assert_eq!(dom, Monomial::full(f.nvars()));
    if !f.coef(dom).is_positive() {
        return Err(Error::NegativeLeading);
    }
    Ok(())
}

/// `min D>=0(f)` with a fresh engine.
pub fn min_dgeq0(f: &SqFreePoly) -> Result<Frontier> {
    Engine::new().min_dgeq0(f)
}

/// Minimal `d` with positive non-constant shifted coefficients and
/// `f(d) >= alpha`.
pub fn frontier_at_level(f: &SqFreePoly, alpha: &BigInt) -> Result<Frontier> {
    validate(f)?;
    Engine::new().min_dgeq0(&f.minus_constant(alpha))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyStructure {
    pub d: IntVec,
    pub k: BigInt,
}

/// One variable-disjoint factor, with its variables in the parent's indexing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorReport {
    pub vars: Vec<usize>,
    pub poly: SqFreePoly,
    pub frontier: Frontier,
    pub zeros: Vec<IntVec>,
}

/// Generating description for a polynomial with several variable-disjoint
/// factors: a structure makes one factor vanish at one of its frontier
/// zeros while every other factor sits anywhere in its own `D>=0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducibleReport {
    pub infinite: bool,
    pub factors: Vec<FactorReport>,
    /// Minimal structures: one factor's zero joined with frontier points of
    /// all the others.
    pub witnesses: Vec<IntVec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyEnumReport {
    pub frontier: Frontier,
    /// Empty when `reducible` is present: the order is undefined there.
    pub structures: Vec<PolyStructure>,
    pub reducible: Option<ReducibleReport>,
}

/// Frontier and structures of `f`, with the reducible description when `f`
/// splits into variable-disjoint factors.
pub fn min_dgeq0_poly(f: &SqFreePoly) -> Result<PolyEnumReport> {
    min_dgeq0_poly_with(&mut Engine::new(), f)
}

pub fn min_dgeq0_poly_with(engine: &mut Engine, f: &SqFreePoly) -> Result<PolyEnumReport> {
    validate(f)?;
    let frontier = engine.min_dgeq0(f)?;
    let factors = f.variable_disjoint_factor_with_vars()?;
    if factors.len() == 1 {
        let structures = structures_of(f, &frontier)?;
        return Ok(PolyEnumReport { frontier, structures, reducible: None });
    }
    let mut reports = Vec::with_capacity(factors.len());
    for (vars, g) in factors {
        let fr = engine.min_dgeq0(&g)?;
        let zeros = fr.iter().filter(|d| g.eval(d).map(|x| x.is_zero()).unwrap_or(false)).cloned().collect();
        reports.push(FactorReport { vars, poly: g, frontier: fr, zeros });
    }
    let reducible = reducible_combine(f.nvars(), reports);
    Ok(PolyEnumReport { frontier, structures: Vec::new(), reducible: Some(reducible) })
}

fn structures_of(f: &SqFreePoly, frontier: &Frontier) -> Result<Vec<PolyStructure>> {
    let mut out = Vec::new();
    for d in frontier.iter() {
        if f.eval(d)?.is_zero() {
            out.push(PolyStructure { d: d.clone(), k: critical_group_order(f, d)? });
        }
    }
    Ok(out)
}

/// Combine per-factor reports into the reducible description.
pub fn reducible_combine(nvars: usize, factors: Vec<FactorReport>) -> ReducibleReport {
    let mut witnesses = BTreeSet::new();
    for (i, fi) in factors.iter().enumerate() {
        for z in &fi.zeros {
            let mut partial: Vec<IntVec> = vec![vec![BigInt::zero(); nvars]];
            place(&mut partial[0], &fi.vars, z);
            for (j, fj) in factors.iter().enumerate() {
                if j == i {
                    continue;
                }
                let mut next = Vec::with_capacity(partial.len() * fj.frontier.len());
                for p in &partial {
                    for e in fj.frontier.iter() {
                        let mut q = p.clone();
                        place(&mut q, &fj.vars, e);
                        next.push(q);
                    }
                }
                partial = next;
            }
            witnesses.extend(partial);
        }
    }
    ReducibleReport { infinite: true, factors, witnesses: witnesses.into_iter().collect() }
}

fn place(target: &mut [BigInt], vars: &[usize], values: &[BigInt]) {
    for (&v, x) in vars.iter().zip(values) {
        target[v] = x.clone();
    }
}

/// Result of running the square-free surrogate of a polynomial with higher
/// exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftReport {
    pub surrogate: SqFreePoly,
    /// For each original variable, the surrogate indices of its copies.
    pub copies: Vec<Vec<usize>>,
    pub surrogate_report: PolyEnumReport,
    /// Minimal projections of the surrogate frontier after equalising copies.
    pub frontier: Frontier,
    /// Projections of surrogate structures whose copies already agree.
    pub structures: Vec<IntVec>,
}

/// Split each variable of exponent up to `δ` into `δ` copies (a term with
/// exponent `e` uses the first `e` copies), solve the square-free surrogate,
/// and read results back on the diagonal.
pub fn lift_non_squarefree(g: &GeneralPoly) -> Result<LiftReport> {
    if !g.is_dominated() {
        return Err(Error::NotDominated);
    }
    let deg = g.max_degrees();
    if let Some(v) = deg.iter().position(|&k| k == 0) {
        return Err(Error::VariableUnused(v));
    }
    let mut copies = Vec::with_capacity(deg.len());
    let mut next = 0usize;
    for &k in &deg {
        copies.push((next..next + k as usize).collect::<Vec<_>>());
        next += k as usize;
    }
    let terms = g.terms.iter().map(|(e, c)| {
        let vars: Vec<usize> = e.iter().zip(&copies).flat_map(|(&k, cp)| cp[..k as usize].iter().copied()).collect();
        (Monomial::from_vars(&vars), c.clone())
    });
    let surrogate = SqFreePoly::from_terms(next, terms)?;
    let report = min_dgeq0_poly(&surrogate)?;
    let project = |d: &IntVec| -> IntVec {
        copies.iter().map(|cp| cp.iter().map(|&i| d[i].clone()).max().expect("at least one copy")).collect()
    };
    let frontier = Frontier::from_vectors(deg.len(), report.frontier.iter().map(project))?;
    let diagonal = |d: &IntVec| copies.iter().all(|cp| cp.iter().all(|&i| d[i] == d[cp[0]]));
    let structures = report.structures.iter().map(|s| &s.d).filter(|d| diagonal(d)).map(project).collect();
    Ok(LiftReport { surrogate, copies, surrogate_report: report, frontier, structures })
}

/// Whether `d` lies in `D>=0(f)`: positive non-constant shifted coefficients
/// and `f(d) >= 0`.
pub fn in_dgeq0(f: &SqFreePoly, d: &[BigInt]) -> Result<bool> {
    if d.iter().any(|x| !x.is_positive()) {
        return Ok(false);
    }
    let h = f.shift(d)?;
    let full = full_mask(f.nvars());
    Ok(!h.constant_term().is_negative() && (1..=full).all(|m| h.coef(Monomial(m)).is_positive()))
}
