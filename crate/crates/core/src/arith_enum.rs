//! Arithmetical structures of non-negative integer matrices with zero
//! diagonal.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::classify::{check_matrix_input, critical_group_order};
use crate::error::{Error, Result};
use crate::exactmat::{IntMatrix, PrimitiveVector};
use crate::frontier::{Frontier, IntVec};
use crate::poly_enum::{min_completion_poly, Engine, EngineStats};
use crate::polyring::{charpoly_of_matrix, det_diag_plus};

pub use crate::poly_enum::{expand_vec, restrict_vec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArithStructure {
    pub d: IntVec,
    pub r: PrimitiveVector,
    /// Order of the critical group.
    pub k: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Irreducible: every structure, sorted by `d`.
    Finite(Vec<ArithStructure>),
    /// Reducible with no zero row.
    Infinite,
    /// Some row of `L` is zero.
    Empty,
}

impl Outcome {
    pub fn name(&self) -> &'static str {
        match self {
            Outcome::Finite(_) => "finite",
            Outcome::Infinite => "infinite",
            Outcome::Empty => "empty",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct EnumStats {
    pub elapsed: Duration,
    pub engine: EngineStats,
}

#[derive(Clone, Debug)]
pub struct EnumReport {
    /// `min D>=0(L)`, always computed.
    pub frontier: Frontier,
    pub outcome: Outcome,
    pub stats: EnumStats,
}

impl EnumReport {
    pub fn structures(&self) -> &[ArithStructure] {
        match &self.outcome {
            Outcome::Finite(s) => s,
            _ => &[],
        }
    }
}

/// `min D>=0` of `[[0, a], [b, 0]]`.
pub fn min_dgeq0_2x2(a: &BigInt, b: &BigInt) -> Frontier {
    let ab = a * b;
    let top = if ab > BigInt::one() { ab.clone() } else { BigInt::one() };
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while d <= top {
        let e = num_integer::Integer::div_ceil(&ab, &d);
        out.push(vec![d.clone(), if e.is_positive() { e } else { BigInt::one() }]);
        d += 1;
    }
    Frontier::from_vectors(2, out).expect("dimension 2")
}

pub fn min_dgeq0_matrix(l: &IntMatrix) -> Result<Frontier> {
    min_dgeq0_matrix_with(&mut Engine::new(), l)
}

pub fn min_dgeq0_matrix_with(engine: &mut Engine, l: &IntMatrix) -> Result<Frontier> {
    check_matrix_input(l)?;
    match l.n() {
        1 => Frontier::from_vectors(1, vec![vec![BigInt::one()]]),
        2 => Ok(min_dgeq0_2x2(l.get(0, 1), l.get(1, 0))),
        _ => engine.min_dgeq0(&charpoly_of_matrix(l)),
    }
}

/// Minimal `e >= 0` such that `M + Diag(e)` is an almost non-singular
/// M-matrix, for `M` with all proper principal minors positive.
pub fn min_completion(m: &IntMatrix) -> Result<Frontier> {
    let g = det_diag_plus(m);
    if m.n() == 1 {
        // the only proper minor is the empty one
        let c = g.constant_term();
        let e = if c.is_negative() { -c } else { BigInt::zero() };
        return Frontier::from_vectors(1, vec![vec![e]]);
    }
    min_completion_poly(&g).map_err(|_| Error::NotQuasiNonSingular)
}

pub fn arithmetical_structures(l: &IntMatrix) -> Result<EnumReport> {
    arithmetical_structures_with(&mut Engine::new(), l)
}

/// Structures of `L` using a caller-owned engine (shares its memo).
pub fn arithmetical_structures_with(engine: &mut Engine, l: &IntMatrix) -> Result<EnumReport> {
    let start = Instant::now();
    let before = engine.stats().clone();
    let frontier = min_dgeq0_matrix_with(engine, l)?;
    let outcome = if l.has_zero_row() {
        Outcome::Empty
    } else if !l.is_irreducible() {
        Outcome::Infinite
    } else {
        let f = charpoly_of_matrix(l);
        let mut out = Vec::new();
        for d in frontier.iter() {
            if !f.eval(d)?.is_zero() {
                continue;
            }
            let r = l
                .diag_minus(d)?
                .kernel_primitive()?
                .ok_or_else(|| Error::Invariant(format!("no positive kernel vector at {d:?}")))?;
            out.push(ArithStructure { d: d.clone(), r, k: critical_group_order(&f, d)? });
        }
        Outcome::Finite(out)
    };
    let after = engine.stats();
    let stats = EnumStats {
        elapsed: start.elapsed(),
        engine: EngineStats {
            solves: after.solves - before.solves,
            memo_hits: after.memo_hits - before.memo_hits,
            start_points: after.start_points - before.start_points,
            local_points: after.local_points - before.local_points,
        },
    };
    Ok(EnumReport { frontier, outcome, stats })
}
