//! Closed-form minimal frontier in two variables, for a bare polynomial and
//! for a 2x2 matrix, checked against a brute-force scan.

use arithstruct::arith_enum::min_dgeq0_2x2;
use arithstruct::poly_enum::{in_dgeq0, min_dgeq0_2var};
use arithstruct::{Frontier, SqFreePoly};
use num_bigint::BigInt;

fn main() -> arithstruct::Result<()> {
    let b = |x: i64| BigInt::from(x);
    // a*x1*x2 + b1*x1 + b2*x2 + c
    for (a, b1, b2, c) in [(1, 17, -12, 27), (2, -7, -10, 16), (1, 0, 0, -6), (3, -5, -4, -1)] {
        let fr = min_dgeq0_2var(&b(a), &b(b1), &b(b2), &b(c))?;
        let f = SqFreePoly::from_i64_terms(2, &[(&[0, 1], a), (&[0], b1), (&[1], b2), (&[], c)])?;
        let mut scanned = Vec::new();
        for x in 1..=80 {
            for y in 1..=80 {
                let d = vec![b(x), b(y)];
                if in_dgeq0(&f, &d)? {
                    scanned.push(d);
                }
            }
        }
        let oracle = Frontier::from_vectors(2, scanned)?;
        println!("{f}: {} minimal vectors, scan agrees: {}", fr.len(), fr == oracle);
        for d in fr.iter() {
            println!("  ({}, {})  f = {}", d[0], d[1], f.eval(d)?);
        }
    }
    // the 2x2 matrix [[0, a], [b, 0]] has f = x*y - a*b
    let fr = min_dgeq0_2x2(&b(2), &b(3));
    println!("[[0,2],[3,0]]: {} minimal vectors", fr.len());
    Ok(())
}
