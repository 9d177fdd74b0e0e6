//! Positive zeros below the frontier found by hyperplane slicing, compared
//! with an exhaustive box, and a Pell-type case where slicing cannot finish.

use arithstruct::poly_enum::min_dgeq0;
use arithstruct::solutions::{brute_force_box, slice_solve, Target, DEFAULT_BOX_CAP};
use arithstruct::parse;
use num_bigint::BigInt;

fn main() -> arithstruct::Result<()> {
    let f = parse("x*y + 17*x - 12*y + 27", None)?.poly;
    let sliced = slice_solve(&f, &min_dgeq0(&f)?)?;
    let boxed = brute_force_box(Target::Poly(&f), &[BigInt::from(300), BigInt::from(300)], DEFAULT_BOX_CAP)?;
    println!("{f}");
    println!("  slicing: {:?} complete={}", show(&sliced.solutions), sliced.complete);
    println!("  box 300x300: {:?}", show(&boxed.solutions));

    let g = parse("x*y*z - 17*x + 8*y - 12*z - 27", None)?.poly;
    let s = slice_solve(&g, &min_dgeq0(&g)?)?;
    println!("{g}\n  {} zeros, complete={}: {:?}", s.solutions.len(), s.complete, show(&s.solutions));

    let pell = parse("z*x1*x2*y1*y2 - x1*x2*y1*y2 + x1*x2 - 7*y1*y2 - 1", None)?.poly;
    let s = slice_solve(&pell, &min_dgeq0(&pell)?)?;
    println!("Pell embedding: complete={} ({})", s.complete, s.region);
    Ok(())
}

fn show(v: &[Vec<BigInt>]) -> Vec<String> {
    v.iter().map(|d| format!("({})", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))).collect()
}
