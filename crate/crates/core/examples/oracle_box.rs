//! Brute-force box scan for a signed matrix: every d in the box whose
//! Diag(d) - L has a positive one-dimensional kernel.

use arithstruct::solutions::{brute_force_box, Target, DEFAULT_BOX_CAP};
use arithstruct::IntMatrix;
use num_bigint::BigInt;

fn main() -> arithstruct::Result<()> {
    let l = IntMatrix::from_i64_rows(&[[0, 3, -1], [0, 0, 2], [1, 1, 0]])?;
    let b = BigInt::from(20);
    let got = brute_force_box(Target::Matrix(&l), &[b.clone(), b.clone(), b], DEFAULT_BOX_CAP)?;
    println!("{} pairs in {}", got.solutions.len(), got.region);
    for (d, r) in got.solutions.iter().zip(got.kernels.iter().flatten()) {
        println!("  d={:?} r={:?}", strs(d), strs(r.as_slice()));
    }
    Ok(())
}

fn strs(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}
