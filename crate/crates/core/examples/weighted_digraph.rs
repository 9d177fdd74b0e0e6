//! The weighted 4-vertex digraph: frontier, structures and the intermediate
//! start points of the recursion.

use arithstruct::arith_enum::arithmetical_structures;
use arithstruct::poly_enum::Engine;
use arithstruct::{charpoly_of_matrix, IntMatrix};

fn main() -> arithstruct::Result<()> {
    let l = IntMatrix::from_i64_rows(&[[0, 1, 0, 0], [9, 0, 0, 1], [0, 1, 0, 1], [0, 0, 3, 0]])?;
    let f = charpoly_of_matrix(&l);
    println!("f_L = {f}");

    let trace = Engine::new().trace(&f)?;
    println!("start points ({}):", trace.start_points.len());
    for d in trace.start_points.iter() {
        println!("  {:?} det {}", fmt(d), f.eval(d)?);
    }

    let rep = arithmetical_structures(&l)?;
    println!("frontier: {} elements", rep.frontier.len());
    println!("structures: {}", rep.structures().len());
    for s in rep.structures().iter().take(10) {
        println!("  d={:?} r={:?} |K|={}", fmt(&s.d), fmt(s.r.as_slice()), s.k);
    }
    println!("  ...");
    println!("elapsed {:?}", rep.stats.elapsed);
    Ok(())
}

fn fmt(v: &[num_bigint::BigInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}
