//! Structures of dominated square-free polynomials, including a reducible
//! one with infinitely many zeros.

use arithstruct::poly_enum::min_dgeq0_poly;
use arithstruct::parse;

fn main() -> arithstruct::Result<()> {
    for text in [
        "x*y - 3",
        "x*y*z - 17*x + 8*y - 12*z - 27",
        "x*y*z - 2*x + 12",
        "x1*x2*x3*x4 - x1*x2 - x3*x4 - 1",
        "x*y*z*w - x*y - 2*z*w + 2",
    ] {
        let p = parse(text, None)?;
        let rep = min_dgeq0_poly(&p.poly)?;
        println!("{text}");
        println!("  frontier {} vectors, {} structures", rep.frontier.len(), rep.structures.len());
        for s in rep.structures.iter().take(8) {
            let d: Vec<String> = s.d.iter().map(|x| x.to_string()).collect();
            println!("  d=({}) k={}", d.join(", "), s.k);
        }
        if let Some(red) = &rep.reducible {
            println!("  product of {} variable-disjoint factors; sample zeros:", red.factors.len());
            for w in red.witnesses.iter().take(4) {
                let d: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                println!("    ({})", d.join(", "));
            }
        }
    }
    Ok(())
}
