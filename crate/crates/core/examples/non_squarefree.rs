//! Polynomials with higher exponents: split each variable into copies,
//! solve the square-free surrogate, and project back.

use arithstruct::parse_general;
use arithstruct::poly_enum::lift_non_squarefree;

fn main() -> arithstruct::Result<()> {
    for text in ["x^2*y - 2*x - 3", "x^2*y^2 - 5", "x^3 - 8"] {
        let g = parse_general(text, None)?;
        let rep = lift_non_squarefree(&g.poly)?;
        println!("{text}");
        println!("  surrogate: {}", rep.surrogate);
        println!("  copies: {:?}", rep.copies);
        let show = |d: &Vec<num_bigint::BigInt>| d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        println!("  frontier: {:?}", rep.frontier.iter().map(show).collect::<Vec<_>>());
        println!("  zeros on the diagonal: {:?}", rep.structures.iter().map(show).collect::<Vec<_>>());
    }
    Ok(())
}
