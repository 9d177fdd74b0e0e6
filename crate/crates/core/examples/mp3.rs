//! Which constant terms make x1x2x3 + a1x1 + a2x2 + a3x3 + b the polynomial
//! of an integer matrix with zero diagonal.

use arithstruct::classify::mp3_membership;
use arithstruct::charpoly_of_matrix;
use num_bigint::BigInt;

fn main() {
    let a = [BigInt::from(-19), BigInt::from(2), BigInt::from(3)];
    let mut admissible = Vec::new();
    for b in -200i64..=200 {
        let bb = BigInt::from(b);
        if let Some(w) = mp3_membership([&a[0], &a[1], &a[2]], &bb) {
            let f = charpoly_of_matrix(&w);
            assert_eq!(f.constant_term(), bb);
            admissible.push(b);
        }
    }
    println!("a = (-19, 2, 3): admissible b in [-200, 200] = {admissible:?}");
    let w = mp3_membership([&a[0], &a[1], &a[2]], &BigInt::from(25)).expect("25 is admissible");
    println!("witness for b = 25:");
    for row in w.rows() {
        println!("  {:?}", row.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    }
    println!("witness polynomial: {}", charpoly_of_matrix(&w));
}
