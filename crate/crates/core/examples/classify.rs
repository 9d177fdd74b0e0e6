//! Classification of Z-matrices by the signs of their principal minors.

use arithstruct::classify::classify_z;
use arithstruct::IntMatrix;

fn main() -> arithstruct::Result<()> {
    let cases: [(&str, [[i64; 3]; 3]); 4] = [
        ("quasi", [[2, -1, -1], [0, 1, -1], [-3, -1, 2]]),
        ("shifted", [[3, -1, -1], [0, 1, -1], [-3, -1, 2]]),
        ("laplacian of K3", [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]),
        ("not Z", [[1, 1, 0], [0, 1, 0], [0, 0, 1]]),
    ];
    for (name, rows) in cases {
        let m = IntMatrix::from_i64_rows(&rows)?;
        let c = classify_z(&m);
        println!("{name:>16}: {} (det {})", c.label(), c.det);
    }
    Ok(())
}
