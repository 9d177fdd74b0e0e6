//! Structure counts for every connected graph of a given order.
//!
//! Usage: `cargo run --release --example conjecture_table -- [n] [threads]`

use arithstruct::graphs::conjecture_check;

fn main() -> arithstruct::Result<()> {
    let mut args = std::env::args().skip(1);
    let n = args.next().and_then(|a| a.parse().ok()).unwrap_or(4);
    let threads = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let t = std::time::Instant::now();
    let rep = conjecture_check(n, threads, n > 5)?;
    for r in &rep.rows {
        println!("{:>8}  max {:>6}  {:<10} {}", r.count, r.max_entry.to_string(), r.name.as_deref().unwrap_or(""), r.graph);
    }
    println!("path attains min: {}, complete attains max: {}", rep.path_is_min, rep.complete_is_max);
    println!("elapsed {:?}", t.elapsed());
    Ok(())
}
