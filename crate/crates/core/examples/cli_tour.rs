//! Drives the command-line front end in-process on the bundled inputs.

use std::io;

fn main() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");
    let runs: Vec<Vec<String>> = vec![
        vec!["classify".into(), "--input".into(), format!("{data}/quasi.json"), "--out".into(), "text".into()],
        vec!["poly".into(), "structures".into(), "--expr".into(), "x*y - 3".into()],
        vec!["poly".into(), "frontier".into(), "--input".into(), format!("{data}/poly3.json"), "--out".into(), "csv".into()],
        vec!["graph".into(), "family".into(), "--name".into(), "cycle".into(), "--n".into(), "4".into(), "--out".into(), "text".into()],
        vec!["conjecture".into(), "--n".into(), "4".into(), "--out".into(), "text".into()],
    ];
    for args in runs {
        println!("$ arith {}", args.join(" "));
        let code = arithstruct::cli::run(
            std::iter::once("arith".to_string()).chain(args),
            &mut io::stdout(),
            &mut io::stderr(),
        );
        println!("[exit {code}]\n");
    }
}
