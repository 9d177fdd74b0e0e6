use std::io;

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("ARITH_LOG")).init();
    let code = arithstruct::cli::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
