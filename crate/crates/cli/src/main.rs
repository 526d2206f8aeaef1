use std::io::{stderr, stdout};

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("CLIQUE_SPLITTER_LOG", "warn")).init();
    let code = clique_splitter_cli::run_from(std::env::args_os(), &mut stdout().lock(), &mut stderr().lock());
    std::process::exit(code);
}
