use clap::Parser;

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let config = cayley::cli::RunConfig::parse();
    let code = cayley::cli::run(&config, &mut std::io::stdout().lock());
    std::process::exit(code);
}
