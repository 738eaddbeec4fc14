use env_logger::Env;

fn main() {
    env_logger::Builder::from_env(Env::new().filter("STICKKIT_LOG")).init();
    std::process::exit(stickkit::cli::run(std::env::args_os()));
}
