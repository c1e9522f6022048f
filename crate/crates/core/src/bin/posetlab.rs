fn main() {
    std::process::exit(posetlab::cli::run(std::env::args_os()));
}
