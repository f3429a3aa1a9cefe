fn main() {
    std::process::exit(hermix::cli::run(std::env::args_os()));
}
