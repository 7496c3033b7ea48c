fn main() {
    std::process::exit(qternary::cli::run(std::env::args_os()));
}
