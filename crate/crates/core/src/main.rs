fn main() {
    std::process::exit(pseudoflow::cli::run(std::env::args_os()));
}
