fn main() {
    std::process::exit(assocsort::cli::main_with_args(std::env::args_os()));
}
