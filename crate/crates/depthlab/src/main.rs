fn main() {
    std::process::exit(depthlab::cli::main_with_args(std::env::args_os()));
}
