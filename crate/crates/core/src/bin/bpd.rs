fn main() {
    std::process::exit(bpd::cli::main_with_args(std::env::args_os()));
}
