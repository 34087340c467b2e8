fn main() {
    std::process::exit(skewmon::cli::main_from(std::env::args_os()));
}
