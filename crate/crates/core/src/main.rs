fn main() {
    std::process::exit(ptcut::cli::run(std::env::args_os()));
}
