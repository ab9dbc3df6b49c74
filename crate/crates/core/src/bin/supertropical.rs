fn main() {
    std::process::exit(supertropical::cli::run(std::env::args_os()));
}
