fn main() {
    std::process::exit(fstable::cli::run(std::env::args_os()));
}
