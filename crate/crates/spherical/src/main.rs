fn main() {
    std::process::exit(spherical::cli::run(std::env::args_os()));
}
