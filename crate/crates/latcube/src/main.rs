fn main() {
    std::process::exit(latcube::cli::run(std::env::args().skip(1)));
}
