fn main() {
    std::process::exit(symprod::run(std::env::args_os()));
}
