fn main() {
    std::process::exit(elliptica::harness::run(std::env::args()));
}
