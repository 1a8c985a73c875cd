fn main() {
    std::process::exit(pairdom_cli::app::run());
}
