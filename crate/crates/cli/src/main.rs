fn main() {
    std::process::exit(projstat_cli::run());
}
