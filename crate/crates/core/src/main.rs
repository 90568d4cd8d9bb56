fn main() {
    std::process::exit(arith_identities::cli::run());
}
