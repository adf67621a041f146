fn main() {
    std::process::exit(convpde::cli::run());
}
